//! Breadth-first search over the lattice of triples `(𝔧, 𝔰̲, 𝔰̄)`.
//!
//! A crossing change acts on the triple of a knot by one of ten moves. The
//! minimal number of moves carrying a triple to `(0, 0, 0)` is a lower bound on
//! the unknotting number; the search computes it exactly and compares it with
//! the closed formulas in [`crate::bounds`].

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{signed_bounds, unknotting_bound, FactorInvariants, SignedBound};
use crate::error::{Error, Result};

/// A point `(𝔧, 𝔰̲, 𝔰̄)` of the lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeState {
    pub j: i32,
    pub s_lo: i32,
    pub s_hi: i32,
}

impl LatticeState {
    pub const ORIGIN: LatticeState = LatticeState { j: 0, s_lo: 0, s_hi: 0 };

    pub fn new(j: i32, s_lo: i32, s_hi: i32) -> Self {
        LatticeState { j, s_lo, s_hi }
    }

    /// All three coordinates share a parity.
    pub fn in_lattice(&self) -> bool {
        (self.j - self.s_lo) % 2 == 0 && (self.j - self.s_hi) % 2 == 0
    }

    /// `𝔧 ≥ 0` and `𝔰̲ ≤ 𝔰̄`.
    pub fn is_valid(&self) -> bool {
        self.j >= 0 && self.s_lo <= self.s_hi
    }

    pub fn l1(&self) -> i32 {
        self.j.abs() + self.s_lo.abs() + self.s_hi.abs()
    }

    pub fn invariants(&self) -> FactorInvariants {
        FactorInvariants::from_triple(self.j, self.s_lo, self.s_hi)
    }
}

impl fmt::Display for LatticeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.j, self.s_lo, self.s_hi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    F1,
    F2,
    F3,
    G1,
    G2,
}

/// `Plus` is a positive-to-negative crossing change, `Minus` a
/// negative-to-positive one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveSign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub sign: MoveSign,
}

impl Move {
    pub const ALL: [Move; 10] = {
        use MoveKind::*;
        use MoveSign::*;
        [
            Move { kind: F1, sign: Minus },
            Move { kind: F2, sign: Minus },
            Move { kind: F3, sign: Minus },
            Move { kind: G1, sign: Minus },
            Move { kind: G2, sign: Minus },
            Move { kind: F1, sign: Plus },
            Move { kind: F2, sign: Plus },
            Move { kind: F3, sign: Plus },
            Move { kind: G1, sign: Plus },
            Move { kind: G2, sign: Plus },
        ]
    };

    /// Change in `(𝔧, 𝔰̲, 𝔰̄)`.
    pub fn delta(&self) -> (i32, i32, i32) {
        let e = match self.sign {
            MoveSign::Plus => 1,
            MoveSign::Minus => -1,
        };
        match self.kind {
            MoveKind::F1 => (0, 2 * e, 0),
            MoveKind::F2 => (0, 0, 2 * e),
            MoveKind::F3 => (0, 2 * e, 2 * e),
            MoveKind::G1 => (-1, e, e),
            MoveKind::G2 => (1, e, e),
        }
    }

    /// The moved state, or `None` when it would be invalid.
    pub fn apply(&self, s: LatticeState) -> Option<LatticeState> {
        let (dj, dl, dh) = self.delta();
        let t = LatticeState::new(s.j + dj, s.s_lo + dl, s.s_hi + dh);
        t.is_valid().then_some(t)
    }

    pub fn is_f_type(&self) -> bool {
        matches!(self.kind, MoveKind::F1 | MoveKind::F2 | MoveKind::F3)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            MoveKind::F1 => "F1",
            MoveKind::F2 => "F2",
            MoveKind::F3 => "F3",
            MoveKind::G1 => "G1",
            MoveKind::G2 => "G2",
        };
        let s = match self.sign {
            MoveSign::Plus => '+',
            MoveSign::Minus => '-',
        };
        write!(f, "{k}{s}")
    }
}

/// Distances to the origin for every state of a box, computed once by
/// searching backwards from the origin.
pub struct DistanceTable {
    radius: i32,
    side: usize,
    /// Fewest moves.
    total: Vec<u32>,
    /// Fewest negative-to-positive moves on any path.
    n_min: Vec<u32>,
    /// Fewest positive-to-negative moves on any path.
    p_min: Vec<u32>,
    /// Among shortest paths, fewest `Minus` moves, then fewest `Plus` moves.
    lex: Vec<(u32, u32)>,
}

const UNREACHED: u32 = u32::MAX;

impl DistanceTable {
    /// States with `0 ≤ 𝔧 ≤ radius` and `|𝔰̲|, |𝔰̄| ≤ radius`.
    pub fn new(radius: u32) -> Self {
        let radius = radius as i32;
        let side = 2 * radius as usize + 1;
        let size = (radius as usize + 1) * side * side;
        let mut t = DistanceTable {
            radius,
            side,
            total: vec![UNREACHED; size],
            n_min: vec![UNREACHED; size],
            p_min: vec![UNREACHED; size],
            lex: vec![(UNREACHED, UNREACHED); size],
        };
        t.fill_total();
        t.n_min = t.zero_one(MoveSign::Minus);
        t.p_min = t.zero_one(MoveSign::Plus);
        t.fill_lex();
        t
    }

    pub fn radius(&self) -> u32 {
        self.radius as u32
    }

    fn index(&self, s: LatticeState) -> Option<usize> {
        let r = self.radius;
        if !s.is_valid() || s.j > r || s.s_lo.abs() > r || s.s_hi.abs() > r {
            return None;
        }
        let (j, l, h) = (s.j as usize, (s.s_lo + r) as usize, (s.s_hi + r) as usize);
        Some((j * self.side + l) * self.side + h)
    }

    fn state(&self, i: usize) -> LatticeState {
        let h = i % self.side;
        let l = (i / self.side) % self.side;
        let j = i / (self.side * self.side);
        LatticeState::new(j as i32, l as i32 - self.radius, h as i32 - self.radius)
    }

    /// States `p` inside the box with `m.apply(p) == s`.
    fn predecessors(&self, s: LatticeState) -> impl Iterator<Item = (Move, usize)> + '_ {
        Move::ALL.into_iter().filter_map(move |m| {
            let (dj, dl, dh) = m.delta();
            let p = LatticeState::new(s.j - dj, s.s_lo - dl, s.s_hi - dh);
            self.index(p).map(|i| (m, i))
        })
    }

    fn fill_total(&mut self) {
        let origin = self.index(LatticeState::ORIGIN).expect("origin in box");
        self.total[origin] = 0;
        let mut queue = VecDeque::from([origin]);
        while let Some(i) = queue.pop_front() {
            let d = self.total[i];
            let s = self.state(i);
            let preds: Vec<usize> = self.predecessors(s).map(|(_, p)| p).collect();
            for p in preds {
                if self.total[p] == UNREACHED {
                    self.total[p] = d + 1;
                    queue.push_back(p);
                }
            }
        }
    }

    /// 0-1 BFS where moves of sign `counted` cost one and the others are free.
    fn zero_one(&self, counted: MoveSign) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.total.len()];
        let origin = self.index(LatticeState::ORIGIN).expect("origin in box");
        dist[origin] = 0;
        let mut deque = VecDeque::from([origin]);
        while let Some(i) = deque.pop_front() {
            let d = dist[i];
            for (m, p) in self.predecessors(self.state(i)) {
                let w = u32::from(m.sign == counted);
                if d + w < dist[p] {
                    dist[p] = d + w;
                    if w == 0 {
                        deque.push_front(p);
                    } else {
                        deque.push_back(p);
                    }
                }
            }
        }
        dist
    }

    /// Dynamic programming over the shortest-path layers.
    fn fill_lex(&mut self) {
        let mut order: Vec<usize> = (0..self.total.len()).filter(|&i| self.total[i] != UNREACHED).collect();
        order.sort_by_key(|&i| self.total[i]);
        for i in order {
            let d = self.total[i];
            if d == 0 {
                self.lex[i] = (0, 0);
                continue;
            }
            let s = self.state(i);
            let mut best = (UNREACHED, UNREACHED);
            for m in Move::ALL {
                let Some(next) = m.apply(s) else { continue };
                let Some(k) = self.index(next) else { continue };
                if self.total[k] + 1 != d {
                    continue;
                }
                let (n, p) = self.lex[k];
                let cand = match m.sign {
                    MoveSign::Minus => (n + 1, p),
                    MoveSign::Plus => (n, p + 1),
                };
                best = best.min(cand);
            }
            self.lex[i] = best;
        }
    }

    fn lookup(&self, s: LatticeState) -> Result<usize> {
        match self.index(s) {
            Some(i) if self.total[i] != UNREACHED => Ok(i),
            _ => Err(Error::SearchBound(format!("{s} is outside the searched box of radius {}", self.radius))),
        }
    }

    /// Exact search results for `start`.
    pub fn minimal_moves(&self, start: LatticeState) -> Result<MinimalMoves> {
        if !start.is_valid() || !start.in_lattice() {
            return Err(Error::Parity(format!("{start} is not a valid lattice state")));
        }
        let mut i = self.lookup(start)?;
        let total = self.total[i];
        let (lex_n, lex_p) = self.lex[i];
        // follow shortest-path edges realizing the lexicographic minimum
        let mut witness = Vec::with_capacity(total as usize);
        let mut s = start;
        let mut want = (lex_n, lex_p);
        while self.total[i] > 0 {
            let (m, next, k) = Move::ALL
                .into_iter()
                .filter_map(|m| {
                    let next = m.apply(s)?;
                    let k = self.index(next)?;
                    let rest = match m.sign {
                        MoveSign::Minus => (want.0.checked_sub(1)?, want.1),
                        MoveSign::Plus => (want.0, want.1.checked_sub(1)?),
                    };
                    (self.total[k] + 1 == self.total[i] && self.lex[k] == rest).then_some((m, next, k))
                })
                .next()
                .expect("shortest path continues");
            want = self.lex[k];
            witness.push(m);
            s = next;
            i = k;
        }
        Ok(MinimalMoves {
            total,
            witness,
            signed: SignedBound { n: self.n_min[self.lookup(start)?], p: self.p_min[self.lookup(start)?] },
            lexicographic: SignedBound { n: lex_n, p: lex_p },
        })
    }
}

/// Result of the exact search from one state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalMoves {
    pub total: u32,
    /// A shortest move sequence realizing `lexicographic`.
    pub witness: Vec<Move>,
    /// Independent minima of each sign over all move sequences to the origin.
    pub signed: SignedBound,
    /// Fewest `Minus` moves among shortest sequences, then fewest `Plus`.
    pub lexicographic: SignedBound,
}

/// Search margin beyond the starting coordinates.
pub const SEARCH_MARGIN: u32 = 4;

/// Exact minimal move counts from `start`, searching a box with a margin
/// around it.
pub fn minimal_moves(start: LatticeState) -> Result<MinimalMoves> {
    let r = start.j.abs().max(start.s_lo.abs()).max(start.s_hi.abs()) as u32;
    DistanceTable::new(r + SEARCH_MARGIN).minimal_moves(start)
}

/// Closed formulas checked by [`exhaustive_check`].
pub trait BoundFormula: Sync {
    fn total(&self, f: &FactorInvariants) -> Result<u32>;
    fn signed(&self, f: &FactorInvariants) -> Result<SignedBound>;
}

/// The formulas of [`crate::bounds`].
pub struct ClosedForm;

impl BoundFormula for ClosedForm {
    fn total(&self, f: &FactorInvariants) -> Result<u32> {
        unknotting_bound(f)
    }

    fn signed(&self, f: &FactorInvariants) -> Result<SignedBound> {
        signed_bounds(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub state: LatticeState,
    /// `"total"`, `"n"`, `"p"`, or `"n+p"`.
    pub quantity: String,
    pub formula: u32,
    pub search: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub range: u32,
    pub states: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("checked {} lattice states with coordinates in [-{1}, {1}]\n", self.states, self.range);
        if self.passed() {
            s.push_str("no mismatches\n");
        } else {
            s.push_str(&format!("{} mismatches; first:\n", self.mismatches.len()));
            for m in self.mismatches.iter().take(10) {
                s.push_str(&format!("  {} {}: formula {}, search {}\n", m.state, m.quantity, m.formula, m.search));
            }
        }
        s
    }
}

/// Valid lattice states with every coordinate in `[-range, range]`, ordered by
/// L1 norm and then lexicographically.
pub fn lattice_states(range: u32) -> Vec<LatticeState> {
    let r = range as i32;
    let mut out = Vec::new();
    for j in 0..=r {
        for s_lo in -r..=r {
            for s_hi in s_lo..=r {
                let s = LatticeState::new(j, s_lo, s_hi);
                if s.in_lattice() {
                    out.push(s);
                }
            }
        }
    }
    out.sort_by_key(|s| (s.l1(), *s));
    out
}

/// Compare the exact search with the closed formulas on every state in range.
pub fn exhaustive_check(range: u32) -> Result<CheckReport> {
    exhaustive_check_with(range, &ClosedForm)
}

/// [`exhaustive_check`] against an arbitrary formula.
pub fn exhaustive_check_with(range: u32, formula: &dyn BoundFormula) -> Result<CheckReport> {
    let table = DistanceTable::new(range + SEARCH_MARGIN);
    let states = lattice_states(range);
    let per_state: Vec<Vec<Mismatch>> = states
        .par_iter()
        .map(|&s| -> Result<Vec<Mismatch>> {
            let found = table.minimal_moves(s)?;
            let f = s.invariants();
            let total = formula.total(&f)?;
            let signed = formula.signed(&f)?;
            let mut out = Vec::new();
            let mut check = |quantity: &str, formula: u32, search: u32| {
                if formula != search {
                    out.push(Mismatch { state: s, quantity: quantity.to_string(), formula, search });
                }
            };
            check("total", total, found.total);
            check("n", signed.n, found.signed.n);
            check("p", signed.p, found.signed.p);
            check("n+p", signed.total(), found.total);
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(CheckReport { range, states: states.len(), mismatches: per_state.into_iter().flatten().collect() })
}
