use proptest::prelude::*;
use tristram::bounds::{signed_bounds, unknotting_bound, FactorInvariants, SignedBound};
use tristram::oracle::{
    exhaustive_check, exhaustive_check_with, lattice_states, minimal_moves, BoundFormula, DistanceTable,
    LatticeState, Move, MoveKind, MoveSign,
};
use tristram::Result;

fn st(j: i32, l: i32, h: i32) -> LatticeState {
    LatticeState::new(j, l, h)
}

fn apply_all(start: LatticeState, moves: &[Move]) -> Option<LatticeState> {
    moves.iter().try_fold(start, |s, m| m.apply(s))
}

#[test]
fn move_examples() {
    let g1 = Move { kind: MoveKind::G1, sign: MoveSign::Plus };
    assert_eq!(g1.apply(st(1, 1, 1)), Some(st(0, 2, 2)));
    let g1m = Move { kind: MoveKind::G1, sign: MoveSign::Minus };
    assert_eq!(g1m.apply(st(0, 0, 0)), None);
    let f1 = Move { kind: MoveKind::F1, sign: MoveSign::Plus };
    // raising the lower end above the upper one is not allowed
    assert_eq!(f1.apply(st(0, 0, 0)), None);
    assert_eq!(f1.apply(st(0, -2, 0)), Some(st(0, 0, 0)));
    assert_eq!(Move::ALL.iter().filter(|m| m.is_f_type()).count(), 6);
    assert_eq!(g1.to_string(), "G1+");
}

#[test]
fn minimal_move_examples() {
    let m = minimal_moves(st(2, 0, 2)).unwrap();
    assert_eq!(m.total, 3);
    assert_eq!(m.signed, SignedBound { n: 2, p: 1 });
    assert_eq!(apply_all(st(2, 0, 2), &m.witness), Some(LatticeState::ORIGIN));
    assert_eq!(m.witness.len(), 3);

    let m = minimal_moves(st(3, 1, 13)).unwrap();
    assert_eq!((m.total, m.signed), (9, SignedBound { n: 8, p: 1 }));
    assert_eq!(apply_all(st(3, 1, 13), &m.witness), Some(LatticeState::ORIGIN));
    let minus = m.witness.iter().filter(|w| w.sign == MoveSign::Minus).count() as u32;
    assert_eq!(minus, m.lexicographic.n);

    let m = minimal_moves(LatticeState::ORIGIN).unwrap();
    assert_eq!(m.total, 0);
    assert!(m.witness.is_empty());

    assert!(minimal_moves(st(1, 0, 1)).is_err());
    assert!(minimal_moves(st(0, 2, 0)).is_err());
    assert!(DistanceTable::new(2).minimal_moves(st(0, 0, 10)).is_err());
}

#[test]
fn exhaustive_small_ranges() {
    let r = exhaustive_check(0).unwrap();
    assert_eq!((r.states, r.passed()), (1, true));
    let r = exhaustive_check(8).unwrap();
    assert!(r.passed(), "{}", r.render_text());
    assert_eq!(r.states, lattice_states(8).len());
}

#[test]
fn exhaustive_range_sixteen() {
    let r = exhaustive_check(16).unwrap();
    assert!(r.passed(), "{}", r.render_text());
    assert_eq!(r.states, 2465);
}

/// Closed formulas with an off-by-one error on part of the lattice.
struct Mutated;

impl BoundFormula for Mutated {
    fn total(&self, f: &FactorInvariants) -> Result<u32> {
        let (j, s, big) = f.triple()?;
        let bump = u32::from(j % 2 == 1 && s >= j && big >= 0);
        Ok(unknotting_bound(f)? + bump)
    }

    fn signed(&self, f: &FactorInvariants) -> Result<SignedBound> {
        signed_bounds(f)
    }
}

#[test]
fn mutation_is_caught_at_smallest_state() {
    let r = exhaustive_check_with(6, &Mutated).unwrap();
    assert!(!r.passed());
    let first = &r.mismatches[0];
    assert_eq!(first.state, st(1, 1, 1));
    assert_eq!(first.quantity, "total");
    assert_eq!((first.formula, first.search), (2, 1));
    assert!(r.mismatches.iter().all(|m| m.quantity == "total"));
    assert!(r.render_text().contains("(1, 1, 1) total: formula 2, search 1"));
}

#[test]
fn state_order() {
    let states = lattice_states(4);
    assert_eq!(states[0], LatticeState::ORIGIN);
    assert!(states.windows(2).all(|w| (w[0].l1(), w[0]) < (w[1].l1(), w[1])));
    assert!(states.iter().all(|s| s.is_valid() && s.in_lattice()));
}

fn lattice_state(r: i32) -> impl Strategy<Value = LatticeState> {
    (0..=r, -r..=r, 0..=r).prop_map(|(j, a, gap)| {
        let l = a - (a - j).rem_euclid(2);
        st(j, l, l + 2 * (gap / 2))
    })
}

fn any_move() -> impl Strategy<Value = Move> {
    (0usize..10).prop_map(|i| Move::ALL[i])
}

proptest! {
    #[test]
    fn moves_stay_in_lattice(s in lattice_state(12), m in any_move()) {
        prop_assert!(s.is_valid() && s.in_lattice());
        if let Some(t) = m.apply(s) {
            prop_assert!(t.is_valid() && t.in_lattice());
        }
    }

    #[test]
    fn f_and_g_moves_commute(s in lattice_state(12), a in any_move(), b in any_move()) {
        prop_assume!(a.is_f_type() != b.is_f_type());
        let ab = a.apply(s).and_then(|t| b.apply(t));
        let ba = b.apply(s).and_then(|t| a.apply(t));
        if let (Some(x), Some(y)) = (ab, ba) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn one_move_changes_distance_by_one(s in lattice_state(6), m in any_move()) {
        let table = DistanceTable::new(14);
        if let Some(t) = m.apply(s) {
            let a = table.minimal_moves(s).unwrap().total as i64;
            let b = table.minimal_moves(t).unwrap().total as i64;
            prop_assert!((a - b).abs() <= 1);
        }
    }
}

/// A wider box does not change any answer in range.
#[test]
fn search_margin_is_sufficient() {
    let narrow = DistanceTable::new(16 + tristram::oracle::SEARCH_MARGIN);
    let wide = DistanceTable::new(16 + 2 * tristram::oracle::SEARCH_MARGIN);
    for s in lattice_states(16) {
        let (a, b) = (narrow.minimal_moves(s).unwrap(), wide.minimal_moves(s).unwrap());
        assert_eq!((a.total, a.signed, a.lexicographic), (b.total, b.signed, b.lexicographic), "{s}");
    }
}
