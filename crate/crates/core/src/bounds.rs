//! Lower bounds derived from the signature function: unknotting number,
//! signed crossing changes, Gordian and clasp distance, four-genus and
//! double slicing.

use std::fmt;
use std::fmt::Write as _;
use std::path::Path;

use num::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebra::RootLabel;
use crate::error::{Error, Result};
use crate::seifert::SeifertMatrix;
use crate::signature::{step_function, Breakpoint, SignatureFunction};

/// The triple `(𝔍, 𝔖̲, 𝔖̄)` of one irreducible factor: the largest absolute
/// jump and the extreme balanced signatures over its roots. Signatures are
/// stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactorInvariants {
    pub jump: i32,
    pub sig_min_x2: i32,
    pub sig_max_x2: i32,
}

/// Minimal numbers of negative-to-positive (`n`) and positive-to-negative
/// (`p`) crossing changes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedBound {
    pub n: u32,
    pub p: u32,
}

impl SignedBound {
    pub fn total(&self) -> u32 {
        self.n + self.p
    }

    /// The bound for the mirror image.
    pub fn swapped(&self) -> SignedBound {
        SignedBound { n: self.p, p: self.n }
    }
}

impl FactorInvariants {
    /// Build from undoubled values.
    pub fn from_triple(jump: i32, sig_min: i32, sig_max: i32) -> Self {
        FactorInvariants { jump, sig_min_x2: 2 * sig_min, sig_max_x2: 2 * sig_max }
    }

    /// Invariants over a set of breakpoints, all roots of one factor.
    pub fn from_breakpoints<'a>(roots: impl IntoIterator<Item = &'a Breakpoint>) -> Result<Self> {
        let mut it = roots.into_iter().peekable();
        if it.peek().is_none() {
            return Err(Error::EmptyRoots);
        }
        let mut f = FactorInvariants { jump: 0, sig_min_x2: i32::MAX, sig_max_x2: i32::MIN };
        for b in it {
            f.jump = f.jump.max(b.jump.abs());
            f.sig_min_x2 = f.sig_min_x2.min(b.balanced_x2);
            f.sig_max_x2 = f.sig_max_x2.max(b.balanced_x2);
        }
        Ok(f)
    }

    /// `(𝔍, 𝔖̲, 𝔖̄)` after checking that the doubled values are even, ordered
    /// and of the same parity as the jump.
    pub fn triple(&self) -> Result<(i32, i32, i32)> {
        let bad = |why: &str| Err(Error::Parity(format!("{self:?}: {why}")));
        if self.jump < 0 {
            return bad("negative jump");
        }
        if self.sig_min_x2 % 2 != 0 || self.sig_max_x2 % 2 != 0 {
            return bad("balanced signature is not an integer");
        }
        if self.sig_min_x2 > self.sig_max_x2 {
            return bad("minimum exceeds maximum");
        }
        let (s, big_s) = (self.sig_min_x2 / 2, self.sig_max_x2 / 2);
        if (self.jump - s) % 2 != 0 || (self.jump - big_s) % 2 != 0 {
            return bad("jump and signatures differ in parity");
        }
        Ok((self.jump, s, big_s))
    }

    /// The invariants of the mirror image.
    pub fn mirror(&self) -> Self {
        FactorInvariants { jump: self.jump, sig_min_x2: -self.sig_max_x2, sig_max_x2: -self.sig_min_x2 }
    }
}

impl fmt::Display for FactorInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.jump, half(self.sig_min_x2), half(self.sig_max_x2))
    }
}

fn half(x2: i32) -> String {
    if x2 % 2 == 0 {
        (x2 / 2).to_string()
    } else {
        format!("{}/2", x2)
    }
}

/// Lower bound on the unknotting number from one factor. Knots with
/// `𝔖̄ < 0` are handled through their mirror image.
pub fn unknotting_bound(f: &FactorInvariants) -> Result<u32> {
    let (j, s, big_s) = f.triple()?;
    if big_s < 0 {
        return unknotting_bound(&f.mirror());
    }
    let u = if s <= j { j + (big_s - s) / 2 } else { (j + big_s) / 2 };
    Ok(u as u32)
}

/// Lower bounds on signed crossing changes from one factor.
pub fn signed_bounds(f: &FactorInvariants) -> Result<SignedBound> {
    let (j, s, big_s) = f.triple()?;
    let (n, p) = if big_s >= 0 {
        if s <= j {
            ((j + big_s) / 2, (j - s) / 2)
        } else {
            ((j + big_s) / 2, 0)
        }
    } else if -big_s <= j {
        ((j + big_s) / 2, (j - s) / 2)
    } else {
        (0, (j - s) / 2)
    };
    Ok(SignedBound { n: n as u32, p: p as u32 })
}

/// Combine factors: the largest `n` and the largest `p` can be forced by
/// different factors, and the classical bound is a floor.
pub fn combine(per_factor: &[SignedBound], classical: u32) -> u32 {
    let n = per_factor.iter().map(|b| b.n).max().unwrap_or(0);
    let p = per_factor.iter().map(|b| b.p).max().unwrap_or(0);
    (n + p).max(classical)
}

fn ceil_half(x: i32) -> i32 {
    x.div_euclid(2) + x.rem_euclid(2)
}

/// `⌈(max σ - min σ) / 2⌉` over plateaus and balanced values at breakpoints.
pub fn classical_bound(sf: &SignatureFunction) -> u32 {
    let values_x2 = sf
        .plateaus
        .iter()
        .map(|p| 2 * p.value)
        .chain(sf.breakpoints.iter().map(|b| b.balanced_x2));
    let (lo, hi) = values_x2.fold((0, 0), |(lo, hi), v| (lo.min(v), hi.max(v)));
    ceil_half(ceil_half(hi - lo)) as u32
}

/// Four-genus bound: the larger of `⌈(𝔍 + max|σ(α)|)/2⌉` over factors and
/// `⌈max|σ|/2⌉` over the whole function.
pub fn g4_bound(sf: &SignatureFunction) -> u32 {
    let plateau = sf
        .plateaus
        .iter()
        .map(|p| 2 * p.value.abs())
        .chain(sf.breakpoints.iter().map(|b| b.balanced_x2.abs()))
        .max()
        .unwrap_or(0);
    let mut best = ceil_half(ceil_half(plateau));
    for i in 0..sf.factors.len() {
        let j = sf.breakpoints_of(i).map(|b| b.jump.abs()).max().unwrap_or(0);
        let s_x2 = sf.breakpoints_of(i).map(|b| b.balanced_x2.abs()).max().unwrap_or(0);
        best = best.max(ceil_half(ceil_half(2 * j + s_x2)));
    }
    best as u32
}

/// `⌈M/2⌉ - ⌊m/2⌋` for the extrema of a set of values.
pub fn nonbalanced_bound_from_values(values: &[i32]) -> u32 {
    let hi = values.iter().copied().max().unwrap_or(0).max(0);
    let lo = values.iter().copied().min().unwrap_or(0).min(0);
    (ceil_half(hi) - lo.div_euclid(2)) as u32
}

/// The bound from the non-balanced signature: extrema over plateau values and
/// the literal signatures at the breakpoints. It also bounds the double
/// slicing number.
pub fn nonbalanced_bound(sf: &SignatureFunction) -> u32 {
    let values: Vec<i32> = sf
        .plateaus
        .iter()
        .map(|p| p.value)
        .chain(sf.breakpoints.iter().map(|b| b.nonbalanced))
        .collect();
    nonbalanced_bound_from_values(&values)
}

/// Signature data at one root, as reported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootReport {
    #[serde(flatten)]
    pub t: RootLabel,
    pub jump: i32,
    pub balanced_x2: i32,
    pub nonbalanced: i32,
}

/// Everything computed for one irreducible factor of the Alexander
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    /// Integer coefficients of the factor in `x`, constant term first.
    pub coefficients: Vec<i64>,
    pub multiplicity: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cyclotomic: Option<u32>,
    pub roots: Vec<RootReport>,
    pub jump: i32,
    pub sig_min_x2: i32,
    pub sig_max_x2: i32,
    pub n: u32,
    pub p: u32,
    pub u_factor: u32,
}

impl FactorReport {
    pub fn invariants(&self) -> FactorInvariants {
        FactorInvariants { jump: self.jump, sig_min_x2: self.sig_min_x2, sig_max_x2: self.sig_max_x2 }
    }

    pub fn signed(&self) -> SignedBound {
        SignedBound { n: self.n, p: self.p }
    }
}

/// All bounds for one knot, or for a pair `(K, J)` via `K # -J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub knot: String,
    pub seifert_size: usize,
    pub factors: Vec<FactorReport>,
    pub u1: u32,
    pub u2: u32,
    pub g4: u32,
    pub clasp: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gordian: Option<u32>,
    pub nonbalanced: u32,
    pub double_slice: u32,
    pub notes: Vec<String>,
}

/// Default number of decimal digits for root labels.
pub const DEFAULT_DIGITS: u32 = 6;

const NOTES: &[&str] = &[
    "u2 = max(max_δ N_δ + max_δ P_δ, u1), each factor taken over its full set of unit-circle roots",
    "u1 = ceil((max σ - min σ)/2) over plateaus and balanced values at breakpoints",
    "nonbalanced and double_slice use the extrema of the non-balanced signature s_K (plateaus and literal values at roots), not of σ_K",
];

impl BoundReport {
    /// Bounds for the knot with Seifert matrix `v`.
    pub fn for_matrix(name: &str, v: &SeifertMatrix) -> Result<Self> {
        Self::build(name, v, DEFAULT_DIGITS)
    }

    /// Bounds with root labels certified to `digits` decimal places.
    pub fn build(name: &str, v: &SeifertMatrix, digits: u32) -> Result<Self> {
        let sf = step_function(v)?;
        Self::from_function(name, v.size(), &sf, digits)
    }

    /// Gordian and clasp distance bounds between `k` and `j`, computed from
    /// `K # -J`.
    pub fn for_pair(k_name: &str, k: &SeifertMatrix, j_name: &str, j: &SeifertMatrix, digits: u32) -> Result<Self> {
        let name = format!("({k_name}) # -({j_name})");
        let mut r = Self::build(&name, &k.connected_sum(&j.mirror()), digits)?;
        r.gordian = Some(r.u2);
        Ok(r)
    }

    pub fn from_function(name: &str, seifert_size: usize, sf: &SignatureFunction, digits: u32) -> Result<Self> {
        let summaries = sf.summaries(digits);
        let mut factors = Vec::with_capacity(sf.factors.len());
        for (i, fac) in sf.factors.iter().enumerate() {
            let inv = FactorInvariants::from_breakpoints(sf.breakpoints_of(i))?;
            let signed = signed_bounds(&inv)?;
            let u_factor = unknotting_bound(&inv)?;
            let coefficients = fac
                .delta
                .coeffs()
                .iter()
                .map(|c| {
                    c.to_integer()
                        .to_i64()
                        .ok_or_else(|| Error::Overflow(format!("coefficient {c} of {}", fac.delta.display_with("x"))))
                })
                .collect::<Result<Vec<i64>>>()?;
            let roots = sf
                .breakpoints
                .iter()
                .zip(&summaries)
                .filter(|(b, _)| b.factor == i)
                .map(|(_, s)| RootReport { t: s.root.clone(), jump: s.jump, balanced_x2: s.balanced_x2, nonbalanced: s.nonbalanced })
                .collect();
            factors.push(FactorReport {
                coefficients,
                multiplicity: fac.multiplicity,
                cyclotomic: fac.cyclotomic,
                roots,
                jump: inv.jump,
                sig_min_x2: inv.sig_min_x2,
                sig_max_x2: inv.sig_max_x2,
                n: signed.n,
                p: signed.p,
                u_factor,
            });
        }
        let u1 = classical_bound(sf);
        let signed: Vec<SignedBound> = factors.iter().map(FactorReport::signed).collect();
        let u2 = combine(&signed, u1);
        let nb = nonbalanced_bound(sf);
        Ok(BoundReport {
            knot: name.to_string(),
            seifert_size,
            factors,
            u1,
            u2,
            g4: g4_bound(sf),
            clasp: u2,
            gordian: None,
            nonbalanced: nb,
            double_slice: nb,
            notes: NOTES.iter().map(|s| s.to_string()).collect(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Write the JSON report to `path`.
    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut s = self.to_json();
        s.push('\n');
        std::fs::write(path, s)?;
        Ok(())
    }

    /// Plain-text rendering.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "knot: {}", self.knot);
        let _ = writeln!(s, "seifert matrix: {0}x{0}", self.seifert_size);
        for (i, f) in self.factors.iter().enumerate() {
            let poly = crate::algebra::Poly::from_ints(&f.coefficients).display_with("x");
            let name = f.cyclotomic.map_or(String::new(), |n| format!(" = Φ_{n}"));
            let _ = writeln!(s, "factor {}: {poly}{name}, multiplicity {}", i + 1, f.multiplicity);
            for r in &f.roots {
                let t = r.t.t_exact.clone().unwrap_or_else(|| format!("{}..{}", r.t.t_lo, r.t.t_hi));
                let _ = writeln!(
                    s,
                    "  t = {t}: jump {}, signature {}, non-balanced {}",
                    r.jump,
                    half(r.balanced_x2),
                    r.nonbalanced
                );
            }
            let _ = writeln!(s, "  (J, S_min, S_max) = {}", f.invariants());
            let _ = writeln!(s, "  N = {}, P = {}, u >= {}", f.n, f.p, f.u_factor);
        }
        let _ = writeln!(s, "u1 (classical): {}", self.u1);
        let _ = writeln!(s, "u2: {}", self.u2);
        if let Some(g) = self.gordian {
            let _ = writeln!(s, "gordian distance >= {g}");
        }
        let _ = writeln!(s, "clasp >= {}", self.clasp);
        let _ = writeln!(s, "g4 >= {}", self.g4);
        let _ = writeln!(s, "non-balanced bound: {}", self.nonbalanced);
        let _ = writeln!(s, "double slicing >= {}", self.double_slice);
        s
    }
}

/// `u₂(K # -J)`, a lower bound on the Gordian distance between `K` and `J`.
pub fn gordian_bound(k: &SeifertMatrix, j: &SeifertMatrix) -> Result<u32> {
    Ok(BoundReport::for_pair("K", k, "J", j, DEFAULT_DIGITS)?.u2)
}

/// `u₂(K # -J)`, a lower bound on the singular concordance (clasp) distance.
pub fn clasp_bound(k: &SeifertMatrix, j: &SeifertMatrix) -> Result<u32> {
    gordian_bound(k, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(j: i32, s: i32, big_s: i32) -> FactorInvariants {
        FactorInvariants::from_triple(j, s, big_s)
    }

    #[test]
    fn unknotting_examples() {
        assert_eq!(unknotting_bound(&t(2, 0, 2)).unwrap(), 3);
        assert_eq!(unknotting_bound(&t(0, 0, 0)).unwrap(), 0);
        assert_eq!(unknotting_bound(&t(3, 1, 13)).unwrap(), 9);
        assert_eq!(unknotting_bound(&t(2, 2, 4)).unwrap(), 3);
    }

    #[test]
    fn signed_examples() {
        assert_eq!(signed_bounds(&t(2, 0, 2)).unwrap(), SignedBound { n: 2, p: 1 });
        assert_eq!(signed_bounds(&t(2, 2, 4)).unwrap(), SignedBound { n: 3, p: 0 });
        assert_eq!(signed_bounds(&t(3, 1, 13)).unwrap(), SignedBound { n: 8, p: 1 });
        assert_eq!(signed_bounds(&t(2, -4, -2)).unwrap(), SignedBound { n: 0, p: 3 });
    }

    #[test]
    fn parity_is_checked() {
        assert!(matches!(unknotting_bound(&t(1, 0, 2)), Err(Error::Parity(_))));
        assert!(matches!(signed_bounds(&t(0, 2, 0)), Err(Error::Parity(_))));
        let odd = FactorInvariants { jump: 1, sig_min_x2: 1, sig_max_x2: 2 };
        assert!(odd.triple().is_err());
    }

    #[test]
    fn combination() {
        let b = [SignedBound { n: 2, p: 0 }, SignedBound { n: 2, p: 1 }, SignedBound { n: 3, p: 0 }];
        assert_eq!(combine(&b, 2), 4);
        assert_eq!(combine(&[SignedBound { n: 2, p: 1 }], 2), 3);
        assert_eq!(combine(&[], 0), 0);
    }

    #[test]
    fn nonbalanced_values() {
        assert_eq!(nonbalanced_bound_from_values(&[0, 1, 0]), 1);
        assert_eq!(nonbalanced_bound_from_values(&[3, -3]), 4);
        assert_eq!(nonbalanced_bound_from_values(&[]), 0);
        assert_eq!(nonbalanced_bound_from_values(&[-1]), 1);
    }
}
