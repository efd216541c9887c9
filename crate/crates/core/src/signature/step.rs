//! The Levine–Tristram signature as an exact step function on `t ∈ (0, 1/2]`.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::alexander::alexander_polynomial;
use super::hermitian::{signature_at_sample, signatures_at_roots};
use crate::algebra::factor::cyclotomic_index;
use crate::algebra::trace::pull_back;
use crate::algebra::{factor_over_rationals, simplest_between, LaurentPoly, Poly, Rational, RootLabel, TracePoly, UnitRoot};
use crate::error::{Error, Result};
use crate::seifert::SeifertMatrix;

/// An irreducible factor of the Alexander polynomial with roots on the unit
/// circle.
#[derive(Clone, Debug)]
pub struct BreakpointFactor {
    /// The factor `δ(x)` as a polynomial with coprime integer coefficients.
    pub delta: Poly,
    /// Its trace polynomial `q(z)` with `δ(x) = x^(deg q) q(x + x^-1)`.
    pub trace: Poly,
    /// Multiplicity in the Alexander polynomial.
    pub multiplicity: usize,
    /// `Some(n)` when `δ = Φ_n`.
    pub cyclotomic: Option<u32>,
    /// Roots with `0 < t < 1/2`, by increasing `t`.
    pub roots: Vec<UnitRoot>,
}

/// Factor the Alexander polynomial and keep the factors vanishing somewhere
/// on the open upper half circle.
pub fn breakpoint_candidates(alexander: &LaurentPoly) -> Result<Vec<BreakpointFactor>> {
    let trace = TracePoly::from_laurent(alexander)?;
    let mut out = Vec::new();
    for (q, multiplicity) in factor_over_rationals(trace.poly())? {
        let roots = UnitRoot::all_for(&q)?;
        if roots.is_empty() {
            continue;
        }
        let delta = pull_back(&q).to_poly().primitive();
        out.push(BreakpointFactor { cyclotomic: cyclotomic_index(&delta), delta, trace: q, multiplicity, roots });
    }
    Ok(out)
}

/// A jump of the signature function at a root of the Alexander polynomial.
#[derive(Clone, Debug)]
pub struct Breakpoint {
    /// Index into [`SignatureFunction::factors`].
    pub factor: usize,
    pub root: UnitRoot,
    /// Plateau values just before and after the root.
    pub left: i32,
    pub right: i32,
    /// `(right - left) / 2`.
    pub jump: i32,
    /// `left + right`, twice the balanced signature.
    pub balanced_x2: i32,
    /// Signature of the singular form at the root itself.
    pub nonbalanced: i32,
    /// Nullity of the form at the root.
    pub nullity: usize,
}

/// A maximal open arc on which the signature is constant.
#[derive(Clone, Debug)]
pub struct Plateau {
    /// The rational sample `z = 2cos(2πt)` at which the value was computed.
    pub sample: Rational,
    pub value: i32,
}

/// The signature function of a knot, exact on every plateau and at every
/// breakpoint.
#[derive(Clone, Debug)]
pub struct SignatureFunction {
    pub alexander: LaurentPoly,
    pub factors: Vec<BreakpointFactor>,
    /// Breakpoints by increasing `t`.
    pub breakpoints: Vec<Breakpoint>,
    /// `breakpoints.len() + 1` plateaus by increasing `t`; plateau `i` ends at
    /// breakpoint `i`.
    pub plateaus: Vec<Plateau>,
}

/// Jump, balanced and non-balanced signatures at one breakpoint, exported as
/// plain data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakpointSummary {
    pub root: RootLabel,
    pub jump: i32,
    pub balanced_x2: i32,
    pub nonbalanced: i32,
}

impl SignatureFunction {
    /// Breakpoints belonging to factor `i`, by increasing `t`.
    pub fn breakpoints_of(&self, i: usize) -> impl Iterator<Item = &Breakpoint> {
        self.breakpoints.iter().filter(move |b| b.factor == i)
    }

    pub fn plateau_values(&self) -> Vec<i32> {
        self.plateaus.iter().map(|p| p.value).collect()
    }

    /// Largest `|σ|` over plateaus and non-balanced values at breakpoints.
    pub fn max_abs(&self) -> i32 {
        self.plateaus
            .iter()
            .map(|p| p.value.abs())
            .chain(self.breakpoints.iter().map(|b| b.nonbalanced.abs()))
            .max()
            .unwrap_or(0)
    }

    /// Value at the point `z = 2cos(2πt)`: a plateau value, or the
    /// non-balanced signature when `z` is a breakpoint.
    pub fn value_at(&self, z: &Rational) -> i32 {
        for (i, b) in self.breakpoints.iter().enumerate() {
            let (lo, hi) = b.root.interval();
            if z > hi {
                return self.plateaus[i].value;
            }
            if z >= lo {
                if b.root.trace().eval(z) == Rational::from_integer(0.into()) {
                    return b.nonbalanced;
                }
                let mut r = b.root.clone();
                while r.interval().0 <= z && z <= r.interval().1 {
                    r.refine();
                }
                return if z > r.interval().1 { self.plateaus[i].value } else { self.plateaus[i + 1].value };
            }
        }
        self.plateaus.last().map_or(0, |p| p.value)
    }

    pub fn summaries(&self, digits: u32) -> Vec<BreakpointSummary> {
        self.breakpoints
            .iter()
            .map(|b| {
                let mut r = b.root.clone();
                r.refine_t(digits);
                BreakpointSummary { root: r.t_label(digits), jump: b.jump, balanced_x2: b.balanced_x2, nonbalanced: b.nonbalanced }
            })
            .collect()
    }
}

fn by_decreasing_z(a: &UnitRoot, b: &UnitRoot) -> Ordering {
    b.interval().0.cmp(a.interval().0)
}

/// Compute the full signature function of the knot with Seifert matrix `v`.
pub fn step_function(v: &SeifertMatrix) -> Result<SignatureFunction> {
    let alexander = alexander_polynomial(v);
    let factors = breakpoint_candidates(&alexander)?;

    let mut roots: Vec<(usize, UnitRoot)> = factors
        .iter()
        .enumerate()
        .flat_map(|(i, f)| f.roots.iter().map(move |r| (i, r.clone())))
        .collect();
    // separate roots of different factors until the isolating intervals are
    // disjoint and can be ordered
    loop {
        roots.sort_by(|a, b| by_decreasing_z(&a.1, &b.1));
        let clash: Vec<usize> = (1..roots.len()).filter(|&k| roots[k - 1].1.overlaps(&roots[k].1)).collect();
        if clash.is_empty() {
            break;
        }
        for k in clash {
            roots[k - 1].1.refine();
            roots[k].1.refine();
        }
    }

    let two = Rational::from_integer(2.into());
    let mut samples = Vec::with_capacity(roots.len() + 1);
    let mut upper = two.clone();
    for (_, r) in &roots {
        let (lo, hi) = r.interval();
        samples.push(simplest_between(hi, Some(&upper)));
        upper = lo.clone();
    }
    samples.push(simplest_between(&-two, Some(&upper)));

    let values: Vec<i32> = samples
        .par_iter()
        .map(|z| signature_at_sample(v, z))
        .collect::<Result<_>>()?;
    if values[0] != 0 {
        return Err(Error::SingularSample(format!("signature {} near t = 0", values[0])));
    }
    let at_roots: Vec<Vec<(i32, usize)>> = factors.par_iter().map(|f| signatures_at_roots(v, &f.roots)).collect();

    let breakpoints = roots
        .iter()
        .enumerate()
        .map(|(k, (fi, root))| {
            let pos = factors[*fi].roots.iter().position(|r| r.trace() == root.trace() && r.overlaps(root)).expect("root belongs to its factor");
            let (nonbalanced, nullity) = at_roots[*fi][pos];
            let (left, right) = (values[k], values[k + 1]);
            Breakpoint {
                factor: *fi,
                root: root.clone(),
                left,
                right,
                jump: (right - left) / 2,
                balanced_x2: left + right,
                nonbalanced,
                nullity,
            }
        })
        .collect();
    let plateaus = samples.into_iter().zip(values).map(|(sample, value)| Plateau { sample, value }).collect();
    Ok(SignatureFunction { alexander, factors, breakpoints, plateaus })
}
