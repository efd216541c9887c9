//! Real root isolation with Sturm sequences, and roots on the unit circle.

use std::f64::consts::PI;

use num::{Integer, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::factor::cyclotomic_trace_index;
use super::poly::Poly;
use super::Rational;
use crate::error::{Error, Result};

/// The Sturm sequence of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    pub fn new(q: &Poly) -> Self {
        let mut chain = vec![q.clone(), q.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = -&chain[n - 2].rem(&chain[n - 1]);
            chain.push(r);
        }
        chain.pop();
        SturmChain { chain }
    }

    /// Number of sign changes along the chain at `v`, zeros skipped.
    pub fn variations(&self, v: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0;
        for p in &self.chain {
            let s = p.sign_at(v);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct roots in `(a, b]`, for `a < b` with `a` not a root.
    pub fn count_between(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// All real roots of the squarefree polynomial `q` in the open interval
/// `(lo, hi)`, as disjoint closed intervals `[l, u]` with `lo < l < u < hi`,
/// rational endpoints that are not roots, and exactly one root each. The
/// intervals are sorted in increasing order.
pub fn isolate_roots_in_interval(q: &Poly, lo: &Rational, hi: &Rational) -> Result<Vec<(Rational, Rational)>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !q.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if lo >= hi || q.is_constant() {
        return Ok(Vec::new());
    }
    // Roots sitting exactly at the ends are outside the open interval.
    let mut q = q.clone();
    for end in [lo, hi] {
        if q.sign_at(end) == 0 {
            q = q.exact_div(&Poly::from_coeffs(vec![-end.clone(), Rational::one()])).unwrap();
        }
    }
    let sturm = SturmChain::new(&q);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = sturm.count_between(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 && &a != lo && &b != hi {
            out.push((a, b));
            continue;
        }
        let mid = (&a + &b) / Rational::from_integer(2.into());
        if q.sign_at(&mid) == 0 {
            let (l, u) = isolate_rational_root(&sturm, &q, &mid, &a, &b);
            stack.push((a, l.clone()));
            stack.push((u.clone(), b));
            out.push((l, u));
        } else {
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
    }
    out.sort();
    Ok(out)
}

/// A non-root interval `[l, u]` around the rational root `r`, inside `(a, b)`.
fn isolate_rational_root(sturm: &SturmChain, q: &Poly, r: &Rational, a: &Rational, b: &Rational) -> (Rational, Rational) {
    let mut w = (b - a) / Rational::from_integer(4.into());
    loop {
        let l = r - &w;
        let u = r + &w;
        if q.sign_at(&l) != 0 && q.sign_at(&u) != 0 && sturm.count_between(&l, &u) == 1 {
            return (l, u);
        }
        w /= Rational::from_integer(2.into());
    }
}

/// Halve an isolating interval of a root of the squarefree `q`, keeping the
/// half that contains the root. Endpoints never become roots: when the
/// midpoint is a root, the interval collapses around it.
pub(crate) fn bisect(q: &Poly, lo: &mut Rational, hi: &mut Rational) {
    let two = Rational::from_integer(2.into());
    let mid = (&*lo + &*hi) / &two;
    let s_mid = q.sign_at(&mid);
    if s_mid == 0 {
        let w = (&*hi - &*lo) / Rational::from_integer(8.into());
        *lo = &mid - &w;
        *hi = &mid + &w;
        return;
    }
    if q.sign_at(lo) * s_mid < 0 {
        *hi = mid;
    } else {
        *lo = mid;
    }
}

/// A point `ω = e^(2πit)` with `0 < t < 1/2`, given by the irreducible trace
/// polynomial `q(z)` of `z = ω + ω^-1 = 2cos(2πt)` and an isolating interval
/// for `z` inside `(-2, 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitRoot {
    trace: Poly,
    lo: Rational,
    hi: Rational,
    cyclotomic: Option<(u32, u32)>,
}

impl UnitRoot {
    /// Wrap an isolating interval produced for `trace`. The polynomial must be
    /// irreducible; endpoints must lie in `(-2, 2)` and straddle one root.
    pub fn new(trace: Poly, lo: Rational, hi: Rational) -> Self {
        UnitRoot { trace, lo, hi, cyclotomic: None }
    }

    /// All roots of `trace` in `(-2, 2)`, ordered by increasing `t` (that is,
    /// decreasing `z`). Roots of cyclotomic trace polynomials carry their exact
    /// angle `k/n`.
    pub fn all_for(trace: &Poly) -> Result<Vec<UnitRoot>> {
        let two = Rational::from_integer(2.into());
        let mut ivs = isolate_roots_in_interval(trace, &-two.clone(), &two)?;
        ivs.reverse();
        let index = cyclotomic_trace_index(trace).filter(|&n| n >= 3);
        let ks: Vec<u32> = match index {
            Some(n) => (1..n).filter(|&k| 2 * k < n && k.gcd(&n) == 1).collect(),
            None => Vec::new(),
        };
        Ok(ivs
            .into_iter()
            .enumerate()
            .map(|(i, (lo, hi))| UnitRoot {
                trace: trace.clone(),
                lo,
                hi,
                cyclotomic: index.map(|n| (ks[i], n)),
            })
            .collect())
    }

    pub fn trace(&self) -> &Poly {
        &self.trace
    }

    /// Isolating interval for `z`.
    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    /// The exact value of `z` when the trace polynomial is linear.
    pub fn rational_value(&self) -> Option<Rational> {
        (self.trace.degree() == Some(1)).then(|| -&self.trace.coeffs()[0] / &self.trace.coeffs()[1])
    }

    /// `Some((k, n))` with `t = k/n` in lowest terms when `ω` is a root of unity
    /// of order at most the cyclotomic limit.
    pub fn exact_angle(&self) -> Option<(u32, u32)> {
        self.cyclotomic
    }

    /// Halve the isolating interval.
    pub fn refine(&mut self) {
        bisect(&self.trace, &mut self.lo, &mut self.hi);
    }

    /// Refine until the interval is narrower than `width`.
    pub fn refine_to(&mut self, width: &Rational) {
        while &(&self.hi - &self.lo) >= width {
            self.refine();
        }
    }

    /// True when the closed isolating intervals overlap.
    pub fn overlaps(&self, other: &UnitRoot) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Certified enclosure of `t = acos(z/2) / 2π` as `(t_lo, t_hi)`.
    pub fn t_bounds(&self) -> (f64, f64) {
        if let Some((k, n)) = self.cyclotomic {
            let t = k as f64 / n as f64;
            return (t - 1e-15, t + 1e-15);
        }
        let t_of = |z: &Rational| {
            let zf = z.to_f64().unwrap_or(0.0).clamp(-2.0, 2.0);
            let t = (zf / 2.0).acos() / (2.0 * PI);
            // float conversion and acos each contribute rounding error, amplified
            // near z = ±2 where acos is steep
            let slope = 1.0 / (2.0 * PI * (4.0 - zf * zf).max(1e-300).sqrt());
            (t, 1e-12 + 1e-15 * slope)
        };
        let (t_hi, e_hi) = t_of(&self.lo);
        let (t_lo, e_lo) = t_of(&self.hi);
        ((t_lo - e_lo).max(0.0), (t_hi + e_hi).min(0.5))
    }

    /// Refine until `t` is pinned to within `10^-digits`.
    pub fn refine_t(&mut self, digits: u32) {
        if self.cyclotomic.is_some() {
            return;
        }
        let target = 10f64.powi(-(digits as i32)) / 4.0;
        for _ in 0..200 {
            let (a, b) = self.t_bounds();
            if b - a < target {
                return;
            }
            self.refine();
        }
    }

    /// Label for `t`: exact `k/n` when known, else the certified decimal digits.
    pub fn t_label(&self, digits: u32) -> RootLabel {
        if let Some((k, n)) = self.cyclotomic {
            let scaled = k as u128 * 10u128.pow(digits);
            let floor = (scaled / n as u128) as i64;
            let ceil = floor + i64::from(scaled % n as u128 != 0);
            let lo = render_fixed(floor, digits);
            return RootLabel { t_exact: Some(format!("{k}/{n}")), t_hi: render_fixed(ceil, digits), t_digits: lo.clone(), t_lo: lo };
        }
        let exact = None;
        let (a, b) = self.t_bounds();
        let lo = floor_decimal(a, digits);
        let hi = ceil_decimal(b, digits);
        let certified = common_prefix(&floor_decimal(a, digits), &floor_decimal(b, digits));
        RootLabel { t_exact: exact, t_lo: lo, t_hi: hi, t_digits: certified }
    }
}

/// Human-facing description of a root's angle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootLabel {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t_exact: Option<String>,
    pub t_lo: String,
    pub t_hi: String,
    /// Decimal digits shared by every point of the enclosure.
    pub t_digits: String,
}

fn scaled(v: f64, digits: u32) -> f64 {
    v * 10f64.powi(digits as i32)
}

fn render_fixed(units: i64, digits: u32) -> String {
    let base = 10i64.pow(digits);
    let int = units / base;
    let frac = units % base;
    if digits == 0 {
        int.to_string()
    } else {
        format!("{int}.{frac:0width$}", width = digits as usize)
    }
}

fn floor_decimal(v: f64, digits: u32) -> String {
    render_fixed(scaled(v, digits).floor() as i64, digits)
}

fn ceil_decimal(v: f64, digits: u32) -> String {
    render_fixed(scaled(v, digits).ceil() as i64, digits)
}

fn common_prefix(a: &str, b: &str) -> String {
    let n = a.chars().zip(b.chars()).take_while(|(x, y)| x == y).count();
    let s: String = a.chars().take(n).collect();
    s.trim_end_matches('.').to_string()
}

/// The simplest rational (smallest denominator, then numerator) strictly
/// between `a` and `b`, where `b = None` means `+∞`.
pub fn simplest_between(a: &Rational, b: Option<&Rational>) -> Rational {
    if b.is_none() && a.is_negative() {
        return Rational::zero();
    }
    if let Some(b) = b {
        assert!(a < b, "empty interval");
        if a.is_negative() && b.is_positive() {
            return Rational::zero();
        }
        if !b.is_positive() {
            return -simplest_between(&-b, Some(&-a));
        }
    }
    // Here 0 <= a.
    let fl = a.floor();
    let next = &fl + Rational::one();
    if b.map_or(true, |b| &next < b) {
        return next;
    }
    let b = b.unwrap();
    // a and b lie in [fl, fl + 1], no integer strictly between.
    let lo = a - &fl;
    let hi = b - &fl;
    let lo_inv = (!lo.is_zero()).then(|| lo.recip());
    let inner = simplest_between(&hi.recip(), lo_inv.as_ref());
    fl + inner.recip()
}
