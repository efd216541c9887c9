mod common;

use num::{BigInt, Zero};
use proptest::prelude::*;
use tristram::algebra::factor::compare_polys;
use tristram::algebra::trace::pull_back;
use tristram::algebra::{
    cyclotomic, factor_over_rationals, is_irreducible, isolate_roots_in_interval, rat, LaurentPoly, NumberField,
    Poly, RealField, SturmChain, TracePoly, UnitRoot,
};
use tristram::signature::alexander_polynomial;
use tristram::Error;

fn poly(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

fn lp(low: i64, c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_ints(low, c)
}

/// Schoolbook division of integer polynomials by a monic divisor, written
/// independently of the library.
fn int_remainder(num: &[i64], monic: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let d = monic.len() - 1;
    while r.len() > d {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - d;
        for (k, c) in monic.iter().enumerate() {
            r[shift + k] -= lead * c;
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

#[test]
fn laurent_product() {
    let a = lp(0, &[-1, 1]);
    let b = lp(-1, &[1, -1]);
    assert_eq!(&a * &b, lp(-1, &[-1, 2, -1]));
}

#[test]
fn laurent_gcd_with_own_power() {
    let phi6 = lp(0, &[1, -1, 1]);
    let g = LaurentPoly::gcd(&phi6, &(&phi6 * &phi6));
    assert!(g == phi6 || g == -&phi6);
}

#[test]
fn phi10_not_divisible_by_phi6() {
    let r = lp(0, &[1, -1, 1, -1, 1]).exact_div(&lp(0, &[1, -1, 1]));
    assert!(matches!(r, Err(Error::NotDivisible)));
    assert!(!int_remainder(&[1, -1, 1, -1, 1], &[1, -1, 1]).is_empty());
}

#[test]
fn trace_examples() {
    let t = TracePoly::from_laurent(&lp(0, &[1, -1, 1])).unwrap();
    assert_eq!(t.poly(), &poly(&[-1, 1]));
    let t = TracePoly::from_laurent(&lp(0, &[1, -1, 1, -1, 1])).unwrap();
    assert_eq!(t.poly(), &poly(&[-1, -1, 1]));
    // substitution identity checked by evaluation at rational points
    for x in [rat(2, 1), rat(-3, 7), rat(5, 4)] {
        let z = &x + x.recip();
        let lhs = &x * &x * t.poly().eval(&z);
        assert_eq!(lhs, lp(0, &[1, -1, 1, -1, 1]).eval(&x));
    }
    let t = TracePoly::from_laurent(&lp(0, &[1, -3, 1])).unwrap();
    assert_eq!(t.poly(), &poly(&[-3, 1]));
}

#[test]
fn trace_errors() {
    assert!(matches!(TracePoly::from_laurent(&lp(0, &[3, 2, 1])), Err(Error::NotSymmetric(_))));
    assert!(matches!(TracePoly::from_laurent(&lp(0, &[1, 1])), Err(Error::OddSpan(1))));
    assert!(matches!(TracePoly::from_laurent(&LaurentPoly::zero()), Err(Error::ZeroPolynomial)));
}

#[test]
fn factor_examples() {
    let f = factor_over_rationals(&poly(&[1, 0, -2, 0, 1])).unwrap();
    assert_eq!(f, vec![(poly(&[-1, 1]), 2), (poly(&[1, 1]), 2)]);

    let v = common::resolve("8_20");
    let t = TracePoly::from_laurent(&alexander_polynomial(&v)).unwrap();
    assert_eq!(factor_over_rationals(t.poly()).unwrap(), vec![(poly(&[-1, 1]), 2)]);

    let v = common::resolve("T(3,10) # -T(2,15) # -T(5,6)");
    let t = TracePoly::from_laurent(&alexander_polynomial(&v)).unwrap();
    let mut got: Vec<(Poly, usize)> = factor_over_rationals(t.poly())
        .unwrap()
        .into_iter()
        .map(|(q, m)| (pull_back(&q).to_poly().primitive(), m))
        .collect();
    got.sort_by(|a, b| compare_polys(&a.0, &b.0));
    let mut want = vec![(cyclotomic(6), 2), (cyclotomic(10), 2), (cyclotomic(15), 2), (cyclotomic(30), 3)];
    want.sort_by(|a, b| compare_polys(&a.0, &b.0));
    assert_eq!(got, want);
}

#[test]
fn isolation_examples() {
    let two = rat(2, 1);
    let ivs = isolate_roots_in_interval(&poly(&[-1, -1, 1]), &-two.clone(), &two).unwrap();
    assert_eq!(ivs.len(), 2);
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let mids: Vec<f64> = ivs.iter().map(|(a, b)| num::ToPrimitive::to_f64(&((a + b) / rat(2, 1))).unwrap()).collect();
    assert!(mids.iter().any(|m| (m - golden).abs() < 0.5) && mids.iter().any(|m| (m - (1.0 - golden)).abs() < 0.5));
    for (a, b) in &ivs {
        assert!(a < b && SturmChain::new(&poly(&[-1, -1, 1])).count_between(a, b) == 1);
    }
    let roots = UnitRoot::all_for(&poly(&[-1, -1, 1])).unwrap();
    let ts: Vec<_> = roots.iter().map(|r| r.exact_angle()).collect();
    assert_eq!(ts, vec![Some((1, 10)), Some((3, 10))]);

    let roots = UnitRoot::all_for(&poly(&[-1, 1])).unwrap();
    assert_eq!(roots.len(), 1);
    assert_eq!(roots[0].exact_angle(), Some((1, 6)));
    assert_eq!(roots[0].rational_value(), Some(rat(1, 1)));

    assert!(isolate_roots_in_interval(&poly(&[-5, 1]), &-two.clone(), &two).unwrap().is_empty());
    let square = poly(&[1, -2, 1]);
    assert!(matches!(isolate_roots_in_interval(&square, &-two.clone(), &two), Err(Error::NotSquarefree)));
}

#[test]
fn field_sign_examples() {
    let q = poly(&[-1, -1, 1]);
    let roots = UnitRoot::all_for(&q).unwrap();
    let k = NumberField::at_root(&roots[0]);
    assert_eq!(k.sign(&Poly::zero()), 0);
    assert_eq!(k.sign(&poly(&[-1, 1])), 1);
    let k2 = k.with_embedding(&roots[1]);
    assert_eq!(k2.sign(&poly(&[-1, 1])), -1);
    // the class of z^2 - z - 1 is zero
    assert!(k.is_zero(&k.reduce(&q)));
}

/// Every factor of every table Alexander polynomial survives the trip through
/// the trace variable.
#[test]
fn trace_round_trip_on_table() {
    for (name, v) in common::suite() {
        let delta = alexander_polynomial(&v);
        for (f, _) in factor_over_rationals(&delta.shift(-delta.low()).to_poly()).unwrap() {
            let l = LaurentPoly::from_poly(&f, 0);
            if !l.is_self_reciprocal() || l.span() % 2 == 1 {
                continue;
            }
            let t = TracePoly::from_laurent(&l).unwrap();
            let back = t.pull_back();
            assert!(back == l || back == -&l, "{name}: {l} vs {back}");
        }
    }
}

/// Irreducible trace polynomials with a root in (-2, 2) pull back to
/// irreducible polynomials in x.
#[test]
fn irreducible_pull_back() {
    let mut seen = 0;
    for (_, v) in common::suite() {
        let t = TracePoly::from_laurent(&alexander_polynomial(&v)).unwrap();
        for (q, _) in factor_over_rationals(t.poly()).unwrap() {
            if !UnitRoot::all_for(&q).unwrap().is_empty() {
                assert!(is_irreducible(&pull_back(&q).to_poly()), "{q}");
                seen += 1;
            }
        }
    }
    assert!(seen > 50);
}

/// No rational root, checked by the rational root theorem.
fn has_rational_root(p: &Poly) -> bool {
    let (_, c) = p.primitive_part();
    let lead = c.last().unwrap().clone();
    let konst = c[0].clone();
    if konst.is_zero() {
        return true;
    }
    let divisors = |n: &BigInt| -> Vec<i64> {
        let n: i64 = num::ToPrimitive::to_i64(&num::Signed::abs(n)).unwrap();
        (1..=n).filter(|d| n % d == 0).collect()
    };
    for a in divisors(&konst) {
        for b in divisors(&lead) {
            for s in [1, -1] {
                if p.eval(&rat(s * a, b)).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

fn small_factor() -> impl Strategy<Value = Vec<i64>> {
    prop_oneof![
        (1i64..4, -6i64..7).prop_map(|(a, b)| vec![b, a]),
        (1i64..4, -6i64..7, -6i64..7).prop_map(|(a, b, c)| vec![c, b, a]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factorization_reproduces_input(parts in prop::collection::vec(small_factor(), 1..5)) {
        let product = parts.iter().fold(Poly::one(), |acc, c| &acc * &poly(c));
        let factors = factor_over_rationals(&product).unwrap();
        let rebuilt = factors.iter().fold(Poly::one(), |acc, (f, m)| &acc * &f.pow(*m));
        prop_assert_eq!(rebuilt.monic(), product.monic());
        for (f, _) in &factors {
            let d = f.degree().unwrap();
            prop_assert!(d <= 2);
            prop_assert!(f.leading().unwrap() > &rat(0, 1));
            if d == 2 {
                prop_assert!(!has_rational_root(f));
            }
        }
    }

    #[test]
    fn isolation_matches_sturm_count(c in prop::collection::vec(-5i64..6, 2..7)) {
        let p = poly(&c);
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        let sf: Poly = p.squarefree_decomposition().iter().fold(Poly::one(), |acc, (f, _)| &acc * f);
        let two = rat(2, 1);
        prop_assume!(!sf.eval(&two).is_zero() && !sf.eval(&-two.clone()).is_zero());
        let ivs = isolate_roots_in_interval(&sf, &-two.clone(), &two).unwrap();
        let chain = SturmChain::new(&sf);
        prop_assert_eq!(ivs.len(), chain.count_between(&-two.clone(), &two));
        for (l, u) in &ivs {
            prop_assert_eq!(chain.count_between(l, u), 1);
        }
        for w in ivs.windows(2) {
            prop_assert!(w[0].1 <= w[1].0);
        }
    }
}
