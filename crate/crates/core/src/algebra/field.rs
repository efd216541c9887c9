//! Ordered real fields: the rationals, and `Q[z]/(q)` under a chosen real
//! embedding of `z`.

use std::fmt::Debug;

use num::{One, Zero};

use super::poly::{sign_of, Poly};
use super::roots::{bisect, UnitRoot};
use super::Rational;

/// A field with exact arithmetic, an exact zero test and a computable sign.
///
/// `distinguished` is the element the hermitian engine uses as the trace
/// `ω + ω^-1`.
pub trait RealField: Sync {
    type Elem: Clone + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Sign under the field's real embedding: -1, 0 or 1.
    fn sign(&self, a: &Self::Elem) -> i32;
    fn distinguished(&self) -> Self::Elem;
}

/// The rationals, with a fixed distinguished element.
#[derive(Clone, Debug)]
pub struct Rationals {
    pub value: Rational,
}

impl RealField for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_int(&self, n: i64) -> Rational {
        Rational::from_integer(n.into())
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Rational {
        a.recip()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn sign(&self, a: &Rational) -> i32 {
        sign_of(a)
    }
    fn distinguished(&self) -> Rational {
        self.value.clone()
    }
}

/// `Q[z]/(q)` for an irreducible `q`, embedded in the reals by sending `z` to
/// the root of `q` isolated by `[lo, hi]`. Elements are reduced representatives
/// of degree below `deg q`; the distinguished element is the class of `z`.
#[derive(Clone, Debug)]
pub struct NumberField {
    modulus: Poly,
    lo: Rational,
    hi: Rational,
}

impl NumberField {
    /// The modulus must be irreducible and `[lo, hi]` must isolate one of its
    /// real roots with non-root endpoints.
    pub fn new(modulus: Poly, lo: Rational, hi: Rational) -> Self {
        NumberField { modulus, lo, hi }
    }

    /// The field generated by the trace of a unit root.
    pub fn at_root(root: &UnitRoot) -> Self {
        let (lo, hi) = root.interval();
        NumberField::new(root.trace().clone(), lo.clone(), hi.clone())
    }

    /// Same field, different real embedding.
    pub fn with_embedding(&self, root: &UnitRoot) -> Self {
        debug_assert_eq!(root.trace(), &self.modulus);
        NumberField::at_root(root)
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        p.rem(&self.modulus)
    }

    /// Sign of `a` at the embedded root: interval evaluation over the
    /// isolating interval, bisecting until the enclosure excludes zero. A
    /// nonzero element cannot vanish at the root because `q` is irreducible,
    /// so this terminates.
    pub fn sign_of(&self, a: &Poly) -> i32 {
        if a.is_zero() {
            return 0;
        }
        if a.is_constant() {
            return sign_of(&a.coeffs()[0]);
        }
        if self.modulus.degree() == Some(1) {
            let root = -&self.modulus.coeffs()[0] / &self.modulus.coeffs()[1];
            return a.sign_at(&root);
        }
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        loop {
            let (vmin, vmax) = interval_eval(a, &lo, &hi);
            if vmin.is_positive_strict() {
                return 1;
            }
            if vmax.is_negative_strict() {
                return -1;
            }
            bisect(&self.modulus, &mut lo, &mut hi);
        }
    }
}

trait StrictSign {
    fn is_positive_strict(&self) -> bool;
    fn is_negative_strict(&self) -> bool;
}

impl StrictSign for Rational {
    fn is_positive_strict(&self) -> bool {
        sign_of(self) > 0
    }
    fn is_negative_strict(&self) -> bool {
        sign_of(self) < 0
    }
}

/// Enclosure of `{ p(v) : lo <= v <= hi }` by interval Horner evaluation.
fn interval_eval(p: &Poly, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut a = Rational::zero();
    let mut b = Rational::zero();
    for c in p.coeffs().iter().rev() {
        let prods = [&a * lo, &a * hi, &b * lo, &b * hi];
        let mut mn = prods[0].clone();
        let mut mx = prods[0].clone();
        for x in &prods[1..] {
            if x < &mn {
                mn = x.clone();
            }
            if x > &mx {
                mx = x.clone();
            }
        }
        a = mn + c;
        b = mx + c;
    }
    (a, b)
}

impl RealField for NumberField {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn one(&self) -> Poly {
        Poly::one()
    }
    fn from_int(&self, n: i64) -> Poly {
        Poly::from_ints(&[n])
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a - b
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&(a * b))
    }
    fn neg(&self, a: &Poly) -> Poly {
        -a
    }
    fn inv(&self, a: &Poly) -> Poly {
        let (g, s, _) = Poly::ext_gcd(a, &self.modulus);
        assert!(g.is_constant() && !g.is_zero(), "inverse of zero in number field");
        self.reduce(&s)
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn sign(&self, a: &Poly) -> i32 {
        self.sign_of(a)
    }
    fn distinguished(&self) -> Poly {
        self.reduce(&Poly::var())
    }
}
