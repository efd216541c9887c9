//! Exact arithmetic: rationals, polynomials, factorization, real roots and
//! real number fields.

pub mod factor;
pub mod field;
pub mod laurent;
pub mod poly;
pub mod roots;
pub mod trace;

/// Arbitrary-precision rational numbers, always in lowest terms with a
/// positive denominator.
pub type Rational = num::BigRational;

pub use factor::{cyclotomic, cyclotomic_index, cyclotomic_trace, factor_over_rationals, is_irreducible};
pub use field::{NumberField, RealField, Rationals};
pub use laurent::LaurentPoly;
pub use poly::Poly;
pub use roots::{isolate_roots_in_interval, simplest_between, RootLabel, SturmChain, UnitRoot};
pub use trace::TracePoly;

/// Shorthand for `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
