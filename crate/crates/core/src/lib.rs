//! Exact Levine–Tristram signatures and the unknotting-number bounds built on
//! them.
//!
//! Knots enter as Seifert matrices (from the built-in table, braid words, or
//! files). From a Seifert matrix `V` the crate computes the Alexander
//! polynomial, factors it over the rationals, isolates the unit-circle roots
//! exactly, and evaluates the signature of `(1 - ω)V + (1 - ω̄)Vᵀ` on every
//! plateau and at every root using exact hermitian diagonalization. The
//! resulting step function feeds the jump/signature bounds on unknotting
//! number, signed crossing changes, Gordian distance, clasp number, four-genus
//! and double slicing. A brute-force search over the abstract move lattice
//! verifies the closed-form bounds.
//!
//! ```
//! use tristram::{resolve_expression, KnotTable, BoundReport};
//!
//! let table = KnotTable::builtin();
//! let v = resolve_expression("-5_1 # -10_132", &table).unwrap();
//! let report = BoundReport::for_matrix("-5_1 # -10_132", &v).unwrap();
//! assert_eq!(report.u2, 3);
//! assert_eq!(report.u1, 2);
//! ```

pub mod algebra;
pub mod bounds;
mod error;
pub mod oracle;
pub mod seifert;
pub mod signature;

pub use algebra::{LaurentPoly, Poly, Rational, TracePoly, UnitRoot};
pub use bounds::{BoundReport, FactorInvariants, SignedBound};
pub use error::{Error, Result};
pub use oracle::{exhaustive_check, minimal_moves, LatticeState, Move};
pub use seifert::{resolve_expression, BraidWord, KnotExpr, KnotTable, SeifertMatrix};
pub use signature::{alexander_polynomial, signature_at_sample, step_function, SignatureFunction};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/seifert-matrices.md")]
    mod seifert_matrices {}
    #[doc = include_str!("../../../book/src/exact-algebra.md")]
    mod exact_algebra {}
    #[doc = include_str!("../../../book/src/signature-function.md")]
    mod signature_function {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/move-lattice.md")]
    mod move_lattice {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
