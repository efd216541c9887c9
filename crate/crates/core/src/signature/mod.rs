//! Levine–Tristram signatures: exact values at sample points and at roots of
//! the Alexander polynomial, and the full step function.

mod alexander;
mod export;
mod hermitian;
mod step;

pub use alexander::alexander_polynomial;
pub use export::{to_csv, to_svg};
pub use hermitian::{diagonalize, murasugi_signature, nonbalanced_at_root, signature_at_sample, signatures_at_roots, Diagonal};
pub use step::{breakpoint_candidates, step_function, Breakpoint, BreakpointFactor, BreakpointSummary, Plateau, SignatureFunction};
