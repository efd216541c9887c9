//! Seifert matrices: construction, combination, the built-in table and file I/O.

mod braid;
mod expr;
mod io;
mod matrix;
mod table;

pub use braid::BraidWord;
pub use expr::{resolve_expression, KnotExpr};
pub use io::{parse_seifert_json, read_seifert_file, to_seifert_json, write_report};
pub use matrix::SeifertMatrix;
pub(crate) use matrix::integer_determinant;
pub use table::{normalize_name, same_up_to_units, KnotTable, TableEntry};
