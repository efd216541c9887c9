//! The built-in knot table.
//!
//! Seifert matrices, braid words, signatures and Alexander polynomials are
//! transcribed from the KnotInfo database. Every entry is checked when the
//! table is built: the matrix must be a valid Seifert matrix whose signature
//! and Alexander polynomial match the recorded values.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::braid::BraidWord;
use super::matrix::SeifertMatrix;
use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::signature::{alexander_polynomial, murasugi_signature};

struct RawEntry {
    name: &'static str,
    braid: &'static [i32],
    matrix: &'static [&'static [i64]],
    signature: i32,
    /// Alexander polynomial coefficients from `t^0` upward.
    alexander: &'static [i64],
}

const RAW: &[RawEntry] = &[
    RawEntry { name: "0_1", braid: &[], matrix: &[], signature: 0, alexander: &[1] },
    RawEntry {
        name: "3_1",
        braid: &[1, 1, 1],
        matrix: &[&[-1, 0], &[-1, -1]],
        signature: -2,
        alexander: &[1, -1, 1],
    },
    RawEntry {
        name: "4_1",
        braid: &[1, -2, 1, -2],
        matrix: &[&[1, 0], &[-1, -1]],
        signature: 0,
        alexander: &[1, -3, 1],
    },
    RawEntry {
        name: "5_1",
        braid: &[1, 1, 1, 1, 1],
        matrix: &[&[-1, -1, 0, -1], &[0, -1, 0, 0], &[-1, -1, -1, -1], &[0, -1, 0, -1]],
        signature: -4,
        alexander: &[1, -1, 1, -1, 1],
    },
    RawEntry {
        name: "7_4",
        braid: &[1, 1, 2, -1, 2, 2, 3, -2, 3],
        matrix: &[&[-2, 0], &[-1, -2]],
        signature: -2,
        alexander: &[4, -7, 4],
    },
    RawEntry {
        name: "8_2",
        braid: &[1, 1, 1, 1, 1, -2, 1, -2],
        matrix: &[
            &[1, 0, 0, 0, 0, 0],
            &[-1, -1, -1, -1, -1, -1],
            &[-1, 0, -1, -1, 0, -1],
            &[-1, 0, 0, -1, 0, 0],
            &[-1, 0, -1, -1, -1, -1],
            &[-1, 0, 0, -1, 0, -1],
        ],
        signature: -4,
        alexander: &[1, -3, 3, -3, 3, -3, 1],
    },
    RawEntry {
        name: "8_20",
        braid: &[1, 1, 1, -2, -1, -1, -1, -2],
        matrix: &[&[-1, -1, -1, -1], &[0, 0, -1, -1], &[0, -1, 0, -1], &[0, 0, -1, 0]],
        signature: 0,
        alexander: &[1, -2, 3, -2, 1],
    },
    RawEntry {
        name: "10_132",
        braid: &[1, 1, 1, -2, -1, -1, -2, -3, 2, -3, -3],
        matrix: &[&[-1, -1, 1, 0], &[0, 0, 1, 0], &[0, 1, 1, 1], &[0, 0, 0, 1]],
        signature: 0,
        alexander: &[1, -1, 1, -1, 1],
    },
    RawEntry {
        name: "11n6",
        braid: &[-1, -1, -2, 1, -2, -1, 3, 2, 2, -4, 3, -4],
        matrix: &[
            &[1, 0, 0, 0, 0, 0],
            &[-1, -1, 0, 1, 1, 1],
            &[0, 0, -1, -1, -1, -1],
            &[1, 0, 0, 0, -1, -1],
            &[1, 0, 0, -1, 0, -1],
            &[1, 0, 0, 0, -1, 0],
        ],
        signature: 0,
        alexander: &[1, -3, 3, -3, 3, -3, 1],
    },
];

/// A named knot in a [`KnotTable`].
#[derive(Clone, Debug)]
pub struct TableEntry {
    pub name: String,
    pub matrix: SeifertMatrix,
    pub braid: Option<BraidWord>,
}

/// Named Seifert matrices, looked up by normalized name.
#[derive(Clone, Debug, Default)]
pub struct KnotTable {
    entries: Vec<TableEntry>,
    index: HashMap<String, usize>,
}

/// Canonical lookup key: lowercase, without underscores, spaces or subscripts.
pub fn normalize_name(name: &str) -> String {
    name.chars()
        .filter_map(|c| match c {
            '_' | ' ' | '\t' => None,
            '₀'..='₉' => char::from_digit(c as u32 - '₀' as u32, 10),
            c => Some(c.to_ascii_lowercase()),
        })
        .collect()
}

impl KnotTable {
    pub fn empty() -> Self {
        KnotTable::default()
    }

    /// The validated built-in table (built once per process).
    pub fn builtin() -> Self {
        static TABLE: OnceLock<KnotTable> = OnceLock::new();
        TABLE
            .get_or_init(|| KnotTable::try_builtin().expect("built-in knot table data is valid"))
            .clone()
    }

    /// Build the built-in table, checking every entry against its recorded
    /// signature and Alexander polynomial.
    pub fn try_builtin() -> Result<Self> {
        let mut table = KnotTable::empty();
        for raw in RAW {
            let matrix = SeifertMatrix::named(raw.name, raw.matrix.iter().map(|r| r.to_vec()).collect())?;
            let sig = murasugi_signature(&matrix);
            if sig != raw.signature {
                return Err(Error::InvalidSeifert {
                    name: raw.name.to_string(),
                    reason: format!("signature {sig}, expected {}", raw.signature),
                });
            }
            let expected = LaurentPoly::from_ints(0, raw.alexander);
            let got = alexander_polynomial(&matrix);
            if !same_up_to_units(&got, &expected) {
                return Err(Error::InvalidSeifert {
                    name: raw.name.to_string(),
                    reason: format!("Alexander polynomial {got}, expected {expected}"),
                });
            }
            let braid = if raw.braid.is_empty() {
                None
            } else {
                Some(raw.braid.iter().map(i32::to_string).collect::<Vec<_>>().join(" ").parse()?)
            };
            table.push(TableEntry { name: raw.name.to_string(), matrix, braid });
        }
        table.alias("unknot", "0_1");
        Ok(table)
    }

    fn push(&mut self, entry: TableEntry) {
        let key = normalize_name(&entry.name);
        match self.index.get(&key) {
            Some(&i) => self.entries[i] = entry,
            None => {
                self.index.insert(key, self.entries.len());
                self.entries.push(entry);
            }
        }
    }

    fn alias(&mut self, alias: &str, target: &str) {
        if let Some(&i) = self.index.get(&normalize_name(target)) {
            self.index.insert(normalize_name(alias), i);
        }
    }

    /// Add or replace an entry.
    pub fn insert(&mut self, name: &str, matrix: SeifertMatrix) {
        self.push(TableEntry { name: name.to_string(), matrix, braid: None });
    }

    pub fn get(&self, name: &str) -> Option<&TableEntry> {
        self.index.get(&normalize_name(name)).map(|&i| &self.entries[i])
    }

    /// Entries in insertion order.
    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }
}

/// Equality up to multiplication by `±x^k`.
pub fn same_up_to_units(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    let a = a.shift(-a.low());
    let b = b.shift(-b.low());
    a == b || a == -&b
}
