//! Binary linear codes given by a full-rank generator matrix, plus the three
//! transforms that relate a code to its relatives: extension by an overall
//! parity bit, puncturing, and the even-weight subcode.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, BitVector, Echelon};

/// Structural facts that cannot be cheaply detected and are carried along
/// as assertions by the constructors (or by the caller).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CodeTags {
    /// Invariant under the cyclic shift `i → i + 1 mod n`.
    pub cyclic: bool,
    /// Produced by [`LinearCode::extend`]; holds the parity coordinate.
    pub extended_of: Option<usize>,
    /// Invariant under a transitive permutation group.
    pub transitive: bool,
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    generator: BinaryMatrix,
    echelon: Echelon,
    tags: CodeTags,
}

impl LinearCode {
    /// Wraps a generator matrix; its rows must be linearly independent.
    pub fn new(generator: BinaryMatrix) -> Result<Self> {
        let echelon = generator.echelon();
        if echelon.rank() != generator.num_rows() {
            return Err(Error::DependentRows {
                rank: echelon.rank(),
                rows: generator.num_rows(),
            });
        }
        Ok(Self {
            generator,
            echelon,
            tags: CodeTags::default(),
        })
    }

    /// The code spanned by `rows`, reduced to a basis.
    pub fn from_spanning(generator: &BinaryMatrix) -> Self {
        let echelon = generator.echelon();
        let basis = BinaryMatrix::new(generator.num_cols(), echelon.rows.clone())
            .expect("echelon rows keep the column count");
        Self {
            generator: basis,
            echelon,
            tags: CodeTags::default(),
        }
    }

    pub fn with_tags(mut self, tags: CodeTags) -> Self {
        self.tags = tags;
        self
    }

    pub fn with_transitive(mut self, transitive: bool) -> Self {
        self.tags.transitive = transitive;
        self
    }

    pub fn with_cyclic(mut self, cyclic: bool) -> Self {
        self.tags.cyclic = cyclic;
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.generator.num_cols()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.generator.num_rows()
    }

    #[inline]
    pub fn generator(&self) -> &BinaryMatrix {
        &self.generator
    }

    /// Reduced row echelon form of the generator matrix.
    #[inline]
    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    #[inline]
    pub fn tags(&self) -> CodeTags {
        self.tags
    }

    /// Membership test by reduction against the echelon form of `G`.
    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        if v.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: v.len(),
            });
        }
        Ok(self.echelon.contains(v))
    }

    /// True iff every codeword of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.n() == other.n()
            && self
                .generator
                .rows()
                .iter()
                .all(|r| other.echelon.contains(r))
    }

    /// Same row space (generator matrices may differ).
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.k() == other.k() && self.is_subcode_of(other)
    }

    /// Appends an overall parity bit as the last coordinate.
    pub fn extend(&self) -> LinearCode {
        let rows = self
            .generator
            .rows()
            .iter()
            .map(|r| {
                let mut e = r.clone();
                e.push(r.parity());
                e
            })
            .collect();
        let g = BinaryMatrix::new(self.n() + 1, rows).expect("uniform row length");
        let mut code = LinearCode::new(g).expect("extension preserves rank");
        code.tags.extended_of = Some(self.n());
        code
    }

    /// Deletes coordinate `pos`. Fails if that lowers the dimension.
    pub fn puncture(&self, pos: usize) -> Result<LinearCode> {
        if pos >= self.n() {
            return Err(Error::InvalidParameter(format!(
                "coordinate {pos} out of range for length {}",
                self.n()
            )));
        }
        let rows = self
            .generator
            .rows()
            .iter()
            .map(|r| r.remove(pos))
            .collect();
        let g = BinaryMatrix::new(self.n() - 1, rows)?;
        LinearCode::new(g).map_err(|_| Error::PunctureRankDrop { position: pos })
    }

    /// The subcode of even-weight codewords. Returns `self` unchanged when
    /// every generator row already has even weight.
    pub fn even_subcode(&self) -> LinearCode {
        let rows = self.generator.rows();
        let Some(pivot) = rows.iter().position(BitVector::parity) else {
            return self.clone();
        };
        let pivot_row = &rows[pivot];
        let even_rows = rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pivot)
            .map(|(_, r)| {
                if r.parity() {
                    r.xor(pivot_row)
                } else {
                    r.clone()
                }
            })
            .collect();
        let g = BinaryMatrix::new(self.n(), even_rows).expect("uniform row length");
        // Weight-preserving symmetries of C also preserve C_even.
        LinearCode::new(g)
            .expect("even subcode basis is independent")
            .with_tags(CodeTags {
                extended_of: None,
                ..self.tags
            })
    }

    pub fn has_odd_weight_word(&self) -> bool {
        self.generator.rows().iter().any(BitVector::parity)
    }
}

/// Parses the generator-matrix text format: `#` comment lines, then one line
/// of `0`/`1` characters per row. Blank lines are ignored and the rank is
/// validated.
pub fn parse_generator(text: &str) -> Result<LinearCode> {
    let mut rows = Vec::new();
    let mut n = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row: BitVector = line.parse().map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse {
                line: idx + 1,
                message,
            },
            other => other,
        })?;
        match n {
            None => n = Some(row.len()),
            Some(n) if n != row.len() => {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("row has {} columns, expected {n}", row.len()),
                })
            }
            _ => {}
        }
        rows.push(row);
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "no matrix rows found".into(),
    })?;
    LinearCode::new(BinaryMatrix::new(n, rows)?)
}

/// Writes `code` in the generator-matrix text format.
pub fn format_generator(code: &LinearCode, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "# ({}, {})", code.n(), code.k());
    for r in code.generator().rows() {
        let _ = writeln!(out, "{r}");
    }
    out
}
