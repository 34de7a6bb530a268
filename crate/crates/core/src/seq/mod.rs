//! Sequence identity, resumable term streams, b-file I/O and the comparison
//! harness.

mod bfile;
mod compare;
mod registry;

use std::fmt;

use num_bigint::BigInt;

pub use bfile::{parse_bfile, render_bfile};
pub use compare::{compare, ComparisonReport, Exhausted, Mismatch};
pub use registry::{registry, Entry, Registry};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeqError {
    #[error("invalid A-number {0:?}: expected 'A' followed by six digits")]
    BadId(String),
    #[error("unknown sequence {0}")]
    Unknown(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("index {found} follows {previous}; b-file indexes must be consecutive")]
    Gap { previous: i64, found: i64 },
    #[error("index ranges do not overlap (actual {actual:?}, reference {reference:?})")]
    Alignment {
        actual: Option<(i64, i64)>,
        reference: Option<(i64, i64)>,
    },
    #[error("term {index} is unresolved within the budget: {reason}")]
    Unresolved { index: i64, reason: String },
    #[error("budget exhausted after {produced} terms: {reason}")]
    Budget { produced: usize, reason: String },
}

/// An OEIS identifier plus a human-readable name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceId {
    a_number: String,
    name: String,
}

impl SequenceId {
    pub fn new(a_number: &str, name: &str) -> Result<Self, SeqError> {
        if !is_a_number(a_number) {
            return Err(SeqError::BadId(a_number.to_string()));
        }
        Ok(Self { a_number: a_number.to_string(), name: name.to_string() })
    }

    pub fn a_number(&self) -> &str {
        &self.a_number
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.a_number, self.name)
    }
}

pub fn is_a_number(s: &str) -> bool {
    s.len() == 7 && s.starts_with('A') && s[1..].bytes().all(|b| b.is_ascii_digit())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub index: i64,
    pub value: BigInt,
}

impl Term {
    pub fn new(index: i64, value: impl Into<BigInt>) -> Self {
        Self { index, value: value.into() }
    }
}

/// Attaches consecutive indexes starting at `offset`.
pub fn index_terms<T: Into<BigInt>>(offset: i64, values: impl IntoIterator<Item = T>) -> Vec<Term> {
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| Term::new(offset + i as i64, v))
        .collect()
}

pub fn values(terms: &[Term]) -> Vec<BigInt> {
    terms.iter().map(|t| t.value.clone()).collect()
}

/// Prefix generator: returns the first `n` values of a sequence. Generators
/// must be prefix-stable, i.e. `gen(n)` is a prefix of `gen(m)` for `n < m`.
pub type PrefixFn = fn(usize) -> Result<Vec<BigInt>, SeqError>;

/// Indexed, resumable producer of terms for one sequence. Terms are
/// produced in batches by a prefix generator; the batch size doubles so the
/// amortized cost stays within a constant factor of one generator call.
pub struct TermStream {
    id: SequenceId,
    offset: i64,
    generate: PrefixFn,
    buffer: Vec<BigInt>,
    position: usize,
}

impl TermStream {
    pub fn new(id: SequenceId, offset: i64, generate: PrefixFn) -> Self {
        Self { id, offset, generate, buffer: Vec::new(), position: 0 }
    }

    pub fn id(&self) -> &SequenceId {
        &self.id
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Index of the next term to be produced.
    pub fn next_index(&self) -> i64 {
        self.offset + self.position as i64
    }

    fn fill(&mut self, needed: usize) -> Result<(), SeqError> {
        if needed <= self.buffer.len() {
            return Ok(());
        }
        let target = if self.buffer.is_empty() { needed } else { needed.max(2 * self.buffer.len()) };
        // Finite or expensive sequences may fail on the speculative batch
        // while the exact request is still answerable.
        let fresh = match (self.generate)(target) {
            Ok(v) => v,
            Err(_) if target > needed => (self.generate)(needed)?,
            Err(e) => return Err(e),
        };
        if fresh.len() < needed {
            return Err(SeqError::Budget {
                produced: fresh.len(),
                reason: format!("generator returned {} of {} terms", fresh.len(), needed),
            });
        }
        self.buffer = fresh;
        Ok(())
    }

    pub fn next_term(&mut self) -> Result<Term, SeqError> {
        self.fill(self.position + 1)?;
        let term = Term::new(self.next_index(), self.buffer[self.position].clone());
        self.position += 1;
        Ok(term)
    }

    /// The next `n` terms.
    pub fn take(&mut self, n: usize) -> Result<Vec<Term>, SeqError> {
        if n == 0 {
            return Ok(Vec::new());
        }
        self.fill(self.position + n)?;
        let start = self.position;
        self.position += n;
        Ok(index_terms(
            self.offset + start as i64,
            self.buffer[start..start + n].iter().cloned(),
        ))
    }

    pub fn rewind(&mut self) {
        self.position = 0;
    }
}

/// First `n` terms of a fresh stream for `a_number`.
pub fn take(a_number: &str, n: usize) -> Result<Vec<Term>, SeqError> {
    registry().stream(a_number)?.take(n)
}
