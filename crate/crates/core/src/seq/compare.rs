use std::fmt;

use num_bigint::BigInt;

use super::{SeqError, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    pub expected: BigInt,
    pub actual: BigInt,
}

/// Which side ran out first once the overlap was compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exhausted {
    Actual,
    Reference,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    /// Length of the agreeing prefix of the overlap.
    pub match_len: usize,
    pub first_mismatch: Option<Mismatch>,
    pub exhausted: Exhausted,
}

impl ComparisonReport {
    pub fn is_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_mismatch {
            None => write!(f, "match: {} terms agree", self.match_len),
            Some(m) => write!(
                f,
                "mismatch at index {}: expected {}, got {} ({} terms agree before it)",
                m.index, m.expected, m.actual, self.match_len
            ),
        }
    }
}

fn range(terms: &[Term]) -> Option<(i64, i64)> {
    Some((terms.first()?.index, terms.last()?.index))
}

/// Compares two consecutive-index term lists over their common index range.
pub fn compare(actual: &[Term], reference: &[Term]) -> Result<ComparisonReport, SeqError> {
    let (ra, rr) = (range(actual), range(reference));
    let alignment = || SeqError::Alignment { actual: ra, reference: rr };
    let ((a0, a1), (r0, r1)) = (ra.ok_or_else(alignment)?, rr.ok_or_else(alignment)?);
    let start = a0.max(r0);
    let end = a1.min(r1);
    if start > end {
        return Err(alignment());
    }
    let a = &actual[(start - a0) as usize..=(end - a0) as usize];
    let r = &reference[(start - r0) as usize..=(end - r0) as usize];
    let mut match_len = 0;
    let mut first_mismatch = None;
    for (x, y) in a.iter().zip(r) {
        if x.value != y.value {
            first_mismatch = Some(Mismatch {
                index: x.index,
                expected: y.value.clone(),
                actual: x.value.clone(),
            });
            break;
        }
        match_len += 1;
    }
    let exhausted = match a1.cmp(&r1) {
        std::cmp::Ordering::Less => Exhausted::Actual,
        std::cmp::Ordering::Greater => Exhausted::Reference,
        std::cmp::Ordering::Equal => Exhausted::Both,
    };
    Ok(ComparisonReport { match_len, first_mismatch, exhausted })
}
