//! Finite-prefix evidence for permutation claims: duplicates, coverage and
//! the cycle structure of the partial map `n -> a(n)`.

use std::collections::{HashMap, HashSet};

use num_traits::ToPrimitive;

use super::LexError;
use crate::seq::Term;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationReport {
    /// First value seen twice, in order of appearance.
    pub duplicate: Option<u64>,
    /// Largest `m` with `{1, ..., m}` all present.
    pub covered_through: u64,
    /// Smallest positive integer absent.
    pub missing_min: u64,
}

pub fn permutation_check(values: &[u64]) -> PermutationReport {
    let mut seen = HashSet::with_capacity(values.len());
    let mut duplicate = None;
    for &v in values {
        if !seen.insert(v) && duplicate.is_none() {
            duplicate = Some(v);
        }
    }
    let mut m = 1;
    while seen.contains(&m) {
        m += 1;
    }
    PermutationReport { duplicate, covered_through: m - 1, missing_min: m }
}

/// Same as [`permutation_check`] on indexed terms; non-positive or
/// oversized values count as absent from the positive range.
pub fn permutation_check_terms(terms: &[Term]) -> PermutationReport {
    let values: Vec<u64> = terms.iter().filter_map(|t| t.value.to_u64()).collect();
    permutation_check(&values)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleStructure {
    /// Cycles lying entirely inside the prefix, each starting at its least
    /// element; sorted by that element.
    pub cycles: Vec<Vec<i64>>,
    /// Maximal chains `x -> a(x) -> ...` that leave the prefix, each starting
    /// at an index that is not the image of any index in the prefix.
    pub open_orbits: Vec<Vec<i64>>,
}

impl CycleStructure {
    pub fn fixed_points(&self) -> impl Iterator<Item = i64> + '_ {
        self.cycles.iter().filter(|c| c.len() == 1).map(|c| c[0])
    }
}

/// Cycles and open orbits of `n -> a(n)` restricted to the prefix.
pub fn cycle_structure(terms: &[Term]) -> Result<CycleStructure, LexError> {
    let mut map: HashMap<i64, i64> = HashMap::with_capacity(terms.len());
    let mut images = HashSet::with_capacity(terms.len());
    for t in terms {
        let v = t.value.to_i64().ok_or(LexError::ValueRange(t.index))?;
        if !images.insert(v) {
            return Err(LexError::Duplicate(v));
        }
        map.insert(t.index, v);
    }
    let mut out = CycleStructure::default();
    let mut visited = HashSet::with_capacity(terms.len());

    // Chains start at domain elements with no preimage in the domain.
    for t in terms {
        if images.contains(&t.index) {
            continue;
        }
        let mut chain = Vec::new();
        let mut x = t.index;
        while let Some(&y) = map.get(&x) {
            visited.insert(x);
            chain.push(x);
            x = y;
        }
        out.open_orbits.push(chain);
    }
    // Everything else lies on a closed cycle.
    for t in terms {
        if visited.contains(&t.index) {
            continue;
        }
        let mut cycle = vec![t.index];
        visited.insert(t.index);
        let mut x = map[&t.index];
        while x != t.index {
            visited.insert(x);
            cycle.push(x);
            x = map[&x];
        }
        let start = cycle.iter().enumerate().min_by_key(|(_, v)| **v).unwrap().0;
        cycle.rotate_left(start);
        out.cycles.push(cycle);
    }
    out.cycles.sort();
    Ok(out)
}
