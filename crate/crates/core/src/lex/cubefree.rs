//! The lexicographically earliest infinite cube-free binary word, by
//! depth-first backtracking with an incremental cube test.

use super::LexError;

/// True if `word` ends with a cube `XXX`. Only factors ending at the last
/// symbol are examined, so appending one symbol to a cube-free word and
/// calling this keeps the whole word cube-free.
pub fn has_cube_suffix(word: &[u8]) -> bool {
    let len = word.len();
    for p in 1..=len / 3 {
        let c = &word[len - p..];
        let b = &word[len - 2 * p..len - p];
        if c == b && b == &word[len - 3 * p..len - 2 * p] {
            return true;
        }
    }
    false
}

/// Full scanner: no factor `XXX` anywhere in `word`.
pub fn is_cubefree(word: &[u8]) -> bool {
    (1..=word.len()).all(|end| !has_cube_suffix(&word[..end]))
}

/// Thue–Morse word `t(k)` = parity of the binary weight of `k`.
pub fn thue_morse(n: usize) -> Vec<u8> {
    (0..n as u64).map(|k| (k.count_ones() & 1) as u8).collect()
}

/// Backtracking state: the current word and, for each position, whether the
/// symbol there is a tentative 0 that can still be flipped to 1.
#[derive(Debug, Clone, Default)]
pub struct CubeFreeSearchState {
    pub word: Vec<u8>,
    pub decision_stack: Vec<usize>,
    pub nodes: u64,
}

impl CubeFreeSearchState {
    /// Extends to length `target`, always trying 0 before 1. Returns false
    /// if the node budget runs out first.
    fn extend(&mut self, target: usize, max_nodes: u64) -> bool {
        while self.word.len() < target {
            if self.nodes >= max_nodes {
                return false;
            }
            self.nodes += 1;
            self.word.push(0);
            if !has_cube_suffix(&self.word) {
                self.decision_stack.push(self.word.len() - 1);
                continue;
            }
            self.word.pop();
            self.word.push(1);
            if !has_cube_suffix(&self.word) {
                continue;
            }
            // Dead end: flip the most recent tentative 0.
            self.word.pop();
            loop {
                let Some(pos) = self.decision_stack.pop() else {
                    unreachable!("infinite cube-free binary words exist");
                };
                self.word.truncate(pos);
                self.word.push(1);
                if !has_cube_suffix(&self.word) {
                    break;
                }
                self.word.pop();
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeFree {
    pub terms: Vec<u8>,
    /// Leading terms unchanged when the lookahead is doubled.
    pub certified_len: usize,
}

/// Default search budget in visited nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

pub fn cubefree_earliest(n: usize, certify_depth: usize) -> Result<CubeFree, LexError> {
    cubefree_earliest_with_budget(n, certify_depth, DEFAULT_NODE_BUDGET)
}

/// The least length-`n` cube-free word that extends by `certify_depth`
/// further symbols. It is the length-`n` prefix of the least cube-free word
/// of length `n + certify_depth`. The search is repeated with twice the
/// lookahead; the common prefix of both answers is reported as certified.
/// Whether deeper lookahead could still change it is not decided here.
pub fn cubefree_earliest_with_budget(
    n: usize,
    certify_depth: usize,
    max_nodes: u64,
) -> Result<CubeFree, LexError> {
    let mut state = CubeFreeSearchState::default();
    if !state.extend(n + certify_depth, max_nodes) {
        return Err(LexError::SearchBudget { reached: state.word.len(), nodes: state.nodes });
    }
    let terms = state.word[..n].to_vec();
    let mut deeper = state;
    if !deeper.extend(n + 2 * certify_depth, max_nodes) {
        return Err(LexError::SearchBudget { reached: deeper.word.len(), nodes: deeper.nodes });
    }
    let certified_len = terms
        .iter()
        .zip(&deeper.word)
        .take_while(|(a, b)| a == b)
        .count();
    Ok(CubeFree { terms, certified_len })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_prefix() {
        let r = cubefree_earliest(26, 40).unwrap();
        assert_eq!(
            r.terms,
            [0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1]
        );
        assert_eq!(r.certified_len, 26);
    }

    #[test]
    fn small_cubes() {
        assert!(has_cube_suffix(&[0, 0, 0]));
        assert!(!is_cubefree(&[1, 1, 1]));
        assert!(!is_cubefree(&[0, 1, 0, 1, 0, 1]));
        assert!(is_cubefree(&[]));
        assert!(is_cubefree(&[0, 0, 1, 0, 0]));
    }

    #[test]
    fn thue_morse_is_cubefree() {
        let t = thue_morse(26);
        assert_eq!(
            t,
            [0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1]
        );
        assert!(is_cubefree(&thue_morse(2000)));
    }

    #[test]
    fn budget_failure_reports_progress() {
        match cubefree_earliest_with_budget(500, 10, 100) {
            Err(LexError::SearchBudget { nodes, .. }) => assert_eq!(nodes, 100),
            other => panic!("expected budget failure, got {other:?}"),
        }
    }
}
