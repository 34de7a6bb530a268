//! One-dimensional lexicographically earliest sequences: greedy permutations
//! of the positive integers and the earliest cube-free binary word.

mod cubefree;
mod greedy;
mod perm;

pub use cubefree::{
    cubefree_earliest, cubefree_earliest_with_budget, has_cube_suffix, is_cubefree, thue_morse,
    CubeFree, CubeFreeSearchState, DEFAULT_NODE_BUDGET,
};
pub use greedy::{
    bottomley, ekg, erdos_variant, quet, sigrist, yellowstone, ErdosKind, GreedyState, Spf,
};
pub use perm::{
    cycle_structure, permutation_check, permutation_check_terms, CycleStructure,
    PermutationReport,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LexError {
    #[error("search budget exhausted after {nodes} nodes (word length reached {reached})")]
    SearchBudget { reached: usize, nodes: u64 },
    #[error("value {0} occurs twice; the map is not injective")]
    Duplicate(i64),
    #[error("term {0} does not fit in 64 bits")]
    ValueRange(i64),
}
