use std::collections::HashMap;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use super::{apply, MapKind};
use crate::arith::{self, FactorBudget, FactorError};

/// Limits for one climb.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClimbBudget {
    /// Maximum number of map applications.
    pub max_steps: usize,
    /// Give up once a value has more decimal digits than this.
    pub digit_cap: usize,
    pub factor: FactorBudget,
}

impl Default for ClimbBudget {
    fn default() -> Self {
        Self { max_steps: 500, digit_cap: 1000, factor: FactorBudget::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClimbStatus {
    ReachedPrime,
    /// `f(x) = x` for a value that is not prime. The values 0 and 1, which
    /// only the power-train map can reach, are reported here as well.
    FixedComposite,
    Cycle,
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClimbOutcome {
    pub status: ClimbStatus,
    /// The prime reached, the fixed point, the first repeated value of a
    /// cycle, or the last value computed before giving up.
    pub terminal: BigUint,
    /// Map applications that produced a new value. A fixed point detected
    /// on the first application therefore reports 0.
    pub steps: usize,
    pub cycle_len: Option<usize>,
    /// Composite cofactor the factorizer could not split, if that is why
    /// the climb stopped.
    pub stall: Option<BigUint>,
    /// Every value visited, starting with `n` itself.
    pub trajectory: Vec<BigUint>,
}

impl ClimbOutcome {
    pub fn is_resolved(&self) -> bool {
        self.status != ClimbStatus::Unresolved
    }
}

/// Iterates `kind` from `n` until a prime, a fixed point, a repeated value,
/// or a budget limit.
pub fn climb(n: &BigUint, kind: MapKind, budget: &ClimbBudget) -> ClimbOutcome {
    let mut trajectory = vec![n.clone()];
    let mut seen: HashMap<BigUint, usize> = HashMap::from([(n.clone(), 0)]);
    let mut x = n.clone();
    let outcome = |status, terminal, trajectory: Vec<BigUint>, cycle_len, stall| ClimbOutcome {
        status,
        terminal,
        steps: trajectory.len() - 1,
        cycle_len,
        stall,
        trajectory,
    };
    loop {
        if *n > BigUint::one() || kind == MapKind::PowerTrain {
            if x > BigUint::one() && arith::is_prime_with_rounds(&x, budget.factor.prp_rounds).is_prime_like() {
                return outcome(ClimbStatus::ReachedPrime, x, trajectory, None, None);
            }
        } else {
            // F(1) = 1 by convention for the factoring maps.
            return outcome(ClimbStatus::ReachedPrime, x, trajectory, None, None);
        }
        if trajectory.len() > budget.max_steps || arith::digit_len(&x, 10) > budget.digit_cap {
            return outcome(ClimbStatus::Unresolved, x, trajectory, None, None);
        }
        let y = match apply(kind, &x, &budget.factor) {
            Ok(y) => y,
            Err(FactorError::Unfactored { cofactor, .. }) => {
                return outcome(ClimbStatus::Unresolved, x, trajectory, None, Some(cofactor));
            }
            Err(FactorError::TooSmall(_)) => {
                // Only reachable for 0 or 1 under a factoring map.
                return outcome(ClimbStatus::FixedComposite, x, trajectory, None, None);
            }
        };
        if y == x {
            return outcome(ClimbStatus::FixedComposite, x, trajectory, None, None);
        }
        if let Some(&j) = seen.get(&y) {
            let len = trajectory.len() - j;
            trajectory.push(y.clone());
            return outcome(ClimbStatus::Cycle, y, trajectory, Some(len), None);
        }
        seen.insert(y.clone(), trajectory.len());
        trajectory.push(y.clone());
        x = y;
    }
}

/// Climb under the home-prime map. Each composite step strictly increases
/// the value, so fixed composites and cycles cannot occur; this is checked.
pub fn home_prime(n: &BigUint, budget: &ClimbBudget) -> ClimbOutcome {
    let out = climb(n, MapKind::HomePrime, budget);
    assert!(out.trajectory.windows(2).all(|w| w[1] > w[0]), "home-prime trajectory must increase");
    assert!(matches!(out.status, ClimbStatus::ReachedPrime | ClimbStatus::Unresolved));
    out
}

/// One entry of an `F` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FTerm {
    /// The prime reached (or 1 for `n = 1`).
    Value(BigUint),
    /// Provably never prime: a composite fixed point or a cycle was reached.
    NeverPrime { status: ClimbStatus, terminal: BigUint },
    /// The budget ran out; not the same as never prime.
    Unresolved { last: BigUint, stall: Option<BigUint> },
}

impl FTerm {
    fn from_outcome(o: ClimbOutcome) -> Self {
        match o.status {
            ClimbStatus::ReachedPrime => FTerm::Value(o.terminal),
            ClimbStatus::FixedComposite | ClimbStatus::Cycle => {
                FTerm::NeverPrime { status: o.status, terminal: o.terminal }
            }
            ClimbStatus::Unresolved => FTerm::Unresolved { last: o.terminal, stall: o.stall },
        }
    }

    /// The value as the OEIS prints it: the prime, or -1 when never prime.
    pub fn oeis_value(&self) -> Option<num_bigint::BigInt> {
        match self {
            FTerm::Value(v) => Some(v.clone().into()),
            FTerm::NeverPrime { .. } => Some((-1).into()),
            FTerm::Unresolved { .. } => None,
        }
    }
}

/// `F(1), ..., F(n_max)` for `kind`. The climbs are independent and run in
/// parallel; the result is ordered by `n`.
pub fn f_sequence(kind: MapKind, n_max: u64, budget: &ClimbBudget) -> Vec<FTerm> {
    f_terms(kind, 1..=n_max, budget)
}

/// `F(n)` for every `n` in `range`, in parallel, ordered by `n`.
pub fn f_terms(kind: MapKind, range: RangeInclusive<u64>, budget: &ClimbBudget) -> Vec<FTerm> {
    range
        .into_par_iter()
        .map(|n| FTerm::from_outcome(climb(&BigUint::from(n), kind, budget)))
        .collect()
}
