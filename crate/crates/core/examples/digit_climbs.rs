//! Iterating digit maps: prime-factor concatenation in bases 10 and 2,
//! their fixed points and cycles, and power trains.

use num_bigint::BigUint;
use seqforge::digits::{self, ClimbBudget, FTerm, MapKind};

fn main() {
    let budget = ClimbBudget::default();
    for (n, kind) in [(9u64, MapKind::FactorConcat10), (13532385396179, MapKind::FactorConcat10), (1007, MapKind::FactorConcat2), (255987, MapKind::FactorConcat2)] {
        let out = digits::climb(&BigUint::from(n), kind, &budget);
        println!("{n} under {kind:?}: {:?} at {} after {} steps", out.status, out.terminal, out.steps);
    }
    let f2 = digits::f_sequence(MapKind::FactorConcat2, 600, &budget);
    let never: Vec<usize> = f2.iter().enumerate().filter(|(_, t)| matches!(t, FTerm::NeverPrime { .. })).map(|(i, _)| i + 1).collect();
    println!("n <= 600 whose base-2 climb never reaches a prime: {never:?}");
    println!("power-train fixed points below 10^4: {:?}", digits::power_train_fixed_points(10_000));
    for x in digits::known_power_train_fixed_points() {
        println!("  {x} -> {}", digits::power_train(&x));
    }
}
