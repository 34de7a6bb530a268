//! The home prime of 8, printed one factorization per line.

use num_bigint::BigUint;
use seqforge::arith;
use seqforge::digits::{self, ClimbBudget};

fn main() {
    let out = digits::home_prime(&BigUint::from(8u32), &ClimbBudget::default());
    for x in &out.trajectory {
        let f = arith::factor(x).expect("values this small always factor");
        let parts: Vec<String> = f.primes_with_multiplicity().map(ToString::to_string).collect();
        println!("{x:>20} = {}", parts.join(" * "));
    }
    println!("{:?} after {} applications", out.status, out.steps);
}
