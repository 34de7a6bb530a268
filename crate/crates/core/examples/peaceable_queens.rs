//! Peaceable queens: exact optima for small boards and the threshold
//! construction for large ones.

use std::time::Duration;

use seqforge::queens;

fn main() {
    for n in 1..=7 {
        let r = queens::solve_exact(n, Duration::from_secs(60));
        println!("n={n}: m={} optimal={}", r.m, r.optimal);
    }
    let best = queens::solve_exact(5, Duration::from_secs(60));
    print!("{}", queens::render_ascii(&best.witness));
    for n in [20, 48, 100] {
        let p = queens::jubin_construction(n);
        println!("construction n={n}: m={} (7n^2/48 = {}), verifies: {}", p.m(), queens::lower_bound(n as u64), queens::verify(&p));
    }
}
