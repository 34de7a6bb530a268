//! The EKG and Yellowstone permutations and three relatives, with the
//! finite-prefix permutation evidence for each.

use seqforge::lex;

fn main() {
    let n = 10_000;
    let families: [(&str, fn(usize) -> Vec<u64>); 5] = [
        ("A064413 EKG", lex::ekg),
        ("A098550 Yellowstone", lex::yellowstone),
        ("A127202", lex::quet),
        ("A280864", lex::sigrist),
        ("A055265", lex::bottomley),
    ];
    for (name, generate) in families {
        let terms = generate(n);
        let report = lex::permutation_check(&terms);
        let head: Vec<String> = terms.iter().take(12).map(u64::to_string).collect();
        println!("{name}: {} ...", head.join(", "));
        println!("    first {n} terms cover 1..={}, smallest missing {}, repeats: {:?}", report.covered_through, report.missing_min, report.duplicate);
    }
}
