//! Lists every registered sequence with its first terms, and compares one
//! against a b-file held in memory.

use seqforge::seq::{self, registry};

fn main() {
    for e in registry().entries() {
        let n = if e.id.a_number() == "A288847" { 4 } else { 8 };
        match (e.generate)(n) {
            Ok(values) => {
                let shown: Vec<String> = values.iter().map(ToString::to_string).collect();
                println!("{} {:<40} {}", e.id.a_number(), e.id.name(), shown.join(", "));
            }
            Err(err) => println!("{} {:<40} ({err})", e.id.a_number(), e.id.name()),
        }
    }
    let reference = seq::parse_bfile(b"1 1\n2 2\n3 4\n4 6\n5 3\n6 9\n").unwrap();
    let computed = seq::take("A064413", reference.len()).unwrap();
    println!("{:?}", seq::compare(&computed, &reference).unwrap());
}
