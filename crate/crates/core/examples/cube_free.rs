//! The lexicographically earliest infinite cube-free binary word, found by
//! backtracking with a lookahead, next to the Thue-Morse word.

use seqforge::lex;

fn show(word: &[u8]) -> String {
    word.iter().map(|b| char::from(b'0' + b)).collect()
}

fn main() {
    let r = lex::cubefree_earliest(80, 60).expect("search fits the default budget");
    println!("earliest cube-free: {}", show(&r.terms));
    println!("    unchanged under doubled lookahead for the first {} symbols", r.certified_len);
    let tm = lex::thue_morse(80);
    println!("Thue-Morse:         {}", show(&tm));
    println!("    cube-free: {}", lex::is_cubefree(&tm));
}
