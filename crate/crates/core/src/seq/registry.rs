use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};

use crate::arith::FactorBudget;
use crate::digits::{self, ClimbBudget, ClimbStatus, FTerm, MapKind};
use crate::grid::{self, QuarterPlaneArray};
use crate::lex::{self, ErdosKind};
use crate::tag::{self, TagBudget, TagStatus};
use crate::{coord, queens};

use super::{is_a_number, PrefixFn, SeqError, SequenceId, TermStream};

/// A registered sequence: identity, offset of its first term, and a
/// prefix-stable generator.
#[derive(Clone)]
pub struct Entry {
    pub id: SequenceId,
    pub offset: i64,
    pub generate: PrefixFn,
}

pub struct Registry {
    entries: Vec<Entry>,
}

impl Registry {
    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn lookup(&self, a_number: &str) -> Result<&Entry, SeqError> {
        if !is_a_number(a_number) {
            return Err(SeqError::BadId(a_number.to_string()));
        }
        self.entries
            .iter()
            .find(|e| e.id.a_number() == a_number)
            .ok_or_else(|| SeqError::Unknown(a_number.to_string()))
    }

    pub fn stream(&self, a_number: &str) -> Result<TermStream, SeqError> {
        let e = self.lookup(a_number)?;
        Ok(TermStream::new(e.id.clone(), e.offset, e.generate))
    }
}

fn entry(a_number: &str, name: &str, offset: i64, generate: PrefixFn) -> Entry {
    Entry { id: SequenceId::new(a_number, name).expect("well-formed id"), offset, generate }
}

fn big<T: Into<BigInt>>(values: impl IntoIterator<Item = T>) -> Vec<BigInt> {
    values.into_iter().map(Into::into).collect()
}

fn unresolved(index: i64, reason: impl Into<String>) -> SeqError {
    SeqError::Unresolved { index, reason: reason.into() }
}

fn beyond(produced: usize, reason: &str) -> SeqError {
    SeqError::Budget { produced, reason: reason.to_string() }
}

/// Reads `n` terms of a square array by antidiagonals from a window just
/// large enough to hold them.
fn antidiagonal_prefix(n: usize, array: fn(usize, usize) -> QuarterPlaneArray) -> Vec<BigInt> {
    if n == 0 {
        return Vec::new();
    }
    let mut side = 0;
    while side * (side + 1) / 2 < n {
        side += 1;
    }
    big(array(side, side).antidiagonals().into_iter().take(n))
}

fn spiral_prefix(n: usize) -> Vec<BigInt> {
    let mut radius = 0;
    while (2 * radius + 1) * (2 * radius + 1) < n {
        radius += 1;
    }
    let s = grid::spiral_array(radius);
    big(grid::spiral_order(radius).into_iter().take(n).map(|(x, y)| s.get(x, y).expect("inside the square")))
}

/// The first `n` terms of a spoke: the ray from `origin` in `dir`.
fn spoke_prefix(n: usize, dir: grid::Direction, origin: (i64, i64)) -> Result<Vec<BigInt>, SeqError> {
    let radius = n + origin.0.unsigned_abs().max(origin.1.unsigned_abs()) as usize;
    let s = grid::spiral_array(radius);
    let line = grid::extract_line(&s, grid::LineKind::Spoke(dir), origin).map_err(|e| beyond(0, &e.to_string()))?;
    Ok(big(line.values.into_iter().take(n)))
}

fn cube_free_prefix(n: usize) -> Result<Vec<BigInt>, SeqError> {
    let r = lex::cubefree_earliest(n, n.max(40)).map_err(|e| beyond(0, &e.to_string()))?;
    if r.certified_len < n {
        return Err(unresolved(1 + r.certified_len as i64, "prefix not stable under doubled lookahead"));
    }
    Ok(big(r.terms))
}

/// `f(1) = 1`, then one application of the map for each `n >= 2`.
fn map_prefix(n: usize, kind: MapKind) -> Result<Vec<BigInt>, SeqError> {
    let budget = FactorBudget::default();
    (1..=n as u64)
        .map(|k| {
            if k == 1 {
                return Ok(BigInt::from(1));
            }
            digits::apply(kind, &BigUint::from(k), &budget).map(BigInt::from).map_err(|e| unresolved(k as i64, e.to_string()))
        })
        .collect()
}

fn f_prefix(n: usize, kind: MapKind) -> Result<Vec<BigInt>, SeqError> {
    digits::f_sequence(kind, n as u64, &ClimbBudget::default())
        .into_iter()
        .enumerate()
        .map(|(i, t)| t.oeis_value().ok_or_else(|| unresolved(i as i64 + 1, "climb did not finish within the default budget")))
        .collect()
}

/// Starting values whose base-2 climb never reaches a prime. Every flagged
/// value must be proven (a composite fixed point or a cycle); a budget stop
/// is reported as unresolved rather than guessed.
fn never_prime_base2(n: usize) -> Result<Vec<BigInt>, SeqError> {
    let budget = ClimbBudget::default();
    let mut out = Vec::new();
    let mut lo = 1u64;
    while out.len() < n {
        let hi = lo + 255;
        let block = digits::f_terms(MapKind::FactorConcat2, lo..=hi, &budget);
        for (k, t) in (lo..=hi).zip(&block) {
            match t {
                FTerm::Value(_) => {}
                FTerm::NeverPrime { .. } => out.push(BigInt::from(k)),
                FTerm::Unresolved { .. } => return Err(unresolved(out.len() as i64 + 1, format!("climb from {k} did not finish"))),
            }
            if out.len() == n {
                break;
            }
        }
        lo = hi + 1;
    }
    Ok(out)
}

fn home_primes(n: usize) -> Result<Vec<BigInt>, SeqError> {
    let budget = ClimbBudget::default();
    (1..=n as u64)
        .map(|k| {
            if k == 1 {
                return Ok(BigInt::from(1));
            }
            let o = digits::home_prime(&BigUint::from(k), &budget);
            match o.status {
                ClimbStatus::ReachedPrime => Ok(o.terminal.into()),
                _ => Err(unresolved(k as i64, "home-prime climb did not finish within the default budget")),
            }
        })
        .collect()
}

fn trajectory_of_49(n: usize) -> Result<Vec<BigInt>, SeqError> {
    let budget = ClimbBudget { max_steps: n.saturating_sub(1), ..ClimbBudget::default() };
    let o = digits::climb(&BigUint::from(49u32), MapKind::HomePrime, &budget);
    if o.trajectory.len() < n {
        return Err(beyond(o.trajectory.len(), "factoring stalled"));
    }
    Ok(big(o.trajectory.into_iter().take(n)))
}

fn known_fixed_points(n: usize) -> Result<Vec<BigInt>, SeqError> {
    let known = digits::known_power_train_fixed_points();
    if n > known.len() {
        return Err(beyond(known.len(), "no further fixed points are known"));
    }
    Ok(big(known.into_iter().take(n)))
}

fn sigma_rows(n: usize) -> Result<Vec<tag::SigmaRow>, SeqError> {
    let rows = tag::classify_sigma_range(n, &TagBudget::default());
    match rows.iter().find(|r| r.outcome.status == TagStatus::Unresolved) {
        Some(r) => Err(unresolved(r.n as i64, "trajectory unresolved within the default budget")),
        None => Ok(rows),
    }
}

fn sigma_deaths(n: usize) -> Result<Vec<BigInt>, SeqError> {
    let budget = TagBudget::default();
    let rules = tag::post_rules();
    let mut out = Vec::new();
    let mut k = 0;
    while out.len() < n {
        k += 1;
        let o = tag::accelerated_trajectory(&tag::sigma(k), &rules, &budget).expect("Post's rules are supported");
        match o.status {
            TagStatus::Dies => out.push(BigInt::from(k)),
            TagStatus::Cycles => {}
            TagStatus::Unresolved => return Err(unresolved(out.len() as i64 + 1, format!("sigma({k}) unresolved"))),
        }
    }
    Ok(out)
}

fn max_words(n: usize) -> Result<Vec<BigInt>, SeqError> {
    (1..=n)
        .map(|len| tag::max_words_over_length(len, &TagBudget::default()).map(BigInt::from).map_err(|e| unresolved(len as i64, e.to_string())))
        .collect()
}

fn peaceable(n: usize) -> Result<Vec<BigInt>, SeqError> {
    if n > queens::KNOWN_VALUES.len() {
        return Err(beyond(queens::KNOWN_VALUES.len(), "further values are not stored"));
    }
    Ok(big(queens::KNOWN_VALUES.iter().copied().take(n)))
}

fn shells(n: usize, graph: coord::PeriodicGraph, base: &str) -> Result<Vec<BigInt>, SeqError> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let v = graph.vertex(base).expect("built-in vertex");
    let s = coord::coordination_sequence(&graph, v, n - 1).map_err(|e| beyond(0, &e.to_string()))?;
    Ok(big(s.terms))
}

fn ammann_beenker(n: usize) -> Result<Vec<BigInt>, SeqError> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let patch = coord::parse_patch(include_str!("../../data/ammann_beenker_center.patch")).expect("bundled patch parses");
    let s = coord::patch_coordination(&patch, n - 1).map_err(|_| beyond(patch.radius_valid() + 1, "beyond the bundled patch"))?;
    Ok(big(s.terms))
}

/// The process-wide registry, built once on first use.
pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        use grid::Direction;
        let entries = vec![
            entry("A064413", "EKG sequence", 1, |n| Ok(big(lex::ekg(n)))),
            entry("A098550", "Yellowstone permutation", 1, |n| Ok(big(lex::yellowstone(n)))),
            entry("A127202", "gcd(a(n-1),a(n)) != gcd(a(n-2),a(n-1))", 1, |n| Ok(big(lex::quet(n)))),
            entry("A280864", "prime divides exactly one neighbour", 1, |n| Ok(big(lex::sigrist(n)))),
            entry("A055265", "consecutive sums are prime", 1, |n| Ok(big(lex::bottomley(n)))),
            entry("A036552", "smallest missing number, then its double", 1, |n| Ok(big(lex::erdos_variant(ErdosKind::A036552, n)))),
            entry("A064736", "smallest missing number, then the product of neighbours", 1, |n| {
                Ok(big(lex::erdos_variant(ErdosKind::A064736, n)))
            }),
            entry("A282317", "lexicographically earliest cube-free binary word", 1, cube_free_prefix),
            entry("A010060", "Thue-Morse sequence", 0, |n| Ok(big(lex::thue_morse(n)))),
            entry("A003987", "Nim-sum table by antidiagonals", 0, |n| Ok(antidiagonal_prefix(n, grid::nim_sum_table))),
            entry("A269526", "Sudoku-like array by antidiagonals", 1, |n| Ok(antidiagonal_prefix(n, grid::sudoku_array))),
            entry("A274318", "main diagonal of the Sudoku-like array", 1, |n| Ok(big(grid::sudoku_main_diagonal(n)))),
            entry("A274640", "spiral array in spiral order", 0, |n| Ok(spiral_prefix(n))),
            entry("A274924", "spiral array, spoke east from the origin", 0, |n| spoke_prefix(n, Direction::E, (0, 0))),
            entry("A274928", "spiral array, spoke west next to the origin", 0, |n| spoke_prefix(n, Direction::W, (-1, 0))),
            entry("A004481", "four-line Grundy values by antidiagonals", 0, |n| Ok(antidiagonal_prefix(n, grid::four_line_grundy))),
            entry("A080670", "prime factors and exponents concatenated", 1, |n| map_prefix(n, MapKind::FactorConcat10)),
            entry("A195264", "prime reached by iterating A080670", 1, |n| f_prefix(n, MapKind::FactorConcat10)),
            entry("A230625", "A080670 in base 2", 1, |n| map_prefix(n, MapKind::FactorConcat2)),
            entry("A230627", "prime reached by iterating A230625", 1, |n| f_prefix(n, MapKind::FactorConcat2)),
            entry("A288847", "numbers whose A230625 iteration never reaches a prime", 1, never_prime_base2),
            entry("A037276", "prime factors concatenated with multiplicity", 1, |n| map_prefix(n, MapKind::HomePrime)),
            entry("A037274", "home primes", 1, home_primes),
            entry("A056938", "home-prime trajectory of 49", 0, trajectory_of_49),
            entry("A133500", "power train map", 0, |n| Ok(big((0..n as u64).map(digits::power_train_u64)))),
            entry("A135385", "fixed points of the power train map", 1, known_fixed_points),
            entry("A173426", "1 up to n and back down to 1 concatenated", 1, |n| Ok(big((1..=n as u64).map(digits::memorable_concat)))),
            entry("A007908", "1 up to n concatenated", 1, |n| Ok(big((1..=n as u64).map(digits::smarandache)))),
            entry("A284116", "most words in a tag trajectory from a word of length n", 1, max_words),
            entry("A284119", "words in the tag trajectory of (100)^n before cycling or dying", 1, |n| {
                Ok(big(sigma_rows(n)?.iter().map(|r| r.words())))
            }),
            entry("A284121", "cycle length of the tag trajectory of (100)^n, 1 if it dies", 1, |n| {
                Ok(big(sigma_rows(n)?.iter().map(|r| r.cycle_len())))
            }),
            entry("A291792", "n such that the tag trajectory of (100)^n dies", 1, sigma_deaths),
            entry("A250000", "peaceable queens", 1, peaceable),
            entry("A008574", "coordination sequence of the square grid", 0, |n| shells(n, coord::square_grid(), "v")),
            entry("A296368", "coordination sequence of a trivalent Cairo vertex", 0, |n| shells(n, coord::cairo_graph(), "T00")),
            entry("A303981", "coordination sequence of the Ammann-Beenker centre", 0, ammann_beenker),
        ];
        let mut seen = std::collections::HashSet::new();
        for e in &entries {
            assert!(seen.insert(e.id.a_number().to_string()), "duplicate registry id {}", e.id);
        }
        Registry { entries }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prefix(a: &str, n: usize) -> Vec<String> {
        let e = registry().lookup(a).unwrap();
        (e.generate)(n).unwrap().iter().map(ToString::to_string).collect()
    }

    fn check(a: &str, expected: &[&str]) {
        assert_eq!(prefix(a, expected.len()), expected, "{a}");
    }

    #[test]
    fn every_entry_is_prefix_stable() {
        for e in registry().entries() {
            let a = e.id.a_number();
            let (short, long) = match a {
                "A288847" => (2, 4),
                "A135385" => (5, 11),
                "A250000" => (5, 13),
                "A284116" => (4, 8),
                _ => (5, 10),
            };
            let s = (e.generate)(short).unwrap();
            let l = (e.generate)(long).unwrap();
            assert_eq!(s.len(), short, "{a}");
            assert_eq!(l.len(), long, "{a}");
            assert_eq!(&l[..short], &s[..], "{a}");
            assert!((e.generate)(0).unwrap().is_empty(), "{a}");
        }
    }

    #[test]
    fn one_dimensional_prefixes() {
        check("A036552", &["1", "2", "4", "3", "6", "5", "10", "7", "14"]);
        check("A010060", &["0", "1", "1", "0", "1", "0", "0", "1"]);
        check("A282317", &["0", "0", "1", "0", "0", "1", "0", "1", "0", "0", "1", "0", "0", "1", "1", "0"]);
    }

    #[test]
    fn array_prefixes() {
        check("A003987", &["0", "1", "1", "2", "0", "2", "3", "3", "3", "3"]);
        check("A269526", &["1", "2", "3", "3", "4", "2", "4", "1", "5", "6", "5", "2", "6", "1", "4"]);
        check("A274924", &["1", "2", "4", "8", "11", "12", "16", "9", "19", "24", "22"]);
        check("A274928", &["3", "5", "6", "7", "15", "10", "17", "13", "25", "14"]);
        assert_eq!(prefix("A274640", 1), ["1"]);
    }

    #[test]
    fn digit_map_prefixes() {
        check("A080670", &["1", "2", "3", "22", "5", "23", "7", "23", "32", "25", "11", "223"]);
        let f2 = prefix("A230625", 12);
        assert_eq!((f2[8].as_str(), f2[11].as_str()), ("14", "43"));
        check("A195264", &["1", "2", "3", "211", "5", "23", "7", "23", "2213", "2213", "11", "223", "13", "311", "1129", "233", "17", "17137", "19"]);
        check("A230627", &["1", "2", "3", "31", "5", "11", "7", "11", "23", "31", "11", "43", "13", "23", "29", "251", "17", "23"]);
        check("A288847", &["217", "255", "446", "558"]);
        check("A037276", &["1", "2", "3", "22", "5", "23", "7", "222", "33", "25"]);
        check("A037274", &["1", "2", "3", "211", "5", "23", "7", "3331113965338635107", "311", "773"]);
        check("A056938", &["49", "77", "711", "3379"]);
        check("A133500", &["0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "1", "1", "1"]);
        check("A173426", &["1", "121", "12321"]);
        check("A007908", &["1", "12", "123"]);
        assert_eq!(prefix("A135385", 11)[9..], ["2592", "24547284284866560000000000"]);
    }

    #[test]
    fn tag_queens_and_tiling_prefixes() {
        check("A284119", &["4", "15", "10", "25", "412", "47", "2128", "853", "372", "2805"]);
        check("A284121", &["2", "6", "6", "6", "1", "10", "28", "6", "10", "6"]);
        check("A284116", &["4", "7", "6", "7", "22", "23", "24", "25"]);
        assert_eq!(prefix("A291792", 1), ["5"]);
        check("A250000", &["0", "0", "1", "2", "4", "5", "7"]);
        check("A008574", &["1", "4", "8", "12", "16", "20", "24"]);
        check("A296368", &["1", "3", "8", "12", "15", "20", "25", "28", "31", "36", "41", "44", "47", "52", "57", "60", "63", "68"]);
        check("A303981", &["1", "8", "16", "32", "32", "40", "48", "72", "64", "96", "80", "104", "112", "112", "128", "152"]);
    }

    #[test]
    fn out_of_range_requests_fail_cleanly() {
        for (a, n) in [("A303981", 17), ("A250000", 14), ("A135385", 12)] {
            let e = registry().lookup(a).unwrap();
            assert!(matches!((e.generate)(n), Err(SeqError::Budget { .. })), "{a}");
        }
        let e = registry().lookup("A195264").unwrap();
        assert!(matches!((e.generate)(20), Err(SeqError::Unresolved { index: 20, .. })));
    }
}
