//! End-to-end acceptance checks. Each criterion runs in turn and prints one
//! `PASS`/`FAIL` line with its wall time; the test fails if any criterion
//! does. Run with `--nocapture` to see the report.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;

use seqforge::arith::{self, PrimeStatus};
use seqforge::coord::{self, CoordError};
use seqforge::digits::{self, ClimbBudget, ClimbStatus, ConcatKind, MapKind};
use seqforge::grid;
use seqforge::lex;
use seqforge::queens::{self, Placement};
use seqforge::seq::{self, Term};
use seqforge::tag::{self, TagBudget, TagRules, TagStatus, TagWord};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn parse_big(s: &str) -> BigUint {
    s.parse().expect("decimal literal")
}

fn strings(terms: &[Term]) -> Vec<String> {
    terms.iter().map(|t| t.value.to_string()).collect()
}

fn take(a: &str, n: usize) -> Result<Vec<String>, String> {
    seq::take(a, n).map(|t| strings(&t)).map_err(|e| format!("{a}: {e}"))
}

fn expect_prefix(a: &str, expected: &[u64]) -> Result<(), String> {
    let got = take(a, expected.len())?;
    let want: Vec<String> = expected.iter().map(u64::to_string).collect();
    ensure!(got == want, "{a}: got {got:?}, expected {want:?}");
    Ok(())
}

// ---------------------------------------------------------------- golden data

const EKG: [u64; 22] = [1, 2, 4, 6, 3, 9, 12, 8, 10, 5, 15, 18, 14, 7, 21, 24, 16, 20, 22, 11, 33, 27];
const YELLOWSTONE: [u64; 22] = [1, 2, 3, 4, 9, 8, 15, 14, 5, 6, 25, 12, 35, 16, 7, 10, 21, 20, 27, 22, 39, 11];
const A127202: [u64; 22] = [1, 2, 4, 3, 6, 5, 10, 7, 14, 8, 9, 12, 11, 22, 13, 26, 15, 18, 16, 17, 34, 19];
const A280864: [u64; 22] = [1, 2, 4, 3, 6, 8, 5, 10, 12, 9, 7, 14, 16, 11, 22, 18, 15, 20, 24, 21, 28, 26];
const A055265: [u64; 22] = [1, 2, 3, 4, 7, 6, 5, 8, 9, 10, 13, 16, 15, 14, 17, 12, 11, 18, 19, 22, 21, 20];
const CUBE_FREE: [u64; 26] = [0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1];

const NIM_WINDOW: [[u32; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 5, 4, 7, 6],
    [2, 3, 0, 1, 6, 7, 4, 5],
    [3, 2, 1, 0, 7, 6, 5, 4],
    [4, 5, 6, 7, 0, 1, 2, 3],
    [5, 4, 7, 6, 1, 0, 3, 2],
    [6, 7, 4, 5, 2, 3, 0, 1],
    [7, 6, 5, 4, 3, 2, 1, 0],
];

const SUDOKU_WINDOW: [[u32; 8]; 8] = [
    [1, 3, 2, 6, 4, 5, 10, 11],
    [2, 4, 5, 1, 8, 3, 6, 12],
    [3, 1, 6, 2, 9, 7, 5, 4],
    [4, 2, 3, 5, 1, 8, 9, 7],
    [5, 7, 1, 4, 2, 6, 3, 15],
    [6, 8, 9, 7, 5, 10, 4, 16],
    [7, 5, 4, 3, 6, 14, 8, 9],
    [8, 6, 7, 9, 11, 4, 13, 3],
];

const MAIN_DIAGONAL: [u64; 25] = [1, 4, 6, 5, 2, 10, 8, 3, 7, 9, 16, 26, 29, 22, 20, 23, 28, 38, 12, 32, 46, 13, 14, 11, 15];

const F10: [u64; 18] = [1, 2, 3, 22, 5, 23, 7, 23, 32, 25, 11, 223, 13, 27, 35, 24, 17, 232];
const BIG_F10: [u64; 19] = [1, 2, 3, 211, 5, 23, 7, 23, 2213, 2213, 11, 223, 13, 311, 1129, 233, 17, 17137, 19];
const F2: [u64; 18] = [1, 2, 3, 10, 5, 11, 7, 11, 14, 21, 11, 43, 13, 23, 29, 20, 17, 46];
const BIG_F2: [u64; 18] = [1, 2, 3, 31, 5, 11, 7, 11, 23, 31, 11, 43, 13, 23, 29, 251, 17, 23];

const CAIRO_TRIVALENT: [u64; 18] = [1, 3, 8, 12, 15, 20, 25, 28, 31, 36, 41, 44, 47, 52, 57, 60, 63, 68];
const SQUARE_GRID: [u64; 7] = [1, 4, 8, 12, 16, 20, 24];
const AMMANN_BEENKER: [u64; 16] = [1, 8, 16, 32, 32, 40, 48, 72, 64, 96, 80, 104, 112, 112, 128, 152];

const HOME_PRIME_8: [&str; 14] = [
    "8",
    "222",
    "2337",
    "31941",
    "33371313",
    "311123771",
    "7149317941",
    "22931219729",
    "112084656339",
    "3347911118189",
    "11613496501723",
    "97130517917327",
    "531832651281459",
    "3331113965338635107",
];

// ------------------------------------------------------------------ criteria

fn printed_prefixes() -> Outcome {
    let start = Instant::now();
    for (a, want) in [("A064413", &EKG), ("A098550", &YELLOWSTONE), ("A127202", &A127202), ("A280864", &A280864), ("A055265", &A055265)] {
        expect_prefix(a, want)?;
    }
    expect_prefix("A282317", &CUBE_FREE)?;

    let nim = grid::nim_sum_table(8, 8);
    let sudoku = grid::sudoku_array(8, 8);
    for m in 0..8 {
        ensure!(nim.row(m) == NIM_WINDOW[m], "nim-sum row {m}: {:?}", nim.row(m));
        ensure!(sudoku.row(m) == SUDOKU_WINDOW[m], "sudoku row {m}: {:?}", sudoku.row(m));
    }
    expect_prefix("A274318", &MAIN_DIAGONAL)?;

    let budget = ClimbBudget::default();
    // f is defined for n >= 2; a(1) = 1 comes from the registered prefixes below.
    for (n, &want) in (1u64..).zip(&F10).skip(1) {
        ensure!(digits::f_factor_concat(&big(n), 10, &budget.factor).map_err(|e| e.to_string())? == big(want), "f({n})");
    }
    for (n, &want) in (1u64..).zip(&F2).skip(1) {
        ensure!(digits::f_factor_concat(&big(n), 2, &budget.factor).map_err(|e| e.to_string())? == big(want), "f_2({n})");
    }
    expect_prefix("A080670", &F10)?;
    expect_prefix("A230625", &F2)?;
    expect_prefix("A195264", &BIG_F10)?;
    expect_prefix("A230627", &BIG_F2)?;
    expect_prefix("A288847", &[217, 255, 446, 558])?;
    expect_prefix("A296368", &CAIRO_TRIVALENT)?;
    expect_prefix("A008574", &SQUARE_GRID)?;

    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}, limit 10 s");
    Ok("22-term lex listings, cube-free word, both 8x8 windows, main diagonal, f/F tables in bases 10 and 2, A288847 flags, coordination prefixes".into())
}

fn fixed_points_and_cycles() -> Outcome {
    let budget = ClimbBudget::default();
    let d0 = big(13532385396179);
    ensure!(digits::f_factor_concat(&d0, 10, &budget.factor).map_err(|e| e.to_string())? == d0, "f(D0) != D0");
    let out = digits::climb(&d0, MapKind::FactorConcat10, &budget);
    ensure!(out.status == ClimbStatus::FixedComposite && out.steps == 0 && out.terminal == d0, "climb(D0) = {:?}", out.status);

    let seal = big(255987);
    ensure!(digits::f_factor_concat(&seal, 2, &budget.factor).map_err(|e| e.to_string())? == seal, "f_2(255987) != 255987");

    for (a, b) in [(1007u64, 1269u64), (1503, 3751)] {
        for start in [a, b] {
            let out = digits::climb(&big(start), MapKind::FactorConcat2, &budget);
            ensure!(out.status == ClimbStatus::Cycle && out.cycle_len == Some(2), "climb_2({start}) = {:?} {:?}", out.status, out.cycle_len);
            let on_cycle: BTreeSet<BigUint> = out.trajectory.iter().cloned().collect();
            ensure!(on_cycle == BTreeSet::from([big(a), big(b)]), "cycle through {start} visits {on_cycle:?}");
        }
    }

    let fixed = digits::power_train_fixed_points(10_000);
    let want: Vec<u64> = (1..=9).chain([2592]).collect();
    ensure!(fixed == want, "power-train fixed points up to 10^4: {fixed:?}");
    let big_fixed = parse_big("24547284284866560000000000");
    ensure!(big_fixed.to_string().len() == 26, "expected a 26-digit value");
    ensure!(digits::power_train(&big_fixed) == big_fixed, "26-digit power-train fixed point does not verify");
    Ok("f(D0) = D0, f_2(255987) = 255987, both base-2 2-cycles, power-train fixed points".into())
}

fn home_prime_of_eight() -> Outcome {
    let start = Instant::now();
    let out = digits::home_prime(&big(8), &ClimbBudget::default());
    ensure!(out.status == ClimbStatus::ReachedPrime, "status {:?}", out.status);
    ensure!(out.terminal == parse_big("3331113965338635107"), "reached {}", out.terminal);
    let chain: Vec<String> = out.trajectory.iter().map(ToString::to_string).collect();
    ensure!(chain == HOME_PRIME_8, "trajectory {chain:?}");
    // The printed chain has 14 arrows, but each group after an arrow is
    // the factorization of the value before it, and the last arrow only
    // rewrites 3 3 3 11 139 653 3863 5107 as one number. That is 13 map
    // applications over 14 values, the convention under which 9 reaches
    // 2213 in 4 steps.
    ensure!(out.steps == 13 && chain.len() == 14, "steps {} over {} values", out.steps, chain.len());
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}, limit 60 s");
    Ok("3331113965338635107 after 13 applications over 14 values matching the printed chain; its 14th arrow only joins the final factorization into one number".into())
}

/// Independent oracle for tag trajectories: plain strings and a set of
/// every word seen.
fn oracle_distinct_words(start: &str) -> u64 {
    let mut seen = HashSet::new();
    let mut w = start.to_string();
    loop {
        if !seen.insert(w.clone()) {
            return seen.len() as u64;
        }
        if w.is_empty() {
            return seen.len() as u64;
        }
        let app = if w.starts_with('0') { "00" } else { "1101" };
        w.push_str(app);
        w = w[3.min(w.len())..].to_string();
    }
}

fn tag_system() -> Outcome {
    let rules = tag::post_rules();
    let budget = TagBudget::default();
    let s2 = tag::trajectory(&tag::sigma(2), &rules, &budget);
    ensure!(s2.status == TagStatus::Cycles && s2.words == 15 && s2.cycle_len == 6, "sigma_2: {s2:?}");
    let w = TagWord::binary("1000").unwrap();
    let d = tag::trajectory(&w, &rules, &budget);
    ensure!(d.status == TagStatus::Dies && d.words == 7, "1000: {d:?}");

    let mut rng = Lcg(0x5eed);
    let small = TagBudget { max_steps: 200_000, max_word_len: 4096 };
    for i in 0..10_000 {
        let len = 1 + (rng.next() % 64) as usize;
        let symbols: Vec<u8> = (0..len).map(|_| (rng.next() & 1) as u8).collect();
        let w = TagWord::from_symbols(2, &symbols);
        let plain = tag::trajectory(&w, &rules, &small);
        let fast = tag::accelerated_trajectory(&w, &rules, &small).map_err(|e| e.to_string())?;
        ensure!(plain == fast, "random word {i} ({len} symbols): plain {plain:?} vs accelerated {fast:?}");
    }

    let rows = tag::classify_sigma_range(60, &budget);
    let unresolved = rows.iter().filter(|r| r.outcome.status == TagStatus::Unresolved).count();
    let dies = rows.iter().filter(|r| r.dies()).count();
    let fraction = dies as f64 / rows.len() as f64;
    ensure!(unresolved == 0, "{unresolved} of sigma_1..sigma_60 unresolved");
    ensure!((fraction - 1.0 / 6.0).abs() <= 0.15, "die fraction {fraction:.3}");

    let mut a284116 = Vec::new();
    for n in 1..=16usize {
        let lib = tag::max_words_over_length(n, &budget).map_err(|e| e.to_string())?;
        let oracle = (0u32..1 << n).map(|bits| oracle_distinct_words(&format!("{bits:0n$b}"))).max().unwrap();
        ensure!(lib == oracle, "A284116({n}): library {lib}, oracle {oracle}");
        a284116.push(lib);
    }
    let registered = take("A284116", 8)?;
    ensure!(registered == a284116[..8].iter().map(u64::to_string).collect::<Vec<_>>(), "registry A284116 {registered:?}");

    checkpoint_resume_agrees()?;
    Ok(format!(
        "sigma_2 and 1000 as printed; 10^4 random words agree; {dies}/60 sigma_n die ({fraction:.3}); A284116(1..16) = {a284116:?} by two enumerations; resume matches"
    ))
}

/// A long run interrupted at several points and resumed from its
/// checkpoint file ends in exactly the same state as an uninterrupted run.
fn checkpoint_resume_agrees() -> Result<(), String> {
    let rules: TagRules = tag::post_rules();
    // sigma_110 lives for about 4.4 * 10^13 steps, far past this window.
    let start = tag::sigma(110);
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("sigma110.ck");
    let mut straight = tag::LongRun::new(&start, &rules);
    let full = straight.run(400_000, None).map_err(|e| e.to_string())?;
    let mut run = tag::LongRun::new(&start, &rules);
    for kill_at in [1_234u64, 77_777, 250_001] {
        run.run(kill_at, Some((&path, 1000))).map_err(|e| e.to_string())?;
        // Simulated kill: drop the in-memory state, resume from disk.
        run = tag::LongRun::load(&path, &rules).map_err(|e| e.to_string())?;
        ensure!(run.steps() <= kill_at && kill_at - run.steps() < 1000, "checkpoint at {} for kill at {kill_at}", run.steps());
    }
    let resumed = run.run(400_000, Some((&path, 1000))).map_err(|e| e.to_string())?;
    ensure!(resumed == full, "resumed {resumed:?} vs uninterrupted {full:?}");
    ensure!(run.word() == straight.word() && run.max_len() == straight.max_len(), "resumed state differs");
    Ok(())
}

fn peaceable_queens() -> Outcome {
    let start = Instant::now();
    for n in 1..=6usize {
        let r = queens::solve_exact(n, Duration::from_secs(600));
        ensure!(r.optimal, "n={n}: search did not complete");
        ensure!(r.m as u64 == queens::KNOWN_VALUES[n - 1], "n={n}: m={}", r.m);
        ensure!(queens::verify(&r.witness), "n={n}: witness rejected");
    }
    ensure!(start.elapsed() < Duration::from_secs(600), "exact solves took {:?}", start.elapsed());

    // A 5x5 witness in the style of the printed figure: four of each colour.
    let board = "W . W . .\n. . . . B\nW . W . .\n. . . . B\n. B . B .\n";
    let witness = queens::parse_ascii(board).map_err(|e| e.to_string())?;
    ensure!(witness.m() == 4 && queens::verify(&witness), "5x5 witness rejected");
    let clash = Placement::new(5, [(0, 0)], [(4, 4)]).map_err(|e| e.to_string())?;
    ensure!(!queens::verify(&clash), "diagonal clash accepted");

    for n in [16usize, 20, 24, 48] {
        let p = queens::jubin_construction(n);
        ensure!(queens::verify(&p), "construction for n={n} does not verify");
        ensure!(p.m() as u64 == 7 * (n as u64).pow(2) / 48, "construction for n={n} has m={}", p.m());
    }
    ensure!(queens::lower_bound(20) == 58, "lower_bound(20) = {}", queens::lower_bound(20));
    for n in 10..=20usize {
        let p = queens::jubin_construction(n);
        ensure!(queens::verify(&p) && p.m() as u64 >= queens::lower_bound(n as u64), "best found for n={n} is {}", p.m());
    }
    Ok("a(1..6) optimal, 5x5 witness verifies, construction meets 7n^2/48 at 16/20/24/48 and for 10..20".into())
}

fn coordination() -> Outcome {
    let cairo = coord::cairo_graph();
    for label in ["Q0", "Q1", "T00", "T01", "T10", "T11"] {
        let v = cairo.vertex(label).map_err(|e| e.to_string())?;
        let got = coord::coordination_sequence(&cairo, v, 40).map_err(|e| e.to_string())?.terms;
        let formula: fn(u64) -> u64 = if cairo.degree(v) == 4 { coord::tetravalent_formula } else { coord::trivalent_formula };
        let want: Vec<u64> = (0..=40).map(formula).collect();
        ensure!(got == want, "Cairo {label}: {got:?}");
    }
    let square = coord::coordination_sequence(&coord::square_grid(), 0, 100).map_err(|e| e.to_string())?.terms;
    ensure!(square.iter().enumerate().all(|(n, &a)| a == if n == 0 { 1 } else { 4 * n as u64 }), "square grid");

    let patch = coord::parse_patch(include_str!("../data/ammann_beenker_center.patch")).map_err(|e| e.to_string())?;
    let valid = patch.radius_valid();
    ensure!(valid >= 9, "patch radius {valid} is below 10 terms");
    let ab = coord::patch_coordination(&patch, valid.min(15)).map_err(|e| e.to_string())?.terms;
    ensure!(ab[..] == AMMANN_BEENKER[..ab.len()], "Ammann-Beenker: {ab:?}");
    ensure!(
        matches!(coord::patch_coordination(&patch, valid + 1), Err(CoordError::BeyondRadius { .. })),
        "distances past the valid radius must be refused"
    );
    Ok(format!("Cairo = closed forms to n=40 for all six vertices, square grid = 4n, Ammann-Beenker first {} terms", ab.len()))
}

fn primality_showcase() -> Outcome {
    let v = arith::is_prime(&parse_big("12345678910987654321"));
    ensure!(matches!(v.status, PrimeStatus::Prime | PrimeStatus::ProbablePrime), "12345678910987654321: {:?}", v.status);
    ensure!(digits::memorable_concat(10) == parse_big("12345678910987654321"), "memorable_concat(10)");
    let report = digits::search_first_prime(ConcatKind::Smarandache, 1..=1000, arith::prime::DEFAULT_PRP_ROUNDS);
    ensure!(report.primes.is_empty(), "Smarandache primes found: {:?}", report.primes);
    ensure!(report.excluded.len() + report.composite.len() == 1000, "{} of 1000 values classified", report.excluded.len() + report.composite.len());
    Ok(format!(
        "12345678910987654321 is {:?}; no Smarandache prime for n <= 1000 ({} sieved out, {} failed the probable-prime test)",
        v.status,
        report.excluded.len(),
        report.composite.len()
    ))
}

// ------------------------------------------------------------ property suites

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Greedy minimality: every term is the least unused positive integer that
/// the rule admits at its position, judged by a naive rule check.
fn greedy_minimal(name: &str, terms: &[u64], seeds: usize, admits: impl Fn(&[u64], u64) -> bool) -> Result<(), String> {
    let mut used = HashSet::new();
    for (i, &t) in terms.iter().enumerate() {
        if i >= seeds {
            let prefix = &terms[..i];
            let least = (1..).find(|&x| !used.contains(&x) && admits(prefix, x)).unwrap();
            ensure!(least == t, "{name}: term {} is {t}, the least admissible is {least}", i + 1);
        }
        ensure!(used.insert(t), "{name}: {t} repeats");
    }
    Ok(())
}

fn is_prime_naive(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_divisors(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| n.is_multiple_of(p) && is_prime_naive(p)).collect()
}

fn shells_by_materialized_bfs(g: &coord::PeriodicGraph, base: usize, n_max: usize) -> Vec<u64> {
    let mut adj: HashMap<usize, Vec<(usize, [i64; 3])>> = HashMap::new();
    for e in g.edges() {
        adj.entry(e.from).or_default().push((e.to, e.offset));
    }
    let mut dist = HashMap::from([(([0i64; 3], base), 0usize)]);
    let mut queue = VecDeque::from([([0i64; 3], base)]);
    let mut shells = vec![0u64; n_max + 1];
    while let Some((c, v)) = queue.pop_front() {
        let d = dist[&(c, v)];
        shells[d] += 1;
        if d == n_max {
            continue;
        }
        for &(w, o) in adj.get(&v).into_iter().flatten() {
            let key = ([c[0] + o[0], c[1] + o[1], c[2] + o[2]], w);
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(key) {
                e.insert(d + 1);
                queue.push_back(key);
            }
        }
    }
    shells
}

fn property_suites() -> Outcome {
    let n = 500;
    greedy_minimal("A064413", &lex::ekg(n), 2, |p, x| gcd(p[p.len() - 1], x) > 1)?;
    greedy_minimal("A098550", &lex::yellowstone(n), 3, |p, x| {
        gcd(p[p.len() - 1], x) == 1 && gcd(p[p.len() - 2], x) > 1
    })?;
    greedy_minimal("A127202", &lex::quet(n), 2, |p, x| {
        gcd(p[p.len() - 1], x) != gcd(p[p.len() - 2], p[p.len() - 1])
    })?;
    greedy_minimal("A280864", &lex::sigrist(n), 1, |p, x| {
        let prev = p[p.len() - 1];
        let before = if p.len() >= 2 { p[p.len() - 2] } else { 1 };
        prime_divisors(prev).iter().all(|q| (before % q == 0) != (x % q == 0))
    })?;
    greedy_minimal("A055265", &lex::bottomley(n), 1, |p, x| is_prime_naive(p[p.len() - 1] + x))?;

    for len in [1usize, 26, 100, 300] {
        let terms = take("A282317", len)?;
        let word: Vec<u8> = terms.iter().map(|s| s.parse().unwrap()).collect();
        ensure!(lex::is_cubefree(&word), "A282317 prefix of length {len} has a cube");
        for end in 1..=word.len() {
            for l in 1..=end / 3 {
                let w = &word[end - 3 * l..end];
                ensure!(!(w[..l] == w[l..2 * l] && w[l..2 * l] == w[2 * l..]), "cube of period {l} ending at {end}");
            }
        }
    }

    let sudoku = grid::sudoku_array(60, 60);
    grid::audit_quarter_plane(&sudoku).map_err(|v| format!("sudoku array: {v:?}"))?;
    let spiral = grid::spiral_array(30);
    grid::audit_spiral(&spiral).map_err(|v| format!("spiral array: {v:?}"))?;

    let mut rng = Lcg(42);
    for _ in 0..300 {
        let n = big(rng.next() >> (rng.next() % 40));
        if n < big(2) {
            continue;
        }
        let f = arith::factor(&n).map_err(|e| e.to_string())?;
        ensure!(f.product() == n, "factors of {n} multiply to {}", f.product());
        ensure!(f.factors().iter().all(|(p, _)| arith::is_prime(p).is_prime_like()), "non-prime factor of {n}");
    }
    let sieve = arith::primes_up_to(100_000);
    let naive: Vec<u32> = (2..=100_000u32).filter(|&k| arith::is_prime_u64(k as u64)).collect();
    ensure!(sieve == naive, "sieve and Miller-Rabin disagree below 10^5");

    let cairo = coord::cairo_graph();
    for v in 0..cairo.labels().len() {
        let lazy = coord::coordination_sequence(&cairo, v, 25).map_err(|e| e.to_string())?.terms;
        ensure!(lazy == shells_by_materialized_bfs(&cairo, v, 25), "Cairo shells differ at vertex {v}");
    }
    let square = coord::coordination_sequence(&coord::square_grid(), 0, 30).map_err(|e| e.to_string())?.terms;
    let mut ball = 0;
    for (r, &shell) in square.iter().enumerate() {
        ball += shell;
        let r = r as u64;
        ensure!(ball == 2 * r * r + 2 * r + 1, "square-grid ball of radius {r} has {ball} vertices");
    }

    for a in ["A064413", "A003987", "A195264", "A303981"] {
        let terms = seq::take(a, 16).map_err(|e| e.to_string())?;
        let text = seq::render_bfile(&terms);
        let back = seq::parse_bfile(text.as_bytes()).map_err(|e| e.to_string())?;
        ensure!(back == terms, "{a}: b-file round trip");
    }
    Ok("greedy minimality (n <= 500, five sequences), cube-freeness, both array audits, factor products and sieve, BFS shells, b-file round trip".into())
}

/// Small deterministic generator so the checks do not depend on seeding.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 1
    }
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("printed prefixes", printed_prefixes),
        ("fixed points and cycles", fixed_points_and_cycles),
        ("home prime of 8", home_prime_of_eight),
        ("tag system", tag_system),
        ("peaceable queens", peaceable_queens),
        ("coordination sequences", coordination),
        ("primality showcase", primality_showcase),
        ("property suites", property_suites),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS {name} ({secs:.1} s): {detail}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name} ({secs:.1} s): {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
