//! The `seqforge` command line. [`run`] takes the arguments and output
//! streams explicitly and returns the exit code, so the binary is a thin
//! shell around it and tests can drive it directly.
//!
//! Exit codes: 0 success (or a resolved answer), 1 a comparison mismatch or
//! a placement that fails verification, 2 an input or usage error, 3 an
//! answer left unresolved by the budget.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::coord;
use crate::digits::{self, ClimbBudget, ClimbStatus, MapKind};
use crate::plot::{self, PlotOptions, PlotStyle};
use crate::queens;
use crate::seq::{self, index_terms, registry, Term};
use crate::tag::{self, LongRun, LongRunStatus, TagBudget, TagOutcome, TagStatus, TagWord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_UNRESOLVED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "seqforge", version, about = "Generate, classify and cross-check integer sequences")]
struct Cli {
    /// Worker threads for parallel jobs (0 = all cores).
    #[arg(long, global = true, env = "SEQFORGE_THREADS", default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the first N terms of a registered sequence.
    Gen(GenArgs),
    /// Compare a registered sequence against a b-file.
    Compare(CompareArgs),
    /// Write an SVG scatter or pin plot.
    Plot(PlotArgs),
    /// Run Post's tag system.
    Tag(TagArgs),
    /// Peaceable queens: solve, construct or verify.
    Queens(QueensArgs),
    /// Coordination sequences.
    Coord(CoordArgs),
    /// Iterate a digit map until it reaches a prime, a fixed point or a cycle.
    Climb(ClimbArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TermFormat {
    /// Values separated by spaces.
    Plain,
    /// `index value` lines.
    Bfile,
}

#[derive(Args, Debug)]
struct GenArgs {
    a_number: String,
    n: usize,
    #[arg(long, value_enum, default_value_t = TermFormat::Plain)]
    format: TermFormat,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CompareArgs {
    a_number: String,
    bfile: PathBuf,
    /// Compare at most this many terms.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StyleArg {
    Scatter,
    Pin,
}

#[derive(Args, Debug)]
struct PlotArgs {
    /// A registered A-number, or `sigma-steps` for the tag-system step
    /// counts of (100)^n.
    target: String,
    n: usize,
    #[arg(long, value_enum, default_value_t = StyleArg::Scatter)]
    style: StyleArg,
    /// Logarithmic y axis.
    #[arg(long)]
    log: bool,
    #[arg(long)]
    out: PathBuf,
    /// Step budget per word for `sigma-steps`.
    #[arg(long, default_value_t = TagBudget::default().max_steps)]
    max_steps: u64,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("start").required(true).args(["word", "sigma", "sigma_range"])))]
struct TagArgs {
    /// Initial binary word, e.g. 1000.
    #[arg(long)]
    word: Option<String>,
    /// Start from (100)^N.
    #[arg(long)]
    sigma: Option<usize>,
    /// Classify (100)^n for n = 1..=N.
    #[arg(long)]
    sigma_range: Option<usize>,
    #[arg(long, default_value_t = TagBudget::default().max_steps)]
    max_steps: u64,
    #[arg(long, default_value_t = TagBudget::default().max_word_len)]
    max_len: usize,
    /// Long run watching only for death, checkpointed to this file.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Steps between checkpoints.
    #[arg(long, default_value_t = 100_000_000)]
    every: u64,
    /// Continue from an existing checkpoint file.
    #[arg(long)]
    resume: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BoardFormat {
    Ascii,
    Svg,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("job").required(true).args(["n", "verify"])))]
struct QueensArgs {
    /// Board size.
    #[arg(long)]
    n: Option<usize>,
    /// Check a placement file (rows of W, B and .) instead of solving.
    #[arg(long)]
    verify: Option<PathBuf>,
    /// Seconds allowed for the exact search.
    #[arg(long, default_value_t = 600)]
    budget_secs: u64,
    /// Use the threshold construction instead of exact search.
    #[arg(long)]
    construct: bool,
    #[arg(long, value_enum, default_value_t = BoardFormat::Ascii)]
    format: BoardFormat,
    /// Write the board here instead of printing it.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphArg {
    Square,
    Cairo,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["graph", "patch"])))]
struct CoordArgs {
    #[arg(long, value_enum)]
    graph: Option<GraphArg>,
    /// Base vertex label of the built-in graph (default: its first vertex).
    #[arg(long)]
    vertex: Option<String>,
    /// Patch file with `v`, `e`, `base` and `radius` lines.
    #[arg(long)]
    patch: Option<PathBuf>,
    /// Largest distance.
    #[arg(long)]
    n: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapArg {
    /// Primes and exponents concatenated in decimal.
    B10,
    /// The same in binary.
    B2,
    /// Prime factors with multiplicity (home primes).
    Home,
    /// Digit power train.
    Power,
}

#[derive(Args, Debug)]
struct ClimbArgs {
    #[arg(long)]
    n: BigUint,
    #[arg(long, value_enum, default_value_t = MapArg::B10)]
    map: MapArg,
    #[arg(long, default_value_t = ClimbBudget::default().max_steps)]
    max_steps: usize,
    #[arg(long, default_value_t = ClimbBudget::default().digit_cap)]
    digit_cap: usize,
    /// Print every value visited.
    #[arg(long)]
    trace: bool,
}

/// Exit code of a finished command, or the message for a failed one.
type Outcome = Result<i32, String>;

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start {} threads: {e}", cli.threads);
            return EXIT_ERROR;
        }
    };
    match pool.install(|| dispatch(cli.command, out)) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut (dyn Write + Send)) -> Outcome {
    match command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Compare(a) => cmd_compare(a, out),
        Command::Plot(a) => cmd_plot(a, out),
        Command::Tag(a) => cmd_tag(a, out),
        Command::Queens(a) => cmd_queens(a, out),
        Command::Coord(a) => cmd_coord(a, out),
        Command::Climb(a) => cmd_climb(a, out),
    }
}

fn io_err(path: &Path) -> impl Fn(std::io::Error) -> String + '_ {
    move |e| format!("{}: {e}", path.display())
}

fn emit(text: &str, path: Option<&Path>, out: &mut (dyn Write + Send)) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(io_err(p)),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn cmd_gen(a: GenArgs, out: &mut (dyn Write + Send)) -> Outcome {
    let terms = seq::take(&a.a_number, a.n).map_err(|e| e.to_string())?;
    let text = match a.format {
        TermFormat::Plain => {
            let vals: Vec<String> = terms.iter().map(|t| t.value.to_string()).collect();
            format!("{}\n", vals.join(" "))
        }
        TermFormat::Bfile => seq::render_bfile(&terms),
    };
    emit(&text, a.out.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn cmd_compare(a: CompareArgs, out: &mut (dyn Write + Send)) -> Outcome {
    let entry = registry().lookup(&a.a_number).map_err(|e| e.to_string())?;
    let text = std::fs::read(&a.bfile).map_err(io_err(&a.bfile))?;
    let reference = seq::parse_bfile(&text).map_err(|e| format!("{}: {e}", a.bfile.display()))?;
    // Enough terms to cover the reference's indexes, capped by --n.
    let wanted = reference.last().map_or(0, |t| (t.index - entry.offset + 1).max(0) as usize);
    let wanted = a.n.map_or(wanted, |n| wanted.min(n));
    let actual = registry().stream(&a.a_number).and_then(|mut s| s.take(wanted)).map_err(|e| e.to_string())?;
    let report = seq::compare(&actual, &reference).map_err(|e| e.to_string())?;
    match &report.first_mismatch {
        None => {
            writeln!(out, "match: {} terms agree", report.match_len).map_err(|e| e.to_string())?;
            Ok(EXIT_OK)
        }
        Some(m) => {
            writeln!(out, "mismatch at index {}: expected {}, computed {} ({} terms agreed before it)", m.index, m.expected, m.actual, report.match_len)
                .map_err(|e| e.to_string())?;
            Ok(EXIT_MISMATCH)
        }
    }
}

fn cmd_plot(a: PlotArgs, out: &mut (dyn Write + Send)) -> Outcome {
    let style = match a.style {
        StyleArg::Scatter => PlotStyle::Scatter,
        StyleArg::Pin => PlotStyle::Pin,
    };
    let mut opts = PlotOptions { style, log_y: a.log, ..PlotOptions::default() };
    let mut code = EXIT_OK;
    let terms: Vec<Term> = if a.target == "sigma-steps" {
        let budget = TagBudget { max_steps: a.max_steps, ..TagBudget::default() };
        let rows = tag::classify_sigma_range(a.n, &budget);
        opts.title = format!("tag-system steps for (100)^n, n <= {}", a.n);
        let open: Vec<usize> = rows.iter().filter(|r| r.outcome.status == TagStatus::Unresolved).map(|r| r.n).collect();
        if !open.is_empty() {
            writeln!(out, "unresolved (drawn as lower bounds): {open:?}").map_err(|e| e.to_string())?;
            code = EXIT_UNRESOLVED;
        }
        opts.lower_bounds = open.iter().map(|&n| n as i64).collect::<BTreeSet<_>>();
        index_terms(1, rows.iter().map(|r| r.outcome.steps))
    } else {
        let mut stream = registry().stream(&a.target).map_err(|e| e.to_string())?;
        opts.title = stream.id().to_string();
        match stream.take(a.n) {
            Ok(t) => t,
            Err(e) => {
                writeln!(out, "refusing a partial plot: {e}").map_err(|e| e.to_string())?;
                return Ok(EXIT_UNRESOLVED);
            }
        }
    };
    let svg = plot::render_svg(&terms, &opts).map_err(|e| e.to_string())?;
    emit(&svg, Some(&a.out), out)?;
    writeln!(out, "wrote {} points to {}", terms.len(), a.out.display()).map_err(|e| e.to_string())?;
    Ok(code)
}

/// One-line summary of a tag trajectory.
pub fn describe_tag(o: &TagOutcome) -> String {
    match o.status {
        TagStatus::Dies => format!("dies, {} words", o.words),
        TagStatus::Cycles => format!("cycles, {} words before a cycle of length {}", o.words, o.cycle_len),
        TagStatus::Unresolved => format!("unresolved after {} steps (longest word {})", o.steps, o.max_length),
    }
}

fn cmd_tag(a: TagArgs, out: &mut (dyn Write + Send)) -> Outcome {
    let budget = TagBudget { max_steps: a.max_steps, max_word_len: a.max_len };
    let rules = tag::post_rules();
    let w = |e: std::io::Error| e.to_string();
    if let Some(n_max) = a.sigma_range {
        let rows = tag::classify_sigma_range(n_max, &budget);
        let mut open = 0;
        for r in &rows {
            writeln!(out, "{} {}", r.n, describe_tag(&r.outcome)).map_err(w)?;
            open += (r.outcome.status == TagStatus::Unresolved) as usize;
        }
        let dies = rows.iter().filter(|r| r.dies()).count();
        let resolved = rows.len() - open;
        writeln!(out, "die {dies} of {resolved} resolved ({open} unresolved)").map_err(w)?;
        return Ok(if open > 0 { EXIT_UNRESOLVED } else { EXIT_OK });
    }
    let start = match (&a.word, a.sigma) {
        (Some(text), _) => TagWord::binary(text).ok_or_else(|| format!("{text:?} is not a binary word"))?,
        (None, Some(n)) => tag::sigma(n),
        (None, None) => unreachable!("clap requires a start"),
    };
    if let Some(path) = &a.checkpoint {
        let mut job = if a.resume && path.exists() { LongRun::load(path, &rules).map_err(|e| e.to_string())? } else { LongRun::new(&start, &rules) };
        let status = job.run(a.max_steps, Some((path, a.every))).map_err(|e| e.to_string())?;
        return match status {
            LongRunStatus::Died { steps } => {
                writeln!(out, "dies, {} words (longest {})", steps + 1, job.max_len()).map_err(w)?;
                Ok(EXIT_OK)
            }
            LongRunStatus::Paused { steps, len } => {
                writeln!(out, "still alive after {steps} steps (length {len}); checkpoint in {}", path.display()).map_err(w)?;
                Ok(EXIT_UNRESOLVED)
            }
        };
    }
    let o = tag::accelerated_trajectory(&start, &rules, &budget).unwrap_or_else(|_| tag::trajectory(&start, &rules, &budget));
    writeln!(out, "{}", describe_tag(&o)).map_err(w)?;
    Ok(if o.status == TagStatus::Unresolved { EXIT_UNRESOLVED } else { EXIT_OK })
}

fn cmd_queens(a: QueensArgs, out: &mut (dyn Write + Send)) -> Outcome {
    let w = |e: std::io::Error| e.to_string();
    if let Some(path) = &a.verify {
        let text = std::fs::read_to_string(path).map_err(io_err(path))?;
        let p = queens::parse_ascii(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        return if queens::verify(&p) {
            writeln!(out, "peaceable, m={} ({} white, {} black)", p.m(), p.white().len(), p.black().len()).map_err(w)?;
            Ok(EXIT_OK)
        } else {
            writeln!(out, "not peaceable").map_err(w)?;
            Ok(EXIT_MISMATCH)
        };
    }
    let n = a.n.expect("clap requires n or verify");
    let (placement, line, code) = if a.construct || n > queens::EXACT_MAX_N {
        let p = queens::jubin_construction(n);
        let line = format!("m={}, construction (lower bound {})", p.m(), queens::lower_bound(n as u64));
        (p, line, if a.construct { EXIT_OK } else { EXIT_UNRESOLVED })
    } else {
        let r = queens::solve_exact(n, Duration::from_secs(a.budget_secs));
        if r.optimal {
            (r.witness, format!("m={}, optimal", r.m), EXIT_OK)
        } else {
            (r.witness, format!("m={}, best found (search stopped by the time budget)", r.m), EXIT_UNRESOLVED)
        }
    };
    writeln!(out, "{line}").map_err(w)?;
    let board = match a.format {
        BoardFormat::Ascii => queens::render_ascii(&placement),
        BoardFormat::Svg => queens::render_svg(&placement),
    };
    emit(&board, a.out.as_deref(), out)?;
    Ok(code)
}

fn cmd_coord(a: CoordArgs, out: &mut (dyn Write + Send)) -> Outcome {
    let s = if let Some(path) = &a.patch {
        let p = coord::load_patch(path).map_err(|e| e.to_string())?;
        coord::patch_coordination(&p, a.n).map_err(|e| e.to_string())?
    } else {
        let g = match a.graph.expect("clap requires graph or patch") {
            GraphArg::Square => coord::square_grid(),
            GraphArg::Cairo => coord::cairo_graph(),
        };
        let base = match &a.vertex {
            Some(label) => g.vertex(label).map_err(|e| e.to_string())?,
            None => 0,
        };
        coord::coordination_sequence(&g, base, a.n).map_err(|e| e.to_string())?
    };
    let terms: Vec<String> = s.terms.iter().map(ToString::to_string).collect();
    writeln!(out, "{}", terms.join(", ")).map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}

/// One-line summary of a climb.
pub fn describe_climb(o: &digits::ClimbOutcome) -> String {
    let s = o.steps;
    match o.status {
        ClimbStatus::ReachedPrime => format!("prime {} after {s} steps", o.terminal),
        ClimbStatus::FixedComposite => format!("fixed point {} after {s} steps (never prime)", o.terminal),
        ClimbStatus::Cycle => {
            format!("cycle of length {} through {} after {s} steps (never prime)", o.cycle_len.unwrap_or(0), o.terminal)
        }
        ClimbStatus::Unresolved => {
            let digits = o.terminal.to_string().len();
            match &o.stall {
                Some(c) => format!("unresolved after {s} steps: could not factor a {}-digit composite", c.to_string().len()),
                None => format!("unresolved after {s} steps at a {digits}-digit value"),
            }
        }
    }
}

fn cmd_climb(a: ClimbArgs, out: &mut (dyn Write + Send)) -> Outcome {
    let kind = match a.map {
        MapArg::B10 => MapKind::FactorConcat10,
        MapArg::B2 => MapKind::FactorConcat2,
        MapArg::Home => MapKind::HomePrime,
        MapArg::Power => MapKind::PowerTrain,
    };
    let budget = ClimbBudget { max_steps: a.max_steps, digit_cap: a.digit_cap, ..ClimbBudget::default() };
    let o = digits::climb(&a.n, kind, &budget);
    let w = |e: std::io::Error| e.to_string();
    if a.trace {
        for v in &o.trajectory {
            writeln!(out, "{v}").map_err(w)?;
        }
    }
    writeln!(out, "{}", describe_climb(&o)).map_err(w)?;
    Ok(if o.is_resolved() { EXIT_OK } else { EXIT_UNRESOLVED })
}

/// Entry point for the binary.
pub fn main_from_env() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["seqforge"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_formats() {
        assert_eq!(call(&["gen", "A064413", "5"]), (0, "1 2 4 6 3\n".into(), String::new()));
        assert_eq!(call(&["gen", "A003987", "6", "--format", "bfile"]).1, "0 0\n1 1\n2 1\n3 2\n4 0\n5 2\n");
        let (code, _, err) = call(&["gen", "A999999", "5"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("A999999"));
        assert_eq!(call(&["gen", "A064413"]).0, EXIT_ERROR);
    }

    #[test]
    fn module_commands() {
        assert_eq!(call(&["tag", "--word", "1000"]), (0, "dies, 7 words\n".into(), String::new()));
        assert_eq!(call(&["tag", "--sigma", "2"]).1, "cycles, 15 words before a cycle of length 6\n");
        assert_eq!(call(&["tag", "--word", "100100", "--max-steps", "10"]).0, EXIT_UNRESOLVED);
        assert!(call(&["queens", "--n", "5"]).1.starts_with("m=4, optimal\n"));
        assert_eq!(call(&["climb", "--n", "9", "--map", "b10"]).1, "prime 2213 after 4 steps\n");
        assert_eq!(call(&["climb", "--n", "1007", "--map", "b2"]).0, EXIT_OK);
        assert_eq!(call(&["climb", "--n", "49", "--map", "home", "--max-steps", "3"]).0, EXIT_UNRESOLVED);
        assert_eq!(call(&["coord", "--graph", "square", "--n", "6"]).1, "1, 4, 8, 12, 16, 20, 24\n");
        assert_eq!(call(&["coord", "--graph", "cairo", "--vertex", "Q1", "--n", "3"]).1, "1, 4, 8, 12\n");
    }

    #[test]
    fn threads_flag_and_env() {
        assert_eq!(call(&["--threads", "2", "gen", "A064413", "3"]).1, "1 2 4\n");
        assert_eq!(call(&["gen", "A064413", "3", "--threads", "1"]).1, "1 2 4\n");
    }
}
