//! Command-line front end for `omega-mono`.
//!
//! Every subcommand writes to caller-supplied sinks and returns its exit
//! code, so the binary is a thin wrapper and tests can run commands in
//! process.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use omega_mono::asymptotics::{
    check_bul1, fit_from_values, theoretical_bound,
    QuasilinearFit, DEFAULT_BOUND_BUDGET,
};
use omega_mono::ed2::{bullet_structure_ed2, ed2_bound, omega_closed_form};
use omega_mono::omega::{
    bullets, bullets_exhaustive, bullets_with_support, cover_map, omega, omega_bruteforce,
    omega_value, OmegaRecord,
};
use omega_mono::{BoundError, FitError, MonoidError, NumericalMonoid, OmegaError, Rational};
use rayon::prelude::*;
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_MONOID: i32 = 2;
pub const EXIT_UNSTABLE_FIT: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_PROPERTY_FAILURE: i32 = 5;

/// Brute-force work cap used by `check`.
const CHECK_BRUTEFORCE_BUDGET: u64 = 20_000_000;
/// `check` compares against the brute-force oracle only up to this element.
const CHECK_ORACLE_LIMIT: u64 = 150;
/// `check` compares against the unpruned box scan only up to this element.
const CHECK_BOX_LIMIT: u64 = 200;

#[derive(Debug, Parser)]
#[command(name = "omega-mono", version, about = "ω-primality in numerical monoids")]
pub struct Cli {
    /// Worker threads for per-element computations.
    #[arg(long, global = true, env = "OMEGA_MONO_JOBS")]
    pub jobs: Option<usize>,
    /// Drop redundant generators instead of rejecting the list.
    #[arg(long, global = true)]
    pub reduce: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generators, embedding dimension, Frobenius number, lcm and Ap(M, n1).
    Info { gens: String },
    /// ω(n) for every element n in [1, max].
    Table {
        gens: String,
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Include the maximal bullets of each element.
        #[arg(long)]
        bullets: bool,
    },
    /// Quasilinear fit of ω up to the horizon.
    Fit {
        gens: String,
        #[arg(long)]
        horizon: u64,
    },
    /// The explicit dissonance threshold N0 (and the two-generator bound).
    Bound {
        gens: String,
        #[arg(long, default_value_t = DEFAULT_BOUND_BUDGET)]
        budget: u64,
    },
    /// Run the property suites on all elements up to max.
    Check {
        gens: String,
        #[arg(long)]
        max: u64,
    },
    /// Two-column `n ω(n)` data for plotting.
    Plotdata {
        gens: String,
        #[arg(long)]
        max: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Tsv,
    Json,
}

/// Parses `"3, 7,7"` into sorted distinct generators, with a warning per
/// dropped duplicate.
pub fn parse_generators(text: &str) -> Result<(Vec<u64>, Vec<String>), String> {
    let mut gens = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let g: u64 = piece
            .parse()
            .map_err(|_| format!("invalid generator {piece:?}: expected a non-negative integer"))?;
        gens.push(g);
    }
    let mut warnings = Vec::new();
    let mut seen = Vec::new();
    for g in gens {
        if seen.contains(&g) {
            warnings.push(format!("warning: duplicate generator {g} removed"));
        } else {
            seen.push(g);
        }
    }
    Ok((seen, warnings))
}

fn describe(e: &MonoidError) -> String {
    let rule = match e {
        MonoidError::EmptyGenerators => "EmptyGenerators",
        MonoidError::GeneratorZero => "GeneratorZero",
        MonoidError::GcdNotOne { .. } => "GcdNotOne",
        MonoidError::NonMinimal { .. } => "NonMinimal",
        MonoidError::NotInMonoid { .. } => "NotInMonoid",
        MonoidError::ZeroElement => "ZeroElement",
        MonoidError::Overflow => "Overflow",
    };
    format!("error: {rule}: {e}")
}

fn load(text: &str, reduce: bool, err: &mut dyn Write) -> Result<NumericalMonoid, i32> {
    let (gens, warnings) = match parse_generators(text) {
        Ok(parsed) => parsed,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return Err(EXIT_INVALID_MONOID);
        }
    };
    for w in warnings {
        let _ = writeln!(err, "{w}");
    }
    let built = if reduce {
        NumericalMonoid::new_reduced(&gens)
    } else {
        NumericalMonoid::new(&gens)
    };
    built.map_err(|e| {
        let _ = writeln!(err, "{}", describe(&e));
        EXIT_INVALID_MONOID
    })
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn show_generators(m: &NumericalMonoid) -> String {
    format!("<{}>", join(m.generators(), ","))
}

/// Runs `f` on a pool with `jobs` threads, or on the global pool.
fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) if j > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}

/// ω records for the elements of `[1, max]`, in increasing order of `n`.
pub fn omega_records(m: &NumericalMonoid, max: u64, jobs: Option<usize>) -> Vec<OmegaRecord> {
    with_jobs(jobs, || {
        (1..=max)
            .into_par_iter()
            .filter(|&n| m.contains_u64(n))
            .map(|n| omega(m, n).expect("member"))
            .collect()
    })
}

/// ω on `[0, horizon]`, `None` off the monoid.
pub fn omega_values(m: &NumericalMonoid, horizon: u64, jobs: Option<usize>) -> Vec<Option<u64>> {
    with_jobs(jobs, || {
        (0..=horizon)
            .into_par_iter()
            .map(|n| m.contains_u64(n).then(|| omega_value(m, n).expect("member")))
            .collect()
    })
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Info { gens } => load(gens, cli.reduce, err).map(|m| cmd_info(&m, out)),
        Command::Table {
            gens,
            max,
            format,
            bullets,
        } => load(gens, cli.reduce, err)
            .map(|m| cmd_table(&m, *max, *format, *bullets, cli.jobs, out)),
        Command::Fit { gens, horizon } => {
            load(gens, cli.reduce, err).map(|m| cmd_fit(&m, *horizon, cli.jobs, out, err))
        }
        Command::Bound { gens, budget } => {
            load(gens, cli.reduce, err).map(|m| cmd_bound(&m, *budget, out))
        }
        Command::Check { gens, max } => {
            load(gens, cli.reduce, err).map(|m| cmd_check(&m, *max, cli.jobs, out))
        }
        Command::Plotdata { gens, max, out: path } => load(gens, cli.reduce, err)
            .map(|m| cmd_plotdata(&m, *max, path.as_deref(), cli.jobs, out, err)),
    };
    match result {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(code) => code,
    }
}

pub fn cmd_info(m: &NumericalMonoid, out: &mut dyn Write) -> io::Result<i32> {
    writeln!(out, "generators: {}", join(m.generators(), ","))?;
    writeln!(out, "embedding_dimension: {}", m.embedding_dimension())?;
    writeln!(out, "frobenius: {}", m.frobenius())?;
    writeln!(out, "lcm: {}", m.lcm())?;
    writeln!(out, "apery_n1: {}", join(m.apery_n1(), ","))?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct JsonTable<'a> {
    schema: u32,
    generators: &'a [u64],
    rows: Vec<JsonRow>,
}

#[derive(Serialize)]
struct JsonRow {
    n: u64,
    omega: u64,
    residue: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    maximal_bullets: Option<Vec<Vec<u64>>>,
}

/// `(a1 a2 ... ak)` joined by `;`.
pub fn format_bullets(record: &OmegaRecord) -> String {
    record
        .maximal_bullets
        .iter()
        .map(|b| format!("({})", join(&b.coords, " ")))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn cmd_table(
    m: &NumericalMonoid,
    max: u64,
    format: Format,
    with_bullets: bool,
    jobs: Option<usize>,
    out: &mut dyn Write,
) -> io::Result<i32> {
    let records = omega_records(m, max, jobs);
    let n1 = m.multiplicity();
    match format {
        Format::Csv | Format::Tsv => {
            let sep = if format == Format::Csv { "," } else { "\t" };
            let mut header = vec!["n", "omega", "residue"];
            if with_bullets {
                header.push("maximal_bullets");
            }
            writeln!(out, "{}", header.join(sep))?;
            for r in &records {
                let mut line = format!("{}{sep}{}{sep}{}", r.n, r.omega, r.n % n1);
                if with_bullets {
                    let _ = write!(line, "{sep}{}", format_bullets(r));
                }
                writeln!(out, "{line}")?;
            }
        }
        Format::Json => {
            let table = JsonTable {
                schema: 1,
                generators: m.generators(),
                rows: records
                    .iter()
                    .map(|r| JsonRow {
                        n: r.n,
                        omega: r.omega,
                        residue: r.n % n1,
                        maximal_bullets: with_bullets.then(|| {
                            r.maximal_bullets.iter().map(|b| b.coords.clone()).collect()
                        }),
                    })
                    .collect(),
            };
            serde_json::to_writer(&mut *out, &table)?;
            writeln!(out)?;
        }
    }
    Ok(EXIT_OK)
}

fn write_fit(m: &NumericalMonoid, f: &QuasilinearFit, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "generators: {}", join(m.generators(), ","))?;
    writeln!(out, "horizon: {}", f.horizon)?;
    writeln!(out, "slope: 1/{}", f.n1)?;
    writeln!(out, "a: {}", join(&f.a_table, " "))?;
    writeln!(out, "offsets: {}", join(&f.offsets, " "))?;
    match f.dissonance {
        Some(d) => writeln!(out, "dissonance: {d}")?,
        None => writeln!(out, "dissonance: none")?,
    }
    writeln!(out, "period: {}", f.period)?;
    writeln!(out, "window: {}", f.window)?;
    writeln!(out, "stable: {}", f.stable)?;
    Ok(())
}

pub fn cmd_fit(
    m: &NumericalMonoid,
    horizon: u64,
    jobs: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let required = (m.frobenius() + m.multiplicity() as i64).max(0) as u64;
    if horizon < required {
        writeln!(
            err,
            "error: NotComputable: horizon {horizon} is below {required}, so some residue class has no element"
        )?;
        return Ok(EXIT_UNSTABLE_FIT);
    }
    let values = omega_values(m, horizon, jobs);
    match fit_from_values(m, &values) {
        Ok(f) => {
            write_fit(m, &f, out)?;
            Ok(EXIT_OK)
        }
        Err(FitError::HorizonTooSmall(partial)) => {
            write_fit(m, &partial, out)?;
            writeln!(err, "error: fit is not stable at horizon {horizon}; retry with a larger horizon")?;
            Ok(EXIT_UNSTABLE_FIT)
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(EXIT_UNSTABLE_FIT)
        }
    }
}

pub fn cmd_bound(m: &NumericalMonoid, budget: u64, out: &mut dyn Write) -> io::Result<i32> {
    writeln!(out, "generators: {}", join(m.generators(), ","))?;
    let code = match theoretical_bound(m, budget) {
        Ok(b) => {
            writeln!(out, "m: {}", b.m)?;
            writeln!(out, "n0: {}", b.base)?;
            writeln!(out, "residues: {}/{}", b.c_table.len(), b.m)?;
            writeln!(out, "c: {}", b.c)?;
            writeln!(out, "N0: {}", b.threshold)?;
            EXIT_OK
        }
        Err(BoundError::BudgetExceeded(p)) => {
            writeln!(out, "m: {}", p.m)?;
            writeln!(out, "n0: {}", p.base)?;
            writeln!(out, "residues: {}/{} (budget {budget} exhausted)", p.c_table.len(), p.m)?;
            writeln!(out, "c: >= {}", p.c)?;
            writeln!(out, "N0: >= {}", p.threshold)?;
            EXIT_BUDGET
        }
        Err(BoundError::Monoid(e)) => {
            writeln!(out, "error: {e}")?;
            EXIT_BUDGET
        }
    };
    if m.embedding_dimension() == 2 {
        if let Ok(d) = ed2_bound(m) {
            writeln!(out, "ed2_c: {}", d.c)?;
            writeln!(out, "ed2_bound: {}", d.bound)?;
            writeln!(out, "ed2_proven_bound: {}", d.proven_bound)?;
        }
    }
    Ok(code)
}

/// One property suite's outcome inside `check`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: u64,
    pub failure: Option<String>,
}

fn suite(name: &'static str) -> SuiteReport {
    SuiteReport {
        name,
        checked: 0,
        failure: None,
    }
}

fn oracle_suite(m: &NumericalMonoid, max: u64) -> SuiteReport {
    let mut s = suite("oracle equivalence");
    for n in 1..=max.min(CHECK_ORACLE_LIMIT) {
        if !m.contains_u64(n) {
            continue;
        }
        let fast = omega_value(m, n).expect("member");
        match omega_bruteforce(m, n, CHECK_BRUTEFORCE_BUDGET) {
            Ok(slow) if slow == fast => s.checked += 1,
            Ok(slow) => {
                s.failure = Some(format!("n = {n}: bullets give {fast}, brute force {slow}"));
                break;
            }
            // Too large for the oracle; later elements only get larger.
            Err(OmegaError::BudgetExceeded { .. }) => break,
            Err(e) => {
                s.failure = Some(format!("n = {n}: {e}"));
                break;
            }
        }
    }
    s
}

fn bullet_suite(m: &NumericalMonoid, max: u64) -> SuiteReport {
    let mut s = suite("bullet completeness and cover maps");
    let k = m.embedding_dimension();
    for n in 1..=max {
        if !m.contains_u64(n) {
            continue;
        }
        let found = bullets(m, n).expect("member");
        if n <= CHECK_BOX_LIMIT && found != bullets_exhaustive(m, n).expect("member") {
            s.failure = Some(format!("n = {n}: pruned scan differs from the box scan"));
            break;
        }
        for j in 0..k {
            if found.iter().filter(|b| b.support() == [j]).count() != 1 {
                s.failure = Some(format!("n = {n}: no unique single-support bullet for index {j}"));
                return s;
            }
            let source = bullets_with_support(m, n, j).expect("member");
            let mut images = Vec::with_capacity(source.len());
            for b in &source {
                match cover_map(m, b, j, 1) {
                    Ok(img) if img.length() == b.length() + 1 => images.push(img.coords),
                    Ok(_) => {
                        s.failure = Some(format!("n = {n}: cover map changed length wrongly"));
                        return s;
                    }
                    Err(e) => {
                        s.failure = Some(format!("n = {n}: cover map failed: {e}"));
                        return s;
                    }
                }
            }
            images.sort();
            images.dedup();
            if images.len() != source.len() {
                s.failure = Some(format!("n = {n}: cover map for index {j} is not injective"));
                return s;
            }
        }
        let w = found.iter().map(|b| b.length()).max().unwrap_or(0);
        let longest_factorization = m.factorizations(n).iter().map(|f| f.length()).max().unwrap_or(0);
        if w < longest_factorization {
            s.failure = Some(format!("n = {n}: ω = {w} below a factorization length"));
            break;
        }
        s.checked += 1;
    }
    s
}

fn ed2_suite(m: &NumericalMonoid, max: u64) -> SuiteReport {
    let mut s = suite("two-generator closed form");
    let d = match ed2_bound(m) {
        Ok(d) => d,
        Err(e) => {
            s.failure = Some(e.to_string());
            return s;
        }
    };
    for n in 1..=max {
        if !m.contains_u64(n) {
            continue;
        }
        bullet_structure_ed2(m, n).expect("member");
        let cf = omega_closed_form(&d, n).expect("member");
        if !cf.below_bound && cf.value != omega_value(m, n).expect("member") {
            s.failure = Some(format!("n = {n}: closed form {} differs from ω", cf.value));
            break;
        }
        s.checked += 1;
    }
    s
}

fn tail_suite(m: &NumericalMonoid, f: &QuasilinearFit, values: &[Option<u64>]) -> SuiteReport {
    let mut s = suite("tail recurrence and bul1");
    let start = f.dissonance.map_or(1, |d| d + 1);
    let horizon = f.horizon;
    let n1 = m.multiplicity();
    for n in start..=horizon {
        let Some(w) = values[n as usize] else { continue };
        if f.predict(n) != Rational::from_integer(w as i64) {
            s.failure = Some(format!("n = {n}: ω = {w} off the fitted line"));
            return s;
        }
        if n + n1 <= horizon && values[(n + n1) as usize] != Some(w + 1) {
            s.failure = Some(format!("n = {n}: ω(n + n1) != ω(n) + 1"));
            return s;
        }
        s.checked += 1;
    }
    let violations = check_bul1(m, start, horizon);
    if let Some(n) = violations.first() {
        s.failure = Some(format!("n = {n}: no maximal bullet uses n1"));
    }
    s
}

/// For `n ≡ 0 (mod n1)`, coordinates `j >= 2` that every maximal bullet
/// shares on a trailing run `(t, max]` covering at least half the range.
fn constant_coordinates(m: &NumericalMonoid, max: u64) -> Vec<String> {
    let n1 = m.multiplicity();
    let records: Vec<OmegaRecord> = (1..=max / n1)
        .map(|q| omega(m, q * n1).expect("member"))
        .collect();
    let common = |r: &OmegaRecord, j: usize| {
        let v = r.maximal_bullets[0].coords[j];
        r.maximal_bullets.iter().all(|b| b.coords[j] == v).then_some(v)
    };
    let mut found = Vec::new();
    let Some(last) = records.last() else { return found };
    for j in 1..m.embedding_dimension() {
        let Some(v) = common(last, j) else { continue };
        let threshold = records
            .iter()
            .rev()
            .find(|r| common(r, j) != Some(v))
            .map_or(0, |r| r.n);
        if 2 * threshold <= max {
            found.push(format!(
                "every maximal bullet at n ≡ 0 mod {n1} in ({threshold}, {max}] has a{} = {v}",
                j + 1
            ));
        }
    }
    found
}

pub fn cmd_check(
    m: &NumericalMonoid,
    max: u64,
    jobs: Option<usize>,
    out: &mut dyn Write,
) -> io::Result<i32> {
    writeln!(out, "generators: {}", join(m.generators(), ","))?;
    let mut reports = vec![oracle_suite(m, max), bullet_suite(m, max)];
    if m.embedding_dimension() == 2 {
        reports.push(ed2_suite(m, max));
    }

    let mut observations = Vec::new();
    let values = omega_values(m, max, jobs);
    match fit_from_values(m, &values) {
        Ok(f) => {
            reports.push(tail_suite(m, &f, &values));
            observations.extend(constant_coordinates(m, max));
        }
        Err(_) => observations.push(format!("fit not stable up to {max}; tail suite skipped")),
    }

    let mut code = EXIT_OK;
    for r in &reports {
        match &r.failure {
            None => writeln!(out, "pass: {} ({} elements)", r.name, r.checked)?,
            Some(why) => {
                writeln!(out, "FAIL: {}: {why}", r.name)?;
                code = EXIT_PROPERTY_FAILURE;
            }
        }
    }
    for o in observations {
        writeln!(out, "observation: {o}")?;
    }
    Ok(code)
}

pub fn cmd_plotdata(
    m: &NumericalMonoid,
    max: u64,
    path: Option<&std::path::Path>,
    jobs: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let values = omega_values(m, max, jobs);
    let mut text = String::new();
    let _ = writeln!(text, "# omega values of {}", show_generators(m));
    let _ = writeln!(text, "# reference slope 1/{}", m.multiplicity());
    match fit_from_values(m, &values) {
        Ok(f) => {
            let _ = writeln!(text, "# intercepts a(r), r = 0..{}: {}", f.n1 - 1, join(&f.a_table, " "));
        }
        Err(_) => {
            let _ = writeln!(text, "# intercepts unavailable: no stable fit up to {max}");
        }
    }
    let _ = writeln!(text, "# columns: n omega");
    for (n, w) in values.iter().enumerate().skip(1) {
        if let Some(w) = w {
            let _ = writeln!(text, "{n} {w}");
        }
    }
    match path {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text) {
                writeln!(err, "error: cannot write {}: {e}", p.display())?;
                return Ok(1);
            }
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("omega-mono").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&cli, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parses_generator_lists() {
        assert_eq!(parse_generators(" 3, 7 ").unwrap().0, vec![3, 7]);
        let (g, w) = parse_generators("3,7,3").unwrap();
        assert_eq!(g, vec![3, 7]);
        assert_eq!(w.len(), 1);
        assert!(parse_generators("3,x").is_err());
    }

    #[test]
    fn info_reports() {
        let (code, out, _) = run_args(&["info", "3,7"]);
        assert_eq!(code, 0);
        assert!(out.contains("frobenius: 11"));
        let (_, out, _) = run_args(&["info", "6,9,20"]);
        assert!(out.contains("embedding_dimension: 3"));
        let (code, _, err) = run_args(&["info", "4,6"]);
        assert_eq!(code, EXIT_INVALID_MONOID);
        assert!(err.contains("GcdNotOne"));
    }

    #[test]
    fn nonminimal_needs_reduce() {
        let (code, _, err) = run_args(&["info", "3,5,8"]);
        assert_eq!(code, EXIT_INVALID_MONOID);
        assert!(err.contains("NonMinimal"));
        let (code, out, _) = run_args(&["--reduce", "info", "3,5,8"]);
        assert_eq!(code, 0);
        assert!(out.contains("generators: 3,5"));
    }

    #[test]
    fn empty_table() {
        let (code, out, _) = run_args(&["table", "3,7", "--max", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,omega,residue\n");
    }

    #[test]
    fn json_table_is_versioned() {
        let (_, out, _) = run_args(&["table", "3,7", "--max", "9", "--format", "json", "--bullets"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["rows"][3]["n"], 9);
        assert_eq!(v["rows"][3]["maximal_bullets"], serde_json::json!([[3, 0], [0, 3]]));
    }

    #[test]
    fn degenerate_bound() {
        let (code, out, _) = run_args(&["bound", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("m: 1") && out.contains("N0: 1"));
    }

    #[test]
    fn plotdata_naturals() {
        let (_, out, _) = run_args(&["plotdata", "1", "--max", "5"]);
        let rows: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(rows, vec!["1 1", "2 2", "3 3", "4 4", "5 5"]);
    }
}
