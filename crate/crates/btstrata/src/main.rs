//! Command-line front end: every operation of the library behind one verb,
//! with pretty, JSON and TSV output.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::str::FromStr;

use btstrata::checks::{run_suite, Check};
use btstrata::coxeter::coxeter_cohomology;
use btstrata::error::Error;
use btstrata::geometry::{oracle_counts, ScaleGuard};
use btstrata::harish_chandra::{induce, restrict_sp, RepMultiset};
use btstrata::strata::{cohomology_of_s, e1_page, point_count_s, point_count_stratum, split_term};
use btstrata::symbols::{enumerate_symbols, Symbol};

const AFTER_HELP: &str = "\
Exit codes:
  0  success
  2  parse error (arguments, symbol grammar)
  3  domain error (invalid symbol or label, rank underflow, inexact division)
  4  scale guard (enumeration larger than the configured work bound)
  5  verification failure

Symbols are written as two comma-separated rows joined by a semicolon, the
longer row first: '0,2;1'. An empty row is allowed: '0,1,2;'.

The oracle work bound defaults to 10^7 estimated operations; set the
BTSTRATA_MAX_WORK environment variable or --max-work to change it, or pass
--force to disable the guard.";

#[derive(Parser)]
#[command(name = "btstrata", version, about = "Unipotent character combinatorics of Sp(2n, F_q) and cohomology of closed Bruhat-Tits strata", after_help = AFTER_HELP)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// List the symbols of a given rank with defect, bipartition and degree
    Symbols {
        #[arg(long)]
        rank: u32,
    },
    /// Hook-formula degree of one symbol
    Degree {
        #[arg(long)]
        symbol: String,
    },
    /// Harish-Chandra induction along GL(a) x Sp(2n') <= Sp(2(n'+a))
    Induce {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        symbol: String,
    },
    /// Symplectic part of Harish-Chandra restriction by GL(a)
    Restrict {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        symbol: String,
    },
    /// Cohomology table of the Coxeter variety for Sp(2 theta)
    Coxeter {
        #[arg(long)]
        theta: u32,
    },
    /// First page of the stratification spectral sequence as a grid
    E1 {
        #[arg(long)]
        theta: u32,
    },
    /// Even cohomology of the closed stratum with Frobenius eigenvalues
    Cohomology {
        #[arg(long)]
        theta: u32,
    },
    /// Lefschetz point-count polynomials over F_{q^n}, total and per stratum
    Zeta {
        #[arg(long)]
        theta: u32,
        #[arg(long)]
        n: u32,
    },
    /// Brute-force point counts over F_{(p^e)^n}
    Oracle {
        #[arg(long)]
        theta: u32,
        /// Characteristic of the base field
        #[arg(long)]
        p: u64,
        /// Extension degree of the base field over its prime field
        #[arg(long, default_value_t = 1)]
        e: u32,
        /// Points are counted over the degree-n extension of the base field
        #[arg(long)]
        n: u32,
        /// Disable the scale guard
        #[arg(long)]
        force: bool,
        /// Override the estimated-work bound
        #[arg(long)]
        max_work: Option<u64>,
    },
    /// Run verification suites and print one pass/fail line per check
    Verify {
        /// Suite name: census, degrees, restriction, e1, ladders,
        /// main-theorem, euler, lefschetz, properties, or all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Rescale the bounded checks (defaults are the pinned bounds)
        #[arg(long)]
        theta_max: Option<u32>,
        /// Disable the scale guard
        #[arg(long)]
        force: bool,
        /// Override the estimated-work bound
        #[arg(long)]
        max_work: Option<u64>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        Error::ScaleGuard(_) => 4,
        _ => 3,
    }
}

fn make_guard(force: bool, max_work: Option<u64>) -> ScaleGuard {
    if force {
        return ScaleGuard::unlimited();
    }
    let bound = max_work
        .or_else(|| {
            std::env::var("BTSTRATA_MAX_WORK")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(ScaleGuard::DEFAULT_MAX_WORK);
    ScaleGuard::with_max_work(bound)
}

fn parse_symbol(text: &str) -> Result<Symbol, Error> {
    Symbol::from_str(text)
}

fn symbol_json(s: &Symbol) -> serde_json::Value {
    json!({ "top": s.top(), "bottom": s.bottom() })
}

fn multiset_json(ms: &RepMultiset) -> serde_json::Value {
    serde_json::Value::Array(ms.iter().map(symbol_json).collect())
}

fn multiset_text(ms: &RepMultiset) -> String {
    ms.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> Result<i32, Error> {
    match &cli.command {
        Command::Symbols { rank } => cmd_symbols(*rank, cli.format),
        Command::Degree { symbol } => cmd_degree(symbol, cli.format),
        Command::Induce { a, symbol } => cmd_induce(*a, symbol, cli.format),
        Command::Restrict { a, symbol } => cmd_restrict(*a, symbol, cli.format),
        Command::Coxeter { theta } => cmd_coxeter(*theta, cli.format),
        Command::E1 { theta } => cmd_e1(*theta, cli.format),
        Command::Cohomology { theta } => cmd_cohomology(*theta, cli.format),
        Command::Zeta { theta, n } => cmd_zeta(*theta, *n, cli.format),
        Command::Oracle { theta, p, e, n, force, max_work } => {
            cmd_oracle(*theta, *p, *e, *n, &make_guard(*force, *max_work), cli.format)
        }
        Command::Verify { suite, theta_max, force, max_work } => {
            cmd_verify(suite, *theta_max, &make_guard(*force, *max_work), cli.format)
        }
    }
}

fn cmd_symbols(rank: u32, format: Format) -> Result<i32, Error> {
    let symbols = enumerate_symbols(rank);
    match format {
        Format::Json => {
            let rows: Vec<_> = symbols
                .iter()
                .map(|s| {
                    let label = s.to_label();
                    let degree = s.degree().map(|d| d.to_string());
                    degree.map(|degree| {
                        json!({
                            "top": s.top(),
                            "bottom": s.bottom(),
                            "defect": s.defect(),
                            "delta": label.delta,
                            "bipartition": [label.bip.first.parts(), label.bip.second.parts()],
                            "degree": degree,
                        })
                    })
                })
                .collect::<Result<_, _>>()?;
            println!("{}", serde_json::to_string_pretty(&rows).expect("serializable"));
        }
        Format::Tsv | Format::Pretty => {
            if format == Format::Tsv {
                println!("symbol\tdefect\tdelta\tbipartition\tdegree");
            } else {
                println!("{} unipotent symbols of rank {rank}", symbols.len());
            }
            for s in &symbols {
                let label = s.to_label();
                let degree = s.degree()?;
                if format == Format::Tsv {
                    println!("{s}\t{}\t{}\t{}\t{degree}", s.defect(), label.delta, label.bip);
                } else {
                    println!(
                        "  {s:<14} defect {}  delta {}  {:<16} degree {degree}",
                        s.defect(),
                        label.delta,
                        label.bip.to_string()
                    );
                }
            }
        }
    }
    Ok(0)
}

fn cmd_degree(symbol: &str, format: Format) -> Result<i32, Error> {
    let s = parse_symbol(symbol)?;
    let degree = s.degree()?;
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "symbol": symbol_json(&s),
                "rank": s.rank(),
                "defect": s.defect(),
                "degree": degree.to_string(),
            }))
            .expect("serializable")
        ),
        Format::Tsv => println!("{s}\t{degree}"),
        Format::Pretty => println!("degree({s}) = {degree}"),
    }
    Ok(0)
}

fn cmd_induce(a: u32, symbol: &str, format: Format) -> Result<i32, Error> {
    let s = parse_symbol(symbol)?;
    let out = induce(a, &s);
    emit_multiset(&out, format);
    Ok(0)
}

fn cmd_restrict(a: u32, symbol: &str, format: Format) -> Result<i32, Error> {
    let s = parse_symbol(symbol)?;
    let out = restrict_sp(a, &s)?;
    emit_multiset(&out, format);
    Ok(0)
}

fn emit_multiset(ms: &RepMultiset, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&multiset_json(ms)).expect("serializable")
        ),
        Format::Tsv => {
            for s in ms.iter() {
                println!("{s}");
            }
        }
        Format::Pretty => {
            if ms.is_empty() {
                println!("(empty)");
            }
            for s in ms.iter() {
                println!("{s}");
            }
        }
    }
}

fn cmd_coxeter(theta: u32, format: Format) -> Result<i32, Error> {
    let coh = coxeter_cohomology(theta);
    let mut rows = Vec::new();
    for (degree, entries) in coh.iter() {
        for (symbol, ev) in entries {
            let poly = symbol.degree()?;
            rows.push((degree, symbol.clone(), *ev, poly));
        }
    }
    match format {
        Format::Json => {
            let list: Vec<_> = rows
                .iter()
                .map(|(degree, symbol, ev, poly)| {
                    json!({
                        "degree": degree,
                        "symbol": symbol_json(symbol),
                        "sign": ev.sign,
                        "exp": ev.exp,
                        "dimension": poly.to_string(),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&list).expect("serializable"));
        }
        Format::Tsv => {
            println!("degree\tsymbol\tsign\texp\tdimension");
            for (degree, symbol, ev, poly) in &rows {
                println!("{degree}\t{symbol}\t{}\t{}\t{poly}", ev.sign, ev.exp);
            }
        }
        Format::Pretty => {
            println!("compactly supported cohomology of the Coxeter variety, theta = {theta}");
            for (degree, symbol, ev, poly) in &rows {
                println!("  H^{degree}: {symbol:<14} eigenvalue {ev}  dimension {poly}");
            }
        }
    }
    Ok(0)
}

fn cmd_e1(theta: u32, format: Format) -> Result<i32, Error> {
    let page = e1_page(theta);
    match format {
        Format::Json => {
            let mut cells = Vec::new();
            for ((theta_prime, i), term) in page.iter() {
                let split = split_term(term, theta_prime, i);
                cells.push(json!({
                    "theta_prime": theta_prime,
                    "i": i,
                    "total_degree": theta_prime + i,
                    "a0": multiset_json(&split.a0),
                    "a1": multiset_json(&split.a1),
                    "b0": multiset_json(&split.b0),
                    "b1": multiset_json(&split.b1),
                }));
            }
            println!("{}", serde_json::to_string_pretty(&cells).expect("serializable"));
        }
        Format::Tsv => {
            println!("i\ttheta_prime\tA0\tA1\tB0\tB1");
            for i in (0..=theta).rev() {
                for theta_prime in i..=theta {
                    let split = split_term(page.term(theta_prime, i), theta_prime, i);
                    println!(
                        "{i}\t{theta_prime}\t{}\t{}\t{}\t{}",
                        multiset_text(&split.a0),
                        multiset_text(&split.a1),
                        multiset_text(&split.b0),
                        multiset_text(&split.b1),
                    );
                }
            }
        }
        Format::Pretty => {
            println!("first page of the stratification sequence, theta = {theta}");
            println!("rows: i (eigenvalues q^i and -q^(i+1)); columns: theta'");
            for i in (0..=theta).rev() {
                println!("i = {i}:");
                for theta_prime in i..=theta {
                    let split = split_term(page.term(theta_prime, i), theta_prime, i);
                    let cell = [
                        ("A0", &split.a0),
                        ("A1", &split.a1),
                        ("B0", &split.b0),
                        ("B1", &split.b1),
                    ]
                    .iter()
                    .filter(|(_, ms)| !ms.is_empty())
                    .map(|(tag, ms)| format!("{tag}={}", ms))
                    .collect::<Vec<_>>()
                    .join("  ");
                    println!("  theta'={theta_prime}: {cell}");
                }
            }
        }
    }
    Ok(0)
}

fn cmd_cohomology(theta: u32, format: Format) -> Result<i32, Error> {
    let coh = cohomology_of_s(theta);
    match format {
        Format::Json => {
            let list: Vec<_> = coh
                .even_terms()
                .iter()
                .map(|term| {
                    json!({
                        "degree": 2 * term.i,
                        "plus": multiset_json(&term.plus),
                        "plus_eigenvalue": {"sign": 1, "exp": term.i},
                        "minus": multiset_json(&term.minus),
                        "minus_eigenvalue": {"sign": -1, "exp": term.i},
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&list).expect("serializable"));
        }
        Format::Tsv => {
            println!("degree\teigenvalue\tsymbols");
            for term in coh.even_terms() {
                println!("{}\t+q^{}\t{}", 2 * term.i, term.i, multiset_text(&term.plus));
                if !term.minus.is_empty() {
                    println!("{}\t-q^{}\t{}", 2 * term.i, term.i, multiset_text(&term.minus));
                }
            }
        }
        Format::Pretty => {
            println!("cohomology of the closed stratum, theta = {theta} (odd degrees vanish)");
            for term in coh.even_terms() {
                println!("  H^{}: eigenvalue +q^{}: {}", 2 * term.i, term.i, term.plus);
                if !term.minus.is_empty() {
                    println!("       eigenvalue -q^{}: {}", term.i, term.minus);
                }
            }
        }
    }
    Ok(0)
}

fn cmd_zeta(theta: u32, n: u32, format: Format) -> Result<i32, Error> {
    if n == 0 {
        return Err(Error::Parse("extension degree n must be at least 1".into()));
    }
    let total = point_count_s(theta, n)?;
    let strata: Vec<_> = (0..=theta)
        .map(|tp| point_count_stratum(theta, tp, n).map(|p| (tp, p)))
        .collect::<Result<_, _>>()?;
    match format {
        Format::Json => {
            let per_stratum: serde_json::Map<String, serde_json::Value> = strata
                .iter()
                .map(|(tp, p)| (tp.to_string(), json!(p.to_string())))
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "theta": theta,
                    "n": n,
                    "total": total.to_string(),
                    "per_stratum": per_stratum,
                }))
                .expect("serializable")
            );
        }
        Format::Tsv => {
            println!("stratum\tcount");
            println!("total\t{total}");
            for (tp, p) in &strata {
                println!("{tp}\t{p}");
            }
        }
        Format::Pretty => {
            println!("points over F_(q^{n}), theta = {theta}");
            println!("  total: {total}");
            for (tp, p) in &strata {
                println!("  stratum {tp}: {p}");
            }
        }
    }
    Ok(0)
}

fn cmd_oracle(
    theta: u32,
    p: u64,
    e: u32,
    n: u32,
    guard: &ScaleGuard,
    format: Format,
) -> Result<i32, Error> {
    if n == 0 {
        return Err(Error::Parse("extension degree n must be at least 1".into()));
    }
    let counts = oracle_counts(theta, p, e, n, guard)?;
    match format {
        Format::Json => {
            let per_stratum: serde_json::Map<String, serde_json::Value> = counts
                .per_stratum
                .iter()
                .map(|(tp, c)| (tp.to_string(), json!(c)))
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "theta": theta,
                    "p": p,
                    "e": e,
                    "n": n,
                    "total": counts.total,
                    "per_stratum": per_stratum,
                }))
                .expect("serializable")
            );
        }
        Format::Tsv => {
            println!("stratum\tcount");
            println!("total\t{}", counts.total);
            for (tp, c) in &counts.per_stratum {
                println!("{tp}\t{c}");
            }
        }
        Format::Pretty => {
            println!(
                "brute-force count over F_({}^{}), theta = {theta}: {} points",
                p.pow(e),
                n,
                counts.total
            );
            for (tp, c) in &counts.per_stratum {
                println!("  stratum {tp}: {c}");
            }
        }
    }
    Ok(0)
}

fn cmd_verify(
    suite: &str,
    theta_max: Option<u32>,
    guard: &ScaleGuard,
    format: Format,
) -> Result<i32, Error> {
    let checks = run_suite(suite, theta_max, guard)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    match format {
        Format::Json => {
            let list: Vec<_> = checks
                .iter()
                .map(|Check { name, passed, detail }| {
                    json!({"name": name, "passed": passed, "detail": detail})
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&list).expect("serializable"));
        }
        _ => {
            for Check { name, passed, detail } in &checks {
                let status = if *passed { "PASS" } else { "FAIL" };
                println!("{status}  {name}: {detail}");
            }
            println!(
                "{} checks, {} passed, {failed} failed",
                checks.len(),
                checks.len() - failed
            );
        }
    }
    Ok(if failed > 0 { 5 } else { 0 })
}
