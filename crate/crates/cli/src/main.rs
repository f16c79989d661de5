use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use braidex_core::conway::{alexander_burau, hoste_by_laplacian, hoste_by_trees, TREE_ENUMERATION_LIMIT};
use braidex_core::experiments::{self, EvalOptions, ExperimentReport};
use braidex_core::{BraidWord, ExchangeForm, LinkDiagram, LinkingMatrix, SkeinEngine};

/// Braid words, exchange-move families and truncated Conway polynomials.
///
/// Words are whitespace-separated nonzero integers: `i` is σ_i and `-i` is
/// σ_i^{-1}. Put `--` before a word that starts with a negative letter.
#[derive(Parser, Debug)]
#[command(name = "braidex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Permutation, components, exponent sum and exchange-move status.
    Info(WordArgs),
    /// Truncated Conway polynomials of the closure and of the axis link.
    Invariant(InvariantArgs),
    /// Run one of the family experiments and write its report.
    Experiment(ExperimentArgs),
}

#[derive(Args, Debug)]
struct WordArgs {
    /// Number of strands.
    #[arg(long)]
    n: usize,
    /// Braid word, as one or more tokens.
    #[arg(allow_hyphen_values = true, num_args = 0..)]
    word: Vec<String>,
}

#[derive(Args, Debug)]
struct InvariantArgs {
    #[command(flatten)]
    word: WordArgs,
    /// Highest Conway coefficient to compute. May also appear after the word.
    #[arg(long, default_value_t = 4)]
    degree: usize,
    /// Evaluate without the memo cache.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    #[command(subcommand)]
    which: Experiment,
    /// Directory receiving `<name>.json` and `<name>.tsv`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report format on stdout.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    format: Format,
    /// Evaluate without the memo cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Experiment {
    /// First differences of a_3 over the axis links of b_m.
    Prop25 {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "-1 -2")]
        alpha: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-3")]
        beta: String,
        /// Use the canonical odd family on this many strands instead.
        #[arg(long, conflicts_with_all = ["alpha", "beta"])]
        odd: Option<usize>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range, default_value = "-2..2")]
        m: RangeInclusive<i64>,
    },
    /// Second difference of a_3 over the axis links of b_m^2.
    Dn {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range, default_value = "-1..1")]
        m: RangeInclusive<i64>,
    },
    /// Cubic fits of a_4 for the two-cycle family and its mirror.
    Lemma64 {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range, default_value = "-2..2")]
        m: RangeInclusive<i64>,
    },
    /// Quadratic fit of a_4 over the axis links of b_m^2.
    Eq54 {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range, default_value = "-1..2")]
        m: RangeInclusive<i64>,
    },
    /// Check every word of the 4-braid corpus.
    Table8 {
        #[arg(long, default_value = "data/table8.tsv")]
        corpus: PathBuf,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a range like -2..2, got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

/// Input errors exit with 2, failed assertions with 1.
enum Failure {
    Usage(anyhow::Error),
    Assertion(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure::Usage(e)
    }
}

fn parse_word(strands: usize, tokens: &[String]) -> Result<BraidWord> {
    BraidWord::parse(strands, &tokens.join(" ")).context("invalid braid word")
}

fn shown(w: &BraidWord) -> String {
    if w.is_empty() {
        "(empty)".to_string()
    } else {
        w.to_string()
    }
}

fn info(args: &WordArgs) -> Result<String> {
    let w = parse_word(args.n, &args.word)?;
    let cycles = w.permutation().cycles();
    let adm = w.admits_exchange();
    let mut out = String::new();
    writeln!(out, "word\t{}", shown(&w))?;
    writeln!(out, "strands\t{}", w.strands())?;
    writeln!(out, "permutation\t{cycles}")?;
    writeln!(out, "components\t{}", cycles.count())?;
    writeln!(out, "exponent_sum\t{}", w.exponent_sum())?;
    let admissible = match (adm.admissible, adm.degenerate) {
        (_, true) => "yes (degenerate, n <= 3)",
        (true, false) => "yes",
        (false, false) => "no",
    };
    writeln!(out, "admissible\t{admissible}")?;
    if adm.degenerate {
        eprintln!("warning: exchange moves are degenerate on {} strands", w.strands());
    }
    if let Some(f) = w.exchange_split() {
        writeln!(out, "alpha\t{}", shown(f.alpha()))?;
        writeln!(out, "beta\t{}", shown(f.beta()))?;
    }
    if let Ok(nc) = cycles.normalized() {
        let entries: Vec<String> = nc.entries.iter().map(|x| x.to_string()).collect();
        writeln!(out, "normalized_cycle\t({})", entries.join(" "))?;
        writeln!(out, "l\t{}", nc.one_position)?;
    }
    writeln!(out, "theorem\t{}", w.theorem1_verdict().reason())?;
    Ok(out)
}

fn matrix_lines(m: &LinkingMatrix) -> String {
    m.rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            format!("linking\t{}\n", cells.join("\t"))
        })
        .collect()
}

/// Splits `--degree D` out of the word tokens, so the flag may follow `--`.
fn take_degree(tokens: &mut Vec<String>) -> Result<Option<usize>> {
    let mut degree = None;
    let mut i = 0;
    while i < tokens.len() {
        let t = tokens[i].clone();
        if let Some(v) = t.strip_prefix("--degree=") {
            degree = Some(v.parse().with_context(|| format!("invalid degree {v:?}"))?);
            tokens.remove(i);
        } else if t == "--degree" {
            let v = tokens.get(i + 1).ok_or_else(|| anyhow!("--degree needs a value"))?;
            degree = Some(v.parse().with_context(|| format!("invalid degree {v:?}"))?);
            tokens.drain(i..i + 2);
        } else {
            i += 1;
        }
    }
    Ok(degree)
}

fn invariant(args: &mut InvariantArgs) -> Result<(String, bool)> {
    if let Some(d) = take_degree(&mut args.word.word)? {
        args.degree = d;
    }
    let w = parse_word(args.word.n, &args.word.word)?;
    let mut out = String::new();
    let mut all_match = true;
    for (label, d) in [("closure", LinkDiagram::closure(&w)), ("axis", LinkDiagram::axis_link(&w))] {
        let clock = Instant::now();
        let p = d.component_count();
        let degree = args.degree.max(p - 1);
        let mut engine = SkeinEngine::with_cache(!args.no_cache);
        let poly = engine.conway_truncated(&d, degree);
        eprintln!("{label}: {} crossings, {:?}, {:?}", d.crossing_count(), engine.stats(), clock.elapsed());
        let coeffs: Vec<String> = poly.coefficients().iter().map(|a| a.to_string()).collect();
        writeln!(out, "{label}_components\t{p}")?;
        writeln!(out, "{label}_conway\t{poly}")?;
        writeln!(out, "{label}_coefficients\t{}", coeffs.join(" "))?;
        let lk = d.linking_matrix();
        out.push_str(&matrix_lines(&lk).replace("linking\t", &format!("{label}_linking\t")));
        let lowest = poly.coefficient(p - 1).unwrap();
        let formula = if p <= TREE_ENUMERATION_LIMIT {
            hoste_by_trees(&lk)
        } else {
            hoste_by_laplacian(&lk)
        };
        let status = if lowest == formula { "match" } else { "MISMATCH" };
        all_match &= lowest == formula;
        writeln!(out, "{label}_hoste\ta_{}={lowest}\tspanning_trees={formula}\t{status}", p - 1)?;
    }
    writeln!(out, "closure_alexander\t{}", alexander_burau(&w))?;
    Ok((out, all_match))
}

fn exchange_form(n: usize, alpha: &str, beta: &str) -> Result<ExchangeForm> {
    let a = BraidWord::parse(n, alpha).context("invalid alpha")?;
    let b = BraidWord::parse(n, beta).context("invalid beta")?;
    Ok(ExchangeForm::new(a, b)?)
}

fn file_stem(r: &ExperimentReport) -> String {
    let mut stem = r.id.clone();
    for (k, v) in &r.params {
        if matches!(k.as_str(), "n" | "n1" | "n2") {
            stem.push('-');
            stem.push_str(v);
        }
    }
    stem
}

fn write_report(dir: &Path, r: &ExperimentReport) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let stem = file_stem(r);
    let json = dir.join(format!("{stem}.json"));
    let tsv = dir.join(format!("{stem}.tsv"));
    std::fs::write(&json, r.to_json() + "\n").with_context(|| format!("writing {}", json.display()))?;
    std::fs::write(&tsv, r.to_tsv()).with_context(|| format!("writing {}", tsv.display()))?;
    eprintln!("wrote {} and {}", json.display(), tsv.display());
    Ok(())
}

fn experiment(args: &ExperimentArgs) -> Result<ExperimentReport> {
    if let Some(t) = args.threads {
        if t == 0 {
            bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring worker threads")?;
    }
    let opts = EvalOptions { cache: !args.no_cache };
    let report = match &args.which {
        Experiment::Prop25 { n, alpha, beta, odd, m } => {
            let f = match odd {
                Some(k) => braidex_core::canonical_odd_knot_braid(*k)?,
                None => exchange_form(*n, alpha, beta)?,
            };
            experiments::prop25_check(&f, m.clone(), opts)?
        }
        Experiment::Dn { n, m } => experiments::prop41_dn_check(*n, m.clone(), opts)?,
        Experiment::Lemma64 { n1, n2, m } => experiments::lemma64_check(*n1, *n2, m.clone(), opts)?,
        Experiment::Eq54 { n, m } => experiments::eq54_check(*n, m.clone(), opts)?,
        Experiment::Table8 { corpus } => experiments::table8_verify(corpus)?,
    };
    Ok(report)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Info(args) => {
            print!("{}", info(&args)?);
            Ok(())
        }
        Command::Invariant(mut args) => {
            let (text, ok) = invariant(&mut args)?;
            print!("{text}");
            if ok {
                Ok(())
            } else {
                Err(Failure::Assertion("lowest coefficient disagrees with the linking numbers".into()))
            }
        }
        Command::Experiment(args) => {
            let report = experiment(&args)?;
            match args.format {
                Format::Tsv => print!("{}", report.to_tsv()),
                Format::Json => println!("{}", report.to_json()),
            }
            if let Some(dir) = &args.out {
                write_report(dir, &report)?;
            }
            eprintln!("{} in {:.3?}", report.summary(), report.runtime);
            if report.pass {
                Ok(())
            } else {
                let failed: Vec<&str> = report.failed_checks().map(|c| c.name.as_str()).collect();
                Err(Failure::Assertion(format!("failed checks: {}", failed.join(", "))))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
