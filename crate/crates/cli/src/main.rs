//! `artin`: normal forms, the word problem, homomorphism files, lifting and
//! the identity sweep from the command line.
//!
//! Exit codes: 0 success or true, 1 false or a failed check, 2 malformed
//! input, 3 lifting failure.

use std::fs;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use artin_core::garside::{equal, normalize, ArtinWord};
use artin_core::homs::{apply, failing_relations, HomSpec};
use artin_core::kernel::{lift_endomorphism, LiftError, LiftInput};
use artin_core::sweep::{run_sweep, SweepConfig};
use artin_core::CoxType;
use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "artin",
    version,
    about = "Exact computation in Artin groups of types A and D"
)]
struct Cli {
    /// Group designator such as A5 or D6, instead of the leading positional argument.
    #[arg(long, global = true)]
    group: Option<String>,

    /// Longest word accepted for normalization.
    #[arg(long, global = true, default_value_t = 10_000)]
    max_len: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form of a word: `nf [GROUP] WORD`.
    Nf {
        #[arg(num_args = 1..=2, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Decide whether two words are equal: `equal [GROUP] WORD1 WORD2`.
    Equal {
        #[arg(num_args = 2..=3, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Apply the homomorphism in a spec file to a word.
    Apply { spec: String, word: String },
    /// Check a spec file against every defining relation of its source.
    Verify { spec: String },
    /// Lift candidate images (a D_n to D_n spec file) to an endomorphism.
    Lift { spec: String },
    /// Run every identity family over a grid: `sweep N_MIN N_MAX P_RANGE Q_RANGE`.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
struct SweepArgs {
    n_min: usize,
    n_max: usize,
    /// Inclusive range such as `-1..1`.
    #[arg(allow_hyphen_values = true)]
    p_range: String,
    #[arg(allow_hyphen_values = true)]
    q_range: String,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Random words per (n, p) cell.
    #[arg(long)]
    samples: Option<usize>,
    /// Rewrite round trips per (type, n) cell.
    #[arg(long)]
    trials: Option<usize>,
}

enum Failure {
    Input(String),
    Lift(String),
}

impl From<artin_core::Error> for Failure {
    fn from(e: artin_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lift(msg)) => {
            eprintln!("lift failed: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Nf { args } => {
            let (typ, rest) = split_group(cli, args, 1)?;
            let w = parse_word(cli, typ, &rest[0])?;
            println!("{}", normalize(&w));
            Ok(true)
        }
        Command::Equal { args } => {
            let (typ, rest) = split_group(cli, args, 2)?;
            let u = parse_word(cli, typ, &rest[0])?;
            let v = parse_word(cli, typ, &rest[1])?;
            let same = equal(&u, &v)?;
            println!("{}", if same { "equal" } else { "distinct" });
            Ok(same)
        }
        Command::Apply { spec, word } => {
            let h = read_spec(cli, spec)?;
            let w = parse_word(cli, h.source(), word)?;
            println!("{}", apply(&h, &w)?);
            Ok(true)
        }
        Command::Verify { spec } => {
            let h = read_spec(cli, spec)?;
            let failing = failing_relations(&h);
            match failing.first() {
                None => {
                    println!("pass");
                    Ok(true)
                }
                Some((a, b)) => {
                    let p = h.source().family().generator_prefix();
                    println!(
                        "fail: relation between {p}{} and {p}{}",
                        a.index(),
                        b.index()
                    );
                    Ok(false)
                }
            }
        }
        Command::Lift { spec } => {
            let h = read_spec(cli, spec)?;
            let input = LiftInput::from_homspec(&h)?;
            match lift_endomorphism(&input) {
                Ok(lift) => {
                    print!("{}", lift.hom.to_interchange());
                    let ks: Vec<String> = lift.corrections.iter().map(i64::to_string).collect();
                    eprintln!("corrections: {}", ks.join(" "));
                    Ok(true)
                }
                Err(LiftError::Invalid(e)) => Err(e.into()),
                Err(e @ (LiftError::NotCentral(..) | LiftError::RelationFails(..))) => {
                    Err(Failure::Lift(e.to_string()))
                }
            }
        }
        Command::Sweep(args) => {
            let defaults = SweepConfig::default();
            if args.n_min < 4 || args.n_min > args.n_max {
                return Err(Failure::Input(format!(
                    "need 4 <= n_min <= n_max, got {}..{}",
                    args.n_min, args.n_max
                )));
            }
            let cfg = SweepConfig {
                ns: args.n_min..=args.n_max,
                ps: parse_range(&args.p_range)?,
                qs: parse_range(&args.q_range)?,
                seed: args.seed.unwrap_or(defaults.seed),
                random_words: args.samples.unwrap_or(defaults.random_words),
                rewrite_trials: args.trials.unwrap_or(defaults.rewrite_trials),
                broken_candidates: defaults.broken_candidates,
            };
            let report = run_sweep(&cfg);
            if args.json {
                let text = serde_json::to_string_pretty(&report).expect("plain data serializes");
                println!("{text}");
            } else {
                println!("{report}");
            }
            Ok(report.all_passed())
        }
    }
}

/// Separates the group designator from `want` remaining arguments.
fn split_group<'a>(
    cli: &Cli,
    args: &'a [String],
    want: usize,
) -> Result<(CoxType, &'a [String]), Failure> {
    let (designator, rest) = match &cli.group {
        Some(g) if args.len() == want => (g.as_str(), args),
        None if args.len() == want + 1 => (args[0].as_str(), &args[1..]),
        _ => {
            return Err(Failure::Input(format!(
                "expected a group (positional or --group) and {want} word argument(s)"
            )))
        }
    };
    Ok((designator.parse()?, rest))
}

fn parse_word(cli: &Cli, typ: CoxType, text: &str) -> Result<ArtinWord, Failure> {
    let w = ArtinWord::parse(typ, text)?;
    check_len(cli, &w)?;
    Ok(w)
}

fn check_len(cli: &Cli, w: &ArtinWord) -> Result<(), Failure> {
    if w.len() > cli.max_len {
        return Err(Failure::Input(format!(
            "word of length {} exceeds --max-len {}",
            w.len(),
            cli.max_len
        )));
    }
    Ok(())
}

fn read_spec(cli: &Cli, path: &str) -> Result<HomSpec, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    let h = HomSpec::from_interchange(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    for w in h.images() {
        check_len(cli, w)?;
    }
    Ok(h)
}

/// `a..b`, inclusive on both ends.
fn parse_range(text: &str) -> Result<RangeInclusive<i64>, Failure> {
    let bad = || Failure::Input(format!("invalid range '{text}', expected e.g. -1..1"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}
