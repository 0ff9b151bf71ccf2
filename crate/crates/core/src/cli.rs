//! Command-line front end. Exit codes: 0 on success, 1 for usage errors,
//! 2 when the input lies outside the mathematical domain of a command.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::alcoves::{classify_alcove, lambda_prime, pair_verdict, MatchMode, Region};
use crate::chars::{decompose_weyl, simple_char, summands_char, tilting_char, weyl_char, FormalCharacter, SummandList};
use crate::error::Error;
use crate::extcmp::{ext_compare_with, scan, ExtVerdict, ScanMode, ScanOptions};
use crate::tensor::{socle_tensor, tensor_simple_alpha13, SocleReport};
use crate::weights::{Params, Weight, WeightTuple};

#[derive(Parser, Debug)]
#[command(
    name = "gl3-serre",
    version,
    about = "Serre weights of GL3(F_q): alcoves, characters and Ext comparison"
)]
pub struct Cli {
    /// The prime p (at least 5).
    #[arg(long, global = true)]
    p: Option<i64>,
    /// Degree f of F_q over F_p.
    #[arg(long, global = true, default_value_t = 1)]
    f: usize,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for `scan`.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Seed for sampled scans.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CharKind {
    Weyl,
    Simple,
    Tilting,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long, allow_hyphen_values = true)]
    lambda: WeightTuple,
    #[arg(long = "lambda-prime", allow_hyphen_values = true)]
    lambda_prime: WeightTuple,
    /// Compare weight tuples literally instead of up to twist.
    #[arg(long)]
    literal: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Region of a weight.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Weyl, simple or tilting character.
    Char {
        #[arg(long, value_enum)]
        kind: CharKind,
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Summands of L(λ) ⊗ L(α13).
    Tensor {
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Socle of F(λ) ⊗ F(α13)^[j0].
    Socle {
        #[arg(long, alias = "weight", allow_hyphen_values = true)]
        lambda: WeightTuple,
        #[arg(long, default_value_t = 0)]
        j0: usize,
    },
    /// Regions, matched shape and bad-pair tests for a pair.
    Pair(PairArgs),
    /// Ext comparison verdict for a pair.
    Ext(PairArgs),
    /// Verdicts over all pairs of Serre weights of a given shape.
    Scan {
        /// Every pair of twist classes instead of root-shift neighbours.
        #[arg(long)]
        exhaustive: bool,
        /// Evaluate only this many pairs, chosen with --seed.
        #[arg(long)]
        sample: Option<usize>,
    },
}

#[derive(Serialize)]
struct ClassifyOutput {
    weight: Weight,
    p: i64,
    region: Region,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda_prime: Option<Weight>,
}

#[derive(Serialize)]
struct CharOutput {
    kind: CharKind,
    weight: Weight,
    p: i64,
    dim: i64,
    weyl_decomposition: Vec<WeylTerm>,
    character: FormalCharacter,
}

#[derive(Serialize)]
struct WeylTerm {
    weight: Weight,
    mult: i64,
}

#[derive(Serialize)]
struct TensorOutput {
    weight: Weight,
    p: i64,
    dim: i64,
    summands: SummandList,
}

#[derive(Serialize)]
struct SocleOutput {
    lambda: WeightTuple,
    j0: usize,
    #[serde(flatten)]
    report: SocleReport,
}

#[derive(Serialize)]
struct ExtOutput {
    lambda: WeightTuple,
    lambda_prime: WeightTuple,
    #[serde(flatten)]
    verdict: ExtVerdict,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_domain() {
            Failure::Domain(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("serializable output");
    out.push(b'\n');
    out
}

fn execute(cli: &Cli) -> Result<Vec<u8>, Failure> {
    let p = cli
        .p
        .ok_or_else(|| Failure::Usage("missing required option --p".into()))?;
    let params = Params::new(p, cli.f)?;
    let is_scan = matches!(cli.command, Command::Scan { .. });
    if cli.format == Format::Csv && !is_scan {
        return Err(Failure::Usage("--format csv is only available for scan".into()));
    }
    let mode = |args: &PairArgs| {
        if args.literal {
            MatchMode::Literal
        } else {
            MatchMode::Twist
        }
    };
    let bytes = match &cli.command {
        Command::Classify { weight } => {
            let region = classify_alcove(*weight, p);
            let lambda_prime = region
                .in_tilting_domain()
                .then(|| lambda_prime(*weight, p))
                .transpose()?;
            json(&ClassifyOutput {
                weight: *weight,
                p,
                region,
                lambda_prime,
            })
        }
        Command::Char { kind, weight } => {
            let character = match kind {
                CharKind::Weyl => weyl_char(*weight),
                CharKind::Simple => simple_char(*weight, p)?,
                CharKind::Tilting => tilting_char(*weight, p)?,
            };
            let weyl_decomposition = decompose_weyl(&character)?
                .into_iter()
                .map(|(weight, mult)| WeylTerm { weight, mult })
                .collect();
            json(&CharOutput {
                kind: *kind,
                weight: *weight,
                p,
                dim: character.dim(),
                weyl_decomposition,
                character,
            })
        }
        Command::Tensor { weight } => {
            let summands = tensor_simple_alpha13(*weight, p)?;
            let dim = summands_char(&summands, p)?.dim();
            json(&TensorOutput {
                weight: *weight,
                p,
                dim,
                summands,
            })
        }
        Command::Socle { lambda, j0 } => {
            let report = socle_tensor(lambda, *j0, &params)?;
            json(&SocleOutput {
                lambda: lambda.clone(),
                j0: *j0,
                report,
            })
        }
        Command::Pair(args) => json(&pair_verdict(&args.lambda, &args.lambda_prime, &params, mode(args))?),
        Command::Ext(args) => {
            let verdict = ext_compare_with(&args.lambda, &args.lambda_prime, &params, mode(args))?;
            json(&ExtOutput {
                lambda: args.lambda.clone(),
                lambda_prime: args.lambda_prime.clone(),
                verdict,
            })
        }
        Command::Scan { exhaustive, sample } => {
            if cli.jobs == 0 {
                return Err(Failure::Usage("--jobs must be positive".into()));
            }
            let options = ScanOptions {
                mode: if *exhaustive {
                    ScanMode::Exhaustive
                } else {
                    ScanMode::Shifts
                },
                sample: *sample,
                seed: cli.seed,
                jobs: cli.jobs,
                ..ScanOptions::default()
            };
            let report = scan(&params, &options)?;
            match cli.format {
                Format::Json => json(&report),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    for r in &report.records {
                        w.serialize(r).map_err(|e| Failure::Usage(e.to_string()))?;
                    }
                    w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?
                }
            }
        }
    };
    Ok(bytes)
}

/// Runs the program on `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = execute(&cli).and_then(|bytes| {
        match &cli.out {
            Some(path) => File::create(path)?.write_all(&bytes)?,
            None => stdout.write_all(&bytes)?,
        }
        Ok(())
    });
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}
