//! `dstrig`: classify de Sitter triangles, compute their areas, generate
//! seeded examples, run verification batches and draw them.

mod document;
mod exit;
mod plot;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dstrig_core::{
    verify_type, GeneratorConfig, ProperName, TriangleSampler, TypeReport, VerifyOptions,
};
use serde::Serialize;

use crate::document::{parse_documents, read_input, TriangleDocument, SCHEMA};
use crate::exit::Failure;

#[derive(Parser)]
#[command(name = "dstrig", version, about = "Triangles on the de Sitter plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// JSON document file, or `-` for standard input.
    #[arg(long, short, default_value = "-")]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every document in the input by the causal types of its edges.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Angles, pseudo-angles and area of every document in the input.
    Area {
        #[command(flatten)]
        input: Input,
        /// Also integrate the area numerically and report the discrepancy.
        #[arg(long)]
        oracle: bool,
        /// Oracle grid size.
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(8..))]
        grid: u64,
    },
    /// Emit seeded random triangles of one type, one document per line.
    Random {
        #[arg(long = "type", value_parser = parse_name)]
        target: ProperName,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Vertices are drawn with chart coordinate |u| <= u_max.
        #[arg(long, default_value_t = 2.0)]
        u_max: f64,
        #[arg(long, default_value_t = 100_000)]
        max_attempts: usize,
    },
    /// Check every invariant and the oracle on random batches.
    Verify {
        /// A triangle type without null edges, or `all`.
        #[arg(long = "type", default_value = "all", value_parser = parse_target)]
        target: Target,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(8..))]
        grid: u64,
        #[arg(long, default_value_t = 2.0)]
        u_max: f64,
        /// Skip the numerical integration.
        #[arg(long)]
        no_oracle: bool,
        /// Fault injection: flip one outer normal of every triangle.
        #[arg(long, hide = true)]
        corrupt_normals: bool,
    },
    /// Draw a triangle as SVG, projected onto the (x1, x2) plane.
    Plot {
        #[command(flatten)]
        input: Input,
        /// Output file; standard output when omitted.
        #[arg(long, short)]
        out: Option<String>,
        /// Points per edge.
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
}

#[derive(Clone, Copy)]
enum Target {
    All,
    One(ProperName),
}

fn parse_name(s: &str) -> Result<ProperName, String> {
    s.parse()
}

fn parse_target(s: &str) -> Result<Target, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Target::All);
    }
    let name: ProperName = s.parse()?;
    if !ProperName::NON_NULL.contains(&name) {
        return Err(format!(
            "`{name}` triangles have a null edge and no area formula"
        ));
    }
    Ok(Target::One(name))
}

fn emit(out: &mut impl Write, value: &impl Serialize) -> Result<(), Failure> {
    let line = serde_json::to_string(value)
        .map_err(|e| Failure::new(exit::CHECK_FAILED, format!("serializing output: {e}")))?;
    writeln!(out, "{line}")
        .map_err(|e| Failure::new(exit::CHECK_FAILED, format!("writing output: {e}")))
}

/// Runs `f` on each document; later documents are still processed after a
/// failure, and the first failure's code is returned.
fn each_document<T: Serialize>(
    input: &Input,
    mut f: impl FnMut(&TriangleDocument) -> Result<(T, i32), Failure>,
) -> Result<i32, Failure> {
    let docs = parse_documents(&read_input(&input.input)?)?;
    let mut stdout = std::io::stdout().lock();
    let mut code = exit::OK;
    for (i, doc) in docs.iter().enumerate() {
        match f(doc) {
            Ok((report, c)) => {
                emit(&mut stdout, &report)?;
                if code == exit::OK {
                    code = c;
                }
            }
            Err(e) => {
                eprintln!("dstrig: {}: {e}", doc.label(i));
                if code == exit::OK {
                    code = e.code;
                }
            }
        }
    }
    Ok(code)
}

#[derive(Serialize)]
struct VerifySummary {
    schema: u32,
    passed: bool,
    reports: Vec<TypeReport>,
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Classify { input } => each_document(&input, |doc| {
            Ok((
                report::classify(&doc.points()?, doc.name.clone())?,
                exit::OK,
            ))
        }),
        Command::Area {
            input,
            oracle,
            grid,
        } => each_document(&input, |doc| {
            let grid = oracle.then_some(grid as usize);
            let r = report::area(&doc.points()?, doc.name.clone(), grid)?;
            let code = if r.oracle_ok() {
                exit::OK
            } else {
                exit::CHECK_FAILED
            };
            Ok((r, code))
        }),
        Command::Random {
            target,
            seed,
            count,
            u_max,
            max_attempts,
        } => {
            let mut cfg = GeneratorConfig::new(target, seed);
            cfg.u_max = u_max;
            cfg.max_attempts = max_attempts;
            let mut sampler = TriangleSampler::new(cfg)?;
            let mut stdout = std::io::stdout().lock();
            for i in 0..count {
                let tri = sampler.next_triangle()?;
                let doc = TriangleDocument::from_triangle(
                    &tri,
                    Some(format!("{target}-{i}")),
                    Some(seed),
                );
                emit(&mut stdout, &doc)?;
            }
            Ok(exit::OK)
        }
        Command::Verify {
            target,
            trials,
            seed,
            grid,
            u_max,
            no_oracle,
            corrupt_normals,
        } => {
            let targets = match target {
                Target::All => ProperName::NON_NULL.to_vec(),
                Target::One(name) => vec![name],
            };
            let opts = VerifyOptions {
                grid: grid as usize,
                u_max,
                corrupt_normals,
                run_oracle: !no_oracle,
            };
            let mut reports = Vec::new();
            let mut failure = None;
            for t in targets {
                match verify_type(t, trials as usize, seed, &opts) {
                    Ok(r) => reports.push(r),
                    Err(e) => {
                        failure = Some(Failure::from(e));
                        break;
                    }
                }
            }
            let passed = failure.is_none() && reports.iter().all(TypeReport::passed);
            emit(
                &mut std::io::stdout().lock(),
                &VerifySummary {
                    schema: SCHEMA,
                    passed,
                    reports,
                },
            )?;
            match failure {
                Some(f) => Err(f),
                None if passed => Ok(exit::OK),
                None => Ok(exit::CHECK_FAILED),
            }
        }
        Command::Plot {
            input,
            out,
            samples,
        } => {
            let docs = parse_documents(&read_input(&input.input)?)?;
            let [doc] = docs.as_slice() else {
                return Err(Failure::input(format!(
                    "plot takes exactly one document, found {}",
                    docs.len()
                )));
            };
            let svg = plot::render(&doc.points()?, samples)?;
            match out {
                Some(path) => std::fs::write(&path, svg)
                    .map_err(|e| Failure::input(format!("writing {path}: {e}")))?,
                None => print!("{svg}"),
            }
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("dstrig: {e}");
            e.code
        }
    };
    ExitCode::from(code as u8)
}
