//! Command-line surface. One thin binary dispatches to these functions; the
//! logic lives here so tests can drive it without spawning processes.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::Error;
use crate::models::{build, ModelId};
use crate::off::{fan_triangulate, parse_off};
use crate::orientation::{orientability_check, Orientability};
use crate::reduction::{reduce_with, ReductionConfig, ReductionTrace};
use crate::scx::{parse_scx, serialize_scx};
use crate::surface::{classify, connected_sum};

#[derive(Debug, Parser)]
#[command(name = "simplicia", version, about = "Simplicial complexes: counts, classification, reduction")]
pub struct Cli {
    /// Emit a single JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Input format; by default inferred from the file extension
    #[arg(long, global = true, value_enum)]
    pub format: Option<InputFormat>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Scx,
    Off,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the alternating count n0 - n1 + n2
    Chi {
        /// Input file, `-` for stdin
        #[arg(default_value = "-")]
        file: String,
    },
    /// Check face closure and report findings
    Validate {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Classify a surface complex
    Classify {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Decide orientability, with a witness cycle when it fails
    Orientable {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Run the triangle-removal reduction
    Reduce {
        #[arg(default_value = "-")]
        file: String,
        /// Print every step
        #[arg(long)]
        trace: bool,
        /// Seed triangle, e.g. `0,1,2`
        #[arg(long)]
        seed: Option<String>,
    },
    /// Write a model as SCX
    Build {
        /// sphere-tetra, sphere-cube, torus, klein, projective-plane,
        /// pinched-torus, genus:G, crosscaps:K
        model: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Glue two surfaces by connected sum and write the result as SCX
    ConnectSum {
        a: String,
        b: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Parses `argv` (excluding the program name is fine too) and runs it.
pub fn run_from_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, stdout, stderr),
        Err(e) => {
            // clap renders its own help/version output
            let rendered = e.render().to_string();
            if e.exit_code() == 0 {
                let _ = write!(stdout, "{rendered}");
                0
            } else {
                let _ = write!(stderr, "{rendered}");
                2
            }
        }
    }
}

/// Runs a parsed command. Exit status: 0 on success, 1 when validation or
/// classification fails, 2 on parse and usage errors.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::DegenerateSimplex { .. }
        | Error::DuplicateMaximalFace { .. }
        | Error::IndexOutOfRange { .. }
        | Error::DegenerateFace { .. }
        | Error::DiagonalCollision { .. }
        | Error::InvalidParameter(_) => 2,
        _ => 1,
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Error> {
    match &cli.command {
        Command::Chi { file } => {
            let c = load(file, cli.format)?;
            let chi = c.euler_characteristic()?;
            if cli.json {
                emit(out, &json!({ "chi": chi }));
            } else {
                let _ = writeln!(out, "{chi}");
            }
            Ok(0)
        }
        Command::Validate { file } => {
            let c = load(file, cli.format)?;
            let report = c.validate(None);
            let counts = c.counts();
            if cli.json {
                emit(
                    out,
                    &json!({
                        "valid": report.is_valid(),
                        "missing_faces": report.missing_faces,
                        "impure": report.impure,
                        "counts": counts,
                    }),
                );
            } else if report.is_valid() {
                let _ = writeln!(out, "ok: counts {counts}");
            } else {
                let _ = write!(out, "{report}");
            }
            Ok(if report.is_valid() { 0 } else { 1 })
        }
        Command::Classify { file } => {
            let c = load(file, cli.format)?;
            let report = classify(&c)?;
            if cli.json {
                emit(out, &serde_json::to_value(&report).expect("serializable"));
            } else {
                let _ = writeln!(out, "{report}");
                let _ = writeln!(out, "label: {}", report.label);
                if !report.pinch_vertices.is_empty() {
                    let pinches: Vec<String> =
                        report.pinch_vertices.iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(out, "pinch vertices: {}", pinches.join(" "));
                }
            }
            Ok(if report.orientable.is_some() { 0 } else { 1 })
        }
        Command::Orientable { file } => {
            let c = load(file, cli.format)?;
            match orientability_check(&c)? {
                Orientability::Orientable(assignment) => {
                    if cli.json {
                        emit(
                            out,
                            &json!({ "orientable": true, "witness": serde_json::Value::Null,
                                     "assigned_triangles": assignment.len() }),
                        );
                    } else {
                        let _ = writeln!(out, "orientable");
                    }
                }
                Orientability::NonOrientable(witness) => {
                    if cli.json {
                        emit(out, &json!({ "orientable": false, "witness": witness }));
                    } else {
                        let _ = writeln!(out, "non-orientable");
                        let cycle: Vec<String> = witness.iter().map(|t| t.to_string()).collect();
                        let _ = writeln!(out, "witness cycle: {}", cycle.join(" "));
                    }
                }
            }
            Ok(0)
        }
        Command::Reduce { file, trace, seed } => {
            let c = load(file, cli.format)?;
            let config = ReductionConfig {
                seed: seed.as_deref().map(parse_seed_triangle).transpose()?,
                ..ReductionConfig::default()
            };
            let result = reduce_with(&c, &config)?;
            if cli.json {
                emit(out, &trace_json(&result));
            } else {
                if *trace {
                    for (i, step) in result.steps.iter().enumerate() {
                        let _ = writeln!(out, "{:>3}. {step}", i + 1);
                    }
                }
                let counts = result.residual.counts();
                let _ = writeln!(
                    out,
                    "residual {} {} {}, total chi {}",
                    counts.get(0),
                    counts.get(1),
                    counts.get(2),
                    result.total_chi
                );
            }
            Ok(0)
        }
        Command::Build { model, output } => {
            let id: ModelId = model.parse()?;
            let c = build(&id)?;
            let scx = serialize_scx(&c);
            if cli.json {
                emit(
                    out,
                    &json!({
                        "model": id.to_string(),
                        "counts": c.counts(),
                        "chi": c.euler_characteristic()?,
                        "scx": scx,
                    }),
                );
                Ok(0)
            } else {
                write_text(output.as_deref(), &scx, out)
            }
        }
        Command::ConnectSum { a, b, output } => {
            let ca = load(a, cli.format)?;
            let cb = load(b, cli.format)?;
            let sum = connected_sum(&ca, &cb)?;
            let scx = serialize_scx(&sum);
            if cli.json {
                emit(
                    out,
                    &json!({
                        "counts": sum.counts(),
                        "chi": sum.euler_characteristic()?,
                        "scx": scx,
                    }),
                );
                Ok(0)
            } else {
                write_text(output.as_deref(), &scx, out)
            }
        }
    }
}

fn emit(out: &mut dyn Write, value: &serde_json::Value) {
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(value).expect("valid json"));
}

fn trace_json(trace: &ReductionTrace) -> serde_json::Value {
    let counts = trace.residual.counts();
    json!({
        "steps": trace.steps,
        "residual_counts": [counts.get(0), counts.get(1), counts.get(2)],
        "residual_chi": trace.residual_chi,
        "total_chi": trace.total_chi,
    })
}

fn parse_seed_triangle(text: &str) -> Result<Simplex, Error> {
    let ids: Result<Vec<u32>, _> = text
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect();
    let ids = ids.map_err(|_| {
        Error::InvalidParameter(format!("bad seed triangle {text:?}, expected `a,b,c`"))
    })?;
    if ids.len() != 3 {
        return Err(Error::InvalidParameter(format!(
            "seed triangle needs three vertices, got {}",
            ids.len()
        )));
    }
    Simplex::new(ids)
}

fn write_text(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<i32, Error> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot write {}: {e}", p.display()),
        })?,
        None => {
            let _ = write!(out, "{text}");
        }
    }
    Ok(0)
}

/// Reads a complex from a file or stdin, sniffing SCX vs OFF from the
/// extension unless overridden.
fn load(file: &str, format: Option<InputFormat>) -> Result<SimplicialComplex, Error> {
    let text = if file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse {
                line: 0,
                message: format!("cannot read stdin: {e}"),
            })?;
        buf
    } else {
        std::fs::read_to_string(file).map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot read {file}: {e}"),
        })?
    };
    let format = format.unwrap_or_else(|| {
        if Path::new(file)
            .extension()
            .is_some_and(|ext| ext.eq_ignore_ascii_case("off"))
        {
            InputFormat::Off
        } else {
            InputFormat::Scx
        }
    });
    match format {
        InputFormat::Scx => parse_scx(&text),
        InputFormat::Off => fan_triangulate(&parse_off(&text)?),
    }
}
