mod suites;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use capelli::central::{build_program, eigenvalue_action, eigenvalue_closed, CentralSpec};
use capelli::partitions::{horizontal_strips, partitions_up_to, vertical_strips, Partition};
use capelli::rational::rat_to_string;
use capelli::shifted::{chi, eigenvalue_csv};

#[derive(Parser)]
#[command(
    name = "capelli",
    about = "Exact eigenvalues and Harish-Chandra images of central elements of U(gl(n))",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum StripDirection {
    Horizontal,
    Vertical,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalue of a central element on the Schur module of shape mu.
    Eig {
        /// Central element, e.g. H:2, I:3, K:2,1, S:3,1, H:2*I:1.
        #[arg(long)]
        spec: String,
        /// Partition, e.g. 3,2 (empty string for the empty shape).
        #[arg(long, default_value = "")]
        mu: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Lift the size guards.
        #[arg(long)]
        force: bool,
    },
    /// Harish-Chandra image as a shifted symmetric polynomial.
    Chi {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        force: bool,
    },
    /// Enumerate generalized strips with their factorial annotations.
    Strips {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "horizontal")]
        kind: StripDirection,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Eigenvalue table of a central element over all shapes up to a weight.
    Table {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "6")]
        max_weight: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        force: bool,
    },
    /// Run a verification suite; nonzero exit on any failing property.
    Verify {
        /// One of: triple-eigenvalue, duality, schur-orthogonality,
        /// vanishing, regonati, stability, zeta2-identity, wilf,
        /// straightening, ad-invariance, devirtualize.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        max_weight: Option<u32>,
        #[arg(long)]
        force: bool,
    },
}

fn max_cells() -> u32 {
    std::env::var("CAPELLI_MAX_CELLS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(12)
}

fn guard(weight: u32, n: u32, force: bool) -> Result<(), String> {
    if force {
        return Ok(());
    }
    if weight > max_cells() {
        return Err(format!(
            "weight {weight} exceeds the guard ({}); pass --force or set CAPELLI_MAX_CELLS",
            max_cells()
        ));
    }
    if n > 6 {
        return Err(format!("n = {n} exceeds the guard (6); pass --force"));
    }
    Ok(())
}

fn run() -> Result<(), String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Eig {
            spec,
            mu,
            n,
            format,
            force,
        } => {
            let spec: CentralSpec = spec.parse().map_err(|e| format!("{e}"))?;
            let mu: Partition = mu.parse().map_err(|e| format!("{e}"))?;
            guard(mu.weight().max(spec.filtration_degree() as u32), n, force)?;
            let action = eigenvalue_action(&spec, &mu, n).map_err(|e| format!("{e}"))?;
            let closed = eigenvalue_closed(&spec, &mu, n).ok();
            if let Some(c) = &closed {
                if *c != action {
                    return Err(format!(
                        "route disagreement on {spec} at {mu}: action {} vs closed {}",
                        rat_to_string(&action),
                        rat_to_string(c)
                    ));
                }
            }
            match format {
                Format::Json => {
                    let mut routes = serde_json::Map::new();
                    routes.insert("action".into(), rat_to_string(&action).into());
                    if let Some(c) = &closed {
                        routes.insert("closed".into(), rat_to_string(c).into());
                        routes.insert("agreement".into(), true.into());
                    }
                    let out = serde_json::json!({
                        "value": rat_to_string(&action),
                        "routes": routes,
                    });
                    println!("{out}");
                }
                Format::Csv => {
                    println!("mu,value");
                    println!("\"{mu}\",{}", rat_to_string(&action));
                }
            }
        }
        Command::Chi {
            spec,
            n,
            format,
            force,
        } => {
            let spec: CentralSpec = spec.parse().map_err(|e| format!("{e}"))?;
            guard(spec.filtration_degree() as u32, n, force)?;
            let poly = chi(&spec, n as usize).map_err(|e| format!("{e}"))?;
            match format {
                Format::Json => {
                    let terms = poly.to_json_terms();
                    println!("{}", serde_json::to_string(&terms).expect("serializable"));
                }
                Format::Csv => {
                    println!("exponents,coeff");
                    for t in poly.to_json_terms() {
                        let exps: Vec<String> = t.exponents.iter().map(u32::to_string).collect();
                        println!("\"{}\",{}", exps.join(" "), t.coeff);
                    }
                }
            }
        }
        Command::Strips { mu, k, kind, format } => {
            let mu: Partition = mu.parse().map_err(|e| format!("{e}"))?;
            let strips = match kind {
                StripDirection::Horizontal => horizontal_strips(&mu, k),
                StripDirection::Vertical => vertical_strips(&mu, k),
            };
            let total: u64 = strips.iter().map(|s| s.annotation()).sum();
            match format {
                Format::Json => {
                    let list: Vec<serde_json::Value> = strips
                        .iter()
                        .map(|s| {
                            serde_json::json!({
                                "cells": s.cells(),
                                "annotation": s.annotation(),
                            })
                        })
                        .collect();
                    let out = serde_json::json!({
                        "count": strips.len(),
                        "annotation_sum": total,
                        "strips": list,
                    });
                    println!("{out}");
                }
                Format::Csv => {
                    println!("cells,annotation");
                    for s in strips {
                        let cells: Vec<String> =
                            s.cells().iter().map(|(r, c)| format!("{r}:{c}")).collect();
                        println!("\"{}\",{}", cells.join(" "), s.annotation());
                    }
                }
            }
        }
        Command::Table {
            spec,
            n,
            max_weight,
            format,
            force,
        } => {
            let spec: CentralSpec = spec.parse().map_err(|e| format!("{e}"))?;
            guard(max_weight.max(spec.filtration_degree() as u32), n, force)?;
            // Materialize once to validate the spec against n before looping.
            build_program(&spec, n).map_err(|e| format!("{e}"))?;
            let mut rows = Vec::new();
            for mu in partitions_up_to(max_weight, Some(n)) {
                let value = eigenvalue_action(&spec, &mu, n).map_err(|e| format!("{e}"))?;
                rows.push((mu, value));
            }
            match format {
                Format::Csv => print!("{}", eigenvalue_csv(&rows)),
                Format::Json => {
                    let list: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(mu, v)| {
                            serde_json::json!({
                                "mu": mu.to_string(),
                                "value": rat_to_string(v),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(list));
                }
            }
        }
        Command::Verify {
            suite,
            n,
            max_weight,
            force,
        } => {
            if let (Some(w), Some(nn)) = (max_weight, n) {
                guard(w, nn, force)?;
            }
            let report = suites::run_suite(&suite, n, max_weight)?;
            print!("{report}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
