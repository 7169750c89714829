//! `sombor` command-line entry point.

mod input;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sombor::connectivity::{edge_connectivity, vertex_connectivity};
use sombor::extremal::{extremal_in_class, verify_all_theorems, ClassMode, Objective};
use sombor::graph::write_graph6;
use sombor::invariants::{index_with, EdgeFunction};
use sombor::qspr::{check_against_published_with, fit_all, Dataset, Tolerances};
use sombor::transforms::alpha_switch_search;

use input::{FamilyParams, GraphSource};
use output::{fixed, to_json};

#[derive(Debug, Parser)]
#[command(name = "sombor", version, about = "Sombor index laboratory")]
struct Cli {
    /// decimals printed for real values (16 or more prints full precision)
    #[arg(long, global = true, default_value_t = 6)]
    precision: usize,
    /// worker threads for exhaustive scans
    #[arg(long, global = true, env = "SOMBOR_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Vertex,
    Edge,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Max,
    Min,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sombor (or another degree-based) index of one graph
    So {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        params: FamilyParams,
        /// sombor, first_zagreb, second_zagreb, randic, harmonic, atom_bond_connectivity
        #[arg(long, default_value = "sombor")]
        index: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        /// shorthand for --format json
        #[arg(long)]
        json: bool,
    },
    /// Vertex and edge connectivity with cut certificates, as JSON
    Kappa {
        /// graph6 string
        graph6: String,
    },
    /// Print a named family as graph6 (or an edge list with --format csv)
    Gen {
        #[arg(long, value_enum)]
        family: input::Family,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Exhaustive extreme of SO over connected graphs with bounded connectivity
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "vertex")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "max")]
        objective: ObjectiveArg,
        #[arg(long)]
        json: bool,
    },
    /// Run every extremal and surgery claim up to --nmax vertices
    Verify {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Search the two-hub family for pairs where subdivision raises SO
    Counterexample {
        #[arg(long, default_value_t = 2)]
        dmin: usize,
        #[arg(long, default_value_t = 12)]
        dmax: usize,
    },
    /// Fit the four thermochemical properties against SO
    Qspr {
        /// CSV with header compound,dhc,dhf,dhsub,dhvap[,so]; bundled data when omitted
        #[arg(long)]
        dataset: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// compare against the reference values; exit 1 on any miss
        #[arg(long)]
        check: bool,
        /// absolute band for the SO column
        #[arg(long, value_parser = positive, requires = "check")]
        so_tol: Option<f64>,
        /// relative band for slope and intercept
        #[arg(long, value_parser = positive, requires = "check")]
        coef_rtol: Option<f64>,
        /// absolute band for R^2
        #[arg(long, value_parser = positive, requires = "check")]
        r2_tol: Option<f64>,
        /// relative band for RMSE
        #[arg(long, value_parser = positive, requires = "check")]
        rmse_rtol: Option<f64>,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        Ok(_) => Err("tolerance must be positive".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Outcome of a command that ran: success, or a failed check.
enum Status {
    Ok,
    CheckFailed,
}

/// Appends a line to the output buffer.
macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        writeln!($out, $($arg)*).expect("writing to a String");
    }};
}

fn run(cli: Cli, out: &mut String) -> Result<Status> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()?;
    }
    let p = cli.precision;
    match cli.command {
        Command::So {
            source,
            params,
            index,
            format,
            json,
        } => {
            let g = input::resolve(&source, &params)?;
            let Some(w) = EdgeFunction::by_name(&index) else {
                bail!("unknown index {index:?}")
            };
            let report = index_with(&g, w);
            match if json { Format::Json } else { format } {
                Format::Human => outln!(out, "{} = {}", report.name, fixed(report.total, p)),
                Format::Json => outln!(out, "{}", to_json("so", &report, p)),
                Format::Csv => {
                    outln!(out, "u,v,du,dv,value");
                    for e in &report.edges {
                        outln!(
                            out,
                            "{},{},{},{},{}",
                            e.u,
                            e.v,
                            e.du,
                            e.dv,
                            fixed(e.value, p)
                        );
                    }
                    outln!(out, "total,,,,{}", fixed(report.total, p));
                }
            }
        }
        Command::Kappa { graph6 } => {
            let g = sombor::graph::parse_graph6(&graph6)?;
            #[derive(Serialize)]
            struct KappaOut {
                graph6: String,
                n: usize,
                min_degree: usize,
                vertex: sombor::connectivity::Connectivity,
                edge: sombor::connectivity::Connectivity,
            }
            let kappa = KappaOut {
                graph6: write_graph6(&g),
                n: g.n(),
                min_degree: g.min_degree().unwrap_or(0),
                vertex: vertex_connectivity(&g),
                edge: edge_connectivity(&g),
            };
            outln!(out, "{}", to_json("kappa", &kappa, p));
        }
        Command::Gen {
            family,
            params,
            format,
        } => {
            let Some(n) = params.n else {
                bail!("--n is required")
            };
            let g = input::build_family(family, n, params.k)?;
            match format {
                Format::Csv => g.edges().iter().for_each(|(u, v)| outln!(out, "{u},{v}")),
                Format::Json => outln!(
                    out,
                    "{}",
                    to_json(
                        "gen",
                        &serde_json::json!({"graph6": write_graph6(&g), "edges": g.edges()}),
                        p
                    )
                ),
                Format::Human => outln!(out, "{}", write_graph6(&g)),
            }
        }
        Command::Extremal {
            n,
            k,
            mode,
            objective,
            json,
        } => {
            let mode = match mode {
                ModeArg::Vertex => ClassMode::Vertex,
                ModeArg::Edge => ClassMode::Edge,
            };
            let objective = match objective {
                ObjectiveArg::Max => Objective::Max,
                ObjectiveArg::Min => Objective::Min,
            };
            let r = extremal_in_class(n, k, mode, objective)?;
            if json {
                outln!(out, "{}", to_json("extremal", &r, p));
            } else {
                outln!(
                    out,
                    "n={} k={} mode={:?} objective={:?}",
                    r.n,
                    r.k,
                    r.mode,
                    r.objective
                );
                outln!(out, "class size      {}", r.class_size);
                outln!(out, "best SO         {}", fixed(r.best_value, p));
                outln!(out, "expected SO     {}", fixed(r.expected_value, p));
                outln!(
                    out,
                    "optimal graphs  {} ({} labelled)",
                    r.argbest.join(" "),
                    r.labelled_optima
                );
                outln!(out, "agrees          {}", r.agrees);
            }
            if !r.agrees {
                return Ok(Status::CheckFailed);
            }
        }
        Command::Verify { nmax, json } => {
            let s = verify_all_theorems(nmax)?;
            if json {
                outln!(out, "{}", to_json("verify", &s, p));
            } else {
                for c in &s.claims {
                    let margin = c.margin.map_or_else(|| "-".to_string(), |m| fixed(m, p));
                    outln!(
                        out,
                        "{}  {:<62} {:<28} margin {}",
                        if c.passed { "PASS" } else { "FAIL" },
                        c.claim,
                        c.scope,
                        margin
                    );
                }
                let failed = s.claims.iter().filter(|c| !c.passed).count();
                outln!(out, "{} claims, {} failed", s.claims.len(), failed);
            }
            if !s.all_passed() {
                return Ok(Status::CheckFailed);
            }
        }
        Command::Counterexample { dmin, dmax } => {
            let pairs = alpha_switch_search(dmin, dmax)?;
            outln!(out, "{}", to_json("counterexample", &pairs, p));
        }
        Command::Qspr {
            dataset,
            json,
            check,
            so_tol,
            coef_rtol,
            r2_tol,
            rmse_rtol,
        } => {
            let ds = match dataset {
                Some(path) => Dataset::load(path)?,
                None => Dataset::bundled(),
            };
            let study = fit_all(&ds)?;
            let mut tol = Tolerances::default();
            tol.so_absolute = so_tol.unwrap_or(tol.so_absolute);
            tol.coefficient_relative = coef_rtol.unwrap_or(tol.coefficient_relative);
            tol.r_squared_absolute = r2_tol.unwrap_or(tol.r_squared_absolute);
            tol.rmse_relative = rmse_rtol.unwrap_or(tol.rmse_relative);
            let checks = if check {
                check_against_published_with(&ds, &study, &tol)
            } else {
                Vec::new()
            };
            if json {
                #[derive(Serialize)]
                struct Point {
                    compound: String,
                    so: f64,
                    observed: f64,
                    predicted: f64,
                }
                #[derive(Serialize)]
                struct QsprOut<'a> {
                    study: &'a sombor::qspr::QsprStudy,
                    points: Vec<(sombor::qspr::Property, Vec<Point>)>,
                    #[serde(skip_serializing_if = "Vec::is_empty")]
                    checks: Vec<sombor::qspr::CheckLine>,
                }
                let points = study
                    .fits
                    .iter()
                    .map(|f| {
                        let pts = ds
                            .rows
                            .iter()
                            .map(|r| Point {
                                compound: r.name.clone(),
                                so: r.so,
                                observed: r.property(f.property),
                                predicted: f.model.predict(r.so),
                            })
                            .collect();
                        (f.property, pts)
                    })
                    .collect();
                outln!(
                    out,
                    "{}",
                    to_json(
                        "qspr",
                        &QsprOut {
                            study: &study,
                            points,
                            checks: checks.clone()
                        },
                        p
                    )
                );
            } else {
                outln!(
                    out,
                    "{:<32} {:>10} {:>10} {:>9} {:>9}",
                    "property",
                    "slope",
                    "intercept",
                    "R^2",
                    "RMSE"
                );
                for f in &study.fits {
                    let m = &f.model;
                    outln!(
                        out,
                        "{:<32} {:>10.4} {:>10.3} {:>9.5} {:>9.4}",
                        f.property.label(),
                        m.slope,
                        m.intercept,
                        m.r_squared,
                        m.rmse
                    );
                }
                for c in &checks {
                    outln!(
                        out,
                        "{}  {:<48} computed {:>14} reference {:>12} ({})",
                        if c.passed { "PASS" } else { "FAIL" },
                        c.item,
                        fixed(c.computed, p),
                        c.reference,
                        c.tolerance
                    );
                }
            }
            if checks.iter().any(|c| !c.passed) {
                return Ok(Status::CheckFailed);
            }
        }
    }
    Ok(Status::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let status = run(cli, &mut out);
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout
        .write_all(out.as_bytes())
        .and_then(|()| stdout.flush())
    {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match status {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
