//! Command-line surface for the preproj toolkit.
//!
//! Subcommands mirror the library: quiver construction, root enumeration,
//! dominance reduction, classification of simples, the brute-force oracle,
//! the Khare bridge, reflection functors, relation checks and the induction
//! criteria. Output is JSON by default (JSON Lines for enumerations), with
//! `--format table` for human-readable views. Exact scalars are never
//! printed as floats. Exit codes: 0 success, 1 computation-domain error,
//! 2 validation error. Set `PREPROJ_LOG=debug` for logging.

mod io;

use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use preproj_core as core;
use preproj_core::{Error as CoreError, InductionTargets};
use serde_json::json;

#[derive(Parser)]
#[command(name = "preproj", version, about = "Exact computations with infinite affine quivers and their deformed preprojective algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for enumeration subcommands (output order unaffected).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a quiver and print its canonical form, optionally with a
    /// finite window of arrows.
    Quiver {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        window: Option<String>,
    },
    /// Positive roots supported in a window (JSON lines).
    Roots {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        window: String,
    },
    /// Conjugate a weight into a weakly dominant one on a window.
    Dominate {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        window: String,
    },
    /// Certificates for the simple modules supported in a window (JSON lines).
    Classify {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        window: String,
    },
    /// Brute-force oracle: chain solution on an interval, or tree flow for an
    /// explicit multiplicity-free dimension vector.
    Oracle {
        #[arg(long, default_value = "A_plus_inf")]
        quiver: String,
        #[arg(long)]
        weight: String,
        /// Interval s..r for the chain oracle.
        #[arg(long, conflicts_with = "alpha")]
        interval: Option<String>,
        /// Dimension vector as JSON, e.g. '{"0":1,"2":1}'.
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Khare modules V(r,s) for a Casimir polynomial f (coefficients low
    /// degree first; paper convention is no constant term).
    Khare {
        #[arg(long, default_value = "0")]
        f: String,
        #[arg(long)]
        rmax: u64,
    },
    /// Apply a reflection functor (one vertex or a word) to a module file.
    Reflect {
        #[arg(long)]
        module: String,
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value = "0")]
        nu: String,
        #[arg(long, conflicts_with = "word")]
        vertex: Option<i64>,
        /// Comma-separated word, applied right to left.
        #[arg(long)]
        word: Option<String>,
        /// Write the reflected module JSON here instead of stdout.
        #[arg(long)]
        out: Option<String>,
    },
    /// Check the defining relations of a module file; optionally decide
    /// isomorphism against a second module.
    CheckRep {
        #[arg(long)]
        module: String,
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value = "0")]
        nu: String,
        /// Second module to compare with (exact isomorphism test).
        #[arg(long)]
        against: Option<String>,
        /// Seed for the randomized isomorphism witness search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate the wreath-product induction conditions.
    InduceCheck {
        #[arg(long)]
        quiver: String,
        /// Composition of n, e.g. 2,1.
        #[arg(long)]
        partition: String,
        /// Young diagrams, one per part: rows comma-separated, diagrams
        /// separated by semicolons, e.g. "2;1".
        #[arg(long)]
        diagrams: String,
        /// One vertex per part.
        #[arg(long, conflicts_with = "roots")]
        vertices: Option<String>,
        /// One root per part, as a JSON list of dimension vectors.
        #[arg(long)]
        roots: Option<String>,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        nu: String,
        /// Also run the direct zero-arrow relation check (vertex targets).
        #[arg(long, default_value_t = false)]
        verify: bool,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("PREPROJ_LOG")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            exit_code_for(&err)
        }
    }
}

/// Validation problems (malformed flags, files, schemas) exit 2; failures of
/// the computation domain (oversize inputs, out-of-scope requests) exit 1.
fn exit_code_for(err: &anyhow::Error) -> ExitCode {
    if let Some(core_err) = err.downcast_ref::<CoreError>() {
        return match core_err {
            CoreError::DiagramTooLarge(..)
            | CoreError::OracleScope(_)
            | CoreError::NotTypeA
            | CoreError::DeltaUndefined
            | CoreError::NonDynkinWindow
            | CoreError::LoopVertex(_)
            | CoreError::RelationCheckFailed(_)
            | CoreError::PartitionMismatch(_)
            | CoreError::Internal(_) => ExitCode::from(1),
            _ => ExitCode::from(2),
        };
    }
    ExitCode::from(2)
}

fn run(cli: Cli) -> Result<()> {
    let format = cli.format;
    match cli.command {
        Command::Quiver { quiver, window } => {
            let q = io::parse_quiver(&quiver)?;
            let mut doc = json!({ "quiver": q.to_spec() });
            if let Some(w) = window {
                let win = q.window(io::parse_window(&w)?)?;
                doc["window"] = json!({
                    "vertices": win.vertices(),
                    "arrows": win.arrows(),
                });
            }
            emit(format, &doc, || {
                let mut s = format!("quiver: {quiver}");
                if let Some(win) = doc.get("window") {
                    s.push_str(&format!(
                        "\nwindow vertices: {}\nwindow arrows: {}",
                        win["vertices"], win["arrows"]
                    ));
                }
                s
            });
        }
        Command::Roots { quiver, window } => {
            let q = io::parse_quiver(&quiver)?;
            let win = q.window(io::parse_window(&window)?)?;
            let roots = core::enumerate_positive_roots(&q, &win)?;
            for alpha in &roots {
                let doc = json!({ "root": alpha, "height": alpha.total() });
                emit(format, &doc, || format!("{alpha:?}  height {}", alpha.total()));
            }
            log::info!("{} positive roots", roots.len());
        }
        Command::Dominate { quiver, weight, window } => {
            let q = io::parse_quiver(&quiver)?;
            let lam = io::parse_weight(&weight)?;
            let j = io::parse_window(&window)?;
            let (dominant, word) = core::dominate(&q, &lam, &j)?;
            let doc = json!({ "dominant": dominant, "word": word });
            emit(format, &doc, || {
                let values: Vec<String> = j.iter().map(|&v| dominant.at(v).to_string()).collect();
                format!("dominant on {j:?}: [{}]\nword: {:?}", values.join(", "), word.0)
            });
        }
        Command::Classify { quiver, weight, window } => {
            let q = io::parse_quiver(&quiver)?;
            let lam = io::parse_weight(&weight)?;
            let j = io::parse_window(&window)?;
            let certs = classify_parallel(&q, &lam, &j, cli.jobs)?;
            for cert in &certs {
                emit(format, &serde_json::to_value(cert)?, || {
                    format!(
                        "simple at {:?}{}",
                        cert.alpha,
                        cert.edge_scalars
                            .as_ref()
                            .map(|u| format!("  edge scalars {u:?}"))
                            .unwrap_or_default()
                    )
                });
            }
            log::info!("{} simple modules", certs.len());
        }
        Command::Oracle { quiver, weight, interval, alpha } => {
            let q = io::parse_quiver(&quiver)?;
            let lam = io::parse_weight(&weight)?;
            let doc = match (interval, alpha) {
                (Some(range), None) => {
                    let vs = io::parse_window(&range)?;
                    let (s, r) = (vs[0], *vs.last().unwrap());
                    let sol = core::solve_chain(&q, &lam, s, r)?;
                    json!({ "exists": sol.is_some(), "solution": sol })
                }
                (None, Some(alpha)) => {
                    let alpha: core::DimVec = serde_json::from_str(&alpha)?;
                    let rep = core::oracle_simple(&q, &lam, &alpha)?;
                    json!({ "exists": rep.is_some(), "witness": rep })
                }
                _ => anyhow::bail!("pass exactly one of --interval or --alpha"),
            };
            emit(format, &doc, || format!("exists: {}", doc["exists"]));
        }
        Command::Khare { f, rmax } => {
            let poly = core::CasimirPolynomial::parse(&f)?;
            let modules = core::enumerate_vrs(&poly, rmax);
            if format == Format::Table {
                println!("{:>4} {:>4} {:>8}", "s", "r", "dim");
                for m in &modules {
                    println!("{:>4} {:>4} {:>8}", m.s, m.r, m.dim);
                }
            } else {
                for m in &modules {
                    println!("{}", serde_json::to_string(m)?);
                }
            }
            log::info!("{} modules V(r,s)", modules.len());
        }
        Command::Reflect { module, quiver, weight, nu, vertex, word, out } => {
            let q = io::parse_quiver(&quiver)?;
            let v = io::read_module(&module)?;
            let lam = io::parse_weight(&weight)?;
            let nu = io::parse_scalar(&nu)?;
            let word = match (vertex, word) {
                (Some(i), None) => core::ReflectionWord(vec![i]),
                (None, Some(w)) => io::parse_word(&w)?,
                _ => anyhow::bail!("pass exactly one of --vertex or --word"),
            };
            let result = core::reflect_word(&q, &v, &lam, &nu, &word)?;
            let report = core::check_wreath(&q, &result.module, &result.weight, &nu);
            let doc = json!({
                "module": result.module,
                "weight": result.weight,
                "check": report,
                "warnings": result.warnings,
            });
            if let Some(path) = out {
                std::fs::write(&path, serde_json::to_string_pretty(&result.module)?)?;
                log::info!("module written to {path}");
                let slim = json!({ "check": report, "warnings": result.warnings, "out": path });
                emit(format, &slim, || format!("check pass: {}", report.pass()));
            } else {
                emit(format, &doc, || format!("check pass: {}", report.pass()));
            }
        }
        Command::CheckRep { module, quiver, weight, nu, against, seed } => {
            let q = io::parse_quiver(&quiver)?;
            let v = io::read_module(&module)?;
            let lam = io::parse_weight(&weight)?;
            let nu = io::parse_scalar(&nu)?;
            let report = core::check_wreath(&q, &v, &lam, &nu);
            let mut doc = json!({ "pass": report.pass(), "report": report });
            if let Some(path) = against {
                let w = io::read_module(&path)?;
                let witness = core::is_isomorphic(&q, &v, &w, &lam, &nu, seed)?;
                doc["isomorphic"] = json!(witness.is_some());
                if let Some(wit) = witness {
                    let blocks: Vec<_> = wit
                        .map
                        .iter()
                        .map(|(t, m)| json!({ "tuple": t, "matrix": m }))
                        .collect();
                    doc["witness"] = json!(blocks);
                }
            }
            emit(format, &doc, || format!("pass: {}", report.pass()));
        }
        Command::InduceCheck { quiver, partition, diagrams, vertices, roots, weight, nu, verify } => {
            let q = io::parse_quiver(&quiver)?;
            let partition = io::parse_partition(&partition)?;
            let diagrams = io::parse_diagrams(&diagrams)?;
            let lam = io::parse_weight(&weight)?;
            let nu = io::parse_scalar(&nu)?;
            let (targets, vertex_list) = match (vertices, roots) {
                (Some(vs), None) => {
                    let vs = io::parse_vertices(&vs)?;
                    (InductionTargets::Vertices(vs.clone()), Some(vs))
                }
                (None, Some(path_or_json)) => {
                    let text = if let Some(p) = path_or_json.strip_prefix('@') {
                        io::read_text(p)?
                    } else {
                        path_or_json
                    };
                    let roots: Vec<core::DimVec> = serde_json::from_str(&text)?;
                    (InductionTargets::Roots(roots), None)
                }
                _ => anyhow::bail!("pass exactly one of --vertices or --roots"),
            };
            let mut verdict =
                core::check_extension_conditions(&q, &partition, &diagrams, &targets, &lam, &nu)?;
            if verify {
                let Some(vs) = vertex_list else {
                    anyhow::bail!("--verify needs vertex targets");
                };
                verdict.direct_check = Some(core::verify_zero_arrow_module(
                    &q, &partition, &diagrams, &vs, &lam, &nu,
                )?);
            }
            emit(format, &serde_json::to_value(&verdict)?, || {
                format!(
                    "pass: {}{}",
                    verdict.pass,
                    verdict
                        .direct_check
                        .map(|d| format!("  direct check: {d}"))
                        .unwrap_or_default()
                )
            });
        }
    }
    Ok(())
}

fn emit(format: Format, doc: &serde_json::Value, table: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{doc}"),
        Format::Table => println!("{}", table()),
    }
}

/// Splits the candidate roots across threads and re-sorts, so the output is
/// independent of `--jobs`.
fn classify_parallel(
    q: &core::Quiver,
    lam: &core::Weight,
    window: &[core::Vertex],
    jobs: usize,
) -> Result<Vec<core::SimpleCertificate>> {
    let win = q.window(window.iter().copied())?;
    let roots = core::enumerate_positive_roots(q, &win)?;
    let jobs = jobs.max(1).min(roots.len().max(1));
    let chunks: Vec<&[core::DimVec]> = roots.chunks(roots.len().div_ceil(jobs).max(1)).collect();
    let mut certs: Vec<core::SimpleCertificate> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|chunk| {
                scope.spawn(move || {
                    chunk
                        .iter()
                        .map(|alpha| core::exists_simple(q, lam, alpha))
                        .collect::<core::Result<Vec<_>>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker thread"))
            .collect::<core::Result<Vec<Vec<_>>>>()
            .map(|vv| vv.into_iter().flatten().collect())
    })?;
    certs.retain(|c| c.exists);
    certs.sort_by(|a, b| a.alpha.cmp(&b.alpha));
    Ok(certs)
}
