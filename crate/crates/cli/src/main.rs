use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use omega_core::catalog::{self, build_group};
use omega_core::format::write_cayley;
use omega_core::report::verify_catalog;
use omega_core::{ncgraph, omega, structure, Builder, Error, ExportFormat, GroupTable, NonCommutingGraph, OmegaResult};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "omega", version, about = "Pairwise non-commuting sets in finite groups")]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Largest group order that may be built.
    #[arg(long, global = true, default_value_t = omega_core::DEFAULT_ORDER_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group and write its Cayley table.
    Construct {
        spec: String,
        /// Table file; printed to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute ω(G).
    Omega {
        spec: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Check every group of a catalog.
    Verify {
        /// Catalog file; the built-in catalog when omitted.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Include per-step wall times.
        #[arg(long)]
        timings: bool,
    },
    /// Write the non-commuting graph.
    Export {
        spec: String,
        #[arg(long, value_enum)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Describe the structure of a group.
    Analyze { spec: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Clique,
    Centralizers,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dimacs,
    Dot,
}

enum Failure {
    Error(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

/// 1 for mathematical outcomes (failed checks, abelian input, …), 2 for
/// bad input.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::AbelianGroup
        | Error::EmptyGraph
        | Error::NotACGroup { .. }
        | Error::NoCover
        | Error::NotMinimalNonAbelian
        | Error::IsPGroup { .. }
        | Error::StructureViolation(_)
        | Error::DecompositionMismatch(_)
        | Error::OracleTooLarge { .. } => 1,
        _ => 2,
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => Ok(std::fs::write(path, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn labels(g: &GroupTable, elems: &[usize]) -> Vec<String> {
    elems.iter().map(|&x| g.label(x)).collect()
}

fn compute_omega(g: &GroupTable, method: MethodArg, threads: usize) -> Result<OmegaResult, Error> {
    match method {
        MethodArg::Auto => omega::omega_auto(g, threads),
        MethodArg::Clique => {
            let graph = NonCommutingGraph::build(g)?;
            if threads == 1 {
                graph.max_clique()
            } else {
                graph.max_clique_parallel()
            }
        }
        MethodArg::Centralizers => ncgraph::omega_via_centralizers(g),
        MethodArg::Formula => structure::omega_formula(g),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let builder = Builder::new(cli.cap);
    match &cli.command {
        Command::Construct { spec, out } => {
            let g = build_group(spec, &builder)?;
            let center = g.center().len();
            if let Some(path) = out {
                std::fs::write(path, write_cayley(&g)).map_err(Error::from)?;
            }
            if cli.json {
                print_json(&json!({
                    "group": g.name(),
                    "order": g.order(),
                    "center_order": center,
                    "out": out,
                }));
            } else if out.is_some() {
                println!("{}: order {}, center order {}", g.name(), g.order(), center);
            } else {
                print!("{}", write_cayley(&g));
                eprintln!("{}: order {}, center order {}", g.name(), g.order(), center);
            }
        }
        Command::Omega { spec, method } => {
            let g = build_group(spec, &builder)?;
            let r = compute_omega(&g, *method, cli.threads)?;
            if cli.json {
                print_json(&json!({
                    "group": g.name(),
                    "order": g.order(),
                    "omega": r.value,
                    "method": r.method,
                    "witness": r.witness,
                    "witness_labels": r.witness.as_ref().map(|w| labels(&g, w)),
                    "certificate": r.certificate,
                }));
            } else {
                println!("omega({}) = {} [{}]", g.name(), r.value, r.method.as_str());
                if let Some(w) = &r.witness {
                    println!("witness: {}", labels(&g, w).join(" "));
                }
                for c in r.certificate.iter().flatten() {
                    println!("C({}) order {}", g.label(c.representative), c.order);
                }
            }
        }
        Command::Verify { catalog, timings } => {
            let entries = match catalog {
                Some(path) => catalog::parse_catalog(&std::fs::read_to_string(path).map_err(Error::from)?)?,
                None => catalog::builtin_catalog(),
            };
            let mut report = verify_catalog(&entries, &builder, cli.threads != 1);
            if !timings {
                report = report.without_timings();
            }
            if cli.json {
                print_json(&report);
            } else {
                for r in &report.groups {
                    let status = if r.passed { "PASS" } else { "FAIL" };
                    let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
                    print!(
                        "{status} {:<6} {:<24} order {:>4}  |Z| {:>3}  {:<15} omega {:>3}  (centralizers {}, formula {}, naive {})",
                        r.name,
                        r.spec,
                        show(r.order),
                        show(r.center_order),
                        r.kind.map_or("-", |k| k.as_str()),
                        show(r.omega_clique),
                        show(r.omega_centralizers),
                        show(r.omega_formula),
                        show(r.omega_naive),
                    );
                    if let Some(ratio) = r.pyber_ratio {
                        print!("  ln|G:Z|/omega {ratio:.3}");
                    }
                    println!();
                    if let Some(e) = &r.error {
                        println!("    error: {e}");
                    }
                    let failed = r.failed_checks();
                    if !failed.is_empty() {
                        println!("    failed: {}", failed.join(", "));
                    }
                    if let Some(t) = &r.timings_ms {
                        let steps: Vec<String> = t.iter().map(|(k, v)| format!("{k} {v:.2}ms")).collect();
                        println!("    time: {}", steps.join(", "));
                    }
                }
                let failed = report.failures().count();
                println!("{} groups, {} failed", report.groups.len(), failed);
            }
            if !report.passed {
                return Err(Failure::Verification);
            }
        }
        Command::Export { spec, format, out } => {
            let g = build_group(spec, &builder)?;
            let format = match format {
                FormatArg::Dimacs => ExportFormat::Dimacs,
                FormatArg::Dot => ExportFormat::Dot,
            };
            let text = NonCommutingGraph::build(&g)?.export(format)?;
            write_output(out.as_ref(), &text)?;
        }
        Command::Analyze { spec } => {
            let g = build_group(spec, &builder)?;
            let r = structure::analyze(&g)?;
            if cli.json {
                print_json(&r);
            } else {
                println!("group: {}", r.group);
                println!("order: {}", r.order);
                println!("center order: {}", r.center_order);
                println!("minimal non-abelian: {}", r.minimal_non_abelian);
                println!("kind: {}", r.kind.as_str());
                let fields = [
                    ("p", r.p.map(|v| v.to_string())),
                    ("alpha", r.alpha.map(|v| v.to_string())),
                    ("q", r.q.map(|v| v.to_string())),
                    ("beta", r.beta.map(|v| v.to_string())),
                    ("m", r.m.map(|v| v.to_string())),
                ];
                for (k, v) in fields {
                    if let Some(v) = v {
                        println!("{k}: {v}");
                    }
                }
                if let Some(f) = r.lemma_2_4 {
                    println!("derived subgroup is Q: {}", f.derived_is_q);
                    println!("derived subgroup meets center trivially: {}", f.derived_meets_center_trivially);
                    println!("P self-normalizing: {}", f.p_self_normalizing);
                    println!("Q centralizers are Z x Q: {}", f.q_centralizers);
                }
                if let Some(c) = r.theorem_2_3 {
                    println!("structure checks hold: {}", c.all());
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
