//! Command-line front end: graph ingestion, one subcommand per
//! computation, JSON reports on standard output, optional CSV.
//!
//! Exit codes: 0 computed, 1 usage error, 2 size cap exceeded,
//! 3 internal invariant violation.

mod input;
mod output;

use std::fs;
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use graph_entropy::rational::to_f64;
use graph_entropy::{
    certify, chromatic, closed, entropy, fractional, graph, math, Distribution, Error as LibError,
    Graph,
};

#[derive(Parser)]
#[command(name = "graph-entropy", version, about = "Graph entropy, fractional chromatic numbers and symmetry certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entropy of the probabilistic graph (G, P) with a certified gap
    Entropy {
        /// builtin:<name> or an edge-list file
        graph: String,
        /// "uniform", a comma list of decimals or fractions, or a file
        #[arg(long, default_value = "uniform")]
        dist: String,
        /// Requested duality gap in bits
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        emit_csv: Option<PathBuf>,
    },
    /// Exact fractional chromatic number with a weighted cover
    ChromaticFractional {
        graph: String,
        #[arg(long)]
        emit_csv: Option<PathBuf>,
    },
    /// Exact fractional edge chromatic number with its attaining witness
    EdgeChromaticFractional {
        graph: String,
        #[arg(long)]
        emit_csv: Option<PathBuf>,
    },
    /// Minimum-entropy proper coloring and the surrounding bounds
    ChromaticEntropy {
        graph: String,
        #[arg(long, default_value = "uniform")]
        dist: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        emit_csv: Option<PathBuf>,
    },
    /// Is the graph symmetric with respect to graph entropy?
    Symmetric {
        graph: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Auto)]
        route: RouteArg,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        emit_csv: Option<PathBuf>,
    },
    /// Emit the line graph in edge-list format
    LineGraph { graph: String },
    /// Full battery: structure, entropy, fractional numbers, coloring,
    /// symmetry
    Report {
        graph: String,
        #[arg(long, default_value = "uniform")]
        dist: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        emit_csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Auto,
    Perfect,
    Bipartite,
    Kgraph,
    Numeric,
}

struct AppError {
    code: u8,
    message: String,
}

impl AppError {
    fn usage(message: impl Into<String>) -> Self {
        AppError { code: 1, message: message.into() }
    }
}

impl From<LibError> for AppError {
    fn from(e: LibError) -> Self {
        let code = match &e {
            LibError::SizeLimitExceeded { .. } => 2,
            LibError::DomainError(_)
            | LibError::InfeasiblePoint(_)
            | LibError::DimensionMismatch { .. }
            | LibError::NonconvergenceAfterMaxIters { .. }
            | LibError::PartitionNotFound => 3,
            _ => 1,
        };
        AppError { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return ExitCode::from(if ok { 0 } else { 1 });
        }
    };
    match panic::catch_unwind(|| run(cli.command)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
        // The panic payload has already been printed by the default hook.
        Err(_) => ExitCode::from(3),
    }
}

fn run(command: Command) -> Result<(), AppError> {
    let started = Instant::now();
    let (label, g, source, tol, csv, result) = match command {
        Command::Entropy { graph, dist, tol, emit_csv } => {
            let (g, source) = input::load_graph(&graph).map_err(AppError::usage)?;
            let p = input::parse_distribution(&dist, g.n()).map_err(AppError::usage)?;
            let r = entropy::graph_entropy(&g, &p, tol)?;
            let result = json!({
                "value_bits": output::bits(r.value_bits),
                "gap_bits": output::bits(r.gap_bits),
                "iterations": r.iterations,
                "distribution": dist_json(&p),
                "minimizer": output::point(&r.minimizer),
            });
            ("entropy", g, source, tol, emit_csv, result)
        }
        Command::ChromaticFractional { graph, emit_csv } => {
            let (g, source) = input::load_graph(&graph).map_err(AppError::usage)?;
            let (chi_f, coloring) = fractional::fractional_chromatic_number(&g)?;
            let sets: Vec<Value> = coloring
                .sets
                .iter()
                .map(|(s, w)| json!({ "set": output::vertex_set(*s), "weight": output::rational(w) }))
                .collect();
            let result = json!({
                "chi_f": output::rational(&chi_f),
                "log2_chi_f_bits": output::bits(math::log2(to_f64(&chi_f))),
                "cover": sets,
            });
            ("chromatic-fractional", g, source, 0.0, emit_csv, result)
        }
        Command::EdgeChromaticFractional { graph, emit_csv } => {
            let (g, source) = input::load_graph(&graph).map_err(AppError::usage)?;
            let (chi, witness) = fractional::fractional_edge_chromatic_number(&g)?;
            let witness = match witness {
                fractional::EdgeChromaticWitness::Degree => json!({ "type": "max_degree" }),
                fractional::EdgeChromaticWitness::DenseSet(u) => {
                    json!({ "type": "dense_set", "set": output::vertex_set(u) })
                }
            };
            let result = json!({
                "chi_f_edge": output::rational(&chi),
                "witness": witness,
                "k_graph": k_graph_json(&g),
            });
            ("edge-chromatic-fractional", g, source, 0.0, emit_csv, result)
        }
        Command::ChromaticEntropy { graph, dist, tol, emit_csv } => {
            let (g, source) = input::load_graph(&graph).map_err(AppError::usage)?;
            let p = input::parse_distribution(&dist, g.n()).map_err(AppError::usage)?;
            let chain = chromatic::chromatic_entropy_bounds(&g, &p, tol)?;
            let result = chain_json(&g, &p, &chain);
            ("chromatic-entropy", g, source, tol, emit_csv, result)
        }
        Command::Symmetric { graph, route, tol, emit_csv } => {
            let (g, source) = input::load_graph(&graph).map_err(AppError::usage)?;
            let verdict = match route {
                RouteArg::Auto => certify::certify_symmetric_auto(&g)?,
                RouteArg::Perfect => certify::certify_symmetric_perfect(&g)?,
                RouteArg::Bipartite => {
                    let (a, b) = g.bipartition().ok_or(LibError::NotBipartite)?;
                    certify::certify_symmetric_bipartite(&g, (&a, &b))?
                }
                RouteArg::Kgraph => certify::certify_symmetric_line_of_kgraph(&g)?,
                RouteArg::Numeric => certify::certify_symmetric_numeric(&g, tol)?,
            };
            let result = output::symmetry(&verdict);
            ("symmetric", g, source, tol, emit_csv, result)
        }
        Command::LineGraph { graph } => {
            let (g, _) = input::load_graph(&graph).map_err(AppError::usage)?;
            let (line, edge_of) = g.line_graph()?;
            println!("{} {}", line.n(), line.m());
            for &(u, v) in line.edges() {
                println!("{u} {v}");
            }
            for (i, (a, b)) in edge_of.iter().enumerate() {
                println!("# vertex {i} is edge ({a}, {b}) of the input");
            }
            return Ok(());
        }
        Command::Report { graph, dist, tol, emit_csv } => {
            let (g, source) = input::load_graph(&graph).map_err(AppError::usage)?;
            let p = input::parse_distribution(&dist, g.n()).map_err(AppError::usage)?;
            let result = report_battery(&g, &p, tol);
            ("report", g, source, tol, emit_csv, result)
        }
    };
    let report = output::envelope(label, &source, &g, tol, result);
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    eprintln!("timing: {} ms", started.elapsed().as_millis());
    if let Some(path) = csv {
        fs::write(&path, output::to_csv(&report["result"]))
            .map_err(|e| AppError::usage(format!("cannot write '{}': {e}", path.display())))?;
    }
    Ok(())
}

fn dist_json(p: &Distribution) -> Value {
    let floats: Vec<String> = p.to_floats().iter().map(|&x| output::bits(x)).collect();
    match p.rationals() {
        Some(rs) => json!({
            "mode": "rational",
            "weights": rs.iter().map(output::rational).collect::<Vec<_>>(),
        }),
        None => json!({ "mode": "float", "weights": floats }),
    }
}

fn k_graph_json(g: &Graph) -> Value {
    match fractional::is_k_graph(g) {
        Ok(fractional::KGraphVerdict::Yes { k }) => json!({ "is_k_graph": true, "k": k }),
        Ok(fractional::KGraphVerdict::NotRegular) => {
            json!({ "is_k_graph": false, "reason": "not regular" })
        }
        Ok(fractional::KGraphVerdict::OddCutViolation { witness, cut }) => json!({
            "is_k_graph": false,
            "reason": "odd cut below valency",
            "witness_set": output::vertex_set(witness),
            "cut": cut,
        }),
        Err(e) => json!({ "skipped": e.to_string() }),
    }
}

fn chain_json(g: &Graph, p: &Distribution, chain: &chromatic::EntropyChain) -> Value {
    let coloring = &chain.coloring;
    assert!(coloring.validate(g), "reported coloring fails validation");
    let masses: Vec<String> =
        coloring.masses(p).iter().map(|&x| output::bits(x)).collect();
    json!({
        "value_bits": output::bits(chain.chromatic_entropy_bits),
        "classes": coloring.classes.iter().map(|&c| output::vertex_set(c)).collect::<Vec<_>>(),
        "class_masses": masses,
        "bounds": {
            "max_independent_mass": output::bits(chain.alpha_mass),
            "max_independent_set": output::vertex_set(chain.alpha_set),
            "lower_bits": output::bits(chain.lower_bits),
            "graph_entropy_bits": output::bits(chain.entropy.value_bits),
            "graph_entropy_gap_bits": output::bits(chain.entropy.gap_bits),
            "chromatic_number": chain.chromatic_number,
            "log2_chromatic_bits": chain.log2_chromatic.map(output::bits),
        },
    })
}

fn report_battery(g: &Graph, p: &Distribution, tol: f64) -> Value {
    let s = graph::structure_queries(g);
    let structure = json!({
        "degrees": (0..g.n()).map(|v| g.degree(v)).collect::<Vec<_>>(),
        "regularity": s.regularity,
        "bipartition": s.bipartition.map(|(a, b)| json!([a, b])),
        "components": s.components,
        "bridges": s.bridges.iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
    });
    let entropy_section = section(entropy::graph_entropy(g, p, tol).map(|r| {
        json!({
            "value_bits": output::bits(r.value_bits),
            "gap_bits": output::bits(r.gap_bits),
            "iterations": r.iterations,
        })
    }));
    let chromatic_fractional = section(fractional::fractional_chromatic_number(g).map(
        |(chi_f, _)| {
            json!({
                "chi_f": output::rational(&chi_f),
                "log2_chi_f_bits": output::bits(math::log2(to_f64(&chi_f))),
            })
        },
    ));
    let edge = section(
        fractional::fractional_edge_chromatic_number(g)
            .map(|(chi, _)| json!({ "chi_f_edge": output::rational(&chi) })),
    );
    let coloring = section(
        chromatic::chromatic_entropy_bounds(g, p, tol).map(|chain| chain_json(g, p, &chain)),
    );
    let components = section(closed::components_entropy(g, p, tol).map(|(total, parts)| {
        json!({
            "value_bits": output::bits(total),
            "parts": parts
                .iter()
                .map(|(verts, mass, h)| json!({
                    "vertices": verts,
                    "mass": output::bits(*mass),
                    "entropy_bits": output::bits(*h),
                }))
                .collect::<Vec<_>>(),
        })
    }));
    let symmetric = section(certify::certify_symmetric_auto(g).map(|v| output::symmetry(&v)));
    json!({
        "distribution": dist_json(p),
        "structure": structure,
        "entropy": entropy_section,
        "chromatic_fractional": chromatic_fractional,
        "edge_chromatic_fractional": edge,
        "chromatic_entropy": coloring,
        "components_entropy": components,
        "symmetric": symmetric,
    })
}

fn section(r: Result<Value, LibError>) -> Value {
    match r {
        Ok(v) => v,
        Err(e) => json!({ "skipped": e.to_string() }),
    }
}
