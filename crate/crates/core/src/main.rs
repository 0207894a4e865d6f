//! Command line front end: solve, oracle, decomposition dump, benchmark.

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use effdom::graph::{EdOutcome, Graph, VertexWeights};
use effdom::{io, mdtree, testkit, wed};

#[derive(Parser)]
#[command(name = "effdom", about = "Weighted efficient domination for P5-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve WED on an edge-list graph
    Solve {
        /// Graph file: "n m" header, then m lines "u v"
        graph: String,
        /// Weights file: n lines, one non-negative integer each (default: all ones)
        #[arg(long)]
        weights: Option<String>,
        /// Report UNKNOWN as NONE (caller vouches the input is P5-free)
        #[arg(long)]
        assume_p5_free: bool,
        /// Re-verify any found set and fail loudly on violation
        #[arg(long)]
        certify: bool,
    },
    /// Brute-force oracle verdict (small graphs only)
    Oracle {
        graph: String,
        #[arg(long)]
        weights: Option<String>,
    },
    /// Dump the modular decomposition tree
    Mdtree { graph: String },
    /// Time the solve path on generated families, CSV to stdout
    Bench {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated target input sizes (n + m)
        #[arg(long, value_delimiter = ',', default_value = "4096,16384,65536,262144,1048576")]
        sizes: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Thin spiders (prime, P5-free)
    Spider,
    /// Small cliques substituted into a thin-spider quotient
    Substituted,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Solve { graph, weights, assume_p5_free, certify } => {
            let (g, w) = load(&graph, weights.as_deref())?;
            let mut outcome = wed::solve(&g, &w);
            if assume_p5_free && outcome == EdOutcome::NotP5FreeOrNoEd {
                outcome = EdOutcome::NoneExists;
            }
            if certify {
                if let EdOutcome::Found { vertices, total_weight } = &outcome {
                    if !g.is_ed(vertices) {
                        return Err(format!(
                            "certification failed: {:?} is not an efficient dominating set",
                            vertices
                        ));
                    }
                    if *total_weight != w.total(vertices) {
                        return Err("certification failed: reported weight mismatch".into());
                    }
                }
            }
            println!("{}", verdict_line(&outcome));
            Ok(())
        }
        Command::Oracle { graph, weights } => {
            let (g, w) = load(&graph, weights.as_deref())?;
            let outcome = testkit::brute_force_wed(&g, &w).map_err(|e| e.to_string())?;
            println!("{}", verdict_line(&outcome));
            Ok(())
        }
        Command::Mdtree { graph } => {
            let (g, _) = load(&graph, None)?;
            print!("{}", mdtree::decompose(&g).dump());
            Ok(())
        }
        Command::Bench { family, sizes } => {
            println!("n,m,micros");
            for size in sizes {
                let g = match family {
                    Family::Spider => spider_instance(size),
                    Family::Substituted => substituted_instance(size),
                };
                let w = VertexWeights::unit(g.vertex_count());
                let start = Instant::now();
                let outcome = wed::solve(&g, &w);
                let micros = start.elapsed().as_micros();
                debug_assert!(outcome.is_found());
                let _ = outcome;
                println!("{},{},{}", g.vertex_count(), g.edge_count(), micros);
            }
            Ok(())
        }
    }
}

fn load(graph_path: &str, weights_path: Option<&str>) -> Result<(Graph, VertexWeights), String> {
    let text = fs::read_to_string(graph_path)
        .map_err(|e| format!("cannot read {graph_path}: {e}"))?;
    let g = io::parse_edge_list(&text).map_err(|e| format!("{graph_path}: {e}"))?;
    let w = match weights_path {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
            io::parse_weights(&text, g.vertex_count()).map_err(|e| format!("{path}: {e}"))?
        }
        None => VertexWeights::unit(g.vertex_count()),
    };
    Ok((g, w))
}

fn verdict_line(outcome: &EdOutcome) -> String {
    match outcome {
        EdOutcome::Found { vertices, total_weight } => {
            let mut line = format!("ED {total_weight}");
            for v in vertices {
                line.push_str(&format!(" {v}"));
            }
            line
        }
        EdOutcome::NoneExists => "NONE".into(),
        EdOutcome::NotP5FreeOrNoEd => "UNKNOWN (not P5-free or no e.d.)".into(),
    }
}

/// Thin spider whose total size n + m is close to `size`.
fn spider_instance(size: usize) -> Graph {
    let mut k = 2usize;
    while k * (k - 1) / 2 + 3 * k < size {
        k += 1;
    }
    testkit::gen_thin_spider(k.max(2)).expect("k >= 2")
}

/// Thin-spider quotient with small cliques substituted at the independent
/// positions, sized so n + m is close to `size`.
fn substituted_instance(size: usize) -> Graph {
    let mut k = 2usize;
    while k * (k - 1) / 2 + 7 * k < size {
        k += 1;
    }
    let quotient = testkit::gen_thin_spider(k).expect("k >= 2");
    let parts: Vec<Graph> = (0..2 * k)
        .map(|i| {
            let len = if i < k { 1 } else { 1 + (i - k) % 3 };
            let mut edges = Vec::new();
            for u in 0..len as u32 {
                for v in (u + 1)..len as u32 {
                    edges.push((u, v));
                }
            }
            Graph::build(len, &edges).expect("clique part")
        })
        .collect();
    testkit::substitute(&quotient, &parts).expect("one part per quotient vertex")
}
