mod output;

use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use corona_core::invariants::{
    check_cospectral, check_integral, equienergetic_product_pair, graph_energy, kirchhoff_direct,
    kirchhoff_formula, spanning_trees_direct, spanning_trees_formula,
};
use corona_core::io::read_graph_file;
use corona_core::par::Execution;
use corona_core::spectra::{product_spectrum_direct, product_spectrum_formula};
use corona_core::verify::{run_verify_suite, SuiteConfig, DEFAULT_TOLERANCE};
use corona_core::{
    charpoly, closed_neighborhood_corona, coronal_of_graph, make_family, parse_graph6,
    product_counts, serialize_graph, Error, Format, Graph, MatrixKind,
};

use output::{big, num, nums, poly, to_csv};

const TOL_ENV: &str = "CORONA_SPECTRA_TOL";

/// Closed neighborhood corona products: construction, spectra, invariants.
///
/// A graph argument is a family spec (`cycle:5`, `complete:4`,
/// `circulant:9:1,2`, `bipartite:2:3`, `star:4`, `path:3`, `empty:3`,
/// `petersen`, `a+b` for a disjoint union), a file ending in `.g6` or `.el`,
/// or `g6:<code>`.
#[derive(Parser)]
#[command(name = "corona", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Adjacency,
    Laplacian,
    Signless,
}

impl From<Kind> for MatrixKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Adjacency => MatrixKind::Adjacency,
            Kind::Laplacian => MatrixKind::Laplacian,
            Kind::Signless => MatrixKind::SignlessLaplacian,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Direct,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Out {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    El,
    G6,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Build G1 ⊠ G2 and write it out.
    Product {
        g1: String,
        g2: String,
        /// Output file, `-` for standard output.
        #[arg(long, default_value = "-")]
        out: String,
        #[arg(long, value_enum, default_value = "el")]
        format: GraphFormat,
    },
    /// Order and size of G1 ⊠ G2 from the closed-form counts.
    Counts {
        g1: String,
        g2: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Out,
    },
    /// Spectrum of G1 ⊠ G2, ascending.
    Spectrum {
        #[arg(long, value_enum, default_value = "adjacency")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
        g1: String,
        g2: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Out,
    },
    /// Reduced coronal P/F and cofactor R of a graph matrix.
    Coronal {
        #[arg(long, value_enum, default_value = "adjacency")]
        kind: Kind,
        g: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Out,
    },
    /// Exact characteristic polynomial of a graph matrix.
    Charpoly {
        #[arg(long, value_enum, default_value = "adjacency")]
        kind: Kind,
        g: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Out,
    },
    /// Kirchhoff index of G1 ⊠ G2.
    Kirchhoff {
        g1: String,
        g2: String,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
        #[arg(long, value_enum, default_value = "json")]
        format: Out,
    },
    /// Spanning-tree count of G1 ⊠ G2 by the closed form and by Matrix-Tree.
    SpanningTrees {
        g1: String,
        g2: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Out,
    },
    /// Adjacency energy of a graph.
    Energy {
        g: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Out,
    },
    /// Whether two graphs have equal characteristic polynomials.
    Cospectral {
        #[arg(long, value_enum, default_value = "adjacency")]
        kind: Kind,
        ga: String,
        gb: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Out,
    },
    /// Whether every adjacency eigenvalue is an integer.
    Integral {
        g: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Out,
    },
    /// Build G ⊠ G1 and G ⊠ G2 from an equienergetic non-cospectral pair.
    EquienergeticPair {
        g: String,
        g1: String,
        g2: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Out,
    },
    /// Run the seeded formula-versus-oracle suite.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        n1_max: u64,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        n2_max: u64,
        #[arg(long, default_value_t = 100)]
        pairs: usize,
        /// Evaluate pairs on one thread.
        #[arg(long)]
        sequential: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Out,
    },
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

type Outcome = Result<(), Failure>;

fn load(source: &str) -> Result<Graph, Error> {
    if let Some(code) = source.strip_prefix("g6:") {
        return parse_graph6(code);
    }
    let path = Path::new(source);
    if source.ends_with(".g6") || source.ends_with(".el") || path.is_file() {
        return read_graph_file(path);
    }
    make_family(source)
}

fn tolerance() -> Result<f64, Failure> {
    match std::env::var(TOL_ENV) {
        Err(_) => Ok(DEFAULT_TOLERANCE),
        Ok(s) => s
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|t| t.is_finite() && *t > 0.0)
            .ok_or_else(|| {
                Failure::Usage(format!("{TOL_ENV}: expected a positive number, got `{s}`"))
            }),
    }
}

fn emit(v: &Value, format: Out) {
    match format {
        Out::Json => println!("{v}"),
        Out::Csv => print!("{}", to_csv(v)),
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Product {
            g1,
            g2,
            out,
            format,
        } => {
            let p = closed_neighborhood_corona(&load(&g1)?, &load(&g2)?)?;
            let format = match format {
                GraphFormat::El => Format::EdgeList,
                GraphFormat::G6 => Format::Graph6,
                GraphFormat::Dot => Format::Dot,
            };
            let text = serialize_graph(&p, format);
            if out == "-" {
                print!("{text}");
            } else {
                std::fs::write(&out, text).map_err(Error::from)?;
                emit(
                    &json!({"path": out, "vertices": p.order(), "edges": p.size()}),
                    Out::Json,
                );
            }
        }
        Command::Counts { g1, g2, format } => {
            let c = product_counts(&load(&g1)?, &load(&g2)?)?;
            emit(&json!({"vertices": c.vertices, "edges": c.edges}), format);
        }
        Command::Spectrum {
            kind,
            method,
            g1,
            g2,
            format,
        } => {
            let (g1, g2) = (load(&g1)?, load(&g2)?);
            let s = match method {
                Method::Formula => product_spectrum_formula(&g1, &g2, kind.into())?,
                Method::Direct => product_spectrum_direct(&g1, &g2, kind.into())?,
            };
            emit(&nums(s.values()), format);
        }
        Command::Coronal { kind, g, format } => {
            let c = coronal_of_graph(&load(&g)?, kind.into());
            let v = json!({
                "coronal": c.coronal().to_string(),
                "numerator": poly(&c.reduced_numerator),
                "denominator": poly(&c.reduced_denominator),
                "cofactor": poly(&c.cofactor),
                "d": c.d,
            });
            emit(&v, format);
        }
        Command::Charpoly { kind, g, format } => {
            emit(&poly(&charpoly(&load(&g)?, kind.into())), format);
        }
        Command::Kirchhoff {
            g1,
            g2,
            method,
            format,
        } => {
            let (g1, g2) = (load(&g1)?, load(&g2)?);
            let value = match method {
                Method::Formula => kirchhoff_formula(&g1, &g2)?,
                Method::Direct => kirchhoff_direct(&closed_neighborhood_corona(&g1, &g2)?)?,
            };
            let method = if method == Method::Formula {
                "formula"
            } else {
                "direct"
            };
            emit(&json!({"method": method, "kirchhoff": num(value)}), format);
        }
        Command::SpanningTrees { g1, g2, format } => {
            let (g1, g2) = (load(&g1)?, load(&g2)?);
            let formula = spanning_trees_formula(&g1, &g2)?;
            let direct = spanning_trees_direct(&closed_neighborhood_corona(&g1, &g2)?);
            emit(
                &json!({"formula": big(&formula), "direct": big(&direct)}),
                format,
            );
        }
        Command::Energy { g, format } => {
            emit(&json!({"energy": num(graph_energy(&load(&g)?))}), format);
        }
        Command::Cospectral {
            kind,
            ga,
            gb,
            format,
        } => {
            let kind: MatrixKind = kind.into();
            let c = check_cospectral(&load(&ga)?, &load(&gb)?, kind);
            emit(&json!({"kind": kind.name(), "cospectral": c}), format);
        }
        Command::Integral { g, format } => {
            let i = check_integral(&load(&g)?);
            let eig: Vec<Value> = i.integer_eigenvalues.iter().map(big).collect();
            emit(
                &json!({"integral": i.is_integral, "integer_eigenvalues": eig}),
                format,
            );
        }
        Command::EquienergeticPair { g, g1, g2, format } => {
            let p = equienergetic_product_pair(&load(&g)?, &load(&g1)?, &load(&g2)?)?;
            let v = json!({
                "order": p.product_a.order(),
                "energy_a": num(p.energy_a),
                "energy_b": num(p.energy_b),
                "charpoly_a": p.charpoly_a.to_string(),
                "charpoly_b": p.charpoly_b.to_string(),
                "cospectral": p.charpoly_a == p.charpoly_b,
            });
            emit(&v, format);
        }
        Command::Verify {
            seed,
            n1_max,
            n2_max,
            pairs,
            sequential,
            format,
        } => {
            let config = SuiteConfig {
                seed,
                n1_max: n1_max as usize,
                n2_max: n2_max as usize,
                pairs,
                tolerance: tolerance()?,
                execution: if sequential {
                    Execution::Sequential
                } else {
                    Execution::Parallel
                },
            };
            let report = run_verify_suite(&config);
            match format {
                Out::Json => println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                ),
                Out::Csv => print!("{}", report.to_csv()),
            }
            eprintln!(
                "verify: {} passed, {} failed in {:.3?}",
                report.pass_count, report.fail_count, report.wall_time
            );
            if report.fail_count > 0 {
                return Err(Failure::Compute(Error::HypothesisViolated {
                    hypothesis: "formula agrees with oracle".into(),
                    detail: format!("{} failing comparisons", report.fail_count),
                }));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
    }
}
