//! The seeded formula-versus-oracle suite.
//!
//! Each pair gets its own ChaCha stream (seed fixed, stream = pair index), so
//! a pair's graphs do not depend on how many pairs run or in which order.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::{regular_catalog, CatalogEntry};
use crate::corona::{closed_neighborhood_corona, product_counts};
use crate::graph::{Graph, MatrixKind};
use crate::invariants::{
    kirchhoff_direct, kirchhoff_formula, spanning_trees_direct, spanning_trees_formula,
    InvariantReport, Quantity,
};
use crate::io::to_graph6;
use crate::par::{map_range, Execution};
use crate::spectra::{graph_spectrum, product_spectrum_formula};

pub const DEFAULT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub n1_max: usize,
    pub n2_max: usize,
    pub pairs: usize,
    pub tolerance: f64,
    pub execution: Execution,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            n1_max: 6,
            n2_max: 5,
            pairs: 100,
            tolerance: DEFAULT_TOLERANCE,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteEntry {
    pub pair: usize,
    pub g1: String,
    pub g2: String,
    pub check: String,
    pub formula_value: Option<Quantity>,
    pub oracle_value: Option<Quantity>,
    pub relative_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub n1_max: usize,
    pub n2_max: usize,
    pub pairs: usize,
    pub tolerance: f64,
    pub pass_count: usize,
    pub fail_count: usize,
    pub entries: Vec<SuiteEntry>,
    /// Not serialized, so equal seeds give byte-identical reports.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl PartialEq for SuiteReport {
    fn eq(&self, other: &Self) -> bool {
        (
            self.seed,
            self.n1_max,
            self.n2_max,
            self.pairs,
            self.pass_count,
            self.fail_count,
        ) == (
            other.seed,
            other.n1_max,
            other.n2_max,
            other.pairs,
            other.pass_count,
            other.fail_count,
        ) && self.tolerance == other.tolerance
            && self.entries == other.entries
    }
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &SuiteEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let opt = |q: &Option<Quantity>| q.as_ref().map(ToString::to_string).unwrap_or_default();
        w.write_record([
            "pair",
            "g1",
            "g2",
            "check",
            "formula",
            "oracle",
            "relative_deviation",
            "tolerance",
            "passed",
            "error",
        ])
        .expect("in-memory write");
        for e in &self.entries {
            w.write_record([
                e.pair.to_string(),
                e.g1.clone(),
                e.g2.clone(),
                e.check.clone(),
                opt(&e.formula_value),
                opt(&e.oracle_value),
                e.relative_deviation.to_string(),
                e.tolerance.to_string(),
                e.passed.to_string(),
                e.error.clone().unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }
}

/// A labeled factor: catalog name or `g6:` code.
#[derive(Debug, Clone, PartialEq)]
pub struct Factor {
    pub label: String,
    pub graph: Graph,
}

/// G(n, p) with `n` uniform in `1..=n_max` and `p` uniform in `[0.2, 0.8)`.
pub fn random_graph<R: Rng>(rng: &mut R, n_max: usize) -> Graph {
    let n = rng.random_range(1..=n_max.max(1));
    let p: f64 = rng.random_range(0.2..0.8);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("in range")
}

fn labeled(graph: Graph) -> Factor {
    Factor {
        label: format!("g6:{}", to_graph6(&graph)),
        graph,
    }
}

/// The factors of pair `index`: half the time the first factor is drawn
/// from the regular catalog, otherwise both are random.
pub fn suite_pair(
    config: &SuiteConfig,
    regular: &[CatalogEntry],
    index: usize,
) -> (Factor, Factor) {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let g1 = if !regular.is_empty() && rng.random_bool(0.5) {
        let e = &regular[rng.random_range(0..regular.len())];
        Factor {
            label: e.name.clone(),
            graph: e.graph.clone(),
        }
    } else {
        labeled(random_graph(&mut rng, config.n1_max))
    };
    let g2 = labeled(random_graph(&mut rng, config.n2_max));
    (g1, g2)
}

fn entry(pair: usize, g1: &Factor, g2: &Factor, check: &str) -> SuiteEntry {
    SuiteEntry {
        pair,
        g1: g1.label.clone(),
        g2: g2.label.clone(),
        check: check.to_string(),
        formula_value: None,
        oracle_value: None,
        relative_deviation: 0.0,
        tolerance: 0.0,
        passed: false,
        error: None,
    }
}

fn from_report(base: SuiteEntry, r: InvariantReport) -> SuiteEntry {
    SuiteEntry {
        formula_value: Some(r.formula_value),
        oracle_value: Some(r.oracle_value),
        relative_deviation: r.relative_deviation,
        tolerance: r.tolerance,
        passed: r.passed,
        ..base
    }
}

fn failed(mut base: SuiteEntry, err: crate::Error) -> SuiteEntry {
    base.error = Some(format!("{}: {err}", err.name()));
    base.relative_deviation = f64::INFINITY;
    base
}

/// Every applicable comparison for one pair.
pub fn check_pair(pair: usize, g1: &Factor, g2: &Factor, tolerance: f64) -> Vec<SuiteEntry> {
    let mut out = Vec::new();
    let product = match closed_neighborhood_corona(&g1.graph, &g2.graph) {
        Ok(p) => p,
        Err(e) => return vec![failed(entry(pair, g1, g2, "construction"), e)],
    };
    let counts = product_counts(&g1.graph, &g2.graph).expect("nonempty factors");
    out.push(from_report(
        entry(pair, g1, g2, "order"),
        InvariantReport::exact("order", counts.vertices.into(), product.order().into()),
    ));
    out.push(from_report(
        entry(pair, g1, g2, "size"),
        InvariantReport::exact("size", counts.edges.into(), product.size().into()),
    ));

    let (degree, components) = g1.graph.regularity_and_components();
    let kinds: &[MatrixKind] = if degree.is_some() {
        &MatrixKind::ALL
    } else {
        &[MatrixKind::Adjacency]
    };
    for &kind in kinds {
        let name = format!("{}-spectrum", kind.name());
        let mut base = entry(pair, g1, g2, &name);
        base.tolerance = tolerance;
        out.push(match product_spectrum_formula(&g1.graph, &g2.graph, kind) {
            Ok(formula) => {
                let direct = graph_spectrum(&product, kind);
                let dev = formula.max_relative_deviation(&direct);
                SuiteEntry {
                    relative_deviation: dev,
                    passed: dev <= tolerance,
                    ..base
                }
            }
            Err(e) => failed(base, e),
        });
    }

    if degree.is_some() && components == 1 {
        let base = entry(pair, g1, g2, "kirchhoff");
        out.push(
            match kirchhoff_formula(&g1.graph, &g2.graph)
                .and_then(|f| kirchhoff_direct(&product).map(|d| (f, d)))
            {
                Ok((f, d)) => {
                    from_report(base, InvariantReport::real("kirchhoff", f, d, tolerance))
                }
                Err(e) => failed(base, e),
            },
        );
        let base = entry(pair, g1, g2, "spanning-trees");
        out.push(match spanning_trees_formula(&g1.graph, &g2.graph) {
            Ok(t) => from_report(
                base,
                InvariantReport::exact("spanning-trees", t, spanning_trees_direct(&product)),
            ),
            Err(e) => failed(base, e),
        });
    }
    out
}

/// Runs `config.pairs` seeded pairs; pairs may be evaluated concurrently but
/// the report is always in pair order.
pub fn run_verify_suite(config: &SuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let regular = regular_catalog(config.n1_max);
    let per_pair = map_range(config.execution, config.pairs, |i| {
        let (g1, g2) = suite_pair(config, &regular, i);
        check_pair(i, &g1, &g2, config.tolerance)
    });
    let entries: Vec<SuiteEntry> = per_pair.into_iter().flatten().collect();
    let pass_count = entries.iter().filter(|e| e.passed).count();
    SuiteReport {
        seed: config.seed,
        n1_max: config.n1_max,
        n2_max: config.n2_max,
        pairs: config.pairs,
        tolerance: config.tolerance,
        pass_count,
        fail_count: entries.len() - pass_count,
        entries,
        wall_time: start.elapsed(),
    }
}
