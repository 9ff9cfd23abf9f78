//! A small catalog of regular graphs and the exhaustive search for
//! non-cospectral equienergetic pairs inside it.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::charpoly::charpoly;
use crate::graph::{Family, Graph, MatrixKind};
use crate::invariants::{energies_equal, graph_energy};
use crate::par::{map_collect, Execution};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub degree: usize,
}

/// All circulants `C_n(S)` with `1 <= n <= max_order` and nonempty
/// `S ⊆ {1..n/2}`, the Petersen graph and its complement (when they fit),
/// disjoint unions of two equal-degree circulants, and the complements of
/// those unions. Labeled duplicates are dropped; isomorphic copies are not.
pub fn regular_catalog(max_order: usize) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |name: String, graph: Graph, out: &mut Vec<CatalogEntry>| {
        if let Some(degree) = graph.regular_degree() {
            if seen.insert(graph.clone()) {
                out.push(CatalogEntry {
                    name,
                    graph,
                    degree,
                });
            }
        }
    };

    let mut circulants = Vec::new();
    for n in 1..=max_order {
        let half = n / 2;
        if half == 0 {
            push(format!("complete:{n}"), Graph::empty(n), &mut out);
            continue;
        }
        for mask in 1u32..(1 << half) {
            let jumps: Vec<usize> = (1..=half).filter(|j| mask >> (j - 1) & 1 == 1).collect();
            let spec = format!(
                "circulant:{n}:{}",
                jumps
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            );
            let g = Family::Circulant(n, jumps).build().expect("valid jumps");
            circulants.push((spec.clone(), g.clone()));
            push(spec, g, &mut out);
        }
    }
    if max_order >= 10 {
        let p = Family::Petersen.build().expect("petersen");
        push("complement(petersen)".into(), p.complement(), &mut out);
        push("petersen".into(), p, &mut out);
    }
    for (i, (na, a)) in circulants.iter().enumerate() {
        for (nb, b) in &circulants[i..] {
            if a.order() + b.order() > max_order || a.regular_degree() != b.regular_degree() {
                continue;
            }
            let u = a.disjoint_union(b);
            let name = format!("{na}+{nb}");
            push(format!("complement({name})"), u.complement(), &mut out);
            push(name, u, &mut out);
        }
    }
    out
}

/// A non-cospectral equienergetic pair of catalog graphs with equal order
/// and degree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BasePair {
    pub a: String,
    pub b: String,
    pub order: usize,
    pub degree: usize,
    pub energy_a: f64,
    pub energy_b: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub max_order: usize,
    pub catalog_size: usize,
    pub distinct_spectra: usize,
    pub pairs: Vec<BasePair>,
}

/// Compares every two spectrally distinct catalog graphs of equal order and
/// degree. Charpolys decide non-cospectrality exactly; energies are equal
/// within `ENERGY_TOLERANCE`.
pub fn search_equienergetic(
    max_order: usize,
    exec: Execution,
) -> (Vec<CatalogEntry>, SearchOutcome) {
    let catalog = regular_catalog(max_order);
    let profiles: Vec<(IntPoly, f64)> = map_collect(exec, &catalog, |e| {
        (
            charpoly(&e.graph, MatrixKind::Adjacency),
            graph_energy(&e.graph),
        )
    });
    // one representative per (order, degree, charpoly)
    let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut reps: HashSet<(usize, usize, &IntPoly)> = HashSet::new();
    for (i, e) in catalog.iter().enumerate() {
        if reps.insert((e.graph.order(), e.degree, &profiles[i].0)) {
            classes
                .entry((e.graph.order(), e.degree))
                .or_default()
                .push(i);
        }
    }
    let distinct_spectra = reps.len();
    let mut pairs = Vec::new();
    for (&(order, degree), members) in &classes {
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                let (ei, ej) = (profiles[i].1, profiles[j].1);
                if energies_equal(ei, ej) {
                    pairs.push(BasePair {
                        a: catalog[i].name.clone(),
                        b: catalog[j].name.clone(),
                        order,
                        degree,
                        energy_a: ei,
                        energy_b: ej,
                    });
                }
            }
        }
    }
    let outcome = SearchOutcome {
        max_order,
        catalog_size: catalog.len(),
        distinct_spectra,
        pairs,
    };
    (catalog, outcome)
}

/// Looks a catalog graph up by name.
pub fn find<'a>(catalog: &'a [CatalogEntry], name: &str) -> Option<&'a Graph> {
    catalog.iter().find(|e| e.name == name).map(|e| &e.graph)
}
