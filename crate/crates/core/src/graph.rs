//! Simple undirected graphs on dense vertex labels `0..n`, their integer
//! matrices, and the standard families used throughout the crate.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected finite graph. Edges are stored as sorted `(u, v)`
/// pairs with `u < v`, so two graphs compare equal iff they have the same
/// order and the same labeled edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, collapsing duplicate edges. Rejects loops and
    /// endpoints outside `0..order`.
    pub fn new<I>(order: usize, edge_list: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = BTreeSet::new();
        for (u, v) in edge_list {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::OutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            edges.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { order, edges })
    }

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Graph {
        Graph {
            order,
            edges: BTreeSet::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, each with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// `Some(r)` iff every vertex has degree `r`. The null graph is 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        match deg.first() {
            None => Some(0),
            Some(&r) => deg.iter().all(|&d| d == r).then_some(r),
        }
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.order];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Regular degree (if any) and number of connected components.
    pub fn regularity_and_components(&self) -> (Option<usize>, usize) {
        (self.regular_degree(), self.component_count())
    }

    pub fn complement(&self) -> Graph {
        let n = self.order;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect();
        Graph { order: n, edges }
    }

    /// Vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph {
            order: self.order + other.order,
            edges,
        }
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of
    /// `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order;
        let mut hit = vec![false; n];
        if perm.len() != n {
            return Err(Error::BadFamilyParams(format!(
                "permutation of length {} for order {n}",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::BadFamilyParams("not a permutation".into()));
            }
        }
        Graph::new(n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn matrix(&self, kind: MatrixKind) -> SymMatrix {
        let n = self.order;
        let mut entries = vec![0i64; n * n];
        let (off, diag) = match kind {
            MatrixKind::Adjacency => (1, 0),
            MatrixKind::Laplacian => (-1, 1),
            MatrixKind::SignlessLaplacian => (1, 1),
        };
        for &(u, v) in &self.edges {
            entries[u * n + v] = off;
            entries[v * n + u] = off;
        }
        if diag != 0 {
            for (v, d) in self.degrees().into_iter().enumerate() {
                entries[v * n + v] = d as i64;
            }
        }
        SymMatrix { dim: n, entries }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.order, self.size())
    }
}

/// Which integer matrix of a graph to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::SignlessLaplacian => "signless",
        }
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "adjacency" | "a" => Ok(MatrixKind::Adjacency),
            "laplacian" | "l" => Ok(MatrixKind::Laplacian),
            "signless" | "signless-laplacian" | "q" => Ok(MatrixKind::SignlessLaplacian),
            other => Err(format!("unknown matrix kind `{other}`")),
        }
    }
}

/// Dense symmetric matrix with exact integer entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl SymMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<SymMatrix> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NonSquare);
        }
        let entries: Vec<i64> = rows.iter().flatten().copied().collect();
        for i in 0..dim {
            for j in 0..i {
                if entries[i * dim + j] != entries[j * dim + i] {
                    return Err(Error::NonSymmetric);
                }
            }
        }
        Ok(SymMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j)).sum())
            .collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn to_dmatrix(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j) as f64)
    }
}

/// Parameterized graph families with a fixed vertex labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Circulant(usize, Vec<usize>),
    Empty(usize),
    Petersen,
    Union(Box<Family>, Box<Family>),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        let bad = |msg: String| Err(Error::BadFamilyParams(msg));
        match self {
            Family::Path(n) => {
                if *n == 0 {
                    return bad("path needs n >= 1".into());
                }
                Graph::new(*n, (1..*n).map(|i| (i - 1, i)))
            }
            Family::Cycle(n) => {
                if *n < 3 {
                    return bad(format!("cycle needs n >= 3, got {n}"));
                }
                Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n)))
            }
            Family::Complete(n) => {
                if *n == 0 {
                    return bad("complete graph needs n >= 1".into());
                }
                Graph::new(*n, (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))))
            }
            Family::CompleteBipartite(a, b) => {
                if *a == 0 || *b == 0 {
                    return bad(format!("complete bipartite needs a, b >= 1, got {a},{b}"));
                }
                let (a, b) = (*a, *b);
                Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            }
            Family::Star(n) => {
                if *n == 0 {
                    return bad("star needs at least one leaf".into());
                }
                Graph::new(n + 1, (1..=*n).map(|v| (0, v)))
            }
            Family::Circulant(n, jumps) => {
                let n = *n;
                if n == 0 {
                    return bad("circulant needs n >= 1".into());
                }
                if let Some(j) = jumps.iter().find(|&&j| j == 0 || j >= n) {
                    return bad(format!("circulant jump {j} outside 1..{n}"));
                }
                Graph::new(
                    n,
                    jumps
                        .iter()
                        .flat_map(|&j| (0..n).map(move |i| (i, (i + j) % n))),
                )
            }
            Family::Empty(n) => Ok(Graph::empty(*n)),
            Family::Petersen => Graph::new(
                10,
                (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]),
            ),
            Family::Union(a, b) => Ok(a.build()?.disjoint_union(&b.build()?)),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    /// Parses `name:param[:param]`, e.g. `cycle:5`, `circulant:9:1,2`,
    /// `bipartite:2:3`, `petersen`. `a+b` is the disjoint union.
    fn from_str(s: &str) -> Result<Family> {
        if let Some((a, b)) = s.split_once('+') {
            return Ok(Family::Union(Box::new(a.parse()?), Box::new(b.parse()?)));
        }
        let bad = || Error::BadFamilyParams(format!("cannot parse family `{s}`"));
        let mut parts = s.trim().split(':');
        let name = parts.next().ok_or_else(bad)?;
        let params: Vec<&str> = parts.collect();
        let num = |i: usize| -> Result<usize> {
            params
                .get(i)
                .and_then(|p| p.trim().parse().ok())
                .ok_or_else(bad)
        };
        let family = match (name, params.len()) {
            ("path", 1) => Family::Path(num(0)?),
            ("cycle", 1) => Family::Cycle(num(0)?),
            ("complete", 1) => Family::Complete(num(0)?),
            ("bipartite", 2) => Family::CompleteBipartite(num(0)?, num(1)?),
            ("star", 1) => Family::Star(num(0)?),
            ("empty", 1) => Family::Empty(num(0)?),
            ("petersen", 0) => Family::Petersen,
            ("circulant", 2) => {
                let jumps = params[1]
                    .split(',')
                    .map(|j| j.trim().parse().map_err(|_| bad()))
                    .collect::<Result<Vec<usize>>>()?;
                Family::Circulant(num(0)?, jumps)
            }
            _ => return Err(bad()),
        };
        Ok(family)
    }
}

/// Builds a family member from its textual spec.
pub fn make_family(spec: &str) -> Result<Graph> {
    spec.parse::<Family>()?.build()
}
