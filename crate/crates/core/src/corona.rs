//! The closed neighborhood corona `G1 ⊠ G2`.
//!
//! Take `n1` copies of `G2`; every vertex of copy `i` is joined to `u_i` and
//! to every neighbor of `u_i` in `G1`. Vertices are labeled so the product's
//! matrices are literally the Kronecker block forms: `u_i` keeps index `i`,
//! and copy-vertex `v_j^i` gets index `n1 + j*n1 + i`, i.e. the copies of
//! `G2`-vertex `j` form one contiguous block.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductCounts {
    pub vertices: usize,
    pub edges: usize,
}

/// Index of `v_j^i` in the product.
#[inline]
pub fn copy_vertex(n1: usize, i: usize, j: usize) -> usize {
    n1 + j * n1 + i
}

pub fn closed_neighborhood_corona(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.order(), g2.order());
    if n1 == 0 || n2 == 0 {
        return Err(Error::EmptyGraph);
    }
    let adj1 = g1.adjacency_lists();
    let mut edges = Vec::with_capacity(product_counts(g1, g2)?.edges);
    edges.extend(g1.edges());
    for (a, b) in g2.edges() {
        edges.extend((0..n1).map(|i| (copy_vertex(n1, i, a), copy_vertex(n1, i, b))));
    }
    for (i, nbrs) in adj1.iter().enumerate() {
        for j in 0..n2 {
            let v = copy_vertex(n1, i, j);
            edges.push((i, v));
            edges.extend(nbrs.iter().map(|&k| (k, v)));
        }
    }
    Graph::new(n1 * (1 + n2), edges)
}

/// Order `n1 (1 + n2)` and size `e1 + n1 e2 + 2 e1 n2 + n1 n2`.
pub fn product_counts(g1: &Graph, g2: &Graph) -> Result<ProductCounts> {
    let (n1, n2) = (g1.order(), g2.order());
    if n1 == 0 || n2 == 0 {
        return Err(Error::EmptyGraph);
    }
    let (e1, e2) = (g1.size(), g2.size());
    Ok(ProductCounts {
        vertices: n1 * (1 + n2),
        edges: e1 + n1 * e2 + 2 * e1 * n2 + n1 * n2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_family;

    fn g(spec: &str) -> Graph {
        make_family(spec).unwrap()
    }

    #[test]
    fn k2_corona_k1_is_k4_minus_an_edge() {
        let p = closed_neighborhood_corona(&g("complete:2"), &g("complete:1")).unwrap();
        assert_eq!((p.order(), p.size()), (4, 5));
        // copy-vertices are 2 and 3; they are the only non-adjacent pair
        let missing: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .filter(|&(u, v)| !p.has_edge(u, v))
            .collect();
        assert_eq!(missing, vec![(2, 3)]);
    }

    #[test]
    fn figure_instance_counts() {
        let p = closed_neighborhood_corona(&g("cycle:4"), &g("cycle:3")).unwrap();
        assert_eq!((p.order(), p.size()), (16, 52));
        assert_eq!(
            product_counts(&g("cycle:4"), &g("cycle:3")).unwrap(),
            ProductCounts {
                vertices: 16,
                edges: 52
            }
        );
    }

    #[test]
    fn k1_corona_k3_is_k4() {
        let p = closed_neighborhood_corona(&g("complete:1"), &g("complete:3")).unwrap();
        assert_eq!(p, g("complete:4"));
    }

    #[test]
    fn count_examples() {
        let pc = |a: &str, b: &str| product_counts(&g(a), &g(b)).unwrap();
        assert_eq!(
            pc("complete:2", "complete:1"),
            ProductCounts {
                vertices: 4,
                edges: 5
            }
        );
        assert_eq!(
            pc("complete:1", "complete:1"),
            ProductCounts {
                vertices: 2,
                edges: 1
            }
        );
    }

    #[test]
    fn empty_factor_rejected() {
        let e = Graph::empty(0);
        assert_eq!(
            closed_neighborhood_corona(&e, &g("complete:2")),
            Err(Error::EmptyGraph)
        );
        assert_eq!(product_counts(&g("complete:2"), &e), Err(Error::EmptyGraph));
    }

    #[test]
    fn isolated_vertex_copy_attaches_only_to_its_root() {
        let g1 = Graph::empty(2);
        let p = closed_neighborhood_corona(&g1, &g("complete:1")).unwrap();
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
    }
}
