//! Spectra of the corona product: the direct numeric eigensolve (oracle
//! path) and the closed forms assembled from the factors' spectra and
//! coronals (formula path).
//!
//! The formula path keeps the coronal algebra exact and only goes numeric
//! for the factors' eigenvalues and for the per-eigenvalue cleared
//! polynomials, so the two paths share nothing but the symmetric
//! eigensolver applied to different matrices.

use num_bigint::BigInt;
use serde::Serialize;

use crate::charpoly::{coronal_of_graph, CoronalDecomposition};
use crate::corona::closed_neighborhood_corona;
use crate::error::{Error, Result};
use crate::graph::{Graph, MatrixKind, SymMatrix};
use crate::poly::IntPoly;
use crate::roots::{real_poly_roots, real_roots_exact};

pub const DEFAULT_GROUPING_TOLERANCE: f64 = 1e-7;

/// Below this `|1 + λ|` (or `|1 - r1 + ν|`) the coupling term of a cleared
/// factor is dropped and its roots are read off directly.
const DECOUPLED: f64 = 1e-9;

/// Sorted real eigenvalue multiset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    grouping_tolerance: f64,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Spectrum {
        values.sort_by(f64::total_cmp);
        Spectrum {
            values,
            grouping_tolerance: DEFAULT_GROUPING_TOLERANCE,
        }
    }

    pub fn with_grouping_tolerance(mut self, tol: f64) -> Spectrum {
        self.grouping_tolerance = tol;
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }

    pub fn energy(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    pub fn min(&self) -> Option<f64> {
        self.values.first().copied()
    }

    fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.grouping_tolerance * (1.0 + a.abs().max(b.abs()))
    }

    pub fn multiplicity(&self, value: f64) -> usize {
        self.values
            .iter()
            .filter(|&&v| self.close(v, value))
            .count()
    }

    /// Distinct values (first member of each cluster) with multiplicities.
    pub fn groups(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some((rep, count)) if self.close(*rep, v) => *count += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }

    /// `max_i |a_i - b_i| / (1 + |b_i|)` over the sorted lists; infinite
    /// when the lengths differ.
    pub fn max_relative_deviation(&self, reference: &Spectrum) -> f64 {
        if self.len() != reference.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&reference.values)
            .map(|(a, b)| (a - b).abs() / (1.0 + b.abs()))
            .fold(0.0, f64::max)
    }
}

impl FromIterator<f64> for Spectrum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        Spectrum::new(iter.into_iter().collect())
    }
}

/// All eigenvalues of a symmetric integer matrix, ascending.
pub fn symmetric_eigenvalues(m: &SymMatrix) -> Spectrum {
    if m.dim() == 0 {
        return Spectrum::new(Vec::new());
    }
    let eig = nalgebra::SymmetricEigen::new(m.to_dmatrix());
    Spectrum::new(eig.eigenvalues.iter().copied().collect())
}

pub fn graph_spectrum(g: &Graph, kind: MatrixKind) -> Spectrum {
    symmetric_eigenvalues(&g.matrix(kind))
}

/// Oracle path: build the product and eigensolve its matrix.
pub fn product_spectrum_direct(g1: &Graph, g2: &Graph, kind: MatrixKind) -> Result<Spectrum> {
    Ok(graph_spectrum(&closed_neighborhood_corona(g1, g2)?, kind))
}

fn check_orders(g1: &Graph, g2: &Graph) -> Result<()> {
    if g1.order() == 0 || g2.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(())
}

fn regular_degree(g1: &Graph) -> Result<usize> {
    g1.regular_degree().ok_or(Error::NotRegular)
}

/// Roots of `F(x) (x - a) - c P(x)`. `f_roots` are the roots of `F`.
fn cleared_factor_roots(
    numerator: &[f64],
    denominator: &[f64],
    f_roots: &[f64],
    a: f64,
    coupling: f64,
) -> Result<Vec<f64>> {
    if coupling.abs() <= DECOUPLED {
        let mut out = f_roots.to_vec();
        out.push(a);
        return Ok(out);
    }
    let c = coupling * coupling;
    let mut poly = vec![0.0; denominator.len() + 1];
    for (i, f) in denominator.iter().enumerate() {
        poly[i + 1] += f;
        poly[i] -= a * f;
    }
    for (i, p) in numerator.iter().enumerate() {
        poly[i] -= c * p;
    }
    real_poly_roots(&poly)
}

/// Spectrum of `A(G1 ⊠ G2)` from the adjacency spectrum of `G1` and the
/// coronal decomposition of `G2`: the cofactor roots each `n1` times, then
/// for every eigenvalue `λ` of `G1` the roots of
/// `F(x) (x - λ) - P(x) (1 + λ)^2`.
pub fn adjacency_spectrum_formula(g1: &Graph, g2: &Graph) -> Result<Spectrum> {
    check_orders(g1, g2)?;
    let n1 = g1.order();
    let cor = coronal_of_graph(g2, MatrixKind::Adjacency);
    let mut values = repeat_roots(&cor.cofactor, n1)?;
    let f_roots = real_roots_exact(&cor.reduced_denominator)?;
    let (num, den) = (
        cor.reduced_numerator.to_f64(),
        cor.reduced_denominator.to_f64(),
    );
    for &lambda in graph_spectrum(g1, MatrixKind::Adjacency).values() {
        values.extend(cleared_factor_roots(
            &num,
            &den,
            &f_roots,
            lambda,
            1.0 + lambda,
        )?);
    }
    Ok(Spectrum::new(values))
}

/// Spectrum of `L(G1 ⊠ G2)` for `r1`-regular `G1`: `r1 + 1 + γ_2i` for the
/// Laplacian eigenvalues of `G2` except the first zero, each `n1` times,
/// then both roots of
/// `x^2 - ((r1+1)(n2+1) + γ) x + γ (r1+1) + n2 γ (2 + 2 r1 - γ)`
/// for every Laplacian eigenvalue `γ` of `G1`.
pub fn laplacian_spectrum_formula(g1: &Graph, g2: &Graph) -> Result<Spectrum> {
    check_orders(g1, g2)?;
    let r1 = regular_degree(g1)? as f64;
    let (n1, n2) = (g1.order(), g2.order() as f64);
    let s = r1 + 1.0;
    let mut values = Vec::with_capacity(n1 * (g2.order() + 1));
    for &gamma in graph_spectrum(g2, MatrixKind::Laplacian)
        .values()
        .iter()
        .skip(1)
    {
        values.extend(std::iter::repeat_n(s + gamma, n1));
    }
    for &gamma in graph_spectrum(g1, MatrixKind::Laplacian).values() {
        values.extend(real_poly_roots(&laplacian_quadratic(r1, n2, gamma))?);
    }
    Ok(Spectrum::new(values))
}

/// Coefficients (low to high) of the per-eigenvalue Laplacian quadratic.
pub fn laplacian_quadratic(r1: f64, n2: f64, gamma: f64) -> [f64; 3] {
    let s = r1 + 1.0;
    [
        gamma * s + n2 * gamma * (2.0 + 2.0 * r1 - gamma),
        -(s * (n2 + 1.0) + gamma),
        1.0,
    ]
}

/// Spectrum of `Q(G1 ⊠ G2)` for `r1`-regular `G1`, from the signless
/// coronal `P/F` of `G2` shifted by `s = r1 + 1`: the shifted cofactor
/// roots each `n1` times, then for every signless eigenvalue `ν` of `G1`
/// the roots of `F(x - s) (x - n2 s - ν) - P(x - s) (1 - r1 + ν)^2`.
pub fn signless_spectrum_formula(g1: &Graph, g2: &Graph) -> Result<Spectrum> {
    check_orders(g1, g2)?;
    let r1 = regular_degree(g1)?;
    let (n1, n2) = (g1.order(), g2.order());
    let s = r1 + 1;
    let shift = BigInt::from(-(s as i64));
    let cor = coronal_of_graph(g2, MatrixKind::SignlessLaplacian);
    let shifted = CoronalDecomposition {
        reduced_numerator: cor.reduced_numerator.shift(&shift),
        reduced_denominator: cor.reduced_denominator.shift(&shift),
        cofactor: cor.cofactor.shift(&shift),
        ..cor
    };
    let mut values = repeat_roots(&shifted.cofactor, n1)?;
    let f_roots = real_roots_exact(&shifted.reduced_denominator)?;
    let num = shifted.reduced_numerator.to_f64();
    let den = shifted.reduced_denominator.to_f64();
    let (r1, s) = (r1 as f64, s as f64);
    for &nu in graph_spectrum(g1, MatrixKind::SignlessLaplacian).values() {
        let a = n2 as f64 * s + nu;
        values.extend(cleared_factor_roots(
            &num,
            &den,
            &f_roots,
            a,
            1.0 - r1 + nu,
        )?);
    }
    Ok(Spectrum::new(values))
}

fn repeat_roots(p: &IntPoly, times: usize) -> Result<Vec<f64>> {
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let roots = real_roots_exact(p)?;
    Ok(roots
        .iter()
        .flat_map(|&r| std::iter::repeat_n(r, times))
        .collect())
}

/// Formula path for the requested matrix kind.
pub fn product_spectrum_formula(g1: &Graph, g2: &Graph, kind: MatrixKind) -> Result<Spectrum> {
    match kind {
        MatrixKind::Adjacency => adjacency_spectrum_formula(g1, g2),
        MatrixKind::Laplacian => laplacian_spectrum_formula(g1, g2),
        MatrixKind::SignlessLaplacian => signless_spectrum_formula(g1, g2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_family;

    fn g(spec: &str) -> Graph {
        make_family(spec).unwrap()
    }

    fn assert_values(s: &Spectrum, want: &[f64], tol: f64) {
        assert_eq!(s.len(), want.len(), "{:?} vs {want:?}", s.values());
        for (a, b) in s.values().iter().zip(want) {
            assert!((a - b).abs() <= tol, "{:?} vs {want:?}", s.values());
        }
    }

    #[test]
    fn eigensolver_examples() {
        assert_values(
            &graph_spectrum(&g("cycle:4"), MatrixKind::Adjacency),
            &[-2.0, 0.0, 0.0, 2.0],
            1e-12,
        );
        assert_values(
            &graph_spectrum(&g("complete:2"), MatrixKind::Laplacian),
            &[0.0, 2.0],
            1e-12,
        );
    }

    #[test]
    fn k2_k1_formulas() {
        let (k2, k1) = (g("complete:2"), g("complete:1"));
        let s17 = 17f64.sqrt();
        let adj = adjacency_spectrum_formula(&k2, &k1).unwrap();
        assert_values(
            &adj,
            &[(1.0 - s17) / 2.0, -1.0, 0.0, (1.0 + s17) / 2.0],
            1e-12,
        );
        let lap = laplacian_spectrum_formula(&k2, &k1).unwrap();
        assert_values(&lap, &[0.0, 2.0, 4.0, 4.0], 1e-12);
        assert_eq!(lap.multiplicity(0.0), 1);
        let q = signless_spectrum_formula(&k2, &k1).unwrap();
        let s5 = 5f64.sqrt();
        assert_values(&q, &[3.0 - s5, 2.0, 2.0, 3.0 + s5], 1e-12);
        assert!((q.sum() - 10.0).abs() < 1e-12);
    }

    #[test]
    fn k1_k3_adjacency_formula_is_k4() {
        let s = adjacency_spectrum_formula(&g("complete:1"), &g("complete:3")).unwrap();
        assert_values(&s, &[-1.0, -1.0, -1.0, 3.0], 1e-12);
    }

    #[test]
    fn laplacian_requires_regular_first_factor() {
        assert_eq!(
            laplacian_spectrum_formula(&g("path:3"), &g("complete:2")),
            Err(Error::NotRegular)
        );
        assert_eq!(
            signless_spectrum_formula(&g("star:2"), &g("complete:2")),
            Err(Error::NotRegular)
        );
        assert_eq!(
            adjacency_spectrum_formula(&Graph::empty(0), &g("complete:2")),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn figure_instance_matches_direct() {
        let (c4, c3) = (g("cycle:4"), g("cycle:3"));
        for kind in MatrixKind::ALL {
            let f = product_spectrum_formula(&c4, &c3, kind).unwrap();
            let d = product_spectrum_direct(&c4, &c3, kind).unwrap();
            assert_eq!(f.len(), 16);
            assert!(f.max_relative_deviation(&d) <= 1e-8, "{kind:?}");
        }
    }

    #[test]
    fn grouping() {
        let s = Spectrum::new(vec![2.0, -1.0, 2.0 + 1e-10, 0.0]);
        assert_eq!(s.groups(), vec![(-1.0, 1), (0.0, 1), (2.0, 2)]);
        assert_eq!(s.multiplicity(2.0), 2);
    }
}
