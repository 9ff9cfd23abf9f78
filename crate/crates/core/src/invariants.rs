//! Graph invariants of the corona product, each with a closed-form path
//! built from the factors and a direct path on the constructed product.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::charpoly::{charpoly, coronal_of_graph, det_i64};
use crate::corona::closed_neighborhood_corona;
use crate::error::{Error, Result};
use crate::graph::{Graph, MatrixKind};
use crate::poly::IntPoly;
use crate::roots::{integer_roots, split_integer_roots};
use crate::spectra::graph_spectrum;

/// Relative tolerance for energy equality.
pub const ENERGY_TOLERANCE: f64 = 1e-8;
/// Relative guard applied when the numeric spanning-tree product is rounded.
pub const ROUNDING_GUARD: f64 = 1e-6;

fn regular_connected(g1: &Graph, g2: &Graph) -> Result<usize> {
    if g1.order() == 0 || g2.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let r1 = g1.regular_degree().ok_or(Error::NotRegular)?;
    let components = g1.component_count();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    Ok(r1)
}

/// Kirchhoff index of `G1 ⊠ G2` for regular connected `G1`, from the
/// Laplacian spectra of the factors. The `γ = 0` eigenvalue of `G1`
/// contributes only the nonzero root `(r1+1)(n2+1)` of its quadratic.
pub fn kirchhoff_formula(g1: &Graph, g2: &Graph) -> Result<f64> {
    let r1 = regular_connected(g1, g2)? as f64;
    let (n1, n2) = (g1.order() as f64, g2.order() as f64);
    let s = r1 + 1.0;
    let gamma2 = graph_spectrum(g2, MatrixKind::Laplacian);
    let gamma1 = graph_spectrum(g1, MatrixKind::Laplacian);
    let copies: f64 = gamma2.values()[1..].iter().map(|g| n1 / (g + s)).sum();
    let base: f64 = gamma1.values()[1..]
        .iter()
        .map(|&g| (s * (n2 + 1.0) + g) / (g * s + g * n2 * (2.0 * s - g)))
        .sum();
    let zero_term = 1.0 / (s * (n2 + 1.0));
    Ok(n1 * (n2 + 1.0) * (copies + base + zero_term))
}

/// `n * sum 1/μ` over the nonzero Laplacian eigenvalues.
pub fn kirchhoff_direct(g: &Graph) -> Result<f64> {
    let components = g.component_count();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    let mu = graph_spectrum(g, MatrixKind::Laplacian);
    let n = g.order() as f64;
    Ok(n * mu.values().iter().skip(1).map(|m| 1.0 / m).sum::<f64>())
}

/// Spanning trees of `G1 ⊠ G2` for regular connected `G1`:
///
/// `t = (r1+1)/n1 · Π_{i≥2} (r1+1+γ_2i)^n1 · Π_{i≥2} γ_1i ((r1+1) + n2 (2+2r1-γ_1i))`.
///
/// The eigenvalue products are evaluated exactly through the factors'
/// integer Laplacian characteristic polynomials; the same product taken
/// over the numeric eigenvalues must round to it within `ROUNDING_GUARD`.
pub fn spanning_trees_formula(g1: &Graph, g2: &Graph) -> Result<BigInt> {
    let r1 = regular_connected(g1, g2)?;
    let exact = spanning_trees_exact_eval(g1, g2, r1)?;
    let numeric = spanning_trees_numeric(g1, g2, r1);
    let reference = exact.to_f64().unwrap_or(f64::INFINITY);
    let within = (numeric - reference).abs() <= ROUNDING_GUARD * reference.max(1.0);
    if !within {
        return Err(Error::RoundingGuardViolated {
            numeric,
            exact: exact.to_string(),
        });
    }
    Ok(exact)
}

/// The closed form over the numeric Laplacian eigenvalues of the factors.
pub fn spanning_trees_numeric(g1: &Graph, g2: &Graph, r1: usize) -> f64 {
    let s = (r1 + 1) as f64;
    let (n1, n2) = (g1.order() as f64, g2.order() as f64);
    let gamma2 = graph_spectrum(g2, MatrixKind::Laplacian);
    let gamma1 = graph_spectrum(g1, MatrixKind::Laplacian);
    let copies: f64 = gamma2.values()[1..]
        .iter()
        .map(|g| (s + g).powf(n1))
        .product();
    let base: f64 = gamma1.values()[1..]
        .iter()
        .map(|&g| g * s + n2 * g * (2.0 * s - g))
        .product();
    s / n1 * copies * base
}

fn spanning_trees_exact_eval(g1: &Graph, g2: &Graph, r1: usize) -> Result<BigInt> {
    let (n1, n2) = (g1.order(), g2.order());
    let s = BigInt::from(r1 + 1);
    let x = IntPoly::from_i64s(&[0, 1]);
    // h(y) = Π_{i≥2} (y - γ_i)
    let h2 = charpoly(g2, MatrixKind::Laplacian)
        .div_exact(&x)
        .expect("Laplacian charpoly vanishes at 0");
    let h1 = charpoly(g1, MatrixKind::Laplacian)
        .div_exact(&x)
        .expect("Laplacian charpoly vanishes at 0");
    let sign = |k: usize| {
        if k.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };

    // Π_{i≥2} (s + γ_2i) = (-1)^(n2-1) h2(-s)
    let copies = sign(n2 - 1) * h2.eval(&-&s);
    // Π_{i≥2} γ_1i = (-1)^(n1-1) h1(0)
    let gammas = sign(n1 - 1) * h1.coeff(0);
    // Π_{i≥2} (a - n2 γ_1i) with a = s (1 + 2 n2), homogenized h1(a / n2)
    let a = &s * BigInt::from(1 + 2 * n2);
    let n2b = BigInt::from(n2);
    let linear: BigInt = h1
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * num_traits::pow(a.clone(), k) * num_traits::pow(n2b.clone(), n1 - 1 - k))
        .sum();

    let numerator = s * num_traits::pow(copies, n1) * gammas * linear;
    let (t, rem) = numerator.div_rem(&BigInt::from(n1));
    if !rem.is_zero() {
        return Err(Error::RoundingGuardViolated {
            numeric: f64::NAN,
            exact: format!("{numerator}/{n1}"),
        });
    }
    Ok(t)
}

/// Matrix-Tree count: determinant of the Laplacian with row and column 0
/// removed. Zero for disconnected graphs.
pub fn spanning_trees_direct(g: &Graph) -> BigInt {
    let n = g.order();
    if n == 0 {
        return BigInt::zero();
    }
    let rows = g.matrix(MatrixKind::Laplacian).rows();
    let minor: Vec<Vec<i64>> = rows[1..].iter().map(|r| r[1..].to_vec()).collect();
    det_i64(&minor)
}

pub fn graph_energy(g: &Graph) -> f64 {
    graph_spectrum(g, MatrixKind::Adjacency).energy()
}

pub fn energies_equal(a: f64, b: f64) -> bool {
    (a - b).abs() <= ENERGY_TOLERANCE * (1.0 + a.abs())
}

/// Exact comparison of characteristic polynomials.
pub fn check_cospectral(ga: &Graph, gb: &Graph, kind: MatrixKind) -> bool {
    ga.order() == gb.order() && charpoly(ga, kind) == charpoly(gb, kind)
}

/// Exact comparison of the reduced coronals.
pub fn coronals_equal(ga: &Graph, gb: &Graph, kind: MatrixKind) -> bool {
    coronal_of_graph(ga, kind).coronal() == coronal_of_graph(gb, kind).coronal()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Integrality {
    pub is_integral: bool,
    /// Integer adjacency eigenvalues with multiplicity, ascending.
    pub integer_eigenvalues: Vec<BigInt>,
}

/// Decides integrality exactly from the integer adjacency charpoly.
pub fn check_integral(g: &Graph) -> Integrality {
    let f = charpoly(g, MatrixKind::Adjacency);
    let (roots, split) = integer_roots(&f).expect("charpoly is monic");
    Integrality {
        is_integral: split,
        integer_eigenvalues: roots,
    }
}

/// Integrality of `G1 ⊠ G2` together with the two-part factor criterion:
/// `G2` integral and every coupled factor `F(x)(x-λ) - P(x)(1+λ)^2` split
/// over the integers. The coupled factors' product is the product charpoly
/// with the cofactor power `R^n1` divided out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductIntegrality {
    pub product: Integrality,
    pub g2_integral: bool,
    pub cofactor_split: bool,
    pub coupled_factors_split: bool,
    /// `g2_integral && coupled_factors_split`
    pub factor_criterion: bool,
}

pub fn product_integrality(g1: &Graph, g2: &Graph) -> Result<ProductIntegrality> {
    let product = closed_neighborhood_corona(g1, g2)?;
    let f = charpoly(&product, MatrixKind::Adjacency);
    let cor = coronal_of_graph(g2, MatrixKind::Adjacency);
    let coupled = f
        .div_exact(&cor.cofactor.pow(g1.order()))
        .expect("cofactor power divides the product charpoly");
    let (_, coupled_rest) = split_integer_roots(&coupled)?;
    let (_, cofactor_rest) = split_integer_roots(&cor.cofactor)?;
    let g2_integral = check_integral(g2).is_integral;
    let coupled_factors_split = coupled_rest.degree() == Some(0);
    Ok(ProductIntegrality {
        product: check_integral(&product),
        g2_integral,
        cofactor_split: cofactor_rest.degree() == Some(0),
        coupled_factors_split,
        factor_criterion: g2_integral && coupled_factors_split,
    })
}

/// Two non-cospectral products with equal energy.
#[derive(Debug, Clone, PartialEq)]
pub struct EquienergeticPair {
    pub product_a: Graph,
    pub product_b: Graph,
    pub energy_a: f64,
    pub energy_b: f64,
    pub charpoly_a: IntPoly,
    pub charpoly_b: IntPoly,
}

fn violated(hypothesis: &str, detail: String) -> Error {
    Error::HypothesisViolated {
        hypothesis: hypothesis.to_string(),
        detail,
    }
}

/// Builds `G ⊠ G1` and `G ⊠ G2` after checking that `G1`, `G2` have equal
/// order, equal adjacency coronals, distinct characteristic polynomials and
/// equal energy. The conclusion (equal energy, distinct charpolys of the
/// products) is re-checked on the built products.
pub fn equienergetic_product_pair(g: &Graph, g1: &Graph, g2: &Graph) -> Result<EquienergeticPair> {
    if g1.order() != g2.order() {
        return Err(violated(
            "equal order",
            format!("{} vs {}", g1.order(), g2.order()),
        ));
    }
    if !coronals_equal(g1, g2, MatrixKind::Adjacency) {
        let (a, b) = (
            coronal_of_graph(g1, MatrixKind::Adjacency).coronal(),
            coronal_of_graph(g2, MatrixKind::Adjacency).coronal(),
        );
        return Err(violated("equal coronals", format!("{a} vs {b}")));
    }
    let (f1, f2) = (
        charpoly(g1, MatrixKind::Adjacency),
        charpoly(g2, MatrixKind::Adjacency),
    );
    if f1 == f2 {
        return Err(violated(
            "non-cospectral",
            format!("both have charpoly {f1}"),
        ));
    }
    let (e1, e2) = (graph_energy(g1), graph_energy(g2));
    if !energies_equal(e1, e2) {
        return Err(violated("equal energy", format!("{e1} vs {e2}")));
    }

    let product_a = closed_neighborhood_corona(g, g1)?;
    let product_b = closed_neighborhood_corona(g, g2)?;
    let pair = EquienergeticPair {
        energy_a: graph_energy(&product_a),
        energy_b: graph_energy(&product_b),
        charpoly_a: charpoly(&product_a, MatrixKind::Adjacency),
        charpoly_b: charpoly(&product_b, MatrixKind::Adjacency),
        product_a,
        product_b,
    };
    if pair.charpoly_a == pair.charpoly_b {
        return Err(violated(
            "products non-cospectral",
            "charpolys coincide".into(),
        ));
    }
    if !energies_equal(pair.energy_a, pair.energy_b) {
        return Err(violated(
            "products equienergetic",
            format!("{} vs {}", pair.energy_a, pair.energy_b),
        ));
    }
    Ok(pair)
}

/// A formula value or an oracle value: real, or an exact integer.
#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    Real(f64),
    Exact(BigInt),
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Quantity::Real(v) => s.serialize_f64(*v),
            Quantity::Exact(v) => s.serialize_str(&v.to_string()),
        }
    }
}

impl std::fmt::Display for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Quantity::Real(v) => write!(f, "{v}"),
            Quantity::Exact(v) => write!(f, "{v}"),
        }
    }
}

/// One formula-versus-oracle comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub formula_value: Quantity,
    pub oracle_value: Quantity,
    pub relative_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl InvariantReport {
    pub fn real(name: &str, formula: f64, oracle: f64, tolerance: f64) -> InvariantReport {
        let dev = (formula - oracle).abs() / oracle.abs().max(f64::MIN_POSITIVE);
        let dev = if formula == oracle { 0.0 } else { dev };
        InvariantReport {
            name: name.to_string(),
            formula_value: Quantity::Real(formula),
            oracle_value: Quantity::Real(oracle),
            relative_deviation: dev,
            tolerance,
            passed: dev <= tolerance,
        }
    }

    pub fn exact(name: &str, formula: BigInt, oracle: BigInt) -> InvariantReport {
        let passed = formula == oracle;
        InvariantReport {
            name: name.to_string(),
            formula_value: Quantity::Exact(formula),
            oracle_value: Quantity::Exact(oracle),
            relative_deviation: if passed { 0.0 } else { f64::INFINITY },
            tolerance: 0.0,
            passed,
        }
    }
}
