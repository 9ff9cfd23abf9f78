//! Exact characteristic polynomials, adjugate entry sums and coronals.
//!
//! The characteristic polynomial and the adjugate of `xI - M` come out of a
//! single Faddeev–LeVerrier sweep over big integers: with `N_1 = I`,
//! `N_k = M N_(k-1) + c_(n-k+1) I` and `c_(n-k) = -tr(M N_k) / k`, we have
//! `adj(xI - M) = sum_k N_k x^(n-k)`. Every division by `k` is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::graph::{Graph, MatrixKind, SymMatrix};
use crate::poly::IntPoly;
use crate::rational::RationalFn;

/// `det(xI - m)` and `1^T adj(xI - m) 1`.
pub fn charpoly_and_adjugate_sum(m: &SymMatrix) -> (IntPoly, IntPoly) {
    let n = m.dim();
    if n == 0 {
        return (IntPoly::one(), IntPoly::zero());
    }
    // sparse rows of m
    let rows: Vec<Vec<(usize, BigInt)>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| m.get(i, j) != 0)
                .map(|j| (j, BigInt::from(m.get(i, j))))
                .collect()
        })
        .collect();

    let mut charpoly = vec![BigInt::zero(); n + 1];
    let mut adj_sum = vec![BigInt::zero(); n];
    charpoly[n] = BigInt::one();

    let mut nk: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    for k in 1..=n {
        if k > 1 {
            let c = charpoly[n - k + 1].clone();
            nk = mul_sparse(&rows, &nk);
            for (i, row) in nk.iter_mut().enumerate() {
                row[i] += &c;
            }
        }
        adj_sum[n - k] = nk.iter().flatten().sum();
        let trace: BigInt = (0..n)
            .map(|i| rows[i].iter().map(|(j, a)| a * &nk[*j][i]).sum::<BigInt>())
            .sum();
        let (q, r) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
        charpoly[n - k] = q;
    }
    (IntPoly::new(charpoly), IntPoly::new(adj_sum))
}

fn mul_sparse(rows: &[Vec<(usize, BigInt)>], dense: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = dense.len();
    rows.iter()
        .map(|row| {
            let mut out = vec![BigInt::zero(); n];
            for (j, a) in row {
                for (o, d) in out.iter_mut().zip(&dense[*j]) {
                    if !d.is_zero() {
                        *o += a * d;
                    }
                }
            }
            out
        })
        .collect()
}

/// Exact characteristic polynomial of a graph matrix.
pub fn charpoly(g: &Graph, kind: MatrixKind) -> IntPoly {
    charpoly_and_adjugate_sum(&g.matrix(kind)).0
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det_bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn det_i64(rows: &[Vec<i64>]) -> BigInt {
    det_bareiss(
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect(),
    )
}

/// The coronal `1^T (xI - M)^(-1) 1 = p / f` split as `f = R F` and
/// `p = R P` with `P / F` reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronalDecomposition {
    /// `P`, degree at most `d - 1`.
    pub reduced_numerator: IntPoly,
    /// `F`, monic of degree `d`.
    pub reduced_denominator: IntPoly,
    /// `R = gcd(p, f)`, monic of degree `n - d`.
    pub cofactor: IntPoly,
    pub d: usize,
    pub charpoly: IntPoly,
    pub adjugate_sum: IntPoly,
}

impl CoronalDecomposition {
    pub fn coronal(&self) -> RationalFn {
        RationalFn::reduce(&self.reduced_numerator, &self.reduced_denominator)
            .expect("reduced denominator is nonzero")
    }
}

pub fn coronal_of(m: &SymMatrix) -> Result<CoronalDecomposition> {
    let (f, p) = charpoly_and_adjugate_sum(m);
    let mut r = p.gcd(&f);
    if r.is_zero() {
        // only for the 0x0 matrix
        r = IntPoly::one();
    }
    // f is monic, so its primitive factors are monic too
    debug_assert!(r.leading().is_some_and(|c| c.is_positive()));
    let big_f = f.div_exact(&r).expect("gcd divides charpoly");
    let big_p = p.div_exact(&r).expect("gcd divides adjugate sum");
    Ok(CoronalDecomposition {
        d: big_f.degree().unwrap_or(0),
        reduced_numerator: big_p,
        reduced_denominator: big_f,
        cofactor: r,
        charpoly: f,
        adjugate_sum: p,
    })
}

pub fn coronal_of_graph(g: &Graph, kind: MatrixKind) -> CoronalDecomposition {
    coronal_of(&g.matrix(kind)).expect("graph matrices are square")
}
