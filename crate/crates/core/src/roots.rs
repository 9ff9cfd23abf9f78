//! Root extraction: exact integer roots, and numeric real roots of
//! polynomials known to be real-rooted.

use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Relative size of an imaginary part that is still projected onto the
/// real axis.
pub const IMAG_TOLERANCE: f64 = 1e-8;

/// All integer roots with multiplicity (ascending) and whether deflating
/// them leaves a constant.
pub fn integer_roots(p: &IntPoly) -> Result<(Vec<BigInt>, bool)> {
    let (roots, rest) = split_integer_roots(p)?;
    Ok((roots, rest.degree() == Some(0)))
}

/// Integer roots (ascending) and the cofactor left after deflating them.
pub fn split_integer_roots(p: &IntPoly) -> Result<(Vec<BigInt>, IntPoly)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let mut q = p.clone();
    while q.degree() > Some(0) && q.coeff(0).is_zero() {
        q = IntPoly::new(q.coeffs()[1..].to_vec());
        roots.push(BigInt::zero());
    }
    let bound = root_bound(&q);
    let mut r = 1u64;
    while q.degree() > Some(0) && (r as f64) <= bound {
        for cand in [BigInt::from(r), -BigInt::from(r)] {
            while q.degree() > Some(0)
                && q.coeff(0).is_multiple_of(&cand)
                && q.eval(&cand).is_zero()
            {
                q = deflate(&q, &cand);
                roots.push(cand.clone());
            }
        }
        r += 1;
    }
    roots.sort();
    Ok((roots, q))
}

/// Upper bound on root magnitudes: Fujiwara's bound, clipped by the
/// constant term since integer roots divide it.
fn root_bound(q: &IntPoly) -> f64 {
    let Some(n) = q.degree() else { return 0.0 };
    if n == 0 {
        return 0.0;
    }
    let lead = q.leading().and_then(|c| c.to_f64()).unwrap_or(1.0).abs();
    let fujiwara = (1..=n)
        .map(|k| {
            let c = q.coeff(n - k).to_f64().unwrap_or(f64::INFINITY).abs() / lead;
            let c = if k == n { c / 2.0 } else { c };
            c.powf(1.0 / k as f64)
        })
        .fold(0.0, f64::max)
        * 2.0;
    let a0 = q.coeff(0).abs().to_f64().unwrap_or(f64::INFINITY);
    fujiwara.min(a0) + 1.0
}

/// `q / (x - r)`, assuming `r` is a root.
fn deflate(q: &IntPoly, r: &BigInt) -> IntPoly {
    let c = q.coeffs();
    let n = c.len() - 1;
    let mut out = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for k in (0..n).rev() {
        carry = &c[k + 1] + carry * r;
        out[k] = carry.clone();
    }
    IntPoly::new(out)
}

/// Real roots (ascending, with multiplicity) of a real polynomial given by
/// coefficients low to high. Roots are found as eigenvalues of the balanced
/// companion matrix and polished by Newton's method; any root whose
/// imaginary part exceeds `IMAG_TOLERANCE * (1 + |root|)` is an error.
pub fn real_poly_roots(coeffs: &[f64]) -> Result<Vec<f64>> {
    let max = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let leading = coeffs.last().copied().unwrap_or(0.0);
    if leading == 0.0 || leading.abs() <= 1e-12 * max || !max.is_finite() {
        return Err(Error::DegenerateLeadingCoefficient { leading, max });
    }
    let monic: Vec<f64> = coeffs.iter().map(|c| c / leading).collect();
    let zeros = monic.iter().take_while(|&&c| c == 0.0).count();
    let reduced = &monic[zeros..];
    let mut roots = vec![0.0; zeros];
    let degree = reduced.len() - 1;
    let found: Vec<Complex<f64>> = match degree {
        0 => vec![],
        1 => vec![Complex::new(-reduced[0], 0.0)],
        2 => quadratic(reduced[1], reduced[0]),
        _ => companion_roots(reduced)?,
    };
    for z in found {
        let z = polish(reduced, z);
        if z.im.abs() > IMAG_TOLERANCE * (1.0 + z.norm()) {
            return Err(Error::ComplexRoots { re: z.re, im: z.im });
        }
        roots.push(z.re);
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

/// Roots of `x^2 + b x + c`, cancellation-free.
fn quadratic(b: f64, c: f64) -> Vec<Complex<f64>> {
    let disc = b * b - 4.0 * c;
    if disc < 0.0 {
        let re = -b / 2.0;
        let im = (-disc).sqrt() / 2.0;
        return vec![Complex::new(re, im), Complex::new(re, -im)];
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    if q == 0.0 {
        return vec![Complex::new(0.0, 0.0); 2];
    }
    vec![Complex::new(q, 0.0), Complex::new(c / q, 0.0)]
}

fn companion_roots(monic: &[f64]) -> Result<Vec<Complex<f64>>> {
    let n = monic.len() - 1;
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -monic[i];
    }
    nalgebra::linalg::balancing::balance_parlett_reinsch(&mut m);
    let schur =
        nalgebra::linalg::Schur::try_new(m, f64::EPSILON, 10_000).ok_or(Error::ComplexRoots {
            re: f64::NAN,
            im: f64::NAN,
        })?;
    Ok(schur.complex_eigenvalues().iter().copied().collect())
}

fn eval_with_derivative(monic: &[f64], z: Complex<f64>) -> (Complex<f64>, Complex<f64>) {
    let mut p = Complex::new(0.0, 0.0);
    let mut dp = Complex::new(0.0, 0.0);
    for &c in monic.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// A few Newton steps, kept only while the residual shrinks.
fn polish(monic: &[f64], mut z: Complex<f64>) -> Complex<f64> {
    let (mut p, mut dp) = eval_with_derivative(monic, z);
    for _ in 0..8 {
        if p.norm() == 0.0 || dp.norm() == 0.0 {
            break;
        }
        let next = z - p / dp;
        let (np, ndp) = eval_with_derivative(monic, next);
        if np.norm() >= p.norm() {
            break;
        }
        z = next;
        p = np;
        dp = ndp;
    }
    z
}

/// Real roots (ascending, with multiplicity) of an integer polynomial that
/// is real-rooted. Integer roots are taken exactly, the rest of the
/// polynomial is split into square-free factors so that repeated roots never
/// reach the numeric solver.
pub fn real_roots_exact(p: &IntPoly) -> Result<Vec<f64>> {
    let (ints, rest) = split_integer_roots(p)?;
    let mut roots: Vec<f64> = ints
        .iter()
        .map(|r| r.to_f64().unwrap_or(f64::NAN))
        .collect();
    for (factor, mult) in rest.square_free() {
        let found = real_poly_roots(&factor.to_f64())?;
        for _ in 0..mult {
            roots.extend_from_slice(&found);
        }
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn integer_root_examples() {
        assert_eq!(
            integer_roots(&p(&[-1, 0, 1])).unwrap(),
            (ints(&[-1, 1]), true)
        );
        assert_eq!(integer_roots(&p(&[-2, 0, 1])).unwrap(), (vec![], false));
        // (x-3)(x+1)^3 = x^4 - 6x^2 - 8x - 3
        let f = &p(&[-3, 1]) * &p(&[1, 1]).pow(3);
        assert_eq!(f, p(&[-3, -8, -6, 0, 1]));
        assert_eq!(integer_roots(&f).unwrap(), (ints(&[-1, -1, -1, 3]), true));
        assert_eq!(integer_roots(&IntPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(integer_roots(&p(&[5])).unwrap(), (vec![], true));
        // non-monic: 2x^2 - x - 1 = (2x + 1)(x - 1)
        assert_eq!(
            integer_roots(&p(&[-1, -1, 2])).unwrap(),
            (ints(&[1]), false)
        );
        assert_eq!(
            integer_roots(&p(&[0, 0, 1])).unwrap(),
            (ints(&[0, 0]), true)
        );
    }

    #[test]
    fn real_root_examples() {
        let r = real_poly_roots(&[-4.0, -1.0, 1.0]).unwrap();
        let s17 = 17f64.sqrt();
        assert!((r[0] - (1.0 - s17) / 2.0).abs() < 1e-14);
        assert!((r[1] - (1.0 + s17) / 2.0).abs() < 1e-14);
        let r = real_poly_roots(&[0.0, -2.0, 0.0, 1.0]).unwrap();
        let s2 = 2f64.sqrt();
        for (a, b) in r.iter().zip([-s2, 0.0, s2]) {
            assert!((a - b).abs() < 1e-14, "{a} vs {b}");
        }
        assert_eq!(real_poly_roots(&[8.0, -6.0, 1.0]).unwrap(), vec![2.0, 4.0]);
    }

    #[test]
    fn real_root_errors() {
        assert!(matches!(
            real_poly_roots(&[1.0, 0.0, 1.0]),
            Err(Error::ComplexRoots { .. })
        ));
        assert!(matches!(
            real_poly_roots(&[1.0, 1.0, 1e-14]),
            Err(Error::DegenerateLeadingCoefficient { .. })
        ));
        assert!(matches!(
            real_poly_roots(&[1.0, 2.0, 0.0]),
            Err(Error::DegenerateLeadingCoefficient { .. })
        ));
        assert!(matches!(
            real_poly_roots(&[-6.0, 11.0, -6.0, 1.0, 0.0, 0.0, 1.0]),
            Err(Error::ComplexRoots { .. })
        ));
    }

    #[test]
    fn companion_path_against_known_roots() {
        // (x - 1)(x - 2)(x + 3)(x - 0.5)(x + 2.5)
        let roots = [-3.0, -2.5, 0.5, 1.0, 2.0];
        let mut c = vec![1.0];
        for r in roots {
            let mut next = vec![0.0; c.len() + 1];
            for (i, a) in c.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= r * a;
            }
            c = next;
        }
        let found = real_poly_roots(&c).unwrap();
        for (a, b) in found.iter().zip(roots) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn exact_path_handles_multiplicity() {
        // (x^2 - 2)^3 (x + 1)^2 x
        let f = &(&p(&[-2, 0, 1]).pow(3) * &p(&[1, 1]).pow(2)) * &p(&[0, 1]);
        let r = real_roots_exact(&f).unwrap();
        let s2 = 2f64.sqrt();
        let want = [-s2, -s2, -s2, -1.0, -1.0, 0.0, s2, s2, s2];
        assert_eq!(r.len(), want.len());
        for (a, b) in r.iter().zip(want) {
            assert!((a - b).abs() < 1e-14, "{a} vs {b}");
        }
    }
}
