//! Dense univariate polynomials over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer polynomial, coefficients low to high. The zero polynomial has
/// no coefficients; otherwise the last coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> IntPoly {
        IntPoly::new(vec![c.into()])
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(1)
    }

    /// `x - root`
    pub fn linear_root(root: impl Into<BigInt>) -> IntPoly {
        IntPoly::new(vec![-root.into(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides every coefficient by `k`; panics unless `k` divides all of them.
    pub fn div_scalar(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(k);
                    assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Content removed and sign fixed so the leading coefficient is positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// `p(x + a)` by repeated synthetic division (Taylor shift).
    pub fn shift(&self, a: &BigInt) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        IntPoly::new(c)
    }

    /// Exact quotient over the integers, `None` if `divisor` does not divide
    /// `self` in `Z[x]`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let ds = self.degree()?;
        if ds < dd {
            return None;
        }
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); ds - dd + 1];
        for k in (0..=ds - dd).rev() {
            let (q, r) = rem[k + dd].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPoly::new(quot))
    }

    /// Pseudo-remainder of `self` by `divisor`: the remainder of
    /// `lc(divisor)^(deg self - deg divisor + 1) * self`.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("pseudo_rem by zero polynomial");
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let t = rem[top].clone();
            for c in rem.iter_mut() {
                *c *= lead;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[top - dd + i] -= &t * d;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        IntPoly::new(rem)
    }

    /// Greatest common divisor over `Q[x]`, returned as a primitive integer
    /// polynomial with positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Square-free factors `(factor, multiplicity)` of the primitive part,
    /// with `p = c * prod factor^multiplicity` (Yun's algorithm).
    pub fn square_free(&self) -> Vec<(IntPoly, usize)> {
        let mut out = Vec::new();
        let p = self.primitive_part();
        if p.degree().unwrap_or(0) == 0 {
            return out;
        }
        let dp = p.derivative();
        let a = p.gcd(&dp);
        let mut b = p.div_exact(&a).expect("gcd divides");
        let mut c = dp.div_exact(&a).expect("gcd divides derivative");
        let mut mult = 1;
        loop {
            let d = &c - &b.derivative();
            if d.is_zero() {
                out.push((b, mult));
                break;
            }
            let g = b.gcd(&d);
            if g.degree() > Some(0) {
                out.push((g.clone(), mult));
            }
            b = b.div_exact(&g).expect("gcd divides");
            c = d.div_exact(&g).expect("gcd divides");
            mult += 1;
            if b.degree() == Some(0) {
                break;
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> IntPoly {
        (0..k).fold(IntPoly::one(), |acc, _| &acc * self)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert_eq!(format!("{}", p(&[4, 3])), "3x + 4");
        assert_eq!(format!("{}", p(&[0, -2, 0, 1])), "x^3 - 2x");
        assert_eq!(format!("{}", p(&[-1])), "-1");
    }

    #[test]
    fn gcd_and_division() {
        let f = p(&[0, -2, 0, 1]); // x^3 - 2x
        let g = p(&[0, 4, 3]); // 3x^2 + 4x
        assert_eq!(f.gcd(&g), p(&[0, 1]));
        assert_eq!(f.div_exact(&p(&[0, 1])), Some(p(&[-2, 0, 1])));
        assert_eq!(f.div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[2, 2]).gcd(&p(&[-1, 0, 1])), p(&[1, 1]));
        assert_eq!(p(&[6, 4]).primitive_part(), p(&[3, 2]));
        assert_eq!(p(&[6, -4]).primitive_part(), p(&[-3, 2]));
    }

    #[test]
    fn shift_matches_composition() {
        let f = p(&[3, -1, 0, 2]);
        let a = BigInt::from(-3);
        let shifted = f.shift(&a);
        for x in -5..5 {
            let bx = BigInt::from(x);
            assert_eq!(shifted.eval(&bx), f.eval(&(&bx + &a)));
        }
    }

    #[test]
    fn square_free_decomposition() {
        // (x-3)(x+1)^3
        let f = &p(&[-3, 1]) * &p(&[1, 1]).pow(3);
        let sf = f.square_free();
        assert_eq!(sf, vec![(p(&[-3, 1]), 1), (p(&[1, 1]), 3)]);
        let g = &p(&[-2, 0, 1]).pow(2) * &p(&[0, 1]);
        let recon = g
            .square_free()
            .iter()
            .fold(IntPoly::one(), |acc, (f, m)| &acc * &f.pow(*m));
        assert_eq!(recon, g);
    }
}
