use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Reduced quotient of integer polynomials: no common factor of positive
/// degree, joint coefficient content 1, denominator leading coefficient
/// positive. Equal rational functions therefore compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    numerator: IntPoly,
    denominator: IntPoly,
}

impl RationalFn {
    pub fn reduce(num: &IntPoly, den: &IntPoly) -> Result<RationalFn> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFn {
                numerator: IntPoly::zero(),
                denominator: IntPoly::one(),
            });
        }
        let g = num.gcd(den);
        let mut n = num.div_exact(&g).expect("gcd divides numerator");
        let mut d = den.div_exact(&g).expect("gcd divides denominator");
        let mut c = n.content().gcd(&d.content());
        if d.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if !c.is_zero() {
            n = n.div_scalar(&c);
            d = d.div_scalar(&c);
        }
        Ok(RationalFn {
            numerator: n,
            denominator: d,
        })
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.denominator
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.numerator.eval_f64(x) / self.denominator.eval_f64(x)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn reduce_examples() {
        let r = RationalFn::reduce(&p(&[2, 2]), &p(&[-1, 0, 1])).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (&p(&[2]), &p(&[-1, 1])));
        let z = RationalFn::reduce(&IntPoly::zero(), &p(&[0, 1])).unwrap();
        assert_eq!(
            (z.numerator(), z.denominator()),
            (&IntPoly::zero(), &p(&[1]))
        );
        let r = RationalFn::reduce(&p(&[0, 4, 3]), &p(&[0, -2, 0, 1])).unwrap();
        assert_eq!(
            (r.numerator(), r.denominator()),
            (&p(&[4, 3]), &p(&[-2, 0, 1]))
        );
    }

    #[test]
    fn sign_and_content_normalization() {
        let a = RationalFn::reduce(&p(&[-4]), &p(&[2, -2])).unwrap();
        let b = RationalFn::reduce(&p(&[2]), &p(&[-1, 1])).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            RationalFn::reduce(&p(&[1]), &IntPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }
}
