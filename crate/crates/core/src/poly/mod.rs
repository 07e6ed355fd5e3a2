//! Dense univariate polynomials over `Q` and real-root counting.

mod family;
mod int;
mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::{ExactInt, ExactRatio};

pub use family::{
    apply_tn, build_pn, newton_from_roots, reciprocal_derivative, scan_conjectures, ConjectureFamily,
    ScanEntry,
};
pub use sturm::{count_real_roots, squarefree_decomposition, RootCount};

/// Coefficients lowest degree first, never with a trailing zero. The zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPolynomial {
    coeffs: Vec<ExactRatio>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<ExactRatio>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn from_ints<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<ExactInt>,
    {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| ExactRatio::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactRatio) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`.
    pub fn linear_root(root: ExactRatio) -> Self {
        Self::new(vec![-root, ExactRatio::one()])
    }

    pub fn coeffs(&self) -> &[ExactRatio] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> ExactRatio {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactRatio::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&ExactRatio> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * ExactRatio::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn scale(&self, by: &ExactRatio) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * by).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ExactRatio::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RatPolynomial { coeffs }
    }

    pub fn eval(&self, x: &ExactRatio) -> ExactRatio {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRatio::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(ExactRatio::one()), |acc, _| &acc * self)
    }

    /// Coefficients as integers over a common positive denominator.
    pub fn to_integer_parts(&self) -> (Vec<ExactInt>, ExactInt) {
        let den = self
            .coeffs
            .iter()
            .fold(ExactInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let nums = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (nums, den)
    }
}

impl fmt::Display for RatPolynomial {
    /// Exact coefficient list, lowest degree first: `[1, 11/3, 11/3, 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;

    fn add(self, rhs: &RatPolynomial) -> RatPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;

    fn sub(self, rhs: &RatPolynomial) -> RatPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &RatPolynomial {
    type Output = RatPolynomial;

    fn neg(self) -> RatPolynomial {
        RatPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPolynomial {
    type Output = RatPolynomial;

    fn mul(self, rhs: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RatPolynomial::zero();
        }
        let mut out = vec![ExactRatio::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPolynomial::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRatio {
        ExactRatio::new(n.into(), d.into())
    }

    #[test]
    fn canonical_form() {
        let p = RatPolynomial::from_ints([1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(RatPolynomial::from_ints([0, 0]).degree(), None);
        assert!(RatPolynomial::from_ints(Vec::<i64>::new()).is_zero());
    }

    #[test]
    fn arithmetic() {
        let x1 = RatPolynomial::from_ints([1, 1]);
        let sq = &x1 * &x1;
        assert_eq!(sq, RatPolynomial::from_ints([1, 2, 1]));
        assert_eq!(x1.pow(3), RatPolynomial::from_ints([1, 3, 3, 1]));
        assert_eq!(sq.derivative(), RatPolynomial::from_ints([2, 2]));
        assert!((&sq - &sq).is_zero());
        assert_eq!(&sq + &(-&x1), RatPolynomial::from_ints([0, 1, 1]));
        assert_eq!(x1.shift(2), RatPolynomial::from_ints([0, 0, 1, 1]));
        assert_eq!(sq.eval(&q(-1, 1)), q(0, 1));
        assert_eq!(sq.eval(&q(1, 2)), q(9, 4));
    }

    #[test]
    fn integer_parts_and_display() {
        let p = RatPolynomial::new(vec![q(1, 1), q(11, 3), q(11, 3), q(1, 1)]);
        let (nums, den) = p.to_integer_parts();
        assert_eq!(den, ExactInt::from(3));
        assert_eq!(nums, vec![3, 11, 11, 3].into_iter().map(ExactInt::from).collect::<Vec<_>>());
        assert_eq!(p.to_string(), "[1, 11/3, 11/3, 1]");
    }
}
