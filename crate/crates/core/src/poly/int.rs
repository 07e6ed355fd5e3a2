//! Primitive integer polynomials: the working representation for remainder
//! sequences. Content is stripped after every step so coefficients stay
//! near the size of the input.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::RatPolynomial;
use crate::{ExactInt, ExactRatio};

/// Lowest degree first, no trailing zeros, gcd of coefficients 1 and
/// positive leading coefficient (unless zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly(pub(crate) Vec<ExactInt>);

impl IntPoly {
    fn trimmed(mut c: Vec<ExactInt>) -> Vec<ExactInt> {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        c
    }

    /// Primitive part with the sign kept: divides by the positive content.
    pub(crate) fn primitive_keep_sign(c: Vec<ExactInt>) -> IntPoly {
        let c = Self::trimmed(c);
        let content = c.iter().fold(ExactInt::zero(), |g, v| g.gcd(v));
        if content.is_zero() || content.is_one() {
            return IntPoly(c);
        }
        IntPoly(c.into_iter().map(|v| v / &content).collect())
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub(crate) fn primitive(c: Vec<ExactInt>) -> IntPoly {
        let mut p = Self::primitive_keep_sign(c);
        if p.0.last().is_some_and(Signed::is_negative) {
            p.0.iter_mut().for_each(|v| *v = -&*v);
        }
        p
    }

    pub(crate) fn from_rat(p: &RatPolynomial) -> IntPoly {
        IntPoly::primitive(p.to_integer_parts().0)
    }

    pub(crate) fn to_rat(&self) -> RatPolynomial {
        RatPolynomial::from_ints(self.0.iter().cloned())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub(crate) fn leading(&self) -> &ExactInt {
        self.0.last().expect("nonzero polynomial")
    }

    pub(crate) fn derivative(&self) -> IntPoly {
        IntPoly::primitive_keep_sign(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k)
                .collect(),
        )
    }

    /// `lc(b)^(deg a - deg b + 1) · a mod b`, computed without fractions.
    pub(crate) fn pseudo_remainder(a: &[ExactInt], b: &[ExactInt]) -> Vec<ExactInt> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let lb = &b[db];
        if r.len() < b.len() {
            return r;
        }
        let steps = r.len() - b.len() + 1;
        for _ in 0..steps {
            if r.is_empty() {
                break;
            }
            let dr = r.len() - 1;
            if r.len() < b.len() {
                // remaining steps only multiply by lb
                r.iter_mut().for_each(|v| *v *= lb);
                continue;
            }
            let lr = r[dr].clone();
            r.iter_mut().for_each(|v| *v *= lb);
            let shift = dr - db;
            for (k, bk) in b.iter().enumerate() {
                r[shift + k] -= &lr * bk;
            }
            r = Self::trimmed(r);
        }
        r
    }

    /// Sign-correct remainder: a positive multiple of the true remainder
    /// `a mod b` with its content removed.
    pub(crate) fn remainder(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let r = Self::pseudo_remainder(&a.0, &b.0);
        let steps = (a.0.len() + 1).saturating_sub(b.0.len()) as u32;
        let flip = b.leading().is_negative() && steps % 2 == 1;
        let mut r = Self::primitive_keep_sign(r);
        if flip {
            r.0.iter_mut().for_each(|v| *v = -&*v);
        }
        r
    }

    /// Monic-up-to-content gcd via the primitive remainder sequence.
    pub(crate) fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (IntPoly::primitive(a.0.clone()), IntPoly::primitive(b.0.clone()));
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = IntPoly::remainder(&a, &b);
            a = b;
            b = IntPoly::primitive(r.0);
        }
        IntPoly::primitive(a.0)
    }

    /// Exact division `a / b`; panics if the remainder is nonzero.
    pub(crate) fn exact_div(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let q = a.to_rat_div(b);
        IntPoly::primitive(q.to_integer_parts().0)
    }

    fn to_rat_div(&self, b: &IntPoly) -> RatPolynomial {
        let mut r: Vec<ExactRatio> = self.0.iter().cloned().map(ExactRatio::from_integer).collect();
        let db = b.degree();
        let lb = ExactRatio::from_integer(b.leading().clone());
        if r.len() < b.0.len() {
            return RatPolynomial::zero();
        }
        let mut q = vec![ExactRatio::zero(); r.len() - db];
        for i in (0..q.len()).rev() {
            let coef = &r[i + db] / &lb;
            for (k, bk) in b.0.iter().enumerate() {
                r[i + k] -= &coef * ExactRatio::from_integer(bk.clone());
            }
            q[i] = coef;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        RatPolynomial::new(q)
    }
}
