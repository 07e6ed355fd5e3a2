//! The `P_n(t)` family, the operator carrying `P_{n-1}` to `P_n`, and the
//! real-rootedness scan over the even/odd generating polynomials.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::{count_real_roots, RatPolynomial, RootCount};
use crate::checks::is_log_concave_ratio;
use crate::report::SyncReport;
use crate::tables::Tables;
use crate::{binomial_row, Error, ExactInt, ExactRatio, Result};

fn int(v: usize) -> ExactRatio {
    ExactRatio::from_integer(ExactInt::from(v))
}

/// `P_n(t) = Σ_k A(n,k) / C(n-1,k) · t^k`.
pub fn build_pn(tables: &Tables, n: usize) -> Result<RatPolynomial> {
    if n < 2 {
        return Err(Error::Precondition(format!("P_n defined for n >= 2, got {n}")));
    }
    let a = tables.eulerian(n)?;
    let w = binomial_row(n - 1);
    Ok(RatPolynomial::new(
        a.iter()
            .zip(w)
            .map(|(a, w)| ExactRatio::new(a.clone(), w))
            .collect(),
    ))
}

/// `T_n f = (1+t)/(n-1) · ((n-1) f + (n-3) t f' - t^2 f'')`.
pub fn apply_tn(n: usize, f: &RatPolynomial) -> Result<RatPolynomial> {
    if n < 2 {
        return Err(Error::Precondition(format!("T_n defined for n >= 2, got {n}")));
    }
    let d1 = f.derivative();
    let d2 = d1.derivative();
    // (n - 3) may be negative at n = 2
    let lin = ExactRatio::from_integer(ExactInt::from(n as i64 - 3));
    let inner = &(&f.scale(&int(n - 1)) + &d1.shift(1).scale(&lin)) - &d2.shift(2);
    let one_plus_t = RatPolynomial::from_ints([1, 1]);
    Ok((&one_plus_t * &inner).scale(&ExactRatio::new(1.into(), (n - 1).into())))
}

/// `n f(x) - x f'(x)`; with `n = deg f` this is the reversal of the
/// derivative of the reversed polynomial.
pub fn reciprocal_derivative(f: &RatPolynomial, n: usize) -> Result<RatPolynomial> {
    if f.is_zero() {
        return Err(Error::Domain("reciprocal derivative of the zero polynomial".into()));
    }
    Ok(&f.scale(&int(n)) - &f.derivative().shift(1))
}

/// For `f = Σ C(d,k) a_k t^k` of degree `d`, checks that `(a_k)` is
/// log-concave. Only meaningful when `f` is real-rooted, which is checked
/// first.
pub fn newton_from_roots(f: &RatPolynomial) -> Result<SyncReport> {
    let roots = count_real_roots(f)?;
    if !roots.is_real_rooted {
        return Err(Error::Precondition(format!(
            "polynomial {f} is not real-rooted ({} of {} roots real)",
            roots.real_with_multiplicity, roots.degree
        )));
    }
    let d = roots.degree;
    let w = binomial_row(d);
    let normalized: Vec<ExactRatio> = f
        .coeffs()
        .iter()
        .zip(w)
        .map(|(c, w)| c / ExactRatio::from_integer(w))
        .collect();
    let mut report = is_log_concave_ratio(&normalized);
    report.check = "newton".into();
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConjectureFamily {
    /// `Σ B(n,k) t^k`, scanned from `n = 2`.
    EvenDes,
    /// `Σ C(n,k) t^k`, scanned from `n = 2`.
    OddDes,
    /// `Σ P(n,k) t^k`, scanned from `n = 5`.
    EvenExc,
    /// `Σ Q(n,k) t^k`, scanned from `n = 5`.
    OddExc,
}

impl ConjectureFamily {
    pub const ALL: [ConjectureFamily; 4] = [
        ConjectureFamily::EvenDes,
        ConjectureFamily::OddDes,
        ConjectureFamily::EvenExc,
        ConjectureFamily::OddExc,
    ];

    pub fn first_n(self) -> usize {
        match self {
            ConjectureFamily::EvenDes | ConjectureFamily::OddDes => 2,
            ConjectureFamily::EvenExc | ConjectureFamily::OddExc => 5,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            ConjectureFamily::EvenDes => "bdes",
            ConjectureFamily::OddDes => "cdes",
            ConjectureFamily::EvenExc => "pexc",
            ConjectureFamily::OddExc => "qexc",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanEntry {
    pub family: ConjectureFamily,
    pub n: usize,
    pub poly: RatPolynomial,
    pub roots: RootCount,
}

impl ScanEntry {
    pub fn is_counterexample(&self) -> bool {
        !self.roots.is_real_rooted
    }
}

/// Root counts of the four generating polynomials for every `n <= n_max`
/// from each family's starting point. Ordered by family, then `n`. Reports
/// only.
pub fn scan_conjectures(tables: &Tables, n_max: usize) -> Result<Vec<ScanEntry>> {
    let jobs: Vec<(ConjectureFamily, usize)> = ConjectureFamily::ALL
        .iter()
        .flat_map(|&f| (f.first_n()..=n_max).map(move |n| (f, n)))
        .collect();
    jobs.into_par_iter()
        .map(|(family, n)| {
            let row = match family {
                ConjectureFamily::EvenDes => tables.parity_descent(n)?.0,
                ConjectureFamily::OddDes => tables.parity_descent(n)?.1,
                ConjectureFamily::EvenExc => tables.parity_excedance(n)?.0,
                ConjectureFamily::OddExc => tables.parity_excedance(n)?.1,
            };
            let poly = RatPolynomial::from_ints(row);
            if poly.coeffs().iter().all(Zero::is_zero) {
                return Err(Error::Consistency(format!("{} row {n} is zero", family.tag())));
            }
            let roots = count_real_roots(&poly)?;
            Ok(ScanEntry {
                family,
                n,
                poly,
                roots,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRatio {
        ExactRatio::new(n.into(), d.into())
    }

    #[test]
    fn small_pn() {
        let t = Tables::build(10).unwrap();
        assert_eq!(build_pn(&t, 3).unwrap(), RatPolynomial::from_ints([1, 2, 1]));
        assert_eq!(build_pn(&t, 2).unwrap(), RatPolynomial::from_ints([1, 1]));
        assert_eq!(
            build_pn(&t, 4).unwrap(),
            RatPolynomial::new(vec![q(1, 1), q(11, 3), q(11, 3), q(1, 1)])
        );
        assert!(build_pn(&t, 1).is_err());
    }

    #[test]
    fn tn_identity() {
        let t = Tables::build(12).unwrap();
        for n in 3..=12 {
            let prev = build_pn(&t, n - 1).unwrap();
            assert_eq!(apply_tn(n, &prev).unwrap(), build_pn(&t, n).unwrap(), "n={n}");
        }
        let one = RatPolynomial::from_ints([1]);
        assert_eq!(apply_tn(2, &one).unwrap(), RatPolynomial::from_ints([1, 1]));
        assert!(apply_tn(1, &one).is_err());
    }

    #[test]
    fn reciprocal_derivative_examples() {
        let sq = RatPolynomial::from_ints([1, 2, 1]);
        assert_eq!(reciprocal_derivative(&sq, 2).unwrap(), RatPolynomial::from_ints([2, 2]));
        let x = RatPolynomial::from_ints([0, 1]);
        assert!(reciprocal_derivative(&x, 1).unwrap().is_zero());
        let f = RatPolynomial::from_ints([-1, 0, 1]);
        assert_eq!(reciprocal_derivative(&f, 2).unwrap(), RatPolynomial::from_ints([-2]));
        assert!(reciprocal_derivative(&RatPolynomial::zero(), 0).is_err());
    }

    #[test]
    fn p4_real_rooted() {
        let t = Tables::build(4).unwrap();
        let p4 = build_pn(&t, 4).unwrap();
        let r = count_real_roots(&p4).unwrap();
        assert_eq!((r.degree, r.real_with_multiplicity, r.is_real_rooted), (3, 3, true));
        // P_4 = (t + 1)(3t^2 + 8t + 3) / 3
        let f = &RatPolynomial::from_ints([1, 1]) * &RatPolynomial::from_ints([3, 8, 3]);
        assert_eq!(f.scale(&q(1, 3)), p4);
    }

    #[test]
    fn newton_examples() {
        let binom = RatPolynomial::from_ints([1, 1]).pow(6);
        let r = newton_from_roots(&binom).unwrap();
        assert!(r.passed() && r.comparisons.iter().all(|c| c.lhs == c.rhs));

        let t = Tables::build(6).unwrap();
        assert!(newton_from_roots(&build_pn(&t, 6).unwrap()).unwrap().passed());
        let a6 = RatPolynomial::from_ints(t.eulerian(6).unwrap().to_vec());
        assert!(newton_from_roots(&a6).unwrap().passed());

        let not_rr = RatPolynomial::from_ints([1, 0, 1]);
        assert!(matches!(newton_from_roots(&not_rr), Err(Error::Precondition(_))));
    }

    #[test]
    fn scan_small() {
        let t = Tables::build(6).unwrap();
        let scan = scan_conjectures(&t, 6).unwrap();
        assert_eq!(scan.len(), 5 + 5 + 2 + 2);
        let b2 = scan.iter().find(|e| e.family == ConjectureFamily::EvenDes && e.n == 2).unwrap();
        assert_eq!(b2.poly, RatPolynomial::from_ints([1]));
        assert_eq!(b2.roots.degree, 0);
        assert!(b2.roots.is_real_rooted);
        let c3 = scan.iter().find(|e| e.family == ConjectureFamily::OddDes && e.n == 3).unwrap();
        assert_eq!(c3.poly, RatPolynomial::from_ints([0, 2, 1]));
        assert!(c3.roots.is_real_rooted);
    }
}
