//! Integer triangles: Eulerian numbers `A(n,k)`, signed Eulerian numbers
//! `D(n,k)`, even/odd descent counts `B`/`C` and even/odd excedance counts
//! `P`/`Q`.
//!
//! Only `A` and `D` are built by recurrence. `B`, `C`, `P` and `Q` are derived:
//!
//! ```text
//! B = (A + D) / 2            C = (A - D) / 2
//! P = (A + (-1)^k C(n-1,k)) / 2
//! Q = (A - (-1)^k C(n-1,k)) / 2
//! ```
//!
//! where the excedance split relies on descents and excedances being
//! equidistributed over `S_n`. Every halving is checked for exactness.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{binomial, binomial_row, Error, ExactInt, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Eulerian,
    #[serde(rename = "signed")]
    SignedEulerian,
    #[serde(rename = "bdes")]
    EvenDes,
    #[serde(rename = "cdes")]
    OddDes,
    #[serde(rename = "pexc")]
    EvenExc,
    #[serde(rename = "qexc")]
    OddExc,
    Binomial,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Eulerian,
        Family::SignedEulerian,
        Family::EvenDes,
        Family::OddDes,
        Family::EvenExc,
        Family::OddExc,
        Family::Binomial,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Eulerian => "eulerian",
            Family::SignedEulerian => "signed",
            Family::EvenDes => "bdes",
            Family::OddDes => "cdes",
            Family::EvenExc => "pexc",
            Family::OddExc => "qexc",
            Family::Binomial => "binomial",
        }
    }

    /// Single-letter name used in witness strings.
    pub fn letter(self) -> &'static str {
        match self {
            Family::Eulerian => "A",
            Family::SignedEulerian => "D",
            Family::EvenDes => "B",
            Family::OddDes => "C",
            Family::EvenExc => "P",
            Family::OddExc => "Q",
            Family::Binomial => "binom",
        }
    }

    /// Length of row `n`.
    pub fn row_len(self, n: usize) -> usize {
        match self {
            Family::Binomial => n + 1,
            _ => n,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "eulerian" | "a" => Family::Eulerian,
            "signed" | "signed-eulerian" | "d" => Family::SignedEulerian,
            "bdes" | "even-des" | "b" => Family::EvenDes,
            "cdes" | "odd-des" | "c" => Family::OddDes,
            "pexc" | "even-exc" | "p" => Family::EvenExc,
            "qexc" | "odd-exc" | "q" => Family::OddExc,
            "binomial" | "binom" => Family::Binomial,
            other => return Err(Error::Domain(format!("unknown family {other:?}"))),
        })
    }
}

/// Rows `n_min..=n_max` of one family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable {
    pub family: Family,
    pub n_min: usize,
    pub rows: Vec<Vec<ExactInt>>,
}

impl TriangleTable {
    pub fn row(&self, n: usize) -> Option<&[ExactInt]> {
        n.checked_sub(self.n_min)
            .and_then(|i| self.rows.get(i))
            .map(Vec::as_slice)
    }

    pub fn n_max(&self) -> usize {
        self.n_min + self.rows.len() - 1
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[ExactInt])> {
        self.rows
            .iter()
            .enumerate()
            .map(move |(i, r)| (self.n_min + i, r.as_slice()))
    }
}

/// The four rows `B`, `C`, `P`, `Q` at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityRows {
    pub n: usize,
    pub even_des: Vec<ExactInt>,
    pub odd_des: Vec<ExactInt>,
    pub even_exc: Vec<ExactInt>,
    pub odd_exc: Vec<ExactInt>,
}

impl ParityRows {
    pub fn families() -> [Family; 4] {
        [Family::EvenDes, Family::OddDes, Family::EvenExc, Family::OddExc]
    }

    pub fn as_slices(&self) -> [&[ExactInt]; 4] {
        [&self.even_des, &self.odd_des, &self.even_exc, &self.odd_exc]
    }
}

/// Memoized `A` and `D` rows for `1..=n_max`. Immutable once built, so a
/// shared reference can be handed to any number of readers.
#[derive(Debug, Clone, Default)]
pub struct Tables {
    eulerian: Vec<Vec<ExactInt>>,
    signed: Vec<Vec<ExactInt>>,
}

#[inline]
fn at(row: &[ExactInt], k: isize) -> ExactInt {
    if k < 0 {
        return ExactInt::zero();
    }
    row.get(k as usize).cloned().unwrap_or_default()
}

fn next_eulerian(prev: &[ExactInt], n: usize) -> Vec<ExactInt> {
    (0..n)
        .map(|k| {
            let k_i = k as isize;
            at(prev, k_i) * (k + 1) + at(prev, k_i - 1) * (n - k)
        })
        .collect()
}

fn next_signed(prev: &[ExactInt], n: usize) -> Vec<ExactInt> {
    (0..n)
        .map(|k| {
            let k_i = k as isize;
            if n % 2 == 1 {
                at(prev, k_i - 1) * (n - k) + at(prev, k_i) * (k + 1)
            } else {
                at(prev, k_i) - at(prev, k_i - 1)
            }
        })
        .collect()
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Domain("empty permutation set not modeled".into()))
    } else {
        Ok(())
    }
}

fn halve(value: ExactInt, what: impl FnOnce() -> String) -> Result<ExactInt> {
    let (q, r) = value.div_rem(&ExactInt::from(2));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Consistency(format!("parity mismatch in {}", what())))
    }
}

impl Tables {
    /// Rows `1..=n_max`.
    pub fn build(n_max: usize) -> Result<Self> {
        check_n(n_max)?;
        let mut tables = Tables::default();
        tables.extend_to(n_max);
        Ok(tables)
    }

    /// Seed from previously stored rows. Row `i` of each input must be row
    /// `n = i + 1`.
    pub fn from_rows(eulerian: Vec<Vec<ExactInt>>, signed: Vec<Vec<ExactInt>>) -> Result<Self> {
        if eulerian.len() != signed.len() {
            return Err(Error::Shape(vec![eulerian.len(), signed.len()]));
        }
        for (i, (a, d)) in eulerian.iter().zip(&signed).enumerate() {
            if a.len() != i + 1 || d.len() != i + 1 {
                return Err(Error::Shape(vec![i + 1, a.len(), d.len()]));
            }
        }
        Ok(Tables { eulerian, signed })
    }

    pub fn extend_to(&mut self, n_max: usize) {
        if self.eulerian.is_empty() && n_max >= 1 {
            self.eulerian.push(vec![ExactInt::from(1)]);
            self.signed.push(vec![ExactInt::from(1)]);
        }
        while self.eulerian.len() < n_max {
            let n = self.eulerian.len() + 1;
            let a = next_eulerian(&self.eulerian[n - 2], n);
            let d = next_signed(&self.signed[n - 2], n);
            self.eulerian.push(a);
            self.signed.push(d);
        }
    }

    pub fn n_max(&self) -> usize {
        self.eulerian.len()
    }

    fn check_available(&self, n: usize) -> Result<()> {
        check_n(n)?;
        if n > self.n_max() {
            return Err(Error::Domain(format!(
                "row n = {n} not built (tables cover n <= {})",
                self.n_max()
            )));
        }
        Ok(())
    }

    pub fn eulerian(&self, n: usize) -> Result<&[ExactInt]> {
        self.check_available(n)?;
        Ok(&self.eulerian[n - 1])
    }

    pub fn signed(&self, n: usize) -> Result<&[ExactInt]> {
        self.check_available(n)?;
        Ok(&self.signed[n - 1])
    }

    /// `(B, C)` at `n`.
    pub fn parity_descent(&self, n: usize) -> Result<(Vec<ExactInt>, Vec<ExactInt>)> {
        let a = self.eulerian(n)?;
        let d = self.signed(n)?;
        let mut even = Vec::with_capacity(n);
        let mut odd = Vec::with_capacity(n);
        for (k, (a, d)) in a.iter().zip(d).enumerate() {
            even.push(halve(a + d, || format!("B({n},{k})"))?);
            odd.push(halve(a - d, || format!("C({n},{k})"))?);
        }
        Ok((even, odd))
    }

    /// `(P, Q)` at `n`.
    pub fn parity_excedance(&self, n: usize) -> Result<(Vec<ExactInt>, Vec<ExactInt>)> {
        let a = self.eulerian(n)?;
        let binom = binomial_row(n - 1);
        let mut even = Vec::with_capacity(n);
        let mut odd = Vec::with_capacity(n);
        for (k, (a, c)) in a.iter().zip(binom).enumerate() {
            let signed = if k % 2 == 0 { c } else { -c };
            even.push(halve(a + &signed, || format!("P({n},{k})"))?);
            odd.push(halve(a - &signed, || format!("Q({n},{k})"))?);
        }
        Ok((even, odd))
    }

    pub fn parity_rows(&self, n: usize) -> Result<ParityRows> {
        let (even_des, odd_des) = self.parity_descent(n)?;
        let (even_exc, odd_exc) = self.parity_excedance(n)?;
        Ok(ParityRows {
            n,
            even_des,
            odd_des,
            even_exc,
            odd_exc,
        })
    }

    pub fn row(&self, family: Family, n: usize) -> Result<Vec<ExactInt>> {
        match family {
            Family::Eulerian => self.eulerian(n).map(<[_]>::to_vec),
            Family::SignedEulerian => self.signed(n).map(<[_]>::to_vec),
            Family::EvenDes => self.parity_descent(n).map(|r| r.0),
            Family::OddDes => self.parity_descent(n).map(|r| r.1),
            Family::EvenExc => self.parity_excedance(n).map(|r| r.0),
            Family::OddExc => self.parity_excedance(n).map(|r| r.1),
            Family::Binomial => {
                check_n(n)?;
                Ok(binomial_row(n))
            }
        }
    }

    pub fn triangle(&self, family: Family, n_min: usize, n_max: usize) -> Result<TriangleTable> {
        check_n(n_min)?;
        if n_min > n_max {
            return Err(Error::Domain(format!("empty range {n_min}..={n_max}")));
        }
        let rows = (n_min..=n_max)
            .map(|n| self.row(family, n))
            .collect::<Result<_>>()?;
        Ok(TriangleTable {
            family,
            n_min,
            rows,
        })
    }

    /// `d1(n,k) = |B(n,k) - C(n,k)| = |D(n,k)|`.
    pub fn descent_diff(&self, n: usize, k: usize) -> Result<ExactInt> {
        let d = self.signed(n)?;
        d.get(k).map(|v| v.abs()).ok_or(Error::Index { n, k })
    }

    /// `d2(n,k) = |P(n,k) - Q(n,k)| = C(n-1,k)`.
    pub fn exc_diff(&self, n: usize, k: usize) -> Result<ExactInt> {
        check_n(n)?;
        if k >= n {
            return Err(Error::Index { n, k });
        }
        Ok(binomial(n - 1, k))
    }
}

pub fn eulerian_row(n: usize) -> Result<Vec<ExactInt>> {
    Ok(Tables::build(n)?.eulerian[n - 1].clone())
}

pub fn signed_eulerian_row(n: usize) -> Result<Vec<ExactInt>> {
    Ok(Tables::build(n)?.signed[n - 1].clone())
}

pub fn parity_descent_rows(n: usize) -> Result<(Vec<ExactInt>, Vec<ExactInt>)> {
    Tables::build(n)?.parity_descent(n)
}

pub fn parity_excedance_rows(n: usize) -> Result<(Vec<ExactInt>, Vec<ExactInt>)> {
    Tables::build(n)?.parity_excedance(n)
}

/// `A(n,1) = 2^n - n - 1` and `A(n,2) = 3^n - 2^n (n+1) + n(n+1)/2`.
pub fn eulerian_closed_form(n: usize, k: usize) -> Result<ExactInt> {
    check_n(n)?;
    if k != 1 && k != 2 {
        return Err(Error::UnsupportedClosedForm { k });
    }
    if k + 1 > n {
        return Err(Error::Index { n, k });
    }
    let n_big = ExactInt::from(n);
    let pow2 = ExactInt::from(1) << n;
    Ok(match k {
        1 => pow2 - &n_big - 1,
        _ => {
            let pow3 = num_traits::pow(ExactInt::from(3), n);
            pow3 - pow2 * (&n_big + 1) + ExactInt::from(n * (n + 1) / 2)
        }
    })
}

/// Closed form for `d1(n,1)`: `A(m+1,1) - m` when `n = 2m+1` and
/// `A(m,1) - m` when `n = 2m`. Matches `|D(n,1)|` from `n = 5` on.
pub fn boundary_diff_formula(n: usize) -> Result<ExactInt> {
    if n < 4 {
        return Err(Error::Precondition(format!(
            "boundary formula for d1(n,1) needs n >= 4, got {n}"
        )));
    }
    let m = n / 2;
    let base = if n % 2 == 1 { m + 1 } else { m };
    Ok(eulerian_closed_form(base, 1).unwrap_or_default() - ExactInt::from(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<ExactInt> {
        v.iter().copied().map(ExactInt::from).collect()
    }

    #[test]
    fn eulerian_small_rows() {
        assert_eq!(eulerian_row(1).unwrap(), ints(&[1]));
        assert_eq!(eulerian_row(3).unwrap(), ints(&[1, 4, 1]));
        assert_eq!(eulerian_row(4).unwrap(), ints(&[1, 11, 11, 1]));
        assert_eq!(eulerian_row(5).unwrap(), ints(&[1, 26, 66, 26, 1]));
    }

    #[test]
    fn empty_permutation_set_rejected() {
        assert!(matches!(eulerian_row(0), Err(Error::Domain(_))));
        assert!(matches!(signed_eulerian_row(0), Err(Error::Domain(_))));
        assert!(Tables::build(0).is_err());
    }

    #[test]
    fn signed_small_rows() {
        assert_eq!(signed_eulerian_row(1).unwrap(), ints(&[1]));
        assert_eq!(signed_eulerian_row(2).unwrap(), ints(&[1, -1]));
        assert_eq!(signed_eulerian_row(3).unwrap(), ints(&[1, 0, -1]));
    }

    #[test]
    fn parity_rows_small() {
        assert_eq!(
            parity_descent_rows(3).unwrap(),
            (ints(&[1, 2, 0]), ints(&[0, 2, 1]))
        );
        assert_eq!(parity_descent_rows(1).unwrap(), (ints(&[1]), ints(&[0])));
        let (b, c) = parity_descent_rows(4).unwrap();
        assert_eq!(b.iter().sum::<ExactInt>(), ExactInt::from(12));
        assert_eq!(c.iter().sum::<ExactInt>(), ExactInt::from(12));

        assert_eq!(
            parity_excedance_rows(3).unwrap(),
            (ints(&[1, 1, 1]), ints(&[0, 3, 0]))
        );
        assert_eq!(parity_excedance_rows(1).unwrap(), (ints(&[1]), ints(&[0])));
        let (p, q) = parity_excedance_rows(5).unwrap();
        assert_eq!(&p[2] - &q[2], ExactInt::from(6));
    }

    #[test]
    fn parity_mismatch_is_reported() {
        let tables = Tables::from_rows(
            vec![vec![ExactInt::from(1)], ints(&[1, 2])],
            vec![vec![ExactInt::from(1)], ints(&[1, -1])],
        )
        .unwrap();
        assert!(matches!(
            tables.parity_descent(2),
            Err(Error::Consistency(_))
        ));
        assert!(matches!(
            tables.parity_excedance(2),
            Err(Error::Consistency(_))
        ));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(eulerian_closed_form(4, 1).unwrap(), ExactInt::from(11));
        assert_eq!(eulerian_closed_form(2, 1).unwrap(), ExactInt::from(1));
        assert_eq!(eulerian_closed_form(5, 2).unwrap(), ExactInt::from(66));
        assert!(matches!(
            eulerian_closed_form(5, 3),
            Err(Error::UnsupportedClosedForm { k: 3 })
        ));
        assert!(matches!(
            eulerian_closed_form(2, 2),
            Err(Error::Index { .. })
        ));
        let tables = Tables::build(80).unwrap();
        for n in 2..=80 {
            let row = tables.eulerian(n).unwrap();
            assert_eq!(eulerian_closed_form(n, 1).unwrap(), row[1]);
            if n >= 3 {
                assert_eq!(eulerian_closed_form(n, 2).unwrap(), row[2]);
            }
        }
    }

    #[test]
    fn diffs() {
        let t = Tables::build(10).unwrap();
        assert_eq!(t.exc_diff(5, 2).unwrap(), ExactInt::from(6));
        assert_eq!(t.descent_diff(6, 1).unwrap(), ExactInt::from(1));
        assert_eq!(t.descent_diff(3, 1).unwrap(), ExactInt::from(0));
        assert!(matches!(t.descent_diff(3, 3), Err(Error::Index { n: 3, k: 3 })));
        assert!(matches!(t.exc_diff(3, 3), Err(Error::Index { n: 3, k: 3 })));
    }

    #[test]
    fn boundary_formula() {
        assert_eq!(boundary_diff_formula(6).unwrap(), ExactInt::from(1));
        assert_eq!(boundary_diff_formula(9).unwrap(), ExactInt::from(22));
        assert_eq!(boundary_diff_formula(8).unwrap(), ExactInt::from(7));
        assert!(boundary_diff_formula(3).is_err());
        let t = Tables::build(70).unwrap();
        for n in 8..=70 {
            assert_eq!(boundary_diff_formula(n).unwrap(), t.descent_diff(n, 1).unwrap(), "n={n}");
        }
        // n = 4 sits outside the formula's range
        assert_ne!(boundary_diff_formula(4).unwrap(), t.descent_diff(4, 1).unwrap());
    }

    #[test]
    fn row_invariants() {
        let t = Tables::build(40).unwrap();
        let mut fact = ExactInt::from(1);
        for n in 1..=40 {
            fact *= n;
            let a = t.eulerian(n).unwrap();
            assert_eq!(a.iter().sum::<ExactInt>(), fact);
            assert!(a.iter().eq(a.iter().rev()), "palindromic row {n}");
            let p = t.parity_rows(n).unwrap();
            for fam in p.as_slices() {
                assert!(fam.iter().all(|v| !v.is_negative()));
            }
            let d = t.signed(n).unwrap();
            for k in 0..n {
                assert_eq!(&p.even_des[k] + &p.odd_des[k], a[k]);
                assert_eq!(&p.even_exc[k] + &p.odd_exc[k], a[k]);
                assert_eq!(&p.even_des[k] - &p.odd_des[k], d[k]);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                assert_eq!(&p.even_exc[k] - &p.odd_exc[k], binomial(n - 1, k) * sign);
            }
            if n >= 2 {
                let half = &fact / 2;
                assert_eq!(p.even_des.iter().sum::<ExactInt>(), half);
                assert_eq!(p.odd_des.iter().sum::<ExactInt>(), half);
            }
        }
    }

    #[test]
    fn large_rows_do_not_overflow() {
        let t = Tables::build(100).unwrap();
        let mid = &t.eulerian(100).unwrap()[50];
        assert!(mid.to_string().len() > 150);
    }

    #[test]
    fn triangle_and_family_tags() {
        let t = Tables::build(6).unwrap();
        let tri = t.triangle(Family::EvenExc, 2, 5).unwrap();
        assert_eq!(tri.n_max(), 5);
        assert_eq!(tri.row(3).unwrap(), ints(&[1, 1, 1]).as_slice());
        assert!(tri.row(1).is_none());
        assert_eq!(t.row(Family::Binomial, 3).unwrap(), ints(&[1, 3, 3, 1]));
        for f in Family::ALL {
            assert_eq!(f.tag().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }
}
