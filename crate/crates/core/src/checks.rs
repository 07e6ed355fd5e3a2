//! Inequality checks over integer sequences and the Eulerian tables.
//!
//! Every comparison is `lhs >= rhs` between exact rationals. Sequences of
//! length `L` are normalized by `C(L-1, k)` and checked at the interior
//! indices `1..=L-2`.

use std::time::Instant;

use num_traits::One;

use crate::report::{Comparison, SyncReport};
use crate::tables::{Family, ParityRows, Tables};
use crate::{binomial, binomial_row, Error, ExactInt, ExactRatio, Result};

fn ratio(v: &ExactInt) -> ExactRatio {
    ExactRatio::from_integer(v.clone())
}

fn frac(num: impl Into<ExactInt>, den: impl Into<ExactInt>) -> ExactRatio {
    ExactRatio::new(num.into(), den.into())
}

/// `ε(i) = ((i+1)/i) · ((n-i)/(n-i-1))`, defined for `1 <= i <= n-2`.
pub fn epsilon(n: usize, i: usize) -> Result<ExactRatio> {
    if i == 0 || i + 2 > n {
        return Err(Error::Domain(format!(
            "epsilon(n = {n}, i = {i}) needs 1 <= i <= n-2"
        )));
    }
    Ok(frac(i + 1, i) * frac(n - i, n - i - 1))
}

/// A sequence with the label used in witness strings.
pub type Labeled<'a> = (&'a str, &'a [ExactInt]);

fn to_ratios(seq: &[ExactInt]) -> Vec<ExactRatio> {
    seq.iter().map(ratio).collect()
}

fn sync_check(name: &str, seqs: &[(&str, Vec<ExactRatio>)], weighted: bool) -> Result<SyncReport> {
    let start = Instant::now();
    let len = seqs.first().map_or(0, |s| s.1.len());
    if seqs.is_empty() || seqs.iter().any(|s| s.1.len() != len) {
        return Err(Error::Shape(seqs.iter().map(|s| s.1.len()).collect()));
    }
    let mut report = SyncReport::new(name, len);
    if len < 3 {
        return Ok(report);
    }
    let weights: Vec<ExactRatio> = if weighted {
        binomial_row(len - 1).into_iter().map(ExactRatio::from_integer).collect()
    } else {
        vec![ExactRatio::one(); len]
    };
    let extreme = |k: usize, pick_max: bool| -> (&str, &ExactRatio) {
        let mut best = (seqs[0].0, &seqs[0].1[k]);
        for s in &seqs[1..] {
            let v = &s.1[k];
            if (pick_max && v > best.1) || (!pick_max && v < best.1) {
                best = (s.0, v);
            }
        }
        best
    };
    for i in 1..len - 1 {
        let (min_label, min) = extreme(i, false);
        let (hi_label, hi) = extreme(i + 1, true);
        let (lo_label, lo) = extreme(i - 1, true);
        let centre = min / &weights[i];
        let lhs = &centre * &centre;
        let rhs = (hi / &weights[i + 1]) * (lo / &weights[i - 1]);
        report.push(Comparison::new(i, lhs, rhs).with_witness(vec![
            format!("min@{i}={min_label}"),
            format!("max@{}={hi_label}", i + 1),
            format!("max@{}={lo_label}", i - 1),
        ]));
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn labeled_ratios<'a>(seqs: &[Labeled<'a>]) -> Vec<(&'a str, Vec<ExactRatio>)> {
    seqs.iter().map(|(l, s)| (*l, to_ratios(s))).collect()
}

/// `a_i^2 >= a_{i+1} a_{i-1}` at every interior index.
pub fn is_log_concave(seq: &[ExactInt]) -> SyncReport {
    is_log_concave_ratio(&to_ratios(seq))
}

pub fn is_log_concave_ratio(seq: &[ExactRatio]) -> SyncReport {
    sync_check("log-concave", &[("a", seq.to_vec())], false)
        .expect("single sequence has no shape error")
}

/// Log-concavity of `a_k / C(L-1, k)`.
pub fn is_ultra_log_concave(seq: &[ExactInt]) -> SyncReport {
    sync_check("ultra-log-concave", &[("a", to_ratios(seq))], true)
        .expect("single sequence has no shape error")
}

/// `min_i^2 / C(L-1,i)^2 >= max_{i+1}/C(L-1,i+1) · max_{i-1}/C(L-1,i-1)`
/// over all sequences.
pub fn ultra_sync_check(seqs: &[Labeled<'_>]) -> Result<SyncReport> {
    sync_check("ultra-sync", &labeled_ratios(seqs), true)
}

/// `min_i^2 >= max_{i+1} · max_{i-1}` over all sequences.
pub fn strong_sync_check(seqs: &[Labeled<'_>]) -> Result<SyncReport> {
    sync_check("strong-sync", &labeled_ratios(seqs), false)
}

/// Ultra-synchronisation of the four rows `B`, `C`, `P`, `Q` at one `n`.
pub fn parity_ultra_sync(rows: &ParityRows) -> Result<SyncReport> {
    let labels = ParityRows::families().map(Family::letter);
    let slices = rows.as_slices();
    let seqs: Vec<Labeled<'_>> = labels.iter().copied().zip(slices).collect();
    let mut report = ultra_sync_check(&seqs)?;
    report.n = rows.n;
    Ok(report)
}

fn need(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        Err(Error::Precondition(format!("{what} needs n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

/// For each `1 <= i <= n-2`, case `eps2`:
/// `A(n,i)^2 >= ε(i)^2 A(n,i-1) A(n,i+1)`, and case `gap`:
/// `A(n,i)^2 - ε(i) A(n,i-1) A(n,i+1) >= ((ε(i)-1)/ε(i)) A(n,i)^2`.
pub fn newton_epsilon_check(tables: &Tables, n: usize) -> Result<SyncReport> {
    need(n, 3, "newton epsilon check")?;
    let start = Instant::now();
    let a = tables.eulerian(n)?;
    let mut report = SyncReport::new("newton-epsilon", n);
    for i in 1..=n - 2 {
        let eps = epsilon(n, i)?;
        let sq = ratio(&(&a[i] * &a[i]));
        let outer = ratio(&(&a[i - 1] * &a[i + 1]));
        report.push(
            Comparison::new(i, sq.clone(), &eps * &eps * &outer).with_case("eps2"),
        );
        let gap = &sq - &eps * &outer;
        let bound = (&eps - ExactRatio::one()) / &eps * &sq;
        report.push(Comparison::new(i, gap, bound).with_case("gap"));
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `A(n,k) >= 18 n · d(n,k)` for `1 <= k <= n-2`, with cases `d1`
/// (`|D(n,k)|`), `d2` (`C(n-1,k)`) and `binom` (`C(n,k)`).
///
/// Evaluated for any `n >= 1`; the bounds are only claimed from `n = 19`
/// (`d1`) and `n = 15` (`d2`, `binom`), so callers decide what to assert.
pub fn lemma_bound_check(tables: &Tables, n: usize) -> Result<SyncReport> {
    let start = Instant::now();
    let a = tables.eulerian(n)?;
    let mut report = SyncReport::new("lemma-bound", n);
    let scale = ExactInt::from(18 * n);
    for (k, a_k) in a.iter().enumerate().take(n.saturating_sub(1)).skip(1) {
        let lhs = ratio(a_k);
        for (case, d) in [
            ("d1", tables.descent_diff(n, k)?),
            ("d2", tables.exc_diff(n, k)?),
            ("binom", binomial(n, k)),
        ] {
            report.push(Comparison::new(k, lhs.clone(), ratio(&(&scale * d))).with_case(case));
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn diff(tables: &Tables, which: usize, n: usize, k: usize) -> Result<ExactInt> {
    match which {
        1 => tables.descent_diff(n, k),
        _ => tables.exc_diff(n, k),
    }
}

/// Sufficient condition for ultra-synchronisation at index `i`, for each
/// `(j1, j2, j3)` in `{1,2}^3`:
///
/// ```text
/// (ε-1)/ε >= 3ε d^(j1)(n,i)/A(n,i) + ε d^(j2)(n,i+1)/A(n,i+1)
///            + 2ε d^(j3)(n,i-1)/A(n,i-1)
/// ```
///
/// A failure here is not a failure of ultra-synchronisation.
pub fn lemma_almost_check(tables: &Tables, n: usize) -> Result<SyncReport> {
    need(n, 3, "sufficient-condition check")?;
    let start = Instant::now();
    let a = tables.eulerian(n)?;
    let mut report = SyncReport::new("lemma-almost", n);
    for i in 1..=n - 2 {
        let eps = epsilon(n, i)?;
        let lhs = (&eps - ExactRatio::one()) / &eps;
        for j1 in 1..=2 {
            for j2 in 1..=2 {
                for j3 in 1..=2 {
                    let t1 = frac(diff(tables, j1, n, i)? * 3, a[i].clone());
                    let t2 = frac(diff(tables, j2, n, i + 1)?, a[i + 1].clone());
                    let t3 = frac(diff(tables, j3, n, i - 1)? * 2, a[i - 1].clone());
                    let rhs = &eps * (t1 + t2 + t3);
                    report.push(
                        Comparison::new(i, lhs.clone(), rhs).with_case(format!("j={j1}{j2}{j3}")),
                    );
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `(A(n,1) - d^(i)(n,1))^2 >= 2ε(1)(A(n,2) + d^(j)(n,2))` for
/// `i, j ∈ {1, 2}`.
pub fn boundary_index_check(tables: &Tables, n: usize) -> Result<SyncReport> {
    need(n, 5, "boundary index check")?;
    let start = Instant::now();
    let a = tables.eulerian(n)?;
    let eps = epsilon(n, 1)?;
    let mut report = SyncReport::new("boundary-index", n);
    for i in 1..=2 {
        for j in 1..=2 {
            let left = &a[1] - diff(tables, i, n, 1)?;
            let lhs = ratio(&(&left * &left));
            let rhs = frac(ExactInt::from(2), 1) * &eps * ratio(&(&a[2] + diff(tables, j, n, 2)?));
            report.push(Comparison::new(1, lhs, rhs).with_case(format!("i={i},j={j}")));
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `2^(4m) / 4 >= 12 (9^m + C(2m, 2))`, the closing estimate for even
/// `n = 2m`.
pub fn even_chain_check(m: usize) -> Comparison {
    let lhs = ExactInt::one() << (4 * m);
    let rhs = (num_traits::pow(ExactInt::from(9), m) + binomial(2 * m, 2)) * 12;
    Comparison::new(m, frac(lhs, 4), ratio(&rhs)).with_case(format!("n'={m}"))
}

/// Smallest `m <= m_max` such that the even chain holds for every
/// `m..=m_max`, or `None` if it fails at `m_max`.
pub fn even_chain_threshold(m_max: usize) -> Option<usize> {
    let mut threshold = None;
    for m in (1..=m_max).rev() {
        if even_chain_check(m).holds {
            threshold = Some(m);
        } else {
            break;
        }
    }
    threshold
}

/// Candidate symmetry `X(n,k) = Y(n,n-1-k)` and whether it holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symmetry {
    pub from: Family,
    pub to: Family,
    pub holds: bool,
}

/// Tests every reflection `k -> n-1-k`, with or without a family swap,
/// between the four parity rows. Reports; asserts nothing.
pub fn symmetry_candidates(rows: &ParityRows) -> Vec<Symmetry> {
    let families = ParityRows::families();
    let slices = rows.as_slices();
    let mut out = Vec::new();
    for (x, xs) in families.iter().zip(slices) {
        for (y, ys) in families.iter().zip(slices) {
            let holds = xs.iter().eq(ys.iter().rev());
            out.push(Symmetry {
                from: *x,
                to: *y,
                holds,
            });
        }
    }
    out
}

/// Log-concavity of `a_k = S(n,k) / C(n-1,k)`, where `S(n,k) = A(n,k) /
/// C(n-1,k)` are the coefficients of `P_n`, expands to
/// `A(n,k)^2 >= ε(k)^2 A(n,k-1) A(n,k+1)`. Checks that the two differences
/// agree exactly (up to the factor `C(n-1,k)^4`) at every interior index.
pub fn normalized_expansion_agrees(tables: &Tables, n: usize) -> Result<bool> {
    let a = tables.eulerian(n)?;
    let w = binomial_row(n - 1);
    let coeff = |j: usize| frac(a[j].clone(), &w[j] * &w[j]);
    for k in 1..n.saturating_sub(1) {
        let normalized = coeff(k) * coeff(k) - coeff(k - 1) * coeff(k + 1);
        let eps = epsilon(n, k)?;
        let expanded = ratio(&(&a[k] * &a[k])) - &eps * &eps * ratio(&(&a[k - 1] * &a[k + 1]));
        let w2 = &w[k] * &w[k];
        if normalized * ratio(&(&w2 * &w2)) != expanded {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<ExactInt> {
        v.iter().copied().map(ExactInt::from).collect()
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon(4, 1).unwrap(), frac(3, 1));
        assert_eq!(epsilon(6, 1).unwrap(), frac(5, 2));
        assert_eq!(epsilon(5, 2).unwrap(), frac(9, 4));
        assert!(epsilon(5, 0).is_err());
        assert!(epsilon(5, 4).is_err());
        assert!(epsilon(5, 5).is_err());
        for n in 3..30 {
            for i in 1..=n - 2 {
                assert!(epsilon(n, i).unwrap() > ExactRatio::one());
            }
        }
    }

    #[test]
    fn log_concavity() {
        assert!(is_log_concave(&ints(&[1, 4, 1])).passed());
        assert!(is_log_concave(&ints(&[1, 1, 1])).passed());
        let r = is_log_concave(&ints(&[1, 0, 1]));
        assert_eq!(r.failing_indices(), vec![1]);
        assert!(is_log_concave(&ints(&[5])).passed());
    }

    #[test]
    fn ultra_log_concavity() {
        let r = is_ultra_log_concave(&ints(&[1, 1, 1]));
        assert_eq!(r.failing_indices(), vec![1]);
        let f = r.failures().next().unwrap();
        assert_eq!((f.lhs.clone(), f.rhs.clone()), (frac(1, 4), frac(1, 1)));
        let r = is_ultra_log_concave(&ints(&[1, 2, 1]));
        assert!(r.passed());
        assert!(r.comparisons.iter().all(|c| c.lhs == c.rhs));
        assert!(is_ultra_log_concave(&ints(&[1, 26, 66, 26, 1])).passed());
    }

    #[test]
    fn ultra_sync_examples() {
        let t = Tables::build(5).unwrap();
        let r = parity_ultra_sync(&t.parity_rows(5).unwrap()).unwrap();
        assert!(r.passed());
        assert_eq!(r.indices_checked(), vec![1, 2, 3]);

        let binom = ints(&[1, 3, 3, 1]);
        let r = ultra_sync_check(&[("x", &binom)]).unwrap();
        assert!(r.passed() && r.comparisons.iter().all(|c| c.lhs == c.rhs));

        let (p, q) = t.parity_excedance(4).unwrap();
        let r = ultra_sync_check(&[("P", &p), ("Q", &q)]).unwrap();
        assert!(!r.passed());

        let short = ints(&[1, 2]);
        assert!(matches!(
            ultra_sync_check(&[("x", &binom), ("y", &short)]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn witnesses_name_the_extremes() {
        let t = Tables::build(3).unwrap();
        let rows = t.parity_rows(3).unwrap();
        let r = parity_ultra_sync(&rows).unwrap();
        let f = r.failures().next().unwrap();
        // min at index 1 is P(3,1) = 1; neighbouring maxima are B(3,0) = 1 and C/Q
        assert_eq!(f.witness[0], "min@1=P");
    }

    #[test]
    fn strong_sync_examples() {
        let t = Tables::build(5).unwrap();
        let (b, c) = t.parity_descent(5).unwrap();
        assert!(strong_sync_check(&[("B", &b), ("C", &c)]).unwrap().passed());
        let k = ints(&[7, 7, 7, 7]);
        let r = strong_sync_check(&[("x", &k), ("y", &k)]).unwrap();
        assert!(r.passed() && r.comparisons.iter().all(|c| c.lhs == c.rhs));
        let r = strong_sync_check(&[("x", &ints(&[1, 0, 1])), ("y", &ints(&[1, 1, 1]))]).unwrap();
        assert_eq!(r.failing_indices(), vec![1]);
    }

    #[test]
    fn newton_epsilon_examples() {
        let t = Tables::build(6).unwrap();
        let r = newton_epsilon_check(&t, 4).unwrap();
        let c = r.comparisons.iter().find(|c| c.index == 1 && c.case == "eps2").unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (frac(121, 1), frac(99, 1)));
        assert!(r.passed());

        let r = newton_epsilon_check(&t, 3).unwrap();
        let c = r.comparisons.iter().find(|c| c.case == "eps2").unwrap();
        assert_eq!(c.lhs, c.rhs);
        assert!(r.passed());

        let r = newton_epsilon_check(&t, 5).unwrap();
        let c = r.comparisons.iter().find(|c| c.index == 2 && c.case == "eps2").unwrap();
        assert_eq!(c.lhs, frac(66 * 66, 1));
        assert_eq!(c.rhs, frac(81 * 26 * 26, 16));
        assert!(r.passed());
        assert!(newton_epsilon_check(&t, 2).is_err());
    }

    #[test]
    fn bound_lemma_examples() {
        let t = Tables::build(19).unwrap();
        let r = lemma_bound_check(&t, 19).unwrap();
        assert!(r.passed());
        assert_eq!(r.indices_checked(), (1..=17).collect::<Vec<_>>());
        let r15 = lemma_bound_check(&t, 15).unwrap();
        assert!(r15.comparisons.iter().filter(|c| c.case == "d2").all(|c| c.holds));
        // index 0 is outside the lemma: the ratio is exactly 1 there
        assert_eq!(t.descent_diff(19, 0).unwrap(), t.eulerian(19).unwrap()[0]);
        assert_eq!(t.exc_diff(19, 0).unwrap(), t.eulerian(19).unwrap()[0]);
    }

    #[test]
    fn almost_lemma_examples() {
        let t = Tables::build(19).unwrap();
        let r = lemma_almost_check(&t, 19).unwrap();
        assert_eq!(r.holding_indices(), (2..=16).collect::<Vec<_>>());
        assert!(r.failing_indices().contains(&1));
        assert_eq!(r.comparisons.len(), 17 * 8);
        let r3 = lemma_almost_check(&t, 3).unwrap();
        assert_eq!(r3.indices_checked(), vec![1]);
    }

    #[test]
    fn boundary_examples() {
        let t = Tables::build(20).unwrap();
        assert!(boundary_index_check(&t, 20).unwrap().passed());
        let r = boundary_index_check(&t, 6).unwrap();
        assert_eq!(r.comparisons.len(), 4);
        assert!(boundary_index_check(&t, 4).is_err());
    }

    #[test]
    fn even_chain() {
        let c = even_chain_check(6);
        assert!(!c.holds);
        assert_eq!(c.lhs, frac(4_194_304, 1));
        assert_eq!(c.rhs, frac(6_378_084, 1));
        assert!(even_chain_check(7).holds);
        assert_eq!(even_chain_threshold(40), Some(7));
    }

    #[test]
    fn symmetries_reported() {
        let t = Tables::build(7).unwrap();
        let syms = symmetry_candidates(&t.parity_rows(7).unwrap());
        assert_eq!(syms.len(), 16);
    }

    #[test]
    fn normalized_expansion() {
        let t = Tables::build(30).unwrap();
        for n in 3..=30 {
            assert!(normalized_expansion_agrees(&t, n).unwrap());
        }
    }
}
