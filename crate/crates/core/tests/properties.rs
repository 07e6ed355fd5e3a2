use std::collections::BTreeSet;

use proptest::prelude::*;
use ultrasync_core::checks::{is_ultra_log_concave, strong_sync_check, ultra_sync_check};
use ultrasync_core::poly::{count_real_roots, reciprocal_derivative, squarefree_decomposition};
use ultrasync_core::{ExactInt, ExactRatio, RatPolynomial};

fn q(n: i64, d: i64) -> ExactRatio {
    ExactRatio::new(n.into(), d.into())
}

fn rational() -> impl Strategy<Value = ExactRatio> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = ExactRatio> {
    rational().prop_filter("nonzero", |r| *r != q(0, 1))
}

/// `(x - p)^2 + s` with `s > 0`: no real roots.
fn irreducible_quadratic() -> impl Strategy<Value = RatPolynomial> {
    (rational(), (1i64..=9, 1i64..=4)).prop_map(|(p, (sn, sd))| {
        let lin = RatPolynomial::linear_root(p);
        &(&lin * &lin) + &RatPolynomial::constant(q(sn, sd))
    })
}

fn product(factors: &[RatPolynomial]) -> RatPolynomial {
    factors
        .iter()
        .fold(RatPolynomial::constant(q(1, 1)), |acc, f| &acc * f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sturm_counts_constructed_roots(
        roots in proptest::collection::vec(rational(), 0..7),
        quads in proptest::collection::vec(irreducible_quadratic(), 0..3),
        scale in nonzero_rational(),
    ) {
        prop_assume!(!roots.is_empty() || !quads.is_empty());
        let mut factors: Vec<RatPolynomial> =
            roots.iter().cloned().map(RatPolynomial::linear_root).collect();
        factors.extend(quads.iter().cloned());
        let f = product(&factors).scale(&scale);
        let r = count_real_roots(&f).unwrap();
        let distinct: BTreeSet<_> = roots.iter().cloned().collect();
        prop_assert_eq!(r.degree, roots.len() + 2 * quads.len());
        prop_assert_eq!(r.distinct_real, distinct.len());
        prop_assert_eq!(r.real_with_multiplicity, roots.len());
        prop_assert_eq!(r.is_real_rooted, quads.is_empty());
        prop_assert!(r.distinct_real <= r.real_with_multiplicity);

        let parts = squarefree_decomposition(&f).unwrap();
        let total: usize = parts.iter().map(|(p, i)| p.degree().unwrap() * i).sum();
        prop_assert_eq!(total, r.degree);
    }

    #[test]
    fn reciprocal_derivative_keeps_real_roots(
        roots in proptest::collection::vec(nonzero_rational(), 1..=12),
        scale in nonzero_rational(),
    ) {
        let f = product(&roots.into_iter().map(RatPolynomial::linear_root).collect::<Vec<_>>())
            .scale(&scale);
        let n = f.degree().unwrap();
        let g = reciprocal_derivative(&f, n).unwrap();
        prop_assert!(!g.is_zero());
        prop_assert!(count_real_roots(&g).unwrap().is_real_rooted);
    }

    #[test]
    fn single_sequence_ultra_sync_is_ultra_log_concavity(
        seq in proptest::collection::vec(0i64..500, 3..12),
    ) {
        let row: Vec<ExactInt> = seq.into_iter().map(ExactInt::from).collect();
        let sync = ultra_sync_check(&[("a", &row)]).unwrap();
        let ulc = is_ultra_log_concave(&row);
        prop_assert_eq!(sync.passed(), ulc.passed());
        let pairs = |r: &ultrasync_core::SyncReport| {
            r.comparisons.iter().map(|c| (c.index, c.lhs.clone(), c.rhs.clone())).collect::<Vec<_>>()
        };
        prop_assert_eq!(pairs(&sync), pairs(&ulc));
    }

    #[test]
    fn ultra_sync_implies_each_sequence_ultra_log_concave(
        rows in (3usize..9).prop_flat_map(|len| {
            proptest::collection::vec(proptest::collection::vec(1i64..60, len), 1..4)
        }),
    ) {
        let rows: Vec<Vec<ExactInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(ExactInt::from).collect())
            .collect();
        let labels = ["w", "x", "y", "z"];
        let seqs: Vec<(&str, &[ExactInt])> =
            labels.iter().copied().zip(rows.iter().map(Vec::as_slice)).collect();
        let sync = ultra_sync_check(&seqs).unwrap();
        if sync.passed() {
            for r in &rows {
                prop_assert!(is_ultra_log_concave(r).passed());
            }
        }
        // deterministic: a second run yields the same comparisons
        prop_assert!(sync.same_outcome(&ultra_sync_check(&seqs).unwrap()));
        let strong = strong_sync_check(&seqs).unwrap();
        prop_assert_eq!(strong.indices_checked(), sync.indices_checked());
    }
}
