use ultrasync_core::checks::{newton_epsilon_check, normalized_expansion_agrees};
use ultrasync_core::poly::{apply_tn, build_pn, count_real_roots, newton_from_roots};
use ultrasync_core::{RatPolynomial, Tables};

#[test]
fn pn_real_rooted_and_generated_by_tn() {
    let t = Tables::build(30).unwrap();
    for n in 3..=30 {
        let pn = build_pn(&t, n).unwrap();
        let r = count_real_roots(&pn).unwrap();
        assert_eq!(r.degree, n - 1);
        assert!(r.is_real_rooted, "P_{n} has {} real roots", r.real_with_multiplicity);
        if n >= 4 {
            assert_eq!(apply_tn(n, &build_pn(&t, n - 1).unwrap()).unwrap(), pn);
        }
    }
    let p3 = build_pn(&t, 3).unwrap();
    let r = count_real_roots(&p3).unwrap();
    assert_eq!((r.distinct_real, r.real_with_multiplicity), (1, 2));
}

#[test]
fn newton_on_pn_recovers_the_epsilon_inequality() {
    let t = Tables::build(30).unwrap();
    for n in 3..=30 {
        let pn = build_pn(&t, n).unwrap();
        assert!(newton_from_roots(&pn).unwrap().passed(), "n={n}");
        assert!(normalized_expansion_agrees(&t, n).unwrap(), "n={n}");
        let eps = newton_epsilon_check(&t, n).unwrap();
        assert!(eps.comparisons.iter().filter(|c| c.case == "eps2").all(|c| c.holds));
    }
}

#[test]
fn eulerian_polynomials_are_real_rooted() {
    let t = Tables::build(25).unwrap();
    for n in 1..=25 {
        let a = RatPolynomial::from_ints(t.eulerian(n).unwrap().iter().cloned());
        let r = count_real_roots(&a).unwrap();
        assert!(r.is_real_rooted, "A_{n}");
        // roots are simple and negative, so the count equals the degree
        assert_eq!(r.distinct_real, n - 1);
    }
}
