//! Shared inputs for the criterion benches.

use ultrasync_core::{RatPolynomial, Tables};

/// Tables up to `n`, built once per bench.
pub fn tables(n: usize) -> Tables {
    Tables::build(n).expect("n >= 1")
}

/// `P_n` for every `n` in `3..=n_max`.
pub fn pn_family(n_max: usize) -> Vec<RatPolynomial> {
    let t = tables(n_max);
    (3..=n_max)
        .map(|n| ultrasync_core::poly::build_pn(&t, n).expect("n >= 2"))
        .collect()
}
