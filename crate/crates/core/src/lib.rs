//! Exact-arithmetic tables and inequality checks for descent and excedance
//! statistics over even and odd permutations.
//!
//! The crate is organised around four pieces:
//!
//! - [`tables`]: Eulerian, signed Eulerian and the even/odd descent and
//!   excedance triangles, built by recurrence and closed form.
//! - [`oracle`]: brute-force enumeration of `S_n` used as ground truth.
//! - [`checks`]: log-concavity, ultra-log-concavity, synchronisation and the
//!   bound lemmas, all compared as exact rationals.
//! - [`poly`]: rational polynomials, Sturm chains, squarefree decomposition
//!   and the `P_n(t)` family.
//!
//! No floating point is used in any comparison.

pub mod cache;
pub mod checks;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod tables;

pub use error::{Error, Result};
pub use oracle::{OracleRows, Parity, PermStats, Statistic};
pub use poly::{RatPolynomial, RootCount};
pub use report::{Comparison, SyncReport};
pub use tables::{Family, Tables, TriangleTable};

/// Arbitrary-precision signed integer holding every table entry.
pub type ExactInt = num_bigint::BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type ExactRatio = num_rational::BigRational;

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::from(1);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Row `(C(m, 0), ..., C(m, m))`.
pub fn binomial_row(m: usize) -> Vec<ExactInt> {
    let mut row = Vec::with_capacity(m + 1);
    let mut acc = ExactInt::from(1);
    row.push(acc.clone());
    for k in 0..m {
        acc = acc * (m - k) / (k + 1);
        row.push(acc.clone());
    }
    row
}
