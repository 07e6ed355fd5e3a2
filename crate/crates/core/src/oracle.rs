//! Brute-force ground truth: enumerate every permutation of `[n]` and tally
//! descents, excedances and sign.
//!
//! Enumeration is split into `n` blocks by first letter. Each block walks its
//! permutations in lexicographic order with the parity updated incrementally,
//! and the per-block tallies are merged in block order.

use log::warn;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Error, ExactInt, Result};

/// Default largest `n` the oracle will enumerate.
pub const DEFAULT_BOUND: usize = 10;
/// Largest bound that may be configured at all.
pub const HARD_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn flip_if(self, odd: bool) -> Parity {
        match (self, odd) {
            (p, false) => p,
            (Parity::Even, true) => Parity::Odd,
            (Parity::Odd, true) => Parity::Even,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Des,
    Exc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PermStats {
    pub n: usize,
    pub descents: usize,
    pub excedances: usize,
    pub parity: Parity,
}

fn descents(perm: &[u8]) -> usize {
    perm.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Values are 1-based; position `i` (0-based) is an excedance when
/// `perm[i] > i + 1`.
fn excedances(perm: &[u8]) -> usize {
    perm.iter()
        .enumerate()
        .filter(|&(i, &v)| v as usize > i + 1)
        .count()
}

/// `(-1)^(n - #cycles)`.
fn cycle_parity(perm: &[u8]) -> Parity {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] as usize - 1;
        }
    }
    if (n - cycles).is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Statistics of a permutation given in one-line notation on `{1..n}`.
pub fn stats_of(perm: &[usize]) -> Result<PermStats> {
    let n = perm.len();
    if n == 0 {
        return Err(Error::MalformedPermutation("empty permutation".into()));
    }
    if n > u8::MAX as usize {
        return Err(Error::MalformedPermutation(format!("length {n} too large")));
    }
    let mut seen = vec![false; n];
    for &v in perm {
        if v == 0 || v > n {
            return Err(Error::MalformedPermutation(format!(
                "value {v} outside 1..={n}"
            )));
        }
        if std::mem::replace(&mut seen[v - 1], true) {
            return Err(Error::MalformedPermutation(format!("value {v} repeated")));
        }
    }
    let bytes: Vec<u8> = perm.iter().map(|&v| v as u8).collect();
    Ok(PermStats {
        n,
        descents: descents(&bytes),
        excedances: excedances(&bytes),
        parity: cycle_parity(&bytes),
    })
}

/// Advance to the lexicographic successor. Returns the number of
/// transpositions applied, or `None` after the last permutation.
fn next_permutation(perm: &mut [u8]) -> Option<usize> {
    let n = perm.len();
    let i = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1])?;
    let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i])?;
    perm.swap(i, j);
    let tail = n - i - 1;
    perm[i + 1..].reverse();
    Some(1 + tail / 2)
}

/// Tallies for one statistic, split by parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRows {
    pub n: usize,
    pub statistic: Statistic,
    pub even: Vec<ExactInt>,
    pub odd: Vec<ExactInt>,
    pub total: Vec<ExactInt>,
    /// Number of permutations visited.
    pub visited: u64,
}

#[derive(Debug, Clone)]
struct Tally {
    des_even: Vec<u64>,
    des_odd: Vec<u64>,
    exc_even: Vec<u64>,
    exc_odd: Vec<u64>,
    visited: u64,
}

impl Tally {
    fn new(n: usize) -> Self {
        Tally {
            des_even: vec![0; n],
            des_odd: vec![0; n],
            exc_even: vec![0; n],
            exc_odd: vec![0; n],
            visited: 0,
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (dst, src) in [
            (&mut self.des_even, &other.des_even),
            (&mut self.des_odd, &other.des_odd),
            (&mut self.exc_even, &other.exc_even),
            (&mut self.exc_odd, &other.exc_odd),
        ] {
            dst.iter_mut().zip(src).for_each(|(d, s)| *d += s);
        }
        self.visited += other.visited;
        self
    }
}

/// All permutations starting with `first`, in lexicographic order.
fn tally_block(n: usize, first: u8) -> Tally {
    let mut tally = Tally::new(n);
    let mut perm: Vec<u8> = std::iter::once(first)
        .chain((1..=n as u8).filter(|&v| v != first))
        .collect();
    // [first, sorted rest] has first - 1 inversions
    let mut parity = Parity::Even.flip_if((first - 1) % 2 == 1);
    loop {
        let d = descents(&perm);
        let e = excedances(&perm);
        match parity {
            Parity::Even => {
                tally.des_even[d] += 1;
                tally.exc_even[e] += 1;
            }
            Parity::Odd => {
                tally.des_odd[d] += 1;
                tally.exc_odd[e] += 1;
            }
        }
        tally.visited += 1;
        match next_permutation(&mut perm[1..]) {
            Some(swaps) => parity = parity.flip_if(swaps % 2 == 1),
            None => break,
        }
    }
    tally
}

/// Exhaustive des/exc tallies over `S_n`.
#[derive(Debug, Clone)]
pub struct Oracle {
    pub n: usize,
    pub des: OracleRows,
    pub exc: OracleRows,
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("empty permutation set not modeled".into()));
    }
    if bound > HARD_CAP {
        return Err(Error::Resource {
            n,
            bound,
            reason: "configured bound exceeds hard cap 12",
        });
    }
    if n > bound {
        return Err(Error::Resource {
            n,
            bound,
            reason: "exhaustive enumeration refused",
        });
    }
    if n > DEFAULT_BOUND {
        warn!("oracle enumerating S_{n}: this visits more than 10! permutations");
    }
    Ok(())
}

impl Oracle {
    pub fn enumerate(n: usize, bound: usize) -> Result<Oracle> {
        check_bound(n, bound)?;
        let blocks: Vec<Tally> = (1..=n as u8)
            .into_par_iter()
            .map(|first| tally_block(n, first))
            .collect();
        let tally = blocks
            .into_iter()
            .reduce(Tally::merge)
            .expect("n >= 1 gives at least one block");
        let to_row = |v: &[u64]| v.iter().copied().map(ExactInt::from).collect::<Vec<_>>();
        let make = |statistic, even: &[u64], odd: &[u64]| OracleRows {
            n,
            statistic,
            even: to_row(even),
            odd: to_row(odd),
            total: even.iter().zip(odd).map(|(a, b)| ExactInt::from(a + b)).collect(),
            visited: tally.visited,
        };
        Ok(Oracle {
            n,
            des: make(Statistic::Des, &tally.des_even, &tally.des_odd),
            exc: make(Statistic::Exc, &tally.exc_even, &tally.exc_odd),
        })
    }

    pub fn rows(&self, statistic: Statistic) -> &OracleRows {
        match statistic {
            Statistic::Des => &self.des,
            Statistic::Exc => &self.exc,
        }
    }
}

pub fn oracle_rows(n: usize, statistic: Statistic, bound: usize) -> Result<OracleRows> {
    Ok(Oracle::enumerate(n, bound)?.rows(statistic).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<ExactInt> {
        v.iter().copied().map(ExactInt::from).collect()
    }

    #[test]
    fn stats_by_hand() {
        let s = stats_of(&[2, 3, 1]).unwrap();
        assert_eq!((s.descents, s.excedances, s.parity), (1, 2, Parity::Even));
        let s = stats_of(&[3, 2, 1]).unwrap();
        assert_eq!((s.descents, s.excedances, s.parity), (2, 1, Parity::Odd));
        let id: Vec<usize> = (1..=7).collect();
        let s = stats_of(&id).unwrap();
        assert_eq!((s.descents, s.excedances, s.parity), (0, 0, Parity::Even));
    }

    #[test]
    fn malformed_permutations() {
        assert!(matches!(stats_of(&[1, 1, 2]), Err(Error::MalformedPermutation(_))));
        assert!(matches!(stats_of(&[0, 1]), Err(Error::MalformedPermutation(_))));
        assert!(matches!(stats_of(&[1, 4, 2]), Err(Error::MalformedPermutation(_))));
        assert!(matches!(stats_of(&[]), Err(Error::MalformedPermutation(_))));
    }

    #[test]
    fn small_oracle_rows() {
        let des = oracle_rows(3, Statistic::Des, DEFAULT_BOUND).unwrap();
        assert_eq!(des.even, ints(&[1, 2, 0]));
        assert_eq!(des.odd, ints(&[0, 2, 1]));
        assert_eq!(des.total, ints(&[1, 4, 1]));
        let exc = oracle_rows(3, Statistic::Exc, DEFAULT_BOUND).unwrap();
        assert_eq!(exc.even, ints(&[1, 1, 1]));
        assert_eq!(exc.odd, ints(&[0, 3, 0]));
        assert_eq!(exc.total, ints(&[1, 4, 1]));
        let one = oracle_rows(1, Statistic::Des, DEFAULT_BOUND).unwrap();
        assert_eq!((one.even, one.odd, one.total), (ints(&[1]), ints(&[0]), ints(&[1])));
    }

    #[test]
    fn refuses_above_bound() {
        assert!(matches!(
            Oracle::enumerate(11, 10),
            Err(Error::Resource { n: 11, bound: 10, .. })
        ));
        assert!(matches!(
            Oracle::enumerate(5, 13),
            Err(Error::Resource { bound: 13, .. })
        ));
        assert!(Oracle::enumerate(0, 10).is_err());
    }

    #[test]
    fn incremental_parity_matches_cycle_parity() {
        for n in 1..=6u8 {
            for first in 1..=n {
                let mut perm: Vec<u8> = std::iter::once(first)
                    .chain((1..=n).filter(|&v| v != first))
                    .collect();
                let mut parity = cycle_parity(&perm);
                assert_eq!(parity, Parity::Even.flip_if((first - 1) % 2 == 1));
                while let Some(swaps) = next_permutation(&mut perm[1..]) {
                    parity = parity.flip_if(swaps % 2 == 1);
                    assert_eq!(parity, cycle_parity(&perm), "{perm:?}");
                }
            }
        }
    }

    #[test]
    fn visits_every_permutation_once() {
        let mut fact = 1u64;
        for n in 1..=8 {
            fact *= n as u64;
            let o = Oracle::enumerate(n, DEFAULT_BOUND).unwrap();
            assert_eq!(o.des.visited, fact);
            let even: ExactInt = o.des.even.iter().sum();
            let odd: ExactInt = o.des.odd.iter().sum();
            if n >= 2 {
                assert_eq!(even, ExactInt::from(fact / 2));
                assert_eq!(odd, ExactInt::from(fact / 2));
            }
            assert_eq!(o.des.total, o.exc.total);
        }
    }
}
