use std::time::Duration;

use crate::ExactRatio;

/// One evaluated inequality `lhs >= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub index: usize,
    /// Sub-case within an index, e.g. the `(j1, j2, j3)` choice. Empty when
    /// the check has one comparison per index.
    pub case: String,
    pub lhs: ExactRatio,
    pub rhs: ExactRatio,
    pub holds: bool,
    /// Which sequences supplied the extreme values.
    pub witness: Vec<String>,
}

impl Comparison {
    pub fn new(index: usize, lhs: ExactRatio, rhs: ExactRatio) -> Self {
        let holds = lhs >= rhs;
        Comparison {
            index,
            case: String::new(),
            lhs,
            rhs,
            holds,
            witness: Vec::new(),
        }
    }

    pub fn with_case(mut self, case: impl Into<String>) -> Self {
        self.case = case.into();
        self
    }

    pub fn with_witness(mut self, witness: Vec<String>) -> Self {
        self.witness = witness;
        self
    }
}

/// Outcome of one check at one `n`. Every comparison is kept, so a failure
/// carries its exact comparands and can be re-checked by hand.
#[derive(Debug, Clone)]
pub struct SyncReport {
    pub check: String,
    pub n: usize,
    pub comparisons: Vec<Comparison>,
    pub elapsed: Duration,
}

impl SyncReport {
    pub fn new(check: impl Into<String>, n: usize) -> Self {
        SyncReport {
            check: check.into(),
            n,
            comparisons: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn push(&mut self, c: Comparison) {
        self.comparisons.push(c);
    }

    pub fn indices_checked(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = self.comparisons.iter().map(|c| c.index).collect();
        idx.dedup();
        idx
    }

    pub fn failures(&self) -> impl Iterator<Item = &Comparison> {
        self.comparisons.iter().filter(|c| !c.holds)
    }

    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(|c| c.holds)
    }

    /// Indices where every comparison holds.
    pub fn holding_indices(&self) -> Vec<usize> {
        self.indices_checked()
            .into_iter()
            .filter(|&i| {
                self.comparisons
                    .iter()
                    .filter(|c| c.index == i)
                    .all(|c| c.holds)
            })
            .collect()
    }

    pub fn failing_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = self.failures().map(|c| c.index).collect();
        idx.dedup();
        idx
    }

    /// Same report without timing, for equality checks.
    pub fn same_outcome(&self, other: &SyncReport) -> bool {
        self.check == other.check && self.n == other.n && self.comparisons == other.comparisons
    }
}
