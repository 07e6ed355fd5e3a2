//! Table cache: one JSON record per line, one line per `(family, origin, n)`.
//!
//! ```text
//! {"family":"signed","origin":"recurrence","n":3,"entries":["1","0","-1"]}
//! ```
//!
//! Entries are decimal strings, so any row round-trips losslessly.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::oracle::Oracle;
use crate::tables::{Family, Tables};
use crate::{Error, ExactInt, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Recurrence,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub family: Family,
    pub origin: Origin,
    pub n: usize,
    pub entries: Vec<String>,
}

impl CacheRecord {
    pub fn new(family: Family, origin: Origin, n: usize, row: &[ExactInt]) -> Self {
        CacheRecord {
            family,
            origin,
            n,
            entries: row.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn row(&self) -> Result<Vec<ExactInt>> {
        self.entries
            .iter()
            .map(|e| {
                e.parse::<ExactInt>()
                    .map_err(|_| Error::Domain(format!("not a decimal integer: {e:?}")))
            })
            .collect()
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

pub fn write_records<W: Write>(mut w: W, records: &[CacheRecord]) -> Result<()> {
    for r in records {
        writeln!(w, "{}", r.to_line())?;
    }
    w.flush()?;
    Ok(())
}

/// Parses every line; the first malformed one aborts with its 1-based line
/// number. Blank lines are skipped.
pub fn read_records<R: BufRead>(r: R) -> Result<Vec<CacheRecord>> {
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: CacheRecord = serde_json::from_str(&line).map_err(|e| Error::Cache {
            line: i + 1,
            msg: e.to_string(),
        })?;
        if record.entries.len() != record.family.row_len(record.n) {
            return Err(Error::Cache {
                line: i + 1,
                msg: format!(
                    "{} row n = {} has {} entries",
                    record.family,
                    record.n,
                    record.entries.len()
                ),
            });
        }
        record.row().map_err(|e| Error::Cache {
            line: i + 1,
            msg: e.to_string(),
        })?;
        out.push(record);
    }
    Ok(out)
}

/// The `A` and `D` rows that seed [`Tables`].
pub fn records_for_tables(tables: &Tables) -> Vec<CacheRecord> {
    let mut out = Vec::with_capacity(2 * tables.n_max());
    for family in [Family::Eulerian, Family::SignedEulerian] {
        for n in 1..=tables.n_max() {
            let row = tables.row(family, n).expect("row within built range");
            out.push(CacheRecord::new(family, Origin::Recurrence, n, &row));
        }
    }
    out
}

/// Oracle rows tagged with oracle origin: `A` from the descent totals and
/// `B`, `C`, `P`, `Q` from the parity splits.
pub fn records_for_oracle(oracle: &Oracle) -> Vec<CacheRecord> {
    let n = oracle.n;
    [
        (Family::Eulerian, &oracle.des.total),
        (Family::EvenDes, &oracle.des.even),
        (Family::OddDes, &oracle.des.odd),
        (Family::EvenExc, &oracle.exc.even),
        (Family::OddExc, &oracle.exc.odd),
    ]
    .into_iter()
    .map(|(family, row)| CacheRecord::new(family, Origin::Oracle, n, row))
    .collect()
}

/// Rebuilds [`Tables`] from the longest contiguous prefix `1..=m` of
/// recurrence-origin `A` and `D` rows. `None` when row 1 is missing.
pub fn tables_from_records(records: &[CacheRecord]) -> Result<Option<Tables>> {
    let mut eulerian: Vec<Option<Vec<ExactInt>>> = Vec::new();
    let mut signed: Vec<Option<Vec<ExactInt>>> = Vec::new();
    for r in records.iter().filter(|r| r.origin == Origin::Recurrence && r.n >= 1) {
        let slot = match r.family {
            Family::Eulerian => &mut eulerian,
            Family::SignedEulerian => &mut signed,
            _ => continue,
        };
        if slot.len() < r.n {
            slot.resize(r.n, None);
        }
        slot[r.n - 1] = Some(r.row()?);
    }
    let prefix = eulerian
        .iter()
        .zip(&signed)
        .take_while(|(a, d)| a.is_some() && d.is_some())
        .count();
    if prefix == 0 {
        return Ok(None);
    }
    let take = |v: Vec<Option<Vec<ExactInt>>>| v.into_iter().take(prefix).flatten().collect();
    Tables::from_rows(take(eulerian), take(signed)).map(Some)
}
