//! Tables backed by the optional on-disk cache.

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use log::{debug, warn};
use ultrasync_core::cache::{self, CacheRecord};
use ultrasync_core::Tables;

pub struct TableStore {
    tables: Tables,
    cache_path: Option<PathBuf>,
    /// Existing cache records, or `None` when there is no usable cache.
    existing: Option<Vec<CacheRecord>>,
    /// Rows taken from the cache rather than computed.
    pub rows_from_cache: usize,
    pub warnings: Vec<String>,
}

impl TableStore {
    /// Tables covering `1..=n_max`, seeded from the cache when it is present
    /// and well formed. A malformed cache is reported and left untouched.
    pub fn open(cache_path: Option<&Path>, n_max: usize) -> Result<Self> {
        let mut warnings = Vec::new();
        let mut existing = None;
        let mut seeded = None;
        if let Some(path) = cache_path {
            match File::open(path) {
                Ok(f) => match cache::read_records(BufReader::new(f)) {
                    Ok(records) => {
                        seeded = cache::tables_from_records(&records)?;
                        existing = Some(records);
                    }
                    Err(e) => {
                        let msg = format!("ignoring cache {}: {e}", path.display());
                        warn!("{msg}");
                        warnings.push(msg);
                    }
                },
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => existing = Some(Vec::new()),
                Err(e) => {
                    let msg = format!("cannot read cache {}: {e}", path.display());
                    warn!("{msg}");
                    warnings.push(msg);
                }
            }
        }
        let rows_from_cache = seeded.as_ref().map_or(0, |t: &Tables| t.n_max().min(n_max));
        let mut tables = seeded.unwrap_or_default();
        let before = tables.n_max();
        tables.extend_to(n_max.max(1));
        debug!("tables: {rows_from_cache} rows from cache, built up to n = {}", tables.n_max());
        let mut store = TableStore {
            tables,
            cache_path: cache_path.map(Path::to_path_buf),
            existing,
            rows_from_cache,
            warnings,
        };
        if store.tables.n_max() > before {
            let records = cache::records_for_tables(&store.tables);
            store.merge_into_cache(records);
        }
        Ok(store)
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    /// Replace records with the same `(family, origin, n)` key and rewrite
    /// the cache in a canonical order. No-op without a usable cache.
    pub fn merge_into_cache(&mut self, records: Vec<CacheRecord>) {
        let (Some(path), Some(existing)) = (&self.cache_path, &mut self.existing) else {
            return;
        };
        let key = |r: &CacheRecord| (r.origin as u8, r.family, r.n);
        existing.retain(|old| !records.iter().any(|new| key(new) == key(old)));
        existing.extend(records);
        existing.sort_by_key(key);
        if let Err(e) = write_cache(path, existing) {
            let msg = format!("cannot write cache {}: {e:#}", path.display());
            warn!("{msg}");
            self.warnings.push(msg);
        }
    }
}

fn write_cache(path: &Path, records: &[CacheRecord]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let tmp = path.with_extension("jsonl.tmp");
    {
        let f = File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
        cache::write_records(BufWriter::new(f), records)?;
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}
