//! Command-line front end: configuration, the verification commands and
//! report rendering.

pub mod config;
pub mod record;
pub mod store;
pub mod verify;

use std::fmt::Write as _;

use anyhow::Result;
use ultrasync_core::cache::{CacheRecord, Origin};

use crate::config::{Command, Format, RunConfig};
use crate::record::VerifyReport;
use crate::store::TableStore;

/// Rendered output and the process exit status it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit_code: i32,
    /// Cache problems and similar, meant for standard error.
    pub warnings: Vec<String>,
}

/// Largest n any part of the run needs from the tables.
fn tables_needed(cfg: &RunConfig) -> usize {
    match cfg.command {
        Command::Report => [Command::Table, Command::VerifyMain, Command::VerifyLemmas, Command::OracleCrosscheck, Command::Roots]
            .into_iter()
            .map(|c| report_config(cfg, c).n_max)
            .max()
            .unwrap_or(1),
        _ => cfg.n_max,
    }
}

/// Sub-configuration used by `report`: default ranges are clamped so each
/// command stays inside its valid domain.
fn report_config(cfg: &RunConfig, command: Command) -> RunConfig {
    let mut sub = cfg.for_command(command);
    match command {
        Command::VerifyMain if !sub.report_only => sub.n_min = sub.n_min.max(verify::MAIN_THEOREM_FROM),
        Command::OracleCrosscheck => sub.n_max = sub.n_max.min(sub.oracle_bound),
        _ => {}
    }
    sub
}

pub fn run(cfg: &RunConfig) -> Result<Output> {
    let mut store = TableStore::open(cfg.cache_path.as_deref(), tables_needed(cfg))?;
    let text;
    let mut exit_code = 0;
    if cfg.command == Command::Table {
        text = render_table(cfg, &store)?;
    } else {
        let report = match cfg.command {
            Command::Report => {
                let mut all = VerifyReport::new(cfg.echo());
                for c in [Command::VerifyMain, Command::VerifyLemmas, Command::OracleCrosscheck, Command::Roots] {
                    let sub = report_config(cfg, c);
                    if sub.n_min > sub.n_max {
                        continue;
                    }
                    all.extend(run_verify(&sub, &mut store)?);
                }
                all
            }
            _ => run_verify(cfg, &mut store)?,
        };
        exit_code = report.exit_code();
        text = match cfg.format {
            Format::Summary => report.render_summary(),
            Format::Records => report.render_records(),
            Format::Csv => report.render_csv()?,
        };
    }
    Ok(Output {
        text,
        exit_code,
        warnings: store.warnings.clone(),
    })
}

fn run_verify(cfg: &RunConfig, store: &mut TableStore) -> Result<VerifyReport> {
    match cfg.command {
        Command::VerifyMain => verify::verify_main(cfg, store.tables()),
        Command::VerifyLemmas => verify::verify_lemmas(cfg, store.tables()),
        Command::OracleCrosscheck => verify::oracle_crosscheck(cfg, store),
        Command::Roots => verify::roots(cfg, store.tables()),
        Command::Table | Command::Report => unreachable!("not a verification command"),
    }
}

fn render_table(cfg: &RunConfig, store: &TableStore) -> Result<String> {
    let tables = store.tables();
    let mut out = String::new();
    match cfg.format {
        Format::Summary => {
            let several = cfg.families.len() > 1;
            for &family in &cfg.families {
                for n in cfg.n_min..=cfg.n_max {
                    let row = tables.row(family, n)?;
                    let line = row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                    if several {
                        let _ = writeln!(out, "{}\t{line}", family.tag());
                    } else {
                        let _ = writeln!(out, "{line}");
                    }
                }
            }
        }
        Format::Records => {
            for &family in &cfg.families {
                for n in cfg.n_min..=cfg.n_max {
                    let rec = CacheRecord::new(family, Origin::Recurrence, n, &tables.row(family, n)?);
                    let _ = writeln!(out, "{}", rec.to_line());
                }
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["family", "n", "k", "value"])?;
            for &family in &cfg.families {
                for n in cfg.n_min..=cfg.n_max {
                    for (k, v) in tables.row(family, n)?.iter().enumerate() {
                        w.write_record([family.tag().to_string(), n.to_string(), k.to_string(), v.to_string()])?;
                    }
                }
            }
            out = String::from_utf8(w.into_inner()?)?;
        }
    }
    Ok(out)
}
