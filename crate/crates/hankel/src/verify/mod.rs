//! Suite orchestration: select suites, sweep the (t, n, p, k) grids, and
//! assemble the JSON report document.

pub mod config;
pub mod report;
pub mod suites;

pub use config::SuiteConfig;
pub use report::{Report, ReportDocument, Status, Summary, SCHEMA_VERSION};
pub use suites::{registry, Env, SuiteDef};

use crate::error::{Error, Result};
use crate::groebner::{DiskCache, GbConfig};
use std::fs;
use std::sync::Arc;

/// Resolve the suite selection against the registry, preserving registry
/// order; empty selection means everything.
pub fn select_suites(cfg: &SuiteConfig) -> Result<Vec<SuiteDef>> {
    let all = registry();
    if cfg.suites.is_empty() || cfg.suites.iter().any(|s| s == "all") {
        return Ok(all);
    }
    for name in &cfg.suites {
        if name != "all" && !all.iter().any(|s| s.name == name) {
            return Err(Error::UnknownSuite(name.clone()));
        }
    }
    Ok(all
        .into_iter()
        .filter(|s| cfg.suites.iter().any(|n| n == s.name))
        .collect())
}

/// Run the selected suites and assemble the document. Reports are sorted by
/// (suite, check, params) so the output is deterministic regardless of
/// scheduling.
pub fn run_to_document(cfg: &SuiteConfig) -> Result<ReportDocument> {
    cfg.validate()?;
    let selected = select_suites(cfg)?;
    let disk_cache = match &cfg.cache_dir {
        Some(dir) => Some(Arc::new(DiskCache::new(dir)?)),
        None => None,
    };
    let env = Env {
        gb: GbConfig { budget: cfg.budget, disk_cache },
        seed: cfg.seed,
        timings: cfg.include_timings,
    };

    let run_all = || -> Vec<Report> {
        use rayon::prelude::*;
        let mut reports: Vec<Report> = selected
            .par_iter()
            .flat_map(|suite| (suite.run)(cfg, &env))
            .collect();
        reports.sort_by_key(|r| r.sort_key());
        reports
    };

    let reports = if cfg.workers > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
        pool.install(run_all)
    } else {
        run_all()
    };

    let summary = Summary::tally(&reports);
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION,
        config: serde_json::to_value(cfg)?,
        reports,
        summary,
    })
}

/// Serialize the document (pretty JSON plus trailing newline), write it
/// atomically when an output path is configured, and return the text.
pub fn render_and_write(cfg: &SuiteConfig, doc: &ReportDocument) -> Result<String> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    if let Some(path) = &cfg.out {
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, &text)?;
        fs::rename(&tmp, path)?;
    }
    Ok(text)
}

/// Explanation text for one suite: the claim and the verification method.
pub fn explain(name: &str) -> Result<String> {
    let all = registry();
    let suite = all
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    Ok(format!(
        "suite: {}\n\nstatement:\n  {}\n\nmethod:\n  {}\n",
        suite.name, suite.claim, suite.method
    ))
}
