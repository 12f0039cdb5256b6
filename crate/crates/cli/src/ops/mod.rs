//! One runner per verb, each producing a `Report`.
//!
//! Runners never exit the process: verification failures are verdicts, and
//! only I/O or argument problems surface as errors.

pub mod algebra;
pub mod analysis;
pub mod geometry;
pub mod series;

use std::path::PathBuf;

use exact_core::series::RationalSeries;
use serde_json::Value;

use crate::args::CacheAction;
use crate::cache::DiskCache;
use crate::report::Report;
use crate::CliError;

/// Shared run state: the optional on-disk cache.
pub struct Context {
    cache: Option<DiskCache>,
}

impl Context {
    pub fn new(cache_dir: Option<PathBuf>) -> Self {
        Self { cache: cache_dir.map(DiskCache::new) }
    }

    pub fn cache(&self) -> Option<&DiskCache> {
        self.cache.as_ref()
    }

    /// Computes through the cache when one is configured; the event lands
    /// in the report either way the entry was obtained.
    pub fn cached_series(
        &self,
        report: &mut Report,
        kind: &str,
        key: &Value,
        order: usize,
        produce: impl FnOnce() -> RationalSeries,
    ) -> Result<RationalSeries, CliError> {
        match &self.cache {
            None => Ok(produce()),
            Some(cache) => {
                let (series, event) = cache.get_or_compute(kind, key, order, produce)?;
                report.event(format!("{event} ({kind} {key})"));
                Ok(series)
            }
        }
    }
}

pub fn run_cache(action: &CacheAction, ctx: &Context) -> Result<Report, CliError> {
    let cache = ctx.cache().ok_or_else(|| {
        CliError::Usage(
            "no cache directory configured; pass --cache-dir or set QZETA_CACHE_DIR".to_owned(),
        )
    })?;
    let mut report = Report::new("cache");
    report.param("dir", cache.dir().display());
    match action {
        CacheAction::Path => {
            report.line(cache.dir().display().to_string());
            report.set_payload(serde_json::json!({"dir": cache.dir().display().to_string()}));
        }
        CacheAction::Ls => {
            let entries = cache.entries()?;
            for (kind, order, key) in &entries {
                report.line(format!("{kind}  order={order}  key={key}"));
            }
            report.line(format!("{} entries", entries.len()));
            report.set_payload(serde_json::json!({
                "entries": entries.iter().map(|(kind, order, key)| serde_json::json!({
                    "kind": kind,
                    "order": order,
                    "key": key,
                })).collect::<Vec<_>>(),
            }));
        }
        CacheAction::Clear => {
            let removed = cache.clear()?;
            report.line(format!("removed {removed} entries"));
            report.set_payload(serde_json::json!({"removed": removed}));
        }
    }
    Ok(report)
}

/// `n,coefficient` rows for a series, header included.
pub(crate) fn coefficient_table(series: &RationalSeries) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["n".to_owned(), "coefficient".to_owned()]];
    for (n, c) in series.coeffs().iter().enumerate() {
        rows.push(vec![n.to_string(), exact_core::rational::render_rational(c)]);
    }
    rows
}

/// First index where two equal-order series disagree.
pub(crate) fn first_mismatch(a: &RationalSeries, b: &RationalSeries) -> Option<usize> {
    (0..=a.order().min(b.order())).find(|&n| a.coeff(n) != b.coeff(n))
}
