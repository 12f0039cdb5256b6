//! On-disk series cache.
//!
//! Layout: `<dir>/<kind>/<sha256 of the key>.json`, each file holding
//! `{"version": 1, "kind": ..., "key": {...}, "payload": <series>,
//! "checksum": <sha256 of the payload text>}`. The hashed key excludes the
//! truncation order: an entry stores the deepest series computed so far and
//! serves shallower requests by truncation (coefficients of a truncated
//! series are a prefix, so this is exact). Writes go through a temporary
//! file in the same directory and a rename, so readers never see a partial
//! entry. A corrupted or version-skewed file is recomputed and overwritten,
//! and the event is reported.

use exact_core::json::{series_from_json, series_to_json};
use exact_core::series::RationalSeries;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

pub const CACHE_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheEvent {
    /// Served at exactly the stored order.
    Hit,
    /// Served a prefix of a deeper stored entry.
    Truncated { stored: usize },
    /// Nothing stored; computed and wrote the entry.
    Miss,
    /// The stored file was unusable; recomputed and overwrote it.
    Invalidated { reason: String },
}

impl fmt::Display for CacheEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CacheEvent::Hit => write!(f, "cache hit"),
            CacheEvent::Truncated { stored } => {
                write!(f, "cache hit by truncation of a stored order-{stored} entry")
            }
            CacheEvent::Miss => write!(f, "cache miss: computed and stored"),
            CacheEvent::Invalidated { reason } => {
                write!(f, "cache entry invalidated ({reason}): recomputed and overwrote")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn entry_path(&self, kind: &str, key: &Value) -> PathBuf {
        let mut hasher = Sha256::new();
        hasher.update(kind.as_bytes());
        hasher.update([0]);
        hasher.update(key.to_string().as_bytes());
        let digest = hex_string(&hasher.finalize());
        self.dir.join(kind).join(format!("{digest}.json"))
    }

    /// Returns the cached series truncated to `order` when the stored entry
    /// is deep enough, with the reason it cannot be served otherwise.
    fn lookup(
        &self,
        kind: &str,
        key: &Value,
        order: usize,
    ) -> Result<(RationalSeries, CacheEvent), Option<String>> {
        let path = self.entry_path(kind, key);
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Err(None),
            Err(e) => return Err(Some(format!("unreadable: {e}"))),
        };
        let value: Value = match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(e) => return Err(Some(format!("not JSON: {e}"))),
        };
        if value.get("version").and_then(Value::as_u64) != Some(CACHE_VERSION) {
            return Err(Some("version mismatch".to_owned()));
        }
        let payload = match value.get("payload") {
            Some(p) => p,
            None => return Err(Some("missing payload".to_owned())),
        };
        let checksum = value.get("checksum").and_then(Value::as_str).unwrap_or_default();
        if checksum != payload_checksum(payload) {
            return Err(Some("checksum mismatch".to_owned()));
        }
        let series = match series_from_json(payload) {
            Ok(s) => s,
            Err(e) => return Err(Some(format!("bad payload: {e}"))),
        };
        if series.order() == order {
            Ok((series, CacheEvent::Hit))
        } else if series.order() > order {
            let stored = series.order();
            Ok((series.truncate(order), CacheEvent::Truncated { stored }))
        } else {
            Err(Some(format!("stored order {} is below the request", series.order())))
        }
    }

    pub fn put(&self, kind: &str, key: &Value, series: &RationalSeries) -> io::Result<()> {
        let path = self.entry_path(kind, key);
        let parent = path.parent().expect("entry paths have a kind directory");
        fs::create_dir_all(parent)?;
        let payload = series_to_json(series);
        let entry = json!({
            "version": CACHE_VERSION,
            "kind": kind,
            "key": key,
            "payload": payload,
            "checksum": payload_checksum(&payload),
        });
        let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
        fs::write(&tmp, format!("{entry}"))?;
        fs::rename(&tmp, &path)
    }

    /// Cache-through read: serves, or computes at `order` via `produce` and
    /// stores the result. Cache write failures surface as I/O errors; a
    /// broken entry is replaced and reported through the event.
    pub fn get_or_compute(
        &self,
        kind: &str,
        key: &Value,
        order: usize,
        produce: impl FnOnce() -> RationalSeries,
    ) -> io::Result<(RationalSeries, CacheEvent)> {
        match self.lookup(kind, key, order) {
            Ok(hit) => Ok(hit),
            Err(reason) => {
                let series = produce();
                assert_eq!(series.order(), order, "producer honors the requested order");
                self.put(kind, key, &series)?;
                let event = match reason {
                    None => CacheEvent::Miss,
                    Some(reason) => CacheEvent::Invalidated { reason },
                };
                Ok((series, event))
            }
        }
    }

    /// `(kind, stored order, key)` for every readable entry, sorted.
    pub fn entries(&self) -> io::Result<Vec<(String, usize, Value)>> {
        let mut out = Vec::new();
        let kinds = match fs::read_dir(&self.dir) {
            Ok(iter) => iter,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(out),
            Err(e) => return Err(e),
        };
        for kind_dir in kinds {
            let kind_dir = kind_dir?;
            if !kind_dir.file_type()?.is_dir() {
                continue;
            }
            let kind = kind_dir.file_name().to_string_lossy().into_owned();
            for file in fs::read_dir(kind_dir.path())? {
                let path = file?.path();
                let Ok(text) = fs::read_to_string(&path) else { continue };
                let Ok(value) = serde_json::from_str::<Value>(&text) else { continue };
                let order = value
                    .get("payload")
                    .and_then(|p| p.get("order"))
                    .and_then(Value::as_u64)
                    .unwrap_or(0) as usize;
                let key = value.get("key").cloned().unwrap_or(Value::Null);
                out.push((kind.clone(), order, key));
            }
        }
        out.sort_by(|a, b| (&a.0, a.2.to_string()).cmp(&(&b.0, b.2.to_string())));
        Ok(out)
    }

    /// Removes every entry; the directory itself stays.
    pub fn clear(&self) -> io::Result<usize> {
        let mut removed = 0;
        let kinds = match fs::read_dir(&self.dir) {
            Ok(iter) => iter,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e),
        };
        for kind_dir in kinds {
            let kind_dir = kind_dir?;
            if !kind_dir.file_type()?.is_dir() {
                continue;
            }
            for file in fs::read_dir(kind_dir.path())? {
                fs::remove_file(file?.path())?;
                removed += 1;
            }
            fs::remove_dir(kind_dir.path())?;
        }
        Ok(removed)
    }
}

fn payload_checksum(payload: &Value) -> String {
    let mut hasher = Sha256::new();
    hasher.update(payload.to_string().as_bytes());
    hex_string(&hasher.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rational::{rat, ratio};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sample_series() -> RationalSeries {
        RationalSeries::from_coeffs(vec![rat(0), rat(1), ratio(-3, 7), rat(12), rat(0)])
    }

    fn temp_cache(tag: &str) -> DiskCache {
        let dir = std::env::temp_dir().join(format!("qzeta-cache-test-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        DiskCache::new(dir)
    }

    #[test]
    fn miss_then_hit_round_trips_exactly() {
        let cache = temp_cache("roundtrip");
        let key = json!({"s": "Z(2,2)"});
        let (first, event) =
            cache.get_or_compute("zeta", &key, 4, sample_series).unwrap();
        assert_eq!(event, CacheEvent::Miss);
        let (second, event) = cache
            .get_or_compute("zeta", &key, 4, || panic!("must be served from disk"))
            .unwrap();
        assert_eq!(event, CacheEvent::Hit);
        assert_eq!(first, second);
        fs::remove_dir_all(cache.dir()).unwrap();
    }

    #[test]
    fn shallower_requests_are_served_by_truncation() {
        let cache = temp_cache("truncate");
        let key = json!({"s": "Z(2)"});
        cache.put("zeta", &key, &sample_series()).unwrap();
        let (served, event) = cache
            .get_or_compute("zeta", &key, 2, || panic!("prefix must come from disk"))
            .unwrap();
        assert_eq!(event, CacheEvent::Truncated { stored: 4 });
        assert_eq!(served, sample_series().truncate(2));
        // A deeper request recomputes and upgrades the entry in place.
        let deep = RationalSeries::from_coeffs((0..=9).map(rat).collect());
        let deep_clone = deep.clone();
        let (served, event) =
            cache.get_or_compute("zeta", &key, 9, move || deep_clone).unwrap();
        assert!(matches!(event, CacheEvent::Invalidated { .. }));
        assert_eq!(served, deep);
        let (_, event) = cache
            .get_or_compute("zeta", &key, 4, || panic!("upgraded entry serves prefixes"))
            .unwrap();
        assert_eq!(event, CacheEvent::Truncated { stored: 9 });
        fs::remove_dir_all(cache.dir()).unwrap();
    }

    #[test]
    fn corruption_is_detected_and_repaired() {
        let cache = temp_cache("corrupt");
        let key = json!({"s": "Z(3)"});
        cache.put("zeta", &key, &sample_series()).unwrap();
        let path = cache.entry_path("zeta", &key);
        let mut text = fs::read_to_string(&path).unwrap();
        text = text.replace("\"1\"", "\"2\"");
        fs::write(&path, text).unwrap();
        let (served, event) =
            cache.get_or_compute("zeta", &key, 4, sample_series).unwrap();
        let CacheEvent::Invalidated { reason } = event else {
            panic!("tampered entry must be invalidated");
        };
        assert!(reason.contains("checksum"), "{reason}");
        assert_eq!(served, sample_series());
        // The repaired entry is immediately trusted again.
        let (_, event) = cache
            .get_or_compute("zeta", &key, 4, || panic!("repaired entry must serve"))
            .unwrap();
        assert_eq!(event, CacheEvent::Hit);
        fs::remove_dir_all(cache.dir()).unwrap();
    }

    #[test]
    fn version_skew_invalidates() {
        let cache = temp_cache("version");
        let key = json!({"s": "Z(4)"});
        cache.put("zeta", &key, &sample_series()).unwrap();
        let path = cache.entry_path("zeta", &key);
        let mut value: Value =
            serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        value["version"] = json!(0);
        fs::write(&path, value.to_string()).unwrap();
        let (_, event) = cache.get_or_compute("zeta", &key, 4, sample_series).unwrap();
        assert_eq!(
            event,
            CacheEvent::Invalidated { reason: "version mismatch".to_owned() }
        );
        fs::remove_dir_all(cache.dir()).unwrap();
    }

    #[test]
    fn listing_and_clearing() {
        let cache = temp_cache("listing");
        assert_eq!(cache.entries().unwrap().len(), 0);
        cache.put("zeta", &json!({"s": "Z(2)"}), &sample_series()).unwrap();
        cache.put("template", &json!({"template": "num=x; den=2; L=n1"}), &sample_series()).unwrap();
        let entries = cache.entries().unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0].0, "template");
        assert_eq!(entries[1].0, "zeta");
        assert_eq!(entries[1].1, 4);
        assert_eq!(cache.clear().unwrap(), 2);
        assert_eq!(cache.entries().unwrap().len(), 0);
        fs::remove_dir_all(cache.dir()).unwrap();
    }

    #[test]
    fn distinct_keys_and_kinds_do_not_collide() {
        let cache = temp_cache("keys");
        let a = cache.entry_path("zeta", &json!({"s": "Z(2)"}));
        let b = cache.entry_path("zeta", &json!({"s": "Z(3)"}));
        let c = cache.entry_path("template", &json!({"s": "Z(2)"}));
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert!(a.starts_with(cache.dir().join("zeta")));
    }

    #[test]
    fn serialization_round_trips_five_hundred_random_series() {
        let mut rng = ChaCha8Rng::seed_from_u64(414);
        for _ in 0..500 {
            let order = rng.gen_range(0..=40);
            let coeffs: Vec<_> = (0..=order)
                .map(|_| {
                    let num = rng.gen_range(-1_000_000i64..=1_000_000);
                    let den = rng.gen_range(1i64..=999_983);
                    ratio(num, den)
                })
                .collect();
            let series = RationalSeries::from_coeffs(coeffs);
            let round = series_from_json(&series_to_json(&series)).unwrap();
            assert_eq!(round, series);
        }
    }
}
