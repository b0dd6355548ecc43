//! Append-only class polynomial cache: one JSON line per (element, class)
//! record, grouped per element on load.

use ctilde2::classes::ClassId;
use ctilde2::element::parse_element;
use ctilde2::hecke::{ClassPolyCtx, ClassPolyVector};
use ctilde2::laurent::Laurent;
use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::io::Write;
use std::path::PathBuf;

pub struct Cache {
    path: PathBuf,
    preloaded: HashSet<String>,
}

impl Cache {
    /// Load records from `path` (if it exists) into the memo table and
    /// remember which elements were already present.
    pub fn load_into(path: PathBuf, ctx: &ClassPolyCtx) -> Cache {
        let mut preloaded = HashSet::new();
        if let Ok(text) = fs::read_to_string(&path) {
            let mut grouped: BTreeMap<String, ClassPolyVector> = BTreeMap::new();
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let Ok(value) = serde_json::from_str::<serde_json::Value>(line) else {
                    continue;
                };
                let (Some(elem), Some(class), Some(poly)) = (
                    value.get("element").and_then(|v| v.as_str()),
                    value.get("class").and_then(|v| v.as_str()),
                    value.get("poly"),
                ) else {
                    continue;
                };
                let (Some(class), Some(poly)) =
                    (ClassId::parse(class), Laurent::from_json(poly))
                else {
                    continue;
                };
                grouped.entry(elem.to_string()).or_default().insert(class, poly);
            }
            for (elem, vector) in grouped {
                if let Ok(x) = parse_element(&elem) {
                    preloaded.insert(elem);
                    ctx.insert_cached(x, vector);
                }
            }
        }
        Cache { path, preloaded }
    }

    /// Append records for elements computed since the load.
    pub fn save(&self, ctx: &ClassPolyCtx) {
        let mut out = String::new();
        for (x, vector) in ctx.snapshot() {
            let key = x.to_string();
            if self.preloaded.contains(&key) {
                continue;
            }
            for (class, poly) in vector.iter() {
                let record = serde_json::json!({
                    "element": key,
                    "class": class.to_string(),
                    "poly": poly.to_json(),
                });
                out.push_str(&record.to_string());
                out.push('\n');
            }
        }
        if out.is_empty() {
            return;
        }
        let result = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .and_then(|mut f| f.write_all(out.as_bytes()));
        if let Err(e) = result {
            eprintln!("warning: could not write cache {}: {e}", self.path.display());
        }
    }
}
