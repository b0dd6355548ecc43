//! Verification suites behind `ctilde2 verify`.

use crate::cache::Cache;
use clap::ValueEnum;
use ctilde2::adlv::{
    enumerate_b, ghkr_check, ghkr_default_min_length, pattern_check,
};
use ctilde2::classes::{catalog, classify};
use ctilde2::degrees::closed_form_table;
use ctilde2::element::{
    ball_with_cap, bfs_lengths, conjugacy_orbit, ExtAffineElement, IDENTITY, S0, S1, S2, TAU,
};
use ctilde2::hecke::ClassPolyCtx;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Suite {
    Relations,
    Lengths,
    Classes,
    Degrees,
    Patterns,
    Ghkr,
}

pub struct Options {
    pub max_length: Option<i64>,
    pub cache: Option<PathBuf>,
    pub allowlist: Option<PathBuf>,
    pub seed: Option<u64>,
    pub json: bool,
    pub csv: bool,
    pub report: Option<PathBuf>,
}

#[derive(Default)]
struct Report {
    suite: String,
    params: String,
    checked: usize,
    rows: Vec<Row>,
    warnings: Vec<String>,
}

struct Row {
    element: String,
    length: i64,
    class: String,
    degree: String,
    dimension: String,
    detail: String,
    allowlisted: bool,
}

impl Report {
    fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.allowlisted).count()
    }

    fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "element": r.element,
                    "length": r.length,
                    "class": r.class,
                    "degree": r.degree,
                    "dimension": r.dimension,
                    "detail": r.detail,
                    "allowlisted": r.allowlisted,
                })
            })
            .collect();
        serde_json::json!({
            "suite": self.suite,
            "params": self.params,
            "checked": self.checked,
            "mismatches": self.failures(),
            "rows": rows,
            "warnings": self.warnings,
        })
    }

    fn to_csv(&self) -> String {
        let mut out = String::from("element,length,class,degree,dimension\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.element, r.length, r.class, r.degree, r.dimension
            );
        }
        out
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} ({})", self.suite, self.params);
        let _ = writeln!(out, "checked {}", self.checked);
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        if self.rows.is_empty() {
            let _ = writeln!(out, "no mismatches");
        } else {
            let _ = writeln!(
                out,
                "{:<22} {:>4}  {:<12} {:<14} {:<10} detail",
                "element", "len", "class", "degree", "dimension"
            );
            for r in &self.rows {
                let _ = writeln!(
                    out,
                    "{:<22} {:>4}  {:<12} {:<14} {:<10} {}{}",
                    r.element,
                    r.length,
                    r.class,
                    r.degree,
                    r.dimension,
                    r.detail,
                    if r.allowlisted { " [allowlisted]" } else { "" }
                );
            }
        }
        out
    }
}

#[derive(Default)]
struct Allowlist {
    entries: Vec<(Option<String>, Option<String>, String)>,
}

impl Allowlist {
    fn load(path: &PathBuf) -> Result<Allowlist, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read allowlist {}: {e}", path.display()))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| format!("bad allowlist JSON: {e}"))?;
        let array = value
            .as_array()
            .ok_or_else(|| "allowlist must be a JSON array".to_string())?;
        let mut entries = Vec::new();
        for item in array {
            let element = item
                .get("element")
                .and_then(|v| v.as_str())
                .map(|s| s.to_string());
            let class = item
                .get("class")
                .and_then(|v| v.as_str())
                .map(|s| s.to_string());
            let note = item
                .get("note")
                .and_then(|v| v.as_str())
                .unwrap_or("")
                .to_string();
            entries.push((element, class, note));
        }
        Ok(Allowlist { entries })
    }

    fn covers(&self, element: &str, class: &str) -> bool {
        self.entries.iter().any(|(e, c, _)| {
            e.as_deref().is_none_or(|e| e == element)
                && c.as_deref().is_none_or(|c| c == class)
        })
    }
}

pub fn run(suite: Suite, options: Options) -> Result<bool, String> {
    let ctx = match options.seed {
        Some(seed) => ClassPolyCtx::with_seed(seed),
        None => ClassPolyCtx::new(),
    };
    let store = options
        .cache
        .clone()
        .map(|path| Cache::load_into(path, &ctx));
    let allowlist = match &options.allowlist {
        Some(path) => Allowlist::load(path)?,
        None => Allowlist::default(),
    };
    let report = match suite {
        Suite::Relations => relations_suite(),
        Suite::Lengths => lengths_suite(options.max_length.unwrap_or(12)),
        Suite::Classes => classes_suite(options.max_length.unwrap_or(12)),
        Suite::Degrees => degrees_suite(&ctx, options.max_length.unwrap_or(16), &allowlist),
        Suite::Patterns => patterns_suite(&ctx, options.max_length.unwrap_or(12)),
        Suite::Ghkr => ghkr_suite(&ctx, options.max_length.unwrap_or(10)),
    };
    if let Some(store) = store {
        store.save(&ctx);
    }
    let body = if options.json {
        serde_json::to_string_pretty(&report.to_json()).unwrap()
    } else if options.csv {
        report.to_csv()
    } else {
        report.to_text()
    };
    if let Some(path) = &options.report {
        std::fs::write(path, &body)
            .map_err(|e| format!("cannot write report {}: {e}", path.display()))?;
    }
    print!("{body}");
    let ok = report.failures() == 0;
    println!(
        "{}: {} ({} checked, {} mismatches)",
        report.suite,
        if ok { "PASS" } else { "FAIL" },
        report.checked,
        report.failures()
    );
    Ok(ok)
}

fn relation_rows() -> Vec<(&'static str, bool)> {
    let s1s2 = S1.multiply(S2);
    let pow4 = s1s2.multiply(s1s2).multiply(s1s2).multiply(s1s2);
    let t_l1 = ExtAffineElement::translation(ctilde2::coweight::LAMBDA1);
    let s121 = S1.multiply(S2).multiply(S1);
    vec![
        ("tau^2 = 1", TAU.multiply(TAU) == IDENTITY),
        ("tau s0 tau^-1 = s2", S0.conjugate_by(TAU) == S2),
        ("tau s1 tau^-1 = s1", S1.conjugate_by(TAU) == S1),
        ("tau s2 tau^-1 = s0", S2.conjugate_by(TAU) == S0),
        ("s0 = t^L1 s1 s2 s1", S0 == t_l1.multiply(s121)),
        ("s0 s2 = s2 s0", S0.multiply(S2) == S2.multiply(S0)),
        ("(s1 s2)^4 = e", pow4 == IDENTITY),
    ]
}

fn relations_suite() -> Report {
    let mut report = Report {
        suite: "relations".into(),
        params: "fixed relation list".into(),
        ..Default::default()
    };
    for (name, ok) in relation_rows() {
        report.checked += 1;
        if !ok {
            report.rows.push(Row {
                element: name.into(),
                length: 0,
                class: String::new(),
                degree: String::new(),
                dimension: String::new(),
                detail: "relation fails".into(),
                allowlisted: false,
            });
        }
    }
    report
}

fn lengths_suite(max_length: i64) -> Report {
    let mut report = Report {
        suite: "lengths".into(),
        params: format!("ball({max_length})"),
        ..Default::default()
    };
    for (x, d) in bfs_lengths(max_length) {
        report.checked += 1;
        if x.length() != d {
            report.rows.push(Row {
                element: x.to_string(),
                length: x.length(),
                class: classify(x).to_string(),
                degree: String::new(),
                dimension: String::new(),
                detail: format!("word length {d}"),
                allowlisted: false,
            });
        }
    }
    report.rows.sort_by(|a, b| a.element.cmp(&b.element));
    report
}

fn classes_suite(max_length: i64) -> Report {
    let mut report = Report {
        suite: "classes".into(),
        params: format!("ball({max_length})"),
        ..Default::default()
    };
    let elements = ball_with_cap(max_length, 24).expect("ball within cap");
    // orbit closure agrees with the catalog classifier
    for &x in &elements {
        report.checked += 1;
        let c = classify(x);
        for y in conjugacy_orbit(x, max_length + 2) {
            if classify(y) != c {
                report.rows.push(Row {
                    element: x.to_string(),
                    length: x.length(),
                    class: c.to_string(),
                    degree: String::new(),
                    dimension: String::new(),
                    detail: format!("orbit member {y} classified {}", classify(y)),
                    allowlisted: false,
                });
                break;
            }
        }
    }
    // each catalog class within reach is realised by its representative
    for c in catalog(max_length) {
        report.checked += 1;
        let rep = c.representative();
        if classify(rep) != c || rep.length() != c.min_length() {
            report.rows.push(Row {
                element: rep.to_string(),
                length: rep.length(),
                class: c.to_string(),
                degree: String::new(),
                dimension: String::new(),
                detail: "catalog representative mismatch".into(),
                allowlisted: false,
            });
        }
    }
    report
}

fn degrees_suite(ctx: &ClassPolyCtx, max_length: i64, allowlist: &Allowlist) -> Report {
    let mut report = Report {
        suite: "degrees".into(),
        params: format!("ball({max_length})"),
        ..Default::default()
    };
    let elements = ball_with_cap(max_length, 40).expect("ball within cap");
    for x in elements {
        report.checked += 1;
        let actual: BTreeMap<_, i64> = ctx
            .class_polynomials(x)
            .iter()
            .map(|(c, p)| (*c, p.degree().finite().expect("nonzero polynomial")))
            .collect();
        match closed_form_table(x) {
            Err(e) => {
                report
                    .warnings
                    .push(format!("no closed form: {e}"));
            }
            Ok(predicted) => {
                let keys: std::collections::BTreeSet<_> =
                    predicted.keys().chain(actual.keys()).copied().collect();
                for c in keys {
                    let p = predicted.get(&c);
                    let a = actual.get(&c);
                    if p != a {
                        let fmt = |v: Option<&i64>| match v {
                            Some(d) => d.to_string(),
                            None => "-inf".into(),
                        };
                        let class = c.to_string();
                        let element = x.to_string();
                        let allowlisted = allowlist.covers(&element, &class);
                        report.rows.push(Row {
                            element,
                            length: x.length(),
                            class,
                            degree: format!("{}/{}", fmt(p), fmt(a)),
                            dimension: String::new(),
                            detail: "closed form / recursion".into(),
                            allowlisted,
                        });
                    }
                }
            }
        }
    }
    report
}

fn patterns_suite(ctx: &ClassPolyCtx, max_length: i64) -> Report {
    let mut report = Report {
        suite: "patterns".into(),
        params: format!("ball({max_length}), b from enumerate_b(10)"),
        ..Default::default()
    };
    for b in enumerate_b(10) {
        let check = pattern_check(ctx, b, max_length);
        report.checked += check.rows.len();
        for row in check.rows.into_iter().filter(|r| !r.ok) {
            report.rows.push(Row {
                element: row.element.to_string(),
                length: row.length,
                class: row.class.to_string(),
                degree: String::new(),
                dimension: format!("{:?}/{:?}", row.expected.dimension, row.actual.dimension),
                detail: format!("{b}: expected/actual"),
                allowlisted: false,
            });
        }
    }
    report
}

fn ghkr_suite(ctx: &ClassPolyCtx, enumerate_bound: i64) -> Report {
    let mut report = Report {
        suite: "ghkr".into(),
        params: format!("non-basic b from enumerate_b({enumerate_bound}), default L0"),
        ..Default::default()
    };
    for b in enumerate_b(enumerate_bound) {
        if b.is_basic() {
            continue;
        }
        let l0 = ghkr_default_min_length(b);
        let check = ghkr_check(ctx, b, l0, l0 + 6).expect("non-basic label");
        report.checked += check.checked;
        let offset = match check.twice_offset {
            Some(d2) if d2 % 2 == 0 => format!("{}", d2 / 2),
            Some(d2) => format!("{d2}/2"),
            None => "none".into(),
        };
        report.warnings.push(format!(
            "{b}: lengths [{}, {}], measured defect offset d = {offset}, {} elements",
            check.min_length, check.max_length, check.checked
        ));
        for violation in check.violations {
            report.rows.push(Row {
                element: String::new(),
                length: 0,
                class: b.class.to_string(),
                degree: String::new(),
                dimension: String::new(),
                detail: violation,
                allowlisted: false,
            });
        }
    }
    report
}
