//! Text and JSON renderings of reports, and re-parsing of JSON results.

use std::fmt::Write as _;

use cohom_core::abgroup::{ExtensionDatum, FgAbelian, GradedGroups, Kind};
use cohom_core::Invariants;
use serde_json::{json, Map, Value};

use crate::input::{Entry, SCHEMA};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Select {
    pub cohomology: bool,
    pub homology: bool,
}

impl Default for Select {
    fn default() -> Self {
        Select {
            cohomology: true,
            homology: true,
        }
    }
}

fn sections(groups: &GradedGroups, select: Select) -> Vec<(&'static str, GradedGroups)> {
    let mut out = Vec::new();
    if select.cohomology {
        out.push(("cohomology", groups.as_cohomology().expect("closed profile")));
    }
    if select.homology {
        out.push(("homology", groups.as_homology().expect("closed profile")));
    }
    out
}

fn extension_line(k: usize, e: &ExtensionDatum) -> String {
    let sequence = format!("0 -> {} -> H{k} -> {} -> 0", e.sub, e.quot);
    match &e.resolved {
        None => format!("H{k}: {sequence} (open)"),
        Some(g) => format!("H{k} = {g} ({sequence})"),
    }
}

fn degree_lines(g: &GradedGroups) -> Vec<String> {
    let ext = g.extension();
    g.groups()
        .iter()
        .enumerate()
        .map(|(k, group)| match ext {
            Some((d, e)) if d == k && !(e.sub.is_trivial() || e.quot.is_trivial()) => extension_line(k, e),
            _ => format!("H{k} = {group}"),
        })
        .collect()
}

fn invariant_pairs(inv: &Invariants) -> Vec<(&'static str, String)> {
    let fields = [
        ("alpha", &inv.alpha),
        ("beta", &inv.beta),
        ("gamma", &inv.gamma),
        ("h", &inv.h),
        ("delta", &inv.delta),
        ("ell", &inv.ell),
        ("im_delta3", &inv.im_delta3),
        ("im_i4", &inv.im_i4),
        ("h4_order", &inv.h4_order),
    ];
    fields
        .into_iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| (k, v.to_string())))
        .collect()
}

pub fn text(reports: &[Report], select: Select) -> String {
    let mut s = String::new();
    for (i, r) in reports.iter().enumerate() {
        let _ = writeln!(s, "[{}] {}", i + 1, r.entry.label());
        let Some(o) = &r.outcome else {
            for v in &r.violations {
                let _ = writeln!(s, "  invalid: {v}");
            }
            continue;
        };
        s.push_str("  valid\n");
        for (name, g) in sections(&o.cohomology, select) {
            let _ = writeln!(s, "  {name}:");
            for line in degree_lines(&g) {
                let _ = writeln!(s, "    {line}");
            }
        }
        if let Some(inv) = &o.invariants {
            let pairs = invariant_pairs(inv);
            if !pairs.is_empty() {
                let joined: Vec<String> = pairs.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(s, "  invariants: {}", joined.join(" "));
            }
        }
        let _ = writeln!(s, "  classification: {}", o.classification.shape);
        for alt in &o.classification.alternatives {
            let _ = writeln!(s, "  also fits: {alt}");
        }
        for w in &o.classification.warnings {
            let _ = writeln!(s, "  warning: {w}");
        }
        for d in &o.diagnostics {
            let _ = writeln!(s, "  diagnostic: {d}");
        }
        for c in &o.checks {
            let _ = writeln!(s, "  check: {c}");
        }
        for e in &o.check_errors {
            let _ = writeln!(s, "  check error: {e}");
        }
    }
    s.push_str(&summary_line(reports));
    s
}

/// One row per report, for sweeps.
pub fn table(reports: &[Report], select: Select) -> String {
    let mut s = String::new();
    for r in reports {
        let Some(o) = &r.outcome else {
            let _ = writeln!(s, "{}\tinvalid: {}", r.entry.label(), r.violations.join("; "));
            continue;
        };
        let mut cells = vec![r.entry.label()];
        for (name, g) in sections(&o.cohomology, select) {
            let ext = g.extension().filter(|(_, e)| e.is_open());
            let groups: Vec<String> = g
                .groups()
                .iter()
                .enumerate()
                .map(|(k, group)| match ext {
                    Some((d, e)) if d == k => format!("ext({}, {})", e.sub, e.quot),
                    _ => group.to_string(),
                })
                .collect();
            cells.push(format!("{name} [{}]", groups.join(", ")));
        }
        cells.push(o.classification.shape.to_string());
        if !o.checks.is_empty() || !o.check_errors.is_empty() {
            cells.push(if r.checks_pass() { "checks ok".into() } else { "checks FAIL".into() });
        }
        s.push_str(&cells.join("\t"));
        s.push('\n');
    }
    s.push_str(&summary_line(reports));
    s
}

fn summary_line(reports: &[Report]) -> String {
    let invalid = reports.iter().filter(|r| !r.is_valid()).count();
    let failed = reports.iter().filter(|r| !r.checks_pass()).count();
    format!("{} diagrams, {invalid} invalid, {failed} with failed checks\n", reports.len())
}

fn groups_json(g: &GradedGroups) -> Value {
    let ext = g.extension().map(|(k, e)| {
        json!({
            "degree": k,
            "sub": e.sub.to_string(),
            "quot": e.quot.to_string(),
            "resolved": e.resolved.as_ref().map(ToString::to_string),
        })
    });
    json!({
        "groups": g.groups().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "extension": ext,
    })
}

fn report_json(r: &Report, select: Select) -> Value {
    let mut m = Map::new();
    m.insert("input".into(), serde_json::to_value(&r.entry).expect("entries serialize"));
    m.insert("valid".into(), json!(r.is_valid()));
    m.insert("violations".into(), json!(r.violations));
    if let Some(o) = &r.outcome {
        for (name, g) in sections(&o.cohomology, select) {
            m.insert(name.into(), groups_json(&g));
        }
        if let Some(inv) = &o.invariants {
            let pairs: Map<String, Value> = invariant_pairs(inv).into_iter().map(|(k, v)| (k.into(), json!(v))).collect();
            m.insert("invariants".into(), Value::Object(pairs));
        }
        m.insert(
            "classification".into(),
            json!({
                "shape": o.classification.shape.to_string(),
                "alternatives": o.classification.alternatives.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "warnings": o.classification.warnings,
            }),
        );
        m.insert("diagnostics".into(), json!(o.diagnostics));
        let checks: Vec<Value> = o
            .checks
            .iter()
            .map(|c| {
                json!({
                    "quantity": c.quantity,
                    "params": c.params,
                    "formula": c.formula,
                    "oracle": c.oracle,
                    "agrees": c.agrees(),
                })
            })
            .collect();
        m.insert("checks".into(), json!(checks));
        m.insert("check_errors".into(), json!(o.check_errors));
    }
    Value::Object(m)
}

/// Integers are strings so that large orders survive any JSON reader.
pub fn json(reports: &[Report], select: Select) -> String {
    let doc = json!({
        "schema": SCHEMA,
        "results": reports.iter().map(|r| report_json(r, select)).collect::<Vec<_>>(),
        "summary": {
            "diagrams": reports.len(),
            "invalid": reports.iter().filter(|r| !r.is_valid()).count(),
            "failed_checks": reports.iter().filter(|r| !r.checks_pass()).count(),
        },
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("values serialize");
    s.push('\n');
    s
}

/// The groups of one result read back from JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedResult {
    pub input: Entry,
    pub cohomology: Option<GradedGroups>,
    pub homology: Option<GradedGroups>,
}

fn parse_group(v: &Value) -> Result<FgAbelian, String> {
    v.as_str()
        .ok_or_else(|| format!("group {v} is not a string"))?
        .parse()
        .map_err(|e: cohom_core::Error| e.to_string())
}

fn parse_groups(kind: Kind, v: &Value) -> Result<GradedGroups, String> {
    let groups = v["groups"]
        .as_array()
        .ok_or("missing groups")?
        .iter()
        .map(parse_group)
        .collect::<Result<Vec<_>, _>>()?;
    let mut g = GradedGroups::new(kind, groups).map_err(|e| e.to_string())?;
    let ext = &v["extension"];
    if !ext.is_null() {
        let degree = ext["degree"].as_u64().ok_or("missing extension degree")? as usize;
        let mut datum = ExtensionDatum::new(parse_group(&ext["sub"])?, parse_group(&ext["quot"])?);
        if !ext["resolved"].is_null() {
            datum = datum.resolve(parse_group(&ext["resolved"])?).map_err(|e| e.to_string())?;
        }
        g = g.with_extension(degree, datum).map_err(|e| e.to_string())?;
    }
    Ok(g)
}

pub fn parse_results(text: &str) -> Result<Vec<ParsedResult>, String> {
    let doc: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if doc["schema"] != json!(SCHEMA) {
        return Err(format!("unsupported schema {}", doc["schema"]));
    }
    let results = doc["results"].as_array().ok_or("missing results")?;
    results
        .iter()
        .map(|r| {
            let section = |name: &str, kind: Kind| match r.get(name) {
                None => Ok(None),
                Some(v) => parse_groups(kind, v).map(Some),
            };
            Ok(ParsedResult {
                input: serde_json::from_value(r["input"].clone()).map_err(|e| e.to_string())?,
                cohomology: section("cohomology", Kind::Cohomology)?,
                homology: section("homology", Kind::Homology)?,
            })
        })
        .collect()
}
