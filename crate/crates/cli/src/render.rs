use std::fmt::Write;

use homlie::io::ReportDoc;
use serde_json::Value;

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("none".to_string()),
        _ => None,
    }
}

fn headline(report: &ReportDoc) -> String {
    let dims = |key: &str| report.data.get(key).and_then(Value::as_u64);
    if report.verb == "cohomology" {
        if let (Some(n), Some(h)) = (dims("n"), dims("dim_h")) {
            return format!("dim H^{n} = {h}");
        }
    }
    let outcome = if report.verdict { "holds" } else { "fails" };
    format!("{}: {outcome}", report.verb)
}

/// Plain-text rendering: a headline, the scalar data fields, nested data as
/// compact JSON, then every failure with both sides.
pub fn human(report: &ReportDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", headline(report));
    if let Value::Object(map) = &report.data {
        for (key, value) in map {
            match scalar_text(value) {
                Some(text) => {
                    let _ = writeln!(out, "  {key}: {text}");
                }
                None => {
                    let _ = writeln!(out, "  {key}: {value}");
                }
            }
        }
    }
    if !report.failures.is_empty() {
        let _ = writeln!(out, "failures:");
        for f in &report.failures {
            let idx: Vec<String> = f.indices.iter().map(usize::to_string).collect();
            let _ = writeln!(
                out,
                "  {} at ({}): lhs [{}] rhs [{}]",
                f.condition,
                idx.join(","),
                f.lhs.join(", "),
                f.rhs.join(", ")
            );
        }
    }
    out
}
