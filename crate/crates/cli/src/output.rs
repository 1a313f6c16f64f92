use std::fmt::Write as _;

use algconn::spectral::{FiedlerClass, ZERO_TOL};
use algconn::Graph;
use serde_json::Value;

const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to 12 significant digits. The round trip through scientific
/// notation keeps the result the nearest `f64` to the decimal.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    let s = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let r: f64 = s.parse().unwrap_or(x);
    // Avoid printing negative zero.
    if r == 0.0 { 0.0 } else { r }
}

pub fn fmt_float(x: f64) -> String {
    let r = round_sig(x);
    if r.fract() == 0.0 && r.abs() < 1e15 {
        format!("{r:.1}")
    } else if r.abs() < 1e-4 || r.abs() >= 1e15 {
        format!("{r:e}")
    } else {
        r.to_string()
    }
}

/// Rounds every float in a JSON tree; integers are left alone.
pub fn round_floats(value: Value) -> Value {
    match value {
        Value::Number(n) if n.is_f64() => n
            .as_f64()
            .and_then(|x| serde_json::Number::from_f64(round_sig(x)))
            .map_or(Value::Null, Value::Number),
        Value::Array(items) => Value::Array(items.into_iter().map(round_floats).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

/// Graphviz rendering. Vertices show their Fiedler entry when one is given;
/// the characteristic vertex is filled and the characteristic edge drawn bold red.
pub fn dot(g: &Graph, fiedler: Option<&[f64]>, class: Option<&FiedlerClass>) -> String {
    let z = class.and_then(FiedlerClass::characteristic_vertex);
    let pq = class.and_then(FiedlerClass::characteristic_edge).map(|(p, q)| (p.min(q), p.max(q)));
    // Entries the classifier treats as zero are shown as zero.
    let scale = fiedler.map_or(0.0, |x| x.iter().fold(0.0f64, |m, e| m.max(e.abs())));
    let shown = |e: f64| if e.abs() <= ZERO_TOL * scale { 0.0 } else { e };
    let mut s = String::from("graph G {\n  node [shape=circle];\n");
    if class.is_some() {
        let kind = if z.is_some() { "Type I" } else { "Type II" };
        let _ = writeln!(s, "  label=\"{kind}\";");
    }
    for v in 0..g.order() {
        let mut attrs = match fiedler {
            Some(x) => format!("label=\"{v}\\n{}\"", fmt_float(shown(x[v]))),
            None => format!("label=\"{v}\""),
        };
        if z == Some(v) {
            attrs.push_str(", style=filled, fillcolor=gold");
        }
        let _ = writeln!(s, "  {v} [{attrs}];");
    }
    for &(u, v) in g.edges() {
        if pq == Some((u, v)) {
            let _ = writeln!(s, "  {u} -- {v} [color=red, penwidth=3];");
        } else {
            let _ = writeln!(s, "  {u} -- {v};");
        }
    }
    s.push_str("}\n");
    s
}
