//! Deterministic JSON: sorted keys, `%.17g` floats, one result per line.

use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, Serializer};
use serde_json::Value;

/// `%.17g`: seventeen significant digits, the shortest fixed width that
/// round-trips every double. Zero of either sign prints as `0`, so that
/// re-parsing (which reads `-0` as an integer) reproduces the same bytes.
pub fn format_g17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exponent) = sci.split_once('e').expect("exponent form");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if !(-4..17).contains(&exponent) {
        let mantissa = trim_fraction(mantissa);
        let sign = if exponent < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exponent.abs())
    } else {
        let decimals = (16 - exponent) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_owned()
    }
}

fn trim_fraction(text: &str) -> &str {
    if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.')
    } else {
        text
    }
}

/// Compact output whose floats go through [`format_g17`].
#[derive(Debug, Clone, Copy, Default)]
struct G17Formatter;

impl Formatter for G17Formatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_g17(value).as_bytes())
    }
}

fn compact(value: &Value) -> String {
    let mut out = Vec::new();
    value
        .serialize(&mut Serializer::with_formatter(&mut out, G17Formatter))
        .expect("serializing a JSON value into memory cannot fail");
    String::from_utf8(out).expect("serde_json writes UTF-8")
}

/// Non-finite doubles have no JSON spelling and become `null`.
pub fn number(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

/// Render a document: the top-level members one per line, array members
/// of those one per line, everything below compact.
pub fn render(value: &Value) -> String {
    let mut out = String::new();
    match value {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (key, member)) in map.iter().enumerate() {
                out.push_str("  ");
                out.push_str(&compact(&Value::String(key.clone())));
                out.push_str(": ");
                render_member(member, "  ", &mut out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() => render_member(value, "", &mut out),
        other => out.push_str(&compact(other)),
    }
    out.push('\n');
    out
}

fn render_member(value: &Value, indent: &str, out: &mut String) {
    match value {
        Value::Array(items) if !items.is_empty() => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(indent);
                out.push_str("  ");
                out.push_str(&compact(item));
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(indent);
            out.push(']');
        }
        other => out.push_str(&compact(other)),
    }
}

/// Parse a rendered document and render it again.
pub fn reserialize(text: &str) -> serde_json::Result<String> {
    let value: Value = serde_json::from_str(text)?;
    Ok(render(&value))
}
