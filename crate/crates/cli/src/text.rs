//! Plain rendering of a JSON report: one `key: value` line per scalar,
//! nested objects indented, scalar arrays inline.

use std::fmt::Write;

use serde_json::Value;

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    block(&mut out, v, 0);
    out
}

fn block(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match inline(x) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        block(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match inline(x) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}-").unwrap();
                        block(out, x, depth + 1);
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", inline(other).unwrap_or_default()).unwrap(),
    }
}

/// A one-line form for scalars, scalar arrays and partition terms.
fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.is_empty() => Some("[]".into()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items
                .iter()
                .map(|x| match x {
                    Value::Number(_) | Value::String(_) | Value::Bool(_) => inline(x),
                    _ => term(x),
                })
                .collect();
            let parts = parts?;
            if items.iter().all(|x| !x.is_object()) {
                Some(format!("({})", parts.join(",")))
            } else {
                Some(parts.join(" + "))
            }
        }
        Value::Object(map) if map.is_empty() => Some("{}".into()),
        Value::Object(_) => None,
    }
}

/// `{"partition": [..], "coeff": c}` as `c * (..)`.
fn term(v: &Value) -> Option<String> {
    let map = v.as_object()?;
    if map.len() != 2 {
        return None;
    }
    let parts = map.get("partition")?.as_array()?;
    let coeff = map.get("coeff")?.as_number()?;
    let parts: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
    Some(format!("{coeff} * ({})", parts.join(",")))
}
