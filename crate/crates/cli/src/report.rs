//! Machine and human renderings of command results. The text form is derived from the JSON tree.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use koszul_core::exactlin::FieldConfig;

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub input_name: String,
    pub input_digest: String,
    pub field: FieldConfig,
    pub cap: usize,
    pub results: Value,
}

pub fn digest(text: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(text.as_bytes())))
}

/// A verdict object: the label, the cap it was computed under, and optional details.
pub fn verdict(label: &str, cap: usize, details: Value) -> Value {
    let mut obj = Map::new();
    obj.insert("verdict".into(), Value::String(label.into()));
    obj.insert("cap".into(), json!(cap));
    if let Value::Object(extra) = details {
        obj.extend(extra);
    }
    Value::Object(obj)
}

impl Report {
    pub fn new(command: &str, input_name: &str, input_text: &str, field: FieldConfig, cap: usize, results: Value) -> Self {
        Report {
            command: command.into(),
            input_name: input_name.into(),
            input_digest: digest(input_text),
            field,
            cap,
            results,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "input": { "name": self.input_name, "digest": self.input_digest },
            "field": self.field.label(),
            "cap": self.cap,
            "results": self.results,
        })
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        render_value(&mut out, &self.to_json(), 0);
        out
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) if !s.contains('\n') => Some(s.clone()),
        _ => None,
    }
}

/// `[a, b, c]` for an array of scalars.
fn scalar_row(v: &Value) -> Option<String> {
    let items = v.as_array()?;
    let parts: Option<Vec<String>> = items.iter().map(scalar_text).collect();
    Some(format!("[{}]", parts?.join(", ")))
}

fn render_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Array(_) if scalar_row(val).is_some() => {
                        out.push_str(&format!("{pad}{k}: {}\n", scalar_row(val).unwrap_or_default()));
                    }
                    Value::String(s) if s.contains('\n') => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for line in s.lines() {
                            out.push_str(&format!("{pad}  | {line}\n"));
                        }
                    }
                    _ => match scalar_text(val) {
                        Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            render_value(out, val, indent + 1);
                        }
                    },
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                match (scalar_text(item), scalar_row(item)) {
                    (Some(s), _) | (None, Some(s)) => out.push_str(&format!("{pad}- {s}\n")),
                    (None, None) => {
                        out.push_str(&format!("{pad}- [{i}]\n"));
                        render_value(out, item, indent + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_carry_their_cap() {
        let v = verdict("koszul_up_to_cap", 8, json!({"hilbert": [1, 3, 6]}));
        assert_eq!(v["cap"], 8);
        assert_eq!(v["verdict"], "koszul_up_to_cap");
        assert_eq!(v["hilbert"][2], 6);
    }

    #[test]
    fn text_rendering_follows_the_tree() {
        let r = Report::new("hilbert", "sym2", "generators x y", FieldConfig::Rational, 3, json!({"dims": [1, 2, 3, 4]}));
        let text = r.render_text();
        assert!(text.contains("dims: [1, 2, 3, 4]"));
        assert!(text.contains("digest: sha256:"));
        let m = Report::new("x", "y", "", FieldConfig::Rational, 1, json!({"q": [[1, 0], [0, 1]]}));
        assert!(m.render_text().contains("q:\n    - [1, 0]\n    - [0, 1]\n"));
        assert_eq!(r.render_json(), r.clone().render_json());
    }
}
