use serde_json::{json, Value};

use crate::args::{GlobalArgs, OutFormat};

/// Settings echoed at the top of every report.
pub struct RunConfig<'a> {
    pub global: &'a GlobalArgs,
    pub out: OutFormat,
}

impl RunConfig<'_> {
    pub fn pairs(&self) -> Vec<(String, String)> {
        let g = self.global;
        let mut pairs = vec![
            ("convention".to_string(), g.convention.to_string()),
            ("truncation".to_string(), g.truncation.to_string()),
            ("tolerance".to_string(), format!("{:e}", g.tolerance)),
            ("out".to_string(), self.out.as_str().to_string()),
            ("seed".to_string(), g.seed.to_string()),
            ("precision".to_string(), g.precision.to_string()),
        ];
        if let Some(grid) = &g.grid {
            pairs.push(("grid".to_string(), grid.clone()));
        }
        pairs
    }

    pub fn json(&self) -> Value {
        let map: serde_json::Map<String, Value> =
            self.pairs().into_iter().map(|(k, v)| (k, Value::String(v))).collect();
        Value::Object(map)
    }

    pub fn text_header(&self) -> String {
        self.pairs().iter().map(|(k, v)| format!("# {k}={v}\n")).collect()
    }

    /// `{"config": …, <body fields>}` when the body is an object.
    pub fn wrap(&self, body: Value) -> Value {
        match body {
            Value::Object(mut map) => {
                map.insert("config".into(), self.json());
                Value::Object(map)
            }
            other => json!({ "config": self.json(), "result": other }),
        }
    }
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
