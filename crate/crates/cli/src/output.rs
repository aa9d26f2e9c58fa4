use serde_json::{json, Map, Value};

/// How a command ended; determines the exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    /// A false verdict or a counterexample.
    Negative,
    InputError,
    CapExceeded,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Negative => 1,
            Status::InputError => 2,
            Status::CapExceeded => 3,
        }
    }
}

/// A successful computation: JSON result, optional certificate and the
/// rows of the text rendering.
pub struct Outcome {
    pub result: Value,
    pub certificate: Option<Value>,
    pub rows: Vec<(String, String)>,
    pub status: Status,
}

impl Outcome {
    pub fn new(result: Value) -> Self {
        Outcome { result, certificate: None, rows: Vec::new(), status: Status::Success }
    }

    pub fn row(mut self, key: &str, value: impl Into<String>) -> Self {
        self.rows.push((key.to_string(), value.into()));
        self
    }

    pub fn negative_unless(mut self, ok: bool) -> Self {
        if !ok {
            self.status = Status::Negative;
        }
        self
    }
}

pub struct Failure {
    pub status: Status,
    pub kind: &'static str,
    pub message: String,
    /// The offending literal and the 0-based character position of the error.
    pub location: Option<(String, usize)>,
}

pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub outcome: Result<Outcome, Failure>,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        match &self.outcome {
            Ok(o) => o.status.code(),
            Err(f) => f.status.code(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("command".into(), json!(self.command));
        obj.insert("inputs".into(), Value::Object(self.inputs.clone()));
        match &self.outcome {
            Ok(o) => {
                obj.insert("result".into(), o.result.clone());
                if let Some(c) = &o.certificate {
                    obj.insert("certificate".into(), c.clone());
                }
            }
            Err(f) => {
                let mut err = Map::new();
                err.insert("kind".into(), json!(f.kind));
                err.insert("message".into(), json!(f.message));
                if let Some((literal, position)) = &f.location {
                    err.insert("literal".into(), json!(literal));
                    err.insert("position".into(), json!(position));
                }
                obj.insert("error".into(), Value::Object(err));
            }
        }
        Value::Object(obj)
    }

    pub fn to_text(&self) -> String {
        match &self.outcome {
            Ok(o) => align(&o.rows),
            Err(f) => {
                let mut out = format!("error: {}\n", f.message);
                if let Some((literal, position)) = &f.location {
                    out.push_str(&format!("  {literal}\n  {}^\n", " ".repeat(*position)));
                }
                out
            }
        }
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            println!("{}", self.to_json());
        } else if self.outcome.is_ok() {
            print!("{}", self.to_text());
        } else {
            eprint!("{}", self.to_text());
        }
    }
}

/// Renders `key  value` rows with the values in one column. A single row
/// with an empty key prints the value alone.
fn align(rows: &[(String, String)]) -> String {
    if let [(k, v)] = rows {
        if k.is_empty() {
            return format!("{v}\n");
        }
    }
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| {
            let pad = width - k.chars().count();
            let line = format!("{k}{}  {v}", " ".repeat(pad));
            format!("{}\n", line.trim_end())
        })
        .collect()
}
