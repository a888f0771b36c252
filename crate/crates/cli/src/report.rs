use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// What a subcommand produced. `human` is the text shown with
/// `--format human`; everything else is the JSON document.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub request: Value,
    pub method: Option<String>,
    pub count: Option<String>,
    pub violations: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_list: Option<String>,
    pub elapsed_ms: f64,
    #[serde(skip)]
    pub human: String,
}

impl RunReport {
    pub fn new(method: impl Into<String>) -> Self {
        RunReport {
            request: Value::Null,
            method: Some(method.into()),
            count: None,
            violations: Vec::new(),
            verdict: None,
            details: Map::new(),
            edge_list: None,
            elapsed_ms: 0.0,
            human: String::new(),
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub fn failed(&self) -> bool {
        self.verdict == Some(Verdict::Fail)
    }
}

#[derive(Serialize)]
pub struct ErrorReport<'a> {
    pub request: &'a Value,
    pub error: ErrorBody,
    pub elapsed_ms: f64,
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub exit_code: u8,
    pub message: String,
}

impl ErrorBody {
    pub fn from_error(e: &CliError) -> Self {
        ErrorBody {
            kind: e.kind(),
            exit_code: e.exit_code(),
            message: e.to_string(),
        }
    }
}
