//! Output records and their three renderings.

use std::fmt;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Pretty,
    Csv,
    Json,
}

/// Result of one command, rendered on demand.
///
/// Every number that reaches JSON is a decimal or `num/den` string.
pub struct Report {
    pub command: &'static str,
    pub parameters: Vec<(&'static str, String)>,
    pub result: Value,
    pub pretty: String,
    /// Rows of cells; all rows must have the same length.
    pub csv: Vec<Vec<String>>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Pretty => self.pretty.clone(),
            Format::Csv => render_csv(&self.csv),
            Format::Json => {
                let doc = json!({
                    "command": self.command,
                    "parameters": parameters(&self.parameters),
                    "result": self.result,
                    "status": "ok",
                });
                format!("{doc}\n")
            }
        }
    }
}

fn parameters(params: &[(&'static str, String)]) -> Value {
    Value::Object(
        params
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
            .collect::<Map<_, _>>(),
    )
}

fn render_csv(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| escape_csv(c)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn escape_csv(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    ResourceCap(String),
    Inconsistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::ResourceCap(_) => 3,
            CliError::Inconsistency(_) => 4,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage-error",
            CliError::ResourceCap(_) => "resource-cap",
            CliError::Inconsistency(_) => "internal-inconsistency",
        }
    }

    /// JSON document for a failed command.
    pub fn to_json(&self, command: &str, params: &[(&'static str, String)]) -> String {
        let doc = json!({
            "command": command,
            "parameters": parameters(params),
            "error": self.to_string(),
            "status": self.status(),
        });
        format!("{doc}\n")
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::ResourceCap(m) | CliError::Inconsistency(m) => {
                f.write_str(m)
            }
        }
    }
}

impl From<balseg::Error> for CliError {
    fn from(e: balseg::Error) -> CliError {
        match e {
            balseg::Error::Inconsistency(_) => CliError::Inconsistency(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}
