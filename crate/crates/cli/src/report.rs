//! Report assembly. Text output is the summary lines followed by the
//! verdict; `--json-style` prints the same content as one JSON document.

use std::fmt;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, bad parameters. Exit code 2.
    Usage(String),
    /// Input is well formed but outside what the operation decides. Exit 3.
    Precondition(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Precondition(m) => f.write_str(m),
        }
    }
}

#[derive(Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

pub struct Outcome {
    pub verdict: String,
    pub exit_code: u8,
    pub summary: Vec<String>,
    pub result: Value,
    /// Printed verbatim instead of the text summary (DOT output).
    pub raw: Option<String>,
}

impl Outcome {
    pub fn new(verdict: impl Into<String>, exit_code: u8, summary: Vec<String>, result: Value) -> Outcome {
        Outcome { verdict: verdict.into(), exit_code, summary, result, raw: None }
    }
}

#[derive(Serialize)]
struct Document<'a> {
    command: &'a [String],
    inputs: &'a [InputDigest],
    verdict: &'a str,
    exit_code: u8,
    result: &'a Value,
    summary: &'a [String],
}

pub struct Report {
    args: Vec<String>,
    inputs: Vec<InputDigest>,
}

fn digest(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

impl Report {
    pub fn new(args: Vec<String>) -> Report {
        Report { args, inputs: Vec::new() }
    }

    pub fn read_file(&mut self, path: &Path) -> Result<String, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        self.inputs.push(InputDigest { name: path.display().to_string(), sha256: digest(text.as_bytes()) });
        Ok(text)
    }

    pub fn inline(&mut self, name: &str, text: &str) {
        self.inputs.push(InputDigest { name: name.to_string(), sha256: digest(text.as_bytes()) });
    }

    pub fn emit(&self, outcome: Outcome, json: bool) {
        if json {
            let doc = Document {
                command: &self.args,
                inputs: &self.inputs,
                verdict: &outcome.verdict,
                exit_code: outcome.exit_code,
                result: &outcome.result,
                summary: &outcome.summary,
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        } else if let Some(raw) = &outcome.raw {
            print!("{raw}");
        } else {
            for line in &outcome.summary {
                println!("{line}");
            }
            println!("verdict: {}", outcome.verdict);
        }
    }
}
