//! The report envelope and the exit-code contract.

use serde_json::{json, Value};
use ternary_cubic::Error;

pub const SCHEMA: &str = "ternary-cubic-report/1";

pub const OK: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const USAGE: u8 = 2;
pub const INTERNAL: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    JsonLines,
}

/// What one command produced.
pub struct Emit {
    pub command: &'static str,
    pub input: Value,
    pub body: Body,
    pub text: String,
    pub status: u8,
    /// Pre-rendered JSON lines, for `--jsonl`.
    pub lines: Option<String>,
}

pub enum Body {
    Result(Value),
    Error { code: &'static str, message: String },
}

/// Exit status for a library error.
pub fn status_of(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. }
        | Error::UnknownVariable(_)
        | Error::UnboundVariable(_)
        | Error::DegreeMismatch(_)
        | Error::Inapplicable(_)
        | Error::CriterionInapplicable(_)
        | Error::ZeroForm => USAGE,
        Error::NotReducible | Error::Irreducible | Error::NotASquare => NEGATIVE,
        _ => INTERNAL,
    }
}

impl Emit {
    pub fn ok(command: &'static str, input: Value, result: Value, text: String, status: u8) -> Self {
        Emit { command, input, body: Body::Result(result), text, status, lines: None }
    }

    pub fn error(command: &'static str, input: Value, e: &Error) -> Self {
        Emit {
            command,
            input,
            body: Body::Error { code: e.code(), message: e.to_string() },
            text: format!("error [{}]: {e}", e.code()),
            status: status_of(e),
            lines: None,
        }
    }

    /// A usage problem found by the CLI itself, such as an unreadable file.
    pub fn usage(command: &'static str, input: Value, code: &'static str, message: String) -> Self {
        Emit {
            command,
            input,
            text: format!("error [{code}]: {message}"),
            body: Body::Error { code, message },
            status: USAGE,
            lines: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "schema": SCHEMA,
            "command": self.command,
            "input": self.input,
            "status": self.status,
        });
        match &self.body {
            Body::Result(r) => v["result"] = r.clone(),
            Body::Error { code, message } => v["error"] = json!({ "code": code, "message": message }),
        }
        v
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Text => {
                if self.status == USAGE || self.status == INTERNAL {
                    if matches!(self.body, Body::Error { .. }) {
                        eprintln!("{}", self.text);
                        return;
                    }
                }
                print!("{}", self.text);
                if !self.text.ends_with('\n') {
                    println!();
                }
            }
            Format::Json => println!("{}", serde_json::to_string_pretty(&self.to_json()).expect("report serializes")),
            Format::JsonLines => match &self.lines {
                Some(l) => print!("{l}"),
                None => println!("{}", serde_json::to_string(&self.to_json()).expect("report serializes")),
            },
        }
    }
}
