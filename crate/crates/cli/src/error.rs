use serde_json::{json, Value};
use stableass::Error;

use crate::report::prime_json;

/// How a failed request maps onto the process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// A closed form and the oracle disagree, or an internal consistency
    /// check failed.
    Disagreement,
    /// Malformed input document, bad parameters, or an input outside the
    /// domain of the requested computation.
    Input,
    /// A configured resource bound was hit.
    ResourceLimit,
}

impl ErrorKind {
    pub fn exit_code(self) -> u8 {
        match self {
            ErrorKind::Disagreement => 1,
            ErrorKind::Input => 2,
            ErrorKind::ResourceLimit => 3,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ErrorKind::Disagreement => "disagreement",
            ErrorKind::Input => "input",
            ErrorKind::ResourceLimit => "resource_limit",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
    /// Structured payload such as a counterexample or a partial report.
    pub details: Value,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Input,
            message: message.into(),
            details: Value::Null,
        }
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = details;
        self
    }

    pub fn to_document(&self) -> Value {
        let mut error = json!({
            "kind": self.kind.name(),
            "message": self.message,
        });
        if !self.details.is_null() {
            error["details"] = self.details.clone();
        }
        json!({ "error": error, "exit_code": self.kind.exit_code() })
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::ResourceLimit { .. } | Error::ExponentOverflow => ErrorKind::ResourceLimit,
            Error::Internal(_) => ErrorKind::Disagreement,
            _ => ErrorKind::Input,
        };
        let details = match &e {
            Error::ExchangeFailure { u, v, i } => json!({ "u": u, "v": v, "i": i + 1 }),
            Error::ModulusMismatch { u, v } => json!({ "u": u, "v": v }),
            Error::ResourceLimit { what, size, bound } => json!({
                "what": what,
                "size": size.to_string(),
                "bound": bound.to_string(),
            }),
            Error::ConditionViolation { a, b } => json!({ "a": prime_json(a), "b": prime_json(b) }),
            Error::NotStablePrime(p) => json!({ "prime": prime_json(p) }),
            Error::DimensionMismatch { expected, found } => {
                json!({ "expected": expected, "found": found })
            }
            Error::VariableOutOfRange { index, n } => json!({ "index": index + 1, "n": n }),
            Error::EmptyPolymatroid { sum, d } => json!({ "sum": sum, "d": d }),
            _ => Value::Null,
        };
        CliError {
            kind,
            message: e.to_string(),
            details,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::input(format!("malformed input document: {e}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(format!("cannot read input: {e}"))
    }
}
