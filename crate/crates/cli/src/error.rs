use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Domain,
    Io,
    Usage,
    Bound,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: Kind,
    pub message: String,
    /// Partial result worth reporting alongside the error.
    pub payload: Option<Value>,
}

impl CliError {
    pub fn domain(message: impl Into<String>) -> Self {
        CliError { kind: Kind::Domain, message: message.into(), payload: None }
    }

    pub fn io(message: impl Into<String>) -> Self {
        CliError { kind: Kind::Io, message: message.into(), payload: None }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError { kind: Kind::Usage, message: message.into(), payload: None }
    }

    pub fn with_payload(mut self, payload: Value) -> Self {
        self.payload = Some(payload);
        self
    }

    pub fn exit_code(&self) -> u8 {
        match self.kind {
            Kind::Domain | Kind::Io => 1,
            Kind::Usage => 2,
            Kind::Bound => 3,
        }
    }
}

impl From<avoidable::Error> for CliError {
    fn from(e: avoidable::Error) -> Self {
        let kind = if e.is_bound_exceeded() { Kind::Bound } else { Kind::Domain };
        CliError { kind, message: e.to_string(), payload: None }
    }
}
