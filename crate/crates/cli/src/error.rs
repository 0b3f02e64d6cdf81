use std::fmt;

use stext::Error;

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// The two computation routes disagree, or an internal check failed.
pub const EXIT_MISMATCH: i32 = 1;
/// Bad arguments, configuration, or resource limits.
pub const EXIT_USAGE: i32 = 2;
/// The coefficient ring lacks a unit the computation needs.
pub const EXIT_RING: i32 = 3;

/// A failure to report on the diagnostic stream, with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
    pub detail: Option<String>,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
            detail: None,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Config(_) | Error::ResourceLimit { .. } | Error::DegenerateRing(_) | Error::Io(_) => EXIT_USAGE,
            Error::RingAssumption(_) => EXIT_RING,
            Error::Verification { .. } | Error::Contract(_) | Error::Internal(_) => EXIT_MISMATCH,
        };
        let detail = match &e {
            Error::Verification { dump, .. } if !dump.is_empty() => Some(dump.clone()),
            _ => None,
        };
        CliError {
            code,
            message: e.to_string(),
            detail,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error: {}", self.message)?;
        if let Some(d) = &self.detail {
            write!(f, "\ndump: {d}")?;
        }
        Ok(())
    }
}
