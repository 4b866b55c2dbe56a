//! File formats and loading helpers for the `stratarg` command-line tool.
//!
//! The engine itself lives in `stratarg-core`; this crate adds the `.saf`
//! split-framework format, the `.trace` game-record format, report
//! rendering, and the notion of a *framework reference* — either a path or
//! `fixture:<name>` for the built-in examples.

use std::path::Path;

use thiserror::Error;

use stratarg_core::fixtures;
use stratarg_core::game::SplitFramework;

pub mod report;
pub mod saf;
pub mod trace;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed directive `{token}`")]
    Malformed { token: String },
    #[error("unknown {what} `{token}`")]
    UnknownToken { what: &'static str, token: String },
    #[error("duplicate {what} in `{token}`")]
    Duplicate { what: &'static str, token: String },
    #[error("no focal(...) directive")]
    MissingFocal,
    #[error("no game line")]
    MissingGame,
    #[error("no winner line")]
    MissingWinner,
    #[error("{message}")]
    Engine { message: String },
}

/// Load a framework from a reference: `fixture:<name>` or a `.saf` path.
pub fn load_framework(reference: &str) -> anyhow::Result<SplitFramework> {
    if let Some(name) = reference.strip_prefix("fixture:") {
        return Ok(fixtures::fixture(name)?);
    }
    let text = std::fs::read_to_string(Path::new(reference))
        .map_err(|e| anyhow::anyhow!("cannot read {reference}: {e}"))?;
    Ok(saf::parse_saf(&text)?)
}

/// Load and parse a trace file.
pub fn load_trace(path: &Path) -> anyhow::Result<trace::TraceFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    Ok(trace::parse_trace(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_load_framework_fixture_refs() {
        assert!(load_framework("fixture:saf8").is_ok());
        assert!(load_framework("fixture:nope").is_err());
        assert!(load_framework("/no/such/file.saf").is_err());
    }
}
