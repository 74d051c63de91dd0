//! Number formatting and output plumbing.
//!
//! All floating-point values are serialized with 17 significant digits
//! (scientific notation), which round-trips every `f64` exactly and makes
//! output files byte-stable across runs and worker counts. Infinities are
//! serialized as `inf`/`-inf` and undefined values as `nan`.

use std::path::PathBuf;

use crate::error::{CliError, Result};

/// Serialize one floating-point number with 17 significant digits.
pub fn fmt_g17(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{v:.16e}")
    }
}

/// Destination for a finished report: a file when a path was given,
/// standard output otherwise.
pub struct Sink {
    out: Option<PathBuf>,
}

impl Sink {
    /// Sink writing to `out`, or to stdout when `out` is `None`.
    pub fn new(out: Option<PathBuf>) -> Self {
        Sink { out }
    }

    /// Write the complete content in one shot.
    pub fn write(&self, content: &str) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, content).map_err(|e| {
                CliError::Config(format!(
                    "cannot write output file {}: {e}",
                    path.display()
                ))
            }),
            None => {
                print!("{content}");
                Ok(())
            }
        }
    }
}
