//! Vector files: one decimal per line. `#` comments and blank lines are
//! skipped.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

pub fn read_vector(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_vector(&text, path)
}

pub fn parse_vector(text: &str, origin: impl AsRef<Path>) -> Result<Vec<f64>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(line, t)| match t.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(Error::Parse {
                path: origin.as_ref().to_path_buf(),
                line,
                message: format!("`{t}` is not a finite decimal"),
            }),
        })
        .collect()
}
