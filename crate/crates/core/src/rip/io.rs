//! Matrix text format: a header `m n`, then `m` rows of `n`
//! whitespace-separated decimals, written with 17 significant digits.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use nalgebra::DMatrix;

use super::SensingMatrix;
use crate::error::{Error, Result};

pub fn write_matrix(m: &SensingMatrix, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, to_text(m)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn to_text(m: &SensingMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for row in m.matrix().row_iter() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    out
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<SensingMatrix> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_matrix(&text, path)
}

pub fn parse_matrix(text: &str, origin: impl AsRef<Path>) -> Result<SensingMatrix> {
    let fail = |line: usize, message: String| Error::Parse {
        path: origin.as_ref().to_path_buf(),
        line,
        message,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| fail(1, "missing header `m n`".into()))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| fail(hl, format!("`{t}` is not a dimension"))))
        .collect::<Result<_>>()?;
    let [rows, cols] = dims[..] else {
        return Err(fail(hl, "header needs 2 integers".into()));
    };
    if rows == 0 || cols == 0 {
        return Err(fail(hl, "dimensions must be positive".into()));
    }
    let mut data = Vec::with_capacity(rows * cols);
    let mut seen = 0;
    for (line, body) in lines {
        if seen == rows {
            return Err(fail(line, format!("more than {rows} rows")));
        }
        let before = data.len();
        for t in body.split_whitespace() {
            let v: f64 = t.parse().map_err(|_| fail(line, format!("`{t}` is not a number")))?;
            if !v.is_finite() {
                return Err(fail(line, format!("`{t}` is not finite")));
            }
            data.push(v);
        }
        if data.len() - before != cols {
            return Err(fail(line, format!("expected {cols} values, found {}", data.len() - before)));
        }
        seen += 1;
    }
    if seen != rows {
        return Err(fail(hl, format!("header declares {rows} rows, found {seen}")));
    }
    SensingMatrix::new(DMatrix::from_row_slice(rows, cols, &data))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn round_trip_is_bit_exact(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let a = DMatrix::from_fn(rows, cols, |_, _| rng.gen_range(-1e3..1e3) * rng.gen::<f64>().powi(7));
            let m = SensingMatrix::new(a).unwrap();
            let back = parse_matrix(&to_text(&m), "mem").unwrap();
            prop_assert_eq!(back, m);
        }
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(parse_matrix("2 2\n1 2\n3\n", "m").is_err());
        assert!(parse_matrix("2 2\n1 2\n", "m").is_err());
        assert!(parse_matrix("1 2\n1 nan\n", "m").is_err());
        assert!(parse_matrix("1 2\n1 2\n3 4\n", "m").is_err());
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("m.txt");
        let m = SensingMatrix::new(DMatrix::from_row_slice(2, 3, &[0.1, -2.5, 1e-300, 3.0, 0.0, -7.25])).unwrap();
        write_matrix(&m, &p).unwrap();
        assert_eq!(read_matrix(&p).unwrap(), m);
    }
}
