//! Plain-text matrix and vector files: whitespace-separated rows, one row
//! per line, tokens are decimal literals or "-inf"/"+inf" (bare "inf" is
//! accepted). Blank lines and lines starting with '#' are skipped.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use maxstar::{Clodum, Matrix, Vector};

pub fn parse_matrix(path: &Path, clodum: Clodum) -> Result<Matrix> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let mut rows: Vec<Vec<maxstar::Scalar>> = Vec::new();
    let mut width = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for tok in line.split_whitespace() {
            let s = clodum.parse_scalar(tok).with_context(|| {
                format!(
                    "{}:{}: token `{tok}` is not a scalar in the {} carrier {}",
                    path.display(),
                    lineno + 1,
                    clodum,
                    clodum.carrier()
                )
            })?;
            row.push(s);
        }
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => bail!(
                "{}:{}: row has {} entries, expected {w}",
                path.display(),
                lineno + 1,
                row.len()
            ),
            _ => {}
        }
        rows.push(row);
    }
    if rows.is_empty() {
        bail!("{}: no matrix rows found", path.display());
    }
    let r = rows.len();
    let c = rows[0].len();
    let data = rows.into_iter().flatten().collect();
    Ok(Matrix::new(clodum, r, c, data)?)
}

/// A vector file is a single row or a single column.
pub fn parse_vector(path: &Path, clodum: Clodum) -> Result<Vector> {
    let m = parse_matrix(path, clodum)?;
    if m.rows() == 1 {
        Ok(Vector::new(clodum, m.row(0).to_vec()))
    } else if m.cols() == 1 {
        Ok(m.column(0))
    } else {
        bail!(
            "{}: expected a vector (one row or one column), got {}x{}",
            path.display(),
            m.rows(),
            m.cols()
        )
    }
}

pub fn format_matrix(m: &Matrix) -> String {
    let c = m.clodum();
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|&s| c.format_scalar(s)).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}
