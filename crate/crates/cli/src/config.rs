//! TOML configuration files for systems and hidden Markov models.
//!
//! System file:
//! ```toml
//! clodum = "max-plus"
//! mode = "max"            # or "min"
//! A = [[0.0, "-inf"], [1.0, 2.0]]
//! B = [["-inf"], [0.0]]
//! C = [[0.0, "-inf"]]
//! D = [["-inf"]]
//! ```
//! Matrix entries are numbers or the strings "-inf"/"+inf".
//!
//! HMM file:
//! ```toml
//! clodum = "max-times"    # optional, defaults to max-times
//! transition = [[0.5, 0.5], [0.3, 0.7]]
//! initial = [0.6, 0.4]
//! ```

use std::path::Path;

use anyhow::{bail, Context, Result};
use maxstar::system::Mode;
use maxstar::{Clodum, Matrix, System, Vector};

fn value_to_f64(v: &toml::Value) -> Result<f64> {
    match v {
        toml::Value::Float(f) => Ok(*f),
        toml::Value::Integer(i) => Ok(*i as f64),
        toml::Value::String(s) => match s.as_str() {
            "-inf" => Ok(f64::NEG_INFINITY),
            "+inf" | "inf" => Ok(f64::INFINITY),
            other => bail!("`{other}` is not a scalar literal"),
        },
        other => bail!("`{other}` is not a scalar literal"),
    }
}

fn table_matrix(v: &toml::Value, clodum: Clodum, key: &str) -> Result<Matrix> {
    let rows = v
        .as_array()
        .with_context(|| format!("`{key}` must be an array of rows"))?;
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(rows.len());
    for row in rows {
        let entries = row
            .as_array()
            .with_context(|| format!("`{key}` rows must be arrays"))?;
        out.push(entries.iter().map(value_to_f64).collect::<Result<_>>()?);
    }
    Matrix::from_rows(clodum, &out).with_context(|| format!("`{key}` is not a valid matrix"))
}

fn table_vector(v: &toml::Value, clodum: Clodum, key: &str) -> Result<Vector> {
    let entries = v
        .as_array()
        .with_context(|| format!("`{key}` must be an array"))?;
    let vals: Vec<f64> = entries.iter().map(value_to_f64).collect::<Result<_>>()?;
    Ok(Vector::from_f64s(clodum, &vals)?)
}

pub struct SystemConfig {
    pub system: System,
}

pub fn load_system(path: &Path) -> Result<SystemConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let doc: toml::Value = text
        .parse()
        .with_context(|| format!("{} is not valid TOML", path.display()))?;
    let clodum_name = doc
        .get("clodum")
        .and_then(|v| v.as_str())
        .context("missing `clodum`")?;
    let clodum = Clodum::from_name(clodum_name)?;
    let mode = match doc.get("mode").and_then(|v| v.as_str()).unwrap_or("max") {
        "max" => Mode::Max,
        "min" => Mode::Min,
        other => bail!("mode must be `max` or `min`, got `{other}`"),
    };
    let get = |key: &str| -> Result<Matrix> {
        let v = doc
            .get(key)
            .with_context(|| format!("missing `{key}` block"))?;
        table_matrix(v, clodum, key)
    };
    let a = get("A")?;
    let n = a.rows();
    let b = match doc.get("B") {
        Some(v) => table_matrix(v, clodum, "B")?,
        None => Matrix::filled(clodum, n, 1, mode.null()),
    };
    let c = match doc.get("C") {
        Some(v) => table_matrix(v, clodum, "C")?,
        None => Matrix::identity(clodum, n),
    };
    let q = c.rows();
    let d = match doc.get("D") {
        Some(v) => table_matrix(v, clodum, "D")?,
        None => Matrix::filled(clodum, q, b.cols(), mode.null()),
    };
    let system = System::constant(clodum, mode, a, b, c, d)
        .with_context(|| format!("{}: inconsistent system blocks", path.display()))?;
    Ok(SystemConfig { system })
}

pub struct HmmConfig {
    pub clodum: Clodum,
    pub transition: Matrix,
    pub initial: Vector,
}

pub fn load_hmm(path: &Path) -> Result<HmmConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let doc: toml::Value = text
        .parse()
        .with_context(|| format!("{} is not valid TOML", path.display()))?;
    let clodum = match doc.get("clodum").and_then(|v| v.as_str()) {
        None => Clodum::MaxTimes,
        Some(name) => Clodum::from_name(name)?,
    };
    let transition = table_matrix(
        doc.get("transition").context("missing `transition`")?,
        clodum,
        "transition",
    )?;
    let initial = table_vector(
        doc.get("initial").context("missing `initial`")?,
        clodum,
        "initial",
    )?;
    Ok(HmmConfig {
        clodum,
        transition,
        initial,
    })
}
