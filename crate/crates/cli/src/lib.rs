//! Input parsing and output rendering for the `weberchain` binary.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;
use weberchain::{build_chain, minimize_on_axis, Point2};

/// Significant figures used unless full precision is requested.
pub const SIG_FIGS: usize = 6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0}: no points")]
    Empty(PathBuf),
    #[error(transparent)]
    Core(#[from] weberchain::Error),
}

/// Points read from a CSV or JSON file.
#[derive(Debug, Clone, PartialEq)]
pub struct PointFile {
    pub points: Vec<Point2>,
}

impl PointFile {
    /// Reads `path`; files ending in `.json` hold an array of `[x, y]`, anything
    /// else is one `x,y` per line with `#` comments.
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let is_json = path
            .extension()
            .is_some_and(|e| e.eq_ignore_ascii_case("json"));
        let points = if is_json {
            parse_json(&text).map_err(|source| CliError::Json {
                path: path.to_path_buf(),
                source,
            })?
        } else {
            parse_csv(&text).map_err(|(line, message)| CliError::Parse {
                path: path.to_path_buf(),
                line,
                message,
            })?
        };
        if points.is_empty() {
            return Err(CliError::Empty(path.to_path_buf()));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(weberchain::Error::NonFinite.into());
        }
        Ok(PointFile { points })
    }
}

/// Parses `x,y` lines. Errors carry the 1-based line number.
pub fn parse_csv(text: &str) -> Result<Vec<Point2>, (usize, String)> {
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err((i + 1, format!("expected `x,y`, got `{line}`")));
        }
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| (i + 1, format!("bad number `{s}`: {e}")))
        };
        points.push(Point2::new(parse(fields[0])?, parse(fields[1])?));
    }
    Ok(points)
}

pub fn parse_json(text: &str) -> Result<Vec<Point2>, serde_json::Error> {
    let pairs: Vec<[f64; 2]> = serde_json::from_str(text)?;
    Ok(pairs.into_iter().map(Point2::from).collect())
}

/// Rounds to `SIG_FIGS` significant figures. Non-finite values pass through.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIG_FIGS - 1, x).parse().unwrap_or(x)
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n.as_f64().and_then(|x| serde_json::Number::from_f64(round_sig(x))) {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Pretty JSON, with every float rounded unless `precise`.
pub fn render_json<T: Serialize>(value: &T, precise: bool) -> String {
    let mut v = serde_json::to_value(value).expect("result types serialize");
    if !precise {
        round_value(&mut v);
    }
    serde_json::to_string_pretty(&v).expect("json values serialize")
}

/// One line of a chain table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub objective_at_min: f64,
    pub distance_from_center: f64,
}

pub fn table_rows(k: usize, n_max: usize) -> Result<Vec<TableRow>, CliError> {
    if n_max < k {
        return Err(weberchain::Error::InvalidChain { n: n_max, k }.into());
    }
    (k..=n_max)
        .map(|n| {
            let r = minimize_on_axis(&build_chain(n, k)?);
            Ok(TableRow {
                n,
                objective_at_min: r.psi_star,
                distance_from_center: r.x_star,
            })
        })
        .collect()
}

pub fn render_table(rows: &[TableRow], precise: bool) -> String {
    let fmt = |x: f64| if precise { x } else { round_sig(x) };
    let mut out = String::from("n,psi,x\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{}",
            r.n,
            fmt(r.objective_at_min),
            fmt(r.distance_from_center)
        );
    }
    out
}

/// Parses the output of [`render_table`].
pub fn parse_table(text: &str) -> Option<Vec<TableRow>> {
    let mut lines = text.lines();
    if lines.next()?.trim() != "n,psi,x" {
        return None;
    }
    lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut f = l.split(',');
            let row = TableRow {
                n: f.next()?.trim().parse().ok()?,
                objective_at_min: f.next()?.trim().parse().ok()?,
                distance_from_center: f.next()?.trim().parse().ok()?,
            };
            f.next().is_none().then_some(row)
        })
        .collect()
}
