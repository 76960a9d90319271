//! Line-oriented `key = value` description of an initial-value problem.
//!
//! ```text
//! # harmonic oscillator
//! dim = 2
//! rhs_1 = y2
//! rhs_2 = -y1
//! t0 = 0
//! y0 = 0, 1
//! t_end = 6.283
//! h = 1e-3
//! method = rk4
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. `method` is
//! optional and defaults to rk4; every other key is required exactly once.

use std::collections::BTreeMap;
use std::fmt;

use limitless::expr::{parse, Expr, ExprKind};
use limitless::solver::{Ivp, Method, SolverError, StepPlan};

#[derive(Debug, Clone, PartialEq)]
pub struct SpecError {
    pub line: Option<usize>,
    /// 1-based column within the line.
    pub column: Option<usize>,
    pub message: String,
}

impl SpecError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        SpecError {
            line: Some(line),
            column: Some(column),
            message: message.into(),
        }
    }

    fn global(message: impl Into<String>) -> Self {
        SpecError {
            line: None,
            column: None,
            message: message.into(),
        }
    }

    /// `path:line:col: message`, dropping whatever location is unknown.
    pub fn render(&self, path: &str) -> String {
        match (self.line, self.column) {
            (Some(l), Some(c)) => format!("{path}:{l}:{c}: {}", self.message),
            (Some(l), None) => format!("{path}:{l}: {}", self.message),
            _ => format!("{path}: {}", self.message),
        }
    }
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("<spec>"))
    }
}

impl std::error::Error for SpecError {}

#[derive(Debug, Clone)]
pub struct SpecFile {
    pub dim: usize,
    pub rhs: Vec<Expr>,
    pub t0: f64,
    pub y0: Vec<f64>,
    pub t_end: f64,
    pub h: f64,
    pub method: Method,
}

struct Entry<'a> {
    line: usize,
    /// 1-based column where the value starts.
    value_col: usize,
    value: &'a str,
}

impl<'a> Entry<'a> {
    fn error(&self, message: impl Into<String>) -> SpecError {
        SpecError::at(self.line, self.value_col, message)
    }
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<SpecFile, SpecError> {
        let mut entries: BTreeMap<&str, Entry> = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let trimmed = raw.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some(eq) = raw.find('=') else {
                let col = raw.len() - trimmed.len() + 1;
                return Err(SpecError::at(line, col, "expected 'key = value'"));
            };
            let key = raw[..eq].trim();
            let after = &raw[eq + 1..];
            let value = after.trim();
            let lead = after.len() - after.trim_start().len();
            let entry = Entry {
                line,
                value_col: eq + 2 + lead,
                value,
            };
            if !is_known_key(key) {
                let col = raw.find(key).unwrap_or(0) + 1;
                return Err(SpecError::at(line, col, format!("unknown key '{key}'")));
            }
            if let Some(prev) = entries.get(key) {
                return Err(SpecError::at(
                    line,
                    raw.find(key).unwrap_or(0) + 1,
                    format!("duplicate key '{key}' (first given on line {})", prev.line),
                ));
            }
            entries.insert(key, entry);
        }

        let take = |key: &str| entries.get(key).ok_or_else(|| SpecError::global(format!("missing key '{key}'")));
        let dim_entry = take("dim")?;
        let dim: usize = dim_entry
            .value
            .parse()
            .ok()
            .filter(|d| *d > 0)
            .ok_or_else(|| dim_entry.error(format!("key 'dim': expected a positive integer, got '{}'", dim_entry.value)))?;

        let rhs_keys: Vec<&str> = entries.keys().copied().filter(|k| k.starts_with("rhs_")).collect();
        for key in &rhs_keys {
            let i: usize = key[4..].parse().unwrap_or(0);
            if i == 0 || i > dim {
                let e = &entries[key];
                return Err(SpecError::at(
                    e.line,
                    1,
                    format!("key '{key}' does not match dim = {dim}"),
                ));
            }
        }
        if rhs_keys.len() != dim {
            return Err(dim_entry.error(format!(
                "key 'dim': dim = {dim} but {} rhs_i lines are given",
                rhs_keys.len()
            )));
        }
        let mut rhs = Vec::with_capacity(dim);
        for i in 1..=dim {
            let key = format!("rhs_{i}");
            let e = take(&key)?;
            let expr = parse(e.value).map_err(|err| {
                SpecError::at(e.line, e.value_col + err.pos(), format!("key '{key}': {err}"))
            })?;
            if let Some((name, pos)) = foreign_variable(&expr, dim) {
                return Err(SpecError::at(
                    e.line,
                    e.value_col + pos,
                    format!("key '{key}': unknown variable '{name}' (expected t or y1..y{dim})"),
                ));
            }
            rhs.push(expr);
        }

        let real = |key: &str| -> Result<f64, SpecError> {
            let e = take(key)?;
            e.value
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| e.error(format!("key '{key}': expected a finite number, got '{}'", e.value)))
        };
        let t0 = real("t0")?;
        let t_end = real("t_end")?;
        let h = real("h")?;
        if h <= 0.0 {
            return Err(take("h")?.error(format!("key 'h': step must be positive, got {h}")));
        }

        let y0_entry = take("y0")?;
        let y0 = y0_entry
            .value
            .split(',')
            .map(|s| s.trim().parse::<f64>().ok().filter(|v| v.is_finite()))
            .collect::<Option<Vec<f64>>>()
            .ok_or_else(|| y0_entry.error("key 'y0': expected comma-separated finite numbers"))?;
        if y0.len() != dim {
            return Err(y0_entry.error(format!(
                "key 'y0': has {} values but dim = {dim}",
                y0.len()
            )));
        }

        let method = match entries.get("method") {
            None => Method::Rk4,
            Some(e) => e
                .value
                .parse()
                .map_err(|_| e.error(format!("key 'method': expected euler or rk4, got '{}'", e.value)))?,
        };

        Ok(SpecFile {
            dim,
            rhs,
            t0,
            y0,
            t_end,
            h,
            method,
        })
    }

    pub fn ivp(&self) -> Result<Ivp, SolverError> {
        Ivp::from_exprs(self.t0, self.y0.clone(), self.rhs.clone())
    }

    pub fn plan(&self) -> Result<StepPlan, SolverError> {
        StepPlan::new(self.h, self.t_end)
    }
}

fn is_known_key(key: &str) -> bool {
    matches!(key, "dim" | "t0" | "y0" | "t_end" | "h" | "method")
        || key.strip_prefix("rhs_").is_some_and(|i| !i.is_empty() && i.bytes().all(|b| b.is_ascii_digit()))
}

/// First variable that is neither `t` nor one of `y1..y{dim}`.
fn foreign_variable(e: &Expr, dim: usize) -> Option<(String, usize)> {
    match &e.kind {
        ExprKind::Number { .. } => None,
        ExprKind::Var(name) => {
            let ok = name == "t"
                || name
                    .strip_prefix('y')
                    .and_then(|i| i.parse::<usize>().ok())
                    .is_some_and(|i| (1..=dim).contains(&i) && !name.starts_with("y0"));
            (!ok).then(|| (name.clone(), e.pos))
        }
        ExprKind::Neg(c) | ExprKind::Call(_, c) => foreign_variable(c, dim),
        ExprKind::Binary(_, l, r) => foreign_variable(l, dim).or_else(|| foreign_variable(r, dim)),
    }
}
