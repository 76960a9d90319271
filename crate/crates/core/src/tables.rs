//! Rsine tables on the 225-arcminute grid, with difference columns and
//! second-difference interpolation.
//!
//! Entries are produced by integrating the sine/cosine system across the
//! quadrant; no library sine is called. Interpolation angles are in degrees,
//! where every grid node `k * 3.75` is an exact double.

use std::f64::consts::FRAC_PI_2;
use std::io::{self, Write};

use thiserror::Error;

use crate::functions::{make_sincos, FunctionError};
use crate::solver::{self, fmt_sci, Method, StepPlan};

pub const ENTRIES: usize = 24;
pub const STEP_ARCMIN: u32 = 225;
pub const STEP_DEG: f64 = 3.75;
pub const DEFAULT_RADIUS: f64 = 1e7;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("radius must be positive, got {0}")]
    Radius(f64),
    #[error("angle {0} deg outside [0, 90]")]
    Angle(f64),
    #[error(transparent)]
    Function(#[from] FunctionError),
    #[error(transparent)]
    Solver(#[from] solver::SolverError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SineTable {
    radius: f64,
    /// `values[k]` is the entry at `k` steps, `values[0] = 0`.
    values: Vec<f64>,
}

impl SineTable {
    /// Builds a table from the 24 entries at grid nodes 1..=24.
    ///
    /// Any function vanishing at 0 can be tabulated this way, which is how
    /// the interpolation formulas are checked on synthetic data.
    pub fn from_entries(radius: f64, entries: &[f64]) -> Self {
        assert_eq!(entries.len(), ENTRIES, "a table has {ENTRIES} entries");
        let mut values = Vec::with_capacity(ENTRIES + 1);
        values.push(0.0);
        values.extend_from_slice(entries);
        SineTable { radius, values }
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Entry `v_k` for `k` in `0..=24`.
    pub fn value(&self, k: usize) -> f64 {
        self.values[k]
    }

    pub fn entries(&self) -> &[f64] {
        &self.values[1..]
    }

    /// `Δ_k = v_k − v_{k−1}` for `k = 1..=24`.
    pub fn first_diffs(&self) -> Vec<f64> {
        self.values.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// `Δ²_k = Δ_{k+1} − Δ_k` for `k = 1..=23`.
    pub fn second_diffs(&self) -> Vec<f64> {
        self.first_diffs().windows(2).map(|w| w[1] - w[0]).collect()
    }

    fn locate(&self, theta_deg: f64) -> Result<(usize, f64), TableError> {
        if !(0.0..=90.0).contains(&theta_deg) {
            return Err(TableError::Angle(theta_deg));
        }
        let r = theta_deg / STEP_DEG;
        let j = (r.floor() as usize).min(ENTRIES);
        Ok((j, r - j as f64))
    }

    /// Second-difference (quadratic) interpolation.
    ///
    /// With `x0` the grid node at or below θ and `t ∈ [0, 1)` the fraction of
    /// a step past it: `v(x0) + t (Δp + Δn)/2 + t² (Δn − Δp)/2`, where `Δp`
    /// ends at `x0` and `Δn` starts there. On the first interval `Δp` is the
    /// first difference (sine is odd, so `v_{-1} = -v_1`); on the last
    /// interval the rule falls back to linear.
    pub fn brahmagupta_interp(&self, theta_deg: f64) -> Result<f64, TableError> {
        let (j, t) = self.locate(theta_deg)?;
        if j == ENTRIES {
            return Ok(self.values[ENTRIES]);
        }
        if j == ENTRIES - 1 {
            return Ok(self.linear_at(j, t));
        }
        let v = &self.values;
        let dn = v[j + 1] - v[j];
        let dp = if j == 0 { v[1] - v[0] } else { v[j] - v[j - 1] };
        Ok(v[j] + t * (dp + dn) / 2.0 + t * t * (dn - dp) / 2.0)
    }

    pub fn linear_interp(&self, theta_deg: f64) -> Result<f64, TableError> {
        let (j, t) = self.locate(theta_deg)?;
        if j == ENTRIES {
            return Ok(self.values[ENTRIES]);
        }
        Ok(self.linear_at(j, t))
    }

    fn linear_at(&self, j: usize, t: f64) -> f64 {
        self.values[j] + t * (self.values[j + 1] - self.values[j])
    }

    /// Rows `k,arcmin,value,diff1,diff2` for `k = 1..=24`. Numbers use 17
    /// significant digits, or `decimals` fixed places when given. The last
    /// row has no second difference and leaves that field empty.
    pub fn write_csv<W: Write>(&self, mut w: W, decimals: Option<usize>) -> io::Result<()> {
        let fmt = |x: f64| match decimals {
            Some(d) => format!("{x:.d$}"),
            None => fmt_sci(x),
        };
        let d1 = self.first_diffs();
        let d2 = self.second_diffs();
        writeln!(w, "k,arcmin,value,diff1,diff2")?;
        for k in 1..=ENTRIES {
            write!(
                w,
                "{k},{},{},{},",
                k as u32 * STEP_ARCMIN,
                fmt(self.values[k]),
                fmt(d1[k - 1])
            )?;
            if let Some(s) = d2.get(k - 1) {
                write!(w, "{}", fmt(*s))?;
            }
            writeln!(w)?;
        }
        Ok(())
    }
}

/// Integrates the sine/cosine system node to node across the quadrant and
/// scales the sine component by `radius`.
pub fn generate_table(radius: f64, method: Method, h: f64) -> Result<SineTable, TableError> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(TableError::Radius(radius));
    }
    let (sin, _) = make_sincos();
    let ivp = sin.ivp();
    let mut state = ivp.y0().to_vec();
    let mut angle = 0.0;
    let mut entries = Vec::with_capacity(ENTRIES);
    for k in 1..=ENTRIES {
        let next = FRAC_PI_2 * k as f64 / ENTRIES as f64;
        state = solver::advance(ivp, method, angle, &state, &StepPlan::new(h, next)?)?;
        angle = next;
        entries.push(radius * state[0]);
    }
    Ok(SineTable::from_entries(radius, &entries))
}
