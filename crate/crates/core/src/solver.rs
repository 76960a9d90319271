//! Initial-value problems and fixed-step explicit integrators.
//!
//! Two methods are provided: the first-order Euler recurrence
//! `y_{k+1} = y_k + h f(t_k, y_k)` and the classical four-stage Runge-Kutta
//! scheme. Steps are fixed; the final step is shortened so the last node
//! lands on `t_end` exactly. Integration toward an earlier `t_end` runs
//! backward with the same step magnitude.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::expr::{Env, Expr};

pub type RhsError = Box<dyn std::error::Error + Send + Sync>;

/// Right-hand side `f(t, y)`, written into the output slice.
pub type RhsFn = dyn Fn(f64, &[f64], &mut [f64]) -> Result<(), RhsError> + Send + Sync;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("initial state has length {found}, expected {dim}")]
    DimensionMismatch { dim: usize, found: usize },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("step size must be positive and finite, got {0}")]
    BadStep(f64),
    #[error("non-finite time {0}")]
    BadTime(f64),
    #[error("right-hand side failed at t = {t}: {source}")]
    Rhs { t: f64, source: RhsError },
    #[error("component {component} out of range for dimension {dim}")]
    Component { component: usize, dim: usize },
    #[error("malformed trajectory CSV at line {line}: {message}")]
    Csv { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Euler,
    #[default]
    Rk4,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Euler => "euler",
            Method::Rk4 => "rk4",
        })
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "euler" => Ok(Method::Euler),
            "rk4" => Ok(Method::Rk4),
            other => Err(format!("unknown method '{other}' (expected euler or rk4)")),
        }
    }
}

/// An initial-value problem `y' = f(t, y)`, `y(t0) = y0`.
#[derive(Clone)]
pub struct Ivp {
    dim: usize,
    rhs: Arc<RhsFn>,
    t0: f64,
    y0: Vec<f64>,
}

impl fmt::Debug for Ivp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ivp")
            .field("dim", &self.dim)
            .field("t0", &self.t0)
            .field("y0", &self.y0)
            .finish_non_exhaustive()
    }
}

impl Ivp {
    pub fn new<F>(t0: f64, y0: Vec<f64>, rhs: F) -> Result<Self, SolverError>
    where
        F: Fn(f64, &[f64], &mut [f64]) -> Result<(), RhsError> + Send + Sync + 'static,
    {
        if y0.is_empty() {
            return Err(SolverError::ZeroDimension);
        }
        if !t0.is_finite() {
            return Err(SolverError::BadTime(t0));
        }
        Ok(Ivp {
            dim: y0.len(),
            rhs: Arc::new(rhs),
            t0,
            y0,
        })
    }

    /// Infallible right-hand side, for native closures.
    pub fn native<F>(t0: f64, y0: Vec<f64>, rhs: F) -> Result<Self, SolverError>
    where
        F: Fn(f64, &[f64], &mut [f64]) + Send + Sync + 'static,
    {
        Ivp::new(t0, y0, move |t, y, dy| {
            rhs(t, y, dy);
            Ok(())
        })
    }

    /// Right-hand side given by one expression per component, over the
    /// variables `t` and `y1..yn`.
    pub fn from_exprs(t0: f64, y0: Vec<f64>, exprs: Vec<Expr>) -> Result<Self, SolverError> {
        if exprs.len() != y0.len() {
            return Err(SolverError::DimensionMismatch {
                dim: exprs.len(),
                found: y0.len(),
            });
        }
        Ivp::new(t0, y0, move |t, y, dy| {
            let env = StateEnv { t, y };
            for (out, e) in dy.iter_mut().zip(&exprs) {
                *out = e.eval(&env)?;
            }
            Ok(())
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn y0(&self) -> &[f64] {
        &self.y0
    }

    /// Same right-hand side, different initial condition.
    pub fn with_initial(&self, t0: f64, y0: Vec<f64>) -> Result<Self, SolverError> {
        if y0.len() != self.dim {
            return Err(SolverError::DimensionMismatch {
                dim: self.dim,
                found: y0.len(),
            });
        }
        Ok(Ivp {
            dim: self.dim,
            rhs: Arc::clone(&self.rhs),
            t0,
            y0,
        })
    }

    pub fn eval_rhs(&self, t: f64, y: &[f64], dy: &mut [f64]) -> Result<(), SolverError> {
        (self.rhs)(t, y, dy).map_err(|source| SolverError::Rhs { t, source })
    }
}

/// Binds `t` and `y1..yn` for expression right-hand sides.
struct StateEnv<'a> {
    t: f64,
    y: &'a [f64],
}

impl Env for StateEnv<'_> {
    fn lookup(&self, name: &str) -> Option<f64> {
        if name == "t" {
            return Some(self.t);
        }
        let idx: usize = name.strip_prefix('y')?.parse().ok()?;
        self.y.get(idx.checked_sub(1)?).copied()
    }
}

/// Step magnitude and target time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepPlan {
    h: f64,
    t_end: f64,
}

impl StepPlan {
    pub fn new(h: f64, t_end: f64) -> Result<Self, SolverError> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(SolverError::BadStep(h));
        }
        if !t_end.is_finite() {
            return Err(SolverError::BadTime(t_end));
        }
        Ok(StepPlan { h, t_end })
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    /// Number of steps from `t0`; a span within 1e-12 relative of a whole
    /// number of steps is not given an extra sliver step.
    pub fn steps_from(&self, t0: f64) -> usize {
        let span = (self.t_end - t0).abs();
        if span == 0.0 {
            return 0;
        }
        let n = span / self.h;
        ((n * (1.0 - 1e-12)).ceil() as usize).max(1)
    }

    /// Node `k` of `steps`: `t0 + k h` in the direction of travel, with the
    /// last node pinned to `t_end`.
    fn node(&self, t0: f64, k: usize, steps: usize) -> f64 {
        if k == steps {
            self.t_end
        } else {
            let dir = if self.t_end >= t0 { 1.0 } else { -1.0 };
            t0 + dir * (k as f64) * self.h
        }
    }
}

struct Workspace {
    k1: Vec<f64>,
    k2: Vec<f64>,
    k3: Vec<f64>,
    k4: Vec<f64>,
    tmp: Vec<f64>,
}

impl Workspace {
    fn new(dim: usize) -> Self {
        Workspace {
            k1: vec![0.0; dim],
            k2: vec![0.0; dim],
            k3: vec![0.0; dim],
            k4: vec![0.0; dim],
            tmp: vec![0.0; dim],
        }
    }
}

/// One step of size `h` (signed) from `(t, y)`, updating `y` in place.
fn step(
    ivp: &Ivp,
    method: Method,
    t: f64,
    y: &mut [f64],
    h: f64,
    ws: &mut Workspace,
) -> Result<(), SolverError> {
    match method {
        Method::Euler => {
            ivp.eval_rhs(t, y, &mut ws.k1)?;
            for (yi, k) in y.iter_mut().zip(&ws.k1) {
                *yi += h * k;
            }
        }
        Method::Rk4 => {
            let half = 0.5 * h;
            ivp.eval_rhs(t, y, &mut ws.k1)?;
            for i in 0..y.len() {
                ws.tmp[i] = y[i] + half * ws.k1[i];
            }
            ivp.eval_rhs(t + half, &ws.tmp, &mut ws.k2)?;
            for i in 0..y.len() {
                ws.tmp[i] = y[i] + half * ws.k2[i];
            }
            ivp.eval_rhs(t + half, &ws.tmp, &mut ws.k3)?;
            for i in 0..y.len() {
                ws.tmp[i] = y[i] + h * ws.k3[i];
            }
            ivp.eval_rhs(t + h, &ws.tmp, &mut ws.k4)?;
            for i in 0..y.len() {
                y[i] += h / 6.0 * (ws.k1[i] + 2.0 * ws.k2[i] + 2.0 * ws.k3[i] + ws.k4[i]);
            }
        }
    }
    Ok(())
}

/// Integrates from `(t0, y)` along `plan`, calling `visit` at every node
/// including the first. Returns the final state.
fn drive<V>(
    ivp: &Ivp,
    method: Method,
    t0: f64,
    mut y: Vec<f64>,
    plan: &StepPlan,
    mut visit: V,
) -> Result<Vec<f64>, SolverError>
where
    V: FnMut(f64, &[f64]),
{
    let steps = plan.steps_from(t0);
    let mut ws = Workspace::new(ivp.dim);
    visit(t0, &y);
    let mut t = t0;
    for k in 1..=steps {
        let next = plan.node(t0, k, steps);
        step(ivp, method, t, &mut y, next - t, &mut ws)?;
        t = next;
        visit(t, &y);
    }
    Ok(y)
}

/// Ordered `(time, state)` samples of an integration.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    dim: usize,
    times: Vec<f64>,
    states: Vec<f64>,
}

impl Trajectory {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn state(&self, i: usize) -> &[f64] {
        &self.states[i * self.dim..(i + 1) * self.dim]
    }

    pub fn states(&self) -> impl Iterator<Item = &[f64]> {
        self.states.chunks_exact(self.dim)
    }

    pub fn component(&self, j: usize) -> impl Iterator<Item = f64> + '_ {
        self.states().map(move |s| s[j])
    }

    pub fn last_time(&self) -> f64 {
        *self.times.last().expect("trajectory has at least one node")
    }

    pub fn last_state(&self) -> &[f64] {
        self.state(self.len() - 1)
    }

    /// CSV with header `t,y1,...,yn`, values in round-trippable 17
    /// significant-digit scientific notation.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        write!(w, "t")?;
        for i in 1..=self.dim {
            write!(w, ",y{i}")?;
        }
        writeln!(w)?;
        for (t, s) in self.times.iter().zip(self.states()) {
            write!(w, "{}", fmt_sci(*t))?;
            for v in s {
                write!(w, ",{}", fmt_sci(*v))?;
            }
            writeln!(w)?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV is ASCII")
    }

    pub fn from_csv(text: &str) -> Result<Self, SolverError> {
        let mut lines = text.lines().enumerate();
        let bad = |line: usize, message: &str| SolverError::Csv {
            line: line + 1,
            message: message.to_string(),
        };
        let (_, header) = lines.next().ok_or_else(|| bad(0, "empty input"))?;
        let cols: Vec<&str> = header.split(',').collect();
        if cols.first() != Some(&"t") || cols.len() < 2 {
            return Err(bad(0, "header must start with t and name at least one state"));
        }
        let dim = cols.len() - 1;
        let mut times = Vec::new();
        let mut states = Vec::new();
        for (n, line) in lines {
            if line.is_empty() {
                continue;
            }
            let vals: Result<Vec<f64>, _> = line.split(',').map(str::parse).collect();
            let vals = vals.map_err(|_| bad(n, "unparseable number"))?;
            if vals.len() != dim + 1 {
                return Err(bad(n, "wrong column count"));
            }
            times.push(vals[0]);
            states.extend_from_slice(&vals[1..]);
        }
        if times.is_empty() {
            return Err(bad(0, "no rows"));
        }
        Ok(Trajectory { dim, times, states })
    }
}

/// 17 significant digits in scientific notation; parses back to the same
/// double.
pub fn fmt_sci(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn integrate(ivp: &Ivp, plan: &StepPlan, method: Method) -> Result<Trajectory, SolverError> {
    let steps = plan.steps_from(ivp.t0);
    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity((steps + 1) * ivp.dim);
    drive(ivp, method, ivp.t0, ivp.y0.clone(), plan, |t, y| {
        times.push(t);
        states.extend_from_slice(y);
    })?;
    Ok(Trajectory {
        dim: ivp.dim,
        times,
        states,
    })
}

pub fn integrate_euler(ivp: &Ivp, plan: &StepPlan) -> Result<Trajectory, SolverError> {
    integrate(ivp, plan, Method::Euler)
}

pub fn integrate_rk4(ivp: &Ivp, plan: &StepPlan) -> Result<Trajectory, SolverError> {
    integrate(ivp, plan, Method::Rk4)
}

/// Streaming integration: only the final state is kept.
pub fn integrate_final(ivp: &Ivp, plan: &StepPlan, method: Method) -> Result<Vec<f64>, SolverError> {
    drive(ivp, method, ivp.t0, ivp.y0.clone(), plan, |_, _| {})
}

/// Integrates from an arbitrary `(t, y)` with the problem's right-hand side.
pub fn advance(
    ivp: &Ivp,
    method: Method,
    t: f64,
    y: &[f64],
    plan: &StepPlan,
) -> Result<Vec<f64>, SolverError> {
    if y.len() != ivp.dim {
        return Err(SolverError::DimensionMismatch {
            dim: ivp.dim,
            found: y.len(),
        });
    }
    drive(ivp, method, t, y.to_vec(), plan, |_, _| {})
}

/// A refined sign change of one state component.
#[derive(Debug, Clone, PartialEq)]
pub struct Crossing {
    pub t: f64,
    pub state: Vec<f64>,
}

const CROSSING_TOL: f64 = 1e-10;
const CROSSING_MAX_ITER: usize = 60;

/// Sign changes of `component` along `traj`, each refined by bisection.
///
/// Every bisection probe re-integrates a single step from the bracketing
/// node, so the step shrinks with the bracket. A node that is exactly zero
/// is itself a crossing and ends the current sign run; a zero before any
/// nonzero value (such as the initial node of `sin`) is not a crossing.
pub fn refine_crossings(
    traj: &Trajectory,
    component: usize,
    ivp: &Ivp,
    method: Method,
) -> Result<Vec<Crossing>, SolverError> {
    if component >= traj.dim {
        return Err(SolverError::Component {
            component,
            dim: traj.dim,
        });
    }
    let mut out = Vec::new();
    let mut ws = Workspace::new(ivp.dim);
    // sign of the current run, None before the first nonzero value or
    // right after a zero node
    let mut run: Option<bool> = None;
    for i in 0..traj.len() {
        let v = traj.state(i)[component];
        if v == 0.0 {
            if run.is_some() {
                out.push(Crossing {
                    t: traj.times[i],
                    state: traj.state(i).to_vec(),
                });
            }
            run = None;
            continue;
        }
        let positive = v > 0.0;
        if run.is_some_and(|prev| prev != positive) {
            out.push(bisect(traj, i - 1, component, ivp, method, &mut ws)?);
        }
        run = Some(positive);
    }
    Ok(out)
}

fn bisect(
    traj: &Trajectory,
    i: usize,
    component: usize,
    ivp: &Ivp,
    method: Method,
    ws: &mut Workspace,
) -> Result<Crossing, SolverError> {
    let t_node = traj.times[i];
    let y_node = traj.state(i);
    let left_positive = y_node[component] > 0.0;
    let (mut a, mut b) = (t_node, traj.times[i + 1]);
    let mut probe = y_node.to_vec();
    let mut eval_at = |tau: f64, out: &mut Vec<f64>| -> Result<(), SolverError> {
        out.copy_from_slice(y_node);
        if tau != t_node {
            step(ivp, method, t_node, out, tau - t_node, ws)?;
        }
        Ok(())
    };
    for _ in 0..CROSSING_MAX_ITER {
        if (b - a).abs() < CROSSING_TOL {
            break;
        }
        let mid = 0.5 * (a + b);
        eval_at(mid, &mut probe)?;
        let v = probe[component];
        if v == 0.0 {
            a = mid;
            b = mid;
            break;
        }
        if (v > 0.0) == left_positive {
            a = mid;
        } else {
            b = mid;
        }
    }
    let t = 0.5 * (a + b);
    eval_at(t, &mut probe)?;
    Ok(Crossing { t, state: probe })
}

/// Refined crossing times of `component` along `traj`.
pub fn find_zero_crossings(
    traj: &Trajectory,
    component: usize,
    ivp: &Ivp,
    method: Method,
) -> Result<Vec<f64>, SolverError> {
    Ok(refine_crossings(traj, component, ivp, method)?
        .into_iter()
        .map(|c| c.t)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn growth() -> Ivp {
        Ivp::native(0.0, vec![1.0], |_, y, dy| dy[0] = y[0]).unwrap()
    }

    #[test]
    fn euler_matches_closed_form_recurrence() {
        let traj = integrate_euler(&growth(), &StepPlan::new(0.1, 1.0).unwrap()).unwrap();
        assert_eq!(traj.len(), 11);
        let oracle = (0..10).fold(1.0f64, |acc, _| acc * 1.1);
        let last = traj.last_state()[0];
        assert!((last - oracle).abs() < 1e-12, "{last} vs {oracle}");
        assert!((last - 2.5937424601).abs() < 1e-12);
    }

    #[test]
    fn constant_rhs_cases() {
        let zero = Ivp::native(0.0, vec![3.5], |_, _, dy| dy[0] = 0.0).unwrap();
        let traj = integrate_euler(&zero, &StepPlan::new(0.3, 2.0).unwrap()).unwrap();
        assert!(traj.component(0).all(|v| v == 3.5));

        let unit = Ivp::native(0.0, vec![0.0], |_, _, dy| dy[0] = 1.0).unwrap();
        for h in [0.1, 0.07, 0.013] {
            let traj = integrate_euler(&unit, &StepPlan::new(h, 3.0).unwrap()).unwrap();
            for (t, s) in traj.times().iter().zip(traj.states()) {
                assert!((s[0] - t).abs() <= 1e-12 * 3.0, "h={h} t={t}");
            }
        }
    }

    #[test]
    fn rk4_examples() {
        let e = limitless_oracle::e();
        let pi = limitless_oracle::pi();
        let y = integrate_final(&growth(), &StepPlan::new(0.1, 1.0).unwrap(), Method::Rk4).unwrap();
        assert!((y[0] - e).abs() < 1e-5);

        let decay = Ivp::native(0.0, vec![1.0], |_, y, dy| dy[0] = -y[0] * y[0]).unwrap();
        let y = integrate_final(&decay, &StepPlan::new(1e-3, 1.0).unwrap(), Method::Rk4).unwrap();
        assert!((y[0] - 0.5).abs() < 1e-9);

        let cosine = Ivp::native(0.0, vec![0.0], |t, _, dy| dy[0] = t.cos()).unwrap();
        let y = integrate_final(&cosine, &StepPlan::new(1e-3, pi).unwrap(), Method::Rk4).unwrap();
        assert!(y[0].abs() < 1e-9);
    }

    #[test]
    fn last_node_is_t_end() {
        for (h, t_end) in [(0.1, 1.0), (0.3, 1.0), (1e-3, std::f64::consts::PI), (0.25, -1.3)] {
            let traj = integrate_rk4(&growth(), &StepPlan::new(h, t_end).unwrap()).unwrap();
            assert_eq!(traj.last_time(), t_end);
            let ts = traj.times();
            let forward = t_end > 0.0;
            assert!(ts.windows(2).all(|w| if forward { w[1] > w[0] } else { w[1] < w[0] }));
        }
    }

    #[test]
    fn zero_span_is_a_single_node() {
        let traj = integrate_rk4(&growth(), &StepPlan::new(0.1, 0.0).unwrap()).unwrap();
        assert_eq!(traj.len(), 1);
        assert_eq!(traj.last_state(), &[1.0]);
    }

    #[test]
    fn bad_plans_rejected() {
        assert!(matches!(StepPlan::new(0.0, 1.0), Err(SolverError::BadStep(_))));
        assert!(matches!(StepPlan::new(-1.0, 1.0), Err(SolverError::BadStep(_))));
        assert!(matches!(StepPlan::new(f64::NAN, 1.0), Err(SolverError::BadStep(_))));
        assert!(matches!(StepPlan::new(0.1, f64::INFINITY), Err(SolverError::BadTime(_))));
    }

    #[test]
    fn rhs_failure_reports_time() {
        let ivp = Ivp::from_exprs(0.0, vec![1.0], vec![parse("sqrt(1 - t)").unwrap()]).unwrap();
        let err = integrate_euler(&ivp, &StepPlan::new(0.25, 2.0).unwrap()).unwrap_err();
        match err {
            SolverError::Rhs { t, .. } => assert_eq!(t, 1.25),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn expression_rhs_uses_t_and_y() {
        let ivp = Ivp::from_exprs(
            0.0,
            vec![0.0, 1.0],
            vec![parse("y2").unwrap(), parse("-y1").unwrap()],
        )
        .unwrap();
        let y = integrate_final(&ivp, &StepPlan::new(1e-3, 1.0).unwrap(), Method::Rk4).unwrap();
        assert!((y[0] - 1f64.sin()).abs() < 1e-12);
        assert!(Ivp::from_exprs(0.0, vec![0.0], vec![]).is_err());
    }

    #[test]
    fn crossings_of_sine() {
        let pi = limitless_oracle::pi();
        let ivp = Ivp::native(0.0, vec![0.0], |t, _, dy| dy[0] = t.cos()).unwrap();
        let traj = integrate_rk4(&ivp, &StepPlan::new(1e-3, 4.0).unwrap()).unwrap();
        let zs = find_zero_crossings(&traj, 0, &ivp, Method::Rk4).unwrap();
        assert_eq!(zs.len(), 1);
        assert!((zs[0] - pi).abs() < 1e-8);
    }

    #[test]
    fn no_crossings_for_positive_component() {
        let ivp = Ivp::native(0.0, vec![2.0], |_, _, dy| dy[0] = 0.5).unwrap();
        let traj = integrate_rk4(&ivp, &StepPlan::new(0.1, 3.0).unwrap()).unwrap();
        assert!(find_zero_crossings(&traj, 0, &ivp, Method::Rk4).unwrap().is_empty());
        assert!(matches!(
            find_zero_crossings(&traj, 1, &ivp, Method::Rk4),
            Err(SolverError::Component { .. })
        ));
    }

    #[test]
    fn zero_node_counts_once() {
        // y = t - 1 hits zero exactly on the node t = 1
        let ivp = Ivp::native(0.0, vec![-1.0], |_, _, dy| dy[0] = 1.0).unwrap();
        let traj = integrate_euler(&ivp, &StepPlan::new(0.25, 2.0).unwrap()).unwrap();
        assert_eq!(traj.state(4)[0], 0.0);
        let zs = find_zero_crossings(&traj, 0, &ivp, Method::Euler).unwrap();
        assert_eq!(zs, [1.0]);
    }

    #[test]
    fn csv_round_trip() {
        let ivp = Ivp::native(0.0, vec![1.0, 0.0], |_, y, dy| {
            dy[0] = -y[1];
            dy[1] = y[0];
        })
        .unwrap();
        let traj = integrate_rk4(&ivp, &StepPlan::new(0.1, 1.0).unwrap()).unwrap();
        let csv = traj.to_csv();
        assert!(csv.starts_with("t,y1,y2\n"));
        assert_eq!(Trajectory::from_csv(&csv).unwrap(), traj);
        assert!(Trajectory::from_csv("x,y\n").is_err());
        assert!(Trajectory::from_csv("t,y1\n1,2,3\n").is_err());
    }
}
