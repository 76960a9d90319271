//! Functions defined as solutions of initial-value problems.
//!
//! Each [`OdeFunction`] is an IVP plus the component that carries the
//! function value. Evaluating at `x` integrates from `t0` to `x`, backward
//! when `x < t0`.

use std::f64::consts::FRAC_PI_2;

use thiserror::Error;

use crate::solver::{self, Ivp, Method, SolverError, StepPlan, Trajectory};

#[derive(Debug, Error)]
pub enum FunctionError {
    #[error("modulus k = {0} outside [0, 1]")]
    Modulus(f64),
    #[error("{name}: argument {x} outside the open interval (-{bound}, {bound})")]
    Domain { name: String, x: f64, bound: f64 },
    #[error("unknown function '{0}'")]
    Unknown(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

pub const DEFAULT_H: f64 = 1e-3;

#[derive(Debug, Clone)]
pub struct OdeFunction {
    name: String,
    ivp: Ivp,
    output: usize,
    default_method: Method,
    default_h: f64,
    /// Arguments must satisfy |x - t0| < bound.
    bound: Option<f64>,
}

impl OdeFunction {
    pub fn new(name: &str, ivp: Ivp, output: usize) -> Self {
        assert!(output < ivp.dim(), "output component out of range");
        OdeFunction {
            name: name.to_string(),
            ivp,
            output,
            default_method: Method::Rk4,
            default_h: DEFAULT_H,
            bound: None,
        }
    }

    pub fn with_defaults(mut self, method: Method, h: f64) -> Self {
        self.default_method = method;
        self.default_h = h;
        self
    }

    fn with_bound(mut self, bound: f64) -> Self {
        self.bound = Some(bound);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ivp(&self) -> &Ivp {
        &self.ivp
    }

    pub fn output(&self) -> usize {
        self.output
    }

    pub fn default_h(&self) -> f64 {
        self.default_h
    }

    fn check_domain(&self, x: f64) -> Result<(), FunctionError> {
        match self.bound {
            Some(bound) if !((x - self.ivp.t0()).abs() < bound) => Err(FunctionError::Domain {
                name: self.name.clone(),
                x,
                bound,
            }),
            _ => Ok(()),
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64, FunctionError> {
        self.eval_with(x, self.default_method, self.default_h)
    }

    pub fn eval_with(&self, x: f64, method: Method, h: f64) -> Result<f64, FunctionError> {
        self.check_domain(x)?;
        if x == self.ivp.t0() {
            return Ok(self.ivp.y0()[self.output]);
        }
        let y = solver::integrate_final(&self.ivp, &StepPlan::new(h, x)?, method)?;
        Ok(y[self.output])
    }

    /// All state components at `x`.
    pub fn state_at(&self, x: f64, method: Method, h: f64) -> Result<Vec<f64>, FunctionError> {
        self.check_domain(x)?;
        Ok(solver::integrate_final(&self.ivp, &StepPlan::new(h, x)?, method)?)
    }

    pub fn trajectory(&self, x: f64, method: Method, h: f64) -> Result<Trajectory, FunctionError> {
        self.check_domain(x)?;
        Ok(solver::integrate(&self.ivp, &StepPlan::new(h, x)?, method)?)
    }
}

/// `y' = y`, `y(0) = 1`.
pub fn make_exp() -> OdeFunction {
    let ivp = Ivp::native(0.0, vec![1.0], |_, y, dy| dy[0] = y[0]).unwrap();
    OdeFunction::new("exp", ivp, 0)
}

fn circular_ivp() -> Ivp {
    Ivp::native(0.0, vec![0.0, 1.0], |_, y, dy| {
        dy[0] = y[1];
        dy[1] = -y[0];
    })
    .unwrap()
}

/// `(s, c)' = (c, -s)`, `(s, c)(0) = (0, 1)`; returns `(sin, cos)`.
pub fn make_sincos() -> (OdeFunction, OdeFunction) {
    let ivp = circular_ivp();
    (
        OdeFunction::new("sin", ivp.clone(), 0),
        OdeFunction::new("cos", ivp, 1),
    )
}

/// Jacobi elliptic functions of modulus `k` as `(sn, cn, dn)`:
/// `sn' = cn dn`, `cn' = -sn dn`, `dn' = -k² sn cn`, from `(0, 1, 1)`.
pub fn make_jacobi(k: f64) -> Result<(OdeFunction, OdeFunction, OdeFunction), FunctionError> {
    if !(0.0..=1.0).contains(&k) {
        return Err(FunctionError::Modulus(k));
    }
    let k2 = k * k;
    let ivp = Ivp::native(0.0, vec![0.0, 1.0, 1.0], move |_, y, dy| {
        dy[0] = y[1] * y[2];
        dy[1] = -y[0] * y[2];
        dy[2] = -k2 * y[0] * y[1];
    })?;
    Ok((
        OdeFunction::new("sn", ivp.clone(), 0),
        OdeFunction::new("cn", ivp.clone(), 1),
        OdeFunction::new("dn", ivp, 2),
    ))
}

/// Inverse Gudermannian (meridional parts): `y' = 1/cos t`, `y(0) = 0`,
/// defined for |φ| < π/2.
pub fn make_inv_gudermannian() -> OdeFunction {
    let ivp = Ivp::native(0.0, vec![0.0], |t, _, dy| dy[0] = 1.0 / t.cos()).unwrap();
    OdeFunction::new("invgd", ivp, 0).with_bound(FRAC_PI_2)
}

/// Looks a function up by its command-line name. `k` is the elliptic
/// modulus, ignored for the circular and exponential functions.
pub fn by_name(name: &str, k: f64) -> Result<OdeFunction, FunctionError> {
    match name {
        "exp" => Ok(make_exp()),
        "sin" => Ok(make_sincos().0),
        "cos" => Ok(make_sincos().1),
        "sn" => Ok(make_jacobi(k)?.0),
        "cn" => Ok(make_jacobi(k)?.1),
        "dn" => Ok(make_jacobi(k)?.2),
        "invgd" => Ok(make_inv_gudermannian()),
        other => Err(FunctionError::Unknown(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use limitless_oracle as oracle;

    #[test]
    fn exp_values() {
        let f = make_exp();
        assert_eq!(f.eval(0.0).unwrap(), 1.0);
        let e = oracle::e();
        assert!((f.eval_with(1.0, Method::Rk4, 1e-3).unwrap() - e).abs() < 1e-9);
        assert!((f.eval_with(-1.0, Method::Rk4, 1e-3).unwrap() - 1.0 / e).abs() < 1e-9);
    }

    #[test]
    fn sincos_values() {
        let (sin, cos) = make_sincos();
        assert_eq!(sin.eval(0.0).unwrap(), 0.0);
        assert_eq!(cos.eval(0.0).unwrap(), 1.0);
        let pi = oracle::pi();
        let s = sin.eval_with(pi / 6.0, Method::Rk4, 1e-4).unwrap();
        assert!((s - 0.5).abs() < 1e-9);
        let st = sin.state_at(2.7, Method::Rk4, 1e-3).unwrap();
        assert!((st[0] * st[0] + st[1] * st[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn jacobi_degenerate_moduli() {
        let (sn0, ..) = make_jacobi(0.0).unwrap();
        for u in [0.3, 1.0, 2.0] {
            let v = sn0.eval_with(u, Method::Rk4, 1e-4).unwrap();
            assert!((v - u.sin()).abs() < 1e-8, "u = {u}");
        }
        let (sn1, ..) = make_jacobi(1.0).unwrap();
        for u in [0.5, 1.5] {
            let v = sn1.eval_with(u, Method::Rk4, 1e-4).unwrap();
            assert!((v - u.tanh()).abs() < 1e-8, "u = {u}");
        }
    }

    #[test]
    fn jacobi_identities() {
        let k = 0.6;
        let (sn, ..) = make_jacobi(k).unwrap();
        let y = sn.state_at(1.2, Method::Rk4, 1e-3).unwrap();
        let (s, c, d) = (y[0], y[1], y[2]);
        assert!((s * s + c * c - 1.0).abs() < 1e-9);
        assert!((d * d + k * k * s * s - 1.0).abs() < 1e-9);
    }

    #[test]
    fn jacobi_rejects_bad_modulus() {
        assert!(matches!(make_jacobi(1.5), Err(FunctionError::Modulus(_))));
        assert!(matches!(make_jacobi(-0.1), Err(FunctionError::Modulus(_))));
        assert!(matches!(make_jacobi(f64::NAN), Err(FunctionError::Modulus(_))));
    }

    #[test]
    fn inverse_gudermannian() {
        let f = make_inv_gudermannian();
        assert_eq!(f.eval(0.0).unwrap(), 0.0);
        let pi = oracle::pi();
        let v = f.eval_with(pi / 3.0, Method::Rk4, 1e-5).unwrap();
        assert!((v - (5.0 * pi / 12.0).tan().ln()).abs() < 1e-8);
        let a = f.eval(0.7).unwrap();
        let b = f.eval(-0.7).unwrap();
        assert!((a + b).abs() < 1e-9);
        assert!(matches!(f.eval(FRAC_PI_2), Err(FunctionError::Domain { .. })));
        assert!(matches!(f.eval(-2.0), Err(FunctionError::Domain { .. })));
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(by_name("cn", 0.5).unwrap().output(), 1);
        assert!(matches!(by_name("gamma", 0.0), Err(FunctionError::Unknown(_))));
        assert!(by_name("sn", 2.0).is_err());
    }

    #[test]
    fn trajectory_ends_at_argument() {
        let traj = make_exp().trajectory(-0.5, Method::Euler, 0.1).unwrap();
        assert_eq!(traj.last_time(), -0.5);
        assert_eq!(traj.len(), 6);
    }
}
