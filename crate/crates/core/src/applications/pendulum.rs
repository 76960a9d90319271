use std::f64::consts::PI;

use super::{elliptic_k, AppError};
use crate::solver::{self, Ivp, Method, StepPlan};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PendulumSpec {
    pub length: f64,
    pub gravity: f64,
    /// Initial amplitude in radians, released from rest.
    pub theta0: f64,
}

impl PendulumSpec {
    pub fn new(length: f64, gravity: f64, theta0: f64) -> Result<Self, AppError> {
        if !(length > 0.0 && length.is_finite()) {
            return Err(AppError::Parameter(format!("length must be positive, got {length}")));
        }
        if !(gravity > 0.0 && gravity.is_finite()) {
            return Err(AppError::Parameter(format!("g must be positive, got {gravity}")));
        }
        if !(theta0 > 0.0 && theta0 < PI) {
            return Err(AppError::Parameter(format!(
                "amplitude must lie in (0, pi), got {theta0}"
            )));
        }
        Ok(PendulumSpec {
            length,
            gravity,
            theta0,
        })
    }
}

/// 2π√(L/g).
pub fn small_angle_period(spec: &PendulumSpec) -> f64 {
    2.0 * PI * (spec.length / spec.gravity).sqrt()
}

/// Period measured by integrating θ'' = −(g/L) sin θ from rest at θ0.
///
/// The angular velocity vanishes at each turning point; twice the gap
/// between the first two refined turning points is the full period.
pub fn pendulum_period_ode(spec: &PendulumSpec, h: f64) -> Result<f64, AppError> {
    let w2 = spec.gravity / spec.length;
    let ivp = Ivp::native(0.0, vec![spec.theta0, 0.0], move |_, y, dy| {
        dy[0] = y[1];
        dy[1] = -w2 * y[0].sin();
    })?;
    let mut window = 2.0 * small_angle_period(spec);
    // the period diverges as θ0 → π; widen until two turning points show up
    for _ in 0..40 {
        let traj = solver::integrate(&ivp, &StepPlan::new(h, window)?, Method::Rk4)?;
        let turns = solver::find_zero_crossings(&traj, 1, &ivp, Method::Rk4)?;
        if let [first, second, ..] = turns[..] {
            return Ok(2.0 * (second - first));
        }
        window *= 2.0;
    }
    Err(AppError::NoEvent("turning point"))
}

/// T = 4√(L/g)·K(sin(θ0/2)).
pub fn pendulum_period_elliptic(spec: &PendulumSpec) -> Result<f64, AppError> {
    let k = (spec.theta0 / 2.0).sin();
    Ok(4.0 * (spec.length / spec.gravity).sqrt() * elliptic_k(k)?)
}
