use std::f64::consts::FRAC_PI_2;

use super::AppError;
use crate::solver::{self, Ivp, Method, StepPlan, Trajectory};

/// Point projectile with quadratic drag `F = −c |v| v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallisticsSpec {
    pub mass: f64,
    /// Quadratic drag coefficient (kg/m); zero is the vacuum case.
    pub drag: f64,
    pub speed: f64,
    /// Launch angle above the horizontal, radians.
    pub angle: f64,
    pub gravity: f64,
}

impl BallisticsSpec {
    pub fn new(mass: f64, drag: f64, speed: f64, angle: f64, gravity: f64) -> Result<Self, AppError> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(AppError::Parameter(format!("{name} must be positive, got {v}")))
            }
        };
        positive("mass", mass)?;
        positive("speed", speed)?;
        positive("g", gravity)?;
        if !(drag >= 0.0 && drag.is_finite()) {
            return Err(AppError::Parameter(format!("drag must be non-negative, got {drag}")));
        }
        if !(angle > 0.0 && angle < FRAC_PI_2) {
            return Err(AppError::Parameter(format!(
                "launch angle must lie in (0, pi/2), got {angle}"
            )));
        }
        Ok(BallisticsSpec {
            mass,
            drag,
            speed,
            angle,
            gravity,
        })
    }

    fn ivp(&self) -> Ivp {
        let beta = self.drag / self.mass;
        let g = self.gravity;
        let y0 = vec![
            0.0,
            0.0,
            self.speed * self.angle.cos(),
            self.speed * self.angle.sin(),
        ];
        Ivp::native(0.0, y0, move |_, s, ds| {
            let v = s[2].hypot(s[3]);
            ds[0] = s[2];
            ds[1] = s[3];
            ds[2] = -beta * v * s[2];
            ds[3] = -g - beta * v * s[3];
        })
        .expect("four-component state")
    }

    /// Kinetic plus potential energy of a state `(x, y, vx, vy)`.
    pub fn energy(&self, state: &[f64]) -> f64 {
        0.5 * self.mass * (state[2] * state[2] + state[3] * state[3])
            + self.mass * self.gravity * state[1]
    }
}

/// v0² sin 2α / g.
pub fn vacuum_range(spec: &BallisticsSpec) -> f64 {
    spec.speed * spec.speed * (2.0 * spec.angle).sin() / spec.gravity
}

#[derive(Debug, Clone)]
pub struct Flight {
    pub range: f64,
    pub flight_time: f64,
    /// Nodes from launch up to the refined landing time.
    pub trajectory: Trajectory,
}

/// Integrates the flight and locates the landing (descending zero of the
/// height) by refined zero crossing.
pub fn ballistics_trajectory(spec: &BallisticsSpec, h: f64) -> Result<Flight, AppError> {
    let ivp = spec.ivp();
    // drag only shortens the vacuum flight time
    let mut window = 1.25 * 2.0 * spec.speed * spec.angle.sin() / spec.gravity;
    for _ in 0..20 {
        let traj = solver::integrate(&ivp, &StepPlan::new(h, window)?, Method::Rk4)?;
        let crossings = solver::refine_crossings(&traj, 1, &ivp, Method::Rk4)?;
        if let Some(land) = crossings.into_iter().next() {
            let trajectory = solver::integrate(&ivp, &StepPlan::new(h, land.t)?, Method::Rk4)?;
            return Ok(Flight {
                range: land.state[0],
                flight_time: land.t,
                trajectory,
            });
        }
        window *= 2.0;
    }
    Err(AppError::NoEvent("landing"))
}

pub fn ballistics_range(spec: &BallisticsSpec, h: f64) -> Result<f64, AppError> {
    Ok(ballistics_trajectory(spec, h)?.range)
}
