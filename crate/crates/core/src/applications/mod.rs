//! Worked problems: pendulum period, ballistics with drag, elliptic
//! integrals, rectification of curves and rhumb-line navigation.

mod ballistics;
mod elliptic;
mod navigation;
mod pendulum;
mod rectify;

pub use ballistics::{ballistics_range, ballistics_trajectory, vacuum_range, BallisticsSpec, Flight};
pub use elliptic::{elliptic_f, elliptic_k, ELLIPTIC_H};
pub use navigation::{loxodrome, meridional_parts, GeoPoint, Rhumb, EARTH_RADIUS};
pub use pendulum::{pendulum_period_elliptic, pendulum_period_ode, small_angle_period, PendulumSpec};
pub use rectify::{rectify, unit_circle};

use thiserror::Error;

use crate::functions::FunctionError;
use crate::solver::SolverError;

#[derive(Debug, Error)]
pub enum AppError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("{0}")]
    Domain(String),
    #[error("no {0} found within the integration window")]
    NoEvent(&'static str),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Function(#[from] FunctionError),
}
