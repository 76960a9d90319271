use std::f64::consts::FRAC_PI_2;

use super::AppError;
use crate::solver::{self, Ivp, Method, StepPlan};

/// Step used for the elliptic quadratures.
pub const ELLIPTIC_H: f64 = 1e-5;

/// Incomplete elliptic integral of the first kind,
/// F(φ, k) = ∫₀^φ dθ / √(1 − k² sin² θ), integrated as the ODE
/// `y' = 1/√(1 − k² sin² θ)`, `y(0) = 0`.
pub fn elliptic_f(phi: f64, k: f64) -> Result<f64, AppError> {
    if !(0.0..1.0).contains(&k) {
        return Err(AppError::Domain(format!(
            "elliptic modulus k = {k} outside [0, 1)"
        )));
    }
    if !(0.0..=FRAC_PI_2).contains(&phi) {
        return Err(AppError::Domain(format!("amplitude phi = {phi} outside [0, pi/2]")));
    }
    let k2 = k * k;
    let ivp = Ivp::native(0.0, vec![0.0], move |t, _, dy| {
        let s = t.sin();
        dy[0] = 1.0 / (1.0 - k2 * s * s).sqrt();
    })?;
    let y = solver::integrate_final(&ivp, &StepPlan::new(ELLIPTIC_H, phi)?, Method::Rk4)?;
    Ok(y[0])
}

/// Complete elliptic integral of the first kind, K(k) = F(π/2, k).
pub fn elliptic_k(k: f64) -> Result<f64, AppError> {
    elliptic_f(FRAC_PI_2, k)
}
