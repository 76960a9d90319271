//! Reference values computed independently of the `limitless` crate.
//!
//! Nothing here calls into the product code. Transcendental values come
//! from exact rational series (truncated far below f64 resolution) or from
//! classical iterations (AGM) that the product never uses.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Thirty decimals of pi, produced by `fixtures/derive_pi.py`.
pub const PI_30: &str = include_str!("../fixtures/pi_30.txt");

/// The fixture value of pi, rounded to the nearest double.
pub fn pi() -> f64 {
    PI_30.trim().parse().expect("pi fixture is a decimal literal")
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// atan(1/x) by its alternating series, stopped once the term drops below `tol`.
fn atan_inv(x: i64, tol: &BigRational) -> BigRational {
    let x2 = BigInt::from(x * x);
    let mut power = rat(1, x);
    let mut sum = BigRational::zero();
    let mut n = 0i64;
    loop {
        let term = &power / BigInt::from(2 * n + 1);
        if term.abs() < *tol {
            return sum;
        }
        if n % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= x2.clone();
        n += 1;
    }
}

/// Pi as an exact rational within 1e-45, from Machin's formula.
pub fn pi_machin() -> BigRational {
    static PI: OnceLock<BigRational> = OnceLock::new();
    PI.get_or_init(|| {
        let tol = BigRational::new(BigInt::one(), BigInt::from(10).pow(48));
        let pi = atan_inv(5, &tol) * BigInt::from(16) - atan_inv(239, &tol) * BigInt::from(4);
        // keep the denominator small for downstream series
        let scale = BigInt::from(10).pow(50);
        BigRational::new((pi * &scale).round().to_integer(), scale)
    })
    .clone()
}

/// Decimal expansion of a nonnegative rational, truncated to `digits` places.
pub fn to_decimal(x: &BigRational, digits: u32) -> String {
    let scaled = (x * BigInt::from(10).pow(digits)).floor().to_integer();
    let s = scaled.to_string();
    let split = s.len() - digits as usize;
    format!("{}.{}", &s[..split], &s[split..])
}

/// e = sum of 1/n! for n < 20, exactly, then rounded to a double.
pub fn e() -> f64 {
    let mut sum = BigRational::zero();
    let mut fact = BigInt::one();
    for n in 0..20u32 {
        if n > 0 {
            fact *= n;
        }
        sum += BigRational::new(BigInt::one(), fact.clone());
    }
    sum.to_f64().unwrap()
}

/// sin(k * 225 arcminutes) for the 24-entry grid, to ~40 digits.
///
/// The Taylor series runs in 60-digit fixed point on integers.
pub fn sin_grid(k: u32) -> f64 {
    let scale = BigInt::from(10).pow(60);
    let x = (pi_machin() * &scale * BigInt::from(k) / BigInt::from(48))
        .round()
        .to_integer();
    let x2 = &x * &x / &scale;
    let mut term = x;
    let mut sum = BigInt::zero();
    let mut n = 0i64;
    while !term.is_zero() {
        sum += &term;
        term = -(&term * &x2 / &scale) / BigInt::from((2 * n + 2) * (2 * n + 3));
        n += 1;
    }
    BigRational::new(sum, scale).to_f64().unwrap()
}

/// sin(x) for |x| <= pi/2 by a Taylor series summed in doubles.
///
/// Accurate to a few ulps; used for dense sweeps where the exact rational
/// series would be too slow.
pub fn sin_f64(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut n = 0;
    while term.abs() > 1e-30 {
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        term = -term * x2 / (((2 * n + 2) * (2 * n + 3)) as f64);
        n += 1;
    }
    sum
}

/// sin(22.5 deg) = sqrt(2 - sqrt 2) / 2, from integer square roots at 40 digits.
pub fn sin_22_5_surd() -> f64 {
    let scale = BigInt::from(10).pow(40);
    let sqrt2 = (BigInt::from(2) * &scale * &scale).sqrt();
    let inner = (BigInt::from(2) * &scale - sqrt2) * &scale;
    let root = inner.sqrt();
    BigRational::new(root, scale * BigInt::from(2)).to_f64().unwrap()
}

/// Complete elliptic integral K(k) = pi / (2 AGM(1, sqrt(1 - k^2))).
pub fn agm_k(k: f64) -> f64 {
    let mut a = 1.0f64;
    let mut b = (1.0 - k * k).sqrt();
    for _ in 0..64 {
        if (a - b).abs() <= 1e-17 * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    pi() / (2.0 * a)
}

/// Meridional parts in closed form, ln tan(pi/4 + phi/2).
pub fn meridional_parts(phi: f64) -> f64 {
    (pi() / 4.0 + phi / 2.0).tan().ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_matches_machin() {
        assert_eq!(to_decimal(&pi_machin(), 30), PI_30.trim());
    }

    #[test]
    fn fixture_pi_is_the_nearest_double() {
        assert_eq!(pi(), pi_machin().to_f64().unwrap());
    }

    #[test]
    fn e_oracle() {
        assert!((e() - 2.718281828459045).abs() < 1e-15);
    }

    #[test]
    fn grid_sine_endpoints() {
        assert_eq!(sin_grid(24), 1.0);
        assert!((sin_grid(8) - 0.5).abs() < 1e-16);
        assert!((sin_grid(6) - sin_22_5_surd()).abs() < 1e-16);
    }

    #[test]
    fn f64_series_tracks_rational_series() {
        for k in 1..=24 {
            let x = pi() * k as f64 / 48.0;
            assert!((sin_f64(x) - sin_grid(k)).abs() < 1e-15, "k = {k}");
        }
    }

    #[test]
    fn agm_reference_values() {
        // K(0.8) and the pi/2 amplitude ratio, both from 40-digit mpmath runs
        assert!((agm_k(0.8) - 1.9953027776647294).abs() < 1e-14);
        let ratio = 2.0 * agm_k(std::f64::consts::FRAC_1_SQRT_2) / pi();
        assert!((ratio - 1.1803405990160962).abs() < 1e-14);
    }
}
