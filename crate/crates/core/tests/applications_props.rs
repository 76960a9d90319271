use std::f64::consts::FRAC_PI_2;

use limitless::applications::{
    ballistics_range, ballistics_trajectory, elliptic_k, loxodrome, meridional_parts,
    pendulum_period_elliptic, pendulum_period_ode, rectify, small_angle_period, unit_circle,
    vacuum_range, BallisticsSpec, GeoPoint, PendulumSpec, EARTH_RADIUS,
};
use limitless_oracle as oracle;

#[test]
fn pendulum_routes_agree() {
    for theta0 in [0.25, 0.5, 1.0, 1.5, 2.0, 2.5] {
        let spec = PendulumSpec::new(1.0, 9.81, theta0).unwrap();
        let ode = pendulum_period_ode(&spec, 1e-3).unwrap();
        let ell = pendulum_period_elliptic(&spec).unwrap();
        assert!(((ode - ell) / ell).abs() < 1e-6, "theta0 = {theta0}: {ode} vs {ell}");
    }
}

#[test]
fn right_angle_amplitude_ratio() {
    let spec = PendulumSpec::new(2.0, 9.81, FRAC_PI_2).unwrap();
    let ratio = pendulum_period_elliptic(&spec).unwrap() / small_angle_period(&spec);
    // k = sin(pi/4)
    let expected = 2.0 * oracle::agm_k(0.5f64.sqrt()) / oracle::pi();
    assert!((ratio - expected).abs() < 5e-5 * expected, "{ratio} vs {expected}");
}

#[test]
fn complete_integral_matches_agm() {
    for k in [0.0, 0.3, 0.6, 0.8, 0.95] {
        let v = elliptic_k(k).unwrap();
        assert!((v - oracle::agm_k(k)).abs() < 1e-9, "k = {k}");
    }
}

#[test]
fn heavier_balls_fly_further() {
    let mut last = 0.0;
    for mass in [0.1, 0.16, 0.3, 1.0] {
        let spec = BallisticsSpec::new(mass, 0.002, 30.0, 0.7, 9.81).unwrap();
        let range = ballistics_range(&spec, 1e-3).unwrap();
        assert!(range > last, "mass {mass}: {range} <= {last}");
        assert!(range < vacuum_range(&spec));
        let flight = ballistics_trajectory(&spec, 1e-3).unwrap();
        let energies: Vec<f64> = flight.trajectory.states().map(|s| spec.energy(s)).collect();
        assert!(energies.windows(2).all(|w| w[1] <= w[0]), "mass {mass}");
        last = range;
    }
}

#[test]
fn polygon_perimeters() {
    let p4 = rectify(unit_circle, 0.0, 2.0 * oracle::pi(), 4);
    assert!((p4 - 4.0 * 2f64.sqrt()).abs() < 1e-9);
    let p6 = rectify(unit_circle, 0.0, 2.0 * oracle::pi(), 6);
    assert!((p6 - 6.0).abs() < 1e-9);
    let mut prev = rectify(unit_circle, 0.0, 2.0 * oracle::pi(), 1 << 4);
    for e in 5..=20 {
        let next = rectify(unit_circle, 0.0, 2.0 * oracle::pi(), 1 << e);
        assert!(next >= prev, "n = 2^{e}");
        prev = next;
    }
    assert!((prev - 2.0 * oracle::pi()).abs() < 1e-8);
}

#[test]
fn meridional_parts_sweep() {
    for i in -16..=16 {
        let phi = i as f64 * 0.09;
        let v = meridional_parts(phi).unwrap();
        assert!((v - oracle::meridional_parts(phi)).abs() < 1e-8, "phi = {phi}");
    }
}

#[test]
fn rhumb_cases() {
    let a = GeoPoint::from_degrees(10.0, 20.0).unwrap();
    let b = GeoPoint::from_degrees(40.0, 20.0).unwrap();
    let r = loxodrome(&a, &b, EARTH_RADIUS).unwrap();
    let expect = EARTH_RADIUS * 30.0 * oracle::pi() / 180.0;
    assert!(r.bearing.abs() < 1e-12);
    assert!(((r.distance - expect) / expect).abs() < 1e-10);

    let c = GeoPoint::from_degrees(60.0, -10.0).unwrap();
    let d = GeoPoint::from_degrees(60.0, 15.0).unwrap();
    let r = loxodrome(&c, &d, EARTH_RADIUS).unwrap();
    let expect = EARTH_RADIUS * 0.5 * 25.0 * oracle::pi() / 180.0;
    assert!((r.bearing - FRAC_PI_2).abs() < 1e-12);
    assert!(((r.distance - expect) / expect).abs() < 1e-10);

    let p = GeoPoint::from_degrees(-33.9, 18.4).unwrap();
    let q = GeoPoint::from_degrees(51.5, -0.1).unwrap();
    let there = loxodrome(&p, &q, EARTH_RADIUS).unwrap();
    let back = loxodrome(&q, &p, EARTH_RADIUS).unwrap();
    let turn = (back.bearing - there.bearing).rem_euclid(2.0 * oracle::pi());
    assert!((turn - oracle::pi()).abs() < 1e-10);
    assert!(((there.distance - back.distance) / there.distance).abs() < 1e-10);
}
