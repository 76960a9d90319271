use limitless::solver::{integrate, integrate_final, Ivp, Method, StepPlan, Trajectory};
use limitless_oracle as oracle;

fn growth() -> Ivp {
    Ivp::native(0.0, vec![1.0], |_, y, dy| dy[0] = y[0]).unwrap()
}

fn error_at_one(method: Method, h: f64) -> f64 {
    let y = integrate_final(&growth(), &StepPlan::new(h, 1.0).unwrap(), method).unwrap();
    (y[0] - oracle::e()).abs()
}

#[test]
fn euler_is_first_order() {
    for h in [0.01, 0.005] {
        let ratio = error_at_one(Method::Euler, h) / error_at_one(Method::Euler, h / 2.0);
        assert!((1.8..=2.2).contains(&ratio), "h = {h}: ratio {ratio}");
    }
}

#[test]
fn rk4_is_fourth_order() {
    for h in [0.1, 0.05] {
        let ratio = error_at_one(Method::Rk4, h) / error_at_one(Method::Rk4, h / 2.0);
        assert!((12.0..=20.0).contains(&ratio), "h = {h}: ratio {ratio}");
    }
}

#[test]
fn forward_then_backward_returns_home() {
    let plan = StepPlan::new(1e-3, 1.0).unwrap();
    let y1 = integrate_final(&growth(), &plan, Method::Rk4).unwrap();
    let back = growth().with_initial(1.0, y1).unwrap();
    let y0 = integrate_final(&back, &StepPlan::new(1e-3, 0.0).unwrap(), Method::Rk4).unwrap();
    assert!((y0[0] - 1.0).abs() < 1e-8, "{}", y0[0]);
}

#[test]
fn last_node_is_t_end_bit_exactly() {
    for (h, t_end) in [(0.1, 1.0), (0.3, 1.0), (0.07, -0.9), (1e-3, 0.1 + 0.2), (0.25, 3.0)] {
        let traj = integrate(&growth(), &StepPlan::new(h, t_end).unwrap(), Method::Euler).unwrap();
        assert_eq!(traj.last_time().to_bits(), t_end.to_bits(), "h = {h}, t_end = {t_end}");
        let steps: Vec<f64> = traj.times().windows(2).map(|w| (w[1] - w[0]).abs()).collect();
        assert!(steps.iter().all(|s| *s <= h * (1.0 + 1e-9)));
    }
}

#[test]
fn csv_round_trip_is_exact() {
    let ivp = Ivp::native(0.0, vec![0.0, 1.0], |_, y, dy| {
        dy[0] = y[1];
        dy[1] = -y[0];
    })
    .unwrap();
    let traj = integrate(&ivp, &StepPlan::new(0.013, 2.0).unwrap(), Method::Rk4).unwrap();
    let back = Trajectory::from_csv(&traj.to_csv()).unwrap();
    assert_eq!(back.times().len(), traj.times().len());
    for (a, b) in back.times().iter().zip(traj.times()) {
        assert_eq!(a.to_bits(), b.to_bits());
    }
    for i in 0..traj.len() {
        for (a, b) in back.state(i).iter().zip(traj.state(i)) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }
}

#[test]
fn expression_rhs_matches_native() {
    use limitless::expr::parse;
    let exprs = vec![parse("y2").unwrap(), parse("-y1").unwrap()];
    let from_text = Ivp::from_exprs(0.0, vec![0.0, 1.0], exprs).unwrap();
    let native = Ivp::native(0.0, vec![0.0, 1.0], |_, y, dy| {
        dy[0] = y[1];
        dy[1] = -y[0];
    })
    .unwrap();
    let plan = StepPlan::new(0.01, 1.5).unwrap();
    let a = integrate_final(&from_text, &plan, Method::Rk4).unwrap();
    let b = integrate_final(&native, &plan, Method::Rk4).unwrap();
    assert_eq!(a, b);
}
