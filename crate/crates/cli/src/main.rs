//! `limitless`: solve ODEs from spec files, differentiate exactly by order
//! counting, and run the worked problems from the command line.
//!
//! Exit codes: 0 success, 1 runtime or domain error, 2 usage or parse error.

mod specfile;
mod svg;

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use limitless::applications::{
    ballistics_trajectory, elliptic_f, elliptic_k, loxodrome, pendulum_period_elliptic,
    pendulum_period_ode, rectify, small_angle_period, unit_circle, vacuum_range, BallisticsSpec,
    GeoPoint, PendulumSpec, EARTH_RADIUS,
};
use limitless::expr::parse;
use limitless::functions::{by_name, DEFAULT_H};
use limitless::nonarch::{derivative_at, parse_rational, ratfunc_from_expr, NonArchError};
use limitless::series::{leibniz, leibniz_pi, sum_until_discardable, DiscardMode, DiscardPolicy};
use limitless::solver::{find_zero_crossings, fmt_sci, integrate, Method, Trajectory};
use limitless::tables::{generate_table, DEFAULT_RADIUS};

use specfile::SpecFile;
use svg::{PlotSpec, Series};

const STANDARD_GRAVITY: f64 = 9.80665;

#[derive(Parser)]
#[command(name = "limitless", version, about = "Calculus by order counting and step-by-step integration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate an initial-value problem described by a spec file
    Solve(SolveArgs),
    /// Exact derivative of a rational expression at a rational point
    Deriv(DerivArgs),
    /// Rsine table on the 225-arcminute grid, with difference columns
    Table(TableArgs),
    /// Leibniz-series approximation of pi
    Pi(PiArgs),
    /// Period of a pendulum released from rest
    Pendulum(PendulumArgs),
    /// Range of a projectile under quadratic drag
    Ballistics(BallisticsArgs),
    /// Rhumb-line bearing and distance between two points
    Lox(LoxArgs),
    /// Elliptic integral of the first kind
    Ellipk(EllipkArgs),
    /// Perimeter of the inscribed polygon of the unit circle
    Rectify(RectifyArgs),
    /// Evaluate a function defined by its differential equation
    Fn(FnArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Spec file with dim, rhs_i, t0, y0, t_end, h and optionally method
    spec: PathBuf,
    /// Write the trajectory CSV here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write an SVG line plot
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Components to plot against t, e.g. 1,3 (default: all)
    #[arg(long, value_delimiter = ',')]
    plot: Vec<usize>,
    /// Phase plot of one component against another, e.g. 1,2
    #[arg(long, value_delimiter = ',', value_name = "I,J", conflicts_with = "plot")]
    phase: Option<Vec<usize>>,
    #[arg(long, default_value_t = 640)]
    width: u32,
    #[arg(long, default_value_t = 400)]
    height: u32,
}

#[derive(Args)]
struct DerivArgs {
    /// Rational expression in one variable, e.g. "x^2/(1+x)"
    expr: String,
    /// Point as an integer, decimal or p/q
    #[arg(long, allow_hyphen_values = true)]
    at: String,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = DEFAULT_RADIUS)]
    radius: f64,
    #[arg(long, default_value = "rk4")]
    method: Method,
    #[arg(long, default_value_t = 1e-5)]
    h: f64,
    /// Fixed decimal places instead of 17 significant digits
    #[arg(long)]
    decimals: Option<usize>,
    /// Interpolate at these angles (degrees) instead of printing the table
    #[arg(long, value_delimiter = ',')]
    interp: Vec<f64>,
    /// Write the table CSV here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PiArgs {
    /// Sum exactly this many terms
    #[arg(long, conflicts_with = "threshold", required_unless_present = "threshold")]
    terms: Option<u64>,
    /// Add half of the next term
    #[arg(long, requires = "terms")]
    corrected: bool,
    /// Stop once the next term drops below this
    #[arg(long)]
    threshold: Option<f64>,
    /// Compare terms with threshold times the running sum
    #[arg(long, requires = "threshold")]
    relative: bool,
    #[arg(long, requires = "threshold")]
    max_terms: Option<u64>,
}

#[derive(Args)]
struct PendulumArgs {
    /// Release amplitude in radians
    #[arg(long)]
    theta0: f64,
    #[arg(long, default_value_t = 1.0)]
    length: f64,
    #[arg(long, default_value_t = STANDARD_GRAVITY)]
    gravity: f64,
    #[arg(long, default_value_t = DEFAULT_H)]
    h: f64,
    /// Tabulate the period for amplitudes theta0*i/points, i = 1..=points
    #[arg(long)]
    sweep: bool,
    #[arg(long, default_value_t = 12, requires = "sweep")]
    points: usize,
    /// Write the output CSV here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Plot the sweep's ratio column
    #[arg(long, requires = "sweep")]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct BallisticsArgs {
    /// kg
    #[arg(long)]
    mass: f64,
    /// Quadratic drag coefficient c in F = -c|v|v
    #[arg(long, default_value_t = 0.0)]
    drag: f64,
    /// Launch speed, m/s
    #[arg(long)]
    speed: f64,
    /// Launch angle in degrees
    #[arg(long)]
    angle: f64,
    #[arg(long, default_value_t = STANDARD_GRAVITY)]
    gravity: f64,
    #[arg(long, default_value_t = DEFAULT_H)]
    h: f64,
    /// Write the trajectory CSV (t,x,y,vx,vy) here
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct LoxArgs {
    /// Start as "lat,lon" in degrees
    #[arg(long, allow_hyphen_values = true)]
    from: String,
    /// End as "lat,lon" in degrees
    #[arg(long, allow_hyphen_values = true)]
    to: String,
    /// Sphere radius, metres
    #[arg(long, default_value_t = EARTH_RADIUS)]
    radius: f64,
}

#[derive(Args)]
struct EllipkArgs {
    /// Modulus in [0, 1)
    #[arg(long)]
    k: f64,
    /// Amplitude in radians; omit for the complete integral
    #[arg(long)]
    phi: Option<f64>,
}

#[derive(Args)]
struct RectifyArgs {
    /// Number of polygon sides
    #[arg(long)]
    segments: usize,
    /// Also report 2x, 4x, ... up to this many doublings
    #[arg(long, default_value_t = 0)]
    doublings: u32,
}

#[derive(Args)]
struct FnArgs {
    /// exp, sin, cos, sn, cn, dn or invgd
    name: String,
    /// Argument
    #[arg(allow_hyphen_values = true)]
    x: f64,
    /// Modulus for sn, cn, dn
    #[arg(long, default_value_t = 0.0)]
    k: f64,
    #[arg(long, default_value = "rk4")]
    method: Method,
    #[arg(long, default_value_t = DEFAULT_H)]
    h: f64,
    /// Write the trajectory from the initial point to x here
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the refined sign changes on the way to x instead of the value
    #[arg(long)]
    zeros: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Runtime(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Runtime(m) => m,
        }
    }
}

fn runtime(e: impl std::fmt::Display) -> Failure {
    Failure::Runtime(e.to_string())
}

type Output = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Deriv(a) => cmd_deriv(a),
        Command::Table(a) => cmd_table(a),
        Command::Pi(a) => cmd_pi(a),
        Command::Pendulum(a) => cmd_pendulum(a),
        Command::Ballistics(a) => cmd_ballistics(a),
        Command::Lox(a) => cmd_lox(a),
        Command::Ellipk(a) => cmd_ellipk(a),
        Command::Rectify(a) => cmd_rectify(a),
        Command::Fn(a) => cmd_fn(a),
    };
    match result {
        Ok(text) => {
            let mut out = io::stdout().lock();
            match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("limitless: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(f) => {
            eprintln!("limitless: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

/// Sends `text` to `path` if given, otherwise returns it for stdout.
fn emit(path: Option<&Path>, text: String) -> Output {
    match path {
        Some(p) => write_file(p, &text).map(|_| String::new()),
        None => Ok(text),
    }
}

fn plot(path: &Path, spec: &PlotSpec) -> Result<(), Failure> {
    let text = svg::render(spec).map_err(runtime)?;
    write_file(path, &text)
}

fn trajectory_series(traj: &Trajectory, components: &[usize]) -> Vec<Series> {
    components
        .iter()
        .map(|&c| Series {
            label: format!("y{c}"),
            points: traj.times().iter().copied().zip(traj.component(c - 1)).collect(),
        })
        .collect()
}

fn cmd_solve(a: SolveArgs) -> Output {
    let path = a.spec.display().to_string();
    let text = fs::read_to_string(&a.spec).map_err(|e| Failure::Runtime(format!("{path}: {e}")))?;
    let spec = SpecFile::parse(&text).map_err(|e| Failure::Usage(e.render(&path)))?;
    let check = |c: usize, flag: &str| {
        if (1..=spec.dim).contains(&c) {
            Ok(())
        } else {
            Err(Failure::Usage(format!("--{flag}: component {c} outside 1..={}", spec.dim)))
        }
    };
    for &c in &a.plot {
        check(c, "plot")?;
    }
    if a.phase.as_ref().is_some_and(|p| p.len() != 2) {
        return Err(Failure::Usage("--phase takes exactly two components, e.g. 1,2".into()));
    }
    for &c in a.phase.iter().flatten() {
        check(c, "phase")?;
    }
    let ivp = spec.ivp().map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    let plan = spec.plan().map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    let traj = integrate(&ivp, &plan, spec.method)
        .map_err(|e| Failure::Runtime(format!("{path}: integration failed: {e}")))?;

    if let Some(svg_path) = &a.svg {
        let mut p = match &a.phase {
            Some(ij) => {
                let (i, j) = (ij[0], ij[1]);
                let points = traj.states().map(|s| (s[i - 1], s[j - 1])).collect();
                PlotSpec::new(
                    &format!("y{i}"),
                    &format!("y{j}"),
                    vec![Series {
                        label: format!("y{j} vs y{i}"),
                        points,
                    }],
                )
            }
            None => {
                let comps: Vec<usize> = if a.plot.is_empty() {
                    (1..=spec.dim).collect()
                } else {
                    a.plot.clone()
                };
                PlotSpec::new("t", "y", trajectory_series(&traj, &comps))
            }
        };
        p.width = a.width;
        p.height = a.height;
        plot(svg_path, &p)?;
    }
    emit(a.out.as_deref(), traj.to_csv())
}

fn cmd_deriv(a: DerivArgs) -> Output {
    let e = parse(&a.expr).map_err(|e| Failure::Usage(format!("expression: {e}")))?;
    let vars = e.variables();
    if vars.len() > 1 {
        return Err(Failure::Usage(format!(
            "expression must use a single variable, found {}",
            vars.join(", ")
        )));
    }
    let var = vars.first().map_or("x", String::as_str);
    let x0 = parse_rational(&a.at)
        .ok_or_else(|| Failure::Usage(format!("--at: '{}' is not an integer, decimal or p/q", a.at)))?;
    let f = ratfunc_from_expr(&e, var).map_err(runtime)?;
    let d = derivative_at(&f, &x0).map_err(|e| match e {
        NonArchError::Pole(_) => Failure::Runtime(format!("domain error: {e}")),
        other => runtime(other),
    })?;
    Ok(format!("{d}\n"))
}

fn cmd_table(a: TableArgs) -> Output {
    let table = generate_table(a.radius, a.method, a.h).map_err(runtime)?;
    let mut csv = Vec::new();
    table.write_csv(&mut csv, a.decimals).map_err(runtime)?;
    let csv = String::from_utf8(csv).expect("CSV is ASCII");
    if a.interp.is_empty() {
        return emit(a.out.as_deref(), csv);
    }
    if let Some(p) = &a.out {
        write_file(p, &csv)?;
    }
    let mut out = String::from("theta_deg,brahmagupta,linear\n");
    for theta in a.interp {
        let q = table.brahmagupta_interp(theta).map_err(runtime)?;
        let l = table.linear_interp(theta).map_err(runtime)?;
        let _ = writeln!(out, "{},{},{}", fmt_sci(theta), fmt_sci(q), fmt_sci(l));
    }
    Ok(out)
}

fn cmd_pi(a: PiArgs) -> Output {
    if let Some(n) = a.terms {
        if n == 0 {
            return Err(Failure::Usage("--terms must be at least 1".into()));
        }
        return Ok(format!("{}\n", fmt_sci(leibniz_pi(n, a.corrected))));
    }
    let threshold = a.threshold.expect("clap requires --terms or --threshold");
    let mode = if a.relative {
        DiscardMode::Relative
    } else {
        DiscardMode::Absolute
    };
    let policy = DiscardPolicy::new(mode, threshold, a.max_terms.unwrap_or(u64::MAX))
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let r = sum_until_discardable(&leibniz(), &policy).map_err(runtime)?;
    Ok(format!(
        "value,terms_used,discarded_bound,hit_cap\n{},{},{},{}\n",
        fmt_sci(r.value),
        r.terms_used,
        fmt_sci(r.discarded_bound),
        r.hit_cap
    ))
}

fn cmd_pendulum(a: PendulumArgs) -> Output {
    if !a.sweep {
        let spec = PendulumSpec::new(a.length, a.gravity, a.theta0).map_err(runtime)?;
        let ode = pendulum_period_ode(&spec, a.h).map_err(runtime)?;
        let ell = pendulum_period_elliptic(&spec).map_err(runtime)?;
        let small = small_angle_period(&spec);
        let text = format!(
            "theta0,period_ode,period_elliptic,small_angle_period,ratio\n{},{},{},{},{}\n",
            fmt_sci(a.theta0),
            fmt_sci(ode),
            fmt_sci(ell),
            fmt_sci(small),
            fmt_sci(ode / small)
        );
        return emit(a.out.as_deref(), text);
    }
    if a.points == 0 {
        return Err(Failure::Usage("--points must be at least 1".into()));
    }
    let mut text = String::from("theta0,period,ratio_to_small_angle\n");
    let mut points = Vec::with_capacity(a.points);
    for i in 1..=a.points {
        let theta0 = if i == a.points {
            a.theta0
        } else {
            a.theta0 * i as f64 / a.points as f64
        };
        let spec = PendulumSpec::new(a.length, a.gravity, theta0).map_err(runtime)?;
        let period = pendulum_period_ode(&spec, a.h).map_err(runtime)?;
        let ratio = period / small_angle_period(&spec);
        let _ = writeln!(text, "{},{},{}", fmt_sci(theta0), fmt_sci(period), fmt_sci(ratio));
        points.push((theta0, ratio));
    }
    if let Some(p) = &a.svg {
        let series = vec![Series {
            label: "T / T_small".into(),
            points,
        }];
        plot(p, &PlotSpec::new("theta0 (rad)", "period ratio", series))?;
    }
    emit(a.out.as_deref(), text)
}

fn cmd_ballistics(a: BallisticsArgs) -> Output {
    let spec = BallisticsSpec::new(a.mass, a.drag, a.speed, a.angle.to_radians(), a.gravity)
        .map_err(runtime)?;
    let flight = ballistics_trajectory(&spec, a.h).map_err(runtime)?;
    if let Some(p) = &a.out {
        write_file(p, &flight.trajectory.to_csv())?;
    }
    if let Some(p) = &a.svg {
        let points = flight.trajectory.states().map(|s| (s[0], s[1])).collect();
        let series = vec![Series {
            label: format!("m = {} kg", a.mass),
            points,
        }];
        plot(p, &PlotSpec::new("x (m)", "y (m)", series))?;
    }
    Ok(format!(
        "range,flight_time,vacuum_range\n{},{},{}\n",
        fmt_sci(flight.range),
        fmt_sci(flight.flight_time),
        fmt_sci(vacuum_range(&spec))
    ))
}

fn lat_lon(flag: &str, text: &str) -> Result<GeoPoint, Failure> {
    let bad = || Failure::Usage(format!("--{flag}: expected \"lat,lon\" in degrees, got '{text}'"));
    let (lat, lon) = text.split_once(',').ok_or_else(bad)?;
    let lat: f64 = lat.trim().parse().map_err(|_| bad())?;
    let lon: f64 = lon.trim().parse().map_err(|_| bad())?;
    GeoPoint::from_degrees(lat, lon).map_err(runtime)
}

fn cmd_lox(a: LoxArgs) -> Output {
    let from = lat_lon("from", &a.from)?;
    let to = lat_lon("to", &a.to)?;
    let r = loxodrome(&from, &to, a.radius).map_err(runtime)?;
    Ok(format!(
        "bearing_deg,distance\n{},{}\n",
        fmt_sci(r.bearing.to_degrees()),
        fmt_sci(r.distance)
    ))
}

fn cmd_ellipk(a: EllipkArgs) -> Output {
    let v = match a.phi {
        Some(phi) => elliptic_f(phi, a.k),
        None => elliptic_k(a.k),
    }
    .map_err(runtime)?;
    Ok(format!("{}\n", fmt_sci(v)))
}

fn cmd_rectify(a: RectifyArgs) -> Output {
    if a.segments == 0 {
        return Err(Failure::Usage("--segments must be at least 1".into()));
    }
    let mut out = String::from("segments,perimeter\n");
    for d in 0..=a.doublings {
        let n = a
            .segments
            .checked_mul(1usize << d.min(63))
            .filter(|n| *n <= 1 << 26)
            .ok_or_else(|| Failure::Usage("segment count too large (limit 2^26)".into()))?;
        let _ = writeln!(out, "{n},{}", fmt_sci(rectify(unit_circle, 0.0, TAU, n)));
    }
    Ok(out)
}

fn cmd_fn(a: FnArgs) -> Output {
    let f = by_name(&a.name, a.k).map_err(|e| match e {
        limitless::functions::FunctionError::Unknown(_) => Failure::Usage(e.to_string()),
        other => runtime(other),
    })?;
    let needs_traj = a.out.is_some() || a.zeros;
    if !needs_traj {
        let v = f.eval_with(a.x, a.method, a.h).map_err(runtime)?;
        return Ok(format!("{}\n", fmt_sci(v)));
    }
    let traj = f.trajectory(a.x, a.method, a.h).map_err(runtime)?;
    if let Some(p) = &a.out {
        write_file(p, &traj.to_csv())?;
    }
    if a.zeros {
        let zeros = find_zero_crossings(&traj, f.output(), f.ivp(), a.method).map_err(runtime)?;
        let mut out = String::new();
        for t in zeros {
            let _ = writeln!(out, "{}", fmt_sci(t));
        }
        return Ok(out);
    }
    Ok(format!("{}\n", fmt_sci(traj.last_state()[f.output()])))
}
