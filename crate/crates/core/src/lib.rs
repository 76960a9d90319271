//! Calculus without limits.
//!
//! Functions are defined as solutions of initial-value problems and
//! evaluated by stepping an explicit integrator ([`solver`], [`functions`]).
//! Derivatives of rational functions are obtained exactly in the ordered
//! field of rational functions of an infinitesimal, by discarding
//! infinitesimal terms ([`nonarch`]). Series are summed until a stated
//! discard threshold ([`series`]), sine tables are generated by integration
//! and interpolated with second differences ([`tables`]), and a handful of
//! classical problems are worked end to end ([`applications`]).

pub mod applications;
pub mod expr;
pub mod functions;
pub mod nonarch;
pub mod series;
pub mod solver;
pub mod tables;

pub use solver::{Ivp, Method, StepPlan, Trajectory};
