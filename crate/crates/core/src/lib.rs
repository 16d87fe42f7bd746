//! Exact-arithmetic checks of combinatorial design inequalities derived from
//! the nonnegativity of a variance, together with validators, small
//! exhaustive searches and a two-point sampling experiment.

pub mod bounds;
pub mod designs;
pub mod formats;
pub mod moments;
pub mod oracle;
pub mod rational;
pub mod sampling;

pub use rational::{ratio, Rational};
