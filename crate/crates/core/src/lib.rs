//! Exact exponential Riordan arrays for sigmoid function pairs.
//!
//! The crate is layered bottom-up: [`series`] supplies truncated power series
//! over the rationals, [`matrix`] and [`riordan`] build arrays and their group
//! law, [`production`] computes production (Stieltjes) matrices, [`orthopoly`]
//! handles three-term recurrences, moments, Hankel transforms and J-fractions,
//! and [`catalog`] carries the named sigmoid pairs. [`format`] and [`cli`] render
//! results as text, JSON or CSV.

#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod cli;
pub mod error;
pub mod format;
pub mod matrix;
pub mod orthopoly;
pub mod production;
pub mod rational;
pub mod riordan;
pub mod series;

pub use error::{Error, Result};
pub use matrix::TriMatrix;
pub use orthopoly::{MomentSequence, Recurrence};
pub use production::{JacobiParams, ZAPair};
pub use rational::Rational;
pub use riordan::{ExpRiordan, PolynomialFamily};
pub use series::Series;
