//! Exact arithmetic with grossone.
//!
//! Numbers with infinite, finite and infinitesimal parts ([`GrossNumber`]),
//! sets whose sizes are measured in grossone ([`setalgebra`]), sums with an
//! explicit (possibly infinite) number of addends ([`series`]), and the
//! classical paradoxes of infinity recomputed on top of them
//! ([`paradoxes`]). [`exprlang`] is a small expression language over all of
//! it and [`cli`] the command-line front end.

pub mod cli;
pub mod error;
pub mod exprlang;
pub mod grossnum;
pub mod paradoxes;
pub mod series;
pub mod setalgebra;

pub use error::{Error, Result};
pub use grossnum::{exp_gross, GrossNumber, GrossTerm, NumberClass, Parity, Rational};
