//! Bounds on central moments of finitely supported data, on the spectrum of
//! a matrix from the traces of its powers, and on the roots of a polynomial
//! from its leading coefficients.
//!
//! Every bound is returned as a [`Bound`] naming the quantity it constrains
//! and the formula that produced it. When the true value is known (sample
//! moments, a verification spectrum, known roots) it is attached together
//! with the slack, so soundness can be checked mechanically.

pub mod bound;
pub mod error;
pub mod fixtures;
pub mod inequalities;
pub mod io;
pub mod numeric;
pub mod poly;
pub mod report;
pub mod sample;
pub mod spectral;
pub mod trace;

pub use bound::{Bound, Direction, Formula, Target};
pub use error::{Error, Result};
pub use sample::{compute_moments, MomentSet, SupportInterval, WeightedSample};
