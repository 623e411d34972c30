//! Exact GIT computations for the linear sigma model `(P^1)^n x P^r_d`
//! and for combs in the graph space of degree-`(d, 1)` stable maps.
//!
//! Everything is computed over Q with exact rationals. The main entry points:
//!
//! * [`geometry`]: points, Möbius maps, binary forms, multiplicities and gcds.
//! * [`chambers`]: linearizations, walls and chamber signatures.
//! * [`stability`]: the numerical stability criterion and a Hilbert-Mumford oracle.
//! * [`equivariance`]: the representation `rho` and the action on configurations.
//! * [`census`]: boundary divisors, their GIT status and Picard numbers.
//! * [`comb`]: combs, the Givental contraction and degree trees.

pub mod census;
pub mod chambers;
pub mod cli;
pub mod comb;
pub mod equivariance;
pub mod error;
pub mod geometry;
pub mod marks;
pub mod poly;
pub mod random;
pub mod rational;
pub mod stability;

pub use chambers::{Linearization, Side, Wall};
pub use error::{Error, Result};
pub use geometry::{BinaryForm, MobiusTransform, ProjPoint, RootLocus};
pub use marks::MarkSet;
pub use rational::Rational;
pub use stability::{Configuration, Stability, StabilityStatus, Witness};
