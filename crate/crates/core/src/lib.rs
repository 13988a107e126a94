//! Gradient-free evolutionary optimization.
//!
//! The crate is `no_std` (it only needs `alloc`) and contains the pure
//! algorithmic parts of the toolkit:
//!
//! * [`ga`]: the single-parent Gaussian ("proto") genetic algorithm with
//!   elitist merge of parents and children and rejection-based constraint
//!   handling.
//! * [`nsga2`]: Pareto dominance, fast non-dominated sorting, crowding
//!   distance and an NSGA-II loop that reuses the proto-GA reproduction.
//! * [`benchmarks`]: the registry of single-, constrained- and
//!   multi-objective test problems, grid reference fronts and IGD.
//! * [`cdhs`]: Cobb-Douglas habitability scores and their bi-objective and
//!   single-objective optimization.
//!
//! IO, catalog parsing and the command-line front end live in the `evohab`
//! crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod benchmarks;
pub mod cdhs;
mod config;
mod error;
pub mod ga;
pub mod nsga2;
mod problem;
mod rng;

pub use config::GaConfig;
pub use error::EvoError;
pub use problem::{
    Constraint, Direction, Individual, ObjectiveFn, OptimizationProblem, SearchDomain,
};
