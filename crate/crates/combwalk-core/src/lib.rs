//! Exact and Monte Carlo analysis of the simple random walk on the
//! two-dimensional comb: the square lattice with every horizontal edge
//! off the x-axis removed.
//!
//! The crate is organized around one idea: every closed-form generating
//! function ([`genfun`]) must agree, coefficient by coefficient and in
//! exact rational arithmetic, with an independent dynamic-programming
//! enumeration ([`oracle`]). On top of that sit a reproducible Monte
//! Carlo engine ([`simulate`]), power-law fitting and the asymptotic
//! constants ([`asymptotics`]), and distributional tests of the joint
//! n^{1/4} / n^{1/2} scaling limit ([`scaling`]). The [`checks`] module
//! bundles all of it into the tiered verification suites the CLI and the
//! acceptance tests run.

pub mod asymptotics;
pub mod checks;
pub mod genfun;
pub mod oracle;
pub mod parallel;
pub mod rng;
pub mod scaling;
pub mod series;
pub mod simulate;

/// Coordinate axis selector used across the oracle, the generating
/// functions and the simulator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axis::X => write!(f, "x"),
            Axis::Y => write!(f, "y"),
        }
    }
}

pub use checks::{CheckResult, Suite};
pub use oracle::{BarrierSpec, CombVertex, StateDistribution};
pub use series::{PowerSeries, Rational};
pub use simulate::{Estimate, PathSummary, Quantity, WalkConfig};
