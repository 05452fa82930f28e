//! Exact computation of the ω-primality invariant in numerical monoids.
//!
//! - [`monoid`]: validated monoids, membership, Apéry sets, factorizations.
//! - [`omega`]: bullets, ω(n), cover maps and a definition-level oracle.
//! - [`asymptotics`]: quasilinear fits, dissonance points, the explicit
//!   threshold `N0` and related probes.
//! - [`ed2`]: the closed form for two generators.

pub mod asymptotics;
pub mod ed2;
pub mod error;
pub mod monoid;
pub mod omega;

pub use error::{BoundError, Ed2Error, FitError, MonoidError, OmegaError};
pub use monoid::{Factorization, NumericalMonoid};
pub use omega::{Bullet, OmegaRecord};

/// Exact rational used for slopes and periodic offsets.
pub type Rational = num_rational::Ratio<i64>;
