use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    GeneratorZero,
    #[error("generators have gcd {gcd}, so the monoid is not co-finite")]
    GcdNotOne { gcd: u64 },
    #[error("generator {generator} is a sum of the other generators")]
    NonMinimal { generator: u64 },
    #[error("{n} is not an element of the monoid")]
    NotInMonoid { n: u64 },
    #[error("the zero element is not allowed here")]
    ZeroElement,
    #[error("arithmetic overflow")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmegaError {
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("generator index {index} out of range for embedding dimension {k}")]
    IndexOutOfRange { index: usize, k: usize },
    #[error("coordinate {index} of the bullet is zero")]
    NotInSupport { index: usize },
    #[error("vector is not a bullet for {target}")]
    InvalidBullet { target: u64 },
    #[error("work budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Ed2Error {
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("expected embedding dimension 2, got {k}")]
    WrongEmbeddingDimension { k: usize },
    #[error("generator index {index} out of range")]
    IndexOutOfRange { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FitError {
    #[error(transparent)]
    Omega(#[from] OmegaError),
    /// The fit was assembled but its trailing window is not yet stable. The
    /// partial fit is attached so callers can inspect it or retry higher.
    #[error("horizon {} is too small for a stable fit", .0.horizon)]
    HorizonTooSmall(Box<crate::asymptotics::QuasilinearFit>),
    #[error("horizon {horizon} is below {required}, so some residue class has no element")]
    NotComputable { horizon: u64, required: u64 },
    #[error("period requested from an unstable fit")]
    UnstableFit,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    /// Budget ran out; the partial bound covers the residues completed so far.
    #[error("work budget exhausted after {} residues", .0.c_table.len())]
    BudgetExceeded(Box<crate::asymptotics::TheoreticalBound>),
}
