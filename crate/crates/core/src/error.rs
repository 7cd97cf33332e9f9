use thiserror::Error;

use crate::family::FamilyKind;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("radius {t} is outside the admissible domain of {kind}")]
    RadiusOutOfDomain { kind: FamilyKind, t: f64 },
    #[error("radius {t} is the excluded radius of {kind}")]
    ExcludedRadius { kind: FamilyKind, t: f64 },
    #[error("operation not supported for family {0}")]
    UnsupportedFamily(FamilyKind),
    #[error("polyharmonic order must be at least 2, got {0}")]
    InvalidOrder(u64),
    #[error("leading coefficient vanishes")]
    DegenerateLeadingCoefficient,
    #[error("interval endpoints must satisfy lo < hi")]
    InvalidInterval,
    #[error("interval endpoint {0} is a root after perturbation")]
    EndpointRoot(String),
    #[error("x = {0} lies outside (0, 1)")]
    RootOutOfRange(f64),
    #[error("probe points are not strictly increasing inside (0, 1) for r = {r}")]
    ProbesCollide { r: u64 },
    #[error("no exact-count guarantee for A2 with n = {n}, k = {k}")]
    NoExactCountGuarantee { n: u32, k: u32 },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("no biharmonic tube for n = {n}, p = {p}: negative discriminant")]
    NoBiharmonicTube { n: u32, p: u32 },
    #[error("biharmonic branch is degenerate for n = {n}, p = {p}")]
    DegenerateTube { n: u32, p: u32 },
    #[error("tolerance must be positive")]
    InvalidTolerance,
}

pub type Result<T> = std::result::Result<T, Error>;
