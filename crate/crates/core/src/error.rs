//! Error types shared across the crate.

use std::fmt;

/// Errors raised by lattice construction and lattice-level operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// Gram matrix is not symmetric.
    NotSymmetric,
    /// Gram matrix has zero determinant.
    Degenerate,
    /// Vector or matrix size does not match the lattice rank.
    DimensionMismatch { expected: usize, got: usize },
    /// The zero vector was passed where a nonzero one is required.
    ZeroVector,
    /// Twist by zero would degenerate the form.
    ZeroTwist,
    /// Rank-one lattice with zero form.
    ZeroRankOne,
    /// Sublattice generators are linearly dependent.
    DependentVectors,
    /// Sublattice generators span a non-primitive sublattice.
    NotPrimitive,
    /// The orthogonal complement is degenerate (the input spans touch it).
    DegenerateComplement,
    /// A matrix claimed to be an isometry fails the Gram check.
    NotAnIsometry,
    /// Gluing requires a unimodular ambient lattice.
    NotUnimodular,
    /// A basis-change target does not span the same sublattice.
    BasisMismatch,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NotSymmetric => write!(f, "gram matrix is not symmetric"),
            LatticeError::Degenerate => write!(f, "gram matrix is degenerate"),
            LatticeError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            LatticeError::ZeroVector => write!(f, "zero vector not allowed"),
            LatticeError::ZeroTwist => write!(f, "twist by zero rejected"),
            LatticeError::ZeroRankOne => write!(f, "rank-one lattice needs nonzero form"),
            LatticeError::DependentVectors => write!(f, "generators are linearly dependent"),
            LatticeError::NotPrimitive => write!(f, "sublattice is not primitive"),
            LatticeError::DegenerateComplement => {
                write!(f, "orthogonal complement is degenerate")
            }
            LatticeError::NotAnIsometry => write!(f, "matrix does not preserve the form"),
            LatticeError::NotUnimodular => write!(f, "ambient lattice is not unimodular"),
            LatticeError::BasisMismatch => {
                write!(f, "bases do not span the same sublattice")
            }
        }
    }
}

impl std::error::Error for LatticeError {}

/// Errors raised by the Pell solver layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PellError {
    /// D must be positive.
    NonPositiveD,
    /// D must not be a perfect square.
    SquareD,
    /// N must be nonzero.
    ZeroN,
    /// Affine reduction needs a·b nonsquare.
    SquareProduct,
    /// Affine equation needs positive a and b.
    NonPositiveCoefficient,
    /// Affine right-hand side must be nonzero.
    ZeroRhs,
}

impl fmt::Display for PellError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PellError::NonPositiveD => write!(f, "D must be positive"),
            PellError::SquareD => write!(f, "D must not be a perfect square"),
            PellError::ZeroN => write!(f, "N must be nonzero"),
            PellError::SquareProduct => write!(f, "a*b must not be a perfect square"),
            PellError::NonPositiveCoefficient => write!(f, "a and b must be positive"),
            PellError::ZeroRhs => write!(f, "right-hand side must be nonzero"),
        }
    }
}

impl std::error::Error for PellError {}

/// Errors raised by degree-level decision procedures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeError {
    /// The degree must be even.
    OddDegree(u64),
    /// The degree must be divisible by 6 with d/6 ≡ 1 mod 3.
    NotTauAdmissible { d: u64, reason: String },
    /// n must be at least 2 for Hilbert-scheme questions.
    BadPointCount(u64),
    /// Degrees of the two factorizations disagree.
    DegreeMismatch,
    /// A Mukai vector violated a precondition.
    BadMukaiVector(String),
}

impl fmt::Display for DegreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeError::OddDegree(d) => write!(f, "d = {d} must be even"),
            DegreeError::NotTauAdmissible { d, reason } => {
                write!(f, "d = {d} is not tau-admissible: {reason}")
            }
            DegreeError::BadPointCount(n) => write!(f, "n = {n} must be at least 2"),
            DegreeError::DegreeMismatch => write!(f, "degrees disagree"),
            DegreeError::BadMukaiVector(msg) => write!(f, "bad Mukai vector: {msg}"),
        }
    }
}

impl std::error::Error for DegreeError {}
