//! Exact-arithmetic lattice and Pell-equation toolkit for the degree-d K3
//! involution: integral lattices with their discriminant groups and gluing
//! criterion, the explicit involutions u and g with their glued rank-24
//! extension, the Mukai vector (3, L, d/6), and complete Pell-based decision
//! procedures for the degree conditions and for birationality of Hilbert
//! schemes of points.
//!
//! Every computation is arbitrary-precision integer or rational arithmetic;
//! there is no floating point in the crate. Constructed isometries are
//! verified against their Gram matrices on the spot, and the verification
//! suites in [`verify`] recompute the advertised identities from scratch.

pub mod conditions;
pub mod disc;
pub mod error;
pub mod hilbert;
pub mod json;
pub mod k3;
pub mod lattice;
pub mod matrix;
pub mod pell;
pub mod tau;
pub mod verify;
