//! The named lattices of the suite and their marked vectors.
//!
//! Basis conventions, fixed once for the whole crate:
//!
//! * `lambda_k3`   = E8(−1)⊕E8(−1)⊕U₁⊕U₂⊕U₃, rank 22. The hyperbolic
//!   planes Uᵢ have bases (eᵢ, fᵢ) at indices 16..22 in order.
//! * `lambda_tilde` = E8(−1)⊕E8(−1)⊕U₁⊕U₂⊕U₃⊕U₄, rank 24; indices of
//!   (e₄, f₄) are 22, 23.
//! * `lambda_cub`  = E8(−1)⊕E8(−1)⊕U₁⊕U₂⊕Z(−1)³, rank 23; the Z(−1)
//!   generators sit at indices 20, 21, 22.
//!
//! The marked vectors: ℓ_d = e₃ + (d/2)f₃, h = (1,1,1) in the Z(−1)³ block,
//! v_d = e₂ − (d/6)f₂, and the A₂ embedding λ₁ = e₃ + f₃, λ₂ = e₄ + f₄ − e₃.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::lattice::{direct_sum, standard_lattice, Lattice, StandardLattice};

fn e8e8uu() -> Vec<Lattice> {
    vec![
        standard_lattice(StandardLattice::E8Neg).unwrap(),
        standard_lattice(StandardLattice::E8Neg).unwrap(),
        standard_lattice(StandardLattice::U).unwrap(),
        standard_lattice(StandardLattice::U).unwrap(),
    ]
}

/// E8(−1)² ⊕ U₁ ⊕ U₂ ⊕ U₃, rank 22, signature (3, 19).
pub fn lambda_k3() -> Lattice {
    let mut parts = e8e8uu();
    parts.push(standard_lattice(StandardLattice::U).unwrap());
    direct_sum(&parts)
}

/// E8(−1)² ⊕ U₁ ⊕ U₂ ⊕ U₃ ⊕ U₄, rank 24, signature (4, 20).
pub fn lambda_tilde() -> Lattice {
    let mut parts = e8e8uu();
    parts.push(standard_lattice(StandardLattice::U).unwrap());
    parts.push(standard_lattice(StandardLattice::U).unwrap());
    direct_sum(&parts)
}

/// E8(−1)² ⊕ U₁ ⊕ U₂ ⊕ Z(−1)³, rank 23, signature (2, 21).
pub fn lambda_cub() -> Lattice {
    let mut parts = e8e8uu();
    for _ in 0..3 {
        parts.push(standard_lattice(StandardLattice::Rank1(-1)).unwrap());
    }
    direct_sum(&parts)
}

fn unit(rank: usize, idx: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); rank];
    v[idx] = BigInt::one();
    v
}

/// Index of eᵢ (i = 1..4) in the rank-24 basis; fᵢ follows it.
fn u_index(i: usize) -> usize {
    16 + 2 * (i - 1)
}

/// eᵢ as a vector of `lambda_tilde` (or a prefix lattice of the same layout).
pub fn e_vec(rank: usize, i: usize) -> Vec<BigInt> {
    unit(rank, u_index(i))
}

/// fᵢ, the second basis vector of Uᵢ.
pub fn f_vec(rank: usize, i: usize) -> Vec<BigInt> {
    unit(rank, u_index(i) + 1)
}

/// ℓ_d = e₃ + (d/2)·f₃ for even d, in a lattice of the given rank (22 or 24).
pub fn ell_d(rank: usize, d: u64) -> Vec<BigInt> {
    assert!(d.is_multiple_of(2), "ell_d needs even d");
    let mut v = vec![BigInt::zero(); rank];
    v[u_index(3)] = BigInt::one();
    v[u_index(3) + 1] = BigInt::from(d / 2);
    v
}

/// e₃ − (d/2)·f₃, the degree-(−d) companion of ℓ_d inside U₃.
pub fn ell_d_neg(rank: usize, d: u64) -> Vec<BigInt> {
    assert!(d.is_multiple_of(2), "ell_d_neg needs even d");
    let mut v = vec![BigInt::zero(); rank];
    v[u_index(3)] = BigInt::one();
    v[u_index(3) + 1] = BigInt::from(-((d / 2) as i64));
    v
}

/// h = (1, 1, 1) in the Z(−1)³ block of `lambda_cub`.
pub fn h_vec() -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); 23];
    for slot in v.iter_mut().skip(20) {
        *slot = BigInt::one();
    }
    v
}

/// v_d = e₂ − (d/6)·f₂ in `lambda_cub`, of square −d/3; needs 6 | d.
pub fn v_d(d: u64) -> Vec<BigInt> {
    assert!(d.is_multiple_of(6), "v_d needs 6 | d");
    let mut v = vec![BigInt::zero(); 23];
    v[16 + 2] = BigInt::one();
    v[16 + 3] = BigInt::from(-((d / 6) as i64));
    v
}

/// λ₁ = e₃ + f₃ in `lambda_tilde`.
pub fn a2_lambda1() -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); 24];
    v[u_index(3)] = BigInt::one();
    v[u_index(3) + 1] = BigInt::one();
    v
}

/// λ₂ = e₄ + f₄ − e₃ in `lambda_tilde`.
pub fn a2_lambda2() -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); 24];
    v[u_index(4)] = BigInt::one();
    v[u_index(4) + 1] = BigInt::one();
    v[u_index(3)] = BigInt::from(-1);
    v
}
