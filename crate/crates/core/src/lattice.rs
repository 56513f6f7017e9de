//! Integral lattices: a free Z-module of finite rank carrying a nondegenerate
//! symmetric bilinear form, given by its Gram matrix in a fixed basis.
//!
//! All constructions reject degenerate forms, and every isometry is checked
//! exactly against the Gram matrix at construction time.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::LatticeError;
use crate::matrix::{column_hermite_form, kernel_basis, smith_normal_form, IntMat};

/// A nondegenerate integral lattice with optional basis labels for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: IntMat,
    labels: Option<Vec<String>>,
}

impl Lattice {
    /// Builds a lattice from its Gram matrix, rejecting asymmetric or
    /// degenerate input. The 0×0 matrix is the valid empty lattice.
    pub fn new(gram: IntMat) -> Result<Lattice, LatticeError> {
        if !gram.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        if gram.det().is_zero() {
            return Err(LatticeError::Degenerate);
        }
        Ok(Lattice { gram, labels: None })
    }

    pub fn with_labels(gram: IntMat, labels: Vec<String>) -> Result<Lattice, LatticeError> {
        let mut l = Lattice::new(gram)?;
        assert_eq!(labels.len(), l.rank(), "label count must match rank");
        l.labels = Some(labels);
        Ok(l)
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMat {
        &self.gram
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn det(&self) -> BigInt {
        self.gram.det()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// A lattice is even when every vector has even square, equivalently when
    /// the Gram diagonal is even.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram.at(i, i).is_even())
    }

    pub fn signature(&self) -> (usize, usize) {
        self.gram.signature()
    }

    fn check_len(&self, v: &[BigInt]) -> Result<(), LatticeError> {
        if v.len() != self.rank() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Intersection pairing (x, y) = xᵀ · gram · y.
    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> Result<BigInt, LatticeError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let gy = self.gram.mul_vec(y);
        Ok(x.iter().zip(gy.iter()).map(|(a, b)| a * b).sum())
    }

    /// Square (x, x) of a vector.
    pub fn norm(&self, x: &[BigInt]) -> Result<BigInt, LatticeError> {
        self.pairing(x, x)
    }

    /// True iff Mᵀ·gram·M = gram and det M = ±1.
    pub fn is_isometry(&self, m: &IntMat) -> Result<bool, LatticeError> {
        if m.rows() != self.rank() || m.cols() != self.rank() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank(),
                got: m.rows().max(m.cols()),
            });
        }
        if !m.det().abs().is_one() {
            return Ok(false);
        }
        Ok(m.transpose().mul(&self.gram).mul(m) == self.gram)
    }

    /// Positive generator of the ideal {(x, y) : y ∈ Λ}, i.e. the gcd of the
    /// pairings of x with a basis.
    pub fn divisibility(&self, x: &[BigInt]) -> Result<BigInt, LatticeError> {
        self.check_len(x)?;
        if x.iter().all(|c| c.is_zero()) {
            return Err(LatticeError::ZeroVector);
        }
        let gx = self.gram.mul_vec(x);
        let mut g = BigInt::zero();
        for v in gx {
            g = g.gcd(&v);
        }
        Ok(g)
    }

    /// Orthogonal complement of the primitive sublattice spanned by `sub`.
    ///
    /// Returns the complement as a lattice together with the embedding matrix
    /// whose columns express its basis in the coordinates of `self`. The
    /// basis is the column Hermite form of the integer kernel, so it is
    /// deterministic across runs. The complement is saturated by
    /// construction.
    pub fn orthogonal_complement(
        &self,
        sub: &[Vec<BigInt>],
    ) -> Result<(Lattice, IntMat), LatticeError> {
        for v in sub {
            self.check_len(v)?;
        }
        let s = IntMat::from_columns(self.rank(), sub);
        let sub_rank = rank_over_q(&s);
        if sub_rank != sub.len() {
            return Err(LatticeError::DependentVectors);
        }
        if !is_saturated(&s) {
            return Err(LatticeError::NotPrimitive);
        }
        // x is orthogonal to the span iff Sᵀ·G·x = 0.
        let constraints = s.transpose().mul(&self.gram);
        let basis = kernel_basis(&constraints);
        let gram = basis.transpose().mul(&self.gram).mul(&basis);
        let lattice = match Lattice::new(gram) {
            Ok(l) => l,
            Err(LatticeError::Degenerate) => return Err(LatticeError::DegenerateComplement),
            Err(e) => return Err(e),
        };
        Ok((lattice, basis))
    }
}

/// Rank of an integer matrix over Q.
pub fn rank_over_q(m: &IntMat) -> usize {
    smith_normal_form(m)
        .diagonal()
        .iter()
        .filter(|d| !d.is_zero())
        .count()
}

/// A full-column-rank integer matrix spans a primitive (saturated) sublattice
/// iff all its invariant factors are 1.
pub fn is_saturated(basis: &IntMat) -> bool {
    smith_normal_form(basis)
        .diagonal()
        .iter()
        .all(|d| d.is_one())
}

/// An isometry of a lattice: an integer matrix preserving the Gram form,
/// acting on column coordinate vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isometry {
    lattice: Lattice,
    matrix: IntMat,
}

impl Isometry {
    pub fn new(lattice: &Lattice, matrix: IntMat) -> Result<Isometry, LatticeError> {
        if !lattice.is_isometry(&matrix)? {
            return Err(LatticeError::NotAnIsometry);
        }
        Ok(Isometry {
            lattice: lattice.clone(),
            matrix,
        })
    }

    pub fn identity(lattice: &Lattice) -> Isometry {
        Isometry {
            lattice: lattice.clone(),
            matrix: IntMat::identity(lattice.rank()),
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(x)
    }

    pub fn compose(&self, other: &Isometry) -> Result<Isometry, LatticeError> {
        if self.lattice.gram() != other.lattice.gram() {
            return Err(LatticeError::BasisMismatch);
        }
        Isometry::new(&self.lattice, self.matrix.mul(&other.matrix))
    }

    pub fn is_involution(&self) -> bool {
        self.matrix.mul(&self.matrix).is_identity()
    }
}

/// Standard building blocks for the lattice suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardLattice {
    /// Hyperbolic plane U with basis e, f: e² = f² = 0, (e, f) = 1.
    U,
    /// Negative-definite E8 root lattice.
    E8Neg,
    /// A₂ with Gram [[2, -1], [-1, 2]].
    A2,
    /// A₂(−1).
    A2Neg,
    /// Rank-one lattice Z with form (n), n ≠ 0.
    Rank1(i64),
}

/// Gram matrix of the E8 root lattice (Bourbaki node ordering).
fn e8_gram() -> IntMat {
    let adj: [(usize, usize); 7] = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
    let mut g = IntMat::zero(8, 8);
    for i in 0..8 {
        g.set(i, i, BigInt::from(2));
    }
    for &(i, j) in &adj {
        g.set(i, j, BigInt::from(-1));
        g.set(j, i, BigInt::from(-1));
    }
    g
}

/// Builds a standard lattice with its conventional Gram matrix and labels.
pub fn standard_lattice(kind: StandardLattice) -> Result<Lattice, LatticeError> {
    match kind {
        StandardLattice::U => Lattice::with_labels(
            IntMat::from_rows(&[vec![0, 1], vec![1, 0]]),
            vec!["e".into(), "f".into()],
        ),
        StandardLattice::E8Neg => {
            let labels = (1..=8).map(|i| format!("r{i}")).collect();
            Lattice::with_labels(e8_gram().neg(), labels)
        }
        StandardLattice::A2 => Lattice::with_labels(
            IntMat::from_rows(&[vec![2, -1], vec![-1, 2]]),
            vec!["a1".into(), "a2".into()],
        ),
        StandardLattice::A2Neg => Lattice::with_labels(
            IntMat::from_rows(&[vec![-2, 1], vec![1, -2]]),
            vec!["a1".into(), "a2".into()],
        ),
        StandardLattice::Rank1(n) => {
            if n == 0 {
                return Err(LatticeError::ZeroRankOne);
            }
            Lattice::with_labels(IntMat::from_rows(&[vec![n]]), vec!["z".into()])
        }
    }
}

/// Block-diagonal direct sum; the empty list yields the rank-0 lattice.
pub fn direct_sum(parts: &[Lattice]) -> Lattice {
    let gram = IntMat::block_diag(&parts.iter().map(|p| p.gram().clone()).collect::<Vec<_>>());
    let labels: Vec<String> = parts
        .iter()
        .flat_map(|p| match p.labels() {
            Some(ls) => ls.to_vec(),
            None => vec![String::new(); p.rank()],
        })
        .collect();
    let mut lattice = Lattice::new(gram).expect("direct sum of nondegenerate parts");
    if labels.iter().any(|l| !l.is_empty()) {
        lattice.labels = Some(labels);
    }
    lattice
}

/// Λ(n): the same module with the form multiplied by n ≠ 0.
pub fn twist(l: &Lattice, n: i64) -> Result<Lattice, LatticeError> {
    if n == 0 {
        return Err(LatticeError::ZeroTwist);
    }
    let gram = l.gram().scale(&BigInt::from(n));
    let mut out = Lattice::new(gram)?;
    out.labels = l.labels.clone();
    Ok(out)
}

/// Expresses an isometry given on one basis of a sublattice in another basis
/// of the same sublattice.
///
/// `b` and `c` are embedding matrices (columns = basis vectors in ambient
/// coordinates) spanning the same sublattice; `m` acts on `c`-coordinates.
/// Returns the matrix acting on `b`-coordinates, failing when the spans
/// differ.
pub fn change_sublattice_basis(
    b: &IntMat,
    c: &IntMat,
    m: &IntMat,
) -> Result<IntMat, LatticeError> {
    if b.rows() != c.rows() || b.cols() != c.cols() {
        return Err(LatticeError::BasisMismatch);
    }
    // Solve b·t = c through the normal equations; bᵀb is invertible because b
    // has full column rank.
    let bt = b.transpose();
    let btb = bt.mul(b).to_rational();
    let inv = btb.inverse().ok_or(LatticeError::DependentVectors)?;
    let t = inv.mul(&bt.mul(c).to_rational());
    let t = t.to_int().ok_or(LatticeError::BasisMismatch)?;
    if b.mul(&t) != *c || !t.det().abs().is_one() {
        return Err(LatticeError::BasisMismatch);
    }
    let t_inv = t
        .to_rational()
        .inverse()
        .expect("unimodular matrix")
        .to_int()
        .expect("unimodular inverse is integral");
    Ok(t.mul(m).mul(&t_inv))
}

/// Restricts an ambient isometry to an invariant sublattice given by an
/// embedding basis, failing when the sublattice is not preserved.
pub fn restrict_isometry(
    ambient: &Isometry,
    basis: &IntMat,
) -> Result<IntMat, LatticeError> {
    // Solve basis · r = ambient.matrix · basis exactly.
    let image = ambient.matrix().mul(basis);
    let bt = basis.transpose();
    let btb = bt.mul(basis).to_rational();
    let inv = btb.inverse().ok_or(LatticeError::DependentVectors)?;
    let r = inv.mul(&bt.mul(&image).to_rational());
    let r = r.to_int().ok_or(LatticeError::BasisMismatch)?;
    if basis.mul(&r) != image {
        return Err(LatticeError::BasisMismatch);
    }
    Ok(r)
}

/// Saturation of the column span: the primitive sublattice containing it with
/// finite index. Used by tests to confirm complements come back saturated.
pub fn saturate(basis: &IntMat) -> IntMat {
    if basis.cols() == 0 {
        return basis.clone();
    }
    // The saturation is the kernel of the composite projection away from the
    // rational span; equivalently solve via SNF: basis = U⁻¹ D V⁻¹, saturated
    // basis = first r columns of U⁻¹ (scaled to the lattice).
    let snf = smith_normal_form(basis);
    let u_inv = snf
        .u
        .to_rational()
        .inverse()
        .expect("unimodular")
        .to_int()
        .expect("unimodular inverse is integral");
    let r = snf
        .diagonal()
        .iter()
        .filter(|d| !d.is_zero())
        .count();
    let cols: Vec<Vec<BigInt>> = (0..r).map(|j| u_inv.column(j)).collect();
    column_hermite_form(&IntMat::from_columns(basis.rows(), &cols))
}
