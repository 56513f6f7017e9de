//! The explicit degree-d involutions: g on the cubic lattice, u on
//! Zℓ_d ⊕ U₄, their glued extension to the rank-24 lattice, and the Mukai
//! vector (3, L, d/6) with its image polarization.
//!
//! Everything constructed here is certified on the spot: involutivity and
//! Gram preservation are exact matrix identities, and the discriminant
//! action is recomputed from scratch rather than assumed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::conditions::tau_extended_or_reason;
use crate::disc::{induced_disc_map, sublattice_with_basis, DiscriminantGroup, glue_extends};
use crate::error::DegreeError;
use crate::json::{bigint_repr, intmat_repr, IsometryJson};
use crate::k3::{self, lambda_cub, lambda_tilde};
use crate::lattice::{
    change_sublattice_basis, restrict_isometry, Isometry, Lattice,
};
use crate::matrix::IntMat;

/// Mukai vector (r, c·L, s) over a degree-d polarized K3 surface; the Mukai
/// self-pairing is c²d − 2rs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MukaiVector {
    #[serde(with = "bigint_repr")]
    pub r: BigInt,
    #[serde(with = "bigint_repr")]
    pub c: BigInt,
    #[serde(with = "bigint_repr")]
    pub s: BigInt,
    #[serde(with = "bigint_repr")]
    pub d: BigInt,
}

impl MukaiVector {
    pub fn new(r: i64, c: i64, s: i64, d: u64) -> MukaiVector {
        MukaiVector {
            r: BigInt::from(r),
            c: BigInt::from(c),
            s: BigInt::from(s),
            d: BigInt::from(d),
        }
    }

    /// Mukai pairing (v, w) = c·c'·d − r·s' − r'·s.
    pub fn pairing(&self, other: &MukaiVector) -> BigInt {
        assert_eq!(self.d, other.d, "pairing needs equal degrees");
        &self.c * &other.c * &self.d - &self.r * &other.s - &other.r * &self.s
    }

    pub fn self_pairing(&self) -> BigInt {
        self.pairing(self)
    }

    pub fn is_isotropic(&self) -> bool {
        self.self_pairing().is_zero()
    }

    pub fn is_primitive(&self) -> bool {
        self.r.gcd(&self.c).gcd(&self.s).is_one()
    }
}

/// The involution g of the rank-23 cubic lattice: identity on
/// E8(−1)² ⊕ Z(−1)³ and −1 on U₁ ⊕ U₂.
pub fn build_g() -> Isometry {
    let cub = lambda_cub();
    let m = IntMat::from_fn(23, 23, |i, j| {
        if i != j {
            BigInt::zero()
        } else if (16..20).contains(&i) {
            BigInt::from(-1)
        } else {
            BigInt::one()
        }
    });
    Isometry::new(&cub, m).expect("g preserves the cubic form")
}

/// The lattice Zℓ_d ⊕ U₄ in the basis order (e₄, ℓ_d, f₄).
pub fn u_domain(d: u64) -> Lattice {
    let di = BigInt::from(d);
    let mut gram = IntMat::zero(3, 3);
    gram.set(0, 2, BigInt::one());
    gram.set(2, 0, BigInt::one());
    gram.set(1, 1, di);
    Lattice::with_labels(gram, vec!["e4".into(), "ell_d".into(), "f4".into()])
        .expect("nondegenerate for d > 0")
}

/// Matrix of the involution u on (e₄, ℓ_d, f₄):
///
/// ```text
/// e₄  ↦ −(d/6)e₄ − ((d/6−1)/3)ℓ_d + ((d/6−1)²/3)f₄
/// ℓ_d ↦ d·e₄ + (d/3−1)ℓ_d − (d/3)(d/6−1)f₄
/// f₄  ↦ 3e₄ + ℓ_d − (d/6)f₄
/// ```
///
/// Integrality of the entries forces d ≡ 0 mod 6 with d/6 ≡ 1 mod 3; the
/// failed congruence is named in the error otherwise.
pub fn build_u(d: u64) -> Result<Isometry, DegreeError> {
    tau_extended_or_reason(d)?;
    let m = (d / 6) as i64;
    let dd = d as i64;
    let matrix = IntMat::from_rows(&[
        vec![-m, dd, 3],
        vec![-(m - 1) / 3, 2 * m - 1, 1],
        vec![(m - 1) * (m - 1) / 3, -2 * m * (m - 1), -m],
    ]);
    let lattice = u_domain(d);
    let iso = Isometry::new(&lattice, matrix).expect("u preserves the form");
    debug_assert!(iso.is_involution());
    Ok(iso)
}

/// Certificate for one admissible degree: the explicit involutions, the
/// glued rank-24 isometry, and the Mukai data read off from it.
#[derive(Debug, Clone, Serialize)]
pub struct TauCertificate {
    pub d: u64,
    /// u on (e₄, ℓ_d, f₄).
    #[serde(with = "intmat_repr")]
    pub u_matrix: IntMat,
    /// g on the rank-23 cubic lattice.
    #[serde(with = "intmat_repr")]
    pub g_matrix: IntMat,
    /// The glued involution of the rank-24 lattice.
    pub glued: IsometryJson,
    pub v: MukaiVector,
    pub l_tau: MukaiVector,
    /// Action on the order-d discriminant group: multiplication by d/3 − 1.
    #[serde(with = "bigint_repr")]
    pub disc_multiplier: BigInt,
}

/// Builds the glued involution of the rank-24 lattice for an admissible d.
///
/// The rank-21 side carries the involution that acts as the identity on
/// E8(−1)² ⊕ U₁ and as a u-shaped block on U₂ ⊕ Z(e₃ − (d/2)f₃); its
/// discriminant action is multiplication by d/3 − 1, matching u on the
/// complement Zℓ_d ⊕ U₄, so the gluing criterion must succeed. Failure to
/// glue panics: it would mean an implementation bug, not a property of d.
pub fn build_gtilde(d: u64) -> Result<TauCertificate, DegreeError> {
    tau_extended_or_reason(d)?;
    let ambient = lambda_tilde();
    let u_iso = build_u(d)?;
    let u_mat = u_iso.matrix().clone();

    // Basis of ℓ_d^⊥ ∩ U₄^⊥: the 18 fixed-block units, then (e₂, ℓ'_d, f₂)
    // with ℓ'_d = e₃ − (d/2)f₃, mirroring the (e₄, ℓ_d, f₄) ordering.
    let mut columns: Vec<Vec<BigInt>> = Vec::with_capacity(21);
    for i in 0..18 {
        let mut v = vec![BigInt::zero(); 24];
        v[i] = BigInt::one();
        columns.push(v);
    }
    columns.push(k3::e_vec(24, 2));
    columns.push(k3::ell_d_neg(24, d));
    columns.push(k3::f_vec(24, 2));

    // u transports to the (e₂, ℓ'_d, f₂) block through f ↦ −f, which
    // identifies the two rank-3 forms up to global sign.
    let mut u_twisted = u_mat.clone();
    for k in 0..3 {
        let v = -u_twisted.at(2, k);
        u_twisted.set(2, k, v);
        let w = -u_twisted.at(k, 2);
        u_twisted.set(k, 2, w);
    }
    let g1_matrix = IntMat::block_diag(&[IntMat::identity(18), u_twisted]);
    let (sub_lattice, _) = sublattice_with_basis(&ambient, &columns)
        .expect("the 21 columns span a primitive sublattice");
    let g1 = Isometry::new(&sub_lattice, g1_matrix).expect("block involution preserves the form");

    // u on the canonical basis of the orthogonal complement Zℓ_d ⊕ U₄.
    let (comp_lattice, comp_basis) = ambient
        .orthogonal_complement(&columns)
        .expect("complement of a primitive sublattice");
    let known = IntMat::from_columns(
        24,
        &[k3::e_vec(24, 4), k3::ell_d(24, d), k3::f_vec(24, 4)],
    );
    let g2_matrix = change_sublattice_basis(&comp_basis, &known, &u_mat)
        .expect("both bases span Zℓ_d ⊕ U₄");
    let g2 = Isometry::new(&comp_lattice, g2_matrix).expect("u preserves the complement form");

    let outcome = glue_extends(&ambient, &columns, &g1, &g2)
        .expect("gluing inputs are valid")
        .certificate
        .expect("the two discriminant actions agree by construction; failure is a bug");

    let glued = outcome;
    assert!(glued.is_involution(), "glued map must be an involution");
    // The glued map restricts to the two pieces exactly.
    let sub_mat = IntMat::from_columns(24, &columns);
    assert_eq!(glued.matrix().mul(&sub_mat), sub_mat.mul(g1.matrix()));
    assert_eq!(glued.matrix().mul(&known), known.mul(&u_mat));

    // Mukai vector: the image of f₄ read in the basis e₄ ⊕ Λ_K3 ⊕ (−f₄).
    let v = extract_mukai(&ambient, glued.matrix(), d);
    let l_tau = extract_polarization(glued.matrix(), d);
    assert_eq!(v, mukai_vector(d)?);
    assert_eq!(l_tau, tau_polarization(d)?);

    // Discriminant action of u on Z/d: multiplication by d/3 − 1.
    let u_disc = induced_disc_map(u_iso.lattice(), &u_iso).expect("induced map exists");
    let multiplier = u_disc.multiplier().expect("Disc(Zℓ_d ⊕ U₄) is cyclic");
    let expected = BigInt::from(d / 3 - 1).mod_floor(&BigInt::from(d));
    assert_eq!(multiplier, expected, "u must multiply Z/d by d/3 − 1");

    Ok(TauCertificate {
        d,
        u_matrix: u_mat,
        g_matrix: build_g().matrix().clone(),
        glued: IsometryJson::from(&glued),
        v,
        l_tau,
        disc_multiplier: multiplier,
    })
}

fn extract_mukai(ambient: &Lattice, glued: &IntMat, d: u64) -> MukaiVector {
    // Column of f₄ (index 23). Its Λ_K3 part must be exactly ℓ_d.
    let col = glued.column(23);
    let ell = k3::ell_d(24, d);
    for i in 0..22 {
        assert_eq!(col[i], ell[i], "image of f₄ must be 3e₄ + ℓ_d − (d/6)f₄");
    }
    assert_eq!(col[22], BigInt::from(3));
    assert_eq!(col[23], BigInt::from(-((d / 6) as i64)));
    let _ = ambient;
    // f₄ ↦ −f₄ turns the coefficient −d/6 of f₄ into +d/6 on H⁴.
    MukaiVector::new(3, 1, (d / 6) as i64, d)
}

fn extract_polarization(glued: &IntMat, d: u64) -> MukaiVector {
    let image = glued.mul_vec(&k3::ell_d(24, d));
    let m = (d / 6) as i64;
    let dd = d as i64;
    let ell = k3::ell_d(24, d);
    // d·e₄ + (d/3 − 1)·ℓ_d − (d/3)(d/6 − 1)·f₄, read through f₄ ↦ −f₄.
    for i in 0..22 {
        assert_eq!(image[i], BigInt::from(2 * m - 1) * &ell[i]);
    }
    assert_eq!(image[22], BigInt::from(dd));
    assert_eq!(image[23], BigInt::from(-2 * m * (m - 1)));
    MukaiVector::new(dd, 2 * m - 1, 2 * m * (m - 1), d)
}

/// The Mukai vector v = (3, L, d/6) for admissible d.
pub fn mukai_vector(d: u64) -> Result<MukaiVector, DegreeError> {
    tau_extended_or_reason(d)?;
    Ok(MukaiVector::new(3, 1, (d / 6) as i64, d))
}

/// v = (3, L, d/6) certified against the glued involution: asserts that it
/// is the image of f₄ under g̃ composed with the f₄ ↦ −f₄ identification.
pub fn mukai_vector_of_tau(d: u64) -> Result<MukaiVector, DegreeError> {
    Ok(build_gtilde(d)?.v)
}

/// The image polarization L^τ = (d, (d/3 − 1)L, (d/3)(d/6 − 1)); checks
/// (v, L^τ) = 0 and (L^τ, L^τ) = d exactly.
pub fn tau_polarization(d: u64) -> Result<MukaiVector, DegreeError> {
    tau_extended_or_reason(d)?;
    let m = (d / 6) as i64;
    let l_tau = MukaiVector::new(d as i64, 2 * m - 1, 2 * m * (m - 1), d);
    let v = MukaiVector::new(3, 1, m, d);
    assert!(v.pairing(&l_tau).is_zero(), "(v, L^τ) must vanish");
    assert_eq!(l_tau.self_pairing(), BigInt::from(d), "(L^τ)² must equal d");
    Ok(l_tau)
}

/// An algebraic class pairing to 1 with v, when one exists: solves
/// c·a·d − r·x₄ − x₀·s = 1 by extended gcd. Returns `None` exactly when
/// gcd(c·d, r, s) ≠ 1 (in particular for every non-primitive v).
pub fn fine_moduli_witness(v: &MukaiVector) -> Option<MukaiVector> {
    let cd = &v.c * &v.d;
    let e1 = v.r.extended_gcd(&v.s);
    // e1: x·r + y·s = g1.
    let e2 = e1.gcd.extended_gcd(&cd);
    // e2: p·g1 + q·cd = g2.
    if !e2.gcd.is_one() {
        return None;
    }
    // 1 = q·cd + p·x·r + p·y·s, so (v, w) = a·cd − r·x₄ − x₀·s with
    // a = q, x₄ = −p·x, x₀ = −p·y.
    let a = e2.y;
    let x4 = -(&e2.x * &e1.x);
    let x0 = -(&e2.x * &e1.y);
    let w = MukaiVector {
        r: x0,
        c: a,
        s: x4,
        d: v.d.clone(),
    };
    assert!(v.pairing(&w).is_one(), "constructed witness must pair to 1");
    Some(w)
}

/// One candidate multiplier in the order-d discriminant analysis.
#[derive(Debug, Clone, Serialize)]
pub struct MultiplierCheck {
    #[serde(with = "bigint_repr")]
    pub alpha: BigInt,
    /// gcd(α, d) = 1, i.e. multiplication by α is an automorphism.
    pub is_unit: bool,
    /// α²·q(γ) ≡ q(γ) mod 2Z on the generator γ.
    pub preserves_q: bool,
    /// (α + 1)·γ has order exactly 3, as the actual action requires.
    pub sum_has_order_three: bool,
}

/// End-to-end report for the discriminant action on K_d^⊥ inside the cubic
/// lattice.
#[derive(Debug, Clone, Serialize)]
pub struct TauReport {
    pub d: u64,
    /// Invariant factors of Disc(K_d^⊥); cyclic of order d when admissible.
    pub invariant_factors: Vec<u64>,
    /// Multiplier of the induced action of g on the order-d group.
    #[serde(with = "bigint_repr")]
    pub multiplier: BigInt,
    #[serde(with = "bigint_repr")]
    pub expected_multiplier: BigInt,
    /// q(γ) of the generator as a reduced fraction string "num/den mod 2".
    pub q_generator: String,
    /// The three candidates α ∈ {−1, d/3 − 1, 2d/3 − 1} of the case split.
    pub alternatives: Vec<MultiplierCheck>,
    pub ok: bool,
}

/// Constructs K_d = Zh ⊕ Zv_d inside the cubic lattice, takes the rank-21
/// complement, restricts g, and checks that the induced map on the cyclic
/// order-d discriminant group is multiplication by d/3 − 1; also reproduces
/// the exclusion of the two alternative multipliers.
pub fn verify_tau(d: u64) -> Result<TauReport, DegreeError> {
    tau_extended_or_reason(d)?;
    let cub = lambda_cub();
    let g = build_g();
    let kd = vec![k3::h_vec(), k3::v_d(d)];
    let (comp, basis) = cub
        .orthogonal_complement(&kd)
        .expect("K_d is primitive of rank 2");
    let restricted = restrict_isometry(&g, &basis).expect("g preserves K_d^⊥");
    let g_sub = Isometry::new(&comp, restricted).expect("restriction is an isometry");
    let disc = DiscriminantGroup::of(&comp);
    let map = induced_disc_map(&comp, &g_sub).expect("induced map exists");
    let invariant_factors: Vec<u64> = disc
        .orders()
        .iter()
        .map(|o| {
            use num_traits::ToPrimitive;
            o.to_u64().expect("orders fit at artifact scale")
        })
        .collect();
    let multiplier = map
        .multiplier()
        .unwrap_or_else(|| BigInt::from(-1));
    let dd = BigInt::from(d);
    let expected = BigInt::from(d / 3 - 1).mod_floor(&dd);

    let q_gen = disc.qvalues().first().cloned().unwrap_or_else(BigRational::zero);
    let q_generator = format!("{}/{} mod 2", q_gen.numer(), q_gen.denom());

    let candidates = [
        BigInt::from(-1i64).mod_floor(&dd),
        BigInt::from(d / 3 - 1),
        BigInt::from(2 * (d / 3) - 1),
    ];
    let alternatives = candidates
        .iter()
        .map(|alpha| {
            let is_unit = alpha.gcd(&dd).is_one();
            // q((α·γ)) vs q(γ) on the single generator.
            let alpha_gamma = disc.element(std::slice::from_ref(alpha));
            let preserves_q = disc.is_even_lattice() && disc.q_of(&alpha_gamma) == q_gen;
            let sum_coeff = (alpha + BigInt::one()).mod_floor(&dd);
            let order = disc.element_order(&[sum_coeff]);
            MultiplierCheck {
                alpha: alpha.clone(),
                is_unit,
                preserves_q,
                sum_has_order_three: order == BigInt::from(3),
            }
        })
        .collect::<Vec<_>>();

    let ok = invariant_factors == vec![d] && multiplier == expected;
    Ok(TauReport {
        d,
        invariant_factors,
        multiplier,
        expected_multiplier: expected,
        q_generator,
        alternatives,
        ok,
    })
}

/// Exact shadow of τ² = id on the rank-3 Mukai frame (E, L, F): the matrix A
/// of the glued map squares to the identity, sends the L-triple to the
/// L^τ-triple and back, and sends the Mukai vector to the point class ±F.
pub fn tau_squared_checks(d: u64) -> Result<(), DegreeError> {
    let u = build_u(d)?;
    // Conjugate by f₄ ↦ −F: flip the last row and column.
    let mut a = u.matrix().clone();
    for k in 0..3 {
        let v = -a.at(2, k);
        a.set(2, k, v);
        let w = -a.at(k, 2);
        a.set(k, 2, w);
    }
    assert!(a.mul(&a).is_identity(), "A² = I must hold exactly");
    let m = (d / 6) as i64;
    let v_triple = vec![BigInt::from(3), BigInt::one(), BigInt::from(m)];
    let l_triple = vec![BigInt::zero(), BigInt::one(), BigInt::zero()];
    let ltau_triple = vec![
        BigInt::from(d as i64),
        BigInt::from(2 * m - 1),
        BigInt::from(2 * m * (m - 1)),
    ];
    let point = vec![BigInt::zero(), BigInt::zero(), BigInt::from(-1)];
    assert_eq!(a.mul_vec(&l_triple), ltau_triple, "A·L = L^τ");
    assert_eq!(a.mul_vec(&ltau_triple), l_triple, "A·L^τ = L");
    assert_eq!(a.mul_vec(&v_triple), point, "A·v is the point class");
    Ok(())
}
