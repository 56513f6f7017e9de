//! Batch verification suites: the exact-identity scans behind the
//! `verify` subcommand, shared with the acceptance tests.
//!
//! Every suite returns one line per claim with a pass flag and enough detail
//! to see what was checked; nothing asserts internally, so callers decide
//! how to react to failures.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::conditions::{satisfies_threestar, tau_extended};
use crate::disc::induced_disc_map;
use crate::hilbert::{
    classes_of_square, hilb2_unique_model, hilb_birational, special_case_checks, NSClass,
    ScanKind, UniqueModelVerdict,
};
use crate::pell::{
    pell_brute_force, pell_solve, solve_affine, AffineConstraint, BruteForceOutcome,
};
use crate::tau::{build_u, fine_moduli_witness, mukai_vector, tau_polarization, verify_tau};

/// One verified claim.
#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckLine {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> CheckLine {
        CheckLine {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// A named batch of checks.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub lines: Vec<CheckLine>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }
}

fn fail_list(failures: &[u64]) -> String {
    if failures.is_empty() {
        "no failures".to_string()
    } else {
        format!("failed at d = {failures:?}")
    }
}

fn small_u64(x: &BigInt, limit: u64) -> Option<u64> {
    use num_traits::ToPrimitive;
    x.to_u64().filter(|&v| v <= limit)
}

/// u² = I, Gram preservation, disc multiplier d/3 − 1, and the Mukai
/// identities, for every admissible d up to `d_max`.
pub fn involution_suite(d_max: u64) -> SuiteReport {
    let mut bad_involution = Vec::new();
    let mut bad_gram = Vec::new();
    let mut bad_multiplier = Vec::new();
    let mut bad_mukai = Vec::new();
    let mut bad_witness = Vec::new();
    let mut count = 0u64;
    let mut d = 6;
    while d <= d_max {
        if tau_extended(d) {
            count += 1;
            let u = build_u(d).expect("admissible");
            if !u.is_involution() {
                bad_involution.push(d);
            }
            let g = u.matrix();
            let gram = u.lattice().gram();
            if &g.transpose().mul(gram).mul(g) != gram {
                bad_gram.push(d);
            }
            let map = induced_disc_map(u.lattice(), &u).expect("induced map");
            let expected = BigInt::from(d / 3 - 1).mod_floor(&BigInt::from(d));
            if map.multiplier() != Some(expected) {
                bad_multiplier.push(d);
            }
            let v = mukai_vector(d).expect("admissible");
            let l_tau = tau_polarization(d).expect("admissible");
            let ok = v.self_pairing().is_zero()
                && v.is_primitive()
                && v.pairing(&l_tau).is_zero()
                && l_tau.self_pairing() == BigInt::from(d);
            if !ok {
                bad_mukai.push(d);
            }
            if fine_moduli_witness(&v).is_none() {
                bad_witness.push(d);
            }
        }
        d += 6;
    }
    let lines = vec![
        CheckLine::new(
            format!("u(d)² = 1 for {count} admissible d ≤ {d_max}"),
            bad_involution.is_empty(),
            fail_list(&bad_involution),
        ),
        CheckLine::new(
            "u(d) preserves the Gram form exactly",
            bad_gram.is_empty(),
            fail_list(&bad_gram),
        ),
        CheckLine::new(
            "disc multiplier of u(d) on Z/d is d/3 - 1",
            bad_multiplier.is_empty(),
            fail_list(&bad_multiplier),
        ),
        CheckLine::new(
            "(v,v) = 0, v primitive, (v,L^tau) = 0, (L^tau)² = d",
            bad_mukai.is_empty(),
            fail_list(&bad_mukai),
        ),
        CheckLine::new(
            "fine moduli witness exists for v",
            bad_witness.is_empty(),
            fail_list(&bad_witness),
        ),
    ];
    SuiteReport {
        suite: "involution".into(),
        lines,
    }
}

/// End-to-end discriminant action of g on K_d^⊥ inside the cubic lattice,
/// plus the exclusion of the two alternative multipliers.
pub fn disc_action_suite(d_list: &[u64]) -> SuiteReport {
    let mut lines = Vec::new();
    for &d in d_list {
        match verify_tau(d) {
            Ok(report) => {
                lines.push(CheckLine::new(
                    format!("Disc(K_{d}^perp) is cyclic of order {d}"),
                    report.invariant_factors == vec![d],
                    format!("invariant factors {:?}", report.invariant_factors),
                ));
                lines.push(CheckLine::new(
                    format!("g acts on Z/{d} by d/3 - 1 = {}", d / 3 - 1),
                    report.multiplier == report.expected_multiplier,
                    format!(
                        "multiplier {} (q(gamma) = {})",
                        report.multiplier, report.q_generator
                    ),
                ));
                // alternatives[0] is −1: q passes but the order-3 sum
                // constraint fails; alternatives[2] is 2d/3 − 1: q fails.
                let minus_one = &report.alternatives[0];
                let chosen = &report.alternatives[1];
                let other = &report.alternatives[2];
                lines.push(CheckLine::new(
                    format!("alpha = -1 is excluded at d = {d}"),
                    !minus_one.sum_has_order_three && minus_one.preserves_q,
                    "fails the order-3 sum constraint (q alone cannot exclude -1)",
                ));
                lines.push(CheckLine::new(
                    format!("alpha = 2d/3 - 1 = {} is excluded at d = {d}", 2 * d / 3 - 1),
                    !other.preserves_q,
                    "fails q-preservation mod 2Z",
                ));
                lines.push(CheckLine::new(
                    format!("alpha = d/3 - 1 = {} passes all checks at d = {d}", d / 3 - 1),
                    chosen.is_unit && chosen.preserves_q && chosen.sum_has_order_three,
                    "unit, q-preserving, order-3 sum",
                ));
            }
            Err(e) => lines.push(CheckLine::new(
                format!("verify_tau({d})"),
                false,
                e.to_string(),
            )),
        }
    }
    SuiteReport {
        suite: "disc-action".into(),
        lines,
    }
}

/// Solver vs. brute-force oracle over the (D, N) grid.
pub fn pell_oracle_suite(d_max: u64, n_max: i64, y_bound: u64) -> SuiteReport {
    let mut solvability_disagreements = Vec::new();
    let mut witness_mismatches = Vec::new();
    let mut beyond_bound = Vec::new();
    let mut checked = 0u64;
    for d in 2..=d_max {
        let dd = BigInt::from(d);
        let sq = dd.sqrt();
        if &sq * &sq == dd {
            continue;
        }
        for n in -n_max..=n_max {
            if n == 0 {
                continue;
            }
            checked += 1;
            let nn = BigInt::from(n);
            let w = pell_solve(&dd, &nn).expect("valid grid point");
            match pell_brute_force(&dd, &nn, y_bound) {
                BruteForceOutcome::Found { x, y } => {
                    if !w.solvable {
                        solvability_disagreements.push((d, n));
                    } else if (w.x.clone(), w.y.clone()) != (x, y) {
                        witness_mismatches.push((d, n));
                    }
                }
                BruteForceOutcome::Exhausted { .. } => {
                    // The oracle's "exhausted" only rules out witnesses up
                    // to the bound. A solver witness beyond it is consistent
                    // when it verifies exactly; a witness inside the bound
                    // that the oracle missed would be a contradiction.
                    if w.solvable {
                        let lhs = &w.x * &w.x - &dd * &w.y * &w.y;
                        if lhs != nn || w.y <= BigInt::from(y_bound) {
                            solvability_disagreements.push((d, n));
                        } else {
                            beyond_bound.push((d, n));
                        }
                    }
                }
            }
        }
    }
    let lines = vec![
        CheckLine::new(
            format!("solvability agreement on {checked} grid points (D <= {d_max}, |N| <= {n_max})"),
            solvability_disagreements.is_empty(),
            if solvability_disagreements.is_empty() {
                "no disagreements".to_string()
            } else {
                format!("disagreements at {solvability_disagreements:?}")
            },
        ),
        CheckLine::new(
            "witnesses match the oracle's minimal witness",
            witness_mismatches.is_empty(),
            if witness_mismatches.is_empty() {
                "no mismatches".to_string()
            } else {
                format!("mismatches at {witness_mismatches:?}")
            },
        ),
        CheckLine::new(
            format!("witnesses beyond the oracle bound y = {y_bound} verify exactly"),
            true,
            format!(
                "{} grid points have their minimal witness beyond the bound, each checked by substitution",
                beyond_bound.len()
            ),
        ),
    ];
    SuiteReport {
        suite: "pell-oracle".into(),
        lines,
    }
}

/// The (∗∗∗) ⟺ constrained-F equivalence, the n = 3, 4, 5 scans, the
/// unique-model criterion, and the degree-6 class correspondence.
pub fn special_cases_suite(threestar_max: u64, n5_max: u64, scan_max: u64) -> SuiteReport {
    let mut lines = Vec::new();

    // (∗∗∗) ⟺ F has a solution with p odd and q even.
    let mut mismatches = Vec::new();
    let mut checked = 0u64;
    let mut d = 6;
    while d <= threestar_max {
        if tau_extended(d) {
            checked += 1;
            let (threestar, _) = satisfies_threestar(d).expect("even");
            let constrained = solve_affine(
                3,
                d / 6,
                -1,
                &[AffineConstraint::POdd, AffineConstraint::QEven],
            )
            .expect("nonsquare 3m")
            .is_some();
            if threestar != constrained {
                mismatches.push(d);
            }
        }
        d += 6;
    }
    lines.push(CheckLine::new(
        format!("(***) iff F solvable with p odd, q even ({checked} admissible d <= {threestar_max})"),
        mismatches.is_empty(),
        fail_list(&mismatches),
    ));

    // Hilb² vs Hilb⁵ equivalence over the extended range (the paper's parity
    // argument needs d/6 odd; m ≡ 4 mod 8 genuinely breaks it).
    let n5 = special_case_checks(6, n5_max, ScanKind::N5Equiv);
    let odd_m_only: Vec<u64> = n5
        .counterexamples
        .iter()
        .copied()
        .filter(|d| (d / 6) % 2 == 1)
        .collect();
    lines.push(CheckLine::new(
        format!(
            "hilb2 = hilb5 birationality for {} admissible d <= {n5_max}",
            n5.checked
        ),
        n5.passed(),
        if n5.passed() {
            "no disagreements".to_string()
        } else {
            format!(
                "disagreements at d = {:?} (all have d/6 ≡ 4 mod 8; the equivalence needs d/6 odd)",
                n5.counterexamples
            )
        },
    ));
    lines.push(CheckLine::new(
        "hilb2 = hilb5 on the odd-d/6 subrange",
        odd_m_only.is_empty(),
        fail_list(&odd_m_only),
    ));

    // n = 3 and n = 4 prime families.
    for (kind, label) in [
        (ScanKind::N3Prime, "hilb3 birational when d/6 is prime ≡ 5,7 mod 8"),
        (ScanKind::N4Prime, "hilb4 birational via F1 when d/6 is prime ≡ 1 mod 4"),
    ] {
        let report = special_case_checks(6, scan_max, kind);
        lines.push(CheckLine::new(
            format!("{label} ({} cases <= {scan_max})", report.checked),
            report.passed(),
            fail_list(&report.counterexamples),
        ));
    }

    // (∗∗∗) implies F.
    let ts = special_case_checks(6, threestar_max, ScanKind::ThreestarImpliesF);
    lines.push(CheckLine::new(
        format!("(***) implies F solvable ({} cases <= {threestar_max})", ts.checked),
        ts.passed(),
        fail_list(&ts.counterexamples),
    ));

    // Unique birational model for 3 | d; wall candidate at d = 62.
    let mut bad_unique = Vec::new();
    let mut count_unique = 0u64;
    let mut d = 12;
    while d <= scan_max {
        count_unique += 1;
        let (unique, verdict) = hilb2_unique_model(d, 50, 50);
        let ok = unique
            && matches!(
                verdict,
                UniqueModelVerdict::UniqueByMod3 {
                    search_was_empty: true
                }
            );
        if !ok {
            bad_unique.push(d);
        }
        d += 6;
    }
    lines.push(CheckLine::new(
        format!("Hilb² unique model via mod 3 for {count_unique} degrees with 3 | d"),
        bad_unique.is_empty(),
        fail_list(&bad_unique),
    ));
    let (unique62, verdict62) = hilb2_unique_model(62, 10, 10);
    let expected62 = UniqueModelVerdict::WallCandidate {
        class: NSClass { a: 1, b: 6, d: 62 },
    };
    lines.push(CheckLine::new(
        "d = 62 reports the square -10 wall candidate (1, 6)",
        !unique62 && verdict62 == expected62,
        format!("{verdict62:?}"),
    ));

    // F solvable iff a degree-6 class with 3 | b exists. The witness class
    // is checked by direct arithmetic; the box search only runs for small
    // witnesses (minimal Pell witnesses can have thousands of digits).
    let mut bad_class = Vec::new();
    let mut d = 6;
    while d <= n5_max {
        if tau_extended(d) {
            let f = hilb_birational(d, 2).expect("admissible");
            if f.birational {
                // The class a = q, b = 3p has square q²d − 18p², which is 6
                // exactly when 3p² − (d/6)q² = −1; check it in exact
                // arithmetic since minimal witnesses can be enormous.
                let p: BigInt = f.p.as_deref().unwrap().parse().unwrap();
                let q: BigInt = f.q.as_deref().unwrap().parse().unwrap();
                let square = &q * &q * BigInt::from(d) - BigInt::from(18) * &p * &p;
                if square != BigInt::from(6) {
                    bad_class.push(d);
                } else if let (Some(ps), Some(qs)) = (small_u64(&p, 64), small_u64(&q, 64)) {
                    let class = NSClass {
                        a: qs as i64,
                        b: 3 * ps as i64,
                        d,
                    };
                    if !classes_of_square(d, 6, qs, 3 * ps, None).contains(&class) {
                        bad_class.push(d);
                    }
                }
            } else if !classes_of_square(d, 6, 40, 40, None).is_empty() {
                bad_class.push(d);
            }
        }
        d += 6;
    }
    lines.push(CheckLine::new(
        "F-witness (p, q) gives the square-6 class (q, 3p) and conversely",
        bad_class.is_empty(),
        fail_list(&bad_class),
    ));

    SuiteReport {
        suite: "special-cases".into(),
        lines,
    }
}

/// Every suite at its default parameters.
pub fn all_suites() -> Vec<SuiteReport> {
    vec![
        involution_suite(10_002),
        disc_action_suite(&[42, 78, 114, 438]),
        pell_oracle_suite(200, 50, 10_000),
        special_cases_suite(5_000, 3_000, 1_200),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_suite_small_range() {
        let report = involution_suite(600);
        assert!(report.passed(), "{:#?}", report.lines);
    }

    #[test]
    fn disc_action_suite_smoke() {
        let report = disc_action_suite(&[42, 78]);
        assert!(report.passed(), "{:#?}", report.lines);
    }

    #[test]
    fn pell_oracle_suite_small_grid() {
        let report = pell_oracle_suite(50, 12, 2_000);
        assert!(report.passed(), "{:#?}", report.lines);
    }
}
