//! Acceptance gate: one test per acceptance criterion, each printing a
//! single PASS line (visible with `--nocapture`) once its assertions hold.
//! The ranges here are the contract — they are deliberately written out
//! explicitly rather than pulled from the defaults, so that changing a
//! default can never silently weaken this gate.

use std::time::Instant;

use qnk::kf_closed_form;
use qnk::oracle::OracleCaps;
use qnk::reference::{matches_reference, KF_REFERENCE};
use qnk::verify::{
    check_asymptotic_sandwich, check_bfs_bipartite_parity, check_bipartite_spectrum_equivalences,
    check_degree_and_edge_count, check_family_merge_identity, check_first_increment_closed_form,
    check_kf_below_wiener, check_kf_special_case_collapse, check_kf_strict_monotonicity,
    check_kf_three_way_agreement, check_monotonicity_certificates,
    check_reciprocal_binomial_identity, check_resistance_kf_equivalence,
    check_spectral_gap_closed_form, check_spectrum_enumeration_equality,
    check_top_multiplicity_parity, CheckResult,
};
use qnk::EnhancedParams;

fn pass(criterion: u32, label: &str, detail: String, started: Instant) {
    println!(
        "ACCEPTANCE {criterion} ({label}): PASS — {detail} [{:.2}s]",
        started.elapsed().as_secs_f64()
    );
}

fn require(criterion: u32, label: &str, result: &CheckResult) {
    assert!(
        result.passed,
        "ACCEPTANCE {criterion} ({label}): FAIL — {}: {}",
        result.name, result.detail
    );
}

#[test]
fn criterion_1_reference_table_reproduction() {
    let started = Instant::now();
    let mut mismatches = Vec::new();
    for &(n, k, reference) in KF_REFERENCE {
        let value = kf_closed_form(EnhancedParams::new(n, k).expect("table cells are valid"));
        if !matches_reference(&value, reference) {
            mismatches.push(format!(
                "n={n} k={k}: exact {value} does not round to reference {reference}"
            ));
        }
    }
    assert_eq!(KF_REFERENCE.len(), 45, "reference table must have 45 cells");
    assert!(
        mismatches.is_empty(),
        "ACCEPTANCE 1 (reference table): FAIL —\n{}",
        mismatches.join("\n")
    );
    pass(1, "reference table", "45/45 cells match".into(), started);
}

#[test]
fn criterion_2_resistance_oracle_equivalence() {
    let started = Instant::now();
    let caps = OracleCaps::default(); // resistance cap 8: 28 instances
    let result = check_resistance_kf_equivalence(&caps);
    require(2, "resistance oracle", &result);
    assert_eq!(result.instances, 28, "2 <= n <= 8 has 28 (n,k) instances");
    pass(
        2,
        "resistance oracle",
        "effective-resistance Kf = closed form on all 28 instances, n <= 8".into(),
        started,
    );
}

#[test]
fn criterion_3_spectrum_oracle_equivalence() {
    let started = Instant::now();
    let caps = OracleCaps::default(); // enumeration cap 12
    let result = check_spectrum_enumeration_equality(12, &caps, false);
    require(3, "spectrum oracle", &result);
    assert_eq!(result.instances, 66, "2 <= n <= 12 has 66 (n,k) instances");
    pass(
        3,
        "spectrum oracle",
        "brute-force character multiset = closed form on all 66 instances, n <= 12".into(),
        started,
    );
}

#[test]
fn criterion_4_closed_form_self_consistency() {
    let started = Instant::now();
    let three_way = check_kf_three_way_agreement(30);
    require(4, "self consistency", &three_way);
    let collapse = check_kf_special_case_collapse(30);
    require(4, "self consistency", &collapse);
    pass(
        4,
        "self consistency",
        format!(
            "spectral route and special-case closed forms agree (n <= 30, {} + {} instances)",
            three_way.instances, collapse.instances
        ),
        started,
    );
}

#[test]
fn criterion_5_identity_suites() {
    let started = Instant::now();
    let reciprocal = check_reciprocal_binomial_identity(200);
    require(5, "identity suites", &reciprocal);
    let merge = check_family_merge_identity(20);
    require(5, "identity suites", &merge);
    let parity = check_top_multiplicity_parity(30);
    require(5, "identity suites", &parity);
    pass(
        5,
        "identity suites",
        format!(
            "reciprocal identity n <= 200, family merge n <= 20, top parity n <= 30 \
             ({} + {} + {} instances)",
            reciprocal.instances, merge.instances, parity.instances
        ),
        started,
    );
}

#[test]
fn criterion_6_monotonicity() {
    let started = Instant::now();
    let strict = check_kf_strict_monotonicity(20);
    require(6, "monotonicity", &strict);
    let first = check_first_increment_closed_form(20);
    require(6, "monotonicity", &first);
    let certificates = check_monotonicity_certificates(20);
    require(6, "monotonicity", &certificates);
    pass(
        6,
        "monotonicity",
        format!(
            "strict growth in k, first-increment closed form, and certificates for n <= 20 \
             ({} + {} + {} instances)",
            strict.instances, first.instances, certificates.instances
        ),
        started,
    );
}

#[test]
fn criterion_7_structural_facts() {
    let started = Instant::now();
    let caps = OracleCaps::default();
    let degrees = check_degree_and_edge_count(8, &caps);
    require(7, "structural facts", &degrees);
    let bipartite_bfs = check_bfs_bipartite_parity(8, &caps);
    require(7, "structural facts", &bipartite_bfs);
    let wiener = check_kf_below_wiener(8, &caps);
    require(7, "structural facts", &wiener);
    let gap = check_spectral_gap_closed_form(30);
    require(7, "structural facts", &gap);
    let equivalences = check_bipartite_spectrum_equivalences(30);
    require(7, "structural facts", &equivalences);
    pass(
        7,
        "structural facts",
        format!(
            "degrees/edges, BFS bipartiteness, Kf < Wiener (explicit n <= 8); \
             spectral gap and bipartite equivalences (closed form n <= 30) \
             ({} + {} + {} + {} + {} instances)",
            degrees.instances,
            bipartite_bfs.instances,
            wiener.instances,
            gap.instances,
            equivalences.instances
        ),
        started,
    );
}

#[test]
fn criterion_8_asymptotic_sandwich() {
    let started = Instant::now();
    let result = check_asymptotic_sandwich(30, Some(100));
    require(8, "asymptotics", &result);
    pass(
        8,
        "asymptotics",
        format!(
            "ratio within [lower, upper] for n <= 30 and both sequences within 1/10 of 1 \
             at n = 100 ({} instances)",
            result.instances
        ),
        started,
    );
}
