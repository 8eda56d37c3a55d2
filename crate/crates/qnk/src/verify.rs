//! The verification suite: named checks that pit the closed forms against
//! the independent oracles and against every internal identity the theory
//! promises. Each check reports how many instances it verified and either
//! passes or carries its first counterexample. `run_all` drives the whole
//! suite from one configuration; every check is also callable on its own
//! with explicit ranges, which is how the acceptance tests pin the exact
//! ranges they require.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::group::{
    build_enhanced_generating_set, eigenvalue_by_character, eigenvalue_by_weight, weight_pair,
    EnhancedParams, GeneratingSet, GroupElement,
};
use crate::kirchhoff::{
    asymptotic_sequences, delta_k, even_binomial_reciprocal_sides, kf_closed_form, kf_folded,
    kf_from_laplacian, kf_k_max, limit_ratio, monotonicity_certificate,
};
use crate::oracle::{
    build_graph, distance_summary, effective_resistance_kf, enumerate_character_multiset,
    resistance_matrix, OracleCaps,
};
use crate::spectrum::{
    adjacency_spectrum, alpha, beta, folded_spectrum, gamma, is_bipartite_by_parity,
    laplacian_spectrum, spectral_gap, SpectrumKind,
};
use crate::ExactRational;

/// Ranges and knobs for a full verification run.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Ceiling for the closed-form sweeps (spectra, Kf identities,
    /// monotonicity, asymptotic sandwich).
    pub max_n_closed: u32,
    /// Ceiling for the reciprocal-binomial identity sweep.
    pub max_n_identity: u32,
    /// Ceiling for brute-force spectrum enumeration.
    pub max_n_enum: u32,
    /// Cost ceilings for the explicit-graph oracles.
    pub caps: OracleCaps,
    /// Seed for the randomized spot checks.
    pub seed: u64,
    /// Deliberately corrupt one enumerated multiplicity so the failure
    /// path of the suite can be demonstrated end to end.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_n_closed: 20,
            max_n_identity: 200,
            max_n_enum: 12,
            caps: OracleCaps::default(),
            seed: 0,
            inject_fault: false,
        }
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub instances: u64,
    pub passed: bool,
    pub detail: String,
}

fn finish(name: &str, instances: u64, failure: Option<String>) -> CheckResult {
    match failure {
        None => CheckResult {
            name: name.to_string(),
            instances,
            passed: true,
            detail: format!("{instances} instances verified"),
        },
        Some(detail) => CheckResult {
            name: name.to_string(),
            instances,
            passed: false,
            detail,
        },
    }
}

/// Outcome of a full run.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn failed_names(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }
}

fn params(n: u32, k: u32) -> EnhancedParams {
    EnhancedParams::new(n, k).expect("ranges only produce valid (n, k)")
}

fn all_params(max_n: u32) -> impl Iterator<Item = EnhancedParams> {
    (2..=max_n).flat_map(|n| (1..=n - 1).map(move |k| params(n, k)))
}

fn one_tenth() -> ExactRational {
    ExactRational::new(BigInt::one(), BigInt::from(10))
}

/// Eigenvalue via an explicit character sum equals eigenvalue via the
/// weight formula, for every character of every instance.
pub fn check_character_weight_equivalence(max_n: u32) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    'outer: for p in all_params(max_n) {
        let set = build_enhanced_generating_set(p).expect("valid params");
        for bits in 0..1u64 << p.n() {
            let chi = GroupElement::new(bits, p.n()).expect("bits in range");
            let direct = eigenvalue_by_character(chi, &set).expect("dimensions match");
            let (t, r) = weight_pair(chi, p).expect("dimensions match");
            let by_weight = eigenvalue_by_weight(t, r, p).expect("weights in range");
            instances += 1;
            if direct != by_weight {
                failure = Some(format!(
                    "n={} k={} chi={bits:b}: character sum {direct} != weight formula {by_weight}",
                    p.n(),
                    p.k()
                ));
                break 'outer;
            }
        }
    }
    finish("character_weight_equivalence", instances, failure)
}

/// The closed-form adjacency spectrum equals the brute-force character
/// enumeration, entry for entry. This is the fault-injection point.
pub fn check_spectrum_enumeration_equality(
    max_n: u32,
    caps: &OracleCaps,
    inject_fault: bool,
) -> CheckResult {
    let limit = max_n.min(caps.enumeration_n);
    let mut instances = 0u64;
    let mut failure = None;
    let mut first = true;
    for p in all_params(limit) {
        let set = build_enhanced_generating_set(p).expect("valid params");
        let mut enumerated = enumerate_character_multiset(&set);
        if inject_fault && first {
            if let Some(entry) = enumerated.get_mut(1) {
                entry.1 += 1;
            }
        }
        first = false;
        let closed: Vec<(i64, BigUint)> = adjacency_spectrum(p).entries().to_vec();
        let enumerated: Vec<(i64, BigUint)> = enumerated
            .into_iter()
            .map(|(value, count)| (value, BigUint::from(count)))
            .collect();
        instances += 1;
        if closed != enumerated {
            failure = Some(format!(
                "n={} k={}: enumerated multiset differs from closed form \
                 (enumerated {:?}, closed {:?})",
                p.n(),
                p.k(),
                enumerated,
                closed
            ));
            break;
        }
    }
    finish("spectrum_enumeration_equality", instances, failure)
}

/// The merged multiplicity gamma_t equals alpha_t + beta_{t+1} for all t.
pub fn check_family_merge_identity(max_n: u32) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    'outer: for p in all_params(max_n) {
        for t in 0..=p.n() {
            instances += 1;
            if gamma(p, t) != alpha(p, t) + beta(p, t + 1) {
                failure = Some(format!("n={} k={} t={t}", p.n(), p.k()));
                break 'outer;
            }
        }
    }
    finish("family_merge_identity", instances, failure)
}

/// gamma_n is 0 or 1, and 1 exactly when n and k share parity.
pub fn check_top_multiplicity_parity(max_n: u32) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    for p in all_params(max_n) {
        instances += 1;
        let top = gamma(p, p.n());
        let expected = if p.n() % 2 == p.k() % 2 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
        if top != expected {
            failure = Some(format!(
                "n={} k={}: gamma_n = {top}, expected {expected}",
                p.n(),
                p.k()
            ));
            break;
        }
    }
    finish("top_multiplicity_parity", instances, failure)
}

/// First three spectral moments of the closed form: total 2^n, trace 0,
/// trace of the square (n+1)2^n.
pub fn check_closed_form_moments(max_n: u32) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    for p in all_params(max_n) {
        let n = p.n();
        let spectrum = adjacency_spectrum(p);
        let mut total = BigUint::zero();
        let mut trace = BigInt::zero();
        let mut trace_sq = BigUint::zero();
        for (value, mult) in spectrum.entries() {
            total += mult;
            trace += BigInt::from(*value) * BigInt::from(mult.clone());
            trace_sq += BigUint::from((value * value) as u64) * mult;
        }
        let vertex_count = BigUint::one() << n;
        let expected_sq = BigUint::from(n as u64 + 1) * &vertex_count;
        instances += 1;
        if total != vertex_count || !trace.is_zero() || trace_sq != expected_sq {
            failure = Some(format!(
                "n={} k={}: moments (count {total}, trace {trace}, square {trace_sq})",
                n,
                p.k()
            ));
            break;
        }
    }
    finish("closed_form_moments", instances, failure)
}

/// Three readings of bipartiteness coincide: the parity rule, membership
/// of -(n+1) in the spectrum, and symmetry of the eigenvalue multiset.
pub fn check_bipartite_spectrum_equivalences(max_n: u32) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    for p in all_params(max_n) {
        let n = p.n();
        let spectrum = adjacency_spectrum(p);
        let by_parity = is_bipartite_by_parity(p);
        let has_minus_top = spectrum.multiplicity(-(n as i64 + 1)).is_some();
        let symmetric = spectrum
            .entries()
            .iter()
            .all(|(value, mult)| spectrum.multiplicity(-value) == Some(mult));
        instances += 1;
        if by_parity != has_minus_top || by_parity != symmetric {
            failure = Some(format!(
                "n={} k={}: parity {by_parity}, -(n+1) present {has_minus_top}, \
                 symmetric {symmetric}",
                n,
                p.k()
            ));
            break;
        }
    }
    finish("bipartite_spectrum_equivalences", instances, failure)
}

/// The dedicated folded-cube spectrum equals the general closed form at
/// k = 1, for both spectrum kinds.
pub fn check_folded_closed_form_agreement(max_n: u32) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    for n in 2..=max_n {
        let p = params(n, 1);
        let adjacency_ok =
            folded_spectrum(n, SpectrumKind::Adjacency).expect("n >= 2") == adjacency_spectrum(p);
        let laplacian_ok =
            folded_spectrum(n, SpectrumKind::Laplacian).expect("n >= 2") == laplacian_spectrum(p);
        instances += 2;
        if !adjacency_ok || !laplacian_ok {
            failure = Some(format!(
                "n={n}: adjacency agrees {adjacency_ok}, laplacian agrees {laplacian_ok}"
            ));
            break;
        }
    }
    finish("folded_closed_form_agreement", instances, failure)
}

/// Kf from the Laplacian spectrum equals the direct closed form.
pub fn check_kf_three_way_agreement(max_n: u32) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    for p in all_params(max_n) {
        let spectral = kf_from_laplacian(&laplacian_spectrum(p)).expect("connected");
        let closed = kf_closed_form(p);
        instances += 1;
        if spectral != closed {
            failure = Some(format!(
                "n={} k={}: spectral {spectral} != closed {closed}",
                p.n(),
                p.k()
            ));
            break;
        }
    }
    finish("kf_three_way_agreement", instances, failure)
}

/// The k = 1 and k = n-1 closed forms collapse to the general one.
pub fn check_kf_special_case_collapse(max_n: u32) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    for n in 2..=max_n {
        let folded_ok = kf_folded(n) == kf_closed_form(params(n, 1));
        let top_ok = kf_k_max(n) == kf_closed_form(params(n, n - 1));
        instances += 2;
        if !folded_ok || !top_ok {
            failure = Some(format!("n={n}: folded {folded_ok}, top-k {top_ok}"));
            break;
        }
    }
    finish("kf_special_case_collapse", instances, failure)
}

/// The even-binomial reciprocal identity holds for every n in range.
pub fn check_reciprocal_binomial_identity(max_n: u32) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    for n in 1..=max_n {
        let (left, right) = even_binomial_reciprocal_sides(n);
        instances += 1;
        if left != right {
            failure = Some(format!("n={n}: {left} != {right}"));
            break;
        }
    }
    finish("reciprocal_binomial_identity", instances, failure)
}

/// Kf strictly increases in k along every row.
pub fn check_kf_strict_monotonicity(max_n: u32) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    'outer: for n in 2..=max_n {
        let mut previous: Option<ExactRational> = None;
        for k in 1..=n - 1 {
            let value = kf_closed_form(params(n, k));
            if let Some(prev) = previous {
                instances += 1;
                if value <= prev {
                    failure = Some(format!("n={n} k={k}: {value} <= {prev}"));
                    break 'outer;
                }
            }
            previous = Some(value);
        }
    }
    finish("kf_strict_monotonicity", instances, failure)
}

/// The first increment has the closed form 2^{n-1}/(n+1).
pub fn check_first_increment_closed_form(max_n: u32) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    for n in 3..=max_n {
        let expected = ExactRational::new(BigInt::one() << (n - 1), BigInt::from(n + 1));
        let actual = delta_k(n, 1).expect("k = 1 < n - 1");
        instances += 1;
        if actual != expected {
            failure = Some(format!("n={n}: {actual} != {expected}"));
            break;
        }
    }
    finish("first_increment_closed_form", instances, failure)
}

/// Certificates: the bridge quantity agrees between its two evaluations,
/// is nonnegative, increments are positive, and consecutive increments
/// differ by exactly 2^n times the bridge quantity.
pub fn check_monotonicity_certificates(max_n: u32) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    'outer: for p in all_params(max_n) {
        let (n, k) = (p.n(), p.k());
        let certificate = match monotonicity_certificate(n, k) {
            Ok(c) => c,
            Err(e) => {
                failure = Some(format!("n={n} k={k}: {e}"));
                break;
            }
        };
        instances += 1;
        if certificate.f_sum != certificate.f_integral || certificate.f_sum.is_negative() {
            failure = Some(format!(
                "n={n} k={k}: sum {} vs integral {}",
                certificate.f_sum, certificate.f_integral
            ));
            break;
        }
        if let Some(delta) = &certificate.delta {
            if !delta.is_positive() {
                failure = Some(format!("n={n} k={k}: increment {delta} not positive"));
                break;
            }
        }
        if k + 3 <= n {
            let chain =
                delta_k(n, k + 1).expect("k + 1 <= n - 2") - delta_k(n, k).expect("k <= n - 2");
            let scaled =
                ExactRational::from_integer(BigInt::one() << n) * certificate.f_sum.clone();
            instances += 1;
            if chain != scaled {
                failure = Some(format!("n={n} k={k}: chain {chain} != 2^n * F = {scaled}"));
                break 'outer;
            }
        }
    }
    finish("monotonicity_certificates", instances, failure)
}

/// The normalized ratio is sandwiched by the two extreme sequences for
/// every (n, k), and at the probe dimension both sequences are within
/// 1/10 of their limit 1.
pub fn check_asymptotic_sandwich(max_n: u32, probe: Option<u32>) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    'outer: for n in 3..=max_n {
        let (lower, upper) = asymptotic_sequences(n);
        for k in 1..=n - 1 {
            let ratio = limit_ratio(params(n, k));
            instances += 1;
            if ratio < lower || ratio > upper {
                failure = Some(format!(
                    "n={n} k={k}: ratio {ratio} outside [{lower}, {upper}]"
                ));
                break 'outer;
            }
        }
    }
    if failure.is_none() {
        if let Some(probe_n) = probe {
            let one = ExactRational::one();
            let (lower, upper) = asymptotic_sequences(probe_n);
            let lower_gap = (lower - &one).abs();
            let upper_gap = (upper - &one).abs();
            instances += 2;
            if lower_gap >= one_tenth() || upper_gap >= one_tenth() {
                failure = Some(format!(
                    "probe n={probe_n}: |lower - 1| = {lower_gap}, |upper - 1| = {upper_gap}"
                ));
            }
        }
    }
    finish("asymptotic_sandwich", instances, failure)
}

/// Past small onsets, both extreme sequences strictly approach 1: the
/// lower one from n = 8 on, the upper one from n = 7 on.
pub fn check_asymptotic_approach(max_n: u32) -> CheckResult {
    let one = ExactRational::one();
    let gap = |value: ExactRational| (value - &one).abs();
    let mut instances = 0u64;
    let mut failure = None;
    for (onset, pick, label) in [(8u32, 0usize, "lower"), (7u32, 1usize, "upper")] {
        let mut previous: Option<ExactRational> = None;
        for n in onset..=max_n {
            let pair = asymptotic_sequences(n);
            let current = gap(if pick == 0 { pair.0 } else { pair.1 });
            if let Some(prev) = previous {
                instances += 1;
                if current >= prev {
                    failure = Some(format!(
                        "{label} sequence: distance to 1 did not shrink at n={n}"
                    ));
                    break;
                }
            }
            previous = Some(current);
        }
        if failure.is_some() {
            break;
        }
    }
    finish("asymptotic_approach", instances, failure)
}

/// The resistance-definition Kirchhoff index equals the closed form,
/// exactly, on every instance under the resistance cap.
pub fn check_resistance_kf_equivalence(caps: &OracleCaps) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    for p in all_params(caps.resistance_n) {
        let graph = match build_graph(p, caps) {
            Ok(g) => g,
            Err(e) => {
                failure = Some(format!("n={} k={}: {e}", p.n(), p.k()));
                break;
            }
        };
        let from_resistances = match effective_resistance_kf(&graph, caps) {
            Ok(v) => v,
            Err(e) => {
                failure = Some(format!("n={} k={}: {e}", p.n(), p.k()));
                break;
            }
        };
        let closed = kf_closed_form(p);
        instances += 1;
        if from_resistances != closed {
            failure = Some(format!(
                "n={} k={}: resistances give {from_resistances}, closed form {closed}",
                p.n(),
                p.k()
            ));
            break;
        }
    }
    finish("resistance_kf_equivalence", instances, failure)
}

/// BFS two-coloring of the explicit graph agrees with the parity rule.
pub fn check_bfs_bipartite_parity(max_n: u32, caps: &OracleCaps) -> CheckResult {
    let limit = max_n.min(caps.construction_n);
    let mut instances = 0u64;
    let mut failure = None;
    for p in all_params(limit) {
        let graph = build_graph(p, caps).expect("within construction cap");
        let summary = distance_summary(&graph).expect("connected");
        let by_parity = is_bipartite_by_parity(p);
        instances += 1;
        if summary.bipartite != by_parity {
            failure = Some(format!(
                "n={} k={}: BFS says {}, parity rule says {by_parity}",
                p.n(),
                p.k(),
                summary.bipartite
            ));
            break;
        }
    }
    finish("bfs_bipartite_parity", instances, failure)
}

/// Every vertex of the explicit graph has degree n+1 and the edge count
/// is (n+1)2^{n-1}.
pub fn check_degree_and_edge_count(max_n: u32, caps: &OracleCaps) -> CheckResult {
    let limit = max_n.min(caps.construction_n);
    let mut instances = 0u64;
    let mut failure = None;
    for p in all_params(limit) {
        let n = p.n();
        let graph = build_graph(p, caps).expect("within construction cap");
        let degree_ok =
            (0..graph.vertex_count() as u32).all(|v| graph.degree(v) == (n + 1) as usize);
        let expected_edges = ((n as u64) + 1) << (n - 1);
        instances += 1;
        if !degree_ok || graph.edge_count() != expected_edges {
            failure = Some(format!(
                "n={n} k={}: degrees uniform {degree_ok}, edges {} (expected {expected_edges})",
                p.k(),
                graph.edge_count()
            ));
            break;
        }
    }
    finish("degree_and_edge_count", instances, failure)
}

/// Resistance behaves like a metric on sampled triples: zero diagonal,
/// symmetry, positivity, and the triangle inequality.
pub fn check_resistance_metric_spot_checks(caps: &OracleCaps, seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6d6574726963);
    let mut instances = 0u64;
    let mut failure = None;
    'outer: for n in 2..=caps.resistance_n.min(5) {
        for k in 1..=n - 1 {
            let p = params(n, k);
            let graph = build_graph(p, caps).expect("within caps");
            let matrix = resistance_matrix(&graph, 0, caps).expect("connected");
            let total = graph.vertex_count() as u32;
            for _ in 0..40 {
                let u = rng.gen_range(0..total);
                let v = rng.gen_range(0..total);
                let w = rng.gen_range(0..total);
                let r_uv = matrix.resistance(u, v);
                let r_vw = matrix.resistance(v, w);
                let r_uw = matrix.resistance(u, w);
                let positive_ok = (u == v) == r_uv.is_zero() && !r_uv.is_negative();
                let symmetric_ok = r_uv == matrix.resistance(v, u);
                let triangle_ok = r_uw <= r_uv.clone() + r_vw;
                instances += 1;
                if !positive_ok || !symmetric_ok || !triangle_ok {
                    failure = Some(format!(
                        "n={n} k={k} (u,v,w)=({u},{v},{w}): positivity {positive_ok}, \
                         symmetry {symmetric_ok}, triangle {triangle_ok}"
                    ));
                    break 'outer;
                }
            }
        }
    }
    finish("resistance_metric_spot_checks", instances, failure)
}

/// Effective resistance never exceeds shortest-path distance.
pub fn check_resistance_below_distance(caps: &OracleCaps, seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x64697374);
    let mut instances = 0u64;
    let mut failure = None;
    'outer: for n in 2..=caps.resistance_n.min(6) {
        for k in 1..=n - 1 {
            let p = params(n, k);
            let graph = build_graph(p, caps).expect("within caps");
            let matrix = resistance_matrix(&graph, 0, caps).expect("connected");
            let total = graph.vertex_count() as u32;
            for _ in 0..60 {
                let u = rng.gen_range(0..total);
                let distances = crate::oracle::bfs_distances(&graph, u);
                let v = rng.gen_range(0..total);
                let resistance = matrix.resistance(u, v);
                let distance = ExactRational::from_integer(BigInt::from(distances[v as usize]));
                instances += 1;
                if resistance > distance {
                    failure = Some(format!(
                        "n={n} k={k} (u,v)=({u},{v}): r = {resistance} > d = {distance}"
                    ));
                    break 'outer;
                }
            }
        }
    }
    finish("resistance_below_distance", instances, failure)
}

/// Kf is strictly below the Wiener index (these graphs all have cycles).
pub fn check_kf_below_wiener(max_n: u32, caps: &OracleCaps) -> CheckResult {
    let limit = max_n.min(caps.construction_n);
    let mut instances = 0u64;
    let mut failure = None;
    for p in all_params(limit) {
        let graph = build_graph(p, caps).expect("within construction cap");
        let summary = distance_summary(&graph).expect("connected");
        let wiener = ExactRational::from_integer(BigInt::from(summary.wiener));
        let kf = kf_closed_form(p);
        instances += 1;
        if kf >= wiener {
            failure = Some(format!(
                "n={} k={}: Kf = {kf} not below Wiener = {wiener}",
                p.n(),
                p.k()
            ));
            break;
        }
    }
    finish("kf_below_wiener", instances, failure)
}

/// Resistances do not depend on the choice of ground vertex.
pub fn check_ground_choice_independence(caps: &OracleCaps, seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x67726f756e64);
    let mut instances = 0u64;
    let mut failure = None;
    'outer: for n in 2..=caps.resistance_n.min(4) {
        for k in 1..=n - 1 {
            let p = params(n, k);
            let graph = build_graph(p, caps).expect("within caps");
            let total = graph.vertex_count() as u32;
            let other_ground = rng.gen_range(1..total);
            let at_zero = resistance_matrix(&graph, 0, caps).expect("connected");
            let at_other = resistance_matrix(&graph, other_ground, caps).expect("connected");
            for u in 0..total {
                for v in 0..total {
                    instances += 1;
                    if at_zero.resistance(u, v) != at_other.resistance(u, v) {
                        failure = Some(format!(
                            "n={n} k={k} grounds (0, {other_ground}) disagree at ({u},{v})"
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    finish("ground_choice_independence", instances, failure)
}

/// The character enumerator satisfies universal Cayley-spectrum facts on
/// random generating sets: 2^n eigenvalues in total, all bounded by the
/// degree, the degree itself attained, trace zero, and second moment
/// |S| * 2^n.
pub fn check_random_set_character_sums(seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x72616e646f6d);
    let mut instances = 0u64;
    let mut failure = None;
    'outer: for n in 2..=9u32 {
        for _ in 0..3 {
            let universe = (1u64 << n) - 1; // nonzero words
            let size = rng.gen_range(1..=universe.min(n as u64 + 2)) as usize;
            let mut chosen: Vec<u64> = Vec::with_capacity(size);
            while chosen.len() < size {
                let candidate = rng.gen_range(1..=universe);
                if !chosen.contains(&candidate) {
                    chosen.push(candidate);
                }
            }
            let elements: Vec<GroupElement> = chosen
                .iter()
                .map(|&bits| GroupElement::new(bits, n).expect("in range"))
                .collect();
            let set = GeneratingSet::new(n, elements).expect("distinct nonzero");
            let multiset = enumerate_character_multiset(&set);

            let degree = size as i64;
            let total: u64 = multiset.iter().map(|(_, count)| count).sum();
            let bounded = multiset.iter().all(|(value, _)| value.abs() <= degree);
            let top_attained = multiset.first().map(|(value, _)| *value) == Some(degree);
            let trace: i64 = multiset
                .iter()
                .map(|(value, count)| value * *count as i64)
                .sum();
            let second: u64 = multiset
                .iter()
                .map(|(value, count)| (value * value) as u64 * count)
                .sum();
            instances += 1;
            if total != 1 << n
                || !bounded
                || !top_attained
                || trace != 0
                || second != (size as u64) << n
            {
                failure = Some(format!(
                    "n={n} set={chosen:?}: total {total}, bounded {bounded}, \
                     top attained {top_attained}, trace {trace}, second moment {second}"
                ));
                break 'outer;
            }
        }
    }
    finish("random_set_character_sums", instances, failure)
}

/// The spectral gap is 4 for k = 1 and 2 for every k >= 2.
pub fn check_spectral_gap_closed_form(max_n: u32) -> CheckResult {
    let mut instances = 0u64;
    let mut failure = None;
    for p in all_params(max_n) {
        let expected = if p.k() == 1 { 4 } else { 2 };
        let gap = spectral_gap(p);
        instances += 1;
        if gap != expected {
            failure = Some(format!(
                "n={} k={}: gap {gap}, expected {expected}",
                p.n(),
                p.k()
            ));
            break;
        }
    }
    finish("spectral_gap_closed_form", instances, failure)
}

/// Runs every check with the configured ranges.
pub fn run_all(config: &VerifyConfig) -> VerifyReport {
    let caps = &config.caps;
    let checks = vec![
        check_character_weight_equivalence(config.max_n_enum.min(10)),
        check_spectrum_enumeration_equality(config.max_n_enum, caps, config.inject_fault),
        check_family_merge_identity(config.max_n_closed),
        check_top_multiplicity_parity(config.max_n_closed),
        check_closed_form_moments(config.max_n_closed),
        check_bipartite_spectrum_equivalences(config.max_n_closed),
        check_folded_closed_form_agreement(config.max_n_closed),
        check_kf_three_way_agreement(config.max_n_closed),
        check_kf_special_case_collapse(config.max_n_closed),
        check_reciprocal_binomial_identity(config.max_n_identity),
        check_kf_strict_monotonicity(config.max_n_closed),
        check_first_increment_closed_form(config.max_n_closed),
        check_monotonicity_certificates(config.max_n_closed),
        check_asymptotic_sandwich(config.max_n_closed, Some(100)),
        check_asymptotic_approach(config.max_n_closed.max(20)),
        check_spectral_gap_closed_form(config.max_n_closed),
        check_random_set_character_sums(config.seed),
        check_degree_and_edge_count(8, caps),
        check_bfs_bipartite_parity(8, caps),
        check_kf_below_wiener(8, caps),
        check_resistance_metric_spot_checks(caps, config.seed),
        check_resistance_below_distance(caps, config.seed),
        check_ground_choice_independence(caps, config.seed),
        check_resistance_kf_equivalence(caps),
    ];
    VerifyReport {
        passed: checks.iter().all(|c| c.passed),
        seed: config.seed,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes_with_small_ranges() {
        let config = VerifyConfig {
            max_n_closed: 8,
            max_n_identity: 40,
            max_n_enum: 8,
            caps: OracleCaps {
                resistance_n: 5,
                ..OracleCaps::default()
            },
            seed: 7,
            inject_fault: false,
        };
        let report = run_all(&config);
        assert_eq!(report.checks.len(), 24);
        assert!(report.passed, "failed checks: {:?}", report.failed_names());
        assert!(report.checks.iter().all(|c| c.instances > 0));
    }

    #[test]
    fn injected_fault_is_caught_and_named() {
        let config = VerifyConfig {
            max_n_closed: 4,
            max_n_identity: 5,
            max_n_enum: 4,
            caps: OracleCaps {
                resistance_n: 3,
                ..OracleCaps::default()
            },
            seed: 7,
            inject_fault: true,
        };
        let report = run_all(&config);
        assert!(!report.passed);
        assert_eq!(report.failed_names(), vec!["spectrum_enumeration_equality"]);
        let failed = report
            .checks
            .iter()
            .find(|c| !c.passed)
            .expect("one failure");
        assert!(failed.detail.contains("n=2 k=1"));
    }

    #[test]
    fn check_results_serialize() {
        let result = check_reciprocal_binomial_identity(3);
        let value = serde_json::to_value(&result).unwrap();
        assert_eq!(value["name"], "reciprocal_binomial_identity");
        assert_eq!(value["passed"], true);
        assert_eq!(value["instances"], 3);
    }

    #[test]
    fn individual_checks_accept_explicit_ranges() {
        assert!(check_character_weight_equivalence(5).passed);
        assert!(check_asymptotic_sandwich(10, Some(50)).passed);
        assert!(check_asymptotic_approach(12).passed);
        let caps = OracleCaps {
            resistance_n: 4,
            ..OracleCaps::default()
        };
        assert!(check_resistance_kf_equivalence(&caps).passed);
        assert!(check_ground_choice_independence(&caps, 3).passed);
    }
}
