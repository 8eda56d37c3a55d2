//! Exact closed-form adjacency and Laplacian spectra of Q_{n,k}, the
//! pre-merge eigenvalue families, and derived scalar facts (spectral gap,
//! bipartiteness by parity).
//!
//! Eigenvalues of Q_{n,k} are n - 2t + (-1)^r over characters of weight t
//! whose restriction to coordinates k..n has weight r. Grouping by the sign
//! (-1)^r gives two arithmetic families; merging them yields the spectrum.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::combin::binom;
use crate::error::{Error, Result};
use crate::group::EnhancedParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpectrumKind {
    Adjacency,
    Laplacian,
}

impl SpectrumKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumKind::Adjacency => "adjacency",
            SpectrumKind::Laplacian => "laplacian",
        }
    }
}

impl fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An exact spectrum: distinct eigenvalues with big-integer multiplicities,
/// sorted strictly descending, totalling 2^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    kind: SpectrumKind,
    n: u32,
    entries: Vec<(i64, BigUint)>,
}

fn validate_entries(
    kind: SpectrumKind,
    n: u32,
    entries: &[(i64, BigUint)],
) -> std::result::Result<(), String> {
    if entries.is_empty() {
        return Err("spectrum has no entries".into());
    }
    for w in entries.windows(2) {
        if w[0].0 <= w[1].0 {
            return Err(format!(
                "eigenvalues not strictly descending: {} then {}",
                w[0].0, w[1].0
            ));
        }
    }
    if entries.iter().any(|(_, m)| m.is_zero()) {
        return Err("zero multiplicity entry".into());
    }
    let total: BigUint = entries.iter().map(|(_, m)| m).sum();
    if total != BigUint::one() << n {
        return Err(format!("multiplicities sum to {total}, want 2^{n}"));
    }
    let top = n as i64 + 1;
    match kind {
        SpectrumKind::Adjacency => {
            if entries[0].0 != top || !entries[0].1.is_one() {
                return Err(format!(
                    "adjacency spectrum must start with eigenvalue {top} of multiplicity 1"
                ));
            }
            if entries.iter().any(|(v, _)| (top - v) % 2 != 0) {
                return Err(format!(
                    "adjacency eigenvalues must have the parity of {top}"
                ));
            }
        }
        SpectrumKind::Laplacian => {
            let last = entries.last().expect("nonempty");
            if last.0 != 0 || !last.1.is_one() {
                return Err(
                    "laplacian spectrum must end with eigenvalue 0 of multiplicity 1".into(),
                );
            }
            if entries
                .iter()
                .any(|(v, _)| v % 2 != 0 || *v < 0 || *v > 2 * top)
            {
                return Err(format!(
                    "laplacian eigenvalues must be even in [0, {}]",
                    2 * top
                ));
            }
        }
    }
    Ok(())
}

impl Spectrum {
    /// Assembles a spectrum, enforcing the type invariants. Panics on
    /// violation: producers inside this crate are expected to construct only
    /// valid spectra (external JSON goes through the validating `Deserialize`).
    pub fn new(kind: SpectrumKind, n: u32, entries: Vec<(i64, BigUint)>) -> Self {
        if let Err(msg) = validate_entries(kind, n, &entries) {
            panic!("invalid {kind} spectrum for n={n}: {msg}");
        }
        Self { kind, n, entries }
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// (eigenvalue, multiplicity) pairs, strictly descending.
    pub fn entries(&self) -> &[(i64, BigUint)] {
        &self.entries
    }

    pub fn multiplicity(&self, eigenvalue: i64) -> Option<&BigUint> {
        self.entries
            .iter()
            .find(|(v, _)| *v == eigenvalue)
            .map(|(_, m)| m)
    }

    pub fn vertex_count(&self) -> BigUint {
        BigUint::one() << self.n
    }

    /// CSV rendering with columns eigenvalue,multiplicity (descending).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("eigenvalue,multiplicity\n");
        for (v, m) in &self.entries {
            out.push_str(&format!("{v},{m}\n"));
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct SpectrumWire {
    kind: String,
    n: u32,
    entries: Vec<(i64, String)>,
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = SpectrumWire {
            kind: self.kind.as_str().to_string(),
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(v, m)| (*v, m.to_string()))
                .collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Spectrum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = SpectrumWire::deserialize(deserializer)?;
        let kind = match wire.kind.as_str() {
            "adjacency" => SpectrumKind::Adjacency,
            "laplacian" => SpectrumKind::Laplacian,
            other => {
                return Err(de::Error::custom(format!(
                    "unknown spectrum kind {other:?}"
                )))
            }
        };
        let mut entries = Vec::with_capacity(wire.entries.len());
        for (v, m) in wire.entries {
            let m: BigUint = m
                .parse()
                .map_err(|e| de::Error::custom(format!("bad multiplicity {m:?}: {e}")))?;
            entries.push((v, m));
        }
        validate_entries(kind, wire.n, &entries).map_err(de::Error::custom)?;
        Ok(Spectrum {
            kind,
            n: wire.n,
            entries,
        })
    }
}

/// Multiplicity of the eigenvalue n-2t-1 in the family where the tail
/// generator contributes -1 (defined for t = 1..=n).
pub(crate) fn alpha(params: EnhancedParams, t: u32) -> BigUint {
    let (n, k, t) = (params.n() as i64, params.k() as i64, t as i64);
    let j_max = ((n - k + 2) / 2).min((t + 1) / 2);
    let mut sum = BigUint::zero();
    for j in 1..=j_max {
        sum += binom(n - k + 1, 2 * j - 1) * binom(k - 1, t - 2 * j + 1);
    }
    sum
}

/// Multiplicity of the eigenvalue n-2t+1 in the family where the tail
/// generator contributes +1 (defined for t = 0..=n; identically 0 above n).
pub(crate) fn beta(params: EnhancedParams, t: u32) -> BigUint {
    let (n, k, t) = (params.n() as i64, params.k() as i64, t as i64);
    let j_max = ((n - k + 1) / 2).min(t / 2);
    let mut sum = BigUint::zero();
    for j in 0..=j_max {
        sum += binom(n - k + 1, 2 * j) * binom(k - 1, t - 2 * j);
    }
    sum
}

/// Merged multiplicity of the eigenvalue n-2t-1 (t = 0..=n): equals
/// alpha_t + beta_{t+1}, collapsed by the Pascal rule into binomials of
/// n-k+2. gamma_0 = k-1 and gamma_n is 0 or 1 by the parity criterion.
pub(crate) fn gamma(params: EnhancedParams, t: u32) -> BigUint {
    let (n, k, t) = (params.n() as i64, params.k() as i64, t as i64);
    let j_max = ((n - k + 2) / 2).min((t + 1) / 2);
    let mut sum = BigUint::zero();
    for j in 0..=j_max {
        sum += binom(n - k + 2, 2 * j) * binom(k - 1, t + 1 - 2 * j);
    }
    sum
}

/// The two pre-merge eigenvalue families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawFamilies {
    /// (t, eigenvalue n-2t-1, multiplicity alpha_t) for t = 1..=n.
    pub zeta: Vec<(u32, i64, BigUint)>,
    /// (t, eigenvalue n-2t+1, multiplicity beta_t) for t = 0..=n.
    pub xi: Vec<(u32, i64, BigUint)>,
}

/// Both eigenvalue families of Q_{n,k} before merging; multiplicities may be
/// zero here (merging drops empty entries).
pub fn raw_eigenvalue_families(params: EnhancedParams) -> RawFamilies {
    let n = params.n();
    let zeta = (1..=n)
        .map(|t| (t, n as i64 - 2 * t as i64 - 1, alpha(params, t)))
        .collect();
    let xi = (0..=n)
        .map(|t| (t, n as i64 - 2 * t as i64 + 1, beta(params, t)))
        .collect();
    RawFamilies { zeta, xi }
}

/// Exact adjacency spectrum of Q_{n,k}: eigenvalue n+1 once, then n-2t-1
/// with multiplicity gamma_t for t = 0..=n, zero multiplicities omitted.
pub fn adjacency_spectrum(params: EnhancedParams) -> Spectrum {
    let n = params.n();
    let mut entries = vec![(n as i64 + 1, BigUint::one())];
    for t in 0..=n {
        let m = gamma(params, t);
        if !m.is_zero() {
            entries.push((n as i64 - 2 * t as i64 - 1, m));
        }
    }
    Spectrum::new(SpectrumKind::Adjacency, n, entries)
}

/// Exact Laplacian spectrum: the graph is (n+1)-regular, so each adjacency
/// eigenvalue lambda maps to n+1-lambda with the same multiplicity.
pub fn laplacian_spectrum(params: EnhancedParams) -> Spectrum {
    let adjacency = adjacency_spectrum(params);
    let n = adjacency.n();
    let shift = n as i64 + 1;
    let mut entries: Vec<(i64, BigUint)> = adjacency
        .entries()
        .iter()
        .map(|(v, m)| (shift - v, m.clone()))
        .collect();
    entries.reverse();
    Spectrum::new(SpectrumKind::Laplacian, n, entries)
}

/// Closed-form spectrum of the folded hypercube Q_{n,1}, written directly
/// in binomials: nonzero multiplicities sit at odd t only, with multiplicity
/// C(n+1, t+1). Odd n ends at eigenvalue -n-1 (Laplacian 2n+2) with
/// multiplicity 1; even n ends at -n+1 (Laplacian 2n) with multiplicity n+1.
/// Must equal the generic spectrum at k = 1 exactly.
pub fn folded_spectrum(n: u32, kind: SpectrumKind) -> Result<Spectrum> {
    if n < 2 {
        return Err(Error::InvalidParams { n, k: 1 });
    }
    let odd_t = (1..=n).step_by(2);
    let spectrum = match kind {
        SpectrumKind::Adjacency => {
            let mut entries = vec![(n as i64 + 1, BigUint::one())];
            entries.extend(odd_t.map(|t| {
                (
                    n as i64 - 2 * t as i64 - 1,
                    binom(n as i64 + 1, t as i64 + 1),
                )
            }));
            Spectrum::new(SpectrumKind::Adjacency, n, entries)
        }
        SpectrumKind::Laplacian => {
            let mut entries = vec![(0i64, BigUint::one())];
            entries.extend(odd_t.map(|t| (2 * t as i64 + 2, binom(n as i64 + 1, t as i64 + 1))));
            entries.reverse();
            Spectrum::new(SpectrumKind::Laplacian, n, entries)
        }
    };
    Ok(spectrum)
}

/// Difference between the two largest adjacency eigenvalues: 4 for the
/// folded hypercube (k = 1), 2 otherwise.
pub fn spectral_gap(params: EnhancedParams) -> i64 {
    let spectrum = adjacency_spectrum(params);
    let e = spectrum.entries();
    e[0].0 - e[1].0
}

/// Q_{n,k} is bipartite exactly when n and k share parity (equivalently,
/// when -n-1 appears in the adjacency spectrum).
pub fn is_bipartite_by_parity(params: EnhancedParams) -> bool {
    params.n() % 2 == params.k() % 2
}
