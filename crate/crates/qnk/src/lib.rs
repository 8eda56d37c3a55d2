//! Exact spectra and Kirchhoff indices of enhanced hypercube graphs.
//!
//! The enhanced hypercube Q_{n,k} (2 <= n, 1 <= k <= n-1) is the Cayley graph
//! of Z_2^n generated by the standard basis plus one extra generator flipping
//! coordinates k..n simultaneously; k = 1 gives the folded hypercube. Because
//! Z_2^n is abelian, every adjacency eigenvalue is a character sum over the
//! generating set, which this crate evaluates in closed form (binomial
//! multiplicity families) and cross-checks against independent brute-force
//! oracles: exhaustive character enumeration and effective-resistance
//! computation by exact rational linear algebra.
//!
//! Everything is exact — `i64` eigenvalues, `BigUint` multiplicities, and
//! `BigRational` Kirchhoff values. Decimal strings are presentation-layer
//! roundings produced by [`decimal`], never the other way around.

pub mod combin;
pub mod decimal;
pub mod error;
pub mod group;
pub mod kirchhoff;
pub mod linalg;
pub mod oracle;
pub mod reference;
pub mod spectrum;
pub mod verify;

/// Exact rational scalar used for Kirchhoff indices, resistances, and
/// asymptotic ratios. The backing type keeps values in lowest terms with a
/// positive denominator (zero is 0/1), which is exactly the invariant the
/// rest of the crate relies on.
pub type ExactRational = num_rational::BigRational;

pub use combin::binom;
pub use error::{Error, Result};
pub use group::{
    build_enhanced_generating_set, character_value, eigenvalue_by_character, eigenvalue_by_weight,
    weight_pair, EnhancedParams, GeneratingSet, GroupElement,
};
pub use kirchhoff::{
    asymptotic_sequences, bounds, delta_k, even_binomial_reciprocal_sides, kf_closed_form,
    kf_folded, kf_from_laplacian, kf_k_max, limit_ratio, monotonicity_certificate,
    MonotonicityCertificate,
};
pub use oracle::{
    bruteforce_spectrum, build_graph, effective_resistance_kf, graph_report, ExplicitGraph,
    OracleCaps, ResistanceReport,
};
pub use spectrum::{
    adjacency_spectrum, folded_spectrum, is_bipartite_by_parity, laplacian_spectrum,
    raw_eigenvalue_families, spectral_gap, RawFamilies, Spectrum, SpectrumKind,
};
