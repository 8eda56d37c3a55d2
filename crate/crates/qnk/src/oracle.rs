//! Independent brute-force oracles: explicit graph construction, exact
//! effective resistances through the reduced Laplacian, character-sum
//! spectrum enumeration, and BFS distance invariants. Nothing here uses
//! the binomial closed forms — these routes exist so the closed forms can
//! be checked against them on every instance small enough to afford.

use std::collections::VecDeque;
use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::decimal::RationalRepr;
use crate::error::{Error, Result};
use crate::group::{build_enhanced_generating_set, EnhancedParams, GeneratingSet};
use crate::linalg::fraction_free_inverse;
use crate::spectrum::{adjacency_spectrum, Spectrum, SpectrumKind};
use crate::ExactRational;

/// Dimension ceilings for the brute-force routes, which scale exponentially
/// in n. Each cap names the dimension (not the vertex count) above which
/// the corresponding oracle refuses to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    /// Exact reduced-Laplacian inversion: cubic in 2^n big-integer steps.
    pub resistance_n: u32,
    /// Character enumeration: 2^n character sums.
    pub enumeration_n: u32,
    /// Explicit adjacency lists: (n+1) * 2^n vertex ids in memory.
    pub construction_n: u32,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self {
            resistance_n: 8,
            enumeration_n: 12,
            construction_n: 16,
        }
    }
}

impl OracleCaps {
    /// Reads `QNK_MAX_ORACLE_N` and, if set to a number, applies it as in
    /// [`OracleCaps::with_oracle_cap`]; otherwise returns the defaults.
    pub fn from_env() -> Self {
        match std::env::var("QNK_MAX_ORACLE_N")
            .ok()
            .and_then(|raw| raw.trim().parse::<u32>().ok())
        {
            Some(n) => Self::default().with_oracle_cap(n),
            None => Self::default(),
        }
    }

    /// Sets the resistance cap to exactly `n` and lifts the cheaper caps to
    /// at least `n`, never lowering them below their defaults.
    pub fn with_oracle_cap(self, n: u32) -> Self {
        Self {
            resistance_n: n,
            enumeration_n: self.enumeration_n.max(n),
            construction_n: self.construction_n.max(n),
        }
    }

    fn ensure(n: u32, cap: u32, what: &'static str, cost: &'static str) -> Result<()> {
        if n > cap {
            return Err(Error::CapExceeded { n, what, cap, cost });
        }
        Ok(())
    }

    pub fn check_resistance(&self, n: u32) -> Result<()> {
        Self::ensure(
            n,
            self.resistance_n,
            "effective-resistance computation",
            "exact inversion of a (2^n - 1) x (2^n - 1) integer matrix",
        )
    }

    pub fn check_enumeration(&self, n: u32) -> Result<()> {
        Self::ensure(
            n,
            self.enumeration_n,
            "character enumeration",
            "2^n character sums over n+1 generators",
        )
    }

    pub fn check_construction(&self, n: u32) -> Result<()> {
        Self::ensure(
            n,
            self.construction_n,
            "explicit graph construction",
            "adjacency lists holding (n+1) * 2^n vertex ids",
        )
    }
}

/// An undirected graph on 2^n vertices given by adjacency lists. Vertex v
/// is the group element whose bits are the binary digits of v (bit 0 =
/// coordinate 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitGraph {
    n: u32,
    neighbors: Vec<Vec<u32>>,
}

impl ExplicitGraph {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> u64 {
        let degree_sum: u64 = self.neighbors.iter().map(|adj| adj.len() as u64).sum();
        degree_sum / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.neighbors[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbors[v as usize].len()
    }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut edges: Vec<(u32, u32)> = (0..self.vertex_count() as u32)
            .flat_map(|v| {
                self.neighbors(v)
                    .iter()
                    .filter(move |&&w| w > v)
                    .map(move |&w| (v, w))
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Writes one "u v" line per edge, sorted.
    pub fn write_edge_list(&self, writer: &mut impl Write) -> std::io::Result<()> {
        for (u, v) in self.edges() {
            writeln!(writer, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Builds the Cayley graph of Z_2^n over an explicit generating set:
/// vertex v is adjacent to v XOR s for every generator s. The generators
/// are involutions and never the identity, so the graph is simple and the
/// adjacency lists are symmetric.
pub fn build_cayley_graph(set: &GeneratingSet, caps: &OracleCaps) -> Result<ExplicitGraph> {
    let n = set.n();
    caps.check_construction(n)?;
    assert!(n <= 32, "explicit vertices are indexed by u32");
    let vertex_count = 1usize << n;
    let generators: Vec<u64> = set.elements().iter().map(|g| g.bits()).collect();
    let neighbors: Vec<Vec<u32>> = (0..vertex_count as u64)
        .into_par_iter()
        .map(|v| generators.iter().map(|s| (v ^ s) as u32).collect())
        .collect();
    Ok(ExplicitGraph { n, neighbors })
}

/// Builds the explicit enhanced hypercube Q_{n,k}.
pub fn build_graph(params: EnhancedParams, caps: &OracleCaps) -> Result<ExplicitGraph> {
    build_cayley_graph(&build_enhanced_generating_set(params)?, caps)
}

/// Breadth-first distances from `source`; unreachable vertices get
/// `u32::MAX`.
pub fn bfs_distances(graph: &ExplicitGraph, source: u32) -> Vec<u32> {
    let mut distance = vec![u32::MAX; graph.vertex_count()];
    distance[source as usize] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let next = distance[v as usize] + 1;
        for &w in graph.neighbors(v) {
            if distance[w as usize] == u32::MAX {
                distance[w as usize] = next;
                queue.push_back(w);
            }
        }
    }
    distance
}

fn reachable_from(graph: &ExplicitGraph, source: u32) -> (Vec<u32>, usize) {
    let distance = bfs_distances(graph, source);
    let reachable = distance.iter().filter(|&&d| d != u32::MAX).count();
    (distance, reachable)
}

/// Exact effective resistances against a fixed ground vertex: the reduced
/// Laplacian (ground row and column deleted) inverted exactly, kept as a
/// common denominator `d` and an integer matrix `b` with inverse = b/d.
pub struct ResistanceMatrix {
    ground: u32,
    denominator: BigInt,
    scaled_inverse: Vec<Vec<BigInt>>,
}

impl ResistanceMatrix {
    pub fn ground(&self) -> u32 {
        self.ground
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    fn reduced_index(&self, v: u32) -> usize {
        debug_assert_ne!(v, self.ground);
        if v < self.ground {
            v as usize
        } else {
            v as usize - 1
        }
    }

    /// d * r(u,v): the resistance numerator over the shared denominator.
    fn pair_numerator(&self, u: u32, v: u32) -> BigInt {
        debug_assert_ne!(u, v);
        if u == self.ground || v == self.ground {
            let other = self.reduced_index(if u == self.ground { v } else { u });
            self.scaled_inverse[other][other].clone()
        } else {
            let (i, j) = (self.reduced_index(u), self.reduced_index(v));
            &self.scaled_inverse[i][i] + &self.scaled_inverse[j][j]
                - (&self.scaled_inverse[i][j] << 1u32)
        }
    }

    /// The effective resistance between u and v as an exact rational.
    pub fn resistance(&self, u: u32, v: u32) -> ExactRational {
        if u == v {
            return ExactRational::zero();
        }
        ExactRational::new(self.pair_numerator(u, v), self.denominator.clone())
    }
}

/// Inverts the reduced Laplacian of `graph` with respect to `ground`.
/// Fails if the dimension exceeds the resistance cap or the graph is
/// disconnected (in which case resistances do not exist).
pub fn resistance_matrix(
    graph: &ExplicitGraph,
    ground: u32,
    caps: &OracleCaps,
) -> Result<ResistanceMatrix> {
    caps.check_resistance(graph.n())?;
    let total = graph.vertex_count();
    assert!((ground as usize) < total, "ground vertex out of range");
    let (_, reachable) = reachable_from(graph, ground);
    if reachable != total {
        return Err(Error::DisconnectedGraph { reachable, total });
    }

    let size = total - 1;
    let reduced = |v: u32| -> usize {
        if v < ground {
            v as usize
        } else {
            v as usize - 1
        }
    };
    let mut laplacian = vec![vec![BigInt::zero(); size]; size];
    for v in 0..total as u32 {
        if v == ground {
            continue;
        }
        let row = reduced(v);
        laplacian[row][row] = BigInt::from(graph.degree(v));
        for &w in graph.neighbors(v) {
            if w != ground {
                laplacian[row][reduced(w)] -= 1;
            }
        }
    }

    let (denominator, scaled_inverse) = fraction_free_inverse(&laplacian)
        .expect("reduced Laplacian of a connected graph is invertible");
    Ok(ResistanceMatrix {
        ground,
        denominator,
        scaled_inverse,
    })
}

/// Kirchhoff index by definition: the sum of effective resistances over
/// all unordered vertex pairs, each computed from the exact inverse of the
/// reduced Laplacian. Every pair shares the denominator d, so the sum is
/// assembled in integers and reduced once.
pub fn effective_resistance_kf(graph: &ExplicitGraph, caps: &OracleCaps) -> Result<ExactRational> {
    let matrix = resistance_matrix(graph, 0, caps)?;
    let total = graph.vertex_count() as u32;
    let numerator: BigInt = (0..total)
        .into_par_iter()
        .map(|u| {
            let mut row_sum = BigInt::zero();
            for v in (u + 1)..total {
                row_sum += matrix.pair_numerator(u, v);
            }
            row_sum
        })
        .sum();
    Ok(ExactRational::new(numerator, matrix.denominator.clone()))
}

/// The adjacency eigenvalue multiset of Cay(Z_2^n, S) by direct character
/// sums: for each of the 2^n characters, the eigenvalue is the signed sum
/// over the generators. Returns (eigenvalue, count) pairs sorted by
/// descending eigenvalue.
pub fn enumerate_character_multiset(set: &GeneratingSet) -> Vec<(i64, u64)> {
    let n = set.n();
    let generators: Vec<u64> = set.elements().iter().map(|g| g.bits()).collect();
    let degree = generators.len() as i64;
    let bucket_count = 2 * generators.len() + 1;
    let buckets = (0..1u64 << n)
        .into_par_iter()
        .fold(
            || vec![0u64; bucket_count],
            |mut acc, chi| {
                let eigenvalue: i64 = generators
                    .iter()
                    .map(|&s| crate::group::character_sign(chi, s))
                    .sum();
                acc[(eigenvalue + degree) as usize] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; bucket_count],
            |mut left, right| {
                for (l, r) in left.iter_mut().zip(right) {
                    *l += r;
                }
                left
            },
        );
    buckets
        .into_iter()
        .enumerate()
        .filter(|(_, count)| *count > 0)
        .map(|(index, count)| (index as i64 - degree, count))
        .rev()
        .collect()
}

/// Adjacency spectrum of Q_{n,k} by brute-force character enumeration —
/// no binomial counting involved.
pub fn bruteforce_spectrum(params: EnhancedParams, caps: &OracleCaps) -> Result<Spectrum> {
    caps.check_enumeration(params.n())?;
    let set = build_enhanced_generating_set(params)?;
    let entries: Vec<(i64, BigUint)> = enumerate_character_multiset(&set)
        .into_iter()
        .map(|(value, count)| (value, BigUint::from(count)))
        .collect();
    Ok(Spectrum::new(SpectrumKind::Adjacency, params.n(), entries))
}

/// BFS-derived distance invariants of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceSummary {
    /// Sum of shortest-path distances over unordered pairs.
    pub wiener: BigUint,
    /// Largest distance between any two vertices.
    pub diameter: u32,
    /// Whether every edge joins the two BFS parity classes.
    pub bipartite: bool,
}

/// All-pairs BFS summary: Wiener index, diameter, and a two-coloring test.
pub fn distance_summary(graph: &ExplicitGraph) -> Result<DistanceSummary> {
    let total = graph.vertex_count();
    let (from_zero, reachable) = reachable_from(graph, 0);
    if reachable != total {
        return Err(Error::DisconnectedGraph { reachable, total });
    }
    let bipartite = (0..total as u32).all(|v| {
        graph
            .neighbors(v)
            .iter()
            .all(|&w| (from_zero[v as usize] ^ from_zero[w as usize]) & 1 == 1)
    });
    let (distance_total, diameter) = (0..total as u32)
        .into_par_iter()
        .map(|source| {
            let distances = bfs_distances(graph, source);
            let sum: u64 = distances.iter().map(|&d| d as u64).sum();
            let eccentricity = *distances.iter().max().expect("graph is nonempty");
            (sum as u128, eccentricity)
        })
        .reduce(|| (0u128, 0u32), |a, b| (a.0 + b.0, a.1.max(b.1)));
    Ok(DistanceSummary {
        wiener: BigUint::from(distance_total / 2),
        diameter,
        bipartite,
    })
}

/// Everything the brute-force routes can say about one Q_{n,k} instance,
/// cross-checked against the closed-form spectrum where the two meet:
/// `trace_ok` ties the spectrum's first moment to the (loop-free) graph,
/// `trace2_ok` ties its second moment to the explicit edge count, and
/// `degree_ok` confirms (n+1)-regularity.
#[derive(Clone, Debug)]
pub struct ResistanceReport {
    pub n: u32,
    pub k: u32,
    pub vertex_count: u64,
    pub edge_count: u64,
    /// Kirchhoff index from explicit effective resistances.
    pub kf: ExactRational,
    pub wiener: BigUint,
    pub bipartite: bool,
    pub diameter: u32,
    pub degree_ok: bool,
    pub trace_ok: bool,
    pub trace2_ok: bool,
}

impl Serialize for ResistanceReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut record = serializer.serialize_struct("ResistanceReport", 11)?;
        record.serialize_field("n", &self.n)?;
        record.serialize_field("k", &self.k)?;
        record.serialize_field("vertex_count", &self.vertex_count)?;
        record.serialize_field("edge_count", &self.edge_count)?;
        record.serialize_field("kf", &RationalRepr::from(&self.kf))?;
        record.serialize_field("wiener", &self.wiener.to_string())?;
        record.serialize_field("bipartite", &self.bipartite)?;
        record.serialize_field("diameter", &self.diameter)?;
        record.serialize_field("degree_ok", &self.degree_ok)?;
        record.serialize_field("trace_ok", &self.trace_ok)?;
        record.serialize_field("trace2_ok", &self.trace2_ok)?;
        record.end()
    }
}

/// Builds the explicit graph for (n, k) and assembles the full report.
pub fn graph_report(params: EnhancedParams, caps: &OracleCaps) -> Result<ResistanceReport> {
    let graph = build_graph(params, caps)?;
    let kf = effective_resistance_kf(&graph, caps)?;
    let summary = distance_summary(&graph)?;

    let n = params.n();
    let expected_degree = (n + 1) as usize;
    let degree_ok = (0..graph.vertex_count() as u32).all(|v| graph.degree(v) == expected_degree);
    let loop_free =
        (0..graph.vertex_count() as u32).all(|v| graph.neighbors(v).iter().all(|&w| w != v));

    let spectrum = adjacency_spectrum(params);
    let mut first_moment = BigInt::zero();
    let mut second_moment = BigUint::zero();
    for (value, mult) in spectrum.entries() {
        first_moment += BigInt::from(*value) * BigInt::from(mult.clone());
        second_moment += BigUint::from((value * value) as u64) * mult;
    }
    let trace_ok = loop_free && first_moment.is_zero();
    let trace2_ok = second_moment == BigUint::from(2 * graph.edge_count());

    Ok(ResistanceReport {
        n,
        k: params.k(),
        vertex_count: graph.vertex_count() as u64,
        edge_count: graph.edge_count(),
        kf,
        wiener: summary.wiener,
        bipartite: summary.bipartite,
        diameter: summary.diameter,
        degree_ok,
        trace_ok,
        trace2_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kirchhoff::kf_closed_form;
    use num_bigint::BigInt;

    fn params(n: u32, k: u32) -> EnhancedParams {
        EnhancedParams::new(n, k).unwrap()
    }

    fn caps() -> OracleCaps {
        OracleCaps::default()
    }

    fn rat64(n: i64, d: i64) -> ExactRational {
        ExactRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn cap_composition() {
        let c = caps();
        assert_eq!(
            (c.resistance_n, c.enumeration_n, c.construction_n),
            (8, 12, 16)
        );
        let raised = c.with_oracle_cap(20);
        assert_eq!(
            (
                raised.resistance_n,
                raised.enumeration_n,
                raised.construction_n
            ),
            (20, 20, 20)
        );
        let lowered = c.with_oracle_cap(4);
        assert_eq!(
            (
                lowered.resistance_n,
                lowered.enumeration_n,
                lowered.construction_n
            ),
            (4, 12, 16)
        );
    }

    #[test]
    fn complete_graph_structure() {
        // Q_{2,1} is K_4.
        let g = build_graph(params(2, 1), &caps()).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert!((0..4).all(|v| g.degree(v) == 3));
        assert_eq!(
            g.edges(),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        );
        let mut listing = Vec::new();
        g.write_edge_list(&mut listing).unwrap();
        assert_eq!(
            String::from_utf8(listing).unwrap(),
            "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
        );
    }

    #[test]
    fn resistance_kf_matches_closed_form_small() {
        for (n, k, expected) in [
            (2, 1, rat64(3, 1)),
            (3, 1, rat64(13, 1)),
            (3, 2, rat64(14, 1)),
            (4, 2, rat64(258, 5)),
            (4, 3, rat64(54, 1)),
        ] {
            let g = build_graph(params(n, k), &caps()).unwrap();
            let kf = effective_resistance_kf(&g, &caps()).unwrap();
            assert_eq!(kf, expected, "n={n} k={k}");
            assert_eq!(kf, kf_closed_form(params(n, k)), "n={n} k={k}");
        }
    }

    #[test]
    fn complete_bipartite_structure() {
        // Q_{3,1} is K_{4,4}: bipartite, diameter 2, Wiener 4*6 + 16*1 = 40.
        let g = build_graph(params(3, 1), &caps()).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 16);
        let summary = distance_summary(&g).unwrap();
        assert!(summary.bipartite);
        assert_eq!(summary.diameter, 2);
        assert_eq!(summary.wiener, BigUint::from(40u32));

        // Q_{3,2} is not bipartite: it has odd cycles (e.g. via e_2, e_3,
        // and the flip of coordinates 2..3).
        let g = build_graph(params(3, 2), &caps()).unwrap();
        assert!(!distance_summary(&g).unwrap().bipartite);
    }

    #[test]
    fn edge_count_follows_regularity() {
        let g = build_graph(params(4, 3), &caps()).unwrap();
        assert_eq!(g.edge_count(), 40);
        for n in 2..=8u32 {
            for k in 1..=n - 1 {
                let g = build_graph(params(n, k), &caps()).unwrap();
                assert_eq!(g.edge_count() as u128, (n as u128 + 1) << (n - 1));
            }
        }
    }

    #[test]
    fn complete_graph_resistances() {
        // Every pair in K_4 has effective resistance 2/|V| = 1/2.
        let g = build_graph(params(2, 1), &caps()).unwrap();
        let m = resistance_matrix(&g, 0, &caps()).unwrap();
        for u in 0..4 {
            assert_eq!(m.resistance(u, u), ExactRational::zero());
            for v in 0..4 {
                if u != v {
                    assert_eq!(m.resistance(u, v), rat64(1, 2), "u={u} v={v}");
                    assert_eq!(m.resistance(u, v), m.resistance(v, u));
                }
            }
        }
    }

    #[test]
    fn ground_choice_does_not_matter() {
        let g = build_graph(params(3, 2), &caps()).unwrap();
        let m0 = resistance_matrix(&g, 0, &caps()).unwrap();
        let m5 = resistance_matrix(&g, 5, &caps()).unwrap();
        for u in 0..8 {
            for v in 0..8 {
                assert_eq!(m0.resistance(u, v), m5.resistance(u, v), "u={u} v={v}");
            }
        }
    }

    #[test]
    fn resistance_cap_is_enforced() {
        let g = build_graph(params(9, 4), &caps()).unwrap(); // construction is fine
        assert!(matches!(
            effective_resistance_kf(&g, &caps()),
            Err(Error::CapExceeded { n: 9, cap: 8, .. })
        ));
        let raised = caps().with_oracle_cap(9);
        assert!(raised.check_resistance(9).is_ok());
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g = ExplicitGraph {
            n: 1,
            neighbors: vec![vec![], vec![]],
        };
        assert!(matches!(
            effective_resistance_kf(&g, &caps()),
            Err(Error::DisconnectedGraph {
                reachable: 1,
                total: 2
            })
        ));
        assert!(matches!(
            distance_summary(&g),
            Err(Error::DisconnectedGraph { .. })
        ));
    }

    #[test]
    fn character_enumeration_matches_closed_form() {
        for n in 2..=8u32 {
            for k in 1..=n - 1 {
                let brute = bruteforce_spectrum(params(n, k), &caps()).unwrap();
                assert_eq!(brute, adjacency_spectrum(params(n, k)), "n={n} k={k}");
            }
        }
        let q32 = bruteforce_spectrum(params(3, 2), &caps()).unwrap();
        let entries: Vec<(i64, u32)> = q32
            .entries()
            .iter()
            .map(|(v, m)| (*v, u32::try_from(m).unwrap()))
            .collect();
        assert_eq!(entries, vec![(4, 1), (2, 1), (0, 3), (-2, 3)]);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let tight = OracleCaps {
            enumeration_n: 5,
            ..caps()
        };
        assert!(matches!(
            bruteforce_spectrum(params(6, 2), &tight),
            Err(Error::CapExceeded { n: 6, cap: 5, .. })
        ));
    }

    #[test]
    fn complete_graph_distances() {
        let g = build_graph(params(2, 1), &caps()).unwrap();
        assert_eq!(bfs_distances(&g, 0), vec![0, 1, 1, 1]);
        let summary = distance_summary(&g).unwrap();
        assert_eq!(summary.wiener, BigUint::from(6u32));
        assert_eq!(summary.diameter, 1);
        assert!(!summary.bipartite);
    }

    #[test]
    fn report_is_consistent_and_serializes() {
        let report = graph_report(params(2, 1), &caps()).unwrap();
        assert_eq!(report.vertex_count, 4);
        assert_eq!(report.edge_count, 6);
        assert_eq!(report.kf, rat64(3, 1));
        assert_eq!(report.wiener, BigUint::from(6u32));
        assert_eq!(report.diameter, 1);
        assert!(report.degree_ok && report.trace_ok && report.trace2_ok);
        assert!(!report.bipartite);

        let value = serde_json::to_value(&report).unwrap();
        assert_eq!(value["kf"]["num"], "3");
        assert_eq!(value["kf"]["den"], "1");
        assert_eq!(value["kf"]["decimal"], "3");
        assert_eq!(value["wiener"], "6");
        assert_eq!(value["vertex_count"], 4);
        assert_eq!(value["bipartite"], false);
    }

    #[test]
    fn report_wiener_exceeds_kf() {
        for n in 2..=6u32 {
            for k in 1..=n - 1 {
                let report = graph_report(params(n, k), &caps()).unwrap();
                let wiener = ExactRational::from_integer(BigInt::from(report.wiener.clone()));
                assert!(report.kf <= wiener, "n={n} k={k}");
            }
        }
    }
}
