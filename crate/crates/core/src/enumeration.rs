//! Isomorph-free exhaustive generation of small connected multigraphs, and
//! the verification sweeps built on top of it.
//!
//! Generation is split in two stages: first all non-increasing degree
//! sequences with the required total (fixing the edge count), then all
//! symmetric multiplicity matrices realizing each sequence, deduplicated by
//! canonical form. Within the ≤ 8-vertex guard this is exhaustive and fast,
//! and the canonical-form deduplication doubles as a cross-check on the
//! isomorphism machinery.
//!
//! Three sweeps are provided:
//! - [`verify_bound`]: |Aut| against the genus bound (12 for genus 2,
//!   `2^g·g!` for genus ≥ 3) with exact extremal classification;
//! - [`verify_fixed_point_bound`]: vertex stabilizers against `2^g·g!`, the
//!   refined `2^(g−d+1)·d!·(g−d+1)!` bound where it applies, and the
//!   fixed-point equality classification;
//! - [`random_metric_sweep`]: the isometry-group bound on randomly
//!   length-decorated graphs, deterministic in the seed.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::aut::{self, CellSet};
use crate::error::{Error, Result};
use crate::families::{self, ExtremalClass, FixedPointClass};
use crate::graph::{Multigraph, VertexId};
use crate::metric::MetricGraph;
use crate::rational::Rational;

/// Largest vertex count any enumeration accepts (canonical-form budget).
pub const ENUM_VERTEX_GUARD: usize = 8;

/// Largest edge count [`enumerate_connected`] accepts.
pub const ENUM_EDGE_GUARD: usize = 16;

/// Parameters of a leafless enumeration sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    /// First Betti number of every generated graph (≥ 1).
    pub betti: usize,
    /// Upper bound on the vertex count (1 ..= 8).
    pub max_vertices: usize,
    /// Minimum vertex degree: 2 (all leafless graphs) or 3 (smooth cores).
    pub min_degree: usize,
}

impl EnumSpec {
    pub fn new(betti: usize, max_vertices: usize, min_degree: usize) -> Result<Self> {
        if betti < 1 {
            return Err(Error::BadParameter { what: "Betti number must be at least 1" });
        }
        if max_vertices < 1 {
            return Err(Error::BadParameter { what: "max_vertices must be at least 1" });
        }
        if max_vertices > ENUM_VERTEX_GUARD {
            return Err(Error::GuardExceeded {
                what: "enumeration vertex guard",
                limit: ENUM_VERTEX_GUARD,
                actual: max_vertices,
            });
        }
        if min_degree != 2 && min_degree != 3 {
            return Err(Error::BadParameter { what: "min_degree must be 2 or 3" });
        }
        Ok(EnumSpec { betti, max_vertices, min_degree })
    }

    /// The vertex bound actually reached: with min degree 3 the handshake
    /// identity Σ(deg − 2) = 2g − 2 caps the count at 2·betti − 2.
    pub fn effective_max_vertices(&self) -> usize {
        if self.min_degree >= 3 {
            self.max_vertices.min(2 * self.betti.saturating_sub(1))
        } else {
            self.max_vertices
        }
    }
}

/// All non-increasing sequences of `n` degrees, each ≥ `min_degree`,
/// summing to `total`.
fn degree_sequences(n: usize, total: usize, min_degree: usize) -> Vec<Vec<usize>> {
    fn rec(
        slots: usize,
        total: usize,
        max_part: usize,
        min_degree: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if slots == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if total < min_degree * slots || total > max_part * slots {
            return;
        }
        let hi = max_part.min(total - min_degree * (slots - 1));
        for d in min_degree..=hi {
            cur.push(d);
            rec(slots - 1, total - d, d, min_degree, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, total, total, min_degree, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Backtracking over symmetric multiplicity matrices with prescribed degree
/// sums (diagonal entries are loops and count twice). Emits every labeled
/// realization; the caller deduplicates.
struct MatrixSearch<'a> {
    n: usize,
    slots: Vec<(usize, usize)>,
    rem: Vec<usize>,
    mult: Vec<usize>,
    out: &'a mut Vec<Multigraph>,
}

impl MatrixSearch<'_> {
    fn run(&mut self, s: usize) {
        if s == self.slots.len() {
            debug_assert!(self.rem.iter().all(|&r| r == 0));
            let mut edges = Vec::new();
            for (slot, &(i, j)) in self.slots.iter().enumerate() {
                for _ in 0..self.mult[slot] {
                    edges.push((i, j));
                }
            }
            let graph = Multigraph::new(self.n, edges).expect("slot indices in range");
            self.out.push(graph);
            return;
        }
        let (i, j) = self.slots[s];
        let row_end = j == self.n - 1;
        let max_k =
            if i == j { self.rem[i] / 2 } else { self.rem[i].min(self.rem[j]) };
        for k in 0..=max_k {
            if i == j {
                self.rem[i] -= 2 * k;
            } else {
                self.rem[i] -= k;
                self.rem[j] -= k;
            }
            self.mult[s] = k;
            // Row i sees no further slots after (i, n−1): its degree must be
            // exactly consumed before moving on.
            if !row_end || self.rem[i] == 0 {
                self.run(s + 1);
            }
            if i == j {
                self.rem[i] += 2 * k;
            } else {
                self.rem[i] += k;
                self.rem[j] += k;
            }
        }
        self.mult[s] = 0;
    }
}

/// Every labeled multigraph on `n` vertices realizing the degree sequence.
fn realizations(n: usize, deg: &[usize]) -> Vec<Multigraph> {
    let slots: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut search = MatrixSearch {
        n,
        slots: Vec::new(),
        rem: deg.to_vec(),
        mult: Vec::new(),
        out: &mut out,
    };
    search.mult = vec![0; slots.len()];
    search.slots = slots;
    search.run(0);
    out
}

fn insert_canonical(
    found: &mut BTreeMap<Vec<u8>, Multigraph>,
    graph: Multigraph,
) -> Result<()> {
    let code = aut::canonical_form(&graph)?;
    found.entry(code).or_insert(graph);
    Ok(())
}

/// One representative per isomorphism class of connected multigraph with
/// the spec's Betti number, minimum degree, and vertex bound, sorted by
/// canonical code.
pub fn enumerate_leafless(spec: &EnumSpec) -> Result<Vec<Multigraph>> {
    let mut found: BTreeMap<Vec<u8>, Multigraph> = BTreeMap::new();
    for n in 1..=spec.effective_max_vertices() {
        let m = n + spec.betti - 1;
        for deg in degree_sequences(n, 2 * m, spec.min_degree) {
            for graph in realizations(n, &deg) {
                if graph.is_connected() {
                    debug_assert!(graph.is_leafless());
                    debug_assert_eq!(graph.betti_number(), spec.betti);
                    insert_canonical(&mut found, graph)?;
                }
            }
        }
    }
    Ok(found.into_values().collect())
}

/// One representative per isomorphism class of connected multigraph with at
/// most `max_vertices` vertices and `max_edges` edges — leaves allowed.
/// Sorted by canonical code.
pub fn enumerate_connected(max_vertices: usize, max_edges: usize) -> Result<Vec<Multigraph>> {
    if max_vertices < 1 {
        return Err(Error::BadParameter { what: "max_vertices must be at least 1" });
    }
    if max_vertices > ENUM_VERTEX_GUARD {
        return Err(Error::GuardExceeded {
            what: "enumeration vertex guard",
            limit: ENUM_VERTEX_GUARD,
            actual: max_vertices,
        });
    }
    if max_edges > ENUM_EDGE_GUARD {
        return Err(Error::GuardExceeded {
            what: "enumeration edge guard",
            limit: ENUM_EDGE_GUARD,
            actual: max_edges,
        });
    }
    let mut found: BTreeMap<Vec<u8>, Multigraph> = BTreeMap::new();
    for n in 1..=max_vertices {
        for m in 0..=max_edges {
            for deg in degree_sequences(n, 2 * m, 0) {
                for graph in realizations(n, &deg) {
                    if graph.is_connected() {
                        insert_canonical(&mut found, graph)?;
                    }
                }
            }
        }
    }
    Ok(found.into_values().collect())
}

/// What went wrong for one graph (or graph–vertex pair) in a sweep. Every
/// sweep is expected to produce none of these.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// A group order exceeded the genus bound.
    BoundExceeded,
    /// A stabilizer exceeded the refined incident-edge bound.
    RefinedBoundExceeded,
    /// The bound was attained but the classifier found no known family.
    ExtremalUnclassified,
    /// The classifier claimed a family but the bound was not attained.
    ClassWithoutEquality,
}

impl ViolationKind {
    pub fn tag(&self) -> &'static str {
        match self {
            ViolationKind::BoundExceeded => "bound_exceeded",
            ViolationKind::RefinedBoundExceeded => "refined_bound_exceeded",
            ViolationKind::ExtremalUnclassified => "extremal_unclassified",
            ViolationKind::ClassWithoutEquality => "class_without_equality",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Canonical code of the offending graph.
    pub code: Vec<u8>,
    /// The vertex involved, for stabilizer violations.
    pub vertex: Option<VertexId>,
    pub order: u64,
    pub bound: u64,
}

/// Per-graph result of the automorphism-bound sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphAssessment {
    pub code: Vec<u8>,
    pub order: u64,
    pub class: ExtremalClass,
}

/// Computes canonical code, |Aut|, and extremal class for one connected
/// leafless graph of genus ≥ 2. Pure; safe to run on a worker pool.
pub fn assess_graph(g: &Multigraph) -> Result<GraphAssessment> {
    Ok(GraphAssessment {
        code: aut::canonical_form(g)?,
        order: aut::automorphism_order(g)?,
        class: families::classify_extremal(g)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalEntry {
    pub code: Vec<u8>,
    pub class: ExtremalClass,
}

/// Result of sweeping |Aut| against the genus bound over an enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub spec: EnumSpec,
    pub graph_count: usize,
    pub max_aut_order: u64,
    pub bound: u64,
    pub violations: Vec<Violation>,
    /// Every bound-attaining graph with its recognized family.
    pub extremal: Vec<ExtremalEntry>,
    /// Filled by callers that time the sweep; 0 from the plain library call.
    pub runtime_ms: u64,
}

/// Folds per-graph assessments (in enumeration order) into a report.
pub fn aggregate_verification(
    spec: EnumSpec,
    assessments: &[GraphAssessment],
) -> Result<VerificationReport> {
    let bound = aut::aut_order_bound(spec.betti)?;
    let mut violations = Vec::new();
    let mut extremal = Vec::new();
    let mut max_aut_order = 0u64;
    for a in assessments {
        max_aut_order = max_aut_order.max(a.order);
        if a.order > bound {
            violations.push(Violation {
                kind: ViolationKind::BoundExceeded,
                code: a.code.clone(),
                vertex: None,
                order: a.order,
                bound,
            });
        }
        if a.order == bound {
            extremal.push(ExtremalEntry { code: a.code.clone(), class: a.class });
            if !a.class.is_extremal() {
                violations.push(Violation {
                    kind: ViolationKind::ExtremalUnclassified,
                    code: a.code.clone(),
                    vertex: None,
                    order: a.order,
                    bound,
                });
            }
        } else if a.class.is_extremal() {
            violations.push(Violation {
                kind: ViolationKind::ClassWithoutEquality,
                code: a.code.clone(),
                vertex: None,
                order: a.order,
                bound,
            });
        }
    }
    Ok(VerificationReport {
        spec,
        graph_count: assessments.len(),
        max_aut_order,
        bound,
        violations,
        extremal,
        runtime_ms: 0,
    })
}

/// Enumerates all connected leafless graphs per `spec` (Betti ≥ 2) and
/// checks every |Aut| against the genus bound, cross-validating the
/// extremal classification in both directions.
pub fn verify_bound(spec: &EnumSpec) -> Result<VerificationReport> {
    if spec.betti < 2 {
        return Err(Error::GenusTooSmall { genus: spec.betti, needed: 2 });
    }
    let graphs = enumerate_leafless(spec)?;
    let assessments: Vec<GraphAssessment> =
        graphs.iter().map(assess_graph).collect::<Result<_>>()?;
    aggregate_verification(*spec, &assessments)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointEquality {
    pub code: Vec<u8>,
    pub vertex: VertexId,
    pub class: FixedPointClass,
}

/// Result of sweeping vertex stabilizers against `2^g·g!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointReport {
    pub spec: EnumSpec,
    pub graph_count: usize,
    /// Number of (graph, vertex) pairs checked.
    pub pair_count: usize,
    pub bound: u64,
    pub max_stabilizer_order: u64,
    pub violations: Vec<Violation>,
    /// Every bound-attaining pair with its recognized case.
    pub equality: Vec<FixedPointEquality>,
    pub runtime_ms: u64,
}

/// The stabilizer bound refined by the incident edge count `d` at the fixed
/// vertex: `2^(g−d+1)·d!·(g−d+1)!`. `None` when `d > g + 1` (which cannot
/// occur for the pairs the sweep applies it to).
pub fn refined_fixed_point_bound(genus: usize, d: usize) -> Option<u64> {
    let spare = (genus + 1).checked_sub(d)?;
    let pow = 1u64.checked_shl(spare as u32)?;
    pow.checked_mul(aut::factorial_u64(d).ok()?)?
        .checked_mul(aut::factorial_u64(spare).ok()?)
}

/// Enumerates all connected leafless graphs per `spec` and checks, for every
/// vertex x: the stabilizer bound `2^g·g!`; the equality classification in
/// both directions; and — when the graph is bridgeless and deleting x keeps
/// it connected — the refined bound for `d` = number of edges at x.
pub fn verify_fixed_point_bound(spec: &EnumSpec) -> Result<FixedPointReport> {
    let bound = aut::fixed_point_order_bound(spec.betti)?;
    let graphs = enumerate_leafless(spec)?;
    let mut violations = Vec::new();
    let mut equality = Vec::new();
    let mut pair_count = 0usize;
    let mut max_stabilizer_order = 0u64;
    for g in &graphs {
        let code = aut::canonical_form(g)?;
        let bridgeless = g.bridges().is_empty();
        for x in g.vertices() {
            pair_count += 1;
            let order = aut::stabilizer_order(g, &CellSet::from_vertices([x]))?;
            max_stabilizer_order = max_stabilizer_order.max(order);
            if order > bound {
                violations.push(Violation {
                    kind: ViolationKind::BoundExceeded,
                    code: code.clone(),
                    vertex: Some(x),
                    order,
                    bound,
                });
            }
            let class = families::classify_fixed_point_extremal(g, x)?;
            if order == bound {
                equality.push(FixedPointEquality { code: code.clone(), vertex: x, class });
                if !class.is_extremal() {
                    violations.push(Violation {
                        kind: ViolationKind::ExtremalUnclassified,
                        code: code.clone(),
                        vertex: Some(x),
                        order,
                        bound,
                    });
                }
            } else if class.is_extremal() {
                violations.push(Violation {
                    kind: ViolationKind::ClassWithoutEquality,
                    code: code.clone(),
                    vertex: Some(x),
                    order,
                    bound,
                });
            }
            if bridgeless && g.delete_vertex(x)?.graph.connected_components().len() == 1 {
                let d = g
                    .edges()
                    .filter(|&e| {
                        let (u, v) = g.endpoints(e);
                        u == x || v == x
                    })
                    .count();
                let refined = refined_fixed_point_bound(spec.betti, d).unwrap_or(0);
                if order > refined {
                    violations.push(Violation {
                        kind: ViolationKind::RefinedBoundExceeded,
                        code: code.clone(),
                        vertex: Some(x),
                        order,
                        bound: refined,
                    });
                }
            }
        }
    }
    Ok(FixedPointReport {
        spec: *spec,
        graph_count: graphs.len(),
        pair_count,
        bound,
        max_stabilizer_order,
        violations,
        equality,
        runtime_ms: 0,
    })
}

/// Result of the randomized metric-graph sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricSweepReport {
    pub genus: usize,
    pub trials: usize,
    pub seed: u64,
    pub bound: u64,
    pub max_order: u64,
    /// Trials whose isometry group attained the bound.
    pub equality_trials: usize,
    pub violations: Vec<Violation>,
    pub runtime_ms: u64,
}

/// Edge lengths drawn in [`random_metric_sweep`]: a small mix of equal and
/// distinct values so both extremal and generic metrics occur.
pub fn default_length_palette() -> Vec<Rational> {
    vec![
        Rational::from_integer(1),
        Rational::from_integer(2),
        Rational::from_integer(3),
        Rational::new(1, 2),
    ]
}

/// Decorates random graphs from the genus-`g` enumeration with random
/// palette lengths and checks the isometry-group bound on each trial.
/// Deterministic in `seed`.
pub fn random_metric_sweep(genus: usize, trials: usize, seed: u64) -> Result<MetricSweepReport> {
    random_metric_sweep_with_options(
        genus,
        trials,
        seed,
        &default_length_palette(),
        (genus + 2).min(6),
    )
}

/// [`random_metric_sweep`] with an explicit length palette and vertex bound.
pub fn random_metric_sweep_with_options(
    genus: usize,
    trials: usize,
    seed: u64,
    palette: &[Rational],
    max_vertices: usize,
) -> Result<MetricSweepReport> {
    if !(2..=5).contains(&genus) {
        return Err(Error::BadParameter { what: "metric sweep genus must be between 2 and 5" });
    }
    if palette.is_empty() {
        return Err(Error::BadParameter { what: "length palette must be nonempty" });
    }
    if palette.iter().any(|l| !l.is_positive()) {
        return Err(Error::BadParameter { what: "length palette entries must be positive" });
    }
    let spec = EnumSpec::new(genus, max_vertices, 2)?;
    let graphs = enumerate_leafless(&spec)?;
    let codes: Vec<Vec<u8>> =
        graphs.iter().map(aut::canonical_form).collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    let mut max_order = 0u64;
    let mut equality_trials = 0usize;
    let mut bound = 0u64;
    for _ in 0..trials {
        let gi = (rng.next_u64() % graphs.len() as u64) as usize;
        let graph = &graphs[gi];
        let lengths: Vec<Rational> = (0..graph.num_edges())
            .map(|_| palette[(rng.next_u64() % palette.len() as u64) as usize])
            .collect();
        let metric = MetricGraph::new(graph.clone(), lengths)?;
        let report = metric.verify_metric_bound()?;
        bound = report.bound;
        max_order = max_order.max(report.order);
        if report.order == report.bound {
            equality_trials += 1;
        }
        if !report.ok {
            violations.push(Violation {
                kind: ViolationKind::BoundExceeded,
                code: codes[gi].clone(),
                vertex: None,
                order: report.order,
                bound: report.bound,
            });
        }
    }
    if trials == 0 {
        bound = aut::aut_order_bound(genus)?;
    }
    Ok(MetricSweepReport {
        genus,
        trials,
        seed,
        bound,
        max_order,
        equality_trials,
        violations,
        runtime_ms: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{banana, bouquet};

    fn spec(betti: usize, max_vertices: usize, min_degree: usize) -> EnumSpec {
        EnumSpec::new(betti, max_vertices, min_degree).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(EnumSpec::new(0, 4, 2).is_err());
        assert!(EnumSpec::new(2, 0, 2).is_err());
        assert!(matches!(
            EnumSpec::new(2, 9, 2),
            Err(Error::GuardExceeded { limit: 8, .. })
        ));
        assert!(EnumSpec::new(2, 4, 1).is_err());
        assert!(EnumSpec::new(2, 4, 4).is_err());
        assert_eq!(spec(3, 8, 3).effective_max_vertices(), 4);
        assert_eq!(spec(3, 8, 2).effective_max_vertices(), 8);
        assert_eq!(spec(1, 8, 3).effective_max_vertices(), 0);
    }

    #[test]
    fn degree_sequences_are_sound() {
        let seqs = degree_sequences(3, 8, 2);
        for s in &seqs {
            assert_eq!(s.iter().sum::<usize>(), 8);
            assert!(s.windows(2).all(|w| w[0] >= w[1]));
            assert!(s.iter().all(|&d| d >= 2));
        }
        // Partitions of 8 into 3 parts ≥ 2: (4,2,2), (3,3,2), (2,2,4)… as
        // non-increasing triples: exactly {(4,2,2), (3,3,2)}.
        assert_eq!(seqs.len(), 2);
        assert_eq!(degree_sequences(2, 3, 0).len(), 2); // (3,0), (2,1)
        assert!(degree_sequences(3, 5, 2).is_empty()); // odd total below reach
    }

    #[test]
    fn betti_one_stream_is_the_cycles() {
        for max in 1..=6 {
            let graphs = enumerate_leafless(&spec(1, max, 2)).unwrap();
            assert_eq!(graphs.len(), max);
            for g in &graphs {
                assert!(g.degrees().iter().all(|&d| d == 2));
                assert!(g.is_connected());
                assert_eq!(g.betti_number(), 1);
            }
            let mut sizes: Vec<usize> = graphs.iter().map(|g| g.num_vertices()).collect();
            sizes.sort_unstable();
            assert_eq!(sizes, (1..=max).collect::<Vec<_>>());
        }
    }

    #[test]
    fn betti_two_min_degree_three_stream() {
        let graphs = enumerate_leafless(&spec(2, 8, 3)).unwrap();
        assert_eq!(graphs.len(), 3);
        let banana2 = banana(2).unwrap();
        let bouquet2 = bouquet(2).unwrap();
        let dumbbell = Multigraph::new(2, [(0, 0), (1, 1), (0, 1)]).unwrap();
        for target in [&banana2, &bouquet2, &dumbbell] {
            assert!(
                graphs.iter().any(|g| aut::are_isomorphic(g, target).unwrap()),
                "{target:?} missing"
            );
        }
    }

    #[test]
    fn betti_two_full_stream_matches_closed_form() {
        // Every connected leafless graph of Betti 2 is a subdivision of the
        // bouquet (two loops), the banana (three parallel edges), or the
        // dumbbell (two loops joined by a path); counting subdivision
        // multisets with ≤ 8 vertices gives an independent total.
        let mut expected = 0usize;
        // Bouquet: loop sizes a ≤ b, vertices a + b − 1.
        for a in 1..=9usize {
            for b in a..=9 {
                if a + b <= 9 {
                    expected += 1;
                }
            }
        }
        // Banana: path lengths a ≤ b ≤ c ≥ 1, vertices a + b + c − 1.
        for a in 1..=9usize {
            for b in a..=9 {
                for c in b..=9 {
                    if a + b + c <= 9 {
                        expected += 1;
                    }
                }
            }
        }
        // Dumbbell: loop sizes a ≤ b, joining path length c, vertices
        // a + b + c − 1.
        for a in 1..=9usize {
            for b in a..=9 {
                for c in 1..=9 {
                    if a + b + c <= 9 {
                        expected += 1;
                    }
                }
            }
        }
        assert_eq!(expected, 93);
        let graphs = enumerate_leafless(&spec(2, 8, 2)).unwrap();
        assert_eq!(graphs.len(), expected);
    }

    #[test]
    fn streams_have_distinct_codes_and_are_prefix_monotone() {
        let small: Vec<Vec<u8>> = enumerate_leafless(&spec(2, 5, 2))
            .unwrap()
            .iter()
            .map(|g| aut::canonical_form(g).unwrap())
            .collect();
        let large: Vec<Vec<u8>> = enumerate_leafless(&spec(2, 6, 2))
            .unwrap()
            .iter()
            .map(|g| aut::canonical_form(g).unwrap())
            .collect();
        for codes in [&small, &large] {
            for w in codes.windows(2) {
                assert!(w[0] < w[1], "codes must be strictly sorted");
            }
        }
        for code in &small {
            assert!(large.contains(code));
        }
        assert!(small.len() < large.len());
    }

    #[test]
    fn connected_enumeration_small_counts() {
        // One vertex, up to two loops: trivial, one loop, two loops.
        let graphs = enumerate_connected(1, 2).unwrap();
        assert_eq!(graphs.len(), 3);
        // Two vertices, at most one edge: trivial, loop, double... none —
        // exactly the connected graphs: K1, loop, K2, plus nothing else
        // within the bounds (the 2-vertex edgeless graph is disconnected).
        let graphs = enumerate_connected(2, 1).unwrap();
        assert_eq!(graphs.len(), 3);
        // Leaves are allowed: the path on 3 vertices must appear.
        let graphs = enumerate_connected(3, 2).unwrap();
        let path3 = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(graphs.iter().any(|g| aut::are_isomorphic(g, &path3).unwrap()));
        assert!(enumerate_connected(9, 2).is_err());
        assert!(enumerate_connected(2, 17).is_err());
    }

    #[test]
    fn verify_bound_betti_two() {
        let report = verify_bound(&spec(2, 6, 2)).unwrap();
        assert_eq!(report.bound, 12);
        assert!(report.violations.is_empty());
        assert_eq!(report.max_aut_order, 12);
        // Within 6 vertices the bound is attained exactly by the banana and
        // its uniform subdivision with two parts (2 and 5 vertices).
        let classes: Vec<ExtremalClass> =
            report.extremal.iter().map(|e| e.class).collect();
        assert_eq!(
            classes,
            vec![ExtremalClass::BananaA { count: 1 }, ExtremalClass::BananaA { count: 2 }]
        );
        assert!(verify_bound(&spec(1, 4, 2)).is_err());
    }

    #[test]
    fn verify_bound_betti_three_min_degree_three() {
        // The degree-3 cores of genus 3 fit in 4 vertices; banana(3) and the
        // bouquet are the only ones attaining 48.
        let report = verify_bound(&spec(3, 8, 3)).unwrap();
        assert_eq!(report.bound, 48);
        assert!(report.violations.is_empty());
        let classes: Vec<ExtremalClass> =
            report.extremal.iter().map(|e| e.class).collect();
        assert_eq!(classes.len(), 1);
        assert!(classes.contains(&ExtremalClass::BananaA { count: 1 }));
    }

    #[test]
    fn fixed_point_sweep_betti_one() {
        let report = verify_fixed_point_bound(&spec(1, 5, 2)).unwrap();
        assert_eq!(report.bound, 2);
        assert!(report.violations.is_empty());
        assert_eq!(report.graph_count, 5);
        assert_eq!(report.pair_count, 1 + 2 + 3 + 4 + 5);
        // Equality exactly at every vertex of every cycle with ≥ 2 vertices.
        assert_eq!(report.equality.len(), 2 + 3 + 4 + 5);
        assert!(report
            .equality
            .iter()
            .all(|e| e.class == FixedPointClass::Banana1Subdivision));
    }

    #[test]
    fn fixed_point_sweep_betti_two() {
        let report = verify_fixed_point_bound(&spec(2, 6, 2)).unwrap();
        assert_eq!(report.bound, 8);
        assert!(report.violations.is_empty(), "{:?}", report.violations);
        // Equality cases in ≤ 6 vertices: subdivided bouquets with loop
        // sizes (2,2) and (3,3) at the cut vertex, and the subdivided
        // 2-spoke lollipop (loops 2, bridges 1) at the star center.
        assert_eq!(report.equality.len(), 3);
        let b_count = report
            .equality
            .iter()
            .filter(|e| e.class == FixedPointClass::BAtCutVertex)
            .count();
        let c_count = report
            .equality
            .iter()
            .filter(|e| e.class == FixedPointClass::CAtStarCenter)
            .count();
        assert_eq!((b_count, c_count), (2, 1));
    }

    #[test]
    fn refined_bound_values() {
        assert_eq!(refined_fixed_point_bound(2, 3), Some(6));
        assert_eq!(refined_fixed_point_bound(1, 2), Some(2));
        assert_eq!(refined_fixed_point_bound(3, 2), Some(16));
        assert_eq!(refined_fixed_point_bound(2, 4), None);
    }

    #[test]
    fn metric_sweep_is_deterministic_and_clean() {
        let a = random_metric_sweep(2, 30, 7).unwrap();
        let b = random_metric_sweep(2, 30, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.violations.is_empty());
        assert_eq!(a.bound, 12);
        assert!(a.max_order <= 12);
        let c = random_metric_sweep(2, 30, 8).unwrap();
        assert_eq!(c.trials, 30);
    }

    #[test]
    fn metric_sweep_equal_palette_attains_bound() {
        // With every length equal, any trial drawing the banana attains 12.
        let ones = [Rational::from_integer(1)];
        let report =
            random_metric_sweep_with_options(2, 40, 5, &ones, 2).unwrap();
        assert!(report.violations.is_empty());
        assert_eq!(report.max_order, 12);
        assert!(report.equality_trials >= 1);
    }

    #[test]
    fn metric_sweep_validation() {
        assert!(random_metric_sweep(1, 5, 0).is_err());
        assert!(random_metric_sweep(6, 5, 0).is_err());
        assert!(random_metric_sweep_with_options(2, 5, 0, &[], 4).is_err());
        let zero = [Rational::from_integer(0)];
        assert!(random_metric_sweep_with_options(2, 5, 0, &zero, 4).is_err());
    }
}
