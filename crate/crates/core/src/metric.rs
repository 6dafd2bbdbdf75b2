//! Metric graphs: multigraphs whose edges carry exact positive rational
//! lengths, together with their isometry groups.
//!
//! The isometry group is computed combinatorially through the *canonical
//! model*: first suppress every 2-valent vertex sitting between two distinct
//! edges (summing lengths), then split every remaining loop at its midpoint
//! into two parallel half-length edges. The model is loopless, so a graph map
//! on it determines a point map of the metric space uniquely, and the
//! isometries of the metric space correspond exactly to the length-preserving
//! automorphisms of the model.

use alloc::vec;
use alloc::vec::Vec;

use crate::aut::{self, GraphMap, SearchRequest};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::rational::Rational;

/// A multigraph with strictly positive rational edge lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricGraph {
    graph: Multigraph,
    lengths: Vec<Rational>,
}

/// Where a canonical-model cell sits inside the graph the model was built
/// from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointOrigin {
    /// The model vertex is an original vertex.
    AtVertex(VertexId),
    /// The model vertex is an interior point of an original edge, at the
    /// given distance from the edge's first stored endpoint.
    OnEdge { edge: EdgeId, offset: Rational },
}

/// The distinguished loopless model of a metric graph: its vertices are the
/// points of valence ≠ 2 plus the midpoints of the loops of the smoothed
/// graph, with provenance back to the original cells.
#[derive(Clone, Debug)]
pub struct CanonicalModel {
    pub model: MetricGraph,
    /// Per model vertex: its position in the original graph.
    pub vertex_origin: Vec<PointOrigin>,
    /// Per model edge: the original edges its interior runs through, in
    /// order along the model edge (an original edge containing a loop
    /// midpoint in its interior appears in both half lists).
    pub edge_origin: Vec<Vec<EdgeId>>,
}

/// The isometry group of a metric graph, presented as length-preserving
/// automorphisms of its canonical model.
#[derive(Clone, Debug)]
pub struct IsometryGroup {
    pub order: u64,
    /// Generators, acting on `model.model.graph`.
    pub generators: Vec<GraphMap>,
    /// All elements when the order is within the materialization cap.
    pub elements: Option<Vec<GraphMap>>,
    pub model: CanonicalModel,
}

/// Which of the three equality families a metric graph belongs to, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricExtremalClass {
    /// Two vertices joined by g+1 parallel edges of one common length,
    /// genus 2 or 3.
    Banana,
    /// One vertex with g loops of one common length, genus ≥ 3.
    Bouquet,
    /// A g-spoke star whose spokes each carry one loop; all loops share one
    /// length and all spokes share one length, genus ≥ 3.
    Lollipop,
    NotExtremal,
}

/// Result of checking the isometry-group order of one metric graph against
/// the genus bound (12 for genus 2, `2^g·g!` for genus ≥ 3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricBoundReport {
    pub genus: usize,
    pub order: u64,
    pub bound: u64,
    pub ok: bool,
    pub extremal_class: MetricExtremalClass,
}

impl MetricGraph {
    /// Builds a metric graph, rejecting nonpositive lengths (the offending
    /// index is reported) and length lists of the wrong size.
    pub fn new(graph: Multigraph, lengths: Vec<Rational>) -> Result<Self> {
        if lengths.len() != graph.num_edges() {
            return Err(Error::SizeMismatch {
                expected: graph.num_edges(),
                actual: lengths.len(),
                what: "edge lengths",
            });
        }
        for (i, l) in lengths.iter().enumerate() {
            if !l.is_positive() {
                return Err(Error::NonpositiveLength { index: i });
            }
        }
        Ok(MetricGraph { graph, lengths })
    }

    /// The same graph with every edge given length 1.
    pub fn unit(graph: Multigraph) -> Self {
        let lengths = vec![Rational::one(); graph.num_edges()];
        MetricGraph { graph, lengths }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn lengths(&self) -> &[Rational] {
        &self.lengths
    }

    pub fn length(&self, e: EdgeId) -> Rational {
        self.lengths[e.0]
    }

    pub fn into_parts(self) -> (Multigraph, Vec<Rational>) {
        (self.graph, self.lengths)
    }

    /// Genus = first Betti number of the underlying connected graph.
    pub fn genus(&self) -> Result<usize> {
        if !self.graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.graph.betti_number())
    }

    fn require_genus_at_least_2(&self) -> Result<usize> {
        let genus = self.genus()?;
        if genus < 2 {
            return Err(Error::GenusTooSmall { genus, needed: 2 });
        }
        Ok(genus)
    }

    /// Suppresses every 2-valent vertex lying between two distinct edges,
    /// summing lengths, until none is left; a 2-valent vertex on a single
    /// loop is kept. Connected input of genus ≥ 2 required (a circle has no
    /// distinguished smooth form). Vertices of degree 1 are legal and
    /// survive untouched.
    pub fn smooth(&self) -> Result<MetricGraph> {
        self.require_genus_at_least_2()?;
        let cs = self.graph.chain_smoothing();
        let lengths = cs
            .chains
            .iter()
            .map(|chain| chain.iter().map(|&(e, _)| self.lengths[e.0]).sum())
            .collect();
        MetricGraph::new(cs.graph, lengths)
    }

    /// Builds the canonical model: smooth, then split every loop of length L
    /// at its midpoint into two parallel edges of length L/2. The result is
    /// loopless; provenance locates every model cell in `self`.
    pub fn canonical_model(&self) -> Result<CanonicalModel> {
        self.require_genus_at_least_2()?;
        let cs = self.graph.chain_smoothing();
        let sg = &cs.graph;
        let chain_length = |chain: &[(EdgeId, bool)]| -> Rational {
            chain.iter().map(|&(e, _)| self.lengths[e.0]).sum()
        };

        let mut vertex_origin: Vec<PointOrigin> =
            cs.vertex_map.iter().map(|&v| PointOrigin::AtVertex(v)).collect();
        let mut num_vertices = sg.num_vertices();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut lengths: Vec<Rational> = Vec::new();
        let mut edge_origin: Vec<Vec<EdgeId>> = Vec::new();

        for e in sg.edges() {
            let chain = &cs.chains[e.0];
            let total = chain_length(chain);
            let originals: Vec<EdgeId> = chain.iter().map(|&(edge, _)| edge).collect();
            let (a, b) = sg.endpoints(e);
            if a != b {
                edges.push((a.0, b.0));
                lengths.push(total);
                edge_origin.push(originals);
                continue;
            }

            // A loop: walk the chain to locate the midpoint, then emit the
            // two halves as parallel edges between the base and a new
            // midpoint vertex.
            let half = total.half();
            let walk = cs.chain_vertex_walk(&self.graph, e.0);
            let mut acc = Rational::zero();
            let mut midpoint = None;
            let mut first_half = Vec::new();
            let mut second_half = Vec::new();
            for (idx, &(orig, forward)) in chain.iter().enumerate() {
                let len = self.lengths[orig.0];
                let start = acc;
                acc = acc + len;
                if acc <= half {
                    first_half.push(orig);
                    if acc == half && midpoint.is_none() {
                        // Midpoint falls exactly on the walk vertex after
                        // this original edge.
                        midpoint = Some(PointOrigin::AtVertex(walk[idx + 1]));
                    }
                } else if start >= half {
                    second_half.push(orig);
                } else {
                    // The midpoint is interior to this original edge.
                    let into = half - start;
                    let offset = if forward {
                        into
                    } else {
                        self.lengths[orig.0] - into
                    };
                    midpoint = Some(PointOrigin::OnEdge { edge: orig, offset });
                    first_half.push(orig);
                    second_half.push(orig);
                }
            }
            let mid_vertex = num_vertices;
            num_vertices += 1;
            vertex_origin.push(midpoint.expect("positive loop length has a midpoint"));
            edges.push((a.0, mid_vertex));
            edges.push((a.0, mid_vertex));
            lengths.push(half);
            lengths.push(half);
            edge_origin.push(first_half);
            second_half.reverse();
            edge_origin.push(second_half);
        }

        let graph = Multigraph::new(num_vertices, edges)?;
        debug_assert!(graph.edges().all(|e| !graph.is_loop(e)));
        let model = MetricGraph::new(graph, lengths)?;
        Ok(CanonicalModel { model, vertex_origin, edge_origin })
    }

    /// The isometry group, computed as the length-preserving automorphisms
    /// of the canonical model. Connected input of genus ≥ 2 required.
    pub fn isometry_group(&self) -> Result<IsometryGroup> {
        self.isometry_group_with_cap(aut::DEFAULT_ELEMENT_CAP)
    }

    /// [`Self::isometry_group`] with an explicit element-materialization cap.
    pub fn isometry_group_with_cap(&self, cap: usize) -> Result<IsometryGroup> {
        let model = self.canonical_model()?;
        let colors = length_colors(model.model.lengths());
        let result = aut::run_search(SearchRequest {
            graph: model.model.graph(),
            colors: Some(&colors),
            fixed: None,
            element_cap: cap,
            want_elements: true,
            want_generators: true,
        })?;
        Ok(IsometryGroup {
            order: result.order,
            generators: result.generators,
            elements: result.elements,
            model,
        })
    }

    /// Isometry-group order only (no element or generator bookkeeping).
    pub fn isometry_order(&self) -> Result<u64> {
        let model = self.canonical_model()?;
        let colors = length_colors(model.model.lengths());
        let result = aut::run_search(SearchRequest {
            graph: model.model.graph(),
            colors: Some(&colors),
            fixed: None,
            element_cap: 0,
            want_elements: false,
            want_generators: false,
        })?;
        Ok(result.order)
    }

    /// Checks the isometry-group order against the genus bound and matches
    /// the graph against the three equality families. Requires a connected
    /// leafless metric graph of genus ≥ 2.
    pub fn verify_metric_bound(&self) -> Result<MetricBoundReport> {
        if !self.graph.is_connected() {
            return Err(Error::Disconnected);
        }
        if !self.graph.is_leafless() {
            return Err(Error::NotLeafless);
        }
        let genus = self.require_genus_at_least_2()?;
        let order = self.isometry_order()?;
        let bound = aut::aut_order_bound(genus)?;
        let extremal_class = self.metric_extremal_class(genus)?;
        Ok(MetricBoundReport { genus, order, bound, ok: order <= bound, extremal_class })
    }

    /// Structural match of the smoothed graph against the equality families,
    /// including the length-equality conditions.
    fn metric_extremal_class(&self, genus: usize) -> Result<MetricExtremalClass> {
        let smoothed = self.smooth()?;
        let g = smoothed.graph();
        let lengths = smoothed.lengths();
        let all_equal = |ls: &[Rational]| ls.windows(2).all(|w| w[0] == w[1]);

        // Banana: two vertices, g+1 parallel non-loop edges, one length.
        if (2..=3).contains(&genus)
            && g.num_vertices() == 2
            && g.num_edges() == genus + 1
            && g.edges().all(|e| !g.is_loop(e))
            && all_equal(lengths)
        {
            return Ok(MetricExtremalClass::Banana);
        }
        // Bouquet: one vertex, g loops, one length.
        if genus >= 3 && g.num_vertices() == 1 && g.num_edges() == genus && all_equal(lengths) {
            debug_assert!(g.edges().all(|e| g.is_loop(e)));
            return Ok(MetricExtremalClass::Bouquet);
        }
        // Lollipop: hub + g spoke vertices; one bridge per spoke, one loop
        // per spoke; loops share one length, bridges share one length.
        if genus >= 3 && g.num_vertices() == genus + 1 && g.num_edges() == 2 * genus {
            let loops: Vec<EdgeId> = g.edges().filter(|&e| g.is_loop(e)).collect();
            let bridges: Vec<EdgeId> = g.edges().filter(|&e| !g.is_loop(e)).collect();
            if loops.len() == genus && bridges.len() == genus {
                let mut loop_at = vec![0usize; g.num_vertices()];
                for &e in &loops {
                    let (v, _) = g.endpoints(e);
                    loop_at[v.0] += 1;
                }
                let hubs: Vec<usize> = (0..g.num_vertices()).filter(|&v| loop_at[v] == 0).collect();
                let star_shaped = hubs.len() == 1
                    && loop_at.iter().all(|&c| c <= 1)
                    && bridges.iter().all(|&e| {
                        let (u, v) = g.endpoints(e);
                        (u.0 == hubs[0]) != (v.0 == hubs[0])
                    });
                let loop_lengths: Vec<Rational> =
                    loops.iter().map(|&e| smoothed.length(e)).collect();
                let bridge_lengths: Vec<Rational> =
                    bridges.iter().map(|&e| smoothed.length(e)).collect();
                if star_shaped && all_equal(&loop_lengths) && all_equal(&bridge_lengths) {
                    return Ok(MetricExtremalClass::Lollipop);
                }
            }
        }
        Ok(MetricExtremalClass::NotExtremal)
    }

    /// Splits every edge into `counts[e]` equal-length parts (a count of 1
    /// keeps the edge).
    pub fn subdivide_equal(&self, counts: &[usize]) -> Result<MetricGraph> {
        let graph = self.graph.subdivide(counts)?;
        let mut lengths = Vec::with_capacity(graph.num_edges());
        for (e, &c) in counts.iter().enumerate() {
            let part = self.lengths[e] / Rational::from_integer(c as i64);
            for _ in 0..c {
                lengths.push(part);
            }
        }
        MetricGraph::new(graph, lengths)
    }

    /// Splits one edge into parts of the given positive lengths, which must
    /// sum to the edge's length exactly.
    pub fn split_edge(&self, e: EdgeId, parts: &[Rational]) -> Result<MetricGraph> {
        if e.0 >= self.graph.num_edges() {
            return Err(Error::InvalidEdge { edge: e.0, num_edges: self.graph.num_edges() });
        }
        if parts.is_empty() {
            return Err(Error::BadParameter { what: "edge split needs at least one part" });
        }
        let total: Rational = parts.iter().copied().sum();
        if total != self.lengths[e.0] {
            return Err(Error::BadParameter { what: "edge split parts must sum to the edge length" });
        }
        let mut counts = vec![1usize; self.graph.num_edges()];
        counts[e.0] = parts.len();
        let graph = self.graph.subdivide(&counts)?;
        let mut lengths = Vec::with_capacity(graph.num_edges());
        for (f, &c) in counts.iter().enumerate() {
            if f == e.0 {
                lengths.extend_from_slice(parts);
            } else {
                debug_assert_eq!(c, 1);
                lengths.push(self.lengths[f]);
            }
        }
        MetricGraph::new(graph, lengths)
    }

    /// Multiplies every length by one positive rational factor.
    pub fn scale(&self, factor: Rational) -> Result<MetricGraph> {
        if !factor.is_positive() {
            return Err(Error::BadParameter { what: "scale factor must be positive" });
        }
        let lengths = self.lengths.iter().map(|&l| l * factor).collect();
        MetricGraph::new(self.graph.clone(), lengths)
    }
}

/// Color indices for the search engine: edges get equal colors iff their
/// lengths are equal.
fn length_colors(lengths: &[Rational]) -> Vec<usize> {
    let mut distinct: Vec<Rational> = lengths.to_vec();
    distinct.sort();
    distinct.dedup();
    lengths
        .iter()
        .map(|l| distinct.binary_search(l).expect("length present"))
        .collect()
}

/// Independent check of [`MetricGraph::isometry_order`]: materialize the
/// full automorphism group of the canonical model's graph, then count the
/// maps whose edge permutation preserves every length. Shares the model
/// construction but none of the color-aware search machinery.
pub fn isometry_order_filter_oracle(m: &MetricGraph) -> Result<u64> {
    let model = m.canonical_model()?;
    let group = aut::automorphisms(model.model.graph())?;
    let elements = group.elements.ok_or(Error::GuardExceeded {
        what: "filter-oracle element materialization",
        limit: aut::DEFAULT_ELEMENT_CAP,
        actual: group.order as usize,
    })?;
    let lengths = model.model.lengths();
    let preserved = elements
        .iter()
        .filter(|f| {
            (0..lengths.len()).all(|e| lengths[f.edge_perm[e]] == lengths[e])
        })
        .count();
    Ok(preserved as u64)
}
