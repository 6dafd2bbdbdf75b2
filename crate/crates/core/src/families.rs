//! Named graph families and the classifiers for the equality cases of the
//! automorphism bound.
//!
//! The three families attaining the bound are built here (banana, bouquet,
//! lollipop), together with the reference graphs `h1`, `h2`, `h` that appear
//! as near-extremal landmarks, and two classifiers:
//! [`classify_extremal`] recognizes the graphs whose full automorphism group
//! attains the genus bound, and [`classify_fixed_point_extremal`] recognizes
//! the pairs (graph, vertex) whose vertex stabilizer attains `2^g·g!`.
//! Both work structurally — by un-subdividing the graph and inspecting the
//! resulting minimal shape — so that tests can compare them against actually
//! computed group orders without circularity.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::metric::MetricGraph;
use crate::rational::Rational;

/// Two vertices joined by `g + 1` parallel edges; Betti number `g`.
pub fn banana(g: usize) -> Result<Multigraph> {
    if g < 1 {
        return Err(Error::GenusTooSmall { genus: g, needed: 1 });
    }
    Multigraph::new(2, (0..=g).map(|_| (0, 1)))
}

/// One vertex carrying `g` loops; Betti number `g`.
pub fn bouquet(g: usize) -> Result<Multigraph> {
    if g < 1 {
        return Err(Error::GenusTooSmall { genus: g, needed: 1 });
    }
    Multigraph::new(1, (0..g).map(|_| (0, 0)))
}

/// A `g`-spoke star whose spokes each carry one loop: vertex 0 is the hub,
/// vertices `1..=g` the spokes; edges are the `g` hub–spoke bridges first,
/// then the `g` loops. Betti number `g`.
pub fn lollipop(g: usize) -> Result<Multigraph> {
    if g < 2 {
        return Err(Error::GenusTooSmall { genus: g, needed: 2 });
    }
    let bridges = (1..=g).map(|i| (0, i));
    let loops = (1..=g).map(|i| (i, i));
    Multigraph::new(g + 1, bridges.chain(loops))
}

/// The complete graph on 4 vertices: 3-regular, loopless, Betti 3.
pub fn h1() -> Multigraph {
    Multigraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .expect("static graph")
}

/// A 4-cycle with two opposite edges doubled: 3-regular, Betti 3.
pub fn h2() -> Multigraph {
    Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)])
        .expect("static graph")
}

/// Doubled chain u—x—v (vertices 0, 1, 2) with an extra doubled edge from
/// each of u and v to a private 2-valent vertex: degrees 4, 4, 4, 2, 2 and
/// Betti 4. Splitting at the middle vertex leaves two pieces of Betti 2.
pub fn h() -> Multigraph {
    Multigraph::new(5, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 3), (0, 3), (2, 4), (2, 4)])
        .expect("static graph")
}

/// Attaches `n` fresh pendant edges of length 1 at vertex `v`. The genus is
/// unchanged; the isometry group acquires at least the `n!` permutations of
/// the new edges.
pub fn leaf_burst(m: &MetricGraph, v: VertexId, n: usize) -> Result<MetricGraph> {
    let graph = m.graph();
    if v.0 >= graph.num_vertices() {
        return Err(Error::InvalidVertex { vertex: v.0, num_vertices: graph.num_vertices() });
    }
    if n < 1 {
        return Err(Error::BadParameter { what: "leaf burst needs n ≥ 1" });
    }
    let base = graph.num_vertices();
    let mut edges: Vec<(usize, usize)> = graph
        .edges()
        .map(|e| {
            let (a, b) = graph.endpoints(e);
            (a.0, b.0)
        })
        .collect();
    for i in 0..n {
        edges.push((v.0, base + i));
    }
    let new_graph = Multigraph::new(base + n, edges)?;
    let mut lengths = m.lengths().to_vec();
    lengths.extend(core::iter::repeat(Rational::one()).take(n));
    MetricGraph::new(new_graph, lengths)
}

/// Which equality family a connected leafless graph of genus ≥ 2 belongs
/// to, with its subdivision parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremalClass {
    /// Banana subdivided uniformly with the given count (≥ 1); genus 2 or 3.
    BananaA { count: usize },
    /// Bouquet with every loop subdivided into `count ≥ 2` edges; genus ≥ 3.
    BouquetB { count: usize },
    /// Lollipop with loops subdivided into `loop_count ≥ 2` and bridges into
    /// `bridge_count ≥ 1` edges; genus ≥ 3.
    LollipopC { loop_count: usize, bridge_count: usize },
    NotExtremal,
}

impl ExtremalClass {
    pub fn tag(&self) -> &'static str {
        match self {
            ExtremalClass::BananaA { .. } => "A_banana",
            ExtremalClass::BouquetB { .. } => "B_bouquet",
            ExtremalClass::LollipopC { .. } => "C_lollipop",
            ExtremalClass::NotExtremal => "none",
        }
    }

    pub fn is_extremal(&self) -> bool {
        !matches!(self, ExtremalClass::NotExtremal)
    }
}

/// Which fixed-point equality case a pair (graph, vertex) matches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedPointClass {
    /// The one-vertex edgeless graph at its vertex.
    Trivial,
    /// A cycle with at least two vertices, at any vertex.
    Banana1Subdivision,
    /// A uniformly subdivided bouquet (count ≥ 2, genus ≥ 2) at its hub.
    BAtCutVertex,
    /// A uniformly subdivided lollipop (loops ≥ 2, bridges ≥ 1, genus ≥ 2)
    /// at the star center; for genus 2 the star center is the midpoint of
    /// the even-length path joining the two loops.
    CAtStarCenter,
    NotExtremal,
}

impl FixedPointClass {
    pub fn tag(&self) -> &'static str {
        match self {
            FixedPointClass::Trivial => "trivial",
            FixedPointClass::Banana1Subdivision => "banana1_subdivision",
            FixedPointClass::BAtCutVertex => "B_at_cut_vertex",
            FixedPointClass::CAtStarCenter => "C_at_star_center",
            FixedPointClass::NotExtremal => "none",
        }
    }

    pub fn is_extremal(&self) -> bool {
        !matches!(self, FixedPointClass::NotExtremal)
    }
}

/// The un-subdivided shape of a graph: its smoothed core plus the length (in
/// edges) of the chain behind every core edge.
struct CoreShape {
    core: Multigraph,
    /// Parent vertex behind each core vertex.
    vertex_map: Vec<VertexId>,
    /// Number of original edges in the chain behind each core edge.
    counts: Vec<usize>,
    /// Core edge index → full oriented chain walk start data, kept for the
    /// dumbbell midpoint computation.
    walks: Vec<Vec<VertexId>>,
}

fn core_shape(g: &Multigraph) -> CoreShape {
    let cs = g.chain_smoothing();
    let counts = cs.chains.iter().map(|c| c.len()).collect();
    let walks = (0..cs.graph.num_edges())
        .map(|e| cs.chain_vertex_walk(g, e))
        .collect();
    CoreShape { core: cs.graph, vertex_map: cs.vertex_map, counts, walks }
}

fn all_equal(xs: &[usize]) -> bool {
    xs.windows(2).all(|w| w[0] == w[1])
}

/// If the core is a `g`-loop bouquet, returns its hub (core index).
fn bouquet_hub(core: &Multigraph, genus: usize) -> Option<VertexId> {
    (core.num_vertices() == 1
        && core.num_edges() == genus
        && core.edges().all(|e| core.is_loop(e)))
    .then_some(VertexId(0))
}

/// If the core is a `g`-spoke lollipop, returns its hub (core index).
fn lollipop_hub(core: &Multigraph, genus: usize) -> Option<VertexId> {
    if core.num_vertices() != genus + 1 || core.num_edges() != 2 * genus {
        return None;
    }
    let mut loops_at = vec![0usize; core.num_vertices()];
    let mut bridges_at = vec![0usize; core.num_vertices()];
    for e in core.edges() {
        let (u, v) = core.endpoints(e);
        if u == v {
            loops_at[u.0] += 1;
        } else {
            bridges_at[u.0] += 1;
            bridges_at[v.0] += 1;
        }
    }
    let hub = (0..core.num_vertices()).find(|&v| loops_at[v] == 0)?;
    let star = (0..core.num_vertices()).all(|v| {
        if v == hub {
            bridges_at[v] == genus
        } else {
            loops_at[v] == 1 && bridges_at[v] == 1
        }
    });
    let spokes_hit_hub = core.edges().all(|e| {
        let (u, v) = core.endpoints(e);
        u == v || u.0 == hub || v.0 == hub
    });
    (star && spokes_hit_hub).then_some(VertexId(hub))
}

/// Classifies a connected leafless graph of genus ≥ 2 against the three
/// families attaining the automorphism bound (12 for genus 2, `2^g·g!` for
/// genus ≥ 3). Recognition is structural: the graph is un-subdivided and the
/// core shape plus chain-length uniformity decide the class.
pub fn classify_extremal(g: &Multigraph) -> Result<ExtremalClass> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_leafless() {
        return Err(Error::NotLeafless);
    }
    let genus = g.betti_number();
    if genus < 2 {
        return Err(Error::GenusTooSmall { genus, needed: 2 });
    }
    let shape = core_shape(g);
    let core = &shape.core;

    // Banana: two core vertices, g + 1 parallel edges, uniform counts.
    if (2..=3).contains(&genus)
        && core.num_vertices() == 2
        && core.num_edges() == genus + 1
        && core.edges().all(|e| !core.is_loop(e))
        && all_equal(&shape.counts)
    {
        return Ok(ExtremalClass::BananaA { count: shape.counts[0] });
    }

    // Bouquet: one core vertex, g loops, uniform counts ≥ 2.
    if genus >= 3 && bouquet_hub(core, genus).is_some() {
        if all_equal(&shape.counts) && shape.counts[0] >= 2 {
            return Ok(ExtremalClass::BouquetB { count: shape.counts[0] });
        }
        return Ok(ExtremalClass::NotExtremal);
    }

    // Lollipop: star-with-loops core, uniform loop counts ≥ 2, uniform
    // bridge counts ≥ 1.
    if genus >= 3 {
        if let Some(_hub) = lollipop_hub(core, genus) {
            let loop_counts: Vec<usize> = core
                .edges()
                .filter(|&e| core.is_loop(e))
                .map(|e| shape.counts[e.0])
                .collect();
            let bridge_counts: Vec<usize> = core
                .edges()
                .filter(|&e| !core.is_loop(e))
                .map(|e| shape.counts[e.0])
                .collect();
            if all_equal(&loop_counts)
                && loop_counts[0] >= 2
                && all_equal(&bridge_counts)
            {
                return Ok(ExtremalClass::LollipopC {
                    loop_count: loop_counts[0],
                    bridge_count: bridge_counts[0],
                });
            }
        }
    }

    Ok(ExtremalClass::NotExtremal)
}

/// Classifies a pair (connected leafless graph, vertex) against the cases
/// where the vertex stabilizer attains `2^g·g!`: the trivial graph, cycles
/// with ≥ 2 vertices at any vertex, uniformly subdivided bouquets (genus
/// ≥ 2) at the hub, and uniformly subdivided lollipops (genus ≥ 2) at the
/// star center.
pub fn classify_fixed_point_extremal(g: &Multigraph, x: VertexId) -> Result<FixedPointClass> {
    if x.0 >= g.num_vertices() {
        return Err(Error::InvalidVertex { vertex: x.0, num_vertices: g.num_vertices() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_leafless() {
        return Err(Error::NotLeafless);
    }
    if g.num_vertices() == 1 && g.num_edges() == 0 {
        return Ok(FixedPointClass::Trivial);
    }
    let genus = g.betti_number();
    if genus == 1 {
        // A connected leafless genus-1 graph is a single cycle; with ≥ 2
        // vertices it is a subdivided 2-cycle, and every vertex works. The
        // one-vertex loop is excluded (its only stabilizer element is the
        // identity).
        return Ok(if g.num_vertices() >= 2 {
            FixedPointClass::Banana1Subdivision
        } else {
            FixedPointClass::NotExtremal
        });
    }
    if genus < 2 {
        return Ok(FixedPointClass::NotExtremal);
    }

    let shape = core_shape(g);
    let core = &shape.core;

    // Subdivided bouquet at its hub (genus ≥ 2).
    if bouquet_hub(core, genus).is_some()
        && all_equal(&shape.counts)
        && shape.counts[0] >= 2
        && shape.vertex_map[0] == x
    {
        return Ok(FixedPointClass::BAtCutVertex);
    }

    // Subdivided lollipop at the star center, genus ≥ 3: the hub survives
    // smoothing as the unique loopless core vertex.
    if genus >= 3 {
        if let Some(hub) = lollipop_hub(core, genus) {
            let loop_counts: Vec<usize> = core
                .edges()
                .filter(|&e| core.is_loop(e))
                .map(|e| shape.counts[e.0])
                .collect();
            let bridge_counts: Vec<usize> = core
                .edges()
                .filter(|&e| !core.is_loop(e))
                .map(|e| shape.counts[e.0])
                .collect();
            if all_equal(&loop_counts)
                && loop_counts[0] >= 2
                && all_equal(&bridge_counts)
                && shape.vertex_map[hub.0] == x
            {
                return Ok(FixedPointClass::CAtStarCenter);
            }
        }
    }

    // Genus 2 lollipop case: the 2-spoke star center is 2-valent, so it is
    // smoothed away and the core is a dumbbell (two one-loop vertices joined
    // by one edge). The graph is a subdivided 2-spoke lollipop exactly when
    // the two loop chains are equal (≥ 2) and the joining chain has even
    // length; the star center is then the middle vertex of that chain.
    if genus == 2 && core.num_vertices() == 2 && core.num_edges() == 3 {
        let loops: Vec<EdgeId> = core.edges().filter(|&e| core.is_loop(e)).collect();
        let bridges: Vec<EdgeId> = core.edges().filter(|&e| !core.is_loop(e)).collect();
        if loops.len() == 2 && bridges.len() == 1 {
            let (a, _) = core.endpoints(loops[0]);
            let (b, _) = core.endpoints(loops[1]);
            let c0 = shape.counts[loops[0].0];
            let c1 = shape.counts[loops[1].0];
            let chain = shape.counts[bridges[0].0];
            if a != b && c0 == c1 && c0 >= 2 && chain % 2 == 0 {
                let walk = &shape.walks[bridges[0].0];
                if walk[chain / 2] == x {
                    return Ok(FixedPointClass::CAtStarCenter);
                }
            }
        }
    }

    Ok(FixedPointClass::NotExtremal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{self, CellSet};
    use crate::graph::Multigraph;

    #[test]
    fn constructor_shapes() {
        let banana1 = banana(1).unwrap();
        assert_eq!((banana1.num_vertices(), banana1.num_edges()), (2, 2));
        assert_eq!(banana1.betti_number(), 1);
        let banana4 = banana(4).unwrap();
        assert_eq!(banana4.num_edges(), 5);
        assert_eq!(banana4.betti_number(), 4);

        let bouquet3 = bouquet(3).unwrap();
        assert_eq!((bouquet3.num_vertices(), bouquet3.num_edges()), (1, 3));
        assert!(bouquet3.edges().all(|e| bouquet3.is_loop(e)));

        let lollipop2 = lollipop(2).unwrap();
        assert_eq!((lollipop2.num_vertices(), lollipop2.num_edges()), (3, 4));
        assert_eq!(lollipop2.betti_number(), 2);
        assert_eq!(lollipop2.bridges().len(), 2);

        assert!(banana(0).is_err());
        assert!(bouquet(0).is_err());
        assert!(lollipop(1).is_err());

        assert_eq!(h1().betti_number(), 3);
        assert_eq!(h2().betti_number(), 3);
        assert_eq!(h().betti_number(), 4);
        assert_eq!(h1().degrees(), vec![3, 3, 3, 3]);
        assert_eq!(h2().degrees(), vec![3, 3, 3, 3]);
        assert_eq!(h().degrees(), vec![4, 4, 4, 2, 2]);
    }

    #[test]
    fn family_order_formulas() {
        for g in 2..=6 {
            let expected = 2 * aut::factorial_u64(g + 1).unwrap();
            assert_eq!(aut::automorphism_order(&banana(g).unwrap()).unwrap(), expected);
            assert_eq!(
                aut::automorphism_order(&bouquet(g).unwrap()).unwrap(),
                aut::factorial_u64(g).unwrap()
            );
        }
        for g in 3..=6 {
            let sub = bouquet(g).unwrap().subdivide_uniform(2).unwrap();
            let expected = (1u64 << g) * aut::factorial_u64(g).unwrap();
            assert_eq!(aut::automorphism_order(&sub).unwrap(), expected);
        }
    }

    #[test]
    fn lollipop_contracts_to_bouquet() {
        for g in 2..=6 {
            let lp = lollipop(g).unwrap();
            let contracted = lp.contract(&lp.bridges()).unwrap().graph;
            let bq = bouquet(g).unwrap();
            assert_eq!(contracted.num_vertices(), 1);
            assert_eq!(contracted.num_edges(), g);
            assert!(contracted.edges().all(|e| contracted.is_loop(e)));
            assert!(aut::are_isomorphic(&contracted, &bq).unwrap());
        }
    }

    fn subdivided_lollipop(g: usize, loop_count: usize, bridge_count: usize) -> Multigraph {
        let lp = lollipop(g).unwrap();
        let counts: Vec<usize> = lp
            .edges()
            .map(|e| if lp.is_loop(e) { loop_count } else { bridge_count })
            .collect();
        lp.subdivide(&counts).unwrap()
    }

    #[test]
    fn classify_extremal_positive_cases() {
        for count in 1..=3 {
            let g = banana(2).unwrap().subdivide_uniform(count).unwrap();
            assert_eq!(classify_extremal(&g).unwrap(), ExtremalClass::BananaA { count });
            let g = banana(3).unwrap().subdivide_uniform(count).unwrap();
            assert_eq!(classify_extremal(&g).unwrap(), ExtremalClass::BananaA { count });
        }
        for count in 2..=3 {
            let g = bouquet(3).unwrap().subdivide_uniform(count).unwrap();
            assert_eq!(classify_extremal(&g).unwrap(), ExtremalClass::BouquetB { count });
        }
        assert_eq!(
            classify_extremal(&subdivided_lollipop(3, 2, 1)).unwrap(),
            ExtremalClass::LollipopC { loop_count: 2, bridge_count: 1 }
        );
        assert_eq!(
            classify_extremal(&subdivided_lollipop(4, 3, 2)).unwrap(),
            ExtremalClass::LollipopC { loop_count: 3, bridge_count: 2 }
        );
    }

    #[test]
    fn classify_extremal_negative_cases() {
        assert_eq!(classify_extremal(&h1()).unwrap(), ExtremalClass::NotExtremal);
        assert_eq!(classify_extremal(&h2()).unwrap(), ExtremalClass::NotExtremal);
        assert_eq!(classify_extremal(&h()).unwrap(), ExtremalClass::NotExtremal);
        // Banana of genus 4: the banana family stops at genus 3.
        assert_eq!(classify_extremal(&banana(4).unwrap()).unwrap(), ExtremalClass::NotExtremal);
        // Plain bouquet (count 1 < 2).
        assert_eq!(classify_extremal(&bouquet(3).unwrap()).unwrap(), ExtremalClass::NotExtremal);
        // Plain lollipop (loops not subdivided).
        assert_eq!(classify_extremal(&lollipop(3).unwrap()).unwrap(), ExtremalClass::NotExtremal);
        // Unevenly subdivided banana.
        let uneven = banana(2).unwrap().subdivide(&[2, 1, 1]).unwrap();
        assert_eq!(classify_extremal(&uneven).unwrap(), ExtremalClass::NotExtremal);
        // Bouquet of genus 2 never qualifies (the genus-2 bound is 12 and
        // only bananas attain it).
        let b2 = bouquet(2).unwrap().subdivide_uniform(2).unwrap();
        assert_eq!(classify_extremal(&b2).unwrap(), ExtremalClass::NotExtremal);
    }

    #[test]
    fn classify_extremal_matches_rebuild() {
        // Dual route: whenever a class is claimed, rebuilding the named
        // family with the claimed parameters gives an isomorphic graph.
        let samples = [
            banana(3).unwrap().subdivide_uniform(2).unwrap(),
            bouquet(3).unwrap().subdivide_uniform(2).unwrap(),
            subdivided_lollipop(3, 2, 1),
            h2(),
        ];
        for g in samples {
            match classify_extremal(&g).unwrap() {
                ExtremalClass::BananaA { count } => {
                    let rebuilt = banana(g.betti_number())
                        .unwrap()
                        .subdivide_uniform(count)
                        .unwrap();
                    assert!(aut::are_isomorphic(&g, &rebuilt).unwrap());
                }
                ExtremalClass::BouquetB { count } => {
                    let rebuilt = bouquet(g.betti_number())
                        .unwrap()
                        .subdivide_uniform(count)
                        .unwrap();
                    assert!(aut::are_isomorphic(&g, &rebuilt).unwrap());
                }
                ExtremalClass::LollipopC { loop_count, bridge_count } => {
                    let lp = lollipop(g.betti_number()).unwrap();
                    let counts: Vec<usize> = lp
                        .edges()
                        .map(|e| if lp.is_loop(e) { loop_count } else { bridge_count })
                        .collect();
                    let rebuilt = lp.subdivide(&counts).unwrap();
                    assert!(aut::are_isomorphic(&g, &rebuilt).unwrap());
                }
                ExtremalClass::NotExtremal => {}
            }
        }
    }

    #[test]
    fn classify_extremal_validates() {
        let disconnected = Multigraph::new(2, [(0, 0), (1, 1)]).unwrap();
        assert!(matches!(classify_extremal(&disconnected), Err(Error::Disconnected)));
        let leafy = Multigraph::new(3, [(0, 1), (0, 1), (0, 1), (1, 2)]).unwrap();
        assert!(matches!(classify_extremal(&leafy), Err(Error::NotLeafless)));
        let circle = bouquet(1).unwrap();
        assert!(matches!(classify_extremal(&circle), Err(Error::GenusTooSmall { .. })));
    }

    #[test]
    fn fixed_point_classification_cases() {
        let trivial = Multigraph::new(1, []).unwrap();
        assert_eq!(
            classify_fixed_point_extremal(&trivial, VertexId(0)).unwrap(),
            FixedPointClass::Trivial
        );

        let cycle2 = banana(1).unwrap();
        for v in cycle2.vertices() {
            assert_eq!(
                classify_fixed_point_extremal(&cycle2, v).unwrap(),
                FixedPointClass::Banana1Subdivision
            );
        }
        let loop1 = bouquet(1).unwrap();
        assert_eq!(
            classify_fixed_point_extremal(&loop1, VertexId(0)).unwrap(),
            FixedPointClass::NotExtremal
        );

        let sub_bouquet = bouquet(3).unwrap().subdivide_uniform(2).unwrap();
        assert_eq!(
            classify_fixed_point_extremal(&sub_bouquet, VertexId(0)).unwrap(),
            FixedPointClass::BAtCutVertex
        );
        assert_eq!(
            classify_fixed_point_extremal(&sub_bouquet, VertexId(1)).unwrap(),
            FixedPointClass::NotExtremal
        );

        let sub_lollipop = subdivided_lollipop(3, 2, 1);
        assert_eq!(
            classify_fixed_point_extremal(&sub_lollipop, VertexId(0)).unwrap(),
            FixedPointClass::CAtStarCenter
        );
        assert_eq!(
            classify_fixed_point_extremal(&sub_lollipop, VertexId(1)).unwrap(),
            FixedPointClass::NotExtremal
        );
    }

    #[test]
    fn fixed_point_genus2_star_center() {
        // The 2-spoke lollipop with loops split in two: the hub is 2-valent,
        // but it is still the star center and attains the stabilizer bound.
        let g = subdivided_lollipop(2, 2, 1);
        assert_eq!(
            classify_fixed_point_extremal(&g, VertexId(0)).unwrap(),
            FixedPointClass::CAtStarCenter
        );
        for v in g.vertices().skip(1) {
            assert_eq!(
                classify_fixed_point_extremal(&g, v).unwrap(),
                FixedPointClass::NotExtremal,
                "{v:?}"
            );
        }
        // A plain dumbbell has an odd joining chain: no star center.
        let dumbbell = Multigraph::new(2, [(0, 0), (1, 1), (0, 1)]).unwrap();
        for v in dumbbell.vertices() {
            assert_eq!(
                classify_fixed_point_extremal(&dumbbell, v).unwrap(),
                FixedPointClass::NotExtremal
            );
        }
    }

    #[test]
    fn fixed_point_classes_match_stabilizer_orders() {
        // The classification claims equality with 2^g·g!; check it on a
        // spread of pairs, both ways.
        let graphs = [
            banana(1).unwrap().subdivide_uniform(3).unwrap(),
            bouquet(2).unwrap().subdivide_uniform(2).unwrap(),
            bouquet(3).unwrap().subdivide_uniform(2).unwrap(),
            subdivided_lollipop(2, 2, 1),
            subdivided_lollipop(2, 2, 2),
            subdivided_lollipop(3, 2, 1),
            banana(2).unwrap(),
            h(),
            lollipop(3).unwrap(),
        ];
        for g in graphs {
            let genus = g.betti_number();
            let bound = aut::fixed_point_order_bound(genus).unwrap();
            for x in g.vertices() {
                let order =
                    aut::stabilizer_order(&g, &CellSet::from_vertices([x])).unwrap();
                let class = classify_fixed_point_extremal(&g, x).unwrap();
                assert!(order <= bound, "stabilizer at {x:?} of {g:?}");
                assert_eq!(
                    class.is_extremal(),
                    order == bound,
                    "class vs order at {x:?} of {g:?}"
                );
            }
        }
    }

    #[test]
    fn leaf_burst_contains_symmetric_group() {
        let base = MetricGraph::unit(banana(2).unwrap());
        for n in 1..=4usize {
            let burst = leaf_burst(&base, VertexId(0), n).unwrap();
            assert_eq!(burst.genus().unwrap(), 2);
            let order = burst.isometry_order().unwrap();
            assert!(
                order >= aut::factorial_u64(n).unwrap(),
                "n = {n}, order = {order}"
            );
        }
        assert!(matches!(
            leaf_burst(&base, VertexId(9), 1),
            Err(Error::InvalidVertex { .. })
        ));
        assert!(matches!(
            leaf_burst(&base, VertexId(0), 0),
            Err(Error::BadParameter { .. })
        ));
    }
}
