//! Finite multigraphs with loops and parallel edges.
//!
//! Edges are positional: the graph stores a vector of unordered endpoint
//! pairs, and the index into that vector is the edge's identity. Parallel
//! edges are therefore distinct objects, which is what makes the edge part of
//! an automorphism carry information (`crate::aut`).

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Index of a vertex in a [`Multigraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Index of an edge in a [`Multigraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite multigraph. Immutable once built; all operations return new
/// graphs together with whatever index maps relate them to their input.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    num_vertices: usize,
    /// Unordered endpoint pairs, stored with `u ≤ v`. A loop has `u == v`.
    endpoints: Vec<(usize, usize)>,
}

/// A subgraph (or more generally an embedded image) of a parent graph:
/// `vertices[i]` / `edges[j]` say which parent cell the `i`-th vertex /
/// `j`-th edge of `graph` corresponds to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Multigraph,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// Result of contracting an edge set: the quotient graph, where vertex `v` of
/// the original maps to `vertex_map[v]` and edge `e` maps to `edge_map[e]`
/// (`None` exactly for the contracted edges).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Multigraph,
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<Option<EdgeId>>,
}

/// One part of a vertex-cut decomposition: the subgraph spanned by one
/// component of `G \ {x}` together with a copy of `x` (the `anchor`), or a
/// single loop at `x` promoted to its own part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutPart {
    pub graph: Multigraph,
    /// Local index of the copy of the cut vertex inside `graph`.
    pub anchor: VertexId,
    /// First Betti number of this part.
    pub betti: usize,
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<EdgeId>,
}

/// Decomposition of a connected graph at one vertex: the parts cover all
/// edges exactly once, pairwise share only the cut vertex, and their Betti
/// numbers sum to the Betti number of the whole graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutDecomposition {
    pub cut_vertex: VertexId,
    pub parts: Vec<CutPart>,
}

impl CutDecomposition {
    pub fn part_betti(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.betti).collect()
    }
}

/// Result of suppressing all 2-valent vertices that sit between two distinct
/// edges: the smoothed graph, plus for every smoothed edge the oriented chain
/// of parent edges it replaces. `chains[e]` lists `(parent edge, forward)`
/// pairs; `forward` means the chain traverses that parent edge from its
/// stored first endpoint to its second.
#[derive(Clone, Debug)]
pub(crate) struct ChainSmoothing {
    pub graph: Multigraph,
    pub vertex_map: Vec<VertexId>,
    pub chains: Vec<Vec<(EdgeId, bool)>>,
}

impl Multigraph {
    /// Builds a graph from raw endpoint pairs, validating every index.
    pub fn new(num_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut endpoints = Vec::new();
        for (u, v) in edges {
            if u >= num_vertices {
                return Err(Error::InvalidVertex { vertex: u, num_vertices });
            }
            if v >= num_vertices {
                return Err(Error::InvalidVertex { vertex: v, num_vertices });
            }
            endpoints.push(if u <= v { (u, v) } else { (v, u) });
        }
        Ok(Multigraph { num_vertices, endpoints })
    }

    /// The graph with no vertices and no edges.
    pub fn empty() -> Self {
        Multigraph { num_vertices: 0, endpoints: Vec::new() }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.endpoints.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.num_vertices).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.endpoints.len()).map(EdgeId)
    }

    /// Endpoints of an edge as an unordered pair, reported with `u ≤ v`.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let (u, v) = self.endpoints[e.0];
        (VertexId(u), VertexId(v))
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.endpoints[e.0];
        u == v
    }

    /// Number of edges between `u` and `v` (order irrelevant); for `u == v`
    /// this is the number of loops at the vertex.
    pub fn parallel_count(&self, u: VertexId, v: VertexId) -> usize {
        let key = if u.0 <= v.0 { (u.0, v.0) } else { (v.0, u.0) };
        self.endpoints.iter().filter(|&&p| p == key).count()
    }

    /// Degree of a vertex; a loop contributes 2.
    pub fn degree(&self, v: VertexId) -> usize {
        assert!(v.0 < self.num_vertices, "vertex index out of range");
        self.endpoints
            .iter()
            .map(|&(a, b)| (a == v.0) as usize + (b == v.0) as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.num_vertices];
        for &(a, b) in &self.endpoints {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// True when no vertex has degree exactly 1. Isolated vertices are not
    /// leaves, so the one-vertex edgeless graph and the empty graph are both
    /// leafless.
    pub fn is_leafless(&self) -> bool {
        self.degrees().iter().all(|&d| d != 1)
    }

    /// Incidence lists: for every vertex the `(edge, other endpoint)` pairs,
    /// with loops contributing two entries. Entry order follows edge order.
    fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![Vec::new(); self.num_vertices];
        for (i, &(a, b)) in self.endpoints.iter().enumerate() {
            inc[a].push((i, b));
            if a != b {
                inc[b].push((i, a));
            } else {
                inc[a].push((i, a));
            }
        }
        inc
    }

    /// Vertex sets of the connected components, each sorted ascending, the
    /// components ordered by their smallest vertex. Isolated vertices are
    /// components of their own; the empty graph has no components.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let inc = self.incidence();
        let mut seen = vec![false; self.num_vertices];
        let mut components = Vec::new();
        for start in 0..self.num_vertices {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(VertexId(v));
                for &(_, w) in &inc[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort();
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// First Betti number `#E − #V + #components` (the graph's genus).
    pub fn betti_number(&self) -> usize {
        let c = self.connected_components().len();
        self.num_edges() + c - self.num_vertices
    }

    /// Edges whose removal disconnects their component. Loops and members of
    /// parallel classes of size ≥ 2 are never bridges.
    pub fn bridges(&self) -> BTreeSet<EdgeId> {
        self.dfs_lowlink().0
    }

    /// Vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> BTreeSet<VertexId> {
        self.dfs_lowlink().1
    }

    /// One iterative DFS computing both bridges and cut vertices via
    /// discovery/low times. Traversal never reuses the edge it entered a
    /// vertex through (by edge id), so parallel edges act as back edges.
    fn dfs_lowlink(&self) -> (BTreeSet<EdgeId>, BTreeSet<VertexId>) {
        struct Frame {
            v: usize,
            parent_edge: Option<usize>,
            next: usize,
        }

        let inc = self.incidence();
        let mut disc = vec![usize::MAX; self.num_vertices];
        let mut low = vec![usize::MAX; self.num_vertices];
        let mut children = vec![0usize; self.num_vertices];
        let mut timer = 0usize;
        let mut bridges = BTreeSet::new();
        let mut cuts = BTreeSet::new();

        for root in 0..self.num_vertices {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut stack = vec![Frame { v: root, parent_edge: None, next: 0 }];
            while let Some(frame) = stack.last_mut() {
                let v = frame.v;
                if frame.next < inc[v].len() {
                    let (e, w) = inc[v][frame.next];
                    frame.next += 1;
                    if frame.parent_edge == Some(e) {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        children[v] += 1;
                        stack.push(Frame { v: w, parent_edge: Some(e), next: 0 });
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    let finished = stack.pop().expect("frame present");
                    if let Some(pe) = finished.parent_edge {
                        let parent = stack.last().expect("parent frame").v;
                        low[parent] = low[parent].min(low[finished.v]);
                        if low[finished.v] > disc[parent] {
                            bridges.insert(EdgeId(pe));
                        }
                        if parent != root && low[finished.v] >= disc[parent] {
                            cuts.insert(VertexId(parent));
                        }
                    }
                }
            }
            if children[root] >= 2 {
                cuts.insert(VertexId(root));
            }
        }
        (bridges, cuts)
    }

    /// Contracts every edge in `s`: endpoints of contracted edges are merged,
    /// the surviving edges keep their relative order. Quotient vertices are
    /// numbered by first occurrence of their class when scanning vertices in
    /// order.
    pub fn contract(&self, s: &BTreeSet<EdgeId>) -> Result<Contraction> {
        for &e in s {
            if e.0 >= self.num_edges() {
                return Err(Error::InvalidEdge { edge: e.0, num_edges: self.num_edges() });
            }
        }
        // Union-find over vertices along the contracted edges.
        let mut parent: Vec<usize> = (0..self.num_vertices).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &e in s {
            let (u, v) = self.endpoints[e.0];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                // Attach the larger root to the smaller so representatives
                // stay deterministic.
                let (lo, hi) = if ru < rv { (ru, rv) } else { (rv, ru) };
                parent[hi] = lo;
            }
        }
        let mut class_index = vec![usize::MAX; self.num_vertices];
        let mut next = 0usize;
        let mut vertex_map = Vec::with_capacity(self.num_vertices);
        for v in 0..self.num_vertices {
            let root = find(&mut parent, v);
            if class_index[root] == usize::MAX {
                class_index[root] = next;
                next += 1;
            }
            vertex_map.push(VertexId(class_index[root]));
        }
        let mut new_edges = Vec::new();
        let mut edge_map = vec![None; self.num_edges()];
        for e in 0..self.num_edges() {
            if s.contains(&EdgeId(e)) {
                continue;
            }
            let (u, v) = self.endpoints[e];
            edge_map[e] = Some(EdgeId(new_edges.len()));
            new_edges.push((vertex_map[u].0, vertex_map[v].0));
        }
        let graph = Multigraph::new(next, new_edges)?;
        Ok(Contraction { graph, vertex_map, edge_map })
    }

    /// Replaces edge `e` by a path of `counts[e]` edges (a count of 1 keeps
    /// the edge). New vertices are appended after the original ones, edge by
    /// edge; the path edges of edge `e` are consecutive in the output, in
    /// input edge order.
    pub fn subdivide(&self, counts: &[usize]) -> Result<Multigraph> {
        if counts.len() != self.num_edges() {
            return Err(Error::SizeMismatch {
                expected: self.num_edges(),
                actual: counts.len(),
                what: "subdivision counts",
            });
        }
        let mut num_vertices = self.num_vertices;
        let mut edges = Vec::new();
        for (e, &c) in counts.iter().enumerate() {
            if c == 0 {
                return Err(Error::ZeroSubdivision { edge: e });
            }
            let (u, v) = self.endpoints[e];
            let mut prev = u;
            for k in 1..c {
                let mid = num_vertices;
                num_vertices += 1;
                edges.push((prev, mid));
                prev = mid;
                let _ = k;
            }
            edges.push((prev, v));
        }
        Multigraph::new(num_vertices, edges)
    }

    /// Subdivides every edge into the same number of parts.
    pub fn subdivide_uniform(&self, count: usize) -> Result<Multigraph> {
        self.subdivide(&vec![count; self.num_edges()])
    }

    /// The maximum subgraph with minimum degree ≥ 2, obtained by repeatedly
    /// deleting isolated vertices and leaves together with their edge. May be
    /// empty (e.g. for a tree).
    pub fn leafless_core(&self) -> Subgraph {
        let mut vertex_alive = vec![true; self.num_vertices];
        let mut edge_alive = vec![true; self.num_edges()];
        loop {
            let mut deg = vec![0usize; self.num_vertices];
            for e in 0..self.num_edges() {
                if edge_alive[e] {
                    let (u, v) = self.endpoints[e];
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            let mut changed = false;
            for v in 0..self.num_vertices {
                if !vertex_alive[v] {
                    continue;
                }
                if deg[v] == 0 {
                    vertex_alive[v] = false;
                    changed = true;
                } else if deg[v] == 1 {
                    vertex_alive[v] = false;
                    for e in 0..self.num_edges() {
                        if edge_alive[e] {
                            let (a, b) = self.endpoints[e];
                            if a == v || b == v {
                                edge_alive[e] = false;
                            }
                        }
                    }
                    changed = true;
                    // Degrees are stale now; restart the scan.
                    break;
                }
            }
            if !changed {
                break;
            }
        }
        self.alive_subgraph(&vertex_alive, &edge_alive)
    }

    /// Deletes a vertex together with all incident edges.
    pub fn delete_vertex(&self, x: VertexId) -> Result<Subgraph> {
        if x.0 >= self.num_vertices {
            return Err(Error::InvalidVertex { vertex: x.0, num_vertices: self.num_vertices });
        }
        let mut vertex_alive = vec![true; self.num_vertices];
        vertex_alive[x.0] = false;
        let mut edge_alive = vec![true; self.num_edges()];
        for e in 0..self.num_edges() {
            let (u, v) = self.endpoints[e];
            if u == x.0 || v == x.0 {
                edge_alive[e] = false;
            }
        }
        Ok(self.alive_subgraph(&vertex_alive, &edge_alive))
    }

    fn alive_subgraph(&self, vertex_alive: &[bool], edge_alive: &[bool]) -> Subgraph {
        let mut local = vec![usize::MAX; self.num_vertices];
        let mut vertices = Vec::new();
        for v in 0..self.num_vertices {
            if vertex_alive[v] {
                local[v] = vertices.len();
                vertices.push(VertexId(v));
            }
        }
        let mut edges = Vec::new();
        let mut pairs = Vec::new();
        for e in 0..self.num_edges() {
            if edge_alive[e] {
                let (u, v) = self.endpoints[e];
                debug_assert!(vertex_alive[u] && vertex_alive[v]);
                pairs.push((local[u], local[v]));
                edges.push(EdgeId(e));
            }
        }
        let graph = Multigraph::new(vertices.len(), pairs).expect("subgraph indices valid");
        Subgraph { graph, vertices, edges }
    }

    /// Splits a connected graph at vertex `x`: one part per component of
    /// `G \ {x}` (each part keeps a copy of `x` as its `anchor`), plus one
    /// single-loop part per loop at `x`. Every edge lands in exactly one
    /// part and the part Betti numbers sum to the Betti number of `G`.
    pub fn decompose_at(&self, x: VertexId) -> Result<CutDecomposition> {
        if x.0 >= self.num_vertices {
            return Err(Error::InvalidVertex { vertex: x.0, num_vertices: self.num_vertices });
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let deleted = self.delete_vertex(x)?;
        let mut parts = Vec::new();
        for comp in deleted.graph.connected_components() {
            // Component vertices in original numbering.
            let comp_orig: BTreeSet<usize> = comp.iter().map(|&v| deleted.vertices[v.0].0).collect();
            let mut vertex_alive = vec![false; self.num_vertices];
            for &v in &comp_orig {
                vertex_alive[v] = true;
            }
            vertex_alive[x.0] = true;
            let mut edge_alive = vec![false; self.num_edges()];
            for e in 0..self.num_edges() {
                let (u, v) = self.endpoints[e];
                if u == v && u == x.0 {
                    continue; // loops at x become their own parts
                }
                let u_in = u == x.0 || comp_orig.contains(&u);
                let v_in = v == x.0 || comp_orig.contains(&v);
                if u_in && v_in {
                    edge_alive[e] = true;
                }
            }
            let sub = self.alive_subgraph(&vertex_alive, &edge_alive);
            let anchor = VertexId(
                sub.vertices.iter().position(|&v| v == x).expect("cut vertex kept in part"),
            );
            let betti = sub.graph.betti_number();
            parts.push(CutPart {
                graph: sub.graph,
                anchor,
                betti,
                vertex_map: sub.vertices,
                edge_map: sub.edges,
            });
        }
        for e in 0..self.num_edges() {
            let (u, v) = self.endpoints[e];
            if u == v && u == x.0 {
                let graph = Multigraph::new(1, [(0, 0)]).expect("loop part");
                parts.push(CutPart {
                    graph,
                    anchor: VertexId(0),
                    betti: 1,
                    vertex_map: vec![x],
                    edge_map: vec![EdgeId(e)],
                });
            }
        }
        Ok(CutDecomposition { cut_vertex: x, parts })
    }

    /// Applies a relabeling: vertex `v` becomes `vperm[v]`, edge `e` becomes
    /// `eperm[e]`. Both must be permutations of the right length.
    pub fn relabeled(&self, vperm: &[usize], eperm: &[usize]) -> Result<Multigraph> {
        check_permutation(vperm, self.num_vertices, "vertex permutation")?;
        check_permutation(eperm, self.num_edges(), "edge permutation")?;
        let mut edges = vec![(0usize, 0usize); self.num_edges()];
        for e in 0..self.num_edges() {
            let (u, v) = self.endpoints[e];
            edges[eperm[e]] = (vperm[u], vperm[v]);
        }
        Multigraph::new(self.num_vertices, edges)
    }

    /// Suppresses every 2-valent vertex whose two incidences are distinct
    /// edges, merging the two edges and remembering the oriented chain of
    /// original edges behind every smoothed edge. A 2-valent vertex whose
    /// only edge is a loop is kept (there is no way to smooth it away).
    ///
    /// For a connected leafless graph of genus ≥ 2 the result is the unique
    /// minimal model of the graph; other callers must interpret the result
    /// with care (a circle smooths to a single vertex with a loop).
    pub(crate) fn chain_smoothing(&self) -> ChainSmoothing {
        // Live edge list: (u, v, oriented chain from u to v).
        struct Live {
            u: usize,
            v: usize,
            chain: Vec<(EdgeId, bool)>,
        }
        let mut live: Vec<Option<Live>> = self
            .endpoints
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| Some(Live { u, v, chain: vec![(EdgeId(e), true)] }))
            .collect();

        fn reverse(chain: &[(EdgeId, bool)]) -> Vec<(EdgeId, bool)> {
            chain.iter().rev().map(|&(e, fwd)| (e, !fwd)).collect()
        }

        loop {
            // Recompute incidences of live edges.
            let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.num_vertices];
            for (i, l) in live.iter().enumerate() {
                if let Some(l) = l {
                    incident[l.u].push(i);
                    if l.v != l.u {
                        incident[l.v].push(i);
                    } else {
                        incident[l.u].push(i);
                    }
                }
            }
            let mut suppressed = false;
            for w in 0..self.num_vertices {
                if incident[w].len() != 2 {
                    continue;
                }
                let (i, j) = (incident[w][0], incident[w][1]);
                if i == j {
                    continue; // single loop at w: not suppressible
                }
                let first = live[i].take().expect("live edge");
                let second = live[j].take().expect("live edge");
                // Orient `first` to end at w and `second` to start at w.
                let (a, mut chain) = if first.v == w {
                    (first.u, first.chain)
                } else {
                    (first.v, reverse(&first.chain))
                };
                let (b, second_chain) = if second.u == w {
                    (second.v, second.chain)
                } else {
                    (second.u, reverse(&second.chain))
                };
                chain.extend(second_chain);
                live.push(Some(Live { u: a, v: b, chain }));
                suppressed = true;
                break;
            }
            if !suppressed {
                break;
            }
        }

        // Surviving vertices: those with at least one live incidence, plus
        // untouched isolated vertices.
        let mut used = vec![false; self.num_vertices];
        for l in live.iter().flatten() {
            used[l.u] = true;
            used[l.v] = true;
        }
        let mut has_edge_history = vec![false; self.num_vertices];
        for &(u, v) in &self.endpoints {
            has_edge_history[u] = true;
            has_edge_history[v] = true;
        }
        let mut local = vec![usize::MAX; self.num_vertices];
        let mut vertex_map = Vec::new();
        for v in 0..self.num_vertices {
            if used[v] || !has_edge_history[v] {
                local[v] = vertex_map.len();
                vertex_map.push(VertexId(v));
            }
        }
        let mut pairs = Vec::new();
        let mut chains = Vec::new();
        for l in live.into_iter().flatten() {
            pairs.push((local[l.u], local[l.v]));
            chains.push(l.chain);
        }
        let graph = Multigraph::new(vertex_map.len(), pairs).expect("smoothing indices valid");
        ChainSmoothing { graph, vertex_map, chains }
    }
}

impl ChainSmoothing {
    /// The vertex sequence of a chain in parent coordinates, starting from
    /// the parent vertex the chain is oriented to leave first.
    pub(crate) fn chain_vertex_walk(&self, parent: &Multigraph, core_edge: usize) -> Vec<VertexId> {
        let chain = &self.chains[core_edge];
        let (first, fwd) = chain[0];
        let (a, b) = parent.endpoints(first);
        let mut walk = vec![if fwd { a } else { b }];
        for &(e, fwd) in chain {
            let (a, b) = parent.endpoints(e);
            walk.push(if fwd { b } else { a });
        }
        walk
    }
}

pub(crate) fn check_permutation(perm: &[usize], len: usize, what: &'static str) -> Result<()> {
    if perm.len() != len {
        return Err(Error::SizeMismatch { expected: len, actual: perm.len(), what });
    }
    let mut seen = vec![false; len];
    for &p in perm {
        if p >= len || seen[p] {
            return Err(Error::BadParameter { what: "not a permutation" });
        }
        seen[p] = true;
    }
    Ok(())
}
