//! Automorphism groups of multigraphs.
//!
//! An automorphism is a pair of permutations `(f_V, f_E)` such that the
//! endpoint pair of `f_E(e)` is the `f_V`-image of the endpoint pair of `e`.
//! Because parallel edges are distinct objects, a single vertex permutation
//! is typically compatible with many edge permutations; the search below
//! backtracks over vertex images and then counts (or expands) the compatible
//! edge bijections per parallel class in closed form.
//!
//! The same engine drives plain automorphism groups, pointwise stabilizers,
//! and the length-aware searches of [`crate::metric`] (every edge carries a
//! color; edge bijections must preserve colors).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{check_permutation, EdgeId, Multigraph, Subgraph, VertexId};

/// Largest group order for which element lists are materialized by default.
pub const DEFAULT_ELEMENT_CAP: usize = 10_000;

/// Vertex-count guard for the brute-force counting oracle.
const ORACLE_VERTEX_GUARD: usize = 8;

/// Vertex-count guard for canonical forms (the minimization is factorial).
const CANONICAL_VERTEX_GUARD: usize = 10;

/// A pair of permutations acting on a graph's vertices and edges. `vertex_perm[v]`
/// is the image of vertex `v`; `edge_perm[e]` the image of edge `e`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphMap {
    pub vertex_perm: Vec<usize>,
    pub edge_perm: Vec<usize>,
}

impl GraphMap {
    /// Builds a map from raw image vectors, checking both are permutations.
    pub fn new(vertex_perm: Vec<usize>, edge_perm: Vec<usize>) -> Result<Self> {
        check_permutation(&vertex_perm, vertex_perm.len(), "vertex permutation")?;
        check_permutation(&edge_perm, edge_perm.len(), "edge permutation")?;
        Ok(GraphMap { vertex_perm, edge_perm })
    }

    /// The identity map on a graph of the given size.
    pub fn identity(num_vertices: usize, num_edges: usize) -> Self {
        GraphMap {
            vertex_perm: (0..num_vertices).collect(),
            edge_perm: (0..num_edges).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_perm.iter().enumerate().all(|(i, &p)| i == p)
            && self.edge_perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &GraphMap) -> Result<GraphMap> {
        if self.vertex_perm.len() != other.vertex_perm.len() {
            return Err(Error::SizeMismatch {
                expected: self.vertex_perm.len(),
                actual: other.vertex_perm.len(),
                what: "vertex permutation",
            });
        }
        if self.edge_perm.len() != other.edge_perm.len() {
            return Err(Error::SizeMismatch {
                expected: self.edge_perm.len(),
                actual: other.edge_perm.len(),
                what: "edge permutation",
            });
        }
        Ok(GraphMap {
            vertex_perm: other.vertex_perm.iter().map(|&v| self.vertex_perm[v]).collect(),
            edge_perm: other.edge_perm.iter().map(|&e| self.edge_perm[e]).collect(),
        })
    }

    pub fn inverse(&self) -> GraphMap {
        let mut vertex_perm = vec![0; self.vertex_perm.len()];
        for (i, &p) in self.vertex_perm.iter().enumerate() {
            vertex_perm[p] = i;
        }
        let mut edge_perm = vec![0; self.edge_perm.len()];
        for (i, &p) in self.edge_perm.iter().enumerate() {
            edge_perm[p] = i;
        }
        GraphMap { vertex_perm, edge_perm }
    }
}

/// Checks whether `f` is an automorphism of `g`: both permutations have the
/// right length and every edge's endpoint pair is mapped onto the endpoint
/// pair of the image edge.
pub fn is_automorphism(g: &Multigraph, f: &GraphMap) -> Result<bool> {
    check_permutation(&f.vertex_perm, g.num_vertices(), "vertex permutation")?;
    check_permutation(&f.edge_perm, g.num_edges(), "edge permutation")?;
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        let (a, b) = g.endpoints(EdgeId(f.edge_perm[e.0]));
        let (fu, fv) = (f.vertex_perm[u.0], f.vertex_perm[v.0]);
        let image = if fu <= fv { (fu, fv) } else { (fv, fu) };
        if image != (a.0, b.0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A computed group of graph maps: exact order, a generating set, and — when
/// the order does not exceed the materialization cap — the full element list
/// (sorted, starting with the identity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub order: u64,
    pub generators: Vec<GraphMap>,
    pub elements: Option<Vec<GraphMap>>,
}

/// A set of vertices and edges to be fixed pointwise.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CellSet {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
}

impl CellSet {
    pub fn empty() -> Self {
        CellSet::default()
    }

    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = EdgeId>,
    ) -> Self {
        CellSet {
            vertices: vertices.into_iter().collect(),
            edges: edges.into_iter().collect(),
        }
    }

    pub fn from_vertices(vertices: impl IntoIterator<Item = VertexId>) -> Self {
        CellSet::new(vertices, [])
    }

    pub fn from_edges(edges: impl IntoIterator<Item = EdgeId>) -> Self {
        CellSet::new([], edges)
    }
}

pub(crate) fn factorial_u64(k: usize) -> Result<u64> {
    let mut acc: u64 = 1;
    for i in 2..=k as u64 {
        acc = acc.checked_mul(i).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// What the search engine should do beyond counting.
pub(crate) struct SearchRequest<'a> {
    pub graph: &'a Multigraph,
    /// Per-edge color; edge images must preserve colors. `None` = all equal.
    pub colors: Option<&'a [usize]>,
    /// Cells to fix pointwise.
    pub fixed: Option<&'a CellSet>,
    pub element_cap: usize,
    pub want_elements: bool,
    pub want_generators: bool,
}

pub(crate) struct SearchResult {
    pub order: u64,
    pub elements: Option<Vec<GraphMap>>,
    pub generators: Vec<GraphMap>,
}

/// One maximal set of mutually parallel same-colored edges.
struct EdgeGroup {
    pair: (usize, usize),
    color: usize,
    edges: Vec<usize>,
    fixed: Vec<usize>,
}

struct Engine<'a> {
    graph: &'a Multigraph,
    n: usize,
    degrees: Vec<usize>,
    /// `profile[u][v]`: color multiset of the edges between `u` and `v`
    /// (loops counted once on the diagonal). Symmetric.
    profile: Vec<Vec<BTreeMap<usize, usize>>>,
    /// Restricted image sets induced by fixed cells; `None` = unrestricted.
    allowed: Vec<Option<BTreeSet<usize>>>,
    groups: Vec<EdgeGroup>,
    group_index: BTreeMap<(usize, usize, usize), usize>,
}

impl<'a> Engine<'a> {
    fn build(req: &SearchRequest<'a>) -> Result<Self> {
        let g = req.graph;
        let n = g.num_vertices();
        let m = g.num_edges();
        if let Some(colors) = req.colors {
            if colors.len() != m {
                return Err(Error::SizeMismatch {
                    expected: m,
                    actual: colors.len(),
                    what: "edge colors",
                });
            }
        }
        let color_of = |e: usize| req.colors.map_or(0, |c| c[e]);

        let mut profile = vec![vec![BTreeMap::new(); n]; n];
        let mut group_map: BTreeMap<(usize, usize, usize), Vec<usize>> = BTreeMap::new();
        for e in 0..m {
            let (u, v) = g.endpoints(EdgeId(e));
            let c = color_of(e);
            *profile[u.0][v.0].entry(c).or_insert(0) += 1;
            if u != v {
                *profile[v.0][u.0].entry(c).or_insert(0) += 1;
            }
            group_map.entry((u.0, v.0, c)).or_default().push(e);
        }

        let mut allowed: Vec<Option<BTreeSet<usize>>> = vec![None; n];
        let restrict = |allowed: &mut Vec<Option<BTreeSet<usize>>>, v: usize, set: BTreeSet<usize>| {
            match &mut allowed[v] {
                Some(current) => {
                    let kept: BTreeSet<usize> = current.intersection(&set).copied().collect();
                    *current = kept;
                }
                slot @ None => *slot = Some(set),
            }
        };
        let mut fixed_edges = BTreeSet::new();
        if let Some(cells) = req.fixed {
            for &v in &cells.vertices {
                if v.0 >= n {
                    return Err(Error::InvalidVertex { vertex: v.0, num_vertices: n });
                }
                restrict(&mut allowed, v.0, BTreeSet::from([v.0]));
            }
            for &e in &cells.edges {
                if e.0 >= m {
                    return Err(Error::InvalidEdge { edge: e.0, num_edges: m });
                }
                fixed_edges.insert(e.0);
                let (u, v) = g.endpoints(e);
                if u == v {
                    restrict(&mut allowed, u.0, BTreeSet::from([u.0]));
                } else {
                    restrict(&mut allowed, u.0, BTreeSet::from([u.0, v.0]));
                    restrict(&mut allowed, v.0, BTreeSet::from([u.0, v.0]));
                }
            }
        }

        let mut groups = Vec::new();
        let mut group_index = BTreeMap::new();
        for ((u, v, c), edges) in group_map {
            let fixed: Vec<usize> =
                edges.iter().copied().filter(|e| fixed_edges.contains(e)).collect();
            group_index.insert((u, v, c), groups.len());
            groups.push(EdgeGroup { pair: (u, v), color: c, edges, fixed });
        }

        Ok(Engine {
            graph: g,
            n,
            degrees: g.degrees(),
            profile,
            allowed,
            groups,
            group_index,
        })
    }

    fn candidate_ok(&self, p: &[usize], v: usize, w: usize) -> bool {
        if self.degrees[v] != self.degrees[w] {
            return false;
        }
        if let Some(set) = &self.allowed[v] {
            if !set.contains(&w) {
                return false;
            }
        }
        if self.profile[v][v] != self.profile[w][w] {
            return false;
        }
        for u in 0..v {
            if self.profile[u][v] != self.profile[p[u]][w] {
                return false;
            }
        }
        true
    }

    /// Number of color-preserving edge bijections compatible with the
    /// completed vertex permutation: the product over parallel groups of
    /// `size!`, except that a group containing fixed edges (whose endpoint
    /// pair is then necessarily preserved) contributes `(size − #fixed)!`.
    fn edge_factor(&self) -> Result<u64> {
        let mut factor: u64 = 1;
        for group in &self.groups {
            let free = group.edges.len() - group.fixed.len();
            factor = factor.checked_mul(factorial_u64(free)?).ok_or(Error::Overflow)?;
        }
        Ok(factor)
    }

    /// All edge bijections compatible with `p`, expanded group by group in
    /// key order, each group's free edges permuted in lexicographic order.
    fn expand_edge_perms(&self, p: &[usize]) -> Vec<Vec<usize>> {
        let m = self.graph.num_edges();
        let mut result = vec![vec![usize::MAX; m]];
        for group in &self.groups {
            let (u, v) = group.pair;
            let (iu, iv) = (p[u], p[v]);
            let key = if iu <= iv { (iu, iv, group.color) } else { (iv, iu, group.color) };
            let target_idx = *self.group_index.get(&key).expect("image group exists");
            let target = &self.groups[target_idx];
            debug_assert_eq!(group.edges.len(), target.edges.len());

            let (src_free, dst_free): (Vec<usize>, Vec<usize>) = if group.fixed.is_empty() {
                (group.edges.clone(), target.edges.clone())
            } else {
                debug_assert_eq!(target_idx, self.group_index[&(u, v, group.color)]);
                let free: Vec<usize> = group
                    .edges
                    .iter()
                    .copied()
                    .filter(|e| !group.fixed.contains(e))
                    .collect();
                (free.clone(), free)
            };

            let assignments = lex_permutations(&dst_free);
            let mut next = Vec::with_capacity(result.len() * assignments.len());
            for partial in &result {
                for assignment in &assignments {
                    let mut ep = partial.clone();
                    for &e in &group.fixed {
                        ep[e] = e;
                    }
                    for (&src, &dst) in src_free.iter().zip(assignment.iter()) {
                        ep[src] = dst;
                    }
                    next.push(ep);
                }
            }
            result = next;
        }
        result
    }

    /// Runs the backtracking search, invoking `visit` once per valid complete
    /// vertex permutation with its edge-bijection count.
    fn search(&self, visit: &mut impl FnMut(&[usize], u64) -> Result<()>) -> Result<()> {
        let mut p = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.search_from(0, &mut p, &mut used, visit)
    }

    fn search_from(
        &self,
        v: usize,
        p: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut impl FnMut(&[usize], u64) -> Result<()>,
    ) -> Result<()> {
        if v == self.n {
            let factor = self.edge_factor()?;
            return visit(p, factor);
        }
        for w in 0..self.n {
            if used[w] || !self.candidate_ok(p, v, w) {
                continue;
            }
            p[v] = w;
            used[w] = true;
            self.search_from(v + 1, p, used, visit)?;
            used[w] = false;
            p[v] = usize::MAX;
        }
        Ok(())
    }

    /// A canonical edge bijection compatible with `p`: fixed edges stay put,
    /// every other group maps onto its image group ascending-to-ascending.
    fn lift(&self, p: &[usize]) -> GraphMap {
        let m = self.graph.num_edges();
        let mut ep = vec![usize::MAX; m];
        for group in &self.groups {
            let (u, v) = group.pair;
            let (iu, iv) = (p[u], p[v]);
            let key = if iu <= iv { (iu, iv, group.color) } else { (iv, iu, group.color) };
            let target = &self.groups[self.group_index[&key]];
            if group.fixed.is_empty() {
                for (&src, &dst) in group.edges.iter().zip(target.edges.iter()) {
                    ep[src] = dst;
                }
            } else {
                for &e in &group.fixed {
                    ep[e] = e;
                }
                let free = group.edges.iter().copied().filter(|e| !group.fixed.contains(e));
                let free_dst: Vec<usize> = target
                    .edges
                    .iter()
                    .copied()
                    .filter(|e| !group.fixed.contains(e))
                    .collect();
                for (src, dst) in free.zip(free_dst) {
                    ep[src] = dst;
                }
            }
        }
        GraphMap { vertex_perm: p.to_vec(), edge_perm: ep }
    }

    /// Generators of the subgroup acting trivially on vertices: for every
    /// group with `s ≥ 2` free edges, a transposition of the first two and
    /// (for `s ≥ 3`) a full cycle, which together generate all `s!` shuffles.
    fn kernel_generators(&self) -> Vec<GraphMap> {
        let n = self.n;
        let m = self.graph.num_edges();
        let mut gens = Vec::new();
        for group in &self.groups {
            let free: Vec<usize> = group
                .edges
                .iter()
                .copied()
                .filter(|e| !group.fixed.contains(e))
                .collect();
            if free.len() >= 2 {
                let mut ep: Vec<usize> = (0..m).collect();
                ep[free[0]] = free[1];
                ep[free[1]] = free[0];
                gens.push(GraphMap { vertex_perm: (0..n).collect(), edge_perm: ep });
            }
            if free.len() >= 3 {
                let mut ep: Vec<usize> = (0..m).collect();
                for i in 0..free.len() {
                    ep[free[i]] = free[(i + 1) % free.len()];
                }
                gens.push(GraphMap { vertex_perm: (0..n).collect(), edge_perm: ep });
            }
        }
        gens
    }
}

/// Permutations of `items` in lexicographic order (of the image sequences).
fn lex_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut result = Vec::new();
    let mut current = Vec::with_capacity(items.len());
    let mut used = vec![false; items.len()];
    fn rec(
        items: &[usize],
        used: &mut Vec<bool>,
        current: &mut Vec<usize>,
        result: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == items.len() {
            result.push(current.clone());
            return;
        }
        for i in 0..items.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            current.push(items[i]);
            rec(items, used, current, result);
            current.pop();
            used[i] = false;
        }
    }
    rec(items, &mut used, &mut current, &mut result);
    result
}

fn compose_perm(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&x| outer[x]).collect()
}

/// Closure of a set of vertex permutations under composition.
fn perm_closure(n: usize, gens: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let identity: Vec<usize> = (0..n).collect();
    let mut closure = BTreeSet::from([identity]);
    let mut frontier: Vec<Vec<usize>> = closure.iter().cloned().collect();
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = compose_perm(g, &p);
            if closure.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    closure
}

pub(crate) fn run_search(req: SearchRequest<'_>) -> Result<SearchResult> {
    let engine = Engine::build(&req)?;
    let cap = req.element_cap as u64;
    let mut order: u64 = 0;
    let mut elements: Option<Vec<GraphMap>> = req.want_elements.then(Vec::new);
    // Vertex permutations that generate the group's vertex action, extracted
    // greedily: a permutation outside the closure so far becomes a generator.
    let mut vertex_gens: Vec<Vec<usize>> = Vec::new();
    let mut vertex_closure: BTreeSet<Vec<usize>> = BTreeSet::from([(0..engine.n).collect()]);

    engine.search(&mut |p, factor| {
        order = order.checked_add(factor).ok_or(Error::Overflow)?;
        if let Some(els) = &mut elements {
            if order <= cap {
                for ep in engine.expand_edge_perms(p) {
                    debug_assert!(!ep.contains(&usize::MAX));
                    els.push(GraphMap { vertex_perm: p.to_vec(), edge_perm: ep });
                }
            } else {
                elements = None;
            }
        }
        if req.want_generators && !vertex_closure.contains(p) {
            vertex_gens.push(p.to_vec());
            vertex_closure = perm_closure(engine.n, &vertex_gens);
        }
        Ok(())
    })?;

    if let Some(els) = &mut elements {
        els.sort();
        debug_assert_eq!(els.len() as u64, order);
        debug_assert!(els
            .iter()
            .all(|f| is_automorphism(req.graph, f).unwrap_or(false)));
    }

    let mut generators = Vec::new();
    if req.want_generators {
        for vp in &vertex_gens {
            generators.push(engine.lift(vp));
        }
        generators.extend(engine.kernel_generators());
    }

    Ok(SearchResult { order, elements, generators })
}

fn group_from_search(g: &Multigraph, fixed: Option<&CellSet>, cap: usize) -> Result<AutomorphismGroup> {
    let result = run_search(SearchRequest {
        graph: g,
        colors: None,
        fixed,
        element_cap: cap,
        want_elements: true,
        want_generators: true,
    })?;
    Ok(AutomorphismGroup {
        order: result.order,
        generators: result.generators,
        elements: result.elements,
    })
}

/// The full automorphism group of `g`, with elements materialized when the
/// order is at most [`DEFAULT_ELEMENT_CAP`].
pub fn automorphisms(g: &Multigraph) -> Result<AutomorphismGroup> {
    automorphisms_with_cap(g, DEFAULT_ELEMENT_CAP)
}

/// Like [`automorphisms`] with an explicit element-materialization cap.
pub fn automorphisms_with_cap(g: &Multigraph, cap: usize) -> Result<AutomorphismGroup> {
    group_from_search(g, None, cap)
}

/// Order of the automorphism group, computed without storing elements.
pub fn automorphism_order(g: &Multigraph) -> Result<u64> {
    let result = run_search(SearchRequest {
        graph: g,
        colors: None,
        fixed: None,
        element_cap: 0,
        want_elements: false,
        want_generators: false,
    })?;
    Ok(result.order)
}

/// The subgroup fixing every cell of `s` pointwise.
pub fn stabilizer(g: &Multigraph, s: &CellSet) -> Result<AutomorphismGroup> {
    stabilizer_with_cap(g, s, DEFAULT_ELEMENT_CAP)
}

/// Like [`stabilizer`] with an explicit element-materialization cap.
pub fn stabilizer_with_cap(g: &Multigraph, s: &CellSet, cap: usize) -> Result<AutomorphismGroup> {
    group_from_search(g, Some(s), cap)
}

/// Order of the stabilizer subgroup, computed without storing elements.
pub fn stabilizer_order(g: &Multigraph, s: &CellSet) -> Result<u64> {
    let result = run_search(SearchRequest {
        graph: g,
        colors: None,
        fixed: Some(s),
        element_cap: 0,
        want_elements: false,
        want_generators: false,
    })?;
    Ok(result.order)
}

/// Independent brute-force count of the automorphism group order: iterate
/// over all `n!` vertex permutations, keep those preserving every parallel
/// multiplicity, and give each surviving permutation a factor of
/// `Π (class size)!` over parallel classes. Deliberately shares no machinery
/// with the backtracking search so the two can cross-check each other.
pub fn automorphism_count_oracle(g: &Multigraph) -> Result<u64> {
    let n = g.num_vertices();
    if n > ORACLE_VERTEX_GUARD {
        return Err(Error::GuardExceeded {
            what: "brute-force count vertex guard",
            limit: ORACLE_VERTEX_GUARD,
            actual: n,
        });
    }
    let mut mult = vec![vec![0usize; n]; n];
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        mult[u.0][v.0] += 1;
        if u != v {
            mult[v.0][u.0] += 1;
        }
    }
    let mut total: u64 = 0;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let valid = (0..n).all(|u| (u..n).all(|v| mult[u][v] == mult[perm[u]][perm[v]]));
        if valid {
            let mut factor: u64 = 1;
            for u in 0..n {
                for v in u..n {
                    factor = factor
                        .checked_mul(factorial_u64(mult[u][v])?)
                        .ok_or(Error::Overflow)?;
                }
            }
            total = total.checked_add(factor).ok_or(Error::Overflow)?;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    // The empty product: a graph with no vertices has exactly the identity.
    if n == 0 {
        total = 1;
    }
    Ok(total)
}

/// Advances `perm` to its lexicographic successor; false at the last one.
fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Witness for the injection of the pointwise star stabilizer at `x` into
/// the vertex stabilizer of an anchor vertex of the leafless core of
/// `G \ {x}`.
#[derive(Clone, Debug)]
pub struct CoreRestriction {
    /// The leafless core of `G` minus `x` and its incident edges, embedded
    /// in `G`.
    pub core: Subgraph,
    /// Anchor vertex in core-local numbering: the smallest core vertex that
    /// is an endpoint of a removed edge; every stabilizer element fixes it.
    pub anchor: VertexId,
    /// The same anchor in the numbering of `G`.
    pub anchor_in_parent: VertexId,
    /// Elements of the stabilizer of `{x} ∪ incident edges` in `Aut(G)`.
    pub stabilizer: Vec<GraphMap>,
    /// Their restrictions to the core, in the same order; pairwise distinct.
    pub restrictions: Vec<GraphMap>,
}

/// Restricts the pointwise stabilizer of `x` and its incident edges to the
/// leafless core of `G \ {x}`, verifying that every element restricts to a
/// core automorphism fixing the anchor and that the restriction map is
/// injective. Errors with `EmptyCore` when the core has no vertices.
pub fn restriction_to_core(g: &Multigraph, x: VertexId) -> Result<CoreRestriction> {
    if x.0 >= g.num_vertices() {
        return Err(Error::InvalidVertex { vertex: x.0, num_vertices: g.num_vertices() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_leafless() {
        return Err(Error::NotLeafless);
    }
    let deleted = g.delete_vertex(x)?;
    let inner = deleted.graph.leafless_core();
    // Compose the two embeddings to express the core in `g`'s numbering.
    let core = Subgraph {
        graph: inner.graph,
        vertices: inner.vertices.iter().map(|&v| deleted.vertices[v.0]).collect(),
        edges: inner.edges.iter().map(|&e| deleted.edges[e.0]).collect(),
    };
    if core.graph.num_vertices() == 0 {
        return Err(Error::EmptyCore);
    }

    let core_vertex_index: BTreeMap<VertexId, usize> =
        core.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let core_edge_index: BTreeMap<EdgeId, usize> =
        core.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    // Anchor: smallest core vertex incident to a removed edge. One exists
    // because `g` is connected and the core misses at least `x`.
    let removed: Vec<EdgeId> =
        g.edges().filter(|e| !core_edge_index.contains_key(e)).collect();
    let anchor_in_parent = core
        .vertices
        .iter()
        .copied()
        .find(|&v| {
            removed.iter().any(|&e| {
                let (a, b) = g.endpoints(e);
                a == v || b == v
            })
        })
        .expect("connected graph leaves an anchored removed edge");
    let anchor = VertexId(core_vertex_index[&anchor_in_parent]);

    let incident: Vec<EdgeId> = g
        .edges()
        .filter(|&e| {
            let (a, b) = g.endpoints(e);
            a == x || b == x
        })
        .collect();
    let star = CellSet::new([x], incident);
    let stab = stabilizer(g, &star)?;
    let elements = stab.elements.ok_or(Error::GuardExceeded {
        what: "stabilizer element materialization",
        limit: DEFAULT_ELEMENT_CAP,
        actual: stab.order as usize,
    })?;

    let mut restrictions = Vec::with_capacity(elements.len());
    let mut seen = BTreeSet::new();
    for f in &elements {
        let mut vertex_perm = vec![0usize; core.graph.num_vertices()];
        for (i, &v) in core.vertices.iter().enumerate() {
            let image = VertexId(f.vertex_perm[v.0]);
            let local = core_vertex_index
                .get(&image)
                .expect("stabilizer preserves the core vertex set");
            vertex_perm[i] = *local;
        }
        let mut edge_perm = vec![0usize; core.graph.num_edges()];
        for (i, &e) in core.edges.iter().enumerate() {
            let image = EdgeId(f.edge_perm[e.0]);
            let local = core_edge_index
                .get(&image)
                .expect("stabilizer preserves the core edge set");
            edge_perm[i] = *local;
        }
        let r = GraphMap { vertex_perm, edge_perm };
        assert!(
            is_automorphism(&core.graph, &r)?,
            "restriction of a stabilizer element is a core automorphism"
        );
        assert_eq!(r.vertex_perm[anchor.0], anchor.0, "restriction fixes the anchor");
        assert!(seen.insert(r.clone()), "restriction map is injective");
        restrictions.push(r);
    }

    Ok(CoreRestriction {
        core,
        anchor,
        anchor_in_parent,
        stabilizer: elements,
        restrictions,
    })
}

/// Pushes an automorphism forward along the contraction of an invariant edge
/// set `s`: the result acts on `contract(g, s)` and commutes with the vertex
/// projection and the edge inclusion. Errors when `f` does not map `s` onto
/// itself.
pub fn quotient_map(g: &Multigraph, s: &BTreeSet<EdgeId>, f: &GraphMap) -> Result<GraphMap> {
    check_permutation(&f.vertex_perm, g.num_vertices(), "vertex permutation")?;
    check_permutation(&f.edge_perm, g.num_edges(), "edge permutation")?;
    for &e in s {
        if e.0 >= g.num_edges() {
            return Err(Error::InvalidEdge { edge: e.0, num_edges: g.num_edges() });
        }
        if !s.contains(&EdgeId(f.edge_perm[e.0])) {
            return Err(Error::EdgeSetNotInvariant);
        }
    }
    let c = g.contract(s)?;
    let qn = c.graph.num_vertices();
    let mut vertex_perm = vec![usize::MAX; qn];
    for v in 0..g.num_vertices() {
        let src = c.vertex_map[v].0;
        let dst = c.vertex_map[f.vertex_perm[v]].0;
        if vertex_perm[src] == usize::MAX {
            vertex_perm[src] = dst;
        } else if vertex_perm[src] != dst {
            // Merged vertices map to different classes: s was not invariant
            // as a partition, which an invariant edge set rules out.
            return Err(Error::EdgeSetNotInvariant);
        }
    }
    let mut edge_perm = vec![usize::MAX; c.graph.num_edges()];
    for e in 0..g.num_edges() {
        if let Some(src) = c.edge_map[e] {
            let image = c.edge_map[f.edge_perm[e]]
                .expect("complement of an invariant set maps to the complement");
            edge_perm[src.0] = image.0;
        }
    }
    let map = GraphMap { vertex_perm, edge_perm };
    debug_assert!(is_automorphism(&c.graph, &map)?);
    Ok(map)
}

/// Canonical byte code of a graph: one byte for the vertex count, then the
/// lexicographic minimum over all vertex orderings of the upper-triangular
/// multiplicity matrix read column by column (so the first `k(k+1)/2`
/// entries depend only on the first `k` chosen vertices, which enables
/// prefix pruning), each entry as a big-endian `u32`. Equal codes iff the
/// graphs are isomorphic.
pub fn canonical_form(g: &Multigraph) -> Result<Vec<u8>> {
    let n = g.num_vertices();
    if n > CANONICAL_VERTEX_GUARD {
        return Err(Error::GuardExceeded {
            what: "canonical form vertex guard",
            limit: CANONICAL_VERTEX_GUARD,
            actual: n,
        });
    }
    let mut mult = vec![vec![0u32; n]; n];
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        mult[u.0][v.0] += 1;
        if u != v {
            mult[v.0][u.0] += 1;
        }
    }

    // `placement[k]` = original vertex put at position k. Entries appear in
    // column-major upper-triangular order: position j contributes the column
    // (0,j), (1,j), …, (j,j) once placement[j] is chosen.
    struct Search<'m> {
        mult: &'m [Vec<u32>],
        n: usize,
        best: Option<Vec<u32>>,
    }
    impl Search<'_> {
        /// `prefix_equal`: the entries so far coincide with the current
        /// best's prefix (false while no best exists, or when the path is
        /// already strictly smaller). Returns whether the subtree replaced
        /// best; callers then mark their prefix equal, since the new best
        /// extends the current path. That refresh keeps the flag in sync
        /// with best even when several leaves of one subtree improve it.
        fn go(
            &mut self,
            placement: &mut Vec<usize>,
            used: &mut Vec<bool>,
            entries: &mut Vec<u32>,
            prefix_equal: bool,
        ) -> bool {
            let j = placement.len();
            if j == self.n {
                if self.best.is_none() || !prefix_equal {
                    self.best = Some(entries.clone());
                    return true;
                }
                return false;
            }
            let mut improved_any = false;
            let mut prefix_equal = prefix_equal;
            for w in 0..self.n {
                if used[w] {
                    continue;
                }
                let base = entries.len();
                for i in 0..=j {
                    let other = if i == j { w } else { placement[i] };
                    entries.push(self.mult[other][w]);
                }
                let mut child_equal = prefix_equal;
                let mut prune = false;
                if prefix_equal {
                    let best = self.best.as_ref().expect("prefix_equal implies a best");
                    for k in base..entries.len() {
                        if entries[k] < best[k] {
                            child_equal = false;
                            break;
                        }
                        if entries[k] > best[k] {
                            prune = true;
                            break;
                        }
                    }
                }
                if !prune {
                    placement.push(w);
                    used[w] = true;
                    if self.go(placement, used, entries, child_equal) {
                        improved_any = true;
                        prefix_equal = true;
                    }
                    used[w] = false;
                    placement.pop();
                }
                entries.truncate(base);
            }
            improved_any
        }
    }

    let mut search = Search { mult: &mult, n, best: None };
    search.go(&mut Vec::new(), &mut vec![false; n], &mut Vec::new(), false);
    let entries = search.best.unwrap_or_default();

    let mut code = Vec::with_capacity(1 + entries.len() * 4);
    code.push(n as u8);
    for entry in entries {
        code.extend_from_slice(&entry.to_be_bytes());
    }
    Ok(code)
}

/// Isomorphism test by canonical-code equality (same vertex guard).
pub fn are_isomorphic(g1: &Multigraph, g2: &Multigraph) -> Result<bool> {
    if g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges() {
        // Still honor the guard so oversized inputs fail loudly.
        let n = g1.num_vertices().max(g2.num_vertices());
        if n > CANONICAL_VERTEX_GUARD {
            return Err(Error::GuardExceeded {
                what: "canonical form vertex guard",
                limit: CANONICAL_VERTEX_GUARD,
                actual: n,
            });
        }
        return Ok(false);
    }
    Ok(canonical_form(g1)? == canonical_form(g2)?)
}

/// The sharp upper bound for the automorphism-group order of a connected
/// leafless graph of the given genus: 12 for genus 2, `2^g·g!` for genus ≥ 3.
pub fn aut_order_bound(genus: usize) -> Result<u64> {
    if genus < 2 {
        return Err(Error::BadParameter { what: "order bound needs genus ≥ 2" });
    }
    if genus == 2 {
        return Ok(12);
    }
    fixed_point_order_bound(genus)
}

/// The sharp upper bound `2^g·g!` for the order of the stabilizer of a
/// vertex in a connected leafless graph of genus g (any g ≥ 0).
pub fn fixed_point_order_bound(genus: usize) -> Result<u64> {
    if genus >= 64 {
        return Err(Error::Overflow);
    }
    let power: u64 = 1u64 << genus;
    power.checked_mul(factorial_u64(genus)?).ok_or(Error::Overflow)
}

/// Checks the factorial inequality `m!·n! ≤ l!·(m+n−l)!` for `m, n ≥ l ≥ 1`,
/// computing both sides exactly in 128-bit arithmetic.
pub fn factorial_inequality_check(l: u64, m: u64, n: u64) -> Result<bool> {
    if l < 1 || m < l || n < l {
        return Err(Error::BadParameter { what: "factorial inequality needs m ≥ l ≥ 1 and n ≥ l" });
    }
    fn fact_u128(k: u64) -> Result<u128> {
        let mut acc: u128 = 1;
        for i in 2..=k as u128 {
            acc = acc.checked_mul(i).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }
    let lhs = fact_u128(m)?.checked_mul(fact_u128(n)?).ok_or(Error::Overflow)?;
    let rhs = fact_u128(l)?
        .checked_mul(fact_u128(m + n - l)?)
        .ok_or(Error::Overflow)?;
    Ok(lhs <= rhs)
}

/// Closure of a generator list under composition, starting from the
/// identity. Errors if the closure would exceed `cap` elements.
pub fn closure(
    num_vertices: usize,
    num_edges: usize,
    gens: &[GraphMap],
    cap: usize,
) -> Result<Vec<GraphMap>> {
    for g in gens {
        if g.vertex_perm.len() != num_vertices {
            return Err(Error::SizeMismatch {
                expected: num_vertices,
                actual: g.vertex_perm.len(),
                what: "vertex permutation",
            });
        }
        if g.edge_perm.len() != num_edges {
            return Err(Error::SizeMismatch {
                expected: num_edges,
                actual: g.edge_perm.len(),
                what: "edge permutation",
            });
        }
    }
    let identity = GraphMap::identity(num_vertices, num_edges);
    let mut set = BTreeSet::from([identity]);
    let mut frontier: Vec<GraphMap> = set.iter().cloned().collect();
    while let Some(f) = frontier.pop() {
        for g in gens {
            let h = g.compose(&f)?;
            if set.insert(h.clone()) {
                if set.len() > cap {
                    return Err(Error::GuardExceeded {
                        what: "closure size cap",
                        limit: cap,
                        actual: set.len(),
                    });
                }
                frontier.push(h);
            }
        }
    }
    Ok(set.into_iter().collect())
}
