//! The core digraph type plus connectivity machinery: strong components,
//! vertex connectivity (two independent routes), shortest constrained
//! dipaths and dicycles.
//!
//! Digraphs are loop-free and duplicate-free; digons (both `(u,v)` and
//! `(v,u)`) are allowed. Adjacency is stored as one `u64` bitmask row per
//! vertex, which keeps all the subset-restricted searches cheap.

use crate::bits::{self, MAX_ORDER};
use crate::error::GraphError;
use serde::{Deserialize, Serialize};

/// Loop-free digraph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    order: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.order, self.arcs())
    }
}

impl Digraph {
    /// Build a normalized digraph: arcs deduplicated, endpoints validated,
    /// loops rejected.
    pub fn new(order: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order, max: MAX_ORDER });
        }
        let mut g = Digraph {
            order,
            out: vec![0; order],
            inn: vec![0; order],
        };
        for &(u, v) in arcs {
            if u >= order || v >= order {
                return Err(GraphError::ArcOutOfRange { arc: (u, v), order });
            }
            if u == v {
                return Err(GraphError::LoopArc { vertex: u });
            }
            g.out[u] |= bits::bit(v);
            g.inn[v] |= bits::bit(u);
        }
        Ok(g)
    }

    pub fn empty(order: usize) -> Self {
        Digraph::new(order, &[]).expect("empty digraph")
    }

    /// Biorientation: every undirected edge `uv` becomes the digon
    /// `(u,v),(v,u)`.
    pub fn biorient(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut arcs = Vec::with_capacity(edges.len() * 2);
        for &(u, v) in edges {
            arcs.push((u, v));
            arcs.push((v, u));
        }
        Digraph::new(order, &arcs)
    }

    /// Biorientation of the complete graph `K_n`.
    pub fn bicomplete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Digraph::biorient(n, &edges).expect("bicomplete")
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn directed_cycle(n: usize) -> Self {
        assert!(n >= 2);
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::new(n, &arcs).expect("directed cycle")
    }

    /// Biorientation of the cycle `C_n`.
    pub fn bicycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::biorient(n, &edges).expect("bicycle")
    }

    /// Biorientation of the path on `n` vertices.
    pub fn bipath(n: usize) -> Self {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Digraph::biorient(n, &edges).expect("bipath")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn full_mask(&self) -> u64 {
        bits::full_mask(self.order)
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && bits::contains(self.out[u], v)
    }

    #[inline]
    pub fn out_mask(&self, u: usize) -> u64 {
        self.out[u]
    }

    #[inline]
    pub fn in_mask(&self, v: usize) -> u64 {
        self.inn[v]
    }

    #[inline]
    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].count_ones() as usize
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].count_ones() as usize
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Arcs in normalized order: ascending by tail, then head.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(self.arc_count());
        for u in 0..self.order {
            for v in bits::iter(self.out[u]) {
                arcs.push((u, v));
            }
        }
        arcs
    }

    /// Minimum out-degree over all vertices (`usize::MAX` when empty).
    pub fn min_out_degree(&self) -> usize {
        (0..self.order).map(|u| self.out_degree(u)).min().unwrap_or(usize::MAX)
    }

    pub fn min_in_degree(&self) -> usize {
        (0..self.order).map(|v| self.in_degree(v)).min().unwrap_or(usize::MAX)
    }

    /// All arcs reversed; the order is unchanged.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            order: self.order,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    pub fn with_arc(&self, u: usize, v: usize) -> Digraph {
        assert!(u < self.order && v < self.order && u != v);
        let mut g = self.clone();
        g.out[u] |= bits::bit(v);
        g.inn[v] |= bits::bit(u);
        g
    }

    pub fn without_arc(&self, u: usize, v: usize) -> Digraph {
        let mut g = self.clone();
        g.out[u] &= !bits::bit(v);
        g.inn[v] &= !bits::bit(u);
        g
    }

    /// Add one fresh vertex (index `order`) with the given in/out
    /// adjacency to the old vertices.
    pub fn with_vertex(&self, in_from: u64, out_to: u64) -> Digraph {
        let n = self.order;
        assert!(n < MAX_ORDER);
        debug_assert_eq!(in_from & !self.full_mask(), 0);
        debug_assert_eq!(out_to & !self.full_mask(), 0);
        let mut g = Digraph {
            order: n + 1,
            out: self.out.clone(),
            inn: self.inn.clone(),
        };
        g.out.push(out_to);
        g.inn.push(in_from);
        for v in bits::iter(out_to) {
            g.inn[v] |= bits::bit(n);
        }
        for u in bits::iter(in_from) {
            g.out[u] |= bits::bit(n);
        }
        g
    }

    /// Subdigraph induced by the vertex set `keep`, together with the map
    /// from new indices back to old vertices.
    pub fn induced(&self, keep: u64) -> Result<InducedSubdigraph, GraphError> {
        if keep & !self.full_mask() != 0 {
            let v = bits::iter(keep & !self.full_mask()).next().unwrap();
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.order });
        }
        let old_of: Vec<usize> = bits::to_vec(keep);
        let mut new_of = vec![usize::MAX; self.order];
        for (new, &old) in old_of.iter().enumerate() {
            new_of[old] = new;
        }
        let mut arcs = Vec::new();
        for (nu, &u) in old_of.iter().enumerate() {
            for v in bits::iter(self.out[u] & keep) {
                arcs.push((nu, new_of[v]));
            }
        }
        let digraph = Digraph::new(old_of.len(), &arcs).expect("induced");
        Ok(InducedSubdigraph { digraph, old_of })
    }

    /// Delete one vertex, keeping the remaining indices in order.
    pub fn delete_vertex(&self, v: usize) -> Digraph {
        self.induced(self.full_mask() & !bits::bit(v))
            .expect("delete_vertex")
            .digraph
    }

    /// Disjoint union: `other`'s vertices are appended after `self`'s.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let base = self.order;
        let mut arcs = self.arcs();
        for (u, v) in other.arcs() {
            arcs.push((u + base, v + base));
        }
        Digraph::new(base + other.order, &arcs).expect("disjoint union")
    }

    /// Relabel through a permutation: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Digraph {
        debug_assert_eq!(perm.len(), self.order);
        let arcs: Vec<_> = self.arcs().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Digraph::new(self.order, &arcs).expect("permuted")
    }

    /// True when the digraph restricted to `mask` has no dicycle.
    pub fn is_acyclic_on(&self, mask: u64) -> bool {
        // Kahn peeling on the restricted digraph.
        let mut alive = mask & self.full_mask();
        loop {
            let mut removed = false;
            for v in bits::iter(alive) {
                if self.inn[v] & alive == 0 {
                    alive &= !bits::bit(v);
                    removed = true;
                }
            }
            if alive == 0 {
                return true;
            }
            if !removed {
                return false;
            }
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_on(self.full_mask())
    }

    /// Vertices reachable from `sources` (included) walking only inside
    /// `allowed`.
    pub fn reachable_within(&self, sources: u64, allowed: u64) -> u64 {
        let mut seen = sources & allowed;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits::iter(frontier) {
                next |= self.out[u] & allowed & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }
}

/// Result of [`Digraph::induced`]: the relabeled digraph plus the
/// new-index -> old-vertex map.
#[derive(Clone, Debug)]
pub struct InducedSubdigraph {
    pub digraph: Digraph,
    /// `old_of[new] = old`
    pub old_of: Vec<usize>,
}

impl InducedSubdigraph {
    pub fn new_of(&self, old: usize) -> Option<usize> {
        self.old_of.iter().position(|&o| o == old)
    }
}

/// A dipath: ordered distinct vertices, consecutive pairs arcs of the host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dipath(pub Vec<usize>);

impl Dipath {
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().unwrap()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn interior(&self) -> &[usize] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn vertex_mask(&self) -> u64 {
        bits::from_slice(&self.0)
    }

    /// Validate against a host: vertices distinct, consecutive arcs exist.
    pub fn validate(&self, host: &Digraph) -> bool {
        if self.0.is_empty() {
            return false;
        }
        let mut seen = 0u64;
        for &v in &self.0 {
            if v >= host.order() || bits::contains(seen, v) {
                return false;
            }
            seen |= bits::bit(v);
        }
        self.0.windows(2).all(|w| host.has_arc(w[0], w[1]))
    }

    pub fn reversed_vertices(&self) -> Dipath {
        let mut v = self.0.clone();
        v.reverse();
        Dipath(v)
    }
}

/// A dicycle stored as the vertex sequence; the closing arc from last back
/// to first is implied. Length is the number of vertices (>= 2: loop-free).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dicycle(pub Vec<usize>);

impl Dicycle {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn vertex_mask(&self) -> u64 {
        bits::from_slice(&self.0)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn validate(&self, host: &Digraph) -> bool {
        if self.0.len() < 2 {
            return false;
        }
        let mut seen = 0u64;
        for &v in &self.0 {
            if v >= host.order() || bits::contains(seen, v) {
                return false;
            }
            seen |= bits::bit(v);
        }
        self.0.windows(2).all(|w| host.has_arc(w[0], w[1]))
            && host.has_arc(*self.0.last().unwrap(), self.0[0])
    }

    /// The dipath along the cycle from `from` to `to` (inclusive); `from`
    /// and `to` must lie on the cycle. When `from == to` the result is the
    /// single vertex.
    pub fn segment(&self, from: usize, to: usize) -> Dipath {
        let start = self.0.iter().position(|&v| v == from).expect("segment: from on cycle");
        let mut seq = vec![from];
        let mut i = start;
        while self.0[i] != to {
            i = (i + 1) % self.0.len();
            seq.push(self.0[i]);
            assert!(seq.len() <= self.0.len(), "segment: to not on cycle");
        }
        Dipath(seq)
    }

    pub fn reversed(&self) -> Dicycle {
        let mut v = self.0.clone();
        v.reverse();
        Dicycle(v)
    }
}

/// Strong component decomposition. Component ids are numbered in
/// topological order of the condensation: every arc between components
/// goes from a smaller id to a larger one.
#[derive(Clone, Debug)]
pub struct StrongComponentDecomposition {
    pub component_of: Vec<usize>,
    /// Vertex masks, indexed by component id (topological order).
    pub components: Vec<u64>,
}

impl StrongComponentDecomposition {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn same_component(&self, u: usize, v: usize) -> bool {
        self.component_of[u] == self.component_of[v]
    }

    /// Mask of the component containing `v`.
    pub fn component_mask(&self, v: usize) -> u64 {
        self.components[self.component_of[v]]
    }
}

/// Tarjan's algorithm restricted to `mask`; linear in vertices + arcs.
/// Vertices outside `mask` are ignored entirely (their `component_of`
/// entry is `usize::MAX`).
pub fn strong_components_on(d: &Digraph, mask: u64) -> StrongComponentDecomposition {
    let n = d.order();
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut on_stack = 0u64;
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut comps_rev: Vec<u64> = Vec::new();

    // Iterative Tarjan: (vertex, remaining out-neighbors) frames.
    let mut frames: Vec<(usize, u64)> = Vec::new();
    for root in bits::iter(mask) {
        if index[root] != UNSET {
            continue;
        }
        frames.push((root, d.out_mask(root) & mask));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack |= bits::bit(root);
        while let Some(&mut (v, ref mut rest)) = frames.last_mut() {
            if *rest != 0 {
                let w = rest.trailing_zeros() as usize;
                *rest &= *rest - 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack |= bits::bit(w);
                    frames.push((w, d.out_mask(w) & mask));
                } else if bits::contains(on_stack, w) {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    let mut comp = 0u64;
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack &= !bits::bit(w);
                        comp |= bits::bit(w);
                        if w == v {
                            break;
                        }
                    }
                    comps_rev.push(comp);
                }
                frames.pop();
                if let Some(&(p, _)) = frames.last() {
                    low[p] = low[p].min(low[v]);
                }
            }
        }
    }

    // Tarjan emits components in reverse topological order.
    comps_rev.reverse();
    let mut component_of = vec![UNSET; n];
    for (id, comp) in comps_rev.iter().enumerate() {
        for v in bits::iter(*comp) {
            component_of[v] = id;
        }
    }
    StrongComponentDecomposition { component_of, components: comps_rev }
}

pub fn strong_components(d: &Digraph) -> StrongComponentDecomposition {
    strong_components_on(d, d.full_mask())
}

/// Strongly connected = exactly one strong component (requires >= 1 vertex).
pub fn is_strongly_connected_on(d: &Digraph, mask: u64) -> bool {
    if mask & d.full_mask() == 0 {
        return false;
    }
    strong_components_on(d, mask).count() == 1
}

pub fn is_strongly_connected(d: &Digraph) -> bool {
    is_strongly_connected_on(d, d.full_mask())
}

/// Subset-iteration route: `D` is `k`-strongly connected iff it has at
/// least `k+1` vertices and deleting any fewer than `k` vertices leaves a
/// strongly connected digraph.
pub fn is_k_strongly_connected(d: &Digraph, k: usize) -> bool {
    assert!(k >= 1);
    let n = d.order();
    if n < k + 1 {
        return false;
    }
    // All subsets of size < k; the empty set covers plain strong connectivity.
    let full = d.full_mask();
    fn rec(d: &Digraph, full: u64, chosen: u64, start: usize, left: usize) -> bool {
        if !is_strongly_connected_on(d, full & !chosen) {
            return false;
        }
        if left == 0 {
            return true;
        }
        for v in start..d.order() {
            if !rec(d, full, chosen | bits::bit(v), v + 1, left - 1) {
                return false;
            }
        }
        true
    }
    rec(d, full, 0, 0, k - 1)
}

/// Flow route for the same predicate: vertex connectivity via unit-capacity
/// max-flow on the split digraph, with the usual `n-1` cap when every
/// ordered pair is adjacent. Kept independent of the subset route so the
/// two can be checked against each other.
pub fn vertex_connectivity(d: &Digraph) -> usize {
    let n = d.order();
    if n == 0 {
        return 0;
    }
    if !is_strongly_connected(d) {
        return 0;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in 0..n {
            if s == t || d.has_arc(s, t) {
                continue;
            }
            best = best.min(max_vertex_disjoint_paths(d, s, t));
            if best == 0 {
                return 0;
            }
        }
    }
    best
}

pub fn is_k_strongly_connected_flow(d: &Digraph, k: usize) -> bool {
    assert!(k >= 1);
    d.order() >= k + 1 && vertex_connectivity(d) >= k
}

/// Max number of internally vertex-disjoint s->t dipaths (s,t not adjacent),
/// by repeated augmenting paths on the node-split unit network.
fn max_vertex_disjoint_paths(d: &Digraph, s: usize, t: usize) -> usize {
    let n = d.order();
    // Nodes: v_in = 2v, v_out = 2v+1. Internal capacity arcs v_in->v_out.
    // Residual adjacency as a dense matrix of capacities (0/1); fine at n<=64.
    let m = 2 * n;
    let mut cap = vec![vec![0u8; m]; m];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = 1;
    }
    // Source/sink use unbounded internal capacity.
    cap[2 * s][2 * s + 1] = u8::MAX;
    cap[2 * t][2 * t + 1] = u8::MAX;
    for u in 0..n {
        for v in bits::iter(d.out_mask(u)) {
            cap[2 * u + 1][2 * v] = 1;
        }
    }
    let (src, snk) = (2 * s, 2 * t + 1);
    let mut flow = 0usize;
    loop {
        // BFS for an augmenting path.
        let mut prev = vec![usize::MAX; m];
        prev[src] = src;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for v in 0..m {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[snk] == usize::MAX {
            return flow;
        }
        let mut v = snk;
        while v != src {
            let u = prev[v];
            cap[u][v] -= 1;
            cap[v][u] = cap[v][u].saturating_add(1);
            v = u;
        }
        flow += 1;
    }
}

/// Shortest `(X,Y)`-dipath avoiding `forbidden` entirely, with interior
/// also avoiding `X` and `Y`. Among shortest paths, returns the
/// lexicographically least vertex sequence. When `X` and `Y` intersect
/// (outside `forbidden`) the result is the degenerate single-vertex path.
pub fn shortest_dipath(d: &Digraph, x: u64, y: u64, forbidden: u64) -> Option<Dipath> {
    let full = d.full_mask();
    let x = x & full;
    let y = y & full;
    if x == 0 || y == 0 {
        return None;
    }
    let starts = x & !forbidden;
    let ends = y & !forbidden;
    if starts == 0 || ends == 0 {
        return None;
    }
    let interior_ok = full & !(x | y | forbidden);

    // Backward BFS from Y: dist[v] = shortest completion length from v.
    const INF: usize = usize::MAX;
    let n = d.order();
    let mut dist = vec![INF; n];
    let mut frontier = ends;
    for v in bits::iter(ends) {
        dist[v] = 0;
    }
    let mut level = 0usize;
    while frontier != 0 {
        level += 1;
        let mut next = 0u64;
        for w in bits::iter(frontier) {
            // Expand backwards through w only if w may be passed through,
            // i.e. w is an endpoint level-0 vertex or an interior vertex.
            if level > 1 && !bits::contains(interior_ok, w) {
                continue;
            }
            for u in bits::iter(d.in_mask(w)) {
                if dist[u] == INF && (bits::contains(interior_ok, u) || bits::contains(starts, u)) {
                    dist[u] = level;
                    next |= bits::bit(u);
                }
            }
        }
        frontier = next;
    }

    let best = bits::iter(starts).filter_map(|s| (dist[s] != INF).then_some(dist[s])).min()?;
    // Greedy lexicographic reconstruction.
    let start = bits::iter(starts).find(|&s| dist[s] == best).unwrap();
    let mut seq = vec![start];
    let mut cur = start;
    let mut remaining = best;
    while remaining > 0 {
        let next = bits::iter(d.out_mask(cur))
            .find(|&w| {
                dist[w] == remaining - 1
                    && if remaining - 1 == 0 {
                        bits::contains(ends, w)
                    } else {
                        bits::contains(interior_ok, w)
                    }
            })
            .expect("distance-consistent successor");
        seq.push(next);
        cur = next;
        remaining -= 1;
    }
    Some(Dipath(seq))
}

/// A dicycle through `v` restricted to `mask`, or `None` iff `v` lies in a
/// trivial strong component there. Deterministic: shortest, ties broken by
/// the lexicographically least continuation.
pub fn find_dicycle_through_on(d: &Digraph, v: usize, mask: u64) -> Option<Dicycle> {
    if !bits::contains(mask, v) {
        return None;
    }
    let scc = strong_components_on(d, mask);
    let comp = scc.component_mask(v);
    if comp.count_ones() < 2 {
        return None;
    }
    let mut best: Option<Vec<usize>> = None;
    for u in bits::iter(d.out_mask(v) & comp) {
        // v -> u, then shortest u -> v inside the component.
        let back = shortest_dipath(d, bits::bit(u), bits::bit(v), !comp)?;
        let mut cycle = vec![v];
        cycle.extend_from_slice(&back.0[..back.0.len() - 1]);
        let better = match &best {
            None => true,
            Some(b) => cycle.len() < b.len() || (cycle.len() == b.len() && cycle < *b),
        };
        if better {
            best = Some(cycle);
        }
    }
    best.map(Dicycle)
}

pub fn find_dicycle_through(d: &Digraph, v: usize) -> Option<Dicycle> {
    find_dicycle_through_on(d, v, d.full_mask())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_normalizes_and_rejects() {
        let g = Digraph::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.arcs(), vec![(0, 1), (1, 0)]);
        let tri = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tri.arc_count(), 3);
        assert!(matches!(
            Digraph::new(1, &[(0, 0)]),
            Err(GraphError::LoopArc { vertex: 0 })
        ));
        assert!(matches!(
            Digraph::new(2, &[(0, 2)]),
            Err(GraphError::ArcOutOfRange { arc: (0, 2), .. })
        ));
    }

    #[test]
    fn reverse_basics() {
        let g = Digraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.reverse().arcs(), vec![(1, 0)]);
        let k3 = Digraph::bicomplete(3);
        assert_eq!(k3.reverse(), k3);
        let g = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.reverse().reverse(), g);
    }

    #[test]
    fn biorient_shapes() {
        assert_eq!(Digraph::biorient(2, &[(0, 1)]).unwrap().arc_count(), 2);
        assert_eq!(Digraph::bicycle(4).arc_count(), 8);
        assert_eq!(Digraph::bipath(3).arc_count(), 4);
    }

    #[test]
    fn induced_subdigraphs() {
        let k4 = Digraph::bicomplete(4);
        let sub = k4.induced(0b0111).unwrap();
        assert_eq!(sub.digraph, Digraph::bicomplete(3));
        assert_eq!(sub.old_of, vec![0, 1, 2]);
        let empty = k4.induced(0).unwrap();
        assert_eq!(empty.digraph.order(), 0);
        let all = k4.induced(k4.full_mask()).unwrap();
        assert_eq!(all.digraph, k4);
        assert!(k4.induced(1 << 5).is_err());
    }

    #[test]
    fn strong_component_shapes() {
        let tri = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(strong_components(&tri).count(), 1);
        let arc = Digraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(strong_components(&arc).count(), 2);
        let two_digons = Digraph::new(4, &[(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        assert_eq!(strong_components(&two_digons).count(), 2);
    }

    #[test]
    fn condensation_is_topologically_ordered() {
        let g = Digraph::new(5, &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 2), (4, 0)]).unwrap();
        let scc = strong_components(&g);
        for (u, v) in g.arcs() {
            assert!(scc.component_of[u] <= scc.component_of[v]);
        }
    }

    #[test]
    fn k_strong_examples() {
        let c5 = Digraph::directed_cycle(5);
        assert!(is_k_strongly_connected(&c5, 1));
        assert!(!is_k_strongly_connected(&c5, 2));
        assert!(is_k_strongly_connected(&Digraph::bicomplete(4), 3));
        let disc = Digraph::new(2, &[]).unwrap();
        assert!(!is_k_strongly_connected(&disc, 1));
    }

    #[test]
    fn connectivity_routes_agree_on_examples() {
        for g in [
            Digraph::directed_cycle(5),
            Digraph::bicomplete(4),
            Digraph::bicycle(4),
            Digraph::new(3, &[(0, 1), (1, 2)]).unwrap(),
        ] {
            for k in 1..=4 {
                assert_eq!(
                    is_k_strongly_connected(&g, k),
                    is_k_strongly_connected_flow(&g, k),
                    "disagreement on {:?} k={}",
                    g,
                    k
                );
            }
        }
    }

    #[test]
    fn shortest_dipath_contract() {
        // Degenerate: X and Y intersect.
        let g = Digraph::new(1, &[]).unwrap();
        let p = shortest_dipath(&g, 0b1, 0b1, 0).unwrap();
        assert_eq!(p.0, vec![0]);

        // Forbidden vertex blocks the only route.
        let path = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(shortest_dipath(&path, 0b001, 0b100, 0b010).is_none());

        // Direct arc is always shortest.
        let k3 = Digraph::bicomplete(3);
        let p = shortest_dipath(&k3, 0b001, 0b100, 0).unwrap();
        assert_eq!(p.0, vec![0, 2]);
    }

    #[test]
    fn shortest_dipath_is_lex_least() {
        // Two shortest 0->3 paths: 0,1,3 and 0,2,3.
        let g = Digraph::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let p = shortest_dipath(&g, 0b0001, 0b1000, 0).unwrap();
        assert_eq!(p.0, vec![0, 1, 3]);
    }

    #[test]
    fn dicycle_search() {
        let digon = Digraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        let c = find_dicycle_through(&digon, 0).unwrap();
        assert_eq!(c.0, vec![0, 1]);
        assert!(c.validate(&digon));

        let arc = Digraph::new(2, &[(0, 1)]).unwrap();
        assert!(find_dicycle_through(&arc, 0).is_none());

        let c4 = Digraph::directed_cycle(4);
        let c = find_dicycle_through(&c4, 2).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.contains(2));
        assert!(c.validate(&c4));
    }

    #[test]
    fn cycle_segments() {
        let c = Dicycle(vec![0, 1, 2, 3]);
        assert_eq!(c.segment(2, 1).0, vec![2, 3, 0, 1]);
        assert_eq!(c.segment(1, 1).0, vec![1]);
    }
}
