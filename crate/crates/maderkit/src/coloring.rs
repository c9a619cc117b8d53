//! Acyclic colorings and the exact dichromatic number, dicriticality and
//! dicritical cores, plus the lexicographic color-vector machinery used by
//! the subdivision-assembly engine.
//!
//! Colorings are stored as one vertex mask per color class over the
//! ambient digraph, so the same type serves both total colorings and
//! colorings of an induced vertex subset.

use crate::bits;
use crate::digraph::Digraph;
use crate::error::ColoringError;
use serde::{Deserialize, Serialize};

/// A k-coloring given by its color classes (vertex masks over the ambient
/// digraph). Classes are disjoint; their union is the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcyclicColoring {
    classes: Vec<u64>,
}

impl AcyclicColoring {
    pub fn new(classes: Vec<u64>) -> AcyclicColoring {
        let mut seen = 0u64;
        for &c in &classes {
            assert_eq!(seen & c, 0, "color classes must be disjoint");
            seen |= c;
        }
        AcyclicColoring { classes }
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, i: usize) -> u64 {
        self.classes[i]
    }

    pub fn classes(&self) -> &[u64] {
        &self.classes
    }

    pub fn support(&self) -> u64 {
        self.classes.iter().fold(0, |m, &c| m | c)
    }

    /// Color of `v` (0-based), if colored.
    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|&c| bits::contains(c, v))
    }

    /// Pad with empty classes up to `k` colors.
    pub fn padded(&self, k: usize) -> AcyclicColoring {
        assert!(k >= self.k());
        let mut classes = self.classes.clone();
        classes.resize(k, 0);
        AcyclicColoring { classes }
    }

    /// Classes as sorted vertex lists (JSON form `{"k":..,"classes":[[..]]}`).
    pub fn to_json(&self) -> ColoringJson {
        ColoringJson {
            k: self.k(),
            classes: self.classes.iter().map(|&c| bits::to_vec(c)).collect(),
        }
    }

    pub fn from_json(j: &ColoringJson) -> AcyclicColoring {
        assert!(j.classes.len() == j.k, "k must match the class count");
        AcyclicColoring::new(j.classes.iter().map(|vs| bits::from_slice(vs)).collect())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColoringJson {
    pub k: usize,
    pub classes: Vec<Vec<usize>>,
}

/// True iff `c` is total on `support` and every class induces no dicycle.
pub fn is_acyclic_coloring_on(d: &Digraph, c: &AcyclicColoring, support: u64) -> Result<(), ColoringError> {
    if c.support() != support & d.full_mask() {
        return Err(ColoringError::PartialAssignment);
    }
    for (i, &class) in c.classes().iter().enumerate() {
        if !d.is_acyclic_on(class) {
            return Err(ColoringError::ClassNotAcyclic { class: i });
        }
    }
    Ok(())
}

/// Total-coloring validity check.
pub fn is_acyclic_coloring(d: &Digraph, c: &AcyclicColoring) -> bool {
    is_acyclic_coloring_on(d, c, d.full_mask()).is_ok()
}

/// Backtracking search for an acyclic `k`-coloring of `d` restricted to
/// `support`. Vertices are assigned in decreasing total-degree order; a
/// class is pruned as soon as adding the vertex closes a dicycle. New
/// colors are introduced in order, which breaks class symmetry.
pub fn find_acyclic_k_coloring_on(d: &Digraph, support: u64, k: usize) -> Option<AcyclicColoring> {
    let verts = order_by_degree(d, support);
    if verts.is_empty() {
        return Some(AcyclicColoring::new(vec![0; k]));
    }
    if k == 0 {
        return None;
    }
    let mut classes = vec![0u64; k];
    if assign(d, &verts, 0, &mut classes, 0) {
        Some(AcyclicColoring::new(classes))
    } else {
        None
    }
}

fn order_by_degree(d: &Digraph, support: u64) -> Vec<usize> {
    let mut verts: Vec<usize> = bits::to_vec(support & d.full_mask());
    verts.sort_by_key(|&v| std::cmp::Reverse(d.out_degree(v) + d.in_degree(v)));
    verts
}

fn assign(d: &Digraph, verts: &[usize], idx: usize, classes: &mut [u64], used: usize) -> bool {
    if idx == verts.len() {
        return true;
    }
    let v = verts[idx];
    let limit = (used + 1).min(classes.len());
    for c in 0..limit {
        if class_stays_acyclic(d, classes[c], v) {
            classes[c] |= bits::bit(v);
            if assign(d, verts, idx + 1, classes, used.max(c + 1)) {
                return true;
            }
            classes[c] &= !bits::bit(v);
        }
    }
    false
}

/// Adding `v` to an acyclic class creates a dicycle iff `v` can be reached
/// from one of its out-neighbors within the class.
fn class_stays_acyclic(d: &Digraph, class: u64, v: usize) -> bool {
    let inside = class | bits::bit(v);
    let from = d.out_mask(v) & inside;
    if from == 0 || d.in_mask(v) & inside == 0 {
        return true;
    }
    let reach = d.reachable_within(from, inside);
    !bits::contains(reach, v)
}

/// Exact dichromatic number with a witness coloring, restricted to
/// `support`.
pub fn dichromatic_number_on(d: &Digraph, support: u64) -> (usize, AcyclicColoring) {
    let support = support & d.full_mask();
    if support == 0 {
        return (0, AcyclicColoring::new(vec![]));
    }
    if d.is_acyclic_on(support) {
        return (1, AcyclicColoring::new(vec![support]));
    }
    let n = support.count_ones() as usize;
    for k in 2..=n {
        if let Some(c) = find_acyclic_k_coloring_on(d, support, k) {
            return (k, c);
        }
    }
    unreachable!("singleton classes always work")
}

/// Exact dichromatic number of the whole digraph, with witness.
pub fn dichromatic_number(d: &Digraph) -> (usize, AcyclicColoring) {
    dichromatic_number_on(d, d.full_mask())
}

pub fn chi(d: &Digraph) -> usize {
    dichromatic_number(d).0
}

pub fn chi_on(d: &Digraph, support: u64) -> usize {
    dichromatic_number_on(d, support).0
}

/// Independent oracle: minimum number of acyclic classes over all set
/// partitions of the support, enumerated as restricted growth strings.
/// Exponential; only for cross-checking small instances.
pub fn chi_exhaustive_partitions(d: &Digraph, support: u64) -> usize {
    let verts = bits::to_vec(support & d.full_mask());
    let n = verts.len();
    if n == 0 {
        return 0;
    }
    let mut best = n;
    let mut rgs = vec![0usize; n];
    loop {
        // Evaluate this partition.
        let blocks = rgs.iter().copied().max().unwrap() + 1;
        if blocks < best {
            let mut classes = vec![0u64; blocks];
            for (i, &v) in verts.iter().enumerate() {
                classes[rgs[i]] |= bits::bit(v);
            }
            if classes.iter().all(|&c| d.is_acyclic_on(c)) {
                best = blocks;
            }
        }
        // Next restricted growth string.
        let mut i = n;
        loop {
            if i == 1 {
                return best;
            }
            i -= 1;
            let prefix_max = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for r in rgs[i + 1..].iter_mut() {
                    *r = 0;
                }
                break;
            }
            rgs[i] = 0;
        }
    }
}

/// k-dicriticality: dichromatic number equals `k` and removing any single
/// arc (or vertex) drops it. Single deletions suffice by monotonicity of
/// the dichromatic number under subdigraphs; vertex deletions are checked
/// as well.
pub fn is_dicritical(d: &Digraph, k: usize) -> bool {
    if chi(d) != k {
        return false;
    }
    for (u, v) in d.arcs() {
        if chi(&d.without_arc(u, v)) >= k {
            return false;
        }
    }
    (0..d.order()).all(|v| chi(&d.delete_vertex(v)) < k)
}

/// A subdigraph of `d` (as a vertex mask plus its own arc set inside the
/// ambient labels), used for dicritical cores.
#[derive(Clone, Debug)]
pub struct CoreSubdigraph {
    /// Core as a digraph over the ambient vertex labels (vertices outside
    /// the core are isolated and excluded from `vertices`).
    pub digraph: Digraph,
    pub vertices: u64,
}

/// Greedily delete vertices, then arcs, while the dichromatic number of
/// what remains stays at least `k`. The result is a `k`-dicritical
/// subdigraph in the ambient labels (requires `chi(d) >= k`).
pub fn dicritical_core_at(d: &Digraph, k: usize) -> CoreSubdigraph {
    assert!(k >= 1);
    let mut g = d.clone();
    let mut alive = d.full_mask();
    assert!(chi_on(&g, alive) >= k, "core extraction needs chi >= k");
    // Vertex passes.
    loop {
        let mut changed = false;
        for v in bits::to_vec(alive) {
            let candidate = alive & !bits::bit(v);
            if chi_on(&g, candidate) >= k {
                alive = candidate;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    // Drop arcs leaving the kept vertex set, then arc passes.
    let mut arcs: Vec<(usize, usize)> = g
        .arcs()
        .into_iter()
        .filter(|&(u, v)| bits::contains(alive, u) && bits::contains(alive, v))
        .collect();
    g = Digraph::new(d.order(), &arcs).expect("filtered arcs");
    loop {
        let mut changed = false;
        for &(u, v) in arcs.clone().iter() {
            let candidate = g.without_arc(u, v);
            if chi_on(&candidate, alive) >= k {
                g = candidate;
                changed = true;
            }
        }
        arcs = g.arcs();
        if !changed {
            break;
        }
    }
    CoreSubdigraph { digraph: g, vertices: alive }
}

/// A dicritical subdigraph with the same dichromatic number as `d`
/// (single vertex when `d` is acyclic).
pub fn dicritical_subdigraph(d: &Digraph) -> CoreSubdigraph {
    let k = chi(d).max(1);
    if d.order() == 0 {
        return CoreSubdigraph { digraph: Digraph::empty(0), vertices: 0 };
    }
    dicritical_core_at(d, k)
}

/// The color vector of `c` at `x0`: entry `i` counts the out-neighbors of
/// `x0` (in the ambient digraph) inside class `i`.
pub fn color_vector(d: &Digraph, c: &AcyclicColoring, x0: usize) -> Vec<usize> {
    let n_out = d.out_mask(x0);
    c.classes().iter().map(|&cl| (cl & n_out).count_ones() as usize).collect()
}

/// An acyclic `k`-coloring of the vertex set `d1` whose color vector at
/// `x0` is lexicographically minimal. The vector coordinates are fixed
/// greedily: minimize entry 1, then entry 2 subject to entry 1, and so on;
/// each candidate prefix is checked by a full coloring search.
///
/// `x0` must lie outside `d1`; out-neighbors are taken in the ambient
/// digraph and intersected with `d1`.
pub fn lex_minimal_coloring(
    d: &Digraph,
    d1: u64,
    x0: usize,
    k: usize,
) -> Result<AcyclicColoring, ColoringError> {
    assert!(!bits::contains(d1, x0), "x0 must be outside the colored set");
    if find_acyclic_k_coloring_on(d, d1, k).is_none() {
        return Err(ColoringError::ChromaticExceedsK { k });
    }
    let neighbors = d.out_mask(x0) & d1;
    let total = neighbors.count_ones() as usize;
    let mut target: Vec<usize> = Vec::with_capacity(k);
    for _ in 0..k {
        let mut found = false;
        for t in 0..=total {
            target.push(t);
            if find_coloring_with_counts(d, d1, k, neighbors, &target).is_some() {
                found = true;
                break;
            }
            target.pop();
        }
        debug_assert!(found, "some count is always feasible");
        if !found {
            return Err(ColoringError::ChromaticExceedsK { k });
        }
    }
    let witness = find_coloring_with_counts(d, d1, k, neighbors, &target)
        .expect("full target vector is feasible");
    Ok(witness)
}

/// Acyclic k-coloring of `d1` with `|class_i & neighbors| = counts[i]` for
/// each constrained prefix coordinate, unconstrained beyond.
fn find_coloring_with_counts(
    d: &Digraph,
    d1: u64,
    k: usize,
    neighbors: u64,
    counts: &[usize],
) -> Option<AcyclicColoring> {
    // Color neighbor vertices first so count pruning bites early.
    let mut verts = order_by_degree(d, d1 & neighbors);
    verts.extend(order_by_degree(d, d1 & !neighbors));
    let mut classes = vec![0u64; k];
    fn rec(
        d: &Digraph,
        verts: &[usize],
        idx: usize,
        classes: &mut [u64],
        neighbors: u64,
        counts: &[usize],
    ) -> bool {
        if idx == verts.len() {
            // Exact counts on the constrained coordinates.
            return counts
                .iter()
                .enumerate()
                .all(|(i, &t)| (classes[i] & neighbors).count_ones() as usize == t);
        }
        let v = verts[idx];
        let is_neighbor = bits::contains(neighbors, v);
        for c in 0..classes.len() {
            if is_neighbor && c < counts.len() {
                let have = (classes[c] & neighbors).count_ones() as usize;
                if have + 1 > counts[c] {
                    continue;
                }
            }
            if class_stays_acyclic(d, classes[c], v) {
                classes[c] |= bits::bit(v);
                if rec(d, verts, idx + 1, classes, neighbors, counts) {
                    return true;
                }
                classes[c] &= !bits::bit(v);
            }
        }
        false
    }
    if rec(d, &verts, 0, &mut classes, neighbors, counts) {
        Some(AcyclicColoring::new(classes))
    } else {
        None
    }
}

/// Exhaustive reference for [`lex_minimal_coloring`]: enumerate every
/// acyclic k-coloring and keep the lexicographically least vector.
/// Exponential; for cross-checks only.
pub fn lex_minimal_coloring_exhaustive(
    d: &Digraph,
    d1: u64,
    x0: usize,
    k: usize,
) -> Result<AcyclicColoring, ColoringError> {
    let verts = bits::to_vec(d1 & d.full_mask());
    let neighbors = d.out_mask(x0) & d1;
    let mut best: Option<(Vec<usize>, AcyclicColoring)> = None;
    let mut assignment = vec![0usize; verts.len()];
    loop {
        let mut classes = vec![0u64; k];
        for (i, &v) in verts.iter().enumerate() {
            classes[assignment[i]] |= bits::bit(v);
        }
        if classes.iter().all(|&c| d.is_acyclic_on(c)) {
            let c = AcyclicColoring::new(classes);
            let vec: Vec<usize> =
                c.classes().iter().map(|&cl| (cl & neighbors).count_ones() as usize).collect();
            if best.as_ref().map_or(true, |(bv, _)| vec < *bv) {
                best = Some((vec, c));
            }
        }
        // Next assignment in base k.
        let mut i = 0;
        loop {
            if i == verts.len() {
                return best.map(|(_, c)| c).ok_or(ColoringError::ChromaticExceedsK { k });
            }
            assignment[i] += 1;
            if assignment[i] < k {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;

    #[test]
    fn acyclic_coloring_checks() {
        let digon = Digraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        let one_class = AcyclicColoring::new(vec![0b11]);
        assert!(!is_acyclic_coloring(&digon, &one_class));
        let split = AcyclicColoring::new(vec![0b01, 0b10]);
        assert!(is_acyclic_coloring(&digon, &split));

        let dag = Digraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_acyclic_coloring(&dag, &AcyclicColoring::new(vec![0b111])));

        let k4 = Digraph::bicomplete(4);
        let singletons = AcyclicColoring::new(vec![1, 2, 4, 8]);
        assert!(is_acyclic_coloring(&k4, &singletons));
        assert!(matches!(
            is_acyclic_coloring_on(&k4, &AcyclicColoring::new(vec![0b0111]), k4.full_mask()),
            Err(ColoringError::PartialAssignment)
        ));
    }

    #[test]
    fn chi_of_bicomplete_is_order() {
        for n in 1..=5 {
            let (k, witness) = dichromatic_number(&Digraph::bicomplete(n));
            assert_eq!(k, n);
            assert!(is_acyclic_coloring(&Digraph::bicomplete(n), &witness));
        }
    }

    #[test]
    fn chi_of_acyclic_is_one() {
        let dag = Digraph::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(chi(&dag), 1);
    }

    #[test]
    fn chi_of_directed_cycle_matches_exhaustive() {
        let c5 = Digraph::directed_cycle(5);
        assert_eq!(chi(&c5), 2);
        assert_eq!(chi_exhaustive_partitions(&c5, c5.full_mask()), 2);
    }

    #[test]
    fn dicritical_examples() {
        let digon = Digraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(is_dicritical(&digon, 2));
        assert!(is_dicritical(&Digraph::bicomplete(4), 4));
        let padded = Digraph::bicomplete(4).disjoint_union(&Digraph::empty(1));
        assert_eq!(chi(&padded), 4);
        assert!(!is_dicritical(&padded, 4));
    }

    #[test]
    fn dicritical_core_extraction() {
        // bicomplete K4 with a pendant vertex attached by one arc.
        let mut arcs = Digraph::bicomplete(4).arcs();
        arcs.push((3, 4));
        let d = Digraph::new(5, &arcs).unwrap();
        let core = dicritical_subdigraph(&d);
        assert_eq!(core.vertices.count_ones(), 4);
        let sub = core.digraph.induced(core.vertices).unwrap().digraph;
        assert_eq!(sub, Digraph::bicomplete(4));

        let digon = Digraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        let core = dicritical_subdigraph(&digon);
        assert_eq!(core.digraph, digon);

        let dag = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let core = dicritical_subdigraph(&dag);
        assert_eq!(core.vertices.count_ones(), 1);
    }

    #[test]
    fn color_vector_counts() {
        let d = Digraph::new(4, &[(3, 0), (3, 1), (3, 2), (0, 1)]).unwrap();
        // x0 = 3 with out-neighbors {0,1,2}; classes {0,1} and {2}.
        let c = AcyclicColoring::new(vec![0b011, 0b100]);
        assert_eq!(color_vector(&d, &c, 3), vec![2, 1]);
        // No out-neighbors: zero vector.
        let d2 = Digraph::new(2, &[(0, 1)]).unwrap();
        let c2 = AcyclicColoring::new(vec![0b01, 0b10]);
        assert_eq!(color_vector(&d2, &c2, 1), vec![0, 0]);
    }

    #[test]
    fn lex_minimal_forced_single() {
        // D1 = one out-neighbor of x0, k=1: vector (1) forced.
        let d = Digraph::new(2, &[(0, 1)]).unwrap();
        let c = lex_minimal_coloring(&d, 0b10, 0, 1).unwrap();
        assert_eq!(color_vector(&d, &c, 0), vec![1]);
    }

    #[test]
    fn lex_minimal_pushes_neighbors_out_of_low_classes() {
        // D1 = two isolated vertices, both out-neighbors of x0, k=2.
        let d = Digraph::new(3, &[(0, 1), (0, 2)]).unwrap();
        let exhaustive = lex_minimal_coloring_exhaustive(&d, 0b110, 0, 2).unwrap();
        assert_eq!(color_vector(&d, &exhaustive, 0), vec![0, 2]);
        let c = lex_minimal_coloring(&d, 0b110, 0, 2).unwrap();
        assert_eq!(color_vector(&d, &c, 0), vec![0, 2]);
    }

    #[test]
    fn lex_minimal_on_digon() {
        // D1 = digon {1,2}, only vertex 1 is an out-neighbor of x0=0, k=2.
        let d = Digraph::new(3, &[(0, 1), (1, 2), (2, 1)]).unwrap();
        let exhaustive = lex_minimal_coloring_exhaustive(&d, 0b110, 0, 2).unwrap();
        assert_eq!(color_vector(&d, &exhaustive, 0), vec![0, 1]);
        let c = lex_minimal_coloring(&d, 0b110, 0, 2).unwrap();
        assert_eq!(color_vector(&d, &c, 0), vec![0, 1]);
        // Vertex 1 sits in class 2.
        assert_eq!(c.color_of(1), Some(1));
    }

    #[test]
    fn lex_minimal_rejects_small_k() {
        let digon = Digraph::new(3, &[(1, 2), (2, 1), (0, 1)]).unwrap();
        assert!(matches!(
            lex_minimal_coloring(&digon, 0b110, 0, 1),
            Err(ColoringError::ChromaticExceedsK { k: 1 })
        ));
    }
}
