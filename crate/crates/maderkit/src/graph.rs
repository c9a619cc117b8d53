//! Simple undirected graphs: underlying graphs of digraphs, block-cut
//! decomposition and cycle enumeration. Only what the family machinery
//! needs; same `u64`-mask representation as [`crate::digraph`].

use crate::bits;
use crate::digraph::Digraph;

/// Simple undirected graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

impl Graph {
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Graph {
        let mut adj = vec![0u64; order];
        for &(u, v) in edges {
            assert!(u < order && v < order && u != v, "bad edge ({u},{v})");
            adj[u] |= bits::bit(v);
            adj[v] |= bits::bit(u);
        }
        Graph { order, adj }
    }

    /// Underlying graph: edge `uv` present iff at least one of the two
    /// arcs is.
    pub fn underlying(d: &Digraph) -> Graph {
        let mut edges = Vec::new();
        for (u, v) in d.arcs() {
            if u < v {
                edges.push((u, v));
            } else if !d.has_arc(v, u) {
                edges.push((v, u));
            }
        }
        Graph::new(d.order(), &edges)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn full_mask(&self) -> u64 {
        bits::full_mask(self.order)
    }

    pub fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && bits::contains(self.adj[u], v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut es = Vec::new();
        for u in 0..self.order {
            for v in bits::iter(self.adj[u]) {
                if u < v {
                    es.push((u, v));
                }
            }
        }
        es
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Vertices reachable from `sources` inside `allowed` (undirected).
    pub fn reachable_within(&self, sources: u64, allowed: u64) -> u64 {
        let mut seen = sources & allowed;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits::iter(frontier) {
                next |= self.adj[u] & allowed & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected component masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.full_mask();
        let mut comps = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let comp = self.reachable_within(bits::bit(v), self.full_mask());
            comps.push(comp);
            left &= !comp;
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.components().len() == 1
    }

    /// A graph is a forest iff every component has |E| = |V| - 1.
    pub fn is_forest(&self) -> bool {
        let comps = self.components().len();
        self.edge_count() + comps == self.order
    }

    /// `true` iff the subgraph induced by `mask` contains no cycle.
    pub fn is_forest_on(&self, mask: u64) -> bool {
        let verts = (mask & self.full_mask()).count_ones() as usize;
        let mut edges = 0;
        for u in bits::iter(mask & self.full_mask()) {
            edges += (self.adj[u] & mask).count_ones() as usize;
        }
        edges /= 2;
        let mut comps = 0;
        let mut left = mask & self.full_mask();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let comp = self.reachable_within(bits::bit(v), mask);
            comps += 1;
            left &= !comp;
        }
        edges + comps == verts || verts == 0
    }
}

/// One block (2-connected component or bridge edge) of a graph.
#[derive(Clone, Debug)]
pub struct Block {
    /// Vertices of the block.
    pub vertices: u64,
    /// True when the block contains a cycle (i.e. it is not a bridge).
    pub has_cycle: bool,
}

/// Block-cut decomposition: blocks plus the set of cut vertices.
#[derive(Clone, Debug)]
pub struct BlockCut {
    pub blocks: Vec<Block>,
    pub cut_vertices: u64,
}

/// Standard DFS lowpoint block decomposition, iterative.
pub fn block_cut(g: &Graph) -> BlockCut {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();
    let mut cut = 0u64;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // Iterative DFS.
        let mut stack: Vec<(usize, u64)> = vec![(root, g.adj_mask(root))];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0usize;
        while let Some(&mut (v, ref mut rest)) = stack.last_mut() {
            if *rest != 0 {
                let w = rest.trailing_zeros() as usize;
                *rest &= *rest - 1;
                if disc[w] == usize::MAX {
                    parent[w] = v;
                    if v == root {
                        root_children += 1;
                    }
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, g.adj_mask(w)));
                } else if w != parent[v] && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // Tree edge (p,v) closes a block: pop up to and
                        // including it.
                        let mut verts = 0u64;
                        let mut edge_count = 0usize;
                        loop {
                            let (a, b) = edge_stack.pop().expect("block edge stack");
                            verts |= bits::bit(a) | bits::bit(b);
                            edge_count += 1;
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        let vcount = verts.count_ones() as usize;
                        blocks.push(Block { vertices: verts, has_cycle: edge_count >= vcount });
                        if p != root {
                            cut |= bits::bit(p);
                        }
                    }
                }
            }
        }
        // A root with 2+ DFS children is a cut vertex.
        if root_children >= 2 {
            cut |= bits::bit(root);
        }
    }
    BlockCut { blocks, cut_vertices: cut }
}

/// Enumerate the simple cycles of an undirected graph as vertex sequences,
/// each cycle once (rooted at its smallest vertex, second vertex smaller
/// than the last to fix the direction). Deterministic order; intended for
/// small graphs only.
pub fn simple_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut cycles = Vec::new();
    let n = g.order();
    for root in 0..n {
        // Paths root, v1, ..., vk with all interior > root.
        let mut path = vec![root];
        let mut used = bits::bit(root);
        dfs_cycles(g, root, &mut path, &mut used, &mut cycles);
    }
    cycles
}

fn dfs_cycles(g: &Graph, root: usize, path: &mut Vec<usize>, used: &mut u64, out: &mut Vec<Vec<usize>>) {
    let v = *path.last().unwrap();
    for w in bits::iter(g.adj_mask(v)) {
        if w == root && path.len() >= 3 {
            // Emit each cycle once: fix orientation by path[1] < path.last().
            if path[1] < *path.last().unwrap() {
                out.push(path.clone());
            }
            continue;
        }
        if w <= root || bits::contains(*used, w) {
            continue;
        }
        path.push(w);
        *used |= bits::bit(w);
        dfs_cycles(g, root, path, used, out);
        *used &= !bits::bit(w);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn underlying_graph_shapes() {
        let digon = Digraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(Graph::underlying(&digon).edges(), vec![(0, 1)]);
        let tri = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(Graph::underlying(&tri).edge_count(), 3);
        let arcless = Digraph::empty(3);
        assert_eq!(Graph::underlying(&arcless).edge_count(), 0);
    }

    #[test]
    fn forest_detection() {
        let tree = Graph::new(4, &[(0, 1), (1, 2), (1, 3)]);
        assert!(tree.is_forest());
        let cycle = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(!cycle.is_forest());
    }

    #[test]
    fn blocks_of_two_triangles() {
        // Triangles {0,1,2} and {2,3,4} sharing vertex 2.
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let bc = block_cut(&g);
        assert_eq!(bc.blocks.len(), 2);
        assert!(bc.blocks.iter().all(|b| b.has_cycle));
        assert_eq!(bc.cut_vertices, bits::bit(2));
    }

    #[test]
    fn blocks_of_path() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]);
        let bc = block_cut(&g);
        assert_eq!(bc.blocks.len(), 2);
        assert!(bc.blocks.iter().all(|b| !b.has_cycle));
        assert_eq!(bc.cut_vertices, bits::bit(1));
    }

    #[test]
    fn cycle_enumeration_counts() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        // K4 has 4 triangles and 3 four-cycles.
        assert_eq!(simple_cycles(&k4).len(), 7);
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(simple_cycles(&c4).len(), 1);
    }
}
