//! Finite simple undirected graphs on vertices `0..n-1`, adjacency as
//! `u64` bitsets, one word per vertex. The graph6 short form caps usable
//! sizes at 62 vertices; the searches stay far below that.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest vertex count a single-word bitset row can carry.
pub const MAX_VERTICES: usize = 64;

/// Iterates over the set bits of a mask, ascending.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Undirected simple graph. Adjacency is symmetric and irreflexive by
/// construction: the only mutator is `add_edge`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics if `n > MAX_VERTICES`.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graphs are limited to {MAX_VERTICES} vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Inserts the edge `{u, v}`. Self-loops are rejected by assertion;
    /// re-adding an existing edge is a no-op (no multi-edges).
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u}, {v})");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> core::ops::Range<usize> {
        0..self.n
    }

    /// All edges as ordered pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u << u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Vertices outside `s` with at least one neighbor inside `s`.
    #[inline]
    pub fn neighbors_of_set(&self, s: u64) -> u64 {
        let mut nb = 0u64;
        for v in bits(s) {
            nb |= self.adj[v];
        }
        nb & !s
    }

    /// Degree of a vertex subset: the number of outside vertices adjacent
    /// to it.
    pub fn subset_degree(&self, s: u64) -> usize {
        debug_assert_eq!(s & !self.full_mask(), 0, "subset outside vertex range");
        self.neighbors_of_set(s).count_ones() as usize
    }

    /// Whether `g[s]` is connected. The empty set does not count as
    /// connected.
    pub fn is_connected_subset(&self, s: u64) -> bool {
        if s == 0 {
            return false;
        }
        let start = s.trailing_zeros() as usize;
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v] & s & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == s
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_subset(self.full_mask())
    }

    /// Maximal connected vertex sets, ordered by smallest contained vertex.
    pub fn connected_components(&self) -> Vec<u64> {
        self.induced_components(self.full_mask())
    }

    /// Connected components of the subgraph induced on `within`, as masks
    /// in the original labeling, ordered by smallest contained vertex.
    pub fn induced_components(&self, within: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut left = within;
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = bit(start);
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in bits(frontier) {
                    next |= self.adj[v] & within & !comp;
                }
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Subgraph induced by `s`, vertices relabeled ascending.
    pub fn induced(&self, s: u64) -> Graph {
        let verts: Vec<usize> = bits(s).collect();
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Complement: exactly the non-edges become edges.
    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let mut g = Graph::new(self.n);
        for v in 0..self.n {
            g.adj[v] = full & !self.adj[v] & !bit(v);
        }
        g
    }

    /// Contracts the edge `{u, v}`: the merged vertex takes the smaller of
    /// the two freed labels and is adjacent to `N(u) ∪ N(v) \ {u, v}`;
    /// labels above the larger one shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        let lo = u.min(v);
        let hi = u.max(v);
        let map = |x: usize| if x < hi { x } else { x - 1 };
        let mut g = Graph::new(self.n - 1);
        for x in 0..self.n {
            if x == lo || x == hi {
                continue;
            }
            for y in bits(self.adj[x]) {
                if y > x && y != lo && y != hi {
                    g.add_edge(map(x), map(y));
                }
            }
        }
        let merged_nb = (self.adj[lo] | self.adj[hi]) & !bit(lo) & !bit(hi);
        for y in bits(merged_nb) {
            g.add_edge(lo, map(y));
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        g.adj[..self.n].copy_from_slice(&self.adj);
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        g
    }

    pub fn has_dominating_vertex(&self) -> bool {
        let full = self.full_mask();
        (0..self.n).any(|v| self.adj[v] | bit(v) == full)
    }

    /// Size of a largest independent set, by branch and bound.
    pub fn independence_number(&self) -> usize {
        fn rec(g: &Graph, cand: u64, size: usize, best: &mut usize) {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            let v = cand.trailing_zeros() as usize;
            rec(g, cand & !bit(v) & !g.adj[v], size + 1, best);
            rec(g, cand & !bit(v), size, best);
        }
        let mut best = 0;
        rec(self, self.full_mask(), 0, &mut best);
        best
    }

    /// Whether some 4-subset induces a path on four vertices.
    ///
    /// A 4-vertex graph is P_4 exactly when it has 3 edges, maximum degree
    /// 2 and minimum degree 1.
    pub fn has_induced_p4(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let s = bit(a) | bit(b) | bit(c) | bit(d);
                        let degs = [a, b, c, d].map(|v| (self.adj[v] & s).count_ones());
                        let m: u32 = degs.iter().sum::<u32>() / 2;
                        if m == 3 && degs.iter().all(|&d| d == 1 || d == 2) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    // Named builders used all over the test corpora.

    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// Star K_{1,r}: vertex 0 is the center.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// Complete bipartite K_{p,q}: vertices `0..p` on one side.
    pub fn complete_bipartite(p: usize, q: usize) -> Graph {
        let mut g = Graph::new(p + q);
        for u in 0..p {
            for v in p..p + q {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// D_r: the complement of the disjoint union of two isolated vertices
    /// and K_r. Vertices 0 and 1 are the adjacent dominating pair; D_2 is
    /// the diamond.
    pub fn d_r(r: usize) -> Graph {
        Graph::new(2).disjoint_union(&Graph::complete(r)).complement()
    }

    /// The diamond, K_4 minus one edge.
    pub fn diamond() -> Graph {
        Graph::d_r(2)
    }

    /// The gem: P_4 (vertices 0..4) plus a dominating vertex 4.
    pub fn gem() -> Graph {
        let mut g = Graph::path(4).disjoint_union(&Graph::new(1));
        for v in 0..4 {
            g.add_edge(4, v);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A graph with a distinguished root vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Self {
        assert!(root < graph.n(), "root {} out of range", root);
        RootedGraph { graph, root }
    }

    pub fn single_vertex() -> Self {
        RootedGraph::new(Graph::new(1), 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    NotAnEdge { u: usize, v: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::NotAnEdge { u, v } => write!(f, "{{{u}, {v}}} is not an edge"),
        }
    }
}
