//! Graph isomorphism via canonical forms: backtracking individualization
//! on top of degree-partition refinement. Sized for the small graphs this
//! crate works with (dedup corpora up to ~14 vertices), not for
//! nauty-grade workloads.

use crate::graph::{bits, Graph, RootedGraph};
use alloc::vec;
use alloc::vec::Vec;

/// Upper-triangle adjacency bits under the canonical labeling, plus the
/// vertex count. Two graphs are isomorphic iff their keys are equal
/// (colored variants: iff additionally built with the same color scheme).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey {
    n: u8,
    bits: [u64; 4],
}

/// Largest `n` a canonical key can hold: C(23, 2) = 253 <= 256 bits.
pub const MAX_CANON_VERTICES: usize = 23;

impl CanonKey {
    pub fn n(&self) -> usize {
        self.n as usize
    }
}

fn triangle_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    // row-major over the strict upper triangle
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Canonical key of an uncolored graph.
pub fn canon_key(g: &Graph) -> CanonKey {
    canon_key_colored(g, &vec![0; g.n()])
}

/// Canonical key with an initial vertex coloring. Cells are ordered by
/// ascending color, so the canonical position of each color class is
/// fixed by the color multiset; equal keys certify a color-preserving
/// isomorphism only between graphs with equal color multisets (pair the
/// key with the sorted colors when that is not known).
pub fn canon_key_colored(g: &Graph, colors: &[u32]) -> CanonKey {
    let n = g.n();
    assert_eq!(colors.len(), n);
    assert!(n <= MAX_CANON_VERTICES, "canonical forms support up to {MAX_CANON_VERTICES} vertices");
    if n <= 1 {
        return CanonKey { n: n as u8, bits: [0; 4] };
    }
    let mut sorted_colors: Vec<u32> = colors.to_vec();
    sorted_colors.sort_unstable();
    sorted_colors.dedup();
    let mut cells: Vec<Vec<usize>> = sorted_colors
        .iter()
        .map(|&c| (0..n).filter(|&v| colors[v] == c).collect())
        .collect();
    refine(g, &mut cells);
    let mut best: Option<[u64; 4]> = None;
    search(g, &mut cells, &mut best);
    CanonKey { n: n as u8, bits: best.expect("at least one labeling explored") }
}

/// Splits cells by per-cell neighbor counts until the partition is
/// equitable. Splitting preserves cell order; new sibling cells are
/// ordered by their count signature.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v))).collect();
        let mut split_at = None;
        'scan: for ci in 0..cells.len() {
            if cells[ci].len() <= 1 {
                continue;
            }
            let sig = |v: usize| -> Vec<u32> {
                masks.iter().map(|&m| (g.neighbors(v) & m).count_ones()).collect()
            };
            let first = sig(cells[ci][0]);
            for &v in &cells[ci][1..] {
                if sig(v) != first {
                    split_at = Some(ci);
                    break 'scan;
                }
            }
        }
        let Some(ci) = split_at else { return };
        let members = core::mem::take(&mut cells[ci]);
        let mut groups: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
        for v in members {
            let s: Vec<u32> = masks.iter().map(|&m| (g.neighbors(v) & m).count_ones()).collect();
            match groups.iter_mut().find(|(gs, _)| *gs == s) {
                Some((_, vs)) => vs.push(v),
                None => groups.push((s, vec![v])),
            }
        }
        groups.sort_by(|a, b| a.0.cmp(&b.0));
        cells.splice(ci..=ci, groups.into_iter().map(|(_, vs)| vs));
    }
}

/// After refinement the partition is equitable; if additionally every
/// cell-to-cell relation is complete or empty, all discrete completions
/// produce the same adjacency bits, so no branching is needed.
fn is_homogeneous(g: &Graph, cells: &[Vec<usize>]) -> bool {
    let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v))).collect();
    for (ci, cell) in cells.iter().enumerate() {
        let rep = cell[0];
        for (cj, &mask) in masks.iter().enumerate() {
            let cnt = (g.neighbors(rep) & mask).count_ones() as usize;
            let limit = if ci == cj { cells[cj].len() - 1 } else { cells[cj].len() };
            if cnt != 0 && cnt != limit {
                return false;
            }
        }
    }
    true
}

fn search(g: &Graph, cells: &mut Vec<Vec<usize>>, best: &mut Option<[u64; 4]>) {
    if cells.iter().all(|c| c.len() == 1) || is_homogeneous(g, cells) {
        let order: Vec<usize> = cells.iter().flatten().copied().collect();
        let key = bits_under(g, &order);
        if best.is_none() || key < best.unwrap() {
            *best = Some(key);
        }
        return;
    }
    let ci = cells.iter().position(|c| c.len() > 1).expect("non-discrete partition");
    let members = cells[ci].clone();
    for &v in &members {
        let rest: Vec<usize> = members.iter().copied().filter(|&w| w != v).collect();
        let mut child: Vec<Vec<usize>> = cells.clone();
        child.splice(ci..=ci, [vec![v], rest]);
        refine(g, &mut child);
        search(g, &mut child, best);
    }
}

fn bits_under(g: &Graph, order: &[usize]) -> [u64; 4] {
    let n = order.len();
    let mut out = [0u64; 4];
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                let k = triangle_index(i, j, n);
                out[k / 64] |= 1 << (k % 64);
            }
        }
    }
    out
}

/// True iff an edge-preserving bijection between the vertex sets exists.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    canon_key(g) == canon_key(h)
}

/// Canonical key of a rooted graph: the root gets its own color class, so
/// equal keys mean isomorphic by a root-preserving map.
pub fn rooted_canon_key(g: &RootedGraph) -> CanonKey {
    let mut colors = vec![1u32; g.graph.n()];
    colors[g.root] = 0;
    canon_key_colored(&g.graph, &colors)
}

pub fn is_rooted_isomorphic(g: &RootedGraph, h: &RootedGraph) -> bool {
    g.graph.n() == h.graph.n()
        && g.graph.edge_count() == h.graph.edge_count()
        && rooted_canon_key(g) == rooted_canon_key(h)
}

/// Relabels `g` by a permutation: vertex `v` of the output corresponds to
/// `perm[v]` of the input. Test helper for invariance checks.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let n = g.n();
    assert_eq!(perm.len(), n);
    let mut out = Graph::new(n);
    for i in 0..n {
        for j in bits(g.neighbors(perm[i])) {
            let jj = perm.iter().position(|&p| p == j).unwrap();
            if jj > i {
                out.add_edge(i, jj);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn relabelings_of_p4_are_isomorphic() {
        let p4 = Graph::path(4);
        let other = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]);
        assert!(is_isomorphic(&p4, &other));
    }

    #[test]
    fn star_and_path_differ() {
        assert!(!is_isomorphic(&Graph::star(3), &Graph::path(4)));
    }

    #[test]
    fn c7_is_not_self_complementary() {
        let c7 = Graph::cycle(7);
        assert!(!is_isomorphic(&c7, &c7.complement()));
    }

    #[test]
    fn symmetric_families_canonicalize() {
        // These all hit the homogeneity shortcut: no factorial blowup.
        for g in [
            Graph::complete(10),
            Graph::edgeless(10),
            Graph::complete_bipartite(2, 8),
            Graph::cycle(9).complement(),
        ] {
            let k = canon_key(&g);
            assert_eq!(k, canon_key(&g));
        }
    }

    #[test]
    fn canonical_key_is_relabeling_invariant() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4)]);
        let perms = [
            [5, 4, 3, 2, 1, 0],
            [2, 0, 1, 4, 3, 5],
            [3, 5, 0, 2, 4, 1],
        ];
        for p in perms {
            assert_eq!(canon_key(&g), canon_key(&relabel(&g, &p)));
        }
    }

    #[test]
    fn rooted_iso_distinguishes_roots() {
        // P_3 rooted at an endpoint vs rooted at the middle.
        let end = RootedGraph::new(Graph::path(3), 0);
        let other_end = RootedGraph::new(Graph::path(3), 2);
        let mid = RootedGraph::new(Graph::path(3), 1);
        assert!(is_rooted_isomorphic(&end, &other_end));
        assert!(!is_rooted_isomorphic(&end, &mid));
    }

    #[test]
    fn distinct_small_graphs_get_distinct_keys() {
        // All 4-vertex graphs with 3 edges: P_4, K_{1,3}, K_3 + K_1.
        let p4 = Graph::path(4);
        let star = Graph::star(3);
        let tri = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0)]);
        assert_ne!(canon_key(&p4), canon_key(&star));
        assert_ne!(canon_key(&p4), canon_key(&tri));
        assert_ne!(canon_key(&star), canon_key(&tri));
    }
}
