//! Cutvertices and blocks (maximal subgraphs without a cutvertex) by the
//! classic lowpoint DFS, with the per-block classification the
//! clique-cactus predicate consumes.

use crate::graph::{bit, bits, Graph};
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// The block induces a complete graph on >= 3 vertices (triangles are
    /// classified here, never as Cycle).
    Clique,
    /// The block induces a chordless cycle on >= 4 vertices.
    Cycle,
    /// A single-edge block (a 2-clique for all downstream purposes).
    Edge,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: u64,
    pub kind: BlockKind,
}

impl Block {
    pub fn vertex_list(&self) -> Vec<usize> {
        bits(self.vertices).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks sorted by smallest contained vertex, then by vertex set.
    /// Isolated vertices appear as singleton blocks of kind Clique.
    pub blocks: Vec<Block>,
    pub cutvertices: u64,
}

impl BlockDecomposition {
    pub fn is_cutvertex(&self, v: usize) -> bool {
        self.cutvertices & bit(v) != 0
    }

    /// Indices of the blocks whose vertex set contains `v`.
    pub fn blocks_containing(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&i| self.blocks[i].vertices & bit(v) != 0).collect()
    }
}

/// Classification is per the subgraph induced on the block's vertex set.
fn classify(g: &Graph, mask: u64) -> BlockKind {
    let k = mask.count_ones() as usize;
    if k == 1 {
        return BlockKind::Clique;
    }
    if k == 2 {
        return BlockKind::Edge;
    }
    let mut m = 0usize;
    let mut two_regular = true;
    for v in bits(mask) {
        let d = (g.neighbors(v) & mask).count_ones() as usize;
        m += d;
        if d != 2 {
            two_regular = false;
        }
    }
    m /= 2;
    if m == k * (k - 1) / 2 {
        BlockKind::Clique
    } else if two_regular && m == k {
        BlockKind::Cycle
    } else {
        BlockKind::Other
    }
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    const UNSET: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSET; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut block_masks: Vec<u64> = Vec::new();
    let mut cutvertices = 0u64;

    // Recursion depth is bounded by the vertex cap (64), so plain
    // recursion is fine.
    fn dfs(
        g: &Graph,
        u: usize,
        disc: &mut [usize],
        low: &mut [usize],
        parent: &mut [usize],
        timer: &mut usize,
        edge_stack: &mut Vec<(usize, usize)>,
        blocks: &mut Vec<u64>,
        cutvertices: &mut u64,
    ) {
        const UNSET: usize = usize::MAX;
        disc[u] = *timer;
        low[u] = *timer;
        *timer += 1;
        let mut children = 0usize;
        for v in bits(g.neighbors(u)) {
            if disc[v] == UNSET {
                children += 1;
                parent[v] = u;
                edge_stack.push((u, v));
                dfs(g, v, disc, low, parent, timer, edge_stack, blocks, cutvertices);
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    if parent[u] != UNSET || children > 1 {
                        *cutvertices |= bit(u);
                    }
                    let mut mask = 0u64;
                    while let Some(&(a, b)) = edge_stack.last() {
                        edge_stack.pop();
                        mask |= bit(a) | bit(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    blocks.push(mask);
                }
            } else if v != parent[u] && disc[v] < disc[u] {
                edge_stack.push((u, v));
                low[u] = low[u].min(disc[v]);
            }
        }
    }

    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        dfs(
            g,
            root,
            &mut disc,
            &mut low,
            &mut parent,
            &mut timer,
            &mut edge_stack,
            &mut block_masks,
            &mut cutvertices,
        );
        if g.degree(root) == 0 {
            block_masks.push(bit(root));
        }
    }
    debug_assert!(edge_stack.is_empty());

    block_masks.sort_unstable_by_key(|&m| (m.trailing_zeros(), m));
    let blocks = block_masks
        .into_iter()
        .map(|mask| Block { vertices: mask, kind: classify(g, mask) })
        .collect();
    BlockDecomposition { blocks, cutvertices }
}

/// 2-connected: at least 3 vertices, connected, and no cutvertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && block_decomposition(g).cutvertices == 0
}
