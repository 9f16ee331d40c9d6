//! One representative per isomorphism class of connected simple graphs on
//! up to 8 vertices. Labeled brute force with canonical-form dedup up to
//! n = 7; n = 8 is reached by attaching a new vertex to every 7-vertex
//! representative (every connected graph has a non-cutvertex, so this
//! covers everything).

use crate::graph::Graph;
use crate::iso::{canon_key, CanonKey};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

pub const MAX_ENUMERATION_VERTICES: usize = 8;

/// Connected graphs on `n` vertices, one per isomorphism class,
/// deterministically ordered by (edge count, canonical form).
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n == 0 || n > MAX_ENUMERATION_VERTICES {
        return Err(EnumerateError::OutOfRange { n });
    }
    let reps = if n <= 7 { brute_force(n) } else { augment(&brute_force(7)) };
    let mut out: Vec<(usize, CanonKey, Graph)> =
        reps.into_iter().map(|(k, g)| (g.edge_count(), k, g)).collect();
    out.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    pairs
}

fn brute_force(n: usize) -> BTreeMap<CanonKey, Graph> {
    let pairs = pair_list(n);
    let mut reps: BTreeMap<CanonKey, Graph> = BTreeMap::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut g = Graph::new(n);
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            if mask >> idx & 1 != 0 {
                g.add_edge(i, j);
            }
        }
        if !g.is_connected() {
            continue;
        }
        reps.entry(canon_key(&g)).or_insert(g);
    }
    reps
}

/// Every connected (k+1)-vertex graph arises from a connected k-vertex
/// graph by adding one vertex with a nonempty neighborhood: removing a
/// non-cutvertex (which always exists) is the inverse.
fn augment(base: &BTreeMap<CanonKey, Graph>) -> BTreeMap<CanonKey, Graph> {
    let mut reps: BTreeMap<CanonKey, Graph> = BTreeMap::new();
    for g in base.values() {
        let n = g.n();
        for nb in 1u64..(1u64 << n) {
            let mut bigger = Graph::new(n + 1);
            for (u, v) in g.edges() {
                bigger.add_edge(u, v);
            }
            for v in crate::graph::bits(nb) {
                bigger.add_edge(n, v);
            }
            reps.entry(canon_key(&bigger)).or_insert(bigger);
        }
    }
    reps
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    OutOfRange { n: usize },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::OutOfRange { n } => {
                write!(f, "enumeration supports 1..={MAX_ENUMERATION_VERTICES} vertices, got {n}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    #[test]
    fn counts_match_the_known_sequence_up_to_six() {
        // 1, 1, 2, 6, 21, 112 connected graphs on 1..=6 vertices.
        for (n, count) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
            assert_eq!(enumerate_connected(n).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn representatives_are_connected_and_pairwise_nonisomorphic() {
        let gs = enumerate_connected(5).unwrap();
        for g in &gs {
            assert!(g.is_connected());
            assert_eq!(g.n(), 5);
        }
        for i in 0..gs.len() {
            for j in i + 1..gs.len() {
                assert!(!is_isomorphic(&gs[i], &gs[j]));
            }
        }
    }

    #[test]
    fn out_of_range_is_rejected() {
        assert!(matches!(enumerate_connected(0), Err(EnumerateError::OutOfRange { n: 0 })));
        assert!(matches!(enumerate_connected(9), Err(EnumerateError::OutOfRange { n: 9 })));
    }

    #[test]
    fn deterministic_order() {
        let a = enumerate_connected(5).unwrap();
        let b = enumerate_connected(5).unwrap();
        assert_eq!(a, b);
    }
}
