//! Contraction models: a map from pattern vertices to disjoint connected
//! host-vertex sets whose part adjacency mirrors the pattern exactly.

use crate::graph::{bits, Graph};
use alloc::vec::Vec;
use core::fmt;

/// φ: each pattern vertex owns a set of host vertices, stored as a bitset
/// indexed by pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionModel {
    parts: Vec<u64>,
}

impl ContractionModel {
    pub fn new(parts: Vec<u64>) -> Self {
        ContractionModel { parts }
    }

    /// The identity model of a graph in itself: all parts singletons.
    pub fn identity(n: usize) -> Self {
        ContractionModel { parts: (0..n).map(|v| 1u64 << v).collect() }
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    #[inline]
    pub fn part(&self, h_vertex: usize) -> u64 {
        self.parts[h_vertex]
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Parts as sorted vertex lists, indexed by pattern vertex.
    pub fn part_lists(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(|&m| bits(m).collect()).collect()
    }
}

/// Which model condition fails, and where.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelViolation {
    /// Parts must be nonempty (they partition the host vertex set).
    EmptyPart { h_vertex: usize },
    /// Condition (i): the part does not induce a connected subgraph.
    DisconnectedPart { h_vertex: usize },
    /// Condition (ii): the parts do not partition the host vertices.
    /// `overlapping` are host vertices in more than one part, `uncovered`
    /// those in none.
    NotAPartition { overlapping: u64, uncovered: u64 },
    /// Condition (iii): adjacency of the parts of `u` and `v` disagrees
    /// with the pattern.
    AdjacencyMismatch { u: usize, v: usize, adjacent_in_h: bool },
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelViolation::EmptyPart { h_vertex } => write!(f, "part of vertex {h_vertex} is empty"),
            ModelViolation::DisconnectedPart { h_vertex } => {
                write!(f, "part of vertex {h_vertex} is not connected")
            }
            ModelViolation::NotAPartition { overlapping, uncovered } => write!(
                f,
                "parts are not a partition (overlapping {overlapping:#b}, uncovered {uncovered:#b})"
            ),
            ModelViolation::AdjacencyMismatch { u, v, adjacent_in_h } => write!(
                f,
                "parts of {u} and {v} are {} but the vertices are {} in the pattern",
                if *adjacent_in_h { "non-adjacent" } else { "adjacent" },
                if *adjacent_in_h { "adjacent" } else { "non-adjacent" },
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelError {
    /// The model's key set is not exactly the pattern's vertex set.
    KeyMismatch { expected: usize, actual: usize },
    /// Some part uses host vertices that do not exist.
    VertexOutOfRange { h_vertex: usize },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::KeyMismatch { expected, actual } => {
                write!(f, "model has {actual} parts but the pattern has {expected} vertices")
            }
            ModelError::VertexOutOfRange { h_vertex } => {
                write!(f, "part of vertex {h_vertex} mentions host vertices out of range")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelCheck {
    Valid,
    Invalid(ModelViolation),
}

impl ModelCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, ModelCheck::Valid)
    }
}

/// Checks conditions (i)-(iii) of a contraction model of `h` in `g`.
pub fn verify_model(h: &Graph, g: &Graph, m: &ContractionModel) -> Result<ModelCheck, ModelError> {
    if m.num_parts() != h.n() {
        return Err(ModelError::KeyMismatch { expected: h.n(), actual: m.num_parts() });
    }
    let full = g.full_mask();
    for (u, &part) in m.parts().iter().enumerate() {
        if part & !full != 0 {
            return Err(ModelError::VertexOutOfRange { h_vertex: u });
        }
    }
    for (u, &part) in m.parts().iter().enumerate() {
        if part == 0 {
            return Ok(ModelCheck::Invalid(ModelViolation::EmptyPart { h_vertex: u }));
        }
        if !g.is_connected_subset(part) {
            return Ok(ModelCheck::Invalid(ModelViolation::DisconnectedPart { h_vertex: u }));
        }
    }
    let mut union = 0u64;
    let mut overlapping = 0u64;
    for &part in m.parts() {
        overlapping |= union & part;
        union |= part;
    }
    let uncovered = full & !union;
    if overlapping != 0 || uncovered != 0 {
        return Ok(ModelCheck::Invalid(ModelViolation::NotAPartition { overlapping, uncovered }));
    }
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            let adjacent_in_h = h.has_edge(u, v);
            let parts_adjacent = g.neighbors_of_set(m.part(u)) & m.part(v) != 0;
            if adjacent_in_h != parts_adjacent {
                return Ok(ModelCheck::Invalid(ModelViolation::AdjacencyMismatch {
                    u,
                    v,
                    adjacent_in_h,
                }));
            }
        }
    }
    Ok(ModelCheck::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn identity_model_is_valid() {
        let g = Graph::cycle(5);
        let m = ContractionModel::identity(5);
        assert!(verify_model(&g, &g, &m).unwrap().is_valid());
    }

    #[test]
    fn hand_built_model_of_diamond_in_k23() {
        // K_{2,3}: poles 0, 1; leaves 2, 3, 4. Merging leaf 2 into pole 0
        // realizes the diamond: the merged part and pole 1 become the
        // adjacent degree-3 pair.
        let d2 = Graph::diamond();
        let k23 = Graph::complete_bipartite(2, 3);
        let m = ContractionModel::new(vec![0b00101, 0b00010, 0b01000, 0b10000]);
        assert!(verify_model(&d2, &k23, &m).unwrap().is_valid());
    }

    #[test]
    fn disconnected_part_is_condition_one() {
        // P_3 mapped onto P_3 with a part {0, 2} (not adjacent).
        let p3 = Graph::path(3);
        let m = ContractionModel::new(vec![0b101, 0b010, 0b000]);
        match verify_model(&p3, &p3, &m).unwrap() {
            ModelCheck::Invalid(ModelViolation::DisconnectedPart { h_vertex: 0 }) => {}
            other => panic!("expected condition (i) violation, got {other:?}"),
        }
    }

    #[test]
    fn partition_violations_are_reported() {
        let k2 = Graph::complete(2);
        let k3 = Graph::complete(3);
        let m = ContractionModel::new(vec![0b001, 0b010]);
        match verify_model(&k2, &k3, &m).unwrap() {
            ModelCheck::Invalid(ModelViolation::NotAPartition { uncovered, .. }) => {
                assert_eq!(uncovered, 0b100);
            }
            other => panic!("expected condition (ii) violation, got {other:?}"),
        }
    }

    #[test]
    fn adjacency_mismatch_is_condition_three() {
        // Map the edgeless 2-vertex pattern onto K_2: parts are adjacent
        // but the pattern vertices are not.
        let e2 = Graph::new(2);
        let k2 = Graph::complete(2);
        let m = ContractionModel::new(vec![0b01, 0b10]);
        match verify_model(&e2, &k2, &m).unwrap() {
            ModelCheck::Invalid(ModelViolation::AdjacencyMismatch { u: 0, v: 1, adjacent_in_h: false }) => {}
            other => panic!("expected condition (iii) violation, got {other:?}"),
        }
    }

    #[test]
    fn key_mismatch_is_an_error() {
        let m = ContractionModel::new(vec![0b1]);
        assert_eq!(
            verify_model(&Graph::complete(2), &Graph::complete(2), &m),
            Err(ModelError::KeyMismatch { expected: 2, actual: 1 })
        );
    }
}
