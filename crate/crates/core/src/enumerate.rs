//! Labeled graph enumeration for exhaustive sweeps.

use crate::graph::Graph;

/// Vertex pairs `(u, v)`, `u < v`, in lexicographic order; bit `i` of a mask
/// selects pair `i`.
pub fn pair_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Graph on `n` vertices whose edges are the pairs selected by `mask`.
pub fn graph_from_mask(n: usize, slots: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..slots.len()).filter(|&i| mask >> i & 1 == 1).map(|i| slots[i]).collect();
    Graph::new(n, &edges).expect("pairs are valid")
}

/// Number of labeled graphs on `n` vertices.
pub fn labeled_count(n: usize) -> u64 {
    1u64 << pair_slots(n).len()
}

/// Every labeled graph on `n` vertices (`n ≤ 11`), in mask order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 11, "too many labeled graphs");
    let slots = pair_slots(n);
    (0..labeled_count(n)).map(move |mask| graph_from_mask(n, &slots, mask))
}

/// Every connected labeled graph on `n` vertices.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(Graph::is_connected)
}
