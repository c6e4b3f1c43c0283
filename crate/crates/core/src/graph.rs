//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Graphs are immutable once built. Every structural operation returns a new
//! graph. Gadget terminals ride along as optional per-vertex string labels so
//! that they survive re-indexing by unions and identifications.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected simple graph with optional vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
    labels: Vec<Option<String>>,
    edge_count: usize,
}

/// A permutation of the vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexOrdering(Vec<usize>);

impl VertexOrdering {
    /// Wraps `sequence` after checking that it is a permutation of `0..n`.
    pub fn new(sequence: Vec<usize>, n: usize) -> Result<Self> {
        if sequence.len() != n {
            return Err(Error::InvalidOrdering(format!(
                "ordering has {} entries, graph has {} vertices",
                sequence.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &v in &sequence {
            if v >= n {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidOrdering(format!("vertex {v} repeated")));
            }
        }
        Ok(VertexOrdering(sequence))
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// Injective map from the vertices of a pattern into a host graph,
/// preserving both adjacency and non-adjacency.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    /// `mapping[i]` is the host vertex hit by pattern vertex `i`.
    pub mapping: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges are collapsed.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        for (index, &(u, v)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { index, vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { index, vertex: u });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj, vec![None; n]))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![Vec::new(); n], vec![None; n])
    }

    fn from_adjacency(mut adj: Vec<Vec<usize>>, labels: Vec<Option<String>>) -> Self {
        let n = adj.len();
        let mut rows = Vec::with_capacity(n);
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
            let mut row = FixedBitSet::with_capacity(n);
            for &w in list.iter() {
                row.insert(w);
            }
            rows.push(row);
        }
        Graph {
            adj,
            rows,
            labels,
            edge_count: twice / 2,
        }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::new(n, &edges).expect("clique edges are valid")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Self::new(a + b, &edges).expect("biclique edges are valid")
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::complete_bipartite(1, leaves)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels[v].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels[v] = Some(label.into());
    }

    pub fn clear_label(&mut self, v: usize) {
        self.labels[v] = None;
    }

    /// First vertex carrying exactly this label.
    pub fn find_label(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(name))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::NoSuchVertex { vertex: v, n: self.order() })
        }
    }

    /// Breadth-first order from `start`, restricted to its component.
    pub fn bfs_order(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut order = Vec::with_capacity(self.order());
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Side of every vertex in a 2-coloring, if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let here = side[v] == Some(true);
                for &w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!here);
                            stack.push(w);
                        }
                        Some(x) if x == here => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|x| x == Some(true)).collect())
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs_order(0).len() == self.order()
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order()];
        let mut count = 0;
        for s in 0..self.order() {
            if !seen[s] {
                count += 1;
                for v in self.bfs_order(s) {
                    seen[v] = true;
                }
            }
        }
        count
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Whether `set` induces a connected subgraph (the empty set does).
    pub fn is_connected_subset(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else {
            return true;
        };
        let mut inside = FixedBitSet::with_capacity(self.order());
        for &v in set {
            inside.insert(v);
        }
        let mut seen = FixedBitSet::with_capacity(self.order());
        seen.insert(start);
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if inside.contains(w) && !seen.put(w) {
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == inside.count_ones(..)
    }

    /// Whether every vertex lies in `set` or has a neighbor in it.
    pub fn is_dominating(&self, set: &[usize]) -> bool {
        let mut covered = FixedBitSet::with_capacity(self.order());
        for &v in set {
            covered.insert(v);
            covered.union_with(&self.rows[v]);
        }
        covered.count_ones(..) == self.order()
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// Subgraph induced by `vertices` (kept in the given order), labels included.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        Graph::from_adjacency(adj, labels)
    }

    /// Exact clique number by branch and bound.
    pub fn clique_number(&self) -> usize {
        self.max_clique().len()
    }

    /// A maximum clique, lexicographically smallest among those found first by
    /// the ascending-index branch and bound.
    pub fn max_clique(&self) -> Vec<usize> {
        let n = self.order();
        let mut best = Vec::new();
        let mut current = Vec::new();
        let mut candidates = FixedBitSet::with_capacity(n);
        candidates.insert_range(..);
        self.expand_clique(&mut current, candidates, &mut best);
        best
    }

    fn expand_clique(&self, current: &mut Vec<usize>, mut candidates: FixedBitSet, best: &mut Vec<usize>) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        while let Some(v) = candidates.ones().next() {
            if current.len() + candidates.count_ones(..) <= best.len() {
                return;
            }
            candidates.set(v, false);
            let mut next = candidates.clone();
            next.intersect_with(&self.rows[v]);
            current.push(v);
            self.expand_clique(current, next, best);
            current.pop();
        }
    }
}

/// `make_graph`: a graph on `n` vertices with exactly the given edges.
pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges)
}

/// `G + H`: vertices of `h` are shifted by `|V(g)|`, no cross edges.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.order();
    let mut adj = g.adj.clone();
    adj.extend(h.adj.iter().map(|list| list.iter().map(|&w| w + shift).collect()));
    let mut labels = g.labels.clone();
    labels.extend(h.labels.iter().cloned());
    Graph::from_adjacency(adj, labels)
}

/// Adds vertex `n` adjacent to every existing vertex.
pub fn add_universal_vertex(g: &Graph) -> Graph {
    let n = g.order();
    let mut adj = g.adj.clone();
    for list in adj.iter_mut() {
        list.push(n);
    }
    adj.push((0..n).collect());
    let mut labels = g.labels.clone();
    labels.push(None);
    Graph::from_adjacency(adj, labels)
}

/// Collapses each group to a single vertex carrying the union of the
/// neighborhoods. Returns the new graph and the old-to-new vertex map.
///
/// New indices follow the old order, each group sitting at the position of its
/// smallest member. The merged vertex keeps the first label found among the
/// members in group order.
pub fn identify_vertices(g: &Graph, groups: &[Vec<usize>]) -> Result<(Graph, Vec<usize>)> {
    let n = g.order();
    let mut group_of = vec![usize::MAX; n];
    for (gi, group) in groups.iter().enumerate() {
        for &v in group {
            g.check_vertex(v)?;
            if group_of[v] != usize::MAX {
                return Err(Error::OverlappingGroups { vertex: v });
            }
            group_of[v] = gi;
        }
        for (i, &a) in group.iter().enumerate() {
            for &b in &group[i + 1..] {
                if g.has_edge(a, b) {
                    return Err(Error::AdjacentInGroup { a, b });
                }
            }
        }
    }
    let mut leader = vec![usize::MAX; groups.len()];
    for v in 0..n {
        if group_of[v] != usize::MAX && leader[group_of[v]] == usize::MAX {
            leader[group_of[v]] = v;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        let rep = match group_of[v] {
            usize::MAX => v,
            gi => leader[gi],
        };
        if rep == v {
            map[v] = next;
            next += 1;
        }
    }
    for v in 0..n {
        if group_of[v] != usize::MAX {
            map[v] = map[leader[group_of[v]]];
        }
    }
    let mut adj = vec![Vec::new(); next];
    for (u, v) in g.edges() {
        adj[map[u]].push(map[v]);
        adj[map[v]].push(map[u]);
    }
    let mut labels: Vec<Option<String>> = vec![None; next];
    for v in 0..n {
        if group_of[v] == usize::MAX {
            labels[map[v]] = g.labels[v].clone();
        }
    }
    for group in groups {
        if let Some(first) = group.iter().find_map(|&v| g.labels[v].clone()) {
            labels[map[group[0]]] = Some(first);
        }
    }
    Ok((Graph::from_adjacency(adj, labels), map))
}

/// Line graph `L(G)`. Vertex `i` of the result is `edges[i]` of `G`, listed in
/// lexicographic order.
pub fn line_graph(g: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut adj = vec![Vec::new(); edges.len()];
    for list in &incident {
        for (a, &e) in list.iter().enumerate() {
            for &f in &list[a + 1..] {
                adj[e].push(f);
                adj[f].push(e);
            }
        }
    }
    let labels = vec![None; edges.len()];
    (Graph::from_adjacency(adj, labels), edges)
}

/// Double Mycielskian: copies `V1 = n..2n` and `V2 = 2n..3n` of the vertex
/// set, with `y_i z` and `y z_i` for every edge `yz`, plus the adjacent apex
/// pair `3n`, `3n + 1`, each complete to its own copy.
pub fn double_mycielskian(h: &Graph) -> Graph {
    let n = h.order();
    let mut adj = vec![Vec::new(); 3 * n + 2];
    let mut link = |a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for (y, z) in h.edges() {
        link(y, z);
        for copy in 1..=2 {
            link(copy * n + y, z);
            link(y, copy * n + z);
        }
    }
    let (x1, x2) = (3 * n, 3 * n + 1);
    link(x1, x2);
    for w in 0..n {
        link(x1, n + w);
        link(x2, 2 * n + w);
    }
    let mut labels = h.labels.clone();
    labels.resize(3 * n + 2, None);
    Graph::from_adjacency(adj, labels)
}
