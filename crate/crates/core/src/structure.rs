//! Induced-subgraph machinery: pattern detection, induced paths, dominating
//! structures and two-color components.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Embedding, Graph};

/// `P4 + K1`.
pub fn p4_plus_k1() -> Graph {
    disjoint_union(&Graph::path(4), &Graph::path(1))
}

/// Searches for an induced copy of `pattern` in `host`. Exhaustive backtracking
/// over partial injective maps; the first embedding in search order is returned.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    if k == 0 {
        return Some(Embedding { mapping: Vec::new() });
    }
    let order = pattern_order(pattern);
    // anchor[i]: an earlier pattern vertex adjacent to order[i], if any
    let anchor: Vec<Option<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &p)| order[..i].iter().position(|&q| pattern.has_edge(p, q)))
        .collect();
    let mut image = vec![usize::MAX; k];
    let mut used = FixedBitSet::with_capacity(host.order());
    let mut search = InducedSearch { host, pattern, order: &order, anchor: &anchor };
    if search.extend(0, &mut image, &mut used) {
        Some(Embedding { mapping: image })
    } else {
        None
    }
}

/// Pattern vertices ordered so that each one (after the first of its
/// component) has an earlier neighbor, high degrees first.
fn pattern_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.order();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                (links, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct InducedSearch<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: &'a [usize],
    anchor: &'a [Option<usize>],
}

impl InducedSearch<'_> {
    fn extend(&mut self, depth: usize, image: &mut [usize], used: &mut FixedBitSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let candidates: Vec<usize> = match self.anchor[depth] {
            Some(a) => self.host.neighbors(image[self.order[a]]).to_vec(),
            None => (0..self.host.order()).collect(),
        };
        for h in candidates {
            if used.contains(h) || self.host.degree(h) < self.pattern.degree(p) {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&q| self.pattern.has_edge(p, q) == self.host.has_edge(h, image[q]));
            if !consistent {
                continue;
            }
            image[p] = h;
            used.insert(h);
            if self.extend(depth + 1, image, used) {
                return true;
            }
            used.set(h, false);
            image[p] = usize::MAX;
        }
        false
    }
}

/// Number of vertices of a longest induced path starting at `v`.
pub fn longest_induced_path_from(g: &Graph, v: usize) -> Result<usize> {
    g.check_vertex(v)?;
    Ok(longest_induced_path_witness(g, v).len())
}

/// A longest induced path starting at `v` (lexicographically first in search order).
pub fn longest_induced_path_witness(g: &Graph, v: usize) -> Vec<usize> {
    let mut path = vec![v];
    let mut best = path.clone();
    // near[w]: number of interior path vertices adjacent to w
    let mut near = vec![0u32; g.order()];
    let mut on_path = FixedBitSet::with_capacity(g.order());
    on_path.insert(v);
    grow_path(g, &mut path, &mut near, &mut on_path, &mut best);
    best
}

fn grow_path(
    g: &Graph,
    path: &mut Vec<usize>,
    near: &mut [u32],
    on_path: &mut FixedBitSet,
    best: &mut Vec<usize>,
) {
    if path.len() > best.len() {
        *best = path.clone();
    }
    let tip = *path.last().expect("path is never empty");
    let candidates: Vec<usize> = g
        .neighbors(tip)
        .iter()
        .copied()
        .filter(|&w| !on_path.contains(w) && near[w] == 0)
        .collect();
    if candidates.is_empty() {
        return;
    }
    // the old tip becomes interior: its neighbors are now off limits
    for &w in g.neighbors(tip) {
        near[w] += 1;
    }
    for w in candidates {
        path.push(w);
        on_path.insert(w);
        grow_path(g, path, near, on_path, best);
        on_path.set(w, false);
        path.pop();
    }
    for &w in g.neighbors(tip) {
        near[w] -= 1;
    }
}

/// All induced paths on three vertices `(a, b, c)` with center `b` and `a < c`,
/// in lexicographic order.
pub fn induced_p3s(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..g.order() {
        for &b in g.neighbors(a) {
            for &c in g.neighbors(b) {
                if c > a && !g.has_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// All induced paths on four vertices `(a, b, c, d)` with `a < d`, in
/// lexicographic order.
pub fn induced_p4s(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for [a, b, c] in all_oriented_p3s(g) {
        for &d in g.neighbors(c) {
            if d > a && d != b && !g.has_edge(a, d) && !g.has_edge(b, d) {
                out.push([a, b, c, d]);
            }
        }
    }
    out.sort_unstable();
    out
}

fn all_oriented_p3s(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for b in 0..g.order() {
        for &a in g.neighbors(b) {
            for &c in g.neighbors(b) {
                if a != c && !g.has_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// A connected dominating set of one of the shapes used by the equality
/// construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DominatingStructure {
    Clique(Vec<usize>),
    P3([usize; 3]),
    P4([usize; 4]),
    None,
}

/// Finds a dominating clique, P4 or P3 by exhaustive search.
///
/// Preference: the smallest dominating clique; then, if the graph contains a
/// P4 and no induced `P4 + K1`, the least P4 (every P4 dominates there); then
/// the least dominating P3; then the least dominating P4. Ties break
/// lexicographically.
pub fn find_dominating_structure(g: &Graph) -> Result<DominatingStructure> {
    g.require_connected()?;
    if g.order() == 0 {
        return Ok(DominatingStructure::None);
    }
    if let Some(clique) = smallest_dominating_clique(g) {
        return Ok(DominatingStructure::Clique(clique));
    }
    let p4s = induced_p4s(g);
    if !p4s.is_empty() && contains_induced(g, &p4_plus_k1()).is_none() {
        return Ok(DominatingStructure::P4(p4s[0]));
    }
    if let Some(p3) = induced_p3s(g).into_iter().find(|p| g.is_dominating(p)) {
        return Ok(DominatingStructure::P3(p3));
    }
    if let Some(p4) = p4s.into_iter().find(|p| g.is_dominating(p)) {
        return Ok(DominatingStructure::P4(p4));
    }
    Ok(DominatingStructure::None)
}

/// Smallest dominating clique, lexicographically least among those of that size.
pub fn smallest_dominating_clique(g: &Graph) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    let mut current = Vec::new();
    let mut candidates = FixedBitSet::with_capacity(g.order());
    candidates.insert_range(..);
    dominating_cliques(g, &mut current, candidates, &mut best);
    best
}

fn dominating_cliques(
    g: &Graph,
    current: &mut Vec<usize>,
    candidates: FixedBitSet,
    best: &mut Option<Vec<usize>>,
) {
    if !current.is_empty() && g.is_dominating(current) {
        let better = match best {
            None => true,
            Some(b) => (current.len(), &current[..]) < (b.len(), &b[..]),
        };
        if better {
            *best = Some(current.clone());
        }
        // supersets are larger, never better
        return;
    }
    if let Some(b) = best {
        if current.len() + 1 > b.len() {
            return;
        }
    }
    for v in candidates.ones() {
        let mut next = candidates.clone();
        next.set_range(..v + 1, false);
        next.intersect_with(g.neighbor_set(v));
        current.push(v);
        dominating_cliques(g, current, next, best);
        current.pop();
    }
}

/// Vertex set of the component containing `v` in the subgraph induced by the
/// color classes `a` and `b`, sorted ascending.
pub fn component_12(g: &Graph, f: &Coloring, v: usize, colors: (Color, Color)) -> Result<Vec<usize>> {
    g.check_vertex(v)?;
    if f.len() != g.order() {
        return Err(Error::InvalidColoring("coloring size does not match graph".into()));
    }
    two_color_component(g, f.as_slice(), v, colors)
}

/// Same as [`component_12`] over a raw color vector.
pub(crate) fn two_color_component(
    g: &Graph,
    colors: &[Color],
    v: usize,
    (a, b): (Color, Color),
) -> Result<Vec<usize>> {
    if colors[v] != a && colors[v] != b {
        return Err(Error::Precondition(format!(
            "vertex {v} has color {}, not in {{{a}, {b}}}",
            colors[v]
        )));
    }
    let mut seen = FixedBitSet::with_capacity(g.order());
    seen.insert(v);
    let mut stack = vec![v];
    let mut out = vec![v];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if (colors[y] == a || colors[y] == b) && !seen.put(y) {
                out.push(y);
                stack.push(y);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}
