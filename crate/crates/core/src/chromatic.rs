//! Exact chromatic number, coloring enumeration and list-coloring feasibility.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::budget::{Meter, Outcome, SearchBudget};
use crate::coloring::{Color, Coloring, OrderingRun};
use crate::graph::Graph;

/// Witness attached to a [`SearchResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    Run(OrderingRun),
    Coloring(Coloring),
}

impl Witness {
    pub fn coloring(&self) -> &Coloring {
        match self {
            Witness::Run(run) => &run.coloring,
            Witness::Coloring(c) => c,
        }
    }
}

/// Value of an exact parameter computation.
///
/// With `outcome == Proved` the value is exact. With `Exhausted` it is the best
/// bound reached before the budget ran out (an upper bound for minimization,
/// a lower bound for maximization) and proves nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub value: Color,
    pub witness: Option<Witness>,
    pub outcome: Outcome,
    pub nodes: u64,
}

impl SearchResult {
    pub fn is_exact(&self) -> bool {
        self.outcome == Outcome::Proved
    }
}

/// Exact `χ(G)` with no budget.
pub fn chromatic_number(g: &Graph) -> SearchResult {
    chromatic_number_with(g, &SearchBudget::unlimited())
}

/// Exact `χ(G)`: clique lower bound, DSATUR upper bound, then backtracking
/// decisions upward from the lower bound.
pub fn chromatic_number_with(g: &Graph, budget: &SearchBudget) -> SearchResult {
    let n = g.order();
    if n == 0 {
        return SearchResult {
            value: 0,
            witness: Some(Witness::Coloring(Coloring::new(Vec::new()).expect("empty coloring"))),
            outcome: Outcome::Proved,
            nodes: 0,
        };
    }
    let lower = g.clique_number() as Color;
    let mut best = dsatur(g);
    let mut meter = budget.meter();
    let upper = max_color(&best);
    let mut value = upper;
    for k in lower..upper {
        match k_coloring(g, k, &mut meter) {
            Some(colors) => {
                best = colors;
                value = k;
                break;
            }
            None if meter.exhausted() => {
                return SearchResult {
                    value: upper,
                    witness: Some(Witness::Coloring(Coloring::new(dsatur(g)).expect("dsatur is surjective"))),
                    outcome: Outcome::Exhausted,
                    nodes: meter.nodes,
                };
            }
            None => {}
        }
    }
    debug_assert_eq!(value, max_color(&best));
    SearchResult {
        value,
        witness: Some(Witness::Coloring(Coloring::new(best).expect("backtracking colorings are canonical"))),
        outcome: Outcome::Proved,
        nodes: meter.nodes,
    }
}

fn max_color(colors: &[Color]) -> Color {
    colors.iter().copied().max().unwrap_or(0)
}

/// DSATUR heuristic coloring (no backtracking).
pub fn dsatur(g: &Graph) -> Vec<Color> {
    let n = g.order();
    let mut colors = vec![0; n];
    for _ in 0..n {
        let v = pick_saturated(g, &colors).expect("an uncolored vertex remains");
        colors[v] = crate::coloring::greedy_choice(g, &colors, v);
    }
    canonicalize(&mut colors);
    colors
}

/// Uncolored vertex of maximum saturation, then maximum degree, then least index.
fn pick_saturated(g: &Graph, colors: &[Color]) -> Option<usize> {
    (0..g.order())
        .filter(|&v| colors[v] == 0)
        .max_by_key(|&v| (saturation(g, colors, v), g.degree(v), std::cmp::Reverse(v)))
}

fn saturation(g: &Graph, colors: &[Color], v: usize) -> u32 {
    let mut seen = 0u128;
    for &w in g.neighbors(v) {
        let c = colors[w];
        if c != 0 {
            seen |= 1u128 << c.min(127);
        }
    }
    seen.count_ones()
}

/// Relabels colors in order of first appearance by vertex index.
pub(crate) fn canonicalize(colors: &mut [Color]) {
    let mut map = std::collections::HashMap::new();
    for c in colors.iter_mut() {
        let next = map.len() as Color + 1;
        *c = *map.entry(*c).or_insert(next);
    }
}

/// A proper coloring with at most `k` colors, by DSATUR backtracking with
/// color-symmetry breaking. `None` if none exists or the meter trips.
pub(crate) fn k_coloring(g: &Graph, k: Color, meter: &mut Meter) -> Option<Vec<Color>> {
    if k == 0 {
        return (g.order() == 0).then(Vec::new);
    }
    assert!(k < 64, "k-coloring search supports at most 63 colors");
    let mut colors = vec![0; g.order()];
    if color_rec(g, k, &mut colors, 0, meter) {
        canonicalize(&mut colors);
        Some(colors)
    } else {
        None
    }
}

fn color_rec(g: &Graph, k: Color, colors: &mut [Color], used: Color, meter: &mut Meter) -> bool {
    if !meter.tick() {
        return false;
    }
    let Some(v) = pick_saturated(g, colors) else {
        return true;
    };
    let mut forbidden = 0u64;
    for &w in g.neighbors(v) {
        forbidden |= 1u64 << colors[w];
    }
    let top = (used + 1).min(k);
    for c in 1..=top {
        if forbidden & (1u64 << c) != 0 {
            continue;
        }
        colors[v] = c;
        if color_rec(g, k, colors, used.max(c), meter) {
            return true;
        }
        if meter.exhausted() {
            colors[v] = 0;
            return false;
        }
    }
    colors[v] = 0;
    false
}

/// Outcome of a coloring enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Colorings visited.
    pub count: u64,
    /// False when stopped early by the callback or the budget.
    pub complete: bool,
    pub nodes: u64,
}

/// Visits every proper coloring with at most `k` colors, up to renaming of the
/// colors: vertices are visited in breadth-first order from vertex 0 (one
/// component after another), the first gets color 1 and each new color is the
/// least one not used so far.
pub fn for_each_coloring<F>(g: &Graph, k: Color, budget: &SearchBudget, mut visit: F) -> Enumeration
where
    F: FnMut(&[Color]) -> ControlFlow<()>,
{
    let mut order = Vec::with_capacity(g.order());
    let mut seen = vec![false; g.order()];
    for s in 0..g.order() {
        if !seen[s] {
            for v in g.bfs_order(s) {
                seen[v] = true;
                order.push(v);
            }
        }
    }
    let mut meter = budget.meter();
    let mut colors = vec![0; g.order()];
    let mut count = 0;
    let stopped = enumerate_rec(g, k, &order, 0, 0, &mut colors, &mut meter, &mut count, &mut visit);
    Enumeration {
        count,
        complete: !stopped && !meter.exhausted(),
        nodes: meter.nodes,
    }
}

#[allow(clippy::too_many_arguments)]
fn enumerate_rec<F>(
    g: &Graph,
    k: Color,
    order: &[usize],
    depth: usize,
    used: Color,
    colors: &mut [Color],
    meter: &mut Meter,
    count: &mut u64,
    visit: &mut F,
) -> bool
where
    F: FnMut(&[Color]) -> ControlFlow<()>,
{
    if !meter.tick() {
        return true;
    }
    if depth == order.len() {
        *count += 1;
        return visit(colors).is_break();
    }
    let v = order[depth];
    for c in 1..=(used + 1).min(k) {
        if g.neighbors(v).iter().any(|&w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if enumerate_rec(g, k, order, depth + 1, used.max(c), colors, meter, count, visit) {
            colors[v] = 0;
            return true;
        }
    }
    colors[v] = 0;
    false
}

/// Proper edge coloring of a bipartite graph with `Δ` colors, indexed like
/// `g.edges()`; `None` if `g` is not bipartite.
pub fn bipartite_edge_coloring(g: &Graph) -> Option<Vec<Color>> {
    g.bipartition()?;
    const FREE: usize = usize::MAX;
    let d = g.max_degree();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut colors = vec![0 as Color; edges.len()];
    let mut at = vec![vec![FREE; d + 1]; g.order()];
    let free_at = |at: &[Vec<usize>], v: usize| (1..=d).find(|&c| at[v][c] == FREE).expect("degree bound");
    for (i, &(u, v)) in edges.iter().enumerate() {
        let a = free_at(&at, u);
        let b = free_at(&at, v);
        if at[v][a] != FREE {
            // swap a and b along the alternating path from v; it avoids u
            let mut path = Vec::new();
            let (mut x, mut c) = (v, a);
            while at[x][c] != FREE {
                let e = at[x][c];
                path.push(e);
                let (p, q) = edges[e];
                x = if p == x { q } else { p };
                c = if c == a { b } else { a };
            }
            for &e in &path {
                let (p, q) = edges[e];
                let c = colors[e] as usize;
                at[p][c] = FREE;
                at[q][c] = FREE;
            }
            for &e in &path {
                let (p, q) = edges[e];
                let c = if colors[e] as usize == a { b } else { a };
                colors[e] = c as Color;
                at[p][c] = e;
                at[q][c] = e;
            }
        }
        colors[i] = a as Color;
        at[u][a] = i;
        at[v][a] = i;
    }
    Some(colors)
}

/// Whether the uncolored vertices (color 0) can be colored properly, each
/// `v` from the bit set `domains[v]` (bit `c` allows color `c`), consistently
/// with the colored ones. Each visited node burns one unit of `fuel`; once it
/// is gone the answer is `true` without proof, so callers may only use a
/// `false` answer for pruning.
pub(crate) fn list_colorable(g: &Graph, colors: &mut [Color], domains: &[u64], fuel: &mut u32) -> bool {
    if *fuel == 0 {
        return true;
    }
    *fuel -= 1;
    let mut pick: Option<(usize, u64)> = None;
    for v in (0..g.order()).filter(|&v| colors[v] == 0) {
        let avail = available(g, colors, domains, v);
        if avail == 0 {
            return false;
        }
        let better = match pick {
            None => true,
            Some((_, best)) => avail.count_ones() < best.count_ones(),
        };
        if better {
            pick = Some((v, avail));
        }
    }
    let Some((v, mut avail)) = pick else {
        return true;
    };
    while avail != 0 {
        let c = avail.trailing_zeros();
        avail &= avail - 1;
        colors[v] = c;
        let ok = list_colorable(g, colors, domains, fuel);
        colors[v] = 0;
        if ok {
            return true;
        }
    }
    false
}

#[inline]
fn available(g: &Graph, colors: &[Color], domains: &[u64], v: usize) -> u64 {
    let mut avail = domains[v];
    for &w in g.neighbors(v) {
        let c = colors[w];
        if c != 0 && c < 64 {
            avail &= !(1u64 << c);
        }
    }
    avail
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{add_universal_vertex, double_mycielskian};

    #[test]
    fn konig_edge_coloring() {
        for g in [Graph::complete_bipartite(3, 4), Graph::cycle(6), Graph::path(5), Graph::star(5)] {
            let colors = bipartite_edge_coloring(&g).unwrap();
            let (lg, _) = crate::graph::line_graph(&g);
            assert!(crate::coloring::is_proper(&lg, &colors));
            assert_eq!(colors.iter().copied().max().unwrap() as usize, g.max_degree());
        }
        assert_eq!(bipartite_edge_coloring(&Graph::cycle(5)), None);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::complete(5)).value, 5);
        assert_eq!(chromatic_number(&Graph::cycle(5)).value, 3);
        assert_eq!(chromatic_number(&Graph::cycle(4)).value, 2);
        assert_eq!(chromatic_number(&add_universal_vertex(&Graph::cycle(4))).value, 3);
        assert_eq!(chromatic_number(&Graph::empty(3)).value, 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).value, 0);
    }

    #[test]
    fn grotzsch_like_graph_needs_four_colors() {
        // double Mycielskian of C5 is triangle-free and 4-chromatic
        let g = double_mycielskian(&Graph::cycle(5));
        let r = chromatic_number(&g);
        assert_eq!(r.value, 4);
        assert!(r.witness.unwrap().coloring().is_proper(&g));
    }

    #[test]
    fn enumeration_counts() {
        // proper 3-colorings of P3 up to renaming: ends equal or different
        let e = for_each_coloring(&Graph::path(3), 3, &SearchBudget::unlimited(), |_| ControlFlow::Continue(()));
        assert_eq!((e.count, e.complete), (2, true));
        // K3 with 3 colors: one class of colorings
        let e = for_each_coloring(&Graph::complete(3), 3, &SearchBudget::unlimited(), |_| ControlFlow::Continue(()));
        assert_eq!(e.count, 1);
        let e = for_each_coloring(&Graph::complete(3), 2, &SearchBudget::unlimited(), |_| ControlFlow::Continue(()));
        assert_eq!(e.count, 0);
    }

    #[test]
    fn list_coloring() {
        let g = Graph::path(3);
        let mut colors = vec![0, 0, 0];
        assert!(list_colorable(&g, &mut colors, &[0b10, 0b110, 0b10], &mut 1000));
        assert!(!list_colorable(&g, &mut colors, &[0b10, 0b10, 0b10], &mut 1000));
        let mut colors = vec![1, 0, 0];
        assert!(!list_colorable(&g, &mut colors, &[0b10, 0b10, 0b110], &mut 1000));
        assert_eq!(colors, vec![1, 0, 0]);
    }
}
