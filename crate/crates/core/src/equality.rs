//! Constructive `χ_c = χ` for connected P5-free and (P4+K1)-free graphs.
//!
//! Starting from an optimal greedy coloring and a dominating clique or P4,
//! colors are rearranged by class swaps and (1,2)-component switches until a
//! connected dominating set carries a connected greedy coloring, which is then
//! extended to the whole graph.

use std::collections::HashSet;

use crate::budget::SearchBudget;
use crate::chromatic::chromatic_number_with;
use crate::coloring::{demote_until_greedy, greedy_choice, greedy_color, Color, Coloring, OrderingRun};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::structure::{
    contains_induced, find_dominating_structure, induced_p4s, p4_plus_k1, two_color_component, DominatingStructure,
};

const MAX_STEPS: usize = 512;

/// Exchanges color classes `i` and `j` of a greedy coloring, then moves every
/// vertex of color above `min(i, j)`, class by class in increasing order, to
/// its least free color. The result is greedy and uses no more colors.
pub fn swap_color_classes(g: &Graph, f: &Coloring, i: Color, j: Color) -> Result<Coloring> {
    if f.len() != g.order() {
        return Err(Error::InvalidColoring("coloring size does not match graph".into()));
    }
    if !f.is_greedy(g) {
        return Err(Error::Precondition("coloring is not greedy".into()));
    }
    if i == 0 || j == 0 {
        return Err(Error::InvalidParameter("colors are positive".into()));
    }
    let mut colors = f.as_slice().to_vec();
    swap_classes(g, &mut colors, i, j);
    Coloring::new(colors)
}

pub(crate) fn swap_classes(g: &Graph, colors: &mut [Color], i: Color, j: Color) {
    if i == j {
        return;
    }
    let (i, j) = (i.min(j), i.max(j));
    for c in colors.iter_mut() {
        if *c == i {
            *c = j;
        } else if *c == j {
            *c = i;
        }
    }
    let top = colors.iter().copied().max().unwrap_or(0);
    for level in i + 1..=top {
        let class: Vec<usize> = (0..colors.len()).filter(|&v| colors[v] == level).collect();
        for v in class {
            colors[v] = greedy_choice(g, colors, v).min(colors[v]);
        }
    }
}

/// Order of `x` in which greedy coloring of `G[x]` reproduces `colors` on `x`,
/// if one exists.
fn cgc_order_within(g: &Graph, x: &[usize], colors: &[Color]) -> Option<Vec<usize>> {
    let mut starts: Vec<usize> = x.iter().copied().filter(|&v| colors[v] == 1).collect();
    starts.sort_unstable();
    let mut members: Vec<usize> = x.to_vec();
    members.sort_unstable();
    members.dedup();
    for s in starts {
        let mut placed = vec![0 as Color; g.order()];
        placed[s] = colors[s];
        let mut order = vec![s];
        // eligibility only grows as vertices are placed, so any sweep order works
        let mut progress = true;
        while progress && order.len() < members.len() {
            progress = false;
            for &v in &members {
                if placed[v] != 0 || !g.neighbors(v).iter().any(|&w| placed[w] != 0) {
                    continue;
                }
                if greedy_choice(g, &placed, v) == colors[v] {
                    placed[v] = colors[v];
                    order.push(v);
                    progress = true;
                }
            }
        }
        if order.len() == members.len() {
            return Some(order);
        }
    }
    None
}

/// Connected greedy coloring of `G` with at most `f`'s colors, given a
/// connected dominating set `X` on which `f` is a connected greedy coloring of
/// `G[X]`: order `X` first, then the rest class by class.
pub fn extend_cgc_from_dominating_set(g: &Graph, x: &[usize], f: &Coloring) -> Result<OrderingRun> {
    if f.len() != g.order() {
        return Err(Error::InvalidColoring("coloring size does not match graph".into()));
    }
    for &v in x {
        g.check_vertex(v)?;
    }
    if x.is_empty() || !g.is_connected_subset(x) {
        return Err(Error::Precondition("X does not induce a connected subgraph".into()));
    }
    if !g.is_dominating(x) {
        return Err(Error::Precondition("X is not dominating".into()));
    }
    if !f.is_proper(g) {
        return Err(Error::Precondition("f is not proper".into()));
    }
    extend(g, x, f.as_slice())
        .ok_or_else(|| Error::Precondition("f restricted to X is not a connected greedy coloring of G[X]".into()))?
}

fn extend(g: &Graph, x: &[usize], colors: &[Color]) -> Option<Result<OrderingRun>> {
    let order_x = cgc_order_within(g, x, colors)?;
    let mut colors = colors.to_vec();
    let mut frozen = vec![false; g.order()];
    for &v in &order_x {
        frozen[v] = true;
    }
    demote_until_greedy(g, &mut colors, Some(&frozen));
    let mut rest: Vec<usize> = (0..g.order()).filter(|&v| !frozen[v]).collect();
    rest.sort_by_key(|&v| (colors[v], v));
    let mut order = order_x;
    order.extend(rest);
    Some(finish(g, order, &colors))
}

fn finish(g: &Graph, order: Vec<usize>, expected: &[Color]) -> Result<OrderingRun> {
    let ordering = VertexOrdering::new(order, g.order())?;
    let run = greedy_color(g, &ordering, None)?;
    if !run.connected || run.coloring.as_slice() != expected {
        return Err(Error::Internal("extension does not reproduce the coloring".into()));
    }
    Ok(run)
}

/// Connected greedy coloring with exactly `χ(G)` colors for a connected
/// P5-free or (P4+K1)-free graph.
pub fn cgc_equality_p5free(g: &Graph) -> Result<OrderingRun> {
    cgc_equality_p5free_with(g, &SearchBudget::default())
}

pub fn cgc_equality_p5free_with(g: &Graph, budget: &SearchBudget) -> Result<OrderingRun> {
    g.require_connected()?;
    let p5_free = contains_induced(g, &Graph::path(5)).is_none();
    if !p5_free && contains_induced(g, &p4_plus_k1()).is_some() {
        return Err(Error::NotInClass);
    }
    let chi = chromatic_number_with(g, budget);
    if !chi.is_exact() {
        return Err(Error::Exhausted);
    }
    let mut f = chi.witness.expect("chromatic number carries a coloring").coloring().as_slice().to_vec();
    demote_until_greedy(g, &mut f, None);
    let run = if contains_induced(g, &Graph::path(4)).is_none() {
        // cographs: every greedy coloring is optimal
        let order = g.bfs_order(0);
        greedy_color(g, &VertexOrdering::new(order, g.order())?, None)?
    } else {
        equality_run(g, &f)?
    };
    if !run.connected || run.num_colors() != chi.value {
        return Err(Error::Internal(format!(
            "produced {} colors, expected {}",
            run.num_colors(),
            chi.value
        )));
    }
    Ok(run)
}

fn equality_run(g: &Graph, f: &[Color]) -> Result<OrderingRun> {
    let mut tried = HashSet::new();
    match find_dominating_structure(g)? {
        DominatingStructure::Clique(c) => {
            if let Some(run) = clique_route(g, f.to_vec(), &c) {
                return Ok(run);
            }
        }
        DominatingStructure::P3(p3) => {
            if let Some(p) = extend_p3(g, p3) {
                tried.insert(p);
                if let Some(run) = p4_route(g, f.to_vec(), p) {
                    return Ok(run);
                }
            } else if let Some(run) = clique_route(g, f.to_vec(), &[p3[0], p3[1]]) {
                return Ok(run);
            }
        }
        DominatingStructure::P4(p) => {
            tried.insert(p);
            if let Some(run) = p4_route(g, f.to_vec(), p) {
                return Ok(run);
            }
        }
        DominatingStructure::None => {}
    }
    // retry from every other dominating P4, in both directions
    for p in induced_p4s(g).into_iter().filter(|p| g.is_dominating(p)) {
        for q in [p, [p[3], p[2], p[1], p[0]]] {
            if tried.insert(q) {
                if let Some(run) = p4_route(g, f.to_vec(), q) {
                    return Ok(run);
                }
            }
        }
    }
    Err(Error::Internal("case analysis reached a dead end".into()))
}

/// Turns a dominating P3 `(x, y, z)` into a P4 `(x, y, z, w)` with `w` a
/// neighbor of `z` outside `N(x) ∪ N(y)`, or the mirror image on `x`'s side.
fn extend_p3(g: &Graph, [x, y, z]: [usize; 3]) -> Option<[usize; 4]> {
    let private = |a: usize, b: usize, c: usize| {
        g.neighbors(a).iter().copied().find(|&w| w != b && !g.has_edge(w, b) && !g.has_edge(w, c))
    };
    if let Some(w) = private(z, y, x) {
        return Some([x, y, z, w]);
    }
    private(x, y, z).map(|w| [w, x, y, z])
}

fn clique_route(g: &Graph, mut f: Vec<Color>, clique: &[usize]) -> Option<OrderingRun> {
    let m = clique.len() as Color;
    for _ in 0..MAX_STEPS {
        let present: Vec<Color> = clique.iter().map(|&v| f[v]).collect();
        match (1..=m).find(|t| !present.contains(t)) {
            None => return certify(g, &f, clique),
            Some(t) => {
                let src = present.iter().copied().filter(|&c| c > m).min()?;
                swap_classes(g, &mut f, t, src);
            }
        }
    }
    None
}

fn certify(g: &Graph, f: &[Color], x: &[usize]) -> Option<OrderingRun> {
    if !g.is_connected_subset(x) || !g.is_dominating(x) {
        return None;
    }
    extend(g, x, f)?.ok()
}

enum Step {
    Continue,
    Certify(Vec<usize>),
    Stuck,
}

fn p4_route(g: &Graph, mut f: Vec<Color>, mut p: [usize; 4]) -> Option<OrderingRun> {
    let mut seen = HashSet::new();
    for _ in 0..MAX_STEPS {
        if !seen.insert((p, f.clone())) {
            return None;
        }
        match step(g, &mut f, &mut p) {
            Step::Continue => {}
            Step::Certify(x) => return certify(g, &f, &x),
            Step::Stuck => return None,
        }
    }
    None
}

fn reversed(p: [usize; 4]) -> [usize; 4] {
    [p[3], p[2], p[1], p[0]]
}

/// One move of the case analysis on the current path and coloring.
fn step(g: &Graph, f: &mut [Color], p: &mut [usize; 4]) -> Step {
    let c = p.map(|v| f[v]);
    let rc = [c[3], c[2], c[1], c[0]];
    let mut distinct = c.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let target = match distinct.len() {
        2 => [2, 1, 2, 1],
        3 if c[0] == c[3] => [1, 2, 3, 1],
        3 if c[0] == c[2] => [1, 2, 1, 3],
        3 => {
            *p = reversed(*p);
            return Step::Continue;
        }
        _ => [4, 3, 1, 2],
    };
    if c != target && rc == target {
        *p = reversed(*p);
        return Step::Continue;
    }
    if c != target {
        return normalize(g, f, p, target);
    }
    match target {
        [2, 1, 2, 1] => Step::Certify(p.to_vec()),
        [1, 2, 3, 1] => case_a(g, f, p),
        [1, 2, 1, 3] => case_b(g, f, p),
        _ => case_four(g, f, p),
    }
}

/// One class swap bringing the least mismatched target color into place.
fn normalize(g: &Graph, f: &mut [Color], p: &[usize; 4], target: [Color; 4]) -> Step {
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by_key(|&i| target[i]);
    for i in order {
        let current = f[p[i]];
        if current != target[i] {
            swap_classes(g, f, current, target[i]);
            return Step::Continue;
        }
    }
    Step::Stuck
}

fn component(g: &Graph, f: &[Color], v: usize) -> Vec<usize> {
    two_color_component(g, f, v, (1, 2)).expect("vertex colored 1 or 2")
}

fn switch_12(f: &mut [Color], vertices: &[usize]) {
    for &v in vertices {
        f[v] = 3 - f[v];
    }
}

/// Colors (1,2,3,1) on `(x, y, z, w)`.
fn case_a(g: &Graph, f: &mut [Color], p: &[usize; 4]) -> Step {
    let [x, _, z, w] = *p;
    let comp = component(g, f, w);
    if comp.contains(&x) {
        let mut set = comp;
        set.push(z);
        return Step::Certify(set);
    }
    switch_12(f, &comp);
    demote_until_greedy(g, f, None);
    Step::Continue
}

/// Colors (1,2,1,3) on `(x, y, z, w)`.
fn case_b(g: &Graph, f: &mut [Color], p: &[usize; 4]) -> Step {
    let [x, _, _, w] = *p;
    let twos: Vec<usize> = g.neighbors(w).iter().copied().filter(|&u| f[u] == 2).collect();
    let mut swap: Vec<usize> = Vec::new();
    for &u in &twos {
        let comp = component(g, f, u);
        if comp.contains(&x) {
            let mut set = comp;
            set.push(w);
            return Step::Certify(set);
        }
        swap.extend(comp);
    }
    swap.sort_unstable();
    swap.dedup();
    switch_12(f, &swap);
    if !g.neighbors(w).iter().any(|&u| f[u] == 2) {
        f[w] = 2;
    }
    demote_until_greedy(g, f, None);
    Step::Continue
}

/// For `a` of color at least 3: a neighbor `u` of color 2 whose (1,2)-component
/// contains a neighbor of `a` of color 1, with that component and those
/// color-1 neighbors. Otherwise switches every such component and recolors `a`
/// with 2.
fn anchored_component(g: &Graph, f: &mut [Color], a: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let twos: Vec<usize> = g.neighbors(a).iter().copied().filter(|&u| f[u] == 2).collect();
    let mut swap = Vec::new();
    for &u in &twos {
        let comp = component(g, f, u);
        let ones: Vec<usize> = comp.iter().copied().filter(|&v| f[v] == 1 && g.has_edge(v, a)).collect();
        if !ones.is_empty() {
            return Some((comp, ones));
        }
        swap.extend(comp);
    }
    swap.sort_unstable();
    swap.dedup();
    switch_12(f, &swap);
    if !g.neighbors(a).iter().any(|&u| f[u] == 2) {
        f[a] = 2;
    }
    demote_until_greedy(g, f, None);
    None
}

/// Colors (4,3,1,2) on `(x, y, z, w)`.
fn case_four(g: &Graph, f: &mut [Color], p: &mut [usize; 4]) -> Step {
    let [x, y, z, w] = *p;
    let Some((c_y, _)) = anchored_component(g, f, y) else {
        return Step::Continue;
    };
    let Some((c_x, ones_x)) = anchored_component(g, f, x) else {
        return Step::Continue;
    };
    let near = |v: usize| g.has_edge(v, y) || g.has_edge(v, z) || g.has_edge(v, w);
    if ones_x.iter().any(|&v| near(v)) {
        let mut set = c_y;
        set.extend(c_x);
        set.extend_from_slice(p);
        set.sort_unstable();
        set.dedup();
        return Step::Certify(set);
    }
    // (v', x, y, z, w) is an induced P5, so the graph is (P4+K1)-free and
    // the P4 (v', x, y, z) dominates
    *p = [ones_x[0], x, y, z];
    Step::Continue
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_graph;

    #[test]
    fn swap_examples() {
        let p4 = Graph::path(4);
        let f = Coloring::new(vec![1, 2, 1, 2]).unwrap();
        assert_eq!(swap_color_classes(&p4, &f, 1, 2).unwrap().as_slice(), &[2, 1, 2, 1]);
        assert_eq!(swap_color_classes(&p4, &f, 2, 2).unwrap(), f);
        let bad = Coloring::new(vec![1, 3, 1, 2]).unwrap();
        assert!(swap_color_classes(&p4, &bad, 1, 2).is_err());
    }

    #[test]
    fn swap_keeps_greedy() {
        let c5 = Graph::cycle(5);
        let f = Coloring::new(vec![1, 2, 1, 2, 3]).unwrap();
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let h = swap_color_classes(&c5, &f, i, j).unwrap();
            assert!(h.is_greedy(&c5));
            assert!(h.num_colors() <= 3);
        }
    }

    #[test]
    fn extension_examples() {
        let star = Graph::star(3);
        let f = Coloring::new(vec![1, 2, 2, 2]).unwrap();
        let run = extend_cgc_from_dominating_set(&star, &[0], &f).unwrap();
        assert_eq!(run.num_colors(), 2);
        assert!(run.connected);

        let c4 = Graph::cycle(4);
        let f = Coloring::new(vec![1, 2, 1, 2]).unwrap();
        let run = extend_cgc_from_dominating_set(&c4, &[0, 1], &f).unwrap();
        assert_eq!(run.coloring, f);
        let all = extend_cgc_from_dominating_set(&c4, &[0, 1, 2, 3], &f).unwrap();
        assert_eq!(all.coloring, f);

        assert!(extend_cgc_from_dominating_set(&c4, &[0], &f).is_err());
        assert!(extend_cgc_from_dominating_set(&c4, &[0, 2], &f).is_err());
    }

    #[test]
    fn equality_examples() {
        let k33 = Graph::complete_bipartite(3, 3);
        assert_eq!(cgc_equality_p5free(&k33).unwrap().num_colors(), 2);
        let c5 = Graph::cycle(5);
        let run = cgc_equality_p5free(&c5).unwrap();
        assert_eq!(run.num_colors(), 3);
        assert!(run.connected);
        assert_eq!(cgc_equality_p5free(&Graph::path(6)), Err(Error::NotInClass));
        let two = make_graph(2, &[]).unwrap();
        assert_eq!(cgc_equality_p5free(&two), Err(Error::Disconnected));
    }
}
