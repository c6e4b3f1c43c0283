//! Coloring-first decision engine.
//!
//! Instead of enumerating vertex orders, the search guesses the final
//! coloring vertex by vertex and prunes with a realizability test: a proper
//! coloring comes from a connected greedy order exactly when repeatedly
//! placing any vertex whose smaller colors all appear on placed neighbors
//! eventually places everything. On partial colorings the test treats
//! uncolored vertices as wildcards that may take any color left in their
//! domain, which over-approximates every completion.

use crate::budget::Meter;
use crate::chromatic::list_colorable;
use crate::coloring::Color;
use crate::search::{Decision, Memo, Problem};

/// Node allowance of the proper-extension check per search node.
const LIST_FUEL: u32 = 32;

pub(crate) fn decide_by_coloring(
    problem: &Problem,
    initial: &[(usize, Color)],
    meter: &mut Meter,
    memo: &mut Memo,
) -> Decision {
    let n = problem.g.order();
    let mut colors = vec![0; n];
    let mut fixed = vec![false; n];
    for &(v, c) in initial {
        let req = problem.required[v];
        if c == 0 || c > problem.limit || (req != 0 && req != c) || colors[v] != 0 {
            return Decision::Absent;
        }
        colors[v] = c;
        fixed[v] = true;
    }
    let mut r = Realizer {
        p: problem,
        initial: initial.iter().map(|&(v, _)| v).collect(),
        fixed,
        colors,
        dom: vec![0; n],
        placed: vec![false; n],
        sup: vec![0; n],
        touched: vec![0; n],
        queue: Vec::with_capacity(n),
        cliques: clique_cover(problem.g),
        meter,
        memo,
        full: ((1u64 << (problem.limit + 1)) - 1) & !1,
    };
    match r.dfs() {
        Some(order) => Decision::Found(order),
        None if r.meter.exhausted() => Decision::Exhausted,
        None => Decision::Absent,
    }
}

struct Realizer<'p, 'g, 'm> {
    p: &'p Problem<'g>,
    initial: Vec<usize>,
    fixed: Vec<bool>,
    colors: Vec<Color>,
    dom: Vec<u64>,
    placed: Vec<bool>,
    /// Union of possible colors over placed neighbors.
    sup: Vec<u64>,
    touched: Vec<u32>,
    queue: Vec<usize>,
    cliques: Vec<Vec<usize>>,
    meter: &'m mut Meter,
    memo: &'m mut Memo,
    full: u64,
}

impl Realizer<'_, '_, '_> {
    fn dfs(&mut self) -> Option<Vec<usize>> {
        if !self.meter.tick() {
            return None;
        }
        let key = self.key();
        if self.memo.contains(&key) {
            return None;
        }
        let found = self.expand();
        if found.is_none() && !self.meter.exhausted() {
            self.memo.insert(key);
        }
        found
    }

    fn expand(&mut self) -> Option<Vec<usize>> {
        if !self.domains() || !self.pigeonhole() || !self.supported() {
            return None;
        }
        let mut fuel = LIST_FUEL;
        if !list_colorable(self.p.g, &mut self.colors, &self.dom, &mut fuel) {
            return None;
        }
        let complete = self.colors.iter().all(|&c| c != 0);
        if complete {
            let order = self.realize()?;
            return self.p.accept.is_none_or(|f| f(&self.colors)).then_some(order);
        }
        if !self.initial.is_empty() || !self.p.connected {
            self.closure(None)?;
        }
        if let Some(viable) = self.p.viable {
            if !viable(&self.colors) {
                return None;
            }
        }
        let v = self.branch_vertex();
        let mut d = self.dom[v];
        while d != 0 {
            let c = d.trailing_zeros();
            d &= d - 1;
            self.colors[v] = c;
            let r = self.dfs();
            self.colors[v] = 0;
            if r.is_some() {
                return r;
            }
            if self.meter.exhausted() {
                return None;
            }
        }
        None
    }

    /// Packed coloring followed by the initial vertices, whose exemption
    /// from the greedy rule changes the meaning of a coloring.
    fn key(&self) -> Box<[u8]> {
        let mut key: Vec<u8> = if self.p.limit < 16 {
            self.colors
                .chunks(2)
                .map(|pair| pair[0] as u8 | ((pair.get(1).copied().unwrap_or(0) as u8) << 4))
                .collect()
        } else {
            self.colors.iter().map(|&c| c as u8).collect()
        };
        for &v in &self.initial {
            key.extend_from_slice(&(v as u32).to_le_bytes());
        }
        key.into_boxed_slice()
    }

    fn colored_mask(&self, v: usize) -> u64 {
        self.p.g.neighbors(v).iter().fold(0, |m, &w| m | (1u64 << self.colors[w]))
    }

    /// Domains of uncolored vertices: proper, within the limit, matching the
    /// required color and not above what the neighborhood can support.
    fn domains(&mut self) -> bool {
        let g = self.p.g;
        for v in 0..g.order() {
            if self.colors[v] != 0 {
                self.dom[v] = 1u64 << self.colors[v];
                continue;
            }
            let mut d = self.full & !self.colored_mask(v);
            let req = self.p.required[v];
            if req != 0 {
                d &= 1u64 << req;
            }
            if d == 0 {
                return false;
            }
            self.dom[v] = d;
        }
        for v in 0..g.order() {
            if self.colors[v] != 0 {
                continue;
            }
            let mut avail = 0u64;
            let mut open = 0u32;
            for &w in g.neighbors(v) {
                avail |= self.dom[w];
                open += u32::from(self.colors[w] == 0);
            }
            let present = self.colored_mask(v) & !1;
            let top = (!(avail | 1)).trailing_zeros();
            let mut d = self.dom[v] & low_bits(top + 1);
            // color c needs c - 1 distinct neighbors below it
            let mut e = d;
            while e != 0 {
                let c = e.trailing_zeros();
                e &= e - 1;
                if (low_bits(c) & !1 & !present).count_ones() > open {
                    d &= low_bits(c);
                    break;
                }
            }
            if d == 0 {
                return false;
            }
            self.dom[v] = d;
        }
        true
    }

    /// Uncolored vertices of each clique need as many distinct colors.
    fn pigeonhole(&self) -> bool {
        self.cliques.iter().all(|q| {
            let (open, avail) = q
                .iter()
                .filter(|&&v| self.colors[v] == 0)
                .fold((0, 0u64), |(n, m), &v| (n + 1, m | self.dom[v]));
            avail.count_ones() >= open
        })
    }

    /// Every colored non-initial vertex can still see all smaller colors on
    /// distinct neighbors.
    fn supported(&self) -> bool {
        let g = self.p.g;
        let mut cands = Vec::new();
        for v in 0..g.order() {
            let c = self.colors[v];
            if c <= 1 || self.fixed[v] {
                continue;
            }
            let need = low_bits(c) & !1 & !self.colored_mask(v);
            if need == 0 {
                continue;
            }
            cands.clear();
            cands.extend(g.neighbors(v).iter().filter(|&&w| self.colors[w] == 0).map(|&w| self.dom[w] & need));
            if !matchable(need, &cands) {
                return false;
            }
        }
        true
    }

    /// Realizing order of a complete coloring.
    fn realize(&mut self) -> Option<Vec<usize>> {
        if !self.initial.is_empty() || !self.p.connected {
            return self.closure(None);
        }
        let starts: Vec<usize> = (0..self.p.g.order()).filter(|&v| self.colors[v] == 1).collect();
        starts.into_iter().find_map(|v| self.closure(Some(v)))
    }

    /// Optimistic placement closure from the initial vertices (or `start`).
    /// Returns the placement order when every vertex can be placed.
    fn closure(&mut self, start: Option<usize>) -> Option<Vec<usize>> {
        let g = self.p.g;
        let n = g.order();
        self.placed.iter_mut().for_each(|p| *p = false);
        self.sup.iter_mut().for_each(|s| *s = 0);
        self.touched.iter_mut().for_each(|t| *t = 0);
        self.queue.clear();
        let mut order = Vec::with_capacity(n);
        let last = self.p.last;
        for i in 0..self.initial.len() {
            let v = self.initial[i];
            self.place(v, &mut order);
        }
        if let Some(v) = start {
            self.place(v, &mut order);
        }
        if !self.p.connected {
            for v in 0..n {
                if !self.placed[v] && Some(v) != last && self.placeable(v) {
                    self.place(v, &mut order);
                }
            }
        }
        let mut head = 0;
        while head < self.queue.len() {
            let w = self.queue[head];
            head += 1;
            for &v in g.neighbors(w) {
                if !self.placed[v] && Some(v) != last && self.placeable(v) {
                    self.place(v, &mut order);
                }
            }
        }
        if let Some(v) = last.filter(|&v| !self.placed[v]) {
            if order.len() + 1 != n || !self.placeable(v) {
                return None;
            }
            self.place(v, &mut order);
        }
        (order.len() == n).then_some(order)
    }

    fn place(&mut self, v: usize, order: &mut Vec<usize>) {
        self.placed[v] = true;
        order.push(v);
        self.queue.push(v);
        let d = self.dom[v];
        for &w in self.p.g.neighbors(v) {
            self.sup[w] |= d;
            self.touched[w] += 1;
        }
    }

    fn placeable(&self, v: usize) -> bool {
        if self.p.connected && self.touched[v] == 0 {
            return false;
        }
        let top = (!(self.sup[v] | 1)).trailing_zeros();
        self.dom[v] & low_bits(top + 1) != 0
    }

    fn branch_vertex(&self) -> usize {
        let g = self.p.g;
        (0..g.order())
            .filter(|&v| self.colors[v] == 0)
            .min_by_key(|&v| {
                let colored = g.neighbors(v).iter().filter(|&&w| self.colors[w] != 0).count();
                (usize::MAX - g.degree(v), self.dom[v].count_ones(), usize::MAX - colored, v)
            })
            .expect("incomplete coloring has an uncolored vertex")
    }
}

/// One greedy maximal clique through every vertex, deduplicated.
fn clique_cover(g: &crate::graph::Graph) -> Vec<Vec<usize>> {
    let mut cliques: Vec<Vec<usize>> = (0..g.order())
        .map(|v| {
            let mut nbrs = g.neighbors(v).to_vec();
            nbrs.sort_by_key(|&w| (usize::MAX - g.degree(w), w));
            let mut q = vec![v];
            for w in nbrs {
                if q.iter().all(|&x| g.has_edge(x, w)) {
                    q.push(w);
                }
            }
            q.sort_unstable();
            q
        })
        .filter(|q| q.len() > 2)
        .collect();
    cliques.sort();
    cliques.dedup();
    cliques
}

/// Bits `0..k`.
#[inline]
fn low_bits(k: u32) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Whether every color of `need` can be assigned its own candidate.
fn matchable(need: u64, cands: &[u64]) -> bool {
    if need.count_ones() as usize > cands.len() {
        return false;
    }
    let mut owner: Vec<Option<u32>> = vec![None; cands.len()];
    let mut rest = need;
    while rest != 0 {
        let c = rest.trailing_zeros();
        rest &= rest - 1;
        let mut seen = vec![false; cands.len()];
        if !augment(c, cands, &mut owner, &mut seen) {
            return false;
        }
    }
    true
}

fn augment(c: u32, cands: &[u64], owner: &mut [Option<u32>], seen: &mut [bool]) -> bool {
    for i in 0..cands.len() {
        if cands[i] & (1u64 << c) == 0 || seen[i] {
            continue;
        }
        seen[i] = true;
        let free = match owner[i] {
            None => true,
            Some(d) => augment(d, cands, owner, seen),
        };
        if free {
            owner[i] = Some(c);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::SearchBudget;
    use crate::coloring::replay;
    use crate::graph::{add_universal_vertex, Graph};

    fn run(g: &Graph, k: Color, seed: (usize, Color)) -> Decision {
        let p = Problem::new(g, k);
        let mut meter = SearchBudget::unlimited().meter();
        decide_by_coloring(&p, &[seed], &mut meter, &mut Memo::default())
    }

    #[test]
    fn matching() {
        assert!(matchable(0b110, &[0b010, 0b100]));
        assert!(!matchable(0b110, &[0b110]));
        assert!(!matchable(0b110, &[0b010, 0b010]));
        assert!(matchable(0b1110, &[0b0110, 0b0010, 0b1000]));
    }

    #[test]
    fn realizes_witnesses() {
        let w = add_universal_vertex(&Graph::cycle(5));
        assert_eq!(run(&w, 3, (0, 1)), Decision::Absent);
        let Decision::Found(order) = run(&w, 4, (0, 1)) else { panic!() };
        let colors = replay(&w, &order, Some((0, 1)));
        assert!(colors.iter().all(|&c| (1..=4).contains(&c)));
        let c4 = Graph::cycle(4);
        assert!(matches!(run(&c4, 2, (0, 2)), Decision::Found(_)));
        assert!(matches!(run(&Graph::path(4), 2, (1, 2)), Decision::Found(_)));
        assert_eq!(run(&Graph::cycle(5), 2, (0, 1)), Decision::Absent);
    }

    #[test]
    fn respects_last_and_required() {
        let g = Graph::path(4);
        let p = Problem::new(&g, 3).require(3, 2).last(3);
        let mut meter = SearchBudget::unlimited().meter();
        let Decision::Found(order) = decide_by_coloring(&p, &[(0, 1)], &mut meter, &mut Memo::default()) else {
            panic!()
        };
        assert_eq!(order.last(), Some(&3));
        assert_eq!(replay(&g, &order, Some((0, 1)))[3], 2);
        let p = Problem::new(&g, 3).require(3, 3);
        let d = decide_by_coloring(&p, &[(0, 1)], &mut meter, &mut Memo::default());
        assert_eq!(d, Decision::Absent);
    }
}
