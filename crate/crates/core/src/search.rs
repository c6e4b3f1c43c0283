//! Search kernel: seeded CGC decisions, Grundy maximization and spectra.
//!
//! Decisions are delegated to the coloring-first engine. Maximization and
//! spectra walk partial colorings reachable by greedy extension, where a
//! search state is the partial coloring itself. The greedy color of any
//! uncolored vertex depends only on its colored neighbors, so two orderings
//! reaching the same partial coloring have the same futures and one memo entry
//! covers both.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::{Meter, SearchBudget};
use crate::coloring::{greedy_color, Color, OrderingRun};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};

/// Largest color the kernel can track.
pub const MAX_KERNEL_COLOR: Color = 62;

/// Budget plus parallelism for a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub budget: SearchBudget,
    /// Worker threads for independent seeds; 1 runs sequentially with one
    /// shared memo, 0 uses every core.
    pub workers: usize,
}

impl SearchOptions {
    pub fn new(budget: SearchBudget) -> Self {
        SearchOptions { budget, workers: 1 }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub(crate) fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        if self.workers == 1 {
            return f();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.workers).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions::new(SearchBudget::default())
    }
}

/// Answer of a budgeted existence query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Present { run: OrderingRun },
    Absent,
    Exhausted,
}

/// A [`Verdict`] with the number of search nodes spent on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CgcSearch {
    pub verdict: Verdict,
    pub nodes: u64,
}

impl CgcSearch {
    pub fn witness(&self) -> Option<&OrderingRun> {
        match &self.verdict {
            Verdict::Present { run } => Some(run),
            _ => None,
        }
    }

    pub fn is_absent(&self) -> bool {
        self.verdict == Verdict::Absent
    }

    pub fn is_exhausted(&self) -> bool {
        self.verdict == Verdict::Exhausted
    }
}

/// Connected greedy coloring with at most `k` colors, optionally seeded.
pub fn exists_cgc(g: &Graph, k: Color, seed: Option<(usize, Color)>) -> Result<CgcSearch> {
    exists_cgc_with(g, k, seed, &SearchOptions::default())
}

/// [`exists_cgc`] with explicit budget and worker count. Sequential runs
/// spend one budget over all start vertices; parallel runs give each its own.
pub fn exists_cgc_with(g: &Graph, k: Color, seed: Option<(usize, Color)>, opts: &SearchOptions) -> Result<CgcSearch> {
    g.require_connected()?;
    if let Some((v, alpha)) = seed {
        g.check_vertex(v)?;
        if alpha == 0 || alpha > k {
            return Err(Error::InvalidParameter(format!("seed color {alpha} must lie in 1..={k}")));
        }
    }
    if k > MAX_KERNEL_COLOR {
        return Err(Error::InvalidParameter(format!("at most {MAX_KERNEL_COLOR} colors supported")));
    }
    let problem = Problem::new(g, k);
    let seeds: Vec<Vec<(usize, Color)>> = match seed {
        Some(s) => vec![vec![s]],
        None => (0..g.order()).map(|v| vec![(v, 1)]).collect(),
    };
    let (decision, nodes, _) = decide_seeds(&problem, &seeds, opts);
    Ok(CgcSearch { verdict: decision.into_verdict(g, seed)?, nodes })
}

/// Per-vertex constraints on a decision search.
pub(crate) type Pred<'a> = dyn Fn(&[Color]) -> bool + Sync + 'a;

/// A decision question: is there a connected (or arbitrary) greedy extension
/// of the initial coloring with every color at most `limit`, respecting
/// `required` final colors, keeping `last` for the end, and whose complete
/// coloring satisfies `accept`? `viable` may reject partial colorings that
/// cannot lead to an accepted one.
pub(crate) struct Problem<'a> {
    pub g: &'a Graph,
    pub limit: Color,
    pub connected: bool,
    pub required: Vec<Color>,
    pub last: Option<usize>,
    pub accept: Option<&'a Pred<'a>>,
    pub viable: Option<&'a Pred<'a>>,
}

impl<'a> Problem<'a> {
    pub fn new(g: &'a Graph, limit: Color) -> Self {
        Problem {
            g,
            limit,
            connected: true,
            required: vec![0; g.order()],
            last: None,
            accept: None,
            viable: None,
        }
    }

    pub fn require(mut self, v: usize, c: Color) -> Self {
        self.required[v] = c;
        self
    }

    pub fn last(mut self, v: usize) -> Self {
        self.last = Some(v);
        self
    }
}

/// Kernel answer; `Found` carries the full vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Decision {
    Found(Vec<usize>),
    Absent,
    Exhausted,
}

impl Decision {
    fn into_verdict(self, g: &Graph, seed: Option<(usize, Color)>) -> Result<Verdict> {
        Ok(match self {
            Decision::Found(order) => {
                let ordering = VertexOrdering::new(order, g.order())?;
                Verdict::Present { run: greedy_color(g, &ordering, seed)? }
            }
            Decision::Absent => Verdict::Absent,
            Decision::Exhausted => Verdict::Exhausted,
        })
    }
}

/// Bytes of keys a [`Memo`] may hold before it stops recording.
const MEMO_BYTES: usize = 1 << 28;

/// Dead states of one [`Problem`].
#[derive(Default)]
pub(crate) struct Memo {
    dead: HashSet<Box<[u8]>>,
    bytes: usize,
}

impl Memo {
    pub fn contains(&self, key: &[u8]) -> bool {
        self.dead.contains(key)
    }

    /// Records a dead state unless the memo is full.
    pub fn insert(&mut self, key: Box<[u8]>) {
        if self.bytes + key.len() <= MEMO_BYTES {
            self.bytes += key.len() + 32;
            self.dead.insert(key);
        }
    }
}

/// Runs the decision for each seed list. Sequential runs share one memo and
/// one budget and stop at the first success; parallel runs give every seed
/// its own memo and budget. Either way
/// the reported witness is the one of the least successful seed, whose index
/// is returned alongside the total node count.
pub(crate) fn decide_seeds(
    problem: &Problem,
    seeds: &[Vec<(usize, Color)>],
    opts: &SearchOptions,
) -> (Decision, u64, Option<usize>) {
    if opts.workers == 1 || seeds.len() < 2 {
        let mut memo = Memo::default();
        let mut meter = opts.budget.meter();
        let mut exhausted = false;
        for (i, seed) in seeds.iter().enumerate() {
            let d = decide(problem, seed, &mut meter, &mut memo);
            match d {
                Decision::Found(_) => return (d, meter.nodes, Some(i)),
                Decision::Exhausted => exhausted = true,
                Decision::Absent => {}
            }
        }
        let d = if exhausted { Decision::Exhausted } else { Decision::Absent };
        return (d, meter.nodes, None);
    }
    let results: Vec<(Decision, u64)> = opts.run(|| {
        seeds
            .par_iter()
            .map(|seed| {
                let mut meter = opts.budget.meter();
                let mut memo = Memo::default();
                let d = decide(problem, seed, &mut meter, &mut memo);
                (d, meter.nodes)
            })
            .collect()
    });
    let nodes = results.iter().map(|r| r.1).sum();
    let mut exhausted = false;
    for (i, (d, _)) in results.into_iter().enumerate() {
        match d {
            Decision::Found(_) => return (d, nodes, Some(i)),
            Decision::Exhausted => exhausted = true,
            Decision::Absent => {}
        }
    }
    (if exhausted { Decision::Exhausted } else { Decision::Absent }, nodes, None)
}

/// Decides `problem` from the given precolored vertices, which are placed in
/// order and exempt from the greedy rule.
pub(crate) fn decide(problem: &Problem, initial: &[(usize, Color)], meter: &mut Meter, memo: &mut Memo) -> Decision {
    assert!(problem.limit <= MAX_KERNEL_COLOR);
    crate::realize::decide_by_coloring(problem, initial, meter, memo)
}

/// Partial coloring with incremental neighbor-color bookkeeping.
pub(crate) struct State<'g> {
    g: &'g Graph,
    width: usize,
    pub colors: Vec<Color>,
    /// `count[v * width + c]`: colored neighbors of `v` with color `c`.
    count: Vec<u16>,
    /// Bit `c` set when some colored neighbor has color `c`.
    mask: Vec<u64>,
    /// Number of colored neighbors.
    touched: Vec<u32>,
    pub order: Vec<usize>,
    maxima: Vec<Color>,
}

impl<'g> State<'g> {
    pub fn new(g: &'g Graph, limit: Color) -> Self {
        let n = g.order();
        let width = limit as usize + 1;
        State {
            g,
            width,
            colors: vec![0; n],
            count: vec![0; n * width],
            mask: vec![0; n],
            touched: vec![0; n],
            order: Vec::with_capacity(n),
            maxima: Vec::with_capacity(n),
        }
    }

    pub fn assign(&mut self, v: usize, c: Color) {
        debug_assert!(self.colors[v] == 0 && (c as usize) < self.width);
        self.colors[v] = c;
        self.order.push(v);
        self.maxima.push(self.max_color().max(c));
        for &w in self.g.neighbors(v) {
            let slot = &mut self.count[w * self.width + c as usize];
            *slot += 1;
            if *slot == 1 {
                self.mask[w] |= 1u64 << c;
            }
            self.touched[w] += 1;
        }
    }

    pub fn undo(&mut self) {
        let v = self.order.pop().expect("undo on empty state");
        self.maxima.pop();
        let c = self.colors[v];
        self.colors[v] = 0;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.count[w * self.width + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.mask[w] &= !(1u64 << c);
            }
            self.touched[w] -= 1;
        }
    }

    /// Color `v` would receive now.
    #[inline]
    pub fn mex(&self, v: usize) -> Color {
        (!(self.mask[v] | 1)).trailing_zeros()
    }

    pub fn max_color(&self) -> Color {
        self.maxima.last().copied().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.order.len() == self.g.order()
    }

    #[inline]
    pub fn is_candidate(&self, v: usize, connected: bool) -> bool {
        self.colors[v] == 0 && (!connected || self.order.is_empty() || self.touched[v] > 0)
    }

    /// Packed encoding of the coloring: nibbles when colors fit, else bytes.
    pub fn key(&self) -> Box<[u8]> {
        if self.width <= 16 {
            self.colors
                .chunks(2)
                .map(|pair| pair[0] as u8 | ((pair.get(1).copied().unwrap_or(0) as u8) << 4))
                .collect()
        } else {
            self.colors.iter().map(|&c| c as u8).collect()
        }
    }

    /// Appends the remaining vertices in ascending-index frontier order.
    pub fn complete_greedily(&mut self, connected: bool) {
        while !self.is_complete() {
            let v = (0..self.g.order())
                .find(|&v| self.is_candidate(v, connected))
                .expect("connected graph always has a frontier vertex");
            let c = self.mex(v);
            self.assign(v, c);
        }
    }

    fn uncolored_degree(&self, v: usize) -> u32 {
        self.g.degree(v) as u32 - self.touched[v]
    }
}

/// Largest color reachable by greedy extension of the empty state, with the
/// witness sequence. `Err` carries the best found when the meter trips.
pub(crate) fn maximize(g: &Graph, connected: bool, meter: &mut Meter) -> std::result::Result<(Color, Vec<usize>), (Color, Vec<usize>)> {
    let cap = (g.max_degree() as Color + 1).min(MAX_KERNEL_COLOR);
    let mut m = Maximizer {
        g,
        connected,
        cap,
        st: State::new(g, cap),
        meter,
        dead: HashSet::new(),
        best: 0,
        best_prefix: Vec::new(),
    };
    m.dfs();
    let exhausted = m.meter.exhausted();
    let (best, prefix) = (m.best, m.best_prefix);
    let mut st = State::new(g, cap);
    for &v in &prefix {
        let c = st.mex(v);
        st.assign(v, c);
    }
    st.complete_greedily(connected);
    if exhausted {
        Err((best, st.order))
    } else {
        Ok((best, st.order))
    }
}

struct Maximizer<'g, 'm> {
    g: &'g Graph,
    connected: bool,
    cap: Color,
    st: State<'g>,
    meter: &'m mut Meter,
    pub dead: HashSet<Box<[u8]>>,
    best: Color,
    best_prefix: Vec<usize>,
}

impl Maximizer<'_, '_> {
    fn dfs(&mut self) {
        let current = self.st.max_color();
        if current > self.best {
            self.best = current;
            self.best_prefix = self.st.order.clone();
        }
        if self.best >= self.cap || self.st.is_complete() || !self.meter.tick() {
            return;
        }
        let key = self.st.key();
        if self.dead.contains(&key) {
            return;
        }
        // an uncolored vertex ends at most one above the colors it can see
        let bound = (0..self.g.order())
            .filter(|&v| self.st.colors[v] == 0)
            .map(|v| self.st.mask[v].count_ones() + self.st.uncolored_degree(v) + 1)
            .max()
            .unwrap_or(0);
        if bound <= self.best {
            self.dead.insert(key);
            return;
        }
        for v in 0..self.g.order() {
            if !self.st.is_candidate(v, self.connected) {
                continue;
            }
            let c = self.st.mex(v);
            self.st.assign(v, c);
            self.dfs();
            self.st.undo();
            if self.meter.exhausted() || self.best >= self.cap {
                return;
            }
        }
        // nothing below here beats the best, which only grows
        self.dead.insert(key);
    }
}

/// Bit set of final color counts over all greedy extensions of the empty
/// state. `Err` carries the partial set when the meter trips.
pub(crate) fn spectrum(g: &Graph, connected: bool, meter: &mut Meter) -> std::result::Result<u64, u64> {
    let cap = (g.max_degree() as Color + 1).min(MAX_KERNEL_COLOR);
    let mut s = Spectrum {
        g,
        connected,
        st: State::new(g, cap),
        meter,
        memo: HashMap::new(),
    };
    let set = s.dfs();
    if s.meter.exhausted() {
        Err(set)
    } else {
        Ok(set)
    }
}

struct Spectrum<'g, 'm> {
    g: &'g Graph,
    connected: bool,
    st: State<'g>,
    meter: &'m mut Meter,
    memo: HashMap<Box<[u8]>, u64>,
}

impl Spectrum<'_, '_> {
    fn dfs(&mut self) -> u64 {
        if self.st.is_complete() {
            return 1u64 << self.st.max_color();
        }
        if !self.meter.tick() {
            return 0;
        }
        let key = self.st.key();
        if let Some(&set) = self.memo.get(&key) {
            return set;
        }
        let mut set = 0;
        for v in 0..self.g.order() {
            if !self.st.is_candidate(v, self.connected) {
                continue;
            }
            let c = self.st.mex(v);
            self.st.assign(v, c);
            set |= self.dfs();
            self.st.undo();
            if self.meter.exhausted() {
                return set;
            }
        }
        self.memo.insert(key, set);
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::add_universal_vertex;

    fn unlimited() -> SearchOptions {
        SearchOptions::new(SearchBudget::unlimited())
    }

    #[test]
    fn cycle_four_has_two_color_cgc() {
        let g = Graph::cycle(4);
        let r = exists_cgc_with(&g, 2, None, &unlimited()).unwrap();
        let run = r.witness().unwrap();
        assert!(run.connected);
        assert_eq!(run.num_colors(), 2);
        run.validate(&g).unwrap();
    }

    #[test]
    fn universal_vertex_forces_extra_color() {
        let g = add_universal_vertex(&Graph::cycle(5));
        assert!(exists_cgc_with(&g, 3, None, &unlimited()).unwrap().is_absent());
        assert!(exists_cgc_with(&g, 4, None, &unlimited()).unwrap().witness().is_some());
    }

    #[test]
    fn seeds_are_respected() {
        let g = Graph::path(4);
        let r = exists_cgc_with(&g, 3, Some((1, 3)), &unlimited()).unwrap();
        let run = r.witness().unwrap();
        assert_eq!(run.ordering.as_slice()[0], 1);
        assert_eq!(run.coloring.color(1), 3);
        assert!(exists_cgc_with(&g, 2, Some((1, 3)), &unlimited()).is_err());
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = Graph::cycle(7);
        let a = exists_cgc_with(&g, 3, None, &unlimited()).unwrap();
        let b = exists_cgc_with(&g, 3, None, &unlimited().with_workers(4)).unwrap();
        assert_eq!(a.verdict, b.verdict);
    }

    #[test]
    fn exhaustion_is_reported() {
        let g = Graph::path(10);
        let r = exists_cgc_with(&g, 2, None, &SearchOptions::new(SearchBudget::nodes(3))).unwrap();
        assert!(r.is_exhausted());
    }

    #[test]
    fn kernel_required_and_last() {
        let g = Graph::path(4);
        // start at 0, force vertex 3 last with color 2
        let p = Problem::new(&g, 3).require(3, 2).last(3);
        let mut meter = SearchBudget::unlimited().meter();
        let d = decide(&p, &[(0, 1)], &mut meter, &mut Memo::default());
        assert_eq!(d, Decision::Found(vec![0, 1, 2, 3]));
        let p = Problem::new(&g, 3).require(3, 3);
        let d = decide(&p, &[(0, 1)], &mut meter, &mut Memo::default());
        assert_eq!(d, Decision::Absent);
    }

    #[test]
    fn maximize_and_spectrum_on_p4() {
        let g = Graph::path(4);
        let mut meter = SearchBudget::unlimited().meter();
        assert_eq!(maximize(&g, false, &mut meter).unwrap().0, 3);
        assert_eq!(maximize(&g, true, &mut meter).unwrap().0, 2);
        assert_eq!(spectrum(&g, true, &mut meter).unwrap(), 1 << 2);
    }
}
