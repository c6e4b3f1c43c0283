//! Colorings, greedy replay and connected orderings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};

/// Colors are 1-based; 0 is reserved for "uncolored" in partial states.
pub type Color = u32;

/// A surjective vertex coloring onto `1..=num_colors`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<Color>,
    num_colors: Color,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        let num_colors = colors.iter().copied().max().unwrap_or(0);
        if colors.contains(&0) {
            return Err(Error::InvalidColoring("color 0 is not a color".into()));
        }
        let mut present = vec![false; num_colors as usize + 1];
        for &c in &colors {
            present[c as usize] = true;
        }
        if let Some(missing) = (1..=num_colors).find(|&c| !present[c as usize]) {
            return Err(Error::InvalidColoring(format!("color {missing} is unused")));
        }
        Ok(Coloring { colors, num_colors })
    }

    /// Positive colors without the surjectivity requirement. Only seeded runs
    /// produce these: the seed color may exceed every other color plus one.
    pub(crate) fn allowing_gaps(colors: Vec<Color>) -> Self {
        debug_assert!(!colors.contains(&0));
        let num_colors = colors.iter().copied().max().unwrap_or(0);
        Coloring { colors, num_colors }
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn num_colors(&self) -> Color {
        self.num_colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    /// Color class `S_c`, ascending.
    pub fn class(&self, c: Color) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == c).collect()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        is_proper(g, &self.colors)
    }

    /// Every vertex of color `c` sees all colors `1..c` in its neighborhood.
    pub fn is_greedy(&self, g: &Graph) -> bool {
        is_proper(g, &self.colors) && (0..g.order()).all(|v| is_greedy_at(g, &self.colors, v))
    }
}

pub(crate) fn is_proper(g: &Graph, colors: &[Color]) -> bool {
    colors.len() == g.order() && g.edges().all(|(u, v)| colors[u] != colors[v])
}

/// Bitmask of the colors present among the neighbors of `v` (bit `c` for color `c`).
/// Colors above 127 are ignored; callers must bound degrees accordingly.
#[inline]
pub(crate) fn neighbor_colors(g: &Graph, colors: &[Color], v: usize) -> u128 {
    let mut mask = 0u128;
    for &w in g.neighbors(v) {
        let c = colors[w];
        if c != 0 && c < 128 {
            mask |= 1u128 << c;
        }
    }
    mask
}

/// Least color absent from `mask`.
#[inline]
pub(crate) fn least_missing(mask: u128) -> Color {
    // bit 0 is never set, so the first zero above it is the answer
    (!(mask | 1)).trailing_zeros()
}

/// Least color absent from the colored neighbors of `v`.
#[inline]
pub(crate) fn greedy_choice(g: &Graph, colors: &[Color], v: usize) -> Color {
    if g.degree(v) < 127 {
        return least_missing(neighbor_colors(g, colors, v));
    }
    let mut seen = vec![false; g.degree(v) + 2];
    for &w in g.neighbors(v) {
        if let Some(slot) = seen.get_mut(colors[w] as usize) {
            *slot = true;
        }
    }
    (1..seen.len()).find(|&c| !seen[c]).unwrap_or(seen.len()) as Color
}

fn is_greedy_at(g: &Graph, colors: &[Color], v: usize) -> bool {
    greedy_choice(g, colors, v) >= colors[v]
}

/// A vertex ordering together with the greedy coloring it produces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingRun {
    pub ordering: VertexOrdering,
    pub coloring: Coloring,
    /// Every non-initial vertex has an earlier neighbor.
    pub connected: bool,
    /// Start vertex and its forced color, for seeded runs.
    pub seed: Option<(usize, Color)>,
}

impl OrderingRun {
    pub fn num_colors(&self) -> Color {
        self.coloring.num_colors()
    }

    /// Replays the ordering and checks that it reproduces the stored coloring.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let replay = greedy_color(g, &self.ordering, self.seed)?;
        if replay.coloring != self.coloring || replay.connected != self.connected {
            return Err(Error::Internal("ordering does not replay to its coloring".into()));
        }
        Ok(())
    }
}

/// Greedy coloring along `ordering`. With a seed `(v, alpha)`, `v` must come
/// first and receives `alpha`; every later vertex takes the least color absent
/// from its already-colored neighbors.
pub fn greedy_color(g: &Graph, ordering: &VertexOrdering, seed: Option<(usize, Color)>) -> Result<OrderingRun> {
    let order = ordering.as_slice();
    if order.len() != g.order() {
        return Err(Error::InvalidOrdering("ordering length does not match graph".into()));
    }
    if let Some((v, alpha)) = seed {
        if order.first() != Some(&v) {
            return Err(Error::InvalidOrdering(format!("seed vertex {v} is not first")));
        }
        if alpha == 0 {
            return Err(Error::InvalidParameter("seed color must be positive".into()));
        }
    }
    let colors = replay(g, order, seed);
    let connected = is_connected_sequence(g, order);
    let coloring = match seed {
        // a seed color above the greedy range can leave unused colors below it
        Some(_) => Coloring::allowing_gaps(colors),
        None => Coloring::new(colors)?,
    };
    Ok(OrderingRun { ordering: ordering.clone(), coloring, connected, seed })
}

/// Raw greedy replay; `seed` forces the first vertex's color.
pub(crate) fn replay(g: &Graph, order: &[usize], seed: Option<(usize, Color)>) -> Vec<Color> {
    let mut colors = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        colors[v] = match seed {
            Some((_, alpha)) if i == 0 => alpha,
            _ => greedy_choice(g, &colors, v),
        };
    }
    colors
}

pub(crate) fn is_connected_sequence(g: &Graph, order: &[usize]) -> bool {
    let mut placed = vec![false; g.order()];
    for (i, &v) in order.iter().enumerate() {
        if i > 0 && !g.neighbors(v).iter().any(|&w| placed[w]) {
            return false;
        }
        placed[v] = true;
    }
    true
}

/// Whether every vertex after the first has an earlier neighbor.
pub fn is_connected_ordering(g: &Graph, ordering: &VertexOrdering) -> Result<bool> {
    g.require_connected()?;
    if ordering.len() != g.order() {
        return Err(Error::InvalidOrdering("ordering length does not match graph".into()));
    }
    Ok(is_connected_sequence(g, ordering.as_slice()))
}

/// Repeatedly moves vertices to their least feasible color until every vertex
/// is greedy. Colors only decrease and properness is kept. Vertices flagged in
/// `frozen` are never touched.
pub(crate) fn demote_until_greedy(g: &Graph, colors: &mut [Color], frozen: Option<&[bool]>) {
    loop {
        let mut changed = false;
        for v in 0..g.order() {
            if frozen.is_some_and(|f| f[v]) {
                continue;
            }
            let best = greedy_choice(g, colors, v);
            if best < colors[v] {
                colors[v] = best;
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ordering(v: &[usize]) -> VertexOrdering {
        VertexOrdering::new(v.to_vec(), v.len()).unwrap()
    }

    #[test]
    fn greedy_examples() {
        let p4 = Graph::path(4);
        let run = greedy_color(&p4, &ordering(&[0, 1, 2, 3]), None).unwrap();
        assert_eq!(run.coloring.as_slice(), &[1, 2, 1, 2]);
        assert!(run.connected);
        // order (a, d, c, b) on a-b-c-d
        let run = greedy_color(&p4, &ordering(&[0, 3, 2, 1]), None).unwrap();
        assert_eq!(run.coloring.as_slice(), &[1, 3, 2, 1]);
        assert_eq!(run.num_colors(), 3);
        assert!(!run.connected);
        let c5 = Graph::cycle(5);
        let run = greedy_color(&c5, &ordering(&[0, 1, 2, 3, 4]), None).unwrap();
        assert_eq!(run.coloring.as_slice(), &[1, 2, 1, 2, 3]);
    }

    #[test]
    fn seeded_runs() {
        let p4 = Graph::path(4);
        let run = greedy_color(&p4, &ordering(&[1, 0, 2, 3]), Some((1, 2))).unwrap();
        assert_eq!(run.coloring.as_slice(), &[1, 2, 1, 2]);
        assert!(greedy_color(&p4, &ordering(&[0, 1, 2, 3]), Some((1, 2))).is_err());
        run.validate(&p4).unwrap();
    }

    #[test]
    fn connected_orderings() {
        let p4 = Graph::path(4);
        assert!(is_connected_ordering(&p4, &ordering(&[0, 1, 2, 3])).unwrap());
        assert!(!is_connected_ordering(&p4, &ordering(&[0, 2, 1, 3])).unwrap());
        let g = Graph::complete_bipartite(2, 3);
        let bfs = g.bfs_order(4);
        assert!(is_connected_ordering(&g, &ordering(&bfs)).unwrap());
        let two = Graph::empty(2);
        assert_eq!(is_connected_ordering(&two, &ordering(&[0, 1])), Err(Error::Disconnected));
    }

    #[test]
    fn coloring_invariants() {
        assert!(Coloring::new(vec![1, 3]).is_err());
        assert!(Coloring::new(vec![0, 1]).is_err());
        let f = Coloring::new(vec![2, 1, 2]).unwrap();
        assert_eq!(f.class(2), vec![0, 2]);
        assert!(f.is_greedy(&Graph::path(3)));
        let g = Coloring::new(vec![1, 2, 3]).unwrap();
        assert!(g.is_proper(&Graph::path(3)));
        assert!(!g.is_greedy(&Graph::path(3)));
    }

    #[test]
    fn demotion_reaches_greedy() {
        let g = Graph::path(5);
        let mut colors = vec![3, 1, 4, 2, 5];
        demote_until_greedy(&g, &mut colors, None);
        let f = Coloring::new(colors).unwrap();
        assert!(f.is_greedy(&g));
    }
}
