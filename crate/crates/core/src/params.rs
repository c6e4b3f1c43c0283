//! Exact χ_c, Γ, Γ_c, χ'_c and the CGC spectrum.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::budget::Outcome;
use crate::chromatic::{chromatic_number_with, SearchResult, Witness};
use crate::coloring::{greedy_color, Color, OrderingRun};
use crate::error::{Error, Result};
use crate::graph::{line_graph, Graph, VertexOrdering};
use crate::search::{self, exists_cgc_with, SearchOptions, Verdict, MAX_KERNEL_COLOR};

/// `χ_c(G)` with default options.
pub fn connected_chromatic_number(g: &Graph) -> Result<SearchResult> {
    connected_chromatic_number_with(g, &SearchOptions::default())
}

/// Least `k` admitting a connected greedy coloring with at most `k` colors,
/// searched upward from `χ(G)` (or `ω(G)` if `χ` itself ran out of budget).
pub fn connected_chromatic_number_with(g: &Graph, opts: &SearchOptions) -> Result<SearchResult> {
    g.require_connected()?;
    let chi = chromatic_number_with(g, &opts.budget);
    let mut exact = chi.is_exact();
    let start = if exact { chi.value } else { g.clique_number() as Color };
    let mut nodes = chi.nodes;
    for k in start..=(g.order() as Color).min(MAX_KERNEL_COLOR) {
        let r = exists_cgc_with(g, k, None, opts)?;
        nodes += r.nodes;
        match r.verdict {
            Verdict::Present { run } => {
                return Ok(SearchResult {
                    value: run.num_colors(),
                    witness: Some(Witness::Run(run)),
                    outcome: if exact { Outcome::Proved } else { Outcome::Exhausted },
                    nodes,
                })
            }
            Verdict::Exhausted => exact = false,
            Verdict::Absent => {}
        }
    }
    Err(Error::Exhausted)
}

/// `Γ(G)` with default options.
pub fn grundy_number(g: &Graph) -> Result<SearchResult> {
    grundy_with(g, false, &SearchOptions::default())
}

/// `Γ_c(G)` with default options; unseeded, the first vertex gets color 1.
pub fn connected_grundy_number(g: &Graph) -> Result<SearchResult> {
    connected_grundy_number_with(g, &SearchOptions::default())
}

pub fn grundy_number_with(g: &Graph, opts: &SearchOptions) -> Result<SearchResult> {
    grundy_with(g, false, opts)
}

pub fn connected_grundy_number_with(g: &Graph, opts: &SearchOptions) -> Result<SearchResult> {
    g.require_connected()?;
    grundy_with(g, true, opts)
}

fn grundy_with(g: &Graph, connected: bool, opts: &SearchOptions) -> Result<SearchResult> {
    if g.order() == 0 {
        return Ok(SearchResult { value: 0, witness: None, outcome: Outcome::Proved, nodes: 0 });
    }
    if g.max_degree() as Color + 1 > MAX_KERNEL_COLOR {
        return Err(Error::InvalidParameter(format!("maximum degree above {}", MAX_KERNEL_COLOR - 1)));
    }
    let mut meter = opts.budget.meter();
    let (outcome, order) = match search::maximize(g, connected, &mut meter) {
        Ok((_, order)) => (Outcome::Proved, order),
        Err((_, order)) => (Outcome::Exhausted, order),
    };
    let run = greedy_color(g, &VertexOrdering::new(order, g.order())?, None)?;
    Ok(SearchResult {
        value: run.num_colors(),
        witness: Some(Witness::Run(run)),
        outcome,
        nodes: meter.nodes,
    })
}

/// `χ'_c(G)` together with the witness translated to an edge ordering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSearchResult {
    /// Result on the line graph.
    pub result: SearchResult,
    /// Edge `i` of the line graph's vertex numbering.
    pub edges: Vec<(usize, usize)>,
    /// The witness ordering as edges with their colors.
    pub edge_order: Option<Vec<((usize, usize), Color)>>,
}

/// `χ'_c(G) = χ_c(L(G))` with default options.
pub fn connected_chromatic_index(g: &Graph) -> Result<EdgeSearchResult> {
    connected_chromatic_index_with(g, &SearchOptions::default())
}

pub fn connected_chromatic_index_with(g: &Graph, opts: &SearchOptions) -> Result<EdgeSearchResult> {
    g.require_connected()?;
    if g.size() == 0 {
        return Err(Error::Edgeless);
    }
    let (lg, edges) = line_graph(g);
    let result = connected_chromatic_number_with(&lg, opts)?;
    let edge_order = match &result.witness {
        Some(Witness::Run(run)) => Some(edge_sequence(&edges, run)),
        _ => None,
    };
    Ok(EdgeSearchResult { result, edges, edge_order })
}

pub(crate) fn edge_sequence(edges: &[(usize, usize)], run: &OrderingRun) -> Vec<((usize, usize), Color)> {
    run.ordering.as_slice().iter().map(|&i| (edges[i], run.coloring.color(i))).collect()
}

/// A `(v, α)`-CGC with at most `max{α, χ(G)+1}` colors.
pub fn vcgc_upper_bound_witness(g: &Graph, v: usize, alpha: Color) -> Result<OrderingRun> {
    vcgc_upper_bound_witness_with(g, v, alpha, &SearchOptions::default())
}

pub fn vcgc_upper_bound_witness_with(g: &Graph, v: usize, alpha: Color, opts: &SearchOptions) -> Result<OrderingRun> {
    g.require_connected()?;
    g.check_vertex(v)?;
    if alpha == 0 {
        return Err(Error::InvalidParameter("seed color must be positive".into()));
    }
    let chi = chromatic_number_with(g, &opts.budget);
    if !chi.is_exact() {
        return Err(Error::Exhausted);
    }
    let k = alpha.max(chi.value + 1);
    let r = exists_cgc_with(g, k, Some((v, alpha)), opts)?;
    match r.verdict {
        Verdict::Present { run } => Ok(run),
        Verdict::Exhausted => Err(Error::Exhausted),
        Verdict::Absent => Err(Error::Internal(format!(
            "no ({v},{alpha})-CGC within {k} colors"
        ))),
    }
}

/// Achievable color counts of connected greedy colorings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub counts: BTreeSet<Color>,
    /// `Exhausted` means `counts` may be incomplete.
    pub outcome: Outcome,
    pub nodes: u64,
}

impl Spectrum {
    /// Whether the counts form a contiguous range.
    pub fn is_interval(&self) -> bool {
        match (self.counts.first(), self.counts.last()) {
            (Some(&lo), Some(&hi)) => self.counts.len() as Color == hi - lo + 1,
            _ => true,
        }
    }
}

impl std::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let items: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

pub fn cgc_spectrum(g: &Graph) -> Result<Spectrum> {
    cgc_spectrum_with(g, &SearchOptions::default())
}

/// Exact set of color counts over all connected greedy colorings.
pub fn cgc_spectrum_with(g: &Graph, opts: &SearchOptions) -> Result<Spectrum> {
    g.require_connected()?;
    if g.max_degree() as Color + 1 > MAX_KERNEL_COLOR {
        return Err(Error::InvalidParameter(format!("maximum degree above {}", MAX_KERNEL_COLOR - 1)));
    }
    let mut meter = opts.budget.meter();
    let (bits, outcome) = match search::spectrum(g, true, &mut meter) {
        Ok(bits) => (bits, Outcome::Proved),
        Err(bits) => (bits, Outcome::Exhausted),
    };
    let counts = (0..64).filter(|&c| bits & (1u64 << c) != 0).collect();
    Ok(Spectrum { counts, outcome, nodes: meter.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::SearchBudget;
    use crate::graph::add_universal_vertex;

    #[test]
    fn connected_chromatic_examples() {
        assert_eq!(connected_chromatic_number(&Graph::cycle(4)).unwrap().value, 2);
        assert_eq!(connected_chromatic_number(&Graph::cycle(5)).unwrap().value, 3);
        let w = add_universal_vertex(&Graph::cycle(5));
        assert_eq!(connected_chromatic_number(&w).unwrap().value, 4);
        assert_eq!(connected_chromatic_number(&Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn grundy_examples() {
        let p4 = Graph::path(4);
        assert_eq!(grundy_number(&p4).unwrap().value, 3);
        assert_eq!(connected_grundy_number(&p4).unwrap().value, 2);
        assert_eq!(grundy_number(&Graph::complete_bipartite(2, 2)).unwrap().value, 2);
        let r = grundy_number(&Graph::path(6)).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.is_exact());
    }

    #[test]
    fn chromatic_index_examples() {
        let r = connected_chromatic_index(&Graph::complete(3)).unwrap();
        assert_eq!(r.result.value, 3);
        let r = connected_chromatic_index(&Graph::star(4)).unwrap();
        assert_eq!(r.result.value, 4);
        assert_eq!(r.edge_order.unwrap().len(), 4);
        assert_eq!(connected_chromatic_index(&Graph::empty(1)), Err(Error::Edgeless));
    }

    #[test]
    fn upper_bound_witness() {
        let c4 = Graph::cycle(4);
        assert_eq!(vcgc_upper_bound_witness(&c4, 0, 1).unwrap().num_colors(), 2);
        let r = vcgc_upper_bound_witness(&c4, 0, 5).unwrap();
        assert!(r.num_colors() <= 5);
        assert_eq!(r.coloring.color(0), 5);
        let k4 = Graph::complete(4);
        assert_eq!(vcgc_upper_bound_witness(&k4, 2, 2).unwrap().num_colors(), 4);
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(cgc_spectrum(&Graph::path(4)).unwrap().to_string(), "{2}");
        assert_eq!(cgc_spectrum(&Graph::complete(4)).unwrap().to_string(), "{4}");
        let s = cgc_spectrum_with(&Graph::cycle(6), &SearchOptions::new(SearchBudget::unlimited())).unwrap();
        assert!(s.is_interval());
    }
}
