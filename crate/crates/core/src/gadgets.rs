//! Gadget generators and the reduction composers built from them.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{double_mycielskian, identify_vertices, Graph};
use crate::structure::contains_induced;

/// A generated graph with named terminal vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetArtifact {
    pub name: String,
    pub graph: Graph,
    pub terminals: BTreeMap<String, usize>,
    pub params: GadgetParams,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetParams {
    pub k: Option<u32>,
    pub ell: Option<u32>,
    /// False for parameters outside the range where the gadget's properties
    /// are claimed.
    pub canonical: bool,
}

impl GadgetArtifact {
    fn new(name: &str, graph: Graph, params: GadgetParams) -> Self {
        let terminals = graph
            .labels()
            .iter()
            .enumerate()
            .filter_map(|(v, l)| l.clone().map(|l| (l, v)))
            .collect();
        GadgetArtifact { name: name.into(), graph, terminals, params }
    }

    /// Vertex of the named terminal.
    pub fn terminal(&self, name: &str) -> Result<usize> {
        self.terminals
            .get(name)
            .copied()
            .ok_or_else(|| Error::InvalidParameter(format!("{} has no terminal {name}", self.name)))
    }
}

/// Incremental graph construction with labels.
#[derive(Default)]
struct Builder {
    edges: Vec<(usize, usize)>,
    labels: Vec<Option<String>>,
}

impl Builder {
    fn from_graph(g: &Graph) -> Self {
        Builder { edges: g.edges().collect(), labels: g.labels().to_vec() }
    }

    fn vertex(&mut self, label: Option<&str>) -> usize {
        self.labels.push(label.map(str::to_owned));
        self.labels.len() - 1
    }

    fn vertices(&mut self, count: usize) -> Vec<usize> {
        (0..count).map(|_| self.vertex(None)).collect()
    }

    fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    fn clique(&mut self, set: &[usize]) {
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                self.edge(a, b);
            }
        }
    }

    fn join(&mut self, a: usize, set: &[usize]) {
        for &b in set {
            self.edge(a, b);
        }
    }

    /// Adds a copy of `gadget`, merging each `(gadget vertex, existing vertex)`
    /// pair of `glue`. Returns the position of every gadget vertex. New
    /// vertices carry the gadget's labels behind `prefix`.
    fn attach(&mut self, gadget: &Graph, glue: &[(usize, usize)], prefix: &str) -> Vec<usize> {
        let mut map = vec![usize::MAX; gadget.order()];
        for &(gv, bv) in glue {
            map[gv] = bv;
        }
        for (gv, slot) in map.iter_mut().enumerate() {
            if *slot == usize::MAX {
                let label = gadget.label(gv).map(|l| format!("{prefix}{l}"));
                *slot = self.vertex(label.as_deref());
            }
        }
        for (a, b) in gadget.edges() {
            self.edge(map[a], map[b]);
        }
        map
    }

    fn build(self) -> Graph {
        let mut g = Graph::new(self.labels.len(), &self.edges).expect("builder edges are valid");
        for (v, l) in self.labels.into_iter().enumerate() {
            if let Some(l) = l {
                g.set_label(v, l);
            }
        }
        g
    }
}

fn require_k(k: u32, min: u32, what: &str) -> Result<()> {
    if k < min {
        return Err(Error::InvalidParameter(format!("{what} needs k >= {min}, got {k}")));
    }
    Ok(())
}

/// `G_k`: cliques `U`, `V`, `M` of size `k` with `w ∈ M`; `u, u'` complete to
/// `U`, `v, v'` complete to `V`, `u, v` complete to `M \ {w}`, `u', v'`
/// adjacent to `w`. Vertices: `U`, `V`, `M` (with `w` last), then
/// `u, u', v, v'`.
#[allow(non_snake_case)]
pub fn gadget_Gk(k: u32) -> Result<GadgetArtifact> {
    require_k(k, 3, "G_k")?;
    let k = k as usize;
    let mut b = Builder::default();
    let big_u = b.vertices(k);
    let big_v = b.vertices(k);
    let mut big_m = b.vertices(k - 1);
    let w = b.vertex(Some("w"));
    big_m.push(w);
    let u = b.vertex(Some("u"));
    let u2 = b.vertex(Some("u'"));
    let v = b.vertex(Some("v"));
    let v2 = b.vertex(Some("v'"));
    for set in [&big_u, &big_v, &big_m] {
        b.clique(set);
    }
    for (a, set) in [(u, &big_u), (u2, &big_u), (v, &big_v), (v2, &big_v)] {
        b.join(a, set);
    }
    b.join(u, &big_m[..k - 1]);
    b.join(v, &big_m[..k - 1]);
    b.edge(u2, w);
    b.edge(v2, w);
    let params = GadgetParams { k: Some(k as u32), ell: None, canonical: true };
    Ok(GadgetArtifact::new("Gk", b.build(), params))
}

/// `G⁵_k(p, q)`: induced path `p x y z`, clique `P` of size `k - 1` complete
/// to the path, clique `Q` of size `k` complete to `z` and `q`. Vertices:
/// `p, x, y, z`, `P`, `Q`, `q`.
#[allow(non_snake_case)]
pub fn gadget_G5k(k: u32) -> Result<GadgetArtifact> {
    require_k(k, 3, "G5_k")?;
    let k = k as usize;
    let mut b = Builder::default();
    let p = b.vertex(Some("p"));
    let x = b.vertex(None);
    let y = b.vertex(None);
    let z = b.vertex(None);
    let big_p = b.vertices(k - 1);
    let big_q = b.vertices(k);
    let q = b.vertex(Some("q"));
    b.edge(p, x);
    b.edge(x, y);
    b.edge(y, z);
    b.clique(&big_p);
    for a in [p, x, y, z] {
        b.join(a, &big_p);
    }
    b.clique(&big_q);
    b.join(z, &big_q);
    b.join(q, &big_q);
    let params = GadgetParams { k: Some(k as u32), ell: Some(5), canonical: true };
    Ok(GadgetArtifact::new("G5k", b.build(), params))
}

/// `G³_k(p, q)`: `k - 1` double Mycielskians of the path `p x y q`.
#[allow(non_snake_case)]
pub fn gadget_G3k(k: u32) -> Result<GadgetArtifact> {
    require_k(k, 1, "G3_k")?;
    let mut g = Graph::path(4);
    g.set_label(0, "p");
    g.set_label(3, "q");
    for _ in 1..k {
        g = double_mycielskian(&g);
    }
    let params = GadgetParams { k: Some(k), ell: Some(3), canonical: true };
    Ok(GadgetArtifact::new("G3k", g, params))
}

/// Edge gadget `G'_k(p, q)`: `K_{k-1,k-1}` on parts `P`, `Q`, with `p'`
/// complete to `P`, `q'` complete to `Q` and pendant edges `pp'`, `qq'`.
/// Vertices: `P`, `Q`, `p'`, `q'`, `p`, `q`.
pub fn edge_gadget_line(k: u32) -> Result<GadgetArtifact> {
    require_k(k, 3, "edge gadget")?;
    let g = edge_gadget_graph(k as usize, true);
    let params = GadgetParams { k: Some(k), ell: None, canonical: true };
    Ok(GadgetArtifact::new("edge-line", g, params))
}

fn edge_gadget_graph(k: usize, labelled: bool) -> Graph {
    let mut b = Builder::default();
    let big_p = b.vertices(k - 1);
    let big_q = b.vertices(k - 1);
    let name = |s: &'static str| labelled.then_some(s);
    let p2 = b.vertex(name("p'"));
    let q2 = b.vertex(name("q'"));
    let p = b.vertex(name("p"));
    let q = b.vertex(name("q"));
    for &a in &big_p {
        b.join(a, &big_q);
    }
    b.join(p2, &big_p);
    b.join(q2, &big_q);
    b.edge(p, p2);
    b.edge(q, q2);
    b.build()
}

/// Positions inside [`edge_gadget_line`]'s vertex numbering.
pub(crate) struct EdgeGadgetLayout {
    pub p2: usize,
    pub q2: usize,
    pub p: usize,
    pub q: usize,
}

pub(crate) fn edge_gadget_layout(k: usize) -> EdgeGadgetLayout {
    let base = 2 * (k - 1);
    EdgeGadgetLayout { p2: base, q2: base + 1, p: base + 2, q: base + 3 }
}

/// Line gadget `G'_k`: `k` edge gadgets, copy 0 plus copies `1..k-1`, with
/// `p_1..p_{k-1}` merged into `w`, `q, q_1, q_2, q_3` into `u`,
/// `p, q_4..q_{k-1}` into `v`, and a pendant `t` on `w`. Terminals `p'` and
/// `q'` are those of copy 0. Parameters `k` in `5..7` are generated but
/// flagged non-canonical.
pub fn gadget_line(k: u32) -> Result<GadgetArtifact> {
    Ok(line_gadget_parts(k)?.0)
}

/// [`gadget_line`] plus, for each edge-gadget copy, the position of every
/// vertex of [`edge_gadget_line`]'s numbering.
pub(crate) fn line_gadget_parts(k: u32) -> Result<(GadgetArtifact, Vec<Vec<usize>>)> {
    require_k(k, 5, "line gadget")?;
    let ku = k as usize;
    let size = 2 * ku + 2;
    let layout = edge_gadget_layout(ku);
    let copy = edge_gadget_graph(ku, false);
    let mut b = Builder::default();
    let mut offsets = Vec::new();
    for _ in 0..ku {
        offsets.push(b.attach(&copy, &[], "")[0]);
    }
    let at = |i: usize, local: usize| offsets[i] + local;
    let mut union = b.build();
    union.set_label(at(0, layout.p2), "p'");
    union.set_label(at(0, layout.q2), "q'");
    let w_group: Vec<usize> = (1..ku).map(|i| at(i, layout.p)).collect();
    let mut u_group = vec![at(0, layout.q)];
    u_group.extend((1..=3).map(|i| at(i, layout.q)));
    let mut v_group = vec![at(0, layout.p)];
    v_group.extend((4..ku).map(|i| at(i, layout.q)));
    let (merged, map) = identify_vertices(&union, &[w_group.clone(), u_group.clone(), v_group.clone()])?;
    let mut b = Builder::from_graph(&merged);
    let w = map[w_group[0]];
    let t = b.vertex(Some("t"));
    b.edge(w, t);
    b.labels[w] = Some("w".into());
    b.labels[map[u_group[0]]] = Some("u".into());
    b.labels[map[v_group[0]]] = Some("v".into());
    let g = b.build();
    debug_assert_eq!(g.order(), size * ku - (2 * ku - 3) + 1);
    let copies = offsets.iter().map(|&o| (0..size).map(|l| map[o + l]).collect()).collect();
    let params = GadgetParams { k: Some(k), ell: None, canonical: k >= 7 };
    Ok((GadgetArtifact::new("line", g, params), copies))
}

/// Attachments of `x_i` and `y_i` to the core `v_1..v_5` (1-based), frozen
/// to one fixed drawing.
const P9_ATTACH: [([usize; 2], [usize; 2]); 5] = [
    ([4, 5], [2, 3]),
    ([1, 5], [3, 4]),
    ([1, 2], [4, 5]),
    ([2, 3], [1, 5]),
    ([3, 4], [1, 2]),
];

/// The 35-vertex P9-free gadget: core clique `v_1..v_5`; for each `i`,
/// `x_i` and `y_i` on disjoint pairs of `K \ {v_i}` and both complete to a
/// private 4-clique `K^i`. Vertices: `v_1..v_5`, then `x_1, y_1, ..., x_5, y_5`,
/// then `K^1..K^5`. The reduction terminal is `v1`.
#[allow(non_snake_case)]
pub fn gadget_P9() -> GadgetArtifact {
    let mut b = Builder::default();
    let core: Vec<usize> = (1..=5).map(|i| b.vertex(Some(&format!("v{i}")))).collect();
    b.clique(&core);
    let mut pairs = Vec::new();
    for (xs, ys) in P9_ATTACH {
        let x = b.vertex(None);
        let y = b.vertex(None);
        for j in xs {
            b.edge(x, core[j - 1]);
        }
        for j in ys {
            b.edge(y, core[j - 1]);
        }
        pairs.push((x, y));
    }
    for (x, y) in pairs {
        let clique = b.vertices(4);
        b.clique(&clique);
        b.join(x, &clique);
        b.join(y, &clique);
    }
    let params = GadgetParams { k: Some(5), ell: Some(9), canonical: true };
    GadgetArtifact::new("P9", b.build(), params)
}

/// Name of the P9 gadget's attachment terminal.
pub const P9_TERMINAL: &str = "v1";

/// One gadget copy inside a composed graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetCopy {
    /// Position of every vertex of the gadget, by the gadget's own numbering.
    pub map: Vec<usize>,
    /// Gadget-level terminals.
    pub terminals: BTreeMap<String, usize>,
}

/// A composed graph with the location of its host vertices and gadgets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub graph: Graph,
    /// Host vertex `i` sits at `host[i]`.
    pub host: Vec<usize>,
    pub copies: Vec<GadgetCopy>,
    /// For edge replacement: the replaced edge of each copy, as `(p, q)`.
    pub replaced: Vec<(usize, usize)>,
}

fn copy_of(gadget: &GadgetArtifact, map: Vec<usize>) -> GadgetCopy {
    GadgetCopy { map, terminals: gadget.terminals.clone() }
}

/// `G*`: a copy of `G_k` hanging from every host vertex, its `u` identified
/// with that vertex. Host vertices keep their indices; copy `i` (for host
/// vertex `i`) follows, labelled `Gk{i}.<terminal>`.
#[allow(non_snake_case)]
pub fn reduce_append_Gk(g: &Graph, k: u32) -> Result<Reduction> {
    let gadget = gadget_Gk(k)?;
    g.require_connected()?;
    let u = gadget.terminal("u")?;
    let mut b = Builder::from_graph(g);
    let mut copies = Vec::new();
    for h in 0..g.order() {
        let map = b.attach(&gadget.graph, &[(u, h)], &format!("Gk{h}."));
        copies.push(copy_of(&gadget, map));
    }
    Ok(Reduction { graph: b.build(), host: (0..g.order()).collect(), copies, replaced: Vec::new() })
}

/// Edges of `G*` incident to a copy of `u`, `u'`, `v` or `v'`.
pub fn canonical_protected_edges(star: &Reduction) -> BTreeSet<(usize, usize)> {
    let mut special = BTreeSet::new();
    for copy in &star.copies {
        for name in ["u", "u'", "v", "v'"] {
            if let Some(&local) = copy.terminals.get(name) {
                special.insert(copy.map[local]);
            }
        }
    }
    star.graph
        .edges()
        .filter(|(a, b)| special.contains(a) || special.contains(b))
        .collect()
}

/// `G**`: every edge `pq` (`p < q`) of `gstar` outside `protected` is replaced
/// by a fresh `G⁵_k(p, q)` (`ell = 5`) or `G³_k(p, q)` (`ell = 3`).
pub fn reduce_replace_edges(
    gstar: &Graph,
    k: u32,
    ell: u32,
    protected: &BTreeSet<(usize, usize)>,
) -> Result<Reduction> {
    let gadget = match ell {
        5 => gadget_G5k(k)?,
        3 => gadget_G3k(k)?,
        _ => return Err(Error::InvalidParameter(format!("ell must be 3 or 5, got {ell}"))),
    };
    let (gp, gq) = (gadget.terminal("p")?, gadget.terminal("q")?);
    let normalized: BTreeSet<(usize, usize)> = protected.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    let (kept, replaced): (Vec<_>, Vec<_>) = gstar.edges().partition(|e| normalized.contains(e));
    let mut b = Builder { edges: kept, labels: gstar.labels().to_vec() };
    let mut copies = Vec::new();
    for (i, &(p, q)) in replaced.iter().enumerate() {
        let map = b.attach(&gadget.graph, &[(gp, p), (gq, q)], &format!("E{i}."));
        copies.push(copy_of(&gadget, map));
    }
    Ok(Reduction { graph: b.build(), host: (0..gstar.order()).collect(), copies, replaced })
}

/// `G**` for `ell` in `{3, 5}` through the canonical protected-edge set.
pub fn reduce_cycle(g: &Graph, k: u32, ell: u32) -> Result<(Reduction, Reduction)> {
    let star = reduce_append_Gk(g, k)?;
    let protected = canonical_protected_edges(&star);
    let double = reduce_replace_edges(&star.graph, k, ell, &protected)?;
    Ok((star, double))
}

/// Cubic-graph reduction: `k - 3` line gadgets hang from every host vertex,
/// each through its `t`.
pub fn reduce_line(g: &Graph, k: u32) -> Result<Reduction> {
    require_k(k, 7, "line reduction")?;
    g.require_connected()?;
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) != 3) {
        return Err(Error::Precondition(format!("vertex {v} has degree {}, not 3", g.degree(v))));
    }
    if contains_induced(g, &Graph::complete(3)).is_some() {
        return Err(Error::Precondition("host contains a triangle".into()));
    }
    let gadget = gadget_line(k)?;
    let t = gadget.terminal("t")?;
    let mut b = Builder::from_graph(g);
    let mut copies = Vec::new();
    for h in 0..g.order() {
        for j in 0..k as usize - 3 {
            let map = b.attach(&gadget.graph, &[(t, h)], &format!("L{h}.{j}."));
            copies.push(copy_of(&gadget, map));
        }
    }
    Ok(Reduction { graph: b.build(), host: (0..g.order()).collect(), copies, replaced: Vec::new() })
}

/// `G'`: the P9 gadget glued to `g` by identifying its terminal `v1` with the
/// universal vertex `u`.
pub fn reduce_p9(g: &Graph, u: usize) -> Result<Reduction> {
    g.check_vertex(u)?;
    if g.degree(u) + 1 != g.order() {
        return Err(Error::Precondition(format!("vertex {u} is not universal")));
    }
    let gadget = gadget_P9();
    let v = gadget.terminal(P9_TERMINAL)?;
    let mut b = Builder::from_graph(g);
    let map = b.attach(&gadget.graph, &[(v, u)], "H.");
    let copies = vec![copy_of(&gadget, map)];
    Ok(Reduction { graph: b.build(), host: (0..g.order()).collect(), copies, replaced: Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chromatic_number;

    #[test]
    fn gk_counts() {
        for k in 3..=5 {
            let a = gadget_Gk(k).unwrap();
            let k = k as usize;
            assert_eq!(a.graph.order(), 3 * k + 4);
            assert_eq!(a.graph.size(), 3 * k * (k - 1) / 2 + 6 * k);
            assert_eq!(a.terminals.len(), 5);
        }
        assert!(gadget_Gk(2).is_err());
        let g3 = gadget_Gk(3).unwrap();
        assert_eq!(chromatic_number(&g3.graph).value, 4);
    }

    #[test]
    fn g5_shape() {
        let a = gadget_G5k(3).unwrap();
        assert_eq!((a.graph.order(), a.graph.size()), (10, 21));
        assert_eq!(a.graph.clique_number(), 4);
        let (p, q) = (a.terminal("p").unwrap(), a.terminal("q").unwrap());
        let bfs = bfs_distance(&a.graph, p);
        assert_eq!(bfs[q], 4);
        assert!(contains_induced(&a.graph, &Graph::cycle(5)).is_none());
    }

    fn bfs_distance(g: &Graph, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; g.order()];
        dist[s] = 0;
        for v in g.bfs_order(s) {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                }
            }
        }
        dist
    }

    #[test]
    fn g3_shape() {
        assert_eq!(gadget_G3k(1).unwrap().graph, {
            let mut p = Graph::path(4);
            p.set_label(0, "p");
            p.set_label(3, "q");
            p
        });
        let a = gadget_G3k(2).unwrap();
        assert_eq!((a.graph.order(), a.graph.size()), (14, 24));
        assert_eq!((a.terminal("p").unwrap(), a.terminal("q").unwrap()), (0, 3));
        assert_eq!(gadget_G3k(3).unwrap().graph.order(), 44);
    }

    #[test]
    fn edge_gadget_shape() {
        for k in 3..=5 {
            let a = edge_gadget_line(k).unwrap();
            let k = k as usize;
            assert_eq!(a.graph.order(), 2 * k + 2);
            assert_eq!(a.graph.size(), k * k + 1);
            assert_eq!(a.graph.max_degree(), k);
        }
    }

    #[test]
    fn line_gadget_shape() {
        let a = gadget_line(7).unwrap();
        assert_eq!((a.graph.order(), a.graph.size()), (102, 351));
        let deg = |name: &str| a.graph.degree(a.terminal(name).unwrap());
        assert_eq!((deg("w"), deg("u"), deg("v"), deg("t")), (7, 4, 4, 1));
        assert!(a.params.canonical);
        assert!(!gadget_line(5).unwrap().params.canonical);
        assert!(gadget_line(4).is_err());
        assert!(contains_induced(&a.graph, &Graph::complete(3)).is_none());
    }

    #[test]
    fn p9_shape() {
        let a = gadget_P9();
        assert_eq!((a.graph.order(), a.graph.size()), (35, 100));
        assert_eq!(a.graph.clique_number(), 5);
        assert_eq!(a.terminals.len(), 5);
        assert_eq!(a.terminal(P9_TERMINAL).unwrap(), 0);
        // x_i and y_i have no common core neighbor and avoid v_i
        for (i, (xs, ys)) in P9_ATTACH.iter().enumerate() {
            assert!(xs.iter().all(|j| !ys.contains(j) && *j != i + 1));
        }
    }

    #[test]
    fn reduction_counts() {
        let k4 = Graph::complete(4);
        let (star, double) = reduce_cycle(&k4, 4, 5).unwrap();
        assert_eq!(star.graph.order(), 64);
        assert_eq!(double.copies.len(), 72);
        assert_eq!(double.graph.order(), 784);
        assert!(double.graph.is_connected());
        let single = reduce_append_Gk(&Graph::path(1), 3).unwrap();
        assert_eq!(single.graph.order(), gadget_Gk(3).unwrap().graph.order());
        let k33 = Graph::complete_bipartite(3, 3);
        let line = reduce_line(&k33, 7).unwrap();
        assert_eq!((line.graph.order(), line.graph.size()), (2430, 8433));
        assert!((0..6).all(|v| line.graph.degree(v) == 7));
        assert!(reduce_line(&Graph::complete(4), 7).is_err());
        let p9 = reduce_p9(&Graph::complete(3), 1).unwrap();
        assert_eq!(p9.graph.order(), 3 + 34);
        assert!(reduce_p9(&Graph::path(3), 0).is_err());
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(gadget_line(7).unwrap(), gadget_line(7).unwrap());
        assert_eq!(gadget_P9(), gadget_P9());
    }
}
