//! Brute-force oracles written against a plain adjacency matrix, sharing no
//! code with the library's search engine.

#![allow(dead_code)]

use std::collections::HashSet;

use cgc_core::Graph;

pub struct Adj {
    pub n: usize,
    m: Vec<Vec<bool>>,
}

impl Adj {
    pub fn of(g: &Graph) -> Self {
        Self::from_edges(g.order(), g.edges())
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut m = vec![vec![false; n]; n];
        for (a, b) in edges {
            m[a][b] = true;
            m[b][a] = true;
        }
        Adj { n, m }
    }

    pub fn adj(&self, a: usize, b: usize) -> bool {
        self.m[a][b]
    }

    pub fn nbrs(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.m[v][u])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs(v).count()
    }

    pub fn is_proper(&self, colors: &[u32]) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| !self.m[a][b] || colors[a] != colors[b]))
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.m[a][b]))
    }
}

/// Least color missing among the already colored neighbors.
fn least_free(a: &Adj, colors: &[u32], v: usize) -> u32 {
    let used: HashSet<u32> = a.nbrs(v).map(|u| colors[u]).filter(|&c| c > 0).collect();
    (1..).find(|c| !used.contains(c)).unwrap()
}

/// Greedy coloring along `order`; the first vertex takes `seed` if given.
pub fn greedy(a: &Adj, order: &[usize], seed: Option<u32>) -> Vec<u32> {
    let mut colors = vec![0; a.n];
    for (i, &v) in order.iter().enumerate() {
        colors[v] = match (i, seed) {
            (0, Some(c)) => c,
            _ => least_free(a, &colors, v),
        };
    }
    colors
}

/// Every vertex after the first has an earlier neighbor.
pub fn is_connected_order(a: &Adj, order: &[usize]) -> bool {
    order.iter().enumerate().skip(1).all(|(i, &v)| order[..i].iter().any(|&u| a.adj(u, v)))
}

pub fn is_permutation(order: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    order.len() == n && order.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

pub fn num_colors(colors: &[u32]) -> u32 {
    colors.iter().copied().max().unwrap_or(0)
}

fn permutations(n: usize, visit: &mut impl FnMut(&[usize])) {
    fn rec(p: &mut Vec<usize>, used: &mut [bool], visit: &mut impl FnMut(&[usize])) {
        if p.len() == used.len() {
            visit(p);
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                p.push(v);
                rec(p, used, visit);
                p.pop();
                used[v] = false;
            }
        }
    }
    rec(&mut Vec::new(), &mut vec![false; n], visit);
}

/// Minimum color count over every connected ordering.
pub fn chi_c_by_orderings(a: &Adj) -> u32 {
    let mut best = u32::MAX;
    permutations(a.n, &mut |p| {
        if is_connected_order(a, p) {
            best = best.min(num_colors(&greedy(a, p, None)));
        }
    });
    best
}

/// Calls `visit` on every proper coloring with colors `1..=k`, up to renaming:
/// scanning vertices in index order, a new color is always the next unused one.
pub fn canonical_colorings(a: &Adj, k: u32, visit: &mut impl FnMut(&[u32])) {
    fn rec(a: &Adj, k: u32, v: usize, top: u32, c: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        if v == a.n {
            visit(c);
            return;
        }
        for col in 1..=(top + 1).min(k) {
            if (0..v).all(|u| !a.adj(u, v) || c[u] != col) {
                c[v] = col;
                rec(a, k, v + 1, top.max(col), c, visit);
            }
        }
        c[v] = 0;
    }
    rec(a, k, 0, 0, &mut vec![0; a.n], visit);
}

pub fn colorable(a: &Adj, k: u32) -> bool {
    struct Found;
    fn rec(a: &Adj, k: u32, v: usize, top: u32, c: &mut Vec<u32>) -> Result<(), Found> {
        if v == a.n {
            return Err(Found);
        }
        for col in 1..=(top + 1).min(k) {
            if (0..v).all(|u| !a.adj(u, v) || c[u] != col) {
                c[v] = col;
                rec(a, k, v + 1, top.max(col), c)?;
            }
        }
        c[v] = 0;
        Ok(())
    }
    rec(a, k, 0, 0, &mut vec![0; a.n]).is_err()
}

pub fn chi(a: &Adj) -> u32 {
    if a.n == 0 {
        return 0;
    }
    (1..).find(|&k| colorable(a, k)).unwrap()
}

/// Depth-first search over connected greedy orderings from `seed`, with at
/// most `k` colors, pruned by `viable` and accepted by `accept` once complete.
/// Partial colorings already explored are skipped.
pub fn seeded_cgc(
    a: &Adj,
    k: u32,
    seed: (usize, u32),
    viable: &dyn Fn(&[u32]) -> bool,
    accept: &dyn Fn(&[u32]) -> bool,
) -> Option<Vec<usize>> {
    fn rec(
        a: &Adj,
        k: u32,
        colors: &mut Vec<u32>,
        order: &mut Vec<usize>,
        seen: &mut HashSet<Vec<u32>>,
        viable: &dyn Fn(&[u32]) -> bool,
        accept: &dyn Fn(&[u32]) -> bool,
    ) -> bool {
        if order.len() == a.n {
            return accept(colors);
        }
        if !seen.insert(colors.clone()) {
            return false;
        }
        for v in 0..a.n {
            if colors[v] != 0 || !a.nbrs(v).any(|u| colors[u] != 0) {
                continue;
            }
            let c = least_free(a, colors, v);
            if c > k {
                continue;
            }
            colors[v] = c;
            order.push(v);
            if viable(colors) && rec(a, k, colors, order, seen, viable, accept) {
                return true;
            }
            order.pop();
            colors[v] = 0;
        }
        false
    }
    let mut colors = vec![0; a.n];
    colors[seed.0] = seed.1;
    let mut order = vec![seed.0];
    if !viable(&colors) {
        return None;
    }
    rec(a, k, &mut colors, &mut order, &mut HashSet::new(), viable, accept).then_some(order)
}

/// Line graph over `edges` in the given order.
pub fn line_adj(edges: &[(usize, usize)]) -> Adj {
    let mut pairs = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                pairs.push((i, j));
            }
        }
    }
    Adj::from_edges(edges.len(), pairs)
}

/// Replays an edge sequence as a greedy edge coloring of `g`. Returns the
/// coloring by edge if every edge of `g` appears once, each edge after the
/// first touches an earlier one, and every stored color is the greedy one.
pub fn replay_edge_run(g: &Graph, seq: &[((usize, usize), u32)], seed: bool) -> Option<Vec<((usize, usize), u32)>> {
    let edges: Vec<(usize, usize)> = seq.iter().map(|&(e, _)| e).collect();
    let mut all: Vec<(usize, usize)> = g.edges().collect();
    let mut sorted = edges.clone();
    all.sort_unstable();
    sorted.sort_unstable();
    if all != sorted {
        return None;
    }
    let lg = line_adj(&edges);
    let order: Vec<usize> = (0..edges.len()).collect();
    if !is_connected_order(&lg, &order) {
        return None;
    }
    let colors = greedy(&lg, &order, seed.then(|| seq[0].1));
    if colors.iter().zip(seq).any(|(&c, &(_, s))| c != s) {
        return None;
    }
    Some(seq.to_vec())
}

/// Longest induced path (vertex count) starting at `v`.
pub fn longest_induced_path_from(a: &Adj, v: usize) -> usize {
    fn rec(a: &Adj, path: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(path.len());
        let last = *path.last().unwrap();
        for x in a.nbrs(last).collect::<Vec<_>>() {
            let inner = &path[..path.len() - 1];
            if path.contains(&x) || inner.iter().any(|&p| a.adj(p, x)) {
                continue;
            }
            path.push(x);
            rec(a, path, best);
            path.pop();
        }
    }
    let mut best = 0;
    rec(a, &mut vec![v], &mut best);
    best
}

pub fn longest_induced_path(a: &Adj) -> usize {
    (0..a.n).map(|v| longest_induced_path_from(a, v)).max().unwrap_or(0)
}

/// Whether `pattern` occurs as an induced subgraph, by trying every
/// injection of its vertices.
pub fn has_induced(host: &Adj, pattern: &Adj) -> bool {
    fn rec(host: &Adj, pattern: &Adj, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == pattern.n {
            return true;
        }
        for x in 0..host.n {
            if map.contains(&x) {
                continue;
            }
            if (0..i).all(|j| pattern.adj(j, i) == host.adj(map[j], x)) {
                map.push(x);
                if rec(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    rec(host, pattern, &mut Vec::new())
}
