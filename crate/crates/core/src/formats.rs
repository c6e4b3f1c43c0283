//! Graph file formats: graph6, DIMACS `.col` and a plain edge list.
//!
//! Vertex labels travel as `c terminal <name> <vertex>` comments in DIMACS
//! (1-based, like its edges) and as a sidecar of `terminal <name> <vertex>`
//! lines (0-based) for the other two formats.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use petgraph::graph6::{from_graph6_representation, ToGraph6};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Graph6,
    Dimacs,
    EdgeList,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::Dimacs => "dimacs",
            Format::EdgeList => "edgelist",
        })
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "dimacs" | "col" => Ok(Format::Dimacs),
            "edgelist" | "edges" | "el" => Ok(Format::EdgeList),
            _ => Err(Error::InvalidParameter(format!("unknown format {s}"))),
        }
    }
}

impl Format {
    /// Guess from content: DIMACS has `p`/`c`/`e` lines, graph6 is a single
    /// printable token, anything else is an edge list.
    pub fn detect(text: &str) -> Format {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        match lines.next() {
            Some(l) if l.starts_with("c ") || l.starts_with("p ") || l == "c" => Format::Dimacs,
            Some(l) if l.starts_with(">>graph6<<") => Format::Graph6,
            Some(l) if !l.contains(char::is_whitespace) && lines.next().is_none() => {
                if l.chars().all(|c| c.is_ascii_digit()) {
                    Format::EdgeList
                } else {
                    Format::Graph6
                }
            }
            _ => Format::EdgeList,
        }
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => write_graph6(g),
        Format::Dimacs => write_dimacs(g),
        Format::EdgeList => write_edge_list(g),
    }
}

pub fn read_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => read_graph6(text),
        Format::Dimacs => read_dimacs(text),
        Format::EdgeList => read_edge_list(text),
    }
}

/// graph6 line with a trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let mut pg = petgraph::Graph::<(), (), petgraph::Undirected>::with_capacity(g.order(), g.size());
    let nodes: Vec<_> = (0..g.order()).map(|_| pg.add_node(())).collect();
    for (a, b) in g.edges() {
        pg.add_edge(nodes[a], nodes[b], ());
    }
    let mut s = pg.graph6_string();
    s.push('\n');
    s
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Reads the first graph6 line, with or without the `>>graph6<<` header.
pub fn read_graph6(text: &str) -> Result<Graph> {
    let (line_no, line) = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| parse_error(1, "empty input"))?;
    let body = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = body.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(parse_error(line_no, format!("byte {pos} is not a graph6 character")));
    }
    let (n, header) = match bytes {
        [] => return Err(parse_error(line_no, "empty graph6 string")),
        [126, 126, ..] => return Err(parse_error(line_no, "graphs above 258047 vertices are not supported")),
        [126, rest @ ..] if rest.len() >= 3 => {
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [126, ..] => return Err(parse_error(line_no, "truncated size header")),
        [b, ..] => ((b - 63) as usize, 1),
    };
    let expected = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() - header != expected {
        return Err(parse_error(
            line_no,
            format!("{n} vertices need {expected} adjacency bytes, found {}", bytes.len() - header),
        ));
    }
    let (order, edges) = from_graph6_representation::<u32>(body.to_string());
    let edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a as usize, b as usize)).collect();
    Graph::new(order, &edges)
}

/// DIMACS with terminal comments, `p edge n m` and 1-based `e u v` lines.
pub fn write_dimacs(g: &Graph) -> String {
    let mut s = String::new();
    for (v, label) in g.labels().iter().enumerate() {
        if let Some(l) = label {
            let _ = writeln!(s, "c terminal {l} {}", v + 1);
        }
    }
    let _ = writeln!(s, "p edge {} {}", g.order(), g.size());
    for (a, b) in g.edges() {
        let _ = writeln!(s, "e {} {}", a + 1, b + 1);
    }
    s
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let t = token.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    t.parse().map_err(|_| parse_error(line, format!("{what} `{t}` is not a non-negative integer")))
}

fn one_based(token: Option<&str>, line: usize, n: usize) -> Result<usize> {
    let v = number(token, line, "vertex")?;
    if v == 0 || v > n {
        return Err(parse_error(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut declared = 0;
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, String, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None => {}
            Some("c") => {
                if tok.next() == Some("terminal") {
                    let name = tok.next().ok_or_else(|| parse_error(line, "terminal without name"))?;
                    labels.push((line, name.to_string(), number(tok.next(), line, "vertex")?));
                }
            }
            Some("p") => {
                if n.is_some() {
                    return Err(parse_error(line, "second problem line"));
                }
                match tok.next() {
                    Some("edge" | "col") => {}
                    _ => return Err(parse_error(line, "expected `p edge n m`")),
                }
                n = Some(number(tok.next(), line, "vertex count")?);
                declared = number(tok.next(), line, "edge count")?;
            }
            Some("e") => {
                let n = n.ok_or_else(|| parse_error(line, "edge before problem line"))?;
                let a = one_based(tok.next(), line, n)?;
                let b = one_based(tok.next(), line, n)?;
                if a == b {
                    return Err(parse_error(line, "self-loop"));
                }
                edges.push((a, b));
            }
            Some(other) => return Err(parse_error(line, format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| parse_error(text.lines().count().max(1), "missing problem line"))?;
    if edges.len() != declared {
        return Err(parse_error(0, format!("header declares {declared} edges, found {}", edges.len())));
    }
    let mut g = Graph::new(n, &edges)?;
    for (line, name, v) in labels {
        if v == 0 || v > n {
            return Err(parse_error(line, format!("terminal vertex {v} outside 1..={n}")));
        }
        g.set_label(v - 1, name);
    }
    Ok(g)
}

/// `n m` followed by 0-based `u v` lines.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (a, b) in g.edges() {
        let _ = writeln!(s, "{a} {b}");
    }
    s
}

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse_error(1, "empty input"))?;
    let mut tok = header.split_whitespace();
    let n = number(tok.next(), hl, "vertex count")?;
    let m = number(tok.next(), hl, "edge count")?;
    if tok.next().is_some() {
        return Err(parse_error(hl, "header must be `n m`"));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let mut tok = l.split_whitespace();
        let a = number(tok.next(), line, "vertex")?;
        let b = number(tok.next(), line, "vertex")?;
        if tok.next().is_some() {
            return Err(parse_error(line, "edge lines hold two vertices"));
        }
        if a >= n || b >= n {
            return Err(parse_error(line, format!("vertex outside 0..{n}")));
        }
        if a == b {
            return Err(parse_error(line, "self-loop"));
        }
        edges.push((a, b));
    }
    if edges.len() != m {
        return Err(parse_error(hl, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

/// Label sidecar: `terminal <name> <vertex>` per labelled vertex, 0-based.
pub fn write_sidecar(g: &Graph) -> String {
    let mut s = String::new();
    for (v, label) in g.labels().iter().enumerate() {
        if let Some(l) = label {
            let _ = writeln!(s, "terminal {l} {v}");
        }
    }
    s
}

pub fn apply_sidecar(g: &mut Graph, text: &str) -> Result<()> {
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None => {}
            Some("terminal") => {
                let name = tok.next().ok_or_else(|| parse_error(line, "terminal without name"))?;
                let v = number(tok.next(), line, "vertex")?;
                if v >= g.order() {
                    return Err(parse_error(line, format!("vertex {v} outside 0..{}", g.order())));
                }
                g.set_label(v, name);
            }
            Some(other) => return Err(parse_error(line, format!("unknown sidecar entry `{other}`"))),
        }
    }
    Ok(())
}
