//! PACE-style text formats for graphs, tree decompositions and matrices.
//!
//! Graphs: `p tw <n> <m>` (undirected) or `p dgr <n> <m>` (directed) followed by
//! `m` lines `u v`; repeated lines are parallel edges. Decompositions: `s td <bags>
//! <width+1> <n>`, bag lines `b <i> <v...>`, then tree edges `<i> <j>`. Matrices:
//! `<n>` then `n` rows of integers. Lines starting with `c` are comments; all ids
//! in files are 1-based.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::decomposition::TreeDecomposition;
use crate::graph::{DirectedMultigraph, UnderlyingGraph, UndirectedMultigraph};
use crate::matrix::SquareIntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn parse_num<T: FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T, ParseError> {
    match tok {
        Some(t) => t.parse().or_else(|_| err(line, format!("invalid {what} '{t}'"))),
        None => err(line, format!("missing {what}")),
    }
}

fn parse_vertex(line: usize, tok: Option<&str>, n: usize) -> Result<usize, ParseError> {
    let v: usize = parse_num(line, tok, "vertex")?;
    if v == 0 || v > n {
        return err(line, format!("vertex {v} out of range 1..={n}"));
    }
    Ok(v - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFile {
    Undirected(UndirectedMultigraph),
    Directed(DirectedMultigraph),
}

impl GraphFile {
    pub fn vertex_count(&self) -> usize {
        match self {
            GraphFile::Undirected(g) => g.vertex_count(),
            GraphFile::Directed(d) => d.vertex_count(),
        }
    }

    pub fn underlying(&self) -> &dyn UnderlyingGraph {
        match self {
            GraphFile::Undirected(g) => g,
            GraphFile::Directed(d) => d,
        }
    }
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut lines = content_lines(text);
    let Some((ln, header)) = lines.next() else {
        return err(0, "empty graph file");
    };
    let mut toks = header.split_whitespace();
    if toks.next() != Some("p") {
        return err(ln, "expected header 'p tw <n> <m>' or 'p dgr <n> <m>'");
    }
    let directed = match toks.next() {
        Some("tw") => false,
        Some("dgr") => true,
        other => return err(ln, format!("unknown graph kind {other:?}")),
    };
    let n: usize = parse_num(ln, toks.next(), "vertex count")?;
    let m: usize = parse_num(ln, toks.next(), "edge count")?;
    let mut pairs = Vec::with_capacity(m);
    for (ln, line) in lines {
        let mut toks = line.split_whitespace();
        let u = parse_vertex(ln, toks.next(), n)?;
        let v = parse_vertex(ln, toks.next(), n)?;
        if toks.next().is_some() {
            return err(ln, "trailing tokens after edge");
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return err(ln, format!("header announces {m} edges, found {}", pairs.len()));
    }
    Ok(if directed {
        GraphFile::Directed(DirectedMultigraph::new(n, pairs).expect("range checked"))
    } else {
        GraphFile::Undirected(UndirectedMultigraph::new(n, pairs).expect("range checked"))
    })
}

fn write_pairs(kind: &str, n: usize, pairs: &[(usize, usize)]) -> String {
    let mut out = format!("p {kind} {n} {}\n", pairs.len());
    for &(u, v) in pairs {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

pub fn write_undirected(g: &UndirectedMultigraph) -> String {
    write_pairs("tw", g.vertex_count(), g.edges())
}

pub fn write_directed(d: &DirectedMultigraph) -> String {
    write_pairs("dgr", d.vertex_count(), d.arcs())
}

/// Parses a `.td` file; the returned count is the `n` announced in the header.
pub fn parse_tree_decomposition(text: &str) -> Result<(TreeDecomposition, usize), ParseError> {
    let mut lines = content_lines(text);
    let Some((ln, header)) = lines.next() else {
        return err(0, "empty decomposition file");
    };
    let mut toks = header.split_whitespace();
    if toks.next() != Some("s") || toks.next() != Some("td") {
        return err(ln, "expected header 's td <bags> <width+1> <n>'");
    }
    let k: usize = parse_num(ln, toks.next(), "bag count")?;
    let max_bag: usize = parse_num(ln, toks.next(), "bag size")?;
    let n: usize = parse_num(ln, toks.next(), "vertex count")?;
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; k];
    let mut edges = Vec::new();
    for (ln, line) in lines {
        let mut toks = line.split_whitespace().peekable();
        if toks.peek() == Some(&"b") {
            toks.next();
            let i: usize = parse_num(ln, toks.next(), "bag index")?;
            if i == 0 || i > k {
                return err(ln, format!("bag index {i} out of range 1..={k}"));
            }
            if bags[i - 1].is_some() {
                return err(ln, format!("bag {i} listed twice"));
            }
            let mut bag = Vec::new();
            while toks.peek().is_some() {
                bag.push(parse_vertex(ln, toks.next(), n)?);
            }
            if bag.len() > max_bag {
                return err(ln, format!("bag {i} has {} vertices, header allows {max_bag}", bag.len()));
            }
            bags[i - 1] = Some(bag);
        } else {
            let i: usize = parse_num(ln, toks.next(), "bag index")?;
            let j: usize = parse_num(ln, toks.next(), "bag index")?;
            if i == 0 || j == 0 || i > k || j > k {
                return err(ln, format!("tree edge {i} {j} out of range 1..={k}"));
            }
            edges.push((i - 1, j - 1));
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or(ParseError { line: 0, message: format!("bag {} missing", i + 1) }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((TreeDecomposition::new(bags, edges), n))
}

pub fn write_tree_decomposition(t: &TreeDecomposition, n: usize) -> String {
    let max_bag = t.bags().iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", t.bags().len(), max_bag, n);
    for (i, bag) in t.bags().iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(a, b) in t.tree_edges() {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<SquareIntMatrix, ParseError> {
    let mut lines = content_lines(text);
    let Some((ln, header)) = lines.next() else {
        return err(0, "empty matrix file");
    };
    let n: usize = parse_num(ln, Some(header), "dimension")?;
    let mut rows = Vec::with_capacity(n);
    for (ln, line) in lines {
        let row = line
            .split_whitespace()
            .map(|t| parse_num::<BigInt>(ln, Some(t), "entry"))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return err(ln, format!("row has {} entries, expected {n}", row.len()));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return err(ln, format!("expected {n} rows, found {}", rows.len()));
    }
    Ok(SquareIntMatrix::from_rows(rows).expect("rows checked"))
}

pub fn write_matrix(m: &SquareIntMatrix) -> String {
    m.to_string()
}
