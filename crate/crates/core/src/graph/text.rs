//! Plain-text graph format.
//!
//! ```text
//! root 1        # optional, rooted graphs only
//! weights 3 1 1 # optional, weighted graphs only
//! 3 2
//! 0 1
//! 1 2
//! ```
//!
//! `#` starts a comment and `;` may replace newlines, so `root 1; 3 2; 0 1; 1 2`
//! is the same graph on one line. Serialization lists edges in canonical
//! order, so equal graphs serialize identically.

use std::fmt::Write;

use super::{Graph, RootedGraph, WeightedGraph};
use crate::error::{Error, Result};

/// A parsed graph file before it is committed to a particular graph type.
///
/// Loops and repeated edges are kept here so the same parser serves
/// [`WeightedGraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub root: Option<usize>,
    pub weights: Option<Vec<u32>>,
}

/// A strict order relation listed as pairs `u v` meaning `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetRecord {
    pub n: usize,
    pub relations: Vec<(usize, usize)>,
}

fn numbers(line: usize, words: &[&str]) -> Result<Vec<usize>> {
    words
        .iter()
        .map(|w| {
            w.parse::<usize>().map_err(|_| {
                Error::parse(line, format!("expected a nonnegative integer, found {w:?}"))
            })
        })
        .collect()
}

impl GraphRecord {
    pub fn parse(text: &str) -> Result<Self> {
        let mut root = None;
        let mut weights = None;
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let lines = text
            .split(['\n', ';'])
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        for (line, content) in lines {
            let words: Vec<&str> = content.split_whitespace().collect();
            match words[0] {
                "root" => {
                    if header.is_some() || root.is_some() {
                        return Err(Error::parse(
                            line,
                            "\"root\" must precede the size line and appear once",
                        ));
                    }
                    let v = numbers(line, &words[1..])?;
                    if v.len() != 1 {
                        return Err(Error::parse(line, "expected \"root r\""));
                    }
                    root = Some(v[0]);
                }
                "weights" => {
                    if header.is_some() || weights.is_some() {
                        return Err(Error::parse(
                            line,
                            "\"weights\" must precede the size line and appear once",
                        ));
                    }
                    let w = numbers(line, &words[1..])?;
                    weights = Some(w.into_iter().map(|x| x as u32).collect::<Vec<_>>());
                }
                _ => {
                    let v = numbers(line, &words)?;
                    if v.len() != 2 {
                        return Err(Error::parse(
                            line,
                            format!("expected two integers, found {}", v.len()),
                        ));
                    }
                    match header {
                        None => header = Some((v[0], v[1])),
                        Some((n, m)) => {
                            if edges.len() == m {
                                return Err(Error::parse(
                                    line,
                                    format!("more than the declared {m} edges"),
                                ));
                            }
                            if v[0] >= n || v[1] >= n {
                                return Err(Error::parse(
                                    line,
                                    format!("vertex out of range for n = {n}"),
                                ));
                            }
                            edges.push((v[0], v[1]));
                        }
                    }
                }
            }
        }
        let (n, m) = header.ok_or_else(|| Error::parse(0, "missing \"n m\" line"))?;
        if edges.len() != m {
            return Err(Error::parse(
                0,
                format!("declared {m} edges, found {}", edges.len()),
            ));
        }
        if let Some(r) = root {
            if r >= n {
                return Err(Error::parse(
                    0,
                    format!("root {r} out of range for n = {n}"),
                ));
            }
        }
        if let Some(w) = &weights {
            if w.len() != n {
                return Err(Error::parse(
                    0,
                    format!("{} weights for {n} vertices", w.len()),
                ));
            }
        }
        Ok(GraphRecord {
            n,
            edges,
            root,
            weights,
        })
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }

    /// The rooted graph; `default_root` is used when no header is present.
    pub fn rooted(&self, default_root: Option<usize>) -> Result<RootedGraph> {
        let root = self
            .root
            .or(default_root)
            .ok_or_else(|| Error::Invalid("a rooted graph needs a \"root r\" line".into()))?;
        RootedGraph::new(self.graph()?, root)
    }

    /// The weighted multigraph; weights default to 1.
    pub fn weighted(&self) -> Result<WeightedGraph> {
        let w = self.weights.clone().unwrap_or_else(|| vec![1; self.n]);
        WeightedGraph::new(self.n, self.edges.clone(), w)
    }
}

impl PosetRecord {
    pub fn parse(text: &str) -> Result<Self> {
        let g = GraphRecord::parse(text)?;
        Ok(PosetRecord {
            n: g.n,
            relations: g.edges,
        })
    }

    pub fn to_line(&self) -> String {
        let mut s = String::new();
        write_edges(&mut s, self.n, &self.relations, "; ");
        s
    }
}

pub(crate) fn write_edges(out: &mut String, n: usize, edges: &[(usize, usize)], sep: &str) {
    write!(out, "{n} {}", edges.len()).unwrap();
    for (u, v) in edges {
        write!(out, "{sep}{u} {v}").unwrap();
    }
}

impl Graph {
    /// Multi-line text form, newline terminated.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        write_edges(&mut s, self.n(), &self.edges(), "\n");
        s.push('\n');
        s
    }

    /// Single-line text form with `;` separators.
    pub fn to_line(&self) -> String {
        let mut s = String::new();
        write_edges(&mut s, self.n(), &self.edges(), "; ");
        s
    }

    pub fn parse(text: &str) -> Result<Graph> {
        GraphRecord::parse(text)?.graph()
    }
}

impl RootedGraph {
    pub fn to_text(&self) -> String {
        format!("root {}\n{}", self.root(), self.graph().to_text())
    }

    pub fn to_line(&self) -> String {
        format!("root {}; {}", self.root(), self.graph().to_line())
    }

    pub fn parse(text: &str) -> Result<RootedGraph> {
        GraphRecord::parse(text)?.rooted(None)
    }
}

impl WeightedGraph {
    pub fn to_text(&self) -> String {
        let w: Vec<String> = self.weights().iter().map(u32::to_string).collect();
        let mut s = format!("weights {}\n", w.join(" "));
        write_edges(&mut s, self.n(), self.edges(), "\n");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_rooted() {
        let g = RootedGraph::new(Graph::path(3), 1).unwrap();
        let text = g.to_text();
        assert_eq!(text, "root 1\n3 2\n0 1\n1 2\n");
        assert_eq!(RootedGraph::parse(&text).unwrap(), g);
        assert_eq!(g.to_line(), "root 1; 3 2; 0 1; 1 2");
        assert_eq!(RootedGraph::parse(&g.to_line()).unwrap(), g);
    }

    #[test]
    fn serialization_is_canonical() {
        let a = Graph::from_edges(3, &[(2, 1), (1, 0)]).unwrap();
        let b = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(a.to_text(), b.to_text());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = Graph::parse("# a path\n\n3 2\n0 1 # first\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn errors_carry_line_numbers() {
        match Graph::parse("3 2\n0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match Graph::parse("3 2\n0 1\n0 3\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(Graph::parse("3 2\n0 1\n").is_err());
        assert!(Graph::parse("").is_err());
        assert!(RootedGraph::parse("3 0").is_err());
    }

    #[test]
    fn weighted_header() {
        let rec = GraphRecord::parse("weights 3 1 1\n3 2\n0 1\n1 2").unwrap();
        let w = rec.weighted().unwrap();
        assert_eq!(w.weights(), &[3, 1, 1]);
        assert_eq!(
            GraphRecord::parse(&w.to_text())
                .unwrap()
                .weighted()
                .unwrap(),
            w
        );
        assert!(GraphRecord::parse("weights 1 1\n3 0").is_err());
    }
}
