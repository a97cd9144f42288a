//! Edge-list text: a header line `n m`, then `m` lines `u v` with 0-based
//! endpoints. `#` starts a comment; blank lines are ignored. A stream may hold
//! several graphs back to back.

use std::io::BufRead;

use super::{Graph, GraphError};

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize), GraphError> {
    let bad = |msg: &str| GraphError::EdgeList { line: line_no, msg: msg.to_string() };
    let mut it = line.split_whitespace();
    let a = it.next().ok_or_else(|| bad("expected two integers"))?;
    let b = it.next().ok_or_else(|| bad("expected two integers"))?;
    if it.next().is_some() {
        return Err(bad("trailing tokens"));
    }
    let a = a.parse().map_err(|_| bad("not a non-negative integer"))?;
    let b = b.parse().map_err(|_| bad("not a non-negative integer"))?;
    Ok((a, b))
}

/// Streams edge-list records. Items carry the line number of the header.
pub struct EdgeListReader<R> {
    lines: std::iter::Enumerate<std::io::Lines<R>>,
}

impl<R: BufRead> EdgeListReader<R> {
    pub fn new(inner: R) -> Self {
        Self { lines: inner.lines().enumerate() }
    }

    /// Next non-blank line with comments stripped.
    fn content_line(&mut self) -> Option<(usize, Result<String, GraphError>)> {
        for (i, line) in self.lines.by_ref() {
            let line_no = i + 1;
            let line = match line {
                Ok(l) => l,
                Err(e) => {
                    return Some((line_no, Err(GraphError::EdgeList { line: line_no, msg: e.to_string() })))
                }
            };
            let body = line.split('#').next().unwrap_or("").trim();
            if !body.is_empty() {
                return Some((line_no, Ok(body.to_string())));
            }
        }
        None
    }

    fn read_record(&mut self, header_no: usize, header: &str) -> Result<Graph, GraphError> {
        let (n, m) = parse_pair(header, header_no)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line_no, line) = self.content_line().ok_or(GraphError::EdgeList {
                line: header_no,
                msg: format!("expected {m} edges, input ended after {}", edges.len()),
            })?;
            edges.push(parse_pair(&line?, line_no)?);
        }
        Graph::from_edge_list(n, &edges).map_err(|e| GraphError::EdgeList { line: header_no, msg: e.to_string() })
    }
}

impl<R: BufRead> Iterator for EdgeListReader<R> {
    type Item = (usize, Result<Graph, GraphError>);

    fn next(&mut self) -> Option<Self::Item> {
        let (header_no, header) = self.content_line()?;
        Some((header_no, header.and_then(|h| self.read_record(header_no, &h))))
    }
}

/// Parses text holding exactly one edge-list graph.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut reader = EdgeListReader::new(text.as_bytes());
    let (_, g) = reader.next().ok_or(GraphError::EdgeList { line: 0, msg: "no graph".into() })?;
    let g = g?;
    if let Some((line, _)) = reader.content_line() {
        return Err(GraphError::EdgeList { line, msg: "unexpected content after graph".into() });
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.q());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
