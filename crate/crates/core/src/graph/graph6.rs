//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per printable byte
//! (offset 63).

use std::io::BufRead;

use super::{Graph, GraphError, VertexSet};

const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

fn sixbits(b: u8) -> Result<u8, GraphError> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(err(format!("byte {b} outside 63..=126")))
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let take = |bytes: &[u8], k: usize| -> Result<usize, GraphError> {
        if bytes.len() < k {
            return Err(err("truncated size prefix"));
        }
        bytes[..k].iter().try_fold(0usize, |acc, &b| Ok(acc << 6 | sixbits(b)? as usize))
    };
    match bytes {
        [] => Err(err("empty record")),
        [126, 126, rest @ ..] => {
            let n = take(rest, 6)?;
            if n <= 258047 {
                return Err(err("non-canonical 8-byte size prefix"));
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            let n = take(rest, 3)?;
            if n <= 62 {
                return Err(err("non-canonical 4-byte size prefix"));
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok((sixbits(*b)? as usize, rest)),
    }
}

/// Parses one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let (n, body) = decode_size(line.as_bytes())?;
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if body.len() != want {
        return Err(err(format!("expected {want} adjacency bytes for n = {n}, found {}", body.len())));
    }
    let mut adj = vec![VertexSet::new(); n];
    let mut q = 0;
    let (mut i, mut j) = (0, 1);
    for (k, &b) in body.iter().enumerate() {
        let x = sixbits(b)?;
        for shift in (0..6).rev() {
            let idx = k * 6 + (5 - shift);
            let bit = x >> shift & 1 == 1;
            if idx >= bits {
                if bit {
                    return Err(err("nonzero padding bits"));
                }
                continue;
            }
            if bit {
                adj[i].insert(j);
                adj[j].insert(i);
                q += 1;
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(Graph { adj, q })
}

/// Canonical graph6 record (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Streams graph6 records from a reader, one per non-empty line. Each item
/// carries the 1-based line number.
pub struct Graph6Reader<R> {
    inner: R,
    line_no: usize,
    buf: String,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(inner: R) -> Self {
        Self { inner, line_no: 0, buf: String::new() }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = (usize, Result<Graph, GraphError>);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.inner.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => {
                    self.line_no += 1;
                    return Some((self.line_no, Err(err(e.to_string()))));
                }
            }
            self.line_no += 1;
            let rec = self.buf.trim();
            if rec.is_empty() {
                continue;
            }
            return Some((self.line_no, parse_graph6(rec)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_standard, GraphKind};
    use crate::rng::{random_graph, seeded};

    /// Independent decoder: expand every byte into a bit string, then walk
    /// the upper triangle column by column.
    fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let bytes = s.as_bytes();
        let n = (bytes[0] - 63) as usize;
        let bits: String = bytes[1..].iter().map(|b| format!("{:06b}", b - 63)).collect();
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 0..n {
            for i in 0..j {
                if bits.as_bytes()[k] == b'1' {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        (n, edges)
    }

    #[test]
    fn decode_examples() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.n(), k4.q()), (4, 6));
        assert_eq!(k4, generate_standard(GraphKind::Complete(4)).unwrap());
        let p2 = parse_graph6("A_").unwrap();
        assert_eq!((p2.n(), p2.q()), (2, 1));
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.q()), (1, 0));
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), p2);

        let (n, edges) = reference_decode("C~");
        assert_eq!((n, edges.len()), (4, 6));
        assert_eq!(reference_decode("A_"), (2, vec![(0, 1)]));
    }

    #[test]
    fn encode_examples() {
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(emit_graph6(&Graph::from_edge_list(2, &[(0, 1)]).unwrap()), "A_");
        // Five vertices, edges 02 04 13 34.
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
    }

    #[test]
    fn decode_errors() {
        assert!(parse_graph6("").is_err());
        // bad character
        assert!(parse_graph6("A ").is_err());
        // wrong body length
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C").is_err());
        // P_2 uses one bit; the five padding bits must be zero
        assert!(parse_graph6("A`").is_err());
        // long prefix for a small n
        assert!(parse_graph6("~??A_").is_err());
        assert!(parse_graph6("~?").is_err());
    }

    #[test]
    fn round_trip_random_against_reference() {
        let mut rng = seeded(6);
        for i in 0..100 {
            let n = i % 13;
            let g = random_graph(n, 0.4, &mut rng);
            let s = emit_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g);
            let (rn, redges) = reference_decode(&s);
            assert_eq!(rn, n);
            let mut ours: Vec<_> = g.edges().collect();
            ours.sort_by_key(|&(u, v)| (v, u));
            assert_eq!(redges, ours);
        }
    }

    #[test]
    fn large_size_prefix() {
        let g = generate_standard(GraphKind::Path(70)).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn reader_skips_blank_lines() {
        let text = "A_\n\n@\nbad\n";
        let recs: Vec<_> = Graph6Reader::new(text.as_bytes()).collect();
        assert_eq!(recs.len(), 3);
        assert_eq!(recs[0].0, 1);
        assert_eq!(recs[1].0, 3);
        assert!(recs[2].1.is_err());
    }
}
