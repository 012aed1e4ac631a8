//! graph6 text encoding: 6-bit big-endian groups offset by 63, edge bits in
//! upper-triangle column-major order (`(0,1),(0,2),(1,2),(0,3),...`).

use super::{Graph, GraphError, DEFAULT_CAPACITY};

const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

fn sextet(byte: u8, pos: usize) -> Result<u64, GraphError> {
    if !(63..=126).contains(&byte) {
        return Err(err(format!(
            "character {byte:#04x} at position {pos} outside 63..126"
        )));
    }
    Ok(u64::from(byte - 63))
}

/// Decodes the vertex count, returning it with the number of bytes consumed.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    let group = |from: usize, count: usize| -> Result<u64, GraphError> {
        if bytes.len() < from + count {
            return Err(err("truncated length prefix"));
        }
        let mut value = 0;
        for (k, &b) in bytes[from..from + count].iter().enumerate() {
            value = (value << 6) | sextet(b, from + k)?;
        }
        Ok(value)
    };
    match bytes {
        [] => Err(err("empty input")),
        [126, 126, ..] => Ok((group(2, 6)? as usize, 8)),
        [126, ..] => Ok((group(1, 3)? as usize, 4)),
        [b, ..] => Ok((sextet(*b, 0)? as usize, 1)),
    }
}

fn encode_order(n: usize, out: &mut String) {
    let push_groups = |out: &mut String, value: usize, count: usize| {
        for k in (0..count).rev() {
            out.push(char::from(((value >> (6 * k)) & 63) as u8 + 63));
        }
    };
    if n <= 62 {
        out.push(char::from(n as u8 + 63));
    } else if n <= 258_047 {
        out.push('~');
        push_groups(out, n, 3);
    } else {
        out.push_str("~~");
        push_groups(out, n, 6);
    }
}

impl Graph {
    /// Parses one graph6 line (an optional `>>graph6<<` header is accepted).
    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        Self::from_graph6_with_capacity(text, DEFAULT_CAPACITY)
    }

    pub fn from_graph6_with_capacity(text: &str, capacity: usize) -> Result<Graph, GraphError> {
        let text = text.trim_end_matches(['\n', '\r']);
        let text = text.strip_prefix(HEADER).unwrap_or(text);
        let bytes = text.as_bytes();
        let (n, used) = decode_order(bytes)?;
        if n > capacity {
            return Err(GraphError::CapacityExceeded { n, capacity });
        }
        let body = &bytes[used..];
        let bits = n * n.saturating_sub(1) / 2;
        let expected = bits.div_ceil(6);
        if body.len() != expected {
            return Err(err(format!(
                "body has {} characters, {expected} expected for n = {n}",
                body.len()
            )));
        }
        let mut g = Graph::with_capacity(n, capacity)?;
        let (mut i, mut j) = (0usize, 1usize);
        for (k, &b) in body.iter().enumerate() {
            let value = sextet(b, used + k)?;
            for shift in (0..6).rev() {
                let idx = k * 6 + (5 - shift);
                let bit = value >> shift & 1 == 1;
                if idx >= bits {
                    if bit {
                        return Err(err("nonzero padding bits"));
                    }
                    continue;
                }
                if bit {
                    g.add_edge(i, j)?;
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            }
        }
        Ok(g)
    }

    /// graph6 under the identity labeling, without header or newline.
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = String::new();
        encode_order(n, &mut out);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
                filled += 1;
                if filled == 6 {
                    out.push(char::from(acc + 63));
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(char::from((acc << (6 - filled)) + 63));
        }
        out
    }
}

/// One graph of a corpus file together with its source line.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub line: usize,
    pub graph6: String,
    pub graph: Graph,
}

/// Parses a corpus: one graph6 string per line, blank lines and lines
/// starting with `#` ignored.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, GraphError> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(line, l)| {
            let graph = Graph::from_graph6(l).map_err(|e| err(format!("line {line}: {e}")))?;
            Ok(CorpusEntry {
                line,
                graph6: l.to_string(),
                graph,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const CORPUS: &str = include_str!("../../corpus/connected_n7.g6");

    #[test]
    fn triangle_and_single_vertex() {
        let k3 = Graph::from_graph6("Bw").unwrap();
        assert_eq!(k3.n(), 3);
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.to_graph6(), "Bw");

        let k1 = Graph::from_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        assert_eq!(Graph::new(1).unwrap().to_graph6(), "@");
    }

    #[test]
    fn matches_reference_encoder() {
        // produced by networkx.to_graph6_bytes
        let petersen = Graph::from_edges(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(petersen.to_graph6(), "IheA@GUAo");
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.to_graph6(), "Ch");
        let c7 = Graph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        assert_eq!(c7.to_graph6(), "FhCKG");
    }

    #[test]
    fn header_is_accepted() {
        assert_eq!(Graph::from_graph6(">>graph6<<Bw").unwrap().edge_count(), 3);
    }

    #[test]
    fn long_length_prefix() {
        let g = Graph::from_edges(100, [(0, 99), (50, 51)]).unwrap();
        let s = g.to_graph6();
        assert!(s.starts_with('~'));
        assert_eq!(Graph::from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(Graph::from_graph6(""), Err(GraphError::Graph6(_))));
        // length prefix announces 3 vertices but no body
        assert!(Graph::from_graph6("B").is_err());
        // truncated 18-bit prefix
        assert!(Graph::from_graph6("~?").is_err());
        // out-of-range character
        assert!(Graph::from_graph6("B\x7f").is_err());
        assert!(Graph::from_graph6("B ").is_err());
        // K_3 uses 3 of 6 bits; 'x' sets a padding bit
        assert!(Graph::from_graph6("Bx")
            .unwrap_err()
            .to_string()
            .contains("padding"));
        // body too long
        assert!(Graph::from_graph6("Bww").is_err());
    }

    #[test]
    fn capacity_is_enforced() {
        let g = Graph::new(70).unwrap();
        let s = g.to_graph6();
        assert!(matches!(
            Graph::from_graph6_with_capacity(&s, 64),
            Err(GraphError::CapacityExceeded {
                n: 70,
                capacity: 64
            })
        ));
    }

    #[test]
    fn corpus_round_trips() {
        let corpus = parse_corpus(CORPUS).unwrap();
        assert_eq!(corpus.len(), 996);
        for entry in &corpus {
            entry.graph.validate().unwrap();
            assert_eq!(entry.graph.to_graph6(), entry.graph6, "line {}", entry.line);
        }
    }

    #[test]
    fn corpus_errors_carry_line_numbers() {
        let e = parse_corpus("# header\nBw\n\nB!\n").unwrap_err();
        assert!(e.to_string().contains("line 4"), "{e}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip_random_graphs(n in 0usize..40, p in 0.0f64..=1.0, seed in any::<u64>()) {
            let g = Graph::random(n, p, seed);
            let back = Graph::from_graph6(&g.to_graph6()).unwrap();
            prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        }
    }
}
