//! graph6 encoding: size header, then the upper triangle in column order
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`) packed six bits per byte, biased by 63.

use thiserror::Error;

use super::{bit, Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("graph6 body has {found} bytes, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex count exceeds limit: {0} > 64")]
    TooManyVertices(usize),
    #[error("graph6 encodes a graph with no vertices")]
    NoVertices,
}

const BIAS: u8 = 63;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { byte, offset });
        }
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        if n < 63 {
            return Err(Graph6Error::MalformedHeader);
        }
        (n, &bytes[4..])
    } else if bytes.len() >= 8 && bytes[1] == 126 {
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        if n < 258048 {
            return Err(Graph6Error::MalformedHeader);
        }
        (n, &bytes[8..])
    } else {
        return Err(Graph6Error::MalformedHeader);
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::LengthMismatch {
            expected,
            found: body.len(),
        });
    }
    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - BIAS;
            if chunk & (0b100000 >> (k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(rows).expect("decoded adjacency is symmetric"))
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut chunk = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                chunk |= 0b100000 >> (k % 6);
            }
            k += 1;
            if k.is_multiple_of(6) {
                out.push(chunk + BIAS);
                chunk = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push(chunk + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.order(), 4);
        assert_eq!(k4.size(), 6);
        assert_eq!(emit_graph6(&k4), "C~");
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()), "@");
    }

    #[test]
    fn five_vertex_round_trip() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(emit_graph6(&g), "D?{");
    }

    #[test]
    fn known_encoding() {
        // Edges a-c, a-e, b-d, d-e on five vertices.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
    }

    #[test]
    fn large_headers() {
        let mut g = Graph::empty(64).unwrap();
        g.add_edge(0, 63).unwrap();
        g.add_edge(17, 40).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g63 = Graph::empty(63).unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn errors_are_distinct() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("~~"), Err(Graph6Error::MalformedHeader));
        assert_eq!(
            parse_graph6("C~~"),
            Err(Graph6Error::LengthMismatch {
                expected: 1,
                found: 2
            })
        );
        // n = 70 via the four-byte header.
        // 70 = 1 * 64 + 6 in three 6-bit digits: 0, 1, 6.
        let mut line = String::from("~?@E");
        line.push_str(&"?".repeat(body_len(70)));
        assert_eq!(parse_graph6(&line), Err(Graph6Error::TooManyVertices(70)));
        assert!(parse_graph6(&line)
            .unwrap_err()
            .to_string()
            .contains("vertex count exceeds limit"));
        assert!(matches!(
            parse_graph6("C\u{7f}"),
            Err(Graph6Error::InvalidByte { offset: 1, .. })
        ));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::NoVertices));
    }

    #[test]
    fn optional_header_and_newline() {
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().size(), 6);
    }
}
