//! Text serialization: the native adjacency-list format and graph6 import.

use super::{Graph, GraphError};
use std::fmt::Write as _;

/// Parse the native format:
///
/// ```text
/// n 5
/// 0: 1 4
/// 1: 0 2
/// ...
/// ```
///
/// Blank lines and lines starting with `#` are ignored. Every vertex must
/// have a line; adjacency must be symmetric and loop-free.
pub fn parse_native(text: &str) -> Result<Graph, GraphError> {
    let err = |line: usize, msg: String| GraphError::Parse { line, msg };
    let mut n: Option<usize> = None;
    let mut lists: Vec<Option<(usize, Vec<usize>)>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if n.is_none() {
            let rest = line
                .strip_prefix('n')
                .ok_or_else(|| err(lineno, format!("expected header \"n <count>\", got {:?}", line)))?;
            let count: usize = rest
                .trim()
                .parse()
                .map_err(|_| err(lineno, format!("invalid vertex count {:?}", rest.trim())))?;
            n = Some(count);
            lists = vec![None; count];
            continue;
        }
        let count = n.unwrap();
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| err(lineno, format!("expected \"i: neighbors\", got {:?}", line)))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| err(lineno, format!("invalid vertex index {:?}", head.trim())))?;
        if v >= count {
            return Err(err(lineno, format!("vertex {} out of range (n = {})", v, count)));
        }
        if lists[v].is_some() {
            return Err(err(lineno, format!("duplicate line for vertex {}", v)));
        }
        let mut nb = Vec::new();
        for tok in tail.split_whitespace() {
            let w: usize = tok
                .parse()
                .map_err(|_| err(lineno, format!("invalid neighbor {:?}", tok)))?;
            if w >= count {
                return Err(err(lineno, format!("neighbor {} out of range (n = {})", w, count)));
            }
            if w == v {
                return Err(err(lineno, format!("loop at vertex {}", v)));
            }
            nb.push(w);
        }
        lists[v] = Some((lineno, nb));
    }

    let count = n.ok_or_else(|| err(1, "empty input".into()))?;
    let mut g = Graph::empty(count);
    for (v, entry) in lists.iter().enumerate() {
        let (lineno, nb) = entry
            .as_ref()
            .ok_or_else(|| err(1, format!("missing line for vertex {}", v)))?;
        for &w in nb {
            g.add_edge(v, w);
        }
        let _ = lineno;
    }
    // symmetry: every listed arc must appear in both directions
    for (v, entry) in lists.iter().enumerate() {
        let (lineno, nb) = entry.as_ref().unwrap();
        for &w in nb {
            let reverse = lists[w].as_ref().unwrap().1.contains(&v);
            if !reverse {
                return Err(err(
                    *lineno,
                    format!("asymmetric adjacency: {} lists {} but not vice versa", v, w),
                ));
            }
        }
    }
    Ok(g)
}

/// Render a graph in the native format with ascending neighbor lists.
pub fn format_native(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).unwrap();
    for v in 0..g.n() {
        write!(out, "{}:", v).unwrap();
        for w in g.neighbors(v).iter() {
            write!(out, " {}", w).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Decode a header-less graph6 string (standard encoding, n < 258048).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let err = |msg: String| GraphError::Parse { line: 1, msg };
    let bytes: Vec<u8> = text.trim().bytes().collect();
    if bytes.is_empty() {
        return Err(err("empty graph6 input".into()));
    }
    for &b in &bytes {
        if !(63..=126).contains(&b) {
            return Err(err(format!("invalid graph6 byte {}", b)));
        }
    }
    let (n, pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1usize)
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        return Err(err("graph6 inputs this large are not supported".into()));
    };

    let bits_needed = n * (n - 1) / 2;
    let avail = (bytes.len() - pos) * 6;
    if avail < bits_needed {
        return Err(err(format!(
            "graph6 body too short: need {} bits, have {}",
            bits_needed, avail
        )));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = (bytes[pos + bit / 6] - 63) as usize;
            let b = (byte >> (5 - bit % 6)) & 1;
            if b == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_native() {
        let g = Graph::cycle(5);
        let txt = format_native(&g);
        assert_eq!(parse_native(&txt).unwrap(), g);
    }

    #[test]
    fn native_accepts_comments_and_blanks() {
        let txt = "# a triangle\n\nn 3\n0: 1 2\n1: 0 2\n2: 0 1\n";
        assert_eq!(parse_native(txt).unwrap(), Graph::complete(3));
    }

    #[test]
    fn native_rejects_asymmetry_with_line_number() {
        let txt = "n 2\n0: 1\n1:\n";
        match parse_native(txt) {
            Err(GraphError::Parse { line, msg }) => {
                assert_eq!(line, 2);
                assert!(msg.contains("asymmetric"));
            }
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn native_rejects_loops() {
        let txt = "n 2\n0: 0 1\n1: 0\n";
        match parse_native(txt) {
            Err(GraphError::Parse { line, msg }) => {
                assert_eq!(line, 2);
                assert!(msg.contains("loop"));
            }
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn graph6_decodes_petersen() {
        // standard graph6 encoding of the Petersen graph
        let g = parse_graph6("IsP@OkWHG").unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.regular_valency(), Some(3));
        assert_eq!(g.edge_count(), 15);
        // girth 5: no triangles or squares
        for (i, j) in g.edges() {
            assert_eq!(g.common_neighbors(i, j), 0);
        }
    }

    #[test]
    fn graph6_decodes_k4() {
        // K4 is "C~"
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
    }
}
