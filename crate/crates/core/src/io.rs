//! Text formats: graph6, the `n m` edge list, and one-way DOT export.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
    Dot,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "el" | "edge-list" => Ok(Format::EdgeList),
            "g6" | "graph6" => Ok(Format::Graph6),
            "dot" => Ok(Format::Dot),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(g),
        Format::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s
        }
        Format::Dot => to_dot(g),
    }
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let bad = |msg: &str| Error::MalformedEdgeList(msg.to_string());
    let mut nums = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| bad(&format!("bad token `{t}`")))
        });
    let order = nums.next().ok_or_else(|| bad("missing header"))??;
    let size = nums.next().ok_or_else(|| bad("missing edge count"))??;
    let rest: Vec<usize> = nums.collect::<Result<_>>()?;
    if rest.len() != 2 * size {
        return Err(bad(&format!(
            "header declares {size} edges but found {} endpoints",
            rest.len()
        )));
    }
    Graph::new(order, rest.chunks(2).map(|c| (c[0], c[1])))
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(word + 63);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bad = |msg: String| Error::MalformedGraph6(msg);
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b:#04x} outside the printable range")));
    }
    let sextet = |i: usize| -> Result<usize> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| bad("truncated order header".into()))
    };
    let (n, start) = match bytes.first() {
        None => return Err(bad("empty input".into())),
        Some(126) if bytes.get(1) == Some(&126) => {
            let n = (2..8).try_fold(0usize, |acc, i| Ok::<_, Error>((acc << 6) | sextet(i)?))?;
            (n, 8)
        }
        Some(126) => {
            let n = (1..4).try_fold(0usize, |acc, i| Ok::<_, Error>((acc << 6) | sextet(i)?))?;
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let payload = &bytes[start.min(bytes.len())..];
    let expected = bits.div_ceil(6);
    if payload.len() != expected {
        return Err(bad(format!(
            "payload has {} bytes, order {n} needs {expected}",
            payload.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Reads a graph file, choosing the parser from the extension:
/// `.g6` for graph6, anything else as an edge list.
pub fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => parse_graph6(text.lines().next().unwrap_or("")),
        _ => parse_edge_list(&text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_family;

    #[test]
    fn graph6_examples() {
        assert_eq!(
            parse_graph6("C~").unwrap(),
            make_family("complete:4").unwrap()
        );
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().size(), 6);
        // Petersen graph in nauty's canonical-free encoding of our labeling
        let p = make_family("petersen").unwrap();
        assert_eq!(parse_graph6(&to_graph6(&p)).unwrap(), p);
    }

    #[test]
    fn graph6_errors() {
        for bad in ["", "C", "C~~", "C\u{7f}", "A a", "~"] {
            assert!(
                matches!(parse_graph6(bad), Err(Error::MalformedGraph6(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn graph6_long_header() {
        let c = make_family("cycle:70").unwrap();
        let s = to_graph6(&c);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), c);
    }

    #[test]
    fn edge_list_examples() {
        let c4 = make_family("cycle:4").unwrap();
        assert_eq!(to_edge_list(&c4), "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(to_edge_list(&Graph::empty(1)), "1 0\n");
        assert_eq!(parse_edge_list("4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap(), c4);
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(matches!(
            parse_edge_list("2 1\n0 2\n"),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn dot_export() {
        let dot = to_dot(&make_family("path:2").unwrap());
        assert_eq!(dot, "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }
}
