//! Edge-list and graph6 text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v`, single spaces, LF
//! endings. Output always has `u < v` in lexicographic order. Input also
//! accepts `u > v`, repeated pairs, and a missing final newline.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text.trim_end_matches(['\n', '\r'])),
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => to_edge_list(g),
        GraphFormat::Graph6 => to_graph6(g),
    }
}

fn number(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(format!("line {line}"), format!("expected a nonnegative integer, found {tok:?}")))
}

fn pair(line: &str, no: usize) -> Result<(usize, usize)> {
    let toks: Vec<&str> = line.split(' ').collect();
    if toks.len() != 2 {
        return Err(Error::parse(format!("line {no}"), format!("expected two integers, found {line:?}")));
    }
    Ok((number(toks[0], no)?, number(toks[1], no)?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    let header = lines.next().filter(|l| !l.is_empty()).ok_or_else(|| Error::parse("line 1", "missing header"))?;
    let (n, m) = pair(header, 1)?;
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines.enumerate() {
        let no = i + 2;
        if edges.len() == m {
            return Err(Error::parse(format!("line {no}"), format!("more than the {m} declared edges")));
        }
        let (u, v) = pair(line, no)?;
        if u == v {
            return Err(Error::parse(format!("line {no}"), format!("self-loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(Error::parse(format!("line {no}"), format!("endpoint out of range for n = {n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            format!("line {}", edges.len() + 2),
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").expect("write to String");
    }
    s
}

const GRAPH6_HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let at = |i: usize| -> Result<u32> {
        match bytes.get(i) {
            Some(&c) if (63..=126).contains(&c) => Ok(u32::from(c - 63)),
            Some(&c) => Err(Error::parse(format!("offset {i}"), format!("byte {c} outside 63..=126"))),
            None => Err(Error::parse(format!("offset {i}"), "unexpected end of input")),
        }
    };
    let (n, mut pos) = if bytes.first() == Some(&126) {
        if bytes.get(1) == Some(&126) {
            return Err(Error::parse("offset 1", "graphs above 258047 vertices are not supported"));
        }
        ((at(1)? << 12 | at(2)? << 6 | at(3)?) as usize, 4)
    } else {
        (at(0)? as usize, 1)
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if bytes.len() != pos + need {
        return Err(Error::parse(
            format!("offset {}", bytes.len().min(pos + need)),
            format!("expected {need} data bytes for n = {n}, found {}", bytes.len().saturating_sub(pos)),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut chunk = 0;
    for v in 1..n {
        for u in 0..v {
            if k % 6 == 0 {
                chunk = at(pos)?;
                pos += 1;
            }
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 && chunk & ((1 << (6 - pairs % 6)) - 1) != 0 {
        return Err(Error::parse(format!("offset {}", pos - 1), "nonzero padding bits"));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63].map(|b| b + 63));
    }
    let mut chunk = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | u8::from(g.has_edge(u, v));
            k += 1;
            if k == 6 {
                out.push(chunk + 63);
                chunk = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((chunk << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_examples() {
        let g = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(parse_edge_list("3 2\n1 0\n2 1").unwrap(), g);
        assert_eq!(to_edge_list(&g), "3 2\n0 1\n1 2\n");
        assert_eq!(parse_edge_list("0 0\n").unwrap().vertex_count(), 0);
    }

    #[test]
    fn edge_list_errors() {
        let e = parse_edge_list("2 1\n0 0\n").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                location: "line 2".into(),
                message: "self-loop at vertex 0".into()
            }
        );
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3\n").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(parse_edge_list("3 1\n0  1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
    }

    #[test]
    fn graph6_vector() {
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(parse_graph6(">>graph6<<DQc").unwrap(), g);
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::complete(2)), "A_");
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D").is_err());
        assert!(parse_graph6("DQcc").is_err());
        assert!(parse_graph6("D Q").is_err());
        // Padding bits must be zero: "A" + '`' sets a padding bit.
        assert!(parse_graph6("A`").is_err());
    }

    #[test]
    fn large_graph6_round_trip() {
        let g = Graph::cycle(70);
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
