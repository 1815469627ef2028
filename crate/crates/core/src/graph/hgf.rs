//! The line-oriented `hgf` text format.
//!
//! ```text
//! hgf 1 undirected
//! # a comment
//! v a
//! v b
//! e a b
//! ```

use std::fmt::Write as _;

use super::{Graph, Mode};
use crate::error::{Error, Result};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Splits a line into whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

pub fn parse_hgf(text: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(text).map_err(|e| {
        let before = &text[..e.valid_up_to()];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let col = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        parse_error(line, col, "invalid UTF-8")
    })?;
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));

    let Some((no, line)) = lines.next() else {
        return Err(parse_error(1, 1, "missing `hgf 1 <mode>` header"));
    };
    let toks = tokens(line.strip_suffix('\r').unwrap_or(line));
    if toks.len() != 3 || toks[0].1 != "hgf" {
        return Err(parse_error(no, 1, "expected header `hgf 1 <mode>`"));
    }
    if toks[1].1 != "1" {
        return Err(parse_error(no, toks[1].0, format!("unsupported version `{}`", toks[1].1)));
    }
    let mode = match toks[2].1 {
        "directed" => Mode::Directed,
        "undirected" => Mode::Undirected,
        other => {
            return Err(parse_error(no, toks[2].0, format!("unknown mode `{other}`")));
        }
    };
    let mut graph = Graph::new(mode);

    for (no, line) in lines {
        let line = line.strip_suffix('\r').unwrap_or(line);
        let toks = tokens(line);
        let Some(&(col, head)) = toks.first() else { continue };
        if head.starts_with('#') {
            continue;
        }
        match head {
            "v" => {
                if toks.len() != 2 {
                    return Err(parse_error(no, col, "expected `v <id>`"));
                }
                let (c, id) = toks[1];
                if graph.index_of(id).is_some() {
                    return Err(parse_error(no, c, format!("duplicate vertex `{id}`")));
                }
                graph.add_vertex(id)?;
            }
            "e" => {
                if toks.len() != 3 {
                    return Err(parse_error(no, col, "expected `e <id> <id>`"));
                }
                let mut ends = [0; 2];
                for (slot, &(c, id)) in ends.iter_mut().zip(&toks[1..]) {
                    *slot = graph.index_of(id).ok_or_else(|| {
                        parse_error(no, c, format!("undeclared endpoint `{id}`"))
                    })?;
                }
                if !graph.add_edge(ends[0], ends[1])? {
                    return Err(parse_error(
                        no,
                        col,
                        format!("duplicate edge `{} {}`", toks[1].1, toks[2].1),
                    ));
                }
            }
            other => {
                return Err(parse_error(no, col, format!("unknown directive `{other}`")));
            }
        }
    }
    Ok(graph)
}

pub fn serialize_hgf(g: &Graph) -> Vec<u8> {
    let mut s = format!("hgf 1 {}\n", g.mode());
    for id in g.ids() {
        let _ = writeln!(s, "v {id}");
    }
    for e in g.edges() {
        let (a, b) = g.edge_ids(e);
        let _ = writeln!(s, "e {a} {b}");
    }
    s.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k2() {
        let g = parse_hgf(b"hgf 1 undirected\nv a\nv b\ne a b").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.size(), 1);
        assert_eq!(serialize_hgf(&g), b"hgf 1 undirected\nv a\nv b\ne a b\n");
    }

    #[test]
    fn undeclared_endpoint() {
        let err = parse_hgf(b"hgf 1 directed\nv a\ne a b").unwrap_err();
        match err {
            Error::Parse { line, column, message } => {
                assert_eq!((line, column), (3, 5));
                assert!(message.contains("undeclared endpoint `b`"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicates_rejected() {
        assert!(parse_hgf(b"hgf 1 undirected\nv a\nv a\n").is_err());
        assert!(parse_hgf(b"hgf 1 undirected\nv a\nv b\ne a b\ne b a\n").is_err());
        // Opposite arcs are distinct in directed mode.
        assert!(parse_hgf(b"hgf 1 directed\nv a\nv b\ne a b\ne b a\n").is_ok());
    }

    #[test]
    fn comments_blank_lines_and_loops() {
        let g = parse_hgf("hgf 1 undirected\n\n# x\n  v α\ne α α\n".as_bytes()).unwrap();
        assert!(g.has_loop(0));
    }

    #[test]
    fn bad_header() {
        assert!(parse_hgf(b"").is_err());
        assert!(parse_hgf(b"hgf 2 undirected\n").is_err());
        assert!(parse_hgf(b"v a\n").is_err());
        assert!(parse_hgf(b"hgf 1 mixed\n").is_err());
    }
}
