//! Plain-text instance and coloring formats.
//!
//! All files are newline-terminated ASCII. Lines whose first non-blank
//! character is `#` are comments; blank lines are ignored.
//!
//! Hypergraph files start with a header `h <n>`, followed by one line per
//! hyperedge: `e <v1> <v2> ... <vt>` with `t >= 2`. Graph files start with
//! `g <n>`, followed by `a <u> <v>` per edge. Coloring files list `c
//! <vertex> <color>` sorted by vertex (densely from 0) and finish with a
//! `palette <count>` trailer.
//!
//! Writing is canonical: hyperedge vertex lists sorted and deduplicated,
//! edge endpoints with the smaller id first, no comments. Parsing canonical
//! text and writing it back reproduces it byte for byte, and line order is
//! positional identity (duplicate hyperedges stay distinct).

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::Coloring;
use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::multigraph::{Multigraph, MultigraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number of the offending line.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header 'h <n>' or 'g <n>'")]
    BadHeader,
    #[error("malformed record: {0}")]
    BadRecord(String),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("hyperedge needs at least 2 distinct vertices")]
    HyperedgeTooSmall,
    #[error("self-loop {0}")]
    SelfLoop(usize),
    #[error("coloring lines must list vertices densely in increasing order")]
    NonDenseColoring,
    #[error("color {color} outside palette {palette}")]
    ColorOutOfPalette { color: usize, palette: usize },
    #[error("missing 'palette <count>' trailer")]
    MissingPalette,
    #[error("unexpected content after trailer")]
    TrailingContent,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// A parsed instance file: either a hypergraph or a multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Hypergraph(Hypergraph),
    Graph(Multigraph),
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n').enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn parse_usize(line: usize, token: &str) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| err(line, ParseErrorKind::BadRecord(format!("bad integer '{token}'"))))
}

/// Parses a hypergraph or graph file, preserving record order.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines.next().ok_or(err(1, ParseErrorKind::BadHeader))?;
    let mut tokens = header.split_whitespace();
    let kind = tokens.next().unwrap_or("");
    let n = match tokens.next() {
        Some(tok) if matches!(kind, "h" | "g") && tokens.next().is_none() => {
            parse_usize(header_line, tok)
                .map_err(|_| err(header_line, ParseErrorKind::BadHeader))?
        }
        _ => return Err(err(header_line, ParseErrorKind::BadHeader)),
    };

    match kind {
        "h" => {
            let mut hyperedges = Vec::new();
            for (lineno, line) in lines {
                let mut toks = line.split_whitespace();
                if toks.next() != Some("e") {
                    return Err(err(
                        lineno,
                        ParseErrorKind::BadRecord(format!("expected 'e ...', got '{line}'")),
                    ));
                }
                let verts = toks
                    .map(|t| parse_usize(lineno, t))
                    .collect::<Result<Vec<_>, _>>()?;
                hyperedges.push((lineno, verts));
            }
            let line_of = |edge: usize| hyperedges[edge].0;
            let h = Hypergraph::new(n, hyperedges.iter().map(|(_, v)| v.clone()).collect())
                .map_err(|e| match e {
                    HypergraphError::VertexOutOfRange { edge, vertex, n } => {
                        err(line_of(edge), ParseErrorKind::VertexOutOfRange { vertex, n })
                    }
                    HypergraphError::HyperedgeTooSmall { edge, .. } => {
                        err(line_of(edge), ParseErrorKind::HyperedgeTooSmall)
                    }
                })?;
            Ok(Instance::Hypergraph(h))
        }
        "g" => {
            let mut pairs = Vec::new();
            for (lineno, line) in lines {
                let toks: Vec<&str> = line.split_whitespace().collect();
                if toks.len() != 3 || toks[0] != "a" {
                    return Err(err(
                        lineno,
                        ParseErrorKind::BadRecord(format!("expected 'a <u> <v>', got '{line}'")),
                    ));
                }
                let u = parse_usize(lineno, toks[1])?;
                let v = parse_usize(lineno, toks[2])?;
                pairs.push((lineno, u, v));
            }
            let line_of = |edge: usize| pairs[edge].0;
            let g = Multigraph::new(n, pairs.iter().map(|&(_, u, v)| (u, v)).collect()).map_err(
                |e| match e {
                    MultigraphError::VertexOutOfRange { edge, vertex, n } => {
                        err(line_of(edge), ParseErrorKind::VertexOutOfRange { vertex, n })
                    }
                    MultigraphError::SelfLoop { edge, vertex } => {
                        err(line_of(edge), ParseErrorKind::SelfLoop(vertex))
                    }
                },
            )?;
            Ok(Instance::Graph(g))
        }
        _ => Err(err(header_line, ParseErrorKind::BadHeader)),
    }
}

/// Parses a coloring file (`c <vertex> <color>` lines plus palette trailer).
pub fn parse_coloring(text: &str) -> Result<Coloring, ParseError> {
    let mut colors = Vec::new();
    let mut palette: Option<usize> = None;
    for (lineno, line) in significant_lines(text) {
        if palette.is_some() {
            return Err(err(lineno, ParseErrorKind::TrailingContent));
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["c", v, c] => {
                let v = parse_usize(lineno, v)?;
                let c = parse_usize(lineno, c)?;
                if v != colors.len() {
                    return Err(err(lineno, ParseErrorKind::NonDenseColoring));
                }
                colors.push((lineno, c));
            }
            ["palette", p] => {
                palette = Some(parse_usize(lineno, p)?);
            }
            _ => {
                return Err(err(
                    lineno,
                    ParseErrorKind::BadRecord(format!("expected 'c <v> <color>', got '{line}'")),
                ))
            }
        }
    }
    let palette = palette.ok_or(err(
        text.split('\n').count().max(1),
        ParseErrorKind::MissingPalette,
    ))?;
    for &(lineno, c) in &colors {
        if c >= palette {
            return Err(err(lineno, ParseErrorKind::ColorOutOfPalette { color: c, palette }));
        }
    }
    Ok(Coloring::new(colors.into_iter().map(|(_, c)| c).collect(), palette)
        .expect("colors checked against palette above"))
}

/// Canonical text for either instance kind.
pub fn write_instance(instance: &Instance) -> String {
    match instance {
        Instance::Hypergraph(h) => write_hypergraph(h),
        Instance::Graph(g) => write_graph(g),
    }
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "h {}", h.vertex_count());
    for edge in h.hyperedges() {
        out.push('e');
        for v in edge {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

pub fn write_graph(g: &Multigraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "g {}", g.vertex_count());
    for e in g.edges() {
        let _ = writeln!(out, "a {} {}", e.u, e.v);
    }
    out
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for v in 0..c.vertex_count() {
        let _ = writeln!(out, "c {} {}", v, c.color(v));
    }
    let _ = writeln!(out, "palette {}", c.palette());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_hypergraph() {
        let inst = parse_instance("h 3\ne 0 1 2\n").unwrap();
        match inst {
            Instance::Hypergraph(h) => {
                assert_eq!(h.vertex_count(), 3);
                assert_eq!(h.hyperedge(0), &[0, 1, 2]);
            }
            _ => panic!("expected hypergraph"),
        }
    }

    #[test]
    fn parses_minimal_graph() {
        let inst = parse_instance("g 2\na 0 1\n").unwrap();
        match inst {
            Instance::Graph(g) => {
                assert_eq!(g.vertex_count(), 2);
                assert_eq!(g.edge_count(), 1);
            }
            _ => panic!("expected graph"),
        }
    }

    #[test]
    fn singleton_hyperedge_reports_its_line() {
        let e = parse_instance("h 2\ne 0\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.kind, ParseErrorKind::HyperedgeTooSmall);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# fixture\n\nh 3\n# body\ne 0 1\n";
        assert!(parse_instance(text).is_ok());
    }

    #[test]
    fn header_errors() {
        assert_eq!(parse_instance("x 3\n").unwrap_err().kind, ParseErrorKind::BadHeader);
        assert_eq!(parse_instance("h\n").unwrap_err().kind, ParseErrorKind::BadHeader);
        assert_eq!(parse_instance("").unwrap_err().kind, ParseErrorKind::BadHeader);
    }

    #[test]
    fn canonical_round_trip() {
        let text = "h 5\ne 0 1 2\ne 0 1 2\ne 2 3 4\n";
        let Instance::Hypergraph(h) = parse_instance(text).unwrap() else {
            panic!()
        };
        assert_eq!(write_hypergraph(&h), text);

        let gtext = "g 4\na 0 1\na 0 1\na 2 3\n";
        let Instance::Graph(g) = parse_instance(gtext).unwrap() else {
            panic!()
        };
        assert_eq!(write_graph(&g), gtext);
    }

    #[test]
    fn coloring_round_trip_and_trailer() {
        let c = Coloring::new(vec![0, 1], 2).unwrap();
        let text = write_coloring(&c);
        assert_eq!(text, "c 0 0\nc 1 1\npalette 2\n");
        assert_eq!(parse_coloring(&text).unwrap(), c);

        assert_eq!(
            parse_coloring("c 0 0\n").unwrap_err().kind,
            ParseErrorKind::MissingPalette
        );
        assert_eq!(
            parse_coloring("c 1 0\npalette 1\n").unwrap_err().kind,
            ParseErrorKind::NonDenseColoring
        );
        assert_eq!(
            parse_coloring("c 0 3\npalette 2\n").unwrap_err().kind,
            ParseErrorKind::ColorOutOfPalette { color: 3, palette: 2 }
        );
    }

    #[test]
    fn noncanonical_input_normalizes() {
        // Unsorted, duplicated vertices in a hyperedge; reversed edge ends.
        let Instance::Hypergraph(h) = parse_instance("h 4\ne 3 1 1 0\n").unwrap() else {
            panic!()
        };
        assert_eq!(write_hypergraph(&h), "h 4\ne 0 1 3\n");
        let Instance::Graph(g) = parse_instance("g 3\na 2 0\n").unwrap() else {
            panic!()
        };
        assert_eq!(write_graph(&g), "g 3\na 0 2\n");
    }
}
