//! Plain-text digraph format and DOT export.
//!
//! The text format is line oriented. The first significant line is
//! `n <count>`, optionally followed by a bare `loops` line that switches the
//! digraph to loop-permitting mode, then one `u v` arc per line with 0-based
//! endpoints. Blank lines and `#` comments are ignored everywhere.

use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut n: Option<usize> = None;
    let mut allow_loops = false;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: lineno, msg };
        match n {
            None => {
                let rest = line
                    .strip_prefix('n')
                    .map(str::trim)
                    .filter(|r| !r.is_empty())
                    .ok_or_else(|| err(format!("expected `n <count>`, got {line:?}")))?;
                n = Some(
                    rest.parse()
                        .map_err(|e| err(format!("bad vertex count {rest:?}: {e}")))?,
                );
            }
            Some(count) => {
                if line == "loops" {
                    if !arcs.is_empty() {
                        return Err(err("`loops` must precede all arcs".into()));
                    }
                    allow_loops = true;
                    continue;
                }
                let mut it = line.split_whitespace();
                let (u, v) = match (it.next(), it.next(), it.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => return Err(err(format!("expected `u v`, got {line:?}"))),
                };
                let parse = |s: &str| -> Result<usize> {
                    s.parse()
                        .map_err(|e| err(format!("bad vertex {s:?}: {e}")))
                };
                let (u, v) = (parse(u)?, parse(v)?);
                if u >= count || v >= count {
                    return Err(err(format!("arc ({u}, {v}) out of range 0..{count}")));
                }
                if u == v && !allow_loops {
                    return Err(err(format!(
                        "loop at {u} in a loopless digraph; add a `loops` line first"
                    )));
                }
                arcs.push((u, v));
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: text.lines().count() + 1,
        msg: "missing `n <count>` header".into(),
    })?;
    if allow_loops {
        Digraph::from_arcs_with_loops(n, arcs)
    } else {
        Digraph::from_arcs(n, arcs)
    }
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", d.n()).unwrap();
    if d.allows_loops() {
        writeln!(out, "loops").unwrap();
    }
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Graphviz rendering. Bidirected pairs are drawn as one `dir=both` edge.
pub fn to_dot(d: &Digraph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 0..d.n() {
        writeln!(out, "  v{v};").unwrap();
    }
    for (u, v) in d.arcs() {
        if u < v && d.has_arc(v, u) {
            writeln!(out, "  v{u} -> v{v} [dir=both];").unwrap();
        } else if u == v || !d.has_arc(v, u) {
            writeln!(out, "  v{u} -> v{v};").unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph;

    #[test]
    fn round_trip_preserves_structure() {
        let d = digraph::de_bruijn(2, 3).unwrap();
        let parsed = parse_digraph(&write_digraph(&d)).unwrap();
        assert_eq!(parsed, d);
        assert!(parsed.allows_loops());

        let c = digraph::directed_cycle(5).unwrap();
        assert_eq!(parse_digraph(&write_digraph(&c)).unwrap(), c);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a triangle\n\nn 3  # three vertices\n0 1\n1 2 # last hop\n2 0\n";
        let d = parse_digraph(text).unwrap();
        assert_eq!(d, digraph::directed_cycle(3).unwrap());
    }

    #[test]
    fn errors_carry_line_numbers() {
        match parse_digraph("n 2\n0 5\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_digraph("n 2\n0 0\n").is_err());
        assert!(parse_digraph("n 1\nloops\n0 0\n").is_ok());
        assert!(parse_digraph("0 1\n").is_err());
        assert!(parse_digraph("").is_err());
    }

    #[test]
    fn dot_output_merges_bidirected_pairs() {
        let d = digraph::bidirected_path(3);
        let dot = to_dot(&d, "g");
        assert!(dot.contains("v0 -> v1 [dir=both];"));
        assert!(!dot.contains("v1 -> v0"));
        let loops = digraph::Digraph::from_arcs_with_loops(1, [(0, 0)]).unwrap();
        assert!(to_dot(&loops, "g").contains("v0 -> v0;"));
    }
}
