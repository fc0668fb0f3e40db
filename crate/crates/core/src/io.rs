//! Plain-text edge lists.
//!
//! ```text
//! n <count>
//! <tail> <head>      one arc (digraph) or edge with u < v (graph) per line
//! ```
//!
//! UTF-8 with LF line endings. Blank lines are ignored on input.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

pub fn write_digraph<W: Write>(mut w: W, d: &Digraph) -> Result<()> {
    writeln!(w, "n {}", d.n())?;
    for (t, h) in d.arcs() {
        writeln!(w, "{t} {h}")?;
    }
    Ok(())
}

pub fn write_graph<W: Write>(mut w: W, g: &Graph) -> Result<()> {
    writeln!(w, "n {}", g.n())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

fn parse_pairs<R: BufRead>(r: R) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut n = None;
    let mut pairs = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let lineno = i + 1;
        let bad = |msg: &str| Error::Parse {
            line: lineno,
            msg: msg.to_string(),
        };
        let mut it = line.split_whitespace();
        let (a, b) = (it.next(), it.next());
        if it.next().is_some() {
            return Err(bad("expected two fields"));
        }
        match n {
            None => {
                if a != Some("n") {
                    return Err(bad("header must be `n <count>`"));
                }
                let count = b
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("bad vertex count"))?;
                n = Some(count);
            }
            Some(count) => {
                let parse = |s: Option<&str>| -> Result<usize> {
                    s.and_then(|s| s.parse().ok())
                        .ok_or_else(|| bad("expected two vertex ids"))
                };
                let (u, v) = (parse(a)?, parse(b)?);
                if u >= count || v >= count {
                    return Err(bad("vertex id out of range"));
                }
                pairs.push((u, v));
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "empty input".into(),
    })?;
    Ok((n, pairs))
}

pub fn read_digraph<R: BufRead>(r: R) -> Result<Digraph> {
    let (n, arcs) = parse_pairs(r)?;
    let mut d = Digraph::new(n);
    for (t, h) in arcs {
        d.push_arc(t, h)?;
    }
    Ok(d)
}

/// Reads an edge list as an undirected graph. Arc files are accepted too:
/// orientation is ignored and duplicates collapse.
pub fn read_graph<R: BufRead>(r: R) -> Result<Graph> {
    let (n, edges) = parse_pairs(r)?;
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn graph_round_trip() {
        let g = families::petersen();
        let mut buf = Vec::new();
        write_graph(&mut buf, &g).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("n 10\n0 1\n"));
        assert_eq!(read_graph(&buf[..]).unwrap(), g);
    }

    #[test]
    fn digraph_keeps_loops_and_repeats() {
        let d = Digraph::from_out_lists(vec![vec![0, 1, 1], vec![]]).unwrap();
        let mut buf = Vec::new();
        write_digraph(&mut buf, &d).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "n 2\n0 0\n0 1\n0 1\n");
        assert_eq!(read_digraph(&buf[..]).unwrap(), d);
    }

    #[test]
    fn parse_errors_carry_line() {
        let err = read_graph("n 3\n0 1\n0 7\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(read_graph("3\n".as_bytes()).is_err());
        assert!(read_graph("".as_bytes()).is_err());
    }
}
