//! Text formats: weighted instances, edge lists and DOT export.
//!
//! Instance files start with `n <N>` and continue with `u v w` lines, where
//! `1 <= u < v <= N` and `w` is a nonnegative decimal. Blank lines and lines
//! starting with `#` are skipped.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::instance::WeightedInstance;
use crate::scalar::Weight;
use crate::triangulation::Triangulation;
use crate::types::{Edge, VertexId};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_vertex(line: usize, token: &str) -> Result<VertexId> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("expected a vertex id, found {token:?}")))
}

fn parse_pair(line: usize, u: &str, v: &str, n: usize) -> Result<Edge> {
    let (u, v) = (parse_vertex(line, u)?, parse_vertex(line, v)?);
    for x in [u, v] {
        if x == 0 || x as usize > n {
            return Err(Error::IndexOutOfRange { line, vertex: x, n });
        }
    }
    if u >= v {
        return Err(parse_err(line, format!("expected u < v, found {u} {v}")));
    }
    Ok(Edge::of(u, v))
}

/// Parses the instance text format.
pub fn parse_instance<W: Weight>(text: &str) -> Result<WeightedInstance<W>> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| parse_err(1, "missing \"n <N>\" header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| parse_err(line, format!("invalid vertex count {count:?}")))?,
        _ => return Err(parse_err(line, "expected \"n <N>\" header")),
    };
    let mut instance = WeightedInstance::new(n);
    let mut seen = BTreeSet::new();
    for (line, body) in lines {
        let [u, v, w] = body.split_whitespace().collect::<Vec<_>>()[..] else {
            return Err(parse_err(line, "expected \"u v w\""));
        };
        let e = parse_pair(line, u, v, n)?;
        if !seen.insert(e) {
            return Err(Error::DuplicateEdge { line, edge: e });
        }
        let weight = W::parse_decimal(w)
            .filter(W::is_admissible)
            .ok_or_else(|| parse_err(line, format!("invalid weight {w:?}")))?;
        instance.set(e, weight)?;
    }
    Ok(instance)
}

/// Writes the instance text format, listing only positive weights.
pub fn write_instance<W: Weight>(instance: &WeightedInstance<W>) -> String {
    let mut out = format!("n {}\n", instance.n());
    for (e, w) in instance.iter() {
        let _ = writeln!(out, "{} {} {}", e.lo(), e.hi(), w.to_decimal());
    }
    out
}

/// Parses a list of `u v` lines (comments and blanks allowed) over `1..=n`.
pub fn parse_edge_list(text: &str, n: usize) -> Result<BTreeSet<Edge>> {
    let mut edges = BTreeSet::new();
    for (line, body) in content_lines(text) {
        let [u, v] = body.split_whitespace().collect::<Vec<_>>()[..] else {
            return Err(parse_err(line, "expected \"u v\""));
        };
        let e = parse_pair(line, u, v, n)?;
        if !edges.insert(e) {
            return Err(Error::DuplicateEdge { line, edge: e });
        }
    }
    Ok(edges)
}

/// DOT rendering of `g`: nodes, edges, then one comment per face listing its
/// corners in a coherent orientation.
pub fn export_dot(g: &Triangulation) -> String {
    let mut out = String::from("graph triangulation {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.lo(), e.hi());
    }
    for [a, b, c] in g.oriented_faces() {
        let _ = writeln!(out, "  // face {a} {b} {c}");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;

    #[test]
    fn single_edge() {
        let w: WeightedInstance<Exact> = parse_instance("n 4\n1 2 3.5\n").unwrap();
        assert_eq!(w.n(), 4);
        assert_eq!(w.weight(Edge::of(1, 2)), Exact::new(7, 2));
        assert_eq!(w.iter().count(), 1);
    }

    #[test]
    fn reversed_pair_is_rejected() {
        let r = parse_instance::<Exact>("n 4\n2 1 1\n");
        assert!(matches!(r, Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn other_errors() {
        assert!(matches!(
            parse_instance::<f64>("n 4\n1 2 1\n# c\n1 2 3\n"),
            Err(Error::DuplicateEdge { line: 4, .. })
        ));
        assert!(matches!(
            parse_instance::<f64>("n 4\n1 5 1\n"),
            Err(Error::IndexOutOfRange { line: 2, vertex: 5, n: 4 })
        ));
        assert!(matches!(parse_instance::<f64>("1 2 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_instance::<f64>("n 4\n1 2 -1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_instance::<f64>("n 4\n1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_instance::<f64>(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn round_trip() {
        let text = "n 5\n1 2 2\n1 3 0.25\n4 5 10\n";
        let w: WeightedInstance<Exact> = parse_instance(text).unwrap();
        assert_eq!(write_instance(&w), text);
    }

    #[test]
    fn edge_list() {
        let e = parse_edge_list("# forced\n1 2\n\n2 3\n", 4).unwrap();
        assert_eq!(e, [Edge::of(1, 2), Edge::of(2, 3)].into());
        assert!(parse_edge_list("1 2 3\n", 4).is_err());
    }

    #[test]
    fn dot_counts() {
        let k4 = export_dot(&Triangulation::stacked(4).unwrap());
        assert_eq!(k4.matches(" -- ").count(), 6);
        assert_eq!(k4.matches("// face").count(), 4);
        let g5 = export_dot(&Triangulation::stacked(5).unwrap());
        assert_eq!(g5.matches(" -- ").count(), 9);
        assert_eq!(g5.matches("// face").count(), 6);
        assert_eq!(g5.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("--")).count(), 5);
    }
}
