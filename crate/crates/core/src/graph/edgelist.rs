//! Plain-text edge lists.
//!
//! The first non-comment line holds the vertex count `n`; every following
//! non-comment line holds one edge `u v` with 0-based ids. Lines starting
//! with `#` and blank lines are skipped. Repeated edges are rejected.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a vertex count, found `{header}`"),
    })?;
    let mut g = Graph::empty(n).map_err(|e| Error::Parse {
        line,
        message: e.to_string(),
    })?;

    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(Error::Parse {
                line,
                message: format!("expected `u v`, found `{text}`"),
            });
        };
        let parse_id = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("invalid vertex id `{s}`"),
            })
        };
        let (u, v) = (parse_id(a)?, parse_id(b)?);
        g = g.add_edge(u, v).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
    }
    Ok(g)
}

pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.order()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse("# a path\n\n4\n0 1\n1 2\n  # inner\n2 3\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn round_trip() {
        let g = Graph::from_edges(5, [(0, 4), (1, 2), (2, 4)]).unwrap();
        assert_eq!(parse(&write(&g)).unwrap(), g);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse("3\n0 1\n1 1\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "self-loop at vertex 1".into()
            }
        );
        assert!(matches!(
            parse("3\n0 1\n1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse("3\n0 1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse("x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse("2\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn empty_input() {
        assert!(matches!(parse(""), Err(Error::Parse { line: 0, .. })));
        assert!(matches!(
            parse("# only\n"),
            Err(Error::Parse { line: 0, .. })
        ));
    }
}
