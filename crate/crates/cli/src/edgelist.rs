//! The edge-list document: a header `p N` followed by one `u v` pair per
//! line, 0-based. `#` starts a comment and `;` may stand in for a newline, so
//! a whole document fits on one line.

use std::fmt;

use outerinj::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().flat_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        body.split(';')
            .map(move |rec| (i + 1, rec.split_whitespace().collect::<Vec<_>>()))
            .filter(|(_, toks)| !toks.is_empty())
            .collect::<Vec<_>>()
    })
}

fn number(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError { line, message: format!("expected a non-negative integer, got {tok:?}") })
}

/// Parses one document. Ids must be in range; loops and repeated edges are
/// rejected.
pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut recs = records(text);
    let (line, header) = recs.next().ok_or(ParseError { line: 1, message: "empty document".into() })?;
    let n = match header.as_slice() {
        ["p", n] => number(n, line)?,
        _ => return Err(ParseError { line, message: "expected header `p N`".into() }),
    };
    let mut g = Graph::new(n);
    for (line, toks) in recs {
        let [u, v] = toks.as_slice() else {
            return Err(ParseError { line, message: "expected `u v`".into() });
        };
        let (u, v) = (number(u, line)?, number(v, line)?);
        if u >= n || v >= n {
            return Err(ParseError { line, message: format!("vertex id out of range 0..{n}") });
        }
        if u == v {
            return Err(ParseError { line, message: format!("self-loop at {u}") });
        }
        if !g.add_edge(u, v) {
            return Err(ParseError { line, message: format!("repeated edge {u} {v}") });
        }
    }
    Ok(g)
}

/// Multi-line form.
pub fn write(g: &Graph) -> String {
    let mut out = format!("p {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Single-line form with `;` separators.
pub fn write_line(g: &Graph) -> String {
    let mut out = format!("p {}", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("; {u} {v}"));
    }
    out
}

/// A coloring file: either whitespace-separated color indices or a JSON
/// object with a `colors` array, as printed by `color --json`.
pub fn parse_colors(text: &str) -> Result<Vec<usize>, ParseError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        #[derive(serde::Deserialize)]
        struct Doc {
            colors: Vec<usize>,
        }
        return serde_json::from_str::<Doc>(trimmed)
            .map(|d| d.colors)
            .map_err(|e| ParseError { line: e.line(), message: e.to_string() });
    }
    records(text).flat_map(|(line, toks)| toks.into_iter().map(move |t| number(t, line))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::cycle(5);
        assert_eq!(parse(&write(&g)).unwrap(), g);
        assert_eq!(parse(&write_line(&g)).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse("# a path\n\np 3\n0 1 # first\n\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn rejects_bad_documents() {
        for bad in ["", "q 3", "p x", "p 2\n0 2", "p 2\n0 0", "p 2\n0 1\n1 0", "p 3\n0 1 2"] {
            assert!(parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn colors_in_both_forms() {
        assert_eq!(parse_colors("0 1\n2 3").unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(parse_colors(r#"{"certificate":"pattern","colors":[0,1,2]}"#).unwrap(), vec![0, 1, 2]);
        assert!(parse_colors("0 -1").is_err());
    }
}
