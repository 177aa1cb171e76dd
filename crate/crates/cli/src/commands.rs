//! The subcommands, as functions from input text to printed output and an
//! exit code.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use outerinj::colorers::{
    neighborhood_set_property, theorem14_color, theorem15_color, theorem16_color, theorem20_color, theorem7_color,
};
use outerinj::enumgen::{enumerate_2conn_outerplanar, search_extremal, GraphClassFilter};
use outerinj::graph::girth;
use outerinj::injective::{
    chi_injective_exact, is_injective, simple_path_color_property, Injectivity, PathMode, PathProperty,
};
use outerinj::{auto_color, Certificate, Coloring, Error, Girth, Graph};

use crate::edgelist::{self, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;
pub const EXIT_CAP: i32 = 4;
pub const EXIT_NOT_FOUND: i32 = 5;
/// A colorer failed its own verification; never expected.
pub const EXIT_INTERNAL: i32 = 6;

/// What a command prints to stdout and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_OK }
    }
}

/// A failed command: message for stderr plus exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure { code: EXIT_PARSE, message: format!("parse error: {e}") }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidGraph(_) | Error::PartialColoring { .. } => EXIT_PARSE,
            Error::DisconnectedInput
            | Error::NotOuterplanar
            | Error::PreconditionViolated(_)
            | Error::SizeGuard { .. }
            | Error::FilterUnsatisfiable => EXIT_PRECONDITION,
            Error::ExceedsCap { .. } => EXIT_CAP,
            Error::NotFound => EXIT_NOT_FOUND,
            Error::NoColoring | Error::UnsupportedShape | Error::InternalVerificationFailure(_) => EXIT_INTERNAL,
        };
        Failure { code, message: e.to_string() }
    }
}

type Result<T> = std::result::Result<T, Failure>;

fn joined(colors: &[usize]) -> String {
    colors.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn json<T: Serialize>(value: &T) -> String {
    // struct fields are declared in key order, so the output is canonical
    serde_json::to_string(value).expect("plain data serializes") + "\n"
}

/// Extra property checked by `validate` besides injectivity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extra {
    AtMost3,
    Exactly3,
    Neighborhoods,
}

#[derive(Serialize)]
struct ValidateDoc {
    kind: Option<&'static str>,
    valid: bool,
    witness: Vec<usize>,
}

/// Checks a coloring; exit 3 with the first witness on failure.
pub fn validate(graph_text: &str, coloring_text: &str, extras: &[Extra], as_json: bool) -> Result<Outcome> {
    let g = edgelist::parse(graph_text)?;
    let c = Coloring::new(edgelist::parse_colors(coloring_text)?, Certificate::External);
    let mut verdict: Option<(&'static str, Vec<usize>)> = match is_injective(&g, &c)? {
        Injectivity::Valid => None,
        Injectivity::Violation { u, v, w } => Some(("injective", vec![u, v, w])),
    };
    for &extra in extras {
        if verdict.is_some() {
            break;
        }
        verdict = match extra {
            Extra::AtMost3 | Extra::Exactly3 => {
                let mode = if extra == Extra::AtMost3 { PathMode::AtMost3 } else { PathMode::Exactly3 };
                match simple_path_color_property(&g, &c, mode)? {
                    PathProperty::Valid => None,
                    PathProperty::Violation(p) => Some(("path", p)),
                }
            }
            Extra::Neighborhoods => neighborhood_set_property(&g, &c)?.map(|(u, v)| ("neighborhood", vec![u, v])),
        };
    }
    let code = if verdict.is_some() { EXIT_VIOLATION } else { EXIT_OK };
    let stdout = if as_json {
        let (kind, witness) = verdict.map_or((None, Vec::new()), |(k, w)| (Some(k), w));
        json(&ValidateDoc { kind, valid: code == EXIT_OK, witness })
    } else {
        match verdict {
            None => "Valid\n".to_string(),
            Some(("injective", w)) => format!("Violation({},{},{})\n", w[0], w[1], w[2]),
            Some((kind, w)) => {
                format!("Violation[{kind}]({})\n", w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            }
        }
    };
    Ok(Outcome { stdout, code })
}

/// Colorer selected on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    Auto,
    T15,
    T16,
    T20,
    T7,
    T14,
}

impl std::str::FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "auto" => Theorem::Auto,
            "15" => Theorem::T15,
            "16" => Theorem::T16,
            "20" => Theorem::T20,
            "7" => Theorem::T7,
            "14" => Theorem::T14,
            _ => return Err(format!("unknown theorem {s:?}; expected auto, 15, 16, 20, 7 or 14")),
        })
    }
}

#[derive(Serialize)]
struct ColorDoc {
    certificate: &'static str,
    colors: Vec<usize>,
    n: usize,
    palette: usize,
    verified: bool,
}

pub fn color(graph_text: &str, theorem: Theorem, as_json: bool) -> Result<Outcome> {
    let g = edgelist::parse(graph_text)?;
    let out = match theorem {
        Theorem::Auto => auto_color(&g),
        Theorem::T15 => theorem15_color(&g),
        Theorem::T16 => theorem16_color(&g),
        Theorem::T20 => theorem20_color(&g),
        Theorem::T7 => theorem7_color(&g),
        Theorem::T14 => theorem14_color(&g),
    }?;
    let doc = ColorDoc {
        certificate: out.theorem.as_str(),
        colors: out.coloring.colors,
        n: g.vertex_count(),
        palette: out.bound,
        verified: out.verified,
    };
    Ok(Outcome::ok(if as_json {
        json(&doc)
    } else {
        format!("certificate {}\npalette {}\ncolors {}\n", doc.certificate, doc.palette, joined(&doc.colors))
    }))
}

/// Default cap for the exact solver: the general upper bound `Δ² - Δ + 1`.
fn default_cap(g: &Graph) -> usize {
    let d = g.max_degree();
    (d * d).saturating_sub(d) + 1
}

#[derive(Serialize)]
struct ExactDoc {
    chi: usize,
    colors: Vec<usize>,
    n: usize,
}

pub fn exact(graph_text: &str, cap: Option<usize>, as_json: bool) -> Result<Outcome> {
    let g = edgelist::parse(graph_text)?;
    let (chi, c) = chi_injective_exact(&g, cap.unwrap_or_else(|| default_cap(&g)))?;
    Ok(Outcome::ok(if as_json {
        json(&ExactDoc { chi, colors: c.colors, n: g.vertex_count() })
    } else {
        format!("chi_i {chi}\ncolors {}\n", joined(&c.colors))
    }))
}

/// Parses a girth bound: a positive integer or `inf`.
pub fn parse_girth(s: &str) -> std::result::Result<Girth, String> {
    if s == "inf" {
        return Ok(Girth::Infinite);
    }
    s.parse::<usize>().map(Girth::Finite).map_err(|_| format!("expected an integer or `inf`, got {s:?}"))
}

/// Parses `M:R` for the forbidden face degree residue.
pub fn parse_residue(s: &str) -> std::result::Result<(usize, usize), String> {
    let (m, r) = s.split_once(':').ok_or_else(|| format!("expected MODULUS:RESIDUE, got {s:?}"))?;
    let m: usize = m.parse().map_err(|_| format!("bad modulus {m:?}"))?;
    let r: usize = r.parse().map_err(|_| format!("bad residue {r:?}"))?;
    if m == 0 {
        return Err("modulus must be positive".into());
    }
    Ok((m, r))
}

#[derive(Serialize)]
struct Bucket {
    count: usize,
    delta: usize,
    girth: String,
    max_chi: usize,
}

#[derive(Serialize)]
struct StatsDoc {
    count: usize,
    histogram: Vec<Bucket>,
    max_chi: usize,
}

/// One document per line, or with `stats` the count, the largest injective
/// chromatic number seen and a `(Δ, girth)` histogram.
pub fn enumerate(n: usize, filter: GraphClassFilter, stats: bool, as_json: bool) -> Result<Outcome> {
    let stream = enumerate_2conn_outerplanar(n, filter)?;
    if !stats {
        let mut out = String::new();
        for (g, _) in stream {
            out.push_str(&edgelist::write_line(&g));
            out.push('\n');
        }
        return Ok(Outcome::ok(out));
    }
    let mut count = 0;
    let mut max_chi = 0;
    let mut buckets: BTreeMap<(usize, Girth), (usize, usize)> = BTreeMap::new();
    for (g, _) in stream {
        let (chi, _) = chi_injective_exact(&g, default_cap(&g))?;
        count += 1;
        max_chi = max_chi.max(chi);
        let entry = buckets.entry((g.max_degree(), girth(&g))).or_default();
        entry.0 += 1;
        entry.1 = entry.1.max(chi);
    }
    let histogram: Vec<Bucket> = buckets
        .into_iter()
        .map(|((delta, gi), (count, max_chi))| Bucket { count, delta, girth: gi.to_string(), max_chi })
        .collect();
    Ok(Outcome::ok(if as_json {
        json(&StatsDoc { count, histogram, max_chi })
    } else {
        let mut out = format!("count {count}\nmax_chi_i {max_chi}\ndelta girth count max_chi_i\n");
        for b in histogram {
            out.push_str(&format!("{} {} {} {}\n", b.delta, b.girth, b.count, b.max_chi));
        }
        out
    }))
}

pub fn search(delta: usize, girth_target: Girth, chi: usize, n_max: usize) -> Result<Outcome> {
    Ok(Outcome::ok(edgelist::write(&search_extremal(n_max, delta, girth_target, chi)?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_names() {
        assert_eq!("auto".parse::<Theorem>(), Ok(Theorem::Auto));
        assert_eq!("14".parse::<Theorem>(), Ok(Theorem::T14));
        assert!("3".parse::<Theorem>().is_err());
    }

    #[test]
    fn girth_and_residue_arguments() {
        assert_eq!(parse_girth("inf"), Ok(Girth::Infinite));
        assert_eq!(parse_girth("5"), Ok(Girth::Finite(5)));
        assert!(parse_girth("five").is_err());
        assert_eq!(parse_residue("4:2"), Ok((4, 2)));
        assert!(parse_residue("0:1").is_err());
    }

    #[test]
    fn json_keys_are_sorted() {
        let out = color("p 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n", Theorem::Auto, true).unwrap();
        assert_eq!(
            out.stdout,
            "{\"certificate\":\"pattern\",\"colors\":[0,1,2,0,1,2,0],\"n\":7,\"palette\":3,\"verified\":true}\n"
        );
    }
}
