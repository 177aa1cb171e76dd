//! Constructive injective colorers for outerplanar graphs of bounded degree
//! and girth, plus a dispatcher.
//!
//! Each colorer removes the 2-vertices of an end face, colors the rest
//! recursively, and extends the coloring along the face. Every step is
//! re-verified; a step whose construction does not verify is repaired by
//! exhaustive search over a growing region, and the number of such repairs is
//! reported in [`ColorerOutcome::fallback_steps`].

mod csp;
mod patterns;
mod step;
mod theorem14;
mod theorem15;
mod theorem16;
mod theorem20;
mod theorem7;

use crate::graph::{girth, is_two_connected, Graph};
use crate::injective::{
    chi_injective_exact, four_windows, injective_ok, is_injective, simple_path_color_property, window_ok, Certificate,
    Coloring, Injectivity, PathMode, PathProperty,
};
use crate::outerplanar::{inner_faces, recognize, OuterEmbedding};
use crate::{Error, Result};

pub use patterns::cycle_injective_color;
pub use theorem14::theorem14_color;
pub use theorem15::theorem15_color;
pub use theorem16::theorem16_color;
pub use theorem20::theorem20_color;
pub use theorem7::theorem7_color;

/// Properties a coloring must have beyond injectivity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Side {
    pub windows: Option<PathMode>,
    pub neighborhoods: bool,
}

impl Side {
    pub const NONE: Side = Side { windows: None, neighborhoods: false };
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorerOutcome {
    pub coloring: Coloring,
    /// Palette size the procedure guarantees.
    pub bound: usize,
    pub theorem: Certificate,
    pub verified: bool,
    /// Steps whose direct construction failed verification and were repaired
    /// by search.
    pub fallback_steps: usize,
}

/// First edge `uv` (both ends of degree 3) whose two neighborhood color sets
/// `{c(u)} + N(v)\u` and `{c(v)} + N(u)\v` coincide.
pub fn neighborhood_set_property(g: &Graph, c: &Coloring) -> Result<Option<(usize, usize)>> {
    if c.colors.len() != g.vertex_count() {
        return Err(Error::PartialColoring { expected: g.vertex_count(), got: c.colors.len() });
    }
    Ok(first_neighborhood_clash(g, &c.colors))
}

fn first_neighborhood_clash(g: &Graph, colors: &[usize]) -> Option<(usize, usize)> {
    csp::neighborhood_pairs(g).into_iter().find_map(|(x, y)| {
        let mut a = x.map(|v| colors[v]);
        let mut b = y.map(|v| colors[v]);
        a.sort_unstable();
        b.sort_unstable();
        (a == b).then_some((x[0], y[0]))
    })
}

/// Complete, within `0..k`, injective and meeting `side`.
pub(crate) fn satisfies(g: &Graph, colors: &[usize], k: usize, side: Side) -> bool {
    colors.len() == g.vertex_count()
        && colors.iter().all(|&c| c < k)
        && injective_ok(g, colors)
        && side.windows.is_none_or(|mode| four_windows(g).iter().all(|p| window_ok(colors, p, mode)))
        && (!side.neighborhoods || first_neighborhood_clash(g, colors).is_none())
}

/// Runs the full public checkers on a finished coloring.
fn certify(
    g: &Graph,
    colors: Vec<usize>,
    bound: usize,
    theorem: Certificate,
    side: Side,
    fallbacks: usize,
) -> Result<ColorerOutcome> {
    let coloring = Coloring { colors, palette: bound, certificate: theorem };
    let mut ok = coloring.colors.iter().all(|&c| c < bound) && is_injective(g, &coloring)? == Injectivity::Valid;
    if let Some(mode) = side.windows {
        ok &= simple_path_color_property(g, &coloring, mode)? == PathProperty::Valid;
    }
    if side.neighborhoods {
        ok &= neighborhood_set_property(g, &coloring)?.is_none();
    }
    if !ok {
        return Err(Error::InternalVerificationFailure(format!("{theorem} output failed its checks")));
    }
    Ok(ColorerOutcome { coloring, bound, theorem, verified: true, fallback_steps: fallbacks })
}

/// Precondition report shared by the colorers.
fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(what.into()))
    }
}

fn embedding(g: &Graph) -> Result<OuterEmbedding> {
    if g.vertex_count() == 0 {
        return Err(Error::PreconditionViolated("empty graph".into()));
    }
    recognize(g)
}

/// True when no inner face has degree `residue` modulo `modulus`.
pub(crate) fn faces_avoid(g: &Graph, emb: &OuterEmbedding, modulus: usize, residue: usize) -> bool {
    inner_faces(emb, g).iter().all(|f| f.degree() % modulus != residue)
}

/// Colors a connected outerplanar graph with the most specific procedure
/// whose hypotheses hold, falling back to exact search with cap `Δ + 2`.
pub fn auto_color(g: &Graph) -> Result<ColorerOutcome> {
    let emb = embedding(g)?;
    let delta = g.max_degree();
    let gi = girth(g);
    let two_connected = is_two_connected(g);
    if delta <= 2 {
        let colors = patterns::path_or_cycle_colors(g);
        let bound = colors.iter().map(|&c| c + 1).max().unwrap_or(1);
        return certify(g, colors, bound, Certificate::Pattern, Side::NONE, 0);
    }
    if delta == 3 && gi.at_least(6) {
        return theorem20_color(g);
    }
    if delta == 3 && two_connected && gi.at_least(5) && faces_avoid(g, &emb, 4, 2) {
        return theorem16_color(g);
    }
    if delta == 3 {
        return theorem15_color(g);
    }
    if delta == 4 && two_connected && gi.at_least(4) {
        return theorem7_color(g);
    }
    if delta >= 5 && two_connected && gi.at_least(4) {
        return theorem14_color(g);
    }
    match chi_injective_exact(g, delta + 2) {
        Ok((k, c)) => certify(g, c.colors, k, Certificate::Exact, Side::NONE, 0),
        Err(Error::ExceedsCap { cap }) => {
            Err(Error::InternalVerificationFailure(format!("injective chromatic number above {cap}")))
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with_chords(n: usize, chords: &[(usize, usize)]) -> Graph {
        let mut g = Graph::cycle(n);
        for &(a, b) in chords {
            g.add_edge(a, b);
        }
        g
    }

    #[test]
    fn dispatcher_routes() {
        assert_eq!(auto_color(&Graph::cycle(9)).unwrap().theorem, Certificate::Pattern);
        assert_eq!(auto_color(&with_chords(12, &[(0, 6)])).unwrap().theorem, Certificate::Theorem20);
        assert_eq!(auto_color(&with_chords(13, &[(0, 4), (5, 11)])).unwrap().theorem, Certificate::Theorem16);
        assert_eq!(auto_color(&with_chords(6, &[(0, 3)])).unwrap().theorem, Certificate::Theorem15);
        assert_eq!(auto_color(&with_chords(8, &[(0, 3), (0, 5)])).unwrap().theorem, Certificate::Theorem7);
        let t14 = with_chords(12, &[(0, 3), (0, 6), (0, 9)]);
        assert_eq!(auto_color(&t14).unwrap().theorem, Certificate::Theorem14);
        let fan = with_chords(6, &[(0, 2), (0, 3), (0, 4)]);
        let out = auto_color(&fan).unwrap();
        assert_eq!(out.theorem, Certificate::Exact);
        assert!(out.bound <= 5 + 2);
        assert_eq!(auto_color(&Graph::complete(4)), Err(Error::NotOuterplanar));
    }

    #[test]
    fn neighborhood_clash_is_reported() {
        // two adjacent 3-vertices 0 and 1 whose sets coincide
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let c = Coloring::new(vec![0, 1, 0, 2, 1, 2], Certificate::External);
        assert_eq!(neighborhood_set_property(&g, &c).unwrap(), Some((0, 1)));
        let d = Coloring::new(vec![0, 1, 0, 2, 1, 3], Certificate::External);
        assert_eq!(neighborhood_set_property(&g, &d).unwrap(), None);
    }
}
