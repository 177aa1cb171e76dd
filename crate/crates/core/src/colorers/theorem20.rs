use super::csp::UNSET;
use super::step::{end_block_face, extend_by_lists, recurse_without, Anchors, Ctx};
use super::{certify, embedding, patterns, require, ColorerOutcome, Side};
use crate::graph::{girth, Graph};
use crate::injective::Certificate;
use crate::Result;

const K: usize = 3;

/// Injective 3-coloring of a connected outerplanar graph with maximum degree 3
/// and girth at least 6.
pub fn theorem20_color(g: &Graph) -> Result<ColorerOutcome> {
    embedding(g)?;
    require(g.max_degree() == 3, "maximum degree must be 3")?;
    require(girth(g).at_least(6), "girth must be at least 6")?;
    let mut ctx = Ctx::new(K, Side::NONE);
    let colors = color(g, &mut ctx)?;
    certify(g, colors, K, Certificate::Theorem20, Side::NONE, ctx.fallbacks)
}

fn color(g: &Graph, ctx: &mut Ctx) -> Result<Vec<usize>> {
    if g.max_degree() <= 2 {
        return Ok(patterns::path_or_cycle_colors(g));
    }
    // a leaf sees at most two other colors through its neighbor
    let removed = match g.vertices().find(|&v| g.degree(v) == 1) {
        Some(leaf) => vec![leaf],
        None => {
            let emb = embedding(g)?;
            Anchors::new(g, &emb, &end_block_face(g, &emb)?, false).h
        }
    };
    let mut colors = recurse_without(g, &removed, |rest| color(rest, ctx))?;
    if !extend_by_lists(g, &mut colors, &removed, K) {
        for &v in &removed {
            colors[v] = UNSET;
        }
    }
    ctx.settle(g, &mut colors, &removed)?;
    Ok(colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::injective::chi_injective_exact;
    use crate::Error;

    fn with_chords(n: usize, chords: &[(usize, usize)]) -> Graph {
        let mut g = Graph::cycle(n);
        for &(a, b) in chords {
            g.add_edge(a, b);
        }
        g
    }

    #[test]
    fn twelve_cycle_with_diameter() {
        let g = with_chords(12, &[(0, 6)]);
        let out = theorem20_color(&g).unwrap();
        assert_eq!(out.bound, 3);
        assert_eq!(chi_injective_exact(&g, 3).unwrap().0, 3);
    }

    #[test]
    fn girth_four_is_rejected() {
        assert!(matches!(theorem20_color(&with_chords(6, &[(0, 3)])), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn cactus_with_pendant_path() {
        // two hexagons sharing a path of blocks, plus a tail
        let mut g = Graph::new(16);
        for i in 0..6 {
            g.add_edge(i, (i + 1) % 6);
            g.add_edge(7 + i, 7 + (i + 1) % 6);
        }
        g.add_edge(0, 6);
        g.add_edge(6, 7);
        g.add_edge(3, 13);
        g.add_edge(13, 14);
        g.add_edge(14, 15);
        let out = theorem20_color(&g).unwrap();
        assert!(out.verified);
    }
}
