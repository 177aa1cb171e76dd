use super::step::{extend_by_lists, recurse_without, Ctx};
use super::{certify, embedding, patterns, require, theorem7, ColorerOutcome, Side};
use crate::graph::{girth, is_two_connected, Graph};
use crate::injective::Certificate;
use crate::outerplanar::algorithm1;
use crate::Result;

/// Injective `Δ`-coloring of a 2-connected outerplanar graph with maximum
/// degree at least 5 and girth at least 4.
pub fn theorem14_color(g: &Graph) -> Result<ColorerOutcome> {
    embedding(g)?;
    require(is_two_connected(g), "graph must be 2-connected")?;
    let k = g.max_degree();
    require(k >= 5, "maximum degree must be at least 5")?;
    require(girth(g).at_least(4), "girth must be at least 4")?;
    let mut ctx = Ctx::new(k, Side::NONE);
    let colors = color(g, &mut ctx)?;
    certify(g, colors, k, Certificate::Theorem14, Side::NONE, ctx.fallbacks)
}

fn color(g: &Graph, ctx: &mut Ctx) -> Result<Vec<usize>> {
    match g.max_degree() {
        0..=2 => return Ok(patterns::path_or_cycle_colors(g)),
        4 if g.vertex_count() > 8 => {
            let (colors, fallbacks) = theorem7::color_counted(g)?;
            ctx.fallbacks += fallbacks;
            return Ok(colors);
        }
        _ if g.vertex_count() <= 8 || g.max_degree() < 4 => return ctx.base(g),
        _ => {}
    }
    let emb = embedding(g)?;
    let f = algorithm1(g, &emb)?;
    let h = f.interior_two_vertices.clone();
    let mut colors = recurse_without(g, &h, |rest| color(rest, ctx))?;
    // an end of degree at most 4 leaves every vertex of H an available color
    extend_by_lists(g, &mut colors, &h, ctx.k);
    ctx.settle(g, &mut colors, &h)?;
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
    fn twelve_cycle_with_three_chords_at_one_vertex() {
        let g = with_chords(12, &[(0, 3), (0, 6), (0, 9)]);
        let out = theorem14_color(&g).unwrap();
        assert_eq!(out.bound, 5);
        assert_eq!(chi_injective_exact(&g, 5).unwrap().0, 5);
    }

    #[test]
    fn rejections() {
        let fan = with_chords(10, &[(0, 2), (0, 4), (0, 6), (0, 8)]);
        assert!(matches!(theorem14_color(&fan), Err(Error::PreconditionViolated(_))));
        let four = with_chords(12, &[(0, 3), (0, 6)]);
        assert!(matches!(theorem14_color(&four), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn two_heavy_vertices() {
        let g = with_chords(20, &[(0, 3), (0, 6), (0, 9), (9, 12), (9, 14), (9, 16)]);
        let out = theorem14_color(&g).unwrap();
        assert_eq!(out.bound, 6);
        assert!(out.verified);
    }
}
