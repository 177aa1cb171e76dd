use super::csp::UNSET;
use super::step::{end_block_face, first_outside, lay_string, recurse_without, Anchors, Ctx};
use super::{certify, embedding, patterns, require, ColorerOutcome, Side};
use crate::graph::Graph;
use crate::injective::{Certificate, PathMode};
use crate::outerplanar::maximal_simple_path_from;
use crate::Result;

const K: usize = 4;
const SIDE: Side = Side { windows: Some(PathMode::AtMost3), neighborhoods: false };

/// Injective 4-coloring of a connected outerplanar graph with maximum degree 3
/// in which every simple path of length three shows at most three colors.
pub fn theorem15_color(g: &Graph) -> Result<ColorerOutcome> {
    embedding(g)?;
    require(g.max_degree() == 3, "maximum degree must be 3")?;
    let mut ctx = Ctx::new(K, SIDE);
    let colors = color(g, &mut ctx)?;
    certify(g, colors, K, Certificate::Theorem15, SIDE, ctx.fallbacks)
}

fn color(g: &Graph, ctx: &mut Ctx) -> Result<Vec<usize>> {
    if g.max_degree() <= 2 {
        // at most three colors, so every window trivially has at most three
        return Ok(patterns::path_or_cycle_colors(g));
    }
    if g.vertex_count() <= 8 {
        return ctx.base(g);
    }
    if let Some(leaf) = g.vertices().find(|&v| g.degree(v) == 1) {
        return pendant_path(g, leaf, ctx);
    }
    let emb = embedding(g)?;
    let face = end_block_face(g, &emb)?;
    let a = Anchors::new(g, &emb, &face, false);
    let mut colors = recurse_without(g, &a.h, |rest| color(rest, ctx))?;
    extend_face(&mut colors, &a);
    ctx.settle(g, &mut colors, &a.h)?;
    Ok(colors)
}

/// Strips the maximal simple path ending at the leaf and colors it back from
/// its far end `v_k` with `s s t t ..`, where `t = c(v_k)` and `s` avoids
/// `v_k` and its two other neighbors.
fn pendant_path(g: &Graph, leaf: usize, ctx: &mut Ctx) -> Result<Vec<usize>> {
    let path = maximal_simple_path_from(g, leaf)?;
    let vk = path[path.len() - 1];
    let strip = &path[..path.len() - 1];
    let mut colors = recurse_without(g, strip, |rest| color(rest, ctx))?;
    let t = colors[vk];
    let mut avoid: Vec<usize> = g.neighbors(vk).iter().map(|&w| colors[w]).filter(|&c| c != UNSET).collect();
    avoid.push(t);
    if let Some(s) = first_outside(K, &avoid) {
        let back: Vec<usize> = strip.iter().rev().copied().collect();
        lay_string(&mut colors, &back, [s, s, t, t]);
    }
    ctx.settle(g, &mut colors, strip)?;
    Ok(colors)
}

/// The two string cases, keyed on whether `v_i` and `v_j` share a color.
fn extend_face(colors: &mut [usize], a: &Anchors) {
    let (ca, cb, cd, ce) = (colors[a.prev_i], colors[a.vi], colors[a.vj], colors[a.next_j]);
    let h = &a.h;
    let l = h.len();
    if cb == cd {
        let Some(s) = first_outside(K, &[ca, cb, ce]) else { return };
        let Some(t) = first_outside(K, &[cb, ce, s]) else { return };
        lay_string(colors, h, [s, s, t, t]);
        if a.vi == a.vj && matches!(l % 4, 1 | 2) {
            if let Some(t2) = first_outside(K, &[ca, s, t]) {
                colors[h[l - 1]] = t2;
            }
        }
    } else {
        let Some(s) = first_outside(K, &[ca, cb, cd, ce]) else { return };
        let t = if matches!(l % 4, 1 | 2) { first_outside(K, &[cd, s]) } else { first_outside(K, &[cb, ce, s]) };
        let Some(t) = t else { return };
        lay_string(colors, h, [s, s, t, t]);
        if l.is_multiple_of(4) && t == cd && l >= 2 {
            if let Some(t2) = first_outside(K, &[cd, s]) {
                colors[h[l - 2]] = t2;
            }
        }
    }
}
