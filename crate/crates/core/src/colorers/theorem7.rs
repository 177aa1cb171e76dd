use super::csp::UNSET;
use super::step::{available, extend_by_lists, recurse_without, Anchors, Ctx};
use super::{certify, embedding, patterns, require, ColorerOutcome, Side};
use crate::graph::{girth, is_two_connected, Graph};
use crate::injective::Certificate;
use crate::outerplanar::{end_faces, preferred_face, Face, OuterEmbedding};
use crate::Result;

const K: usize = 4;
pub(crate) const SIDE: Side = Side { windows: None, neighborhoods: true };

/// Injective 4-coloring of a 2-connected outerplanar graph with maximum degree
/// 4 and girth at least 4, such that adjacent 3-vertices `u`, `v` never see
/// the same color set on `{u} + N(v) - u` and `{v} + N(u) - v`.
pub fn theorem7_color(g: &Graph) -> Result<ColorerOutcome> {
    embedding(g)?;
    require(is_two_connected(g), "graph must be 2-connected")?;
    require(g.max_degree() == 4, "maximum degree must be 4")?;
    require(girth(g).at_least(4), "girth must be at least 4")?;
    let (colors, fallbacks) = color_counted(g)?;
    certify(g, colors, K, Certificate::Theorem7, SIDE, fallbacks)
}

/// Runs the recursion with its own palette and side property; returns the
/// coloring and the number of repaired steps.
pub(crate) fn color_counted(g: &Graph) -> Result<(Vec<usize>, usize)> {
    let mut ctx = Ctx::new(K, SIDE);
    let colors = color(g, &mut ctx)?;
    Ok((colors, ctx.fallbacks))
}

fn end_degrees(g: &Graph, f: &Face) -> (usize, usize) {
    (g.degree(f.v_left()), g.degree(f.v_right()))
}

/// First face in preference order whose end degrees, as a sorted pair, equal
/// `want`.
fn face_with(g: &Graph, faces: &[Face], want: (usize, usize)) -> Option<Face> {
    let matching: Vec<Face> = faces
        .iter()
        .filter(|f| {
            let (x, y) = end_degrees(g, f);
            (x.min(y), x.max(y)) == want
        })
        .cloned()
        .collect();
    preferred_face(&matching).map(|i| matching[i].clone())
}

fn color(g: &Graph, ctx: &mut Ctx) -> Result<Vec<usize>> {
    if g.max_degree() <= 2 {
        return Ok(patterns::path_or_cycle_colors(g));
    }
    if g.vertex_count() <= 8 {
        return ctx.base(g);
    }
    if g.max_degree() == 3 {
        // only reached through a remainder the construction does not cover
        ctx.fallbacks += 1;
        return ctx.base(g);
    }
    let emb = embedding(g)?;
    let faces = end_faces(&emb, g);
    if let Some(f) = face_with(g, &faces, (3, 3)) {
        let a = Anchors::new(g, &emb, &f, false);
        let mut colors = recurse_without(g, &a.h, |rest| color(rest, ctx))?;
        extend_three_three(g, &mut colors, &a);
        ctx.settle(g, &mut colors, &a.h)?;
        return Ok(colors);
    }
    if let Some(f) = face_with(g, &faces, (3, 4)) {
        return four_three(g, &emb, &faces, &f, ctx);
    }
    let f = face_with(g, &faces, (4, 4))
        .unwrap_or_else(|| faces[preferred_face(&faces).expect("a polygon has an end face")].clone());
    let a = Anchors::new(g, &emb, &f, false);
    let mut colors = recurse_without(g, &a.h, |rest| color(rest, ctx))?;
    extend_by_lists(g, &mut colors, &a.h, K);
    ctx.settle(g, &mut colors, &a.h)?;
    Ok(colors)
}

/// Keeps `{v_{i-1}, v_i, v_j, v_{j+1}}` down to three colors across the face
/// when they repeat, so the neighborhood sets of `v_i` and `v_j` stay apart,
/// then list colors the rest of `H`.
fn extend_three_three(g: &Graph, colors: &mut [usize], a: &Anchors) {
    let mut x = vec![colors[a.prev_i], colors[a.vi], colors[a.vj], colors[a.next_j]];
    x.sort_unstable();
    x.dedup();
    if x.len() < 4 {
        let h1 = a.h[0];
        if let Some(&c1) = available(g, colors, h1, K).iter().find(|c| !x.contains(c)) {
            colors[h1] = c1;
            let hl = a.h[a.h.len() - 1];
            if hl != h1 {
                if let Some(&cl) = available(g, colors, hl, K).iter().find(|&&c| c != c1) {
                    colors[hl] = cl;
                }
            }
        }
    }
    if !extend_by_lists(g, colors, &a.h, K) {
        for &v in &a.h {
            colors[v] = UNSET;
        }
    }
}

/// The face with end degrees 4 and 3, read so that `v_i` has degree 4.
fn four_three(g: &Graph, emb: &OuterEmbedding, faces: &[Face], f: &Face, ctx: &mut Ctx) -> Result<Vec<usize>> {
    let a = Anchors::new(g, emb, f, g.degree(f.v_left()) == 3);
    let (rest, _) = g.without(&a.h);
    if rest.max_degree() == 4 {
        let mut colors = recurse_without(g, &a.h, |rest| color(rest, ctx))?;
        if g.degree(a.next_j) == 3 {
            let vs = g.neighbors(a.next_j).iter().copied().find(|&w| w != a.vj && w != a.next2_j);
            let mut y: Vec<usize> =
                [a.vi, a.vj, a.next_j, a.next2_j].into_iter().chain(vs).map(|v| colors[v]).collect();
            y.sort_unstable();
            y.dedup();
            if y.len() == 3 {
                let hl = a.h[a.h.len() - 1];
                if let Some(&c) = available(g, &colors, hl, K).iter().find(|c| !y.contains(c)) {
                    colors[hl] = c;
                }
            }
        }
        if !extend_by_lists(g, &mut colors, &a.h, K) {
            for &v in &a.h {
                colors[v] = UNSET;
            }
        }
        ctx.settle(g, &mut colors, &a.h)?;
        return Ok(colors);
    }
    // removing H drops the degree to 3: remove a second end face so that a
    // cycle remains
    for other in faces.iter().filter(|o| o.boundary != f.boundary) {
        let mut removed = a.h.clone();
        removed.extend(&other.interior_two_vertices);
        let (rest, _) = g.without(&removed);
        if rest.vertex_count() >= 3 && rest.is_cycle() {
            let mut colors = recurse_without(g, &removed, |rest| Ok(patterns::path_or_cycle_colors(rest)))?;
            if !extend_by_lists(g, &mut colors, &removed, K) {
                for &v in &removed {
                    colors[v] = UNSET;
                }
            }
            ctx.settle(g, &mut colors, &removed)?;
            return Ok(colors);
        }
    }
    let mut colors = recurse_without(g, &a.h, |rest| color(rest, ctx))?;
    if !extend_by_lists(g, &mut colors, &a.h, K) {
        for &v in &a.h {
            colors[v] = UNSET;
        }
    }
    ctx.settle(g, &mut colors, &a.h)?;
    Ok(colors)
}
