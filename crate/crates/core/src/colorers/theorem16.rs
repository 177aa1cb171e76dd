use super::csp::UNSET;
use super::step::{lay_string, recurse_without, Anchors, Ctx};
use super::{certify, embedding, faces_avoid, require, ColorerOutcome, Side};
use crate::graph::{girth, is_two_connected, Graph};
use crate::injective::{Certificate, PathMode};
use crate::outerplanar::{end_faces, preferred_face, Face};
use crate::Result;

const K: usize = 3;
const SIDE: Side = Side { windows: Some(PathMode::Exactly3), neighborhoods: false };

/// Injective 3-coloring, with exactly three colors on every simple path of
/// length three, of a 2-connected outerplanar graph with maximum degree 3,
/// girth at least 5 and no inner face of degree 2 mod 4.
pub fn theorem16_color(g: &Graph) -> Result<ColorerOutcome> {
    let emb = embedding(g)?;
    require(is_two_connected(g), "graph must be 2-connected")?;
    require(g.max_degree() == 3, "maximum degree must be 3")?;
    require(girth(g).at_least(5), "girth must be at least 5")?;
    require(faces_avoid(g, &emb, 4, 2), "an inner face has degree 2 mod 4")?;
    let mut ctx = Ctx::new(K, SIDE);
    let colors = color(g, &mut ctx)?;
    certify(g, colors, K, Certificate::Theorem16, SIDE, ctx.fallbacks)
}

fn color(g: &Graph, ctx: &mut Ctx) -> Result<Vec<usize>> {
    if g.vertex_count() <= 8 {
        return ctx.base(g);
    }
    let emb = embedding(g)?;
    let faces = end_faces(&emb, g);
    let mut face: &Face = &faces[preferred_face(&faces).expect("a polygon has an end face")];
    let mut a = Anchors::new(g, &emb, face, false);
    if g.vertex_count() - a.h.len() == 5 && g.max_degree() == 3 {
        // the rest would be C_5, which has no suitable pattern: use the other face
        if let Some(other) = faces.iter().find(|f| f.boundary != face.boundary) {
            face = other;
            a = Anchors::new(g, &emb, face, false);
        }
    }
    let mut colors = if g.without(&a.h).0.max_degree() == 3 {
        recurse_without(g, &a.h, |rest| color(rest, ctx))?
    } else {
        let mut colors = vec![UNSET; g.vertex_count()];
        color_remaining_cycle(g, &a, &mut colors);
        colors
    };
    extend_face(&mut colors, &a);
    ctx.settle(g, &mut colors, &a.h)?;
    Ok(colors)
}

/// The rest is a cycle: color `v_{i-1}, v_i, v_j, v_{j+1}, ..` with `012`
/// repeated, switching the last three to `1 2 0` when its length is 2 mod 3.
fn color_remaining_cycle(g: &Graph, a: &Anchors, colors: &mut [usize]) {
    let mut seq = vec![a.prev_i, a.vi];
    let mut prev = a.prev_i;
    let mut cur = a.vi;
    loop {
        let next =
            g.neighbors(cur).iter().copied().find(|&w| w != prev && !a.h.contains(&w)).expect("the rest is a cycle");
        if next == a.prev_i {
            break;
        }
        seq.push(next);
        prev = cur;
        cur = next;
    }
    let k = seq.len();
    for (i, &v) in seq.iter().enumerate() {
        colors[v] = i % 3;
    }
    if k % 3 == 2 {
        for (off, c) in [1, 2, 0].into_iter().enumerate() {
            colors[seq[k - 3 + off]] = c;
        }
    }
}

fn put(colors: &mut [usize], seq: &[usize], idx: Option<usize>, c: usize) {
    if let Some(&v) = idx.and_then(|i| seq.get(i)) {
        colors[v] = c;
    }
}

/// The four string families, by which pair among `c(v_{i-1}), c(v_i),
/// c(v_j), c(v_{j+1})` repeats, each split by `|H| mod 4`.
fn extend_face(colors: &mut [usize], an: &Anchors) {
    let (a, b, d, e) = (colors[an.prev_i], colors[an.vi], colors[an.vj], colors[an.next_j]);
    let fwd = an.h.clone();
    let bwd: Vec<usize> = fwd.iter().rev().copied().collect();
    let l = fwd.len();
    let r = l % 4;
    if b == d {
        match r {
            1 => {
                lay_string(colors, &fwd, [e, a, b, b]);
                put(colors, &fwd, l.checked_sub(2), e);
                put(colors, &fwd, l.checked_sub(1), a);
            }
            2 => {
                lay_string(colors, &fwd, [e, e, a, b]);
                put(colors, &fwd, l.checked_sub(1), a);
            }
            3 => lay_string(colors, &fwd, [e, e, a, b]),
            _ => {}
        }
    } else if a == e {
        match r {
            1 | 2 => {
                lay_string(colors, &fwd, [b, d, a, a]);
                if r == 1 {
                    put(colors, &fwd, l.checked_sub(2), b);
                    put(colors, &fwd, l.checked_sub(1), d);
                }
            }
            3 => lay_string(colors, &fwd, [b, a, d, d]),
            _ => {}
        }
    } else if a == b {
        match r {
            1 => {
                lay_string(colors, &fwd, [e, d, b, e]);
                put(colors, &fwd, l.checked_sub(1), d);
            }
            2 => lay_string(colors, &fwd, [e, d, b, b]),
            3 => {
                lay_string(colors, &bwd, [d, e, b, b]);
                put(colors, &fwd, Some(0), e);
            }
            _ => {}
        }
    } else if d == e {
        match r {
            1 => {
                lay_string(colors, &bwd, [a, b, e, a]);
                put(colors, &fwd, Some(0), b);
            }
            2 => lay_string(colors, &bwd, [a, b, e, e]),
            3 => {
                lay_string(colors, &fwd, [b, a, d, d]);
                put(colors, &fwd, l.checked_sub(1), a);
            }
            _ => {}
        }
    }
}
