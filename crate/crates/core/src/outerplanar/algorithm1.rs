use super::{contract_simple_paths, end_faces, preferred_face, BlockEmbedding, Face, OuterEmbedding};
use crate::graph::Graph;
use crate::{Error, Result};

/// Finds an end face of a 2-connected outerplanar graph with an end vertex of
/// degree below 5.
///
/// End-face paths are first shortened to length two. Starting from the
/// preferred end face, the walk repeatedly jumps to the region between the
/// current right end and its nearest right neighbor, descending to an end face
/// inside that region, until the right end has degree at most 4.
pub fn algorithm1(g: &Graph, emb: &OuterEmbedding) -> Result<Face> {
    algorithm1_traced(g, emb).map(|(face, _)| face)
}

/// As [`algorithm1`], also reporting whether the walk got stuck and the face
/// had to be found by scanning all end faces instead.
pub fn algorithm1_traced(g: &Graph, emb: &OuterEmbedding) -> Result<(Face, bool)> {
    let faces = end_faces(emb, g);
    if g.max_degree() <= 4 {
        let first = preferred_face(&faces).ok_or_else(no_face)?;
        return Ok((faces[first].clone(), false));
    }
    let contraction = contract_simple_paths(g, emb)?;
    let found = match &contraction.embedding.blocks[0] {
        BlockEmbedding::Polygon(p) => walk(&contraction.graph, &p.outer_cycle, &p.chords, &contraction.embedding),
        _ => None,
    };
    if let Some(middle) = found {
        let h = contraction.new_to_old[middle];
        if let Some(f) = faces.iter().find(|f| f.boundary[1..f.degree() - 1].contains(&h)) {
            if good(g, f) {
                return Ok((f.clone(), false));
            }
        }
    }
    let f = faces.iter().find(|f| good(g, f)).ok_or_else(no_face)?;
    Ok((f.clone(), true))
}

fn no_face() -> Error {
    Error::PreconditionViolated("no end face with an end vertex of degree below 5".into())
}

fn good(g: &Graph, f: &Face) -> bool {
    g.degree(f.v_left()) < 5 || g.degree(f.v_right()) < 5
}

/// Runs the walk on the contracted graph, returning the middle vertex of the
/// triangle end face it stops at.
fn walk(h: &Graph, cycle: &[usize], chords: &[(usize, usize)], emb: &OuterEmbedding) -> Option<usize> {
    let m = cycle.len();
    let start = end_faces(emb, h);
    let f0 = &start[preferred_face(&start)?];
    if f0.degree() != 3 {
        return None;
    }
    // positions relative to v_L of the start face, clockwise
    let origin = cycle.iter().position(|&v| v == f0.v_left())?;
    let at = |p: usize| cycle[(origin + p) % m];
    let mut pos = vec![0; h.vertex_count()];
    for p in 0..m {
        pos[at(p)] = p;
    }
    let chord_pos: Vec<(usize, usize)> =
        chords.iter().map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b]))).collect();
    let (mut t, mut r) = (0, 2);
    loop {
        let vr = at(r);
        if h.degree(vr) < 5 || h.degree(at(t)) < 5 {
            return Some(at(t + 1));
        }
        let right = h.neighbors(vr).iter().map(|&w| pos[w]).filter(|&q| q > r + 1).min()?;
        // leftmost end face inside the region [r, right]
        let (p, q) = leftmost_end_face(&chord_pos, r, right)?;
        if q - p != 2 || p < r {
            return None;
        }
        t = p;
        r = q;
    }
}

/// The end face of the dissection of positions `[lo, hi]` (closed by the chord
/// `(lo, hi)`) with the smallest left end, as a position pair.
fn leftmost_end_face(chords: &[(usize, usize)], lo: usize, hi: usize) -> Option<(usize, usize)> {
    // innermost chord starting first: a chord with no other chord nested inside
    chords
        .iter()
        .copied()
        .filter(|&(a, b)| lo <= a && b <= hi && (a, b) != (lo, hi))
        .filter(|&(a, b)| !chords.iter().any(|&(c, d)| a <= c && d <= b && (c, d) != (a, b)))
        .min()
        .or(Some((lo, hi)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::recognize;

    fn with_chords(n: usize, chords: &[(usize, usize)]) -> Graph {
        let mut g = Graph::cycle(n);
        for &(a, b) in chords {
            g.add_edge(a, b);
        }
        g
    }

    #[test]
    fn pentagon_is_its_own_face() {
        let g = Graph::cycle(5);
        let f = algorithm1(&g, &recognize(&g).unwrap()).unwrap();
        assert_eq!(f.degree(), 5);
    }

    #[test]
    fn fan_returns_an_extreme_triangle() {
        let g = with_chords(6, &[(0, 2), (0, 3), (0, 4)]);
        let f = algorithm1(&g, &recognize(&g).unwrap()).unwrap();
        let mut b = f.boundary.clone();
        b.sort_unstable();
        assert!(b == vec![0, 1, 2] || b == vec![0, 4, 5]);
        assert!(g.degree(f.v_left()).min(g.degree(f.v_right())) == 3);
    }

    #[test]
    fn walk_moves_past_heavy_faces() {
        // two heavy hubs 0 and 4 joined by a chord, each carrying a fan of
        // squares; every end face near 0 has both ends of degree >= 5
        let g =
            with_chords(16, &[(0, 4), (0, 2), (2, 4), (4, 6), (4, 8), (4, 10), (0, 10), (0, 12), (0, 14), (10, 12)]);
        let emb = recognize(&g).unwrap();
        let (f, _) = algorithm1_traced(&g, &emb).unwrap();
        assert!(good(&g, &f));
        assert!(f.is_end_face(&g));
    }
}
