//! Pieces shared by the face-removal colorers: choosing the face, naming the
//! vertices around it, recursing on the remainder and the verified fallback.

use super::csp::{self, UNSET};
use super::{satisfies, Side};
use crate::graph::{blocks, common_neighbor_graph, Graph};
use crate::injective::{list_color_degree, ListAssignment};
use crate::outerplanar::{end_faces, preferred_face, BlockEmbedding, Face, OuterEmbedding, Polygon};
use crate::{Error, Result};

/// Node budgets for the three fallback levels: the removed vertices only,
/// their distance-2 neighborhood, then the whole graph.
const BUDGETS: [usize; 3] = [200_000, 2_000_000, 20_000_000];

/// Palette, required side properties and the running count of fallbacks.
pub(crate) struct Ctx {
    pub k: usize,
    pub side: Side,
    pub fallbacks: usize,
}

impl Ctx {
    pub fn new(k: usize, side: Side) -> Self {
        Ctx { k, side, fallbacks: 0 }
    }

    /// Exhaustive search on a small or degenerate instance.
    pub fn base(&self, g: &Graph) -> Result<Vec<usize>> {
        csp::solve(g, self.k, self.side, &vec![UNSET; g.vertex_count()], BUDGETS[2]).ok_or_else(|| {
            Error::InternalVerificationFailure(format!("no base coloring with {} colors for {g:?}", self.k))
        })
    }

    /// Accepts `colors` if it verifies; otherwise recolors `region`, then its
    /// distance-2 neighborhood, then everything, by exhaustive search.
    pub fn settle(&mut self, g: &Graph, colors: &mut Vec<usize>, region: &[usize]) -> Result<()> {
        if satisfies(g, colors, self.k, self.side) {
            return Ok(());
        }
        self.fallbacks += 1;
        let near = within_two(g, region);
        let all: Vec<usize> = g.vertices().collect();
        for (free, budget) in [region, &near[..], &all[..]].into_iter().zip(BUDGETS) {
            let mut partial = colors.clone();
            for &v in free {
                partial[v] = UNSET;
            }
            if let Some(c) = csp::solve(g, self.k, self.side, &partial, budget) {
                *colors = c;
                return Ok(());
            }
        }
        Err(Error::InternalVerificationFailure(format!("could not extend a {}-coloring of {g:?}", self.k)))
    }
}

fn within_two(g: &Graph, region: &[usize]) -> Vec<usize> {
    let mut mark = vec![false; g.vertex_count()];
    let mut frontier = region.to_vec();
    for &v in region {
        mark[v] = true;
    }
    for _ in 0..2 {
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in g.neighbors(v) {
                if !mark[w] {
                    mark[w] = true;
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    g.vertices().filter(|&v| mark[v]).collect()
}

/// Colors `g` minus `removed` with `color_rest` and lifts the result; removed
/// vertices come back [`UNSET`].
pub(crate) fn recurse_without(
    g: &Graph,
    removed: &[usize],
    color_rest: impl FnOnce(&Graph) -> Result<Vec<usize>>,
) -> Result<Vec<usize>> {
    let (rest, ids) = g.without(removed);
    let sub = color_rest(&rest)?;
    let mut colors = vec![UNSET; g.vertex_count()];
    for (i, &v) in ids.iter().enumerate() {
        colors[v] = sub[i];
    }
    Ok(colors)
}

/// Colors every [`UNSET`] vertex of `region` from the colors `0..k` that no
/// colored vertex sharing a neighbor with it already uses, by list coloring
/// the common-neighbor graph on `region`. Returns false if that fails.
pub(crate) fn extend_by_lists(g: &Graph, colors: &mut [usize], region: &[usize], k: usize) -> bool {
    // sorted, because `induced` numbers the kept vertices in increasing order
    let mut todo: Vec<usize> = region.iter().copied().filter(|&v| colors[v] == UNSET).collect();
    todo.sort_unstable();
    if todo.is_empty() {
        return true;
    }
    let cn = common_neighbor_graph(g);
    let lists =
        todo.iter().map(|&v| (0..k).filter(|&c| cn.neighbors(v).iter().all(|&w| colors[w] != c)).collect()).collect();
    let (sub, ids) = cn.induced(&todo);
    match list_color_degree(&sub, &ListAssignment::new(lists)) {
        Ok(c) => {
            for (i, &v) in ids.iter().enumerate() {
                colors[v] = c.colors[i];
            }
            true
        }
        Err(_) => false,
    }
}

/// Smallest color in `0..k` outside `avoid`.
pub(crate) fn first_outside(k: usize, avoid: &[usize]) -> Option<usize> {
    (0..k).find(|c| !avoid.contains(c))
}

/// Colors `seq` with the period-4 string `pattern`.
pub(crate) fn lay_string(colors: &mut [usize], seq: &[usize], pattern: [usize; 4]) {
    for (p, &v) in seq.iter().enumerate() {
        colors[v] = pattern[p % 4];
    }
}

/// An end face of an end block, preferring the smallest vertex id.
pub(crate) fn end_block_face(g: &Graph, emb: &OuterEmbedding) -> Result<Face> {
    let decomposition = blocks(g)?;
    let ends = decomposition.end_blocks();
    let faces: Vec<Face> = end_faces(emb, g).into_iter().filter(|f| ends.contains(&f.block)).collect();
    preferred_face(&faces)
        .map(|i| faces[i].clone())
        .ok_or_else(|| Error::InternalVerificationFailure("end block without an end face".into()))
}

/// The vertices around an end face `f = [v_i v_{i+1} .. v_j]`.
///
/// `h` lists the removed 2-vertices from the `v_i` side. When the face is a
/// cycle block hanging off a cut vertex, `v_i = v_j` is that cut vertex and
/// `prev_i = next_j` is its first neighbor outside the block.
#[derive(Clone, Debug)]
pub(crate) struct Anchors {
    pub h: Vec<usize>,
    pub vi: usize,
    pub vj: usize,
    pub prev_i: usize,
    pub next_j: usize,
    /// The cycle vertex after `next_j`, away from the face.
    pub next2_j: usize,
}

impl Anchors {
    /// Reads the face clockwise, or counterclockwise when `reversed`.
    pub fn new(g: &Graph, emb: &OuterEmbedding, f: &Face, reversed: bool) -> Anchors {
        let b = &f.boundary;
        let k = b.len();
        let h = f.interior_two_vertices.clone();
        let first = b.iter().position(|&v| v == h[0]).unwrap();
        let last = b.iter().position(|&v| v == h[h.len() - 1]).unwrap();
        let (vl, vr) = (b[first - 1], b[(last + 1) % k]);
        let poly = match &emb.blocks[f.block] {
            BlockEmbedding::Polygon(p) => p,
            _ => unreachable!("faces live in polygon blocks"),
        };
        if vl == vr {
            let out = g.neighbors(vl).iter().copied().find(|w| !h.contains(w)).unwrap_or(vl);
            let mut h = h;
            if reversed {
                h.reverse();
            }
            return Anchors { h, vi: vl, vj: vl, prev_i: out, next_j: out, next2_j: out };
        }
        let step = |p: &Polygon, v: usize, forward: bool| if forward { p.successor(v) } else { p.predecessor(v) };
        if !reversed {
            let next_j = step(poly, vr, true);
            Anchors { h, vi: vl, vj: vr, prev_i: step(poly, vl, false), next_j, next2_j: step(poly, next_j, true) }
        } else {
            let next_j = step(poly, vl, false);
            let mut h = h;
            h.reverse();
            Anchors { h, vi: vr, vj: vl, prev_i: step(poly, vr, true), next_j, next2_j: step(poly, next_j, false) }
        }
    }
}

/// Colors in `0..k` not used by any colored vertex sharing a neighbor with `v`.
pub(crate) fn available(g: &Graph, colors: &[usize], v: usize, k: usize) -> Vec<usize> {
    (0..k)
        .filter(|&c| g.neighbors(v).iter().all(|&x| g.neighbors(x).iter().all(|&w| w == v || colors[w] != c)))
        .collect()
}
