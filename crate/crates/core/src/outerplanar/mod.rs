//! Outerplanar embeddings: every block is a bridge or an outer Hamiltonian
//! cycle plus pairwise non-crossing chords. Faces, end faces and simple paths
//! are read off that combinatorial structure.

mod algorithm1;
mod contract;
mod recognize;

use std::collections::HashMap;

use crate::graph::{blocks, Graph};
use crate::{Error, Result};

pub use algorithm1::{algorithm1, algorithm1_traced};
pub use contract::{contract_simple_paths, Contraction};
pub use recognize::recognize;

/// Embedding of a single block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockEmbedding {
    /// The one-vertex graph.
    Single(usize),
    Bridge(usize, usize),
    Polygon(Polygon),
}

/// A 2-connected block drawn as a convex polygon with chords.
///
/// `outer_cycle` starts at the block's smallest vertex and continues towards
/// the smaller of its two cycle neighbors; increasing position along it is the
/// clockwise direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub outer_cycle: Vec<usize>,
    /// Chords as `(min, max)` vertex pairs, sorted.
    pub chords: Vec<(usize, usize)>,
}

impl Polygon {
    /// Normalizes rotation and reflection of the cycle and the chord order.
    pub fn new(outer_cycle: Vec<usize>, chords: Vec<(usize, usize)>) -> Self {
        let m = outer_cycle.len();
        let start = (0..m).min_by_key(|&i| outer_cycle[i]).unwrap_or(0);
        let mut cycle: Vec<usize> = (0..m).map(|k| outer_cycle[(start + k) % m]).collect();
        if m >= 3 && cycle[m - 1] < cycle[1] {
            cycle[1..].reverse();
        }
        let mut chords: Vec<(usize, usize)> = chords.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        chords.sort_unstable();
        Polygon { outer_cycle: cycle, chords }
    }

    pub fn len(&self) -> usize {
        self.outer_cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outer_cycle.is_empty()
    }

    pub fn positions(&self) -> HashMap<usize, usize> {
        self.outer_cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect()
    }

    pub fn successor(&self, v: usize) -> usize {
        let m = self.len();
        let i = self.outer_cycle.iter().position(|&x| x == v).expect("vertex not on polygon");
        self.outer_cycle[(i + 1) % m]
    }

    pub fn predecessor(&self, v: usize) -> usize {
        let m = self.len();
        let i = self.outer_cycle.iter().position(|&x| x == v).expect("vertex not on polygon");
        self.outer_cycle[(i + m - 1) % m]
    }

    pub fn has_chord(&self, u: usize, v: usize) -> bool {
        self.chords.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Chords as position pairs `(p, q)` with `p < q`.
    fn chord_positions(&self) -> Vec<(usize, usize)> {
        let pos = self.positions();
        let mut out: Vec<(usize, usize)> = self
            .chords
            .iter()
            .map(|&(a, b)| {
                let (p, q) = (pos[&a], pos[&b]);
                (p.min(q), p.max(q))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Bounded faces as increasing position sequences; the first is the face
    /// on the `(m-1, 0)` cycle edge, the rest follow the chord order.
    fn face_positions(&self) -> Vec<Vec<usize>> {
        let m = self.len();
        let chords = self.chord_positions();
        let mut longer: Vec<Vec<usize>> = vec![Vec::new(); m];
        for &(p, q) in &chords {
            longer[p].push(q);
        }
        for l in &mut longer {
            l.sort_unstable_by(|a, b| b.cmp(a));
        }
        // walk from p to q, always taking the longest chord that stays inside
        let walk = |p: usize, q: usize| -> Vec<usize> {
            let mut face = vec![p];
            let mut x = p;
            while x != q {
                let next = longer[x].iter().copied().find(|&y| y <= q && !(x == p && y == q)).unwrap_or(x + 1);
                face.push(next);
                x = next;
            }
            face
        };
        let mut faces = vec![walk(0, m - 1)];
        for &(p, q) in &chords {
            faces.push(walk(p, q));
        }
        faces
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterEmbedding {
    /// One entry per block, aligned with [`crate::graph::blocks`] output order.
    pub blocks: Vec<BlockEmbedding>,
}

impl OuterEmbedding {
    pub fn polygons(&self) -> impl Iterator<Item = (usize, &Polygon)> {
        self.blocks.iter().enumerate().filter_map(|(i, b)| match b {
            BlockEmbedding::Polygon(p) => Some((i, p)),
            _ => None,
        })
    }

    pub fn chord_count(&self) -> usize {
        self.polygons().map(|(_, p)| p.chords.len()).sum()
    }

    /// Checks every embedding invariant against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGraph(msg));
        let decomposition = blocks(g)?;
        if decomposition.blocks.len() != self.blocks.len() {
            return bad("block count mismatch".into());
        }
        for (b, emb) in self.blocks.iter().enumerate() {
            let vs = &decomposition.blocks[b];
            let mut edges = decomposition.block_edges(g, b);
            match emb {
                BlockEmbedding::Single(v) => {
                    if vs != &vec![*v] {
                        return bad(format!("block {b} is not the single vertex {v}"));
                    }
                }
                BlockEmbedding::Bridge(u, v) => {
                    if edges != vec![(*u.min(v), *u.max(v))] {
                        return bad(format!("block {b} is not the bridge {u}-{v}"));
                    }
                }
                BlockEmbedding::Polygon(p) => {
                    let mut cyc = p.outer_cycle.clone();
                    cyc.sort_unstable();
                    if &cyc != vs {
                        return bad(format!("outer cycle of block {b} is not Hamiltonian"));
                    }
                    let m = p.len();
                    let mut embedded: Vec<(usize, usize)> = (0..m)
                        .map(|i| {
                            let (a, c) = (p.outer_cycle[i], p.outer_cycle[(i + 1) % m]);
                            (a.min(c), a.max(c))
                        })
                        .chain(p.chords.iter().copied())
                        .collect();
                    embedded.sort_unstable();
                    edges.sort_unstable();
                    if embedded != edges {
                        return bad(format!("cycle edges plus chords differ from block {b}"));
                    }
                    if let Some((a, c)) = first_crossing(&p.chord_positions()) {
                        return bad(format!("chords {a:?} and {c:?} cross"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// First pair of position chords that interleave, if any.
pub(crate) fn first_crossing(chords: &[(usize, usize)]) -> Option<((usize, usize), (usize, usize))> {
    for (i, &(a, b)) in chords.iter().enumerate() {
        for &(c, d) in &chords[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return Some(((a, b), (c, d)));
            }
        }
    }
    None
}

/// A bounded face of one block.
///
/// `boundary` lists the face's vertices clockwise starting at `v_L` and ending
/// at `v_R`; for an end face the rotation is chosen so that every vertex
/// strictly between them has degree 2 in the whole graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub block: usize,
    pub boundary: Vec<usize>,
    /// Boundary vertices of degree 2 in the whole graph, in boundary order.
    pub interior_two_vertices: Vec<usize>,
}

impl Face {
    pub fn v_left(&self) -> usize {
        self.boundary[0]
    }

    pub fn v_right(&self) -> usize {
        *self.boundary.last().unwrap()
    }

    /// Number of boundary edges.
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_end_face(&self, g: &Graph) -> bool {
        let k = self.boundary.len();
        self.boundary[1..k - 1].iter().all(|&v| g.degree(v) == 2)
    }

    pub fn min_vertex(&self) -> usize {
        *self.boundary.iter().min().unwrap()
    }
}

fn build_face(g: &Graph, block: usize, poly: &Polygon, positions: &[usize]) -> Face {
    let verts: Vec<usize> = positions.iter().map(|&p| poly.outer_cycle[p]).collect();
    let k = verts.len();
    let closing_edge_is_chord = |r: usize| poly.has_chord(verts[(r + k - 1) % k], verts[r]);
    let interior_ok = |r: usize| (1..k - 1).all(|i| g.degree(verts[(r + i) % k]) == 2);
    // rank valid rotations: chord as closing edge, then a heavy first vertex
    let rotation = (0..k)
        .filter(|&r| interior_ok(r))
        .min_by_key(|&r| (!closing_edge_is_chord(r), g.degree(verts[r]) == 2, r))
        .unwrap_or(0);
    let boundary: Vec<usize> = (0..k).map(|i| verts[(rotation + i) % k]).collect();
    let interior_two_vertices = boundary.iter().copied().filter(|&v| g.degree(v) == 2).collect();
    Face { block, boundary, interior_two_vertices }
}

/// All bounded faces, block by block. A chordless polygon is one face.
pub fn inner_faces(emb: &OuterEmbedding, g: &Graph) -> Vec<Face> {
    let mut out = Vec::new();
    for (b, poly) in emb.polygons() {
        for positions in poly.face_positions() {
            out.push(build_face(g, b, poly, &positions));
        }
    }
    out
}

/// Inner faces whose boundary, read from `v_L` to `v_R`, is a simple path.
pub fn end_faces(emb: &OuterEmbedding, g: &Graph) -> Vec<Face> {
    inner_faces(emb, g).into_iter().filter(|f| f.is_end_face(g)).collect()
}

/// Index of the face with the smallest minimum vertex id (first on ties).
pub fn preferred_face(faces: &[Face]) -> Option<usize> {
    (0..faces.len()).min_by_key(|&i| (faces[i].min_vertex(), i))
}

/// The path from the leaf `u` through consecutive 2-vertices, ending at the
/// first vertex whose degree is not 2.
pub fn maximal_simple_path_from(g: &Graph, u: usize) -> Result<Vec<usize>> {
    if u >= g.vertex_count() || g.degree(u) != 1 {
        return Err(Error::PreconditionViolated(format!("vertex {u} is not a leaf")));
    }
    let mut path = vec![u];
    let (mut prev, mut cur) = (u, g.neighbors(u)[0]);
    while g.degree(cur) == 2 {
        path.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    path.push(cur);
    Ok(path)
}
