//! Exhaustive and seeded-random generation of outerplanar test graphs.
//!
//! A 2-connected outerplanar graph on `0..n` is the cycle `0 1 .. n-1` plus a
//! set of pairwise non-crossing chords; the enumerator walks every such set
//! (no isomorphism reduction). The random generator starts from one polygon
//! and, when 2-connectivity is not required, glues on further polygons,
//! bridges and pendant paths.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{blocks, girth, is_two_connected, Girth, Graph};
use crate::injective::chi_injective_exact;
use crate::outerplanar::{inner_faces, BlockEmbedding, OuterEmbedding, Polygon};
use crate::{Error, Result};

/// Largest `n` accepted by the exhaustive enumerator.
pub const MAX_ENUMERATION_N: usize = 14;
/// Largest `n_max` accepted by [`search_extremal`].
pub const MAX_SEARCH_N: usize = 12;
const MAX_ATTEMPTS: usize = 5_000;

/// Degree, girth, connectivity and face-degree constraints on a graph class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphClassFilter {
    pub min_delta: usize,
    pub max_delta: usize,
    pub min_girth: Girth,
    pub require_2connected: bool,
    /// Rejects graphs with an inner face of degree `residue` mod `modulus`.
    pub forbid_face_degree_mod: Option<(usize, usize)>,
}

impl Default for GraphClassFilter {
    fn default() -> Self {
        GraphClassFilter {
            min_delta: 0,
            max_delta: usize::MAX,
            min_girth: Girth::Finite(0),
            require_2connected: false,
            forbid_face_degree_mod: None,
        }
    }
}

impl GraphClassFilter {
    /// Graphs with maximum degree exactly `delta`.
    pub fn with_delta(delta: usize) -> Self {
        GraphClassFilter { min_delta: delta, max_delta: delta, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_delta > self.max_delta {
            return Err(Error::PreconditionViolated(format!(
                "min_delta {} exceeds max_delta {}",
                self.min_delta, self.max_delta
            )));
        }
        if matches!(self.forbid_face_degree_mod, Some((0, _))) {
            return Err(Error::PreconditionViolated("face degree modulus must be positive".into()));
        }
        Ok(())
    }

    /// Whether `g`, embedded as `emb`, satisfies every constraint.
    pub fn accepts(&self, g: &Graph, emb: &OuterEmbedding) -> bool {
        let delta = g.max_degree();
        delta >= self.min_delta
            && delta <= self.max_delta
            && girth(g) >= self.min_girth
            && (!self.require_2connected || is_two_connected(g))
            && self.forbid_face_degree_mod.is_none_or(|(m, r)| inner_faces(emb, g).iter().all(|f| f.degree() % m != r))
    }

    /// A chord cutting off `arc` cycle edges closes a cycle of length at most
    /// `arc + 1`; such chords can never appear under the girth bound.
    fn chord_allowed(&self, arc: usize, other_arc: usize) -> bool {
        match self.min_girth {
            Girth::Finite(gmin) => arc + 1 >= gmin && other_arc + 1 >= gmin,
            Girth::Infinite => false,
        }
    }

    fn polygon_allowed(&self, m: usize) -> bool {
        self.min_girth <= Girth::Finite(m)
    }
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Stream of every cycle-plus-chords graph on `0..n` that passes a filter.
pub struct Enumeration {
    n: usize,
    filter: GraphClassFilter,
    candidates: Vec<(usize, usize)>,
    chosen: Vec<usize>,
    degree: Vec<usize>,
    started: bool,
}

impl Enumeration {
    fn fits(&self, i: usize) -> bool {
        let (a, b) = self.candidates[i];
        self.degree[a] < self.filter.max_delta
            && self.degree[b] < self.filter.max_delta
            && self.chosen.iter().all(|&j| !crosses(self.candidates[j], (a, b)))
    }

    fn push(&mut self, i: usize) {
        let (a, b) = self.candidates[i];
        self.degree[a] += 1;
        self.degree[b] += 1;
        self.chosen.push(i);
    }

    fn pop(&mut self) -> Option<usize> {
        let i = self.chosen.pop()?;
        let (a, b) = self.candidates[i];
        self.degree[a] -= 1;
        self.degree[b] -= 1;
        Some(i)
    }

    /// Moves to the next chord set in lexicographic order of chord indices.
    fn advance(&mut self) -> bool {
        let m = self.candidates.len();
        let start = self.chosen.last().map_or(0, |&i| i + 1);
        if let Some(i) = (start..m).find(|&i| self.fits(i)) {
            self.push(i);
            return true;
        }
        while let Some(x) = self.pop() {
            if let Some(i) = (x + 1..m).find(|&i| self.fits(i)) {
                self.push(i);
                return true;
            }
        }
        false
    }

    fn current(&self) -> (Graph, OuterEmbedding) {
        let chords: Vec<(usize, usize)> = self.chosen.iter().map(|&i| self.candidates[i]).collect();
        let mut g = Graph::cycle(self.n);
        for &(a, b) in &chords {
            g.add_edge(a, b);
        }
        let emb = OuterEmbedding { blocks: vec![BlockEmbedding::Polygon(Polygon::new((0..self.n).collect(), chords))] };
        (g, emb)
    }
}

impl Iterator for Enumeration {
    type Item = (Graph, OuterEmbedding);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if !self.started {
                self.started = true;
                if self.degree.iter().any(|&d| d > self.filter.max_delta) || !self.filter.polygon_allowed(self.n) {
                    self.candidates.clear();
                    self.chosen.clear();
                    return None;
                }
            } else if !self.advance() {
                return None;
            }
            let (g, emb) = self.current();
            if self.filter.accepts(&g, &emb) {
                return Some((g, emb));
            }
        }
    }
}

/// Every 2-connected outerplanar graph on `0..n` with outer cycle
/// `0 1 .. n-1`, as a lazy stream, restricted by `filter`.
pub fn enumerate_2conn_outerplanar(n: usize, filter: GraphClassFilter) -> Result<Enumeration> {
    if !(3..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::SizeGuard { n, max: MAX_ENUMERATION_N });
    }
    filter.validate()?;
    let mut candidates = Vec::new();
    for a in 0..n {
        for b in a + 2..n {
            if (a, b) != (0, n - 1) && filter.chord_allowed(b - a, n - (b - a)) {
                candidates.push((a, b));
            }
        }
    }
    Ok(Enumeration { n, filter, candidates, chosen: Vec::new(), degree: vec![2; n], started: false })
}

/// Adds random non-crossing chords to the polygon on `cycle`.
fn random_chords(
    rng: &mut ChaCha8Rng,
    cycle: &[usize],
    degree: &mut [usize],
    filter: &GraphClassFilter,
) -> Vec<(usize, usize)> {
    let m = cycle.len();
    let mut pairs: Vec<(usize, usize)> =
        (0..m).flat_map(|p| (p + 2..m).map(move |q| (p, q))).filter(|&(p, q)| (p, q) != (0, m - 1)).collect();
    pairs.shuffle(rng);
    let density: f64 = rng.gen();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    for (p, q) in pairs {
        let (a, b) = (cycle[p], cycle[q]);
        if rng.gen_bool(density)
            && filter.chord_allowed(q - p, m - (q - p))
            && degree[a] < filter.max_delta
            && degree[b] < filter.max_delta
            && chosen.iter().all(|&c| !crosses(c, (p, q)))
        {
            chosen.push((p, q));
            degree[a] += 1;
            degree[b] += 1;
        }
    }
    chosen.into_iter().map(|(p, q)| (cycle[p], cycle[q])).collect()
}

/// One generation attempt; `None` if a piece could not be placed.
fn attempt(n: usize, filter: &GraphClassFilter, rng: &mut ChaCha8Rng) -> Option<(Graph, Vec<Polygon>)> {
    let lo = match filter.min_girth {
        Girth::Finite(gmin) => gmin.max(3),
        Girth::Infinite => usize::MAX,
    };
    let mut g = Graph::new(0);
    let mut degree: Vec<usize> = Vec::new();
    let mut polygons = Vec::new();
    let mut new_polygon = |g: &mut Graph, degree: &mut Vec<usize>, cycle: Vec<usize>, rng: &mut ChaCha8Rng| {
        for (i, &v) in cycle.iter().enumerate() {
            g.add_edge(v, cycle[(i + 1) % cycle.len()]);
            degree[v] += 2;
        }
        let chords = random_chords(rng, &cycle, degree, filter);
        for &(a, b) in &chords {
            g.add_edge(a, b);
        }
        polygons.push(Polygon::new(cycle, chords));
    };
    let grow = |g: &mut Graph, degree: &mut Vec<usize>| {
        degree.push(0);
        g.add_vertex()
    };
    if filter.require_2connected {
        if lo > n {
            return None;
        }
        let cycle: Vec<usize> = (0..n).map(|_| grow(&mut g, &mut degree)).collect();
        new_polygon(&mut g, &mut degree, cycle, rng);
        return Some((g, polygons));
    }
    if lo > n {
        return None;
    }
    let size = rng.gen_range(lo..=n);
    let cycle: Vec<usize> = (0..size).map(|_| grow(&mut g, &mut degree)).collect();
    new_polygon(&mut g, &mut degree, cycle, rng);
    while g.vertex_count() < n {
        let remaining = n - g.vertex_count();
        // 0: polygon sharing a cut vertex, 1: polygon behind a bridge, 2: pendant path
        let kind = if lo - 1 <= remaining && rng.gen_bool(0.4) {
            if lo <= remaining && rng.gen_bool(0.5) {
                1
            } else {
                0
            }
        } else {
            2
        };
        let need = if kind == 0 { 2 } else { 1 };
        let anchors: Vec<usize> = g.vertices().filter(|&v| degree[v] + need <= filter.max_delta).collect();
        let &anchor = anchors.choose(rng)?;
        match kind {
            0 => {
                let size = rng.gen_range(lo..=remaining + 1);
                let mut cycle = vec![anchor];
                cycle.extend((1..size).map(|_| grow(&mut g, &mut degree)));
                new_polygon(&mut g, &mut degree, cycle, rng);
            }
            1 => {
                let size = rng.gen_range(lo..=remaining);
                let cycle: Vec<usize> = (0..size).map(|_| grow(&mut g, &mut degree)).collect();
                let attach = cycle[rng.gen_range(0..size)];
                g.add_edge(anchor, attach);
                degree[anchor] += 1;
                degree[attach] += 1;
                new_polygon(&mut g, &mut degree, cycle, rng);
            }
            _ => {
                let len = rng.gen_range(1..=remaining.min(3));
                let mut prev = anchor;
                for _ in 0..len {
                    let v = grow(&mut g, &mut degree);
                    g.add_edge(prev, v);
                    degree[prev] += 1;
                    degree[v] += 1;
                    prev = v;
                }
            }
        }
    }
    Some((g, polygons))
}

/// Embedding aligned with the block order of [`blocks`], from the polygons
/// placed by the generator; every other block is a bridge or a lone vertex.
fn assemble_embedding(g: &Graph, polygons: &[Polygon]) -> Result<OuterEmbedding> {
    let decomposition = blocks(g)?;
    let mut out = Vec::with_capacity(decomposition.blocks.len());
    for (b, vs) in decomposition.blocks.iter().enumerate() {
        let emb = match vs.len() {
            1 => BlockEmbedding::Single(vs[0]),
            2 => BlockEmbedding::Bridge(vs[0], vs[1]),
            _ => {
                let p = polygons
                    .iter()
                    .find(|p| {
                        let mut c = p.outer_cycle.clone();
                        c.sort_unstable();
                        &c == vs
                    })
                    .ok_or_else(|| Error::InternalVerificationFailure(format!("block {b} has no generated polygon")))?;
                BlockEmbedding::Polygon(p.clone())
            }
        };
        out.push(emb);
    }
    Ok(OuterEmbedding { blocks: out })
}

/// A reproducible random outerplanar graph on `n` vertices satisfying
/// `filter`, found by rejection sampling.
pub fn random_outerplanar(n: usize, filter: GraphClassFilter, seed: u64) -> Result<(Graph, OuterEmbedding)> {
    if n < 3 {
        return Err(Error::PreconditionViolated("need at least 3 vertices".into()));
    }
    filter.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let Some((g, polygons)) = attempt(n, &filter, &mut rng) else { continue };
        let emb = assemble_embedding(&g, &polygons)?;
        if filter.accepts(&g, &emb) {
            return Ok((g, emb));
        }
    }
    Err(Error::FilterUnsatisfiable)
}

/// Calls `visit` on every graph obtained from `base` by hanging pendant paths
/// of length 1 or 2 at its vertices, using at most `budget` new vertices and
/// keeping every degree at most `delta`. Stops early when `visit` returns true.
fn with_pendant_paths(base: &Graph, delta: usize, budget: usize, visit: &mut dyn FnMut(&Graph) -> bool) -> bool {
    struct Walk<'a> {
        base_n: usize,
        delta: usize,
        visit: &'a mut dyn FnMut(&Graph) -> bool,
    }
    impl Walk<'_> {
        // paths at one vertex are added in non-increasing length to avoid repeats
        fn go(&mut self, g: &Graph, v: usize, max_len: usize, budget: usize) -> bool {
            if v == self.base_n {
                return g.vertex_count() > self.base_n && (self.visit)(g);
            }
            if self.go(g, v + 1, 2, budget) {
                return true;
            }
            if g.degree(v) >= self.delta {
                return false;
            }
            for len in (1..=max_len.min(budget)).rev() {
                let mut h = g.clone();
                let mut prev = v;
                for _ in 0..len {
                    let w = h.add_vertex();
                    h.add_edge(prev, w);
                    prev = w;
                }
                if self.go(&h, v, len, budget - len) {
                    return true;
                }
            }
            false
        }
    }
    Walk { base_n: base.vertex_count(), delta, visit }.go(base, 0, 2, budget)
}

/// First outerplanar graph on at most `n_max` vertices with maximum degree
/// `delta`, girth `girth` and injective chromatic number `target_chi`.
///
/// Scans 2-connected graphs by increasing `n`, then the same bases (and a
/// single edge) with pendant paths attached.
pub fn search_extremal(n_max: usize, delta: usize, girth_target: Girth, target_chi: usize) -> Result<Graph> {
    if n_max > MAX_SEARCH_N {
        return Err(Error::SizeGuard { n: n_max, max: MAX_SEARCH_N });
    }
    if target_chi < delta || target_chi > (delta * delta).saturating_sub(delta) + 1 {
        return Err(Error::NotFound);
    }
    let hit = |g: &Graph| {
        g.max_degree() == delta
            && girth(g) == girth_target
            && matches!(chi_injective_exact(g, target_chi), Ok((k, _)) if k == target_chi)
    };
    let base_filter = GraphClassFilter { max_delta: delta, min_girth: girth_target, ..GraphClassFilter::default() };
    for n in 3..=n_max {
        for (g, _) in enumerate_2conn_outerplanar(n, GraphClassFilter { min_delta: delta, ..base_filter })? {
            if hit(&g) {
                return Ok(g);
            }
        }
    }
    let mut found = None;
    let mut visit = |g: &Graph| {
        if hit(g) {
            found = Some(g.clone());
            true
        } else {
            false
        }
    };
    if with_pendant_paths(&Graph::path(2), delta, n_max.saturating_sub(2), &mut visit) {
        return found.ok_or(Error::NotFound);
    }
    for n0 in 3..n_max {
        for (base, _) in enumerate_2conn_outerplanar(n0, base_filter)? {
            if with_pendant_paths(&base, delta, n_max - n0, &mut visit) {
                return found.ok_or(Error::NotFound);
            }
        }
    }
    Err(Error::NotFound)
}
