use std::collections::BTreeSet;

use super::{first_crossing, BlockEmbedding, OuterEmbedding, Polygon};
use crate::graph::{blocks, Graph};
use crate::{Error, Result};

/// Brute-force Hamiltonian cycle search is only attempted on blocks this small.
const BRUTE_FORCE_LIMIT: usize = 12;

/// Recognizes a connected outerplanar graph and returns its embedding.
///
/// Each 2-connected block is reduced to a triangle by repeatedly suppressing a
/// degree-2 vertex; re-inserting the suppressed vertices in reverse order
/// yields the outer Hamiltonian cycle. The result is accepted only if every
/// remaining block edge is a chord and no two chords cross.
pub fn recognize(g: &Graph) -> Result<OuterEmbedding> {
    let decomposition = blocks(g)?;
    let mut out = Vec::with_capacity(decomposition.blocks.len());
    for vs in &decomposition.blocks {
        let emb = match vs.len() {
            1 => BlockEmbedding::Single(vs[0]),
            2 => BlockEmbedding::Bridge(vs[0], vs[1]),
            _ => {
                let (sub, ids) = g.induced(vs);
                let local = polygon_of_block(&sub).ok_or(Error::NotOuterplanar)?;
                BlockEmbedding::Polygon(Polygon::new(
                    local.outer_cycle.iter().map(|&v| ids[v]).collect(),
                    local.chords.iter().map(|&(a, b)| (ids[a], ids[b])).collect(),
                ))
            }
        };
        out.push(emb);
    }
    Ok(OuterEmbedding { blocks: out })
}

fn polygon_of_block(b: &Graph) -> Option<Polygon> {
    if let Some(cycle) = reduce_to_cycle(b) {
        if let Some(p) = accept_cycle(b, &cycle) {
            return Some(p);
        }
    }
    if b.vertex_count() <= BRUTE_FORCE_LIMIT {
        return brute_force_polygon(b);
    }
    None
}

/// Candidate outer cycle by degree-2 suppression, or `None` if the reduction
/// gets stuck.
fn reduce_to_cycle(b: &Graph) -> Option<Vec<usize>> {
    let m = b.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = b.vertices().map(|v| b.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; m];
    let mut remaining = m;
    let mut queue: Vec<usize> = (0..m).rev().filter(|&v| adj[v].len() == 2).collect();
    let mut removed: Vec<(usize, usize, usize)> = Vec::new();
    while remaining > 3 {
        let v = loop {
            let v = queue.pop()?;
            if alive[v] && adj[v].len() == 2 {
                break v;
            }
        };
        let mut it = adj[v].iter().copied();
        let (a, c) = (it.next().unwrap(), it.next().unwrap());
        adj[a].remove(&v);
        adj[c].remove(&v);
        adj[v].clear();
        alive[v] = false;
        remaining -= 1;
        if !adj[a].insert(c) {
            for x in [a, c] {
                if adj[x].len() == 2 {
                    queue.push(x);
                }
            }
        } else {
            adj[c].insert(a);
        }
        removed.push((v, a, c));
    }
    let rest: Vec<usize> = (0..m).filter(|&v| alive[v]).collect();
    if rest.len() != 3 || rest.iter().any(|&v| adj[v].len() != 2) {
        return None;
    }
    // circular doubly linked list over the surviving triangle
    let mut next = vec![usize::MAX; m];
    let mut prev = vec![usize::MAX; m];
    for i in 0..3 {
        next[rest[i]] = rest[(i + 1) % 3];
        prev[rest[(i + 1) % 3]] = rest[i];
    }
    for &(v, a, c) in removed.iter().rev() {
        let (x, y) = if next[a] == c {
            (a, c)
        } else if next[c] == a {
            (c, a)
        } else {
            return None;
        };
        next[x] = v;
        prev[v] = x;
        next[v] = y;
        prev[y] = v;
    }
    let mut cycle = Vec::with_capacity(m);
    let mut v = 0;
    for _ in 0..m {
        cycle.push(v);
        v = next[v];
    }
    (v == 0).then_some(cycle)
}

/// Accepts `cycle` as the outer cycle of `b` if it is a Hamiltonian cycle and
/// all other edges are pairwise non-crossing chords.
fn accept_cycle(b: &Graph, cycle: &[usize]) -> Option<Polygon> {
    let m = b.vertex_count();
    if cycle.len() != m {
        return None;
    }
    let mut pos = vec![usize::MAX; m];
    for (i, &v) in cycle.iter().enumerate() {
        if pos[v] != usize::MAX {
            return None;
        }
        pos[v] = i;
    }
    if (0..m).any(|i| !b.has_edge(cycle[i], cycle[(i + 1) % m])) {
        return None;
    }
    let mut chords = Vec::new();
    let mut chord_pos = Vec::new();
    for (u, v) in b.edges() {
        let (p, q) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        if q - p == 1 || (p == 0 && q == m - 1) {
            continue;
        }
        chords.push((u, v));
        chord_pos.push((p, q));
    }
    chord_pos.sort_unstable();
    if first_crossing(&chord_pos).is_some() {
        return None;
    }
    Some(Polygon::new(cycle.to_vec(), chords))
}

fn brute_force_polygon(b: &Graph) -> Option<Polygon> {
    let m = b.vertex_count();
    let mut path = vec![0];
    let mut used = vec![false; m];
    used[0] = true;
    fn extend(b: &Graph, path: &mut Vec<usize>, used: &mut Vec<bool>) -> Option<Polygon> {
        let m = b.vertex_count();
        let last = *path.last().unwrap();
        if path.len() == m {
            if b.has_edge(last, 0) && path[1] < path[m - 1] {
                return accept_cycle(b, path);
            }
            return None;
        }
        for &w in b.neighbors(last) {
            if !used[w] {
                used[w] = true;
                path.push(w);
                if let Some(p) = extend(b, path, used) {
                    return Some(p);
                }
                path.pop();
                used[w] = false;
            }
        }
        None
    }
    extend(b, &mut path, &mut used)
}
