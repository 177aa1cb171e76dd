use super::{Certificate, Coloring};
use crate::graph::{common_neighbor_graph, square_graph, Graph};
use crate::{Error, Result};

/// Smallest `k <= cap` for which `g` has an injective `k`-coloring.
pub fn chi_injective_exact(g: &Graph, cap: usize) -> Result<(usize, Coloring)> {
    let h = common_neighbor_graph(g);
    let (k, colors) = solve(&h, g.max_degree(), cap)?;
    Ok((k, Coloring { colors, palette: k, certificate: Certificate::Exact }))
}

/// Smallest `k <= cap` for which the square of `g` is properly `k`-colorable.
pub fn chi_square_exact(g: &Graph, cap: usize) -> Result<(usize, Coloring)> {
    let h = square_graph(g);
    let (k, colors) = solve(&h, g.max_degree() + usize::from(g.edge_count() > 0), cap)?;
    Ok((k, Coloring { colors, palette: k, certificate: Certificate::Exact }))
}

/// Chromatic number of `h` by exact search, if it is at most `cap`.
pub fn chromatic_number_exact(h: &Graph, cap: usize) -> Result<(usize, Vec<usize>)> {
    solve(h, 0, cap)
}

fn solve(h: &Graph, lower: usize, cap: usize) -> Result<(usize, Vec<usize>)> {
    let n = h.vertex_count();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let lb = lower.max(greedy_clique(h)).max(1);
    let order = degree_order(h);
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    // neighbors that come earlier in the order, by position
    let earlier: Vec<Vec<usize>> =
        order.iter().map(|&v| h.neighbors(v).iter().map(|&w| rank[w]).filter(|&r| r < rank[v]).collect()).collect();
    for k in lb..=cap {
        let mut assigned = vec![usize::MAX; n];
        if extend(&earlier, k, 0, 0, &mut assigned) {
            let mut colors = vec![0; n];
            for (i, &v) in order.iter().enumerate() {
                colors[v] = assigned[i];
            }
            return Ok((k, colors));
        }
    }
    Err(Error::ExceedsCap { cap })
}

fn extend(earlier: &[Vec<usize>], k: usize, i: usize, used: usize, assigned: &mut [usize]) -> bool {
    if i == assigned.len() {
        return true;
    }
    // a fresh color is interchangeable with any other fresh one
    for c in 0..k.min(used + 1) {
        if earlier[i].iter().all(|&j| assigned[j] != c) {
            assigned[i] = c;
            if extend(earlier, k, i + 1, used.max(c + 1), assigned) {
                return true;
            }
        }
    }
    assigned[i] = usize::MAX;
    false
}

/// Vertices by descending degree, ties by id.
fn degree_order(h: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = h.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    order
}

/// Size of the largest clique found greedily from each vertex.
fn greedy_clique(h: &Graph) -> usize {
    let order = degree_order(h);
    let mut best = usize::from(h.vertex_count() > 0);
    for &v in &order {
        let mut clique = vec![v];
        for &w in &order {
            if w != v && clique.iter().all(|&x| h.has_edge(x, w)) {
                clique.push(w);
            }
        }
        best = best.max(clique.len());
    }
    best
}
