//! Backtracking search for injective colorings with side properties, used for
//! base cases and as the verified fallback when a constructive step fails.

use std::collections::VecDeque;

use super::Side;
use crate::graph::{common_neighbor_graph, Graph};
use crate::injective::{four_windows, window_ok};

pub(crate) const UNSET: usize = usize::MAX;

enum Constraint {
    Distinct(usize, usize),
    Window([usize; 4]),
    /// `(u, v)` adjacent, both of degree 3; compares `{c(u)} + N(v)\u` with `{c(v)} + N(u)\v`.
    Sets([usize; 3], [usize; 3]),
}

impl Constraint {
    fn vertices(&self) -> Vec<usize> {
        match self {
            Constraint::Distinct(a, b) => vec![*a, *b],
            Constraint::Window(p) => p.to_vec(),
            Constraint::Sets(x, y) => x.iter().chain(y).copied().collect(),
        }
    }

    fn holds(&self, c: &[usize], side: Side) -> bool {
        match self {
            Constraint::Distinct(a, b) => c[*a] != c[*b],
            Constraint::Window(p) => window_ok(c, p, side.windows.unwrap()),
            Constraint::Sets(x, y) => {
                let mut a = x.map(|v| c[v]);
                let mut b = y.map(|v| c[v]);
                a.sort_unstable();
                b.sort_unstable();
                a != b
            }
        }
    }
}

fn constraints(g: &Graph, side: Side) -> Vec<Constraint> {
    let mut out: Vec<Constraint> = common_neighbor_graph(g).edges().map(|(a, b)| Constraint::Distinct(a, b)).collect();
    if side.windows.is_some() {
        out.extend(four_windows(g).into_iter().map(Constraint::Window));
    }
    if side.neighborhoods {
        out.extend(neighborhood_pairs(g).into_iter().map(|(x, y)| Constraint::Sets(x, y)));
    }
    out
}

/// For every edge `uv` with both ends of degree 3: `([u, v1, v2], [v, u1, u2])`
/// where `v1, v2` are the other neighbors of `v` and `u1, u2` those of `u`.
pub(crate) fn neighborhood_pairs(g: &Graph) -> Vec<([usize; 3], [usize; 3])> {
    let others = |x: usize, skip: usize| -> [usize; 2] {
        let mut it = g.neighbors(x).iter().copied().filter(|&w| w != skip);
        [it.next().unwrap(), it.next().unwrap()]
    };
    g.edges()
        .filter(|&(u, v)| g.degree(u) == 3 && g.degree(v) == 3)
        .map(|(u, v)| {
            let [v1, v2] = others(v, u);
            let [u1, u2] = others(u, v);
            ([u, v1, v2], [v, u1, u2])
        })
        .collect()
}

/// Completes `partial` (entries equal to [`UNSET`] are free) to a coloring with
/// colors `0..k` meeting every constraint, exploring at most `budget` nodes.
pub(crate) fn solve(g: &Graph, k: usize, side: Side, partial: &[usize], budget: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let free = search_order(g, partial);
    let mut rank = vec![None; n];
    for (i, &v) in free.iter().enumerate() {
        rank[v] = Some(i);
    }
    let mut colors = partial.to_vec();
    let mut by_rank: Vec<Vec<Constraint>> = (0..free.len()).map(|_| Vec::new()).collect();
    for c in constraints(g, side) {
        match c.vertices().iter().filter_map(|&v| rank[v]).max() {
            Some(r) => by_rank[r].push(c),
            None if !c.holds(&colors, side) => return None,
            None => {}
        }
    }
    let symmetric = free.len() == n;
    let mut search =
        Search { k, side, free: &free, by_rank: &by_rank, colors: &mut colors, nodes: 0, budget, symmetric };
    search.extend(0, 0).then_some(colors)
}

struct Search<'a> {
    k: usize,
    side: Side,
    free: &'a [usize],
    by_rank: &'a [Vec<Constraint>],
    colors: &'a mut Vec<usize>,
    nodes: usize,
    budget: usize,
    /// No vertex is pre-colored, so unused colors are interchangeable.
    symmetric: bool,
}

impl Search<'_> {
    fn extend(&mut self, i: usize, used: usize) -> bool {
        if i == self.free.len() {
            return true;
        }
        let v = self.free[i];
        let top = if self.symmetric { self.k.min(used + 1) } else { self.k };
        for c in 0..top {
            self.nodes += 1;
            if self.nodes > self.budget {
                break;
            }
            self.colors[v] = c;
            if self.by_rank[i].iter().all(|con| con.holds(self.colors, self.side))
                && self.extend(i + 1, used.max(c + 1))
            {
                return true;
            }
        }
        self.colors[v] = UNSET;
        false
    }
}

/// Free vertices in BFS order, so constraints close as early as possible.
fn search_order(g: &Graph, partial: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::new();
    for s in (0..n).filter(|&v| partial[v] == UNSET) {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if partial[v] == UNSET {
                order.push(v);
            }
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::injective::{injective_ok, PathMode};

    #[test]
    fn solves_small_cycles() {
        let side = Side { windows: Some(PathMode::Exactly3), neighborhoods: false };
        let g = Graph::cycle(6);
        let c = solve(&g, 3, side, &[UNSET; 6], 1_000_000).unwrap();
        assert!(injective_ok(&g, &c));
        // whether C_8 admits one must match brute force
        let g8 = Graph::cycle(8);
        let found = solve(&g8, 3, side, &[UNSET; 8], 10_000_000).is_some();
        let brute = (0..3usize.pow(8)).any(|mut x| {
            let c: Vec<usize> = (0..8)
                .map(|_| {
                    let d = x % 3;
                    x /= 3;
                    d
                })
                .collect();
            injective_ok(&g8, &c) && four_windows(&g8).iter().all(|p| window_ok(&c, p, PathMode::Exactly3))
        });
        assert_eq!(found, brute);
    }

    #[test]
    fn respects_fixed_colors() {
        let side = Side { windows: None, neighborhoods: false };
        let g = Graph::path(5);
        let c = solve(&g, 2, side, &[1, UNSET, UNSET, UNSET, UNSET], 1000).unwrap();
        assert_eq!(c[0], 1);
        assert!(injective_ok(&g, &c));
        assert!(solve(&Graph::star(3), 2, side, &[UNSET; 4], 1000).is_none());
    }
}
