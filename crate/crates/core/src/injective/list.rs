use std::collections::VecDeque;

use super::{Certificate, Coloring, ListAssignment};
use crate::graph::Graph;
use crate::{Error, Result};

/// Components this small are solved by backtracking when the list sizes fall
/// short of the degrees.
const BACKTRACK_LIMIT: usize = 24;

/// Properly colors `g` from `lists`, where each list is expected to be at
/// least as long as the vertex degree.
///
/// Per component: isolated vertices take their smallest color; a vertex with
/// more colors than neighbors anchors a greedy pass in reverse BFS order;
/// otherwise paths are solved exactly and cycles by the two-list argument.
/// Other tight shapes are reported as [`Error::UnsupportedShape`].
pub fn list_color_degree(g: &Graph, lists: &ListAssignment) -> Result<Coloring> {
    let n = g.vertex_count();
    if lists.lists.len() != n {
        return Err(Error::PartialColoring { expected: n, got: lists.lists.len() });
    }
    let mut colors = vec![usize::MAX; n];
    for comp in g.components() {
        let degree_lists = comp.iter().all(|&v| lists.lists[v].len() >= g.degree(v));
        let ok = if !degree_lists {
            comp.len() <= BACKTRACK_LIMIT && backtrack(g, lists, &comp, 0, &mut colors)
        } else if comp.len() == 1 {
            match lists.lists[comp[0]].first() {
                Some(&c) => {
                    colors[comp[0]] = c;
                    true
                }
                None => false,
            }
        } else if let Some(&root) = comp.iter().find(|&&v| lists.lists[v].len() > g.degree(v)) {
            slack_greedy(g, lists, root, &mut colors)
        } else if is_path_component(g, &comp) {
            path_dp(g, lists, &comp, &mut colors)
        } else if comp.iter().all(|&v| g.degree(v) == 2) {
            cycle_two_lists(g, lists, &comp, &mut colors)
        } else {
            return Err(Error::UnsupportedShape);
        };
        if !ok {
            return Err(Error::NoColoring);
        }
    }
    let coloring = Coloring::new(colors, Certificate::External);
    debug_assert!(g.edges().all(|(u, v)| coloring.colors[u] != coloring.colors[v]));
    Ok(coloring)
}

fn smallest_free(g: &Graph, lists: &ListAssignment, v: usize, colors: &[usize]) -> Option<usize> {
    lists.lists[v].iter().copied().find(|&c| g.neighbors(v).iter().all(|&w| colors[w] != c))
}

fn slack_greedy(g: &Graph, lists: &ListAssignment, root: usize, colors: &mut [usize]) -> bool {
    let mut order = vec![root];
    let mut seen = vec![false; g.vertex_count()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    // every vertex but the root still has its BFS parent uncolored when colored
    for &v in order.iter().rev() {
        match smallest_free(g, lists, v, colors) {
            Some(c) => colors[v] = c,
            None => return false,
        }
    }
    true
}

fn is_path_component(g: &Graph, comp: &[usize]) -> bool {
    let ends = comp.iter().filter(|&&v| g.degree(v) == 1).count();
    ends == 2 && comp.iter().all(|&v| g.degree(v) <= 2)
}

/// Exact coloring of a path component by dynamic programming along the path.
fn path_dp(g: &Graph, lists: &ListAssignment, comp: &[usize], colors: &mut [usize]) -> bool {
    let start = *comp.iter().find(|&&v| g.degree(v) == 1).unwrap();
    let mut seq = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
        seq.push(next);
        prev = cur;
        cur = next;
    }
    // feasible[i]: colors for seq[i] extendable to seq[i..]
    let mut feasible: Vec<Vec<usize>> = vec![Vec::new(); seq.len()];
    for i in (0..seq.len()).rev() {
        feasible[i] = lists.lists[seq[i]]
            .iter()
            .copied()
            .filter(|&c| i + 1 == seq.len() || feasible[i + 1].iter().any(|&d| d != c))
            .collect();
    }
    let mut last = usize::MAX;
    for (i, &v) in seq.iter().enumerate() {
        match feasible[i].iter().copied().find(|&c| c != last) {
            Some(c) => {
                colors[v] = c;
                last = c;
            }
            None => return false,
        }
    }
    true
}

/// A cycle where every list has exactly two colors.
fn cycle_two_lists(g: &Graph, lists: &ListAssignment, comp: &[usize], colors: &mut [usize]) -> bool {
    let start = comp[0];
    let mut seq = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start)[0];
    while cur != start {
        seq.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    let k = seq.len();
    let l = |i: usize| &lists.lists[seq[i % k]];
    match (0..k).find(|&i| l(i) != l(i + 1)) {
        Some(i) => {
            // c(seq[i]) outside the next list, then walk backwards around the cycle
            let first = l(i).iter().copied().find(|c| !l(i + 1).contains(c)).unwrap();
            colors[seq[i]] = first;
            for step in 1..k {
                let v = seq[(i + k - step) % k];
                match smallest_free(g, lists, v, colors) {
                    Some(c) => colors[v] = c,
                    None => return false,
                }
            }
            true
        }
        None if k % 2 == 0 => {
            for (i, &v) in seq.iter().enumerate() {
                colors[v] = l(0)[i % 2];
            }
            true
        }
        None => false,
    }
}

fn backtrack(g: &Graph, lists: &ListAssignment, comp: &[usize], i: usize, colors: &mut [usize]) -> bool {
    if i == comp.len() {
        return true;
    }
    let v = comp[i];
    for &c in &lists.lists[v] {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if backtrack(g, lists, comp, i + 1, colors) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}
