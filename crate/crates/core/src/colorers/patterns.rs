use crate::graph::Graph;
use crate::injective::{Certificate, Coloring};
use crate::{Error, Result};

/// Colors for the cycle `0, 1, .., k-1` in order: `sstt` repeated when
/// `4 | k`, otherwise `012` repeated, with the last three vertices recolored
/// `1 2 0` when `k = 2 (mod 3)`.
pub(crate) fn cycle_colors(k: usize) -> Vec<usize> {
    if k.is_multiple_of(4) {
        return (0..k).map(|i| [0, 0, 1, 1][i % 4]).collect();
    }
    let mut colors: Vec<usize> = (0..k).map(|i| i % 3).collect();
    if k % 3 == 2 {
        colors[k - 3..].copy_from_slice(&[1, 2, 0]);
    }
    colors
}

/// Injective coloring of `C_k`: two colors when `4 | k`, three otherwise.
pub fn cycle_injective_color(k: usize) -> Result<Coloring> {
    if k < 3 {
        return Err(Error::PreconditionViolated(format!("a cycle needs at least 3 vertices, got {k}")));
    }
    Ok(Coloring::new(cycle_colors(k), Certificate::Pattern))
}

/// Pattern coloring of a connected graph with maximum degree at most 2,
/// walking the path or cycle from its smallest endpoint.
pub(crate) fn path_or_cycle_colors(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let start = (0..n).find(|&v| g.degree(v) <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
        order.push(next);
        prev = cur;
        cur = next;
    }
    let pattern = if g.is_cycle() { cycle_colors(n) } else { (0..n).map(|i| [0, 0, 1, 1][i % 4]).collect() };
    let mut colors = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        colors[v] = pattern[i];
    }
    colors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::injective::injective_ok;

    #[test]
    fn cycles_use_the_right_palette() {
        for k in 3..40 {
            let c = cycle_injective_color(k).unwrap();
            assert!(injective_ok(&Graph::cycle(k), &c.colors), "k={k}");
            assert_eq!(c.palette, if k % 4 == 0 { 2 } else { 3 }, "k={k}");
        }
        assert_eq!(cycle_injective_color(8).unwrap().colors, vec![0, 0, 1, 1, 0, 0, 1, 1]);
        assert!(cycle_injective_color(2).is_err());
    }

    #[test]
    fn paths_use_two_colors() {
        for n in 1..12 {
            let g = Graph::path(n);
            let c = path_or_cycle_colors(&g);
            assert!(injective_ok(&g, &c));
            assert!(c.iter().all(|&x| x < 2));
        }
    }
}
