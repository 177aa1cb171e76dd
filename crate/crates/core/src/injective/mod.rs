//! Colorings, validity checkers, exact oracles and the degree-list colorer.

mod exact;
mod list;

use std::fmt;

use crate::graph::Graph;
use crate::{Error, Result};

pub use exact::{chi_injective_exact, chi_square_exact, chromatic_number_exact};
pub use list::list_color_degree;

/// The procedure that produced a coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    Exact,
    Theorem15,
    Theorem16,
    Theorem20,
    Theorem7,
    Theorem14,
    Pattern,
    External,
}

impl Certificate {
    pub fn as_str(self) -> &'static str {
        match self {
            Certificate::Exact => "exact",
            Certificate::Theorem15 => "theorem15",
            Certificate::Theorem16 => "theorem16",
            Certificate::Theorem20 => "theorem20",
            Certificate::Theorem7 => "theorem7",
            Certificate::Theorem14 => "theorem14",
            Certificate::Pattern => "pattern",
            Certificate::External => "external",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A total vertex coloring with colors `0..palette`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub palette: usize,
    pub certificate: Certificate,
}

impl Coloring {
    /// Palette is one more than the largest color used.
    pub fn new(colors: Vec<usize>, certificate: Certificate) -> Self {
        let palette = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        Coloring { colors, palette, certificate }
    }

    /// Colors actually used.
    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// Allowed colors per vertex, each list sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ListAssignment {
    pub lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<usize>>) -> Self {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        ListAssignment { lists }
    }

    pub fn allows(&self, v: usize, c: usize) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Injectivity {
    Valid,
    /// `u < v` share the neighbor `w` and the same color.
    Violation {
        u: usize,
        v: usize,
        w: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathMode {
    AtMost3,
    Exactly3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathProperty {
    Valid,
    Violation(Vec<usize>),
}

fn check_total(g: &Graph, colors: &[usize]) -> Result<()> {
    if colors.len() != g.vertex_count() {
        return Err(Error::PartialColoring { expected: g.vertex_count(), got: colors.len() });
    }
    Ok(())
}

/// Checks that no two vertices with a common neighbor share a color; the
/// reported witness is the lexicographically first `(u, v, w)`.
pub fn is_injective(g: &Graph, c: &Coloring) -> Result<Injectivity> {
    check_total(g, &c.colors)?;
    let colors = &c.colors;
    for u in g.vertices() {
        let mut best: Option<(usize, usize)> = None;
        for &w in g.neighbors(u) {
            for &v in g.neighbors(w) {
                if v > u && colors[v] == colors[u] && best.is_none_or(|b| (v, w) < b) {
                    best = Some((v, w));
                }
            }
        }
        if let Some((v, w)) = best {
            return Ok(Injectivity::Violation { u, v, w });
        }
    }
    Ok(Injectivity::Valid)
}

/// Fast boolean form of [`is_injective`] for a color vector of the right length.
pub fn injective_ok(g: &Graph, colors: &[usize]) -> bool {
    let mut seen: Vec<usize> = Vec::new();
    g.vertices().all(|w| {
        seen.clear();
        seen.extend(g.neighbors(w).iter().map(|&v| colors[v]));
        seen.sort_unstable();
        seen.windows(2).all(|p| p[0] != p[1])
    })
}

/// Every path `v1 v2 v3 v4` whose two internal vertices have degree 2, each
/// reported once in its lexicographically smaller orientation.
pub fn four_windows(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for v2 in g.vertices() {
        if g.degree(v2) != 2 {
            continue;
        }
        for &v3 in g.neighbors(v2) {
            if g.degree(v3) != 2 {
                continue;
            }
            let v1 = g.neighbors(v2).iter().copied().find(|&x| x != v3).unwrap();
            let v4 = g.neighbors(v3).iter().copied().find(|&x| x != v2).unwrap();
            let p = [v1, v2, v3, v4];
            let rev = [v4, v3, v2, v1];
            if v1 != v4 && p <= rev {
                out.push(p);
            }
        }
    }
    out.sort_unstable();
    out
}

pub(crate) fn window_ok(colors: &[usize], p: &[usize; 4], mode: PathMode) -> bool {
    let mut cs = p.map(|v| colors[v]);
    cs.sort_unstable();
    let distinct = 1 + cs.windows(2).filter(|w| w[0] != w[1]).count();
    match mode {
        PathMode::AtMost3 => distinct <= 3,
        PathMode::Exactly3 => distinct == 3,
    }
}

/// Checks the color count on every simple path of length three.
pub fn simple_path_color_property(g: &Graph, c: &Coloring, mode: PathMode) -> Result<PathProperty> {
    check_total(g, &c.colors)?;
    Ok(four_windows(g)
        .into_iter()
        .find(|p| !window_ok(&c.colors, p, mode))
        .map_or(PathProperty::Valid, |p| PathProperty::Violation(p.to_vec())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::common_neighbor_graph;

    fn col(colors: &[usize]) -> Coloring {
        Coloring::new(colors.to_vec(), Certificate::External)
    }

    #[test]
    fn injectivity_examples() {
        // opposite vertices of C_4 share two neighbors, so each pair needs its own color
        assert_eq!(is_injective(&Graph::cycle(4), &col(&[0, 0, 1, 1])).unwrap(), Injectivity::Valid);
        assert_eq!(
            is_injective(&Graph::cycle(4), &col(&[0, 1, 0, 1])).unwrap(),
            Injectivity::Violation { u: 0, v: 2, w: 1 }
        );
        assert!(matches!(
            is_injective(&Graph::star(3), &col(&[0, 1, 1, 2])).unwrap(),
            Injectivity::Violation { u: 1, v: 2, w: 0 }
        ));
        assert_eq!(
            is_injective(&Graph::cycle(6), &col(&[0, 1, 0, 1, 0, 1])).unwrap(),
            Injectivity::Violation { u: 0, v: 2, w: 1 }
        );
        assert_eq!(is_injective(&Graph::cycle(4), &col(&[0, 1])), Err(Error::PartialColoring { expected: 4, got: 2 }));
    }

    #[test]
    fn path_property_examples() {
        let c8 = Graph::cycle(8);
        let sstt = col(&[0, 0, 1, 1, 0, 0, 1, 1]);
        assert_eq!(simple_path_color_property(&c8, &sstt, PathMode::AtMost3).unwrap(), PathProperty::Valid);
        assert!(matches!(
            simple_path_color_property(&c8, &sstt, PathMode::Exactly3).unwrap(),
            PathProperty::Violation(_)
        ));
        let c6 = Graph::cycle(6);
        let period3 = col(&[0, 1, 2, 0, 1, 2]);
        assert_eq!(simple_path_color_property(&c6, &period3, PathMode::Exactly3).unwrap(), PathProperty::Valid);
        assert_eq!(
            simple_path_color_property(&Graph::path(4), &col(&[0, 1, 2, 3]), PathMode::AtMost3).unwrap(),
            PathProperty::Violation(vec![0, 1, 2, 3])
        );
    }

    #[test]
    fn triangle_has_no_simple_path_of_length_three() {
        assert!(four_windows(&Graph::cycle(3)).is_empty());
        assert_eq!(four_windows(&Graph::cycle(4)).len(), 4);
    }

    #[test]
    fn injective_agrees_with_common_neighbor_graph_on_all_small_graphs() {
        // every graph on 5 vertices, every coloring from a small deterministic family
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            let h = common_neighbor_graph(&g);
            for seed in 0..8u32 {
                let colors: Vec<usize> = (0..5).map(|v| ((seed * 7 + v * 3 + mask) % 3) as usize).collect();
                let proper = h.edges().all(|(a, b)| colors[a] != colors[b]);
                assert_eq!(is_injective(&g, &col(&colors)).unwrap() == Injectivity::Valid, proper);
                assert_eq!(injective_ok(&g, &colors), proper);
            }
        }
    }
}
