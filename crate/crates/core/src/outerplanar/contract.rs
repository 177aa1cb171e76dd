use super::{end_faces, BlockEmbedding, OuterEmbedding, Polygon};
use crate::graph::{is_two_connected, Graph};
use crate::{Error, Result};

/// Result of shortening every end-face path to length two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    pub embedding: OuterEmbedding,
    /// Original id of each vertex of `graph`.
    pub new_to_old: Vec<usize>,
    /// Each shortened path in original ids, `[v_L, h_1, .., h_L, v_R]`; only
    /// `h_1` survives the contraction.
    pub paths: Vec<Vec<usize>>,
    original_vertex_count: usize,
}

impl Contraction {
    /// Rebuilds the original graph from the contracted one and the recorded paths.
    pub fn expand(&self) -> Graph {
        let mut g = Graph::new(self.original_vertex_count);
        let shortcut = |a: usize, b: usize| {
            self.paths.iter().any(|p| {
                let (h1, r) = (p[1], p[p.len() - 1]);
                (a, b) == (h1, r) || (a, b) == (r, h1)
            })
        };
        for (u, v) in self.graph.edges() {
            let (a, b) = (self.new_to_old[u], self.new_to_old[v]);
            if !shortcut(a, b) {
                g.add_edge(a, b);
            }
        }
        for p in &self.paths {
            for w in p.windows(2) {
                g.add_edge(w[0], w[1]);
            }
        }
        g
    }
}

/// Replaces the simple path along every end face by a path of length two, so
/// every end face of the result is a triangle. Vertex ids of the result follow
/// the order of the surviving original ids.
pub fn contract_simple_paths(g: &Graph, emb: &OuterEmbedding) -> Result<Contraction> {
    if g.vertex_count() < 3 || !is_two_connected(g) {
        return Err(Error::PreconditionViolated("graph must be 2-connected with at least 3 vertices".into()));
    }
    let poly = match emb.blocks.as_slice() {
        [BlockEmbedding::Polygon(p)] => p,
        _ => return Err(Error::PreconditionViolated("embedding is not a single polygon".into())),
    };
    let mut keep = vec![true; g.vertex_count()];
    let mut paths = Vec::new();
    let mut shortcuts = Vec::new();
    for f in end_faces(emb, g) {
        if f.degree() <= 3 {
            continue;
        }
        let k = f.boundary.len();
        for &h in &f.boundary[2..k - 1] {
            keep[h] = false;
        }
        shortcuts.push((f.boundary[1], f.v_right()));
        paths.push(f.boundary.clone());
    }
    let kept: Vec<usize> = (0..g.vertex_count()).filter(|&v| keep[v]).collect();
    let (mut graph, new_to_old) = g.induced(&kept);
    let mut old_to_new = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in new_to_old.iter().enumerate() {
        old_to_new[v] = i;
    }
    for &(a, b) in &shortcuts {
        graph.add_edge(old_to_new[a], old_to_new[b]);
    }
    let polygon = Polygon::new(
        poly.outer_cycle.iter().filter(|&&v| keep[v]).map(|&v| old_to_new[v]).collect(),
        poly.chords.iter().map(|&(a, b)| (old_to_new[a], old_to_new[b])).collect(),
    );
    Ok(Contraction {
        graph,
        embedding: OuterEmbedding { blocks: vec![BlockEmbedding::Polygon(polygon)] },
        new_to_old,
        paths,
        original_vertex_count: g.vertex_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::{end_faces, recognize};

    fn with_chords(n: usize, chords: &[(usize, usize)]) -> Graph {
        let mut g = Graph::cycle(n);
        for &(a, b) in chords {
            g.add_edge(a, b);
        }
        g
    }

    fn contract(g: &Graph) -> Contraction {
        let emb = recognize(g).unwrap();
        contract_simple_paths(g, &emb).unwrap()
    }

    #[test]
    fn hexagon_with_diameter_becomes_two_triangles() {
        let g = with_chords(6, &[(0, 3)]);
        let c = contract(&g);
        assert_eq!(c.graph, with_chords(4, &[(0, 2)]));
        assert_eq!(c.new_to_old, vec![0, 1, 3, 4]);
        assert_eq!(c.expand(), g);
    }

    #[test]
    fn octagon_with_diameter() {
        let g = with_chords(8, &[(0, 4)]);
        let c = contract(&g);
        assert_eq!(c.graph, with_chords(4, &[(0, 2)]));
        c.embedding.validate(&c.graph).unwrap();
        assert!(end_faces(&c.embedding, &c.graph).iter().all(|f| f.degree() == 3));
        assert_eq!(c.expand(), g);
    }

    #[test]
    fn triangulated_faces_are_a_fixed_point() {
        let g = with_chords(6, &[(0, 2), (0, 3), (0, 4)]);
        let c = contract(&g);
        assert_eq!(c.graph, g);
        assert_eq!(c.new_to_old, (0..6).collect::<Vec<_>>());
        assert!(c.paths.is_empty());
    }

    #[test]
    fn bare_cycle_contracts_to_triangle() {
        let g = Graph::cycle(7);
        let c = contract(&g);
        assert_eq!(c.graph, Graph::cycle(3));
        assert_eq!(c.expand(), g);
    }

    #[test]
    fn rejects_non_two_connected() {
        let g = Graph::path(4);
        let emb = recognize(&g).unwrap();
        assert!(matches!(contract_simple_paths(&g, &emb), Err(Error::PreconditionViolated(_))));
    }
}
