//! Simple undirected graphs on dense vertex ids and the structural queries
//! the rest of the crate is built on.

use std::collections::VecDeque;
use std::fmt;

use crate::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted, so every traversal in the crate visits
/// vertices in a reproducible order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Self-loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if !g.add_edge(u, v) {
                return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}")));
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Inserts the edge `uv`; returns `false` if it was already present.
    ///
    /// Panics on a self-loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at {u}");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                true
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("asymmetric adjacency");
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        max_degree(self)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        bfs_distances(self, 0).iter().all(Option::is_some)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `keep` (any order). Returns the subgraph together
    /// with the map from new ids to old ids; new ids follow increasing old id.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut old_ids: Vec<usize> = keep.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut sub = Graph::new(old_ids.len());
        for (i, &v) in old_ids.iter().enumerate() {
            sub.adj[i] = self.adj[v].iter().filter(|&&w| new_id[w] != usize::MAX).map(|&w| new_id[w]).collect();
        }
        (sub, old_ids)
    }

    /// Subgraph with the given vertices deleted; same id conventions as [`Graph::induced`].
    pub fn without(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut drop = vec![false; self.vertex_count()];
        for &v in removed {
            drop[v] = true;
        }
        let keep: Vec<usize> = self.vertices().filter(|&v| !drop[v]).collect();
        self.induced(&keep)
    }

    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 3 && self.adj.iter().all(|ns| ns.len() == 2) && self.is_connected()
    }

    pub fn is_path(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 || !self.is_connected() {
            return false;
        }
        n == 1 || (self.edge_count() == n - 1 && self.max_degree() <= 2)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.vertex_count())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Length of a shortest cycle, or `Infinite` for forests.
///
/// `Finite(_)` always orders before `Infinite`, so lower-bound checks such as
/// `girth >= Girth::Finite(6)` hold vacuously for acyclic graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, bound: usize) -> bool {
        self >= Girth::Finite(bound)
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

pub(crate) fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Shortest cycle length by a breadth-first search from every vertex.
pub fn girth(g: &Graph) -> Girth {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            // nothing shorter can be found from this root any more
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

pub fn max_degree(g: &Graph) -> usize {
    g.vertices().map(|v| g.degree(v)).max().unwrap_or(0)
}

/// Blocks (maximal 2-connected subgraphs and bridges) with their cut vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex set of each block; blocks ordered by their vertex lists.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    /// For each block, the cut vertices it contains.
    pub block_cut_vertices: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    /// Blocks containing at most one cut vertex.
    pub fn end_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&b| self.block_cut_vertices[b].len() <= 1).collect()
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Edges of block `b`: every graph edge with both endpoints in the block.
    pub fn block_edges(&self, g: &Graph, b: usize) -> Vec<(usize, usize)> {
        let vs = &self.blocks[b];
        let mut out = Vec::new();
        for &u in vs {
            for &w in g.neighbors(u) {
                if w > u && vs.binary_search(&w).is_ok() {
                    out.push((u, w));
                }
            }
        }
        out
    }
}

/// Block decomposition of a connected graph (Hopcroft-Tarjan, iterative).
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    let n = g.vertex_count();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    if n == 1 {
        blocks.push(vec![0]);
    }
    if n >= 2 {
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(u) {
                let w = g.neighbors(u)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push((u, w));
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut vs = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            vs.push(a);
                            vs.push(b);
                            if (a, b) == (p, u) {
                                break;
                            }
                        }
                        vs.sort_unstable();
                        vs.dedup();
                        blocks.push(vs);
                    }
                }
            }
        }
    }
    blocks.sort();
    let mut count = vec![0usize; n];
    for b in &blocks {
        for &v in b {
            count[v] += 1;
        }
    }
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| count[v] >= 2).collect();
    let block_cut_vertices = blocks.iter().map(|b| b.iter().copied().filter(|&v| count[v] >= 2).collect()).collect();
    Ok(BlockDecomposition { blocks, cut_vertices, block_cut_vertices })
}

pub fn is_two_connected(g: &Graph) -> bool {
    g.vertex_count() >= 3 && blocks(g).map(|d| d.blocks.len() == 1).unwrap_or(false)
}

/// `G^(2)`: `uv` is an edge iff `u != v` and they share a neighbor.
pub fn common_neighbor_graph(g: &Graph) -> Graph {
    let mut h = Graph::new(g.vertex_count());
    for w in g.vertices() {
        let ns = g.neighbors(w);
        for (i, &a) in ns.iter().enumerate() {
            for &b in &ns[i + 1..] {
                h.add_edge(a, b);
            }
        }
    }
    h
}

/// `G^2`: `uv` is an edge iff `1 <= dist(u, v) <= 2`.
pub fn square_graph(g: &Graph) -> Graph {
    let mut h = common_neighbor_graph(g);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_girth(g: &Graph) -> Girth {
        // every simple cycle through its smallest vertex, by DFS
        let n = g.vertex_count();
        let mut best = usize::MAX;
        fn dfs(g: &Graph, start: usize, u: usize, len: usize, on: &mut Vec<bool>, best: &mut usize) {
            for &w in g.neighbors(u) {
                if w == start && len >= 3 {
                    *best = (*best).min(len);
                } else if w > start && !on[w] {
                    on[w] = true;
                    dfs(g, start, w, len + 1, on, best);
                    on[w] = false;
                }
            }
        }
        for s in 0..n {
            let mut on = vec![false; n];
            on[s] = true;
            dfs(g, s, s, 1, &mut on, &mut best);
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::cycle(5)), Girth::Finite(5));
        let tree = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(girth(&tree), Girth::Infinite);
        // C_6 with a chord cutting off a triangle side and a pentagon side
        let mut g = Graph::cycle(6);
        g.add_edge(0, 2);
        assert_eq!(brute_force_girth(&g), Girth::Finite(3));
        assert_eq!(girth(&g), Girth::Finite(3));
        // C_6 plus chord {0,3}: two 4-cycles
        let mut g = Graph::cycle(6);
        g.add_edge(0, 3);
        assert_eq!(brute_force_girth(&g), Girth::Finite(4));
        assert_eq!(girth(&g), Girth::Finite(4));
    }

    #[test]
    fn infinite_girth_satisfies_every_lower_bound() {
        assert!(Girth::Infinite.at_least(1000));
        assert!(Girth::Finite(6).at_least(6));
        assert!(!Girth::Finite(5).at_least(6));
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(max_degree(&Graph::cycle(4)), 2);
        assert_eq!(max_degree(&Graph::star(3)), 3);
        assert_eq!(max_degree(&Graph::new(1)), 0);
    }

    #[test]
    fn blocks_examples() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        let d = blocks(&bowtie).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert_eq!(d.cut_vertices, vec![0]);

        let d = blocks(&Graph::cycle(5)).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());

        let d = blocks(&Graph::path(4)).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(d.cut_vertices, vec![1, 2]);
        assert_eq!(d.end_blocks(), vec![0, 2]);
    }

    #[test]
    fn blocks_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(blocks(&g), Err(Error::DisconnectedInput));
    }

    #[test]
    fn common_neighbor_graph_examples() {
        let p3 = common_neighbor_graph(&Graph::path(3));
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        let c4 = common_neighbor_graph(&Graph::cycle(4));
        assert_eq!(c4.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        let c6 = common_neighbor_graph(&Graph::cycle(6));
        assert_eq!(c6.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 4), (1, 3), (1, 5), (2, 4), (3, 5)]);
    }

    #[test]
    fn square_graph_examples() {
        assert_eq!(square_graph(&Graph::path(3)), Graph::complete(3));
        assert_eq!(square_graph(&Graph::cycle(4)), Graph::complete(4));
        let c7 = square_graph(&Graph::cycle(7));
        for u in 0..7 {
            assert_eq!(c7.degree(u), 4);
            for d in [1, 2] {
                assert!(c7.has_edge(u, (u + d) % 7));
            }
        }
    }

    fn small_graph(n: usize, mask: u64) -> Graph {
        let mut g = Graph::new(n);
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    g.add_edge(u, v);
                }
                bit += 1;
            }
        }
        g
    }

    #[test]
    fn girth_matches_cycle_enumeration_on_small_graphs() {
        // exhaustive on n <= 6, strided sample on 7 and 8
        for n in 1..=6usize {
            for mask in 0..1u64 << (n * (n - 1) / 2) {
                let g = small_graph(n, mask);
                assert_eq!(girth(&g), brute_force_girth(&g), "{g:?}");
            }
        }
        for n in [7usize, 8] {
            let m = n * (n - 1) / 2;
            let mut state = 0x9e37_79b9_7f4a_7c15u64;
            for _ in 0..3000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let g = small_graph(n, (state >> 17) & ((1 << m) - 1));
                assert_eq!(girth(&g), brute_force_girth(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn block_edges_partition_edge_set() {
        for n in 2..=6usize {
            for mask in 0..1u64 << (n * (n - 1) / 2) {
                let g = small_graph(n, mask);
                if !g.is_connected() {
                    continue;
                }
                let d = blocks(&g).unwrap();
                let mut all: Vec<(usize, usize)> = (0..d.blocks.len()).flat_map(|b| d.block_edges(&g, b)).collect();
                let total = all.len();
                all.sort_unstable();
                all.dedup();
                assert_eq!(all.len(), total, "blocks share an edge in {g:?}");
                assert_eq!(all, g.edges().collect::<Vec<_>>());
                for v in 0..n {
                    let in_blocks = d.blocks.iter().filter(|b| b.contains(&v)).count();
                    assert_eq!(d.is_cut_vertex(v), in_blocks >= 2);
                }
            }
        }
    }

    #[test]
    fn common_neighbor_graph_is_subgraph_of_square() {
        for mask in 0..1u64 << 10 {
            let g = small_graph(5, mask);
            let cn = common_neighbor_graph(&g);
            let sq = square_graph(&g);
            assert!(cn.edges().all(|(u, v)| sq.has_edge(u, v)));
        }
    }
}
