//! Property tests for the structural and coloring invariants, each against an
//! oracle that does not share code with the library.

use std::collections::VecDeque;

use outerinj::colorers::auto_color;
use outerinj::enumgen::{enumerate_2conn_outerplanar, random_outerplanar, GraphClassFilter};
use outerinj::graph::{girth, is_two_connected};
use outerinj::injective::{chi_injective_exact, is_injective, Injectivity};
use outerinj::outerplanar::{algorithm1, contract_simple_paths, end_faces, recognize};
use outerinj::{Certificate, Coloring, Error, Girth, Graph};
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::new(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for (a, b) in g.edges() {
            for (x, y) in [(a, b), (b, a)] {
                if x == u && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Whether `g` has `h` as a minor, by trying every assignment of vertices to
/// branch sets (or to none) and checking connectivity and adjacency.
fn has_minor(g: &Graph, h_edges: &[(usize, usize)], k: usize) -> bool {
    let n = g.vertex_count();
    let mut assign = vec![0usize; n];
    loop {
        // value 0 means unused, i >= 1 means branch set i - 1
        let sets: Vec<Vec<usize>> = (1..=k).map(|s| (0..n).filter(|&v| assign[v] == s).collect()).collect();
        if sets.iter().all(|s| !s.is_empty()) && sets.iter().all(|s| set_connected(g, s)) {
            let touches = |a: &[usize], b: &[usize]| a.iter().any(|&u| b.iter().any(|&v| g.has_edge(u, v)));
            if h_edges.iter().all(|&(x, y)| touches(&sets[x], &sets[y])) {
                return true;
            }
        }
        let mut i = 0;
        while i < n && assign[i] == k {
            assign[i] = 0;
            i += 1;
        }
        if i == n {
            return false;
        }
        assign[i] += 1;
    }
}

fn set_connected(g: &Graph, set: &[usize]) -> bool {
    let mut seen = vec![set[0]];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &v in set {
            if !seen.contains(&v) && g.has_edge(u, v) {
                seen.push(v);
            }
        }
        i += 1;
    }
    seen.len() == set.len()
}

const K4: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
const K23: [(usize, usize); 6] = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)];

/// Shortest cycle through each edge, by BFS between its ends without it.
fn girth_by_edges(g: &Graph) -> Girth {
    let n = g.vertex_count();
    let mut best = Girth::Infinite;
    for (a, b) in g.edges() {
        let mut dist = vec![usize::MAX; n];
        dist[a] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if (u, w) != (a, b) && (u, w) != (b, a) && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if dist[b] != usize::MAX {
            best = best.min(Girth::Finite(dist[b] + 1));
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn injective_iff_proper_on_common_neighbor_graph(g in small_graph(8), seed in any::<u64>()) {
        let n = g.vertex_count();
        let colors: Vec<usize> = (0..n).map(|v| ((seed >> (3 * v)) & 3) as usize).collect();
        let shares = |u: usize, v: usize| g.vertices().any(|w| g.has_edge(u, w) && g.has_edge(v, w));
        let proper = (0..n).all(|u| (u + 1..n).all(|v| !shares(u, v) || colors[u] != colors[v]));
        let verdict = is_injective(&g, &Coloring::new(colors, Certificate::External)).unwrap();
        prop_assert_eq!(verdict == Injectivity::Valid, proper);
    }

    #[test]
    fn generated_graphs_are_recognized_with_the_same_embedding(n in 3usize..30, seed in any::<u64>(), two in any::<bool>()) {
        let filter = GraphClassFilter { require_2connected: two, ..GraphClassFilter::default() };
        let (g, emb) = random_outerplanar(n, filter, seed).unwrap();
        prop_assert_eq!(recognize(&g).unwrap(), emb.clone());
        emb.validate(&g).unwrap();
        prop_assert!(g.edge_count() <= 2 * n - 3);
    }

    #[test]
    fn filters_are_sound(n in 3usize..25, seed in any::<u64>(), max_delta in 3usize..6, gmin in 3usize..7, two in any::<bool>()) {
        let filter = GraphClassFilter {
            max_delta,
            min_girth: Girth::Finite(gmin),
            require_2connected: two,
            ..GraphClassFilter::default()
        };
        match random_outerplanar(n, filter, seed) {
            Ok((g, _)) => {
                let degree_ok = g.vertices().all(|v| g.edges().filter(|&(a, b)| a == v || b == v).count() <= max_delta);
                prop_assert!(degree_ok);
                prop_assert!(girth_by_edges(&g) >= Girth::Finite(gmin));
                if two {
                    let survives = g.vertices().all(|v| {
                        let (rest, _) = g.without(&[v]);
                        connected(&rest)
                    });
                    prop_assert!(survives);
                }
            }
            Err(e) => prop_assert_eq!(e, Error::FilterUnsatisfiable),
        }
    }

    #[test]
    fn recognition_matches_forbidden_minors(g in small_graph(7)) {
        prop_assume!(connected(&g));
        let forbidden = has_minor(&g, &K4, 4) || has_minor(&g, &K23, 5);
        match recognize(&g) {
            Ok(emb) => {
                prop_assert!(!forbidden);
                emb.validate(&g).unwrap();
            }
            Err(e) => {
                prop_assert_eq!(e, Error::NotOuterplanar);
                prop_assert!(forbidden);
            }
        }
    }

    #[test]
    fn girth_matches_edge_bfs(g in small_graph(8)) {
        prop_assert_eq!(girth(&g), girth_by_edges(&g));
    }

    #[test]
    fn contraction_round_trips(n in 3usize..25, seed in any::<u64>()) {
        let filter = GraphClassFilter { require_2connected: true, ..GraphClassFilter::default() };
        let (g, emb) = random_outerplanar(n, filter, seed).unwrap();
        let c = contract_simple_paths(&g, &emb).unwrap();
        prop_assert_eq!(c.expand(), g.clone());
        c.embedding.validate(&c.graph).unwrap();
        for f in end_faces(&c.embedding, &c.graph) {
            prop_assert!(f.degree() <= 3);
        }
    }

    #[test]
    fn dispatcher_stays_within_two_of_delta(n in 3usize..11, seed in any::<u64>()) {
        let (g, _) = random_outerplanar(n, GraphClassFilter::default(), seed).unwrap();
        let out = auto_color(&g).unwrap();
        prop_assert!(out.verified);
        prop_assert!(out.bound <= g.max_degree() + 2);
        prop_assert!(out.coloring.colors.iter().all(|&c| c < out.bound));
    }

    #[test]
    fn exact_respects_general_bounds(g in small_graph(8)) {
        prop_assume!(connected(&g) && g.max_degree() >= 2);
        let d = g.max_degree();
        let (chi, c) = chi_injective_exact(&g, d * d - d + 1).unwrap();
        prop_assert!(chi >= d);
        prop_assert_eq!(is_injective(&g, &c).unwrap(), Injectivity::Valid);
    }
}

#[test]
fn enumeration_counts_match_chord_subsets() {
    // independent count: all subsets of diagonals, kept when pairwise non-crossing
    for n in 4..=7 {
        let diagonals: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 2..n).map(move |b| (a, b))).filter(|&(a, b)| (a, b) != (0, n - 1)).collect();
        let cross =
            |(a, b): (usize, usize), (c, d): (usize, usize)| (a < c && c < b && b < d) || (c < a && a < d && d < b);
        let m = diagonals.len();
        let brute = (0u32..1 << m)
            .filter(|&s| {
                let chosen: Vec<_> = (0..m).filter(|&i| s >> i & 1 == 1).map(|i| diagonals[i]).collect();
                chosen.iter().enumerate().all(|(i, &x)| chosen[i + 1..].iter().all(|&y| !cross(x, y)))
            })
            .count();
        let enumerated = enumerate_2conn_outerplanar(n, GraphClassFilter::default()).unwrap().count();
        assert_eq!(enumerated, brute, "n = {n}");
    }
    assert_eq!(enumerate_2conn_outerplanar(6, GraphClassFilter::default()).unwrap().count(), 45);
}

#[test]
fn every_enumerated_graph_is_outerplanar_and_sparse() {
    for n in 3..=9 {
        for (g, emb) in enumerate_2conn_outerplanar(n, GraphClassFilter::default()).unwrap() {
            assert_eq!(recognize(&g).unwrap(), emb);
            assert!(is_two_connected(&g));
            assert!(g.edge_count() <= 2 * n - 3);
        }
    }
}

#[test]
fn algorithm1_finds_a_light_end() {
    for n in 3..=10 {
        for (g, emb) in enumerate_2conn_outerplanar(n, GraphClassFilter::default()).unwrap() {
            let f = algorithm1(&g, &emb).unwrap();
            assert!(f.is_end_face(&g));
            assert!(g.degree(f.v_left()) < 5 || g.degree(f.v_right()) < 5, "{g:?}");
        }
    }
}

#[test]
fn exact_agrees_with_subset_chromatic_number_on_enumerated_graphs() {
    fn chromatic(h: &Graph) -> usize {
        let n = h.vertex_count();
        let full = (1usize << n) - 1;
        let independent: Vec<bool> =
            (0..=full).map(|s| h.edges().all(|(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0)).collect();
        let mut best = vec![usize::MAX; full + 1];
        best[0] = 0;
        for s in 1..=full {
            let low = s & s.wrapping_neg();
            let mut t = s;
            while t > 0 {
                if t & low != 0 && independent[t] && best[s ^ t] != usize::MAX {
                    best[s] = best[s].min(best[s ^ t] + 1);
                }
                t = (t - 1) & s;
            }
        }
        best[full]
    }
    for n in 3..=9 {
        for (g, _) in enumerate_2conn_outerplanar(n, GraphClassFilter::default()).unwrap() {
            let mut h = Graph::new(n);
            for w in 0..n {
                for u in 0..n {
                    for v in u + 1..n {
                        if g.has_edge(u, w) && g.has_edge(v, w) {
                            h.add_edge(u, v);
                        }
                    }
                }
            }
            let d = g.max_degree();
            assert_eq!(chi_injective_exact(&g, d * d).unwrap().0, chromatic(&h), "{g:?}");
        }
    }
}
