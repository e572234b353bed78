//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ringgraph::graph::Graph;

/// Smallest dominating set size by trying every subset in order of size.
pub fn naive_domination(g: &Graph) -> usize {
    let n = g.n();
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &w| m | 1 << w))
        .collect();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    (0..=n)
        .find(|&size| {
            (0u32..=all).any(|set| {
                set.count_ones() as usize == size
                    && (0..n)
                        .filter(|&v| set >> v & 1 == 1)
                        .fold(0, |m, v| m | closed[v])
                        == all
            })
        })
        .unwrap()
}

const INF: usize = usize::MAX / 4;

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
        for &j in g.neighbors(i) {
            row[j] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Largest finite distance, `None` when some pair is disconnected.
pub fn naive_diameter(g: &Graph) -> Option<usize> {
    let d = floyd_warshall(g);
    let mut best = 0;
    for row in &d {
        for &x in row {
            if x >= INF {
                return None;
            }
            best = best.max(x);
        }
    }
    Some(best)
}

/// Shortest cycle: for each edge, the shortest path between its ends once
/// the edge is deleted, plus one.
pub fn naive_girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        let rest: Vec<(usize, usize)> = g.edges().filter(|&e| e != (u, v)).collect();
        let h = Graph::from_edges(g.n(), &rest);
        let d = floyd_warshall(&h)[u][v];
        if d < INF {
            best = Some(best.map_or(d + 1, |b| b.min(d + 1)));
        }
    }
    best
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges)
    })
}

/// Seeded random graphs on 1 to `max_n` vertices with varying density.
pub fn random_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p: f64 = rng.gen_range(0.1..0.9);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        })
        .collect()
}
