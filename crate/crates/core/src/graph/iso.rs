//! Budgeted graph isomorphism by individualization and color refinement.

use std::collections::HashMap;

use super::{Graph, TriState};

pub const DEFAULT_ISO_VERTEX_LIMIT: usize = 48;
pub const DEFAULT_ISO_BUDGET: u64 = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoOutcome {
    pub verdict: TriState,
    /// `mapping[v]` is the image in the second graph of vertex `v` of the
    /// first; present exactly when the verdict is `Yes`.
    pub mapping: Option<Vec<usize>>,
    pub nodes: u64,
}

impl IsoOutcome {
    fn no() -> Self {
        IsoOutcome {
            verdict: TriState::No,
            mapping: None,
            nodes: 0,
        }
    }
}

/// `map` is a bijection `V(g1) → V(g2)` preserving adjacency and
/// non-adjacency.
pub fn verify_isomorphism(g1: &Graph, g2: &Graph, map: &[usize]) -> bool {
    let n = g1.n();
    if g2.n() != n || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &w in map {
        if w >= n || hit[w] {
            return false;
        }
        hit[w] = true;
    }
    (0..n).all(|i| (i + 1..n).all(|j| g1.has_edge(i, j) == g2.has_edge(map[i], map[j])))
}

/// Decides `g1 ≅ g2`.
///
/// Cheap invariants (order, size, degree multiset, neighbor-degree
/// multisets, triangle counts) reject first. Graphs above
/// [`DEFAULT_ISO_VERTEX_LIMIT`] that pass them come back `Unknown`. The
/// search then refines a joint coloring of both graphs and individualizes
/// one vertex pair at a time; any mapping found is verified before `Yes` is
/// returned. Running out of `budget` search nodes yields `Unknown`.
pub fn are_isomorphic(g1: &Graph, g2: &Graph, budget: u64) -> IsoOutcome {
    if !invariants_match(g1, g2) {
        return IsoOutcome::no();
    }
    if g1.n() > DEFAULT_ISO_VERTEX_LIMIT {
        return IsoOutcome {
            verdict: TriState::Unknown,
            mapping: None,
            nodes: 0,
        };
    }
    let n = g1.n();
    let joint = JointGraph { g1, g2, n };
    let initial: Vec<u32> = (0..2 * n)
        .map(|v| {
            let (g, u) = joint.side(v);
            (g.degree(u) * (n + 1) + triangles_at(g, u)) as u32
        })
        .collect();
    let mut search = IsoSearch {
        joint,
        nodes: 0,
        budget,
        exhausted: false,
    };
    let mapping = search.search(compress(&initial, |v| initial[v] as u64, &[]));
    let verdict = match (&mapping, search.exhausted) {
        (Some(_), _) => TriState::Yes,
        (None, true) => TriState::Unknown,
        (None, false) => TriState::No,
    };
    IsoOutcome {
        verdict,
        mapping,
        nodes: search.nodes,
    }
}

fn triangles_at(g: &Graph, v: usize) -> usize {
    let nbrs = g.neighbors(v);
    nbrs.iter()
        .map(|&a| g.neighbor_set(a).count_intersection(g.neighbor_set(v)))
        .sum::<usize>()
        / 2
}

fn vertex_profile(g: &Graph, v: usize) -> (usize, usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), triangles_at(g, v), nd)
}

fn invariants_match(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let profiles = |g: &Graph| {
        let mut p: Vec<_> = (0..g.n()).map(|v| vertex_profile(g, v)).collect();
        p.sort_unstable();
        p
    };
    profiles(g1) == profiles(g2)
}

#[derive(Clone, Copy)]
struct JointGraph<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    n: usize,
}

impl<'a> JointGraph<'a> {
    fn side(&self, v: usize) -> (&'a Graph, usize) {
        if v < self.n {
            (self.g1, v)
        } else {
            (self.g2, v - self.n)
        }
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + 'a {
        let (g, u) = self.side(v);
        let offset = if v < self.n { 0 } else { self.n };
        g.neighbors(u).iter().map(move |&w| w + offset)
    }
}

/// Relabels by rank of `(old color, key)` so equal signatures on either side
/// get equal colors.
fn compress(colors: &[u32], key: impl Fn(usize) -> u64, extra: &[Vec<u32>]) -> Vec<u32> {
    let mut sigs: Vec<(u32, u64, &[u32])> = (0..colors.len())
        .map(|v| {
            (
                colors[v],
                key(v),
                extra.get(v).map_or(&[][..], |e| e.as_slice()),
            )
        })
        .collect();
    let mut sorted = sigs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let rank: HashMap<(u32, u64, &[u32]), u32> = sorted
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i as u32))
        .collect();
    sigs.drain(..).map(|s| rank[&s]).collect()
}

struct IsoSearch<'a> {
    joint: JointGraph<'a>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl IsoSearch<'_> {
    /// Iterates to the coarsest equitable refinement.
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut classes = count_distinct(&colors);
        loop {
            let multisets: Vec<Vec<u32>> = (0..colors.len())
                .map(|v| {
                    let mut m: Vec<u32> = self.joint.neighbors(v).map(|w| colors[w]).collect();
                    m.sort_unstable();
                    m
                })
                .collect();
            let next = compress(&colors, |_| 0, &multisets);
            let next_classes = count_distinct(&next);
            colors = next;
            if next_classes == classes {
                return colors;
            }
            classes = next_classes;
        }
    }

    fn balanced(&self, colors: &[u32]) -> bool {
        let n = self.joint.n;
        let mut count: HashMap<u32, i64> = HashMap::new();
        for &c in &colors[..n] {
            *count.entry(c).or_default() += 1;
        }
        for &c in &colors[n..] {
            *count.entry(c).or_default() -= 1;
        }
        count.values().all(|&d| d == 0)
    }

    fn search(&mut self, colors: Vec<u32>) -> Option<Vec<usize>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return None;
        }
        let n = self.joint.n;
        let colors = self.refine(colors);
        if !self.balanced(&colors) {
            return None;
        }
        let mut members: HashMap<u32, Vec<usize>> = HashMap::new();
        for (v, &c) in colors.iter().enumerate() {
            members.entry(c).or_default().push(v);
        }
        // smallest non-singleton cell, ties by color for determinism
        let cell = members
            .iter()
            .filter(|(_, vs)| vs.len() > 2)
            .min_by_key(|(&c, vs)| (vs.len(), c))
            .map(|(_, vs)| vs.clone());
        let Some(cell) = cell else {
            let mut map = vec![0; n];
            for vs in members.values() {
                map[vs[0]] = vs[1] - n;
            }
            return verify_isomorphism(self.joint.g1, self.joint.g2, &map).then_some(map);
        };
        let v = cell[0];
        let fresh = colors.iter().max().unwrap() + 1;
        for &w in cell.iter().filter(|&&w| w >= n) {
            let mut next = colors.clone();
            next[v] = fresh;
            next[w] = fresh;
            if let Some(map) = self.search(next) {
                return Some(map);
            }
            if self.exhausted {
                return None;
            }
        }
        None
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}
