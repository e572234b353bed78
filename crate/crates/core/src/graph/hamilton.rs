use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{is_connected, BitSet, Graph, GraphError, TriState};

pub const DEFAULT_HAMILTON_BUDGET: u64 = 5_000_000;

/// A Hamiltonian cycle as a vertex order starting at 0, if one exists.
///
/// Seeded rotation-extension runs first with half the budget. If it finds
/// nothing, backtracking extends a path from vertex 0, visiting the neighbor with the
/// fewest unvisited neighbors first. Moves forced by degree-two vertices are
/// taken directly, and branches where the unvisited vertices are cut off from
/// the end or short of usable neighbors are dropped.
pub fn hamiltonian_cycle(g: &Graph, budget: u64) -> Result<Option<Vec<usize>>, GraphError> {
    let n = g.n();
    if n < 3 || !is_connected(g) || (0..n).any(|v| g.degree(v) < 2) {
        return Ok(None);
    }
    let (cycle, used) = rotation_extension(g, budget / 2);
    if let Some(cycle) = cycle {
        return Ok(Some(cycle));
    }
    let mut search = Search {
        g,
        unvisited: BitSet::full(n),
        path: Vec::with_capacity(n),
        nodes: used,
        budget,
    };
    search.unvisited.remove(0);
    search.path.push(0);
    if search.extend()? {
        Ok(Some(search.path))
    } else {
        Ok(None)
    }
}

pub fn is_hamiltonian(g: &Graph, budget: u64) -> TriState {
    match hamiltonian_cycle(g, budget) {
        Ok(Some(_)) => TriState::Yes,
        Ok(None) => TriState::No,
        Err(_) => TriState::Unknown,
    }
}

/// Randomized path growth with Pósa rotations, restarted periodically.
/// Returns a verified cycle rotated to start at 0, and the steps spent.
fn rotation_extension(g: &Graph, steps: u64) -> (Option<Vec<usize>>, u64) {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a11);
    let restart = (n * n * 4) as u64;
    let mut used = 0;
    while used < steps {
        let mut path = vec![rng.gen_range(0..n)];
        let mut pos = vec![usize::MAX; n];
        pos[path[0]] = 0;
        let mut local = 0;
        while local < restart && used < steps {
            local += 1;
            used += 1;
            let end = *path.last().unwrap();
            let mut fresh: Vec<usize> = g
                .neighbors(end)
                .iter()
                .copied()
                .filter(|&w| pos[w] == usize::MAX)
                .collect();
            if !fresh.is_empty() {
                fresh.shuffle(&mut rng);
                let w = *fresh
                    .iter()
                    .min_by_key(|&&w| {
                        g.neighbors(w)
                            .iter()
                            .filter(|&&u| pos[u] == usize::MAX)
                            .count()
                    })
                    .unwrap();
                pos[w] = path.len();
                path.push(w);
                continue;
            }
            if path.len() == n && g.has_edge(end, path[0]) {
                let start = path.iter().position(|&v| v == 0).unwrap();
                path.rotate_left(start);
                return (Some(path), used);
            }
            // rotate: join end to an interior path vertex and reverse the tail
            let pivots: Vec<usize> = g
                .neighbors(end)
                .iter()
                .map(|&w| pos[w])
                .filter(|&i| i + 2 < path.len())
                .collect();
            let Some(&i) = pivots.choose(&mut rng) else {
                break;
            };
            path[i + 1..].reverse();
            for (j, &v) in path.iter().enumerate().skip(i + 1) {
                pos[v] = j;
            }
        }
    }
    (None, used)
}

struct Search<'g> {
    g: &'g Graph,
    unvisited: BitSet,
    path: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self) -> Result<bool, GraphError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(GraphError::LimitExceeded(format!(
                "Hamiltonian search examined more than {} nodes",
                self.budget
            )));
        }
        let end = *self.path.last().unwrap();
        if self.unvisited.is_empty() {
            return Ok(self.g.has_edge(end, 0));
        }
        let Some(forced) = self.feasible(end) else {
            return Ok(false);
        };
        if !self.reachable(end) {
            return Ok(false);
        }
        let mut next: Vec<(usize, usize)> = match forced {
            Some(w) => vec![(0, w)],
            None => self
                .g
                .neighbors(end)
                .iter()
                .filter(|&&w| self.unvisited.contains(w))
                .map(|&w| {
                    (
                        self.g.neighbor_set(w).count_intersection(&self.unvisited),
                        w,
                    )
                })
                .collect(),
        };
        next.sort_unstable();
        for (_, w) in next {
            self.unvisited.remove(w);
            self.path.push(w);
            if self.extend()? {
                return Ok(true);
            }
            self.path.pop();
            self.unvisited.insert(w);
        }
        Ok(false)
    }

    /// Each unvisited vertex still needs two usable neighbors: unvisited ones,
    /// the current end, or the start. A vertex left with exactly two, one of
    /// them the end, has to come next; two such vertices are a dead end.
    fn feasible(&self, end: usize) -> Option<Option<usize>> {
        let mut forced = None;
        for w in self.unvisited.iter() {
            let row = self.g.neighbor_set(w);
            let to_end = row.contains(end);
            let to_start = end != 0 && row.contains(0);
            let usable = row.count_intersection(&self.unvisited)
                + usize::from(to_end)
                + usize::from(to_start);
            if usable < 2 {
                return None;
            }
            if end != 0 && usable == 2 && to_end && !(to_start && self.unvisited.len() == 1) {
                if forced.is_some() {
                    return None;
                }
                forced = Some(w);
            }
        }
        Some(forced)
    }

    /// Every unvisited vertex is reachable from the end through unvisited
    /// vertices.
    fn reachable(&self, end: usize) -> bool {
        let mut seen = self.g.neighbor_set(end).clone();
        seen.intersect_with(&self.unvisited);
        let mut frontier = seen.clone();
        while let Some(v) = frontier.first() {
            frontier.remove(v);
            let mut fresh = self.g.neighbor_set(v).clone();
            fresh.intersect_with(&self.unvisited);
            fresh.difference_with(&seen);
            seen.union_with(&fresh);
            frontier.union_with(&fresh);
        }
        seen.len() == self.unvisited.len()
    }
}
