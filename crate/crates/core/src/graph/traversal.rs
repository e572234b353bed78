use std::collections::VecDeque;

use super::{ComponentShape, Distance, Graph};

/// Connected components, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// Hop distances from `source`; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
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

/// Largest eccentricity, `Infinite` when disconnected.
pub fn diameter(g: &Graph) -> Distance {
    let mut best = 0;
    for s in 0..g.n() {
        for d in bfs_distances(g, s) {
            match d {
                Some(d) => best = best.max(d),
                None => return Distance::Infinite,
            }
        }
    }
    Distance::Finite(best)
}

/// Shortest cycle length; `Infinite` for forests.
///
/// A BFS from every root, closing a cycle at each non-tree edge. The minimum
/// over all roots is exact.
pub fn girth(g: &Graph) -> Distance {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
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
        Distance::Infinite
    } else {
        Distance::Finite(best)
    }
}

/// Connected with every degree even. With `n > 1`, an isolated vertex
/// already breaks connectivity.
pub fn is_eulerian(g: &Graph) -> bool {
    is_connected(g) && (0..g.n()).all(|v| g.degree(v).is_multiple_of(2))
}

/// A closed trail through every edge (Hierholzer), when one exists.
///
/// The returned walk starts and ends at the same vertex and has
/// `edge_count + 1` entries.
pub fn euler_circuit(g: &Graph) -> Option<Vec<usize>> {
    if !is_eulerian(g) {
        return None;
    }
    if g.edge_count() == 0 {
        return Some(if g.n() == 0 { Vec::new() } else { vec![0] });
    }
    // edge ids per endpoint
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n()];
    for (id, (a, b)) in g.edges().enumerate() {
        incident[a].push((b, id));
        incident[b].push((a, id));
    }
    let mut used = vec![false; g.edge_count()];
    let mut cursor = vec![0usize; g.n()];
    let start = (0..g.n()).find(|&v| g.degree(v) > 0)?;
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(g.edge_count() + 1);
    while let Some(&u) = stack.last() {
        while cursor[u] < incident[u].len() && used[incident[u][cursor[u]].1] {
            cursor[u] += 1;
        }
        if cursor[u] == incident[u].len() {
            circuit.push(u);
            stack.pop();
        } else {
            let (w, id) = incident[u][cursor[u]];
            used[id] = true;
            stack.push(w);
        }
    }
    circuit.reverse();
    Some(circuit)
}

/// Tests each component for completeness, then for balanced complete
/// bipartiteness (2-coloring plus `m²` edges).
pub fn classify_components(g: &Graph) -> Vec<ComponentShape> {
    connected_components(g)
        .iter()
        .map(|comp| classify_one(g, comp))
        .collect()
}

fn classify_one(g: &Graph, comp: &[usize]) -> ComponentShape {
    let m = comp.len();
    let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
    if edges == m * (m - 1) / 2 {
        return ComponentShape::Complete(m);
    }
    let mut color = vec![None; g.n()];
    color[comp[0]] = Some(false);
    let mut queue = VecDeque::from([comp[0]]);
    while let Some(u) = queue.pop_front() {
        let cu = color[u].unwrap();
        for &w in g.neighbors(u) {
            match color[w] {
                None => {
                    color[w] = Some(!cu);
                    queue.push_back(w);
                }
                Some(cw) if cw == cu => return ComponentShape::Other(m),
                Some(_) => {}
            }
        }
    }
    let side = comp.iter().filter(|&&v| color[v] == Some(false)).count();
    if 2 * side == m && edges == side * side {
        ComponentShape::CompleteBipartite(side, side)
    } else {
        ComponentShape::Other(m)
    }
}
