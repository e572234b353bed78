//! Simple undirected graphs on `0..n` and the exact algorithms the theorem
//! checks run against.

mod bitset;
mod clique;
mod domination;
mod hamilton;
mod iso;
mod traversal;

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bitset::BitSet;
pub use clique::{has_clique_through_vertex, max_clique_through_vertex};
pub use domination::{
    domination_number_exact, greedy_dominating_set, is_dominating, Domination,
    DEFAULT_DOMINATION_CAP, DEFAULT_DOMINATION_VERTEX_LIMIT,
};
pub use hamilton::{hamiltonian_cycle, is_hamiltonian, DEFAULT_HAMILTON_BUDGET};
pub use iso::{
    are_isomorphic, verify_isomorphism, IsoOutcome, DEFAULT_ISO_BUDGET, DEFAULT_ISO_VERTEX_LIMIT,
};
pub use traversal::{
    bfs_distances, classify_components, connected_components, diameter, euler_circuit, girth,
    is_connected, is_eulerian,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("search limit exceeded: {0}")]
    LimitExceeded(String),
}

/// A distance-like quantity that may be infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// Result of a budgeted decision procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TriState {
    Yes,
    No,
    /// The search budget ran out before a definite answer.
    Unknown,
}

impl TriState {
    pub fn from_bool(b: bool) -> Self {
        if b {
            TriState::Yes
        } else {
            TriState::No
        }
    }

    pub fn definite(self) -> Option<bool> {
        match self {
            TriState::Yes => Some(true),
            TriState::No => Some(false),
            TriState::Unknown => None,
        }
    }
}

/// Verified shape of one connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ComponentShape {
    Complete(usize),
    /// `K_{m,m}` with both sides of size `m`.
    CompleteBipartite(usize, usize),
    Other(usize),
}

impl ComponentShape {
    /// `K_{1,1}` and `K_2` are the same graph; this picks `Complete(2)`.
    pub fn canonical(self) -> Self {
        match self {
            ComponentShape::CompleteBipartite(1, 1) => ComponentShape::Complete(2),
            other => other,
        }
    }
}

impl fmt::Display for ComponentShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentShape::Complete(m) => write!(f, "K{m}"),
            ComponentShape::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            ComponentShape::Other(n) => write!(f, "other({n})"),
        }
    }
}

/// Simple undirected graph with sorted adjacency lists and a bit matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<BitSet>,
    edges: usize,
}

impl Graph {
    /// Materializes the graph of a symmetric, irreflexive predicate.
    ///
    /// Only pairs `i < j` are queried; rows are built in parallel when the
    /// `parallel` feature is enabled.
    pub fn build(n: usize, adjacent: impl Fn(usize, usize) -> bool + Sync + Send) -> Graph {
        let upper: Vec<Vec<usize>> =
            crate::parallel::map_range(n, |i| (i + 1..n).filter(|&j| adjacent(i, j)).collect());
        let mut adj = vec![Vec::new(); n];
        for (i, row) in upper.iter().enumerate() {
            for &j in row {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
        Graph::from_adjacency(adj)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            assert!(a != b, "self-loop at {a}");
            if !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        Graph::from_adjacency(adj)
    }

    fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Graph {
        let n = adj.len();
        let mut rows = vec![BitSet::new(n); n];
        let mut degree_sum = 0;
        for (i, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            for &j in list.iter() {
                rows[i].insert(j);
            }
            degree_sum += list.len();
        }
        Graph {
            adj,
            rows,
            edges: degree_sum / 2,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_adjacency(vec![Vec::new(); n])
    }

    pub fn complete(n: usize) -> Graph {
        Graph::build(n, |_, _| true)
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Vertex-disjoint union, `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|row| row.iter().map(|&j| j + offset).collect()),
        );
        Graph::from_adjacency(adj)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    /// `N[v]` as a bitset.
    pub fn closed_neighborhood(&self, v: usize) -> BitSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// The common degree if every vertex has the same one.
    pub fn is_regular(&self) -> Option<usize> {
        let mut degrees = self.adj.iter().map(Vec::len);
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    /// Edges `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// Renders `graph G { … }` with one labeled node line per vertex and
    /// edges in `(i, j)`, `i < j` lexicographic order.
    pub fn to_dot(&self, labels: &[String]) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            let label = labels.get(v).cloned().unwrap_or_else(|| v.to_string());
            let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (i, j) in self.edges() {
            let _ = writeln!(out, "  {i} -- {j};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_parity_graph() {
        let g = Graph::build(4, |x, y| (x + y) % 2 == 1);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(
            classify_components(&g),
            vec![ComponentShape::CompleteBipartite(2, 2)]
        );
        let single = Graph::build(1, |_, _| true);
        assert_eq!((single.n(), single.edge_count()), (1, 0));
    }

    #[test]
    fn degrees() {
        let c4 = Graph::cycle(4);
        assert_eq!(c4.degree_sequence(), vec![2; 4]);
        assert_eq!(c4.is_regular(), Some(2));
        let p3 = Graph::path(3);
        assert_eq!(p3.degree_sequence(), vec![1, 2, 1]);
        assert_eq!(p3.is_regular(), None);
        assert_eq!(
            c4.degree_sequence().iter().sum::<usize>(),
            2 * c4.edge_count()
        );
    }

    #[test]
    fn dot_output() {
        let g = Graph::path(3);
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        assert_eq!(
            g.to_dot(&labels),
            "graph G {\n  0 [label=\"a\"];\n  1 [label=\"b\"];\n  2 [label=\"c\"];\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }

    #[test]
    fn canonical_shapes() {
        assert_eq!(
            ComponentShape::CompleteBipartite(1, 1).canonical(),
            ComponentShape::Complete(2)
        );
        assert_eq!(
            ComponentShape::CompleteBipartite(3, 3).canonical(),
            ComponentShape::CompleteBipartite(3, 3)
        );
    }
}
