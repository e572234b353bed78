use super::{BitSet, Graph, GraphError, TriState};

struct CliqueSearch<'g> {
    g: &'g Graph,
    best: usize,
    target: usize,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, size: usize, mut candidates: BitSet) -> Result<(), GraphError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(GraphError::LimitExceeded(format!(
                "clique search examined more than {} nodes",
                self.budget
            )));
        }
        self.best = self.best.max(size);
        while let Some(u) = candidates.first() {
            if self.best >= self.target || size + candidates.len() <= self.best {
                return Ok(());
            }
            candidates.remove(u);
            let mut next = candidates.clone();
            next.intersect_with(self.g.neighbor_set(u));
            self.expand(size + 1, next)?;
        }
        Ok(())
    }
}

fn search(g: &Graph, v: usize, target: usize, budget: u64) -> Result<usize, GraphError> {
    let mut s = CliqueSearch {
        g,
        best: 0,
        target,
        nodes: 0,
        budget,
    };
    s.expand(1, g.neighbor_set(v).clone())?;
    Ok(s.best)
}

/// Size of a largest clique containing `v`, searched inside `N[v]`.
pub fn max_clique_through_vertex(g: &Graph, v: usize, budget: u64) -> Result<usize, GraphError> {
    search(g, v, usize::MAX, budget)
}

/// Whether `v` lies in a clique of `size` vertices.
pub fn has_clique_through_vertex(g: &Graph, v: usize, size: usize, budget: u64) -> TriState {
    match search(g, v, size, budget) {
        Ok(best) => TriState::from_bool(best >= size),
        Err(_) => TriState::Unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        let k4 = Graph::complete(4);
        for v in 0..4 {
            assert_eq!(max_clique_through_vertex(&k4, v, 1000).unwrap(), 4);
        }
        assert_eq!(has_clique_through_vertex(&k4, 0, 4, 1000), TriState::Yes);
        assert_eq!(has_clique_through_vertex(&k4, 0, 5, 1000), TriState::No);
    }

    #[test]
    fn cycle_and_isolated() {
        assert_eq!(
            max_clique_through_vertex(&Graph::cycle(5), 2, 1000).unwrap(),
            2
        );
        assert_eq!(
            max_clique_through_vertex(&Graph::empty(3), 1, 1000).unwrap(),
            1
        );
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let g = Graph::complete(30);
        assert_eq!(has_clique_through_vertex(&g, 0, 31, 2), TriState::Unknown);
    }
}
