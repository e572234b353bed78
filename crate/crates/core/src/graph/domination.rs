use super::{connected_components, BitSet, Graph, GraphError};

/// Vertex-count limit the analysis applies before calling the exact search.
pub const DEFAULT_DOMINATION_VERTEX_LIMIT: usize = 64;
/// Search-node cap for [`domination_number_exact`].
pub const DEFAULT_DOMINATION_CAP: u64 = 20_000_000;

/// Exact domination number with one minimum dominating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domination {
    pub size: usize,
    pub witness: Vec<usize>,
    /// Search nodes examined.
    pub nodes: u64,
}

/// Every vertex outside `set` has a neighbor inside it.
pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    let mut covered = BitSet::new(g.n());
    for &v in set {
        covered.union_with(&g.closed_neighborhood(v));
    }
    covered.len() == g.n()
}

/// Repeatedly takes the vertex covering the most undominated vertices.
pub fn greedy_dominating_set(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut covered = BitSet::new(n);
    let mut chosen = Vec::new();
    while covered.len() < n {
        let best = (0..n)
            .max_by_key(|&v| {
                (
                    g.closed_neighborhood(v).count_difference(&covered),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        covered.union_with(&g.closed_neighborhood(best));
        chosen.push(best);
    }
    chosen.sort_unstable();
    chosen
}

/// Minimum dominating set by branch and bound, solved per connected
/// component.
///
/// Isolated vertices are forced. Within a component the search branches on
/// the dominators of the undominated vertex with the fewest options, tries
/// high-coverage vertices first, starts from the greedy bound, and prunes with
/// `chosen + ⌈undominated / (Δ + 1)⌉` and a sorted-coverage bound. Fails with `LimitExceeded` once more
/// than `cap` search nodes have been examined.
pub fn domination_number_exact(g: &Graph, cap: u64) -> Result<Domination, GraphError> {
    let mut witness = Vec::new();
    let mut nodes = 0u64;
    for comp in connected_components(g) {
        if comp.len() == 1 {
            witness.push(comp[0]);
            continue;
        }
        let mut search = ComponentSearch::new(g, &comp, cap, nodes);
        let best = search.solve()?;
        nodes = search.nodes;
        witness.extend(best);
    }
    witness.sort_unstable();
    Ok(Domination {
        size: witness.len(),
        witness,
        nodes,
    })
}

struct ComponentSearch<'g> {
    g: &'g Graph,
    members: BitSet,
    closed: Vec<BitSet>,
    max_cover: usize,
    best: Vec<usize>,
    nodes: u64,
    cap: u64,
}

impl<'g> ComponentSearch<'g> {
    fn new(g: &'g Graph, comp: &[usize], cap: u64, nodes: u64) -> Self {
        let mut members = BitSet::new(g.n());
        for &v in comp {
            members.insert(v);
        }
        let closed: Vec<BitSet> = (0..g.n()).map(|v| g.closed_neighborhood(v)).collect();
        let max_cover = comp.iter().map(|&v| g.degree(v) + 1).max().unwrap_or(1);
        ComponentSearch {
            g,
            members,
            closed,
            max_cover,
            best: Vec::new(),
            nodes,
            cap,
        }
    }

    fn solve(&mut self) -> Result<Vec<usize>, GraphError> {
        self.best = self.greedy();
        let mut chosen = Vec::new();
        let dominated = BitSet::new(self.g.n());
        let mut excluded = BitSet::new(self.g.n());
        self.branch(&mut chosen, &dominated, &mut excluded)?;
        Ok(self.best.clone())
    }

    fn greedy(&self) -> Vec<usize> {
        let mut covered = BitSet::new(self.g.n());
        let mut chosen = Vec::new();
        while self.members.count_difference(&covered) > 0 {
            let best = self
                .members
                .iter()
                .max_by_key(|&v| {
                    (
                        self.closed[v].count_difference(&covered),
                        std::cmp::Reverse(v),
                    )
                })
                .unwrap();
            covered.union_with(&self.closed[best]);
            chosen.push(best);
        }
        chosen
    }

    /// Fewest further vertices whose combined fresh coverage could reach
    /// `undominated`.
    fn coverage_bound(&self, dominated: &BitSet, excluded: &BitSet, undominated: usize) -> usize {
        let mut gains: Vec<usize> = self
            .members
            .iter()
            .filter(|&v| !excluded.contains(v))
            .map(|v| self.closed[v].count_difference(dominated))
            .filter(|&c| c > 0)
            .collect();
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        for (k, c) in gains.into_iter().enumerate() {
            total += c;
            if total >= undominated {
                return k + 1;
            }
        }
        usize::MAX / 2
    }

    /// Depth-first search over choices for one undominated vertex at a time.
    /// A vertex tried and abandoned at a node is excluded from that node's
    /// later siblings, so each set is reached in one order only.
    fn branch(
        &mut self,
        chosen: &mut Vec<usize>,
        dominated: &BitSet,
        excluded: &mut BitSet,
    ) -> Result<(), GraphError> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(GraphError::LimitExceeded(format!(
                "domination search examined more than {} nodes",
                self.cap
            )));
        }
        let undominated = self.members.count_difference(dominated);
        if undominated == 0 {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return Ok(());
        }
        if chosen.len() + undominated.div_ceil(self.max_cover) >= self.best.len() {
            return Ok(());
        }
        if chosen.len() + self.coverage_bound(dominated, excluded, undominated) >= self.best.len() {
            return Ok(());
        }
        // undominated vertex with the fewest remaining dominators
        let mut target = None;
        let mut fewest = usize::MAX;
        for v in self.members.iter().filter(|&v| !dominated.contains(v)) {
            let options = self.closed[v].count_difference(excluded);
            if options == 0 {
                return Ok(());
            }
            if options < fewest {
                fewest = options;
                target = Some(v);
            }
        }
        let target = target.unwrap();
        let mut options: Vec<(usize, usize)> = self.closed[target]
            .iter()
            .filter(|&v| !excluded.contains(v))
            .map(|v| (self.closed[v].count_difference(dominated), v))
            .collect();
        options.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut tried = Vec::with_capacity(options.len());
        for (_, v) in options {
            let mut next = dominated.clone();
            next.union_with(&self.closed[v]);
            chosen.push(v);
            let result = self.branch(chosen, &next, excluded);
            chosen.pop();
            excluded.insert(v);
            tried.push(v);
            if result.is_err() {
                for &t in &tried {
                    excluded.remove(t);
                }
                return result;
            }
        }
        for v in tried {
            excluded.remove(v);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let c4 = domination_number_exact(&Graph::cycle(4), DEFAULT_DOMINATION_CAP).unwrap();
        assert_eq!(c4.size, 2);
        assert!(is_dominating(&Graph::cycle(4), &c4.witness));
        assert_eq!(
            domination_number_exact(&Graph::empty(5), DEFAULT_DOMINATION_CAP)
                .unwrap()
                .size,
            5
        );
        assert_eq!(
            domination_number_exact(&Graph::complete(6), DEFAULT_DOMINATION_CAP)
                .unwrap()
                .size,
            1
        );
        assert_eq!(
            domination_number_exact(&Graph::path(7), DEFAULT_DOMINATION_CAP)
                .unwrap()
                .size,
            3
        );
    }

    #[test]
    fn is_dominating_examples() {
        let c4 = Graph::cycle(4);
        assert!(is_dominating(&c4, &[0, 1, 2, 3]));
        assert!(!is_dominating(&c4, &[0]));
        assert!(is_dominating(&c4, &greedy_dominating_set(&c4)));
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::cycle(30);
        assert!(matches!(
            domination_number_exact(&g, 0),
            Err(GraphError::LimitExceeded(_))
        ));
    }
}
