use crate::graph::Graph;
use crate::ring::{Ring, RingElement};

use super::TheoremError;

/// Largest ring whose graphs are materialized by default.
pub const DEFAULT_GRAPH_CAP: u64 = 4096;

fn check_cap(ring: &Ring, cap: u64) -> Result<Vec<RingElement>, TheoremError> {
    if ring.order() > cap {
        return Err(TheoremError::GraphCapExceeded {
            order: ring.order(),
            cap,
        });
    }
    Ok(ring.elements().collect())
}

/// `τ(R)`: `x ~ y` iff `x ≠ y` and `x + y ∈ Z(R)`.
pub fn build_total_graph(ring: &Ring) -> Result<Graph, TheoremError> {
    build_total_graph_with_cap(ring, DEFAULT_GRAPH_CAP)
}

pub fn build_total_graph_with_cap(ring: &Ring, cap: u64) -> Result<Graph, TheoremError> {
    let elements = check_cap(ring, cap)?;
    Ok(Graph::build(elements.len(), |a, b| {
        ring.is_zero_divisor(&ring.add(&elements[a], &elements[b]))
    }))
}

/// `C(R) = Cay(R, Z(R)∖{0})`: `x ~ y` iff `x ≠ y` and `x − y ∈ Z(R)`.
pub fn build_cayley_graph(ring: &Ring) -> Result<Graph, TheoremError> {
    build_cayley_graph_with_cap(ring, DEFAULT_GRAPH_CAP)
}

pub fn build_cayley_graph_with_cap(ring: &Ring, cap: u64) -> Result<Graph, TheoremError> {
    let elements = check_cap(ring, cap)?;
    Ok(Graph::build(elements.len(), |a, b| {
        ring.is_zero_divisor(&ring.sub(&elements[a], &elements[b]))
    }))
}
