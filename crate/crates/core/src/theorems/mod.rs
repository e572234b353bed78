//! Total and Cayley graphs of a ring, closed-form predictions about them,
//! explicit witnesses, and prediction-vs-oracle reports.

mod builders;
mod predict;
mod report;
mod witness;

use thiserror::Error;

pub use builders::{
    build_cayley_graph, build_cayley_graph_with_cap, build_total_graph, build_total_graph_with_cap,
    DEFAULT_GRAPH_CAP,
};
pub use predict::{
    check_eulerian_conditions, predict_connectivity, predict_degree, predict_domination,
    predict_eulerian, predict_local_structure, predict_regular, predict_structure,
    predict_tau_iso_cayley, zero_divisors_closed_under_addition, ConnectivityPrediction,
    EulerianConditions, IsoPrediction, RegularityPrediction, StructurePrediction,
};
pub use report::{
    analyze, graph_pair, summary, AnalysisReport, Budgets, Counterexample, RingSummary, Row,
    Verdict,
};
pub use witness::{
    construct_dominating_set, construct_iso_witness, DominatingConstruction, DominatingWitness,
    IsoCondition, IsoWitness,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    #[error("ring of order {order} exceeds the graph cap of {cap}")]
    GraphCapExceeded { order: u64, cap: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}
