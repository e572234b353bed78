//! Side-by-side comparison of every prediction with its graph oracle.

use std::collections::BTreeMap;

use log::warn;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::graph::{
    are_isomorphic, classify_components, diameter, domination_number_exact, euler_circuit, girth,
    is_connected, is_dominating, is_eulerian, is_hamiltonian, verify_isomorphism, ComponentShape,
    Distance, Graph, TriState, DEFAULT_DOMINATION_CAP, DEFAULT_DOMINATION_VERTEX_LIMIT,
    DEFAULT_HAMILTON_BUDGET, DEFAULT_ISO_BUDGET,
};
use crate::ring::{Ring, SCAN_CAP};

use super::builders::{build_cayley_graph_with_cap, build_total_graph_with_cap, DEFAULT_GRAPH_CAP};
use super::predict::{
    check_eulerian_conditions, predict_connectivity, predict_degree, predict_domination,
    predict_eulerian, predict_regular, predict_structure, predict_tau_iso_cayley,
    zero_divisors_closed_under_addition,
};
use super::witness::{construct_dominating_set, construct_iso_witness};
use super::TheoremError;

/// Caps and search budgets for one analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    pub graph_cap: u64,
    pub domination_vertex_limit: usize,
    pub domination_cap: u64,
    /// Largest `|R|` for which the isomorphism search runs.
    pub iso_max_order: usize,
    pub iso_budget: u64,
    /// Largest `|R|` for which Hamiltonicity is searched.
    pub hamilton_max_order: usize,
    pub hamilton_budget: u64,
    pub skip_iso: bool,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            graph_cap: DEFAULT_GRAPH_CAP,
            domination_vertex_limit: DEFAULT_DOMINATION_VERTEX_LIMIT,
            domination_cap: DEFAULT_DOMINATION_CAP,
            iso_max_order: 24,
            iso_budget: DEFAULT_ISO_BUDGET,
            hamilton_max_order: 32,
            hamilton_budget: DEFAULT_HAMILTON_BUDGET,
            skip_iso: false,
        }
    }
}

impl Budgets {
    /// Defaults overridden by `RINGGRAPH_ISO_MAX_ORDER`, `RINGGRAPH_ISO_BUDGET`,
    /// `RINGGRAPH_DOMINATION_CAP`, `RINGGRAPH_HAMILTON_MAX_ORDER` and
    /// `RINGGRAPH_HAMILTON_BUDGET` when set.
    pub fn from_env() -> Self {
        fn var<T: std::str::FromStr>(name: &str, default: T) -> T {
            match std::env::var(name) {
                Ok(text) => text.trim().parse().unwrap_or_else(|_| {
                    warn!("ignoring unparseable {name}={text}");
                    default
                }),
                Err(_) => default,
            }
        }
        let d = Budgets::default();
        Budgets {
            iso_max_order: var("RINGGRAPH_ISO_MAX_ORDER", d.iso_max_order),
            iso_budget: var("RINGGRAPH_ISO_BUDGET", d.iso_budget),
            domination_cap: var("RINGGRAPH_DOMINATION_CAP", d.domination_cap),
            hamilton_max_order: var("RINGGRAPH_HAMILTON_MAX_ORDER", d.hamilton_max_order),
            hamilton_budget: var("RINGGRAPH_HAMILTON_BUDGET", d.hamilton_budget),
            ..d
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub property: String,
    pub predicted: Value,
    pub computed: Value,
    pub verdict: Verdict,
    pub theorem: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RingSummary {
    pub spec: String,
    pub order: u64,
    pub zero_divisors: u64,
    pub units: u64,
    pub characteristic: u64,
    pub residue_fields: Vec<u64>,
}

/// Ring spec and both graphs in DOT, attached whenever a row mismatches.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub spec: String,
    pub total_graph_dot: String,
    pub cayley_graph_dot: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub ring: RingSummary,
    pub rows: Vec<Row>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl AnalysisReport {
    pub fn row(&self, property: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.property == property)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| r.verdict == Verdict::Mismatch)
    }

    pub fn is_ok(&self) -> bool {
        self.mismatches().next().is_none()
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.rows.iter().filter(|r| r.verdict == verdict).count()
    }

    /// Pretty JSON with the struct's field order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Plain-text table, one row per property.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "ring {}  |R|={}  |Z(R)|={}  |R*|={}  char={}  f={:?}\n",
            self.ring.spec,
            self.ring.order,
            self.ring.zero_divisors,
            self.ring.units,
            self.ring.characteristic,
            self.ring.residue_fields
        );
        let width = self
            .rows
            .iter()
            .map(|r| r.property.len())
            .max()
            .unwrap_or(8);
        for row in &self.rows {
            out.push_str(&format!(
                "  {:<width$}  {:<8}  predicted {}  computed {}  [{}]\n",
                row.property,
                format!("{:?}", row.verdict).to_lowercase(),
                compact(&row.predicted),
                compact(&row.computed),
                row.theorem,
            ));
        }
        out
    }
}

fn compact(v: &Value) -> String {
    let s = v.to_string();
    if s.len() > 60 {
        format!("{}…", &s[..57])
    } else {
        s
    }
}

fn distance_json(d: Distance) -> Value {
    match d {
        Distance::Finite(d) => json!(d),
        Distance::Infinite => json!("inf"),
    }
}

fn shapes_json(shapes: &[ComponentShape]) -> Value {
    json!(shapes.iter().map(|s| s.to_string()).collect::<Vec<_>>())
}

fn histogram(values: impl Iterator<Item = usize>) -> Value {
    let mut h: BTreeMap<usize, usize> = BTreeMap::new();
    for v in values {
        *h.entry(v).or_default() += 1;
    }
    Value::Object(
        h.into_iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect(),
    )
}

struct RowBuilder {
    rows: Vec<Row>,
}

impl RowBuilder {
    fn compare(
        &mut self,
        property: &str,
        theorem: &str,
        predicted: Value,
        computed: Value,
        ok: bool,
    ) -> &mut Row {
        self.rows.push(Row {
            property: property.to_string(),
            predicted,
            computed,
            verdict: if ok {
                Verdict::Match
            } else {
                Verdict::Mismatch
            },
            theorem: theorem.to_string(),
            witness: None,
        });
        self.rows.last_mut().unwrap()
    }

    fn equal<T: Serialize + PartialEq>(
        &mut self,
        property: &str,
        theorem: &str,
        predicted: T,
        computed: T,
    ) -> &mut Row {
        let ok = predicted == computed;
        self.compare(property, theorem, json!(predicted), json!(computed), ok)
    }

    fn skip(&mut self, property: &str, theorem: &str, predicted: Value, reason: &str) {
        warn!("{property}: skipped ({reason})");
        self.rows.push(Row {
            property: property.to_string(),
            predicted,
            computed: json!({ "skipped": reason }),
            verdict: Verdict::Skipped,
            theorem: theorem.to_string(),
            witness: None,
        });
    }
}

/// Number of units by the definition (`x·y = 1` for some `y`) for small
/// rings, componentwise otherwise.
fn count_units(ring: &Ring) -> u64 {
    if ring.order() <= SCAN_CAP {
        let elements: Vec<_> = ring.elements().collect();
        let one = ring.one();
        elements
            .iter()
            .filter(|x| elements.iter().any(|y| ring.mul(x, y) == one))
            .count() as u64
    } else {
        ring.elements().filter(|x| ring.is_unit(x)).count() as u64
    }
}

/// Builds `τ(R)` and `C(R)` and checks every prediction against the graphs.
pub fn analyze(ring: &Ring, budgets: &Budgets) -> Result<AnalysisReport, TheoremError> {
    let tau = build_total_graph_with_cap(ring, budgets.graph_cap)?;
    let cayley = build_cayley_graph_with_cap(ring, budgets.graph_cap)?;
    let labels = ring.vertex_labels();
    let n = tau.n();
    let z = ring.zero_divisor_count() as usize;
    let mut b = RowBuilder { rows: Vec::new() };

    // ring facts
    let product: u64 = ring.factors().iter().map(|f| f.unit_count()).product();
    let units = count_units(ring);
    b.compare(
        "unit_count",
        "unit product formula",
        json!(product),
        json!(units),
        product == units && units + ring.zero_divisor_count() == ring.order(),
    );
    let regularity = predict_regular(ring);
    b.equal(
        "two_is_zero_divisor",
        "2 in Z(R) iff |R| even",
        regularity.even_order,
        regularity.two_is_zero_divisor,
    );
    if ring.order() % 2 == 1 {
        b.equal(
            "odd_order_units_even",
            "odd order forces an even unit count",
            true,
            units.is_multiple_of(2),
        );
    }
    if z == 2 {
        b.equal(
            "two_zero_divisors_even_order",
            "|Z(R)| = 2 forces even order",
            true,
            ring.order().is_multiple_of(2),
        );
    }

    // degrees
    let predicted_degrees: Vec<usize> = ring.elements().map(|x| predict_degree(ring, &x)).collect();
    let degrees = tau.degree_sequence();
    b.compare(
        "tau_degrees",
        "degree law",
        histogram(predicted_degrees.iter().copied()),
        histogram(degrees.iter().copied()),
        predicted_degrees == degrees,
    );
    b.equal(
        "tau_regular",
        "regularity criterion",
        regularity.regular().then_some(z - 1),
        tau.is_regular(),
    );
    b.equal(
        "cayley_regular",
        "Cayley graph regularity",
        Some(z - 1),
        cayley.is_regular(),
    );

    // connectivity, diameter, girth
    let conn = predict_connectivity(ring);
    let connected = is_connected(&tau);
    b.equal(
        "tau_connected",
        "connected iff non-local",
        conn.connected,
        connected,
    );
    b.equal(
        "zero_divisors_not_ideal",
        "connected iff Z(R) is not an ideal",
        connected,
        !zero_divisors_closed_under_addition(ring),
    );
    b.compare(
        "tau_diameter",
        "diameter of the total graph",
        distance_json(conn.diameter),
        distance_json(diameter(&tau)),
        conn.diameter == diameter(&tau),
    );
    let g = girth(&tau);
    b.compare(
        "tau_girth",
        "girth of the total graph",
        distance_json(conn.girth),
        distance_json(g),
        conn.girth == g,
    );

    // local component structure
    if let Some(mut predicted) = predict_structure(ring).components() {
        let mut computed = classify_components(&tau);
        for shapes in [&mut predicted, &mut computed] {
            for s in shapes.iter_mut() {
                *s = s.canonical();
            }
            shapes.sort();
        }
        let ok = predicted == computed;
        b.compare(
            "tau_components",
            "local component structure",
            shapes_json(&predicted),
            shapes_json(&computed),
            ok,
        );
    }

    // Eulerian
    let predicted_euler = predict_eulerian(ring);
    let euler = is_eulerian(&tau);
    let circuit_ok = !euler || euler_circuit(&tau).is_some_and(|w| w.len() == tau.edge_count() + 1);
    b.compare(
        "tau_eulerian",
        "Eulerian iff a product of >= 2 even-order fields",
        json!(predicted_euler),
        json!(euler),
        predicted_euler == euler && circuit_ok,
    );
    let cond = check_eulerian_conditions(ring);
    b.compare(
        "eulerian_conditions",
        "Eulerian necessary conditions",
        json!(predicted_euler),
        json!(cond),
        cond.with_two() == predicted_euler && cond.with_characteristic() == predicted_euler,
    );

    // never complete, never an odd cycle
    b.equal(
        "tau_complete",
        "never complete",
        false,
        tau.edge_count() == n * (n - 1) / 2,
    );
    let odd_cycle = n >= 3 && n % 2 == 1 && connected && tau.is_regular() == Some(2);
    b.equal("tau_odd_cycle", "never an odd cycle", false, odd_cycle);

    // domination
    let predicted_gamma = predict_domination(ring);
    if n <= budgets.domination_vertex_limit {
        match domination_number_exact(&tau, budgets.domination_cap) {
            Ok(dom) => {
                let row = b.equal(
                    "tau_domination",
                    "domination formula",
                    predicted_gamma,
                    dom.size,
                );
                row.witness = Some(json!(dom
                    .witness
                    .iter()
                    .map(|&v| &labels[v])
                    .collect::<Vec<_>>()));
            }
            Err(err) => b.skip(
                "tau_domination",
                "domination formula",
                json!(predicted_gamma),
                &err.to_string(),
            ),
        }
    } else {
        b.skip(
            "tau_domination",
            "domination formula",
            json!(predicted_gamma),
            &format!(
                "|R| = {n} exceeds the domination limit {}",
                budgets.domination_vertex_limit
            ),
        );
    }
    let dom_witness = construct_dominating_set(ring);
    let ids = dom_witness.vertex_ids(ring);
    let verified = is_dominating(&tau, &ids);
    let row = b.compare(
        "dominating_witness",
        "dominating set construction",
        json!(predicted_gamma),
        json!({ "size": ids.len(), "dominating": verified }),
        verified && ids.len() == predicted_gamma,
    );
    row.witness = Some(json!(ids.iter().map(|&v| &labels[v]).collect::<Vec<_>>()));

    // τ(R) ≅ C(R)
    let iso_pred = predict_tau_iso_cayley(ring);
    let iso_pred_json = json!({ "isomorphic": iso_pred.holds(), "a": iso_pred.condition_a, "b": iso_pred.condition_b });
    if budgets.skip_iso {
        b.skip(
            "tau_iso_cayley",
            "isomorphism criterion",
            iso_pred_json,
            "isomorphism check disabled",
        );
    } else if n > budgets.iso_max_order {
        b.skip(
            "tau_iso_cayley",
            "isomorphism criterion",
            iso_pred_json,
            &format!(
                "|R| = {n} exceeds the isomorphism limit {}",
                budgets.iso_max_order
            ),
        );
    } else {
        let outcome = are_isomorphic(&tau, &cayley, budgets.iso_budget);
        match outcome.verdict.definite() {
            Some(iso) => {
                b.compare(
                    "tau_iso_cayley",
                    "isomorphism criterion",
                    iso_pred_json,
                    json!(iso),
                    iso == iso_pred.holds(),
                );
            }
            None => b.skip(
                "tau_iso_cayley",
                "isomorphism criterion",
                iso_pred_json,
                "search budget exhausted",
            ),
        }
    }
    if iso_pred.holds() {
        let witness = construct_iso_witness(ring)?;
        let ok = verify_isomorphism(&tau, &cayley, &witness.map);
        let row = b.compare(
            "iso_witness",
            "isomorphism construction",
            json!(format!("{:?}", witness.condition)),
            json!({ "verified": ok }),
            ok,
        );
        if let Some(set_a) = &witness.set_a {
            row.witness =
                Some(json!({ "A": set_a.iter().map(|&v| &labels[v]).collect::<Vec<_>>() }));
        }
    }

    // Hamiltonicity of connected total graphs
    if connected && n > 1 {
        if n <= budgets.hamilton_max_order {
            match is_hamiltonian(&tau, budgets.hamilton_budget) {
                TriState::Unknown => b.skip(
                    "tau_hamiltonian",
                    "connected total graphs are Hamiltonian",
                    json!(true),
                    "search budget exhausted",
                ),
                t => {
                    b.equal(
                        "tau_hamiltonian",
                        "connected total graphs are Hamiltonian",
                        true,
                        t == TriState::Yes,
                    );
                }
            }
        } else {
            b.skip(
                "tau_hamiltonian",
                "connected total graphs are Hamiltonian",
                json!(true),
                &format!(
                    "|R| = {n} exceeds the Hamiltonicity limit {}",
                    budgets.hamilton_max_order
                ),
            );
        }
    }

    let rows = b.rows;
    let counterexample = rows
        .iter()
        .any(|r| r.verdict == Verdict::Mismatch)
        .then(|| Counterexample {
            spec: ring.spec().to_string(),
            total_graph_dot: tau.to_dot(&labels),
            cayley_graph_dot: cayley.to_dot(&labels),
        });
    Ok(AnalysisReport {
        ring: summary(ring),
        rows,
        counterexample,
    })
}

pub fn summary(ring: &Ring) -> RingSummary {
    RingSummary {
        spec: ring.spec().to_string(),
        order: ring.order(),
        zero_divisors: ring.zero_divisor_count(),
        units: ring.unit_count(),
        characteristic: ring.characteristic(),
        residue_fields: ring.residue_field_sizes(),
    }
}

/// The graph pair analyzed for `ring`, for callers that need both.
pub fn graph_pair(ring: &Ring, budgets: &Budgets) -> Result<(Graph, Graph), TheoremError> {
    Ok((
        build_total_graph_with_cap(ring, budgets.graph_cap)?,
        build_cayley_graph_with_cap(ring, budgets.graph_cap)?,
    ))
}
