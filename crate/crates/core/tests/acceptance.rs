//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{all_graphs, naive_diameter, naive_domination, naive_girth, random_graphs};
use ringgraph::graph::{
    are_isomorphic, classify_components, diameter, domination_number_exact, girth,
    has_clique_through_vertex, is_connected, is_dominating, is_eulerian, is_hamiltonian,
    verify_isomorphism, Distance, Graph, TriState, DEFAULT_DOMINATION_CAP, DEFAULT_HAMILTON_BUDGET,
    DEFAULT_ISO_BUDGET,
};
use ringgraph::parallel::map_ordered;
use ringgraph::ring::{Ring, RingElement};
use ringgraph::sweep::{enumerate_specs, SweepConfig};
use ringgraph::theorems::*;

struct Case {
    ring: Ring,
    tau: Graph,
    cayley: Graph,
}

impl Case {
    fn n(&self) -> usize {
        self.tau.n()
    }
    fn name(&self) -> String {
        self.ring.spec().to_string()
    }
}

fn sweep_cases(max_order: u64) -> Vec<Case> {
    let specs = enumerate_specs(&SweepConfig::new(max_order));
    map_ordered(&specs, |spec| {
        let ring = Ring::realize(spec).unwrap();
        let tau = build_total_graph(&ring).unwrap();
        let cayley = build_cayley_graph(&ring).unwrap();
        Case { ring, tau, cayley }
    })
}

fn ring(text: &str) -> Ring {
    Ring::parse(text).unwrap()
}

fn tau(text: &str) -> Graph {
    build_total_graph(&ring(text)).unwrap()
}

type Outcome = Result<String, String>;

fn failures(label: &str, bad: Vec<String>, total: usize) -> Outcome {
    if bad.is_empty() {
        Ok(format!("{total} {label}"))
    } else {
        Err(format!(
            "{} of {total} {label} fail: {}",
            bad.len(),
            bad.join("; ")
        ))
    }
}

fn criterion_1() -> Outcome {
    let g = tau("Z2 x Z2");
    let got = (
        g.n(),
        is_connected(&g),
        g.is_regular(),
        girth(&g),
        diameter(&g),
    );
    let want = (4, true, Some(2), Distance::Finite(4), Distance::Finite(2));
    if got == want {
        Ok("tau(Z2 x Z2): 4 vertices, connected, 2-regular, girth 4, diameter 2".into())
    } else {
        Err(format!("got {got:?}"))
    }
}

fn criterion_2() -> Outcome {
    for text in ["Z2 x Z2", "Z2 x Z2 x Z2"] {
        let r = ring(text);
        if !is_eulerian(&tau(text)) || !predict_eulerian(&r) {
            return Err(format!("{text} not Eulerian"));
        }
    }
    Ok("tau(Z2^2), tau(Z2^3) Eulerian and predicted".into())
}

fn criterion_3(cases: &[Case]) -> Outcome {
    let bad = cases
        .iter()
        .filter_map(|c| {
            let computed = is_eulerian(&c.tau);
            let predicted = predict_eulerian(&c.ring);
            let cond = check_eulerian_conditions(&c.ring);
            let all = [
                computed,
                predicted,
                cond.with_two(),
                cond.with_characteristic(),
            ];
            (!all.iter().all(|&b| b == computed)).then(|| format!("{} {all:?}", c.name()))
        })
        .collect();
    failures("rings agree four ways on Eulerian", bad, cases.len())
}

fn criterion_4(cases: &[Case]) -> Outcome {
    let mut bad = Vec::new();
    let r = ring("Z45");
    let g = build_total_graph(&r).unwrap();
    let ids: Vec<usize> = (0..3).map(|m| r.encode(&r.from_integer(m))).collect();
    let gamma = domination_number_exact(&g, DEFAULT_DOMINATION_CAP).map(|d| d.size);
    if gamma != Ok(3) || !is_dominating(&g, &ids) {
        bad.push(format!("Z45 gamma {gamma:?}"));
    }
    for text in [
        "Z2",
        "Z4",
        "Z4 x Z3",
        "Z2 x Z2",
        "Z2 x Z2 x Z2",
        "Z2 x Z2 x Z2 x Z2",
    ] {
        let r = ring(text);
        let g = build_total_graph(&r).unwrap();
        let ids = [r.encode(&r.from_integer(0)), r.encode(&r.from_integer(1))];
        let gamma = domination_number_exact(&g, DEFAULT_DOMINATION_CAP).map(|d| d.size);
        if gamma != Ok(2) || !is_dominating(&g, &ids) {
            bad.push(format!("{text} gamma {gamma:?}"));
        }
    }
    let small: Vec<&Case> = cases.iter().filter(|c| c.n() <= 48).collect();
    let exact = map_ordered(&small, |c| {
        domination_number_exact(&c.tau, DEFAULT_DOMINATION_CAP)
    });
    for (c, exact) in small.iter().zip(exact) {
        let predicted = predict_domination(&c.ring);
        match exact {
            Ok(d) if d.size == predicted => {}
            Ok(d) => bad.push(format!(
                "{} predicted {predicted} exact {}",
                c.name(),
                d.size
            )),
            Err(e) => bad.push(format!("{} {e}", c.name())),
        }
    }
    failures(
        "domination checks (worked examples and sweep |R| <= 48)",
        bad,
        small.len() + 7,
    )
}

fn criterion_5(cases: &[Case]) -> Outcome {
    let mut bad: Vec<String> = cases
        .iter()
        .filter_map(|c| {
            let w = construct_dominating_set(&c.ring);
            let ids = w.vertex_ids(&c.ring);
            let ok = is_dominating(&c.tau, &ids) && ids.len() == predict_domination(&c.ring);
            (!ok).then(|| c.name())
        })
        .collect();
    let f7 = ring("F7");
    let g = build_total_graph(&f7).unwrap();
    let w = construct_dominating_set(&f7);
    let exact = domination_number_exact(&g, DEFAULT_DOMINATION_CAP).map(|d| d.size);
    if w.elements.len() != 4 || exact != Ok(4) || !is_dominating(&g, &w.vertex_ids(&f7)) {
        bad.push(format!("F7 witness {} exact {exact:?}", w.elements.len()));
    }
    failures("constructed dominating sets verified", bad, cases.len() + 1)
}

fn criterion_6() -> Outcome {
    let r = ring("Z3 x GF(4)");
    let (t, c) = (
        build_total_graph(&r).unwrap(),
        build_cayley_graph(&r).unwrap(),
    );
    if let Some(v) =
        (0..c.n()).find(|&v| has_clique_through_vertex(&c, v, 4, 100_000) != TriState::Yes)
    {
        return Err(format!("Cayley vertex {v} in no 4-clique"));
    }
    let one_one = r.encode(&RingElement::new(vec![1, 1]));
    let clique = has_clique_through_vertex(&t, one_one, 4, 100_000);
    let iso = are_isomorphic(&t, &c, DEFAULT_ISO_BUDGET).verdict;
    if clique != TriState::No || iso != TriState::No {
        return Err(format!(
            "(1,1) in 4-clique: {clique:?}; isomorphic: {iso:?}"
        ));
    }
    Ok("C(Z3 x GF(4)) 4-cliques everywhere, (1,1) in none in tau, not isomorphic".into())
}

fn criterion_7(cases: &[Case]) -> Outcome {
    let small: Vec<&Case> = cases.iter().filter(|c| c.n() <= 24).collect();
    let verdicts = map_ordered(&small, |c| {
        are_isomorphic(&c.tau, &c.cayley, DEFAULT_ISO_BUDGET).verdict
    });
    let mut bad = Vec::new();
    for (c, verdict) in small.iter().zip(verdicts) {
        let predicted = predict_tau_iso_cayley(&c.ring).holds();
        match verdict.definite() {
            Some(iso) if iso == predicted => {}
            Some(iso) => bad.push(format!("{} predicted {predicted} oracle {iso}", c.name())),
            None => bad.push(format!("{} oracle unknown", c.name())),
        }
    }
    let mut witnesses = 0;
    for c in cases
        .iter()
        .filter(|c| predict_tau_iso_cayley(&c.ring).holds())
    {
        witnesses += 1;
        match construct_iso_witness(&c.ring) {
            Ok(w) if verify_isomorphism(&c.tau, &c.cayley, &w.map) => {}
            _ => bad.push(format!("{} witness fails", c.name())),
        }
    }
    failures(
        &format!(
            "iso checks ({} oracle at |R| <= 24, {witnesses} witnesses)",
            small.len()
        ),
        bad,
        small.len() + witnesses,
    )
}

fn criterion_8(cases: &[Case]) -> Outcome {
    let bad = cases
        .iter()
        .filter_map(|c| {
            let predicted: Vec<usize> = c
                .ring
                .elements()
                .map(|x| predict_degree(&c.ring, &x))
                .collect();
            let z = c.ring.zero_divisor_count() as usize;
            let ok = predicted == c.tau.degree_sequence() && c.cayley.is_regular() == Some(z - 1);
            (!ok).then(|| c.name())
        })
        .collect();
    failures("rings obey the degree law", bad, cases.len())
}

fn criterion_9(cases: &[Case]) -> Outcome {
    let local: Vec<&Case> = cases.iter().filter(|c| c.ring.is_local()).collect();
    let bad = local
        .iter()
        .filter_map(|c| {
            let mut predicted = predict_local_structure(&c.ring).ok()?.components()?;
            let mut computed = classify_components(&c.tau);
            for v in [&mut predicted, &mut computed] {
                v.iter_mut().for_each(|s| *s = s.canonical());
                v.sort();
            }
            (predicted != computed).then(|| format!("{} {predicted:?} vs {computed:?}", c.name()))
        })
        .collect();
    failures(
        "local rings match the component structure",
        bad,
        local.len(),
    )
}

fn criterion_10(cases: &[Case]) -> Outcome {
    let bad = cases
        .iter()
        .filter_map(|c| {
            let n = c.n();
            let complete = c.tau.edge_count() == n * (n - 1) / 2;
            let odd_cycle =
                n >= 3 && n % 2 == 1 && is_connected(&c.tau) && c.tau.is_regular() == Some(2);
            let order = c.ring.order();
            let two_zds_even = c.ring.zero_divisor_count() != 2 || order % 2 == 0;
            let odd_units_even = order % 2 == 0 || c.ring.unit_count() % 2 == 0;
            let ok = !complete && !odd_cycle && two_zds_even && odd_units_even;
            (!ok).then(|| c.name())
        })
        .collect();
    failures("rings: tau never complete or an odd cycle, |Z| = 2 only at even order, odd order has an even unit count", bad, cases.len())
}

fn criterion_11(cases: &[Case]) -> Outcome {
    let connected: Vec<&Case> = cases
        .iter()
        .filter(|c| c.n() <= 32 && is_connected(&c.tau))
        .collect();
    let verdicts = map_ordered(&connected, |c| {
        is_hamiltonian(&c.tau, DEFAULT_HAMILTON_BUDGET)
    });
    let bad = connected
        .iter()
        .zip(verdicts)
        .filter(|(_, v)| *v != TriState::Yes)
        .map(|(c, v)| format!("{} {v:?}", c.name()))
        .collect();
    failures("connected total graphs Hamiltonian", bad, connected.len())
}

fn criterion_12() -> Outcome {
    let mut corpus: Vec<Graph> = (1..=5).flat_map(all_graphs).collect();
    let exhaustive = corpus.len();
    corpus.extend(random_graphs(200, 10, 0xacce));
    let bad: Vec<String> = corpus
        .iter()
        .enumerate()
        .filter_map(|(i, g)| {
            let exact = domination_number_exact(g, DEFAULT_DOMINATION_CAP)
                .ok()?
                .size;
            let d = match diameter(g) {
                Distance::Finite(d) => Some(d),
                Distance::Infinite => None,
            };
            let gr = match girth(g) {
                Distance::Finite(d) => Some(d),
                Distance::Infinite => None,
            };
            let ok = exact == naive_domination(g) && d == naive_diameter(g) && gr == naive_girth(g);
            (!ok).then(|| format!("graph #{i}"))
        })
        .collect();
    failures(
        &format!("graphs ({exhaustive} exhaustive + 200 random) agree with naive oracles"),
        bad,
        corpus.len(),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cases = sweep_cases(64);
    println!(
        "sweep fixture: {} rings with |R| <= 64 built in {:.2?}",
        cases.len(),
        start.elapsed()
    );

    let criteria: Vec<(usize, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(criterion_2)),
        (3, Box::new(|| criterion_3(&cases))),
        (4, Box::new(|| criterion_4(&cases))),
        (5, Box::new(|| criterion_5(&cases))),
        (6, Box::new(criterion_6)),
        (7, Box::new(|| criterion_7(&cases))),
        (8, Box::new(|| criterion_8(&cases))),
        (9, Box::new(|| criterion_9(&cases))),
        (10, Box::new(|| criterion_10(&cases))),
        (11, Box::new(|| criterion_11(&cases))),
        (12, Box::new(criterion_12)),
    ];
    let mut failed = 0;
    for (id, run) in &criteria {
        let t = Instant::now();
        let outcome = run();
        let elapsed = t.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {id:>2}: PASS  {detail} ({elapsed:.2?})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2}: FAIL  {detail} ({elapsed:.2?})");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
