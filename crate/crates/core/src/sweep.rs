//! Exhaustive sweeps over products of small local rings.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::parallel::{map_ordered, map_sequential, with_jobs};
use crate::ring::poly::{smallest_irreducible, Poly};
use crate::ring::{is_prime, LocalRingSpec, Ring, RingSpec};
use crate::theorems::{analyze, AnalysisReport, Budgets, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub max_order: u64,
    /// Largest `p^n` for `Z_{p^n}` factors.
    pub max_prime_power: u64,
    /// Largest `q` for `GF(q)` factors with `q` not prime.
    pub max_field_order: u64,
    /// Largest order of a `Z_p[x]/(g^e)` factor.
    pub max_poly_order: u64,
    pub budgets: Budgets,
    /// Worker threads; 0 uses every core.
    pub jobs: usize,
}

impl SweepConfig {
    pub fn new(max_order: u64) -> Self {
        SweepConfig {
            max_order,
            max_prime_power: max_order,
            max_field_order: max_order,
            max_poly_order: max_order,
            budgets: Budgets::default(),
            jobs: 0,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.max_prime_power == 0 || self.max_field_order == 0 || self.max_poly_order == 0 {
            return Err("catalog bounds must be positive".into());
        }
        if self.max_order > self.budgets.graph_cap {
            return Err(format!(
                "max order {} exceeds the graph cap {}",
                self.max_order, self.budgets.graph_cap
            ));
        }
        Ok(())
    }
}

/// Local factors a sweep multiplies together, sorted canonically.
///
/// `Z_{p^n}`, `GF(p^n)` for `n ≥ 2`, and `Z_p[x]/(g^e)` with `g = x` or the
/// smallest monic irreducible of degree `d ≥ 2`, `d·e ≥ 2`.
pub fn local_catalog(config: &SweepConfig) -> Vec<LocalRingSpec> {
    let m = config.max_order;
    let mut catalog = Vec::new();
    for p in (2..=m).filter(|&p| is_prime(p)) {
        let mut q = p;
        let mut n = 1;
        while q <= m {
            if q <= config.max_prime_power {
                catalog.push(LocalRingSpec::ZPrimePower { p, n });
            }
            if n >= 2 && q <= config.max_field_order {
                catalog.push(LocalRingSpec::GaloisField { p, n });
            }
            q = match q.checked_mul(p) {
                Some(q) => q,
                None => break,
            };
            n += 1;
        }
        let poly_cap = m.min(config.max_poly_order);
        let mut d = 1usize;
        while p.checked_pow(d as u32).is_some_and(|q| q <= poly_cap) {
            let g = if d == 1 {
                Poly::monomial(1)
            } else {
                smallest_irreducible(d, p)
            };
            let mut modulus = g.clone();
            let mut e = 1usize;
            while p.checked_pow((d * e) as u32).is_some_and(|q| q <= poly_cap) {
                if d * e >= 2 {
                    catalog.push(LocalRingSpec::PolyQuotient {
                        p,
                        modulus: modulus.clone(),
                    });
                }
                modulus = modulus.mul(&g, p);
                e += 1;
            }
            d += 1;
        }
    }
    catalog.sort_by(|a, b| a.sort_key_cmp(b));
    catalog
}

/// Every product of catalog factors with order at most `max_order`, one spec
/// per sorted factor list, ordered by `(|R|, spec text)`.
pub fn enumerate_specs(config: &SweepConfig) -> Vec<RingSpec> {
    let catalog = local_catalog(config);
    let orders: Vec<u64> = catalog.iter().map(|f| f.order().unwrap()).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn walk(
        start: usize,
        order: u64,
        stack: &mut Vec<usize>,
        catalog: &[LocalRingSpec],
        orders: &[u64],
        max_order: u64,
        seen: &mut BTreeSet<String>,
        out: &mut Vec<RingSpec>,
    ) {
        for i in start..catalog.len() {
            let Some(next) = order.checked_mul(orders[i]).filter(|&o| o <= max_order) else {
                continue;
            };
            stack.push(i);
            let factors = stack.iter().map(|&j| catalog[j].clone()).collect();
            let spec = RingSpec::new(factors, "").expect("catalog factors are local");
            let text = spec.to_string();
            if seen.insert(text.clone()) {
                out.push(RingSpec::new(spec.factors().to_vec(), text).unwrap());
            }
            walk(i, next, stack, catalog, orders, max_order, seen, out);
            stack.pop();
        }
    }

    walk(
        0,
        1,
        &mut stack,
        &catalog,
        &orders,
        config.max_order,
        &mut seen,
        &mut out,
    );
    out.sort_by_key(|a| (a.order(), a.to_string()));
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub spec: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<AnalysisReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl SweepEntry {
    pub fn is_ok(&self) -> bool {
        self.error.is_none() && self.report.as_ref().is_some_and(|r| r.is_ok())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub rings: usize,
    pub matches: usize,
    pub skipped: usize,
    pub mismatches: usize,
    pub errors: usize,
    pub entries: Vec<SweepEntry>,
}

impl SweepSummary {
    fn from_entries(entries: Vec<SweepEntry>) -> Self {
        let mut s = SweepSummary {
            rings: entries.len(),
            ..Default::default()
        };
        for entry in &entries {
            match &entry.report {
                Some(report) => {
                    s.matches += report.count(Verdict::Match);
                    s.skipped += report.count(Verdict::Skipped);
                    s.mismatches += report.count(Verdict::Mismatch);
                }
                None => s.errors += 1,
            }
        }
        s.entries = entries;
        s
    }

    pub fn is_ok(&self) -> bool {
        self.mismatches == 0 && self.errors == 0
    }

    pub fn reports(&self) -> impl Iterator<Item = &AnalysisReport> {
        self.entries.iter().filter_map(|e| e.report.as_ref())
    }

    pub fn failing(&self) -> impl Iterator<Item = &SweepEntry> {
        self.entries.iter().filter(|e| !e.is_ok())
    }
}

fn analyze_spec(spec: &RingSpec, budgets: &Budgets) -> SweepEntry {
    let result = Ring::realize(spec)
        .map_err(|e| e.to_string())
        .and_then(|ring| analyze(&ring, budgets).map_err(|e| e.to_string()));
    match result {
        Ok(report) => SweepEntry {
            spec: spec.to_string(),
            report: Some(report),
            error: None,
        },
        Err(error) => SweepEntry {
            spec: spec.to_string(),
            report: None,
            error: Some(error),
        },
    }
}

/// Analyzes every enumerated ring on `config.jobs` workers; results keep
/// enumeration order.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepSummary, String> {
    config.validate()?;
    let specs = enumerate_specs(config);
    let entries = with_jobs(config.jobs, || {
        map_ordered(&specs, |spec| analyze_spec(spec, &config.budgets))
    });
    Ok(SweepSummary::from_entries(entries))
}

/// [`run_sweep`] on the calling thread only.
pub fn run_sweep_sequential(config: &SweepConfig) -> Result<SweepSummary, String> {
    config.validate()?;
    let specs = enumerate_specs(config);
    let entries = map_sequential(&specs, |spec| analyze_spec(spec, &config.budgets));
    Ok(SweepSummary::from_entries(entries))
}
