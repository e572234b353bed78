//! Finite commutative rings realized as products of local rings.

mod dsl;
mod local;
pub mod poly;
mod spec;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dsl::{factorize, is_prime, parse_ring_spec, parse_ring_spec_with_cap};
pub use local::{LocalRing, SCAN_CAP};
pub use spec::{LocalRingSpec, RingSpec, DEFAULT_ORDER_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("syntax error at position {position}: expected {expected}, found {found}")]
    Syntax {
        position: usize,
        expected: String,
        found: String,
    },
    #[error("not a local ring: {0}")]
    NotLocal(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// An element of `R_1 × ⋯ × R_k` as per-factor local indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RingElement {
    pub components: Vec<u64>,
}

impl RingElement {
    pub fn new(components: Vec<u64>) -> Self {
        RingElement { components }
    }
}

/// A realized ring. Immutable once built, so it can be shared across
/// worker threads.
#[derive(Clone, Debug)]
pub struct Ring {
    spec: RingSpec,
    factors: Vec<LocalRing>,
    order: u64,
    characteristic: u64,
    zero_divisor_count: u64,
}

impl Ring {
    pub fn realize(spec: &RingSpec) -> Result<Ring, RingError> {
        let factors = spec
            .factors()
            .iter()
            .map(LocalRing::realize)
            .collect::<Result<Vec<_>, _>>()?;
        let order = factors.iter().map(LocalRing::order).product::<u64>();
        let characteristic = factors.iter().map(LocalRing::characteristic).fold(1, lcm);
        let units: u64 = factors.iter().map(LocalRing::unit_count).product();
        Ok(Ring {
            spec: spec.clone(),
            factors,
            order,
            characteristic,
            zero_divisor_count: order - units,
        })
    }

    /// Parses and realizes in one step.
    pub fn parse(text: &str) -> Result<Ring, RingError> {
        Ring::realize(&parse_ring_spec(text)?)
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn factors(&self) -> &[LocalRing] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &LocalRing {
        &self.factors[i]
    }

    /// Number of local factors `k`.
    pub fn k(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    /// `|Z(R)| = |R| − Π(|R_i| − |Z(R_i)|)`, counting 0.
    pub fn zero_divisor_count(&self) -> u64 {
        self.zero_divisor_count
    }

    pub fn unit_count(&self) -> u64 {
        self.order - self.zero_divisor_count
    }

    /// `[f_1, …, f_k]`, ascending.
    pub fn residue_field_sizes(&self) -> Vec<u64> {
        self.factors
            .iter()
            .map(LocalRing::residue_field_size)
            .collect()
    }

    pub fn is_local(&self) -> bool {
        self.k() == 1
    }

    /// A finite integral domain is a field.
    pub fn is_field(&self) -> bool {
        self.is_local() && self.factors[0].is_field()
    }

    /// Mixed-radix vertex id, first factor most significant.
    pub fn encode(&self, x: &RingElement) -> usize {
        debug_assert_eq!(x.components.len(), self.k());
        self.factors
            .iter()
            .zip(&x.components)
            .fold(0u64, |acc, (f, &c)| acc * f.order() + c) as usize
    }

    pub fn decode(&self, mut id: usize) -> RingElement {
        let mut components = vec![0; self.k()];
        for (slot, f) in components.iter_mut().zip(&self.factors).rev() {
            *slot = id as u64 % f.order();
            id /= f.order() as usize;
        }
        RingElement { components }
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.order as usize).map(|id| self.decode(id))
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        x.components.len() == self.k()
            && x.components
                .iter()
                .zip(&self.factors)
                .all(|(&c, f)| c < f.order())
    }

    fn zip_with(
        &self,
        a: &RingElement,
        b: &RingElement,
        op: impl Fn(&LocalRing, u64, u64) -> u64,
    ) -> RingElement {
        RingElement {
            components: self
                .factors
                .iter()
                .zip(a.components.iter().zip(&b.components))
                .map(|(f, (&x, &y))| op(f, x, y))
                .collect(),
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.zip_with(a, b, LocalRing::add)
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.zip_with(a, b, LocalRing::sub)
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.zip_with(a, b, LocalRing::mul)
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        RingElement {
            components: self
                .factors
                .iter()
                .zip(&a.components)
                .map(|(f, &x)| f.neg(x))
                .collect(),
        }
    }

    pub fn zero(&self) -> RingElement {
        RingElement::new(vec![0; self.k()])
    }

    pub fn one(&self) -> RingElement {
        RingElement::new(self.factors.iter().map(LocalRing::one).collect())
    }

    /// `m · 1_R`, the image of an integer under the canonical map.
    pub fn from_integer(&self, m: u64) -> RingElement {
        RingElement::new(self.factors.iter().map(|f| f.from_integer(m)).collect())
    }

    /// `x ∈ Z(R)` iff some component is a zero-divisor of its factor.
    pub fn is_zero_divisor(&self, x: &RingElement) -> bool {
        self.factors
            .iter()
            .zip(&x.components)
            .any(|(f, &c)| f.is_zero_divisor(c))
    }

    pub fn is_unit(&self, x: &RingElement) -> bool {
        !self.is_zero_divisor(x)
    }

    /// `Z(R)` including 0, in vertex-id order.
    pub fn zero_divisor_set(&self) -> Vec<RingElement> {
        self.elements()
            .filter(|x| self.is_zero_divisor(x))
            .collect()
    }

    /// Index of `π_i(x_i)` in the residue field `F_i`.
    pub fn residue_class(&self, i: usize, x: &RingElement) -> u32 {
        self.factors[i].residue_class(x.components[i])
    }

    pub fn residue_neg(&self, i: usize, class: u32) -> u32 {
        self.factors[i].residue_neg(class)
    }

    /// Renders `(1,x+1)` style tuples; single-factor rings drop the parens.
    pub fn format_element(&self, x: &RingElement) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .zip(&x.components)
            .map(|(f, &c)| f.format_element(c))
            .collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            format!("({})", parts.join(","))
        }
    }

    pub fn vertex_labels(&self) -> Vec<String> {
        self.elements().map(|x| self.format_element(&x)).collect()
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec.fmt(f)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
