//! Closed-form predictions for `τ(R)` and `C(R)`, computed from ring data
//! alone (no graph is built here).

use serde::{Deserialize, Serialize};

use crate::graph::{ComponentShape, Distance};
use crate::ring::{Ring, RingElement};

use super::TheoremError;

/// `deg_τ(x) = |Z(R)| − [2x ∈ Z(R)]`.
pub fn predict_degree(ring: &Ring, x: &RingElement) -> usize {
    let z = ring.zero_divisor_count() as usize;
    if ring.is_zero_divisor(&ring.add(x, x)) {
        z - 1
    } else {
        z
    }
}

/// Both formulations of the regularity criterion, which must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityPrediction {
    pub two_is_zero_divisor: bool,
    pub even_order: bool,
}

impl RegularityPrediction {
    pub fn regular(&self) -> bool {
        self.two_is_zero_divisor
    }

    pub fn consistent(&self) -> bool {
        self.two_is_zero_divisor == self.even_order
    }
}

/// `τ(R)` is `(|Z(R)| − 1)`-regular iff `2 ∈ Z(R)` iff `|R|` is even.
pub fn predict_regular(ring: &Ring) -> RegularityPrediction {
    RegularityPrediction {
        two_is_zero_divisor: ring.is_zero_divisor(&ring.from_integer(2)),
        even_order: ring.order().is_multiple_of(2),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityPrediction {
    pub connected: bool,
    pub diameter: Distance,
    pub girth: Distance,
}

/// Connected iff non-local. Non-local rings have diameter 2 and girth 3,
/// except `Z_2 × Z_2` with girth 4. Local rings have girth 3 when
/// `|Z(R)| ≥ 3` and no cycles otherwise.
pub fn predict_connectivity(ring: &Ring) -> ConnectivityPrediction {
    if ring.is_local() {
        let girth = if ring.zero_divisor_count() >= 3 {
            Distance::Finite(3)
        } else {
            Distance::Infinite
        };
        ConnectivityPrediction {
            connected: false,
            diameter: Distance::Infinite,
            girth,
        }
    } else {
        let klein = ring.k() == 2 && ring.factors().iter().all(|f| f.order() == 2);
        ConnectivityPrediction {
            connected: true,
            diameter: Distance::Finite(2),
            girth: Distance::Finite(if klein { 4 } else { 3 }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructurePrediction {
    NonLocal {
        diameter: usize,
        girth: usize,
    },
    /// `2 ∈ Z(R)`: `β` disjoint copies of `K_{|Z(R)|}`.
    LocalEvenChar {
        beta: u64,
        zero_divisors: u64,
    },
    /// `2 ∉ Z(R)`: one `K_{|Z(R)|}` and `(β − 1)/2` copies of
    /// `K_{|Z(R)|,|Z(R)|}`.
    LocalOddOrder {
        beta: u64,
        zero_divisors: u64,
    },
}

impl StructurePrediction {
    /// The predicted component multiset, sorted, for local rings.
    pub fn components(&self) -> Option<Vec<ComponentShape>> {
        let mut shapes = match *self {
            StructurePrediction::NonLocal { .. } => return None,
            StructurePrediction::LocalEvenChar {
                beta,
                zero_divisors,
            } => {
                vec![ComponentShape::Complete(zero_divisors as usize); beta as usize]
            }
            StructurePrediction::LocalOddOrder {
                beta,
                zero_divisors,
            } => {
                let z = zero_divisors as usize;
                let mut v = vec![ComponentShape::Complete(z)];
                v.extend(std::iter::repeat_n(
                    ComponentShape::CompleteBipartite(z, z),
                    (beta as usize - 1) / 2,
                ));
                v
            }
        };
        shapes.sort();
        Some(shapes)
    }
}

pub fn predict_structure(ring: &Ring) -> StructurePrediction {
    if !ring.is_local() {
        let c = predict_connectivity(ring);
        let finite = |d: Distance| match d {
            Distance::Finite(d) => d,
            Distance::Infinite => unreachable!("non-local rings are connected"),
        };
        return StructurePrediction::NonLocal {
            diameter: finite(c.diameter),
            girth: finite(c.girth),
        };
    }
    let zero_divisors = ring.zero_divisor_count();
    let beta = ring.order() / zero_divisors;
    if predict_regular(ring).two_is_zero_divisor {
        StructurePrediction::LocalEvenChar {
            beta,
            zero_divisors,
        }
    } else {
        StructurePrediction::LocalOddOrder {
            beta,
            zero_divisors,
        }
    }
}

/// Component structure of `τ(R)` for a local ring.
pub fn predict_local_structure(ring: &Ring) -> Result<StructurePrediction, TheoremError> {
    if !ring.is_local() {
        return Err(TheoremError::PreconditionViolated(format!(
            "{ring} is not local"
        )));
    }
    Ok(predict_structure(ring))
}

/// Eulerian iff `R` is a product of at least two fields of even order.
pub fn predict_eulerian(ring: &Ring) -> bool {
    ring.k() >= 2
        && ring
            .factors()
            .iter()
            .all(|f| f.is_field() && f.order() % 2 == 0)
}

/// The necessary conditions for an Eulerian `τ(R)`, each computed directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerianConditions {
    /// `Z(R)` is not an ideal.
    pub a: bool,
    /// `|Z(R)|` is odd.
    pub b: bool,
    /// `2 ∈ Z(R)`.
    pub c: bool,
    /// `char R = 2`.
    pub c_prime: bool,
}

impl EulerianConditions {
    pub fn with_two(&self) -> bool {
        self.a && self.b && self.c
    }

    pub fn with_characteristic(&self) -> bool {
        self.a && self.b && self.c_prime
    }
}

/// `Z(R)` is closed under addition, scanning all pairs of zero-divisors.
/// Closure under multiplication by `R` always holds, so this decides whether
/// `Z(R)` is an ideal.
pub fn zero_divisors_closed_under_addition(ring: &Ring) -> bool {
    let zds = ring.zero_divisor_set();
    zds.iter()
        .all(|a| zds.iter().all(|b| ring.is_zero_divisor(&ring.add(a, b))))
}

pub fn check_eulerian_conditions(ring: &Ring) -> EulerianConditions {
    EulerianConditions {
        a: !zero_divisors_closed_under_addition(ring),
        b: ring.zero_divisor_count() % 2 == 1,
        c: ring.is_zero_divisor(&ring.from_integer(2)),
        c_prime: ring.characteristic() == 2,
    }
}

/// `γ(τ(R)) = f_1`, except `(f_1 − 1)/2 + 1` for fields of odd order.
pub fn predict_domination(ring: &Ring) -> usize {
    let f1 = ring.residue_field_sizes()[0] as usize;
    if ring.is_field() && ring.order() % 2 == 1 {
        (f1 - 1) / 2 + 1
    } else {
        f1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoPrediction {
    /// Every local factor has even order.
    pub condition_a: bool,
    /// `k ≥ 2` and `f_1 = 2`.
    pub condition_b: bool,
}

impl IsoPrediction {
    pub fn holds(&self) -> bool {
        self.condition_a || self.condition_b
    }
}

/// `τ(R) ≅ C(R)` iff all factors have even order, or `k ≥ 2` and `f_1 = 2`.
pub fn predict_tau_iso_cayley(ring: &Ring) -> IsoPrediction {
    IsoPrediction {
        condition_a: ring.factors().iter().all(|f| f.order() % 2 == 0),
        condition_b: ring.k() >= 2 && ring.residue_field_sizes()[0] == 2,
    }
}
