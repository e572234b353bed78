//! Explicit dominating sets and isomorphisms `τ(R) → C(R)`.

use serde::{Deserialize, Serialize};

use crate::ring::{Ring, RingElement};

use super::predict::predict_tau_iso_cayley;
use super::TheoremError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DominatingConstruction {
    /// One lift of each residue class of `F_1`, zero elsewhere.
    ResidueLift,
    /// `0` plus one element from each pair `{c, −c}` of a field of odd order.
    OddFieldPairing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatingWitness {
    pub elements: Vec<RingElement>,
    pub construction: DominatingConstruction,
}

impl DominatingWitness {
    pub fn vertex_ids(&self, ring: &Ring) -> Vec<usize> {
        self.elements.iter().map(|x| ring.encode(x)).collect()
    }
}

pub fn construct_dominating_set(ring: &Ring) -> DominatingWitness {
    if ring.is_field() && ring.order() % 2 == 1 {
        let field = ring.factor(0);
        let mut elements = vec![ring.zero()];
        for x in 1..field.order() {
            // keep the smaller index of each pair {x, -x}
            if x < field.neg(x) {
                elements.push(RingElement::new(vec![x]));
            }
        }
        return DominatingWitness {
            elements,
            construction: DominatingConstruction::OddFieldPairing,
        };
    }
    let first = ring.factor(0);
    let elements = (0..first.residue_field_size() as u32)
        .map(|c| {
            let mut components = vec![0; ring.k()];
            components[0] = first.class_representative(c);
            RingElement::new(components)
        })
        .collect();
    DominatingWitness {
        elements,
        construction: DominatingConstruction::ResidueLift,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IsoCondition {
    /// All factors of even order; the identity works.
    A,
    /// `k ≥ 2`, `f_1 = 2`; `x ↦ x` on `A`, `x ↦ −x` off it.
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    /// `map[id]` is the image vertex of vertex `id`.
    pub map: Vec<usize>,
    /// `A = {x : x_1 ∈ Z(R_1)}` for the piecewise map.
    pub set_a: Option<Vec<usize>>,
    pub condition: IsoCondition,
}

/// An isomorphism `τ(R) → C(R)` as a vertex map.
///
/// Uses the identity when every factor has even order, otherwise the map
/// fixing `A` pointwise and negating everything else.
pub fn construct_iso_witness(ring: &Ring) -> Result<IsoWitness, TheoremError> {
    let prediction = predict_tau_iso_cayley(ring);
    let n = ring.order() as usize;
    if prediction.condition_a {
        return Ok(IsoWitness {
            map: (0..n).collect(),
            set_a: None,
            condition: IsoCondition::A,
        });
    }
    if !prediction.condition_b {
        return Err(TheoremError::PreconditionViolated(format!(
            "no isomorphism criterion holds for {ring}"
        )));
    }
    let first = ring.factor(0);
    let mut set_a = Vec::new();
    let map = ring
        .elements()
        .enumerate()
        .map(|(id, x)| {
            if first.is_zero_divisor(x.components[0]) {
                set_a.push(id);
                id
            } else {
                ring.encode(&ring.neg(&x))
            }
        })
        .collect();
    Ok(IsoWitness {
        map,
        set_a: Some(set_a),
        condition: IsoCondition::B,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominating_sets() {
        let z3 = Ring::parse("Z3").unwrap();
        let w = construct_dominating_set(&z3);
        assert_eq!(w.elements, vec![z3.from_integer(0), z3.from_integer(1)]);
        assert_eq!(w.construction, DominatingConstruction::OddFieldPairing);

        let klein = Ring::parse("Z2 x Z2").unwrap();
        let w = construct_dominating_set(&klein);
        assert_eq!(
            w.elements,
            vec![RingElement::new(vec![0, 0]), RingElement::new(vec![1, 0])]
        );

        let z45 = Ring::parse("Z45").unwrap();
        let w = construct_dominating_set(&z45);
        let residues: Vec<u32> = w.elements.iter().map(|x| z45.residue_class(0, x)).collect();
        assert_eq!(residues.len(), 3);
        assert_eq!(
            residues,
            (0..3)
                .map(|c| z45.residue_class(0, &z45.from_integer(c)))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn iso_witness_shapes() {
        let z6 = Ring::parse("Z2 x Z3").unwrap();
        let w = construct_iso_witness(&z6).unwrap();
        assert_eq!(w.condition, IsoCondition::B);
        // A = {0} x Z3
        assert_eq!(w.set_a, Some(vec![0, 1, 2]));
        assert_eq!(w.map[4], 5);

        let z4 = Ring::parse("Z4").unwrap();
        let w = construct_iso_witness(&z4).unwrap();
        assert_eq!((w.condition, w.map), (IsoCondition::A, vec![0, 1, 2, 3]));

        assert!(construct_iso_witness(&Ring::parse("Z9").unwrap()).is_err());
    }
}
