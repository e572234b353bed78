//! Realized local factors: element indexing, arithmetic and the maximal ideal.

use super::poly::{irreducible_power, smallest_irreducible, Poly};
use super::spec::LocalRingSpec;
use super::RingError;

/// Factors up to this order get their zero-divisors and residue classes by
/// exhaustive scan; larger ones use the structure of the modulus.
pub const SCAN_CAP: u64 = 1024;

#[derive(Clone, Debug)]
enum Arith {
    /// `Z_m` on residues `0..m`.
    Int { modulus: u64 },
    /// `F_p[x]/(f)` on base-`p` numerals of reduced coefficient vectors.
    Poly {
        p: u64,
        modulus: Poly,
        /// `g` with `f = g^e`, used for the structural zero-divisor test.
        radical: Poly,
    },
}

/// A local factor `R_i` together with its cached zero-divisor set and
/// residue-class map `π_i : R_i → F_i`.
#[derive(Clone, Debug)]
pub struct LocalRing {
    spec: LocalRingSpec,
    arith: Arith,
    order: u64,
    zero_divisor: Vec<bool>,
    zero_divisor_count: u64,
    class_of: Vec<u32>,
    class_reps: Vec<u64>,
}

impl LocalRing {
    pub fn realize(spec: &LocalRingSpec) -> Result<Self, RingError> {
        let order = spec
            .order()
            .ok_or_else(|| RingError::Unsupported(format!("{spec}: order overflows")))?;
        let arith = match spec {
            LocalRingSpec::ZPrimePower { .. } => Arith::Int { modulus: order },
            LocalRingSpec::GaloisField { p, n } => {
                let modulus = smallest_irreducible(*n as usize, *p);
                Arith::Poly {
                    p: *p,
                    radical: modulus.clone(),
                    modulus,
                }
            }
            LocalRingSpec::PolyQuotient { p, modulus } => {
                // small quotients are checked by the table scan below instead
                let radical = match irreducible_power(modulus, *p) {
                    Some((g, _)) => g,
                    None if order <= SCAN_CAP => modulus.clone(),
                    None => return Err(RingError::NotLocal(spec.to_string())),
                };
                Arith::Poly {
                    p: *p,
                    modulus: modulus.clone(),
                    radical,
                }
            }
        };
        let mut ring = LocalRing {
            spec: spec.clone(),
            arith,
            order,
            zero_divisor: Vec::new(),
            zero_divisor_count: 0,
            class_of: Vec::new(),
            class_reps: Vec::new(),
        };
        if order <= SCAN_CAP {
            ring.zero_divisor = ring.scan_zero_divisors();
            ring.zero_divisor_count = ring.zero_divisor.iter().filter(|&&z| z).count() as u64;
            if !ring.verify_local() {
                return Err(RingError::NotLocal(spec.to_string()));
            }
            ring.assign_classes_by_scan();
        } else {
            ring.zero_divisor = (0..order)
                .map(|x| ring.structural_zero_divisor(x))
                .collect();
            ring.zero_divisor_count = ring.zero_divisor.iter().filter(|&&z| z).count() as u64;
            ring.assign_classes_structurally();
        }
        Ok(ring)
    }

    pub fn spec(&self) -> &LocalRingSpec {
        &self.spec
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn prime(&self) -> u64 {
        self.spec.prime()
    }

    pub fn characteristic(&self) -> u64 {
        match &self.arith {
            Arith::Int { modulus } => *modulus,
            Arith::Poly { p, .. } => *p,
        }
    }

    /// The modulus polynomial for field and quotient factors.
    pub fn modulus_poly(&self) -> Option<&Poly> {
        match &self.arith {
            Arith::Int { .. } => None,
            Arith::Poly { modulus, .. } => Some(modulus),
        }
    }

    pub fn zero_divisor_count(&self) -> u64 {
        self.zero_divisor_count
    }

    pub fn unit_count(&self) -> u64 {
        self.order - self.zero_divisor_count
    }

    /// `f_i = |R_i| / |Z(R_i)|`.
    pub fn residue_field_size(&self) -> u64 {
        self.class_reps.len() as u64
    }

    pub fn is_field(&self) -> bool {
        self.zero_divisor_count == 1
    }

    pub fn is_zero_divisor(&self, x: u64) -> bool {
        self.zero_divisor[x as usize]
    }

    pub fn residue_class(&self, x: u64) -> u32 {
        self.class_of[x as usize]
    }

    /// A fixed element of residue class `c`; class 0 is represented by 0.
    pub fn class_representative(&self, c: u32) -> u64 {
        self.class_reps[c as usize]
    }

    pub fn residue_neg(&self, c: u32) -> u32 {
        self.residue_class(self.neg(self.class_representative(c)))
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    /// The image of the integer `m` under `Z → R_i`.
    pub fn from_integer(&self, m: u64) -> u64 {
        match &self.arith {
            Arith::Int { modulus } => m % modulus,
            Arith::Poly { p, .. } => m % p,
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        match &self.arith {
            Arith::Int { modulus } => (a + b) % modulus,
            Arith::Poly { p, .. } => digitwise(a, b, *p, |x, y| (x + y) % p),
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        match &self.arith {
            Arith::Int { modulus } => (modulus - a) % modulus,
            Arith::Poly { p, .. } => digitwise(a, 0, *p, |x, _| (p - x) % p),
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.arith {
            Arith::Int { modulus } => ((a as u128 * b as u128) % *modulus as u128) as u64,
            Arith::Poly { p, modulus, .. } => Poly::from_index(a, *p)
                .mul(&Poly::from_index(b, *p), *p)
                .rem_monic(modulus, *p)
                .to_index(*p),
        }
    }

    pub fn format_element(&self, x: u64) -> String {
        match &self.arith {
            Arith::Int { .. } => x.to_string(),
            Arith::Poly { p, .. } => Poly::from_index(x, *p).display(),
        }
    }

    /// `Z(R_i)` closed under addition, which for a finite commutative ring
    /// makes it the unique maximal ideal.
    pub fn verify_local(&self) -> bool {
        let zds: Vec<u64> = (0..self.order)
            .filter(|&x| self.is_zero_divisor(x))
            .collect();
        zds.iter()
            .all(|&a| zds.iter().all(|&b| self.is_zero_divisor(self.add(a, b))))
    }

    /// `x` is a zero-divisor iff `x = 0` or `x·y = 0` for some `y ≠ 0`.
    fn scan_zero_divisors(&self) -> Vec<bool> {
        (0..self.order)
            .map(|x| x == 0 || (1..self.order).any(|y| self.mul(x, y) == 0))
            .collect()
    }

    fn structural_zero_divisor(&self, x: u64) -> bool {
        match &self.arith {
            Arith::Int { .. } => x.is_multiple_of(self.prime()),
            Arith::Poly { p, radical, .. } => {
                Poly::from_index(x, *p).rem_monic(radical, *p).is_zero()
            }
        }
    }

    fn assign_classes_by_scan(&mut self) {
        let mut class_of = vec![0u32; self.order as usize];
        let mut reps: Vec<u64> = Vec::new();
        for x in 0..self.order {
            let found = reps
                .iter()
                .position(|&r| self.is_zero_divisor(self.sub(x, r)));
            class_of[x as usize] = match found {
                Some(c) => c as u32,
                None => {
                    reps.push(x);
                    (reps.len() - 1) as u32
                }
            };
        }
        self.class_of = class_of;
        self.class_reps = reps;
    }

    fn assign_classes_structurally(&mut self) {
        let (class_of, reps): (Vec<u32>, Vec<u64>) = match &self.arith {
            Arith::Int { .. } => {
                let p = self.prime();
                (
                    (0..self.order).map(|x| (x % p) as u32).collect(),
                    (0..p).collect(),
                )
            }
            Arith::Poly { p, radical, .. } => {
                // x mod g, read as a numeral, is already a reduced element
                let f = p.pow(radical.degree().unwrap() as u32);
                (
                    (0..self.order)
                        .map(|x| Poly::from_index(x, *p).rem_monic(radical, *p).to_index(*p) as u32)
                        .collect(),
                    (0..f).collect(),
                )
            }
        };
        self.class_of = class_of;
        self.class_reps = reps;
    }
}

fn digitwise(mut a: u64, mut b: u64, p: u64, op: impl Fn(u64, u64) -> u64) -> u64 {
    let mut out = 0;
    let mut place = 1;
    while a > 0 || b > 0 {
        out += op(a % p, b % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}
