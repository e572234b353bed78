use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::{cmp_low_first, irreducible_power, Poly};
use super::RingError;

/// Hard cap on `|R|` for constructed rings.
pub const DEFAULT_ORDER_CAP: u64 = 1 << 20;

/// One local factor of a finite commutative ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LocalRingSpec {
    /// `Z_{p^n}`.
    ZPrimePower { p: u64, n: u32 },
    /// `GF(p^n)`, realized with the smallest monic irreducible modulus.
    GaloisField { p: u64, n: u32 },
    /// `F_p[x]/(f)` with `f` monic of degree at least one.
    PolyQuotient { p: u64, modulus: Poly },
}

impl LocalRingSpec {
    pub fn prime(&self) -> u64 {
        match self {
            LocalRingSpec::ZPrimePower { p, .. }
            | LocalRingSpec::GaloisField { p, .. }
            | LocalRingSpec::PolyQuotient { p, .. } => *p,
        }
    }

    /// `|R_i|`, or `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        match self {
            LocalRingSpec::ZPrimePower { p, n } | LocalRingSpec::GaloisField { p, n } => {
                p.checked_pow(*n)
            }
            LocalRingSpec::PolyQuotient { p, modulus } => {
                p.checked_pow(modulus.degree().unwrap_or(0) as u32)
            }
        }
    }

    /// Residue field size, read off the structure without enumerating.
    ///
    /// For a quotient `F_p[x]/(g^e)` this is `p^deg g`; non-local quotients
    /// yield `None`.
    pub fn residue_field_size(&self) -> Option<u64> {
        match self {
            LocalRingSpec::ZPrimePower { p, .. } => Some(*p),
            LocalRingSpec::GaloisField { p, n } => p.checked_pow(*n),
            LocalRingSpec::PolyQuotient { p, modulus } => {
                let (g, _) = irreducible_power(modulus, *p)?;
                p.checked_pow(g.degree()? as u32)
            }
        }
    }

    fn tag(&self) -> u8 {
        match self {
            LocalRingSpec::ZPrimePower { .. } => 0,
            LocalRingSpec::GaloisField { .. } => 1,
            LocalRingSpec::PolyQuotient { .. } => 2,
        }
    }

    /// Canonical factor order: `(f_i, |R_i|, variant, parameters)`.
    pub fn sort_key_cmp(&self, other: &Self) -> Ordering {
        self.residue_field_size()
            .cmp(&other.residue_field_size())
            .then_with(|| self.order().cmp(&other.order()))
            .then_with(|| self.tag().cmp(&other.tag()))
            .then_with(|| match (self, other) {
                (
                    LocalRingSpec::ZPrimePower { p: a, n: m },
                    LocalRingSpec::ZPrimePower { p: b, n: k },
                )
                | (
                    LocalRingSpec::GaloisField { p: a, n: m },
                    LocalRingSpec::GaloisField { p: b, n: k },
                ) => (a, m).cmp(&(b, k)),
                (
                    LocalRingSpec::PolyQuotient { p: a, modulus: f },
                    LocalRingSpec::PolyQuotient { p: b, modulus: g },
                ) => a.cmp(b).then_with(|| cmp_low_first(f, g)),
                _ => Ordering::Equal,
            })
    }
}

impl fmt::Display for LocalRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalRingSpec::ZPrimePower { p, n } => write!(f, "Z{}", p.pow(*n)),
            LocalRingSpec::GaloisField { p, n } => write!(f, "GF({})", p.pow(*n)),
            LocalRingSpec::PolyQuotient { p, modulus } => write!(f, "Z{p}[x]/({modulus})"),
        }
    }
}

/// A ring given as an ordered product of local factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    factors: Vec<LocalRingSpec>,
    source: String,
}

impl RingSpec {
    /// Sorts the factors canonically and checks the order cap.
    pub fn new(factors: Vec<LocalRingSpec>, source: impl Into<String>) -> Result<Self, RingError> {
        Self::with_cap(factors, source, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(
        mut factors: Vec<LocalRingSpec>,
        source: impl Into<String>,
        cap: u64,
    ) -> Result<Self, RingError> {
        if factors.is_empty() {
            return Err(RingError::Unsupported(
                "a ring needs at least one factor".into(),
            ));
        }
        let mut order: u64 = 1;
        for factor in &factors {
            if factor.residue_field_size().is_none() {
                return Err(RingError::NotLocal(factor.to_string()));
            }
            order = factor
                .order()
                .and_then(|o| order.checked_mul(o))
                .filter(|&o| o <= cap)
                .ok_or_else(|| {
                    RingError::Unsupported(format!("ring order exceeds the cap of {cap}"))
                })?;
        }
        // stable sort keeps input order within ties
        factors.sort_by(|a, b| a.sort_key_cmp(b));
        Ok(RingSpec {
            factors,
            source: source.into(),
        })
    }

    pub fn factors(&self) -> &[LocalRingSpec] {
        &self.factors
    }

    /// The text this spec was parsed from.
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().map(|f| f.order().unwrap()).product()
    }

    pub fn residue_field_sizes(&self) -> Vec<u64> {
        self.factors
            .iter()
            .map(|f| f.residue_field_size().unwrap())
            .collect()
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" x "))
    }
}
