//! Dense polynomials over a prime field `F_p`.
//!
//! Coefficients are stored low-degree first and kept trimmed, so the zero
//! polynomial is the empty vector.

use std::cmp::Ordering;
use std::fmt;

/// A polynomial over `F_p` with coefficients in `0..p`, low degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Poly {
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// Builds a polynomial from raw coefficients, reducing them mod `p`.
    pub fn from_coeffs(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        let mut poly = Poly { coeffs };
        poly.trim();
        poly
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        Poly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add(&self, other: &Poly, p: u64) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % p
            })
            .collect();
        Poly::from_coeffs(coeffs, p)
    }

    pub fn neg(&self, p: u64) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| (p - c) % p).collect();
        Poly::from_coeffs(coeffs, p)
    }

    pub fn sub(&self, other: &Poly, p: u64) -> Poly {
        self.add(&other.neg(p), p)
    }

    pub fn mul(&self, other: &Poly, p: u64) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + a * b) % p;
            }
        }
        Poly::from_coeffs(coeffs, p)
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &Poly, p: u64) -> (Poly, Poly) {
        debug_assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.degree().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - d];
        for top in (d..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            quot[top - d] = c;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let idx = top - d + j;
                rem[idx] = (rem[idx] + p - (c * dc) % p) % p;
            }
        }
        rem.truncate(d);
        (Poly::from_coeffs(quot, p), Poly::from_coeffs(rem, p))
    }

    pub fn rem_monic(&self, divisor: &Poly, p: u64) -> Poly {
        self.div_rem_monic(divisor, p).1
    }

    /// Reads a base-`p` numeral (little-endian digits) as a polynomial.
    pub fn from_index(mut index: u64, p: u64) -> Poly {
        let mut coeffs = Vec::new();
        while index > 0 {
            coeffs.push(index % p);
            index /= p;
        }
        Poly { coeffs }
    }

    /// Inverse of [`Poly::from_index`].
    pub fn to_index(&self, p: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    /// Renders the polynomial in `x`, highest degree first (`x^2+2x+1`).
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (deg, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (d, 1) => format!("x^{d}"),
                (d, c) => format!("{c}x^{d}"),
            };
            terms.push(term);
        }
        terms.join("+")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// Orders monic polynomials of equal degree by coefficient vector, constant
/// term most significant.
pub fn cmp_low_first(a: &Poly, b: &Poly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs.cmp(&b.coeffs))
}

/// All monic polynomials of degree `d` over `F_p`, in low-first lexicographic
/// order of their lower coefficients.
pub fn monic_of_degree(d: usize, p: u64) -> impl Iterator<Item = Poly> {
    let count = p.pow(d as u32);
    (0..count).map(move |i| {
        // most significant digit is the constant term
        let mut lower = vec![0u64; d];
        let mut rest = i;
        for slot in lower.iter_mut().rev() {
            *slot = rest % p;
            rest /= p;
        }
        lower.push(1);
        Poly { coeffs: lower }
    })
}

/// Irreducibility over `F_p` by trial division with every monic polynomial
/// of degree `1..=deg/2`.
pub fn is_irreducible(f: &Poly, p: u64) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    debug_assert!(f.is_monic());
    (1..=n / 2).all(|d| monic_of_degree(d, p).all(|g| !f.rem_monic(&g, p).is_zero()))
}

/// The lexicographically smallest monic irreducible polynomial of degree `n`
/// (coefficient vectors compared low-degree first).
pub fn smallest_irreducible(n: usize, p: u64) -> Poly {
    monic_of_degree(n, p)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

/// If `f` is a power `g^e` of a monic irreducible `g`, returns `(g, e)`.
pub fn irreducible_power(f: &Poly, p: u64) -> Option<(Poly, usize)> {
    let n = f.degree()?;
    if n == 0 {
        return None;
    }
    // the lowest-degree monic divisor of f is irreducible
    let g = (1..=n)
        .flat_map(|d| monic_of_degree(d, p))
        .find(|g| f.rem_monic(g, p).is_zero())?;
    let mut rest = f.clone();
    let mut e = 0;
    while rest.degree() != Some(0) {
        let (q, r) = rest.div_rem_monic(&g, p);
        if !r.is_zero() {
            return None;
        }
        rest = q;
        e += 1;
    }
    Some((g, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_x_squared_in_gf4() {
        let f = Poly::from_coeffs(vec![1, 1, 1], 2);
        let x = Poly::monomial(1);
        let r = x.mul(&x, 2).rem_monic(&f, 2);
        assert_eq!(r, Poly::from_coeffs(vec![1, 1], 2));
        assert_eq!(r.display(), "x+1");
    }

    #[test]
    fn index_round_trip() {
        for i in 0..125 {
            assert_eq!(Poly::from_index(i, 5).to_index(5), i);
        }
    }

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(smallest_irreducible(2, 2).coeffs(), &[1, 1, 1]);
        // x^3 + x^2 + 1 beats x^3 + x + 1 when the constant term leads
        assert_eq!(smallest_irreducible(3, 2).coeffs(), &[1, 0, 1, 1]);
        assert_eq!(smallest_irreducible(2, 3).coeffs(), &[1, 0, 1]);
        assert_eq!(smallest_irreducible(1, 7).coeffs(), &[0, 1]);
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree 4 over F_2 is 3, degree 2 over F_3 is 3
        assert_eq!(
            monic_of_degree(4, 2)
                .filter(|f| is_irreducible(f, 2))
                .count(),
            3
        );
        assert_eq!(
            monic_of_degree(2, 3)
                .filter(|f| is_irreducible(f, 3))
                .count(),
            3
        );
    }

    #[test]
    fn powers_of_irreducibles() {
        let x2 = Poly::monomial(2);
        assert_eq!(irreducible_power(&x2, 2), Some((Poly::monomial(1), 2)));
        let x2_plus_x = Poly::from_coeffs(vec![0, 1, 1], 2);
        assert_eq!(irreducible_power(&x2_plus_x, 2), None);
        let x2_plus_1 = Poly::from_coeffs(vec![1, 0, 1], 2);
        assert_eq!(
            irreducible_power(&x2_plus_1, 2),
            Some((Poly::from_coeffs(vec![1, 1], 2), 2))
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(Poly::from_coeffs(vec![1, 2, 1], 3).display(), "x^2+2x+1");
        assert_eq!(Poly::zero().display(), "0");
        assert_eq!(Poly::from_coeffs(vec![0, 0, 2], 5).display(), "2x^2");
    }
}
