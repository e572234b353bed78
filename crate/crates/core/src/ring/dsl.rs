//! Text syntax for ring specifications.
//!
//! ```text
//! spec    := factor { ("x" | "*") factor } ;
//! factor  := "Z" nat | ("GF(" nat ")" | "F" nat) | "Z" prime "[x]/(" poly ")" ;
//! poly    := term { "+" term } ;
//! term    := [nat] ["x" ["^" nat]] ;
//! ```
//!
//! Whitespace is ignored and keywords are case-insensitive. `Zn` with a
//! composite `n` is split into its prime-power factors.

use super::poly::{irreducible_power, Poly};
use super::spec::{LocalRingSpec, RingSpec, DEFAULT_ORDER_CAP};
use super::RingError;

/// Parses `text` under the default order cap.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec, RingError> {
    parse_ring_spec_with_cap(text, DEFAULT_ORDER_CAP)
}

pub fn parse_ring_spec_with_cap(text: &str, cap: u64) -> Result<RingSpec, RingError> {
    let mut parser = Parser::new(text);
    let mut factors = parser.factor(cap)?;
    loop {
        match parser.peek() {
            None => break,
            Some('x') | Some('*') => {
                parser.bump();
                factors.extend(parser.factor(cap)?);
            }
            Some(_) => return Err(parser.expected("'x', '*' or end of input")),
        }
    }
    RingSpec::with_cap(factors, text.trim(), cap)
}

struct Parser {
    // lowercased non-whitespace chars with their original char positions
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i, c.to_ascii_lowercase()))
            .collect();
        Parser {
            chars,
            pos: 0,
            end: text.chars().count(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn position(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn expected(&self, what: &str) -> RingError {
        RingError::Syntax {
            position: self.position(),
            expected: what.to_string(),
            found: self
                .peek()
                .map_or_else(|| "end of input".to_string(), |c| format!("'{c}'")),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<(), RingError> {
        for c in s.chars() {
            if !self.eat(c) {
                return Err(self.expected(&format!("'{s}'")));
            }
        }
        Ok(())
    }

    fn nat(&mut self) -> Result<u64, RingError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| RingError::Unsupported("number too large".into()))?;
            self.bump();
        }
        if self.pos == start {
            return Err(self.expected("a natural number"));
        }
        Ok(value)
    }

    fn factor(&mut self, cap: u64) -> Result<Vec<LocalRingSpec>, RingError> {
        match self.peek() {
            Some('g') => {
                self.expect_str("gf(")?;
                let q = self.nat()?;
                self.expect_str(")")?;
                Ok(vec![galois_field(q)?])
            }
            Some('f') => {
                self.bump();
                let q = self.nat()?;
                Ok(vec![galois_field(q)?])
            }
            Some('z') => {
                self.bump();
                let n = self.nat()?;
                if self.peek() == Some('[') {
                    self.expect_str("[x]/(")?;
                    let modulus = self.poly()?;
                    self.expect_str(")")?;
                    Ok(vec![poly_quotient(n, modulus)?])
                } else {
                    integers_mod(n, cap)
                }
            }
            _ => Err(self.expected("'Z', 'GF(' or 'F'")),
        }
    }

    /// Terms as `(coefficient, exponent)`; reduction waits until the base is
    /// known to be prime.
    fn poly(&mut self) -> Result<Vec<(u64, usize)>, RingError> {
        let mut terms = vec![self.term()?];
        while self.eat('+') {
            terms.push(self.term()?);
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(u64, usize), RingError> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            Some(self.nat()?)
        } else {
            None
        };
        if self.eat('x') {
            let exp = if self.eat('^') { self.nat()? } else { 1 };
            let exp = usize::try_from(exp)
                .ok()
                .filter(|&e| e <= 64)
                .ok_or_else(|| RingError::Unsupported(format!("degree {exp} is too large")))?;
            Ok((coeff.unwrap_or(1), exp))
        } else {
            match coeff {
                Some(c) => Ok((c, 0)),
                None => Err(self.expected("'x' or a natural number")),
            }
        }
    }
}

/// Factors `n` into `(prime, exponent)` pairs by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

fn galois_field(q: u64) -> Result<LocalRingSpec, RingError> {
    let (p, n) = prime_power(q)
        .ok_or_else(|| RingError::Unsupported(format!("GF({q}): order is not a prime power")))?;
    Ok(LocalRingSpec::GaloisField { p, n })
}

fn integers_mod(n: u64, cap: u64) -> Result<Vec<LocalRingSpec>, RingError> {
    if n < 2 {
        return Err(RingError::Unsupported(format!(
            "Z{n} is not a ring with 1 != 0"
        )));
    }
    if n > cap {
        return Err(RingError::Unsupported(format!(
            "ring order exceeds the cap of {cap}"
        )));
    }
    Ok(factorize(n)
        .into_iter()
        .map(|(p, n)| LocalRingSpec::ZPrimePower { p, n })
        .collect())
}

fn poly_quotient(p: u64, terms: Vec<(u64, usize)>) -> Result<LocalRingSpec, RingError> {
    if !is_prime(p) {
        return Err(RingError::Unsupported(format!(
            "polynomial quotients need a prime base, got Z{p}"
        )));
    }
    let degree = terms.iter().map(|&(_, e)| e).max().unwrap_or(0);
    let mut coeffs = vec![0u64; degree + 1];
    for (c, e) in terms {
        coeffs[e] = (coeffs[e] + c % p) % p;
    }
    let modulus = Poly::from_coeffs(coeffs, p);
    if modulus.degree().unwrap_or(0) < 1 || !modulus.is_monic() {
        return Err(RingError::Unsupported(format!(
            "modulus {modulus} must be monic of degree at least 1 over F_{p}"
        )));
    }
    if irreducible_power(&modulus, p).is_none() {
        return Err(RingError::NotLocal(format!("Z{p}[x]/({modulus})")));
    }
    Ok(LocalRingSpec::PolyQuotient { p, modulus })
}
