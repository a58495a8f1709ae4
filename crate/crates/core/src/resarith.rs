//! Residues modulo `r`, the orange lattice, the `m(j)` function and
//! Hirzebruch-Jung continued fractions.
//!
//! Residues are always stored as their canonical representative in `[0, r)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// The representative of `x` modulo `r` lying in `[0, r)`.
pub fn bracket(x: i64, r: i64) -> Result<i64> {
    if r < 1 {
        return Err(Error::InvalidModulus(r));
    }
    Ok(x.rem_euclid(r))
}

/// The inverse of `a` modulo `r`, as a representative in `(0, r)`.
pub fn inverse_mod(a: i64, r: i64) -> Result<i64> {
    if r < 2 {
        return Err(Error::InvalidParams { r, a, reason: "r must be at least 2".into() });
    }
    let e = (a.rem_euclid(r)).extended_gcd(&r);
    if e.gcd != 1 {
        return Err(Error::InvalidParams { r, a, reason: format!("gcd(a, r) = {}", e.gcd) });
    }
    Ok(e.x.rem_euclid(r))
}

/// The data `(r, a, b)` of the cyclic quotient singularity `1/r(1,a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SingularityParams {
    pub r: u32,
    pub a: u32,
    pub b: u32,
}

impl SingularityParams {
    pub fn new(r: i64, a: i64) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParams { r, a, reason: "r must be at least 2".into() });
        }
        if a <= 0 || a >= r {
            return Err(Error::InvalidParams { r, a, reason: "need 0 < a < r".into() });
        }
        let b = inverse_mod(a, r)?;
        Ok(SingularityParams { r: r as u32, a: a as u32, b: b as u32 })
    }

    /// Every valid pair `(r, a)` with `2 <= r <= max_r`.
    pub fn all_up_to(max_r: u32) -> Vec<SingularityParams> {
        let mut out = Vec::new();
        for r in 2..=max_r as i64 {
            for a in 1..r {
                if let Ok(p) = SingularityParams::new(r, a) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Canonical representative of `x` modulo `r`.
    #[inline]
    pub fn br(&self, x: i64) -> u32 {
        x.rem_euclid(self.r as i64) as u32
    }

    /// The parameters with `a` and `b` exchanged.
    pub fn dual(&self) -> SingularityParams {
        SingularityParams { r: self.r, a: self.b, b: self.a }
    }

    pub fn gamma(&self, p: LatticePoint) -> u32 {
        self.br(p.y - self.b as i64 * p.x)
    }

    pub fn is_orange(&self, p: LatticePoint) -> bool {
        self.gamma(p) == 0
    }

    /// `m(j) = min { [k b] : 1 <= k <= [-a j] }`, and `m(0) = r`.
    pub fn m_of(&self, j: i64) -> u32 {
        let j = self.br(j);
        if j == 0 {
            return self.r;
        }
        let upper = self.br(-(self.a as i64) * j as i64);
        (1..=upper as i64).map(|k| self.br(k * self.b as i64)).min().unwrap_or(self.r)
    }

    /// Continued fraction of `r/(r-a)`, whose entries are the negated
    /// self-intersections of the minimal resolution.
    pub fn resolution_fraction(&self) -> Vec<i64> {
        hj_fraction(self.r as i64, (self.r - self.a) as i64).expect("0 < r-a < r")
    }

    /// Continued fraction of the dual ratio `r/a`.
    pub fn dual_fraction(&self) -> Vec<i64> {
        hj_fraction(self.r as i64, self.a as i64).expect("0 < a < r")
    }
}

/// A point of `Z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }
}

impl std::ops::Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x + o.x, self.y + o.y)
    }
}

/// Coprime `0 < q < n`, giving the Wahl singularity `1/n^2(1, nq-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WahlParams {
    pub n: u32,
    pub q: u32,
}

impl WahlParams {
    pub fn new(n: i64, q: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidWahl { n, q, reason: "n must be at least 2".into() });
        }
        if q <= 0 || q >= n {
            return Err(Error::InvalidWahl { n, q, reason: "need 0 < q < n".into() });
        }
        if n.gcd(&q) != 1 {
            return Err(Error::InvalidWahl { n, q, reason: "n and q must be coprime".into() });
        }
        Ok(WahlParams { n: n as u32, q: q as u32 })
    }

    pub fn all_up_to(max_n: u32) -> Vec<WahlParams> {
        let mut out = Vec::new();
        for n in 2..=max_n as i64 {
            for q in 1..n {
                if let Ok(w) = WahlParams::new(n, q) {
                    out.push(w);
                }
            }
        }
        out
    }

    pub fn singularity(&self) -> SingularityParams {
        let r = (self.n * self.n) as i64;
        SingularityParams::new(r, (self.n * self.q - 1) as i64).expect("nq-1 is a unit modulo n^2")
    }
}

/// Hirzebruch-Jung expansion `r/d = b_1 - 1/(b_2 - ...)` with every `b_i >= 2`.
pub fn hj_fraction(r: i64, d: i64) -> Result<Vec<i64>> {
    if d <= 0 || d >= r {
        return Err(Error::FractionRange { r, d });
    }
    let (mut num, mut den) = (r, d);
    let mut out = Vec::new();
    while den != 0 {
        let c = Integer::div_ceil(&num, &den);
        out.push(c);
        let rest = c * den - num;
        num = den;
        den = rest;
    }
    Ok(out)
}

/// Evaluates `b_1 - 1/(b_2 - ... - 1/b_t)` exactly.
pub fn hj_eval(bs: &[i64]) -> Option<BigRational> {
    let mut acc: Option<BigRational> = None;
    for &b in bs.iter().rev() {
        let b = BigRational::from_integer(BigInt::from(b));
        acc = Some(match acc {
            None => b,
            Some(x) if x.is_zero() => return None,
            Some(x) => b - BigRational::one() / x,
        });
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(-2, 9).unwrap(), 7);
        assert_eq!(bracket(9, 9).unwrap(), 0);
        assert_eq!(bracket(15, 16).unwrap(), 15);
        assert!(bracket(3, 0).is_err());
    }

    #[test]
    fn inverses() {
        assert_eq!(inverse_mod(3, 16).unwrap(), 11);
        assert_eq!(inverse_mod(2, 9).unwrap(), 5);
        assert_eq!(inverse_mod(1, 7).unwrap(), 1);
        assert!(inverse_mod(4, 6).is_err());
    }

    #[test]
    fn m_function_at_9_2() {
        let p = SingularityParams::new(9, 2).unwrap();
        assert_eq!(p.m_of(0), 9);
        assert_eq!(p.m_of(4), 5);
        assert_eq!(p.m_of(1), 1);
    }

    #[test]
    fn fractions() {
        assert_eq!(hj_fraction(2, 1).unwrap(), vec![2]);
        assert_eq!(hj_fraction(4, 3).unwrap(), vec![2, 2, 2]);
        assert_eq!(hj_fraction(4, 1).unwrap(), vec![4]);
        assert!(hj_fraction(4, 4).is_err());
    }
}
