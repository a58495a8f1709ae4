//! Dense univariate polynomials in `t` over the integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::poly::{Monomial, Poly, Var};

/// Coefficients from the constant term up, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly(Vec<BigInt>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        UPoly::from_coeffs(vec![c.into()])
    }

    /// `c * t^e`
    pub fn monomial<C: Into<BigInt>>(c: C, e: usize) -> Self {
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = c.into();
        UPoly::from_coeffs(v)
    }

    pub fn from_coeffs(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        UPoly(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.0.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`
    /// in `Z[t]`.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        let lead = &d.0[dd];
        let mut rem = self.0.clone();
        let sd = self.degree()?;
        if sd < dd {
            return None;
        }
        let mut quo = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.0.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quo[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(UPoly::from_coeffs(quo))
        } else {
            None
        }
    }

    pub fn to_poly(&self, var: Var) -> Poly {
        let mut p = Poly::zero();
        for (e, c) in self.0.iter().enumerate() {
            if !c.is_zero() {
                p += &Poly::monomial(c.clone(), Monomial::var(var, e as u32));
            }
        }
        p
    }

    /// Reads a polynomial that mentions no variable other than `var`.
    pub fn from_poly(p: &Poly, var: Var) -> Option<UPoly> {
        let mut v = Vec::new();
        for (m, c) in p.terms() {
            let e = m.exponent(var);
            if m.degree() != e {
                return None;
            }
            let e = e as usize;
            if v.len() <= e {
                v.resize(e + 1, BigInt::zero());
            }
            v[e] = c.clone();
        }
        Some(UPoly::from_coeffs(v))
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly(Var::T))
    }
}

impl Serialize for UPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl std::ops::Add<&UPoly> for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        UPoly::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl std::ops::Sub<&UPoly> for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        UPoly::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl std::ops::Mul<&UPoly> for &UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(v)
    }
}

impl std::ops::Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl std::ops::Add for UPoly {
    type Output = UPoly;
    fn add(self, o: UPoly) -> UPoly {
        &self + &o
    }
}

impl std::ops::Sub for UPoly {
    type Output = UPoly;
    fn sub(self, o: UPoly) -> UPoly {
        &self - &o
    }
}

impl std::ops::Mul for UPoly {
    type Output = UPoly;
    fn mul(self, o: UPoly) -> UPoly {
        &self * &o
    }
}

impl std::ops::Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -&self
    }
}

impl Zero for UPoly {
    fn zero() -> Self {
        UPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for UPoly {
    fn one() -> Self {
        UPoly::one()
    }
}

/// A quotient `num / den` of polynomials in `t`, normalised so the
/// denominator has positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFn {
    pub num: UPoly,
    pub den: UPoly,
}

impl RatFn {
    pub fn new(num: UPoly, den: UPoly) -> Self {
        let neg = den.0.last().is_some_and(|c| c.is_negative());
        if neg {
            RatFn { num: -num, den: -den }
        } else {
            RatFn { num, den }
        }
    }

    /// The polynomial this equals, when the division is exact.
    pub fn as_poly(&self) -> Option<UPoly> {
        self.num.div_exact(&self.den)
    }
}

/// Clears denominators of a coordinate vector, returning the polynomials if
/// every division is exact.
pub fn is_polynomial(coords: &[RatFn]) -> Option<Vec<UPoly>> {
    coords.iter().map(RatFn::as_poly).collect()
}
