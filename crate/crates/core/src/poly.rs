//! Sparse multivariate polynomials with big-integer coefficients.
//!
//! The variables are the deformation parameter `s`, the smoothing parameter
//! `t`, the cochain coefficients `t_i` and the symbolic order coefficients
//! `a_k`.  Terms are kept in a `BTreeMap` under graded-lex order, so two equal
//! polynomials are structurally equal and print identically.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::parse::{self, Interp};

/// A polynomial variable.  The derived order `S < T < t_0 < ... < a_0 < ...`
/// is the variable order used by the term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    S,
    T,
    TSub(u32),
    A(u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::S => write!(f, "s"),
            Var::T => write!(f, "t"),
            Var::TSub(i) => write!(f, "t_{i}"),
            Var::A(k) => write!(f, "a_{k}"),
        }
    }
}

impl Var {
    fn latex(&self) -> String {
        match self {
            Var::S => "s".into(),
            Var::T => "t".into(),
            Var::TSub(i) => format!("t_{{{i}}}"),
            Var::A(k) => format!("a_{{{k}}}"),
        }
    }

    /// Resolves a symbol as written in the polynomial grammar.
    pub fn from_symbol(name: &str, index: Option<u32>) -> Option<Var> {
        match (name, index) {
            ("s", None) => Some(Var::S),
            ("t", None) => Some(Var::T),
            ("t", Some(i)) => Some(Var::TSub(i)),
            ("a", Some(k)) => Some(Var::A(k)),
            _ => None,
        }
    }
}

/// A monomial: variables with positive exponents, sorted by variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

impl Ord for Monomial {
    /// Graded lex: higher total degree is larger; ties are broken by the
    /// exponent of the first variable in which the monomials differ.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.0, &other.0);
        for k in 0..a.len().min(b.len()) {
            if a[k].0 != b[k].0 {
                // the one that mentions the earlier variable is larger
                return if a[k].0 < b[k].0 { Ordering::Greater } else { Ordering::Less };
            }
            if a[k].1 != b[k].1 {
                return a[k].1.cmp(&b[k].1);
            }
        }
        a.len().cmp(&b.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in canonical form: no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

/// A simultaneous substitution.  Variables without an image are left alone.
pub type Substitution = BTreeMap<Var, Poly>;

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        let c = c.into();
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(1, Monomial::var(v, 1))
    }

    pub fn s() -> Self {
        Poly::var(Var::S)
    }

    pub fn t() -> Self {
        Poly::var(Var::T)
    }

    pub fn t_sub(i: u32) -> Self {
        Poly::var(Var::TSub(i))
    }

    pub fn monomial<C: Into<BigInt>>(c: C, m: Monomial) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c.into());
        p
    }

    /// `c * t^e`
    pub fn t_pow<C: Into<BigInt>>(c: C, e: u32) -> Self {
        Poly::monomial(c, Monomial::var(Var::T, e))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += c * other`, the workhorse of every accumulation loop.
    pub fn add_scaled(&mut self, other: &Poly, c: &Poly) {
        for (m1, c1) in &other.terms {
            for (m2, c2) in &c.terms {
                self.add_term(m1.mul(m2), c1 * c2);
            }
        }
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Poly {
        let c = c.into();
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * &c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Simultaneous substitution: every image is read off the original
    /// polynomial, so `{x -> y, y -> x}` swaps the two variables.
    pub fn substitute(&self, sub: &Substitution) -> Poly {
        if sub.is_empty() {
            return self.clone();
        }
        let mut powers: BTreeMap<(Var, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            let mut kept = Monomial::one();
            for &(v, e) in &m.0 {
                match sub.get(&v) {
                    Some(img) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                        term = &term * &*pw;
                    }
                    None => kept = kept.mul(&Monomial::var(v, e)),
                }
            }
            out.add_scaled(&term, &Poly::monomial(1, kept));
        }
        out
    }

    /// Exact evaluation at a rational point; every variable must be assigned.
    pub fn eval_at(&self, point: &BTreeMap<Var, BigRational>) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut x = BigRational::from_integer(c.clone());
            for &(v, e) in &m.0 {
                let val = point.get(&v).ok_or_else(|| Error::Unassigned(v.to_string()))?;
                x *= num_traits::pow(val.clone(), e as usize);
            }
            acc += x;
        }
        Ok(acc)
    }

    /// Display-math rendering, e.g. `-t^{2} a_{6}+a_{0}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if neg {
                s.push('-');
            } else if idx > 0 {
                s.push('+');
            }
            let a = c.abs();
            let body: Vec<String> =
                m.0.iter().map(|&(v, e)| if e == 1 { v.latex() } else { format!("{}^{{{}}}", v.latex(), e) }).collect();
            if !a.is_one() || body.is_empty() {
                s.push_str(&a.to_string());
                if !body.is_empty() {
                    s.push(' ');
                }
            }
            s.push_str(&body.join(" "));
        }
        s
    }

    /// Parses the polynomial grammar accepted by [`parse`](crate::parse).
    pub fn parse(src: &str) -> Result<Poly> {
        parse::parse_expr(src, &PolyInterp)
    }
}

struct PolyInterp;

impl Interp for PolyInterp {
    type Value = Poly;
    fn int(&self, c: BigInt) -> Poly {
        Poly::constant(c)
    }
    fn symbol(&self, name: &str, index: Option<u32>) -> std::result::Result<Poly, String> {
        Var::from_symbol(name, index)
            .map(Poly::var)
            .ok_or_else(|| format!("unknown symbol {name}{}", index.map(|i| format!("_{i}")).unwrap_or_default()))
    }
    fn add(&self, a: Poly, b: Poly) -> Poly {
        &a + &b
    }
    fn mul(&self, a: Poly, b: Poly) -> Poly {
        &a * &b
    }
    fn neg(&self, a: Poly) -> Poly {
        -&a
    }
}

impl fmt::Display for Poly {
    /// Plain rendering such as `t_1*t_3 + t_2^2 - s`; it parses back to the
    /// same polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let body: Vec<String> =
                m.0.iter().map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") }).collect();
            if body.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", body.join("*"))?;
            } else {
                write!(f, "{a}*{}", body.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'a> std::ops::Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_ref(o);
        out
    }
}

impl<'a> std::ops::Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> std::ops::Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        out.add_scaled(self, o);
        out
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl std::ops::Add for Poly {
    type Output = Poly;
    fn add(mut self, o: Poly) -> Poly {
        self.add_assign_ref(&o);
        self
    }
}

impl std::ops::Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl std::ops::Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl std::ops::Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::ops::AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, o: &Poly) {
        self.add_assign_ref(o);
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::one()
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Poly {
        Poly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn basic_arithmetic() {
        assert_eq!(p("t_1 t_3") + p("t_2^2"), p("t_1*t_3 + t_2^2"));
        assert_eq!(&p("t") * &p("t^4"), p("t^5"));
        let x = p("3 s t_2 - a_4 + 7");
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn printing_order() {
        assert_eq!(p("t_2^2 + t_1 t_3").to_string(), "t_1*t_3 + t_2^2");
        assert_eq!(p("a_0 - t^2 a_6").to_latex(), "-t^{2} a_{6}+a_{0}");
        assert_eq!(p("t a_5 + t^2 a_8").to_latex(), "t^{2} a_{8}+t a_{5}");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
    }

    #[test]
    fn substitution_examples() {
        let sub: Substitution = [(Var::S, p("-t_1 t_14"))].into_iter().collect();
        assert!(p("t_1 t_14 + s").substitute(&sub).is_zero());
        let sub: Substitution = [(Var::TSub(14), p("t_7^2"))].into_iter().collect();
        assert!(p("t_7^2 - t_14").substitute(&sub).is_zero());
        let x = p("s t + 2");
        assert_eq!(x.substitute(&Substitution::new()), x);
    }

    #[test]
    fn substitution_is_simultaneous() {
        let sub: Substitution = [(Var::TSub(1), p("t_2")), (Var::TSub(2), p("t_1"))].into_iter().collect();
        assert_eq!(p("t_1 - 2 t_2").substitute(&sub), p("t_2 - 2 t_1"));
    }

    #[test]
    fn evaluation() {
        let q = |v: i64| BigRational::from_integer(v.into());
        let pt: BTreeMap<Var, BigRational> =
            [(Var::TSub(1), q(0)), (Var::TSub(3), q(0)), (Var::TSub(2), q(1)), (Var::S, q(-1))].into_iter().collect();
        assert!(p("t_1 t_3 + t_2^2 + s").eval_at(&pt).unwrap().is_zero());
        assert!(p("t").eval_at(&pt).is_err());
    }
}
