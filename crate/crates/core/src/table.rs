//! Structure constants of a unital algebra with basis `w_0, ..., w_{r-1}`.

use std::fmt::Display;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::poly::Poly;
use crate::upoly::UPoly;

/// Coefficient rings a table can live over.
pub trait Coeff: Clone + PartialEq + Zero + One + Send + Sync {
    fn add_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

macro_rules! coeff_via_ops {
    ($($t:ty),*) => {$(
        impl Coeff for $t {
            fn add_ref(&self, o: &Self) -> Self { self.clone() + o.clone() }
            fn mul_ref(&self, o: &Self) -> Self { self.clone() * o.clone() }
            fn neg_ref(&self) -> Self { -self.clone() }
        }
    )*};
}
coeff_via_ops!(i64, BigInt, BigRational);

impl Coeff for Poly {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Coeff for UPoly {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// `c[j][i][k]` is the coefficient of `w_k` in `w_j w_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraTable<C> {
    dim: usize,
    c: Vec<C>,
}

/// A failure of associativity, `(w_k w_j) w_i != w_k (w_j w_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocFailure {
    pub k: usize,
    pub j: usize,
    pub i: usize,
}

impl<C: Coeff> AlgebraTable<C> {
    pub fn zeros(dim: usize) -> Self {
        AlgebraTable { dim, c: vec![C::zero(); dim * dim * dim] }
    }

    /// Builds a table from a function returning the coordinates of `w_j w_i`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vec<C>) -> Self {
        let mut t = AlgebraTable::zeros(dim);
        for j in 0..dim {
            for i in 0..dim {
                let v = f(j, i);
                assert_eq!(v.len(), dim, "product vector has wrong length");
                t.product_mut(j, i).clone_from_slice(&v);
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn at(&self, j: usize, i: usize) -> usize {
        (j * self.dim + i) * self.dim
    }

    pub fn get(&self, j: usize, i: usize, k: usize) -> &C {
        &self.c[self.at(j, i) + k]
    }

    pub fn set(&mut self, j: usize, i: usize, k: usize, v: C) {
        let at = self.at(j, i);
        self.c[at + k] = v;
    }

    /// Coordinates of `w_j w_i`.
    pub fn product(&self, j: usize, i: usize) -> &[C] {
        let at = self.at(j, i);
        &self.c[at..at + self.dim]
    }

    pub fn product_mut(&mut self, j: usize, i: usize) -> &mut [C] {
        let at = self.at(j, i);
        &mut self.c[at..at + self.dim]
    }

    /// Multiplies two elements given by coordinates.
    pub fn mul_elements(&self, x: &[C], y: &[C]) -> Vec<C> {
        let mut out = vec![C::zero(); self.dim];
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (i, yi) in y.iter().enumerate() {
                if yi.is_zero() {
                    continue;
                }
                let c = xj.mul_ref(yi);
                for (k, ck) in self.product(j, i).iter().enumerate() {
                    if !ck.is_zero() {
                        out[k] = out[k].add_ref(&c.mul_ref(ck));
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, k: usize) -> Vec<C> {
        let mut v = vec![C::zero(); self.dim];
        v[k] = C::one();
        v
    }

    /// Whether `w_0` is a two-sided unit.
    pub fn is_unital(&self) -> bool {
        (0..self.dim).all(|i| {
            let e = self.basis_vector(i);
            self.product(0, i) == e.as_slice() && self.product(i, 0) == e.as_slice()
        })
    }

    /// The first triple that violates associativity, if any.
    pub fn associativity_failure(&self) -> Option<AssocFailure> {
        let d = self.dim;
        let sparse: Vec<Vec<(usize, C)>> = (0..d * d)
            .map(|ji| {
                self.product(ji / d, ji % d)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect()
            })
            .collect();
        let combine = |outer: &[(usize, C)], inner: &dyn Fn(usize) -> usize| {
            let mut acc: Vec<(usize, C)> = Vec::new();
            for (l, c1) in outer {
                for (m, c2) in &sparse[inner(*l)] {
                    let v = c1.mul_ref(c2);
                    match acc.iter_mut().find(|(x, _)| x == m) {
                        Some((_, c)) => *c = c.add_ref(&v),
                        None => acc.push((*m, v)),
                    }
                }
            }
            acc.retain(|(_, c)| !c.is_zero());
            acc.sort_by_key(|(m, _)| *m);
            acc
        };
        for k in 0..d {
            for j in 0..d {
                for i in 0..d {
                    let left = combine(&sparse[k * d + j], &|l| l * d + i);
                    let right = combine(&sparse[j * d + i], &|l| k * d + l);
                    if left != right {
                        return Some(AssocFailure { k, j, i });
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_failure().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|j| (0..self.dim).all(|i| self.product(j, i) == self.product(i, j)))
    }

    /// The opposite algebra: `c'[j][i][k] = c[i][j][k]`.
    pub fn opposite(&self) -> Self {
        AlgebraTable::from_fn(self.dim, |j, i| self.product(i, j).to_vec())
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> AlgebraTable<D> {
        AlgebraTable { dim: self.dim, c: self.c.iter().map(f).collect() }
    }

    /// Nonzero products `(j, i, [(k, c)])` in lexicographic order.
    pub fn nonzero_products(&self) -> Vec<NonzeroProduct<C>> {
        let mut out = Vec::new();
        for j in 0..self.dim {
            for i in 0..self.dim {
                let terms: Vec<(usize, C)> = self
                    .product(j, i)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                if !terms.is_empty() {
                    out.push((j, i, terms));
                }
            }
        }
        out
    }
}

/// A product `w_j w_i` with its nonzero terms `(k, c)`.
pub type NonzeroProduct<C> = (usize, usize, Vec<(usize, C)>);

/// JSON view of a table with printable coefficients.
#[derive(Debug, Clone, Serialize)]
pub struct TableJson {
    pub dim: usize,
    pub products: Vec<ProductJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductJson {
    pub j: usize,
    pub i: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TermJson {
    pub k: usize,
    pub coeff: String,
}

impl<C: Coeff + Display> AlgebraTable<C> {
    pub fn to_json(&self) -> TableJson {
        TableJson {
            dim: self.dim,
            products: self
                .nonzero_products()
                .into_iter()
                .map(|(j, i, terms)| ProductJson {
                    j,
                    i,
                    terms: terms.into_iter().map(|(k, c)| TermJson { k, coeff: c.to_string() }).collect(),
                })
                .collect(),
        }
    }

    /// One line per nonzero product, e.g. `w_3 w_1 = -t_2 w_2 - t_2^2 w_0`.
    /// Products with the unit are skipped unless `with_unit` is set.
    pub fn render_text(&self, with_unit: bool) -> String {
        let mut s = String::new();
        for (j, i, terms) in self.nonzero_products() {
            if !with_unit && (j == 0 || i == 0) {
                continue;
            }
            s.push_str(&format!("w_{j} w_{i} = {}\n", render_element(&terms)));
        }
        s
    }
}

/// Renders `sum c_k w_k` with coefficients in parentheses where needed.
pub fn render_element<C: Coeff + Display>(terms: &[(usize, C)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (k, c)) in terms.iter().enumerate() {
        let text = c.to_string();
        let (neg, body) = match text.strip_prefix('-') {
            Some(rest) if !rest.contains([' ', '+', '-']) => (true, rest.to_string()),
            _ => (false, text.clone()),
        };
        let body = if body.contains([' ', '+', '-']) { format!("({body})") } else { body };
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if body == "1" {
            out.push_str(&format!("w_{k}"));
        } else {
            out.push_str(&format!("{body} w_{k}"));
        }
    }
    out
}
