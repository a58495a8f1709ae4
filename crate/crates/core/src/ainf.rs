//! The A-infinity endomorphism algebra of the Kawamata Lagrangian in the
//! relative Fukaya category, truncated at `m_3`.
//!
//! Generators are `w_i` in degree 0 and `wb_i` (w-bar) in degree 1.  An
//! operation `m_k(a_k, ..., a_1)` is keyed by its inputs in that order.  The
//! table is the sum of the hidden part, which comes from the Lagrangian's
//! local picture and its Gauss word, and the visible part, which counts
//! lattice polygons.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kk::gauss_word;
use crate::poly::{Poly, Var};
use crate::resarith::{LatticePoint, SingularityParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub idx: u32,
    /// 0 for `w_i`, 1 for `wb_i`
    pub deg: u8,
}

impl Gen {
    pub fn w(idx: u32) -> Gen {
        Gen { idx, deg: 0 }
    }
    pub fn wb(idx: u32) -> Gen {
        Gen { idx, deg: 1 }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg == 0 {
            write!(f, "w_{}", self.idx)
        } else {
            write!(f, "wb_{}", self.idx)
        }
    }
}

/// A linear combination of generators.
pub type Combo = BTreeMap<Gen, Poly>;

fn combo_add(c: &mut Combo, g: Gen, v: &Poly) {
    let e = c.entry(g).or_default();
    *e += v;
    if e.is_zero() {
        c.remove(&g);
    }
}

/// Sparse operations `m_k`, keyed by inputs `(a_k, ..., a_1)`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AinfTable {
    pub ops: BTreeMap<Vec<Gen>, Combo>,
}

impl AinfTable {
    pub fn get(&self, inputs: &[Gen]) -> Option<&Combo> {
        self.ops.get(inputs)
    }

    fn set(&mut self, inputs: Vec<Gen>, out: Gen, c: i64) {
        self.ops.insert(inputs, [(out, Poly::constant(c))].into_iter().collect());
    }

    fn add(&mut self, inputs: Vec<Gen>, out: Gen, c: &Poly) {
        let combo = self.ops.entry(inputs.clone()).or_default();
        combo_add(combo, out, c);
        if combo.is_empty() {
            self.ops.remove(&inputs);
        }
    }

    /// Adds every operation of `other` to this one.
    pub fn merge(&mut self, other: &AinfTable) {
        for (k, combo) in &other.ops {
            for (g, c) in combo {
                self.add(k.clone(), *g, c);
            }
        }
    }

    pub fn max_arity(&self) -> usize {
        self.ops.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Every generator appearing as an input or output.
    pub fn generators(&self) -> Vec<Gen> {
        let mut g: Vec<Gen> = self.ops.iter().flat_map(|(k, c)| k.iter().chain(c.keys()).copied()).collect();
        g.sort();
        g.dedup();
        g
    }

    /// Whether each `m_k` shifts degree by `2 - k`.
    pub fn respects_degree(&self) -> bool {
        self.ops.iter().all(|(k, combo)| {
            let input: i64 = k.iter().map(|g| g.deg as i64).sum();
            combo.keys().all(|g| g.deg as i64 == input + 2 - k.len() as i64)
        })
    }

    pub fn substitute(&self, sub: &crate::poly::Substitution) -> AinfTable {
        let mut out = AinfTable::default();
        for (k, combo) in &self.ops {
            for (g, c) in combo {
                out.add(k.clone(), *g, &c.substitute(sub));
            }
        }
        out
    }
}

/// The generators of the Floer complex: `w_i` and `wb_i` for `i` in `Z_r`.
/// There is nothing in degree 2, so the Maurer-Cartan equation is empty.
pub fn complex_generators(p: &SingularityParams) -> Vec<Gen> {
    (0..p.r).map(Gen::w).chain((0..p.r).map(Gen::wb)).collect()
}

/// The hidden products: unit and bar products, the local `m_3` terms, and
/// one pair of `m_3` terms for every sub-interval of the Gauss word.
pub fn hidden_ainf(p: &SingularityParams) -> AinfTable {
    let r = p.r;
    let (w, wb) = (Gen::w, Gen::wb);
    let mut t = AinfTable::default();
    for i in 0..r {
        t.set(vec![w(i), w(0)], w(i), 1);
        t.set(vec![w(0), w(i)], w(i), 1);
        t.set(vec![wb(i), w(0)], wb(i), 1);
        t.set(vec![w(0), wb(i)], wb(i), -1);
        t.set(vec![wb(i), w(i)], wb(0), 1);
        t.set(vec![w(i), wb(i)], wb(0), -1);
    }
    let one = Poly::one();
    let minus = Poly::constant(-1);
    for i in 1..r {
        t.add(vec![wb(i), w(i), wb(i)], wb(i), &minus);
        t.add(vec![wb(i), w(i), wb(0)], wb(0), &minus);
        t.add(vec![w(i), wb(i), wb(0)], wb(0), &one);
    }
    // positions before `half` are the first run r-1, ..., 1 of the word
    let word = gauss_word(p);
    let half = (r - 1) as usize;
    for p1 in 0..word.len() {
        for p2 in p1 + 1..word.len() {
            let (x, y) = (word[p1], word[p2]);
            if p1 >= half {
                t.add(vec![w(y), wb(x), w(x)], w(y), &one);
                t.add(vec![wb(x), w(x), wb(y)], wb(y), &minus);
            } else if p2 >= half {
                t.add(vec![w(x), wb(x), wb(y)], wb(y), &one);
                t.add(vec![w(y), w(x), wb(x)], w(y), &minus);
            } else {
                t.add(vec![wb(y), w(x), wb(x)], wb(y), &minus);
                t.add(vec![w(x), wb(x), w(y)], w(y), &minus);
            }
        }
    }
    t
}

/// A permitted rectangle in the lattice model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rect {
    pub y0: i64,
    pub width: i64,
    pub height: i64,
    /// the SW corner is orange, so it is rounded off
    pub sw_orange: bool,
    /// the NE corner is orange; the polygon then crosses the black marked
    /// point and carries a factor of `s`
    pub ne_orange: bool,
}

/// Rectangles with SW corner `(0, y0)` for `y0` in `[0, r)` and sides in
/// `1..=r` whose only orange points, if any, are the SW and NE corners.
/// Longer sides always contain an orange point, so the list is exhaustive up
/// to translation by the orange lattice.
pub fn permitted_rectangles(p: &SingularityParams, y0: i64) -> Vec<Rect> {
    let r = p.r as i64;
    let b = p.b as i64;
    let mut out = Vec::new();
    for width in 1..=r {
        for height in 1..=r {
            let (x1, y1) = (width, y0 + height);
            let (mut ok, mut sw, mut ne) = (true, false, false);
            'cols: for x in 0..=x1 {
                let target = (b * x).rem_euclid(r);
                let mut y = y0 + (target - y0).rem_euclid(r);
                while y <= y1 {
                    if (x, y) == (0, y0) {
                        sw = true;
                    } else if (x, y) == (x1, y1) {
                        ne = true;
                    } else {
                        ok = false;
                        break 'cols;
                    }
                    y += r;
                }
            }
            if ok {
                out.push(Rect { y0, width, height, sw_orange: sw, ne_orange: ne });
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Corner {
    /// NW or SE: a `w` comes in, a `wb` goes out
    Convex(u32),
    /// SW or NE: a `wb` comes in, a `w` goes out
    Concave(u32),
    /// the unit `e = w_0`, only ever an output
    E,
    /// `q = wb_0`, only ever an input
    Q,
}

impl Corner {
    fn as_input(self) -> Gen {
        match self {
            Corner::Convex(l) => Gen::w(l),
            Corner::Concave(l) => Gen::wb(l),
            Corner::Q => Gen::wb(0),
            Corner::E => unreachable!("e is never an input"),
        }
    }
    fn as_output(self) -> Gen {
        match self {
            Corner::Convex(l) => Gen::wb(l),
            Corner::Concave(l) => Gen::w(l),
            Corner::E => Gen::w(0),
            Corner::Q => unreachable!("q is never an output"),
        }
    }
}

/// Contributions `(inputs, output, coefficient)` of one rectangle.
///
/// The marked points are listed counter-clockwise from the NW corner.  Each
/// choice of output gives an operation whose inputs are the following
/// points in counter-clockwise order; `m_4` terms are dropped.  The sign is
/// `(-1)^d` where `d` sums the degrees of the used points strictly after the
/// SE corner, up to and including NW.
fn rect_contributions(p: &SingularityParams, rc: &Rect) -> Vec<(Vec<Gen>, Gen, Poly)> {
    let g = |x: i64, y: i64| p.gamma(LatticePoint::new(x, y));
    let (x0, y0, x1, y1) = (0, rc.y0, rc.width, rc.y0 + rc.height);
    let weight = if rc.ne_orange { Poly::s() } else { Poly::one() };
    let mut pts = vec![Corner::Convex(g(x0, y1))];
    if !rc.sw_orange {
        pts.push(Corner::Concave(g(x0, y0)));
    }
    let se = pts.len();
    pts.push(Corner::Convex(g(x1, y0)));
    if rc.ne_orange {
        pts.push(Corner::E);
        pts.push(Corner::Q);
    } else {
        pts.push(Corner::Concave(g(x1, y1)));
    }
    let m = pts.len();
    let mut out = Vec::new();
    for oi in 0..m {
        if pts[oi] == Corner::Q {
            continue;
        }
        let q_options: &[bool] = if rc.ne_orange { &[false, true] } else { &[false] };
        for &use_q in q_options {
            let seq: Vec<usize> = (1..m)
                .map(|k| (oi + k) % m)
                .filter(|&j| match pts[j] {
                    Corner::E => false,
                    Corner::Q => use_q,
                    _ => true,
                })
                .collect();
            if seq.is_empty() || seq.len() > 3 {
                continue;
            }
            let output = pts[oi].as_output();
            let inputs: Vec<Gen> = seq.iter().map(|&j| pts[j].as_input()).collect();
            let mut d = 0u32;
            for j in (se + 1..m).chain(std::iter::once(0)) {
                if j == oi {
                    d += output.deg as u32;
                } else if seq.contains(&j) {
                    d += pts[j].as_input().deg as u32;
                }
            }
            let sign = if d % 2 == 1 { -1 } else { 1 };
            let key: Vec<Gen> = inputs.into_iter().rev().collect();
            out.push((key, output, weight.scale(sign)));
        }
    }
    out
}

/// The visible operations: sums over permitted rectangles and their
/// degenerations (the orange corners).  Rectangles are processed in order
/// of SW corner, then width, then height.
pub fn visible_contributions(p: &SingularityParams) -> AinfTable {
    let per_row: Vec<Vec<(Vec<Gen>, Gen, Poly)>> = (0..p.r as i64)
        .into_par_iter()
        .map(|y0| permitted_rectangles(p, y0).iter().flat_map(|rc| rect_contributions(p, rc)).collect())
        .collect();
    let mut t = AinfTable::default();
    for row in per_row {
        for (k, g, c) in row {
            t.add(k, g, &c);
        }
    }
    t
}

/// Hidden plus visible operations.
pub fn full_ainf(p: &SingularityParams) -> AinfTable {
    let mut t = hidden_ainf(p);
    t.merge(&visible_contributions(p));
    t
}

/// The operations `m_1^b` and `m_2^b` deformed by `b = sum t_i wb_i`.
pub struct Deformed<'a> {
    ops: &'a AinfTable,
    cochain: Vec<(Gen, Poly)>,
}

/// Prepares insertion of the cochain with coefficients `t[i]` (`t[0]` is
/// ignored; it is fixed to zero).
pub fn insert_cochain<'a>(ops: &'a AinfTable, t: &[Poly]) -> Result<Deformed<'a>> {
    let ar = ops.max_arity();
    if ar > 3 {
        return Err(Error::ArityTooHigh(ar));
    }
    let cochain = t
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (Gen::wb(i as u32), c.clone()))
        .collect();
    Ok(Deformed { ops, cochain })
}

impl Deformed<'_> {
    fn acc(&self, out: &mut Combo, inputs: &[Gen], coef: &Poly) {
        if let Some(combo) = self.ops.get(inputs) {
            for (g, c) in combo {
                let e = out.entry(*g).or_default();
                e.add_scaled(c, coef);
            }
        }
    }

    fn clean(mut c: Combo) -> Combo {
        c.retain(|_, v| !v.is_zero());
        c
    }

    /// `m_1(x) + m_2(b,x) + m_2(x,b) + m_3(b,b,x) + m_3(b,x,b) + m_3(x,b,b)`
    pub fn m1(&self, x: Gen) -> Combo {
        let mut out = Combo::new();
        self.acc(&mut out, &[x], &Poly::one());
        for (g, c) in &self.cochain {
            self.acc(&mut out, &[*g, x], c);
            self.acc(&mut out, &[x, *g], c);
            for (g2, c2) in &self.cochain {
                let cc = c * c2;
                self.acc(&mut out, &[*g, *g2, x], &cc);
                self.acc(&mut out, &[*g, x, *g2], &cc);
                self.acc(&mut out, &[x, *g, *g2], &cc);
            }
        }
        Self::clean(out)
    }

    /// `m_2(x,y) + m_3(b,x,y) + m_3(x,b,y) + m_3(x,y,b)`
    pub fn m2(&self, x: Gen, y: Gen) -> Combo {
        let mut out = Combo::new();
        self.acc(&mut out, &[x, y], &Poly::one());
        for (g, c) in &self.cochain {
            self.acc(&mut out, &[*g, x, y], c);
            self.acc(&mut out, &[x, *g, y], c);
            self.acc(&mut out, &[x, y, *g], c);
        }
        Self::clean(out)
    }
}

/// Symbolic cochain coefficients `t_1, ..., t_{r-1}` (and `t_0 = 0`).
pub fn symbolic_cochain(r: u32) -> Vec<Poly> {
    (0..r).map(|i| if i == 0 { Poly::zero() } else { Poly::var(Var::TSub(i)) }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r2_hidden_m3() {
        let p = SingularityParams::new(2, 1).unwrap();
        let h = hidden_ainf(&p);
        // m_3(x, x, xbar) = -x with x = w_1
        let c = h.get(&[Gen::w(1), Gen::w(1), Gen::wb(1)]).unwrap();
        assert_eq!(c.get(&Gen::w(1)), Some(&Poly::constant(-1)));
    }

    #[test]
    fn r2_visible() {
        let p = SingularityParams::new(2, 1).unwrap();
        let v = visible_contributions(&p);
        let s = Poly::s();
        assert_eq!(v.get(&[Gen::w(1), Gen::w(1)]).unwrap().get(&Gen::w(0)), Some(&s));
        assert_eq!(v.get(&[Gen::wb(0), Gen::w(1)]).unwrap().get(&Gen::wb(1)), Some(&s));
        assert_eq!(v.get(&[Gen::w(1), Gen::wb(0)]).unwrap().get(&Gen::wb(1)), Some(&-&s));
    }

    #[test]
    fn degrees_are_respected() {
        for p in SingularityParams::all_up_to(9) {
            let t = full_ainf(&p);
            assert!(t.respects_degree(), "{p:?}");
            assert!(t.max_arity() <= 3);
        }
    }
}
