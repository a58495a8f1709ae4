//! Deformations of `R_{r,a}` by bounding cochains.
//!
//! Inserting `b = sum t_i wb_i` into the A-infinity operations gives a
//! differential `d w_i = sum m_ij wb_j`.  The matrix `D = (m_ij)` is skew
//! and its entries cut out the locus `Def0` over which
//! `(hom^0, m_2^b)` is a flat family of associative algebras.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::ainf::{full_ainf, insert_cochain, symbolic_cochain, AinfTable, Gen};
use crate::error::{Error, Result};
use crate::parse::{self, Interp};
use crate::poly::{Poly, Substitution, Var};
use crate::resarith::{SingularityParams, WahlParams};
use crate::table::AlgebraTable;

/// `m[i-1][j-1]` is the coefficient of `wb_j` in `m_1^b(w_i)`, for
/// `1 <= i, j < r`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiffMatrix {
    pub r: u32,
    pub m: Vec<Vec<Poly>>,
    /// coefficient of `wb_0` in `m_1^b(w_i)`, listed for `i = 1..r`; always
    /// zero in practice, kept so that claim can be checked
    pub unit_column: Vec<Poly>,
}

impl DiffMatrix {
    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.m[i - 1][j - 1]
    }

    pub fn is_skew(&self) -> bool {
        let n = self.m.len();
        (0..n).all(|i| self.m[i][i].is_zero() && (0..n).all(|j| self.m[i][j] == -&self.m[j][i]))
    }

    /// Nonzero strictly upper entries `(i, j, m_ij)`.
    pub fn upper_entries(&self) -> Vec<(usize, usize, Poly)> {
        let n = self.m.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.m[i][j].is_zero() {
                    out.push((i + 1, j + 1, self.m[i][j].clone()));
                }
            }
        }
        out
    }

    pub fn substitute(&self, sub: &Substitution) -> DiffMatrix {
        DiffMatrix {
            r: self.r,
            m: self.m.iter().map(|row| row.iter().map(|x| x.substitute(sub)).collect()).collect(),
            unit_column: self.unit_column.iter().map(|x| x.substitute(sub)).collect(),
        }
    }

    /// The first nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &Poly)> {
        for (i, row) in self.m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    return Some((i + 1, j + 1, x));
                }
            }
        }
        None
    }
}

fn diff_from_ops(p: &SingularityParams, ops: &AinfTable, t: &[Poly]) -> DiffMatrix {
    let d = insert_cochain(ops, t).expect("tables built here stop at m_3");
    let r = p.r as usize;
    let mut m = vec![vec![Poly::zero(); r - 1]; r - 1];
    let mut unit_column = vec![Poly::zero(); r - 1];
    for i in 1..r {
        for (g, c) in d.m1(Gen::w(i as u32)) {
            assert_eq!(g.deg, 1, "m_1 of a degree 0 generator has degree 1");
            if g.idx == 0 {
                unit_column[i - 1] = c;
            } else {
                m[i - 1][g.idx as usize - 1] = c;
            }
        }
    }
    DiffMatrix { r: p.r, m, unit_column }
}

/// `D` over `Z[s, t_1, ..., t_{r-1}]`.
pub fn diff_matrix(p: &SingularityParams) -> DiffMatrix {
    diff_from_ops(p, &full_ainf(p), &symbolic_cochain(p.r))
}

/// The generators of the ideal of `Def0`: the strictly upper entries of `D`.
pub fn def0_generators(p: &SingularityParams) -> Vec<Poly> {
    diff_matrix(p).upper_entries().into_iter().map(|(_, _, x)| x).collect()
}

/// The closed formula for `D` when `a = 1`: `m_ij = sum_{k=i}^{j-1}
/// t_k t_{i+j-k}` for `i < j`, plus `s` in `m_{1,r-1}` when `r > 2`.
pub fn a1_formula(r: u32) -> DiffMatrix {
    let n = (r - 1) as usize;
    let mut m = vec![vec![Poly::zero(); n]; n];
    for i in 1..r {
        for j in i + 1..r {
            let mut x = Poly::zero();
            for k in i..j {
                x += &(&Poly::t_sub(k) * &Poly::t_sub(i + j - k));
            }
            if r > 2 && i == 1 && j == r - 1 {
                x += &Poly::s();
            }
            m[j as usize - 1][i as usize - 1] = -&x;
            m[i as usize - 1][j as usize - 1] = x;
        }
    }
    DiffMatrix { r, m, unit_column: vec![Poly::zero(); n] }
}

/// A point of the cochain space, given by polynomial images of `t_i` and
/// `s`.  Unassigned `t_i` are zero, an unassigned `s` stays free, and `t_0`
/// is always zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CochainSpec {
    pub r: u32,
    pub t: Vec<Poly>,
    pub s: Option<Poly>,
}

impl CochainSpec {
    pub fn zero(r: u32) -> Self {
        CochainSpec { r, t: vec![Poly::zero(); r as usize], s: None }
    }

    /// Every `t_i` and `s` left free.
    pub fn generic(r: u32) -> Self {
        CochainSpec { r, t: symbolic_cochain(r), s: None }
    }

    pub fn with_t(mut self, i: u32, v: Poly) -> Self {
        self.t[i as usize] = v;
        self
    }

    pub fn with_s(mut self, v: Poly) -> Self {
        self.s = Some(v);
        self
    }

    /// Reads lines `t_<i> = <poly>` and `s = <poly>`; `#` starts a comment.
    pub fn parse(src: &str, r: u32) -> Result<Self> {
        let mut spec = CochainSpec::zero(r);
        for (lineno, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Parse { pos: lineno + 1, msg: format!("line {}: {msg}", lineno + 1) };
            let (lhs, rhs) = line.split_once('=').ok_or_else(|| bad("expected '='".into()))?;
            let value = Poly::parse(rhs.trim()).map_err(|e| bad(e.to_string()))?;
            let target = Poly::parse(lhs.trim()).map_err(|e| bad(e.to_string()))?;
            match target.vars().as_slice() {
                [Var::S] if target == Poly::s() => spec.s = Some(value),
                [Var::TSub(i)] if target == Poly::t_sub(*i) => {
                    if *i >= r {
                        return Err(bad(format!("t_{i} out of range for r = {r}")));
                    }
                    if *i == 0 && !value.is_zero() {
                        return Err(bad("t_0 is fixed to 0".into()));
                    }
                    spec.t[*i as usize] = value;
                }
                _ => return Err(bad(format!("cannot assign to {}", lhs.trim()))),
            }
        }
        Ok(spec)
    }

    /// The substitution sending each `t_i` (and `s`, when set) to its image.
    pub fn substitution(&self) -> Substitution {
        let mut sub: Substitution = (0..self.r).map(|i| (Var::TSub(i), self.t[i as usize].clone())).collect();
        if let Some(s) = &self.s {
            sub.insert(Var::S, s.clone());
        }
        sub
    }

    fn s_substitution(&self) -> Substitution {
        self.s.iter().map(|s| (Var::S, s.clone())).collect()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.t.iter().enumerate() {
            if !v.is_zero() {
                out.push_str(&format!("t_{i} = {v}\n"));
            }
        }
        if let Some(s) = &self.s {
            out.push_str(&format!("s = {s}\n"));
        }
        out
    }
}

/// The A-infinity table with `s` already replaced by the spec's value.
fn specialized_ops(p: &SingularityParams, spec: &CochainSpec) -> AinfTable {
    full_ainf(p).substitute(&spec.s_substitution())
}

/// `D` evaluated at the spec.
pub fn diff_at(p: &SingularityParams, spec: &CochainSpec) -> DiffMatrix {
    diff_from_ops(p, &specialized_ops(p, spec), &spec.t)
}

/// Whether the spec lies in `Def0`; on failure the first nonzero entry of
/// `D` is reported.
pub fn check_point(p: &SingularityParams, spec: &CochainSpec) -> Result<()> {
    let d = diff_at(p, spec);
    if let Some((i, j, v)) = d.first_nonzero() {
        return Err(Error::NotInDef0 { i, j, value: v.to_string() });
    }
    if let Some((k, v)) = d.unit_column.iter().enumerate().find(|(_, v)| !v.is_zero()) {
        return Err(Error::NotInDef0 { i: k + 1, j: 0, value: v.to_string() });
    }
    Ok(())
}

/// The multiplication `w_j w_i = m_2^b(w_j, w_i)` over a point of `Def0`.
/// Both inputs have degree 0, so the sign `(-1)^{|w_i|}` is trivial.
pub fn deformed_table(p: &SingularityParams, spec: &CochainSpec) -> Result<AlgebraTable<Poly>> {
    check_point(p, spec)?;
    Ok(deformed_table_unchecked(p, spec))
}

/// As [`deformed_table`] without the `Def0` check.
pub fn deformed_table_unchecked(p: &SingularityParams, spec: &CochainSpec) -> AlgebraTable<Poly> {
    let ops = specialized_ops(p, spec);
    let d = insert_cochain(&ops, &spec.t).expect("tables built here stop at m_3");
    let r = p.r as usize;
    AlgebraTable::from_fn(r, |j, i| {
        let mut v = vec![Poly::zero(); r];
        for (g, c) in d.m2(Gen::w(j as u32), Gen::w(i as u32)) {
            assert_eq!(g.deg, 0, "m_2 preserves degree");
            v[g.idx as usize] = c;
        }
        v
    })
}

/// The bounding cochain on the Wahl locus: `t_{nk} = t^k` for
/// `k = 1, ..., n-1`, every other `t_i = 0`, and `s = s_sign * t^n`.
///
/// With this crate's orientation conventions the cochain lies in `Def0`
/// exactly when `s_sign = -1`; see [`wahl_cochain`].
pub fn wahl_cochain_with_sign(w: &WahlParams, s_sign: i64) -> CochainSpec {
    let r = w.n * w.n;
    let mut spec = CochainSpec::zero(r);
    for k in 1..w.n {
        spec.t[(w.n * k) as usize] = Poly::t_pow(1, k);
    }
    spec.s = Some(Poly::t_pow(s_sign, w.n));
    spec
}

/// The Wahl cochain `t_{nk} = t^k`, `s = -t^n`.  The sign of `s` matches the
/// `a = 1` differential (whose `m_{1,3}` is `t_1 t_3 + t_2^2 + s` at `r = 4`)
/// and the second component `s = -t_2^2` of `1/4(1,1)`.
pub fn wahl_cochain(w: &WahlParams) -> CochainSpec {
    wahl_cochain_with_sign(w, -1)
}

struct RelationInterp<'a> {
    table: &'a AlgebraTable<Poly>,
}

impl Interp for RelationInterp<'_> {
    type Value = Vec<Poly>;
    fn int(&self, c: BigInt) -> Vec<Poly> {
        let mut v = vec![Poly::zero(); self.table.dim()];
        v[0] = Poly::constant(c);
        v
    }
    fn symbol(&self, name: &str, index: Option<u32>) -> std::result::Result<Vec<Poly>, String> {
        let dim = self.table.dim();
        let mut v = vec![Poly::zero(); dim];
        if name == "w" {
            let k = index.ok_or("w needs an index")? as usize;
            if k >= dim {
                return Err(format!("w_{k} out of range"));
            }
            v[k] = Poly::one();
        } else {
            v[0] = Var::from_symbol(name, index).map(Poly::var).ok_or(format!("unknown symbol {name}"))?;
        }
        Ok(v)
    }
    fn add(&self, a: Vec<Poly>, b: Vec<Poly>) -> Vec<Poly> {
        a.iter().zip(&b).map(|(x, y)| x + y).collect()
    }
    fn mul(&self, a: Vec<Poly>, b: Vec<Poly>) -> Vec<Poly> {
        self.table.mul_elements(&a, &b)
    }
    fn neg(&self, a: Vec<Poly>) -> Vec<Poly> {
        a.iter().map(|x| -x).collect()
    }
}

/// Evaluates a noncommutative expression such as `w_3w_1 - t_2w_2 + t_2^2`
/// in a deformed algebra.  Scalars are multiples of `w_0`.
pub fn eval_relation(table: &AlgebraTable<Poly>, text: &str) -> Result<Vec<Poly>> {
    parse::parse_expr(text, &RelationInterp { table })
}

/// An ideal given by generators, as printed.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedIdeal {
    pub name: String,
    pub generators: Vec<Poly>,
}

/// Reads lines `I_1: gen, gen, ...`; `#` starts a comment.
pub fn parse_ideals(src: &str) -> Result<Vec<NamedIdeal>> {
    let mut out = Vec::new();
    for raw in src.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, body) =
            line.split_once(':').ok_or_else(|| Error::Parse { pos: 0, msg: format!("missing ':' in {line}") })?;
        let generators = body.split(',').map(|g| Poly::parse(g.trim())).collect::<Result<Vec<_>>>()?;
        out.push(NamedIdeal { name: name.trim().to_string(), generators });
    }
    Ok(out)
}

/// Turns an ideal whose generators are each `±v + (terms without v)` into
/// the parametrization `v = ...`, then composes the assignments until no
/// solved variable is left on a right-hand side.  Variables that are never
/// solved for are the free parameters of the component.
pub fn parametrize(ideal: &NamedIdeal) -> Result<Substitution> {
    let mut sub = Substitution::new();
    for g in &ideal.generators {
        let pick = g.vars().into_iter().find(|&v| {
            let lin = Poly::var(v);
            let c = g.coefficient(lin.terms().next().unwrap().0);
            (c == BigInt::from(1) || c == BigInt::from(-1))
                && g.degree_in(v) == 1
                && g.terms().filter(|(m, _)| m.exponent(v) > 0).count() == 1
                && !sub.contains_key(&v)
        });
        let v = pick.ok_or_else(|| Error::Other(format!("{}: cannot solve {g} for a variable", ideal.name)))?;
        let lin = Poly::var(v);
        let c = g.coefficient(lin.terms().next().unwrap().0);
        // c v + rest = 0  =>  v = -rest / c, and c = ±1
        let rest = g - &lin.scale(c.clone());
        let image = if c == BigInt::from(1) { -&rest } else { rest };
        sub.insert(v, image);
    }
    for _ in 0..=sub.len() {
        let next: Substitution = sub.iter().map(|(v, img)| (*v, img.substitute(&sub))).collect();
        if next == sub {
            return Ok(sub);
        }
        sub = next;
    }
    Err(Error::Other(format!("{}: the assignments are cyclic", ideal.name)))
}

/// The spec for a parametrized component, in terms of its free variables.
pub fn spec_from_substitution(r: u32, sub: &Substitution) -> CochainSpec {
    let mut spec = CochainSpec::generic(r);
    for (v, img) in sub {
        match v {
            Var::S => spec.s = Some(img.clone()),
            Var::TSub(i) if *i < r => spec.t[*i as usize] = img.clone(),
            _ => {}
        }
    }
    spec
}

/// Substitutes each generator of `D` at a parametrized component; the
/// component lies in `Def0` when every result is zero.
pub fn nonvanishing_on(p: &SingularityParams, sub: &Substitution) -> Vec<(usize, usize, Poly)> {
    let d = diff_matrix(p).substitute(sub);
    d.upper_entries()
}

/// Zero-point specialisation: every variable sent to zero.
pub fn at_origin(table: &AlgebraTable<Poly>) -> AlgebraTable<BigInt> {
    table.map(|c| c.constant_term())
}

/// Variables appearing anywhere in a table.
pub fn table_vars(table: &AlgebraTable<Poly>) -> Vec<Var> {
    let mut seen = BTreeMap::new();
    for (_, _, terms) in table.nonzero_products() {
        for (_, c) in terms {
            for v in c.vars() {
                seen.insert(v, ());
            }
        }
    }
    seen.into_keys().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r2_deformation() {
        let p = SingularityParams::new(2, 1).unwrap();
        let spec = CochainSpec::generic(2);
        let t = deformed_table(&p, &spec).unwrap();
        assert_eq!(t.product(1, 1), &[Poly::s(), -&Poly::t_sub(1)][..]);
    }

    #[test]
    fn spec_parsing() {
        let spec = CochainSpec::parse("# comment\nt_2 = t\ns = -t^2\n", 4).unwrap();
        assert_eq!(spec.t[2], Poly::t());
        assert_eq!(spec.s, Some(Poly::t_pow(-1, 2)));
        assert!(CochainSpec::parse("t_9 = 1", 4).is_err());
        assert!(CochainSpec::parse("t_0 = 1", 4).is_err());
        assert!(CochainSpec::parse("t_1 t_2 = 1", 4).is_err());
    }

    #[test]
    fn parametrization_composes() {
        let ideal = parse_ideals("I: t_2 t_5 - t_7, t_5 t_7 - t_12, t_7 t_12 + s").unwrap().remove(0);
        let sub = parametrize(&ideal).unwrap();
        assert_eq!(sub[&Var::TSub(12)], Poly::parse("t_2 t_5^2").unwrap());
        assert_eq!(sub[&Var::S], Poly::parse("-t_2^2 t_5^3").unwrap());
    }
}
