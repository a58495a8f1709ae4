//! The Kawamata matrix order of a Wahl singularity `1/n^2(1, nq-1)`.
//!
//! A general element `sum a_k w_k` maps to an `n x n` matrix whose entries are
//! signed terms `± t^e a_k`.  Reading off the terms with a fixed `k` gives the
//! basis matrix `M(w_k)`.  Structure constants come from expressing each
//! product `M(w_j) M(w_i)` in that basis over `Z[t]`.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linsolve::{solve_columns, PolyMatrix};
use crate::poly::{Monomial, Poly, Var};
use crate::resarith::WahlParams;
use crate::table::AlgebraTable;
use crate::upoly::{is_polynomial, UPoly};

/// One signed term `sign * t^exp * a_k` of a matrix cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrderTerm {
    pub sign: i8,
    pub exp: u32,
    pub k: u32,
}

/// How to read a maximum over an empty range in the `i < j` and `i > j`
/// cases of the order formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EmptyMax {
    /// The condition containing the empty maximum holds vacuously.  This is
    /// the reading that reproduces every printed matrix.
    NegInfinity,
    /// The condition fails.  Breaks the `(1, j)` cells of five of the eight
    /// printed matrices.
    PosInfinity,
}

/// The cell `(i, j)` (1-based) of the general element, as a sorted set of
/// terms.  `[x]` is the residue of `x` modulo `n^2` in `[0, n^2)` and
/// `f(k) = [k n q] + k`.
pub fn order_entry(w: &WahlParams, i: u32, j: u32, conv: EmptyMax) -> Vec<OrderTerm> {
    let (n, q) = (w.n as i64, w.q as i64);
    let nn = n * n;
    let br = |x: i64| x.rem_euclid(nn);
    let (i, j) = (i as i64, j as i64);
    let ii = br(i * n * q);
    let f = |k: i64| br(k * n * q) + k;
    let max_over = |lo: i64, hi: i64| -> Option<i64> { (lo..=hi).map(f).max() };
    // `lhs > rhs_base + max` with the empty maximum read per `conv`
    let gt = |lhs: i64, base: i64, m: Option<i64>| match (m, conv) {
        (Some(m), _) => lhs > base + m,
        (None, EmptyMax::NegInfinity) => true,
        (None, EmptyMax::PosInfinity) => false,
    };
    let mut terms = BTreeSet::new();
    let mut push = |sign: i8, exp: i64, k: i64| {
        terms.insert(OrderTerm { sign, exp: exp as u32, k: br(k) as u32 });
    };
    if i < j {
        let mn = (i + 1..=j).map(f).min().expect("i < j");
        for r in 0..n {
            if r * n <= ii && ii + i < r * n + mn {
                push(1, r, j - i + r * n);
            }
        }
        for r in 1..=n {
            if r * n > ii && gt(ii + i, r * n - nn, max_over(1, i - 1)) && gt(ii + i, (r - 1) * n - nn, max_over(j, n))
            {
                push(1, r - 1, j - i + r * n - n);
            }
        }
    } else if i > j {
        for r in 1..=n {
            if r * n > ii && gt(ii + i, r * n - nn, max_over(j, i - 1)) {
                push(-1, r, j - i + r * n);
            }
        }
    } else {
        push(1, 0, 0);
        for r in 1..n {
            if r * n > ii {
                push(-1, r, r * n);
            }
        }
    }
    let mut v: Vec<OrderTerm> = terms.into_iter().collect();
    // print order: highest power of t first
    v.sort_by(|a, b| b.exp.cmp(&a.exp).then(b.k.cmp(&a.k)));
    v
}

/// The basis matrices of the order, with cached structure constants.
#[derive(Debug)]
pub struct OrderTable {
    pub wahl: WahlParams,
    /// `cells[i][j]`, 0-based
    pub cells: Vec<Vec<Vec<OrderTerm>>>,
    constants: OnceLock<std::result::Result<AlgebraTable<UPoly>, Error>>,
}

impl Clone for OrderTable {
    fn clone(&self) -> Self {
        let c = OnceLock::new();
        if let Some(v) = self.constants.get() {
            let _ = c.set(v.clone());
        }
        OrderTable { wahl: self.wahl, cells: self.cells.clone(), constants: c }
    }
}

pub fn build_order(w: &WahlParams) -> OrderTable {
    build_order_with(w, EmptyMax::NegInfinity)
}

pub fn build_order_with(w: &WahlParams, conv: EmptyMax) -> OrderTable {
    let n = w.n;
    let cells = (1..=n).map(|i| (1..=n).map(|j| order_entry(w, i, j, conv)).collect()).collect();
    OrderTable { wahl: *w, cells, constants: OnceLock::new() }
}

impl OrderTable {
    pub fn n(&self) -> usize {
        self.wahl.n as usize
    }

    pub fn rank(&self) -> usize {
        self.n() * self.n()
    }

    /// `M(w_k)`: the terms of each cell with coefficient index `k`.
    pub fn basis_matrix(&self, k: u32) -> PolyMatrix {
        self.cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        cell.iter()
                            .filter(|t| t.k == k)
                            .fold(UPoly::zero(), |acc, t| &acc + &UPoly::monomial(t.sign as i64, t.exp as usize))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn basis_matrices(&self) -> Vec<PolyMatrix> {
        (0..self.rank() as u32).map(|k| self.basis_matrix(k)).collect()
    }

    /// The cell as a polynomial in `t` and the `a_k`.
    pub fn cell_poly(&self, i: usize, j: usize) -> Poly {
        let mut p = Poly::zero();
        for t in &self.cells[i][j] {
            let m = Monomial::var(Var::T, t.exp);
            let m = Poly::monomial(t.sign as i64, m);
            p += &(&m * &Poly::var(Var::A(t.k)));
        }
        p
    }

    /// Display of the general element in display-math layout.
    pub fn render_paper(&self) -> String {
        let cells: Vec<Vec<String>> =
            self.cells.iter().map(|row| row.iter().map(|c| render_cell(c)).collect()).collect();
        let n = self.n();
        let widths: Vec<usize> =
            (0..n).map(|j| cells.iter().map(|row| row[j].chars().count()).max().unwrap_or(1)).collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row.iter().enumerate().map(|(j, c)| format!("{c:<w$}", w = widths[j])).collect();
            out.push_str("[ ");
            out.push_str(line.join(" | ").trim_end());
            out.push_str(" ]\n");
        }
        out
    }

    /// LaTeX `matrix` body in display-math layout.
    pub fn render_latex(&self) -> String {
        let mut out = String::new();
        for row in &self.cells {
            let cells: Vec<String> = row.iter().map(|c| render_cell(c)).collect();
            out.push_str(&cells.join("&\n       "));
            out.push_str("\\\\\n");
        }
        out
    }

    /// Structure constants `c[j][i][k]` of `M(w_j) M(w_i)`, computed once.
    pub fn structure_constants(&self) -> Result<&AlgebraTable<UPoly>> {
        self.constants.get_or_init(|| compute_constants(self)).as_ref().map_err(Clone::clone)
    }

    /// Evaluates the basis matrices at `t = tau` and returns the determinant
    /// of the `n^2 x n^2` coefficient matrix; nonzero means they span `Mat_n`.
    pub fn span_determinant(&self, tau: &BigRational) -> BigRational {
        let mats = self.basis_matrices();
        let nn = self.rank();
        let m: Vec<Vec<BigRational>> = (0..nn)
            .map(|cell| (0..nn).map(|k| mats[k][cell / self.n()][cell % self.n()].eval(tau)).collect())
            .collect();
        rational_det(m)
    }
}

fn render_cell(terms: &[OrderTerm]) -> String {
    let mut s = String::new();
    for (idx, t) in terms.iter().enumerate() {
        if t.sign < 0 {
            s.push('-');
        } else if idx > 0 {
            s.push('+');
        }
        match t.exp {
            0 => {}
            1 => s.push_str("t "),
            e => s.push_str(&format!("t^{{{e}}} ")),
        }
        s.push_str(&format!("a_{{{}}}", t.k));
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

fn compute_constants(order: &OrderTable) -> std::result::Result<AlgebraTable<UPoly>, Error> {
    let mats = order.basis_matrices();
    let nn = order.rank();
    let n = order.n();
    let flat = |m: &PolyMatrix| -> Vec<UPoly> { m.iter().flat_map(|r| r.iter().cloned()).collect() };
    let cols: Vec<Vec<UPoly>> = mats.iter().map(flat).collect();
    let products: Vec<Vec<UPoly>> =
        (0..nn * nn).into_par_iter().map(|ji| flat(&matmul(&mats[ji / nn], &mats[ji % nn], n))).collect();
    let coords = solve_columns(&cols, &products)?;
    let mut table = AlgebraTable::zeros(nn);
    for (ji, c) in coords.iter().enumerate() {
        let polys = is_polynomial(c).ok_or_else(|| {
            let idx = c.iter().position(|x| x.as_poly().is_none()).unwrap_or(0);
            Error::NotPolynomial { index: idx, num: c[idx].num.to_string(), den: c[idx].den.to_string() }
        })?;
        table.product_mut(ji / nn, ji % nn).clone_from_slice(&polys);
    }
    Ok(table)
}

pub fn matmul(a: &PolyMatrix, b: &PolyMatrix, n: usize) -> PolyMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(UPoly::zero(), |acc, l| &acc + &(&a[i][l] * &b[l][j]))).collect())
        .collect()
}

/// Determinant over `Q` by Gaussian elimination.
#[allow(clippy::needless_range_loop)]
pub fn rational_det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let piv = m[c][c].clone();
        det *= &piv;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &piv;
            for k in c..n {
                let v = &f * &m[c][k];
                m[r][k] -= v;
            }
        }
    }
    det
}

/// The fiber at `t = tau` as a numeric table.
pub fn fiber_at(constants: &AlgebraTable<UPoly>, tau: &BigRational) -> AlgebraTable<BigRational> {
    constants.map(|c| c.eval(tau))
}

/// The fiber at `t = 0`, which has integer constants.
pub fn zero_fiber(constants: &AlgebraTable<UPoly>) -> AlgebraTable<BigInt> {
    constants.map(|c| c.coeff(0))
}

/// The fiber over `t = ∞` after rescaling `w~_i = w_i / t^n` for `i != 0`.
///
/// For `j, i != 0` the rescaled constant is `c * t^{-n}` when `k != 0` and
/// `c * t^{-2n}` when `k = 0`, so it is polynomial in `1/t` exactly when
/// `deg c <= n`, resp. `2n`.  The limit keeps the coefficient of `t^n`,
/// resp. `t^{2n}`.
pub fn infinity_fiber(constants: &AlgebraTable<UPoly>, n: u32) -> Result<AlgebraTable<BigInt>> {
    let d = constants.dim();
    let n = n as usize;
    let mut out = AlgebraTable::zeros(d);
    for j in 0..d {
        for i in 0..d {
            for k in 0..d {
                let c = constants.get(j, i, k);
                if j == 0 || i == 0 {
                    // the unit is not rescaled; its products are unchanged
                    out.set(j, i, k, c.coeff(0));
                    continue;
                }
                let bound = if k == 0 { 2 * n } else { n };
                if let Some(deg) = c.degree() {
                    if deg > bound {
                        return Err(Error::InfinityDegree { j, i, k, degree: deg, bound });
                    }
                }
                out.set(j, i, k, c.coeff(bound));
            }
        }
    }
    Ok(out)
}

/// Cells that differ from a reference, as `(i, j, ours, theirs)` (1-based).
pub type CellDiff = (usize, usize, Vec<OrderTerm>, Vec<OrderTerm>);

pub fn diff_cells(order: &OrderTable, golden: &[Vec<Vec<OrderTerm>>]) -> Vec<CellDiff> {
    let mut out = Vec::new();
    for (i, row) in order.cells.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            let mut a = cell.clone();
            let mut b = golden.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_default();
            a.sort();
            b.sort();
            if a != b {
                out.push((i + 1, j + 1, a, b));
            }
        }
    }
    out
}

/// Parses the body of a LaTeX `matrix` environment whose cells are sums of
/// `± t^{e} a_{k}` terms.
pub fn parse_golden(src: &str) -> Result<Vec<Vec<Vec<OrderTerm>>>> {
    let mut rows = Vec::new();
    for row in src.split("\\\\") {
        if row.trim().is_empty() {
            continue;
        }
        let mut cells = Vec::new();
        for cell in row.split('&') {
            let p = Poly::parse(cell.trim())?;
            let mut terms = Vec::new();
            for (m, c) in p.terms() {
                let sign: i8 = if *c == BigInt::from(1) {
                    1
                } else if *c == BigInt::from(-1) {
                    -1
                } else {
                    return Err(Error::Other(format!("coefficient {c} in golden cell {cell}")));
                };
                let k = m
                    .factors()
                    .iter()
                    .find_map(|&(v, _)| if let Var::A(k) = v { Some(k) } else { None })
                    .ok_or_else(|| Error::Other(format!("no a_k in golden cell {cell}")))?;
                terms.push(OrderTerm { sign, exp: m.exponent(Var::T), k });
            }
            cells.push(terms);
        }
        rows.push(cells);
    }
    Ok(rows)
}

/// The printed displays shipped with the crate, keyed by `(n, q)`.
pub fn golden_sources() -> Vec<((u32, u32), &'static str)> {
    vec![
        ((3, 1), include_str!("../data/golden/order_n3_q1.tex")),
        ((3, 2), include_str!("../data/golden/order_n3_q2.tex")),
        ((4, 1), include_str!("../data/golden/order_n4_q1.tex")),
        ((4, 3), include_str!("../data/golden/order_n4_q3.tex")),
        ((5, 1), include_str!("../data/golden/order_n5_q1.tex")),
        ((5, 2), include_str!("../data/golden/order_n5_q2.tex")),
        ((5, 3), include_str!("../data/golden/order_n5_q3.tex")),
        ((5, 4), include_str!("../data/golden/order_n5_q4.tex")),
    ]
}

/// The introductory 2x2 example, which is normalised differently.
pub fn example_n2_source() -> &'static str {
    include_str!("../data/golden/example_n2_q1.tex")
}

/// `a_1 -> -a_1`, `a_2 -> -a_2`: carries the formula's `(2,1)` order onto the
/// introductory example.  It is the basis change `w_1 -> -w_1, w_2 -> -w_2`.
pub fn example_n2_reconciliation(terms: &[OrderTerm]) -> Vec<OrderTerm> {
    terms.iter().map(|t| OrderTerm { sign: if t.k == 1 || t.k == 2 { -t.sign } else { t.sign }, ..*t }).collect()
}

/// Compares the built order against a golden matrix.
pub fn check_golden(order: &OrderTable, golden_src: &str) -> Result<Vec<CellDiff>> {
    Ok(diff_cells(order, &parse_golden(golden_src)?))
}
