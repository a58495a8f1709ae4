//! The verification suites behind `wahl-order verify`.
//!
//! Each check corresponds to one acceptance criterion and reports the first
//! counterexample it meets.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::ainf::{complex_generators, full_ainf, hidden_ainf};
use crate::deform::{
    a1_formula, check_point, deformed_table, diff_matrix, eval_relation, nonvanishing_on, parametrize, parse_ideals,
    wahl_cochain, wahl_cochain_with_sign, CochainSpec,
};
use crate::iso::{check_map, BasisMap};
use crate::kk::{kk_product_closed, kk_product_rect, kk_product_young, kk_table, nontrivial_products, young_diagram};
use crate::order::{
    build_order, build_order_with, check_golden, diff_cells, example_n2_reconciliation, golden_sources, matmul,
    parse_golden, EmptyMax,
};
use crate::poly::{Poly, Var};
use crate::resarith::{SingularityParams, WahlParams};
use crate::table::AlgebraTable;
use crate::upoly::UPoly;
use crate::wahl::{cross_check, fiber_report};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&format!(
                "[{}] {:>2}. {} ({} ms): {}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.name,
                c.elapsed_ms,
                c.detail
            ));
            if let Some(ce) = &c.counterexample {
                s.push_str(&format!("       counterexample: {ce}\n"));
            }
        }
        s
    }
}

/// Parameter ranges for the checks; the defaults are the published ranges.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Bounds {
    pub kk_r: u32,
    pub commutative_r: u32,
    pub a1_r: u32,
    pub skew_r: u32,
    pub wahl_n: u32,
    pub first_component_r: u32,
    pub order_n: u32,
    pub cross_n: u32,
    pub mc_r: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            kk_r: 32,
            commutative_r: 20,
            a1_r: 16,
            skew_r: 20,
            wahl_n: 6,
            first_component_r: 8,
            order_n: 5,
            cross_n: 4,
            mc_r: 32,
        }
    }
}

impl Bounds {
    /// Applies `--max-r` and `--max-n`.  An `r` bound replaces the ranges of
    /// the algebra checks and caps the differential checks; an `n` bound
    /// replaces every Wahl range.
    pub fn with_limits(mut self, max_r: Option<u32>, max_n: Option<u32>) -> Self {
        if let Some(r) = max_r {
            self.kk_r = r;
            self.commutative_r = r;
            self.mc_r = r;
            self.a1_r = self.a1_r.min(r);
            self.skew_r = self.skew_r.min(r);
            self.first_component_r = self.first_component_r.min(r);
        }
        if let Some(n) = max_n {
            self.wahl_n = n;
            self.order_n = n;
            self.cross_n = n;
        }
        self
    }
}

fn run(id: u32, name: &str, f: impl FnOnce() -> std::result::Result<String, (String, String)>) -> Check {
    let start = Instant::now();
    let out = f();
    let elapsed_ms = start.elapsed().as_millis();
    match out {
        Ok(detail) => Check { id, name: name.into(), passed: true, detail, elapsed_ms, counterexample: None },
        Err((detail, ce)) => {
            Check { id, name: name.into(), passed: false, detail, elapsed_ms, counterexample: Some(ce) }
        }
    }
}

fn fail<T>(detail: &str, ce: impl ToString) -> std::result::Result<T, (String, String)> {
    Err((detail.to_string(), ce.to_string()))
}

/// Criterion 1: the three product rules agree; tables are unital and
/// associative.
pub fn kk_equivalence(max_r: u32) -> Check {
    run(1, "KK oracle equivalence", || {
        let all = SingularityParams::all_up_to(max_r);
        let bad = all.par_iter().find_map_first(|p| {
            let d = young_diagram(p);
            for j in 0..p.r as i64 {
                for i in 0..p.r as i64 {
                    let c = kk_product_closed(p, j, i);
                    if c != kk_product_rect(p, j, i) || c != kk_product_young(p, &d, j, i) {
                        return Some(format!("(r,a)=({},{}) j={j} i={i}", p.r, p.a));
                    }
                }
            }
            let t = kk_table(p);
            if !t.is_unital() {
                return Some(format!("(r,a)=({},{}) not unital", p.r, p.a));
            }
            if let Some(f) = t.associativity_failure() {
                return Some(format!("(r,a)=({},{}) non-associative at {f:?}", p.r, p.a));
            }
            None
        });
        match bad {
            Some(ce) => fail("product rules disagree", ce),
            None => Ok(format!("{} pairs (r <= {max_r}), all r^2 products", all.len())),
        }
    })
}

/// Criterion 2: the nontrivial products of `R_{9,2}`.
pub fn table_9_2() -> Check {
    run(2, "Table (9,2)", || {
        let p = SingularityParams::new(9, 2).expect("valid");
        let got = nontrivial_products(&kk_table(&p));
        let want = vec![(4, 1, 5), (4, 2, 6), (4, 3, 7), (4, 4, 8)];
        if got == want {
            Ok("w_4w_1=w_5, w_4w_2=w_6, w_4w_3=w_7, w_4^2=w_8".into())
        } else {
            fail("unexpected products", format!("{got:?}"))
        }
    })
}

/// Criterion 3: `a = r-1` gives truncated polynomials, `a = 1` a square-zero
/// radical, and no other `a` gives a commutative algebra.
pub fn commutative_cases(max_r: u32) -> Check {
    run(3, "Commutative characterizations", || {
        for p in SingularityParams::all_up_to(max_r) {
            let t = kk_table(&p);
            let r = p.r as usize;
            if p.a == p.r - 1 {
                for j in 0..r {
                    for i in 0..r {
                        let want = if i + j < r { Some(i + j) } else { None };
                        let got = t.product(j, i).iter().position(|&c| c == 1);
                        if got != want {
                            return fail("not truncated polynomial", format!("r={r} j={j} i={i}"));
                        }
                    }
                }
            }
            if p.a == 1 && !nontrivial_products(&t).is_empty() {
                return fail("radical not square-zero", format!("r={r}"));
            }
            let comm = t.is_commutative();
            if comm != (p.a == 1 || p.a == p.r - 1) {
                return fail("commutativity mismatch", format!("(r,a)=({},{}) commutative={comm}", p.r, p.a));
            }
        }
        Ok(format!("r <= {max_r}"))
    })
}

/// The relabeling `w_k -> w_{-ak}` under which `R_{r,a}` is the opposite of
/// `R_{r,b}`.  Reflecting the orange lattice in the diagonal sends a point
/// labelled `gamma` to one labelled `-a gamma`.
pub fn duality_map(p: &SingularityParams) -> BasisMap {
    let r = p.r as usize;
    BasisMap { unit: (r - p.a as usize) % r, opposite: false, signs: vec![1; r] }
}

/// Criterion 4: `R_{r,a}` is opposite to `R_{r,b}`.
pub fn opposite_duality(max_r: u32) -> Check {
    run(4, "Opposite duality", || {
        let all = SingularityParams::all_up_to(max_r);
        let mut literal = 0;
        for p in &all {
            let a = kk_table(p);
            let op = kk_table(&p.dual()).opposite();
            if let Some((j, i)) = check_map(&a, &op, &duality_map(p)) {
                return fail("tables differ", format!("(r,a)=({},{}) at w_{j} w_{i}", p.r, p.a));
            }
            if a == op {
                literal += 1;
            }
        }
        Ok(format!("{} pairs, r <= {max_r}, via w_k -> w_(-ak); without relabeling {literal} pairs agree", all.len()))
    })
}

/// Criterion 5: the `a = 1` closed formula, and skew-symmetry for all `a`.
pub fn diff_matrix_checks(a1_r: u32, skew_r: u32) -> Check {
    run(5, "D for a=1 and skew-symmetry", || {
        for r in 2..=a1_r {
            let p = SingularityParams::new(r as i64, 1).expect("valid");
            let d = diff_matrix(&p);
            if d != a1_formula(r) {
                return fail("a=1 formula mismatch", format!("r={r}"));
            }
        }
        let all = SingularityParams::all_up_to(skew_r);
        let bad = all.par_iter().find_map_first(|p| {
            let d = diff_matrix(p);
            if !d.is_skew() {
                Some(format!("(r,a)=({},{}) not skew", p.r, p.a))
            } else if d.unit_column.iter().any(|x| !x.is_zero()) {
                Some(format!("(r,a)=({},{}) has a wb_0 component", p.r, p.a))
            } else {
                None
            }
        });
        match bad {
            Some(ce) => fail("skew-symmetry fails", ce),
            None => Ok(format!("a=1 formula r <= {a1_r}; skew for {} pairs r <= {skew_r}", all.len())),
        }
    })
}

/// The ideals shipped with the crate.
pub fn shipped_ideals() -> Vec<((u32, u32), &'static str)> {
    vec![((15, 4), include_str!("../data/ideals/r15_a4.txt")), ((19, 7), include_str!("../data/ideals/r19_a7.txt"))]
}

/// Criterion 6: every printed component lies in `Def0`.
pub fn component_checks() -> Check {
    run(6, "Component substitution checks", || {
        let mut notes = Vec::new();
        for ((r, a), src) in shipped_ideals() {
            let p = SingularityParams::new(r as i64, a as i64).expect("valid");
            let ideals = parse_ideals(src).map_err(|e| ("parse".to_string(), e.to_string()))?;
            for ideal in &ideals {
                let start = Instant::now();
                let sub = parametrize(ideal).map_err(|e| ("parametrize".to_string(), e.to_string()))?;
                if let Some(g) = ideal.generators.iter().find(|g| !g.substitute(&sub).is_zero()) {
                    return fail("parametrization does not solve its ideal", format!("1/{r}({a}) {}: {g}", ideal.name));
                }
                let bad = nonvanishing_on(&p, &sub);
                if let Some((i, j, v)) = bad.first() {
                    return fail("D does not vanish", format!("1/{r}(1,{a}) {}: m_{i},{j} = {v}", ideal.name));
                }
                notes.push(format!("1/{r}(1,{a}) {} {} ms", ideal.name, start.elapsed().as_millis()));
            }
        }
        Ok(notes.join("; "))
    })
}

/// Criterion 7: the Wahl cochain lies in `Def0`.
pub fn wahl_vanishing(max_n: u32) -> Check {
    run(7, "Wahl cochain vanishing", || {
        let all = WahlParams::all_up_to(max_n);
        let bad = all.par_iter().find_map_first(|w| {
            check_point(&w.singularity(), &wahl_cochain(w)).err().map(|e| format!("(n,q)=({},{}): {e}", w.n, w.q))
        });
        if let Some(ce) = bad {
            return fail("D does not vanish", ce);
        }
        // the opposite sign of s is reported, not hidden
        let plus = all.iter().filter(|w| check_point(&w.singularity(), &wahl_cochain_with_sign(w, 1)).is_ok()).count();
        Ok(format!(
            "t_(nk) = t^k, s = -t^n vanishes for {} pairs n <= {max_n}; s = +t^n vanishes for {plus} of them",
            all.len()
        ))
    })
}

/// The relations printed for the first component of `1/r(1,1)`.
pub fn first_component_relations(r: u32) -> Vec<String> {
    let mut rel = vec!["w_1^2 + t_1 w_1".to_string()];
    for i in 2..r - 1 {
        rel.push(format!("w_{i}^2"));
    }
    rel.push(format!("w_{m}^2 + t_{m} w_{m}", m = r - 1));
    for i in 1..r {
        for j in i + 1..r {
            rel.push(format!("w_{i} w_{j}"));
        }
    }
    for i in 2..r - 1 {
        for j in 2..i {
            rel.push(format!("w_{i} w_{j}"));
        }
    }
    for i in 2..r - 1 {
        rel.push(format!("w_{i} w_1 + t_1 w_{i}"));
        rel.push(format!("w_{m} w_{i} + t_{m} w_{i}", m = r - 1));
    }
    rel.push(format!("w_{m} w_1 + t_{m} w_1 + t_1 w_{m} + t_1 t_{m}", m = r - 1));
    rel
}

pub fn first_component_spec(r: u32) -> CochainSpec {
    CochainSpec::zero(r)
        .with_t(1, Poly::t_sub(1))
        .with_t(r - 1, Poly::t_sub(r - 1))
        .with_s(-&(&Poly::t_sub(1) * &Poly::t_sub(r - 1)))
}

/// The relations printed for the second component of `1/4(1,1)`.
pub const R4_PRINTED: [&str; 9] = [
    "w_1w_2",
    "w_2w_3",
    "w_1^2",
    "w_3^2",
    "w_2^2 + t_2 w_2",
    "w_1w_3 - t_2 w_2",
    "w_3w_1 - t_2 w_2 + t_2^2",
    "w_3w_2 + t_2 w_3",
    "w_2w_1 + t_2 w_1",
];

/// The one printed relation that has to change, and its replacement.
pub const R4_PRINTED_BAD: usize = 6;
pub const R4_CORRECTED: &str = "w_3w_1 + t_2 w_2 + t_2^2";

pub fn r4_second_spec() -> CochainSpec {
    CochainSpec::zero(4).with_t(2, Poly::t_sub(2)).with_s(-&Poly::t_sub(2).pow(2))
}

fn vanishes(table: &AlgebraTable<Poly>, rel: &str) -> std::result::Result<bool, (String, String)> {
    eval_relation(table, rel)
        .map(|v| v.iter().all(Poly::is_zero))
        .map_err(|e| ("relation parse error".to_string(), format!("{rel}: {e}")))
}

/// Criterion 8: the worked examples at `r = 2`, `r = 4` and the first
/// component.
#[allow(clippy::needless_range_loop)]
pub fn worked_deformations(first_r: u32) -> Check {
    run(8, "Worked deformations", || {
        let err = |e: crate::Error| ("deformed table".to_string(), e.to_string());
        // r = 2
        let p2 = SingularityParams::new(2, 1).expect("valid");
        let t2 = deformed_table(&p2, &CochainSpec::generic(2)).map_err(err)?;
        if !vanishes(&t2, "w_1^2 + t_1 w_1 - s")? {
            return fail("r=2 relation", "w_1^2 != s - t_1 w_1");
        }
        // r = 4, second component
        let p4 = SingularityParams::new(4, 1).expect("valid");
        let t4 = deformed_table(&p4, &r4_second_spec()).map_err(err)?;
        for (idx, rel) in R4_PRINTED.iter().enumerate() {
            let ok = vanishes(&t4, rel)?;
            if ok != (idx != R4_PRINTED_BAD) {
                return fail("r=4 presentation", format!("{rel} vanishes = {ok}"));
            }
        }
        if !vanishes(&t4, R4_CORRECTED)? {
            return fail("r=4 presentation", R4_CORRECTED);
        }
        // the printed w_3 w_1 is incompatible with associativity
        let mut printed = t4.clone();
        let v = eval_relation(&t4, "-t_2^2 + t_2 w_2").map_err(err)?;
        printed.product_mut(3, 1).clone_from_slice(&v);
        if printed.is_associative() {
            return fail("r=4 presentation", "printed w_3w_1 unexpectedly associative");
        }
        // fiber at t_2 = 1 is Mat_2, realised by the n = 2 order at t = 1
        let order = build_order(&WahlParams::new(2, 1).expect("valid"));
        let one = BigRational::from_integer(1.into());
        if order.span_determinant(&one).is_zero() {
            return fail("r=4 fiber", "order matrices dependent at t=1");
        }
        let sub = [(Var::TSub(2), Poly::one())].into_iter().collect();
        let fiber = t4.map(|c| c.substitute(&sub).constant_term());
        let mats: Vec<Vec<Vec<BigInt>>> = order
            .basis_matrices()
            .iter()
            .map(|m| m.iter().map(|r| r.iter().map(|x| x.eval_int(&BigInt::from(1))).collect()).collect())
            .collect();
        for j in 0..4 {
            for i in 0..4 {
                let lhs = matmul(&to_u(&mats[j]), &to_u(&mats[i]), 2);
                let mut rhs = vec![vec![UPoly::zero(); 2]; 2];
                for k in 0..4 {
                    let c = UPoly::constant(fiber.get(j, i, k).clone());
                    for a in 0..2 {
                        for b in 0..2 {
                            rhs[a][b] = &rhs[a][b] + &(&c * &UPoly::constant(mats[k][a][b].clone()));
                        }
                    }
                }
                if lhs != rhs {
                    return fail("r=4 fiber", format!("w_{j} w_{i} not matched by 2x2 matrices"));
                }
            }
        }
        // first component
        for r in 3..=first_r {
            let p = SingularityParams::new(r as i64, 1).expect("valid");
            let t = deformed_table(&p, &first_component_spec(r)).map_err(err)?;
            for rel in first_component_relations(r) {
                if !vanishes(&t, &rel)? {
                    return fail("first component", format!("r={r}: {rel}"));
                }
            }
        }
        Ok(format!(
            "r=2 ok; r=4: 8 of 9 printed relations hold, '{}' replaced by '{}'; t_2=1 fiber is Mat_2; first component r <= {first_r}",
            R4_PRINTED[R4_PRINTED_BAD], R4_CORRECTED
        ))
    })
}

fn to_u(m: &[Vec<BigInt>]) -> Vec<Vec<UPoly>> {
    m.iter().map(|r| r.iter().map(|x| UPoly::constant(x.clone())).collect()).collect()
}

/// Criterion 9: the printed order matrices.
pub fn golden_matrices() -> Check {
    run(9, "Golden order matrices", || {
        let mut alt_failures = Vec::new();
        for ((n, q), src) in golden_sources() {
            let w = WahlParams::new(n as i64, q as i64).expect("valid");
            let diffs = check_golden(&build_order(&w), src).map_err(|e| ("golden parse".to_string(), e.to_string()))?;
            if let Some((i, j, ours, theirs)) = diffs.first() {
                return fail("cell mismatch", format!("(n,q)=({n},{q}) cell ({i},{j}): {ours:?} vs {theirs:?}"));
            }
            let alt = check_golden(&build_order_with(&w, EmptyMax::PosInfinity), src).expect("parsed above");
            if !alt.is_empty() {
                alt_failures.push(format!("({n},{q})"));
            }
        }
        let w = WahlParams::new(2, 1).expect("valid");
        let mut order = build_order(&w);
        for row in order.cells.iter_mut() {
            for cell in row.iter_mut() {
                *cell = example_n2_reconciliation(cell);
            }
        }
        let golden =
            parse_golden(crate::order::example_n2_source()).map_err(|e| ("parse".to_string(), e.to_string()))?;
        let d = diff_cells(&order, &golden);
        if let Some(c) = d.first() {
            return fail("(2,1) mismatch after a_1,a_2 -> -a_1,-a_2", format!("{c:?}"));
        }
        Ok(format!(
            "8 printed matrices exact, (2,1) after sign substitution; empty max = +inf would fail {}",
            alt_failures.join(" ")
        ))
    })
}

/// Criterion 10: closure, fibers at `0`, `1`, `2` and infinity.
pub fn order_properties(max_n: u32) -> Check {
    run(10, "Order properties", || {
        let all = WahlParams::all_up_to(max_n);
        let results: Vec<_> = all
            .par_iter()
            .map(|w| {
                let order = build_order(w);
                let rep = fiber_report(&order, &[1, 2]);
                let assoc = order.structure_constants().map(|c| c.is_associative());
                (w, rep, assoc)
            })
            .collect();
        let mut notes = Vec::new();
        for (w, rep, assoc) in results {
            let rep = rep.map_err(|e| ("closure".to_string(), format!("(n,q)=({},{}): {e}", w.n, w.q)))?;
            if assoc != Ok(true) {
                return fail("constants not associative", format!("(n,q)=({},{})", w.n, w.q));
            }
            if !rep.all_hold() {
                return fail("fiber check", format!("{rep:?}"));
            }
            let d = (w.n * w.n) as usize;
            let z = rep.zero_to_kk.as_ref().expect("checked");
            notes.push(format!("({},{}): t=0 via {}", w.n, w.q, z.describe(d)));
        }
        Ok(format!("{} orders n <= {max_n}; {}", all.len(), notes.join("; ")))
    })
}

/// Criterion 11: the order against the deformed algebra.
pub fn cross_validation(max_n: u32) -> Check {
    run(11, "Cross-validation", || {
        let all = WahlParams::all_up_to(max_n);
        let mut notes = Vec::new();
        for w in &all {
            let rep = cross_check(&build_order(w)).map_err(|e| ("cross check".to_string(), e.to_string()))?;
            match rep.map {
                Some(m) => notes.push(format!("({},{}): {}", w.n, w.q, m.describe((w.n * w.n) as usize))),
                None => {
                    return fail(
                        "no isomorphism",
                        format!("(n,q)=({},{}) first mismatch {:?}", w.n, w.q, rep.first_mismatch),
                    )
                }
            }
        }
        Ok(notes.join("; "))
    })
}

/// Criterion 12: no generator sits in degree 2.
pub fn maurer_cartan_vacuity(max_r: u32) -> Check {
    run(12, "Maurer-Cartan vacuity", || {
        for p in SingularityParams::all_up_to(max_r) {
            let gens = complex_generators(&p);
            if gens.len() != 2 * p.r as usize || gens.iter().any(|g| g.deg > 1) {
                return fail("degree 2 generator", format!("(r,a)=({},{})", p.r, p.a));
            }
            let h = hidden_ainf(&p);
            if h.generators().iter().any(|g| g.deg > 1) || !h.respects_degree() {
                return fail("hidden products leave degrees 0,1", format!("(r,a)=({},{})", p.r, p.a));
            }
            if p.r <= 12 {
                let full = full_ainf(&p);
                if full.generators().iter().any(|g| g.deg > 1) || !full.respects_degree() {
                    return fail("visible products leave degrees 0,1", format!("(r,a)=({},{})", p.r, p.a));
                }
            }
        }
        Ok(format!("generators in degrees 0 and 1 only, r <= {max_r}"))
    })
}

/// Suite names accepted by `verify`.
pub const SUITES: [&str; 5] = ["kk", "deform", "order", "cross", "all"];

pub fn run_suite(suite: &str, b: &Bounds) -> Option<VerifyReport> {
    let ids: &[u32] = match suite {
        "kk" => &[1, 2, 3, 4, 12],
        "deform" => &[5, 6, 7, 8],
        "order" => &[9, 10],
        "cross" => &[11],
        "all" => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
        _ => return None,
    };
    let checks = ids.iter().map(|&id| run_criterion(id, b)).collect();
    Some(VerifyReport { suite: suite.to_string(), checks })
}

pub fn run_criterion(id: u32, b: &Bounds) -> Check {
    match id {
        1 => kk_equivalence(b.kk_r),
        2 => table_9_2(),
        3 => commutative_cases(b.commutative_r),
        4 => opposite_duality(b.kk_r),
        5 => diff_matrix_checks(b.a1_r, b.skew_r),
        6 => component_checks(),
        7 => wahl_vanishing(b.wahl_n),
        8 => worked_deformations(b.first_component_r),
        9 => golden_matrices(),
        10 => order_properties(b.order_n),
        11 => cross_validation(b.cross_n),
        12 => maurer_cartan_vacuity(b.mc_r),
        _ => panic!("no criterion {id}"),
    }
}
