//! Fibers of the Wahl order and its comparison with the deformed
//! Kalck-Karmazyn algebra over the Wahl cochain.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::deform::{deformed_table, wahl_cochain};
use crate::error::Result;
use crate::iso::{check_map, find_isomorphism, solve_signs, BasisMap};
use crate::kk::kk_table;
use crate::order::{infinity_fiber, zero_fiber, OrderTable};
use crate::poly::{Poly, Var};
use crate::resarith::WahlParams;
use crate::table::AlgebraTable;

/// Certificates for the three kinds of fiber.
#[derive(Debug, Clone, Serialize)]
pub struct FiberReport {
    pub n: u32,
    pub q: u32,
    /// isomorphism from the `t = 0` fiber onto `R_{n^2, nq-1}`
    pub zero_to_kk: Option<BasisMap>,
    /// `(tau, det)` for the span determinant at each sampled `tau`
    pub generic: Vec<(String, String)>,
    /// whether the rescaled constants satisfy the degree bounds at infinity
    pub infinity_bounds: bool,
    /// isomorphism from the limit at infinity onto `R_{n^2, nq-1}`
    pub infinity_to_kk: Option<BasisMap>,
    /// the limit at infinity mapped to the `t = 0` fiber by `w~_i -> ± w_{-i}`
    pub infinity_to_zero_negation: Option<BasisMap>,
}

impl FiberReport {
    pub fn all_hold(&self) -> bool {
        self.zero_to_kk.is_some()
            && self.generic.iter().all(|(_, d)| d != "0")
            && self.infinity_bounds
            && self.infinity_to_kk.is_some()
            && self.infinity_to_zero_negation.is_some()
    }
}

pub fn fiber_report(order: &OrderTable, taus: &[i64]) -> Result<FiberReport> {
    let w = order.wahl;
    let c = order.structure_constants()?;
    let kk = kk_table(&w.singularity()).map(|&x| BigInt::from(x));
    let zero = zero_fiber(c);
    let zero_to_kk = find_isomorphism(&zero, &kk);
    let generic = taus
        .iter()
        .map(|&tau| {
            let d = order.span_determinant(&BigRational::from_integer(tau.into()));
            (tau.to_string(), d.to_string())
        })
        .collect();
    let (infinity_bounds, infinity_to_kk, infinity_to_zero_negation) = match infinity_fiber(c, w.n) {
        Ok(limit) => {
            let d = limit.dim();
            (true, find_isomorphism(&limit, &kk), solve_signs(&limit, &zero, d - 1, false))
        }
        Err(_) => (false, None, None),
    };
    Ok(FiberReport { n: w.n, q: w.q, zero_to_kk, generic, infinity_bounds, infinity_to_kk, infinity_to_zero_negation })
}

/// Outcome of comparing the order with the deformed algebra.
#[derive(Debug, Clone, Serialize)]
pub struct CrossReport {
    pub n: u32,
    pub q: u32,
    /// map from the order's basis to the deformed algebra's basis
    pub map: Option<BasisMap>,
    /// when no map exists, the first product that breaks the expected one
    pub first_mismatch: Option<(usize, usize)>,
}

/// The order's constants as polynomials in `t`.
pub fn order_constants_poly(order: &OrderTable) -> Result<AlgebraTable<Poly>> {
    Ok(order.structure_constants()?.map(|c| c.to_poly(Var::T)))
}

/// Compares `structure_constants(build_order(n, q))` with
/// `deformed_table(n^2, nq-1, wahl_cochain(n, q))` over `Z[t]`.
pub fn cross_check(order: &OrderTable) -> Result<CrossReport> {
    let w: WahlParams = order.wahl;
    let p = w.singularity();
    let deformed = deformed_table(&p, &wahl_cochain(&w))?;
    let ours = order_constants_poly(order)?;
    let map = find_isomorphism(&ours, &deformed);
    let first_mismatch = if map.is_some() {
        None
    } else {
        let d = ours.dim();
        let guess = BasisMap { unit: (d - p.b as usize) % d, opposite: true, signs: vec![1; d] };
        check_map(&ours, &deformed, &guess)
    };
    Ok(CrossReport { n: w.n, q: w.q, map, first_mismatch })
}

/// The `t = 0` specialisation of a table over `Z[t]`.
pub fn at_t_zero(t: &AlgebraTable<Poly>) -> AlgebraTable<BigInt> {
    let sub = [(Var::T, Poly::zero())].into_iter().collect();
    t.map(|c| c.substitute(&sub).constant_term())
}

/// Whether a table over `Z[t]` reduces to the given integer table at `t = 0`.
pub fn reduces_to(t: &AlgebraTable<Poly>, target: &AlgebraTable<BigInt>) -> bool {
    at_t_zero(t) == *target
}
