//! Isomorphisms between algebras of the form `w_k -> ε_k w_{uk}`.
//!
//! The search space is every unit `u` of `Z_d`, both the map and the
//! anti-map (an isomorphism onto the opposite algebra), and every choice of
//! signs `ε_k`.  For fixed `u` and direction the sign condition
//! `A_{ji}^k ε_k = ε_j ε_i B_{uj,ui}^{uk}` is linear over `GF(2)`, so the
//! signs are found by elimination rather than enumeration.

use num_integer::Integer;
use serde::Serialize;

use crate::table::{AlgebraTable, Coeff};

/// `w_k` of the source goes to `signs[k] * w_{unit * k}` of the target; with
/// `opposite` set it reverses products.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisMap {
    pub unit: usize,
    pub opposite: bool,
    pub signs: Vec<i8>,
}

impl BasisMap {
    pub fn is_identity(&self) -> bool {
        self.unit == 1 && !self.opposite && self.signs.iter().all(|&s| s == 1)
    }

    pub fn all_positive(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    pub fn describe(&self, d: usize) -> String {
        let neg: Vec<usize> = (0..d).filter(|&k| self.signs[k] < 0).collect();
        let relabel = if self.unit == 1 {
            "w_k -> w_k".to_string()
        } else if self.unit == d - 1 {
            "w_k -> w_{-k}".to_string()
        } else {
            format!("w_k -> w_{{{}k}}", self.unit)
        };
        let mut s = relabel;
        if self.opposite {
            s.push_str(", reversing products");
        }
        if neg.is_empty() {
            s.push_str(", all signs +");
        } else {
            s.push_str(&format!(", sign - on {neg:?}"));
        }
        s
    }
}

/// The first product where `map` fails to carry `a` onto `b`.
pub fn check_map<C: Coeff>(a: &AlgebraTable<C>, b: &AlgebraTable<C>, map: &BasisMap) -> Option<(usize, usize)> {
    let d = a.dim();
    let u = map.unit;
    for j in 0..d {
        for i in 0..d {
            let (bj, bi) = if map.opposite { (u * i % d, u * j % d) } else { (u * j % d, u * i % d) };
            for k in 0..d {
                let x = a.get(j, i, k);
                let y = b.get(bj, bi, u * k % d);
                let sign = map.signs[j] * map.signs[i] * map.signs[k];
                let y = if sign < 0 { y.neg_ref() } else { y.clone() };
                if *x != y {
                    return Some((j, i));
                }
            }
        }
    }
    None
}

/// Signs for a fixed relabeling, if any exist.
pub fn solve_signs<C: Coeff>(
    a: &AlgebraTable<C>,
    b: &AlgebraTable<C>,
    unit: usize,
    opposite: bool,
) -> Option<BasisMap> {
    let d = a.dim();
    if a.dim() != b.dim() || unit.gcd(&d) != 1 {
        return None;
    }
    // each row: bitmask over the d sign variables plus the parity bit
    let words = d.div_ceil(64);
    let mut rows: Vec<(Vec<u64>, bool)> = Vec::new();
    for j in 0..d {
        for i in 0..d {
            let (bj, bi) = if opposite { (unit * i % d, unit * j % d) } else { (unit * j % d, unit * i % d) };
            for k in 0..d {
                let x = a.get(j, i, k);
                let y = b.get(bj, bi, unit * k % d);
                if x.is_zero() && y.is_zero() {
                    continue;
                }
                let parity = if x == y {
                    false
                } else if *x == y.neg_ref() {
                    true
                } else {
                    return None;
                };
                let mut mask = vec![0u64; words];
                for v in [j, i, k] {
                    mask[v / 64] ^= 1 << (v % 64);
                }
                rows.push((mask, parity));
            }
        }
    }
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..d {
        let bit = |r: &(Vec<u64>, bool)| r.0[col / 64] >> (col % 64) & 1 == 1;
        let Some(p) = (rank..rows.len()).find(|&r| bit(&rows[r])) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && bit(row) {
                for w in 0..words {
                    row.0[w] ^= pivot.0[w];
                }
                row.1 ^= pivot.1;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| r.1) {
        return None;
    }
    // free variables are +1; each pivot row then fixes its variable
    let mut signs = vec![1i8; d];
    for (r, &col) in pivots.iter().enumerate() {
        if rows[r].1 {
            signs[col] = -1;
        }
    }
    let map = BasisMap { unit, opposite, signs };
    debug_assert!(check_map(a, b, &map).is_none());
    Some(map)
}

/// Searches maps before anti-maps, and units in increasing order.
pub fn find_isomorphism<C: Coeff>(a: &AlgebraTable<C>, b: &AlgebraTable<C>) -> Option<BasisMap> {
    let d = a.dim();
    if d != b.dim() {
        return None;
    }
    for opposite in [false, true] {
        for unit in 1..d.max(2) {
            if let Some(m) = solve_signs(a, b, unit, opposite) {
                return Some(m);
            }
        }
    }
    None
}
