//! The Kalck-Karmazyn algebra `R_{r,a}`.
//!
//! The product `w_j w_i` is either `w_{j+i}` or zero.  Three descriptions of
//! when it is nonzero are implemented and must agree: the closed formula
//! `m(j) > [i]`, the empty-rectangle test against the orange lattice, and the
//! Young-diagram rule.  The closed formula is the one the table is built from.

use serde::Serialize;

use crate::resarith::{LatticePoint, SingularityParams};
use crate::table::AlgebraTable;

/// `Some(j+i)` when `m(j) > [i]`.
pub fn kk_product_closed(p: &SingularityParams, j: i64, i: i64) -> Option<u32> {
    if p.m_of(j) > p.br(i) {
        Some(p.br(j + i))
    } else {
        None
    }
}

/// `Some(j+i)` when the rectangle with corners `(0,0)` and `([-aj], [i])`
/// has no orange point besides the origin.
pub fn kk_product_rect(p: &SingularityParams, j: i64, i: i64) -> Option<u32> {
    let w = p.br(-(p.a as i64) * j) as i64;
    let h = p.br(i) as i64;
    for x in 0..=w {
        for y in 0..=h {
            if (x, y) != (0, 0) && p.is_orange(LatticePoint::new(x, y)) {
                return None;
            }
        }
    }
    Some(p.br(j + i))
}

/// The part of the Young diagram inside the window `[0, r)^2`.
///
/// The box with bottom-left corner `(x, y)` belongs to the diagram when the
/// open rectangle `(0, x+1) x (0, y+1)` has no orange point.  The bottom row
/// and the left column are unbounded; they are cut off at `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YoungDiagram {
    pub r: u32,
    /// `column_heights[x]` is the number of boxes in column `x`.
    pub column_heights: Vec<u32>,
    /// `labels[x][y] = gamma(x, y)` for each box in the diagram.
    pub labels: Vec<Vec<u32>>,
}

impl YoungDiagram {
    pub fn contains(&self, x: u32, y: u32) -> bool {
        (x as usize) < self.column_heights.len() && y < self.column_heights[x as usize]
    }

    pub fn boxes(&self) -> usize {
        self.column_heights.iter().map(|&h| h as usize).sum()
    }
}

pub fn young_diagram(p: &SingularityParams) -> YoungDiagram {
    let r = p.r;
    let mut heights = Vec::with_capacity(r as usize);
    // lowest orange height seen so far in columns 1..=x
    let mut ceiling = r;
    for x in 0..r {
        if x > 0 {
            // smallest y >= 1 with gamma(x, y) = 0 is [b x], or r when that is 0
            let y = p.br(p.b as i64 * x as i64);
            let y = if y == 0 { r } else { y };
            ceiling = ceiling.min(y);
        }
        heights.push(if x == 0 { r } else { ceiling });
    }
    let labels = (0..r)
        .map(|x| (0..heights[x as usize]).map(|y| p.gamma(LatticePoint::new(x as i64, y as i64))).collect())
        .collect();
    YoungDiagram { r, column_heights: heights, labels }
}

/// The Young-diagram rule: locate `j` in the bottom row and `i` in the left
/// column; the product is nonzero when the box above and to the right of
/// both is in the diagram.
pub fn kk_product_young(p: &SingularityParams, d: &YoungDiagram, j: i64, i: i64) -> Option<u32> {
    let x = p.br(-(p.a as i64) * j);
    let y = p.br(i);
    debug_assert_eq!(p.gamma(LatticePoint::new(x as i64, 0)), p.br(j));
    if d.contains(x, y) {
        Some(p.br(j + i))
    } else {
        None
    }
}

pub fn kk_table(p: &SingularityParams) -> AlgebraTable<i64> {
    let r = p.r as usize;
    let mut t = AlgebraTable::zeros(r);
    for j in 0..r {
        for i in 0..r {
            if let Some(k) = kk_product_closed(p, j as i64, i as i64) {
                t.set(j, i, k as usize, 1);
            }
        }
    }
    t
}

/// Products other than the ones involving the unit, as `(j, i, j+i)`.
pub fn nontrivial_products(t: &AlgebraTable<i64>) -> Vec<(usize, usize, usize)> {
    t.nonzero_products()
        .into_iter()
        .filter(|(j, i, _)| *j != 0 && *i != 0)
        .map(|(j, i, terms)| (j, i, terms[0].0))
        .collect()
}

/// The word `r-1, ..., 1, [-b], [-2b], ..., [-(r-1)b]` of self-intersection
/// labels read along the Lagrangian.
pub fn gauss_word(p: &SingularityParams) -> Vec<u32> {
    let r = p.r as i64;
    (1..r).rev().map(|k| k as u32).chain((1..r).map(|k| p.br(-k * p.b as i64))).collect()
}

pub fn self_intersection_count(p: &SingularityParams) -> u32 {
    p.r - 1
}

#[derive(Debug, Clone, Serialize)]
pub struct KkJson {
    pub r: u32,
    pub a: u32,
    pub b: u32,
    pub products: Vec<KkProduct>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct KkProduct {
    pub j: usize,
    pub i: usize,
    pub k: usize,
}

pub fn kk_json(p: &SingularityParams) -> KkJson {
    let t = kk_table(p);
    let products = t.nonzero_products().into_iter().map(|(j, i, terms)| KkProduct { j, i, k: terms[0].0 }).collect();
    KkJson { r: p.r, a: p.a, b: p.b, products }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_two() {
        let p = SingularityParams::new(9, 2).unwrap();
        assert_eq!(kk_product_closed(&p, 4, 1), Some(5));
        assert_eq!(kk_product_rect(&p, 4, 2), Some(6));
        assert_eq!(kk_product_closed(&p, 1, 1), None);
        let t = kk_table(&p);
        assert_eq!(nontrivial_products(&t), vec![(4, 1, 5), (4, 2, 6), (4, 3, 7), (4, 4, 8)]);
    }

    #[test]
    fn gauss_words() {
        let p = SingularityParams::new(2, 1).unwrap();
        assert_eq!(gauss_word(&p), vec![1, 1]);
        let p = SingularityParams::new(5, 1).unwrap();
        assert_eq!(gauss_word(&p), vec![4, 3, 2, 1, 4, 3, 2, 1]);
    }

    #[test]
    fn truncated_polynomials() {
        let p = SingularityParams::new(7, 6).unwrap();
        assert_eq!(kk_product_closed(&p, 3, 2), Some(5));
        assert_eq!(kk_product_closed(&p, 3, 4), None);
    }
}
