//! Fraction-free linear solving over `Z[t]`.
//!
//! The solver runs Bareiss-style Gauss-Jordan elimination on the augmented
//! system.  Every division it performs is exact, and when it finishes each
//! pivot equals the same determinant `d`, so the coordinates come out as
//! `rhs_k / d` with no intermediate fractions.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::upoly::{RatFn, UPoly};

/// A square matrix with entries in `Z[t]`, stored row by row.
pub type PolyMatrix = Vec<Vec<UPoly>>;

fn flatten(m: &PolyMatrix) -> Vec<UPoly> {
    m.iter().flat_map(|row| row.iter().cloned()).collect()
}

/// Coordinates of `target` in the span of `basis`, over the field of
/// rational functions in `t`.
pub fn solve_in_span(target: &PolyMatrix, basis: &[PolyMatrix]) -> Result<Vec<RatFn>> {
    let mut all = solve_many(std::slice::from_ref(target), basis)?;
    Ok(all.pop().expect("one target"))
}

/// Solves for many targets at once, sharing the elimination.
pub fn solve_many(targets: &[PolyMatrix], basis: &[PolyMatrix]) -> Result<Vec<Vec<RatFn>>> {
    let cols: Vec<Vec<UPoly>> = basis.iter().map(flatten).collect();
    let rhs: Vec<Vec<UPoly>> = targets.iter().map(flatten).collect();
    solve_columns(&cols, &rhs)
}

/// `cols[k]` is the k-th unknown's column and `rhs[j]` the j-th right-hand
/// side, all of the same length (the number of equations).
pub fn solve_columns(cols: &[Vec<UPoly>], rhs: &[Vec<UPoly>]) -> Result<Vec<Vec<RatFn>>> {
    let unknowns = cols.len();
    let equations = cols.first().map_or(0, Vec::len);
    if rhs.iter().any(|r| r.len() != equations) || cols.iter().any(|c| c.len() != equations) {
        return Err(Error::Other("dimension mismatch in linear solve".into()));
    }
    if equations < unknowns {
        return Err(Error::SingularBasis { rank: equations, expected: unknowns });
    }
    let width = unknowns + rhs.len();
    // rows of the augmented matrix [A | B]
    let mut m: Vec<Vec<UPoly>> = (0..equations)
        .map(|e| {
            let mut row = Vec::with_capacity(width);
            row.extend(cols.iter().map(|c| c[e].clone()));
            row.extend(rhs.iter().map(|r| r[e].clone()));
            row
        })
        .collect();

    let mut prev = UPoly::one();
    for col in 0..unknowns {
        let Some(p) = (col..equations).find(|&r| !m[r][col].is_zero()) else {
            return Err(Error::SingularBasis { rank: col, expected: unknowns });
        };
        m.swap(col, p);
        let pivot_row = m[col].clone();
        let piv = pivot_row[col].clone();
        m.par_iter_mut().enumerate().filter(|(i, _)| *i != col).for_each(|(_, row)| {
            let factor = row[col].clone();
            for c in 0..width {
                let v = &(&piv * &row[c]) - &(&factor * &pivot_row[c]);
                row[c] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
        });
        prev = piv;
    }
    // leftover equations must be consistent
    for row in &m[unknowns..] {
        if row[unknowns..].iter().any(|x| !x.is_zero()) {
            return Err(Error::OutOfSpan);
        }
    }
    Ok((0..rhs.len())
        .map(|j| (0..unknowns).map(|k| RatFn::new(m[k][unknowns + j].clone(), prev.clone())).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn u(v: &[i64]) -> UPoly {
        UPoly::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn unit(i: usize, j: usize, scale: UPoly) -> PolyMatrix {
        let mut m = vec![vec![UPoly::zero(); 2]; 2];
        m[i][j] = scale;
        m
    }

    #[test]
    fn recovers_combinations() {
        let basis = vec![unit(0, 0, u(&[1])), unit(0, 1, u(&[0, 1])), unit(1, 0, u(&[1])), unit(1, 1, u(&[0, 0, 1]))];
        let c = solve_in_span(&basis[0], &basis).unwrap();
        let polys: Vec<UPoly> = c.iter().map(|x| x.as_poly().unwrap()).collect();
        assert_eq!(polys, vec![u(&[1]), u(&[]), u(&[]), u(&[])]);

        // t * basis_1 + basis_2
        let mut target = unit(0, 1, u(&[0, 0, 1]));
        target[1][0] = u(&[1]);
        let c = solve_in_span(&target, &basis).unwrap();
        let polys: Vec<UPoly> = c.iter().map(|x| x.as_poly().unwrap()).collect();
        assert_eq!(polys, vec![u(&[]), u(&[0, 1]), u(&[1]), u(&[])]);

        // E_11 needs 1/t^2 against t^2 E_11, not polynomial
        let c = solve_in_span(&unit(1, 1, u(&[1])), &basis).unwrap();
        assert!(c[3].as_poly().is_none());
    }

    #[test]
    fn deficient_basis() {
        let basis = vec![unit(0, 0, u(&[1])), unit(0, 0, u(&[0, 1]))];
        assert!(matches!(solve_in_span(&unit(0, 0, u(&[1])), &basis), Err(Error::SingularBasis { .. })));
        let basis = vec![unit(0, 0, u(&[1]))];
        assert!(matches!(solve_in_span(&unit(1, 1, u(&[1])), &basis), Err(Error::OutOfSpan)));
    }
}
