use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use wahl_order::resarith::{bracket, hj_eval, hj_fraction, inverse_mod, LatticePoint};
use wahl_order::{SingularityParams, WahlParams};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Evaluates `b_1 - 1/(b_2 - 1/(...))` from the innermost term outwards.
fn eval_cf(bs: &[i64]) -> BigRational {
    let mut acc = rat(bs[bs.len() - 1], 1);
    for &b in bs[..bs.len() - 1].iter().rev() {
        acc = rat(b, 1) - rat(1, 1) / acc;
    }
    acc
}

#[test]
fn bracket_examples() {
    assert_eq!(bracket(-2, 9).unwrap(), 7);
    assert_eq!(bracket(9, 9).unwrap(), 0);
    assert_eq!(bracket(15, 16).unwrap(), 15);
    assert!(bracket(3, 0).is_err());
    assert!(bracket(3, -4).is_err());
}

#[test]
fn inverse_examples() {
    assert_eq!(inverse_mod(3, 16).unwrap(), 11);
    assert_eq!(inverse_mod(2, 9).unwrap(), 5);
    for r in 2..20 {
        assert_eq!(inverse_mod(1, r).unwrap(), 1);
    }
    assert!(inverse_mod(4, 6).is_err());
}

#[test]
fn parameter_validation() {
    assert!(SingularityParams::new(1, 1).is_err());
    assert!(SingularityParams::new(9, 3).is_err());
    assert!(SingularityParams::new(9, 9).is_err());
    assert!(SingularityParams::new(9, 0).is_err());
    assert!(WahlParams::new(4, 2).is_err());
    assert!(WahlParams::new(1, 1).is_err());
    let w = WahlParams::new(3, 2).unwrap().singularity();
    assert_eq!((w.r, w.a), (9, 5));
}

#[test]
fn gamma_and_orange_examples() {
    let p = SingularityParams::new(9, 2).unwrap();
    assert_eq!(p.gamma(LatticePoint::new(1, 5)), 0);
    assert_eq!(p.gamma(LatticePoint::new(0, 0)), 0);
    assert_eq!(p.gamma(LatticePoint::new(2, 3)), 2);
    assert!(p.is_orange(LatticePoint::new(1, 5)));
    assert!(!p.is_orange(LatticePoint::new(1, 4)));
    assert_eq!(p.gamma(LatticePoint::new(1, 4)), 8);
}

#[test]
fn orange_points_have_index_r() {
    for p in SingularityParams::all_up_to(16) {
        let r = p.r as i64;
        let count = (0..r)
            .flat_map(|x| (0..r).map(move |y| (x, y)))
            .filter(|&(x, y)| p.is_orange(LatticePoint::new(x, y)))
            .count();
        assert_eq!(count, p.r as usize, "{p:?}");
    }
}

#[test]
fn m_function_examples() {
    let p = SingularityParams::new(9, 2).unwrap();
    assert_eq!(p.m_of(0), 9);
    assert_eq!(p.m_of(4), 5);
    assert_eq!(p.m_of(1), 1);
}

#[test]
fn m_function_bounds() {
    for p in SingularityParams::all_up_to(24) {
        for j in 1..p.r as i64 {
            let m = p.m_of(j);
            assert!(m >= 1 && m <= p.br(p.b as i64), "{p:?} j={j}");
        }
    }
}

#[test]
fn continued_fraction_examples() {
    assert_eq!(hj_fraction(2, 1).unwrap(), vec![2]);
    assert_eq!(hj_fraction(4, 3).unwrap(), vec![2, 2, 2]);
    assert_eq!(hj_fraction(19, 12).unwrap(), vec![2, 3, 2, 3]);
    assert!(hj_fraction(5, 5).is_err());
    assert!(hj_fraction(5, 0).is_err());
    // 1/4(1,1) resolves to a single (-4)-curve
    let p = SingularityParams::new(4, 1).unwrap();
    assert_eq!(p.dual_fraction(), vec![4]);
    assert_eq!(p.resolution_fraction(), vec![2, 2, 2]);
}

proptest! {
    #[test]
    fn bracket_symmetry(x in -10_000i64..10_000, r in 1i64..200) {
        let s = bracket(x, r).unwrap() + bracket(-x, r).unwrap();
        prop_assert!(s == 0 || s == r);
        prop_assert!((0..r).contains(&bracket(x, r).unwrap()));
        prop_assert_eq!((bracket(x, r).unwrap() - x) % r, 0);
    }

    #[test]
    fn gamma_is_additive(r in 2i64..60, a in 1i64..60, x1 in -50i64..50, y1 in -50i64..50, x2 in -50i64..50, y2 in -50i64..50) {
        prop_assume!(a < r);
        let Ok(p) = SingularityParams::new(r, a) else { return Ok(()) };
        let (u, v) = (LatticePoint::new(x1, y1), LatticePoint::new(x2, y2));
        let lhs = p.gamma(u + v) as i64;
        prop_assert_eq!(lhs, (p.gamma(u) as i64 + p.gamma(v) as i64) % r);
    }

    #[test]
    fn continued_fraction_round_trip(r in 2i64..500, d in 1i64..500) {
        prop_assume!(d < r);
        let bs = hj_fraction(r, d).unwrap();
        prop_assert!(bs.iter().all(|&b| b >= 2));
        prop_assert_eq!(eval_cf(&bs), rat(r, d));
        prop_assert_eq!(hj_eval(&bs).unwrap(), rat(r, d));
    }

    #[test]
    fn inverse_is_inverse(r in 2i64..1000, a in 1i64..1000) {
        prop_assume!(a < r);
        match inverse_mod(a, r) {
            Ok(b) => {
                prop_assert!(0 < b && b < r);
                prop_assert_eq!(a * b % r, 1);
            }
            Err(_) => prop_assert!(num_integer::gcd(a, r) != 1),
        }
    }
}
