use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use wahl_order::linsolve::{solve_in_span, PolyMatrix};
use wahl_order::poly::{Monomial, Poly, Substitution, Var};
use wahl_order::upoly::UPoly;
use wahl_order::Error;

const VARS: [Var; 5] = [Var::S, Var::T, Var::TSub(1), Var::TSub(12), Var::A(3)];

fn term(c: i64, exps: &[u32]) -> Poly {
    exps.iter().zip(VARS).fold(Poly::constant(c), |acc, (&e, v)| acc * Poly::monomial(1, Monomial::var(v, e)))
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-20i64..20, prop::collection::vec(0u32..3, 5)), 0..6)
        .prop_map(|terms| terms.into_iter().fold(Poly::zero(), |acc, (c, e)| acc + term(c, &e)))
}

fn point(vals: &[i64]) -> BTreeMap<Var, BigRational> {
    VARS.iter().zip(vals).map(|(v, &x)| (*v, BigRational::from_integer(x.into()))).collect()
}

proptest! {
    #[test]
    fn ring_axioms(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Poly::one(), p.clone());
        prop_assert_eq!(p.scale(3), &p * &Poly::constant(3));
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly_strategy(), q in poly_strategy(), v in prop::collection::vec(-4i64..5, 5)) {
        let pt = point(&v);
        let (ep, eq) = (p.eval_at(&pt).unwrap(), q.eval_at(&pt).unwrap());
        prop_assert_eq!((&p * &q).eval_at(&pt).unwrap(), &ep * &eq);
        prop_assert_eq!((&p + &q).eval_at(&pt).unwrap(), ep + eq);
    }

    #[test]
    fn substitution_is_a_homomorphism(p in poly_strategy(), q in poly_strategy(), a in poly_strategy(), b in poly_strategy()) {
        let sub: Substitution = [(Var::S, a), (Var::TSub(1), b)].into_iter().collect();
        prop_assert_eq!((&p * &q).substitute(&sub), &p.substitute(&sub) * &q.substitute(&sub));
        prop_assert_eq!((&p + &q).substitute(&sub), &p.substitute(&sub) + &q.substitute(&sub));
    }

    #[test]
    fn substitution_then_evaluation(p in poly_strategy(), a in poly_strategy(), v in prop::collection::vec(-3i64..4, 5)) {
        // evaluating p(s = a) equals evaluating p at s = a(point)
        let pt = point(&v);
        let sub: Substitution = [(Var::S, a.clone())].into_iter().collect();
        let mut pt2 = pt.clone();
        pt2.insert(Var::S, a.eval_at(&pt).unwrap());
        prop_assert_eq!(p.substitute(&sub).eval_at(&pt).unwrap(), p.eval_at(&pt2).unwrap());
    }

    #[test]
    fn print_parse_round_trip(p in poly_strategy()) {
        prop_assert_eq!(Poly::parse(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(Poly::parse(&p.to_latex()).unwrap(), p);
    }

    #[test]
    fn solve_recovers_combinations(
        basis in prop::collection::vec(prop::collection::vec(prop::collection::vec(-3i64..4, 3), 4), 4),
        coords in prop::collection::vec(prop::collection::vec(-3i64..4, 2), 4),
    ) {
        let up = |v: &[i64]| UPoly::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect());
        let mats: Vec<PolyMatrix> = basis.iter().map(|m| vec![vec![up(&m[0]), up(&m[1])], vec![up(&m[2]), up(&m[3])]]).collect();
        let cs: Vec<UPoly> = coords.iter().map(|c| up(c)).collect();
        let mut target = vec![vec![UPoly::zero(); 2]; 2];
        for (m, c) in mats.iter().zip(&cs) {
            for a in 0..2 {
                for b in 0..2 {
                    target[a][b] = &target[a][b] + &(c * &m[a][b]);
                }
            }
        }
        match solve_in_span(&target, &mats) {
            Ok(sol) => {
                for (s, c) in sol.iter().zip(&cs) {
                    prop_assert_eq!(&s.num, &(c * &s.den));
                }
            }
            Err(e) => prop_assert!(matches!(e, Error::SingularBasis { .. }), "{e}"),
        }
    }
}

#[test]
fn display_math_rendering() {
    let p = Poly::parse("t^{2} a_{8}+t a_{5}").unwrap();
    assert_eq!(p.to_latex(), "t^{2} a_{8}+t a_{5}");
    let q = Poly::parse("-t^2 a_6 + a_0").unwrap();
    assert_eq!(q.to_latex(), "-t^{2} a_{6}+a_{0}");
    assert_eq!(Poly::parse("t_1 t_3 + t_2^2").unwrap().to_string(), "t_1*t_3 + t_2^2");
}

#[test]
fn parse_errors_are_reported() {
    assert!(Poly::parse("t_1 +").is_err());
    assert!(Poly::parse("(t").is_err());
    assert!(Poly::parse("x_1").is_err());
}

#[test]
fn substitution_is_simultaneous() {
    let sub: Substitution = [(Var::TSub(1), Poly::t_sub(2)), (Var::TSub(2), Poly::t_sub(1))].into_iter().collect();
    let p = Poly::parse("t_1 - t_2^2").unwrap();
    assert_eq!(p.substitute(&sub), Poly::parse("t_2 - t_1^2").unwrap());
}

#[test]
fn out_of_span_is_detected() {
    let one = UPoly::one();
    let z = UPoly::zero();
    let basis = vec![vec![vec![one.clone(), z.clone()], vec![z.clone(), z.clone()]]];
    let target = vec![vec![z.clone(), one], vec![z.clone(), z]];
    assert_eq!(solve_in_span(&target, &basis), Err(Error::OutOfSpan));
}
