//! Hidden and visible products, the matrix `D`, `Def0` and deformed tables.

#![allow(clippy::needless_range_loop)]

use wahl_order::ainf::{full_ainf, hidden_ainf, insert_cochain, symbolic_cochain, visible_contributions, Gen};
use wahl_order::deform::{
    check_point, def0_generators, deformed_table, diff_matrix, nonvanishing_on, parametrize, parse_ideals,
    wahl_cochain, wahl_cochain_with_sign, CochainSpec,
};
use wahl_order::kk::kk_table;
use wahl_order::poly::{Poly, Substitution, Var};
use wahl_order::{Error, SingularityParams, WahlParams};

fn t(i: u32) -> Poly {
    Poly::t_sub(i)
}

fn params(r: i64, a: i64) -> SingularityParams {
    SingularityParams::new(r, a).unwrap()
}

/// `m_ij = sum_{k=i}^{j-1} t_k t_{i+j-k}` for `i < j`, plus `s` at `(1, r-1)`
/// when `r > 2`.
fn a1_entry(r: u32, i: u32, j: u32) -> Poly {
    let mut p = Poly::zero();
    for k in i..j {
        p = p + &t(k) * &t(i + j - k);
    }
    if i == 1 && j == r - 1 && r > 2 {
        p = p + Poly::s();
    }
    p
}

#[test]
fn r2_hidden_and_visible_values() {
    let p = params(2, 1);
    let h = hidden_ainf(&p);
    let (x, xb, q) = (Gen::w(1), Gen::wb(1), Gen::wb(0));
    // m_3(x, x, xbar) = -x
    assert_eq!(h.get(&[x, x, xb]).unwrap().get(&x), Some(&Poly::constant(-1)));
    // m_2(xbar, x) = wb_0 = -m_2(x, xbar)
    assert_eq!(h.get(&[xb, x]).unwrap().get(&q), Some(&Poly::one()));
    assert_eq!(h.get(&[x, xb]).unwrap().get(&q), Some(&Poly::constant(-1)));
    let v = visible_contributions(&p);
    // m_2(x, x) = s e and m_2(q, x) = s xbar
    assert_eq!(v.get(&[x, x]).unwrap().get(&Gen::w(0)), Some(&Poly::s()));
    assert_eq!(v.get(&[q, x]).unwrap().get(&xb), Some(&Poly::s()));
}

#[test]
fn bar_unit_products_everywhere() {
    for p in SingularityParams::all_up_to(10) {
        let h = hidden_ainf(&p);
        for i in 0..p.r {
            assert_eq!(h.get(&[Gen::wb(i), Gen::w(i)]).unwrap().get(&Gen::wb(0)), Some(&Poly::one()));
            assert_eq!(h.get(&[Gen::w(i), Gen::w(0)]).unwrap().get(&Gen::w(i)), Some(&Poly::one()));
        }
        assert!(h.respects_degree() && h.max_arity() == 3);
    }
}

#[test]
fn undeformed_products_are_kk() {
    for p in SingularityParams::all_up_to(12) {
        let ops = full_ainf(&p);
        let zero = vec![Poly::zero(); p.r as usize];
        let d = insert_cochain(&ops, &zero).unwrap();
        let kk = kk_table(&p);
        for j in 0..p.r {
            for i in 0..p.r {
                let m = d.m2(Gen::w(j), Gen::w(i));
                let got: Vec<(u32, Poly)> = m
                    .into_iter()
                    .map(|(g, c)| (g.idx, c.substitute(&[(Var::S, Poly::zero())].into_iter().collect())))
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                let want: Vec<(u32, Poly)> = (0..p.r)
                    .filter(|&k| *kk.get(j as usize, i as usize, k as usize) != 0)
                    .map(|k| (k, Poly::one()))
                    .collect();
                assert_eq!(got, want, "{p:?} w_{j} w_{i}");
                assert!(d
                    .m1(Gen::w(j))
                    .values()
                    .all(|c| c.substitute(&[(Var::S, Poly::zero())].into_iter().collect()).is_zero()));
            }
        }
    }
}

#[test]
fn a1_formula_entry_by_entry() {
    for r in 2..=16u32 {
        let d = diff_matrix(&params(r as i64, 1));
        for i in 1..r as usize {
            assert!(d.entry(i, i).is_zero());
            for j in i + 1..r as usize {
                assert_eq!(d.entry(i, j), &a1_entry(r, i as u32, j as u32), "r={r} ({i},{j})");
                assert_eq!(d.entry(j, i), &-&a1_entry(r, i as u32, j as u32));
            }
        }
    }
    // 1/2(1,1): D is the 1x1 zero matrix
    assert!(diff_matrix(&params(2, 1)).upper_entries().is_empty());
    // m_13 at r = 4
    assert_eq!(diff_matrix(&params(4, 1)).entry(1, 3), &Poly::parse("t_1 t_3 + t_2^2 + s").unwrap());
}

#[test]
fn skew_for_all_a() {
    for p in SingularityParams::all_up_to(14) {
        assert!(diff_matrix(&p).is_skew(), "{p:?}");
    }
}

#[test]
fn def0_generators_at_r3() {
    assert_eq!(def0_generators(&params(3, 1)), vec![Poly::parse("t_1 t_2 + s").unwrap()]);
}

#[test]
fn check_point_examples() {
    let p = params(4, 1);
    let undeformed = CochainSpec::zero(4).with_s(Poly::zero());
    assert!(check_point(&p, &undeformed).is_ok());
    let one_var = CochainSpec::zero(4).with_t(1, Poly::one()).with_s(Poly::zero());
    assert!(check_point(&p, &one_var).is_ok());
    let two = CochainSpec::zero(4).with_t(1, Poly::one()).with_t(2, Poly::one()).with_s(Poly::zero());
    assert!(matches!(check_point(&p, &two), Err(Error::NotInDef0 { i: 1, j: 2, .. })));
    assert!(deformed_table(&p, &two).is_err());
}

#[test]
fn printed_component_of_15_4() {
    // I_1 as printed: t_2..t_6 = t_9..t_13 = 0, t_14 = t_7^2, t_8 = t_1 t_7, s = -t_1 t_14
    let mut sub: Substitution =
        [2, 3, 4, 5, 6, 9, 10, 11, 12, 13].iter().map(|&i| (Var::TSub(i), Poly::zero())).collect();
    sub.insert(Var::TSub(14), t(7).pow(2));
    sub.insert(Var::TSub(8), &t(1) * &t(7));
    sub.insert(Var::S, -&(&t(1) * &t(7).pow(2)));
    let p = params(15, 4);
    assert!(def0_generators(&p).iter().all(|g| g.substitute(&sub).is_zero()));
    // a point off the component is detected
    let mut off = sub.clone();
    off.insert(Var::S, Poly::zero());
    assert!(!nonvanishing_on(&p, &off).is_empty());
}

#[test]
fn shipped_components() {
    for (r, a, src) in
        [(15, 4, include_str!("../data/ideals/r15_a4.txt")), (19, 7, include_str!("../data/ideals/r19_a7.txt"))]
    {
        let ideals = parse_ideals(src).unwrap();
        assert_eq!(ideals.len(), 3);
        for ideal in ideals {
            let sub = parametrize(&ideal).unwrap();
            for g in &ideal.generators {
                assert!(g.substitute(&sub).is_zero(), "{} {g}", ideal.name);
            }
            assert!(nonvanishing_on(&params(r, a), &sub).is_empty(), "1/{r}(1,{a}) {}", ideal.name);
        }
    }
}

#[test]
fn wahl_cochain_shape() {
    let spec = wahl_cochain(&WahlParams::new(3, 1).unwrap());
    let tt = Poly::t();
    assert_eq!(spec.t[3], tt);
    assert_eq!(spec.t[6], tt.pow(2));
    assert!([1, 2, 4, 5, 7, 8].iter().all(|&i| spec.t[i].is_zero()));
    assert_eq!(spec.s, Some(-&tt.pow(3)));
}

#[test]
fn wahl_cochain_lies_in_def0() {
    for w in WahlParams::all_up_to(6) {
        let p = w.singularity();
        assert!(check_point(&p, &wahl_cochain(&w)).is_ok(), "{w:?}");
        // with the opposite sign of s the first column of D survives
        assert!(check_point(&p, &wahl_cochain_with_sign(&w, 1)).is_err(), "{w:?}");
    }
}

#[test]
fn r2_deformation() {
    let t2 = deformed_table(&params(2, 1), &CochainSpec::generic(2)).unwrap();
    assert_eq!(t2.get(1, 1, 0), &Poly::s());
    assert_eq!(t2.get(1, 1, 1), &-&t(1));
}

#[test]
fn r4_second_component_table() {
    let spec = CochainSpec::parse(include_str!("../data/specs/r4_second.spec"), 4).unwrap();
    let tab = deformed_table(&params(4, 1), &spec).unwrap();
    let t2 = t(2);
    let mut want = vec![vec![vec![Poly::zero(); 4]; 4]; 4];
    for i in 0..4 {
        want[0][i][i] = Poly::one();
        want[i][0][i] = Poly::one();
    }
    want[1][3][2] = t2.clone();
    want[3][1][2] = -&t2;
    want[3][1][0] = -&t2.pow(2);
    want[2][2][2] = -&t2;
    want[2][1][1] = -&t2;
    want[3][2][3] = -&t2;
    for j in 0..4 {
        for i in 0..4 {
            assert_eq!(tab.product(j, i), &want[j][i][..], "w_{j} w_{i}");
        }
    }
    // with w_3 w_1 = t_2 w_2 - t_2^2 instead, (w_3 w_1) w_2 = -2 t_2^2 w_2
    // while w_3 (w_1 w_2) = 0
    let mut printed = tab.clone();
    printed.product_mut(3, 1).clone_from_slice(&[-&t2.pow(2), Poly::zero(), t2.clone(), Poly::zero()]);
    let lhs = printed.mul_elements(printed.product(3, 1), &printed.basis_vector(2));
    let rhs = printed.mul_elements(&printed.basis_vector(3), printed.product(1, 2));
    assert_eq!(lhs[2], t2.pow(2).scale(-2));
    assert!(rhs.iter().all(Poly::is_zero));
    assert!(tab.is_associative());
}

#[test]
fn deformed_tables_are_flat_families() {
    let specs = [
        (5, 1, include_str!("../data/specs/r5_first.spec")),
        (4, 1, include_str!("../data/specs/r4_wahl.spec")),
        (2, 1, include_str!("../data/specs/r2_free.spec")),
    ];
    for (r, a, src) in specs {
        let p = params(r, a);
        let spec = CochainSpec::parse(src, r as u32).unwrap();
        let tab = deformed_table(&p, &spec).unwrap();
        assert!(tab.is_associative() && tab.is_unital(), "1/{r}(1,{a})");
        let origin = tab.map(|c| c.constant_term());
        assert_eq!(origin, kk_table(&p).map(|&x| num_bigint::BigInt::from(x)));
    }
}

#[test]
fn spec_parse_errors() {
    assert!(matches!(CochainSpec::parse("t_1 = t_1 +", 3), Err(Error::Parse { .. })));
    assert!(CochainSpec::parse("t_5 = 1", 3).is_err());
    assert!(CochainSpec::parse("t_0 = t", 3).is_err());
    assert!(CochainSpec::parse("t_1 t_2 = 1", 3).is_err());
    let ok = CochainSpec::parse("# comment\nt_2 = t  # trailing\ns = -t^2\n", 4).unwrap();
    assert_eq!(ok.render(), "t_2 = t\ns = -t^2\n");
}

#[test]
fn insertion_rejects_high_arity() {
    let mut ops = hidden_ainf(&params(3, 1));
    ops.ops.insert(vec![Gen::w(1); 4], [(Gen::w(1), Poly::one())].into_iter().collect());
    assert!(matches!(insert_cochain(&ops, &symbolic_cochain(3)), Err(Error::ArityTooHigh(4))));
}
