//! The algebra `R_{r,a}` against brute-force oracles written from the
//! definitions: a lattice scan for the rectangle rule and an explicit box
//! test for the Young diagram.

use wahl_order::iso::{check_map, BasisMap};
use wahl_order::kk::{
    gauss_word, kk_json, kk_product_closed, kk_table, nontrivial_products, self_intersection_count, young_diagram,
};
use wahl_order::verify::duality_map;
use wahl_order::SingularityParams;

fn md(x: i64, r: i64) -> i64 {
    x.rem_euclid(r)
}

/// `b` found by search rather than by the extended Euclidean algorithm.
fn inverse(a: i64, r: i64) -> i64 {
    (1..r).find(|b| a * b % r == 1).unwrap()
}

fn orange(x: i64, y: i64, r: i64, b: i64) -> bool {
    md(y - b * x, r) == 0
}

/// `w_j w_i` is nonzero iff the closed rectangle `[0,[-aj]] x [0,[i]]`
/// meets the orange lattice only at the origin.
fn rect_oracle(r: i64, a: i64, j: i64, i: i64) -> Option<i64> {
    let b = inverse(a, r);
    let (w, h) = (md(-a * j, r), md(i, r));
    for x in 0..=w {
        for y in 0..=h {
            if (x, y) != (0, 0) && orange(x, y, r, b) {
                return None;
            }
        }
    }
    Some(md(j + i, r))
}

/// Box `(x, y)` is in the diagram iff no orange point `(X, Y)` has
/// `1 <= X <= x` and `1 <= Y <= y`.
fn box_oracle(r: i64, b: i64, x: i64, y: i64) -> bool {
    !(1..=x).any(|cx| (1..=y).any(|cy| orange(cx, cy, r, b)))
}

fn coprime_pairs(max_r: i64) -> Vec<(i64, i64)> {
    (2..=max_r).flat_map(|r| (1..r).filter(move |&a| num_integer::gcd(a, r) == 1).map(move |a| (r, a))).collect()
}

#[test]
fn table_matches_rectangle_oracle() {
    for (r, a) in coprime_pairs(24) {
        let p = SingularityParams::new(r, a).unwrap();
        let t = kk_table(&p);
        for j in 0..r {
            for i in 0..r {
                let want = rect_oracle(r, a, j, i);
                let got: Vec<usize> = (0..r as usize).filter(|&k| *t.get(j as usize, i as usize, k) != 0).collect();
                assert_eq!(got, want.map(|k| vec![k as usize]).unwrap_or_default(), "({r},{a}) j={j} i={i}");
                if let Some(k) = want {
                    assert_eq!(*t.get(j as usize, i as usize, k as usize), 1);
                }
            }
        }
    }
}

#[test]
fn young_diagram_matches_box_oracle() {
    for (r, a) in coprime_pairs(20) {
        let p = SingularityParams::new(r, a).unwrap();
        let b = inverse(a, r);
        let d = young_diagram(&p);
        for x in 0..r {
            for y in 0..r {
                assert_eq!(d.contains(x as u32, y as u32), box_oracle(r, b, x, y), "({r},{a}) box ({x},{y})");
                if d.contains(x as u32, y as u32) {
                    assert_eq!(d.labels[x as usize][y as usize] as i64, md(y - b * x, r));
                }
            }
        }
    }
}

#[test]
fn closed_formula_examples() {
    let p = SingularityParams::new(9, 2).unwrap();
    assert_eq!(kk_product_closed(&p, 4, 1), Some(5));
    assert_eq!(kk_product_closed(&p, 4, 2), Some(6));
    assert_eq!(kk_product_closed(&p, 1, 1), None);
    let q = SingularityParams::new(7, 6).unwrap();
    assert_eq!(kk_product_closed(&q, 3, 2), Some(5));
    for i in 0..9 {
        assert_eq!(kk_product_closed(&p, 0, i), Some(i as u32));
    }
}

#[test]
fn nine_two_products() {
    let p = SingularityParams::new(9, 2).unwrap();
    assert_eq!(nontrivial_products(&kk_table(&p)), vec![(4, 1, 5), (4, 2, 6), (4, 3, 7), (4, 4, 8)]);
}

#[test]
fn special_families() {
    for r in 2..=20i64 {
        let sq = kk_table(&SingularityParams::new(r, 1).unwrap());
        assert!(nontrivial_products(&sq).is_empty(), "r={r}");
        let tp = kk_table(&SingularityParams::new(r, r - 1).unwrap());
        let want: Vec<_> = (1..r as usize)
            .flat_map(|j| (1..r as usize).map(move |i| (j, i)))
            .filter(|(j, i)| i + j < r as usize)
            .map(|(j, i)| (j, i, i + j))
            .collect();
        assert_eq!(nontrivial_products(&tp), want, "r={r}");
    }
    // (r,1): the left column of the diagram has height r-1 and nothing else
    let d = young_diagram(&SingularityParams::new(6, 1).unwrap());
    assert_eq!(d.boxes(), 2 * 6 - 1);
}

#[test]
fn duality_needs_relabeling() {
    let a = kk_table(&SingularityParams::new(9, 2).unwrap());
    let b = kk_table(&SingularityParams::new(9, 5).unwrap());
    // literally, R_{9,2} and the opposite of R_{9,5} differ ...
    assert_ne!(a, b.opposite());
    // ... and agree after w_k -> w_{-2k}
    let map = BasisMap { unit: 7, opposite: false, signs: vec![1; 9] };
    assert_eq!(check_map(&a, &b.opposite(), &map), None);
    for (r, a) in coprime_pairs(32) {
        let p = SingularityParams::new(r, a).unwrap();
        let t = kk_table(&p);
        let op = kk_table(&p.dual()).opposite();
        assert_eq!(check_map(&t, &op, &duality_map(&p)), None, "({r},{a})");
    }
}

#[test]
fn opposite_is_an_involution() {
    for (r, a) in coprime_pairs(12) {
        let t = kk_table(&SingularityParams::new(r, a).unwrap());
        assert_eq!(t.opposite().opposite(), t);
    }
    let t = kk_table(&SingularityParams::new(7, 6).unwrap());
    assert_eq!(t.opposite(), t);
}

#[test]
fn gauss_words() {
    assert_eq!(gauss_word(&SingularityParams::new(2, 1).unwrap()), vec![1, 1]);
    let r = 7;
    let w = gauss_word(&SingularityParams::new(r, 1).unwrap());
    let half: Vec<u32> = (1..r as u32).rev().collect();
    assert_eq!(w, [half.clone(), half].concat());
    // indices divisible by n form n(n-1), ..., n, n, ..., n(n-1)
    for (n, q) in [(3, 1), (3, 2), (4, 1), (4, 3), (5, 2)] {
        let p = SingularityParams::new(n * n, n * q - 1).unwrap();
        let sub: Vec<u32> = gauss_word(&p).into_iter().filter(|k| k % n as u32 == 0).collect();
        let down: Vec<u32> = (1..n as u32).rev().map(|k| k * n as u32).collect();
        let up: Vec<u32> = (1..n as u32).map(|k| k * n as u32).collect();
        assert_eq!(sub, [down, up].concat(), "({n},{q})");
    }
    for (r, a) in coprime_pairs(20) {
        let w = gauss_word(&SingularityParams::new(r, a).unwrap());
        assert_eq!(w.len() as i64, 2 * (r - 1));
        for k in 1..r as u32 {
            assert_eq!(w.iter().filter(|&&x| x == k).count(), 2);
        }
    }
}

#[test]
fn self_intersections() {
    assert_eq!(self_intersection_count(&SingularityParams::new(16, 3).unwrap()), 15);
    assert_eq!(self_intersection_count(&SingularityParams::new(2, 1).unwrap()), 1);
    assert_eq!(self_intersection_count(&SingularityParams::new(9, 2).unwrap()), 8);
}

#[test]
fn json_for_square_zero() {
    let j = serde_json::to_value(kk_json(&SingularityParams::new(4, 1).unwrap())).unwrap();
    let products = j["products"].as_array().unwrap();
    assert!(products.iter().all(|p| p["j"] == 0 || p["i"] == 0));
    assert_eq!(products.len(), 7);
}
