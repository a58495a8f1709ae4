//! Prints the multiplication table of `R_{r,a}`.
//!
//! ```text
//! cargo run --example kk_table -- 9 2
//! ```

use wahl_order::kk::{kk_table, nontrivial_products};
use wahl_order::SingularityParams;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer argument")).collect();
    let (r, a) = match args.as_slice() {
        [r, a] => (*r, *a),
        _ => (9, 2),
    };
    let p = SingularityParams::new(r, a).unwrap_or_else(|e| panic!("{e}"));
    let table = kk_table(&p);
    println!("R_{{{r},{a}}}, b = {}", p.b);
    for (j, i, k) in nontrivial_products(&table) {
        println!("w_{j} w_{i} = w_{k}");
    }
    println!("commutative: {}", table.is_commutative());
    println!("m(j) for j = 1..r-1: {:?}", (1..r).map(|j| p.m_of(j)).collect::<Vec<_>>());
}
