//! Fibers of the order at `t = 0`, at generic `t`, and at infinity.

use wahl_order::order::build_order;
use wahl_order::wahl::fiber_report;
use wahl_order::WahlParams;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer argument")).collect();
    let (n, q) = match args.as_slice() {
        [n, q] => (*n, *q),
        _ => (3, 1),
    };
    let w = WahlParams::new(n, q).unwrap_or_else(|e| panic!("{e}"));
    let d = (n * n) as usize;
    let rep = fiber_report(&build_order(&w), &[1, 2, 3]).expect("order closes");
    let show = |m: &Option<wahl_order::iso::BasisMap>| m.as_ref().map_or("none".to_string(), |m| m.describe(d));
    println!("t = 0 onto R_{{{},{}}}: {}", n * n, n * q - 1, show(&rep.zero_to_kk));
    for (tau, det) in &rep.generic {
        println!("t = {tau}: span determinant {det}");
    }
    println!("degree bounds at infinity: {}", rep.infinity_bounds);
    println!("infinity onto R: {}", show(&rep.infinity_to_kk));
    println!("infinity onto t = 0: {}", show(&rep.infinity_to_zero_negation));
}
