//! Compares each order with the deformed algebra over the Wahl cochain.

use wahl_order::order::build_order;
use wahl_order::wahl::cross_check;
use wahl_order::WahlParams;

fn main() {
    let max_n: u32 = std::env::args().nth(1).map_or(4, |s| s.parse().expect("integer argument"));
    for w in WahlParams::all_up_to(max_n) {
        let rep = cross_check(&build_order(&w)).expect("order closes");
        let d = (w.n * w.n) as usize;
        match rep.map {
            Some(m) => println!("({},{}): {}", w.n, w.q, m.describe(d)),
            None => println!("({},{}): no map, first mismatch {:?}", w.n, w.q, rep.first_mismatch),
        }
    }
}
