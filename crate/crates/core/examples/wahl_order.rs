//! The matrix order of a Wahl singularity `1/n^2(1, nq-1)`: the general
//! element in display-math layout and its structure constants.

use wahl_order::order::build_order;
use wahl_order::WahlParams;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer argument")).collect();
    let (n, q) = match args.as_slice() {
        [n, q] => (*n, *q),
        _ => (3, 2),
    };
    let w = WahlParams::new(n, q).unwrap_or_else(|e| panic!("{e}"));
    let order = build_order(&w);
    print!("{}", order.render_paper());
    println!();
    match order.structure_constants() {
        Ok(c) => print!("{}", c.render_text(false)),
        Err(e) => println!("not closed: {e}"),
    }
}
