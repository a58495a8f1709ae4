//! The skew matrix `D` of deformed-differential coefficients for a generic
//! cochain, and the closed form when `a = 1`.

use wahl_order::deform::{a1_formula, diff_matrix};
use wahl_order::render::{diff_grid, diff_text};
use wahl_order::SingularityParams;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer argument")).collect();
    let (r, a) = match args.as_slice() {
        [r, a] => (*r, *a),
        _ => (6, 1),
    };
    let p = SingularityParams::new(r, a).unwrap_or_else(|e| panic!("{e}"));
    let d = diff_matrix(&p);
    print!("{}", diff_text(&d));
    println!();
    print!("{}", diff_grid(&d));
    if a == 1 {
        println!("\nmatches the a = 1 closed form: {}", d == a1_formula(r as u32));
    }
}
