//! The Gauss word of the immersed curve for `1/r(1,a)`.

use wahl_order::kk::{gauss_word, self_intersection_count};
use wahl_order::render::gauss_text;
use wahl_order::SingularityParams;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer argument")).collect();
    let (r, a) = match args.as_slice() {
        [r, a] => (*r, *a),
        _ => (25, 4),
    };
    let p = SingularityParams::new(r, a).unwrap_or_else(|e| panic!("{e}"));
    println!("{}", gauss_text(&gauss_word(&p)));
    println!("{} self-intersection points", self_intersection_count(&p));
}
