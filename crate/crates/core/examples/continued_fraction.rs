//! Hirzebruch-Jung continued fractions of `r/(r-a)` and `r/a`.

use wahl_order::resarith::{hj_eval, hj_fraction};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer argument")).collect();
    let (r, a) = match args.as_slice() {
        [r, a] => (*r, *a),
        _ => (19, 7),
    };
    for d in [r - a, a] {
        let bs = hj_fraction(r, d).unwrap_or_else(|e| panic!("{e}"));
        let back = hj_eval(&bs).expect("nonzero denominators");
        println!("{r}/{d} = {bs:?}  (evaluates back to {back})");
    }
}
