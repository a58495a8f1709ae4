//! Checks the printed irreducible components of `Def0` for `1/15(1,4)` and
//! `1/19(1,7)` by substituting their parametrizations into `D`.

use wahl_order::deform::{nonvanishing_on, parametrize, parse_ideals};
use wahl_order::verify::shipped_ideals;
use wahl_order::SingularityParams;

fn main() {
    for ((r, a), src) in shipped_ideals() {
        let p = SingularityParams::new(r as i64, a as i64).expect("valid parameters");
        for ideal in parse_ideals(src).expect("shipped ideals parse") {
            let sub = parametrize(&ideal).expect("each component is a graph");
            let left = nonvanishing_on(&p, &sub);
            println!(
                "1/{r}(1,{a}) {}: {} generators, D vanishes: {}",
                ideal.name,
                ideal.generators.len(),
                left.is_empty()
            );
            for (v, img) in &sub {
                println!("    {v} = {img}");
            }
        }
    }
}
