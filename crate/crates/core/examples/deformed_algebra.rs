//! Deformed multiplication tables at a few points of `Def0`.

use wahl_order::deform::{deformed_table, CochainSpec};
use wahl_order::verify::{first_component_spec, r4_second_spec};
use wahl_order::SingularityParams;

fn show(r: i64, a: i64, spec: &CochainSpec) {
    let p = SingularityParams::new(r, a).expect("valid parameters");
    println!("1/{r}(1,{a}) at\n{}", spec.render());
    match deformed_table(&p, spec) {
        Ok(t) => print!("{}", t.render_text(false)),
        Err(e) => println!("{e}"),
    }
    println!();
}

fn main() {
    show(2, 1, &CochainSpec::generic(2));
    show(4, 1, &r4_second_spec());
    show(5, 1, &first_component_spec(5));
    // a point outside Def0 is rejected with the first nonvanishing entry
    show(3, 1, &CochainSpec::generic(3));
}
