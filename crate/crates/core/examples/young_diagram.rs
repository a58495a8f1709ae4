//! Writes the orange lattice and the numbered Young diagram as SVG.
//!
//! ```text
//! cargo run --example young_diagram -- 16 3 > fig.svg
//! ```

use wahl_order::kk::young_diagram;
use wahl_order::render::young_svg;
use wahl_order::SingularityParams;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse().expect("integer argument")).collect();
    let (r, a) = match args.as_slice() {
        [r, a] => (*r, *a),
        _ => (16, 3),
    };
    let p = SingularityParams::new(r, a).unwrap_or_else(|e| panic!("{e}"));
    let d = young_diagram(&p);
    eprintln!("{} boxes, column heights {:?}", d.boxes(), d.column_heights);
    let extent = d.column_heights.len().max(d.column_heights.iter().copied().max().unwrap_or(0) as usize) + 1;
    print!("{}", young_svg(&p, &d, extent as u32));
}
