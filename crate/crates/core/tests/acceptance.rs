//! One line per acceptance criterion; exits nonzero if any fails.

use wahl_order::verify::{run_criterion, Bounds};

fn main() {
    let bounds = Bounds::default();
    let mut failed = 0;
    for id in 1..=12 {
        let c = run_criterion(id, &bounds);
        println!(
            "{} {:>2} {} ({} ms): {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            c.elapsed_ms,
            c.detail
        );
        if let Some(ce) = c.counterexample {
            println!("        counterexample: {ce}");
            failed += 1;
        }
    }
    println!("{} of 12 criteria pass", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
