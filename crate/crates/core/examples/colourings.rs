//! Generated colourings and their boundedness, plus the text format.
//!
//! ```bash
//! cargo run --example colourings
//! ```

use rainbow_lll::colouring::{gen_k_bounded, gen_locally_k_bounded, round_robin_classes};
use rainbow_lll::EdgeColouring;

fn main() -> rainbow_lll::Result<()> {
    for n in [6, 7, 10] {
        println!(
            "round robin on K_{n}: {} classes",
            round_robin_classes(n).len()
        );
    }
    for k in [1, 2, 5] {
        let global = gen_k_bounded(12, k, 7)?;
        let local = gen_locally_k_bounded(12, k, 7)?;
        println!(
            "k = {k}: global generator (global, local) = {:?} with {} colours; local generator = {:?} with {} colours",
            global.boundedness(),
            global.colour_count(),
            local.boundedness(),
            local.colour_count()
        );
    }
    let small = gen_locally_k_bounded(4, 1, 0)?;
    let text = small.to_text();
    print!("\n{text}");
    assert_eq!(EdgeColouring::parse(&text)?, small);
    Ok(())
}
