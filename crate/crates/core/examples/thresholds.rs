//! Largest admissible colour bound under each theorem for a few sizes.
//!
//! ```bash
//! cargo run --example thresholds
//! ```

use rainbow_lll::lll::{threshold, Theorem, ThresholdParams};
use rainbow_lll::Graph;

fn main() -> rainbow_lll::Result<()> {
    println!(
        "{:>9} {:>3} {:>6} {:>6} {:>6} {:>6} {:>6}",
        "n", "Δ", "thm2", "thm3", "cor4", "thm7", "thm5"
    );
    for n in [100u64, 1_000, 10_000, 1_000_000] {
        for delta in [1u64, 2, 4] {
            let params = ThresholdParams::with_delta(n, delta);
            let row: Vec<u64> = [
                Theorem::Thm2,
                Theorem::Thm3,
                Theorem::Cor4,
                Theorem::Thm7,
                Theorem::Thm5,
            ]
            .into_iter()
            .map(|t| threshold(t, &params))
            .collect::<Result<_, _>>()?;
            println!(
                "{n:>9} {delta:>3} {:>6} {:>6} {:>6} {:>6} {:>6}",
                row[0], row[1], row[2], row[3], row[4]
            );
        }
    }

    // a Hamilton cycle has far fewer cherries than the degree-2 worst case
    let n = 1000;
    let density = Graph::cycle(n as usize).cherry_stats().density(n);
    let k = threshold(Theorem::Thm3, &ThresholdParams::with_density(n, density))?;
    println!("\nC_{n}: locally {k}-bounded colourings always contain a proper Hamilton cycle");
    Ok(())
}
