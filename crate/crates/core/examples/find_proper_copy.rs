//! Properly coloured copies of sparse graphs in locally bounded colourings,
//! pushing k well past the proven bound.
//!
//! ```bash
//! cargo run --release --example find_proper_copy
//! ```

use rainbow_lll::colouring::gen_locally_k_bounded;
use rainbow_lll::sampler::{find_copy, FindConfig};
use rainbow_lll::{Graph, Mode};

fn main() -> rainbow_lll::Result<()> {
    let n = 200;
    for (name, g) in [
        ("C_200", Graph::cycle(n)),
        ("circulant Δ=4", Graph::circulant(n, 4)),
    ] {
        for k in [3, 10, 30, 60] {
            let colouring = gen_locally_k_bounded(n, k, 1)?;
            let config = FindConfig::new(1).with_max_resamples(200_000);
            let outcome = find_copy(&g, &colouring, Mode::Proper, &config)?;
            println!(
                "{name:<14} k = {k:<3} found {:<5} resamples {}",
                outcome.is_found(),
                outcome.resamples()
            );
        }
    }
    Ok(())
}
