//! Resampling search for a rainbow Hamilton cycle in a 2-bounded colouring.
//!
//! ```bash
//! cargo run --release --example find_rainbow_cycle -- 500 2
//! ```

use std::time::Instant;

use rainbow_lll::colouring::gen_k_bounded;
use rainbow_lll::oracle::is_valid_embedding;
use rainbow_lll::sampler::{find_copy, FindConfig};
use rainbow_lll::{Graph, Mode};

fn main() -> rainbow_lll::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let n = args.first().copied().unwrap_or(500);
    let k = args.get(1).copied().unwrap_or(2);
    let g = Graph::cycle(n);
    for seed in 0..5 {
        let colouring = gen_k_bounded(n, k, seed)?;
        let start = Instant::now();
        let outcome = find_copy(&g, &colouring, Mode::Rainbow, &FindConfig::new(seed))?;
        let valid = outcome
            .embedding()
            .is_some_and(|s| is_valid_embedding(&s, &g, &colouring, Mode::Rainbow));
        println!(
            "seed {seed}: found {} after {} resamples in {:.2?} (valid: {valid})",
            outcome.is_found(),
            outcome.resamples(),
            start.elapsed()
        );
    }
    Ok(())
}
