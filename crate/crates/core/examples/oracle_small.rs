//! Exhaustive ground truth on small instances, compared with the sampler.
//!
//! ```bash
//! cargo run --example oracle_small
//! ```

use rainbow_lll::colouring::gen_locally_k_bounded;
use rainbow_lll::oracle::{count_valid_embeddings, exists_copy};
use rainbow_lll::sampler::{find_copy, FindConfig};
use rainbow_lll::{Graph, Mode};

fn main() -> rainbow_lll::Result<()> {
    let g = Graph::cycle(5);
    for seed in 0..8 {
        let colouring = gen_locally_k_bounded(5, 2, seed)?;
        let exists = exists_copy(&g, &colouring, Mode::Proper)?;
        let count = count_valid_embeddings(&g, &colouring, Mode::Proper)?;
        let sampled = find_copy(
            &g,
            &colouring,
            Mode::Proper,
            &FindConfig::new(seed).with_max_resamples(1000),
        )?;
        println!(
            "seed {seed}: {count:>3} of 120 injections valid, oracle {:?}, sampler found {}",
            exists.map(|e| e.image_of),
            sampled.is_found()
        );
    }
    Ok(())
}
