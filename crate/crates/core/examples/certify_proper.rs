//! Certificate for properly coloured copies of a concrete graph, using its
//! own cherry counts rather than the degree bound.
//!
//! ```bash
//! cargo run --example certify_proper
//! ```

use rainbow_lll::lll::{
    check_cluster_clique, proper_classes, standard_mu_proper, threshold, verify_inequality_chain,
    ChainSetting, Theorem, ThresholdParams,
};
use rainbow_lll::rational::int;
use rainbow_lll::Graph;

fn main() -> rainbow_lll::Result<()> {
    let n = 1000u64;
    for (name, g) in [
        ("cycle", Graph::cycle(n as usize)),
        ("circulant Δ=4", Graph::circulant(n as usize, 4)),
        ("perfect matching", Graph::matching(n as usize)),
    ] {
        let stats = g.cherry_stats();
        let density = stats.density(n);
        let k = threshold(
            Theorem::Thm3,
            &ThresholdParams::with_density(n, density.clone()),
        )?;
        print!(
            "{name:<17} cherries {:>5}, q = {:>2}, k = {k:>4}: ",
            stats.total_cherries, stats.max_cherries_per_vertex
        );
        if stats.total_cherries == 0 {
            println!("no cherries, every colouring works");
            continue;
        }
        let cert = check_cluster_clique(
            &proper_classes(&density, n, &int(k as i64))?,
            &standard_mu_proper(n)?,
        )?;
        let chain = verify_inequality_chain(&ChainSetting::Proper {
            n,
            density,
            k: int(k as i64),
        })?;
        println!(
            "certificate {:?}, margin {:.4}, chain holds: {}",
            cert.verdict, cert.margin, chain.holds
        );
    }
    Ok(())
}
