//! Certify rainbow copies with the fixed μ_int = (1.4/n)³, μ_dis = (1.4/n)⁴
//! and walk through the inequality chain step by step.
//!
//! ```bash
//! cargo run --example certify_rainbow -- 204 1
//! ```

use rainbow_lll::lll::{
    check_cluster_clique, evaluate_chain, rainbow_classes, standard_mu_rainbow, ChainSetting,
};
use rainbow_lll::rational::{display, ratio};

fn main() -> rainbow_lll::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let n = args.first().copied().unwrap_or(204);
    let delta = args.get(1).copied().unwrap_or(1);
    let k = ratio(n as i64, 51 * (delta * delta) as i64);
    println!("n = {n}, Δ = {delta}, k = {}", display(&k));

    let classes = rainbow_classes(delta, n, &k)?;
    let cert = check_cluster_clique(&classes, &standard_mu_rainbow(n)?)?;
    println!("{}", cert.to_json());

    let chain = evaluate_chain(&ChainSetting::Rainbow { n, delta, k })?;
    for step in &chain.steps {
        let mark = if step.holds { "ok  " } else { "FAIL" };
        println!(
            "{mark} {:<44} {:.6e} <= {:.6e}",
            step.label, step.lhs, step.rhs
        );
    }
    println!("product factor {:.6}", chain.product_factor);
    Ok(())
}
