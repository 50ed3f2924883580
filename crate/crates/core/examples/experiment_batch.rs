//! A reproducible sweep of sampler runs, written as CSV.
//!
//! ```bash
//! cargo run --release --example experiment_batch
//! ```

use rainbow_lll::experiment::{run_experiment, to_csv, ExperimentSpec};

const SPEC: &str = r#"
master_seed = 2024
mode = "rainbow"
graph = "random"
colouring = "global"
n = [100, 200]
k = [1, 2, 4]
delta = [2, 3]
trials = 3
"#;

fn main() -> rainbow_lll::Result<()> {
    let spec = ExperimentSpec::parse(SPEC)?;
    print!("{}", to_csv(&run_experiment(&spec)?));
    Ok(())
}
