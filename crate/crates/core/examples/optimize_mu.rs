//! Search for μ parameters beyond the fixed choice: the rainbow condition
//! still certifies at k = n/(42Δ²).
//!
//! ```bash
//! cargo run --example optimize_mu
//! ```

use rainbow_lll::lll::{optimize_mu, rainbow_classes, MuForm, SearchConfig};
use rainbow_lll::rational::ratio;

fn main() -> rainbow_lll::Result<()> {
    for constant in [51i64, 45, 42, 38] {
        for n in [100u64, 1000] {
            let k = ratio(n as i64, constant);
            let classes = rainbow_classes(1, n, &k)?;
            let result = optimize_mu(&classes, &SearchConfig::new(MuForm::TwoType))?;
            let (mu_int, mu_dis) = match &result.certificate.parameters {
                rainbow_lll::lll::Parameters::TwoType {
                    mu_int_approx,
                    mu_dis_approx,
                    ..
                } => (*mu_int_approx, *mu_dis_approx),
                _ => unreachable!(),
            };
            println!(
                "k = n/{constant:<3} n = {n:<5} margin {:.4} {:?}  (n³μ_int)^(1/3) = {:.4}  (n⁴μ_dis)^(1/4) = {:.4}",
                result.certificate.margin,
                result.certificate.verdict,
                (mu_int * (n as f64).powi(3)).cbrt(),
                (mu_dis * (n as f64).powi(4)).powf(0.25),
            );
        }
    }
    Ok(())
}
