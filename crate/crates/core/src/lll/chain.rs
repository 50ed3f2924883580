//! Step-by-step re-evaluation of the inequality chains behind the proper and
//! rainbow existence bounds, in exact arithmetic.

use num_traits::{One, Zero};
use serde::Serialize;

use super::threshold::proper_constant;
use crate::error::{Error, Result};
use crate::events::rainbow_bounds;
use crate::graph::{falling_factorial_q, CherryDensity};
use crate::rational::{self, int, powi, ratio, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum ChainSetting {
    /// Locally `k`-bounded colouring, cherry parameters `(p, q)`.
    Proper {
        n: u64,
        density: CherryDensity,
        k: Rational,
    },
    /// `k`-bounded colouring, maximum degree `delta`.
    Rainbow { n: u64, delta: u64, k: Rational },
}

/// One step `lhs <= rhs`, decided exactly.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainStep {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainReport {
    pub steps: Vec<ChainStep>,
    /// `(1 + q(n)_2 kμ)(1 + 3p(n)_2 kμ)` for proper copies, the two-clique
    /// factor `(1 + γ_int μ_int + γ_dis μ_dis)(1 + κ_int μ_int + κ_dis μ_dis)`
    /// for rainbow copies.
    pub product_factor: f64,
    pub holds: bool,
}

struct Steps(Vec<ChainStep>);

impl Steps {
    fn push(&mut self, label: &str, lhs: &Rational, rhs: &Rational) -> bool {
        let holds = lhs <= rhs;
        self.0.push(ChainStep {
            label: label.to_owned(),
            lhs: rational::to_f64(lhs),
            rhs: rational::to_f64(rhs),
            holds,
        });
        holds
    }

    fn finish(self, product_factor: &Rational) -> ChainReport {
        ChainReport {
            holds: self.0.iter().all(|s| s.holds),
            steps: self.0,
            product_factor: rational::to_f64(product_factor),
        }
    }
}

/// Evaluates every step, including the hypothesis, without rejecting
/// parameters outside it.
pub fn evaluate_chain(setting: &ChainSetting) -> Result<ChainReport> {
    match setting {
        ChainSetting::Proper { n, density, k } => proper_chain(*n, density, k),
        ChainSetting::Rainbow { n, delta, k } => rainbow_chain(*n, *delta, k),
    }
}

/// Like [`evaluate_chain`] but parameters outside the hypothesis are a
/// domain error. The returned report's verdict covers the remaining steps.
pub fn verify_inequality_chain(setting: &ChainSetting) -> Result<ChainReport> {
    let report = evaluate_chain(setting)?;
    if let Some(failed) = report
        .steps
        .iter()
        .find(|s| s.label.starts_with("hypothesis") && !s.holds)
    {
        return Err(Error::domain(format!(
            "parameters violate {}",
            failed.label
        )));
    }
    Ok(report)
}

fn check_k(k: &Rational) -> Result<()> {
    if k.is_zero() || *k < Rational::zero() {
        return Err(Error::domain("k must be positive"));
    }
    Ok(())
}

fn proper_chain(n: u64, density: &CherryDensity, k: &Rational) -> Result<ChainReport> {
    check_k(k)?;
    if n < 3 {
        return Err(Error::domain("n >= 3 is required"));
    }
    let mut steps = Steps(Vec::new());
    let n2 = falling_factorial_q(n, 2)?;
    let n3 = falling_factorial_q(n, 3)?;
    let s = &density.q;
    let t = int(3) * &density.p;
    let denom = s + &t;
    let six_fifths_6 = powi(&ratio(6, 5), 6);
    let mu = &six_fifths_6 / &n3;

    if denom.is_zero() {
        steps.push("hypothesis: q + 3p > 0", &int(1), &int(0));
        return Ok(steps.finish(&int(1)));
    }
    let bound = proper_constant() * int(n as i64 - 2) / &denom;
    steps.push("hypothesis: k <= (1/3)(5/6)^5 (n-2)/(q+3p)", k, &bound);
    let k_mu = k * &mu;
    steps.push(
        "k mu <= (2/5)/((n)_2 (q+3p))",
        &k_mu,
        &(ratio(2, 5) / (&n2 * &denom)),
    );
    let factor = (int(1) + s * &n2 * &k_mu) * (int(1) + &t * &n2 * &k_mu);
    let product = powi(&factor, 3);
    let two_fifths = ratio(2, 5);
    let split = (int(1) + &two_fifths * s / &denom) * (int(1) + &two_fifths * &t / &denom);
    let split_cubed = powi(&split, 3);
    steps.push(
        "(1 + q(n)_2 k mu)^3 (1 + 3p(n)_2 k mu)^3 <= split bound",
        &product,
        &split_cubed,
    );
    steps.push("split bound <= (6/5)^6", &split_cubed, &six_fifths_6);
    steps.push(
        "st/(s+t)^2 <= 1/4",
        &(s * &t / (&denom * &denom)),
        &ratio(1, 4),
    );
    steps.push(
        "1/(n)_3 <= mu / product",
        &(int(1) / &n3),
        &(&mu / &product),
    );
    Ok(steps.finish(&factor))
}

fn rainbow_chain(n: u64, delta: u64, k: &Rational) -> Result<ChainReport> {
    check_k(k)?;
    if delta == 0 {
        return Err(Error::domain("maximum degree > 0 is required"));
    }
    if n < 4 {
        return Err(Error::domain("n >= 4 is required"));
    }
    let mut steps = Steps(Vec::new());
    let nq = int(n as i64);
    let d2 = int((delta * delta) as i64);
    steps.push("hypothesis: 77 <= n", &int(77), &nq);
    steps.push(
        "hypothesis: k <= n/(51 Delta^2)",
        k,
        &(&nq / (int(51) * &d2)),
    );

    let a = ratio(14, 10);
    let base = &a / &nq;
    let mu_int = powi(&base, 3);
    let mu_dis = powi(&base, 4);
    let [g_int, g_dis, kn_int, kn_dis] = rainbow_bounds(delta, n, k);
    let factor = (int(1) + &g_int * &mu_int + &g_dis * &mu_dis)
        * (int(1) + &kn_int * &mu_int + &kn_dis * &mu_dis);
    let a3 = powi(&a, 3);
    let a4 = powi(&a, 4);
    let inv51 = ratio(1, 51);
    let substituted = (int(1) + ratio(3, 2) * &inv51 * &a3 + &inv51 * &a4)
        * (int(1) + &inv51 * &a3 + &inv51 * &a4);
    let target = ratio(50, 51) * &a;
    steps.push(
        "product factor <= substituted factor",
        &factor,
        &substituted,
    );
    steps.push(
        "substituted factor <= (50/51)(14/10)",
        &substituted,
        &target,
    );

    let n3 = falling_factorial_q(n, 3)?;
    let n4 = falling_factorial_q(n, 4)?;
    let scaled = ratio(51, 50) / &nq;
    let p_int = &mu_int / powi(&factor, 3);
    let p_dis = &mu_dis / powi(&factor, 4);
    steps.push("(51/(50n))^4 <= p_dis", &powi(&scaled, 4), &p_dis);
    steps.push(
        "1/(n)_4 <= (51/(50n))^4",
        &(int(1) / &n4),
        &powi(&scaled, 4),
    );
    steps.push("(51/(50n))^3 <= p_int", &powi(&scaled, 3), &p_int);
    steps.push(
        "1/(n)_3 <= (51/(50n))^3",
        &(int(1) / &n3),
        &powi(&scaled, 3),
    );
    steps.push("1/(n)_4 <= p_dis", &(int(1) / &n4), &p_dis);
    steps.push("1/(n)_3 <= p_int", &(int(1) / &n3), &p_int);
    debug_assert!(!factor.is_zero() && factor >= Rational::one());
    Ok(steps.finish(&factor))
}
