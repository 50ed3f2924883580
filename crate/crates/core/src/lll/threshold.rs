//! Largest admissible colour bound `k` under each existence theorem.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::CherryDensity;
use crate::rational::{self, int, powi, ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// Proper copies: `216 (3k + 2Δ)^7 (Δ + 1)^20 k < n`.
    Thm2,
    /// Proper copies: `k <= (1/3)(5/6)^5 (n - 2) / (q + 3p)`.
    Thm3,
    /// Rainbow Hamilton cycles: `k <= n / 64`.
    Thm5,
    /// Rainbow copies: `k <= n / (51 Δ²)`.
    Thm7,
    /// Proper copies: `k <= (n - 2) / (22.4 Δ²)`.
    Cor4,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ThresholdParams {
    pub n: u64,
    pub delta: Option<u64>,
    /// Cherry parameters for the proper-copy bound; when absent the worst
    /// case for `delta` is used.
    pub density: Option<CherryDensity>,
}

impl ThresholdParams {
    pub fn with_delta(n: u64, delta: u64) -> Self {
        ThresholdParams {
            n,
            delta: Some(delta),
            density: None,
        }
    }

    pub fn with_density(n: u64, density: CherryDensity) -> Self {
        ThresholdParams {
            n,
            delta: None,
            density: Some(density),
        }
    }

    fn delta(&self, theorem: Theorem) -> Result<u64> {
        self.delta
            .ok_or_else(|| Error::domain(format!("{theorem:?} needs the maximum degree")))
    }

    fn positive_delta(&self, theorem: Theorem) -> Result<u64> {
        match self.delta(theorem)? {
            0 => Err(Error::domain(format!(
                "{theorem:?} needs maximum degree > 0"
            ))),
            d => Ok(d),
        }
    }
}

/// `(1/3)(5/6)^5`.
pub(crate) fn proper_constant() -> Rational {
    ratio(1, 3) * powi(&ratio(5, 6), 5)
}

/// The real-valued bound on `k` for the closed-form theorems. `None` when the
/// bound is vacuous (a graph without cherries admits every colouring).
pub fn threshold_value(theorem: Theorem, params: &ThresholdParams) -> Result<Option<Rational>> {
    let n = params.n;
    let n_minus_2 = int(n as i64 - 2).max(int(0));
    Ok(Some(match theorem {
        Theorem::Thm2 => return Err(Error::domain("Thm2 has no closed form; use threshold")),
        Theorem::Thm3 => {
            let density = match (&params.density, params.delta) {
                (Some(d), _) => d.clone(),
                (None, Some(delta)) => CherryDensity::from_max_degree(delta),
                (None, None) => {
                    return Err(Error::domain(
                        "Thm3 needs cherry statistics or a maximum degree",
                    ))
                }
            };
            let denom = &density.q + int(3) * &density.p;
            if denom.is_zero() {
                return Ok(None);
            }
            proper_constant() * n_minus_2 / denom
        }
        Theorem::Thm5 => ratio(n as i64, 64),
        Theorem::Thm7 => {
            let d = params.positive_delta(theorem)? as i64;
            ratio(n as i64, 51 * d * d)
        }
        Theorem::Cor4 => {
            let d = params.positive_delta(theorem)? as i64;
            // (n - 2) / (22.4 Δ²) = 5 (n - 2) / (112 Δ²)
            n_minus_2 * ratio(5, 112 * d * d)
        }
    }))
}

/// Largest integer `k` satisfying the theorem's hypothesis.
///
/// For `Thm2` this is an ascending search on the strict inequality, capped
/// at `n`. A vacuous `Thm3` bound (no cherries) returns `n - 1`, the largest
/// local bound any colouring of `K_n` can have.
pub fn threshold(theorem: Theorem, params: &ThresholdParams) -> Result<u64> {
    if theorem == Theorem::Thm2 {
        let delta = params.delta(theorem)?;
        let n = BigInt::from(params.n);
        let holds = |k: u64| {
            let lhs = BigInt::from(216)
                * num_traits::pow(BigInt::from(3 * k + 2 * delta), 7)
                * num_traits::pow(BigInt::from(delta + 1), 20)
                * BigInt::from(k);
            lhs < n
        };
        let mut k = 0;
        while k < params.n && holds(k + 1) {
            k += 1;
        }
        return Ok(k);
    }
    match threshold_value(theorem, params)? {
        Some(value) => Ok(rational::floor_to_u64(&value).unwrap_or(0)),
        None => Ok(params.n.saturating_sub(1)),
    }
}
