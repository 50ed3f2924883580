//! Event classes and fixed μ choices for the two colouring settings.

use crate::error::{Error, Result};
use crate::events::{clique_cover_proper, clique_cover_rainbow, probability_of_type, EventType};
use crate::graph::{falling_factorial_q, CherryDensity};
use crate::rational::{powi, ratio, Rational};

use super::conditions::{ClassCondition, MuParams};

fn n_usize(n: u64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::domain("n does not fit in usize"))
}

/// The single class of (intersecting) events for properly coloured copies.
pub fn proper_classes(
    density: &CherryDensity,
    n: u64,
    k: &Rational,
) -> Result<Vec<ClassCondition>> {
    Ok(vec![ClassCondition {
        label: "intersecting".into(),
        probability: probability_of_type(EventType::Intersecting, n_usize(n)?)?,
        profile: clique_cover_proper(density, n, k)?,
    }])
}

/// Intersecting and disjoint classes for rainbow copies.
pub fn rainbow_classes(delta: u64, n: u64, k: &Rational) -> Result<Vec<ClassCondition>> {
    [EventType::Intersecting, EventType::Disjoint]
        .into_iter()
        .map(|kind| {
            Ok(ClassCondition {
                label: kind.to_string(),
                probability: probability_of_type(kind, n_usize(n)?)?,
                profile: clique_cover_rainbow(delta, n, k, kind)?,
            })
        })
        .collect()
}

/// `μ = (6/5)^6 / (n)_3`.
pub fn standard_mu_proper(n: u64) -> Result<MuParams> {
    Ok(MuParams::Single(
        powi(&ratio(6, 5), 6) / falling_factorial_q(n, 3)?,
    ))
}

/// `μ_int = (14/(10n))^3`, `μ_dis = (14/(10n))^4`.
pub fn standard_mu_rainbow(n: u64) -> Result<MuParams> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    let base = ratio(14, 10) / Rational::from_integer(n.into());
    Ok(MuParams::TwoType {
        mu_int: powi(&base, 3),
        mu_dis: powi(&base, 4),
    })
}
