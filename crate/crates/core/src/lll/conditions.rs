use num_traits::{One, Zero};

use super::polynomial::independent_set_polynomial;
use super::{Certificate, ClassProbability, ConditionCheck, Parameters, Variant, Verdict};
use crate::error::{Error, Result};
use crate::events::{Adjacency, EventType, NeighbourhoodProfile};
use crate::rational::{self, int, powi, Rational};

/// Symmetric condition `p_max < 1 / (e (dep_degree + 1))`, decided exactly by
/// bracketing `e` between rational partial sums.
pub fn check_symmetric(p_max: &Rational, dep_degree: u64) -> Result<Certificate> {
    if *p_max < Rational::zero() || *p_max > Rational::one() {
        return Err(Error::domain("probability must lie in [0, 1]"));
    }
    let scaled = p_max * int(dep_degree as i64 + 1);
    let holds = if scaled.is_zero() {
        true
    } else {
        let mut terms = 16;
        loop {
            let (lo, hi) = rational::euler_bounds(terms);
            if &scaled * &hi < Rational::one() {
                break true;
            }
            if &scaled * &lo >= Rational::one() {
                break false;
            }
            terms *= 2;
        }
    };
    let rhs = 1.0 / (std::f64::consts::E * (dep_degree as f64 + 1.0));
    let lhs = rational::to_f64(p_max);
    let ratio = if lhs == 0.0 { f64::INFINITY } else { rhs / lhs };
    Ok(Certificate {
        variant: Variant::Symmetric,
        parameters: Parameters::None,
        probabilities: vec![ClassProbability {
            label: "max".into(),
            value: p_max.clone(),
        }],
        checks: vec![ConditionCheck {
            label: format!("p < 1/(e*{})", dep_degree + 1),
            lhs,
            rhs,
            ratio,
            holds,
        }],
        margin: ratio,
        verdict: if holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        },
    })
}

/// `P(X_i) <= x_i ∏_{j ~ i} (1 - x_j)` for every event.
pub fn check_asymmetric(
    probabilities: &[Rational],
    adjacency: &Adjacency,
    x: &[Rational],
) -> Result<Certificate> {
    if probabilities.len() != adjacency.len() || x.len() != adjacency.len() {
        return Err(Error::domain("need one probability and one x per event"));
    }
    if x.iter()
        .any(|xi| *xi <= Rational::zero() || *xi >= Rational::one())
    {
        return Err(Error::domain("every x_i must lie in (0, 1)"));
    }
    let triples = (0..x.len())
        .map(|i| {
            let rhs = adjacency
                .neighbours(i)
                .iter()
                .fold(x[i].clone(), |acc, &j| acc * (Rational::one() - &x[j]));
            (format!("event {i}"), probabilities[i].clone(), rhs)
        })
        .collect();
    Ok(Certificate::from_exact_checks(
        Variant::Asymmetric,
        Parameters::X { values: x.to_vec() },
        per_event_probabilities(probabilities),
        triples,
    ))
}

fn per_event_probabilities(probabilities: &[Rational]) -> Vec<ClassProbability> {
    probabilities
        .iter()
        .enumerate()
        .map(|(i, p)| ClassProbability {
            label: format!("event {i}"),
            value: p.clone(),
        })
        .collect()
}

/// `P(X_i) <= μ_i / Σ_{R ∈ 𝓡_i} ∏_{j ∈ R} μ_j`, summing over the independent
/// subsets of each closed neighbourhood. A constant `mu` gives the
/// single-parameter form.
pub fn check_cluster_exact(
    probabilities: &[Rational],
    adjacency: &Adjacency,
    mu: &[Rational],
) -> Result<Certificate> {
    if probabilities.len() != adjacency.len() || mu.len() != adjacency.len() {
        return Err(Error::domain("need one probability and one μ per event"));
    }
    if mu.iter().any(|m| *m <= Rational::zero()) {
        return Err(Error::domain("every μ must be positive"));
    }
    let triples = (0..mu.len())
        .map(|i| {
            let z: Rational = independent_set_polynomial(adjacency, i, mu)?;
            Ok((format!("event {i}"), probabilities[i].clone(), &mu[i] / z))
        })
        .collect::<Result<Vec<_>>>()?;
    let parameters = match mu.first() {
        Some(first) if mu.iter().all(|m| m == first) => Parameters::Single {
            mu: first.clone(),
            mu_approx: rational::to_f64(first),
        },
        _ => Parameters::PerEvent { mu: mu.to_vec() },
    };
    Ok(Certificate::from_exact_checks(
        Variant::ClusterExact,
        parameters,
        per_event_probabilities(probabilities),
        triples,
    ))
}

/// An event class together with its probability bound and the clique
/// cover of its closed neighbourhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCondition {
    pub label: String,
    pub probability: Rational,
    pub profile: NeighbourhoodProfile,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MuParams {
    /// One μ for every event.
    Single(Rational),
    /// `μ_int` for intersecting events, `μ_dis` for disjoint ones.
    TwoType { mu_int: Rational, mu_dis: Rational },
}

impl MuParams {
    pub fn for_type(&self, kind: EventType) -> &Rational {
        match (self, kind) {
            (MuParams::Single(mu), _) => mu,
            (MuParams::TwoType { mu_int, .. }, EventType::Intersecting) => mu_int,
            (MuParams::TwoType { mu_dis, .. }, EventType::Disjoint) => mu_dis,
        }
    }

    fn validate(&self) -> Result<()> {
        let positive = match self {
            MuParams::Single(mu) => *mu > Rational::zero(),
            MuParams::TwoType { mu_int, mu_dis } => {
                *mu_int > Rational::zero() && *mu_dis > Rational::zero()
            }
        };
        if positive {
            Ok(())
        } else {
            Err(Error::domain("μ parameters must be positive"))
        }
    }

    pub(crate) fn parameters(&self) -> Parameters {
        match self {
            MuParams::Single(mu) => Parameters::Single {
                mu: mu.clone(),
                mu_approx: rational::to_f64(mu),
            },
            MuParams::TwoType { mu_int, mu_dis } => Parameters::TwoType {
                mu_int: mu_int.clone(),
                mu_dis: mu_dis.clone(),
                mu_int_approx: rational::to_f64(mu_int),
                mu_dis_approx: rational::to_f64(mu_dis),
            },
        }
    }
}

/// `∏_groups (1 + μ_int·q_int + μ_dis·q_dis)^count`.
pub(crate) fn clique_product(profile: &NeighbourhoodProfile, mu: &MuParams) -> Rational {
    let mu_int = mu.for_type(EventType::Intersecting);
    let mu_dis = mu.for_type(EventType::Disjoint);
    profile.groups.iter().fold(Rational::one(), |acc, g| {
        let factor = Rational::one() + mu_int * &g.intersecting_bound + mu_dis * &g.disjoint_bound;
        acc * powi(&factor, g.count)
    })
}

/// Clique-cover product condition: for each class,
/// `p <= μ_class / ∏_j (1 + μ_int q_{j,int} + μ_dis q_{j,dis})`.
pub fn check_cluster_clique(classes: &[ClassCondition], mu: &MuParams) -> Result<Certificate> {
    mu.validate()?;
    if classes.is_empty() {
        return Err(Error::domain("at least one event class is required"));
    }
    let triples = classes
        .iter()
        .map(|c| {
            let rhs = mu.for_type(c.profile.event_type) / clique_product(&c.profile, mu);
            (c.label.clone(), c.probability.clone(), rhs)
        })
        .collect();
    let probabilities = classes
        .iter()
        .map(|c| ClassProbability {
            label: c.label.clone(),
            value: c.probability.clone(),
        })
        .collect();
    let variant = match mu {
        MuParams::Single(_) => Variant::ClusterClique,
        MuParams::TwoType { .. } => Variant::ClusterTwoType,
    };
    Ok(Certificate::from_exact_checks(
        variant,
        mu.parameters(),
        probabilities,
        triples,
    ))
}
