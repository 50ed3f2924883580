//! Numeric search for μ parameters maximizing the clique-cover margin.
//!
//! Margins are compared in log space with `f64`; the winning point is then
//! converted to exact rationals and re-checked exactly, so the verdict never
//! depends on floating-point rounding.

use serde::Serialize;

use super::conditions::{check_cluster_clique, ClassCondition, MuParams};
use super::Certificate;
use crate::error::{Error, Result};
use crate::events::EventType;
use crate::rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MuForm {
    Single,
    TwoType,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchConfig {
    pub form: MuForm,
    pub mu_min: f64,
    pub mu_max: f64,
    pub points_per_decade: u32,
    /// Refinement stops once the multiplicative step is below `1 + rel_step`.
    pub rel_step: f64,
}

impl SearchConfig {
    pub fn new(form: MuForm) -> Self {
        SearchConfig {
            form,
            mu_min: 1e-12,
            mu_max: 1e3,
            points_per_decade: 20,
            rel_step: 1e-4,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    #[serde(skip)]
    pub mu: MuParams,
    /// Best margin over grid points alone.
    pub grid_best_margin: f64,
    /// Margin after refinement, as evaluated in floating point.
    pub refined_margin: f64,
    pub evaluations: usize,
    pub certificate: Certificate,
}

struct Group {
    count: f64,
    int_bound: f64,
    dis_bound: f64,
}

struct Class {
    log_p: f64,
    kind: EventType,
    groups: Vec<Group>,
}

struct Objective {
    classes: Vec<Class>,
    form: MuForm,
    evaluations: usize,
}

impl Objective {
    fn new(classes: &[ClassCondition], form: MuForm) -> Self {
        let classes = classes
            .iter()
            .map(|c| Class {
                log_p: rational::to_f64(&c.probability).ln(),
                kind: c.profile.event_type,
                groups: c
                    .profile
                    .groups
                    .iter()
                    .map(|g| Group {
                        count: g.count as f64,
                        int_bound: rational::to_f64(&g.intersecting_bound),
                        dis_bound: rational::to_f64(&g.disjoint_bound),
                    })
                    .collect(),
            })
            .collect();
        Objective {
            classes,
            form,
            evaluations: 0,
        }
    }

    /// `(μ_int, μ_dis)` from log coordinates.
    fn mus(&self, point: &[f64]) -> (f64, f64) {
        match self.form {
            MuForm::Single => (point[0].exp(), point[0].exp()),
            MuForm::TwoType => (point[0].exp(), point[1].exp()),
        }
    }

    /// `min over classes of ln(rhs / p)`.
    fn log_margin(&mut self, point: &[f64]) -> f64 {
        self.evaluations += 1;
        let (mu_int, mu_dis) = self.mus(point);
        self.classes
            .iter()
            .map(|c| {
                let own = match c.kind {
                    EventType::Intersecting => mu_int,
                    EventType::Disjoint => mu_dis,
                };
                let log_product: f64 = c
                    .groups
                    .iter()
                    .map(|g| g.count * (mu_int * g.int_bound + mu_dis * g.dis_bound).ln_1p())
                    .sum();
                own.ln() - log_product - c.log_p
            })
            .fold(f64::INFINITY, f64::min)
    }
}

fn grid(lo: f64, hi: f64, per_decade: u32) -> Vec<f64> {
    let (a, b) = (lo.log10(), hi.log10());
    let steps = ((b - a) * per_decade as f64).round() as usize;
    (0..=steps)
        .map(|i| (a + (b - a) * i as f64 / steps as f64) * std::f64::consts::LN_10)
        .collect()
}

/// Log-grid search over μ in `[mu_min, mu_max]` per coordinate, then
/// pattern-search refinement (axis and diagonal moves) with halving steps.
/// Ties keep the lexicographically smallest parameter tuple.
pub fn optimize_mu(classes: &[ClassCondition], config: &SearchConfig) -> Result<SearchResult> {
    if classes.is_empty() {
        return Err(Error::domain("at least one event class is required"));
    }
    if classes.iter().any(|c| c.probability <= rational::int(0)) {
        return Err(Error::domain("class probabilities must be positive"));
    }
    if !(config.mu_min > 0.0 && config.mu_max > config.mu_min) || config.points_per_decade == 0 {
        return Err(Error::domain("invalid μ search range"));
    }
    let mut objective = Objective::new(classes, config.form);
    let axis = grid(config.mu_min, config.mu_max, config.points_per_decade);
    let dims = match config.form {
        MuForm::Single => 1,
        MuForm::TwoType => 2,
    };

    let mut best_point = vec![axis[0]; dims];
    let mut best = f64::NEG_INFINITY;
    let mut point = vec![0.0; dims];
    let total = axis.len().pow(dims as u32);
    for idx in 0..total {
        let mut rest = idx;
        for d in (0..dims).rev() {
            point[d] = axis[rest % axis.len()];
            rest /= axis.len();
        }
        let value = objective.log_margin(&point);
        if value > best {
            best = value;
            best_point.clone_from(&point);
        }
    }
    let grid_best = best;

    let (lo, hi) = (axis[0], axis[axis.len() - 1]);
    let directions: Vec<Vec<f64>> = match dims {
        1 => vec![vec![1.0], vec![-1.0]],
        _ => vec![
            vec![1.0, 0.0],
            vec![-1.0, 0.0],
            vec![0.0, 1.0],
            vec![0.0, -1.0],
            vec![1.0, 1.0],
            vec![-1.0, -1.0],
            vec![1.0, -1.0],
            vec![-1.0, 1.0],
        ],
    };
    let mut step = std::f64::consts::LN_10 / config.points_per_decade as f64;
    let min_step = config.rel_step.ln_1p();
    while step >= min_step {
        let mut improved = false;
        for dir in &directions {
            let candidate: Vec<f64> = best_point
                .iter()
                .zip(dir)
                .map(|(x, d)| (x + d * step).clamp(lo, hi))
                .collect();
            let value = objective.log_margin(&candidate);
            if value > best {
                best = value;
                best_point = candidate;
                improved = true;
            }
        }
        if !improved {
            step /= 2.0;
        }
    }

    let exact = |x: f64| rational::from_f64(x.exp());
    let mu = match config.form {
        MuForm::Single => MuParams::Single(exact(best_point[0])?),
        MuForm::TwoType => MuParams::TwoType {
            mu_int: exact(best_point[0])?,
            mu_dis: exact(best_point[1])?,
        },
    };
    let certificate = check_cluster_clique(classes, &mu)?;
    Ok(SearchResult {
        mu,
        grid_best_margin: grid_best.exp(),
        refined_margin: best.exp(),
        evaluations: objective.evaluations,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::events::{CliqueGroup, NeighbourhoodProfile, Side};
    use crate::rational::{int, ratio, Rational};

    fn single_clique(size: i64, p: Rational) -> ClassCondition {
        ClassCondition {
            label: "X".into(),
            probability: p,
            profile: NeighbourhoodProfile {
                event_type: EventType::Intersecting,
                groups: vec![CliqueGroup {
                    side: Side::G,
                    count: 1,
                    intersecting_bound: int(size),
                    disjoint_bound: int(0),
                }],
            },
        }
    }

    #[test]
    fn finds_feasible_single_mu() {
        let result = optimize_mu(
            &[single_clique(10, ratio(5, 100))],
            &SearchConfig::new(MuForm::Single),
        )
        .unwrap();
        assert!(result.certificate.holds());
        assert!(result.certificate.margin >= 1.0);
        assert!(result.refined_margin >= result.grid_best_margin);
        // μ/(1+10μ) is increasing, so the optimum is at the top of the range
        let p = 0.05;
        let mu = rational::to_f64(result.mu.for_type(EventType::Intersecting));
        assert!(mu / (1.0 + 10.0 * mu) >= p);
    }

    #[test]
    fn infeasible_input_fails() {
        let result = optimize_mu(
            &[single_clique(10, ratio(11, 100))],
            &SearchConfig::new(MuForm::Single),
        )
        .unwrap();
        assert!(!result.certificate.holds());
        assert!(result.certificate.margin < 1.0);
    }

    #[test]
    fn deterministic() {
        let classes = [single_clique(7, ratio(1, 50))];
        let a = optimize_mu(&classes, &SearchConfig::new(MuForm::TwoType)).unwrap();
        let b = optimize_mu(&classes, &SearchConfig::new(MuForm::TwoType)).unwrap();
        assert_eq!(a.mu, b.mu);
        assert_eq!(a.certificate, b.certificate);
    }

    #[test]
    fn rejects_bad_config() {
        let classes = [single_clique(7, ratio(1, 50))];
        let mut config = SearchConfig::new(MuForm::Single);
        config.mu_min = 0.0;
        assert!(optimize_mu(&classes, &config).is_err());
        assert!(optimize_mu(&[], &SearchConfig::new(MuForm::Single)).is_err());
    }
}
