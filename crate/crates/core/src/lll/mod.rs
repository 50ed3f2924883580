//! Local-lemma conditions and the thresholds derived from them.
//!
//! Every check produces a [`Certificate`]: which condition was checked,
//! with which parameters, the per-class probabilities, the smallest
//! `rhs / lhs` ratio over all checked inequalities (the *margin*) and the
//! resulting verdict.

mod chain;
mod conditions;
mod polynomial;
mod search;
mod setup;
mod threshold;

use serde::Serialize;

use crate::rational::{self, Rational};

pub use chain::{evaluate_chain, verify_inequality_chain, ChainReport, ChainSetting, ChainStep};
pub use conditions::{
    check_asymmetric, check_cluster_clique, check_cluster_exact, check_symmetric, ClassCondition,
    MuParams,
};
pub use polynomial::{independent_set_counts, independent_set_polynomial, MAX_EXACT_NEIGHBOURHOOD};
pub use search::{optimize_mu, MuForm, SearchConfig, SearchResult};
pub use setup::{proper_classes, rainbow_classes, standard_mu_proper, standard_mu_rainbow};
pub use threshold::{threshold, threshold_value, Theorem, ThresholdParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// `P(X) < 1 / (e (d + 1))` with `d` the maximum degree.
    Symmetric,
    /// `P(X_i) <= x_i ∏_{j ~ i} (1 - x_j)`.
    Asymmetric,
    /// `P(X_i) <= μ_i / Σ_{R independent in Γ*(X_i)} ∏_{j ∈ R} μ_j`.
    ClusterExact,
    /// Product form over a clique cover with one μ.
    ClusterClique,
    /// Product form over mixed cliques with one μ per event type.
    ClusterTwoType,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Parameters {
    None,
    X {
        #[serde(serialize_with = "rational::serialize_vec")]
        values: Vec<Rational>,
    },
    PerEvent {
        #[serde(serialize_with = "rational::serialize_vec")]
        mu: Vec<Rational>,
    },
    Single {
        #[serde(serialize_with = "rational::serialize")]
        mu: Rational,
        mu_approx: f64,
    },
    TwoType {
        #[serde(serialize_with = "rational::serialize")]
        mu_int: Rational,
        #[serde(serialize_with = "rational::serialize")]
        mu_dis: Rational,
        mu_int_approx: f64,
        mu_dis_approx: f64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassProbability {
    pub label: String,
    #[serde(serialize_with = "rational::serialize")]
    pub value: Rational,
}

/// One checked inequality `lhs <= rhs` (or `<` for the symmetric variant).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionCheck {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub variant: Variant,
    pub parameters: Parameters,
    pub probabilities: Vec<ClassProbability>,
    pub checks: Vec<ConditionCheck>,
    pub margin: f64,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// Assembles a certificate from exact `(label, lhs, rhs)` triples
    /// checked as `lhs <= rhs`.
    pub(crate) fn from_exact_checks(
        variant: Variant,
        parameters: Parameters,
        probabilities: Vec<ClassProbability>,
        triples: Vec<(String, Rational, Rational)>,
    ) -> Self {
        let mut margin = f64::INFINITY;
        let mut all = true;
        let checks = triples
            .into_iter()
            .map(|(label, lhs, rhs)| {
                let holds = lhs <= rhs;
                all &= holds;
                let ratio = if lhs == rational::int(0) {
                    f64::INFINITY
                } else {
                    rational::to_f64(&(&rhs / &lhs))
                };
                margin = margin.min(ratio);
                ConditionCheck {
                    label,
                    lhs: rational::to_f64(&lhs),
                    rhs: rational::to_f64(&rhs),
                    ratio,
                    holds,
                }
            })
            .collect();
        Certificate {
            variant,
            parameters,
            probabilities,
            checks,
            margin,
            verdict: if all { Verdict::Holds } else { Verdict::Fails },
        }
    }
}
