//! Clique covers of closed neighbourhoods in the intersection graph, as
//! analytic size bounds, plus an exhaustive check of those bounds on small
//! instances.

use serde::Serialize;

use super::{enumerate_bad_events, intersection_graph, EventType};
use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::{CherryDensity, Graph};
use crate::rational::{self, int, ratio, Rational};
use crate::Mode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    /// Events sharing a vertex of `G`.
    G,
    /// Events sharing a vertex of `K_n`.
    Kn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassTag {
    GSideIntersecting,
    GSideDisjoint,
    KnSideIntersecting,
    KnSideDisjoint,
}

impl ClassTag {
    pub fn new(side: Side, kind: EventType) -> Self {
        match (side, kind) {
            (Side::G, EventType::Intersecting) => ClassTag::GSideIntersecting,
            (Side::G, EventType::Disjoint) => ClassTag::GSideDisjoint,
            (Side::Kn, EventType::Intersecting) => ClassTag::KnSideIntersecting,
            (Side::Kn, EventType::Disjoint) => ClassTag::KnSideDisjoint,
        }
    }
}

/// `count` cliques on one side, each containing at most `intersecting_bound`
/// intersecting events and `disjoint_bound` disjoint events.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueGroup {
    pub side: Side,
    pub count: u32,
    #[serde(serialize_with = "rational::serialize")]
    pub intersecting_bound: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub disjoint_bound: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueEntry {
    pub count: u32,
    #[serde(serialize_with = "rational::serialize")]
    pub size_bound: Rational,
    pub class: ClassTag,
}

/// Cover of the closed neighbourhood of an event of type `event_type`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighbourhoodProfile {
    pub event_type: EventType,
    pub groups: Vec<CliqueGroup>,
}

impl NeighbourhoodProfile {
    /// Flattened `(count, size_bound, class)` view; zero disjoint bounds of
    /// intersecting-only groups are omitted.
    pub fn entries(&self) -> Vec<CliqueEntry> {
        let mut out = Vec::new();
        for group in &self.groups {
            out.push(CliqueEntry {
                count: group.count,
                size_bound: group.intersecting_bound.clone(),
                class: ClassTag::new(group.side, EventType::Intersecting),
            });
            if group.disjoint_bound != int(0) {
                out.push(CliqueEntry {
                    count: group.count,
                    size_bound: group.disjoint_bound.clone(),
                    class: ClassTag::new(group.side, EventType::Disjoint),
                });
            }
        }
        out
    }

    pub fn clique_count(&self) -> u32 {
        self.groups.iter().map(|g| g.count).sum()
    }
}

fn check_k(k: &Rational) -> Result<()> {
    if *k < int(0) {
        return Err(Error::domain("k must be nonnegative"));
    }
    Ok(())
}

/// Cover used for properly coloured copies: three cliques of size at most
/// `q·(n)_2·k` (events sharing one of the three `G`-vertices) and three of
/// size at most `3p·(n)_2·k` (events sharing one of the three `K_n`-vertices).
pub fn clique_cover_proper(
    density: &CherryDensity,
    n: u64,
    k: &Rational,
) -> Result<NeighbourhoodProfile> {
    check_k(k)?;
    let n2 = int((n * n.saturating_sub(1)) as i64);
    let zero = int(0);
    Ok(NeighbourhoodProfile {
        event_type: EventType::Intersecting,
        groups: vec![
            CliqueGroup {
                side: Side::G,
                count: 3,
                intersecting_bound: &density.q * &n2 * k,
                disjoint_bound: zero.clone(),
            },
            CliqueGroup {
                side: Side::Kn,
                count: 3,
                intersecting_bound: int(3) * &density.p * &n2 * k,
                disjoint_bound: zero,
            },
        ],
    })
}

/// The four class bounds `(γ_int, γ_dis, κ_int, κ_dis)` for maximum degree
/// `delta`: `(3/2)Δ²n²k`, `Δ²n³k`, `Δ²n²k`, `Δ²n³k`.
pub fn rainbow_bounds(delta: u64, n: u64, k: &Rational) -> [Rational; 4] {
    let d2n2 = int((delta * delta) as i64) * int((n * n) as i64);
    let d2n3 = &d2n2 * int(n as i64);
    [ratio(3, 2) * &d2n2 * k, &d2n3 * k, &d2n2 * k, d2n3 * k]
}

/// Cover used for rainbow copies: for each of the 3 (intersecting) or 4
/// (disjoint) support vertices, one mixed clique on the `G` side bounded by
/// `(γ_int, γ_dis)` and one on the `K_n` side bounded by `(κ_int, κ_dis)`.
pub fn clique_cover_rainbow(
    delta: u64,
    n: u64,
    k: &Rational,
    event_type: EventType,
) -> Result<NeighbourhoodProfile> {
    check_k(k)?;
    let [g_int, g_dis, kn_int, kn_dis] = rainbow_bounds(delta, n, k);
    let count = event_type.support_size() as u32;
    Ok(NeighbourhoodProfile {
        event_type,
        groups: vec![
            CliqueGroup {
                side: Side::G,
                count,
                intersecting_bound: g_int,
                disjoint_bound: g_dis,
            },
            CliqueGroup {
                side: Side::Kn,
                count,
                intersecting_bound: kn_int,
                disjoint_bound: kn_dis,
            },
        ],
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub class: ClassTag,
    pub max_observed: u64,
    #[serde(serialize_with = "rational::serialize")]
    pub bound: Rational,
    /// `bound - max_observed`.
    pub slack: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CliqueBoundsReport {
    pub mode: Mode,
    pub n: usize,
    pub k: usize,
    pub max_degree: u64,
    pub events: usize,
    pub cliques_checked: usize,
    /// Materialized cliques that were not pairwise adjacent.
    pub non_cliques: usize,
    /// Events whose closed neighbourhood was not covered by its cliques.
    pub uncovered: usize,
    pub classes: Vec<ClassReport>,
    pub holds: bool,
}

/// Enumerates every bad event, materializes the cliques of its closed
/// neighbourhood and checks each class size against its analytic bound.
/// `k` is the local bound of `colouring` in proper mode and its global bound
/// in rainbow mode.
pub fn verify_clique_bounds(
    g: &Graph,
    colouring: &EdgeColouring,
    mode: Mode,
) -> Result<CliqueBoundsReport> {
    let n = colouring.n();
    let events = enumerate_bad_events(g, colouring, mode)?;
    let dep = intersection_graph(&events);
    let adj = &dep.adjacency;
    let stats = g.cherry_stats();
    let k = match mode {
        Mode::Proper => colouring.local_bound(),
        Mode::Rainbow => colouring.global_bound(),
    };
    let kq = int(k as i64);

    let classes: Vec<(ClassTag, Rational)> = match mode {
        Mode::Proper => {
            let profile = clique_cover_proper(&stats.density(n as u64), n as u64, &kq)?;
            profile
                .entries()
                .into_iter()
                .map(|e| (e.class, e.size_bound))
                .collect()
        }
        Mode::Rainbow => {
            let [g_int, g_dis, kn_int, kn_dis] = rainbow_bounds(stats.max_degree, n as u64, &kq);
            vec![
                (ClassTag::GSideIntersecting, g_int),
                (ClassTag::GSideDisjoint, g_dis),
                (ClassTag::KnSideIntersecting, kn_int),
                (ClassTag::KnSideDisjoint, kn_dis),
            ]
        }
    };
    let mut max_observed = vec![0u64; classes.len()];
    let mut cliques_checked = 0;
    let mut non_cliques = 0;
    let mut uncovered = 0;

    for (idx, x) in events.iter().enumerate() {
        let closed = adj.closed_neighbourhood(idx);
        let mut covered = vec![false; closed.len()];
        let mut record = |slot: usize, members: &[usize], covered: &mut [bool]| {
            cliques_checked += 1;
            if !adj.is_clique(members) {
                non_cliques += 1;
            }
            for m in members {
                if let Ok(pos) = closed.binary_search(m) {
                    covered[pos] = true;
                }
            }
            max_observed[slot] = max_observed[slot].max(members.len() as u64);
        };
        match mode {
            Mode::Proper => {
                // three cliques through the G-support and three through the image
                for v in x.g_support() {
                    let q: Vec<usize> = closed
                        .iter()
                        .copied()
                        .filter(|&j| events[j].g_contains(v))
                        .collect();
                    record(0, &q, &mut covered);
                }
                for u in x.kn_support() {
                    let q: Vec<usize> = closed
                        .iter()
                        .copied()
                        .filter(|&j| events[j].kn_contains(u))
                        .collect();
                    record(1, &q, &mut covered);
                }
            }
            Mode::Rainbow => {
                let of_kind = |members: &[usize], kind: EventType| -> Vec<usize> {
                    members
                        .iter()
                        .copied()
                        .filter(|&j| events[j].kind == kind)
                        .collect()
                };
                for v in x.g_support() {
                    // {X} ∪ Q_G: neighbours sharing G-vertex v, plus X itself
                    let q: Vec<usize> = closed
                        .iter()
                        .copied()
                        .filter(|&j| j == idx || events[j].g_contains(v))
                        .collect();
                    cliques_checked += 1;
                    if !adj.is_clique(&q) {
                        non_cliques += 1;
                    }
                    for (slot, kind) in [(0, EventType::Intersecting), (1, EventType::Disjoint)] {
                        let mut part = of_kind(&q, kind);
                        if !part.contains(&idx) {
                            part.push(idx);
                        }
                        max_observed[slot] = max_observed[slot].max(part.len() as u64);
                    }
                    for m in &q {
                        covered[closed.binary_search(m).expect("member of closed set")] = true;
                    }
                }
                for u in x.kn_support() {
                    let q: Vec<usize> = closed
                        .iter()
                        .copied()
                        .filter(|&j| j != idx && events[j].kn_contains(u))
                        .collect();
                    cliques_checked += 1;
                    if !adj.is_clique(&q) {
                        non_cliques += 1;
                    }
                    for (slot, kind) in [(2, EventType::Intersecting), (3, EventType::Disjoint)] {
                        let size = of_kind(&q, kind).len() as u64;
                        max_observed[slot] = max_observed[slot].max(size);
                    }
                    for m in &q {
                        covered[closed.binary_search(m).expect("member of closed set")] = true;
                    }
                }
            }
        }
        if covered.iter().any(|c| !c) {
            uncovered += 1;
        }
    }

    let classes: Vec<ClassReport> = classes
        .into_iter()
        .zip(max_observed)
        .map(|((class, bound), observed)| {
            let holds = int(observed as i64) <= bound;
            ClassReport {
                class,
                max_observed: observed,
                slack: rational::to_f64(&bound) - observed as f64,
                bound,
                holds,
            }
        })
        .collect();
    let holds = non_cliques == 0 && uncovered == 0 && classes.iter().all(|c| c.holds);
    Ok(CliqueBoundsReport {
        mode,
        n,
        k,
        max_degree: stats.max_degree,
        events: events.len(),
        cliques_checked,
        non_cliques,
        uncovered,
        classes,
        holds,
    })
}
