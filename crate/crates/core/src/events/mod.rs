//! Canonical bad events over random injections `V(G) -> V(K_n)`.
//!
//! An event `X(e, f; a, b)` fixes the images of two ordered `G`-edges
//! `e = (e1, e2)` and `f = (f1, f2)` (with `e1 < e2`, `f1 < f2`, `e` before
//! `f` lexicographically) to the ordered `K_n`-pairs `a` and `b`. It is bad
//! when `a` and `b` carry the same colour.

mod cover;

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::{falling_factorial_q, Graph};
use crate::rational::Rational;
use crate::Mode;

pub use cover::{
    clique_cover_proper, clique_cover_rainbow, rainbow_bounds, verify_clique_bounds, ClassReport,
    ClassTag, CliqueBoundsReport, CliqueEntry, CliqueGroup, NeighbourhoodProfile, Side,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EventType {
    /// The two edges share a vertex (three vertices in total).
    Intersecting,
    /// The two edges are disjoint (four vertices in total).
    Disjoint,
}

impl EventType {
    pub fn support_size(self) -> usize {
        match self {
            EventType::Intersecting => 3,
            EventType::Disjoint => 4,
        }
    }
}

impl fmt::Display for EventType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EventType::Intersecting => "intersecting",
            EventType::Disjoint => "disjoint",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalEvent {
    pub e: (usize, usize),
    pub f: (usize, usize),
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub kind: EventType,
}

impl CanonicalEvent {
    /// Validates ordering and injectivity of `e1->a1, e2->a2, f1->b1, f2->b2`.
    pub fn new(
        e: (usize, usize),
        f: (usize, usize),
        a: (usize, usize),
        b: (usize, usize),
    ) -> Result<Self> {
        if e.0 >= e.1 || f.0 >= f.1 {
            return Err(Error::domain(
                "G-edge pairs must satisfy e1 < e2 and f1 < f2",
            ));
        }
        if e >= f {
            return Err(Error::domain("e must precede f lexicographically"));
        }
        if a.0 == a.1 || b.0 == b.1 {
            return Err(Error::domain("image pairs must have distinct endpoints"));
        }
        let pairs = [(e.0, a.0), (e.1, a.1), (f.0, b.0), (f.1, b.1)];
        if !is_injective_partial_map(&pairs) {
            return Err(Error::domain("the induced partial map is not an injection"));
        }
        let shared = [f.0, f.1]
            .iter()
            .filter(|v| **v == e.0 || **v == e.1)
            .count();
        let kind = if shared == 0 {
            EventType::Disjoint
        } else {
            EventType::Intersecting
        };
        Ok(CanonicalEvent { e, f, a, b, kind })
    }

    /// The four `(G-vertex, K_n-vertex)` assignments, possibly with repeats.
    pub fn assignments(&self) -> [(usize, usize); 4] {
        [
            (self.e.0, self.a.0),
            (self.e.1, self.a.1),
            (self.f.0, self.b.0),
            (self.f.1, self.b.1),
        ]
    }

    /// Distinct assignments sorted by `G`-vertex.
    pub fn partial_map(&self) -> Vec<(usize, usize)> {
        let mut map = self.assignments().to_vec();
        map.sort_unstable();
        map.dedup();
        map
    }

    pub fn g_support(&self) -> Vec<usize> {
        self.partial_map().into_iter().map(|(g, _)| g).collect()
    }

    pub fn kn_support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.partial_map().into_iter().map(|(_, k)| k).collect();
        s.sort_unstable();
        s
    }

    pub fn g_contains(&self, v: usize) -> bool {
        v == self.e.0 || v == self.e.1 || v == self.f.0 || v == self.f.1
    }

    pub fn kn_contains(&self, v: usize) -> bool {
        v == self.a.0 || v == self.a.1 || v == self.b.0 || v == self.b.1
    }

    /// Whether the injection `sigma` (indexed by `G`-vertex) lies in this event.
    pub fn contains(&self, sigma: &[usize]) -> bool {
        self.assignments()
            .iter()
            .all(|&(g, k)| sigma.get(g) == Some(&k))
    }

    pub fn probability(&self, n: usize) -> Result<Rational> {
        event_probability(self, n)
    }
}

fn is_injective_partial_map(pairs: &[(usize, usize)]) -> bool {
    pairs.iter().enumerate().all(|(i, &(g1, k1))| {
        pairs[i + 1..]
            .iter()
            .all(|&(g2, k2)| (g1 == g2) == (k1 == k2))
    })
}

/// All bad events for `g` under `colouring`, in canonical order: by `e`,
/// then `f`, then `a`, then `b`. Proper mode keeps only intersecting pairs.
pub fn enumerate_bad_events(
    g: &Graph,
    colouring: &EdgeColouring,
    mode: Mode,
) -> Result<Vec<CanonicalEvent>> {
    let n = colouring.n();
    if g.n_vertices() > n {
        return Err(Error::domain(format!(
            "G has {} vertices but K_n has only {n}",
            g.n_vertices()
        )));
    }
    // ordered pairs per colour, lexicographic
    let mut by_colour = colouring.classes();
    for pairs in by_colour.values_mut() {
        let mut ordered: Vec<_> = pairs.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
        ordered.sort_unstable();
        *pairs = ordered;
    }
    let edges = g.edges();
    let per_e: Vec<Vec<CanonicalEvent>> = (0..edges.len())
        .into_par_iter()
        .map(|i| {
            let mut out = Vec::new();
            let e = edges[i];
            for &f in &edges[i + 1..] {
                let intersecting = e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1;
                if mode == Mode::Proper && !intersecting {
                    continue;
                }
                for a0 in 0..n {
                    for a1 in (0..n).filter(|&x| x != a0) {
                        let class = &by_colour[&colouring.colour(a0, a1)];
                        for &b in class {
                            if let Ok(x) = CanonicalEvent::new(e, f, (a0, a1), b) {
                                out.push(x);
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    Ok(per_e.into_iter().flatten().collect())
}

/// `1/(n)_3` for intersecting events and `1/(n)_4` for disjoint ones.
pub fn event_probability(x: &CanonicalEvent, n: usize) -> Result<Rational> {
    probability_of_type(x.kind, n)
}

pub fn probability_of_type(kind: EventType, n: usize) -> Result<Rational> {
    let s = kind.support_size() as u64;
    if (n as u64) < s {
        return Err(Error::domain(format!(
            "{kind} events need n >= {s}, got {n}"
        )));
    }
    Ok(falling_factorial_q(n as u64, s)?.recip())
}

/// True iff no injection extends both partial maps.
pub fn conflict(x: &CanonicalEvent, y: &CanonicalEvent) -> bool {
    let xs = x.assignments();
    let ys = y.assignments();
    xs.iter()
        .any(|&(g1, k1)| ys.iter().any(|&(g2, k2)| (g1 == g2) != (k1 == k2)))
}

/// Whether the two events share a `G`-vertex or a `K_n`-vertex.
pub fn intersecting(x: &CanonicalEvent, y: &CanonicalEvent) -> bool {
    g_intersecting(x, y) || kn_intersecting(x, y)
}

pub fn g_intersecting(x: &CanonicalEvent, y: &CanonicalEvent) -> bool {
    [y.e.0, y.e.1, y.f.0, y.f.1]
        .iter()
        .any(|&v| x.g_contains(v))
}

pub fn kn_intersecting(x: &CanonicalEvent, y: &CanonicalEvent) -> bool {
    [y.a.0, y.a.1, y.b.0, y.b.1]
        .iter()
        .any(|&v| x.kn_contains(v))
}

/// Symmetric adjacency lists without self-loops, each sorted ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Adjacency {
    neighbours: Vec<Vec<usize>>,
}

impl Adjacency {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut neighbours = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                neighbours[u].push(v);
                neighbours[v].push(u);
            }
        }
        for list in &mut neighbours {
            list.sort_unstable();
            list.dedup();
        }
        Adjacency { neighbours }
    }

    pub fn len(&self) -> usize {
        self.neighbours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.neighbours.is_empty()
    }

    pub fn neighbours(&self, i: usize) -> &[usize] {
        &self.neighbours[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbours[i].len()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbours.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.neighbours[i].binary_search(&j).is_ok()
    }

    /// `i` together with its neighbours, ascending.
    pub fn closed_neighbourhood(&self, i: usize) -> Vec<usize> {
        let mut out = self.neighbours[i].clone();
        let pos = out.partition_point(|&j| j < i);
        out.insert(pos, i);
        out
    }

    pub fn edge_count(&self) -> usize {
        self.neighbours.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_clique(&self, members: &[usize]) -> bool {
        members.iter().enumerate().all(|(idx, &i)| {
            members[idx + 1..]
                .iter()
                .all(|&j| i == j || self.is_adjacent(i, j))
        })
    }
}

/// Intersection graph over a list of events.
#[derive(Clone, Debug)]
pub struct DependencyGraph {
    pub events: Vec<CanonicalEvent>,
    pub adjacency: Adjacency,
}

impl DependencyGraph {
    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }
}

/// Joins two events iff they are `G`-intersecting or `K_n`-intersecting.
pub fn intersection_graph(events: &[CanonicalEvent]) -> DependencyGraph {
    let max_vertex = events
        .iter()
        .flat_map(|x| [x.e.1, x.f.1, x.a.0, x.a.1, x.b.0, x.b.1])
        .max()
        .map_or(0, |m| m + 1);
    let mut by_g = vec![Vec::new(); max_vertex];
    let mut by_kn = vec![Vec::new(); max_vertex];
    for (idx, x) in events.iter().enumerate() {
        for v in x.g_support() {
            by_g[v].push(idx);
        }
        for v in x.kn_support() {
            by_kn[v].push(idx);
        }
    }
    let neighbours = events
        .par_iter()
        .enumerate()
        .map(|(idx, x)| {
            let mut nb: Vec<usize> = x
                .g_support()
                .into_iter()
                .flat_map(|v| by_g[v].iter().copied())
                .chain(
                    x.kn_support()
                        .into_iter()
                        .flat_map(|v| by_kn[v].iter().copied()),
                )
                .filter(|&j| j != idx)
                .collect();
            nb.sort_unstable();
            nb.dedup();
            nb
        })
        .collect();
    DependencyGraph {
        events: events.to_vec(),
        adjacency: Adjacency { neighbours },
    }
}

/// Conflict graph: joins two events iff no injection extends both.
pub fn conflict_graph(events: &[CanonicalEvent]) -> Adjacency {
    let edges = (0..events.len()).flat_map(|i| {
        ((i + 1)..events.len())
            .filter(move |&j| conflict(&events[i], &events[j]))
            .map(move |j| (i, j))
    });
    Adjacency::from_edges(events.len(), edges.collect::<Vec<_>>())
}
