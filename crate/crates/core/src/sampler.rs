//! Swap-resampling search for a properly coloured or rainbow copy of `G`.
//!
//! The injection is kept as a full permutation of `V(K_n)` whose first
//! `|V(G)|` entries are the images of `G`'s vertices. Resampling a vertex
//! swaps its image with a uniformly random position of the permutation, so
//! the distribution outside the resampled support stays uniform.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::colouring::{Colour, EdgeColouring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;
use crate::Mode;

/// An injection `V(G) -> V(K_n)`, `image_of[v]` being the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Embedding {
    pub image_of: Vec<usize>,
}

impl Embedding {
    pub fn is_injective(&self) -> bool {
        let mut seen = self.image_of.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

fn check_sizes(g_size: usize, n: usize) -> Result<()> {
    if g_size > n {
        return Err(Error::domain(format!(
            "G has {g_size} vertices but K_n has only {n}"
        )));
    }
    Ok(())
}

fn shuffled(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// A uniform injection `[g_size] -> [n]`, determined by `seed`.
pub fn random_injection(g_size: usize, n: usize, seed: u64) -> Result<Embedding> {
    check_sizes(g_size, n)?;
    let mut perm = shuffled(n, &mut ChaCha8Rng::seed_from_u64(seed));
    perm.truncate(g_size);
    Ok(Embedding { image_of: perm })
}

/// Pairs `(i, j)`, `i < j`, of edge indices of `g` whose images share a
/// colour, in lexicographic order. Proper mode only looks at edges sharing
/// a vertex.
pub fn violated_events(
    sigma: &Embedding,
    g: &Graph,
    colouring: &EdgeColouring,
    mode: Mode,
) -> Vec<(usize, usize)> {
    let edges = g.edges();
    let colour = |i: usize| {
        let (u, v) = edges[i];
        colouring.colour(sigma.image_of[u], sigma.image_of[v])
    };
    let mut out = Vec::new();
    match mode {
        Mode::Rainbow => {
            let colours: Vec<Colour> = (0..edges.len()).map(colour).collect();
            for i in 0..edges.len() {
                for j in (i + 1)..edges.len() {
                    if colours[i] == colours[j] {
                        out.push((i, j));
                    }
                }
            }
        }
        Mode::Proper => {
            for v in 0..g.n_vertices() {
                let incident = g.incident_edges(v);
                for (a, &i) in incident.iter().enumerate() {
                    for &j in &incident[a + 1..] {
                        if colour(i) == colour(j) {
                            out.push((i.min(j), i.max(j)));
                        }
                    }
                }
            }
            out.sort_unstable();
        }
    }
    out
}

/// How the next violated pair is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Selection {
    #[default]
    Smallest,
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FindConfig {
    pub seed: u64,
    /// Defaults to `1000 · |E(G)|²`.
    pub max_resamples: Option<u64>,
    pub selection: Selection,
}

impl FindConfig {
    pub fn new(seed: u64) -> Self {
        FindConfig {
            seed,
            max_resamples: None,
            selection: Selection::Smallest,
        }
    }

    pub fn with_max_resamples(mut self, max: u64) -> Self {
        self.max_resamples = Some(max);
        self
    }

    pub fn budget(&self, g: &Graph) -> u64 {
        let m = g.edge_count() as u64;
        self.max_resamples.unwrap_or(1000 * m * m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum FindOutcome {
    Found {
        mode: Mode,
        resamples: u64,
        image_of: Vec<usize>,
    },
    BudgetExhausted {
        mode: Mode,
        resamples: u64,
        violations: usize,
        image_of: Vec<usize>,
    },
}

impl FindOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, FindOutcome::Found { .. })
    }

    pub fn resamples(&self) -> u64 {
        match self {
            FindOutcome::Found { resamples, .. }
            | FindOutcome::BudgetExhausted { resamples, .. } => *resamples,
        }
    }

    pub fn embedding(&self) -> Option<Embedding> {
        match self {
            FindOutcome::Found { image_of, .. } => Some(Embedding {
                image_of: image_of.clone(),
            }),
            FindOutcome::BudgetExhausted { .. } => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("outcome serializes")
    }
}

/// Bucket key: rainbow mode has one bucket per colour, proper mode one per
/// (`G`-vertex, colour).
type Key = (usize, Colour);

struct Tracker<'a> {
    g: &'a Graph,
    colouring: &'a EdgeColouring,
    mode: Mode,
    perm: Vec<usize>,
    buckets: HashMap<Key, Vec<usize>>,
    violating: BTreeSet<(usize, usize)>,
}

impl<'a> Tracker<'a> {
    fn new(g: &'a Graph, colouring: &'a EdgeColouring, mode: Mode, perm: Vec<usize>) -> Self {
        let mut t = Tracker {
            g,
            colouring,
            mode,
            perm,
            buckets: HashMap::new(),
            violating: BTreeSet::new(),
        };
        for i in 0..g.edge_count() {
            t.insert(i);
        }
        t
    }

    fn keys(&self, i: usize) -> ([Key; 2], usize) {
        let (u, v) = self.g.edges()[i];
        let c = self.colouring.colour(self.perm[u], self.perm[v]);
        match self.mode {
            Mode::Rainbow => ([(usize::MAX, c), (0, 0)], 1),
            Mode::Proper => ([(u, c), (v, c)], 2),
        }
    }

    fn insert(&mut self, i: usize) {
        let (keys, len) = self.keys(i);
        for key in &keys[..len] {
            let bucket = self.buckets.entry(*key).or_default();
            for &j in bucket.iter() {
                self.violating.insert((i.min(j), i.max(j)));
            }
            bucket.push(i);
        }
    }

    fn remove(&mut self, i: usize) {
        let (keys, len) = self.keys(i);
        for key in &keys[..len] {
            let bucket = self.buckets.get_mut(key).expect("edge is tracked");
            bucket.retain(|&j| j != i);
            for &j in bucket.iter() {
                self.violating.remove(&(i.min(j), i.max(j)));
            }
            if bucket.is_empty() {
                self.buckets.remove(key);
            }
        }
    }

    /// Swaps the image of `G`-vertex `v` with position `r` of the permutation.
    fn swap(&mut self, v: usize, r: usize) {
        if v == r {
            return;
        }
        let g_size = self.g.n_vertices();
        let mut affected: Vec<usize> = self.g.incident_edges(v).to_vec();
        if r < g_size {
            affected.extend_from_slice(self.g.incident_edges(r));
            affected.sort_unstable();
            affected.dedup();
        }
        for &i in &affected {
            self.remove(i);
        }
        self.perm.swap(v, r);
        for &i in &affected {
            self.insert(i);
        }
    }

    fn image(&self) -> Vec<usize> {
        self.perm[..self.g.n_vertices()].to_vec()
    }
}

fn support(g: &Graph, (i, j): (usize, usize)) -> Vec<usize> {
    let (a, b) = g.edges()[i];
    let (c, d) = g.edges()[j];
    let mut s = vec![a, b, c, d];
    s.sort_unstable();
    s.dedup();
    s
}

/// Resampling search for a valid copy of `g` under `colouring`.
///
/// Each iteration picks a violated pair, and swaps each of its 3 or 4
/// `G`-vertices with a uniformly random position. Deterministic given the
/// seed. Returned copies have been re-checked by [`oracle::is_valid_embedding`].
pub fn find_copy(
    g: &Graph,
    colouring: &EdgeColouring,
    mode: Mode,
    config: &FindConfig,
) -> Result<FindOutcome> {
    let n = colouring.n();
    check_sizes(g.n_vertices(), n)?;
    let budget = config.budget(g);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let perm = shuffled(n, &mut rng);
    let mut tracker = Tracker::new(g, colouring, mode, perm);
    let mut resamples = 0;
    while !tracker.violating.is_empty() {
        if resamples >= budget {
            return Ok(FindOutcome::BudgetExhausted {
                mode,
                resamples,
                violations: tracker.violating.len(),
                image_of: tracker.image(),
            });
        }
        let pair = match config.selection {
            Selection::Smallest => *tracker.violating.iter().next().expect("nonempty"),
            Selection::Random => {
                let idx = rng.gen_range(0..tracker.violating.len());
                *tracker.violating.iter().nth(idx).expect("in range")
            }
        };
        for v in support(g, pair) {
            let r = rng.gen_range(0..n);
            tracker.swap(v, r);
        }
        resamples += 1;
    }
    let embedding = Embedding {
        image_of: tracker.image(),
    };
    assert!(
        oracle::is_valid_embedding(&embedding, g, colouring, mode),
        "resampling returned an invalid embedding"
    );
    Ok(FindOutcome::Found {
        mode,
        resamples,
        image_of: embedding.image_of,
    })
}
