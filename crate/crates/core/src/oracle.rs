//! Exhaustive ground truth for small instances.

use std::collections::HashSet;

use crate::colouring::{Colour, EdgeColouring};
use crate::error::{Error, Result};
use crate::events::CanonicalEvent;
use crate::graph::Graph;
use crate::sampler::Embedding;
use crate::Mode;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Largest `n` for which injections are enumerated one by one.
pub const MAX_ENUMERATION_N: usize = 8;

/// Direct validity check: injective, in range, and no two (adjacent, in
/// proper mode) edges of `g` with equally coloured images.
pub fn is_valid_embedding(
    sigma: &Embedding,
    g: &Graph,
    colouring: &EdgeColouring,
    mode: Mode,
) -> bool {
    let image = &sigma.image_of;
    if image.len() != g.n_vertices() || image.iter().any(|&x| x >= colouring.n()) {
        return false;
    }
    if image.iter().collect::<HashSet<_>>().len() != image.len() {
        return false;
    }
    let colour_of = |&(u, v): &(usize, usize)| colouring.colour(image[u], image[v]);
    match mode {
        Mode::Rainbow => {
            let colours: HashSet<Colour> = g.edges().iter().map(colour_of).collect();
            colours.len() == g.edge_count()
        }
        Mode::Proper => (0..g.n_vertices()).all(|v| {
            let at_v: HashSet<Colour> = g
                .neighbours(v)
                .iter()
                .map(|&u| colouring.colour(image[v], image[u]))
                .collect();
            at_v.len() == g.degree(v)
        }),
    }
}

struct Search<'a> {
    g: &'a Graph,
    colouring: &'a EdgeColouring,
    mode: Mode,
    order: Vec<usize>,
    image: Vec<Option<usize>>,
    used: Vec<bool>,
    /// Colours of mapped edges at each `G`-vertex (proper mode).
    at_vertex: Vec<Vec<Colour>>,
    /// Colours of all mapped edges (rainbow mode).
    colours: HashSet<Colour>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        for x in 0..self.colouring.n() {
            if self.used[x] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Capacity(format!(
                    "backtracking exceeded {} nodes",
                    self.budget
                )));
            }
            let new: Vec<(usize, Colour)> = self
                .g
                .neighbours(v)
                .iter()
                .filter_map(|&u| self.image[u].map(|y| (u, self.colouring.colour(x, y))))
                .collect();
            let distinct = new
                .iter()
                .enumerate()
                .all(|(i, (_, c))| new[i + 1..].iter().all(|(_, d)| c != d));
            let fits = distinct
                && match self.mode {
                    Mode::Rainbow => new.iter().all(|(_, c)| !self.colours.contains(c)),
                    Mode::Proper => new.iter().all(|(u, c)| !self.at_vertex[*u].contains(c)),
                };
            if !fits {
                continue;
            }
            self.image[v] = Some(x);
            self.used[x] = true;
            for &(u, c) in &new {
                self.at_vertex[u].push(c);
                self.at_vertex[v].push(c);
                self.colours.insert(c);
            }
            if self.run(depth + 1)? {
                return Ok(true);
            }
            for &(u, c) in &new {
                self.at_vertex[u].pop();
                self.at_vertex[v].pop();
                self.colours.remove(&c);
            }
            self.image[v] = None;
            self.used[x] = false;
        }
        Ok(false)
    }
}

/// A valid embedding if one exists, by backtracking over `G`-vertices in
/// descending degree order.
pub fn exists_copy(g: &Graph, colouring: &EdgeColouring, mode: Mode) -> Result<Option<Embedding>> {
    exists_copy_with_budget(g, colouring, mode, DEFAULT_NODE_BUDGET)
}

pub fn exists_copy_with_budget(
    g: &Graph,
    colouring: &EdgeColouring,
    mode: Mode,
    budget: u64,
) -> Result<Option<Embedding>> {
    let g_size = g.n_vertices();
    if g_size > colouring.n() {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..g_size).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = Search {
        g,
        colouring,
        mode,
        order,
        image: vec![None; g_size],
        used: vec![false; colouring.n()],
        at_vertex: vec![Vec::new(); g_size],
        colours: HashSet::new(),
        nodes: 0,
        budget,
    };
    if !search.run(0)? {
        return Ok(None);
    }
    let embedding = Embedding {
        image_of: search
            .image
            .into_iter()
            .map(|x| x.expect("all mapped"))
            .collect(),
    };
    debug_assert!(is_valid_embedding(&embedding, g, colouring, mode));
    Ok(Some(embedding))
}

/// Calls `visit` on every injection `[g_size] -> [n]` in lexicographic order.
pub fn for_each_injection(g_size: usize, n: usize, mut visit: impl FnMut(&[usize])) -> Result<()> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::Capacity(format!(
            "enumeration supports n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    fn go(
        prefix: &mut Vec<usize>,
        used: &mut [bool],
        g_size: usize,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if prefix.len() == g_size {
            visit(prefix);
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, g_size, visit);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    if g_size <= n {
        go(
            &mut Vec::with_capacity(g_size),
            &mut vec![false; n],
            g_size,
            &mut visit,
        );
    }
    Ok(())
}

/// Number of valid injections, by checking every injection directly.
pub fn count_valid_embeddings(g: &Graph, colouring: &EdgeColouring, mode: Mode) -> Result<u64> {
    let mut count = 0;
    let mut sigma = Embedding {
        image_of: Vec::new(),
    };
    for_each_injection(g.n_vertices(), colouring.n(), |image| {
        sigma.image_of.clear();
        sigma.image_of.extend_from_slice(image);
        if is_valid_embedding(&sigma, g, colouring, mode) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Number of injections `[g_size] -> [n]` lying in `event`.
pub fn count_injections_in_event(event: &CanonicalEvent, g_size: usize, n: usize) -> Result<u64> {
    let mut count = 0;
    for_each_injection(g_size, n, |image| {
        if event.contains(image) {
            count += 1;
        }
    })?;
    Ok(count)
}
