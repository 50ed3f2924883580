//! Edge colourings of the complete graph `K_n`.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{content_lines, parse_header, parse_vertex};

pub type Colour = u64;

/// A total colour assignment on the `C(n, 2)` edges of `K_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouring {
    n: usize,
    colours: Vec<Colour>,
}

/// Position of edge `{u, v}` in the row-major upper triangle.
#[inline]
fn tri_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

fn edge_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| ((u + 1)..n).map(move |v| (u, v)))
}

impl EdgeColouring {
    /// Builds a colouring from a function on edges `{u, v}` with `u < v`.
    pub fn from_fn(n: usize, mut colour: impl FnMut(usize, usize) -> Colour) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("K_n needs n >= 1"));
        }
        let colours = edge_pairs(n).map(|(u, v)| colour(u, v)).collect();
        Ok(EdgeColouring { n, colours })
    }

    /// Every edge gets its own colour.
    pub fn rainbow(n: usize) -> Result<Self> {
        let mut next = 0;
        Self::from_fn(n, |_, _| {
            next += 1;
            next - 1
        })
    }

    pub fn monochromatic(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Colour of edge `{u, v}`. Panics if `u == v` or either is out of range.
    #[inline]
    pub fn colour(&self, u: usize, v: usize) -> Colour {
        assert!(
            u != v && u < self.n && v < self.n,
            "no edge {{{u}, {v}}} in K_{}",
            self.n
        );
        self.colours[tri_index(self.n, u, v)]
    }

    pub fn set_colour(&mut self, u: usize, v: usize, colour: Colour) {
        assert!(
            u != v && u < self.n && v < self.n,
            "no edge {{{u}, {v}}} in K_{}",
            self.n
        );
        let idx = tri_index(self.n, u, v);
        self.colours[idx] = colour;
    }

    /// `(u, v, colour)` for every edge, `u < v`, lexicographic.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, Colour)> + '_ {
        edge_pairs(self.n)
            .zip(self.colours.iter())
            .map(|((u, v), &c)| (u, v, c))
    }

    /// Edges of each colour, each list lexicographic.
    pub fn classes(&self) -> HashMap<Colour, Vec<(usize, usize)>> {
        let mut map: HashMap<Colour, Vec<(usize, usize)>> = HashMap::new();
        for (u, v, c) in self.iter() {
            map.entry(c).or_default().push((u, v));
        }
        map
    }

    pub fn colour_count(&self) -> usize {
        let mut seen = self.colours.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Largest colour class.
    pub fn global_bound(&self) -> usize {
        let mut counts: HashMap<Colour, usize> = HashMap::new();
        for &c in &self.colours {
            *counts.entry(c).or_default() += 1;
        }
        counts.into_values().max().unwrap_or(0)
    }

    /// Largest number of same-coloured edges at a single vertex.
    pub fn local_bound(&self) -> usize {
        let mut best = 0;
        let mut counts: HashMap<Colour, usize> = HashMap::new();
        for v in 0..self.n {
            counts.clear();
            for u in (0..self.n).filter(|&u| u != v) {
                let c = counts.entry(self.colour(u, v)).or_default();
                *c += 1;
                best = best.max(*c);
            }
        }
        best
    }

    /// `(global_bound, local_bound)`.
    pub fn boundedness(&self) -> (usize, usize) {
        (self.global_bound(), self.local_bound())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let n = parse_header(&mut lines)?;
        let mut colours: Vec<Option<Colour>> = vec![None; n * (n - 1) / 2];
        for (line_no, line) in lines {
            let fields = line.split_whitespace().collect::<Vec<_>>();
            if fields.len() != 3 {
                return Err(Error::format(line_no, "expected `<u> <v> <colour>`"));
            }
            let u = parse_vertex(fields[0], n, line_no)?;
            let v = parse_vertex(fields[1], n, line_no)?;
            if u == v {
                return Err(Error::format(line_no, format!("loop at vertex {u}")));
            }
            let c: Colour = fields[2]
                .parse()
                .map_err(|_| Error::format(line_no, format!("invalid colour {:?}", fields[2])))?;
            let slot = &mut colours[tri_index(n, u, v)];
            if slot.is_some() {
                return Err(Error::format(line_no, format!("duplicate edge {u} {v}")));
            }
            *slot = Some(c);
        }
        let colours = edge_pairs(n)
            .zip(colours)
            .map(|((u, v), c)| c.ok_or_else(|| Error::format(0, format!("missing edge {u} {v}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(EdgeColouring { n, colours })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v, c) in self.iter() {
            let _ = writeln!(out, "{u} {v} {c}");
        }
        out
    }
}

fn check_gen_args(n: usize, k: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::domain(format!("need n >= 2, got {n}")));
    }
    if k < 1 {
        return Err(Error::domain("need k >= 1"));
    }
    Ok(())
}

/// Shuffles the edges of `K_n` and fills colours greedily, `k` edges per
/// colour: exactly `⌈C(n,2)/k⌉` colours, none used more than `k` times.
pub fn gen_k_bounded(n: usize, k: usize, seed: u64) -> Result<EdgeColouring> {
    check_gen_args(n, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n * (n - 1) / 2).collect();
    order.shuffle(&mut rng);
    let mut colours = vec![0; order.len()];
    for (pos, &edge) in order.iter().enumerate() {
        colours[edge] = (pos / k) as Colour;
    }
    Ok(EdgeColouring { n, colours })
}

/// Round-robin 1-factorization of `K_n`: `n - 1` perfect matchings for even
/// `n`, `n` near-perfect matchings for odd `n`. Each returned class is a
/// matching; together they partition the edges.
pub fn round_robin_classes(n: usize) -> Vec<Vec<(usize, usize)>> {
    // odd n: add a phantom vertex `n` and drop its edges
    let m = if n.is_multiple_of(2) { n } else { n + 1 };
    let fixed = m - 1;
    let rounds = m - 1;
    (0..rounds)
        .map(|r| {
            let mut class = Vec::with_capacity(m / 2);
            let mut push = |a: usize, b: usize| {
                if a < n && b < n {
                    class.push((a.min(b), a.max(b)));
                }
            };
            push(r, fixed);
            for i in 1..m / 2 {
                push((r + i) % rounds, (r + rounds - i) % rounds);
            }
            class.sort_unstable();
            class
        })
        .collect()
}

/// Merges randomly chosen groups of `k` round-robin matchings into single
/// colours, so each colour meets every vertex at most `k` times.
pub fn gen_locally_k_bounded(n: usize, k: usize, seed: u64) -> Result<EdgeColouring> {
    check_gen_args(n, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut classes = round_robin_classes(n);
    classes.shuffle(&mut rng);
    let mut colouring = EdgeColouring {
        n,
        colours: vec![0; n * (n - 1) / 2],
    };
    for (i, class) in classes.iter().enumerate() {
        for &(u, v) in class {
            colouring.set_colour(u, v, (i / k) as Colour);
        }
    }
    Ok(colouring)
}
