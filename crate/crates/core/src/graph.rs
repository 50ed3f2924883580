//! The target graph `G` and the degree / cherry statistics that parameterize
//! every threshold.
//!
//! A *cherry* is a path with two edges. It is stored centre-first with
//! ordered endpoints, so `x - y - z` and `z - y - x` are the same cherry.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Undirected simple graph on vertices `0..n_vertices`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically, so the
/// position of an edge in [`Graph::edges`] is its canonical index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            if u >= n_vertices || v >= n_vertices {
                return Err(Error::domain(format!(
                    "edge {u} {v} has an endpoint >= {n_vertices}"
                )));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::domain(format!("duplicate edge {u} {v}")));
            }
        }
        Ok(Self::from_sorted(n_vertices, set.into_iter().collect()))
    }

    fn from_sorted(n_vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n_vertices];
        let mut incident = vec![Vec::new(); n_vertices];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push(v);
            adjacency[v].push(u);
            incident[u].push(idx);
            incident[v].push(idx);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n_vertices,
            edges,
            adjacency,
            incident,
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Indices (into [`Graph::edges`]) of the edges at `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n_vertices && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// All cherries as `(centre, left, right)` with `left < right`.
    pub fn cherries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.n_vertices).flat_map(move |c| {
            let nb = &self.adjacency[c];
            (0..nb.len()).flat_map(move |i| ((i + 1)..nb.len()).map(move |j| (c, nb[i], nb[j])))
        })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n_vertices {
            return Err(Error::domain(
                "permutation length differs from vertex count",
            ));
        }
        Graph::new(
            self.n_vertices,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>();
        Self::from_sorted(n, edges)
    }

    /// Cycle `C_n`; for `n < 3` this degenerates to a path.
    pub fn cycle(n: usize) -> Self {
        if n < 3 {
            return Self::path(n);
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect::<Vec<_>>();
        Self::from_sorted(n, edges)
    }

    /// `n / 2` disjoint edges (plus an isolated vertex when `n` is odd).
    pub fn matching(n: usize) -> Self {
        let edges = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>();
        Self::from_sorted(n, edges)
    }

    /// Circulant graph with maximum degree `delta`: vertex `i` is joined to
    /// `i ± 1, …, i ± ⌊delta/2⌋`, and for odd `delta` and even `n` also to
    /// `i + n/2`. Degrees are capped by what `n` allows.
    pub fn circulant(n: usize, delta: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for s in 1..=delta / 2 {
                edges.push((i, (i + s) % n));
            }
            if delta % 2 == 1 && n.is_multiple_of(2) {
                edges.push((i, (i + n / 2) % n));
            }
        }
        let set: BTreeSet<_> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        Self::from_sorted(n, set.into_iter().collect())
    }

    /// Random graph with maximum degree at most `delta`: candidate pairs are
    /// visited in random order and kept with probability `density` when
    /// both endpoints still have spare degree.
    pub fn random_bounded_degree<R: Rng + ?Sized>(
        n: usize,
        delta: usize,
        density: f64,
        rng: &mut R,
    ) -> Self {
        let mut pairs = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect::<Vec<_>>();
        pairs.shuffle(rng);
        let mut deg = vec![0usize; n];
        let mut kept = BTreeSet::new();
        for (u, v) in pairs {
            if deg[u] < delta && deg[v] < delta && rng.gen_bool(density.clamp(0.0, 1.0)) {
                deg[u] += 1;
                deg[v] += 1;
                kept.insert((u, v));
            }
        }
        Self::from_sorted(n, kept.into_iter().collect())
    }

    /// Parses the edge-list format: `n <N>` on the first content line, then
    /// one `<u> <v>` pair per line. `#` starts a comment line; blank lines are
    /// ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let n = parse_header(&mut lines)?;
        let mut set = BTreeSet::new();
        for (line_no, line) in lines {
            let fields = line.split_whitespace().collect::<Vec<_>>();
            if fields.len() != 2 {
                return Err(Error::format(line_no, "expected `<u> <v>`"));
            }
            let u = parse_vertex(fields[0], n, line_no)?;
            let v = parse_vertex(fields[1], n, line_no)?;
            if u == v {
                return Err(Error::format(line_no, format!("loop at vertex {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::format(line_no, format!("duplicate edge {u} {v}")));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n_vertices);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn cherry_stats(&self) -> CherryStats {
        cherry_stats(self)
    }
}

pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<usize> {
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::format(1, "missing `n <N>` header"))?;
    let mut fields = header.split_whitespace();
    match (fields.next(), fields.next(), fields.next()) {
        (Some("n"), Some(n), None) => n
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::format(line_no, format!("invalid vertex count {n:?}"))),
        _ => Err(Error::format(line_no, "expected header `n <N>`")),
    }
}

pub(crate) fn parse_vertex(field: &str, n: usize, line_no: usize) -> Result<usize> {
    let v: usize = field
        .parse()
        .map_err(|_| Error::format(line_no, format!("invalid vertex id {field:?}")))?;
    if v >= n {
        return Err(Error::format(
            line_no,
            format!("vertex {v} out of range (n = {n})"),
        ));
    }
    Ok(v)
}

/// Degree and cherry counts of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CherryStats {
    /// Number of cherries; the `pn` of the cherry-count hypothesis.
    pub total_cherries: u64,
    /// Largest number of cherries containing a single vertex, as centre or
    /// endpoint.
    pub max_cherries_per_vertex: u64,
    pub max_degree: u64,
    pub edge_count: u64,
}

impl CherryStats {
    /// `(p, q)` with `p = total_cherries / n`.
    pub fn density(&self, n: u64) -> CherryDensity {
        CherryDensity {
            p: Rational::new(self.total_cherries.into(), n.max(1).into()),
            q: rational::int(self.max_cherries_per_vertex as i64),
        }
    }
}

/// Cherry parameters as exact values: at most `p·n` cherries in total, at
/// most `q` through any vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CherryDensity {
    pub p: Rational,
    pub q: Rational,
}

impl CherryDensity {
    /// The worst case for maximum degree `delta`: `p = Δ²/2`, `q = 3Δ²/2`.
    pub fn from_max_degree(delta: u64) -> Self {
        let d2 = (delta * delta) as i64;
        CherryDensity {
            p: rational::ratio(d2, 2),
            q: rational::ratio(3 * d2, 2),
        }
    }
}

fn choose2(d: u64) -> u64 {
    d * d.saturating_sub(1) / 2
}

pub fn cherry_stats(g: &Graph) -> CherryStats {
    let deg = |v: usize| g.degree(v) as u64;
    let total_cherries = (0..g.n_vertices()).map(|v| choose2(deg(v))).sum();
    let max_cherries_per_vertex = (0..g.n_vertices())
        .map(|v| {
            let as_endpoint: u64 = g.neighbours(v).iter().map(|&u| deg(u) - 1).sum();
            choose2(deg(v)) + as_endpoint
        })
        .max()
        .unwrap_or(0);
    CherryStats {
        total_cherries,
        max_cherries_per_vertex,
        max_degree: g.max_degree() as u64,
        edge_count: g.edge_count() as u64,
    }
}

/// `n (n-1) … (n-k+1)`.
pub fn falling_factorial(n: u64, k: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::domain(format!(
            "falling factorial ({n})_{k} needs k <= n"
        )));
    }
    Ok(((n - k + 1)..=n).fold(BigUint::one(), |acc, f| acc * f))
}

/// Same as [`falling_factorial`], as an exact rational.
pub fn falling_factorial_q(n: u64, k: u64) -> Result<Rational> {
    Ok(Rational::from_integer(falling_factorial(n, k)?.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_total_cherries(g: &Graph) -> u64 {
        let n = g.n_vertices();
        let mut count = 0;
        for x in 0..n {
            for y in 0..n {
                for z in (x + 1)..n {
                    if x != y && y != z && g.has_edge(x, y) && g.has_edge(y, z) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn parse_path() {
        let g = Graph::parse("n 3\n0 1\n1 2\n").unwrap();
        assert_eq!(g.n_vertices(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            Graph::parse("n 2\n0 0\n"),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse("n 4\n0 1\n0 1\n"),
            Err(Error::Format { line: 3, .. })
        ));
        assert!(matches!(
            Graph::parse("n 4\n0 1\n1 0\n"),
            Err(Error::Format { .. })
        ));
        assert!(matches!(
            Graph::parse("n 3\n0 3\n"),
            Err(Error::Format { .. })
        ));
        assert!(matches!(
            Graph::parse("0 1\n"),
            Err(Error::Format { line: 1, .. })
        ));
        assert!(matches!(Graph::parse(""), Err(Error::Format { .. })));
        assert!(matches!(
            Graph::parse("n 3\n0 1 2\n"),
            Err(Error::Format { .. })
        ));
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let g = Graph::parse("# a path\nn 3\n\n# edges\n0 1\n  1 2  \n").unwrap();
        assert_eq!(g.edge_count(), 2);
        let empty = Graph::parse("n 5\n").unwrap();
        assert_eq!(empty.max_degree(), 0);
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::cycle(7);
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn stats_of_small_graphs() {
        let p3 = cherry_stats(&Graph::path(3));
        assert_eq!(
            (p3.total_cherries, p3.max_cherries_per_vertex, p3.max_degree),
            (1, 1, 2)
        );
        let c5 = cherry_stats(&Graph::cycle(5));
        assert_eq!(
            (c5.total_cherries, c5.max_cherries_per_vertex, c5.max_degree),
            (5, 3, 2)
        );
        let k4 = Graph::complete(4);
        let s = cherry_stats(&k4);
        assert_eq!(
            (s.total_cherries, s.max_cherries_per_vertex, s.max_degree),
            (12, 9, 3)
        );
        // exhaustive: number of cherries containing each vertex of K4
        let per_vertex = (0..4)
            .map(|v| {
                k4.cherries()
                    .filter(|&(c, l, r)| c == v || l == v || r == v)
                    .count()
            })
            .max()
            .unwrap();
        assert_eq!(per_vertex, 9);
        assert_eq!(k4.cherries().count(), 12);
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(5, 3).unwrap(), BigUint::from(60u32));
        assert_eq!(falling_factorial(7, 0).unwrap(), BigUint::one());
        assert_eq!(falling_factorial(0, 0).unwrap(), BigUint::one());
        assert_eq!(falling_factorial(10, 4).unwrap(), BigUint::from(5040u32));
        assert!(falling_factorial(3, 4).is_err());
    }

    #[test]
    fn circulant_degrees() {
        for delta in 1..6 {
            let g = Graph::circulant(20, delta);
            assert_eq!(g.max_degree(), delta);
        }
        assert_eq!(Graph::circulant(9, 3).max_degree(), 2);
    }

    #[test]
    fn new_rejects_invalid_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;

        proptest! {
            #[test]
            fn total_matches_enumeration(n in 1usize..=8, density in 0.0f64..1.0, seed: u64) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let g = Graph::random_bounded_degree(n, n, density, &mut rng);
                prop_assert_eq!(cherry_stats(&g).total_cherries, brute_total_cherries(&g));
                prop_assert_eq!(g.cherries().count() as u64, brute_total_cherries(&g));
            }

            #[test]
            fn degree_bounds(n in 1usize..40, delta in 0usize..7, seed: u64) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let g = Graph::random_bounded_degree(n, delta, 0.7, &mut rng);
                let s = cherry_stats(&g);
                let d = s.max_degree;
                prop_assert!(d as usize <= delta);
                prop_assert!(2 * s.total_cherries <= d * d * n as u64);
                prop_assert!(2 * s.max_cherries_per_vertex <= 3 * d * d);
            }

            #[test]
            fn relabel_invariant(n in 1usize..15, seed: u64) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let g = Graph::random_bounded_degree(n, 4, 0.5, &mut rng);
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let h = g.relabel(&perm).unwrap();
                prop_assert_eq!(cherry_stats(&g), cherry_stats(&h));
            }
        }
    }
}
