use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::events::Adjacency;

/// Largest closed neighbourhood enumerated exactly.
pub const MAX_EXACT_NEIGHBOURHOOD: usize = 25;

/// Closed neighbourhood of `i` as local bitmask adjacency.
fn local_masks(adj: &Adjacency, i: usize) -> Result<(Vec<usize>, Vec<u32>)> {
    let members = adj.closed_neighbourhood(i);
    if members.len() > MAX_EXACT_NEIGHBOURHOOD {
        return Err(Error::Capacity(format!(
            "closed neighbourhood of {i} has {} vertices (limit {MAX_EXACT_NEIGHBOURHOOD})",
            members.len()
        )));
    }
    let masks = members
        .iter()
        .map(|&u| {
            members
                .iter()
                .enumerate()
                .filter(|&(_, &w)| w == u || adj.is_adjacent(u, w))
                .fold(0u32, |m, (bit, _)| m | (1 << bit))
        })
        .collect();
    Ok((members, masks))
}

/// `Z(S) = Z(S - v) + w_v · Z(S - N[v])`, branching on the lowest vertex.
fn sum_independent<T, W>(candidates: u32, closed: &[u32], weight: &W) -> T
where
    T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>,
    W: Fn(usize) -> T,
{
    if candidates == 0 {
        return T::one();
    }
    let v = candidates.trailing_zeros() as usize;
    let without = sum_independent(candidates & !(1 << v), closed, weight);
    let with = sum_independent(candidates & !closed[v], closed, weight);
    without + weight(v) * with
}

/// Sum over independent sets `R` of the closed neighbourhood of `i` of
/// `∏_{j ∈ R} mu[j]` (the empty set contributes 1).
pub fn independent_set_polynomial<T>(adj: &Adjacency, i: usize, mu: &[T]) -> Result<T>
where
    T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>,
{
    if mu.len() != adj.len() {
        return Err(Error::domain(
            "one weight per dependency-graph vertex is required",
        ));
    }
    let (members, masks) = local_masks(adj, i)?;
    let all = if members.len() == 32 {
        u32::MAX
    } else {
        (1u32 << members.len()) - 1
    };
    Ok(sum_independent(all, &masks, &|v| mu[members[v]].clone()))
}

/// Number of independent sets of each size in the closed neighbourhood of
/// `i`; entry `s` counts sets of size `s`.
pub fn independent_set_counts(adj: &Adjacency, i: usize) -> Result<Vec<u64>> {
    let (members, masks) = local_masks(adj, i)?;
    let mut counts = vec![0u64; members.len() + 1];
    fn walk(candidates: u32, size: usize, closed: &[u32], counts: &mut [u64]) {
        if candidates == 0 {
            counts[size] += 1;
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        walk(candidates & !(1 << v), size, closed, counts);
        walk(candidates & !closed[v], size + 1, closed, counts);
    }
    walk((1u32 << members.len()) - 1, 0, &masks, &mut counts);
    Ok(counts)
}
