//! Extremal and lower-bound constructions, and their closed-form sizes.
//!
//! Canonical choices are fixed so outputs are reproducible: the t-set is
//! `S = {1..t}`, the fixed pair is `{t+1, t+2}`, and the extra loose edge is
//! `{t+1..t+k}`.

use crate::error::{Error, Result};
use crate::family::{k_subsets, Edge, SetFamily};
use crate::vertex_set::VertexSet;

/// Binomial coefficient with `C(a, b) = 0` for `b > a`. Panics on overflow.
pub fn binom(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc
            .checked_mul((a - i) as u128)
            .expect("binomial overflow")
            / (i as u128 + 1);
    }
    acc
}

/// Same as [`binom`] but taking signed arguments; negative `a` or `b` gives 0.
fn binom_i(a: i64, b: i64) -> u128 {
    if a < 0 || b < 0 {
        0
    } else {
        binom(a as u64, b as u64)
    }
}

/// `f(n,k,t) = C(n-1,k-1) + … + C(n-t,k-1)`: k-sets meeting a fixed t-set.
pub fn f(n: u64, k: u64, t: u64) -> u128 {
    (1..=t).map(|i| binom_i(n as i64 - i as i64, k as i64 - 1)).sum()
}

/// `g(n,k,t) = f(n,k,t) + C(n-t-2, k-2)`.
pub fn g(n: u64, k: u64, t: u64) -> u128 {
    f(n, k, t) + binom_i(n as i64 - t as i64 - 2, k as i64 - 2)
}

/// The linear-path length bound `(k-1)(ℓ-1)C(n-1,k-1)`, valid for every `n`.
pub fn eq1_bound(n: u64, k: u64, l: u64) -> u128 {
    (k.saturating_sub(1) as u128) * (l.saturating_sub(1) as u128) * binom_i(n as i64 - 1, k as i64 - 1)
}

fn ground(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

fn family_of(n: usize, k: usize, sets: impl IntoIterator<Item = VertexSet>) -> Result<SetFamily> {
    SetFamily::from_edges(n, k, sets.into_iter().map(Edge::from_set))
}

/// All k-sets of `[n]` meeting `S = {1..t}`.
pub fn star_family(n: usize, k: usize, t: usize) -> Result<SetFamily> {
    if k < 1 || n < k + t {
        return Err(Error::domain(format!("star family needs n >= k + t (n={n}, k={k}, t={t})")));
    }
    let s = VertexSet::range(1, t);
    family_of(n, k, k_subsets(&ground(n), k).filter(|e| !e.is_disjoint(&s)))
}

/// The star family plus every k-set of `[n] \ S` containing `{t+1, t+2}`.
pub fn even_extremal_family(n: usize, k: usize, t: usize) -> Result<SetFamily> {
    if k < 2 || n < k + t + 2 {
        return Err(Error::domain(format!(
            "even extremal family needs k >= 2 and n >= k + t + 2 (n={n}, k={k}, t={t})"
        )));
    }
    let mut fam = star_family(n, k, t)?;
    let rest: Vec<usize> = (t + 3..=n).collect();
    for tail in k_subsets(&rest, k - 2) {
        let mut e = tail;
        e.insert(t + 1);
        e.insert(t + 2);
        fam.insert(Edge::from_set(e))?;
    }
    Ok(fam)
}

/// The star family plus the single edge `{t+1..t+k}`. With `t = 0` this is one edge.
pub fn loose_even_family(n: usize, k: usize, t: usize) -> Result<SetFamily> {
    if k < 1 || n < k + t {
        return Err(Error::domain(format!("loose even family needs n >= k + t (n={n}, k={k}, t={t})")));
    }
    let mut fam = if t == 0 {
        SetFamily::new(n, k)?
    } else {
        star_family(n, k, t)?
    };
    fam.insert(Edge::from_set(VertexSet::range(t + 1, t + k)))?;
    Ok(fam)
}

/// Complete k-graphs on consecutive blocks of size `ℓ` (requires `ℓ | n`, `ℓ > k`).
pub fn gyori_partition_family(n: usize, k: usize, l: usize) -> Result<SetFamily> {
    if l <= k || l == 0 || !n.is_multiple_of(l) {
        return Err(Error::domain(format!(
            "block construction needs l > k and l | n (n={n}, k={k}, l={l})"
        )));
    }
    let mut sets = Vec::new();
    for b in 0..n / l {
        let block: Vec<usize> = (b * l + 1..=b * l + l).collect();
        sets.extend(k_subsets(&block, k));
    }
    family_of(n, k, sets)
}

/// On each block of `k+1` consecutive vertices, the `ℓ-1` k-sets missing one of
/// the block's first `ℓ-1` vertices (requires `3 <= ℓ <= k`, `(k+1) | n`).
pub fn berge_small_family(n: usize, k: usize, l: usize) -> Result<SetFamily> {
    if !(3..=k).contains(&l) || !n.is_multiple_of(k + 1) {
        return Err(Error::domain(format!(
            "small Berge construction needs 3 <= l <= k and (k+1) | n (n={n}, k={k}, l={l})"
        )));
    }
    let mut sets = Vec::new();
    for b in 0..n / (k + 1) {
        let block = VertexSet::range(b * (k + 1) + 1, b * (k + 1) + k + 1);
        for drop in block.iter().take(l - 1).collect::<Vec<_>>() {
            let mut e = block.clone();
            e.remove(drop);
            sets.push(e);
        }
    }
    family_of(n, k, sets)
}

/// All k-sets meeting `{1..s}` in exactly one vertex.
pub fn f0_family(n: usize, k: usize, s: usize) -> Result<SetFamily> {
    if s == 0 || k == 0 || n + 1 < k + s {
        return Err(Error::domain(format!("F0 needs s >= 1 and n >= k + s - 1 (n={n}, k={k}, s={s})")));
    }
    let head = VertexSet::range(1, s);
    family_of(
        n,
        k,
        k_subsets(&ground(n), k).filter(|e| e.intersection_len(&head) == 1),
    )
}

/// `n/ℓ` disjoint copies of `K_ℓ`, as a 2-uniform family.
pub fn erdos_gallai_extremal(n: usize, l: usize) -> Result<SetFamily> {
    if l < 2 || !n.is_multiple_of(l) {
        return Err(Error::domain(format!("needs l >= 2 and l | n (n={n}, l={l})")));
    }
    let mut sets = Vec::new();
    for b in 0..n / l {
        let block: Vec<usize> = (b * l + 1..=b * l + l).collect();
        sets.extend(k_subsets(&block, 2));
    }
    family_of(n, 2, sets)
}
