//! Brute-force oracles and fixture generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use turan_core::family::{k_subsets, Edge};
use turan_core::graph::Graph;
use turan_core::pattern::KPartition;
use turan_core::peel::BipartiteGraph;
use turan_core::{SetFamily, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `m` distinct random k-subsets of `[n]` (fewer if there are not that many).
pub fn random_family(rng: &mut ChaCha8Rng, n: usize, k: usize, m: usize) -> SetFamily {
    let ground: Vec<usize> = (1..=n).collect();
    let mut all: Vec<VertexSet> = k_subsets(&ground, k).collect();
    all.shuffle(rng);
    all.truncate(m);
    SetFamily::from_edges(n, k, all.into_iter().map(Edge::from_set)).unwrap()
}

pub fn masks(fam: &SetFamily) -> Vec<u64> {
    fam.iter().map(|e| e.set().mask()).collect()
}

fn ordered_sequences(m: usize, l: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn go(m: usize, l: usize, seq: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if seq.len() == l {
            return f(seq);
        }
        for i in 0..m {
            if !seq.contains(&i) {
                seq.push(i);
                if go(m, l, seq, f) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }
    go(m, l, &mut Vec::new(), f)
}

fn chain(sets: &[u64], l: usize, consecutive: impl Fn(u64) -> bool) -> bool {
    ordered_sequences(sets.len(), l, &mut |seq| {
        (0..l).all(|i| {
            (i + 1..l).all(|j| {
                let x = sets[seq[i]] & sets[seq[j]];
                if j == i + 1 {
                    consecutive(x)
                } else {
                    x == 0
                }
            })
        })
    })
}

pub fn has_linear_path(sets: &[u64], l: usize) -> bool {
    chain(sets, l, |x| x.count_ones() == 1)
}

pub fn has_loose_path(sets: &[u64], l: usize) -> bool {
    chain(sets, l, |x| x != 0)
}

pub fn has_matching(sets: &[u64], l: usize) -> bool {
    chain(sets, l, |x| x == 0)
}

/// Distinct members `E_1..E_l` and distinct vertices `v_1..v_{l+1}` with
/// `{v_i, v_{i+1}} ⊆ E_i`.
pub fn has_berge_path(sets: &[u64], l: usize) -> bool {
    fn thread(sets: &[u64], seq: &[usize], i: usize, prev: usize, used: u64) -> bool {
        if i == seq.len() {
            return true;
        }
        let e = sets[seq[i]];
        if e >> (prev - 1) & 1 == 0 {
            return false;
        }
        (1..=64).any(|v| e >> (v - 1) & 1 == 1 && used >> (v - 1) & 1 == 0 && thread(sets, seq, i + 1, v, used | 1 << (v - 1)))
    }
    ordered_sequences(sets.len(), l, &mut |seq| {
        let e = sets[seq[0]];
        (1..=64).any(|v| e >> (v - 1) & 1 == 1 && thread(sets, seq, 0, v, 1 << (v - 1)))
    })
}

/// Largest subfamily of all k-subsets of `[n]` with no pair in conflict,
/// by enumerating all `2^C(n,k)` subfamilies.
pub fn brute_max_pairwise(n: usize, k: usize, conflict: impl Fn(u64, u64) -> bool) -> usize {
    let ground: Vec<usize> = (1..=n).collect();
    let cands: Vec<u64> = k_subsets(&ground, k).map(|s| s.mask()).collect();
    let m = cands.len();
    assert!(m <= 24, "too many subfamilies to enumerate");
    let conf: Vec<u32> = (0..m)
        .map(|i| (0..m).filter(|&j| j != i && conflict(cands[i], cands[j])).fold(0, |a, j| a | 1 << j))
        .collect();
    let mut free = vec![false; 1 << m];
    free[0] = true;
    let mut best = 0;
    for mask in 1usize..1 << m {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        free[mask] = free[rest] && conf[low] as usize & rest == 0;
        if free[mask] {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

/// A random graph on `[n]` with edge probability `p`, as adjacency masks.
pub fn random_graph_edges(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.gen_bool(p) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Longest path (in edges) by subset dynamic programming.
pub fn brute_longest_path(n: usize, edges: &[(usize, usize)]) -> usize {
    let adj = adjacency(n, edges);
    let mut reach = vec![0u32; 1 << n];
    let mut best = 0;
    for v in 0..n {
        reach[1 << v] |= 1 << v;
    }
    for mask in 1usize..1 << n {
        for v in 0..n {
            if reach[mask] >> v & 1 == 0 {
                continue;
            }
            best = best.max(mask.count_ones() as usize - 1);
            for w in 0..n {
                if adj[v] >> w & 1 == 1 && mask >> w & 1 == 0 {
                    reach[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    best
}

/// Longest cycle length by subset dynamic programming (0 for forests).
pub fn brute_circumference(n: usize, edges: &[(usize, usize)]) -> usize {
    let adj = adjacency(n, edges);
    let mut best = 0;
    for s in 0..n {
        // paths starting at s through vertices above s
        let mut reach = vec![0u32; 1 << n];
        reach[1 << s] = 1 << s;
        for mask in 0usize..1 << n {
            if mask & ((1 << s) - 1) != 0 || mask >> s & 1 == 0 {
                continue;
            }
            for v in 0..n {
                if reach[mask] >> v & 1 == 0 {
                    continue;
                }
                if mask.count_ones() >= 3 && adj[v] >> s & 1 == 1 {
                    best = best.max(mask.count_ones() as usize);
                }
                for w in s + 1..n {
                    if adj[v] >> w & 1 == 1 && mask >> w & 1 == 0 {
                        reach[mask | 1 << w] |= 1 << w;
                    }
                }
            }
        }
    }
    best
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for &(a, b) in edges {
        adj[a - 1] |= 1 << (b - 1);
        adj[b - 1] |= 1 << (a - 1);
    }
    adj
}

/// `σ` and `τ` of a tree on `1..=order` by trying every vertex subset.
pub fn brute_sigma_tau(order: usize, edges: &[(usize, usize)]) -> (usize, usize) {
    let mut sigma = usize::MAX;
    let mut tau = usize::MAX;
    for a in 0u32..1 << order {
        let inside = |v: usize| a >> (v - 1) & 1 == 1;
        let size = a.count_ones() as usize;
        if edges.iter().all(|&(x, y)| inside(x) || inside(y)) {
            tau = tau.min(size);
        }
        if edges.iter().all(|&(x, y)| !(inside(x) && inside(y))) {
            let missed = edges.iter().filter(|&&(x, y)| !inside(x) && !inside(y)).count();
            sigma = sigma.min(size + missed);
        }
    }
    (sigma, tau)
}

/// Complete 3-partite family with parts `{1..m}`, `{m+1..2m}`, `{2m+1..3m}`.
/// Its intersection pattern has rank k.
pub fn complete_tripartite(m: usize) -> (SetFamily, KPartition) {
    let mut lists = Vec::new();
    for a in 1..=m {
        for b in m + 1..=2 * m {
            for c in 2 * m + 1..=3 * m {
                lists.push(vec![a, b, c]);
            }
        }
    }
    let part = KPartition::new((0..3).map(|i| VertexSet::range(i * m + 1, i * m + m)).collect()).unwrap();
    (SetFamily::from_lists(3 * m, 3, &lists).unwrap(), part)
}

/// 4-partite members `{a_i, a'_i, c_j, d_l}`: the first two parts are tied
/// together, which leaves two missing triples (type 2).
pub fn tied_pair_family(m: usize) -> (SetFamily, KPartition) {
    let mut lists = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            for l in 1..=m {
                lists.push(vec![i, m + i, 2 * m + j, 3 * m + l]);
            }
        }
    }
    let part = KPartition::new((0..4).map(|i| VertexSet::range(i * m + 1, i * m + m)).collect()).unwrap();
    (SetFamily::from_lists(4 * m, 4, &lists).unwrap(), part)
}

/// A bipartite graph with `|X| = mx`, `|Y| = my` and edge probability `p`,
/// on shuffled labels.
pub fn random_bipartite(rng: &mut ChaCha8Rng, mx: usize, my: usize, p: f64) -> BipartiteGraph {
    let n = mx + my;
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(rng);
    let (xs, ys) = labels.split_at(mx);
    let mut edges = Vec::new();
    for &x in xs {
        for &y in ys {
            if rng.gen_bool(p) {
                edges.push((x, y));
            }
        }
    }
    let g = Graph::from_edges(n, &edges).unwrap();
    BipartiteGraph::new(g, xs.iter().copied().collect(), ys.iter().copied().collect()).unwrap()
}
