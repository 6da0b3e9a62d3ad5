//! Exact maximum set packing by branch and bound.

use crate::vertex_set::VertexSet;

/// Indices of a largest collection of pairwise disjoint sets in `sets`.
///
/// The search stops as soon as `cap` sets are found, so the result has
/// length `min(cap, optimum)`. Returned indices are ascending.
pub fn max_packing(sets: &[VertexSet], cap: usize) -> Vec<usize> {
    if cap == 0 || sets.is_empty() {
        return Vec::new();
    }
    // Fewest conflicts first: good greedy order and early large incumbents.
    let conflicts: Vec<usize> = sets
        .iter()
        .map(|a| sets.iter().filter(|b| !a.is_disjoint(b)).count())
        .collect();
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| (conflicts[i], i));

    let mut search = Packing {
        sets,
        cap,
        best: Vec::new(),
        chosen: Vec::new(),
    };
    search.greedy(&order);
    if search.best.len() < cap {
        search.branch(&order);
    }
    let mut best = search.best;
    best.truncate(cap);
    best.sort_unstable();
    best
}

struct Packing<'a> {
    sets: &'a [VertexSet],
    cap: usize,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl Packing<'_> {
    fn greedy(&mut self, order: &[usize]) {
        let mut used = VertexSet::new();
        let mut pick = Vec::new();
        for &i in order {
            if self.sets[i].is_disjoint(&used) {
                used.union_with(&self.sets[i]);
                pick.push(i);
            }
        }
        self.best = pick;
    }

    fn bound(&self, cands: &[usize]) -> usize {
        let min_size = cands.iter().map(|&i| self.sets[i].len()).min().unwrap_or(0);
        if min_size == 0 {
            return cands.len();
        }
        let mut union = VertexSet::new();
        for &i in cands {
            union.union_with(&self.sets[i]);
        }
        cands.len().min(union.len() / min_size)
    }

    fn branch(&mut self, cands: &[usize]) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.best.len() >= self.cap || cands.is_empty() {
            return;
        }
        if self.chosen.len() + self.bound(cands) <= self.best.len() {
            return;
        }
        let first = cands[0];
        let rest: Vec<usize> = cands[1..]
            .iter()
            .copied()
            .filter(|&j| self.sets[j].is_disjoint(&self.sets[first]))
            .collect();
        self.chosen.push(first);
        self.branch(&rest);
        self.chosen.pop();
        if self.best.len() >= self.cap {
            return;
        }
        self.branch(&cands[1..]);
    }
}
