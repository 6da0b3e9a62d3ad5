//! Embedding of fixed k-uniform patterns (graph blowups and tight trees).
//!
//! Pattern edges are matched one at a time, always picking the unmatched
//! pattern edge with the most already-mapped vertices. The remaining
//! vertices of that edge are assigned bijectively to the new vertices of the
//! chosen host member. Pattern vertices that are twins in the pattern (the
//! fillers of one blowup edge, for instance) are assigned in increasing order.

use super::{Detector, RawMatch};
use crate::config::{Skeleton, TightTreeSpec};
use crate::error::Result;
use crate::symmetry::TwinClasses;
use crate::vertex_set::VertexSet;

const UNMAPPED: usize = usize::MAX;

pub(super) struct PatternGraph {
    /// Pattern vertices are `0..order`; `labels[i]` is the user-facing name of
    /// vertex `i` for the first `labels.len()` vertices.
    order: usize,
    labels: Vec<usize>,
    edges: Vec<Vec<usize>>,
    twins_below: Vec<Vec<usize>>,
}

impl PatternGraph {
    pub(super) fn blowup(sk: &Skeleton, k: usize) -> Self {
        let labels = sk.vertices();
        let id = |v: usize| labels.binary_search(&v).expect("skeleton vertex");
        let mut order = labels.len();
        let mut edges = Vec::new();
        for &(x, y) in sk.edges() {
            let mut e = vec![id(x), id(y)];
            e.extend(order..order + (k - 2));
            order += k - 2;
            edges.push(e);
        }
        PatternGraph::build(order, labels, edges)
    }

    pub(super) fn tight_tree(t: &TightTreeSpec) -> Self {
        let labels = t.vertices();
        let id = |v: usize| labels.binary_search(&v).expect("tree vertex");
        let edges = t.edges().iter().map(|e| e.iter().map(|&v| id(v)).collect()).collect();
        PatternGraph::build(labels.len(), labels, edges)
    }

    fn build(order: usize, labels: Vec<usize>, edges: Vec<Vec<usize>>) -> Self {
        // twin classes over 1-based copies of the pattern edges
        let sets: Vec<VertexSet> = edges
            .iter()
            .map(|e: &Vec<usize>| e.iter().map(|&v| v + 1).collect())
            .collect();
        let tw = TwinClasses::compute(order, &sets);
        let twins_below = (0..order)
            .map(|v| tw.twins_below(v + 1).iter().map(|u| u - 1).collect())
            .collect();
        PatternGraph {
            order,
            labels,
            edges,
            twins_below,
        }
    }
}

struct State {
    map: Vec<usize>,
    used: VertexSet,
    member_used: Vec<bool>,
    chosen: Vec<usize>,
}

impl Detector {
    pub(super) fn embed(&mut self, pat: &PatternGraph, seed: Option<usize>) -> Result<Option<RawMatch>> {
        let mut st = State {
            map: vec![UNMAPPED; pat.order],
            used: VertexSet::new(),
            member_used: vec![false; self.sets.len()],
            chosen: vec![UNMAPPED; pat.edges.len()],
        };
        let found = match seed {
            None => self.match_next(pat, &mut st)?,
            Some(e) => {
                let mut hit = false;
                for p in 0..pat.edges.len() {
                    if self.place(pat, &mut st, p, e)? {
                        hit = true;
                        break;
                    }
                }
                hit
            }
        };
        if !found {
            return Ok(None);
        }
        Ok(Some(RawMatch {
            members: st.chosen.clone(),
            vertex_map: pat.labels.iter().enumerate().map(|(i, &l)| (l, st.map[i])).collect(),
        }))
    }

    fn match_next(&mut self, pat: &PatternGraph, st: &mut State) -> Result<bool> {
        let next = (0..pat.edges.len())
            .filter(|&p| st.chosen[p] == UNMAPPED)
            .max_by_key(|&p| {
                let mapped = pat.edges[p].iter().filter(|&&v| st.map[v] != UNMAPPED).count();
                (mapped, std::cmp::Reverse(p))
            });
        let Some(p) = next else {
            return Ok(true);
        };
        let mapped: VertexSet = pat.edges[p]
            .iter()
            .filter(|&&v| st.map[v] != UNMAPPED)
            .map(|&v| st.map[v])
            .collect();
        let candidates: Vec<usize> = match mapped.min_vertex() {
            Some(v) => self.inc[v].clone(),
            None => (0..self.sets.len()).collect(),
        };
        for j in candidates {
            if st.member_used[j] {
                continue;
            }
            let f = &self.sets[j];
            if !mapped.is_subset(f) || f.intersection_len(&st.used) != mapped.len() {
                continue;
            }
            if !self.twins.is_canonical(f, &st.used) {
                continue;
            }
            if self.place(pat, st, p, j)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Maps pattern edge `p` onto member `j` in every admissible way and recurses.
    fn place(&mut self, pat: &PatternGraph, st: &mut State, p: usize, j: usize) -> Result<bool> {
        self.tick()?;
        let f = self.sets[j].clone();
        let fresh: Vec<usize> = f.difference(&st.used).to_vec();
        let open: Vec<usize> = pat.edges[p].iter().copied().filter(|&v| st.map[v] == UNMAPPED).collect();
        if fresh.len() != open.len() {
            return Ok(false);
        }
        let before = st.used.clone();
        st.used.union_with(&f);
        st.member_used[j] = true;
        st.chosen[p] = j;
        let mut taken = vec![false; fresh.len()];
        let hit = self.assign(pat, st, &open, &fresh, &mut taken, 0)?;
        if !hit {
            st.chosen[p] = UNMAPPED;
            st.member_used[j] = false;
            st.used = before;
        }
        Ok(hit)
    }

    fn assign(
        &mut self,
        pat: &PatternGraph,
        st: &mut State,
        open: &[usize],
        fresh: &[usize],
        taken: &mut [bool],
        i: usize,
    ) -> Result<bool> {
        if i == open.len() {
            return self.match_next(pat, st);
        }
        let u = open[i];
        // smallest host vertex allowed for u: above the images of its open twins
        let floor = pat.twins_below[u]
            .iter()
            .filter(|w| open[..i].contains(w))
            .map(|&w| st.map[w])
            .max();
        for (slot, &h) in fresh.iter().enumerate() {
            if taken[slot] || floor.is_some_and(|fl| h < fl) {
                continue;
            }
            taken[slot] = true;
            st.map[u] = h;
            if self.assign(pat, st, open, fresh, taken, i + 1)? {
                return Ok(true);
            }
            st.map[u] = UNMAPPED;
            taken[slot] = false;
        }
        Ok(false)
    }
}
