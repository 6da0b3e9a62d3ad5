//! Linear, loose and Berge path searches.
//!
//! Paths grow member by member from one end. A search through a fixed
//! member starts from it, grows to the right, and at any point may switch to
//! growing to the left.

use std::collections::VecDeque;

use super::{Detector, RawMatch};
use crate::error::Result;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, PartialEq, Eq)]
pub(super) enum Kind {
    Linear,
    Loose,
}

struct Chain {
    path: VecDeque<usize>,
    in_path: Vec<bool>,
    used: VertexSet,
    seeded: bool,
}

impl Chain {
    fn others(&self, sets: &[VertexSet], right: bool) -> VertexSet {
        let skip = if right { self.path.len() - 1 } else { 0 };
        let mut out = VertexSet::new();
        for (i, &m) in self.path.iter().enumerate() {
            if i != skip {
                out.union_with(&sets[m]);
            }
        }
        out
    }

    fn push(&mut self, m: usize, set: &VertexSet, right: bool) -> VertexSet {
        let before = self.used.clone();
        if right {
            self.path.push_back(m);
        } else {
            self.path.push_front(m);
        }
        self.in_path[m] = true;
        self.used.union_with(set);
        before
    }

    fn pop(&mut self, right: bool, before: VertexSet) {
        let m = if right { self.path.pop_back() } else { self.path.pop_front() }.expect("nonempty path");
        self.in_path[m] = false;
        self.used = before;
    }
}

impl Detector {
    pub(super) fn tight_chain(&mut self, kind: Kind, l: usize, seed: Option<usize>) -> Result<Option<Vec<usize>>> {
        let mut st = Chain {
            path: VecDeque::new(),
            in_path: vec![false; self.sets.len()],
            used: VertexSet::new(),
            seeded: seed.is_some(),
        };
        let starts: Vec<usize> = match seed {
            Some(e) => vec![e],
            None => (0..self.sets.len())
                .filter(|&i| self.twins.is_canonical(&self.sets[i], &VertexSet::new()))
                .collect(),
        };
        for s in starts {
            self.tick()?;
            let set = self.sets[s].clone();
            let before = st.push(s, &set, true);
            if self.grow_chain(kind, l, &mut st, true)? {
                return Ok(Some(st.path.into_iter().collect()));
            }
            st.pop(true, before);
        }
        Ok(None)
    }

    fn grow_chain(&mut self, kind: Kind, l: usize, st: &mut Chain, right: bool) -> Result<bool> {
        if st.path.len() == l {
            return Ok(true);
        }
        let end = if right { *st.path.back().unwrap() } else { *st.path.front().unwrap() };
        let end_set = self.sets[end].clone();
        let free = end_set.difference(&st.others(&self.sets, right));
        for y in free.iter() {
            for idx in 0..self.inc[y].len() {
                let j = self.inc[y][idx];
                if st.in_path[j] {
                    continue;
                }
                let f = &self.sets[j];
                let ok = match kind {
                    Kind::Linear => f.intersection_len(&st.used) == 1,
                    Kind::Loose => {
                        f.intersection(&st.used).is_subset(&free) && f.intersection(&end_set).min_vertex() == Some(y)
                    }
                };
                if !ok || !self.twins.is_canonical(f, &st.used) {
                    continue;
                }
                let f = f.clone();
                self.tick()?;
                let before = st.push(j, &f, right);
                if self.grow_chain(kind, l, st, right)? {
                    return Ok(true);
                }
                st.pop(right, before);
            }
        }
        if right && st.seeded {
            return self.grow_chain(kind, l, st, false);
        }
        Ok(false)
    }

    pub(super) fn berge(&mut self, l: usize, seed: Option<usize>) -> Result<Option<RawMatch>> {
        let mut st = Berge {
            verts: VecDeque::new(),
            mems: VecDeque::new(),
            in_path: vec![false; self.sets.len()],
            vset: VertexSet::new(),
            used: VertexSet::new(),
            seeded: seed.is_some(),
        };
        match seed {
            None => {
                for v in 1..=self.n {
                    if self.inc[v].is_empty() || !self.twins.twins_below(v).is_empty() {
                        continue;
                    }
                    self.tick()?;
                    st.verts.push_back(v);
                    st.vset.insert(v);
                    st.used.insert(v);
                    if self.grow_berge(l, &mut st, true)? {
                        return Ok(Some(st.into_match()));
                    }
                    st.verts.clear();
                    st.vset = VertexSet::new();
                    st.used = VertexSet::new();
                }
            }
            Some(e) => {
                let set = self.sets[e].clone();
                let vs = set.to_vec();
                for (i, &a) in vs.iter().enumerate() {
                    for &b in &vs[i + 1..] {
                        self.tick()?;
                        st.verts = VecDeque::from([a, b]);
                        st.mems = VecDeque::from([e]);
                        st.in_path[e] = true;
                        st.vset = [a, b].into_iter().collect();
                        st.used = set.clone();
                        if self.grow_berge(l, &mut st, true)? {
                            return Ok(Some(st.into_match()));
                        }
                        st.in_path[e] = false;
                    }
                }
            }
        }
        Ok(None)
    }

    fn grow_berge(&mut self, l: usize, st: &mut Berge, right: bool) -> Result<bool> {
        if st.mems.len() == l {
            return Ok(true);
        }
        let x = if right { *st.verts.back().unwrap() } else { *st.verts.front().unwrap() };
        for idx in 0..self.inc[x].len() {
            let j = self.inc[x][idx];
            if st.in_path[j] || !self.twins.is_canonical(&self.sets[j], &st.used) {
                continue;
            }
            let f = self.sets[j].clone();
            let fresh = f.difference(&st.used);
            for v in f.difference(&st.vset).iter() {
                if fresh.contains(v) && !self.twins.twins_below(v).is_disjoint(&fresh) {
                    continue;
                }
                self.tick()?;
                let before = st.used.clone();
                st.used.union_with(&f);
                st.vset.insert(v);
                st.in_path[j] = true;
                if right {
                    st.verts.push_back(v);
                    st.mems.push_back(j);
                } else {
                    st.verts.push_front(v);
                    st.mems.push_front(j);
                }
                if self.grow_berge(l, st, right)? {
                    return Ok(true);
                }
                if right {
                    st.verts.pop_back();
                    st.mems.pop_back();
                } else {
                    st.verts.pop_front();
                    st.mems.pop_front();
                }
                st.in_path[j] = false;
                st.vset.remove(v);
                st.used = before;
            }
        }
        if right && st.seeded {
            return self.grow_berge(l, st, false);
        }
        Ok(false)
    }
}

struct Berge {
    verts: VecDeque<usize>,
    mems: VecDeque<usize>,
    in_path: Vec<bool>,
    vset: VertexSet,
    used: VertexSet,
    seeded: bool,
}

impl Berge {
    fn into_match(self) -> RawMatch {
        RawMatch {
            members: self.mems.into_iter().collect(),
            vertex_map: self.verts.into_iter().enumerate().map(|(i, v)| (i + 1, v)).collect(),
        }
    }
}
