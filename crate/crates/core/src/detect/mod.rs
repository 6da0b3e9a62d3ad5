//! Forbidden-configuration detection with checkable certificates.
//!
//! Searches are exhaustive backtracking. Twin vertices (see
//! [`TwinClasses`](crate::symmetry::TwinClasses)) are used to skip
//! equivalent branches. A node budget bounds the work; running out gives
//! [`Error::Timeout`], never a silent "absent".

mod embed;
mod path;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::config::ForbiddenConfig;
use crate::error::{Error, Result};
use crate::family::{Edge, SetFamily};
use crate::packing::max_packing;
use crate::symmetry::TwinClasses;
use crate::vertex_set::VertexSet;

/// Default node budget for a single detection call.
pub const DEFAULT_NODE_BUDGET: u64 = 500_000_000;

/// A certificate: the family members playing each role, in role order, plus
/// the images of named role vertices (Berge path vertices `1..=ℓ+1`, skeleton
/// vertices of a blowup, tree vertices of a tight tree).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub members: Vec<Edge>,
    pub vertex_map: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct DetectOptions {
    /// `None` means unlimited.
    pub node_budget: Option<u64>,
    /// Use twin classes of the host family to prune.
    pub symmetry: bool,
}

impl Default for DetectOptions {
    fn default() -> Self {
        DetectOptions {
            node_budget: Some(DEFAULT_NODE_BUDGET),
            symmetry: true,
        }
    }
}

/// A match found by [`Detector`], referring to members by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawMatch {
    pub members: Vec<usize>,
    pub vertex_map: Vec<(usize, usize)>,
}

/// Search state over a fixed list of member sets.
pub struct Detector {
    n: usize,
    k: usize,
    sets: Vec<VertexSet>,
    inc: Vec<Vec<usize>>,
    twins: TwinClasses,
    budget: Option<u64>,
    nodes: u64,
}

impl Detector {
    pub fn new(n: usize, k: usize, sets: Vec<VertexSet>, opts: &DetectOptions) -> Self {
        let mut inc = vec![Vec::new(); n + 1];
        for (i, s) in sets.iter().enumerate() {
            for v in s.iter() {
                inc[v].push(i);
            }
        }
        let twins = if opts.symmetry {
            TwinClasses::compute(n, &sets)
        } else {
            TwinClasses::trivial(n)
        };
        Detector {
            n,
            k,
            sets,
            inc,
            twins,
            budget: opts.node_budget,
            nodes: 0,
        }
    }

    pub fn from_family(fam: &SetFamily, opts: &DetectOptions) -> Self {
        Detector::new(fam.n(), fam.k(), fam.sets(), opts)
    }

    /// Appends a member and returns its index. Twin-class pruning is switched
    /// off from here on, since the new member can split classes.
    pub fn push(&mut self, s: VertexSet) -> usize {
        let i = self.sets.len();
        for v in s.iter() {
            self.inc[v].push(i);
        }
        self.sets.push(s);
        self.twins = TwinClasses::trivial(self.n);
        i
    }

    /// Removes the most recently added member.
    pub fn pop(&mut self) -> Option<VertexSet> {
        let s = self.sets.pop()?;
        for v in s.iter() {
            self.inc[v].pop();
        }
        Some(s)
    }

    /// Nodes expanded so far, over all calls on this detector.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.budget {
            Some(b) if self.nodes > b => Err(Error::Timeout { nodes: self.nodes }),
            _ => Ok(()),
        }
    }

    pub fn find(&mut self, cfg: &ForbiddenConfig) -> Result<Option<RawMatch>> {
        self.search(cfg, None)
    }

    /// A match that uses member `idx`.
    pub fn find_through(&mut self, cfg: &ForbiddenConfig, idx: usize) -> Result<Option<RawMatch>> {
        if idx >= self.sets.len() {
            return Err(Error::domain("member index out of range"));
        }
        self.search(cfg, Some(idx))
    }

    fn search(&mut self, cfg: &ForbiddenConfig, seed: Option<usize>) -> Result<Option<RawMatch>> {
        cfg.validate(self.k)?;
        if self.sets.len() < cfg.member_count() {
            return Ok(None);
        }
        match cfg {
            ForbiddenConfig::LinearPath(l) => self
                .tight_chain(path::Kind::Linear, *l, seed)
                .map(|m| m.map(plain)),
            ForbiddenConfig::LoosePath(l) => self
                .tight_chain(path::Kind::Loose, *l, seed)
                .map(|m| m.map(plain)),
            ForbiddenConfig::BergePath(l) => self.berge(*l, seed),
            ForbiddenConfig::Matching(m) => Ok(self.matching(*m, seed).map(plain)),
            ForbiddenConfig::GraphBlowup(sk) => {
                let pat = embed::PatternGraph::blowup(sk, self.k);
                self.embed(&pat, seed)
            }
            ForbiddenConfig::TightTree(t) => {
                let pat = embed::PatternGraph::tight_tree(t);
                self.embed(&pat, seed)
            }
        }
    }

    fn matching(&mut self, m: usize, seed: Option<usize>) -> Option<Vec<usize>> {
        match seed {
            None => {
                let pick = max_packing(&self.sets, m);
                (pick.len() >= m).then_some(pick)
            }
            Some(e) => {
                let base = &self.sets[e];
                let (idx, sets): (Vec<usize>, Vec<VertexSet>) = self
                    .sets
                    .iter()
                    .enumerate()
                    .filter(|(i, s)| *i != e && s.is_disjoint(base))
                    .map(|(i, s)| (i, s.clone()))
                    .unzip();
                let pick = max_packing(&sets, m - 1);
                if pick.len() < m - 1 {
                    return None;
                }
                let mut out = vec![e];
                out.extend(pick.into_iter().map(|i| idx[i]));
                Some(out)
            }
        }
    }
}

fn plain(members: Vec<usize>) -> RawMatch {
    RawMatch {
        members,
        vertex_map: Vec::new(),
    }
}

fn to_embedding(fam: &SetFamily, m: RawMatch) -> Embedding {
    Embedding {
        members: m.members.iter().map(|&i| fam.edges()[i].clone()).collect(),
        vertex_map: m.vertex_map,
    }
}

/// Searches `fam` for `cfg` with default options.
pub fn contains(fam: &SetFamily, cfg: &ForbiddenConfig) -> Result<Option<Embedding>> {
    contains_with(fam, cfg, &DetectOptions::default())
}

pub fn contains_with(
    fam: &SetFamily,
    cfg: &ForbiddenConfig,
    opts: &DetectOptions,
) -> Result<Option<Embedding>> {
    let mut d = Detector::from_family(fam, opts);
    Ok(d.find(cfg)?.map(|m| to_embedding(fam, m)))
}

/// Searches for a copy of `cfg` that uses `member`.
pub fn contains_through(
    fam: &SetFamily,
    cfg: &ForbiddenConfig,
    member: &Edge,
    opts: &DetectOptions,
) -> Result<Option<Embedding>> {
    let idx = fam
        .position(member)
        .ok_or_else(|| Error::domain(format!("{member} is not a member of the family")))?;
    let mut d = Detector::from_family(fam, opts);
    Ok(d.find_through(cfg, idx)?.map(|m| to_embedding(fam, m)))
}

/// True iff every two members meet in at most one vertex.
pub fn is_linear_system(fam: &SetFamily) -> bool {
    let e = fam.edges();
    e.iter()
        .enumerate()
        .all(|(i, a)| e[i + 1..].iter().all(|b| a.set().intersection_len(b.set()) <= 1))
}

/// Re-checks every defining condition of `cfg` against `emb`.
pub fn verify_embedding(fam: &SetFamily, cfg: &ForbiddenConfig, emb: &Embedding) -> bool {
    let ms = &emb.members;
    if cfg.validate(fam.k()).is_err() || ms.len() != cfg.member_count() {
        return false;
    }
    if !ms.iter().all(|m| fam.contains(m)) {
        return false;
    }
    let distinct: BTreeSet<&Edge> = ms.iter().collect();
    if distinct.len() != ms.len() {
        return false;
    }
    let meet = |i: usize, j: usize| ms[i].set().intersection_len(ms[j].set());
    let all_pairs = |ok: &dyn Fn(usize, usize) -> bool| {
        (0..ms.len()).all(|i| (i + 1..ms.len()).all(|j| ok(i, j)))
    };
    match cfg {
        ForbiddenConfig::LinearPath(_) => {
            emb.vertex_map.is_empty() && all_pairs(&|i, j| meet(i, j) == usize::from(j == i + 1))
        }
        ForbiddenConfig::LoosePath(_) => {
            emb.vertex_map.is_empty() && all_pairs(&|i, j| (meet(i, j) > 0) == (j == i + 1))
        }
        ForbiddenConfig::Matching(_) => emb.vertex_map.is_empty() && all_pairs(&|i, j| meet(i, j) == 0),
        ForbiddenConfig::BergePath(l) => {
            let vm = &emb.vertex_map;
            if vm.len() != l + 1 || vm.iter().enumerate().any(|(i, &(role, _))| role != i + 1) {
                return false;
            }
            let verts: Vec<usize> = vm.iter().map(|&(_, v)| v).collect();
            let uniq: BTreeSet<usize> = verts.iter().copied().collect();
            uniq.len() == verts.len()
                && (0..*l).all(|i| ms[i].contains(verts[i]) && ms[i].contains(verts[i + 1]))
        }
        ForbiddenConfig::GraphBlowup(sk) => {
            let Some(phi) = role_map(&emb.vertex_map, &sk.vertices()) else {
                return false;
            };
            let image: VertexSet = phi.values().copied().collect();
            let mut fillers = VertexSet::new();
            for (i, &(x, y)) in sk.edges().iter().enumerate() {
                let (hx, hy) = (phi[&x], phi[&y]);
                let m = ms[i].set();
                if !m.contains(hx) || !m.contains(hy) {
                    return false;
                }
                let fill = m.difference(&image);
                if fill.len() != fam.k() - 2 || !fill.is_disjoint(&fillers) {
                    return false;
                }
                fillers.union_with(&fill);
            }
            true
        }
        ForbiddenConfig::TightTree(t) => {
            let Some(phi) = role_map(&emb.vertex_map, &t.vertices()) else {
                return false;
            };
            t.edges().iter().zip(ms).all(|(e, m)| {
                let img: VertexSet = e.iter().map(|v| phi[v]).collect();
                &img == m.set()
            })
        }
    }
}

/// The map `role -> vertex` if its keys are exactly `roles` (in order) and it is injective.
fn role_map(vm: &[(usize, usize)], roles: &[usize]) -> Option<std::collections::BTreeMap<usize, usize>> {
    if vm.len() != roles.len() || vm.iter().zip(roles).any(|(&(r, _), &want)| r != want) {
        return None;
    }
    let images: BTreeSet<usize> = vm.iter().map(|&(_, v)| v).collect();
    if images.len() != vm.len() || images.contains(&0) {
        return None;
    }
    Some(vm.iter().copied().collect())
}
