//! Kernel graphs, homogeneous kernel graphs, the greedy blowup embedding and
//! the counting inequalities built on them.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::config::{ForbiddenConfig, Skeleton};
use crate::constructions::{binom, eq1_bound};
use crate::delta::HomogeneousWitness;
use crate::detect::{verify_embedding, Embedding};
use crate::error::{Error, Result};
use crate::family::{Edge, SetFamily};
use crate::graph::{circumference, Graph};
use crate::pattern::{Classification, Pattern};
use crate::star::{find_star, kernel_degree};
use crate::vertex_set::VertexSet;

/// `xy` is an edge iff some `s`-star has kernel exactly `{x, y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelGraph {
    pub s: usize,
    pub graph: Graph,
}

pub fn kernel_graph(fam: &SetFamily, s: usize) -> Result<KernelGraph> {
    if s == 0 {
        return Err(Error::domain("threshold s must be at least 1"));
    }
    let mut pairs = BTreeSet::new();
    for e in fam {
        let v = e.vertices();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                pairs.insert((v[i], v[j]));
            }
        }
    }
    let pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
    let keep: Vec<bool> = pairs
        .par_iter()
        .map(|&(a, b)| kernel_degree(&[a, b].into_iter().collect(), fam, s) >= s)
        .collect();
    let mut graph = Graph::new(fam.n());
    for (&(a, b), k) in pairs.iter().zip(keep) {
        if k {
            graph.add_edge(a, b)?;
        }
    }
    Ok(KernelGraph { s, graph })
}

/// `c(F)`: the vertex of `f` in the central part of a type-1 witness.
pub fn central_element(f: &Edge, w: &HomogeneousWitness) -> Result<usize> {
    let Classification::Type1 { central } = w.pattern.classification() else {
        return Err(Error::domain("central elements need a type-1 pattern"));
    };
    if !w.subfamily.contains(f) {
        return Err(Error::domain(format!("{f} is not in the witness")));
    }
    w.partition
        .project(f.set(), Pattern::singleton(central))
        .min_vertex()
        .ok_or_else(|| Error::domain(format!("{f} misses the central part")))
}

/// Arcs `(c(F), y)` for `y ∈ F \ c(F)` over the members of type-1 groups,
/// with the central elements marked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomKernelGraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
    marked: VertexSet,
}

impl HomKernelGraph {
    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn marked(&self) -> &VertexSet {
        &self.marked
    }

    /// Number of arcs between `a` and `b` in either direction (at most 2).
    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        usize::from(self.arcs.contains(&(a, b))) + usize::from(self.arcs.contains(&(b, a)))
    }

    pub fn out_degree(&self, x: usize) -> usize {
        self.arcs.range((x, 0)..=(x, usize::MAX)).count()
    }

    /// The underlying simple graph `H'`.
    pub fn underlying(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for &(a, b) in &self.arcs {
            g.add_edge(a, b).expect("arcs join distinct vertices of [n]");
        }
        g
    }

    /// Every edge of `H'` has a marked endpoint.
    pub fn marks_cover_edges(&self) -> bool {
        self.arcs
            .iter()
            .all(|&(a, b)| self.marked.contains(a) || self.marked.contains(b))
    }
}

pub fn hom_kernel_graph(n: usize, groups: &[HomogeneousWitness]) -> Result<HomKernelGraph> {
    let mut arcs = BTreeSet::new();
    let mut marked = VertexSet::new();
    for w in groups {
        if w.subfamily.n() > n {
            return Err(Error::domain("group lives on a larger ground set"));
        }
        for f in w.subfamily.iter() {
            let c = central_element(f, w)?;
            marked.insert(c);
            for y in f.set().iter().filter(|&y| y != c) {
                arcs.insert((c, y));
            }
        }
    }
    Ok(HomKernelGraph { n, arcs, marked })
}

/// Re-checks `deg*({c(F)}) >= s` and `deg*({c(F), y}) >= s` inside each group.
pub fn spot_check_kernel_degrees(groups: &[HomogeneousWitness]) -> Result<bool> {
    for w in groups {
        for f in w.subfamily.iter() {
            let c = central_element(f, w)?;
            let single: VertexSet = [c].into_iter().collect();
            if kernel_degree(&single, &w.subfamily, w.s) < w.s {
                return Ok(false);
            }
            for y in f.set().iter().filter(|&y| y != c) {
                if kernel_degree(&[c, y].into_iter().collect(), &w.subfamily, w.s) < w.s {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Embeds the k-blowup of `h` (a subgraph of `l`) with skeleton exactly `h`:
/// each edge `xy` becomes a petal of an `s`-star with kernel `{x, y}` that
/// avoids everything placed so far and the rest of `V(h)`.
pub fn greedy_blowup_embedding(fam: &SetFamily, l: &KernelGraph, h: &[(usize, usize)]) -> Result<Embedding> {
    let k = fam.k();
    let skeleton = Skeleton::new(h.to_vec())?;
    if let Some(&(a, b)) = h.iter().find(|&&(a, b)| !l.graph.has_edge(a, b)) {
        return Err(Error::domain(format!("({a}, {b}) is not an edge of the kernel graph")));
    }
    if l.s < k * h.len() {
        return Err(Error::domain(format!(
            "threshold s = {} is below k*q = {}",
            l.s,
            k * h.len()
        )));
    }
    let skel_vertices: VertexSet = skeleton.vertices().into_iter().collect();
    let mut used = VertexSet::new();
    let mut members = Vec::with_capacity(h.len());
    for &(x, y) in h {
        let kernel: VertexSet = [x, y].into_iter().collect();
        let star = find_star(fam, &kernel, l.s)?.ok_or_else(|| {
            Error::Verification(format!("no {}-star with kernel {kernel}; kernel graph is stale", l.s))
        })?;
        let mut blocked = used.union(&skel_vertices);
        blocked.remove(x);
        blocked.remove(y);
        let petal = star
            .petals()
            .iter()
            .find(|p| p.set().difference(&kernel).is_disjoint(&blocked))
            .ok_or_else(|| Error::Verification("every petal is blocked".into()))?
            .clone();
        used.union_with(petal.set());
        members.push(petal);
    }
    let emb = Embedding {
        members,
        vertex_map: skeleton.vertices().into_iter().map(|v| (v, v)).collect(),
    };
    if !verify_embedding(fam, &ForbiddenConfig::GraphBlowup(skeleton), &emb) {
        return Err(Error::Verification("blowup failed re-verification".into()));
    }
    Ok(emb)
}

/// An inequality `lhs <= rhs` with its raw sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: u128,
    pub rhs: u128,
    pub holds: bool,
    /// Whether the inequality's hypothesis was confirmed, when it has one.
    pub premise: Option<bool>,
}

/// Graphs without cycles of length `>= c`: `2 e(G) <= (c-1)(n-1)` (both sides doubled).
pub fn check_erdos_gallai(g: &Graph, c: usize, budget: Option<u64>) -> Result<BoundCheck> {
    if c < 3 {
        return Err(Error::domain("c must be at least 3"));
    }
    let circ = circumference(g, budget)?;
    let lhs = 2 * g.edge_count() as u128;
    let rhs = (c as u128 - 1) * (g.n().max(1) as u128 - 1);
    Ok(BoundCheck {
        name: format!("2e(G) <= (c-1)(n-1), c = {c}"),
        lhs,
        rhs,
        holds: lhs <= rhs,
        premise: Some(circ < c),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelBoundCheck {
    /// `(k-1)|F|`.
    pub lhs: u128,
    /// Pairs `({x,y}, F)` with `{x,y}` an `H'` edge inside `F`.
    pub incidences: u128,
    /// `e(H') C(n-2, k-2)`.
    pub rhs: u128,
    /// Fewest `H'` edges inside a single member.
    pub min_per_member: usize,
    pub holds: bool,
}

pub fn check_kernel_bound(fam: &SetFamily, h_prime: &Graph) -> KernelBoundCheck {
    let (n, k) = (fam.n() as u64, fam.k() as u64);
    let per: Vec<usize> = fam
        .iter()
        .map(|f| {
            let v = f.vertices();
            (0..v.len())
                .map(|i| (i + 1..v.len()).filter(|&j| h_prime.has_edge(v[i], v[j])).count())
                .sum()
        })
        .collect();
    let lhs = (k.saturating_sub(1) as u128) * fam.len() as u128;
    let incidences = per.iter().map(|&c| c as u128).sum();
    let rhs = h_prime.edge_count() as u128 * binom(n.saturating_sub(2), k.saturating_sub(2));
    KernelBoundCheck {
        lhs,
        incidences,
        rhs,
        min_per_member: per.iter().copied().min().unwrap_or(0),
        holds: lhs <= incidences && incidences <= rhs,
    }
}

/// `value <= (k-1)(l-1) C(n-1, k-1)`.
pub fn check_eq1(value: u128, n: usize, k: usize, l: usize) -> BoundCheck {
    let rhs = eq1_bound(n as u64, k as u64, l as u64);
    BoundCheck {
        name: format!("linear path bound, l = {l}"),
        lhs: value,
        rhs,
        holds: value <= rhs,
        premise: None,
    }
}
