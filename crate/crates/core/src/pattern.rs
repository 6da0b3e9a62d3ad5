//! k-partitions, intersection patterns and the rank/type algebra on families
//! of subsets of `[k]`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::Edge;
use crate::vertex_set::VertexSet;

/// Largest `k` for which patterns are supported (they are `u32` masks and
/// rank is found by exhaustive search over `2^k` candidates).
pub const MAX_PATTERN_K: usize = 20;

/// A subset of `[k]`; index `i` is stored at bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Pattern(pub u32);

impl Pattern {
    pub const EMPTY: Pattern = Pattern(0);

    pub fn full(k: usize) -> Self {
        Pattern(((1u64 << k) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        Pattern(1 << (i - 1))
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        Pattern(indices.into_iter().fold(0, |m, i| m | 1 << (i - 1)))
    }

    /// `[k] \ {i}`.
    pub fn co_singleton(k: usize, i: usize) -> Self {
        Pattern(Pattern::full(k).0 & !(1 << (i - 1)))
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && self.0 >> (i - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Pattern) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: Pattern) -> Pattern {
        Pattern(self.0 & other.0)
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let m = self.0;
        (1..=32).filter(move |&i| m >> (i - 1) & 1 == 1)
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

/// Disjoint parts `X_1..X_k` of the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPartition {
    parts: Vec<VertexSet>,
}

impl KPartition {
    pub fn new(parts: Vec<VertexSet>) -> Result<Self> {
        if parts.is_empty() || parts.len() > MAX_PATTERN_K {
            return Err(Error::domain(format!(
                "a k-partition needs 1..={MAX_PATTERN_K} parts"
            )));
        }
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if !parts[i].is_disjoint(&parts[j]) {
                    return Err(Error::domain(format!("parts {} and {} overlap", i + 1, j + 1)));
                }
            }
        }
        Ok(KPartition { parts })
    }

    pub fn from_lists(lists: &[Vec<usize>]) -> Result<Self> {
        KPartition::new(lists.iter().map(|l| l.iter().copied().collect()).collect())
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    /// 1-based index of the part holding `v`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v)).map(|i| i + 1)
    }

    /// `Π(S) = { i : S ∩ X_i ≠ ∅ }`.
    pub fn pattern(&self, s: &VertexSet) -> Pattern {
        Pattern::from_indices(
            self.parts
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.is_disjoint(s))
                .map(|(i, _)| i + 1),
        )
    }

    /// True iff `e` meets every part exactly once.
    pub fn is_transversal(&self, e: &Edge) -> bool {
        e.len() == self.k() && self.parts.iter().all(|p| p.intersection_len(e.set()) == 1)
    }

    /// `F[D]`: the vertices of `f` lying in the parts indexed by `d`.
    pub fn project(&self, f: &VertexSet, d: Pattern) -> VertexSet {
        let mut out = VertexSet::new();
        for i in d.indices() {
            if let Some(p) = self.parts.get(i - 1) {
                out.union_with(&p.intersection(f));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Classification {
    RankK,
    Type1 { central: usize },
    Type2,
    LowRank { rank: usize },
}

/// A family of proper subsets of `[k]` with its derived rank, closure flag and type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternFamily {
    k: usize,
    patterns: BTreeSet<Pattern>,
    rank: usize,
    obstruction: Pattern,
    closed: bool,
    classification: Classification,
}

impl PatternFamily {
    /// Rejects indices outside `[k]` and the full set `[k]` itself.
    pub fn new(k: usize, patterns: impl IntoIterator<Item = Pattern>) -> Result<Self> {
        if k == 0 || k > MAX_PATTERN_K {
            return Err(Error::domain(format!("k must be in 1..={MAX_PATTERN_K}")));
        }
        let full = Pattern::full(k);
        let patterns: BTreeSet<Pattern> = patterns.into_iter().collect();
        for &p in &patterns {
            if !p.is_subset(full) {
                return Err(Error::domain(format!("pattern {p:?} is not a subset of [{k}]")));
            }
            if p == full {
                return Err(Error::domain("patterns must be proper subsets of [k]"));
            }
        }
        let (rank, obstruction) = compute_rank(k, &patterns);
        let closed = patterns
            .iter()
            .all(|&a| patterns.iter().all(|&b| patterns.contains(&a.intersection(b))));
        let classification = classify_ranked(k, rank, &patterns);
        Ok(PatternFamily {
            k,
            patterns,
            rank,
            obstruction,
            closed,
            classification,
        })
    }

    pub fn from_lists(k: usize, lists: &[Vec<usize>]) -> Result<Self> {
        PatternFamily::new(k, lists.iter().map(|l| Pattern::from_indices(l.iter().copied())))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn patterns(&self) -> &BTreeSet<Pattern> {
        &self.patterns
    }

    pub fn contains(&self, p: Pattern) -> bool {
        self.patterns.contains(&p)
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// `min |D|` over `D ⊆ [k]` contained in no member; 0 for the empty family.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// A smallest obstructing set (the lexicographically first by mask order).
    pub fn obstruction(&self) -> Pattern {
        self.obstruction
    }

    pub fn is_intersection_closed(&self) -> bool {
        self.closed
    }

    pub fn classification(&self) -> Classification {
        self.classification
    }

    /// Indices `i` with `{i}` in the family.
    pub fn singletons(&self) -> Vec<usize> {
        (1..=self.k)
            .filter(|&i| self.patterns.contains(&Pattern::singleton(i)))
            .collect()
    }

    pub fn descriptor(&self) -> PatternDescriptor {
        let central = match self.classification {
            Classification::Type1 { central } => Some(central),
            _ => None,
        };
        PatternDescriptor {
            k: self.k,
            patterns: self.patterns.iter().map(|p| p.indices().collect()).collect(),
            rank: self.rank,
            classification: self.classification,
            central,
        }
    }
}

/// Sidecar description of a pattern family, written next to witness families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternDescriptor {
    pub k: usize,
    pub patterns: Vec<Vec<usize>>,
    pub rank: usize,
    pub classification: Classification,
    pub central: Option<usize>,
}

fn compute_rank(k: usize, patterns: &BTreeSet<Pattern>) -> (usize, Pattern) {
    let masks: Vec<u32> = patterns.iter().map(|p| p.0).collect();
    for size in 0..=k as u32 {
        for d in 0u32..(1u32 << k) {
            if d.count_ones() == size && !masks.iter().any(|&b| d & !b == 0) {
                return (size as usize, Pattern(d));
            }
        }
    }
    unreachable!("[k] itself always obstructs a family of proper subsets")
}

fn classify_ranked(k: usize, rank: usize, patterns: &BTreeSet<Pattern>) -> Classification {
    if rank == k {
        return Classification::RankK;
    }
    if k >= 1 && rank == k - 1 {
        let missing: Vec<usize> = (1..=k)
            .filter(|&i| !patterns.contains(&Pattern::co_singleton(k, i)))
            .collect();
        return match missing.as_slice() {
            [x] => Classification::Type1 { central: *x },
            _ => Classification::Type2,
        };
    }
    Classification::LowRank { rank }
}
