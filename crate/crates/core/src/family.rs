//! k-uniform set families on `[n]` and their text interchange format.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A member of a family: a set of distinct vertices, compared lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(VertexSet);

impl Edge {
    pub fn new(vertices: &[usize]) -> Result<Self> {
        let mut set = VertexSet::new();
        for &v in vertices {
            if v == 0 {
                return Err(Error::domain("vertices are 1-based"));
            }
            if !set.insert(v) {
                return Err(Error::domain(format!("repeated vertex {v}")));
            }
        }
        Ok(Edge(set))
    }

    pub fn from_set(set: VertexSet) -> Self {
        Edge(set)
    }

    pub fn set(&self) -> &VertexSet {
        &self.0
    }

    pub fn into_set(self) -> VertexSet {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(v)
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.0.to_vec()
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Edge::new(&v).map_err(serde::de::Error::custom)
    }
}

/// A k-uniform family on `[n]`. Edges are distinct and kept in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "FamilyDoc", try_from = "FamilyDoc")]
pub struct SetFamily {
    n: usize,
    k: usize,
    edges: Vec<Edge>,
}

impl SetFamily {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("uniformity k must be at least 1"));
        }
        Ok(SetFamily {
            n,
            k,
            edges: Vec::new(),
        })
    }

    pub fn from_edges(n: usize, k: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut fam = SetFamily::new(n, k)?;
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        for (i, e) in edges.iter().enumerate() {
            fam.validate(e).map_err(|err| match err {
                Error::Domain(m) => Error::domain(format!("edge {i} {e}: {m}")),
                other => other,
            })?;
        }
        edges.sort();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::domain(format!("duplicate edge {}", w[0])));
        }
        fam.edges = edges;
        Ok(fam)
    }

    pub fn from_lists(n: usize, k: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let edges = lists
            .iter()
            .map(|l| Edge::new(l))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::from_edges(n, k, edges)
    }

    /// Every k-subset of `[n]`.
    pub fn complete(n: usize, k: usize) -> Result<Self> {
        let mut fam = SetFamily::new(n, k)?;
        fam.edges = k_subsets(&(1..=n).collect::<Vec<_>>(), k)
            .map(Edge)
            .collect();
        Ok(fam)
    }

    fn validate(&self, e: &Edge) -> Result<()> {
        if e.len() != self.k {
            return Err(Error::domain(format!(
                "has {} vertices, expected {}",
                e.len(),
                self.k
            )));
        }
        if e.0.max_vertex() > self.n {
            return Err(Error::domain(format!(
                "vertex {} exceeds n = {}",
                e.0.max_vertex(),
                self.n
            )));
        }
        Ok(())
    }

    /// Inserts `e`; returns `false` if it was already present.
    pub fn insert(&mut self, e: Edge) -> Result<bool> {
        self.validate(&e)?;
        match self.edges.binary_search(&e) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.edges.insert(pos, e);
                Ok(true)
            }
        }
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        match self.edges.binary_search(e) {
            Ok(pos) => {
                self.edges.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Edge> {
        self.edges.iter()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn position(&self, e: &Edge) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    /// Member vertex sets, in family order.
    pub fn sets(&self) -> Vec<VertexSet> {
        self.edges.iter().map(|e| e.0.clone()).collect()
    }

    /// The members satisfying `keep`, as a family on the same ground set.
    pub fn filter(&self, mut keep: impl FnMut(&Edge) -> bool) -> SetFamily {
        SetFamily {
            n: self.n,
            k: self.k,
            edges: self.edges.iter().filter(|e| keep(e)).cloned().collect(),
        }
    }

    /// Members of `self` not in `other`.
    pub fn minus(&self, other: &SetFamily) -> SetFamily {
        self.filter(|e| !other.contains(e))
    }

    /// Union of two families over the same `(n, k)`.
    pub fn union(&self, other: &SetFamily) -> Result<SetFamily> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::domain("families over different (n, k)"));
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().filter(|e| !self.contains(e)).cloned());
        edges.sort();
        Ok(SetFamily {
            n: self.n,
            k: self.k,
            edges,
        })
    }

    /// Canonical interchange text: `n`, `k` and lexicographically sorted edges.
    pub fn to_interchange(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{{\n  \"n\": {},\n  \"k\": {},\n  \"edges\": [", self.n, self.k);
        for (i, e) in self.edges.iter().enumerate() {
            out.push_str(if i == 0 { "\n    [" } else { ",\n    [" });
            for (j, v) in e.0.iter().enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                let _ = write!(out, "{v}");
            }
            out.push(']');
        }
        if !self.edges.is_empty() {
            out.push_str("\n  ");
        }
        out.push_str("]\n}\n");
        out
    }

    /// Parses the interchange format. Errors name the line/column or the offending edge.
    pub fn from_interchange(text: &str) -> Result<Self> {
        let doc: FamilyDoc = serde_json::from_str(text).map_err(|e| {
            Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
        })?;
        doc.into_family()
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily(n={}, k={}, {:?})", self.n, self.k, self.edges)
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a Edge;
    type IntoIter = std::slice::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

/// Serde mirror of the interchange document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub n: usize,
    pub k: usize,
    pub edges: Vec<Vec<usize>>,
}

impl FamilyDoc {
    pub fn into_family(self) -> Result<SetFamily> {
        if self.k == 0 {
            return Err(Error::parse("field k", "must be at least 1"));
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, list) in self.edges.iter().enumerate() {
            let loc = format!("edges[{i}]");
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::parse(loc, "vertices must be strictly ascending"));
            }
            if list.len() != self.k {
                return Err(Error::parse(
                    loc,
                    format!("has {} vertices, expected k = {}", list.len(), self.k),
                ));
            }
            if let Some(&v) = list.iter().find(|&&v| v == 0 || v > self.n) {
                return Err(Error::parse(loc, format!("vertex {v} outside 1..={}", self.n)));
            }
            edges.push(Edge::new(list).map_err(|e| Error::parse(format!("edges[{i}]"), e.to_string()))?);
        }
        let mut sorted = edges.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::parse("edges", format!("duplicate edge {}", w[0])));
        }
        SetFamily::from_edges(self.n, self.k, edges)
    }
}

impl From<&SetFamily> for FamilyDoc {
    fn from(f: &SetFamily) -> Self {
        FamilyDoc {
            n: f.n,
            k: f.k,
            edges: f.edges.iter().map(Edge::vertices).collect(),
        }
    }
}

impl From<SetFamily> for FamilyDoc {
    fn from(f: SetFamily) -> Self {
        FamilyDoc::from(&f)
    }
}

impl TryFrom<FamilyDoc> for SetFamily {
    type Error = Error;

    fn try_from(doc: FamilyDoc) -> Result<Self> {
        doc.into_family()
    }
}

/// All `k`-subsets of `ground` (ascending input gives lexicographic output).
pub fn k_subsets(ground: &[usize], k: usize) -> impl Iterator<Item = VertexSet> + '_ {
    let m = ground.len();
    let mut idx: Option<Vec<usize>> = if k <= m { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let cur = idx.as_mut()?;
        let out: VertexSet = cur.iter().map(|&i| ground[i]).collect();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                idx = None;
                break;
            }
            i -= 1;
            if cur[i] < m - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn k_subsets_counts_and_order() {
        let g: Vec<usize> = (1..=6).collect();
        let all: Vec<VertexSet> = k_subsets(&g, 3).collect();
        assert_eq!(all.len(), 20);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(k_subsets(&g, 0).count(), 1);
        assert_eq!(k_subsets(&g, 7).count(), 0);
    }

    #[test]
    fn rejects_duplicates_and_bad_sizes() {
        assert!(SetFamily::from_lists(5, 3, &[vec![1, 2, 3], vec![3, 2, 1]]).is_err());
        assert!(SetFamily::from_lists(5, 3, &[vec![1, 2]]).is_err());
        assert!(SetFamily::from_lists(5, 3, &[vec![1, 2, 6]]).is_err());
    }

    #[test]
    fn parse_errors_name_location() {
        let err = SetFamily::from_interchange("{\"n\": 5, \"k\": 3, \"edges\": [[1,2,3],[1,2,9]]}")
            .unwrap_err();
        assert!(err.to_string().contains("edges[1]"), "{err}");
        let err = SetFamily::from_interchange("{\"n\": 5,\n \"k\": }").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = SetFamily::from_interchange("{\"n\": 5, \"k\": 2, \"edges\": [[2,1]]}").unwrap_err();
        assert!(err.to_string().contains("ascending"), "{err}");
    }

    #[test]
    fn empty_family_round_trips() {
        let f = SetFamily::new(4, 2).unwrap();
        let text = f.to_interchange();
        assert_eq!(SetFamily::from_interchange(&text).unwrap(), f);
    }

    proptest! {
        #[test]
        fn interchange_is_canonical(lists in proptest::collection::btree_set(
            proptest::collection::btree_set(1usize..=9, 3), 0..15)) {
            let lists: Vec<Vec<usize>> = lists.into_iter().map(|s| s.into_iter().collect()).collect();
            let fam = SetFamily::from_lists(9, 3, &lists).unwrap();
            let text = fam.to_interchange();
            let back = SetFamily::from_interchange(&text).unwrap();
            prop_assert_eq!(&back, &fam);
            prop_assert_eq!(back.to_interchange(), text);
        }
    }
}
