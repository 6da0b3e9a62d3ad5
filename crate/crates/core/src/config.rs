//! Forbidden configurations and their text syntax.
//!
//! `linear:5`, `loose:4`, `berge:4`, `matching:2`,
//! `blowup:[[1,2],[2,3]]` (skeleton edge list) and
//! `tight-tree:[[1,2,3],[2,3,4]]` (edges in tree order). On the command line
//! the last two also accept `blowup:@file` / `tight-tree:@file`.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::SetFamily;

/// A simple graph given by its edges; its vertices are the edge endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Skeleton {
    edges: Vec<(usize, usize)>,
}

impl Skeleton {
    pub fn new(edges: Vec<(usize, usize)>) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::domain("skeleton needs at least one edge"));
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::domain(format!("skeleton loop at {a}")));
            }
            if a == 0 || b == 0 {
                return Err(Error::domain("skeleton vertices are 1-based"));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::domain(format!("repeated skeleton edge ({a}, {b})")));
            }
        }
        Ok(Skeleton { edges })
    }

    /// Reads a skeleton from a 2-uniform family.
    pub fn from_family(fam: &SetFamily) -> Result<Self> {
        if fam.k() != 2 {
            return Err(Error::domain("a skeleton file must have k = 2"));
        }
        Skeleton::new(
            fam.iter()
                .map(|e| {
                    let v = e.vertices();
                    (v[0], v[1])
                })
                .collect(),
        )
    }

    pub fn path(q: usize) -> Self {
        Skeleton::new((1..=q).map(|i| (i, i + 1)).collect()).expect("path skeleton")
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        set.into_iter().collect()
    }
}

/// A tight tree: k-sets listed so that each new set adds exactly one new
/// vertex and meets some earlier set in `k-1` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TightTreeSpec {
    k: usize,
    edges: Vec<Vec<usize>>,
}

impl TightTreeSpec {
    pub fn new(edges: Vec<Vec<usize>>) -> Result<Self> {
        let first = edges
            .first()
            .ok_or_else(|| Error::domain("tight tree needs at least one edge"))?;
        let k = first.len();
        if k == 0 {
            return Err(Error::domain("tight tree edges must be nonempty"));
        }
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut sets: Vec<BTreeSet<usize>> = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            let set: BTreeSet<usize> = e.iter().copied().collect();
            if set.len() != k || e.len() != k {
                return Err(Error::domain(format!("tight tree edge {i} is not a {k}-set")));
            }
            if set.contains(&0) {
                return Err(Error::domain("tight tree vertices are 1-based"));
            }
            if i > 0 {
                let fresh = set.difference(&seen).count();
                if fresh != 1 {
                    return Err(Error::domain(format!(
                        "tight tree edge {i} adds {fresh} new vertices, expected 1"
                    )));
                }
                if !sets.iter().any(|s| s.intersection(&set).count() == k - 1) {
                    return Err(Error::domain(format!(
                        "tight tree edge {i} meets no earlier edge in k-1 vertices"
                    )));
                }
            }
            seen.extend(set.iter().copied());
            sets.push(set);
        }
        Ok(TightTreeSpec { k, edges })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.edges.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    /// Number of vertices `v`.
    pub fn order(&self) -> usize {
        self.vertices().len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ForbiddenConfig {
    LinearPath(usize),
    LoosePath(usize),
    BergePath(usize),
    Matching(usize),
    GraphBlowup(Skeleton),
    TightTree(TightTreeSpec),
}

impl ForbiddenConfig {
    /// Number of family members an embedding uses.
    pub fn member_count(&self) -> usize {
        match self {
            ForbiddenConfig::LinearPath(l)
            | ForbiddenConfig::LoosePath(l)
            | ForbiddenConfig::BergePath(l)
            | ForbiddenConfig::Matching(l) => *l,
            ForbiddenConfig::GraphBlowup(s) => s.edges().len(),
            ForbiddenConfig::TightTree(t) => t.edges().len(),
        }
    }

    pub fn validate(&self, k: usize) -> Result<()> {
        match self {
            ForbiddenConfig::LinearPath(0)
            | ForbiddenConfig::LoosePath(0)
            | ForbiddenConfig::BergePath(0) => Err(Error::domain("path length must be at least 1")),
            ForbiddenConfig::Matching(0) => Err(Error::domain("matching size must be at least 1")),
            ForbiddenConfig::GraphBlowup(_) if k < 2 => {
                Err(Error::domain("blowups need k >= 2"))
            }
            ForbiddenConfig::TightTree(t) if t.k() != k => Err(Error::domain(format!(
                "tight tree is {}-uniform but the family is {k}-uniform",
                t.k()
            ))),
            _ => Ok(()),
        }
    }

    /// Parses a command-line argument, resolving `@file` references relative to `base`.
    pub fn parse_arg(s: &str, base: &Path) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::parse("config", format!("expected kind:value, got {s:?}")))?;
        match (kind, rest.strip_prefix('@')) {
            ("blowup", Some(file)) => {
                let text = std::fs::read_to_string(base.join(file))?;
                let fam = SetFamily::from_interchange(&text)?;
                Ok(ForbiddenConfig::GraphBlowup(Skeleton::from_family(&fam)?))
            }
            ("tight-tree", Some(file)) => {
                let text = std::fs::read_to_string(base.join(file))?;
                Ok(ForbiddenConfig::TightTree(parse_tight_tree_doc(&text)?))
            }
            _ => s.parse(),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TightTreeDoc {
    Bare(Vec<Vec<usize>>),
    Doc { edges: Vec<Vec<usize>> },
}

/// Accepts `[[..],..]` or `{"k": .., "edges": [[..],..]}` with edges in tree order.
pub fn parse_tight_tree_doc(text: &str) -> Result<TightTreeSpec> {
    let doc: TightTreeDoc = serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })?;
    let edges = match doc {
        TightTreeDoc::Bare(e) | TightTreeDoc::Doc { edges: e } => e,
    };
    TightTreeSpec::new(edges)
}

fn parse_count(kind: &str, v: &str) -> Result<usize> {
    let x: usize = v
        .trim()
        .parse()
        .map_err(|_| Error::parse("config", format!("{kind}: expected a positive integer, got {v:?}")))?;
    if x == 0 {
        return Err(Error::parse("config", format!("{kind}: must be at least 1")));
    }
    Ok(x)
}

impl FromStr for ForbiddenConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::parse("config", format!("expected kind:value, got {s:?}")))?;
        match kind {
            "linear" => Ok(ForbiddenConfig::LinearPath(parse_count(kind, rest)?)),
            "loose" => Ok(ForbiddenConfig::LoosePath(parse_count(kind, rest)?)),
            "berge" => Ok(ForbiddenConfig::BergePath(parse_count(kind, rest)?)),
            "matching" => Ok(ForbiddenConfig::Matching(parse_count(kind, rest)?)),
            "blowup" => {
                let edges: Vec<(usize, usize)> = serde_json::from_str(rest)
                    .map_err(|e| Error::parse("config", format!("blowup skeleton: {e}")))?;
                Ok(ForbiddenConfig::GraphBlowup(Skeleton::new(edges)?))
            }
            "tight-tree" => Ok(ForbiddenConfig::TightTree(parse_tight_tree_doc(rest)?)),
            other => Err(Error::parse("config", format!("unknown configuration kind {other:?}"))),
        }
    }
}

impl fmt::Display for ForbiddenConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenConfig::LinearPath(l) => write!(f, "linear:{l}"),
            ForbiddenConfig::LoosePath(l) => write!(f, "loose:{l}"),
            ForbiddenConfig::BergePath(l) => write!(f, "berge:{l}"),
            ForbiddenConfig::Matching(m) => write!(f, "matching:{m}"),
            ForbiddenConfig::GraphBlowup(s) => {
                let pairs: Vec<String> = s.edges.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
                write!(f, "blowup:[{}]", pairs.join(","))
            }
            ForbiddenConfig::TightTree(t) => {
                let sets: Vec<String> = t
                    .edges
                    .iter()
                    .map(|e| format!("[{}]", e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
                    .collect();
                write!(f, "tight-tree:[{}]", sets.join(","))
            }
        }
    }
}

impl Serialize for ForbiddenConfig {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ForbiddenConfig {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_syntax_round_trips() {
        for s in [
            "linear:5",
            "loose:4",
            "berge:4",
            "matching:2",
            "blowup:[[1,2],[2,3],[3,1]]",
            "tight-tree:[[1,2,3],[2,3,4],[1,3,5]]",
        ] {
            let cfg: ForbiddenConfig = s.parse().unwrap();
            assert_eq!(cfg.to_string(), s);
        }
    }

    #[test]
    fn malformed_configs() {
        assert!("linear:0".parse::<ForbiddenConfig>().is_err());
        assert!("linear".parse::<ForbiddenConfig>().is_err());
        assert!("zigzag:3".parse::<ForbiddenConfig>().is_err());
        assert!("blowup:[[1,1]]".parse::<ForbiddenConfig>().is_err());
        // second edge adds two new vertices
        assert!("tight-tree:[[1,2,3],[3,4,5]]".parse::<ForbiddenConfig>().is_err());
        // new vertex but overlap only 1 with the first edge
        assert!("tight-tree:[[1,2,3],[1,2,4],[1,4,5]]".parse::<ForbiddenConfig>().is_ok());
        assert!("tight-tree:[[1,2,3],[1,2,4],[3,4,5]]".parse::<ForbiddenConfig>().is_err());
    }

    #[test]
    fn file_references() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("sk.json"), "{\"n\": 3, \"k\": 2, \"edges\": [[1,2],[2,3]]}").unwrap();
        std::fs::write(dir.path().join("tt.json"), "{\"k\": 3, \"edges\": [[1,2,3],[2,3,4]]}").unwrap();
        let b = ForbiddenConfig::parse_arg("blowup:@sk.json", dir.path()).unwrap();
        assert_eq!(b.to_string(), "blowup:[[1,2],[2,3]]");
        let t = ForbiddenConfig::parse_arg("tight-tree:@tt.json", dir.path()).unwrap();
        assert_eq!(t.member_count(), 2);
        assert!(ForbiddenConfig::parse_arg("tight-tree:@missing.json", dir.path()).is_err());
    }
}
