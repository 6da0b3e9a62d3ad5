//! Homogeneous subfamilies: partite extraction, verification of the
//! homogeneity conditions, greedy decomposition and tree-blowup embedding.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{ForbiddenConfig, Skeleton};
use crate::constructions::binom;
use crate::detect::{self, DetectOptions, Embedding};
use crate::error::{Error, Result};
use crate::family::{Edge, SetFamily};
use crate::pattern::{Classification, KPartition, Pattern, PatternFamily};
use crate::star::{find_star, find_star_through, intersection_structure, Star};
use crate::tree::Tree;
use crate::vertex_set::VertexSet;

/// A candidate `(k, s)`-homogeneous subfamily with its certificate data.
///
/// `star_witnesses` holds, for the designated member (the first of
/// `subfamily`) and each of its intersections `A`, an `s`-star with kernel
/// `A` having that member as a petal.
#[derive(Clone, Debug)]
pub struct HomogeneousWitness {
    pub subfamily: SetFamily,
    pub partition: KPartition,
    pub pattern: PatternFamily,
    pub s: usize,
    pub star_witnesses: Vec<Star>,
}

impl HomogeneousWitness {
    /// Builds the pattern and star certificates for `subfamily` from its first member.
    pub fn assemble(subfamily: SetFamily, partition: KPartition, s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::domain("s must be at least 1"));
        }
        if partition.k() != subfamily.k() {
            return Err(Error::domain("partition and family disagree on k"));
        }
        let first = subfamily
            .edges()
            .first()
            .cloned()
            .ok_or_else(|| Error::domain("a witness needs at least one member"))?;
        let inter = intersection_structure(&first, &subfamily)?;
        let pattern = PatternFamily::new(subfamily.k(), inter.iter().map(|a| partition.pattern(a)))?;
        let mut star_witnesses = Vec::new();
        for a in &inter {
            if let Some(st) = find_star_through(&subfamily, &first, a, s)? {
                star_witnesses.push(st);
            }
        }
        Ok(HomogeneousWitness {
            subfamily,
            partition,
            pattern,
            s,
            star_witnesses,
        })
    }

    pub fn designated(&self) -> &Edge {
        &self.subfamily.edges()[0]
    }

    pub fn len(&self) -> usize {
        self.subfamily.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subfamily.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ItemCheck {
    pub item: u8,
    pub passed: bool,
    pub detail: String,
    pub counterexample: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomogeneityReport {
    pub items: Vec<ItemCheck>,
}

impl HomogeneityReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|c| c.passed)
    }

    pub fn item(&self, i: u8) -> Option<&ItemCheck> {
        self.items.iter().find(|c| c.item == i)
    }
}

fn pass(item: u8) -> ItemCheck {
    ItemCheck {
        item,
        passed: true,
        detail: String::new(),
        counterexample: Vec::new(),
    }
}

fn fail(item: u8, detail: String, counterexample: Vec<Edge>) -> ItemCheck {
    ItemCheck {
        item,
        passed: false,
        detail,
        counterexample,
    }
}

/// `Π(I(F, fam))` for every member, in family order.
fn member_patterns(fam: &SetFamily, part: &KPartition) -> Vec<BTreeSet<Pattern>> {
    let e = fam.edges();
    let mut out = vec![BTreeSet::new(); e.len()];
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            let p = part.pattern(&e[i].set().intersection(e[j].set()));
            out[i].insert(p);
            out[j].insert(p);
        }
    }
    out
}

/// Checks items (2)-(5) of homogeneity. Item (5) is checked for every member.
pub fn verify_homogeneous(w: &HomogeneousWitness) -> HomogeneityReport {
    let fam = &w.subfamily;
    let part = &w.partition;
    let mut items = Vec::new();

    // (2) k-partite
    let bad: Vec<Edge> = fam.iter().filter(|e| !part.is_transversal(e)).cloned().collect();
    items.push(if part.k() != fam.k() {
        fail(2, format!("partition has {} parts, k = {}", part.k(), fam.k()), Vec::new())
    } else if let Some(e) = bad.first() {
        fail(2, format!("{e} is not transversal"), vec![e.clone()])
    } else {
        pass(2)
    });

    // (3) every member has intersection pattern J
    let pats = member_patterns(fam, part);
    let j = w.pattern.patterns();
    let mut item3 = pass(3);
    'outer: for (i, f) in fam.iter().enumerate() {
        for (jdx, g) in fam.iter().enumerate() {
            if i != jdx {
                let p = part.pattern(&f.set().intersection(g.set()));
                if !j.contains(&p) {
                    item3 = fail(3, format!("{f} and {g} meet in pattern {p:?}, not in J"), vec![f.clone(), g.clone()]);
                    break 'outer;
                }
            }
        }
        if &pats[i] != j {
            item3 = fail(3, format!("{f} has intersection pattern {:?}", pats[i]), vec![f.clone()]);
            break;
        }
    }
    items.push(item3);

    // (4) closed under intersection
    items.push(if w.pattern.is_intersection_closed() {
        pass(4)
    } else {
        fail(4, "J is not closed under intersection".into(), Vec::new())
    });

    // (5) s-stars through every member, plus the stored certificates
    let mut item5 = pass(5);
    if let Some(first) = fam.edges().first() {
        let inter = intersection_structure(first, fam).unwrap_or_default();
        for a in &inter {
            let ok = w.star_witnesses.iter().any(|st| {
                st.kernel() == a
                    && st.size() >= w.s
                    && st.is_valid()
                    && st.petals().contains(first)
                    && st.petals().iter().all(|p| fam.contains(p))
            });
            if !ok {
                item5 = fail(5, format!("no stored {}-star through {first} with kernel {a}", w.s), vec![first.clone()]);
                break;
            }
        }
    }
    if item5.passed {
        'members: for f in fam.iter() {
            for a in intersection_structure(f, fam).unwrap_or_default() {
                if !matches!(find_star_through(fam, f, &a, w.s), Ok(Some(_))) {
                    item5 = fail(5, format!("no {}-star through {f} with kernel {a}", w.s), vec![f.clone()]);
                    break 'members;
                }
            }
        }
    }
    items.push(item5);
    HomogeneityReport { items }
}

/// `|F*| <= C(n, rank(J))`.
pub fn check_rank_bound(w: &HomogeneousWitness) -> bool {
    (w.subfamily.len() as u128) <= binom(w.subfamily.n() as u64, w.pattern.rank() as u64)
}

/// For an obstruction `D` of `J`, each `F[D]` lies in exactly one member.
pub fn check_own_subset(w: &HomogeneousWitness) -> bool {
    let d = w.pattern.obstruction();
    w.subfamily.iter().all(|f| {
        let proj = w.partition.project(f.set(), d);
        w.subfamily.iter().filter(|g| proj.is_subset(g.set())).count() == 1
    })
}

/// Derandomized partite extraction: a k-partition and the members meeting
/// every part once, at least `ceil(k!/k^k |fam|)` of them.
pub fn erdos_kleitman_partite(fam: &SetFamily) -> Result<(KPartition, SetFamily)> {
    let order: Vec<usize> = (1..=fam.n()).collect();
    erdos_kleitman_with_order(fam, &order)
}

/// As [`erdos_kleitman_partite`], assigning vertices in the given order.
pub fn erdos_kleitman_with_order(fam: &SetFamily, order: &[usize]) -> Result<(KPartition, SetFamily)> {
    let (n, k) = (fam.n(), fam.k());
    if k > crate::pattern::MAX_PATTERN_K {
        return Err(Error::domain("k too large for partite extraction"));
    }
    // A member with `a` vertices placed in distinct parts has weight
    // (k-a)! k^a: k^k times its chance of ending up transversal.
    let fact: Vec<u128> = (0..=k).scan(1u128, |acc, i| {
        if i > 0 {
            *acc *= i as u128;
        }
        Some(*acc)
    }).collect();
    let pow: Vec<u128> = (0..=k).map(|i| (k as u128).pow(i as u32)).collect();
    let weight = |assigned: usize, clash: bool| -> u128 {
        if clash {
            0
        } else {
            fact[k - assigned] * pow[assigned]
        }
    };
    let mut part = vec![usize::MAX; n + 1];
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, e) in fam.iter().enumerate() {
        for v in e.set().iter() {
            inc[v].push(i);
        }
    }
    // per member: mask of parts used, number assigned, clash flag
    let mut state: Vec<(u32, usize, bool)> = vec![(0, 0, false); fam.len()];
    for &v in order {
        let mut best = (0u128, 0usize);
        for p in 0..k {
            let gain: u128 = inc[v]
                .iter()
                .map(|&m| {
                    let (mask, a, clash) = state[m];
                    weight(a + 1, clash || mask >> p & 1 == 1)
                })
                .sum();
            if p == 0 || gain > best.0 {
                best = (gain, p);
            }
        }
        let p = best.1;
        part[v] = p;
        for &m in &inc[v] {
            let st = &mut state[m];
            st.2 |= st.0 >> p & 1 == 1;
            st.0 |= 1 << p;
            st.1 += 1;
        }
    }
    let mut parts = vec![VertexSet::new(); k];
    for v in 1..=n {
        let p = if part[v] == usize::MAX { 0 } else { part[v] };
        parts[p].insert(v);
    }
    let partition = KPartition::new(parts)?;
    let sub = fam.filter(|e| partition.is_transversal(e));
    Ok((partition, sub))
}

#[derive(Clone, Debug)]
pub struct HomogenizeOptions {
    pub seed: u64,
    /// Partitions tried per extraction round (the first uses vertex order `1..n`).
    pub candidates: usize,
    /// Extraction rounds before giving up; `None` runs until the family is exhausted.
    pub max_rounds: Option<usize>,
}

impl Default for HomogenizeOptions {
    fn default() -> Self {
        HomogenizeOptions {
            seed: 0,
            candidates: 4,
            max_rounds: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Homogenized {
    pub witnesses: Vec<HomogeneousWitness>,
    /// Members left over when the round budget ran out.
    pub leftover: SetFamily,
    pub partial: bool,
}

/// Greedy extraction of homogeneous subfamilies until `fam` is used up.
pub fn homogenize(fam: &SetFamily, s: usize, opts: &HomogenizeOptions) -> Result<Homogenized> {
    if s == 0 {
        return Err(Error::domain("s must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut rest = fam.clone();
    let mut witnesses = Vec::new();
    while !rest.is_empty() {
        if opts.max_rounds.is_some_and(|m| witnesses.len() >= m) {
            return Ok(Homogenized {
                witnesses,
                leftover: rest,
                partial: true,
            });
        }
        let w = extract_one(&rest, s, opts.candidates, &mut rng)?;
        rest = rest.minus(&w.subfamily);
        witnesses.push(w);
    }
    Ok(Homogenized {
        witnesses,
        leftover: rest,
        partial: false,
    })
}

/// The best homogeneous subfamily found over several candidate partitions.
fn extract_one(fam: &SetFamily, s: usize, candidates: usize, rng: &mut ChaCha8Rng) -> Result<HomogeneousWitness> {
    let mut best: Option<(KPartition, Vec<Edge>)> = None;
    let mut order: Vec<usize> = (1..=fam.n()).collect();
    for c in 0..candidates.max(1) {
        if c > 0 {
            order.shuffle(rng);
        }
        let (part, trans) = erdos_kleitman_with_order(fam, &order)?;
        if trans.is_empty() {
            continue;
        }
        let pats = member_patterns(&trans, &part);
        let mut buckets: BTreeMap<&BTreeSet<Pattern>, Vec<Edge>> = BTreeMap::new();
        for (e, p) in trans.iter().zip(&pats) {
            buckets.entry(p).or_default().push(e.clone());
        }
        let bucket = buckets
            .into_values()
            .max_by_key(|b| b.len())
            .expect("nonempty transversal family");
        let refined = refine(fam.n(), fam.k(), &part, bucket, s)?;
        if best.as_ref().is_none_or(|(_, b)| refined.len() > b.len()) {
            best = Some((part, refined));
        }
    }
    let (part, members) = best.ok_or_else(|| Error::Verification("no transversal member found".into()))?;
    HomogeneousWitness::assemble(SetFamily::from_edges(fam.n(), fam.k(), members)?, part, s)
}

/// Deletes members until items (3)-(5) hold. Always ends with at least one member.
fn refine(n: usize, k: usize, part: &KPartition, mut members: Vec<Edge>, s: usize) -> Result<Vec<Edge>> {
    loop {
        if members.len() <= 1 {
            return Ok(members);
        }
        let fam = SetFamily::from_edges(n, k, members.clone())?;
        let pats = member_patterns(&fam, part);
        let mut counts: BTreeMap<&BTreeSet<Pattern>, usize> = BTreeMap::new();
        for p in &pats {
            *counts.entry(p).or_default() += 1;
        }
        let (modal, &cnt) = counts.iter().max_by_key(|(_, &c)| c).expect("members");
        if cnt < fam.len() {
            let modal = (*modal).clone();
            members = fam.iter().zip(&pats).filter(|(_, p)| **p == modal).map(|(e, _)| e.clone()).collect();
            continue;
        }
        let j = PatternFamily::new(k, pats[0].iter().copied())?;
        if !j.is_intersection_closed() {
            members.pop();
            continue;
        }
        let bad: BTreeSet<usize> = (0..fam.len())
            .filter(|&i| {
                let f = &fam.edges()[i];
                intersection_structure(f, &fam)
                    .unwrap_or_default()
                    .iter()
                    .any(|a| !matches!(find_star_through(&fam, f, a, s), Ok(Some(_))))
            })
            .collect();
        if bad.is_empty() {
            return Ok(fam.edges().to_vec());
        }
        if bad.len() == fam.len() {
            return Ok(vec![fam.edges()[0].clone()]);
        }
        members = fam
            .iter()
            .enumerate()
            .filter(|(i, _)| !bad.contains(i))
            .map(|(_, e)| e.clone())
            .collect();
    }
}

#[derive(Clone, Debug)]
pub struct PartitionOptions {
    pub homogenize: HomogenizeOptions,
    /// Witnesses smaller than this end the extraction.
    pub floor: usize,
    pub detect: DetectOptions,
}

impl Default for PartitionOptions {
    fn default() -> Self {
        PartitionOptions {
            homogenize: HomogenizeOptions::default(),
            floor: 1,
            detect: DetectOptions::default(),
        }
    }
}

/// Either homogeneous type-1 groups plus a residual, or a linear path found on
/// the way. The groups and the residual always partition the input.
#[derive(Clone, Debug)]
pub struct CanonicalPartition {
    pub groups: Vec<HomogeneousWitness>,
    pub residual: SetFamily,
    pub path: Option<Embedding>,
    /// Reasons the run falls outside the theorem's hypotheses, if any.
    pub outside_theorem: Vec<String>,
}

/// Peels homogeneous groups off `fam` until the best one has rank at most
/// `k-2` (or is smaller than the floor). A rank-`k` or type-2 group is turned
/// into a linear path of length `l` when `s >= k l`; otherwise it goes to the
/// residual. If no path turned up that way, the detector is run on `fam`.
pub fn canonical_partition(fam: &SetFamily, s: usize, l: usize, opts: &PartitionOptions) -> Result<CanonicalPartition> {
    if s == 0 || l == 0 {
        return Err(Error::domain("s and l must be at least 1"));
    }
    let k = fam.k();
    let mut outside = Vec::new();
    if s < k * l {
        outside.push(format!("s = {s} is below k*l = {}", k * l));
    }
    if k < 4 {
        outside.push(format!("k = {k} is below 4"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.homogenize.seed);
    let mut rest = fam.clone();
    let mut residual = SetFamily::new(fam.n(), k)?;
    let mut groups = Vec::new();
    let mut path = None;
    let mut rounds = 0usize;
    while !rest.is_empty() {
        if opts.homogenize.max_rounds.is_some_and(|m| rounds >= m) {
            outside.push("round budget exhausted".into());
            break;
        }
        rounds += 1;
        let w = extract_one(&rest, s, opts.homogenize.candidates, &mut rng)?;
        if w.pattern.rank() + 2 <= k || w.len() < opts.floor {
            break;
        }
        rest = rest.minus(&w.subfamily);
        match w.pattern.classification() {
            Classification::Type1 { .. } => groups.push(w),
            _ => {
                if path.is_none() && s >= k * l {
                    if let Ok(e) = embed_tree_blowup(&w, &Tree::path(l)) {
                        path = Some(Embedding {
                            members: e.members,
                            vertex_map: Vec::new(),
                        });
                    }
                }
                residual = residual.union(&w.subfamily)?;
            }
        }
    }
    residual = residual.union(&rest)?;
    if path.is_none() {
        match detect::contains_with(fam, &ForbiddenConfig::LinearPath(l), &opts.detect) {
            Ok(found) => path = found,
            Err(Error::Timeout { nodes }) => outside.push(format!("path search timed out after {nodes} nodes")),
            Err(e) => return Err(e),
        }
    }
    Ok(CanonicalPartition {
        groups,
        residual,
        path,
        outside_theorem: outside,
    })
}

/// Embeds the k-blowup of `t` into a rank-`k` or type-2 witness by growing the
/// tree one leaf at a time through stars centred at kernel vertices.
///
/// The result is a [`ForbiddenConfig::GraphBlowup`] embedding whose skeleton
/// is `t`'s edge list.
pub fn embed_tree_blowup(w: &HomogeneousWitness, t: &Tree) -> Result<Embedding> {
    let k = w.subfamily.k();
    let q = t.edge_count();
    match w.pattern.classification() {
        Classification::RankK | Classification::Type2 => {}
        other => return Err(Error::domain(format!("pattern is {other:?}, need rank k or type 2"))),
    }
    if q == 0 {
        return Err(Error::domain("the tree needs at least one edge"));
    }
    if w.s < k * q {
        return Err(Error::domain(format!("s = {} is below k*q = {}", w.s, k * q)));
    }
    if k < 2 {
        return Err(Error::domain("blowups need k >= 2"));
    }
    let singles = w.pattern.singletons();
    if singles.len() < 2 {
        return Err(Error::domain("the pattern has fewer than two singletons"));
    }
    let kernel_vertices = |f: &Edge| -> Vec<usize> {
        singles
            .iter()
            .map(|&i| w.partition.project(f.set(), Pattern::singleton(i)).min_vertex().expect("transversal"))
            .collect()
    };
    let mut phi = vec![0usize; t.order() + 1];
    let mut members: BTreeMap<(usize, usize), Edge> = BTreeMap::new();
    let mut used = VertexSet::new();
    let bfs = t.bfs_edges();
    let (r, c) = bfs[0];
    let first = w.designated().clone();
    let kv = kernel_vertices(&first);
    phi[r] = kv[0];
    phi[c] = kv[1];
    used.union_with(first.set());
    members.insert((r.min(c), r.max(c)), first);
    for &(u, v) in &bfs[1..] {
        let hu = phi[u];
        let kernel: VertexSet = [hu].into_iter().collect();
        let star = find_star(&w.subfamily, &kernel, w.s)?
            .ok_or_else(|| Error::Verification(format!("{hu} is not the kernel of an {}-star", w.s)))?;
        let mut others = used.clone();
        others.remove(hu);
        let petal = star
            .petals()
            .iter()
            .find(|p| p.set().difference(&kernel).is_disjoint(&others))
            .ok_or_else(|| Error::Verification("every petal meets the partial blowup".into()))?
            .clone();
        let hv = kernel_vertices(&petal)
            .into_iter()
            .find(|&x| x != hu)
            .ok_or_else(|| Error::Verification("petal has no second kernel vertex".into()))?;
        phi[v] = hv;
        used.union_with(petal.set());
        members.insert((u.min(v), u.max(v)), petal);
    }
    let skeleton = Skeleton::new(t.edges().to_vec())?;
    let emb = Embedding {
        members: t
            .edges()
            .iter()
            .map(|&(a, b)| members[&(a.min(b), a.max(b))].clone())
            .collect(),
        vertex_map: skeleton.vertices().into_iter().map(|x| (x, phi[x])).collect(),
    };
    if !detect::verify_embedding(&w.subfamily, &ForbiddenConfig::GraphBlowup(skeleton), &emb) {
        return Err(Error::Verification("tree blowup failed re-verification".into()));
    }
    Ok(emb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::star_family;

    fn fam(n: usize, k: usize, lists: &[&[usize]]) -> SetFamily {
        SetFamily::from_lists(n, k, &lists.iter().map(|l| l.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    /// Complete 3-partite family with parts {1..m}, {m+1..2m}, {2m+1..3m}.
    fn complete_tripartite(m: usize) -> (SetFamily, KPartition) {
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

    #[test]
    fn ek_guarantee_small() {
        let f = star_family(9, 3, 1).unwrap();
        let (part, sub) = erdos_kleitman_partite(&f).unwrap();
        assert!(sub.len() as u128 * 9 >= 2 * f.len() as u128);
        assert!(sub.iter().all(|e| part.is_transversal(e)));
        let single = fam(5, 3, &[&[1, 2, 3]]);
        assert_eq!(erdos_kleitman_partite(&single).unwrap().1, single);
    }

    #[test]
    fn verify_on_complete_partite() {
        let (f, part) = complete_tripartite(3);
        let w = HomogeneousWitness::assemble(f, part, 3).unwrap();
        assert_eq!(w.pattern.classification(), Classification::RankK);
        let rep = verify_homogeneous(&w);
        assert!(rep.passed(), "{rep:?}");
        assert!(check_rank_bound(&w));
        assert!(check_own_subset(&w));
        // s too large for the parts
        let big = HomogeneousWitness::assemble(w.subfamily.clone(), w.partition.clone(), 4).unwrap();
        assert!(!verify_homogeneous(&big).item(5).unwrap().passed);
    }

    #[test]
    fn item3_counterexample_pair() {
        let f = fam(6, 3, &[&[1, 3, 5], &[2, 4, 6], &[1, 4, 6]]);
        let part = KPartition::from_lists(&[vec![1, 2], vec![3, 4], vec![5, 6]]).unwrap();
        let mut w = HomogeneousWitness::assemble(f, part, 1).unwrap();
        // J of the designated member {1,3,5} is {∅, {1}}; {2,4,6} and {1,4,6} meet in {2,3}
        w.pattern = PatternFamily::from_lists(3, &[vec![], vec![1]]).unwrap();
        let rep = verify_homogeneous(&w);
        let c = rep.item(3).unwrap();
        assert!(!c.passed);
        assert_eq!(c.counterexample.len(), 2);
    }

    #[test]
    fn homogenize_star_family() {
        let f = star_family(12, 4, 1).unwrap();
        let h = homogenize(&f, 2, &HomogenizeOptions::default()).unwrap();
        let first = &h.witnesses[0];
        let centre = first.partition.part_of(1).unwrap();
        assert_eq!(first.pattern.classification(), Classification::Type1 { central: centre });
        let total: usize = h.witnesses.iter().map(|w| w.len()).sum();
        assert_eq!(total, f.len());
        for w in &h.witnesses {
            assert!(verify_homogeneous(w).passed());
        }
    }

    #[test]
    fn homogenize_trivial_families() {
        let one = fam(5, 3, &[&[1, 2, 3]]);
        let h = homogenize(&one, 3, &HomogenizeOptions::default()).unwrap();
        assert_eq!(h.witnesses.len(), 1);
        assert!(h.witnesses[0].pattern.is_empty());
        let matching = fam(9, 3, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let h = homogenize(&matching, 2, &HomogenizeOptions::default()).unwrap();
        let w = &h.witnesses[0];
        assert_eq!(w.len(), 3);
        assert_eq!(w.pattern.patterns().iter().copied().collect::<Vec<_>>(), vec![Pattern::EMPTY]);
    }

    #[test]
    fn tree_blowup_in_rank_k_fixture() {
        let (f, part) = complete_tripartite(6);
        let w = HomogeneousWitness::assemble(f, part, 6).unwrap();
        let e = embed_tree_blowup(&w, &Tree::path(2)).unwrap();
        assert_eq!(e.members.len(), 2);
        assert!(embed_tree_blowup(&w, &Tree::path(3)).is_err());
    }

    #[test]
    fn canonical_partition_examples() {
        let star = star_family(12, 4, 1).unwrap();
        let cp = canonical_partition(&star, 3, 3, &PartitionOptions::default()).unwrap();
        assert!(cp.path.is_none());
        assert!(!cp.groups.is_empty());
        let largest = cp.groups.iter().map(|g| g.len()).max().unwrap();
        assert_eq!(largest, cp.groups[0].len());
        let covered: usize = cp.groups.iter().map(|g| g.len()).sum::<usize>() + cp.residual.len();
        assert_eq!(covered, star.len());

        let complete = SetFamily::complete(12, 4).unwrap();
        let cp = canonical_partition(&complete, 12, 3, &PartitionOptions::default()).unwrap();
        let p = cp.path.expect("path certificate");
        assert!(detect::verify_embedding(&complete, &ForbiddenConfig::LinearPath(3), &p));

        let empty = SetFamily::new(6, 4).unwrap();
        let cp = canonical_partition(&empty, 12, 3, &PartitionOptions::default()).unwrap();
        assert!(cp.groups.is_empty() && cp.residual.is_empty() && cp.path.is_none());
    }
}
