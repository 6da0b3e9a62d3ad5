//! Δ-systems (stars), intersection structures, degrees and kernel degrees.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::family::{Edge, SetFamily};
use crate::packing::max_packing;
use crate::vertex_set::VertexSet;

/// An s-star: petals whose pairwise intersections all equal the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Star {
    kernel: VertexSet,
    petals: Vec<Edge>,
}

impl Star {
    pub fn new(kernel: VertexSet, petals: Vec<Edge>) -> Result<Self> {
        if petals.is_empty() {
            return Err(Error::domain("a star needs at least one petal"));
        }
        for (i, p) in petals.iter().enumerate() {
            if !kernel.is_subset(p.set()) {
                return Err(Error::Verification(format!("petal {p} misses kernel {kernel}")));
            }
            for q in &petals[i + 1..] {
                if p.set().intersection(q.set()) != kernel {
                    return Err(Error::Verification(format!(
                        "petals {p} and {q} do not meet exactly in {kernel}"
                    )));
                }
            }
        }
        Ok(Star { kernel, petals })
    }

    pub fn kernel(&self) -> &VertexSet {
        &self.kernel
    }

    pub fn petals(&self) -> &[Edge] {
        &self.petals
    }

    pub fn size(&self) -> usize {
        self.petals.len()
    }

    /// Re-checks the star conditions (used on deserialized or hand-built stars).
    pub fn is_valid(&self) -> bool {
        Star::new(self.kernel.clone(), self.petals.clone()).is_ok()
    }
}

/// `I(F, fam)`: the distinct intersections of `f` with the other members.
pub fn intersection_structure(f: &Edge, fam: &SetFamily) -> Result<BTreeSet<VertexSet>> {
    if !fam.contains(f) {
        return Err(Error::domain(format!("{f} is not a member of the family")));
    }
    Ok(fam
        .iter()
        .filter(|g| *g != f)
        .map(|g| g.set().intersection(f.set()))
        .collect())
}

/// Number of members containing `w`.
pub fn degree(w: &VertexSet, fam: &SetFamily) -> usize {
    fam.iter().filter(|e| w.is_subset(e.set())).count()
}

/// Members containing `w`, with their residuals `F \ w`.
fn residuals<'a>(w: &VertexSet, fam: &'a SetFamily) -> (Vec<&'a Edge>, Vec<VertexSet>) {
    fam.iter()
        .filter(|e| w.is_subset(e.set()))
        .map(|e| (e, e.set().difference(w)))
        .unzip()
}

/// Largest `s` such that an s-star with kernel exactly `w` exists, capped at `cap`.
///
/// A single member containing `w` counts as a 1-star; 0 means no member contains `w`.
pub fn kernel_degree(w: &VertexSet, fam: &SetFamily, cap: usize) -> usize {
    let (_, res) = residuals(w, fam);
    max_packing(&res, cap.max(1)).len()
}

/// An s-star with the given kernel, if one exists.
pub fn find_star(fam: &SetFamily, kernel: &VertexSet, s: usize) -> Result<Option<Star>> {
    if s == 0 {
        return Err(Error::domain("star size must be at least 1"));
    }
    let (members, res) = residuals(kernel, fam);
    let pick = max_packing(&res, s);
    if pick.len() < s {
        return Ok(None);
    }
    let petals = pick.into_iter().map(|i| members[i].clone()).collect();
    Star::new(kernel.clone(), petals).map(Some)
}

/// An s-star with kernel `kernel` having `f` as one of its petals.
pub fn find_star_through(
    fam: &SetFamily,
    f: &Edge,
    kernel: &VertexSet,
    s: usize,
) -> Result<Option<Star>> {
    if s == 0 {
        return Err(Error::domain("star size must be at least 1"));
    }
    if !kernel.is_subset(f.set()) {
        return Ok(None);
    }
    let outer = f.set().difference(kernel);
    let (members, res): (Vec<&Edge>, Vec<VertexSet>) = fam
        .iter()
        .filter(|g| *g != f && kernel.is_subset(g.set()))
        .map(|g| (g, g.set().difference(kernel)))
        .filter(|(_, r)| r.is_disjoint(&outer))
        .unzip();
    let pick = max_packing(&res, s - 1);
    if pick.len() < s - 1 {
        return Ok(None);
    }
    let mut petals = vec![f.clone()];
    petals.extend(pick.into_iter().map(|i| members[i].clone()));
    Star::new(kernel.clone(), petals).map(Some)
}
