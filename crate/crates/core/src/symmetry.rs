//! Twin classes: vertices `u`, `v` are twins when the transposition `(u v)`
//! is an automorphism of the family.
//!
//! Twins form an equivalence relation and each class is acted on by its full
//! symmetric group. During a search, vertices of a class not yet touched by
//! the partial structure are interchangeable, so only the lowest-numbered
//! fresh ones need to be tried.

use std::collections::HashSet;

use crate::vertex_set::VertexSet;

#[derive(Clone, Debug)]
pub struct TwinClasses {
    /// `below[v]`: twins of `v` with a smaller label.
    below: Vec<VertexSet>,
}

impl TwinClasses {
    /// Every vertex in its own class (no symmetry breaking).
    pub fn trivial(n: usize) -> Self {
        TwinClasses {
            below: vec![VertexSet::new(); n + 1],
        }
    }

    pub fn compute(n: usize, members: &[VertexSet]) -> Self {
        let lookup: HashSet<&VertexSet> = members.iter().collect();
        let mut class = vec![0usize; n + 1];
        let mut reps: Vec<usize> = Vec::new();
        for v in 1..=n {
            let found = reps.iter().position(|&r| are_twins(r, v, members, &lookup));
            class[v] = match found {
                Some(c) => c,
                None => {
                    reps.push(v);
                    reps.len() - 1
                }
            };
        }
        let mut below = vec![VertexSet::new(); n + 1];
        for v in 1..=n {
            below[v] = (1..v).filter(|&u| class[u] == class[v]).collect();
        }
        TwinClasses { below }
    }

    pub fn twins_below(&self, v: usize) -> &VertexSet {
        &self.below[v]
    }

    /// True iff each class's fresh part of `new` is a prefix of that class's
    /// untouched vertices.
    pub fn is_canonical(&self, new: &VertexSet, used: &VertexSet) -> bool {
        new.iter().all(|v| {
            used.contains(v)
                || self.below[v]
                    .iter()
                    .all(|u| used.contains(u) || new.contains(u))
        })
    }
}

fn are_twins(u: usize, v: usize, members: &[VertexSet], lookup: &HashSet<&VertexSet>) -> bool {
    members.iter().all(|m| {
        let (hu, hv) = (m.contains(u), m.contains(v));
        if hu == hv {
            return true;
        }
        let mut img = m.clone();
        if hu {
            img.remove(u);
            img.insert(v);
        } else {
            img.remove(v);
            img.insert(u);
        }
        lookup.contains(&img)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::star_family;

    #[test]
    fn star_family_has_two_classes() {
        let fam = star_family(7, 3, 2).unwrap();
        let tw = TwinClasses::compute(7, &fam.sets());
        assert_eq!(tw.twins_below(2).to_vec(), vec![1]);
        assert_eq!(tw.twins_below(7).to_vec(), vec![3, 4, 5, 6]);
        assert!(tw.twins_below(3).is_empty());
        let used: VertexSet = [1, 3].into_iter().collect();
        assert!(tw.is_canonical(&[1, 4, 5].into_iter().collect(), &used));
        assert!(!tw.is_canonical(&[1, 4, 6].into_iter().collect(), &used));
    }
}
