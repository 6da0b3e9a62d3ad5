use proptest::prelude::*;
use turan_core::family::Edge;
use turan_core::{ForbiddenConfig, SetFamily, VertexSet};

fn family(n: usize, k: usize) -> impl Strategy<Value = SetFamily> {
    prop::collection::btree_set(prop::sample::subsequence((1..=n).collect::<Vec<_>>(), k), 0..20).prop_map(
        move |sets| SetFamily::from_edges(n, k, sets.into_iter().map(|v| Edge::new(&v).unwrap())).unwrap(),
    )
}

proptest! {
    #[test]
    fn interchange_round_trip(fam in (4usize..12).prop_flat_map(|n| family(n, 3))) {
        let back = SetFamily::from_interchange(&fam.to_interchange()).unwrap();
        prop_assert_eq!(back, fam);
    }

    #[test]
    fn vertex_sets_match_masks(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (VertexSet::from_mask(a), VertexSet::from_mask(b));
        prop_assert_eq!(x.union(&y).mask(), a | b);
        prop_assert_eq!(x.intersection(&y).mask(), a & b);
        prop_assert_eq!(x.difference(&y).mask(), a & !b);
        prop_assert_eq!(x.is_subset(&y), a & !b == 0);
        prop_assert_eq!(x.len(), a.count_ones() as usize);
    }

    #[test]
    fn wide_sets_agree_with_btree(xs in prop::collection::btree_set(1usize..200, 0..40),
                                  ys in prop::collection::btree_set(1usize..200, 0..40)) {
        let a: VertexSet = xs.iter().copied().collect();
        let b: VertexSet = ys.iter().copied().collect();
        prop_assert_eq!(a.union(&b).to_vec(), xs.union(&ys).copied().collect::<Vec<_>>());
        prop_assert_eq!(a.intersection(&b).to_vec(), xs.intersection(&ys).copied().collect::<Vec<_>>());
        prop_assert_eq!(a.is_disjoint(&b), xs.is_disjoint(&ys));
    }

    #[test]
    fn config_text_round_trip(kind in 0usize..4, l in 1usize..9) {
        let c = match kind {
            0 => ForbiddenConfig::LinearPath(l),
            1 => ForbiddenConfig::LoosePath(l),
            2 => ForbiddenConfig::BergePath(l),
            _ => ForbiddenConfig::Matching(l),
        };
        prop_assert_eq!(c.to_string().parse::<ForbiddenConfig>().unwrap(), c);
    }
}
