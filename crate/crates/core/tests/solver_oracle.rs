mod common;

use common::*;
use turan_core::solver::{max_free_family, verify_free, SolveOptions, Status};
use turan_core::ForbiddenConfig;

fn opts() -> SolveOptions {
    SolveOptions {
        node_budget: None,
        ..SolveOptions::default()
    }
}

#[test]
fn branch_and_bound_matches_full_enumeration() {
    let pairs: [(&str, fn(u64, u64) -> bool); 3] = [
        ("linear:2", |a, b| (a & b).count_ones() == 1),
        ("loose:2", |a, b| a & b != 0),
        ("matching:2", |a, b| a & b == 0),
    ];
    for k in 2..=3 {
        for n in k..=6 {
            for (cfg, conflict) in pairs {
                let cfg: ForbiddenConfig = cfg.parse().unwrap();
                let want = brute_max_pairwise(n, k, conflict);
                for seeded in [true, false] {
                    let o = SolveOptions {
                        seed_constructions: seeded,
                        ..opts()
                    };
                    let r = max_free_family(n, k, &cfg, &o).unwrap();
                    assert_eq!((r.value, r.status), (want, Status::Exact), "ex_{k}({n}, {cfg}) seeded={seeded}");
                    assert!(verify_free(&r.witness, &cfg).unwrap().free);
                }
            }
        }
    }
}

#[test]
fn symmetry_reduction_does_not_change_values() {
    for (n, k, cfg) in [(6, 2, "linear:3"), (6, 3, "linear:2"), (6, 3, "berge:3"), (7, 3, "loose:3")] {
        let cfg: ForbiddenConfig = cfg.parse().unwrap();
        let plain = SolveOptions {
            symmetry: false,
            seed_constructions: false,
            ..opts()
        };
        let a = max_free_family(n, k, &cfg, &opts()).unwrap();
        let b = max_free_family(n, k, &cfg, &plain).unwrap();
        assert_eq!(a.value, b.value, "ex_{k}({n}, {cfg})");
    }
}

#[test]
fn values_are_monotone_and_thread_independent() {
    for (k, cfg) in [(2, "linear:3"), (3, "linear:3"), (3, "berge:3")] {
        let cfg: ForbiddenConfig = cfg.parse().unwrap();
        let mut prev = 0;
        for n in k..=8 {
            let one = max_free_family(n, k, &cfg, &opts()).unwrap();
            let many = max_free_family(n, k, &cfg, &SolveOptions { threads: 3, ..opts() }).unwrap();
            assert_eq!((one.value, one.status), (many.value, many.status));
            assert!(one.value >= prev, "ex_{k}({n}, {cfg}) dropped");
            prev = one.value;
        }
    }
}

#[test]
fn verify_free_examples() {
    use turan_core::constructions::star_family;
    let star = star_family(10, 4, 1).unwrap();
    assert!(verify_free(&star, &ForbiddenConfig::LinearPath(3)).unwrap().free);
    let complete = turan_core::SetFamily::complete(7, 3).unwrap();
    let v = verify_free(&complete, &ForbiddenConfig::LinearPath(2)).unwrap();
    assert!(!v.free && v.counterexample.is_some());
    let empty = turan_core::SetFamily::new(5, 2).unwrap();
    assert!(verify_free(&empty, &ForbiddenConfig::Matching(1)).unwrap().free);
}
