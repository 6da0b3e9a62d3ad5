//! Acceptance suite: one PASS/FAIL line per criterion. Run with
//! `cargo test -p turan-core --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use turan_core::config::Skeleton;
use turan_core::constructions::{
    binom, eq1_bound, even_extremal_family, f, g, gyori_partition_family, loose_even_family, star_family,
};
use turan_core::delta::{
    check_own_subset, check_rank_bound, embed_tree_blowup, erdos_kleitman_partite, homogenize, verify_homogeneous,
    HomogeneousWitness, HomogenizeOptions,
};
use turan_core::detect::{contains_with, verify_embedding, DetectOptions};
use turan_core::family::{k_subsets, Edge};
use turan_core::kernel::{greedy_blowup_embedding, kernel_graph};
use turan_core::peel::{peel_path_or_biclique, verify_peel};
use turan_core::solver::probe::ex_table;
use turan_core::solver::probe::GridCell;
use turan_core::solver::{max_free_family, verify_free, SolveOptions, Status};
use turan_core::tree::Tree;
use turan_core::{ForbiddenConfig, SetFamily, VertexSet};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exhaustive() -> SolveOptions {
    SolveOptions {
        node_budget: None,
        ..SolveOptions::default()
    }
}

fn cfg(s: &str) -> ForbiddenConfig {
    s.parse().unwrap()
}

fn count_ksets(n: usize, k: usize, keep: impl Fn(&VertexSet) -> bool) -> u128 {
    let ground: Vec<usize> = (1..=n).collect();
    k_subsets(&ground, k).filter(|s| keep(s)).count() as u128
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for n in 1..=14usize {
        for k in 3..=5usize {
            for t in 1..=2usize {
                let s = VertexSet::range(1, t);
                let pair = VertexSet::range(t + 1, t + 2);
                let fo = count_ksets(n, k, |e| !e.is_disjoint(&s));
                let go = fo + count_ksets(n, k, |e| e.is_disjoint(&s) && pair.is_subset(e));
                let (nn, kk, tt) = (n as u64, k as u64, t as u64);
                ensure(f(nn, kk, tt) == fo, || format!("f({n},{k},{t}) = {} but {fo} sets meet [t]", f(nn, kk, tt)))?;
                if n >= k + t + 2 {
                    ensure(g(nn, kk, tt) == go, || format!("g({n},{k},{t}) = {} vs oracle {go}", g(nn, kk, tt)))?;
                    let ev = even_extremal_family(n, k, t).map_err(|e| e.to_string())?;
                    ensure(ev.len() as u128 == go, || format!("even({n},{k},{t}) has {} members", ev.len()))?;
                } else {
                    ensure(even_extremal_family(n, k, t).is_err(), || format!("even({n},{k},{t}) accepted"))?;
                }
                if n >= k + t {
                    let st = star_family(n, k, t).map_err(|e| e.to_string())?;
                    let lo = loose_even_family(n, k, t).map_err(|e| e.to_string())?;
                    ensure(st.len() as u128 == fo, || format!("star({n},{k},{t}) has {} members", st.len()))?;
                    ensure(lo.len() as u128 == fo + 1, || format!("loose({n},{k},{t}) has {} members", lo.len()))?;
                    checked += 1;
                }
            }
        }
    }
    ensure(f(10, 4, 2) == 140 && g(10, 4, 2) == 155, || "f(10,4,2), g(10,4,2) wrong".into())?;
    Ok(format!("f(10,4,2)=140, g(10,4,2)=155; {checked} (n,k,t) size checks"))
}

fn free(fam: &SetFamily, c: &ForbiddenConfig) -> Result<(), String> {
    let v = verify_free(fam, c).map_err(|e| e.to_string())?;
    ensure(v.free, || format!("{c} found: {:?}", v.counterexample))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for k in 3..=5usize {
        for t in 1..=2usize {
            for n in k + t..=11 {
                free(&star_family(n, k, t).unwrap(), &ForbiddenConfig::LinearPath(2 * t + 1))?;
                free(&loose_even_family(n, k, t).unwrap(), &ForbiddenConfig::LoosePath(2 * t + 2))?;
                checked += 2;
                if n >= k + t + 2 {
                    free(&even_extremal_family(n, k, t).unwrap(), &ForbiddenConfig::LinearPath(2 * t + 2))?;
                    checked += 1;
                }
            }
        }
    }
    let blocks = gyori_partition_family(8, 3, 4).unwrap();
    free(&blocks, &cfg("berge:4"))?;
    Ok(format!("{} constructions free (n <= 11), blocks(8,3,4) Berge-4-free", checked + 1))
}

fn exact(n: usize, k: usize, c: &str, want: usize) -> Result<(), String> {
    let r = max_free_family(n, k, &cfg(c), &exhaustive()).map_err(|e| e.to_string())?;
    ensure(r.status == Status::Exact && r.value == want, || {
        format!("ex_{k}({n}, {c}) = {} ({}), expected {want}", r.value, r.status)
    })
}

fn criterion_3() -> Outcome {
    exact(6, 2, "linear:3", 6)?;
    exact(5, 2, "linear:3", 4)?;
    for n in 2..=8 {
        exact(n, 2, "linear:2", n / 2)?;
    }
    exact(6, 3, "matching:2", 10)?;
    for n in 3..=9 {
        exact(n, 3, "loose:2", n / 3)?;
    }
    Ok("17 exact values".into())
}

fn criterion_4() -> Outcome {
    let opts = SolveOptions {
        node_budget: None,
        time_budget_secs: Some(1800),
        ..SolveOptions::default()
    };
    let r = max_free_family(8, 3, &cfg("berge:4"), &opts).map_err(|e| e.to_string())?;
    let closed = (8 / 4) as u128 * binom(4, 3);
    match r.status {
        Status::Exact => {
            ensure(r.value as u128 == closed, || format!("ex_3(8, berge:4) = {}, expected {closed}", r.value))?;
            Ok(format!("ex_3(8, berge:4) = {} exact in {} nodes", r.value, r.stats.nodes))
        }
        _ => {
            ensure(r.value >= 8, || format!("lower bound {} below 8", r.value))?;
            Ok(format!("timed out; construction gives {} >= 8, upper bound untested", r.value))
        }
    }
}

fn criterion_5() -> Outcome {
    let opts = SolveOptions {
        node_budget: Some(2_000_000),
        ..SolveOptions::default()
    };
    let mut solved = 0;
    for (k, nmax) in [(2, 8), (3, 8), (4, 8)] {
        for l in 1..=4usize {
            for n in k..=nmax {
                let r = max_free_family(n, k, &ForbiddenConfig::LinearPath(l), &opts).map_err(|e| e.to_string())?;
                let upper = eq1_bound(n as u64, k as u64, l as u64);
                let t = (l - 1) / 2;
                let star = if t == 0 || n < k + t { 0 } else { star_family(n, k, t).unwrap().len() };
                ensure(r.value as u128 <= upper, || format!("ex_{k}({n}, linear:{l}) = {} > {upper}", r.value))?;
                ensure(r.value >= star, || format!("ex_{k}({n}, linear:{l}) = {} < star {star}", r.value))?;
                solved += 1;
            }
        }
    }
    Ok(format!("{solved} instances within [star, (k-1)(l-1)C(n-1,k-1)]"))
}

fn criterion_6() -> Outcome {
    let cells: Vec<GridCell> = (4..=12)
        .map(|n| GridCell {
            n,
            k: 4,
            config: ForbiddenConfig::LinearPath(3),
        })
        .collect();
    let opts = SolveOptions {
        node_budget: Some(500),
        ..SolveOptions::default()
    };
    let rep = ex_table(&cells, &opts, None).map_err(|e| e.to_string())?;
    let mut matches = Vec::new();
    for r in &rep.rows {
        let fv = r.f.expect("path config has f");
        ensure(r.witness_free, || format!("n={}: witness not verified free", r.n))?;
        ensure(r.value as u128 >= fv, || format!("n={}: value {} below f = {fv}", r.n, r.value))?;
        if r.equals_f {
            matches.push(r.n);
        }
    }
    Ok(format!("f(n,4,1) verified lower bound for n=4..12; exact solves equal to f at n={matches:?}"))
}

fn criterion_7() -> Outcome {
    let mut r = rng(7);
    let mut witnesses = 0;
    for i in 0..100u64 {
        let n = r.gen_range(7..=14);
        let k = r.gen_range(3..=4);
        let m = r.gen_range(1..=60);
        let fam = random_family(&mut r, n, k, m);
        let s = r.gen_range(1..=3);
        let opts = HomogenizeOptions {
            seed: i,
            ..HomogenizeOptions::default()
        };
        let h = homogenize(&fam, s, &opts).map_err(|e| e.to_string())?;
        for w in &h.witnesses {
            let rep = verify_homogeneous(w);
            ensure(rep.passed(), || format!("family {i}: {rep:?}"))?;
            ensure(check_rank_bound(w), || format!("family {i}: rank bound fails"))?;
            ensure(check_own_subset(w), || format!("family {i}: degree-1 property fails"))?;
            witnesses += 1;
        }
    }
    Ok(format!("100 families, {witnesses} witnesses verified"))
}

fn criterion_8() -> Outcome {
    let mut r = rng(8);
    for i in 0..100 {
        let n = r.gen_range(6..=14);
        let k = r.gen_range(2..=5);
        let m = r.gen_range(1..=80);
        let fam = random_family(&mut r, n, k, m);
        let (part, sub) = erdos_kleitman_partite(&fam).map_err(|e| e.to_string())?;
        ensure(sub.iter().all(|e| fam.contains(e) && part.is_transversal(e)), || {
            format!("family {i}: non-transversal member returned")
        })?;
        let fact: u128 = (1..=k as u128).product();
        let need = (fact * fam.len() as u128).div_ceil((k as u128).pow(k as u32));
        ensure(sub.len() as u128 >= need, || format!("family {i}: {} < {need}", sub.len()))?;
    }
    Ok("100 families meet ceil(k!/k^k |F|)".into())
}

fn criterion_9() -> Outcome {
    let mut r = rng(9);
    // (l, t, q, |X| range, |Y| - b range, edge probability range). The last
    // three have |X| too small for a path of length l, so they must give bicliques.
    let params = [
        (2, 0, 1, (2, 6), (0, 8), (0.6, 1.0)),
        (3, 0, 1, (2, 6), (0, 8), (0.6, 1.0)),
        (3, 1, 1, (2, 6), (0, 8), (0.6, 1.0)),
        (2, 1, 2, (2, 6), (0, 8), (0.6, 1.0)),
        (4, 1, 1, (2, 6), (0, 8), (0.6, 1.0)),
        (2, 0, 3, (2, 6), (0, 8), (0.6, 1.0)),
        (5, 1, 1, (2, 2), (17, 25), (0.95, 1.0)),
        (4, 0, 2, (1, 1), (0, 8), (0.6, 1.0)),
        (5, 1, 2, (2, 2), (27, 35), (0.97, 1.0)),
    ];
    let (mut done, mut paths, mut bicliques, mut tries) = (0, 0, 0, 0);
    while done < 200 {
        tries += 1;
        ensure(tries < 100_000, || "could not generate enough graphs".into())?;
        let (l, t, q, xr, yr, pr) = params[done % params.len()];
        let b = (binom(l as u64, t as u64 + 1) * q as u128) as usize + l + r.gen_range(0..2);
        let mx = r.gen_range(xr.0..=xr.1);
        let my = b + r.gen_range(yr.0..=yr.1);
        let p = r.gen_range(pr.0..pr.1);
        let g = random_bipartite(&mut r, mx, my, p);
        let e = g.graph.edge_count();
        if e < b * g.x.len() + t * g.y.len() {
            continue;
        }
        let res = peel_path_or_biclique(&g, b, t, l, q, None).map_err(|e| format!("graph {done}: {e}"))?;
        ensure(verify_peel(&g, &res, t, l, q), || format!("graph {done}: {res:?} fails verification"))?;
        match res {
            turan_core::peel::PeelResult::Path { .. } => paths += 1,
            turan_core::peel::PeelResult::Biclique { .. } => bicliques += 1,
        }
        done += 1;
    }
    Ok(format!("200 graphs: {paths} paths, {bicliques} bicliques"))
}

fn criterion_10() -> Outcome {
    let mut r = rng(10);
    let mut greedy = 0;
    while greedy < 100 {
        let n = r.gen_range(8..=14);
        let q = r.gen_range(1..=3usize.min((n - 2) / 3));
        let mut fam = SetFamily::complete(n, 3).unwrap();
        let drop = r.gen_range(0..=fam.len() / 20);
        let mut all: Vec<Edge> = fam.edges().to_vec();
        all.shuffle(&mut r);
        for e in &all[..drop] {
            fam.remove(e);
        }
        let l = kernel_graph(&fam, 3 * q).map_err(|e| e.to_string())?;
        let mut pairs = l.graph.edges();
        if pairs.len() < q {
            continue;
        }
        pairs.shuffle(&mut r);
        let h = &pairs[..q];
        let emb = greedy_blowup_embedding(&fam, &l, h).map_err(|e| format!("fixture {greedy} ({h:?}): {e}"))?;
        let c = ForbiddenConfig::GraphBlowup(Skeleton::new(h.to_vec()).unwrap());
        ensure(verify_embedding(&fam, &c, &emb), || format!("fixture {greedy}: certificate rejected"))?;
        greedy += 1;
    }
    let mut trees = 0;
    for q in 1..=5 {
        let (f, part) = complete_tripartite(3 * q);
        let rank_k = HomogeneousWitness::assemble(f, part, 3 * q).map_err(|e| e.to_string())?;
        let (f, part) = tied_pair_family(4 * q);
        let type2 = HomogeneousWitness::assemble(f, part, 4 * q).map_err(|e| e.to_string())?;
        for t in Tree::all_unlabeled(q + 1) {
            for w in [&rank_k, &type2] {
                let emb = embed_tree_blowup(w, &t).map_err(|e| format!("tree {:?}: {e}", t.edges()))?;
                let c = ForbiddenConfig::GraphBlowup(Skeleton::new(t.edges().to_vec()).unwrap());
                ensure(verify_embedding(&w.subfamily, &c, &emb), || format!("tree {:?} rejected", t.edges()))?;
                trees += 1;
            }
        }
    }
    Ok(format!("100 greedy fixtures, {trees} tree blowups (rank k and type 2, up to 5 edges)"))
}

fn criterion_11() -> Outcome {
    let expected_counts = [1, 1, 1, 2, 3, 6, 11, 23, 47];
    let mut tested = 0;
    for order in 1..=9 {
        let trees = Tree::all_unlabeled(order);
        ensure(trees.len() == expected_counts[order - 1], || {
            format!("{} trees on {order} vertices", trees.len())
        })?;
        for t in &trees {
            let (sigma, tau) = brute_sigma_tau(order, t.edges());
            ensure((t.sigma(), t.tau()) == (sigma, tau), || {
                format!("{:?}: sigma/tau {}/{} vs {sigma}/{tau}", t.edges(), t.sigma(), t.tau())
            })?;
            let v1 = t.colour_classes().0.len();
            ensure(tau <= sigma && sigma <= v1, || format!("{:?}: tau <= sigma <= |V1| fails", t.edges()))?;
            tested += 1;
        }
    }
    Ok(format!("{tested} trees on up to 9 vertices"))
}

fn criterion_12() -> Outcome {
    let kinds: [(&str, fn(&[u64], usize) -> bool); 3] =
        [("linear", has_linear_path), ("loose", has_loose_path), ("berge", has_berge_path)];
    let opts = DetectOptions {
        node_budget: None,
        ..DetectOptions::default()
    };
    let mut total = 0usize;
    for n in 3..=6usize {
        let ground: Vec<usize> = (1..=n).collect();
        let cands: Vec<VertexSet> = k_subsets(&ground, 3).collect();
        let m = cands.len();
        let checked = (0u32..1 << m)
            .into_par_iter()
            .filter(|sel| sel.count_ones() <= 7)
            .map(|sel| -> Result<usize, String> {
                let chosen: Vec<VertexSet> = (0..m).filter(|i| sel >> i & 1 == 1).map(|i| cands[i].clone()).collect();
                let sets: Vec<u64> = chosen.iter().map(|s| s.mask()).collect();
                let fam = SetFamily::from_edges(n, 3, chosen.into_iter().map(Edge::from_set)).unwrap();
                for (kind, oracle) in kinds {
                    for l in 1..=3 {
                        let c = cfg(&format!("{kind}:{l}"));
                        let hit = contains_with(&fam, &c, &opts).map_err(|e| e.to_string())?;
                        let want = oracle(&sets, l);
                        if hit.is_some() != want {
                            return Err(format!("{c} on {:?}: detector {}, oracle {want}", fam, hit.is_some()));
                        }
                        if let Some(e) = hit {
                            if !verify_embedding(&fam, &c, &e) {
                                return Err(format!("{c} on {fam:?}: certificate rejected"));
                            }
                        }
                    }
                }
                Ok(1)
            })
            .try_reduce(|| 0, |a, b| Ok(a + b))?;
        total += checked;
    }
    Ok(format!("{total} families x 9 configurations agree"))
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Outcome); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, run) in criteria {
        if !only.is_empty() && !only.contains(&i) {
            continue;
        }
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(msg) => println!("criterion {i:>2}: PASS ({secs:.1}s) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {i:>2}: FAIL ({secs:.1}s) {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
