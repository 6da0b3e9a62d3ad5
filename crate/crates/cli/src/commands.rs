use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use turan_core::config::{parse_tight_tree_doc, ForbiddenConfig};
use turan_core::constructions::{
    berge_small_family, erdos_gallai_extremal, even_extremal_family, f0_family, gyori_partition_family,
    loose_even_family, star_family,
};
use turan_core::delta::{
    canonical_partition, check_own_subset, check_rank_bound, verify_homogeneous, HomogenizeOptions, PartitionOptions,
};
use turan_core::detect::{contains_with, verify_embedding, DetectOptions};
use turan_core::family::FamilyDoc;
use turan_core::graph::circumference;
use turan_core::kernel::{
    check_erdos_gallai, check_kernel_bound, hom_kernel_graph, kernel_graph, spot_check_kernel_degrees,
};
use turan_core::solver::cache::{solve_cached, SolveCache};
use turan_core::solver::probe::{ex_table, kalai_probe, parse_grid, stability_probe};
use turan_core::solver::{SolveOptions, Status};
use turan_core::{Error, Result, SetFamily};

use crate::{Cli, Command, Format, RunConfig};

#[derive(Serialize)]
struct Provenance {
    tool: &'static str,
    version: &'static str,
    seed: u64,
    budget_nodes: Option<u64>,
    budget_secs: Option<u64>,
}

fn provenance(run: &RunConfig) -> Provenance {
    Provenance {
        tool: "turan",
        version: env!("CARGO_PKG_VERSION"),
        seed: run.seed,
        budget_nodes: run.budget_nodes,
        budget_secs: run.budget_secs,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

/// Writes to stdout, ignoring a closed pipe.
fn stdout(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn read_family(path: &Path) -> Result<SetFamily> {
    let text = read(path)?;
    SetFamily::from_interchange(&text).map_err(|e| match e {
        Error::Parse { location, message } => Error::parse(format!("{}: {location}", path.display()), message),
        other => other,
    })
}

fn parse_config(s: &str) -> Result<ForbiddenConfig> {
    ForbiddenConfig::parse_arg(s, Path::new("."))
}

fn emit(v: &Value) {
    stdout(&(serde_json::to_string_pretty(v).expect("report serializes") + "\n"));
}

fn solve_options(run: &RunConfig) -> SolveOptions {
    let d = SolveOptions::default();
    SolveOptions {
        node_budget: run.budget_nodes.or(d.node_budget),
        time_budget_secs: run.budget_secs,
        threads: run.threads,
        ..d
    }
}

fn detect_options(run: &RunConfig) -> DetectOptions {
    let d = DetectOptions::default();
    DetectOptions {
        node_budget: run.budget_nodes.or(d.node_budget),
        ..d
    }
}

fn cache(run: &RunConfig) -> Result<Option<SolveCache>> {
    if run.no_cache {
        Ok(None)
    } else {
        SolveCache::open(&run.cache_dir).map(Some)
    }
}

fn params<const N: usize>(kind: &str, p: &[usize]) -> Result<[usize; N]> {
    p.try_into()
        .map_err(|_| Error::parse("params", format!("{kind} takes {N} parameters, got {}", p.len())))
}

fn construct(kind: &str, p: &[usize]) -> Result<SetFamily> {
    match kind {
        "star" => {
            let [n, k, t] = params(kind, p)?;
            star_family(n, k, t)
        }
        "even" => {
            let [n, k, t] = params(kind, p)?;
            even_extremal_family(n, k, t)
        }
        "loose" => {
            let [n, k, t] = params(kind, p)?;
            loose_even_family(n, k, t)
        }
        "blocks" => {
            let [n, k, l] = params(kind, p)?;
            gyori_partition_family(n, k, l)
        }
        "small-blocks" => {
            let [n, k, l] = params(kind, p)?;
            berge_small_family(n, k, l)
        }
        "f0" => {
            let [n, k, s] = params(kind, p)?;
            f0_family(n, k, s)
        }
        "eg" => {
            let [n, l] = params(kind, p)?;
            erdos_gallai_extremal(n, l)
        }
        "complete" => {
            let [n, k] = params(kind, p)?;
            SetFamily::complete(n, k)
        }
        other => Err(Error::parse("kind", format!("unknown construction {other:?}"))),
    }
}

pub fn run(cli: &Cli) -> Result<u8> {
    let run = &cli.run;
    match &cli.command {
        Command::Construct { kind, params, out } => {
            let fam = construct(kind, params)?;
            let text = fam.to_interchange();
            match out {
                Some(p) => fs::write(p, text)?,
                None => stdout(&text),
            }
            Ok(0)
        }
        Command::Check { family, config } => {
            let fam = read_family(family)?;
            let cfg = parse_config(config)?;
            let hit = contains_with(&fam, &cfg, &detect_options(run))?;
            let verified = hit.as_ref().is_none_or(|e| verify_embedding(&fam, &cfg, e));
            emit(&json!({
                "provenance": provenance(run),
                "config": cfg,
                "verdict": if hit.is_some() { "contains" } else { "free" },
                "certificate": hit,
                "verified": verified,
            }));
            Ok(if verified { 0 } else { 4 })
        }
        Command::Solve { n, k, config } => {
            let cfg = parse_config(config)?;
            let opts = solve_options(run);
            let cache = cache(run)?;
            let (r, hit) = solve_cached(cache.as_ref(), *n, *k, &cfg, &opts)?;
            eprintln!("cache {}", if hit { "hit" } else { "miss" });
            emit(&json!({ "provenance": provenance(run), "result": r }));
            Ok(if r.status == Status::Timeout { 3 } else { 0 })
        }
        Command::Decompose { family, s, l } => {
            let fam = read_family(family)?;
            let opts = PartitionOptions {
                homogenize: HomogenizeOptions {
                    seed: run.seed,
                    ..HomogenizeOptions::default()
                },
                detect: detect_options(run),
                ..PartitionOptions::default()
            };
            let cp = canonical_partition(&fam, *s, *l, &opts)?;
            let mut all_ok = true;
            let groups: Vec<Value> = cp
                .groups
                .iter()
                .map(|w| {
                    let rep = verify_homogeneous(w);
                    let (rank, own) = (check_rank_bound(w), check_own_subset(w));
                    all_ok &= rep.passed() && rank && own;
                    json!({
                        "size": w.len(),
                        "pattern": w.pattern.descriptor(),
                        "partition": w.partition.parts().iter().map(|p| p.to_vec()).collect::<Vec<_>>(),
                        "members": FamilyDoc::from(&w.subfamily),
                        "homogeneity": rep,
                        "rank_bound": rank,
                        "own_subset": own,
                    })
                })
                .collect();
            let path_ok = cp
                .path
                .as_ref()
                .is_none_or(|e| verify_embedding(&fam, &ForbiddenConfig::LinearPath(*l), e));
            all_ok &= path_ok;
            emit(&json!({
                "provenance": provenance(run),
                "s": s,
                "l": l,
                "groups": groups,
                "residual": FamilyDoc::from(&cp.residual),
                "path": cp.path,
                "path_verified": path_ok,
                "outside_theorem": cp.outside_theorem,
            }));
            Ok(if all_ok { 0 } else { 4 })
        }
        Command::Kernel { family, s, ell, out } => {
            let fam = read_family(family)?;
            let l = kernel_graph(&fam, *s)?;
            let gfam = l.graph.to_family();
            if let Some(p) = out {
                fs::write(p, gfam.to_interchange())?;
            }
            let budget = detect_options(run).node_budget;
            let circ = circumference(&l.graph, budget)?;
            let eg = check_erdos_gallai(&l.graph, (circ + 1).max(3), budget)?;
            let mut report = json!({
                "provenance": provenance(run),
                "s": s,
                "kernel_graph": FamilyDoc::from(&gfam),
                "circumference": circ,
                "erdos_gallai": eg,
            });
            let mut ok = eg.holds;
            if let Some(ell) = ell {
                let opts = PartitionOptions {
                    homogenize: HomogenizeOptions {
                        seed: run.seed,
                        ..HomogenizeOptions::default()
                    },
                    detect: detect_options(run),
                    ..PartitionOptions::default()
                };
                let cp = canonical_partition(&fam, *s, *ell, &opts)?;
                let h = hom_kernel_graph(fam.n(), &cp.groups)?;
                let hp = h.underlying();
                let mut grouped = SetFamily::new(fam.n(), fam.k())?;
                for w in &cp.groups {
                    grouped = grouped.union(&w.subfamily)?;
                }
                let kb = check_kernel_bound(&grouped, &hp);
                let spot = spot_check_kernel_degrees(&cp.groups)?;
                let covered = h.marks_cover_edges();
                ok &= kb.holds && spot && covered;
                report["hom_kernel_graph"] = json!({
                    "groups": cp.groups.len(),
                    "arcs": h.arcs().iter().collect::<Vec<_>>(),
                    "marked": h.marked().to_vec(),
                    "h_prime_edges": hp.edge_count(),
                    "marks_cover_edges": covered,
                    "kernel_degree_spot_checks": spot,
                    "kernel_bound": kb,
                    "outside_theorem": cp.outside_theorem,
                });
            }
            emit(&report);
            Ok(if ok { 0 } else { 4 })
        }
        Command::Report { grid } => {
            let text = read(grid)?;
            let cells = parse_grid(&text)?;
            let cache = cache(run)?;
            let rep = ex_table(&cells, &solve_options(run), cache.as_ref())?;
            let p = provenance(run);
            let prov = format!(
                "tool={} version={} seed={} budget_nodes={} budget_secs={}",
                p.tool,
                p.version,
                p.seed,
                p.budget_nodes.map_or("default".into(), |b| b.to_string()),
                p.budget_secs.map_or("none".into(), |b| b.to_string()),
            );
            match run.format {
                Format::Csv => {
                    stdout(&format!("{}# {prov}\n", rep.to_csv()));
                }
                Format::Md => {
                    stdout(&format!("<!-- {prov} -->\n\n{}", rep.to_markdown()));
                }
            }
            let sound = rep.rows.iter().all(|r| r.witness_free);
            Ok(if !sound {
                4
            } else if rep.rows.iter().any(|r| r.status == Status::Timeout) {
                3
            } else {
                0
            })
        }
        Command::Stability { family, t } => {
            let fam = read_family(family)?;
            let r = stability_probe(&fam, *t)?;
            emit(&json!({ "provenance": provenance(run), "stability": r }));
            Ok(0)
        }
        Command::Kalai { n, tree } => {
            let text = match tree.strip_prefix('@') {
                Some(file) => read(Path::new(file))?,
                None => tree.clone(),
            };
            let t = parse_tight_tree_doc(&text)?;
            let cache = cache(run)?;
            let r = kalai_probe(*n, &t, &solve_options(run), cache.as_ref())?;
            emit(&json!({ "provenance": provenance(run), "kalai": r }));
            Ok(if r.status == Status::Timeout { 3 } else { 0 })
        }
    }
}
