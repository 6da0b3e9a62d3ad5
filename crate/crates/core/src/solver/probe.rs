//! Parameter sweeps and probes built on the solver: Turán tables, the
//! stability probe and the tight-tree conjecture probe.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::cache::{solve_cached, SolveCache};
use super::{constructions_for, verify_free, SolveOptions, Status};
use crate::config::{ForbiddenConfig, TightTreeSpec};
use crate::constructions::{binom, eq1_bound, f, g};
use crate::error::{Error, Result};
use crate::family::{k_subsets, SetFamily};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCell {
    pub n: usize,
    pub k: usize,
    pub config: ForbiddenConfig,
}

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum GridDoc {
    Cells(Vec<GridCell>),
    Wrapped { cells: Vec<GridCell> },
    Ranges { n: Vec<usize>, k: Vec<usize>, configs: Vec<ForbiddenConfig> },
}

/// Parses a grid: a list of `{"n", "k", "config"}` cells, the same list under
/// `"cells"`, or `{"n": [..], "k": [..], "configs": [..]}` for the product.
pub fn parse_grid(text: &str) -> Result<Vec<GridCell>> {
    let doc: GridDoc = serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })?;
    Ok(match doc {
        GridDoc::Cells(c) | GridDoc::Wrapped { cells: c } => c,
        GridDoc::Ranges { n, k, configs } => {
            let mut out = Vec::new();
            for &k in &k {
                for cfg in &configs {
                    for &n in &n {
                        out.push(GridCell {
                            n,
                            k,
                            config: cfg.clone(),
                        });
                    }
                }
            }
            out
        }
    })
}

/// The `t` with `ℓ ∈ {2t+1, 2t+2}` for path configurations.
fn path_t(cfg: &ForbiddenConfig) -> Option<u64> {
    match *cfg {
        ForbiddenConfig::LinearPath(l) | ForbiddenConfig::LoosePath(l) if l >= 1 => Some((l as u64 - 1) / 2),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub k: usize,
    pub config: String,
    pub value: usize,
    pub status: Status,
    pub f: Option<u128>,
    pub g: Option<u128>,
    /// Largest verified construction.
    pub construction: Option<usize>,
    pub eq1_bound: Option<u128>,
    pub witness_free: bool,
    /// Exact value equal to `f` / `g`.
    pub equals_f: bool,
    pub equals_g: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub rows: Vec<TableRow>,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

impl ProbeReport {
    pub const CSV_HEADER: &'static str = "n,k,config,value,status,f,g,construction,eq1_bound";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                r.n,
                r.k,
                r.config,
                r.value,
                r.status,
                opt(&r.f),
                opt(&r.g),
                opt(&r.construction),
                opt(&r.eq1_bound)
            );
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| n | k | config | value | status | f | g | construction | eq1_bound | flags |\n");
        out.push_str("|---|---|---|---|---|---|---|---|---|---|\n");
        for r in &self.rows {
            let mut flags = Vec::new();
            if r.equals_f {
                flags.push("= f");
            }
            if r.equals_g {
                flags.push("= g");
            }
            if !r.witness_free {
                flags.push("WITNESS NOT FREE");
            }
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                r.n,
                r.k,
                r.config,
                r.value,
                r.status,
                opt(&r.f),
                opt(&r.g),
                opt(&r.construction),
                opt(&r.eq1_bound),
                flags.join(", ")
            );
        }
        out
    }
}

/// Solves every cell and lines the value up against the closed forms.
pub fn ex_table(cells: &[GridCell], opts: &SolveOptions, cache: Option<&SolveCache>) -> Result<ProbeReport> {
    let mut rows = Vec::with_capacity(cells.len());
    for c in cells {
        let (r, _) = solve_cached(cache, c.n, c.k, &c.config, opts)?;
        let t = path_t(&c.config);
        let (n, k) = (c.n as u64, c.k as u64);
        let fv = t.map(|t| f(n, k, t));
        let gv = t.map(|t| g(n, k, t));
        let construction = constructions_for(c.n, c.k, &c.config)?.iter().map(|(_, f)| f.len()).max();
        let eq1 = match c.config {
            ForbiddenConfig::LinearPath(l) => Some(eq1_bound(n, k, l as u64)),
            _ => None,
        };
        let exact = r.status == Status::Exact;
        rows.push(TableRow {
            n: c.n,
            k: c.k,
            config: c.config.to_string(),
            value: r.value,
            status: r.status,
            f: fv,
            g: gv,
            construction,
            eq1_bound: eq1,
            witness_free: verify_free(&r.witness, &c.config)?.free && r.witness.len() == r.value,
            equals_f: exact && fv == Some(r.value as u128),
            equals_g: exact && gv == Some(r.value as u128),
        });
    }
    Ok(ProbeReport { rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub t: usize,
    /// The best `t`-set (lexicographically first among ties).
    pub s: Vec<usize>,
    pub missed: usize,
    /// `ε = eps_num / eps_den` with `eps_den = C(n, k-1)`.
    pub eps_num: u128,
    pub eps_den: u128,
}

/// The `t`-set meeting the most members, and how many members it misses.
pub fn stability_probe(fam: &SetFamily, t: usize) -> Result<StabilityReport> {
    if fam.is_empty() {
        return Err(Error::domain("stability probe needs a nonempty family"));
    }
    if t > fam.n() {
        return Err(Error::domain(format!("t = {t} exceeds n = {}", fam.n())));
    }
    let ground: Vec<usize> = (1..=fam.n()).collect();
    let mut best: Option<(usize, VertexSet)> = None;
    for s in k_subsets(&ground, t) {
        let missed = fam.iter().filter(|e| e.set().is_disjoint(&s)).count();
        if best.as_ref().is_none_or(|(m, _)| missed < *m) {
            best = Some((missed, s));
        }
    }
    let (missed, s) = best.expect("at least one t-set");
    Ok(StabilityReport {
        t,
        s: s.to_vec(),
        missed,
        eps_num: missed as u128,
        eps_den: binom(fam.n() as u64, fam.k() as u64 - 1),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KalaiVerdict {
    Consistent,
    Violated,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KalaiReport {
    pub n: usize,
    pub k: usize,
    /// Vertices of the tree.
    pub v: usize,
    pub value: usize,
    pub status: Status,
    /// The conjectured bound is `bound_num / bound_den`.
    pub bound_num: u128,
    pub bound_den: u128,
    pub verdict: KalaiVerdict,
}

/// Compares the solved `ex_k(n, T)` with `(v-k)/k · C(n, k-1)`.
pub fn kalai_probe(n: usize, tree: &TightTreeSpec, opts: &SolveOptions, cache: Option<&SolveCache>) -> Result<KalaiReport> {
    let k = tree.k();
    let v = tree.order();
    let cfg = ForbiddenConfig::TightTree(tree.clone());
    let (r, _) = solve_cached(cache, n, k, &cfg, opts)?;
    let bound_num = (v - k) as u128 * binom(n as u64, k as u64 - 1);
    let bound_den = k as u128;
    let exceeds = r.value as u128 * bound_den > bound_num;
    let verdict = match (r.status, exceeds) {
        (_, true) => KalaiVerdict::Violated,
        (Status::Exact, false) => KalaiVerdict::Consistent,
        _ => KalaiVerdict::Undetermined,
    };
    Ok(KalaiReport {
        n,
        k,
        v,
        value: r.value,
        status: r.status,
        bound_num,
        bound_den,
        verdict,
    })
}
