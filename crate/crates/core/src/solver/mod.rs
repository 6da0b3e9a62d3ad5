//! Exact Turán numbers at small scale by branch and bound.
//!
//! Candidate edges are the k-subsets of `[n]` in lexicographic order and a
//! search node only adds edges with larger index than its last one. Each node
//! keeps the list of later candidates that can still be added on their own
//! (forward checking), which gives the bound `|current| + |live| <= best`.
//!
//! Symmetry: every family has a relabelled copy in which, reading its edges
//! in lexicographic order, each edge's new vertices are exactly the next
//! unused labels. The search only builds such families.

pub mod cache;
pub mod probe;

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::ForbiddenConfig;
use crate::constructions::{
    berge_small_family, even_extremal_family, gyori_partition_family, loose_even_family, star_family,
};
use crate::detect::{contains_with, DetectOptions, Detector, Embedding};
use crate::error::{Error, Result};
use crate::family::{k_subsets, Edge, SetFamily};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOptions {
    /// Search nodes before giving up; `None` is unlimited.
    pub node_budget: Option<u64>,
    /// Wall-clock limit in seconds.
    pub time_budget_secs: Option<u64>,
    /// Worker threads; `0` lets rayon decide. Never changes value or status
    /// of a finished search.
    pub threads: usize,
    /// Start from the best verified construction, greedily completed.
    pub seed_constructions: bool,
    pub symmetry: bool,
    /// `false` skips the search and reports the seed as a lower bound.
    pub exhaustive: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            node_budget: Some(50_000_000),
            time_budget_secs: None,
            threads: 1,
            seed_constructions: true,
            symmetry: true,
            exhaustive: true,
        }
    }
}

impl SolveOptions {
    /// Hex SHA-256 of the options that can affect a result (everything but `threads`).
    pub fn hash(&self) -> String {
        let mut o = self.clone();
        o.threads = 0;
        let json = serde_json::to_string(&o).expect("options serialize");
        hex::encode(Sha256::digest(json.as_bytes()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exact,
    LowerBound,
    Timeout,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Exact => "exact",
            Status::LowerBound => "lower_bound",
            Status::Timeout => "timeout",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub detector_calls: u64,
    /// Not serialized, so stored records stay byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub n: usize,
    pub k: usize,
    pub config: ForbiddenConfig,
    pub value: usize,
    pub witness: SetFamily,
    pub status: Status,
    pub stats: SearchStats,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeVerdict {
    pub free: bool,
    pub counterexample: Option<Embedding>,
}

/// Unbudgeted exhaustive check that `fam` avoids `cfg`.
pub fn verify_free(fam: &SetFamily, cfg: &ForbiddenConfig) -> Result<FreeVerdict> {
    let opts = DetectOptions {
        node_budget: None,
        ..DetectOptions::default()
    };
    let hit = contains_with(fam, cfg, &opts)?;
    Ok(FreeVerdict {
        free: hit.is_none(),
        counterexample: hit,
    })
}

/// Known extremal or near-extremal families for `cfg`, each verified free.
pub fn constructions_for(n: usize, k: usize, cfg: &ForbiddenConfig) -> Result<Vec<(String, SetFamily)>> {
    let mut out = Vec::new();
    let mut push = |name: String, fam: Result<SetFamily>| -> Result<()> {
        if let Ok(fam) = fam {
            if verify_free(&fam, cfg)?.free {
                out.push((name, fam));
            }
        }
        Ok(())
    };
    match *cfg {
        ForbiddenConfig::LinearPath(l) if l >= 2 => {
            let t = (l - 1) / 2;
            if l % 2 == 1 {
                push(format!("star({n},{k},{t})"), star_family(n, k, t))?;
            } else if t >= 1 {
                push(format!("even({n},{k},{t})"), even_extremal_family(n, k, t))?;
                push(format!("star({n},{k},{t})"), star_family(n, k, t))?;
            }
        }
        ForbiddenConfig::LoosePath(l) if l >= 2 => {
            let t = (l - 1) / 2;
            if l % 2 == 0 {
                push(format!("loose({n},{k},{t})"), loose_even_family(n, k, t))?;
            } else {
                push(format!("star({n},{k},{t})"), star_family(n, k, t))?;
            }
        }
        ForbiddenConfig::BergePath(l) => {
            push(format!("blocks({n},{k},{l})"), gyori_partition_family(n, k, l))?;
            push(format!("small_blocks({n},{k},{l})"), berge_small_family(n, k, l))?;
        }
        ForbiddenConfig::Matching(s) if s >= 2 => {
            push(format!("star({n},{k},{})", s - 1), star_family(n, k, s - 1))?;
            let m = (k * s - 1).min(n);
            push(
                format!("clique({n},{k},{m})"),
                SetFamily::from_edges(n, k, k_subsets(&(1..=m).collect::<Vec<_>>(), k).map(Edge::from_set)),
            )?;
        }
        _ => {}
    }
    Ok(out)
}

struct Shared<'a> {
    cfg: &'a ForbiddenConfig,
    n: usize,
    k: usize,
    cands: Vec<u64>,
    symmetry: bool,
    best: AtomicUsize,
    witness: Mutex<Vec<u64>>,
    nodes: AtomicU64,
    prunes: AtomicU64,
    calls: AtomicU64,
    budget: Option<u64>,
    deadline: Option<Instant>,
    stop: AtomicBool,
}

/// Search state: chosen candidate indices, their union and the largest used label.
#[derive(Clone)]
struct Node {
    cur: Vec<usize>,
    used: u64,
    top: usize,
    live: Vec<usize>,
}

struct Stop;

struct Worker<'s, 'a> {
    sh: &'s Shared<'a>,
    nodes: u64,
    prunes: u64,
    calls: u64,
}

impl Worker<'_, '_> {
    fn flush(&mut self) {
        self.sh.nodes.fetch_add(self.nodes, Ordering::Relaxed);
        self.sh.prunes.fetch_add(self.prunes, Ordering::Relaxed);
        self.sh.calls.fetch_add(self.calls, Ordering::Relaxed);
        self.nodes = 0;
        self.prunes = 0;
        self.calls = 0;
    }

    fn tick(&mut self) -> std::result::Result<(), Stop> {
        self.nodes += 1;
        let total = self.sh.nodes.load(Ordering::Relaxed) + self.nodes;
        let mut over = self.sh.budget.is_some_and(|b| total > b);
        if self.nodes.is_multiple_of(256) {
            self.sh.nodes.fetch_add(self.nodes, Ordering::Relaxed);
            self.nodes = 0;
            over |= self.sh.deadline.is_some_and(|d| Instant::now() > d);
        }
        if over {
            self.sh.stop.store(true, Ordering::Relaxed);
        }
        if self.sh.stop.load(Ordering::Relaxed) {
            return Err(Stop);
        }
        Ok(())
    }

    /// The candidates in `rest` that can join `members` without creating `cfg`,
    /// given that `members` avoids it. Stops early once the search is stopped.
    fn forward_check(&mut self, members: &[u64], rest: &[usize]) -> Result<Vec<usize>> {
        let sets = members.iter().map(|&m| VertexSet::from_mask(m)).collect();
        let opts = DetectOptions {
            node_budget: None,
            symmetry: false,
        };
        let mut det = Detector::new(self.sh.n, self.sh.k, sets, &opts);
        let mut live = Vec::new();
        for &d in rest {
            if self.sh.stop.load(Ordering::Relaxed) {
                break;
            }
            self.calls += 1;
            // forward checking dominates the cost of a node, so the clock is read here too
            if self.calls.is_multiple_of(256) && self.sh.deadline.is_some_and(|t| Instant::now() > t) {
                self.sh.stop.store(true, Ordering::Relaxed);
            }
            let idx = det.push(VertexSet::from_mask(self.sh.cands[d]));
            if det.find_through(self.sh.cfg, idx)?.is_none() {
                live.push(d);
            }
            det.pop();
        }
        Ok(live)
    }

    fn record(&self, node: &Node) {
        let len = node.cur.len();
        if len <= self.sh.best.load(Ordering::Relaxed) {
            return;
        }
        let mut w = self.sh.witness.lock().expect("witness lock");
        let masks: Vec<u64> = node.cur.iter().map(|&c| self.sh.cands[c]).collect();
        if len > w.len() {
            *w = masks;
            self.sh.best.fetch_max(len, Ordering::Relaxed);
        }
    }

    /// Children of `node` in order, built lazily so the bound sees the latest best.
    fn child(&mut self, node: &Node, pos: usize) -> Result<Option<Node>> {
        let c = node.live[pos];
        let mask = self.sh.cands[c];
        let fresh = mask & !node.used;
        let r = fresh.count_ones() as usize;
        let run = if r == 64 { u64::MAX } else { ((1u64 << r) - 1) << node.top };
        if self.sh.symmetry && fresh != run {
            return Ok(None);
        }
        let mut members: Vec<u64> = node.cur.iter().map(|&i| self.sh.cands[i]).collect();
        members.push(mask);
        let live = self.forward_check(&members, &node.live[pos + 1..])?;
        let mut cur = node.cur.clone();
        cur.push(c);
        Ok(Some(Node {
            cur,
            used: node.used | mask,
            top: node.top.max(64 - mask.leading_zeros() as usize),
            live,
        }))
    }

    fn bounded(&mut self, node: &Node, pos: usize) -> bool {
        if node.cur.len() + node.live.len() - pos <= self.sh.best.load(Ordering::Relaxed) {
            self.prunes += 1;
            return true;
        }
        false
    }

    fn dfs(&mut self, node: &Node) -> Result<std::result::Result<(), Stop>> {
        if let Err(s) = self.tick() {
            return Ok(Err(s));
        }
        self.record(node);
        for pos in 0..node.live.len() {
            if self.bounded(node, pos) {
                break;
            }
            if let Some(ch) = self.child(node, pos)? {
                if let Err(s) = self.dfs(&ch)? {
                    return Ok(Err(s));
                }
            }
        }
        Ok(Ok(()))
    }

    /// Nodes at depth `depth` below `node` (or shallower leaves), recorded on the way.
    fn frontier(&mut self, node: Node, depth: usize, out: &mut Vec<Node>) -> Result<()> {
        self.nodes += 1;
        self.record(&node);
        if depth == 0 {
            out.push(node);
            return Ok(());
        }
        for pos in 0..node.live.len() {
            if self.bounded(&node, pos) {
                break;
            }
            if let Some(ch) = self.child(&node, pos)? {
                self.frontier(ch, depth - 1, out)?;
            }
        }
        Ok(())
    }
}

fn greedy_complete(fam: &SetFamily, cfg: &ForbiddenConfig) -> Result<SetFamily> {
    let mut out = fam.clone();
    let opts = DetectOptions {
        node_budget: None,
        ..DetectOptions::default()
    };
    let ground: Vec<usize> = (1..=fam.n()).collect();
    for s in k_subsets(&ground, fam.k()) {
        let e = Edge::from_set(s);
        if out.contains(&e) {
            continue;
        }
        let mut sets = out.sets();
        sets.push(e.set().clone());
        let mut d = Detector::new(fam.n(), fam.k(), sets, &opts);
        let last = d.sets().len() - 1;
        if d.find_through(cfg, last)?.is_none() {
            out.insert(e)?;
        }
    }
    Ok(out)
}

/// The largest verified construction for `cfg`, greedily completed.
pub fn seed_family(n: usize, k: usize, cfg: &ForbiddenConfig) -> Result<SetFamily> {
    let mut best = SetFamily::new(n, k)?;
    let mut starts: Vec<SetFamily> = constructions_for(n, k, cfg)?.into_iter().map(|(_, f)| f).collect();
    starts.push(SetFamily::new(n, k)?);
    for s in starts {
        let full = if n <= 64 { greedy_complete(&s, cfg)? } else { s };
        if full.len() > best.len() {
            best = full;
        }
    }
    Ok(best)
}

/// `ex_k(n, cfg)` with a witness. Theorem bounds are never used to cut the search.
pub fn max_free_family(n: usize, k: usize, cfg: &ForbiddenConfig, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    cfg.validate(k)?;
    if k > n {
        return Err(Error::domain(format!("k = {k} exceeds n = {n}")));
    }
    let seed = if opts.seed_constructions {
        seed_family(n, k, cfg)?
    } else {
        SetFamily::new(n, k)?
    };
    if !opts.exhaustive || n > 64 {
        return Ok(SolveResult {
            n,
            k,
            config: cfg.clone(),
            value: seed.len(),
            witness: seed,
            status: Status::LowerBound,
            stats: SearchStats {
                elapsed: start.elapsed(),
                ..SearchStats::default()
            },
        });
    }
    let ground: Vec<usize> = (1..=n).collect();
    let cands: Vec<u64> = k_subsets(&ground, k).map(|s| s.mask()).collect();
    let sh = Shared {
        cfg,
        n,
        k,
        cands,
        symmetry: opts.symmetry,
        best: AtomicUsize::new(seed.len()),
        witness: Mutex::new(seed.iter().map(|e| e.set().mask()).collect()),
        nodes: AtomicU64::new(0),
        prunes: AtomicU64::new(0),
        calls: AtomicU64::new(0),
        budget: opts.node_budget,
        deadline: opts.time_budget_secs.map(|s| start + Duration::from_secs(s)),
        stop: AtomicBool::new(false),
    };
    let mut w = Worker {
        sh: &sh,
        nodes: 0,
        prunes: 0,
        calls: 0,
    };
    let all: Vec<usize> = (0..sh.cands.len()).collect();
    let root_live = w.forward_check(&[], &all)?;
    let root = Node {
        cur: Vec::new(),
        used: 0,
        top: 0,
        live: root_live,
    };
    if opts.threads == 1 {
        let _ = w.dfs(&root)?;
        w.flush();
    } else {
        let mut tasks = Vec::new();
        w.frontier(root, 2, &mut tasks)?;
        w.flush();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::domain(format!("thread pool: {e}")))?;
        pool.install(|| {
            tasks.par_iter().try_for_each(|t| -> Result<()> {
                let mut w = Worker {
                    sh: &sh,
                    nodes: 0,
                    prunes: 0,
                    calls: 0,
                };
                let r = w.dfs(t);
                w.flush();
                r.map(|_| ())
            })
        })?;
    }
    let masks = sh.witness.into_inner().expect("witness lock");
    let witness = SetFamily::from_edges(n, k, masks.into_iter().map(|m| Edge::from_set(VertexSet::from_mask(m))))?;
    if !verify_free(&witness, cfg)?.free {
        return Err(Error::Verification("solver witness contains the configuration".into()));
    }
    Ok(SolveResult {
        n,
        k,
        config: cfg.clone(),
        value: witness.len(),
        witness,
        status: if sh.stop.load(Ordering::Relaxed) {
            Status::Timeout
        } else {
            Status::Exact
        },
        stats: SearchStats {
            nodes: sh.nodes.load(Ordering::Relaxed),
            prunes: sh.prunes.load(Ordering::Relaxed),
            detector_calls: sh.calls.load(Ordering::Relaxed),
            elapsed: start.elapsed(),
        },
    })
}
