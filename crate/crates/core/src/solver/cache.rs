//! Append-only JSON-lines store of solver results.

use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{max_free_family, SolveOptions, SolveResult, Status};
use crate::config::ForbiddenConfig;
use crate::error::{Error, Result};

const FILE: &str = "solve-cache.jsonl";

#[derive(Serialize, Deserialize)]
struct Record {
    n: usize,
    k: usize,
    config: String,
    options_hash: String,
    result: SolveResult,
}

pub struct SolveCache {
    path: PathBuf,
}

impl SolveCache {
    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(SolveCache { path: dir.join(FILE) })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// The most recent record for this key, if any.
    pub fn get(&self, n: usize, k: usize, cfg: &ForbiddenConfig, opts: &SolveOptions) -> Result<Option<SolveResult>> {
        let text = match fs::read_to_string(&self.path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let (cfg, hash) = (cfg.to_string(), opts.hash());
        let mut hit = None;
        for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let rec: Record = serde_json::from_str(line)
                .map_err(|e| Error::parse(format!("{} line {}", self.path.display(), i + 1), e.to_string()))?;
            if rec.n == n && rec.k == k && rec.config == cfg && rec.options_hash == hash {
                hit = Some(rec.result);
            }
        }
        Ok(hit)
    }

    pub fn put(&self, r: &SolveResult, opts: &SolveOptions) -> Result<()> {
        let rec = Record {
            n: r.n,
            k: r.k,
            config: r.config.to_string(),
            options_hash: opts.hash(),
            result: r.clone(),
        };
        let mut line = serde_json::to_string(&rec).expect("record serializes");
        line.push('\n');
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        f.write_all(line.as_bytes())?;
        Ok(())
    }
}

/// Solves through the cache. Timed-out results are not stored. The flag
/// reports a cache hit.
pub fn solve_cached(
    cache: Option<&SolveCache>,
    n: usize,
    k: usize,
    cfg: &ForbiddenConfig,
    opts: &SolveOptions,
) -> Result<(SolveResult, bool)> {
    if let Some(c) = cache {
        if let Some(r) = c.get(n, k, cfg, opts)? {
            return Ok((r, true));
        }
    }
    let r = max_free_family(n, k, cfg, opts)?;
    if let Some(c) = cache {
        if r.status != Status::Timeout {
            c.put(&r, opts)?;
        }
    }
    Ok((r, false))
}
