//! Simple graphs on `[n]`, longest paths and cycles.

use crate::error::{Error, Result};
use crate::family::{Edge, SetFamily};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(); n + 1],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn from_family(fam: &SetFamily) -> Result<Self> {
        if fam.k() != 2 {
            return Err(Error::domain("a graph is a family with k = 2"));
        }
        let mut g = Graph::new(fam.n());
        for e in fam {
            let v = e.vertices();
            g.add_edge(v[0], v[1])?;
        }
        Ok(g)
    }

    pub fn to_family(&self) -> SetFamily {
        SetFamily::from_edges(
            self.n,
            2,
            self.edges().into_iter().map(|(a, b)| Edge::from_set([a, b].into_iter().collect())),
        )
        .expect("graph edges are valid pairs")
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b || a == 0 || b == 0 || a > self.n || b > self.n {
            return Err(Error::domain(format!("bad edge ({a}, {b}) on {} vertices", self.n)));
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        Ok(())
    }

    pub fn remove_vertex_edges(&mut self, v: usize) {
        for u in self.adj[v].to_vec() {
            self.adj[u].remove(v);
        }
        self.adj[v] = VertexSet::new();
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a <= self.n && self.adj[a].contains(b)
    }

    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        (1..=self.n).map(|v| self.adj[v].len()).sum::<usize>() / 2
    }

    /// Vertices reachable from `v` avoiding `blocked` (including `v`).
    fn reach(&self, v: usize, blocked: &VertexSet) -> VertexSet {
        let mut seen: VertexSet = [v].into_iter().collect();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for w in self.adj[u].iter() {
                if !blocked.contains(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    budget: Option<u64>,
    nodes: u64,
    best: Vec<usize>,
    target: usize,
}

impl Dfs<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.budget {
            Some(b) if self.nodes > b => Err(Error::Timeout { nodes: self.nodes }),
            _ => Ok(()),
        }
    }

    /// Extends `path` (ending at its last vertex) over vertices not in `on`.
    /// Paths are measured in edges; stops once `target` is reached.
    fn path(&mut self, path: &mut Vec<usize>, on: &mut VertexSet) -> Result<()> {
        self.tick()?;
        if path.len() > self.best.len() {
            self.best = path.clone();
        }
        if self.best.len() > self.target {
            return Ok(());
        }
        let end = *path.last().unwrap();
        // bound: every vertex still reachable from the end could be appended
        let reach = self.g.reach(end, on).len() - 1;
        if path.len() + reach <= self.best.len() {
            return Ok(());
        }
        for w in self.g.adj[end].to_vec() {
            if on.contains(w) {
                continue;
            }
            path.push(w);
            on.insert(w);
            self.path(path, on)?;
            on.remove(w);
            path.pop();
            if self.best.len() > self.target {
                break;
            }
        }
        Ok(())
    }

    /// Cycles whose smallest vertex is `path[0]`; `best` holds the best cycle's vertices.
    fn cycle(&mut self, path: &mut Vec<usize>, on: &mut VertexSet, lo: usize) -> Result<()> {
        self.tick()?;
        let start = path[0];
        let end = *path.last().unwrap();
        if path.len() >= 3 && self.g.has_edge(end, start) && path.len() > self.best.len() {
            self.best = path.clone();
        }
        if self.best.len() >= self.target {
            return Ok(());
        }
        let mut blocked = on.clone();
        blocked.union_with(&VertexSet::range(1, lo));
        blocked.remove(start);
        let reach = self.g.reach(end, &blocked);
        if !reach.contains(start) || path.len() + reach.len() - 2 <= self.best.len() {
            return Ok(());
        }
        for w in self.g.adj[end].to_vec() {
            if w <= lo || on.contains(w) {
                continue;
            }
            path.push(w);
            on.insert(w);
            self.cycle(path, on, lo)?;
            on.remove(w);
            path.pop();
            if self.best.len() >= self.target {
                break;
            }
        }
        Ok(())
    }
}

/// A path with at least `target` edges (as a vertex list), or the longest one.
fn path_search(g: &Graph, target: usize, budget: Option<u64>) -> Result<Vec<usize>> {
    let mut dfs = Dfs {
        g,
        budget,
        nodes: 0,
        best: Vec::new(),
        target: target.saturating_add(0),
    };
    for v in 1..=g.n {
        if dfs.best.len() > dfs.target {
            break;
        }
        let mut path = vec![v];
        let mut on: VertexSet = [v].into_iter().collect();
        dfs.path(&mut path, &mut on)?;
    }
    Ok(dfs.best)
}

/// Number of edges of a longest path (0 for an edgeless graph).
pub fn longest_path(g: &Graph, budget: Option<u64>) -> Result<usize> {
    Ok(path_search(g, usize::MAX - 1, budget)?.len().saturating_sub(1))
}

/// A path with exactly `l` edges, as its `l + 1` vertices.
pub fn find_path(g: &Graph, l: usize, budget: Option<u64>) -> Result<Option<Vec<usize>>> {
    let best = path_search(g, l, budget)?;
    Ok((best.len() > l).then(|| best[..=l].to_vec()))
}

fn cycle_search(g: &Graph, target: usize, budget: Option<u64>) -> Result<Vec<usize>> {
    let mut dfs = Dfs {
        g,
        budget,
        nodes: 0,
        best: Vec::new(),
        target,
    };
    for v in 1..=g.n {
        if dfs.best.len() >= dfs.target {
            break;
        }
        let mut path = vec![v];
        let mut on: VertexSet = [v].into_iter().collect();
        dfs.cycle(&mut path, &mut on, v)?;
    }
    Ok(dfs.best)
}

/// Length of a longest cycle, 0 if the graph is a forest.
pub fn circumference(g: &Graph, budget: Option<u64>) -> Result<usize> {
    Ok(cycle_search(g, usize::MAX, budget)?.len())
}

/// A cycle of length at least `c`, as its vertex sequence.
pub fn find_cycle_at_least(g: &Graph, c: usize, budget: Option<u64>) -> Result<Option<Vec<usize>>> {
    let best = cycle_search(g, c.max(3), budget)?;
    Ok((best.len() >= c.max(3)).then_some(best))
}
