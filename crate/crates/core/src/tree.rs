//! Ordinary (2-uniform) trees: σ, τ, colour classes and unlabeled enumeration.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A tree on vertices `1..=order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tree {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Tree {
    pub fn new(order: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::domain("a tree has at least one vertex"));
        }
        if edges.len() + 1 != order {
            return Err(Error::domain(format!(
                "a tree on {order} vertices has {} edges, got {}",
                order - 1,
                edges.len()
            )));
        }
        let mut parent: Vec<usize> = (0..=order).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(a, b) in &edges {
            if a == b || a == 0 || b == 0 || a > order || b > order {
                return Err(Error::domain(format!("bad tree edge ({a}, {b})")));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::domain("edges contain a cycle"));
            }
            parent[ra] = rb;
        }
        Ok(Tree { order, edges })
    }

    /// The path with `q` edges.
    pub fn path(q: usize) -> Self {
        Tree::new(q + 1, (1..=q).map(|i| (i, i + 1)).collect()).expect("path is a tree")
    }

    /// The star `K_{1,q}` centred at vertex 1.
    pub fn star(q: usize) -> Self {
        Tree::new(q + 1, (2..=q + 1).map(|i| (1, i)).collect()).expect("star is a tree")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Edges as `(parent, child)` in BFS order from vertex 1, so every child is new.
    pub fn bfs_edges(&self) -> Vec<(usize, usize)> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.order + 1];
        let mut queue = std::collections::VecDeque::from([1]);
        seen[1] = true;
        let mut out = Vec::new();
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    out.push((u, w));
                    queue.push_back(w);
                }
            }
        }
        out
    }

    /// The two colour classes, smaller first.
    pub fn colour_classes(&self) -> (Vec<usize>, Vec<usize>) {
        let adj = self.adjacency();
        let mut colour = vec![0u8; self.order + 1];
        colour[1] = 1;
        let mut stack = vec![1];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if colour[w] == 0 {
                    colour[w] = 3 - colour[u];
                    stack.push(w);
                }
            }
        }
        let a: Vec<usize> = (1..=self.order).filter(|&v| colour[v] == 1).collect();
        let b: Vec<usize> = (1..=self.order).filter(|&v| colour[v] == 2).collect();
        if a.len() <= b.len() {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Rooted dynamic programme: `(best with v chosen, best with v not chosen)`.
    fn dp<F>(&self, combine: F) -> (usize, usize)
    where
        F: Fn(&[(usize, usize)]) -> (usize, usize),
    {
        let adj = self.adjacency();
        let mut order = Vec::with_capacity(self.order);
        let mut parent = vec![0usize; self.order + 1];
        let mut stack = vec![1];
        parent[1] = usize::MAX;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in &adj[u] {
                if w != parent[u] {
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        let mut val = vec![(0usize, 0usize); self.order + 1];
        for &u in order.iter().rev() {
            let kids: Vec<(usize, usize)> = adj[u]
                .iter()
                .filter(|&&w| w != parent[u])
                .map(|&w| val[w])
                .collect();
            val[u] = combine(&kids);
        }
        val[1]
    }

    /// `σ(T) = min { |A| + e(T \ A) : A independent }`, where `e(T \ A)` counts
    /// edges with no endpoint in `A`.
    pub fn sigma(&self) -> usize {
        let (inc, exc) = self.dp(|kids| {
            let inc = 1 + kids.iter().map(|&(_, e)| e).sum::<usize>();
            let exc = kids.iter().map(|&(i, e)| i.min(e + 1)).sum();
            (inc, exc)
        });
        inc.min(exc)
    }

    /// Vertex cover number.
    pub fn tau(&self) -> usize {
        let (inc, exc) = self.dp(|kids| {
            let inc = 1 + kids.iter().map(|&(i, e)| i.min(e)).sum::<usize>();
            let exc = kids.iter().map(|&(i, _)| i).sum();
            (inc, exc)
        });
        inc.min(exc)
    }

    /// An isomorphism-invariant string (AHU encoding rooted at the centre(s)).
    pub fn canonical_form(&self) -> String {
        let adj = self.adjacency();
        self.centres()
            .into_iter()
            .map(|c| encode(&adj, c, 0))
            .min()
            .expect("trees have a centre")
    }

    fn centres(&self) -> Vec<usize> {
        if self.order <= 2 {
            return (1..=self.order).collect();
        }
        let adj = self.adjacency();
        let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut leaves: Vec<usize> = (1..=self.order).filter(|&v| deg[v] == 1).collect();
        let mut remaining = self.order;
        while remaining > 2 {
            remaining -= leaves.len();
            let mut next = Vec::new();
            for &l in &leaves {
                deg[l] = 0;
                for &w in &adj[l] {
                    if deg[w] > 0 {
                        deg[w] -= 1;
                        if deg[w] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            leaves = next;
        }
        leaves.sort_unstable();
        leaves
    }

    /// One representative per isomorphism class of trees on `order` vertices.
    pub fn all_unlabeled(order: usize) -> Vec<Tree> {
        if order == 0 {
            return Vec::new();
        }
        let mut level = vec![Tree {
            order: 1,
            edges: Vec::new(),
        }];
        for m in 1..order {
            let mut seen: BTreeMap<String, Tree> = BTreeMap::new();
            for t in &level {
                for v in 1..=m {
                    let mut edges = t.edges.clone();
                    edges.push((v, m + 1));
                    let grown = Tree { order: m + 1, edges };
                    seen.entry(grown.canonical_form()).or_insert(grown);
                }
            }
            level = seen.into_values().collect();
        }
        level
    }
}

fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Edges of `t` as a set of unordered pairs.
pub fn edge_set(t: &Tree) -> BTreeSet<(usize, usize)> {
    t.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
}
