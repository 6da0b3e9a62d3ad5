//! Bipartite peeling: a dense bipartite graph contains a long path or a
//! complete bipartite graph `K_{t+1,q}`.

use serde::Serialize;

use crate::constructions::binom;
use crate::error::{Error, Result};
use crate::graph::{find_path, longest_path, Graph};
use crate::vertex_set::VertexSet;

/// A graph with a fixed bipartition `X ∪ Y` of its non-isolated vertices.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    pub graph: Graph,
    pub x: VertexSet,
    pub y: VertexSet,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, x: VertexSet, y: VertexSet) -> Result<Self> {
        if !x.is_disjoint(&y) {
            return Err(Error::domain("sides X and Y overlap"));
        }
        for (a, b) in graph.edges() {
            if !(x.contains(a) && y.contains(b) || x.contains(b) && y.contains(a)) {
                return Err(Error::domain(format!("edge ({a}, {b}) does not cross the bipartition")));
            }
        }
        Ok(BipartiteGraph { graph, x, y })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PeelResult {
    /// `l + 1` vertices of a path with `l` edges.
    Path { vertices: Vec<usize> },
    /// `left` has `t + 1` vertices, `right` has `q`, all pairs adjacent.
    Biclique { left: Vec<usize>, right: Vec<usize> },
}

/// Checks `e(G) >= b|X| + t|Y|` and `b >= C(l, t+1) q + l`.
pub fn peel_preconditions(g: &BipartiteGraph, b: usize, t: usize, l: usize, q: usize) -> Result<()> {
    let e = g.graph.edge_count() as u128;
    let need = (b * g.x.len() + t * g.y.len()) as u128;
    if e < need {
        return Err(Error::domain(format!("e(G) = {e} is below b|X| + t|Y| = {need}")));
    }
    let bmin = binom(l as u64, t as u64 + 1) * q as u128 + l as u128;
    if (b as u128) < bmin {
        return Err(Error::domain(format!("b = {b} is below C(l, t+1) q + l = {bmin}")));
    }
    Ok(())
}

/// Runs the peeling after checking its preconditions.
pub fn peel_path_or_biclique(
    g: &BipartiteGraph,
    b: usize,
    t: usize,
    l: usize,
    q: usize,
    budget: Option<u64>,
) -> Result<PeelResult> {
    peel_preconditions(g, b, t, l, q)?;
    peel_path_or_biclique_unchecked(g, b, t, l, q, budget)?
        .ok_or_else(|| Error::Verification("peeling failed although its preconditions hold".into()))
}

/// Runs the peeling regardless of preconditions; `None` if it gets stuck.
pub fn peel_path_or_biclique_unchecked(
    g: &BipartiteGraph,
    b: usize,
    t: usize,
    l: usize,
    q: usize,
    budget: Option<u64>,
) -> Result<Option<PeelResult>> {
    if l == 0 || q == 0 {
        return Err(Error::domain("l and q must be positive"));
    }
    let mut h = g.graph.clone();
    let mut alive: VertexSet = g.x.union(&g.y);
    // remove light vertices one at a time, lowest index first
    while let Some(v) = alive.iter().find(|&v| {
        let d = h.degree(v);
        if g.x.contains(v) {
            d < b
        } else {
            d <= t
        }
    }) {
        h.remove_vertex_edges(v);
        alive.remove(v);
    }
    if alive.is_empty() {
        return Ok(None);
    }
    if let Some(p) = find_path(&h, l, budget)? {
        return Ok(Some(PeelResult::Path { vertices: p }));
    }
    let len = longest_path(&h, budget)?;
    let Some(mut path) = find_path(&h, len, budget)? else {
        return Ok(None);
    };
    if path.len() < 2 {
        return Ok(None);
    }
    if !g.y.contains(path[0]) {
        path.reverse();
    }
    let u = path[1];
    let on: VertexSet = path.iter().copied().collect();
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for w in h.neighbours(u).difference(&on).iter() {
        // a longest path cannot be extended, so w's neighbours all lie on it
        let key: Vec<usize> = h.neighbours(w).intersection(&on).iter().take(t + 1).collect();
        if key.len() < t + 1 {
            continue;
        }
        let slot = match groups.iter().position(|(k, _)| *k == key) {
            Some(i) => i,
            None => {
                groups.push((key, Vec::new()));
                groups.len() - 1
            }
        };
        groups[slot].1.push(w);
        if groups[slot].1.len() == q {
            let (left, right) = groups.swap_remove(slot);
            let res = PeelResult::Biclique { left, right };
            return Ok(verify_peel(g, &res, t, l, q).then_some(res));
        }
    }
    Ok(None)
}

/// Re-checks a peeling outcome against the original graph.
pub fn verify_peel(g: &BipartiteGraph, res: &PeelResult, t: usize, l: usize, q: usize) -> bool {
    match res {
        PeelResult::Path { vertices } => {
            let distinct: VertexSet = vertices.iter().copied().collect();
            vertices.len() == l + 1
                && distinct.len() == l + 1
                && vertices.windows(2).all(|w| g.graph.has_edge(w[0], w[1]))
        }
        PeelResult::Biclique { left, right } => {
            let ls: VertexSet = left.iter().copied().collect();
            let rs: VertexSet = right.iter().copied().collect();
            ls.len() == t + 1
                && rs.len() == q
                && ls.is_disjoint(&rs)
                && left.iter().all(|&a| right.iter().all(|&c| g.graph.has_edge(a, c)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_bipartite(a: usize, c: usize) -> BipartiteGraph {
        let mut g = Graph::new(a + c);
        for i in 1..=a {
            for j in a + 1..=a + c {
                g.add_edge(i, j).unwrap();
            }
        }
        BipartiteGraph::new(g, VertexSet::range(1, a), VertexSet::range(a + 1, a + c)).unwrap()
    }

    #[test]
    fn dense_graph_gives_path() {
        let g = complete_bipartite(10, 10);
        let res = peel_path_or_biclique(&g, 6, 1, 3, 1, None).unwrap();
        assert!(matches!(res, PeelResult::Path { ref vertices } if vertices.len() == 4));
        assert!(verify_peel(&g, &res, 1, 3, 1));
    }

    #[test]
    fn star_side_gives_biclique() {
        // X = {1..2}, Y = {3..8}: both X vertices see all of Y, so the
        // longest path has 4 edges and l = 6 is out of reach
        let g = complete_bipartite(2, 6);
        let res = peel_path_or_biclique_unchecked(&g, 3, 1, 6, 3, None).unwrap().unwrap();
        assert!(verify_peel(&g, &res, 1, 6, 3), "{res:?}");
        assert!(matches!(res, PeelResult::Biclique { .. }));
    }

    #[test]
    fn preconditions() {
        let g = complete_bipartite(3, 3);
        assert!(matches!(peel_path_or_biclique(&g, 9, 1, 2, 1, None), Err(Error::Domain(_))));
        assert!(matches!(peel_path_or_biclique(&g, 1, 1, 2, 1, None), Err(Error::Domain(_))));
        assert!(BipartiteGraph::new(g.graph.clone(), VertexSet::range(1, 2), VertexSet::range(3, 6)).is_err());
    }
}
