use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

/// Node budget for [`max_clique_order`].
pub const DEFAULT_CLIQUE_BUDGET: u64 = 5_000_000;

/// A set of `(s+1)`-cliques covering every edge exactly `m` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSystem {
    s: usize,
    m: usize,
    cliques: Vec<Vec<usize>>,
}

/// Parameters `(k, s, m)` of a verified pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ksm {
    pub k: usize,
    pub s: usize,
    pub m: usize,
}

impl fmt::Display for Ksm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k, self.s, self.m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueViolation {
    NotRegular(usize),
    WrongSize { clique: usize, size: usize },
    NotAClique { clique: usize, u: usize, v: usize },
    Multiplicity { u: usize, v: usize, count: usize },
}

impl fmt::Display for CliqueViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliqueViolation::NotRegular(v) => write!(f, "host is not regular at vertex {v}"),
            CliqueViolation::WrongSize { clique, size } => write!(f, "clique {clique} has {size} vertices"),
            CliqueViolation::NotAClique { clique, u, v } => {
                write!(f, "clique {clique} contains non-adjacent vertices {u} and {v}")
            }
            CliqueViolation::Multiplicity { u, v, count } => {
                write!(f, "edge ({u},{v}) lies in {count} cliques")
            }
        }
    }
}

impl CliqueSystem {
    /// Each clique is sorted; the list is sorted too. All cliques must have
    /// the same size, which defines `s`.
    pub fn new(cliques: Vec<Vec<usize>>, m: usize) -> Result<Self> {
        let mut cliques: Vec<Vec<usize>> = cliques
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        cliques.sort();
        let size = cliques.first().map_or(0, Vec::len);
        if size < 2 {
            return Err(Error::InvalidParams("cliques need at least two vertices".into()));
        }
        if let Some(bad) = cliques.iter().find(|c| c.len() != size) {
            return Err(Error::InvalidParams(format!(
                "mixed clique sizes {size} and {}",
                bad.len()
            )));
        }
        Ok(Self { s: size - 1, m, cliques })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// For each of `n` vertices, the indices of the cliques containing it.
    pub fn incidence(&self, n: usize) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); n];
        for (i, c) in self.cliques.iter().enumerate() {
            for &v in c {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Checks clique-ness, uniform size and that every edge is covered exactly `m` times.
    pub fn verify(&self, g: &Graph) -> std::result::Result<Ksm, CliqueViolation> {
        let k = g.is_regular().map_err(|w| CliqueViolation::NotRegular(w.vertex))?;
        // counts[u][j] tracks the edge (u, adj[u][j])
        let mut counts: Vec<Vec<usize>> = (0..g.vertex_count()).map(|u| vec![0; g.degree(u)]).collect();
        for (ci, c) in self.cliques.iter().enumerate() {
            if c.len() != self.s + 1 {
                return Err(CliqueViolation::WrongSize { clique: ci, size: c.len() });
            }
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    match g.neighbors(u).binary_search(&v) {
                        Ok(j) => counts[u][j] += 1,
                        Err(_) => return Err(CliqueViolation::NotAClique { clique: ci, u, v }),
                    }
                }
            }
        }
        for (u, row) in counts.iter().enumerate() {
            for (j, &count) in row.iter().enumerate() {
                let v = g.neighbors(u)[j];
                if v > u && count != self.m {
                    return Err(CliqueViolation::Multiplicity { u, v, count });
                }
            }
        }
        Ok(Ksm { k, s: self.s, m: self.m })
    }
}

/// Exact clique number with the default node budget.
pub fn max_clique_order(g: &Graph) -> Result<usize> {
    max_clique_order_with_budget(g, DEFAULT_CLIQUE_BUDGET)
}

/// Exact clique number by branch and bound with a greedy-coloring bound.
/// Fails with `CliqueSearchTooLarge` once `budget` search nodes are spent.
pub fn max_clique_order_with_budget(g: &Graph, budget: u64) -> Result<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let words = n.div_ceil(64);
    let mut adj = vec![0u64; n * words];
    for u in 0..n {
        for &v in g.neighbors(u) {
            adj[u * words + v / 64] |= 1 << (v % 64);
        }
    }
    // high-degree vertices first gives good early lower bounds
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut search = CliqueSearch {
        adj,
        words,
        best: 1,
        nodes: 0,
        budget,
    };
    search.expand(0, order)?;
    Ok(search.best)
}

struct CliqueSearch {
    adj: Vec<u64>,
    words: usize,
    best: usize,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Greedy sequential coloring; returns vertices sorted by color and the
    /// color (1-based) of each position.
    fn color_sort(&self, cand: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in cand {
            match classes.iter_mut().find(|cl| cl.iter().all(|&u| !self.adjacent(u, v))) {
                Some(cl) => cl.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(cand.len());
        let mut colors = Vec::with_capacity(cand.len());
        for (ci, cl) in classes.into_iter().enumerate() {
            for v in cl {
                order.push(v);
                colors.push(ci + 1);
            }
        }
        (order, colors)
    }

    fn expand(&mut self, size: usize, cand: Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::CliqueSearchTooLarge(self.budget));
        }
        let (order, colors) = self.color_sort(&cand);
        for i in (0..order.len()).rev() {
            if size + colors[i] <= self.best {
                return Ok(());
            }
            let v = order[i];
            let next: Vec<usize> = order[..i].iter().copied().filter(|&u| self.adjacent(u, v)).collect();
            if next.is_empty() {
                self.best = self.best.max(size + 1);
            } else {
                self.expand(size + 1, next)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{cycle, from_edges};

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        from_edges(n, &edges)
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(max_clique_order(&complete(3)).unwrap(), 3);
        assert_eq!(max_clique_order(&complete(6)).unwrap(), 6);
        assert_eq!(max_clique_order(&cycle(5)).unwrap(), 2);
        // K4 plus a pendant path
        let g = from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(max_clique_order(&g).unwrap(), 4);
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            max_clique_order_with_budget(&cycle(9), 1).unwrap_err(),
            Error::CliqueSearchTooLarge(1)
        );
    }

    #[test]
    fn triangle_system_of_k4() {
        let g = complete(4);
        let tri = CliqueSystem::new(vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]], 2).unwrap();
        assert_eq!(tri.verify(&g).unwrap(), Ksm { k: 3, s: 2, m: 2 });
        let short = CliqueSystem::new(vec![vec![0, 1, 2], vec![0, 1, 3]], 1).unwrap();
        assert!(matches!(short.verify(&g), Err(CliqueViolation::Multiplicity { .. })));
    }

    #[test]
    fn non_clique_is_reported() {
        let g = cycle(4);
        let s = CliqueSystem::new(vec![vec![0, 2]], 1).unwrap();
        assert_eq!(s.verify(&g), Err(CliqueViolation::NotAClique { clique: 0, u: 0, v: 2 }));
    }

    #[test]
    fn mixed_sizes_rejected() {
        assert!(CliqueSystem::new(vec![vec![0, 1], vec![0, 1, 2]], 1).is_err());
    }
}
