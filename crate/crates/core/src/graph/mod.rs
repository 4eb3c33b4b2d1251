//! Finite simple graphs with canonical vertex labels.
//!
//! Vertices are always stored sorted by label, so vertex indices, edge lists
//! and serializations are deterministic for a given vertex set.

mod cliques;
mod regularity;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cliques::{
    max_clique_order, max_clique_order_with_budget, CliqueSystem, CliqueViolation, Ksm, DEFAULT_CLIQUE_BUDGET,
};
pub use regularity::{
    completely_regular_check, distance_regularity_check, distance_regularity_on, CrViolation, DrViolation,
    IntersectionArray,
};

/// Checks a clique system against its host; see [`CliqueSystem::verify`].
pub fn verify_clique_system(g: &Graph, s: &CliqueSystem) -> std::result::Result<Ksm, CliqueViolation> {
    s.verify(g)
}

/// Distance value for vertices in another component.
pub const UNREACHABLE: u32 = u32::MAX;

/// Default budget, in matrix entries, for the all-pairs distance cache (64 MiB of `u32`).
pub const DEFAULT_DISTANCE_CACHE_ENTRIES: usize = 16 << 20;

/// Family name and integer parameters a graph was built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMeta {
    pub family: String,
    pub params: Vec<u32>,
}

impl GraphMeta {
    pub fn new(family: impl Into<String>, params: &[u32]) -> Self {
        Self {
            family: family.into(),
            params: params.to_vec(),
        }
    }
}

/// `family:p1,p2,...`, or just `family` without parameters.
impl fmt::Display for GraphMeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.params.is_empty() {
            return write!(f, "{}", self.family);
        }
        let p: Vec<String> = self.params.iter().map(u32::to_string).collect();
        write!(f, "{}:{}", self.family, p.join(","))
    }
}

pub struct Graph {
    meta: GraphMeta,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    /// Filled row by row on demand; a row, once set, never changes.
    dist: Option<Vec<OnceLock<Vec<u32>>>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("family", &self.meta.family)
            .field("params", &self.meta.params)
            .field("vertices", &self.labels.len())
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Self {
            meta: self.meta.clone(),
            labels: self.labels.clone(),
            index: self.index.clone(),
            adj: self.adj.clone(),
            dist: self.dist.as_ref().map(|rows| rows.iter().map(|_| OnceLock::new()).collect()),
        }
    }
}

impl Graph {
    /// Builds a graph from labels and edges given as index pairs into `labels`.
    /// Vertices are re-sorted by label; duplicate edges are merged.
    pub fn new(meta: GraphMeta, labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut new_of_old = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            new_of_old[old] = new;
        }
        let mut sorted_labels = Vec::with_capacity(n);
        let mut index = HashMap::with_capacity(n);
        for &old in &order {
            let label = labels[old].clone();
            if index.insert(label.clone(), sorted_labels.len()).is_some() {
                return Err(Error::InvalidParams(format!("duplicate vertex label {label:?}")));
            }
            sorted_labels.push(label);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParams(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidParams(format!("loop at vertex {:?}", labels[u])));
            }
            let (a, b) = (new_of_old[u], new_of_old[v]);
            adj[a].push(b);
            adj[b].push(a);
        }
        adj.par_iter_mut().for_each(|row| {
            row.sort_unstable();
            row.dedup();
        });
        Ok(Self::from_parts(meta, sorted_labels, index, adj))
    }

    fn from_parts(meta: GraphMeta, labels: Vec<String>, index: HashMap<String, usize>, adj: Vec<Vec<usize>>) -> Self {
        let n = labels.len();
        let dist = (n.saturating_mul(n) <= DEFAULT_DISTANCE_CACHE_ENTRIES)
            .then(|| (0..n).map(|_| OnceLock::new()).collect());
        Self {
            meta,
            labels,
            index,
            adj,
            dist,
        }
    }

    /// Replaces the distance cache policy: rows are cached only if the full
    /// matrix fits in `max_entries`.
    pub fn with_distance_cache(mut self, max_entries: usize) -> Self {
        let n = self.labels.len();
        self.dist = (n.saturating_mul(n) <= max_entries).then(|| (0..n).map(|_| OnceLock::new()).collect());
        self
    }

    pub fn meta(&self) -> &GraphMeta {
        &self.meta
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn vertex_or_err(&self, label: &str) -> Result<usize> {
        self.vertex(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Raw BFS from `x`; unreachable vertices get [`UNREACHABLE`].
    pub fn distances_from(&self, x: usize) -> Vec<u32> {
        if let Some(rows) = &self.dist {
            return rows[x].get_or_init(|| self.multi_source_bfs(&[x])).clone();
        }
        self.multi_source_bfs(&[x])
    }

    /// Distances to the nearest vertex of `sources`.
    pub fn multi_source_bfs(&self, sources: &[usize]) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::with_capacity(self.vertex_count());
        for &s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u] + 1;
            for &v in &self.adj[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = du;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.multi_source_bfs(&[0]).iter().all(|&d| d != UNREACHABLE)
    }

    /// Diameter, or `Disconnected`.
    pub fn diameter(&self) -> Result<u32> {
        (0..self.vertex_count())
            .into_par_iter()
            .map(|x| self.bfs_distances(x).map(|d| d.into_iter().max().unwrap_or(0)))
            .try_reduce(|| 0, |a, b| Ok(a.max(b)))
    }

    /// Serializes as `{family, params, vertices, edges}`.
    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            family: self.meta.family.clone(),
            params: self.meta.params.clone(),
            vertices: self.labels.clone(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(doc: &GraphJson) -> Result<Self> {
        Self::new(
            GraphMeta::new(doc.family.clone(), &doc.params),
            doc.vertices.clone(),
            doc.edges.iter().map(|e| (e[0], e[1])),
        )
    }
}

/// Graph interchange document. Vertices are sorted by label and edges are
/// lexicographic, so identical graphs serialize byte-identically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub family: String,
    pub params: Vec<u32>,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

/// Exact distances from `x` to every vertex.
pub fn bfs_distances(g: &Graph, x: usize) -> Result<Vec<u32>> {
    g.bfs_distances(x)
}

impl Graph {
    pub fn bfs_distances(&self, x: usize) -> Result<Vec<u32>> {
        let d = self.distances_from(x);
        match d.iter().position(|&v| v == UNREACHABLE) {
            Some(v) => Err(Error::Disconnected(v)),
            None => Ok(d),
        }
    }

    /// Common degree, or a vertex whose degree differs from vertex 0's.
    pub fn is_regular(&self) -> std::result::Result<usize, IrregularVertex> {
        let k = self.adj.first().map_or(0, Vec::len);
        match (0..self.vertex_count()).find(|&v| self.degree(v) != k) {
            None => Ok(k),
            Some(v) => Err(IrregularVertex {
                vertex: v,
                degree: self.degree(v),
                expected: k,
            }),
        }
    }

    /// Subgraph induced by `verts`; labels are inherited.
    pub fn induced_subgraph(&self, verts: &[usize]) -> InducedSubgraph {
        let mut to_host: Vec<usize> = verts.to_vec();
        to_host.sort_unstable();
        to_host.dedup();
        let mut local = HashMap::with_capacity(to_host.len());
        for (i, &v) in to_host.iter().enumerate() {
            local.insert(v, i);
        }
        let adj: Vec<Vec<usize>> = to_host
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|u| local.get(u).copied()).collect())
            .collect();
        let labels: Vec<String> = to_host.iter().map(|&v| self.labels[v].clone()).collect();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let meta = GraphMeta::new(format!("{}/induced", self.meta.family), &self.meta.params);
        InducedSubgraph {
            graph: Graph::from_parts(meta, labels, index, adj),
            to_host,
        }
    }

    /// Whether distances inside the induced subgraph on `verts` equal host
    /// distances for every pair.
    pub fn is_isometric_subgraph(&self, verts: &[usize]) -> IsometryVerdict {
        let sub = self.induced_subgraph(verts);
        let witness = (0..sub.graph.vertex_count()).into_par_iter().find_map_first(|i| {
            let inner = sub.graph.multi_source_bfs(&[i]);
            let outer = self.distances_from(sub.to_host[i]);
            (0..sub.graph.vertex_count()).find_map(|j| {
                let host = outer[sub.to_host[j]];
                (inner[j] != host).then(|| IsometryWitness {
                    u: sub.to_host[i],
                    v: sub.to_host[j],
                    host_distance: host,
                    subgraph_distance: (inner[j] != UNREACHABLE).then_some(inner[j]),
                })
            })
        });
        IsometryVerdict {
            isometric: witness.is_none(),
            witness,
        }
    }

    /// BFS 2-coloring, or an odd cycle.
    pub fn is_bipartite(&self) -> Bipartiteness {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0u32; n];
        for root in 0..n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return Bipartiteness::OddCycle(odd_cycle(u, v, &parent, &depth));
                    }
                }
            }
        }
        Bipartiteness::Bipartite(color)
    }
}

fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[u32]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IrregularVertex {
    pub vertex: usize,
    pub degree: usize,
    pub expected: usize,
}

impl fmt::Display for IrregularVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertex {} has degree {}, expected {}", self.vertex, self.degree, self.expected)
    }
}

#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// Host index of each subgraph vertex.
    pub to_host: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsometryWitness {
    pub u: usize,
    pub v: usize,
    pub host_distance: u32,
    /// `None` when `v` is unreachable from `u` inside the subgraph.
    pub subgraph_distance: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsometryVerdict {
    pub isometric: bool,
    pub witness: Option<IsometryWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Color (0 or 1) of every vertex.
    Bipartite(Vec<u8>),
    /// Vertices of a closed walk of odd length.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let labels = (0..n).map(|i| format!("{i:03}")).collect();
        Graph::new(GraphMeta::new("test", &[n as u32]), labels, edges.iter().copied()).unwrap()
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        from_edges(n, &edges)
    }

    #[test]
    fn labels_are_sorted_and_indexed() {
        let g = Graph::new(
            GraphMeta::new("t", &[]),
            vec!["b".into(), "a".into(), "c".into()],
            [(0, 1), (1, 2)],
        )
        .unwrap();
        assert_eq!(g.labels(), &["a", "b", "c"]);
        assert!(g.is_adjacent(g.vertex("a").unwrap(), g.vertex("b").unwrap()));
        assert!(g.is_adjacent(g.vertex("a").unwrap(), g.vertex("c").unwrap()));
        assert!(!g.is_adjacent(g.vertex("b").unwrap(), g.vertex("c").unwrap()));
    }

    #[test]
    fn rejects_loops_and_duplicate_labels() {
        assert!(Graph::new(GraphMeta::new("t", &[]), vec!["a".into()], [(0, 0)]).is_err());
        assert!(Graph::new(GraphMeta::new("t", &[]), vec!["a".into(), "a".into()], []).is_err());
    }

    #[test]
    fn bfs_basics() {
        let c4 = cycle(4);
        let d = bfs_distances(&c4, 0).unwrap();
        assert_eq!(d, vec![0, 1, 2, 1]);
        let two = from_edges(3, &[(0, 1)]);
        assert_eq!(bfs_distances(&two, 0).unwrap_err(), Error::Disconnected(2));
        assert!(!two.is_connected());
    }

    #[test]
    fn regularity() {
        assert_eq!(cycle(5).is_regular(), Ok(2));
        let path = from_edges(3, &[(0, 1), (1, 2)]);
        let err = path.is_regular().unwrap_err();
        assert_eq!(err.vertex, 1);
        assert_eq!(err.degree, 2);
    }

    #[test]
    fn induced_subgraphs() {
        let c6 = cycle(6);
        let all: Vec<usize> = (0..6).collect();
        let sub = c6.induced_subgraph(&all);
        assert_eq!(sub.graph.to_json().edges, c6.to_json().edges);
        let e = c6.induced_subgraph(&[2, 1]);
        assert_eq!(e.graph.vertex_count(), 2);
        assert_eq!(e.graph.edge_count(), 1);
        assert_eq!(e.to_host, vec![1, 2]);
    }

    #[test]
    fn isometry() {
        let c6 = cycle(6);
        assert!(c6.is_isometric_subgraph(&[0, 1, 2, 3]).isometric);
        let v = c6.is_isometric_subgraph(&[0, 3]);
        assert!(!v.isometric);
        let w = v.witness.unwrap();
        assert_eq!(w.host_distance, 3);
        assert_eq!(w.subgraph_distance, None);
        // path 0-1-2-3-4 in C6 is not isometric (0 and 4 are at distance 2)
        assert!(!c6.is_isometric_subgraph(&[0, 1, 2, 3, 4]).isometric);
        let all: Vec<usize> = (0..6).collect();
        assert!(c6.is_isometric_subgraph(&all).isometric);
    }

    #[test]
    fn bipartiteness() {
        match cycle(6).is_bipartite() {
            Bipartiteness::Bipartite(c) => assert_eq!(c, vec![0, 1, 0, 1, 0, 1]),
            other => panic!("{other:?}"),
        }
        match cycle(3).is_bipartite() {
            Bipartiteness::OddCycle(c) => assert_eq!(c.len() % 2, 1),
            other => panic!("{other:?}"),
        }
        match cycle(7).is_bipartite() {
            Bipartiteness::OddCycle(c) => {
                assert_eq!(c.len(), 7);
                let g = cycle(7);
                for w in c.windows(2) {
                    assert!(g.is_adjacent(w[0], w[1]));
                }
                assert!(g.is_adjacent(c[0], c[6]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn json_is_deterministic_and_round_trips() {
        let g = cycle(5);
        let doc = g.to_json();
        let text = serde_json::to_string(&doc).unwrap();
        let back = Graph::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
        assert_eq!(doc.edges[0], [0, 1]);
    }
}
