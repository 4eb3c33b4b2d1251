use std::collections::HashMap;

use super::Family;
use crate::error::Result;
use crate::graph::{CliqueSystem, Graph, GraphMeta};

fn meta(f: Family) -> GraphMeta {
    GraphMeta::new(f.name(), &f.params())
}

/// Edges implied by a clique list (pairs inside each clique).
fn clique_edges(cliques: &[Vec<usize>]) -> Vec<(usize, usize)> {
    cliques
        .iter()
        .flat_map(|c| c.iter().enumerate().flat_map(move |(i, &u)| c[i + 1..].iter().map(move |&v| (u, v))))
        .collect()
}

/// Re-indexes cliques given in construction order into the graph's sorted order.
fn reindex(g: &Graph, labels: &[String], cliques: Vec<Vec<usize>>, m: usize) -> Result<CliqueSystem> {
    let map: Vec<usize> = labels.iter().map(|l| g.vertex(l).expect("label present")).collect();
    CliqueSystem::new(
        cliques.into_iter().map(|c| c.into_iter().map(|v| map[v]).collect()).collect(),
        m,
    )
}

fn graph_with_cliques(f: Family, labels: Vec<String>, cliques: Vec<Vec<usize>>, m: usize) -> Result<(Graph, CliqueSystem)> {
    let g = Graph::new(meta(f), labels.clone(), clique_edges(&cliques))?;
    let s = reindex(&g, &labels, cliques, m)?;
    Ok((g, s))
}

/// The `n`-dimensional octahedron (cocktail party graph on `n` antipodal
/// pairs). Vertex `i.s` is side `s` of pair `i`; the clique system is all
/// `2^n` maximum cliques, one vertex from each pair.
pub fn build_octahedron(n: u32) -> Result<(Graph, CliqueSystem)> {
    let f = Family::Octahedron { n };
    f.validate()?;
    let n = n as usize;
    let width = (n - 1).to_string().len();
    let labels: Vec<String> = (0..2 * n).map(|v| format!("{:0width$}.{}", v / 2, v % 2)).collect();
    let cliques: Vec<Vec<usize>> = (0..1usize << n)
        .map(|mask| (0..n).map(|i| 2 * i + (mask >> i & 1)).collect())
        .collect();
    graph_with_cliques(f, labels, cliques, 1 << (n - 2))
}

fn words(n: usize, q: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..q.pow(n as u32)).map(move |mut code| {
        let mut w = vec![0u8; n];
        for x in w.iter_mut().rev() {
            *x = (code % q) as u8;
            code /= q;
        }
        w
    })
}

fn word_label(w: &[u8]) -> String {
    w.iter().map(|&x| char::from_digit(x as u32, 10).unwrap()).collect()
}

/// Hamming graph H(n, q) on words over `{0..q-1}`; cliques are the lines
/// (all words agreeing outside one coordinate).
pub fn build_hamming(n: u32, q: u32) -> Result<(Graph, CliqueSystem)> {
    let f = Family::Hamming { n, q };
    f.validate()?;
    let (n, q) = (n as usize, q as usize);
    let labels: Vec<String> = words(n, q).map(|w| word_label(&w)).collect();
    // word code = sum w_j q^{n-1-j}
    let mut cliques = Vec::new();
    for i in 0..n {
        let stride = q.pow((n - 1 - i) as u32);
        for code in 0..q.pow(n as u32) {
            if (code / stride) % q == 0 {
                cliques.push((0..q).map(|a| code + a * stride).collect());
            }
        }
    }
    graph_with_cliques(f, labels, cliques, 1)
}

/// Label of a subset of `{1..n}`: sorted points, zero-padded, comma-joined.
pub fn johnson_label(n: u32, points: &[u32]) -> String {
    let width = n.to_string().len();
    let mut p = points.to_vec();
    p.sort_unstable();
    p.iter().map(|x| format!("{x:0width$}")).collect::<Vec<_>>().join(",")
}

fn combinations(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (1..=k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k as usize;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + 1 + i as u32 {
                cur[i] += 1;
                for j in i + 1..k as usize {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Johnson graph J(n, w) on the `w`-subsets of `{1..n}`; one clique per
/// `(w-1)`-subset, made of the `n - w + 1` blocks containing it.
pub fn build_johnson(n: u32, w: u32) -> Result<(Graph, CliqueSystem)> {
    let f = Family::Johnson { n, w };
    f.validate()?;
    let blocks = combinations(n, w);
    let labels: Vec<String> = blocks.iter().map(|b| johnson_label(n, b)).collect();
    let index: HashMap<&[u32], usize> = blocks.iter().enumerate().map(|(i, b)| (b.as_slice(), i)).collect();
    let cliques: Vec<Vec<usize>> = combinations(n, w - 1)
        .into_iter()
        .map(|base| {
            (1..=n)
                .filter(|p| !base.contains(p))
                .map(|p| {
                    let mut b = base.clone();
                    b.push(p);
                    b.sort_unstable();
                    index[b.as_slice()]
                })
                .collect()
        })
        .collect();
    graph_with_cliques(f, labels, cliques, 1)
}

/// Halved `n`-cube on even-weight words, with one clique per odd word `y`
/// (the `n` even words at Hamming distance 1 from `y`), `m = 2`.
pub fn build_halved_cube(n: u32) -> Result<(Graph, CliqueSystem)> {
    Family::HalvedCube { n }.validate()?;
    halved_cube_with_cliques(n)
}

/// Same construction as [`build_halved_cube`] without the even-`n`
/// requirement; for odd `n` the cliques exist but are not Delsarte.
pub fn halved_cube_with_cliques(n: u32) -> Result<(Graph, CliqueSystem)> {
    let f = Family::HalvedCube { n };
    let n = n as usize;
    let parity = |w: usize| w.count_ones() % 2;
    let label = |w: usize| -> String { (0..n).map(|i| if w >> (n - 1 - i) & 1 == 1 { '1' } else { '0' }).collect() };
    let even: Vec<usize> = (0..1usize << n).filter(|&w| parity(w) == 0).collect();
    let pos: HashMap<usize, usize> = even.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let labels: Vec<String> = even.iter().map(|&w| label(w)).collect();
    let cliques: Vec<Vec<usize>> = (0..1usize << n)
        .filter(|&y| parity(y) == 1)
        .map(|y| (0..n).map(|i| pos[&(y ^ (1 << i))]).collect())
        .collect();
    let g = Graph::new(meta(f), labels.clone(), clique_edges(&cliques))?;
    let s = reindex(&g, &labels, cliques, 2)?;
    Ok((g, s))
}

/// Differences generating the Shrikhande graph on Z_4^2.
const SHRIKHANDE_STEPS: [(u8, u8); 6] = [(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)];

/// The Shrikhande graph: Z_4^2, labels `ab`.
pub fn build_shrikhande() -> Result<Graph> {
    doob_graph(Family::Shrikhande, 1, 0)
}

/// Doob graph D(m, n): `m` Shrikhande factors followed by `n` copies of K_4.
/// A vertex label lists the two digits of every Shrikhande coordinate, then
/// one digit per K_4 coordinate.
pub fn build_doob(m: u32, n: u32) -> Result<Graph> {
    let f = Family::Doob { m, n };
    f.validate()?;
    doob_graph(f, m as usize, n as usize)
}

fn doob_graph(f: Family, m: usize, n: usize) -> Result<Graph> {
    let len = 2 * m + n;
    let verts: Vec<Vec<u8>> = words(len, 4).collect();
    let code = |w: &[u8]| w.iter().fold(0usize, |acc, &x| acc * 4 + x as usize);
    let mut edges = Vec::new();
    for (i, w) in verts.iter().enumerate() {
        for j in 0..m {
            for (da, db) in SHRIKHANDE_STEPS {
                let mut u = w.clone();
                u[2 * j] = (u[2 * j] + da) % 4;
                u[2 * j + 1] = (u[2 * j + 1] + db) % 4;
                edges.push((i, code(&u)));
            }
        }
        for j in 2 * m..len {
            for d in 1..4 {
                let mut u = w.clone();
                u[j] = (u[j] + d) % 4;
                edges.push((i, code(&u)));
            }
        }
    }
    let labels = verts.iter().map(|w| word_label(w)).collect();
    Graph::new(meta(f), labels, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedra() {
        let (g, s) = build_octahedron(2).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.is_regular(), Ok(2));
        assert_eq!(s.len(), 4);
        assert_eq!(s.verify(&g).unwrap().m, 1);

        let (g, s) = build_octahedron(3).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(s.len(), 8);
        let ksm = s.verify(&g).unwrap();
        assert_eq!((ksm.k, ksm.s, ksm.m), (4, 2, 2));

        let (g, s) = build_octahedron(4).unwrap();
        let ksm = s.verify(&g).unwrap();
        assert_eq!((ksm.k, ksm.s, ksm.m, s.len()), (6, 3, 4, 16));
    }

    #[test]
    fn hamming_counts() {
        let (g, s) = build_hamming(3, 2).unwrap();
        assert_eq!((g.vertex_count(), s.len()), (8, 12));
        let (g, s) = build_hamming(3, 3).unwrap();
        assert_eq!((g.vertex_count(), s.len()), (27, 27));
        let ksm = s.verify(&g).unwrap();
        assert_eq!((ksm.k, ksm.s, ksm.m), (6, 2, 1));
        let (g, s) = build_hamming(2, 4).unwrap();
        assert_eq!((g.vertex_count(), s.len(), s.s() + 1), (16, 8, 4));
    }

    #[test]
    fn johnson_counts() {
        let (g, s) = build_johnson(6, 3).unwrap();
        assert_eq!((g.vertex_count(), s.len(), s.s() + 1), (20, 15, 4));
        assert_eq!(g.is_regular(), Ok(9));
        let ksm = s.verify(&g).unwrap();
        assert_eq!((ksm.k, ksm.s, ksm.m), (9, 3, 1));
        let a = g.vertex("1,2,3").unwrap();
        let b = g.vertex("4,5,6").unwrap();
        assert_eq!(g.bfs_distances(a).unwrap()[b], 3);

        let (g, s) = build_johnson(8, 4).unwrap();
        assert_eq!((g.vertex_count(), s.s() + 1), (70, 5));
        assert_eq!(johnson_label(12, &[3, 1, 10]), "01,03,10");
    }

    #[test]
    fn halved_cubes() {
        let (g, s) = build_halved_cube(4).unwrap();
        assert_eq!(g.vertex_count(), 8);
        let ksm = s.verify(&g).unwrap();
        assert_eq!((ksm.s + 1, ksm.m), (4, 2));
        let (g, s) = build_halved_cube(6).unwrap();
        assert_eq!((g.vertex_count(), g.is_regular().unwrap(), s.s() + 1), (32, 15, 6));
        assert!(build_halved_cube(5).is_err());
        let (g, s) = halved_cube_with_cliques(5).unwrap();
        assert_eq!(s.verify(&g).unwrap().m, 2);
    }

    #[test]
    fn shrikhande_and_doob() {
        let g = build_shrikhande().unwrap();
        assert_eq!(g.vertex_count(), 16);
        assert_eq!(g.is_regular(), Ok(6));
        assert_eq!(g.diameter().unwrap(), 2);
        let d11 = build_doob(1, 1).unwrap();
        assert_eq!((d11.vertex_count(), d11.is_regular().unwrap()), (64, 9));
    }
}
