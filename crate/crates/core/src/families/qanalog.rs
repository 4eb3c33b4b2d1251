use std::collections::HashMap;
use std::sync::Arc;

use super::Family;
use crate::error::{Error, Result};
use crate::gfq::{enumerate_subspaces_capped, is_totally_isotropic, make_field, QuadraticForm, Subspace};
use crate::graph::{CliqueSystem, Graph, GraphMeta};

/// Candidate subspaces enumerated before filtering may exceed the vertex cap
/// by this factor.
const CANDIDATE_FACTOR: usize = 64;

/// Groups the vertices by each of their hyperplanes: vertices sharing a
/// `(d-1)`-subspace.
fn hyperplane_classes(subspaces: &[Subspace]) -> Vec<Vec<usize>> {
    let d = subspaces.first().map_or(0, Subspace::dim);
    let mut classes: HashMap<Subspace, Vec<usize>> = HashMap::new();
    for (i, s) in subspaces.iter().enumerate() {
        for h in s.subspaces_of_dim(d - 1) {
            classes.entry(h).or_default().push(i);
        }
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort();
    out
}

fn pair_edges(classes: &[Vec<usize>]) -> Vec<(usize, usize)> {
    classes
        .iter()
        .flat_map(|c| c.iter().enumerate().flat_map(move |(i, &u)| c[i + 1..].iter().map(move |&v| (u, v))))
        .collect()
}

fn graph_on(f: Family, subspaces: &[Subspace], classes: &[Vec<usize>]) -> Result<(Graph, Vec<usize>)> {
    let labels: Vec<String> = subspaces.iter().map(Subspace::label).collect();
    let g = Graph::new(GraphMeta::new(f.name(), &f.params()), labels.clone(), pair_edges(classes))?;
    let map = labels.iter().map(|l| g.vertex(l).expect("label present")).collect();
    Ok((g, map))
}

/// Grassmann graph J_q(n, d): `d`-subspaces of F_q^n, adjacent when they
/// meet in dimension `d - 1`. The clique system consists of the stars of
/// `(d-1)`-subspaces, each of size `[n-d+1, 1]_q`.
pub fn build_grassmann(n: u32, d: u32, q: u32, cap: usize) -> Result<(Graph, CliqueSystem)> {
    let f = Family::Grassmann { n, d, q };
    f.validate()?;
    let field = Arc::new(make_field(q)?);
    let subspaces = enumerate_subspaces_capped(n as usize, d as usize, &field, cap)?;
    let classes = hyperplane_classes(&subspaces);
    let (g, map) = graph_on(f, &subspaces, &classes)?;
    let cliques = classes.into_iter().map(|c| c.into_iter().map(|v| map[v]).collect()).collect();
    Ok((g, CliqueSystem::new(cliques, 1)?))
}

/// Maximal totally isotropic subspaces of F_q^{2d} under the hyperbolic form.
pub fn dual_polar_subspaces(d: u32, q: u32, cap: usize) -> Result<Vec<Subspace>> {
    Family::DualPolarD { d, q }.validate()?;
    let field = Arc::new(make_field(q)?);
    let form = QuadraticForm::hyperbolic(d as usize);
    let candidates = enumerate_subspaces_capped(2 * d as usize, d as usize, &field, cap.saturating_mul(CANDIDATE_FACTOR))?;
    let ti: Vec<Subspace> = candidates.into_iter().filter(|s| is_totally_isotropic(s, &form)).collect();
    if ti.len() > cap {
        return Err(Error::EnumerationTooLarge {
            count: ti.len() as u128,
            cap,
        });
    }
    Ok(ti)
}

/// Dual polar graph D_d(q): maximal totally isotropic subspaces, adjacent
/// when they meet in dimension `d - 1`. Every `(d-1)`-dimensional totally
/// isotropic subspace lies in exactly two of them, so edges come from
/// shared hyperplanes.
pub fn build_dual_polar_d(d: u32, q: u32, cap: usize) -> Result<Graph> {
    let f = Family::DualPolarD { d, q };
    let subspaces = dual_polar_subspaces(d, q, cap)?;
    let classes = hyperplane_classes(&subspaces);
    Ok(graph_on(f, &subspaces, &classes)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::{intersection_dim, DEFAULT_CAP};

    #[test]
    fn grassmann_4_2_2() {
        let (g, s) = build_grassmann(4, 2, 2, DEFAULT_CAP).unwrap();
        assert_eq!(g.vertex_count(), 35);
        assert_eq!(g.is_regular(), Ok(18));
        assert_eq!(s.s() + 1, 7);
        let ksm = s.verify(&g).unwrap();
        assert_eq!((ksm.k, ksm.m), (18, 1));
    }

    #[test]
    fn grassmann_4_2_3_count() {
        let (g, _) = build_grassmann(4, 2, 3, DEFAULT_CAP).unwrap();
        assert_eq!(g.vertex_count(), 130);
    }

    #[test]
    fn grassmann_adjacency_matches_intersection_dimension() {
        let field = Arc::new(make_field(2).unwrap());
        let subs = enumerate_subspaces_capped(5, 2, &field, DEFAULT_CAP).unwrap();
        let (g, _) = build_grassmann(5, 2, 2, DEFAULT_CAP).unwrap();
        for a in &subs {
            for b in &subs {
                let adj = g.is_adjacent(g.vertex(&a.label()).unwrap(), g.vertex(&b.label()).unwrap());
                assert_eq!(adj, intersection_dim(a, b).unwrap() == 1);
            }
        }
    }

    #[test]
    fn small_dual_polar_graphs() {
        // D_2(2) is K_{3,3}
        let g = build_dual_polar_d(2, 2, DEFAULT_CAP).unwrap();
        assert_eq!((g.vertex_count(), g.is_regular().unwrap()), (6, 3));
        assert!(matches!(g.is_bipartite(), crate::graph::Bipartiteness::Bipartite(_)));
        assert_eq!(g.edge_count(), 9);

        let g = build_dual_polar_d(3, 2, DEFAULT_CAP).unwrap();
        assert_eq!((g.vertex_count(), g.is_regular().unwrap()), (30, 7));

        let g = build_dual_polar_d(2, 3, DEFAULT_CAP).unwrap();
        assert_eq!((g.vertex_count(), g.is_regular().unwrap()), (8, 4));
    }

    #[test]
    fn dual_polar_adjacency_is_pairwise() {
        let subs = dual_polar_subspaces(3, 2, DEFAULT_CAP).unwrap();
        let g = build_dual_polar_d(3, 2, DEFAULT_CAP).unwrap();
        for a in &subs {
            for b in &subs {
                let adj = g.is_adjacent(g.vertex(&a.label()).unwrap(), g.vertex(&b.label()).unwrap());
                assert_eq!(adj, intersection_dim(a, b).unwrap() == 2);
            }
        }
    }
}
