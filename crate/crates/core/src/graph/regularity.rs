use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Graph, UNREACHABLE};
use crate::error::{Error, Result};

/// Intersection array `(b_0, ..., b_{ρ-1}; c_1, ..., c_ρ)` of a completely
/// regular set in a `k`-regular graph, with `a_i = k - b_i - c_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntersectionArray {
    k: u64,
    b: Vec<u64>,
    c: Vec<u64>,
}

impl IntersectionArray {
    pub fn new(k: u64, b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        if b.len() != c.len() {
            return Err(Error::InvalidParams(format!(
                "intersection array needs as many b's as c's, got {} and {}",
                b.len(),
                c.len()
            )));
        }
        let arr = Self { k, b, c };
        for i in 0..=arr.rho() {
            if i < arr.rho() && arr.b(i) == 0 {
                return Err(Error::InvalidParams(format!("b_{i} = 0 before the covering radius")));
            }
            if i >= 1 && arr.c(i) == 0 {
                return Err(Error::InvalidParams(format!("c_{i} = 0")));
            }
            if arr.b(i) + arr.c(i) > k {
                return Err(Error::InvalidParams(format!("a_{i} would be negative")));
            }
        }
        Ok(arr)
    }

    /// Array of a distance-regular graph, where `k = b_0`.
    pub fn of_graph(b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        let k = b.first().copied().unwrap_or(0);
        Self::new(k, b, c)
    }

    /// Covering radius (diameter, for a graph's array).
    pub fn rho(&self) -> usize {
        self.b.len()
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `b_i`, with `b_ρ = 0`.
    pub fn b(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn a(&self, i: usize) -> u64 {
        self.k - self.b(i) - self.c(i)
    }

    pub fn bs(&self) -> &[u64] {
        &self.b
    }

    pub fn cs(&self) -> &[u64] {
        &self.c
    }

    /// `k_i = |Γ_i(x)|` for a distance-regular graph: `k_0 = 1`,
    /// `k_{i+1} = k_i b_i / c_{i+1}`.
    pub fn shell_sizes(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for i in 0..self.rho() {
            let next = out[i] * self.b(i) / self.c(i + 1);
            out.push(next);
        }
        out
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.b), join(&self.c))
    }
}

/// Why a set failed to be completely regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrViolation {
    pub vertex: usize,
    /// Distance of `vertex` from the set, if reachable.
    pub distance: Option<u32>,
    pub reason: String,
}

impl fmt::Display for CrViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.distance {
            Some(d) => write!(f, "vertex {} at distance {}: {}", self.vertex, d, self.reason),
            None => write!(f, "vertex {}: {}", self.vertex, self.reason),
        }
    }
}

/// Checks that `set` is completely regular and returns its intersection array.
pub fn completely_regular_check(g: &Graph, set: &[usize]) -> std::result::Result<IntersectionArray, CrViolation> {
    if set.is_empty() {
        return Err(CrViolation {
            vertex: 0,
            distance: None,
            reason: "empty set".into(),
        });
    }
    let k = g.is_regular().map_err(|w| CrViolation {
        vertex: w.vertex,
        distance: None,
        reason: format!("graph is not regular: {w}"),
    })? as u64;
    let dist = g.multi_source_bfs(set);
    from_distance_partition(g, k, &dist)
}

fn from_distance_partition(g: &Graph, k: u64, dist: &[u32]) -> std::result::Result<IntersectionArray, CrViolation> {
    if let Some(v) = dist.iter().position(|&d| d == UNREACHABLE) {
        return Err(CrViolation {
            vertex: v,
            distance: None,
            reason: "unreachable from the set".into(),
        });
    }
    let rho = *dist.iter().max().unwrap() as usize;
    let mut fwd: Vec<Option<u64>> = vec![None; rho + 1];
    let mut back: Vec<Option<u64>> = vec![None; rho + 1];
    for y in 0..g.vertex_count() {
        let i = dist[y];
        let (mut up, mut down) = (0u64, 0u64);
        for &z in g.neighbors(y) {
            if dist[z] == i + 1 {
                up += 1;
            } else if dist[z] + 1 == i {
                down += 1;
            }
        }
        for (slot, found, name) in [(&mut fwd[i as usize], up, "b"), (&mut back[i as usize], down, "c")] {
            match *slot {
                None => *slot = Some(found),
                Some(expected) if expected != found => {
                    return Err(CrViolation {
                        vertex: y,
                        distance: Some(i),
                        reason: format!("{name}_{i} = {found}, but another vertex gives {expected}"),
                    });
                }
                _ => {}
            }
        }
    }
    let b = fwd[..rho].iter().map(|x| x.unwrap()).collect();
    let c = back[1..].iter().map(|x| x.unwrap()).collect();
    IntersectionArray::new(k, b, c).map_err(|e| CrViolation {
        vertex: 0,
        distance: None,
        reason: e.to_string(),
    })
}

/// Why a graph failed to be distance-regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DrViolation {
    Singleton(CrViolation),
    Mismatch {
        vertex: usize,
        array: IntersectionArray,
        expected: IntersectionArray,
    },
}

impl fmt::Display for DrViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DrViolation::Singleton(v) => write!(f, "singleton not completely regular: {v}"),
            DrViolation::Mismatch { vertex, array, expected } => {
                write!(f, "vertex {vertex} has array {array}, vertex 0 has {expected}")
            }
        }
    }
}

/// Runs [`completely_regular_check`] on every singleton and requires a common array.
pub fn distance_regularity_check(g: &Graph) -> std::result::Result<IntersectionArray, DrViolation> {
    distance_regularity_on(g, &(0..g.vertex_count()).collect::<Vec<_>>())
}

/// Same as [`distance_regularity_check`] but only over the given base vertices
/// (plus vertex 0 as reference). Useful as a spot check on very large
/// vertex-transitive graphs.
pub fn distance_regularity_on(g: &Graph, vertices: &[usize]) -> std::result::Result<IntersectionArray, DrViolation> {
    let k = g.is_regular().map_err(|w| {
        DrViolation::Singleton(CrViolation {
            vertex: w.vertex,
            distance: None,
            reason: format!("graph is not regular: {w}"),
        })
    })? as u64;
    let singleton = |x: usize| from_distance_partition(g, k, &g.multi_source_bfs(&[x])).map_err(DrViolation::Singleton);
    let expected = singleton(0)?;
    vertices
        .par_iter()
        .try_for_each(|&x| {
            let array = singleton(x)?;
            if array == expected {
                Ok(())
            } else {
                Err(DrViolation::Mismatch {
                    vertex: x,
                    array,
                    expected: expected.clone(),
                })
            }
        })
        .map(|()| expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{cycle, from_edges};

    #[test]
    fn array_accessors() {
        let a = IntersectionArray::of_graph(vec![4, 3, 2, 1], vec![1, 2, 3, 4]).unwrap();
        assert_eq!(a.rho(), 4);
        assert_eq!(a.b(4), 0);
        assert_eq!(a.c(0), 0);
        assert_eq!(a.a(2), 0);
        assert_eq!(a.shell_sizes(), vec![1, 4, 6, 4, 1]);
        assert_eq!(a.to_string(), "(4,3,2,1;1,2,3,4)");
    }

    #[test]
    fn array_validation() {
        assert!(IntersectionArray::of_graph(vec![3, 0], vec![1, 2]).is_err());
        assert!(IntersectionArray::of_graph(vec![3], vec![0]).is_err());
        assert!(IntersectionArray::of_graph(vec![3, 2], vec![1]).is_err());
        assert!(IntersectionArray::new(3, vec![3], vec![4]).is_err());
    }

    #[test]
    fn cycles_are_distance_regular() {
        let arr = distance_regularity_check(&cycle(6)).unwrap();
        assert_eq!(arr, IntersectionArray::of_graph(vec![2, 1, 1], vec![1, 1, 2]).unwrap());
        let arr = distance_regularity_check(&cycle(7)).unwrap();
        assert_eq!(arr.to_string(), "(2,1,1;1,1,1)");
    }

    #[test]
    fn star_is_not_distance_regular() {
        let star = from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(distance_regularity_check(&star).is_err());
    }

    #[test]
    fn whole_vertex_set_has_radius_zero() {
        let g = cycle(5);
        let all: Vec<usize> = (0..5).collect();
        let arr = completely_regular_check(&g, &all).unwrap();
        assert_eq!(arr.rho(), 0);
        assert_eq!(arr.a(0), 2);
    }

    #[test]
    fn edge_of_hexagon_is_completely_regular() {
        // distance partition {0,1} | {2,5} | {3,4}
        let arr = completely_regular_check(&cycle(6), &[0, 1]).unwrap();
        assert_eq!(arr.to_string(), "(1,1;1,1)");
        assert_eq!(arr.a(0), 1);
        assert_eq!(arr.a(2), 1);
    }

    #[test]
    fn two_adjacent_plus_one_in_hexagon_is_not() {
        let err = completely_regular_check(&cycle(6), &[0, 1, 3]).unwrap_err();
        assert!(err.distance.is_some());
    }
}
