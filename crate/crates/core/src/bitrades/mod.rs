//! Bitrades: pairs of disjoint independent vertex sets `(T0, T1)` meeting
//! every clique of a Delsarte system in one vertex each or not at all.
//!
//! The checks here compute each characterization independently so that their
//! agreement can be tested rather than assumed.

mod constructions;
mod criteria;
mod designs;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::VertexFunction;

pub use constructions::{
    double_pasch, min_bitrade, min_bitrade_grassmann, min_bitrade_halved_cube, min_bitrade_hamming,
    min_bitrade_johnson, min_bitrade_octahedron, pseudo_bitrade_doob, DoobSplit,
};
pub use criteria::{
    check_criterion_a, check_criterion_b, check_criterion_c, check_eigen_criterion, check_minimality,
    check_subgraph_dr, verify_bitrade, verify_delsarte_pair, verify_delsarte_pair_with_array, CriterionVerdict,
    DelsarteReport, MinimalityVerdict, SubgraphDr, VerificationReport,
};
pub use designs::{
    check_clique_design, design_difference, extended_hamming_code_8, latin_square_design, latin_squares,
    DesignVerdict,
};

/// A candidate bitrade in a host graph, by vertex index. Both sides are
/// sorted, nonempty, disjoint and independent in the host.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bitrade {
    t0: Vec<usize>,
    t1: Vec<usize>,
}

impl Bitrade {
    pub fn new(g: &Graph, mut t0: Vec<usize>, mut t1: Vec<usize>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidBitrade(msg));
        t0.sort_unstable();
        t1.sort_unstable();
        if t0.is_empty() || t1.is_empty() {
            return bad("both sides must be nonempty".into());
        }
        let n = g.vertex_count();
        for side in [&t0, &t1] {
            if let Some(&v) = side.iter().find(|&&v| v >= n) {
                return bad(format!("vertex {v} out of range"));
            }
            if side.windows(2).any(|w| w[0] == w[1]) {
                return bad("repeated vertex".into());
            }
        }
        let left: HashSet<usize> = t0.iter().copied().collect();
        if let Some(&v) = t1.iter().find(|v| left.contains(v)) {
            return bad(format!("{} lies in both sides", g.label(v)));
        }
        for (name, side) in [("T0", &t0), ("T1", &t1)] {
            for &u in side.iter() {
                if let Some(&v) = g.neighbors(u).iter().find(|v| side.binary_search(v).is_ok()) {
                    return bad(format!("{name} is not independent: {} ~ {}", g.label(u), g.label(v)));
                }
            }
        }
        Ok(Self { t0, t1 })
    }

    pub fn t0(&self) -> &[usize] {
        &self.t0
    }

    pub fn t1(&self) -> &[usize] {
        &self.t1
    }

    /// `T0 ∪ T1`, sorted.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.t0.iter().chain(&self.t1).copied().collect();
        s.sort_unstable();
        s
    }

    /// `|T0| + |T1|`.
    pub fn len(&self) -> usize {
        self.t0.len() + self.t1.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `f^T`: `+1` on `T0`, `-1` on `T1`, `0` elsewhere.
    pub fn function(&self, n: usize) -> VertexFunction {
        VertexFunction::signed(n, &self.t0, &self.t1)
    }

    /// Union with a bitrade whose support is disjoint from this one.
    pub fn union(&self, g: &Graph, other: &Bitrade) -> Result<Bitrade> {
        let cat = |a: &[usize], b: &[usize]| a.iter().chain(b).copied().collect::<Vec<_>>();
        Bitrade::new(g, cat(&self.t0, &other.t0), cat(&self.t1, &other.t1))
    }

    /// Every way of moving one vertex `v` of `T1` to a neighbor `u` outside
    /// `T0 ∪ T1` that keeps `T1` independent, in lexicographic `(v, u)` order.
    pub fn one_vertex_corruptions<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = Bitrade> + 'a {
        let support = self.support();
        self.t1.iter().flat_map(move |&v| {
            let support = support.clone();
            g.neighbors(v).iter().filter_map(move |&u| {
                if support.binary_search(&u).is_ok() {
                    return None;
                }
                let clash = g.neighbors(u).iter().any(|w| *w != v && self.t1.binary_search(w).is_ok());
                if clash {
                    return None;
                }
                let t1: Vec<usize> = self.t1.iter().map(|&x| if x == v { u } else { x }).collect();
                Some(Bitrade::new(g, self.t0.clone(), t1).expect("corruption preserves well-formedness"))
            })
        })
    }

    /// Every way of deleting one vertex from a side with at least two.
    pub fn one_vertex_deletions(&self) -> impl Iterator<Item = Bitrade> + '_ {
        let drop = |side: &[usize], i: usize| -> Vec<usize> {
            side.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect()
        };
        let from_t0 = (0..self.t0.len()).filter(|_| self.t0.len() > 1).map(move |i| Bitrade {
            t0: drop(&self.t0, i),
            t1: self.t1.clone(),
        });
        let from_t1 = (0..self.t1.len()).filter(|_| self.t1.len() > 1).map(move |i| Bitrade {
            t0: self.t0.clone(),
            t1: drop(&self.t1, i),
        });
        from_t0.chain(from_t1)
    }

    pub fn to_labeled(&self, g: &Graph, host: impl Into<String>) -> LabeledBitrade {
        let names = |s: &[usize]| s.iter().map(|&v| g.label(v).to_owned()).collect();
        LabeledBitrade {
            host: host.into(),
            t0: names(&self.t0),
            t1: names(&self.t1),
        }
    }
}

/// Serialized form: `{"host": "johnson:6,3", "T0": [...], "T1": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledBitrade {
    pub host: String,
    #[serde(rename = "T0")]
    pub t0: Vec<String>,
    #[serde(rename = "T1")]
    pub t1: Vec<String>,
}

impl LabeledBitrade {
    /// Resolves labels in `g` and validates the pair.
    pub fn locate(&self, g: &Graph) -> Result<Bitrade> {
        let find = |s: &[String]| s.iter().map(|l| g.vertex_or_err(l)).collect::<Result<Vec<_>>>();
        Bitrade::new(g, find(&self.t0)?, find(&self.t1)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidBitrade(format!("bad bitrade JSON: {e}")))
    }
}
