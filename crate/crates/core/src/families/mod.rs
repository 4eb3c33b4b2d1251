//! Constructors for the graph families, their clique systems and their
//! closed-form parameters.
//!
//! Families are addressed by `name:params` strings such as `johnson:6,3`,
//! `grassmann:6,3,2` (n, d, q) or `dual_polar_D:3,2` (d, q).

mod classical;
mod qanalog;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::gfq::{gaussian_binomial, DEFAULT_CAP};
use crate::graph::{CliqueSystem, Graph, IntersectionArray};

pub use classical::{
    build_doob, build_halved_cube, build_hamming, build_johnson, build_octahedron, build_shrikhande,
    halved_cube_with_cliques, johnson_label,
};
pub use qanalog::{build_dual_polar_d, build_grassmann, dual_polar_subspaces};

/// A graph family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Octahedron { n: u32 },
    Hamming { n: u32, q: u32 },
    Johnson { n: u32, w: u32 },
    HalvedCube { n: u32 },
    Shrikhande,
    Doob { m: u32, n: u32 },
    Grassmann { n: u32, d: u32, q: u32 },
    DualPolarD { d: u32, q: u32 },
}

/// A constructed family member.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub family: Family,
    pub graph: Graph,
    /// The family's Delsarte clique system, when it has one.
    pub cliques: Option<CliqueSystem>,
}

/// Expected parameters of a family member, in closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub k: u64,
    /// `(s + 1, m)` of the clique system.
    pub clique: Option<(u64, u64)>,
    pub array: IntersectionArray,
}

pub(crate) fn gauss(a: u32, b: u32, q: u32) -> u64 {
    gaussian_binomial(a, b, q as u64)
        .to_u64()
        .expect("Gaussian binomial fits in u64")
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Octahedron { .. } => "octahedron",
            Family::Hamming { .. } => "hamming",
            Family::Johnson { .. } => "johnson",
            Family::HalvedCube { .. } => "halved_cube",
            Family::Shrikhande => "shrikhande",
            Family::Doob { .. } => "doob",
            Family::Grassmann { .. } => "grassmann",
            Family::DualPolarD { .. } => "dual_polar_D",
        }
    }

    pub fn params(&self) -> Vec<u32> {
        match *self {
            Family::Octahedron { n } | Family::HalvedCube { n } => vec![n],
            Family::Hamming { n, q } => vec![n, q],
            Family::Johnson { n, w } => vec![n, w],
            Family::Shrikhande => vec![],
            Family::Doob { m, n } => vec![m, n],
            Family::Grassmann { n, d, q } => vec![n, d, q],
            Family::DualPolarD { d, q } => vec![d, q],
        }
    }

    /// Checks the per-family parameter preconditions.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParams(format!("{self}: {msg}")));
        let field_ok = |q: u32| crate::gfq::SUPPORTED_ORDERS.contains(&q);
        match *self {
            Family::Octahedron { n } if n < 2 => bad("need n >= 2"),
            Family::Hamming { n, q } if n < 1 || !(2..=10).contains(&q) => bad("need n >= 1 and 2 <= q <= 10"),
            Family::Johnson { n, w } if w < 1 || 2 * w > n => bad("need 1 <= w and 2w <= n"),
            Family::HalvedCube { n } if n < 4 => bad("need n >= 4"),
            Family::HalvedCube { n } if n % 2 == 1 => Err(Error::CliquesNotDelsarte(format!(
                "halved {n}-cube: cliques are Delsarte only for even n"
            ))),
            Family::Doob { m, .. } if m < 1 => bad("need m >= 1"),
            Family::Grassmann { n, d, q } if d < 1 || 2 * d > n || !field_ok(q) => {
                bad("need 1 <= d, 2d <= n and a supported field order")
            }
            Family::DualPolarD { d, q } if d < 2 || !field_ok(q) => bad("need d >= 2 and a supported field order"),
            _ => Ok(()),
        }
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> BigUint {
        let big = BigUint::from;
        match *self {
            Family::Octahedron { n } => big(2 * n),
            Family::Hamming { n, q } => BigUint::from(q).pow(n),
            Family::Johnson { n, w } => BigUint::from(binom(n as u64, w as u64)),
            Family::HalvedCube { n } => BigUint::from(2u32).pow(n - 1),
            Family::Shrikhande => big(16),
            Family::Doob { m, n } => BigUint::from(16u32).pow(m) * BigUint::from(4u32).pow(n),
            Family::Grassmann { n, d, q } => gaussian_binomial(n, d, q as u64),
            Family::DualPolarD { d, q } => crate::gfq::eq5_product(d, q as u64),
        }
    }

    /// Degree, clique parameters and intersection array from closed formulas.
    pub fn expected(&self) -> Result<FamilySpec> {
        self.validate()?;
        let (b, c): (Vec<u64>, Vec<u64>) = match *self {
            Family::Octahedron { n } => {
                let k = 2 * n as u64 - 2;
                (vec![k, 1], vec![1, k])
            }
            Family::Hamming { n, q } => hamming_array(n, q),
            Family::Johnson { n, w } => (0..w as u64)
                .map(|i| ((w as u64 - i) * (n as u64 - w as u64 - i), (i + 1) * (i + 1)))
                .unzip(),
            Family::HalvedCube { n } => (0..n as u64 / 2)
                .map(|i| (binom(n as u64 - 2 * i, 2), binom(2 * i + 2, 2)))
                .unzip(),
            Family::Shrikhande => hamming_array(2, 4),
            Family::Doob { m, n } => hamming_array(2 * m + n, 4),
            Family::Grassmann { n, d, q } => (0..d)
                .map(|i| {
                    let qq = q as u64;
                    let b = qq.pow(2 * i + 1) * gauss(d - i, 1, q) * gauss(n - d - i, 1, q);
                    let c = gauss(i + 1, 1, q).pow(2);
                    (b, c)
                })
                .unzip(),
            Family::DualPolarD { d, q } => (0..d)
                .map(|i| ((q as u64).pow(i) * gauss(d - i, 1, q), gauss(i + 1, 1, q)))
                .unzip(),
        };
        let array = IntersectionArray::of_graph(b, c)?;
        let clique = match *self {
            Family::Octahedron { n } => Some((n as u64, 1u64 << (n - 2))),
            Family::Hamming { q, .. } => Some((q as u64, 1)),
            Family::Johnson { n, w } => Some(((n - w + 1) as u64, 1)),
            Family::HalvedCube { n } => Some((n as u64, 2)),
            Family::Grassmann { n, d, q } => Some((gauss(n - d + 1, 1, q), 1)),
            Family::Shrikhande | Family::Doob { .. } | Family::DualPolarD { .. } => None,
        };
        Ok(FamilySpec {
            family: *self,
            k: array.k(),
            clique,
            array,
        })
    }

    /// Builds the graph (and clique system) with the default cap.
    pub fn build(&self) -> Result<FamilyInstance> {
        self.build_capped(DEFAULT_CAP)
    }

    pub fn build_capped(&self, cap: usize) -> Result<FamilyInstance> {
        self.validate()?;
        let count = self.vertex_count();
        if count > BigUint::from(cap) {
            return Err(Error::EnumerationTooLarge {
                count: count.to_u128().unwrap_or(u128::MAX),
                cap,
            });
        }
        let (graph, cliques) = match *self {
            Family::Octahedron { n } => with_cliques(build_octahedron(n)?),
            Family::Hamming { n, q } => with_cliques(build_hamming(n, q)?),
            Family::Johnson { n, w } => with_cliques(build_johnson(n, w)?),
            Family::HalvedCube { n } => with_cliques(build_halved_cube(n)?),
            Family::Shrikhande => (build_shrikhande()?, None),
            Family::Doob { m, n } => (build_doob(m, n)?, None),
            Family::Grassmann { n, d, q } => with_cliques(build_grassmann(n, d, q, cap)?),
            Family::DualPolarD { d, q } => (build_dual_polar_d(d, q, cap)?, None),
        };
        Ok(FamilyInstance {
            family: *self,
            graph,
            cliques,
        })
    }
}

fn with_cliques((g, s): (Graph, CliqueSystem)) -> (Graph, Option<CliqueSystem>) {
    (g, Some(s))
}

fn hamming_array(n: u32, q: u32) -> (Vec<u64>, Vec<u64>) {
    (0..n as u64).map(|i| ((n as u64 - i) * (q as u64 - 1), i + 1)).unzip()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params();
        if params.is_empty() {
            return write!(f, "{}", self.name());
        }
        let p: Vec<String> = params.iter().map(u32::to_string).collect();
        write!(f, "{}:{}", self.name(), p.join(","))
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params: Vec<u32> = if rest.trim().is_empty() {
            vec![]
        } else {
            rest.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidParams(format!("bad parameter {p:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let family = match name.trim() {
            "octahedron" => {
                arity(1)?;
                Family::Octahedron { n: params[0] }
            }
            "hamming" => {
                arity(2)?;
                Family::Hamming { n: params[0], q: params[1] }
            }
            "johnson" => {
                arity(2)?;
                Family::Johnson { n: params[0], w: params[1] }
            }
            "halved_cube" => {
                arity(1)?;
                Family::HalvedCube { n: params[0] }
            }
            "shrikhande" => {
                arity(0)?;
                Family::Shrikhande
            }
            "doob" => {
                arity(2)?;
                Family::Doob { m: params[0], n: params[1] }
            }
            "grassmann" => {
                arity(3)?;
                Family::Grassmann {
                    n: params[0],
                    d: params[1],
                    q: params[2],
                }
            }
            "dual_polar_D" => {
                arity(2)?;
                Family::DualPolarD { d: params[0], q: params[1] }
            }
            other => return Err(Error::InvalidParams(format!("unknown family {other:?}"))),
        };
        Ok(family)
    }
}
