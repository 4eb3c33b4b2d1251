use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{intersection_matrix_eigenvalues, rat, standard_eigenvector, theta_min, Rational};
use crate::error::{Error, Result};
use crate::graph::{completely_regular_check, CliqueSystem, Graph, IntersectionArray};

/// A rational-valued function on the vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFunction {
    values: Vec<Rational>,
}

impl VertexFunction {
    pub fn new(values: Vec<Rational>) -> Self {
        Self { values }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            values: vec![Rational::zero(); n],
        }
    }

    /// Characteristic function of `set`.
    pub fn indicator(n: usize, set: &[usize]) -> Self {
        let mut f = Self::zeros(n);
        for &v in set {
            f.values[v] = Rational::one();
        }
        f
    }

    /// `+1` on `plus`, `-1` on `minus`, `0` elsewhere.
    pub fn signed(n: usize, plus: &[usize], minus: &[usize]) -> Self {
        let mut f = Self::zeros(n);
        for &v in plus {
            f.values[v] = rat(1);
        }
        for &v in minus {
            f.values[v] = rat(-1);
        }
        f
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, v: usize) -> &Rational {
        &self.values[v]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&v| !self.values[v].is_zero()).collect()
    }

    fn sum_over(&self, set: &[usize]) -> Rational {
        set.iter().map(|&v| &self.values[v]).sum()
    }
}

/// `δ^θ_C`: the value `ν_i` on every vertex at distance `i` from `set`.
pub fn delta_function(g: &Graph, set: &[usize], theta: &Rational) -> Result<VertexFunction> {
    let array = completely_regular_check(g, set).map_err(|v| Error::NotCompletelyRegular(v.to_string()))?;
    let nu = standard_eigenvector(&array, theta)?;
    let dist = g.multi_source_bfs(set);
    Ok(VertexFunction::new(dist.iter().map(|&d| nu[d as usize].clone()).collect()))
}

/// Outcome of checking `sum_{y ~ x} f(y) = θ f(x)` at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenVerdict {
    pub holds: bool,
    /// First failing vertex with its neighbor sum and `θ f(x)`.
    pub witness: Option<(usize, Rational, Rational)>,
}

fn eigen_equation(g: &Graph, f: &VertexFunction, theta: &Rational) -> EigenVerdict {
    assert_eq!(f.len(), g.vertex_count(), "function length must match the vertex count");
    let witness = (0..g.vertex_count()).into_par_iter().find_map_first(|x| {
        let lhs = f.sum_over(g.neighbors(x));
        let rhs = theta * f.get(x);
        (lhs != rhs).then_some((x, lhs, rhs))
    });
    EigenVerdict {
        holds: witness.is_none(),
        witness,
    }
}

/// Exact check that `f` is an eigenfunction of `g` with eigenvalue `theta`.
pub fn verify_eigenfunction(g: &Graph, f: &VertexFunction, theta: &Rational) -> Result<EigenVerdict> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    Ok(eigen_equation(g, f, theta))
}

/// Both sides of the clique-sum characterization of `θ_min`-eigenfunctions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSumReport {
    /// Every clique of the system sums to zero.
    pub clique_sums_zero: bool,
    pub witness_clique: Option<usize>,
    /// The eigen-equation with `θ = -k/s` holds everywhere.
    pub eigen_equation: bool,
    pub theta: Rational,
}

impl CliqueSumReport {
    pub fn agree(&self) -> bool {
        self.clique_sums_zero == self.eigen_equation
    }
}

/// For a Delsarte pair, `f` satisfies the `θ_min` eigen-equation iff `f` sums
/// to zero over every clique. Both verdicts are computed independently.
pub fn clique_sum_characterization(g: &Graph, s: &CliqueSystem, f: &VertexFunction) -> CliqueSumReport {
    let k = g.degree(0) as i64;
    let theta = Rational::new((-k).into(), (s.s() as i64).into());
    let witness_clique = s
        .cliques()
        .par_iter()
        .position_first(|c| !f.sum_over(c).is_zero());
    let eq = eigen_equation(g, f, &theta);
    CliqueSumReport {
        clique_sums_zero: witness_clique.is_none(),
        witness_clique,
        eigen_equation: eq.holds,
        theta,
    }
}

/// Both sides of the radius-one completely-regular characterization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusOneReport {
    /// `Some(λ)` if every clique meets the set in exactly `λ` vertices.
    pub constant_intersection: Option<usize>,
    /// The set is completely regular of covering radius 1 and `θ_min` is an
    /// eigenvalue of its intersection matrix.
    pub completely_regular_radius_one: bool,
    pub array: Option<IntersectionArray>,
}

impl RadiusOneReport {
    pub fn agree(&self) -> bool {
        self.constant_intersection.is_some() == self.completely_regular_radius_one
    }
}

/// For a Delsarte pair and a proper nonempty subset `set`: the set meets all
/// cliques equally iff it is completely regular of radius 1 with eigenvalue
/// `θ_min`.
pub fn radius_one_cr_characterization(g: &Graph, s: &CliqueSystem, set: &[usize]) -> Result<RadiusOneReport> {
    let n = g.vertex_count();
    if set.is_empty() || set.len() >= n {
        return Err(Error::InvalidParams("set must be a proper nonempty subset".into()));
    }
    let mut member = vec![false; n];
    for &v in set {
        member[v] = true;
    }
    let counts: Vec<usize> = s
        .cliques()
        .iter()
        .map(|c| c.iter().filter(|&&v| member[v]).count())
        .collect();
    let constant_intersection = counts.split_first().and_then(|(first, rest)| rest.iter().all(|x| x == first).then_some(*first));

    let k = g.degree(0) as i64;
    let theta = Rational::new((-k).into(), (s.s() as i64).into());
    let array = completely_regular_check(g, set).ok();
    let completely_regular_radius_one = match &array {
        Some(a) if a.rho() == 1 => intersection_matrix_eigenvalues(a)?.contains(&theta),
        _ => false,
    };
    Ok(RadiusOneReport {
        constant_intersection,
        completely_regular_radius_one,
        array,
    })
}

/// Intersection numbers of a Delsarte clique seen from a vertex at distance `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueProfile {
    /// `(s_i^+, s_{i+1}^-)` for `i = 0, ..., D-1`.
    pub counts: Vec<(usize, usize)>,
}

/// Exhaustively tabulates `|Γ_i(x) ∩ C|` and `|Γ_{i+1}(x) ∩ C|` over every
/// vertex `x` and clique `C` at distance `i`, failing if either count is not
/// constant for some `i`, is zero, or disagrees with the ratio `-ν_{i+1}/ν_i`
/// of the standard `θ_min` eigenvector.
pub fn delsarte_clique_profile(g: &Graph, s: &CliqueSystem, graph_array: &IntersectionArray) -> Result<CliqueProfile> {
    let theta = theta_min(graph_array)?;
    let nu = standard_eigenvector(graph_array, &theta)?;
    let diameter = graph_array.rho();
    let rows: Vec<Vec<u32>> = (0..g.vertex_count()).into_par_iter().map(|x| g.distances_from(x)).collect();
    let mut table: Vec<Option<(usize, usize)>> = vec![None; diameter];
    for (x, dist) in rows.iter().enumerate() {
        for (ci, c) in s.cliques().iter().enumerate() {
            let i = c.iter().map(|&v| dist[v]).min().unwrap() as usize;
            let plus = c.iter().filter(|&&v| dist[v] as usize == i).count();
            let minus = c.iter().filter(|&&v| dist[v] as usize == i + 1).count();
            if plus + minus != c.len() {
                return Err(Error::TheoremViolation(format!(
                    "clique {ci} spans more than two distance classes from vertex {x}"
                )));
            }
            if i >= diameter {
                return Err(Error::TheoremViolation(format!("clique {ci} at distance {i} = D from vertex {x}")));
            }
            match table[i] {
                None => table[i] = Some((plus, minus)),
                Some(prev) if prev != (plus, minus) => {
                    return Err(Error::TheoremViolation(format!(
                        "vertex {x}, clique {ci}: counts ({plus},{minus}) at distance {i}, elsewhere {prev:?}"
                    )));
                }
                _ => {}
            }
        }
    }
    let counts: Vec<(usize, usize)> = table
        .into_iter()
        .enumerate()
        .map(|(i, e)| e.ok_or_else(|| Error::TheoremViolation(format!("no clique at distance {i}"))))
        .collect::<Result<_>>()?;
    for (i, &(plus, minus)) in counts.iter().enumerate() {
        let balanced = rat(plus as i64) * &nu[i] + rat(minus as i64) * &nu[i + 1];
        if plus == 0 || minus == 0 || !balanced.is_zero() {
            return Err(Error::TheoremViolation(format!(
                "s_{i}^+ = {plus}, s_{}^- = {minus} do not balance ν = ({}, {})",
                i + 1,
                nu[i],
                nu[i + 1]
            )));
        }
    }
    Ok(CliqueProfile { counts })
}
