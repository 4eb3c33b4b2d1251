use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::Bitrade;
use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::{
    distance_regularity_check, max_clique_order_with_budget, CliqueSystem, Graph, IntersectionArray, IsometryWitness,
    Ksm, DEFAULT_CLIQUE_BUDGET, UNREACHABLE,
};
use crate::spectral::{rat, theta_min, verify_eigenfunction, wd_bound, wd_coefficients, Rational};

/// Hosts up to this size also get an exact maximum-clique confirmation.
const MAX_CLIQUE_CHECK_VERTICES: usize = 4096;

/// Result of checking that a clique system consists of Delsarte cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelsarteReport {
    pub ksm: Ksm,
    pub array: IntersectionArray,
    pub theta_min: Rational,
    /// `1 - k/θ_min`.
    pub delsarte_order: Rational,
    pub delsarte: bool,
    /// Exact clique number when the host is small enough to search.
    pub max_clique_order: Option<usize>,
}

impl DelsarteReport {
    /// `-k/s = θ_min`.
    pub fn theta_matches(&self) -> bool {
        Rational::new((-(self.ksm.k as i64)).into(), (self.ksm.s as i64).into()) == self.theta_min
    }
}

/// Checks that `g` is distance-regular and that every clique of `s` has the
/// Delsarte order `1 - k/θ_min`.
pub fn verify_delsarte_pair(g: &Graph, s: &CliqueSystem) -> Result<DelsarteReport> {
    let array = distance_regularity_check(g).map_err(|v| Error::NotDistanceRegular(v.to_string()))?;
    verify_delsarte_pair_with_array(g, s, array)
}

/// As [`verify_delsarte_pair`] with a host intersection array established
/// elsewhere (for hosts too large for an exhaustive distance-regularity pass).
pub fn verify_delsarte_pair_with_array(g: &Graph, s: &CliqueSystem, array: IntersectionArray) -> Result<DelsarteReport> {
    let ksm = s.verify(g).map_err(|v| Error::CliquesNotDelsarte(v.to_string()))?;
    let theta = theta_min(&array)?;
    let delsarte_order = rat(1) - rat(ksm.k as i64) / &theta;
    let delsarte = rat(ksm.s as i64 + 1) == delsarte_order;
    let max_clique_order = (g.vertex_count() <= MAX_CLIQUE_CHECK_VERTICES)
        .then(|| max_clique_order_with_budget(g, DEFAULT_CLIQUE_BUDGET).ok())
        .flatten();
    Ok(DelsarteReport {
        ksm,
        array,
        theta_min: theta,
        delsarte_order,
        delsarte,
        max_clique_order,
    })
}

/// A boolean verdict with a human-readable counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub holds: bool,
    pub witness: Option<String>,
}

impl CriterionVerdict {
    fn pass() -> Self {
        Self {
            holds: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        Self {
            holds: false,
            witness: Some(witness),
        }
    }

    fn to_json(&self) -> Value {
        json!({ "holds": self.holds, "witness": self.witness })
    }
}

fn sides(n: usize, t: &Bitrade) -> Vec<i8> {
    let mut side = vec![0i8; n];
    for &v in t.t0() {
        side[v] = 1;
    }
    for &v in t.t1() {
        side[v] = -1;
    }
    side
}

/// Every clique meets `T0` and `T1` in exactly one vertex each, or neither.
pub fn check_criterion_a(g: &Graph, s: &CliqueSystem, t: &Bitrade) -> CriterionVerdict {
    let side = sides(g.vertex_count(), t);
    let bad = s.cliques().par_iter().enumerate().find_map_first(|(i, c)| {
        let zero = c.iter().filter(|&&v| side[v] == 1).count();
        let one = c.iter().filter(|&&v| side[v] == -1).count();
        (!matches!((zero, one), (1, 1) | (0, 0))).then(|| {
            let names: Vec<&str> = c.iter().map(|&v| g.label(v)).collect();
            format!("clique {i} [{}] meets T0 in {zero} and T1 in {one}", names.join(" "))
        })
    });
    bad.map_or_else(CriterionVerdict::pass, CriterionVerdict::fail)
}

/// `f^T` is an eigenfunction with eigenvalue `theta`.
pub fn check_eigen_criterion(g: &Graph, t: &Bitrade, theta: &Rational) -> CriterionVerdict {
    let f = t.function(g.vertex_count());
    match verify_eigenfunction(g, &f, theta) {
        Ok(v) if v.holds => CriterionVerdict::pass(),
        Ok(v) => {
            let (x, lhs, rhs) = v.witness.expect("failing verdict has a witness");
            CriterionVerdict::fail(format!("at {}: neighbor sum {lhs} != θ·f = {rhs}", g.label(x)))
        }
        Err(e) => CriterionVerdict::fail(e.to_string()),
    }
}

fn theta_of(g: &Graph, s: &CliqueSystem) -> Rational {
    Rational::new((-(g.degree(0) as i64)).into(), (s.s() as i64).into())
}

/// `f^T` is an eigenfunction with eigenvalue `-k/s`.
pub fn check_criterion_b(g: &Graph, s: &CliqueSystem, t: &Bitrade) -> CriterionVerdict {
    check_eigen_criterion(g, t, &theta_of(g, s))
}

/// The subgraph induced by `T0 ∪ T1` is `k/s`-regular and bipartite with
/// parts exactly `T0` and `T1`.
pub fn check_criterion_c(g: &Graph, s: &CliqueSystem, t: &Bitrade) -> CriterionVerdict {
    let k = g.degree(0);
    if k % s.s() != 0 {
        return CriterionVerdict::fail(format!("k/s = {k}/{} is not an integer", s.s()));
    }
    let want = k / s.s();
    let side = sides(g.vertex_count(), t);
    for v in t.support() {
        let inside: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| side[u] != 0).collect();
        if let Some(&u) = inside.iter().find(|&&u| side[u] == side[v]) {
            return CriterionVerdict::fail(format!("edge {} ~ {} inside one part", g.label(v), g.label(u)));
        }
        if inside.len() != want {
            return CriterionVerdict::fail(format!(
                "{} has degree {} in the subgraph, expected {want}",
                g.label(v),
                inside.len()
            ));
        }
    }
    CriterionVerdict::pass()
}

/// Cardinality against the weight-distribution bound, and isometry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityVerdict {
    pub cardinality: usize,
    pub bound: Rational,
    pub meets_bound: bool,
    pub isometric: bool,
    pub isometry_witness: Option<IsometryWitness>,
}

impl MinimalityVerdict {
    pub fn minimal(&self) -> bool {
        self.meets_bound && self.isometric
    }

    fn to_json(&self) -> Value {
        json!({
            "cardinality": self.cardinality,
            "bound": self.bound.to_string(),
            "meets_bound": self.meets_bound,
            "isometric": self.isometric,
            "isometry_witness": self.isometry_witness.map(|w| json!({
                "u": w.u, "v": w.v, "host_distance": w.host_distance, "subgraph_distance": w.subgraph_distance,
            })),
        })
    }
}

/// For a bitrade: `|T0 ∪ T1|` equals the w.d. bound iff `Γ^T` is an isometric
/// subgraph. Both sides are computed independently; disagreement is reported
/// as a theorem violation.
pub fn check_minimality(g: &Graph, host_array: &IntersectionArray, theta: &Rational, t: &Bitrade) -> Result<MinimalityVerdict> {
    let bound = wd_bound(host_array, theta);
    let cardinality = t.len();
    let meets_bound = rat(cardinality as i64) == bound;
    let iso = g.is_isometric_subgraph(&t.support());
    if meets_bound != iso.isometric {
        return Err(Error::TheoremViolation(format!(
            "cardinality {cardinality} vs bound {bound} disagrees with isometry = {}",
            iso.isometric
        )));
    }
    Ok(MinimalityVerdict {
        cardinality,
        bound,
        meets_bound,
        isometric: iso.isometric,
        isometry_witness: iso.witness,
    })
}

/// The trade subgraph of a minimal bitrade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphDr {
    pub array: IntersectionArray,
    /// `|Γ^T_i(x)|`, common to every `x`.
    pub shells: Vec<u64>,
    /// Closed-form array the subgraph must have in a Grassmann host.
    pub expected: Option<IntersectionArray>,
}

/// `Γ^T` is distance-regular and `|Γ^T_i(x)| = |W^i|` for every vertex `x`;
/// in a Grassmann host its array is also matched against the dual polar
/// closed form.
pub fn check_subgraph_dr(g: &Graph, host_array: &IntersectionArray, theta: &Rational, t: &Bitrade) -> Result<SubgraphDr> {
    let violation = |m: String| Error::TheoremViolation(m);
    let sub = g.induced_subgraph(&t.support()).graph;
    let array = distance_regularity_check(&sub).map_err(|v| violation(format!("trade subgraph: {v}")))?;
    let mut wd = wd_coefficients(host_array, theta).abs();
    while wd.len() > 1 && wd.last().is_some_and(Zero::is_zero) {
        wd.pop();
    }
    let shells: Vec<Rational> = wd;
    (0..sub.vertex_count()).into_par_iter().try_for_each(|x| {
        let mut counts = vec![0i64; shells.len()];
        for d in sub.distances_from(x) {
            match counts.get_mut(d as usize) {
                Some(c) if d != UNREACHABLE => *c += 1,
                _ => return Err(violation(format!("{} reaches beyond the w.d. shells", sub.label(x)))),
            }
        }
        if counts.iter().zip(&shells).all(|(c, w)| rat(*c) == *w) {
            Ok(())
        } else {
            Err(violation(format!("shells {counts:?} at {} differ from |W^i|", sub.label(x))))
        }
    })?;
    let expected = match (g.meta().family.as_str(), g.meta().params.as_slice()) {
        ("grassmann", &[_, d, q]) => Some(Family::DualPolarD { d, q }.expected()?.array),
        _ => None,
    };
    if let Some(e) = &expected {
        if *e != array {
            return Err(violation(format!("trade subgraph array {array}, closed form {e}")));
        }
    }
    Ok(SubgraphDr {
        shells: array.shell_sizes(),
        array,
        expected,
    })
}

/// Everything `verify` reports about one candidate bitrade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub host: String,
    pub ksm: Ksm,
    /// `-k/s`.
    pub theta: Rational,
    pub t0: usize,
    pub t1: usize,
    pub a: CriterionVerdict,
    pub b: CriterionVerdict,
    pub c: CriterionVerdict,
    pub wd_bound: Rational,
    /// Present when all three criteria hold.
    pub minimality: Option<MinimalityVerdict>,
    /// Present when the bitrade is minimal.
    pub subgraph: Option<SubgraphDr>,
}

impl VerificationReport {
    pub fn criteria_agree(&self) -> bool {
        self.a.holds == self.b.holds && self.b.holds == self.c.holds
    }

    pub fn is_bitrade(&self) -> bool {
        self.criteria_agree() && self.a.holds
    }

    pub fn minimal(&self) -> bool {
        self.minimality.as_ref().is_some_and(MinimalityVerdict::minimal)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "host": self.host,
            "ksm": [self.ksm.k, self.ksm.s, self.ksm.m],
            "theta": self.theta.to_string(),
            "T0": self.t0,
            "T1": self.t1,
            "cardinality": self.t0 + self.t1,
            "criterion_a": self.a.to_json(),
            "criterion_b": self.b.to_json(),
            "criterion_c": self.c.to_json(),
            "criteria_agree": self.criteria_agree(),
            "wd_bound": self.wd_bound.to_string(),
            "minimality": self.minimality.as_ref().map(MinimalityVerdict::to_json),
            "minimal": self.minimal(),
            "subgraph_array": self.subgraph.as_ref().map(|s| s.array.to_string()),
            "subgraph_shells": self.subgraph.as_ref().map(|s| s.shells.clone()),
        })
    }
}

/// Runs criteria a, b, c and, for genuine bitrades, the minimality and
/// trade-subgraph checks.
pub fn verify_bitrade(g: &Graph, s: &CliqueSystem, host_array: &IntersectionArray, t: &Bitrade) -> Result<VerificationReport> {
    let ksm = s.verify(g).map_err(|v| Error::CliquesNotDelsarte(v.to_string()))?;
    let theta = theta_of(g, s);
    let a = check_criterion_a(g, s, t);
    let b = check_eigen_criterion(g, t, &theta);
    let c = check_criterion_c(g, s, t);
    let all = a.holds && b.holds && c.holds;
    let minimality = if all { Some(check_minimality(g, host_array, &theta, t)?) } else { None };
    let subgraph = match &minimality {
        Some(m) if m.minimal() => Some(check_subgraph_dr(g, host_array, &theta, t)?),
        _ => None,
    };
    Ok(VerificationReport {
        host: g.meta().to_string(),
        ksm,
        wd_bound: wd_bound(host_array, &theta),
        theta,
        t0: t.t0().len(),
        t1: t.t1().len(),
        a,
        b,
        c,
        minimality,
        subgraph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_halved_cube, build_hamming, build_johnson, halved_cube_with_cliques};

    #[test]
    fn delsarte_pairs() {
        let (g, s) = build_johnson(6, 3).unwrap();
        let r = verify_delsarte_pair(&g, &s).unwrap();
        assert!(r.delsarte && r.theta_matches());
        assert_eq!(r.delsarte_order, rat(4));
        assert_eq!(r.max_clique_order, Some(4));

        let (g, s) = build_hamming(3, 3).unwrap();
        assert!(verify_delsarte_pair(&g, &s).unwrap().delsarte);

        let (g, s) = build_halved_cube(6).unwrap();
        assert!(verify_delsarte_pair(&g, &s).unwrap().delsarte);

        let (g, s) = halved_cube_with_cliques(5).unwrap();
        let r = verify_delsarte_pair(&g, &s).unwrap();
        assert!(!r.delsarte);
        assert_eq!(r.delsarte_order, rat(6));
    }

    #[test]
    fn non_distance_regular_host_is_rejected() {
        let g = crate::graph::tests::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let s = CliqueSystem::new(vec![vec![0, 1], vec![1, 2], vec![2, 3]], 1).unwrap();
        assert!(matches!(verify_delsarte_pair(&g, &s), Err(Error::NotDistanceRegular(_))));
    }

    #[test]
    fn singletons_in_the_cube_fail_every_criterion() {
        let (g, s) = build_hamming(3, 2).unwrap();
        let t = Bitrade::new(&g, vec![g.vertex("000").unwrap()], vec![g.vertex("011").unwrap()]).unwrap();
        assert!(!check_criterion_a(&g, &s, &t).holds);
        assert!(!check_criterion_b(&g, &s, &t).holds);
        assert!(!check_criterion_c(&g, &s, &t).holds);
    }
}
