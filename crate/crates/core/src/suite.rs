//! Host pipelines and the numbered check matrix run by `report --all`.
//!
//! Every check recomputes its quantities from scratch; nothing is cached
//! between checks, so each line of the matrix stands on its own.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitrades::{
    check_clique_design, check_eigen_criterion, check_minimality, design_difference, double_pasch, latin_square_design,
    latin_squares, min_bitrade, pseudo_bitrade_doob, verify_bitrade, verify_delsarte_pair_with_array, Bitrade,
    VerificationReport,
};
use crate::error::{Error, Result};
use crate::families::{build_doob, Family};
use crate::gfq::{eq5_product, eq5_sum, DEFAULT_CAP};
use crate::graph::{distance_regularity_check, distance_regularity_on, CliqueSystem, Graph, IntersectionArray};
use crate::spectral::{
    delsarte_clique_profile, delta_function, intersection_matrix_eigenvalues, rat, theta_min, wd_bound,
    wd_coefficients, weight_distribution_of, Rational,
};

/// Seed for every sampled check, so reports are reproducible.
pub const SEED: u64 = 0x5eed_b17a_de;

/// A family member with its clique system and certified intersection array.
#[derive(Debug, Clone)]
pub struct Host {
    pub family: Family,
    pub graph: Graph,
    pub cliques: CliqueSystem,
    pub array: IntersectionArray,
}

impl Host {
    /// Builds the host, certifies distance-regularity exhaustively, matches
    /// the array against the closed form and checks the Delsarte condition.
    pub fn build(family: Family, cap: usize) -> Result<Host> {
        let inst = family.build_capped(cap)?;
        let array = distance_regularity_check(&inst.graph).map_err(|v| Error::NotDistanceRegular(v.to_string()))?;
        Self::finish(family, inst.graph, inst.cliques, array)
    }

    /// As [`Host::build`], but distance-regularity is only spot-checked at
    /// `samples` seeded random vertices; the closed-form array is used.
    pub fn build_spot_checked(family: Family, cap: usize, samples: usize) -> Result<Host> {
        let inst = family.build_capped(cap)?;
        let n = inst.graph.vertex_count();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let picks: Vec<usize> = (0..n).collect::<Vec<_>>().choose_multiple(&mut rng, samples.min(n)).copied().collect();
        let array = distance_regularity_on(&inst.graph, &picks).map_err(|v| Error::NotDistanceRegular(v.to_string()))?;
        Self::finish(family, inst.graph, inst.cliques, array)
    }

    fn finish(family: Family, graph: Graph, cliques: Option<CliqueSystem>, array: IntersectionArray) -> Result<Host> {
        let expected = family.expected()?.array;
        if array != expected {
            return Err(Error::TheoremViolation(format!("{family}: array {array}, closed form {expected}")));
        }
        let cliques = cliques.ok_or_else(|| Error::CliquesNotDelsarte(format!("{family} has no clique system")))?;
        let d = verify_delsarte_pair_with_array(&graph, &cliques, array.clone())?;
        if !d.delsarte {
            return Err(Error::CliquesNotDelsarte(format!(
                "{family}: clique order {} but 1 - k/θ_min = {}",
                d.ksm.s + 1,
                d.delsarte_order
            )));
        }
        Ok(Host {
            family,
            graph,
            cliques,
            array,
        })
    }

    /// `-k/s`.
    pub fn theta(&self) -> Rational {
        Rational::new((-(self.array.k() as i64)).into(), (self.cliques.s() as i64).into())
    }

    pub fn min_bitrade(&self, cap: usize) -> Result<Bitrade> {
        min_bitrade(&self.graph, self.family, cap)
    }

    pub fn verify(&self, t: &Bitrade) -> Result<VerificationReport> {
        verify_bitrade(&self.graph, &self.cliques, &self.array, t)
    }
}

/// One line of the check matrix.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

pub const CHECKS: [(u32, &str); 11] = [
    (1, "q-binomial product/sum identity, d <= 5, q in 2..5"),
    (2, "minimum T_q(2,3,n) trade sizes 15, 40, 85, 156"),
    (3, "J_2(6,3) dual polar bitrade pipeline"),
    (4, "J_2(4,2) and J_2(6,2) dual polar bitrades"),
    (5, "Pasch configuration in J(6,3)"),
    (6, "halved 8-cube bitrade"),
    (7, "H(3,3) bitrade and latin square difference"),
    (8, "Doob D(1,1) pseudo-bitrade"),
    (9, "criteria a, b, c agree on bitrades and corruptions"),
    (10, "bound attained iff trade subgraph isometric"),
    (11, "weight distributions and clique profiles"),
];

/// The optional large instance, not part of `run_all`.
pub const OPTIONAL_CHECK: (u32, &str) = (12, "J_3(6,3) dual polar bitrade pipeline");

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::TheoremViolation(msg()))
    }
}

fn fam(s: &str) -> Family {
    s.parse().expect("built-in family string")
}

/// Runs the full pipeline on the family's minimum bitrade and requires a
/// minimal bitrade whose trade subgraph has the given array.
fn minimal_pipeline(family: &str, subgraph: &str) -> Result<(Host, Bitrade, VerificationReport)> {
    let host = Host::build(fam(family), DEFAULT_CAP)?;
    let t = host.min_bitrade(DEFAULT_CAP)?;
    let r = host.verify(&t)?;
    ensure(r.a.holds && r.b.holds && r.c.holds, || format!("{family}: criteria a/b/c = {}/{}/{}", r.a.holds, r.b.holds, r.c.holds))?;
    ensure(r.minimal(), || format!("{family}: not minimal: {:?}", r.minimality))?;
    let arr = r.subgraph.as_ref().map(|s| s.array.to_string()).unwrap_or_default();
    ensure(arr == subgraph, || format!("{family}: trade subgraph array {arr}, expected {subgraph}"))?;
    Ok((host, t, r))
}

fn check_1() -> Result<String> {
    for d in 0..=5 {
        for q in 2..=5u64 {
            let (p, s) = (eq5_product(d, q), eq5_sum(d, q));
            ensure(p == s, || format!("d={d}, q={q}: {p} != {s}"))?;
        }
    }
    Ok(format!("24 pairs equal; d=5,q=5: {}", eq5_product(5, 5)))
}

fn check_2() -> Result<String> {
    let mut sizes = Vec::new();
    for q in 2..=5u32 {
        let spec = Family::Grassmann { n: 6, d: 3, q }.expected()?;
        let (s_plus_1, _) = spec.clique.expect("Grassmann graphs have cliques");
        let theta = Rational::new((-(spec.k as i64)).into(), ((s_plus_1 - 1) as i64).into());
        ensure(theta == theta_min(&spec.array)?, || format!("q={q}: -k/s = {theta} is not θ_min"))?;
        let half = wd_bound(&spec.array, &theta) / rat(2);
        let q = q as i64;
        let want = rat((q + 1) * (q * q + 1));
        ensure(half == want, || format!("q={q}: bound/2 = {half}, expected {want}"))?;
        sizes.push(half.to_string());
    }
    Ok(format!("trade sizes {}", sizes.join(", ")))
}

fn check_3() -> Result<String> {
    let (host, t, r) = minimal_pipeline("grassmann:6,3,2", "(7,6,4;1,3,7)")?;
    let g = &host.graph;
    ensure(g.vertex_count() == 1395 && host.array.k() == 98, || "host size".into())?;
    let (k, s, m) = (r.ksm.k, r.ksm.s + 1, r.ksm.m);
    ensure((k, s, m) == (98, 15, 1), || format!("clique system ({k},{s},{m})"))?;
    ensure(t.len() == 30 && r.wd_bound == rat(30), || format!("|T| = {}, bound {}", t.len(), r.wd_bound))?;
    let shells = r.subgraph.as_ref().map(|s| s.shells.clone()).unwrap_or_default();
    ensure(shells == [1, 7, 14, 8], || format!("shells {shells:?}"))?;
    Ok(format!("|T| = 30 = bound, Γ^T {}, shells {shells:?}", r.subgraph.unwrap().array))
}

fn check_4() -> Result<String> {
    for family in ["grassmann:4,2,2", "grassmann:6,2,2"] {
        let (host, t, _) = minimal_pipeline(family, "(3,2;1,3)")?;
        let g = &host.graph;
        ensure(t.t0().len() == 3 && t.t1().len() == 3, || format!("{family}: sides {:?}", (t.t0(), t.t1())))?;
        let complete = t.t0().iter().all(|&u| t.t1().iter().all(|&v| g.is_adjacent(u, v)));
        ensure(complete, || format!("{family}: trade subgraph is not K_3,3"))?;
    }
    Ok("both embeddings give K_3,3, minimal".into())
}

fn check_5() -> Result<String> {
    let (_, t, r) = minimal_pipeline("johnson:6,3", "(3,2,1;1,2,3)")?;
    ensure(t.len() == 8 && r.wd_bound == rat(8), || format!("|T| = {}, bound {}", t.len(), r.wd_bound))?;
    Ok("8 blocks, bound 8, Γ^T = H(3,2)".into())
}

fn check_6() -> Result<String> {
    let (_, t, r) = minimal_pipeline("halved_cube:8", "(4,3,2,1;1,2,3,4)")?;
    ensure(t.len() == 16 && r.wd_bound == rat(16), || format!("|T| = {}, bound {}", t.len(), r.wd_bound))?;
    Ok("16 vertices, bound 16, Γ^T = H(4,2)".into())
}

fn check_7() -> Result<String> {
    let (host, t, r) = minimal_pipeline("hamming:3,3", "(3,2,1;1,2,3)")?;
    ensure(r.theta == rat(-3) && r.wd_bound == rat(8) && t.len() == 8, || {
        format!("θ = {}, bound {}, |T| = {}", r.theta, r.wd_bound, t.len())
    })?;
    let squares = latin_squares(3);
    let d1 = latin_square_design(&host.graph, &squares[0])?;
    let d2 = latin_square_design(&host.graph, &squares[squares.len() - 1])?;
    for d in [&d1, &d2] {
        let v = check_clique_design(&host.graph, &host.cliques, d)?;
        ensure(v.is_design() && v.consistent(), || "latin square is not a consistent design".into())?;
    }
    let diff = design_difference(&host.graph, &host.cliques, &d1, &d2)?;
    let rd = host.verify(&diff)?;
    ensure(rd.is_bitrade(), || "latin difference fails the criteria".into())?;
    Ok(format!("θ = -3, bound 8; latin difference of size {} is a bitrade", diff.len()))
}

fn check_8() -> Result<String> {
    let g = build_doob(1, 1)?;
    let array = distance_regularity_check(&g).map_err(|v| Error::NotDistanceRegular(v.to_string()))?;
    let hamming = Family::Hamming { n: 3, q: 4 }.expected()?.array;
    ensure(array == hamming, || format!("D(1,1) array {array} != H(3,4) array {hamming}"))?;
    let (t, split) = pseudo_bitrade_doob(&g, 1, 1)?;
    let theta = rat(-3);
    ensure(check_eigen_criterion(&g, &t, &theta).holds, || "eigenfunction check".into())?;
    let bound = wd_bound(&array, &theta);
    ensure(t.len() == 8 && bound == rat(8), || format!("|T| = {}, bound {bound}", t.len()))?;
    Ok(format!("array {array}, 8 vertices = bound, split {split:?}"))
}

/// Hosts used for the criteria-equivalence sweep.
pub const EQUIVALENCE_FAMILIES: [&str; 13] = [
    "johnson:6,3",
    "johnson:8,3",
    "hamming:3,3",
    "hamming:4,2",
    "halved_cube:6",
    "halved_cube:8",
    "grassmann:4,2,2",
    "grassmann:6,3,2",
    "octahedron:2",
    "octahedron:3",
    "octahedron:4",
    "octahedron:5",
    "octahedron:6",
];

/// Minimum number of corrupted instances per family, pooled over its hosts.
pub const CORRUPTIONS_PER_FAMILY: usize = 20;

/// One-vertex corruptions of `t`: moves of a `T1` vertex to a neighbor that
/// keep `T1` independent, then single-vertex deletions.
pub fn corruptions(g: &Graph, t: &Bitrade) -> Vec<Bitrade> {
    t.one_vertex_corruptions(g).chain(t.one_vertex_deletions()).collect()
}

fn check_9() -> Result<String> {
    let mut per_family: std::collections::BTreeMap<&str, usize> = Default::default();
    let mut total = 0;
    let mut rejected = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for family in EQUIVALENCE_FAMILIES {
        let host = Host::build(fam(family), DEFAULT_CAP)?;
        let t = host.min_bitrade(DEFAULT_CAP)?;
        let all = corruptions(&host.graph, &t);
        let picked: Vec<&Bitrade> = all.choose_multiple(&mut rng, CORRUPTIONS_PER_FAMILY).collect();
        *per_family.entry(host.family.name()).or_default() += picked.len();
        for cand in std::iter::once(&t).chain(picked) {
            let r = host.verify(cand)?;
            ensure(r.criteria_agree(), || {
                format!("{family}: a/b/c = {}/{}/{} on {:?}", r.a.holds, r.b.holds, r.c.holds, cand)
            })?;
            total += 1;
            rejected += usize::from(!r.a.holds);
        }
    }
    for (name, &count) in &per_family {
        ensure(count >= CORRUPTIONS_PER_FAMILY, || format!("{name}: only {count} corruptions"))?;
    }
    Ok(format!("{total} instances over {} families, verdicts agree; {rejected} rejected by all three", per_family.len()))
}

fn check_10() -> Result<String> {
    let host = Host::build(fam("johnson:12,3"), DEFAULT_CAP)?;
    let t = double_pasch(&host.graph, 12)?;
    let r = host.verify(&t)?;
    ensure(r.is_bitrade(), || "double Pasch is not a bitrade".into())?;
    let m = check_minimality(&host.graph, &host.array, &host.theta(), &t)?;
    ensure(!m.meets_bound && !m.isometric, || format!("double Pasch: {m:?}"))?;
    let mut minimal = 0;
    for family in EQUIVALENCE_FAMILIES.iter().chain(&["hamming:3,2", "halved_cube:4", "grassmann:6,2,2"]) {
        let host = Host::build(fam(family), DEFAULT_CAP)?;
        let t = host.min_bitrade(DEFAULT_CAP)?;
        let m = check_minimality(&host.graph, &host.array, &host.theta(), &t)?;
        ensure(m.meets_bound && m.isometric, || format!("{family}: {m:?}"))?;
        minimal += 1;
    }
    Ok(format!("double Pasch 16 > bound {}, not isometric; {minimal} minimal constructions attain both", m.bound))
}

/// Hosts for the weight-distribution sweep.
pub const WD_FAMILIES: [&str; 5] = ["johnson:6,3", "hamming:4,2", "grassmann:4,2,2", "halved_cube:6", "dual_polar_D:3,2"];

fn check_11() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = 0;
    for family in WD_FAMILIES {
        let g = fam(family).build()?.graph;
        let array = distance_regularity_check(&g).map_err(|v| Error::NotDistanceRegular(v.to_string()))?;
        let verts: Vec<usize> = (0..g.vertex_count()).collect();
        for theta in intersection_matrix_eigenvalues(&array)? {
            let w = wd_coefficients(&array, &theta).coefficients;
            let base = *verts.choose(&mut rng).expect("nonempty graph");
            let f = delta_function(&g, &[base], &theta)?;
            for &x in verts.choose_multiple(&mut rng, 10) {
                let got = weight_distribution_of(&g, &f, x);
                let want: Vec<Rational> = w.iter().map(|wi| f.get(x) * wi).collect();
                ensure(got == want, || format!("{family}, θ = {theta}, x = {}: {got:?} != {want:?}", g.label(x)))?;
                checked += 1;
            }
        }
    }
    for family in ["johnson:6,3", "hamming:4,2", "grassmann:4,2,2"] {
        let host = Host::build(fam(family), DEFAULT_CAP)?;
        delsarte_clique_profile(&host.graph, &host.cliques, &host.array)?;
    }
    Ok(format!("{checked} weight distributions match; clique profiles constant on 3 hosts"))
}

/// The J_3(6,3) pipeline: 33,880 vertices, distance-regularity spot-checked
/// at `samples` vertices, bitrade of 80.
pub fn check_12(samples: usize) -> Result<String> {
    let host = Host::build_spot_checked(fam("grassmann:6,3,3"), DEFAULT_CAP, samples)?;
    ensure(host.graph.vertex_count() == 33_880, || "vertex count".into())?;
    let t = host.min_bitrade(DEFAULT_CAP)?;
    let r = host.verify(&t)?;
    ensure(r.is_bitrade() && r.minimal(), || format!("criteria/minimality: {}", r.to_json()))?;
    ensure(t.len() == 80 && r.wd_bound == rat(80), || format!("|T| = {}, bound {}", t.len(), r.wd_bound))?;
    let want = Family::DualPolarD { d: 3, q: 3 }.expected()?.array;
    let got = r.subgraph.map(|s| s.array);
    ensure(got.as_ref() == Some(&want), || format!("trade subgraph {got:?}"))?;
    Ok(format!("|T| = 80 = bound, Γ^T {want}"))
}

fn timed(id: u32, title: &'static str, f: impl FnOnce() -> Result<String>) -> Outcome {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(e) => (false, e.to_string()),
    };
    Outcome {
        id,
        title,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

/// Runs one numbered check (1-11, or 12 for the optional instance).
pub fn run_check(id: u32) -> Option<Outcome> {
    let f: fn() -> Result<String> = match id {
        1 => check_1,
        2 => check_2,
        3 => check_3,
        4 => check_4,
        5 => check_5,
        6 => check_6,
        7 => check_7,
        8 => check_8,
        9 => check_9,
        10 => check_10,
        11 => check_11,
        12 => return Some(timed(OPTIONAL_CHECK.0, OPTIONAL_CHECK.1, || check_12(8))),
        _ => return None,
    };
    let title = CHECKS.iter().find(|c| c.0 == id).expect("listed").1;
    Some(timed(id, title, f))
}

/// Runs checks 1-11 in order.
pub fn run_all() -> Vec<Outcome> {
    CHECKS.iter().filter_map(|&(id, _)| run_check(id)).collect()
}

/// `prod (q^{d-i} + 1)` and `sum q^{C(i,2)} [d i]_q`.
pub fn eq5_sides(d: u32, q: u64) -> (BigUint, BigUint) {
    (eq5_product(d, q), eq5_sum(d, q))
}
