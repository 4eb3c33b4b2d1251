use drgtrade::families::{build_dual_polar_d, build_johnson, build_octahedron, Family};
use drgtrade::gfq::{eq5_product, eq5_sum};
use drgtrade::graph::{distance_regularity_check, Graph};
use drgtrade::spectral::{rat, theta_min};

fn family(s: &str) -> Family {
    s.parse().unwrap()
}

/// Brute-force isomorphism test for tiny graphs.
fn isomorphic(a: &Graph, b: &Graph) -> bool {
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == a.vertex_count() {
            return true;
        }
        for j in 0..b.vertex_count() {
            if used[j] || a.degree(i) != b.degree(j) {
                continue;
            }
            if (0..i).all(|p| a.is_adjacent(p, i) == b.is_adjacent(map[p], j)) {
                map.push(j);
                used[j] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
        }
        false
    }
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && extend(a, b, &mut vec![], &mut vec![false; b.vertex_count()])
}

const WITH_CLIQUES: [&str; 14] = [
    "octahedron:2",
    "octahedron:3",
    "octahedron:4",
    "hamming:3,2",
    "hamming:3,3",
    "hamming:2,4",
    "johnson:6,3",
    "johnson:4,2",
    "johnson:8,4",
    "halved_cube:4",
    "halved_cube:6",
    "grassmann:4,2,2",
    "grassmann:4,2,3",
    "grassmann:5,2,2",
];

#[test]
fn arrays_match_closed_forms_and_cliques_are_delsarte() {
    for name in WITH_CLIQUES {
        let f = family(name);
        let inst = f.build().unwrap();
        let spec = f.expected().unwrap();
        let array = distance_regularity_check(&inst.graph).unwrap();
        assert_eq!(array, spec.array, "{name}");
        assert_eq!(num_bigint::BigUint::from(inst.graph.vertex_count()), f.vertex_count(), "{name}");
        let s = inst.cliques.unwrap();
        let ksm = s.verify(&inst.graph).unwrap();
        let (order, m) = spec.clique.unwrap();
        assert_eq!((ksm.k as u64, ksm.s as u64 + 1, ksm.m as u64), (spec.k, order, m), "{name}");
        // Delsarte: s + 1 = 1 - k/θ_min
        let theta = theta_min(&array).unwrap();
        assert_eq!(rat(order as i64), rat(1) - rat(spec.k as i64) / theta, "{name}");
    }
}

#[test]
fn cliqueless_families() {
    for name in ["shrikhande", "doob:1,0", "doob:1,1", "dual_polar_D:2,2", "dual_polar_D:3,2", "dual_polar_D:2,3"] {
        let f = family(name);
        let inst = f.build().unwrap();
        assert!(inst.cliques.is_none());
        assert_eq!(distance_regularity_check(&inst.graph).unwrap(), f.expected().unwrap().array, "{name}");
    }
}

#[test]
fn doob_graphs_share_the_hamming_array() {
    for (m, n) in [(1, 0), (1, 1)] {
        let d = distance_regularity_check(&Family::Doob { m, n }.build().unwrap().graph).unwrap();
        let h = distance_regularity_check(&Family::Hamming { n: 2 * m + n, q: 4 }.build().unwrap().graph).unwrap();
        assert_eq!(d, h);
    }
    let s = Family::Shrikhande.build().unwrap().graph;
    let h24 = Family::Hamming { n: 2, q: 4 }.build().unwrap().graph;
    assert_eq!(distance_regularity_check(&s).unwrap(), distance_regularity_check(&h24).unwrap());
    // same parameters, different graphs
    assert!(!isomorphic(&s, &h24));
}

#[test]
fn small_isomorphisms() {
    let (j42, _) = build_johnson(4, 2).unwrap();
    let (oct3, _) = build_octahedron(3).unwrap();
    assert!(isomorphic(&j42, &oct3));

    let d22 = build_dual_polar_d(2, 2, 1000).unwrap();
    let names: Vec<String> = (0..6).map(|i| i.to_string()).collect();
    let edges: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    let k33 = Graph::new(drgtrade::graph::GraphMeta::new("k33", &[]), names, edges).unwrap();
    assert!(isomorphic(&d22, &k33));
}

#[test]
fn dual_polar_counts_match_both_sides_of_the_identity() {
    for (d, q) in [(2, 2), (3, 2), (2, 3), (2, 4), (3, 3), (2, 5)] {
        let g = build_dual_polar_d(d, q, 100_000).unwrap();
        let n = num_bigint::BigUint::from(g.vertex_count());
        assert_eq!(n, eq5_product(d, q as u64));
        assert_eq!(n, eq5_sum(d, q as u64));
        // degree (q^d - 1)/(q - 1)
        assert_eq!(g.is_regular().unwrap() as u32, (q.pow(d) - 1) / (q - 1));
        assert!(g.is_bipartite().is_bipartite());
    }
}

#[test]
fn spectrum_examples() {
    let theta = |s: &str| theta_min(&family(s).expected().unwrap().array).unwrap();
    assert_eq!(theta("hamming:3,3"), rat(-3));
    assert_eq!(theta("johnson:8,4"), rat(-4));
    assert_eq!(theta("grassmann:6,3,2"), rat(-7));
}

#[test]
fn enumeration_cap_is_enforced() {
    assert!(Family::Grassmann { n: 6, d: 3, q: 3 }.build_capped(10_000).is_err());
    assert!(Family::Hamming { n: 9, q: 10 }.build().is_err());
}
