use std::collections::HashMap;

use super::{check_eigen_criterion, Bitrade};
use crate::error::{Error, Result};
use crate::families::{build_dual_polar_d, dual_polar_subspaces, johnson_label, Family};
use crate::gfq::Subspace;
use crate::graph::{Bipartiteness, Graph};
use crate::spectral::rat;

fn expect_host(g: &Graph, family: Family) -> Result<()> {
    let meta = g.meta();
    if meta.family == family.name() && meta.params == family.params() {
        Ok(())
    } else {
        Err(Error::AmbientMismatch(format!("construction for {family} used in host {meta}")))
    }
}

fn locate_sides(g: &Graph, t0: &[String], t1: &[String]) -> Result<Bitrade> {
    let find = |s: &[String]| s.iter().map(|l| g.vertex_or_err(l)).collect::<Result<Vec<_>>>();
    Bitrade::new(g, find(t0)?, find(t1)?)
}

/// Binary words of length `len`, split by weight parity.
fn parity_words(len: usize) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
    (0..1u32 << len)
        .map(|x| (0..len).map(|i| (x >> (len - 1 - i) & 1) as u8).collect::<Vec<u8>>())
        .partition(|w| w.iter().filter(|&&b| b == 1).count() % 2 == 0)
}

fn digits(w: &[u8]) -> String {
    w.iter().map(|&x| char::from_digit(x as u32, 10).unwrap()).collect()
}

/// Blocks `{a_1^{b_1}, ..., a_w^{b_w}}` on points `offset+1 .. offset+2w`
/// with `a_i^0 = 2i-1`, `a_i^1 = 2i`, split by the parity of `b_1 + ... + b_w`.
fn pasch_like(n: u32, w: u32, offset: u32) -> (Vec<String>, Vec<String>) {
    let (even, odd) = parity_words(w as usize);
    let block = |b: &Vec<u8>| -> String {
        let pts: Vec<u32> = b.iter().enumerate().map(|(i, &bit)| offset + 2 * i as u32 + 1 + bit as u32).collect();
        johnson_label(n, &pts)
    };
    (even.iter().map(block).collect(), odd.iter().map(block).collect())
}

/// The minimum Johnson bitrade of `2^w` blocks on the points `1..2w`; for
/// `w = 3` this is the Pasch configuration.
pub fn min_bitrade_johnson(g: &Graph, n: u32, w: u32) -> Result<Bitrade> {
    expect_host(g, Family::Johnson { n, w })?;
    let (t0, t1) = pasch_like(n, w, 0);
    locate_sides(g, &t0, &t1)
}

/// Two Pasch configurations on the disjoint point sets `1..6` and `7..12`
/// of J(n, 3), `n >= 12`: a bitrade of 16 blocks that is not minimum.
pub fn double_pasch(g: &Graph, n: u32) -> Result<Bitrade> {
    if n < 12 {
        return Err(Error::InvalidParams("double Pasch needs n >= 12".into()));
    }
    expect_host(g, Family::Johnson { n, w: 3 })?;
    let (a0, a1) = pasch_like(n, 3, 0);
    let (b0, b1) = pasch_like(n, 3, 6);
    locate_sides(g, &a0, &a1)?.union(g, &locate_sides(g, &b0, &b1)?)
}

/// Binary words of H(n, q) split by weight parity; the trade subgraph is H(n, 2).
pub fn min_bitrade_hamming(g: &Graph, n: u32, q: u32) -> Result<Bitrade> {
    expect_host(g, Family::Hamming { n, q })?;
    let (even, odd) = parity_words(n as usize);
    let lab = |ws: Vec<Vec<u8>>| ws.iter().map(|w| digits(w)).collect::<Vec<_>>();
    locate_sides(g, &lab(even), &lab(odd))
}

/// Doubled words `(x, x)`, `x ∈ {0,1}^{n/2}`, split by the weight parity of `x`.
pub fn min_bitrade_halved_cube(g: &Graph, n: u32) -> Result<Bitrade> {
    Family::HalvedCube { n }.validate()?;
    expect_host(g, Family::HalvedCube { n })?;
    let (even, odd) = parity_words(n as usize / 2);
    let lab = |ws: Vec<Vec<u8>>| ws.iter().map(|w| digits(w).repeat(2)).collect::<Vec<_>>();
    locate_sides(g, &lab(even), &lab(odd))
}

/// Two antipodal pairs: `T0 = {0.0, 0.1}`, `T1 = {1.0, 1.1}`; the trade
/// subgraph is a 4-cycle.
pub fn min_bitrade_octahedron(g: &Graph, n: u32) -> Result<Bitrade> {
    expect_host(g, Family::Octahedron { n })?;
    let width = (n - 1).to_string().len();
    let pair = |i: u32| vec![format!("{i:0width$}.0"), format!("{i:0width$}.1")];
    locate_sides(g, &pair(0), &pair(1))
}

/// The dual polar graph D_d(q) placed in J_q(n, d): every totally isotropic
/// `d`-subspace of F_q^{2d} is extended by `n - 2d` zero coordinates, and the
/// sides are the BFS 2-coloring of D_d(q) from its least vertex.
pub fn min_bitrade_grassmann(g: &Graph, n: u32, d: u32, q: u32, cap: usize) -> Result<Bitrade> {
    expect_host(g, Family::Grassmann { n, d, q })?;
    let subspaces: HashMap<String, Subspace> = dual_polar_subspaces(d, q, cap)?
        .into_iter()
        .map(|s| (s.label(), s))
        .collect();
    let dual = build_dual_polar_d(d, q, cap)?;
    let colors = match dual.is_bipartite() {
        Bipartiteness::Bipartite(c) => c,
        Bipartiteness::OddCycle(_) => return Err(Error::TheoremViolation(format!("{} is not bipartite", dual.meta()))),
    };
    let mut sides: [Vec<String>; 2] = [vec![], vec![]];
    for (v, &c) in colors.iter().enumerate() {
        sides[c as usize].push(subspaces[dual.label(v)].extend_coordinates(n as usize).label());
    }
    locate_sides(g, &sides[0], &sides[1])
}

/// Which parity split produced a Doob pseudo-bitrade.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoobSplit {
    /// Parity of the second Shrikhande components plus the K_4 values.
    CoordinateSum,
    /// Parity of the halved second Shrikhande components plus the K_4 values.
    HalvedSum,
}

/// The set `{(0,0),(0,1),(0,2),(0,3)}^m × {0,1}^n` in D(m, n), split so
/// that `f^T` is an eigenfunction with `θ = -(2m+n)`. Both parity splits are
/// tried; the first one passing the eigenfunction check is returned.
pub fn pseudo_bitrade_doob(g: &Graph, m: u32, n: u32) -> Result<(Bitrade, DoobSplit)> {
    let host = if (m, n) == (1, 0) && g.meta().family == Family::Shrikhande.name() {
        Family::Shrikhande
    } else {
        Family::Doob { m, n }
    };
    expect_host(g, host)?;
    let (m, n) = (m as usize, n as usize);
    let words: Vec<Vec<u8>> = (0..1usize << (2 * m + n))
        .map(|mut code| {
            let mut w = Vec::with_capacity(2 * m + n);
            for _ in 0..m {
                w.extend([0, (code & 3) as u8]);
                code >>= 2;
            }
            for _ in 0..n {
                w.push((code & 1) as u8);
                code >>= 1;
            }
            w
        })
        .collect();
    let theta = -rat((2 * m + n) as i64);
    for split in [DoobSplit::CoordinateSum, DoobSplit::HalvedSum] {
        let parity = |w: &[u8]| -> usize {
            let shr: usize = (0..m)
                .map(|j| match split {
                    DoobSplit::CoordinateSum => w[2 * j + 1] as usize,
                    DoobSplit::HalvedSum => w[2 * j + 1] as usize / 2,
                })
                .sum();
            let k4: usize = w[2 * m..].iter().map(|&x| x as usize).sum();
            (shr + k4) % 2
        };
        let (t0, t1): (Vec<&Vec<u8>>, Vec<&Vec<u8>>) = words.iter().partition(|w| parity(w) == 0);
        let lab = |ws: Vec<&Vec<u8>>| ws.iter().map(|w| digits(w)).collect::<Vec<_>>();
        let Ok(t) = locate_sides(g, &lab(t0), &lab(t1)) else {
            continue;
        };
        if check_eigen_criterion(g, &t, &theta).holds {
            return Ok((t, split));
        }
    }
    Err(Error::TheoremViolation(format!(
        "no parity split of the pseudo-bitrade set in {} is a θ = {theta} eigenfunction",
        g.meta()
    )))
}

/// The family's minimum bitrade construction in host `g`.
pub fn min_bitrade(g: &Graph, family: Family, cap: usize) -> Result<Bitrade> {
    match family {
        Family::Octahedron { n } => min_bitrade_octahedron(g, n),
        Family::Hamming { n, q } => min_bitrade_hamming(g, n, q),
        Family::Johnson { n, w } => min_bitrade_johnson(g, n, w),
        Family::HalvedCube { n } => min_bitrade_halved_cube(g, n),
        Family::Grassmann { n, d, q } => min_bitrade_grassmann(g, n, d, q, cap),
        Family::Shrikhande => Ok(pseudo_bitrade_doob(g, 1, 0)?.0),
        Family::Doob { m, n } => Ok(pseudo_bitrade_doob(g, m, n)?.0),
        Family::DualPolarD { .. } => Err(Error::InvalidParams(format!("{family} has no bitrade construction"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_doob, build_grassmann, build_halved_cube, build_hamming, build_johnson, build_shrikhande};
    use crate::gfq::DEFAULT_CAP;

    fn labels(g: &Graph, s: &[usize]) -> Vec<String> {
        s.iter().map(|&v| g.label(v).replace(',', "")).collect()
    }

    #[test]
    fn pasch_blocks() {
        let (g, _) = build_johnson(6, 3).unwrap();
        let t = min_bitrade_johnson(&g, 6, 3).unwrap();
        assert_eq!(labels(&g, t.t0()), ["135", "146", "236", "245"]);
        assert_eq!(labels(&g, t.t1()), ["136", "145", "235", "246"]);
        assert!(min_bitrade_johnson(&g, 8, 3).is_err());
    }

    #[test]
    fn hamming_and_halved_cube_sizes() {
        let (g, _) = build_hamming(3, 3).unwrap();
        let t = min_bitrade_hamming(&g, 3, 3).unwrap();
        assert_eq!((t.t0().len(), t.t1().len()), (4, 4));
        let (g, _) = build_halved_cube(4).unwrap();
        let t = min_bitrade_halved_cube(&g, 4).unwrap();
        assert_eq!(labels(&g, &t.support()), ["0000", "0101", "1010", "1111"]);
    }

    #[test]
    fn grassmann_sides_have_equal_size() {
        let (g, _) = build_grassmann(4, 2, 2, DEFAULT_CAP).unwrap();
        let t = min_bitrade_grassmann(&g, 4, 2, 2, DEFAULT_CAP).unwrap();
        assert_eq!((t.t0().len(), t.t1().len()), (3, 3));
        // coloring starts from the least dual polar vertex
        assert_eq!(t.support()[0], t.t0()[0]);
    }

    #[test]
    fn doob_split() {
        let g = build_shrikhande().unwrap();
        let (t, split) = pseudo_bitrade_doob(&g, 1, 0).unwrap();
        assert_eq!(split, DoobSplit::CoordinateSum);
        assert_eq!(labels(&g, t.t0()), ["00", "02"]);
        let g = build_doob(1, 1).unwrap();
        assert_eq!(pseudo_bitrade_doob(&g, 1, 1).unwrap().0.len(), 8);
    }
}
