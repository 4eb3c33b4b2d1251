use super::{check_criterion_a, Bitrade};
use crate::error::{Error, Result};
use crate::graph::{CliqueSystem, Graph};
use crate::spectral::radius_one_cr_characterization;

/// Whether a vertex set meets every clique of the system exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignVerdict {
    pub meets_each_once: bool,
    pub witness_clique: Option<usize>,
    /// Completely regular of covering radius 1 with eigenvalue `θ_min`
    /// (`None` when the set is empty or everything).
    pub radius_one_cr: Option<bool>,
}

impl DesignVerdict {
    pub fn is_design(&self) -> bool {
        self.meets_each_once
    }

    /// The clique count and the completely-regular characterization agree.
    pub fn consistent(&self) -> bool {
        self.radius_one_cr.map_or(true, |cr| !self.meets_each_once || cr)
    }
}

pub fn check_clique_design(g: &Graph, s: &CliqueSystem, set: &[usize]) -> Result<DesignVerdict> {
    let mut member = vec![false; g.vertex_count()];
    for &v in set {
        member[v] = true;
    }
    let witness_clique = s
        .cliques()
        .iter()
        .position(|c| c.iter().filter(|&&v| member[v]).count() != 1);
    let mut distinct = set.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let radius_one_cr = if distinct.is_empty() || distinct.len() >= g.vertex_count() {
        None
    } else {
        Some(radius_one_cr_characterization(g, s, &distinct)?.completely_regular_radius_one)
    };
    Ok(DesignVerdict {
        meets_each_once: witness_clique.is_none(),
        witness_clique,
        radius_one_cr,
    })
}

/// `(D1 \ D2, D2 \ D1)` for two distinct clique designs, checked against
/// criterion (a).
pub fn design_difference(g: &Graph, s: &CliqueSystem, d1: &[usize], d2: &[usize]) -> Result<Bitrade> {
    for (name, d) in [("D1", d1), ("D2", d2)] {
        let v = check_clique_design(g, s, d)?;
        if !v.is_design() {
            return Err(Error::NotADesign(format!(
                "{name} misses clique {}",
                v.witness_clique.expect("failing verdict has a witness")
            )));
        }
    }
    let minus = |a: &[usize], b: &[usize]| -> Vec<usize> { a.iter().copied().filter(|x| !b.contains(x)).collect() };
    let (t0, t1) = (minus(d1, d2), minus(d2, d1));
    if t0.is_empty() && t1.is_empty() {
        return Err(Error::DegenerateEmpty);
    }
    let t = Bitrade::new(g, t0, t1)?;
    let a = check_criterion_a(g, s, &t);
    if !a.holds {
        return Err(Error::TheoremViolation(format!(
            "difference of designs is not a bitrade: {}",
            a.witness.unwrap_or_default()
        )));
    }
    Ok(t)
}

/// All latin squares of the given order, rows listed top to bottom.
pub fn latin_squares(order: usize) -> Vec<Vec<Vec<u8>>> {
    fn fill(sq: &mut Vec<Vec<u8>>, cell: usize, n: usize, out: &mut Vec<Vec<Vec<u8>>>) {
        if cell == n * n {
            out.push(sq.clone());
            return;
        }
        let (r, c) = (cell / n, cell % n);
        for x in 0..n as u8 {
            let used = (0..c).any(|j| sq[r][j] == x) || (0..r).any(|i| sq[i][c] == x);
            if !used {
                sq[r][c] = x;
                fill(sq, cell + 1, n, out);
            }
        }
    }
    let mut out = Vec::new();
    fill(&mut vec![vec![0; order]; order], 0, order, &mut out);
    out
}

/// The cells `(r, c, L[r][c])` of a latin square as vertices of H(3, order).
pub fn latin_square_design(g: &Graph, square: &[Vec<u8>]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (r, row) in square.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            out.push(g.vertex_or_err(&format!("{r}{c}{x}"))?);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The extended Hamming code of length 8 (16 words of weight 0, 4, 8).
pub fn extended_hamming_code_8() -> Vec<String> {
    const GENERATORS: [u8; 4] = [0b1111_1111, 0b0000_1111, 0b0011_0011, 0b0101_0101];
    let mut words: Vec<String> = (0..16u8)
        .map(|mask| {
            let w = (0..4).filter(|i| mask >> i & 1 == 1).fold(0u8, |acc, i| acc ^ GENERATORS[i]);
            format!("{w:08b}")
        })
        .collect();
    words.sort();
    words
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_halved_cube, build_hamming};

    #[test]
    fn latin_square_counts() {
        assert_eq!(latin_squares(3).len(), 12);
        assert_eq!(latin_squares(4).len(), 576);
    }

    #[test]
    fn latin_squares_are_designs() {
        let (g, s) = build_hamming(3, 3).unwrap();
        let sq = &latin_squares(3)[0];
        let d = latin_square_design(&g, sq).unwrap();
        let v = check_clique_design(&g, &s, &d).unwrap();
        assert!(v.is_design() && v.consistent());
        assert_eq!(v.radius_one_cr, Some(true));
        assert!(!check_clique_design(&g, &s, &[]).unwrap().is_design());
    }

    #[test]
    fn differences() {
        let (g, s) = build_hamming(3, 3).unwrap();
        let squares = latin_squares(3);
        let d1 = latin_square_design(&g, &squares[0]).unwrap();
        let d2 = latin_square_design(&g, &squares[1]).unwrap();
        let t = design_difference(&g, &s, &d1, &d2).unwrap();
        assert_eq!(t.t0().len(), t.t1().len());
        assert_eq!(design_difference(&g, &s, &d1, &d1), Err(Error::DegenerateEmpty));
        assert!(matches!(design_difference(&g, &s, &d1, &[0]), Err(Error::NotADesign(_))));
    }

    #[test]
    fn extended_hamming_code_is_a_design() {
        let code = extended_hamming_code_8();
        assert_eq!(code.len(), 16);
        let (g, s) = build_halved_cube(8).unwrap();
        let d: Vec<usize> = code.iter().map(|w| g.vertex(w).unwrap()).collect();
        let v = check_clique_design(&g, &s, &d).unwrap();
        assert!(v.is_design() && v.consistent());
    }
}
