use num_traits::{One, Signed, Zero};

use super::{rat, Rational, VertexFunction};
use crate::graph::{Graph, IntersectionArray, UNREACHABLE};

/// Coefficients `W^0, ..., W^ρ` determined by an intersection array and `θ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    pub coefficients: Vec<Rational>,
    pub theta: Rational,
}

impl WeightDistribution {
    /// `sum_i |W^i|`.
    pub fn bound(&self) -> Rational {
        self.coefficients.iter().map(Signed::abs).sum()
    }

    pub fn abs(&self) -> Vec<Rational> {
        self.coefficients.iter().map(Signed::abs).collect()
    }
}

/// `W^0 = 1`, `W^1 = θ`,
/// `W^i = ((θ - a_{i-1}) W^{i-1} - b_{i-2} W^{i-2}) / c_i`.
pub fn wd_coefficients(a: &IntersectionArray, theta: &Rational) -> WeightDistribution {
    let mut w: Vec<Rational> = vec![Rational::one()];
    if a.rho() >= 1 {
        w.push(theta.clone());
    }
    for i in 2..=a.rho() {
        let next = ((theta - rat(a.a(i - 1) as i64)) * &w[i - 1] - rat(a.b(i - 2) as i64) * &w[i - 2])
            / rat(a.c(i) as i64);
        w.push(next);
    }
    WeightDistribution {
        coefficients: w,
        theta: theta.clone(),
    }
}

/// The weight-distribution lower bound `sum_i |W^i|` on the support size of
/// an eigenfunction with eigenvalue `θ`.
pub fn wd_bound(a: &IntersectionArray, theta: &Rational) -> Rational {
    wd_coefficients(a, theta).bound()
}

/// `W^i(f) = sum_{y ∈ Γ_i(x)} f(y)` for `i` up to the eccentricity of `x`.
pub fn weight_distribution_of(g: &Graph, f: &VertexFunction, x: usize) -> Vec<Rational> {
    let dist = g.distances_from(x);
    let ecc = dist.iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0) as usize;
    let mut w = vec![Rational::zero(); ecc + 1];
    for (y, &d) in dist.iter().enumerate() {
        if d != UNREACHABLE {
            w[d as usize] += f.get(y);
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::ratio;

    fn arr(b: &[u64], c: &[u64]) -> IntersectionArray {
        IntersectionArray::of_graph(b.to_vec(), c.to_vec()).unwrap()
    }

    #[test]
    fn cube_coefficients() {
        let w = wd_coefficients(&arr(&[4, 3, 2, 1], &[1, 2, 3, 4]), &rat(-4));
        assert_eq!(w.coefficients, vec![rat(1), rat(-4), rat(6), rat(-4), rat(1)]);
        assert_eq!(w.bound(), rat(16));
    }

    #[test]
    fn perron_coefficients_are_shell_sizes() {
        let a = arr(&[9, 4, 1], &[1, 4, 9]);
        let w = wd_coefficients(&a, &rat(9));
        let shells: Vec<Rational> = a.shell_sizes().into_iter().map(|x| rat(x as i64)).collect();
        assert_eq!(w.coefficients, shells);
    }

    #[test]
    fn grassmann_6_3_2_min_eigenvalue() {
        let w = wd_coefficients(&arr(&[98, 72, 32], &[1, 9, 49]), &rat(-7));
        assert_eq!(w.abs(), vec![rat(1), rat(7), rat(14), rat(8)]);
        assert_eq!(w.bound(), rat(30));
    }

    #[test]
    fn non_integral_intermediate_values_stay_exact() {
        // J(6,3) with θ = 0 (not an eigenvalue): W^2 = ((0 - 4)·0 - 9)/4
        let w = wd_coefficients(&arr(&[9, 4, 1], &[1, 4, 9]), &rat(0));
        assert_eq!(w.coefficients[2], ratio(-9, 4));
    }
}
