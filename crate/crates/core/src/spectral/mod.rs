//! Exact spectral machinery over intersection matrices.
//!
//! Everything here is exact: eigenvalues are integers found as roots of the
//! integer characteristic polynomial, and all vectors are big rationals.

mod eigenfunction;
mod wd;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::IntersectionArray;

pub use eigenfunction::{
    clique_sum_characterization, delsarte_clique_profile, delta_function, radius_one_cr_characterization,
    verify_eigenfunction, CliqueProfile, CliqueSumReport, EigenVerdict, RadiusOneReport, VertexFunction,
};
pub use wd::{wd_bound, wd_coefficients, weight_distribution_of, WeightDistribution};

/// Exact rational number.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Characteristic polynomial `det(xI - M)` of the tridiagonal intersection
/// matrix, coefficients lowest degree first, via the three-term recurrence
/// `p_{i+1} = (x - a_i) p_i - b_{i-1} c_i p_{i-1}`.
pub fn characteristic_polynomial(a: &IntersectionArray) -> Vec<BigInt> {
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    let mut cur: Vec<BigInt> = vec![-BigInt::from(a.a(0)), BigInt::one()];
    for i in 1..=a.rho() {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (j, coef) in cur.iter().enumerate() {
            next[j + 1] += coef;
            next[j] -= coef * BigInt::from(a.a(i));
        }
        let w = BigInt::from(a.b(i - 1)) * BigInt::from(a.c(i));
        for (j, coef) in prev.iter().enumerate() {
            next[j] -= coef * &w;
        }
        prev = cur;
        cur = next;
    }
    cur
}

fn eval_poly(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// All `ρ + 1` eigenvalues of the intersection matrix, sorted descending.
///
/// Candidates are the integer divisors of the lowest nonzero coefficient
/// bounded by `k` in absolute value (every eigenvalue of a `k`-regular
/// intersection matrix lies in `[-k, k]`).
pub fn intersection_matrix_eigenvalues(a: &IntersectionArray) -> Result<Vec<Rational>> {
    let poly = characteristic_polynomial(a);
    let expected = a.rho() + 1;
    let zero_mult = poly.iter().take_while(|c| c.is_zero()).count();
    let reduced = &poly[zero_mult..];
    let constant = reduced[0].abs();
    let k = a.k() as i64;
    let mut roots: Vec<i64> = Vec::with_capacity(expected);
    if zero_mult > 0 {
        roots.push(0);
    }
    for d in 1..=k.max(1) {
        if !(constant.clone() % BigInt::from(d)).is_zero() {
            continue;
        }
        for x in [d, -d] {
            if eval_poly(reduced, &BigInt::from(x)).is_zero() {
                roots.push(x);
            }
        }
    }
    // tridiagonal with positive off-diagonal products: all roots are simple
    if roots.len() != expected || zero_mult > 1 {
        return Err(Error::NonIntegerSpectrum {
            found: roots.len(),
            expected,
        });
    }
    roots.sort_unstable_by(|x, y| y.cmp(x));
    Ok(roots.into_iter().map(rat).collect())
}

/// Smallest eigenvalue of the intersection matrix.
pub fn theta_min(a: &IntersectionArray) -> Result<Rational> {
    Ok(intersection_matrix_eigenvalues(a)?.pop().expect("nonempty spectrum"))
}

/// Eigenvector `(ν_0 = 1, ν_1, ..., ν_ρ)` of the intersection matrix for `theta`.
///
/// Rows `0..ρ` determine the vector; the last row must close with zero
/// residual, which certifies that `theta` is an eigenvalue.
pub fn standard_eigenvector(a: &IntersectionArray, theta: &Rational) -> Result<Vec<Rational>> {
    let rho = a.rho();
    let mut nu: Vec<Rational> = vec![Rational::one()];
    for i in 0..rho {
        let mut next = (theta - rat(a.a(i) as i64)) * &nu[i];
        if i > 0 {
            next -= rat(a.c(i) as i64) * &nu[i - 1];
        }
        nu.push(next / rat(a.b(i) as i64));
    }
    let mut residual = (rat(a.a(rho) as i64) - theta) * &nu[rho];
    if rho > 0 {
        residual += rat(a.c(rho) as i64) * &nu[rho - 1];
    }
    if residual.is_zero() {
        Ok(nu)
    } else {
        Err(Error::NotAnEigenvalue(theta.to_string(), residual.to_string()))
    }
}
