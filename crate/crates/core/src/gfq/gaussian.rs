use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Gaussian binomial coefficient `[a b]_q = prod_{i<b} (q^{a-i} - 1) / (q^{i+1} - 1)`.
///
/// Returns 0 when `b > a`. Valid for any integer `q >= 2`, not only field orders.
pub fn gaussian_binomial(a: u32, b: u32, q: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let one = BigUint::one();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..b {
        num *= q.pow(a - i) - &one;
        den *= q.pow(i + 1) - &one;
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// `q^{C(i,2)} [d i]_q` summed over `i = 0..=d`.
pub fn eq5_sum(d: u32, q: u64) -> BigUint {
    (0..=d).map(|i| shell_size(d, i, q)).sum()
}

/// `prod_{i=1}^{d} (q^{d-i} + 1)`.
pub fn eq5_product(d: u32, q: u64) -> BigUint {
    let q = BigUint::from(q);
    (1..=d).map(|i| q.pow(d - i) + 1u32).product()
}

/// `q^{C(i,2)} [d i]_q`: the number of vertices at distance `i` from a fixed
/// vertex of the dual polar graph D_d(q).
pub fn shell_size(d: u32, i: u32, q: u64) -> BigUint {
    let exp = i * i.saturating_sub(1) / 2;
    BigUint::from(q).pow(exp) * gaussian_binomial(d, i, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(gaussian_binomial(6, 3, 2), BigUint::from(1395u32));
        assert_eq!(gaussian_binomial(4, 2, 2), BigUint::from(35u32));
        assert_eq!(gaussian_binomial(4, 2, 3), BigUint::from(130u32));
        assert_eq!(gaussian_binomial(6, 3, 3), BigUint::from(33880u32));
        for n in 0..8 {
            assert_eq!(gaussian_binomial(n, 0, 5), BigUint::one());
            assert_eq!(gaussian_binomial(n, n, 5), BigUint::one());
        }
        assert_eq!(gaussian_binomial(2, 3, 2), BigUint::zero());
    }

    #[test]
    fn pascal_recurrence() {
        // [a b] = [a-1 b-1] + q^b [a-1 b]
        for q in [2u64, 3, 4, 7] {
            for a in 1..9u32 {
                for b in 1..=a {
                    let lhs = gaussian_binomial(a, b, q);
                    let rhs = gaussian_binomial(a - 1, b - 1, q)
                        + BigUint::from(q).pow(b) * gaussian_binomial(a - 1, b, q);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn eq5_sides_agree() {
        for d in 0..=7 {
            for q in 2..=9u64 {
                assert_eq!(eq5_product(d, q), eq5_sum(d, q), "d={d} q={q}");
            }
        }
        assert_eq!(eq5_product(3, 2), BigUint::from(30u32));
    }
}
