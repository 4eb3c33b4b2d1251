use std::fmt;

use crate::error::{Error, Result};

/// Field orders with precomputed tables.
pub const SUPPORTED_ORDERS: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

/// Conway polynomials for the extension fields, constant term first.
const MODULUS_4: [u8; 3] = [1, 1, 1]; // t^2 + t + 1
const MODULUS_8: [u8; 4] = [1, 1, 0, 1]; // t^3 + t + 1
const MODULUS_9: [u8; 3] = [2, 2, 1]; // t^2 + 2t + 2

/// A finite field GF(q), q <= 9, with full addition and multiplication tables.
///
/// Elements are the integers `0..q`. For `q = p^e` with `e > 1` the element
/// `c_0 + c_1 p + ... + c_{e-1} p^{e-1}` stands for the residue class of
/// `c_0 + c_1 t + ... + c_{e-1} t^{e-1}` modulo [`FieldSpec::modulus`].
#[derive(Clone, PartialEq, Eq)]
pub struct FieldSpec {
    q: u8,
    p: u8,
    e: u8,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// Builds GF(q) for a supported prime power `q`.
pub fn make_field(q: u32) -> Result<FieldSpec> {
    let (p, e, modulus): (u8, u8, &[u8]) = match q {
        2 | 3 | 5 | 7 => (q as u8, 1, &[]),
        4 => (2, 2, &MODULUS_4),
        8 => (2, 3, &MODULUS_8),
        9 => (3, 2, &MODULUS_9),
        _ => return Err(Error::UnsupportedFieldOrder(q)),
    };
    let q = q as u8;
    let n = q as usize;
    let digits = |x: u8| -> Vec<u8> {
        let mut v = Vec::with_capacity(e as usize);
        let mut x = x;
        for _ in 0..e {
            v.push(x % p);
            x /= p;
        }
        v
    };
    let undigits = |v: &[u8]| -> u8 { v.iter().rev().fold(0u8, |acc, &c| acc * p + c) };

    let mut add = vec![0u8; n * n];
    let mut mul = vec![0u8; n * n];
    for a in 0..q {
        let da = digits(a);
        for b in 0..q {
            let db = digits(b);
            let sum: Vec<u8> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            add[a as usize * n + b as usize] = undigits(&sum);

            // schoolbook product, then reduce by the monic modulus
            let mut prod = vec![0u32; 2 * e as usize - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x as u32 * y as u32) % p as u32;
                }
            }
            for deg in (e as usize..prod.len()).rev() {
                let c = prod[deg];
                if c == 0 {
                    continue;
                }
                prod[deg] = 0;
                for (k, &m) in modulus.iter().take(e as usize).enumerate() {
                    let idx = deg - e as usize + k;
                    let sub = c * m as u32 % p as u32;
                    prod[idx] = (prod[idx] + p as u32 - sub) % p as u32;
                }
            }
            let reduced: Vec<u8> = prod[..e as usize].iter().map(|&c| c as u8).collect();
            mul[a as usize * n + b as usize] = undigits(&reduced);
        }
    }
    let neg = (0..q)
        .map(|a| (0..q).find(|&b| add[a as usize * n + b as usize] == 0).unwrap())
        .collect();
    let inv = (0..q)
        .map(|a| {
            if a == 0 {
                0
            } else {
                (1..q)
                    .find(|&b| mul[a as usize * n + b as usize] == 1)
                    .expect("modulus must be irreducible")
            }
        })
        .collect();
    Ok(FieldSpec {
        q,
        p,
        e,
        modulus: modulus.to_vec(),
        add,
        mul,
        neg,
        inv,
    })
}

impl FieldSpec {
    pub fn order(&self) -> u32 {
        self.q as u32
    }

    pub fn characteristic(&self) -> u32 {
        self.p as u32
    }

    pub fn degree(&self) -> u32 {
        self.e as u32
    }

    /// Irreducible modulus over GF(p), constant term first; empty for prime fields.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &FieldSpec) {
        let q = f.order() as u8;
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_hold_for_every_supported_order() {
        for q in SUPPORTED_ORDERS {
            let f = make_field(q).unwrap();
            assert_eq!(f.characteristic().pow(f.degree()), q);
            check_axioms(&f);
        }
    }

    #[test]
    fn gf2_addition_is_xor() {
        let f = make_field(2).unwrap();
        for a in 0..2u8 {
            for b in 0..2u8 {
                assert_eq!(f.add(a, b), a ^ b);
            }
        }
    }

    #[test]
    fn gf4_square_of_generator_and_cyclic_group() {
        let f = make_field(4).unwrap();
        // t = 2, t^2 = t + 1 = 3 under t^2 + t + 1
        assert_eq!(f.mul(2, 2), 3);
        // every nonzero element has order dividing 3 and t generates
        let mut x = 1u8;
        let mut seen = vec![];
        for _ in 0..3 {
            x = f.mul(x, 2);
            seen.push(x);
        }
        seen.sort();
        assert_eq!(seen, vec![1, 2, 3]);
        for a in 1..4u8 {
            assert_eq!(f.mul(f.mul(a, a), a), 1);
        }
    }

    #[test]
    fn extension_fields_are_cyclic() {
        for q in [4u32, 8, 9] {
            let f = make_field(q).unwrap();
            let order = |a: u8| {
                let mut x = a;
                let mut k = 1;
                while x != 1 {
                    x = f.mul(x, a);
                    k += 1;
                }
                k
            };
            assert!((1..q as u8).any(|a| order(a) == q - 1), "GF({q}) has a primitive element");
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        for q in [0, 1, 6, 10, 11, 16] {
            assert_eq!(make_field(q).unwrap_err(), Error::UnsupportedFieldOrder(q));
        }
    }
}
