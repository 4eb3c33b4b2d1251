use super::field::FieldSpec;
use super::subspace::Subspace;

/// The hyperbolic quadratic form `Q0(v, u) = v_1 u_1 + ... + v_d u_d` on F_q^{2d}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticForm {
    half_dim: usize,
}

impl QuadraticForm {
    pub fn hyperbolic(d: usize) -> Self {
        Self { half_dim: d }
    }

    pub fn ambient_dim(&self) -> usize {
        2 * self.half_dim
    }

    pub fn eval(&self, f: &FieldSpec, x: &[u8]) -> u8 {
        assert_eq!(x.len(), self.ambient_dim());
        let (v, u) = x.split_at(self.half_dim);
        v.iter().zip(u).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    /// Polar form `B(x, y) = Q(x + y) - Q(x) - Q(y)`.
    pub fn bilinear(&self, f: &FieldSpec, x: &[u8], y: &[u8]) -> u8 {
        let sum: Vec<u8> = x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect();
        f.sub(f.sub(self.eval(f, &sum), self.eval(f, x)), self.eval(f, y))
    }
}

/// Whether `Q` vanishes on all of `s`.
///
/// For `x = sum λ_i b_i` one has
/// `Q(x) = sum λ_i^2 Q(b_i) + sum_{i<j} λ_i λ_j B(b_i, b_j)`, so it suffices
/// that every basis row is singular and every pair of rows is orthogonal.
/// Checking `B` is necessary in characteristic 2, where `B(x, x) = 0` always.
pub fn is_totally_isotropic(s: &Subspace, form: &QuadraticForm) -> bool {
    assert_eq!(s.ambient_dim(), form.ambient_dim(), "form and subspace live in different spaces");
    let f = s.field();
    let b = s.basis();
    let rows: Vec<&[u8]> = (0..s.dim()).map(|r| b.row(r)).collect();
    rows.iter().all(|r| form.eval(f, r) == 0)
        && rows
            .iter()
            .enumerate()
            .all(|(i, x)| rows[i + 1..].iter().all(|y| form.bilinear(f, x, y) == 0))
}
