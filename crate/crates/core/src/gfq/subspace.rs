use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::field::FieldSpec;
use super::gaussian::gaussian_binomial;
use crate::error::{Error, Result};

/// Default cap on the number of objects any enumeration may produce.
pub const DEFAULT_CAP: usize = 100_000;

/// Dense matrix over a small finite field, row-major.
#[derive(Clone)]
pub struct FFMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
    field: Arc<FieldSpec>,
}

impl fmt::Debug for FFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FFMatrix[{:?}; ", self.field)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "|")?;
            }
            for &x in self.row(r) {
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

impl PartialEq for FFMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order()
            && self.rows == other.rows
            && self.cols == other.cols
            && self.entries == other.entries
    }
}

impl Eq for FFMatrix {}

impl FFMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<u8>, field: Arc<FieldSpec>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entries length must be rows * cols");
        let q = field.order();
        assert!(entries.iter().all(|&x| (x as u32) < q), "entry out of field range");
        Self {
            rows,
            cols,
            entries,
            field,
        }
    }

    pub fn from_rows(rows: &[Vec<u8>], field: Arc<FieldSpec>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::new(rows.len(), cols, rows.concat(), field)
    }

    pub fn zeros(rows: usize, cols: usize, field: Arc<FieldSpec>) -> Self {
        Self::new(rows, cols, vec![0; rows * cols], field)
    }

    pub fn identity(n: usize, field: Arc<FieldSpec>) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// `self * other` (ordinary matrix product).
    pub fn mul(&self, other: &FFMatrix) -> FFMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = vec![0u8; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cell = &mut out[i * other.cols + j];
                    *cell = f.add(*cell, f.mul(a, other.get(k, j)));
                }
            }
        }
        FFMatrix::new(self.rows, other.cols, out, Arc::clone(f))
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &FFMatrix) -> FFMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        FFMatrix::new(self.rows + other.rows, self.cols, entries, Arc::clone(&self.field))
    }

    pub fn rank(&self) -> usize {
        rref_in_place(self.clone()).1.len()
    }
}

/// Gauss-Jordan elimination. Returns the reduced matrix and its pivot columns.
fn rref_in_place(mut m: FFMatrix) -> (FFMatrix, Vec<usize>) {
    let f = Arc::clone(&m.field);
    let cols = m.cols;
    let mut pivots = Vec::new();
    let mut lead = 0;
    for c in 0..cols {
        if lead == m.rows {
            break;
        }
        let Some(pr) = (lead..m.rows).find(|&r| m.entries[r * cols + c] != 0) else {
            continue;
        };
        if pr != lead {
            for j in 0..cols {
                m.entries.swap(pr * cols + j, lead * cols + j);
            }
        }
        let scale = f.inv(m.entries[lead * cols + c]);
        for j in 0..cols {
            let x = &mut m.entries[lead * cols + j];
            *x = f.mul(*x, scale);
        }
        for r in 0..m.rows {
            if r == lead {
                continue;
            }
            let factor = m.entries[r * cols + c];
            if factor == 0 {
                continue;
            }
            for j in 0..cols {
                let sub = f.mul(factor, m.entries[lead * cols + j]);
                let x = &mut m.entries[r * cols + j];
                *x = f.sub(*x, sub);
            }
        }
        pivots.push(c);
        lead += 1;
    }
    (m, pivots)
}

/// Reduced row echelon form; zero rows are moved to the bottom and the shape is kept.
pub fn rref(m: &FFMatrix) -> FFMatrix {
    rref_in_place(m.clone()).0
}

/// A subspace of F_q^n represented by its RREF basis (no zero rows).
///
/// Because RREF is canonical, equality and hashing of `Subspace` values are
/// equality of the underlying vector sets.
#[derive(Clone)]
pub struct Subspace {
    basis: FFMatrix,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.basis.field.order().hash(state);
        self.basis.cols.hash(state);
        self.basis.entries.hash(state);
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace({})", self.label())
    }
}

impl Subspace {
    /// Row space of `m`.
    pub fn span(m: &FFMatrix) -> Subspace {
        let (r, pivots) = rref_in_place(m.clone());
        let d = pivots.len();
        let entries = r.entries[..d * r.cols].to_vec();
        Subspace {
            basis: FFMatrix::new(d, r.cols, entries, Arc::clone(&r.field)),
        }
    }

    pub fn zero(n: usize, field: Arc<FieldSpec>) -> Subspace {
        Subspace {
            basis: FFMatrix::zeros(0, n, field),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &FFMatrix {
        &self.basis
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.basis.field
    }

    /// Canonical text form: basis rows as digit strings joined by `|`;
    /// the zero space of F_q^n is `0/n`.
    pub fn label(&self) -> String {
        if self.dim() == 0 {
            return format!("0/{}", self.ambient_dim());
        }
        let mut s = String::with_capacity(self.dim() * (self.ambient_dim() + 1));
        for r in 0..self.dim() {
            if r > 0 {
                s.push('|');
            }
            for &x in self.basis.row(r) {
                s.push(char::from_digit(x as u32, 10).unwrap());
            }
        }
        s
    }

    /// Image under appending `n - ambient_dim` zero coordinates to every vector.
    pub fn extend_coordinates(&self, n: usize) -> Subspace {
        let old = self.ambient_dim();
        assert!(n >= old, "cannot shrink the ambient space");
        let mut entries = Vec::with_capacity(self.dim() * n);
        for r in 0..self.dim() {
            entries.extend_from_slice(self.basis.row(r));
            entries.extend(std::iter::repeat(0).take(n - old));
        }
        // appending zero columns keeps RREF
        Subspace {
            basis: FFMatrix::new(self.dim(), n, entries, Arc::clone(self.field())),
        }
    }

    /// All `k`-dimensional subspaces of `self`.
    pub fn subspaces_of_dim(&self, k: usize) -> Vec<Subspace> {
        assert!(k <= self.dim());
        let coeffs = enumerate_subspaces_capped(self.dim(), k, self.field(), usize::MAX)
            .expect("uncapped enumeration");
        coeffs
            .iter()
            .map(|c| {
                if k == 0 {
                    Subspace::zero(self.ambient_dim(), Arc::clone(self.field()))
                } else {
                    Subspace::span(&c.basis.mul(&self.basis))
                }
            })
            .collect()
    }

    /// Whether the vector `v` lies in this subspace.
    pub fn contains_vector(&self, v: &[u8]) -> bool {
        let row = FFMatrix::new(1, v.len(), v.to_vec(), Arc::clone(self.field()));
        self.basis.vstack(&row).rank() == self.dim()
    }
}

/// All `d`-dimensional subspaces of F_q^n, using the default cap.
pub fn enumerate_subspaces(n: usize, d: usize, field: &Arc<FieldSpec>) -> Result<Vec<Subspace>> {
    enumerate_subspaces_capped(n, d, field, DEFAULT_CAP)
}

/// All `d`-dimensional subspaces of F_q^n, generated directly as RREF matrices:
/// for every pivot pattern, every filling of the free entries.
pub fn enumerate_subspaces_capped(
    n: usize,
    d: usize,
    field: &Arc<FieldSpec>,
    cap: usize,
) -> Result<Vec<Subspace>> {
    if d > n {
        return Err(Error::InvalidParams(format!("subspace dimension {d} exceeds {n}")));
    }
    let q = field.order();
    let total = gaussian_binomial(n as u32, d as u32, q as u64);
    let count: u128 = total.try_into().unwrap_or(u128::MAX);
    if count > cap as u128 {
        return Err(Error::EnumerationTooLarge { count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    if d == 0 {
        out.push(Subspace::zero(n, Arc::clone(field)));
        return Ok(out);
    }
    let mut pivots: Vec<usize> = (0..d).collect();
    loop {
        // free positions: (row, col) with col > pivot[row] and col not a pivot
        let free: Vec<(usize, usize)> = (0..d)
            .flat_map(|r| {
                let p = &pivots;
                (p[r] + 1..n).filter(move |c| !p.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let mut base = vec![0u8; d * n];
        for (r, &c) in pivots.iter().enumerate() {
            base[r * n + c] = 1;
        }
        let mut digits = vec![0u8; free.len()];
        'fill: loop {
            let mut entries = base.clone();
            for (&(r, c), &x) in free.iter().zip(&digits) {
                entries[r * n + c] = x;
            }
            out.push(Subspace {
                basis: FFMatrix::new(d, n, entries, Arc::clone(field)),
            });
            // odometer increment over the free entries
            let mut i = free.len();
            loop {
                if i == 0 {
                    break 'fill;
                }
                i -= 1;
                digits[i] += 1;
                if (digits[i] as u32) < q {
                    continue 'fill;
                }
                digits[i] = 0;
            }
        }
        // next combination of pivot columns
        let mut i = d;
        loop {
            if i == 0 {
                debug_assert_eq!(out.len() as u128, count);
                return Ok(out);
            }
            i -= 1;
            if pivots[i] < n - d + i {
                pivots[i] += 1;
                for j in i + 1..d {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// dim(a ∩ b) = dim a + dim b - dim(a + b).
pub fn intersection_dim(a: &Subspace, b: &Subspace) -> Result<usize> {
    if a.ambient_dim() != b.ambient_dim() || a.field().order() != b.field().order() {
        return Err(Error::AmbientMismatch(format!(
            "F_{}^{} vs F_{}^{}",
            a.field().order(),
            a.ambient_dim(),
            b.field().order(),
            b.ambient_dim()
        )));
    }
    let sum = a.basis.vstack(&b.basis).rank();
    Ok(a.dim() + b.dim() - sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::make_field;
    use proptest::prelude::*;

    fn gf(q: u32) -> Arc<FieldSpec> {
        Arc::new(make_field(q).unwrap())
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let f = gf(3);
        let id = FFMatrix::identity(4, f);
        assert_eq!(rref(&id), id);
    }

    #[test]
    fn rref_hand_reduction_gf2() {
        let f = gf(2);
        let m = FFMatrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1]], Arc::clone(&f));
        let expected = FFMatrix::from_rows(&[vec![1, 0, 1], vec![0, 1, 1]], f);
        let r = rref(&m);
        assert_eq!(r, expected);
        assert_eq!(rref(&r), r);
    }

    #[test]
    fn rref_of_zero_matrix() {
        let z = FFMatrix::zeros(3, 4, gf(5));
        assert_eq!(rref(&z), z);
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn enumerate_small_counts() {
        assert_eq!(enumerate_subspaces(2, 1, &gf(2)).unwrap().len(), 3);
        assert_eq!(enumerate_subspaces(4, 2, &gf(2)).unwrap().len(), 35);
        let z = enumerate_subspaces(3, 0, &gf(3)).unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(z[0].dim(), 0);
    }

    #[test]
    fn enumeration_count_matches_gaussian_binomial() {
        for q in [2u32, 3] {
            let f = gf(q);
            for n in 0..=6usize {
                for d in 0..=n {
                    let subs = enumerate_subspaces(n, d, &f).unwrap();
                    let expected = gaussian_binomial(n as u32, d as u32, q as u64);
                    assert_eq!(num_bigint::BigUint::from(subs.len()), expected, "n={n} d={d} q={q}");
                    let distinct: std::collections::HashSet<_> = subs.iter().collect();
                    assert_eq!(distinct.len(), subs.len());
                    for s in &subs {
                        assert_eq!(s.dim(), d);
                        assert_eq!(&Subspace::span(s.basis()), s, "enumerated basis is RREF");
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_respects_cap() {
        let err = enumerate_subspaces_capped(6, 3, &gf(2), 1000).unwrap_err();
        assert_eq!(err, Error::EnumerationTooLarge { count: 1395, cap: 1000 });
    }

    #[test]
    fn intersection_dims() {
        let f = gf(2);
        let lines = enumerate_subspaces(2, 1, &f).unwrap();
        assert_eq!(intersection_dim(&lines[0], &lines[0]).unwrap(), 1);
        assert_eq!(intersection_dim(&lines[0], &lines[1]).unwrap(), 0);

        // two 3-spaces of F_2^6 through span{e1, e2}
        let a = Subspace::span(&FFMatrix::from_rows(
            &[vec![1, 0, 0, 0, 0, 0], vec![0, 1, 0, 0, 0, 0], vec![0, 0, 1, 0, 0, 0]],
            Arc::clone(&f),
        ));
        let b = Subspace::span(&FFMatrix::from_rows(
            &[vec![1, 0, 0, 0, 0, 0], vec![0, 1, 0, 0, 0, 0], vec![0, 0, 0, 1, 1, 0]],
            Arc::clone(&f),
        ));
        assert_eq!(intersection_dim(&a, &b).unwrap(), 2);

        let c = Subspace::zero(5, f);
        assert!(matches!(intersection_dim(&a, &c), Err(Error::AmbientMismatch(_))));
    }

    #[test]
    fn hyperplanes_of_a_subspace() {
        let f = gf(3);
        let subs = enumerate_subspaces(4, 2, &f).unwrap();
        let v = &subs[17];
        let hs = v.subspaces_of_dim(1);
        assert_eq!(hs.len(), 4); // [2 1]_3
        for h in &hs {
            assert_eq!(intersection_dim(h, v).unwrap(), 1);
        }
    }

    #[test]
    fn extension_preserves_intersections() {
        let f = gf(2);
        let subs = enumerate_subspaces(4, 2, &f).unwrap();
        for a in subs.iter().take(10) {
            for b in subs.iter().skip(20) {
                let before = intersection_dim(a, b).unwrap();
                let after = intersection_dim(&a.extend_coordinates(6), &b.extend_coordinates(6)).unwrap();
                assert_eq!(before, after);
            }
        }
    }

    fn matrix_strategy() -> impl Strategy<Value = (u32, usize, usize, Vec<u8>)> {
        (prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9]), 1usize..5, 1usize..7).prop_flat_map(
            |(q, r, c)| (Just(q), Just(r), Just(c), prop::collection::vec(0u8..q as u8, r * c)),
        )
    }

    proptest! {
        #[test]
        fn rref_is_idempotent_and_rank_preserving((q, r, c, entries) in matrix_strategy()) {
            let f = gf(q);
            let m = FFMatrix::new(r, c, entries, f);
            let once = rref(&m);
            prop_assert_eq!(rref(&once), once.clone());
            prop_assert_eq!(once.rank(), m.rank());
            // row space preserved
            prop_assert_eq!(Subspace::span(&once), Subspace::span(&m));
            prop_assert_eq!(m.vstack(&once).rank(), m.rank());
        }
    }
}
