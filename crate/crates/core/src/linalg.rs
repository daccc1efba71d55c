//! Exact dense linear algebra over a [`Field`]: matrices, reduced row echelon
//! forms, kernels and canonical subspaces.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<K: Field<Elem = E>>(k: &K, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![k.zero(); rows * cols] }
    }

    pub fn identity<K: Field<Elem = E>>(k: &K, n: usize) -> Self {
        let mut m = Self::zeros(k, n, n);
        for i in 0..n {
            m.set(i, i, k.one());
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn is_zero<K: Field<Elem = E>>(&self, k: &K) -> bool {
        self.data.iter().all(|x| k.is_zero(x))
    }

    pub fn mul<K: Field<Elem = E>>(&self, k: &K, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Self::zeros(k, self.rows, other.cols);
        for r in 0..self.rows {
            for m in 0..self.cols {
                let a = self.get(r, m);
                if k.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(m, c);
                    if !k.is_zero(b) {
                        let idx = r * out.cols + c;
                        k.add_mul_assign(&mut out.data[idx], a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec<K: Field<Elem = E>>(&self, k: &K, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "matrix/vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = k.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    k.add_mul_assign(&mut acc, a, b);
                }
                acc
            })
            .collect()
    }

    pub fn add<K: Field<Elem = E>>(&self, k: &K, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| k.add(a, b)).collect(),
        }
    }

    pub fn sub<K: Field<Elem = E>>(&self, k: &K, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| k.sub(a, b)).collect(),
        }
    }

    pub fn scale<K: Field<Elem = E>>(&self, k: &K, s: &E) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| k.mul(a, s)).collect() }
    }

    /// `self += s * other`
    pub fn add_scaled<K: Field<Elem = E>>(&mut self, k: &K, s: &E, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if k.is_zero(s) {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            k.add_mul_assign(a, s, b);
        }
    }

    pub fn rank<K: Field<Elem = E>>(&self, k: &K) -> usize {
        rref(k, self.to_rows(), self.cols).1.len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel<K: Field<Elem = E>>(&self, k: &K) -> Vec<Vec<E>> {
        kernel_of_rows(k, self.to_rows(), self.cols)
    }

    /// Columns of a square matrix must be linearly independent.
    pub fn is_invertible<K: Field<Elem = E>>(&self, k: &K) -> bool {
        self.rows == self.cols && self.rank(k) == self.rows
    }

    /// Dense block copy into `self` at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }
}

/// Reduced row echelon form of the given rows; returns the nonzero rows and
/// their pivot columns (strictly increasing).
pub fn rref<K: Field>(k: &K, mut rows: Vec<Vec<K::Elem>>, cols: usize) -> (Vec<Vec<K::Elem>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..cols {
        if top == rows.len() {
            break;
        }
        let Some(p) = (top..rows.len()).find(|&r| !k.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(top, p);
        let inv = k.inv(&rows[top][col]).expect("nonzero pivot");
        if !k.is_one(&inv) {
            for x in rows[top].iter_mut() {
                if !k.is_zero(x) {
                    *x = k.mul(x, &inv);
                }
            }
        }
        let support: Vec<(usize, K::Elem)> =
            (col..cols).filter(|&c| !k.is_zero(&rows[top][c])).map(|c| (c, rows[top][c].clone())).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || k.is_zero(&row[col]) {
                continue;
            }
            let f = k.neg(&row[col]);
            for (c, y) in &support {
                k.add_mul_assign(&mut row[*c], &f, y);
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    (rows, pivots)
}

pub fn kernel_of_rows<K: Field>(k: &K, rows: Vec<Vec<K::Elem>>, cols: usize) -> Vec<Vec<K::Elem>> {
    let (rows, pivots) = rref(k, rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![k.zero(); cols];
        v[free] = k.one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = k.neg(&row[free]);
        }
        basis.push(v);
    }
    basis
}

/// A linear subspace of `K^n` held in reduced row echelon form, so that two
/// subspaces are equal exactly when their representations are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<E> {
    ambient: usize,
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full<K: Field<Elem = E>>(k: &K, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![k.zero(); ambient];
                v[i] = k.one();
                v
            })
            .collect();
        Subspace { ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn from_vectors<K: Field<Elem = E>>(k: &K, ambient: usize, vectors: impl IntoIterator<Item = Vec<E>>) -> Self {
        let rows: Vec<Vec<E>> = vectors.into_iter().collect();
        for v in &rows {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
        }
        let (rows, pivots) = rref(k, rows, ambient);
        Subspace { ambient, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` modulo the subspace in place; the result is zero exactly
    /// when `v` lies in the subspace, and has zeros at every pivot column.
    pub fn reduce<K: Field<Elem = E>>(&self, k: &K, v: &mut [E]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if k.is_zero(&v[p]) {
                continue;
            }
            let f = k.neg(&v[p]);
            for (x, y) in v.iter_mut().zip(row) {
                k.add_mul_assign(x, &f, y);
            }
        }
    }

    pub fn contains<K: Field<Elem = E>>(&self, k: &K, v: &[E]) -> bool {
        let mut w = v.to_vec();
        self.reduce(k, &mut w);
        w.iter().all(|x| k.is_zero(x))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert<K: Field<Elem = E>>(&mut self, k: &K, mut v: Vec<E>) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(k, &mut v);
        let Some(p) = v.iter().position(|x| !k.is_zero(x)) else {
            return false;
        };
        let inv = k.inv(&v[p]).expect("nonzero");
        for x in v.iter_mut() {
            if !k.is_zero(x) {
                *x = k.mul(x, &inv);
            }
        }
        for row in self.rows.iter_mut() {
            if k.is_zero(&row[p]) {
                continue;
            }
            let f = k.neg(&row[p]);
            for (x, y) in row.iter_mut().zip(&v) {
                k.add_mul_assign(x, &f, y);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Coordinates of `v` (assumed to lie in the subspace) in the echelon basis.
    pub fn coordinates(&self, v: &[E]) -> Vec<E> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn is_subspace_of<K: Field<Elem = E>>(&self, k: &K, other: &Self) -> bool {
        self.dim() <= other.dim() && self.rows.iter().all(|v| other.contains(k, v))
    }

    pub fn sum<K: Field<Elem = E>>(&self, k: &K, other: &Self) -> Self {
        let mut out = self.clone();
        for v in &other.rows {
            out.insert(k, v.clone());
        }
        out
    }

    pub fn intersection<K: Field<Elem = E>>(&self, k: &K, other: &Self) -> Self {
        // x = sum a_i u_i = sum b_j v_j  <=>  (a, -b) in ker [U^T | V^T]
        let (a, b) = (self.dim(), other.dim());
        let rows: Vec<Vec<E>> = (0..self.ambient)
            .map(|c| {
                let mut r = Vec::with_capacity(a + b);
                r.extend(self.rows.iter().map(|u| u[c].clone()));
                r.extend(other.rows.iter().map(|v| v[c].clone()));
                r
            })
            .collect();
        let ker = kernel_of_rows(k, rows, a + b);
        let vecs = ker.into_iter().map(|coef| {
            let mut x = vec![k.zero(); self.ambient];
            for (ci, u) in coef[..a].iter().zip(&self.rows) {
                for (xx, uu) in x.iter_mut().zip(u) {
                    k.add_mul_assign(xx, ci, uu);
                }
            }
            x
        });
        Subspace::from_vectors(k, self.ambient, vecs)
    }

    /// Standard basis columns not occupied by a pivot; their unit vectors span
    /// a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Matrix<num_rational::BigRational> {
        let k = Rationals;
        let cols = rows[0].len();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| k.from_i64(x)).collect()).collect(), cols)
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = Rationals;
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(&k), 1);
        let ker = m.kernel(&k);
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(m.mul_vec(&k, &v).iter().all(|x| k.is_zero(x)));
        }
    }

    #[test]
    fn subspace_intersection_of_planes() {
        let k = Rationals;
        let e = |v: [i64; 3]| v.iter().map(|&x| k.from_i64(x)).collect::<Vec<_>>();
        let a = Subspace::from_vectors(&k, 3, [e([1, 0, 0]), e([0, 1, 0])]);
        let b = Subspace::from_vectors(&k, 3, [e([0, 1, 0]), e([0, 0, 1])]);
        let c = a.intersection(&k, &b);
        assert_eq!(c, Subspace::from_vectors(&k, 3, [e([0, 5, 0])]));
        assert_eq!(a.sum(&k, &b), Subspace::full(&k, 3));
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-3i64..4, 12)) {
            let k = PrimeField::new(1_000_000_007).unwrap();
            let m = Matrix::from_fn(3, 4, |r, c| k.from_i64(entries[r * 4 + c]));
            prop_assert_eq!(m.rank(&k) + m.kernel(&k).len(), 4);
        }

        #[test]
        fn echelon_form_is_canonical(entries in proptest::collection::vec(-2i64..3, 15)) {
            let k = Rationals;
            let vecs: Vec<Vec<_>> = entries.chunks(5).map(|c| c.iter().map(|&x| k.from_i64(x)).collect()).collect();
            let forward = Subspace::from_vectors(&k, 5, vecs.clone());
            let mut incremental = Subspace::zero(5);
            for v in vecs.into_iter().rev() {
                incremental.insert(&k, v);
            }
            prop_assert_eq!(forward, incremental);
        }
    }
}
