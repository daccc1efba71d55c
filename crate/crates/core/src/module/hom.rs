//! Homomorphism spaces and what is computed from them: isomorphism tests,
//! `Fac`/`Sub` membership, annihilators and summand counts.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ModuleError, ModuleRep};
use crate::field::Field;
use crate::linalg::{kernel_of_rows, Matrix, Subspace};

/// A module map given by its vertex blocks `e_v M -> e_v N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism<E> {
    pub blocks: Vec<Matrix<E>>,
}

impl<E: Clone> Morphism<E> {
    /// The global `dim N x dim M` matrix.
    pub fn to_matrix<K: Field<Elem = E>>(&self, k: &K) -> Matrix<E> {
        let rows: usize = self.blocks.iter().map(|b| b.rows()).sum();
        let cols: usize = self.blocks.iter().map(|b| b.cols()).sum();
        let mut out = Matrix::zeros(k, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in &self.blocks {
            out.set_block(r, c, b);
            r += b.rows();
            c += b.cols();
        }
        out
    }

    pub fn is_invertible<K: Field<Elem = E>>(&self, k: &K) -> bool {
        self.blocks.iter().all(|b| b.is_invertible(k))
    }
}

/// Summands of `M` counted with and without multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SummandCount {
    pub total: usize,
    pub distinct: usize,
}

fn combine<K: Field>(k: &K, basis: &[Morphism<K::Elem>], coefs: &[K::Elem]) -> Morphism<K::Elem> {
    let mut blocks = basis[0].blocks.iter().map(|b| Matrix::zeros(k, b.rows(), b.cols())).collect::<Vec<_>>();
    for (f, c) in basis.iter().zip(coefs) {
        for (acc, b) in blocks.iter_mut().zip(&f.blocks) {
            acc.add_scaled(k, c, b);
        }
    }
    Morphism { blocks }
}

impl<K: Field> ModuleRep<K> {
    /// Basis of `Hom(self, n)`: block families commuting with every generator.
    pub fn hom_space(&self, n: &Self) -> Vec<Morphism<K::Elem>> {
        assert!(self.compatible(n), "Hom between modules over different algebras");
        let k = self.field();
        let verts = self.dims.len();
        let mut base = vec![0; verts + 1];
        for v in 0..verts {
            base[v + 1] = base[v] + n.dims[v] * self.dims[v];
        }
        let unknowns = base[verts];
        if unknowns == 0 {
            return Vec::new();
        }
        // F_v[r][c] is unknown base[v] + r * dim e_v M + c
        let var = |v: usize, r: usize, c: usize| base[v] + r * self.dims[v] + c;
        let mut rows = Vec::new();
        for (g, &b) in self.alg.generators().iter().enumerate() {
            let (s, t) = self.alg.ends(b, self.side);
            let (mg, ng) = (&self.gens[g], &n.gens[g]);
            for r in 0..n.dims[t] {
                for c in 0..self.dims[s] {
                    let mut row = vec![k.zero(); unknowns];
                    for x in 0..n.dims[s] {
                        let a = ng.get(r, x);
                        if !k.is_zero(a) {
                            let i = var(s, x, c);
                            row[i] = k.add(&row[i], a);
                        }
                    }
                    for x in 0..self.dims[t] {
                        let a = mg.get(x, c);
                        if !k.is_zero(a) {
                            let i = var(t, r, x);
                            row[i] = k.sub(&row[i], a);
                        }
                    }
                    if row.iter().any(|x| !k.is_zero(x)) {
                        rows.push(row);
                    }
                }
            }
        }
        kernel_of_rows(k, rows, unknowns)
            .into_iter()
            .map(|sol| Morphism {
                blocks: (0..verts)
                    .map(|v| Matrix::from_fn(n.dims[v], self.dims[v], |r, c| sol[var(v, r, c)].clone()))
                    .collect(),
            })
            .collect()
    }

    pub fn hom_dim(&self, n: &Self) -> usize {
        self.hom_space(n).len()
    }

    /// Searches `Hom(self, n)` for an invertible element: seeded random
    /// combinations first, then the points `(1, t, t², …)` for
    /// `t = 0..=dim·(dim Hom − 1)`. A `true` answer is always certified.
    pub fn is_isomorphic(&self, n: &Self) -> bool {
        if !self.compatible(n) || self.dims != n.dims {
            return false;
        }
        if self.dim() == 0 {
            return true;
        }
        let k = self.field();
        let basis = self.hom_space(n);
        if basis.is_empty() {
            return false;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x15_0f_15);
        for _ in 0..8 {
            let coefs: Vec<K::Elem> = (0..basis.len()).map(|_| k.from_i64(rng.gen_range(-1000..=1000))).collect();
            if combine(k, &basis, &coefs).is_invertible(k) {
                return true;
            }
        }
        let points = self.dim() * (basis.len() - 1) + 1;
        for t in 0..points {
            let t = k.from_i64(t as i64);
            let mut coefs = Vec::with_capacity(basis.len());
            let mut p = k.one();
            for _ in 0..basis.len() {
                coefs.push(p.clone());
                p = k.mul(&p, &t);
            }
            if combine(k, &basis, &coefs).is_invertible(k) {
                return true;
            }
        }
        false
    }

    /// Sum of the images of all maps `t -> self`.
    pub fn trace_of(&self, t: &Self) -> Subspace<K::Elem> {
        let k = self.field();
        let mut trace = Subspace::zero(self.dim());
        for f in t.hom_space(self) {
            let m = f.to_matrix(k);
            for c in 0..m.cols() {
                trace.insert(k, m.column(c));
                if trace.dim() == self.dim() {
                    return trace;
                }
            }
        }
        trace
    }

    /// `self ∈ Fac(t)`: the images of all maps `t -> self` cover `self`.
    pub fn in_fac(&self, t: &Self) -> bool {
        self.trace_of(t).dim() == self.dim()
    }

    /// `self ∈ Sub(t)`: the maps `self -> t` have no common kernel.
    pub fn in_sub(&self, t: &Self) -> bool {
        let k = self.field();
        if self.dim() == 0 {
            return true;
        }
        let rows: Vec<Vec<K::Elem>> = self.hom_space(t).iter().flat_map(|f| f.to_matrix(k).to_rows()).collect();
        kernel_of_rows(k, rows, self.dim()).is_empty()
    }

    /// `{x ∈ A : x M = 0}` in algebra coordinates, solved one bigraded block at a time.
    pub fn annihilator(&self) -> Subspace<K::Elem> {
        let k = self.field();
        let alg = &self.alg;
        let verts = self.dims.len();
        let mut vectors = Vec::new();
        for s in 0..verts {
            for t in 0..verts {
                let block: Vec<usize> = (0..alg.dim()).filter(|&b| alg.ends(b, self.side) == (s, t)).collect();
                if block.is_empty() {
                    continue;
                }
                let entries = self.dims[t] * self.dims[s];
                let actions: Vec<Matrix<K::Elem>> = block.iter().map(|&b| self.action(b)).collect();
                let rows: Vec<Vec<K::Elem>> =
                    (0..entries).map(|e| actions.iter().map(|m| m.entries()[e].clone()).collect()).collect();
                for sol in kernel_of_rows(k, rows, block.len()) {
                    let mut x = vec![k.zero(); alg.dim()];
                    for (&b, c) in block.iter().zip(sol) {
                        x[b] = c;
                    }
                    vectors.push(x);
                }
            }
        }
        Subspace::from_vectors(k, alg.dim(), vectors)
    }

    /// Number of indecomposable summands, from `End(M) / rad End(M)`.
    ///
    /// The radical is the kernel of the trace form `(x, y) ↦ tr(xy)` on `M`,
    /// valid in characteristic 0 or above `dim M`. Assumes `End/rad` is split.
    pub fn num_indec_summands(&self) -> Result<SummandCount, ModuleError> {
        let k = self.field();
        let d = self.dim();
        if d == 0 {
            return Ok(SummandCount { total: 0, distinct: 0 });
        }
        let p = k.characteristic();
        if p != 0 && p as usize <= d {
            return Err(ModuleError::CharacteristicUnsupported { characteristic: p, dim: d });
        }
        let flat: Vec<Vec<K::Elem>> = self.hom_space(self).iter().map(|f| f.to_matrix(k).entries().to_vec()).collect();
        let end = Subspace::from_vectors(k, d * d, flat);
        let m = end.dim();
        let mats: Vec<Matrix<K::Elem>> =
            end.basis().iter().map(|row| Matrix::from_fn(d, d, |r, c| row[r * d + c].clone())).collect();
        let trace = |x: &Matrix<K::Elem>| (0..d).fold(k.zero(), |acc, i| k.add(&acc, x.get(i, i)));
        let products: Vec<Vec<Matrix<K::Elem>>> =
            mats.iter().map(|a| mats.iter().map(|b| a.mul(k, b)).collect()).collect();
        let gram: Vec<Vec<K::Elem>> = (0..m).map(|i| (0..m).map(|j| trace(&products[i][j])).collect()).collect();
        let rad = Subspace::from_vectors(k, m, kernel_of_rows(k, gram, m));
        let keep = rad.non_pivots();
        let q = keep.len();
        // structure constants of End/rad on the kept basis vectors
        let reduce = |x: &Matrix<K::Elem>| -> Vec<K::Elem> {
            let mut coords = end.coordinates(x.entries());
            rad.reduce(k, &mut coords);
            keep.iter().map(|&i| coords[i].clone()).collect()
        };
        let st: Vec<Vec<Vec<K::Elem>>> =
            keep.iter().map(|&a| keep.iter().map(|&b| reduce(&products[a][b])).collect()).collect();
        let commutator_rows = |x: &[K::Elem]| -> Vec<Vec<K::Elem>> {
            // row r, column b: coefficient r of (x q_b - q_b x)
            let mut rows = vec![vec![k.zero(); q]; q];
            for (a, xa) in x.iter().enumerate() {
                if k.is_zero(xa) {
                    continue;
                }
                for b in 0..q {
                    for r in 0..q {
                        let diff = k.sub(&st[a][b][r], &st[b][a][r]);
                        k.add_mul_assign(&mut rows[r][b], xa, &diff);
                    }
                }
            }
            rows
        };
        let mut centre_rows = Vec::new();
        for a in 0..q {
            let mut e = vec![k.zero(); q];
            e[a] = k.one();
            centre_rows.extend(commutator_rows(&e));
        }
        let distinct = kernel_of_rows(k, centre_rows, q).len();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5e_ed);
        let mut total = q;
        for _ in 0..6 {
            let x: Vec<K::Elem> = (0..q).map(|_| k.from_i64(rng.gen_range(-1000..=1000))).collect();
            total = total.min(kernel_of_rows(k, commutator_rows(&x), q).len());
        }
        Ok(SummandCount { total, distinct })
    }
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::*;
    use crate::algebra::Side;

    #[test]
    fn projective_yoneda() {
        let a = b2();
        let m = ModuleRep::generalized_simple(a.clone(), 0, Side::Left);
        let (pi, _) = ModuleRep::regular(a.clone(), Side::Left);
        for i in 0..2 {
            let p = ModuleRep::projective(a.clone(), i, Side::Left);
            assert_eq!(p.hom_dim(&m), m.dims()[i]);
            assert_eq!(p.hom_dim(&pi), pi.dims()[i]);
        }
        assert_eq!(pi.hom_dim(&pi), a.dim());
        let e2 = ModuleRep::generalized_simple(a.clone(), 1, Side::Left);
        assert_eq!(m.hom_dim(&e2), 0);
    }

    #[test]
    fn isomorphism_tests() {
        let a = b2();
        let e1 = ModuleRep::generalized_simple(a.clone(), 0, Side::Left);
        let e2 = ModuleRep::generalized_simple(a.clone(), 1, Side::Left);
        assert!(e1.is_isomorphic(&e1));
        assert!(!e1.is_isomorphic(&e2));
        let (pi, _) = ModuleRep::regular(a.clone(), Side::Left);
        let (pi_op, _) = ModuleRep::regular(a.clone(), Side::Right);
        assert!(pi.dual().is_isomorphic(&pi_op));
        assert!(pi.dual().dual().is_isomorphic(&pi));
        let e1r = ModuleRep::generalized_simple(a.clone(), 0, Side::Right);
        assert!(e1.dual().is_isomorphic(&e1r));
    }

    #[test]
    fn fac_and_sub() {
        let a = b2();
        let e1 = ModuleRep::generalized_simple(a.clone(), 0, Side::Left);
        let (pi, _) = ModuleRep::regular(a.clone(), Side::Left);
        assert!(e1.in_fac(&pi));
        assert!(!pi.in_fac(&e1));
        assert!(e1.in_sub(&pi.dual().dual()));
        let zero = ModuleRep::zero(a.clone(), Side::Left);
        assert!(zero.in_fac(&e1));
    }

    #[test]
    fn annihilators() {
        let a = b2();
        let (pi, _) = ModuleRep::regular(a.clone(), Side::Left);
        assert_eq!(pi.annihilator().dim(), 0);
        let zero = ModuleRep::zero(a.clone(), Side::Left);
        assert_eq!(zero.annihilator().dim(), a.dim());
        let e2 = ModuleRep::generalized_simple(a.clone(), 1, Side::Left);
        assert_eq!(e2.annihilator().dim(), a.dim() - 1);
    }

    #[test]
    fn summand_counts() {
        let a = b2();
        let (pi, _) = ModuleRep::regular(a.clone(), Side::Left);
        assert_eq!(pi.num_indec_summands().unwrap(), SummandCount { total: 2, distinct: 2 });
        let e1 = ModuleRep::generalized_simple(a.clone(), 0, Side::Left);
        assert_eq!(e1.num_indec_summands().unwrap(), SummandCount { total: 1, distinct: 1 });
        let twice = ModuleRep::direct_sum(&[&e1, &e1]);
        assert_eq!(twice.num_indec_summands().unwrap(), SummandCount { total: 2, distinct: 1 });
        let mixed = ModuleRep::direct_sum(&[&pi, &e1]);
        assert_eq!(mixed.num_indec_summands().unwrap(), SummandCount { total: 3, distinct: 3 });
    }
}
