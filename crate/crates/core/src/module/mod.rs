//! Finite-dimensional modules given by one matrix per algebra generator.
//!
//! A module stores `dim e_v M` for every vertex and, for each length-one basis
//! element `g` with ends `s -> t`, the matrix of `g : e_s M -> e_t M`. Right
//! modules are left modules over the opposite algebra ([`Side::Right`]).
//! Vectors of `M` use global coordinates: the vertex blocks in vertex order.

mod hom;
mod homological;

pub use hom::{Morphism, SummandCount};
pub use homological::{PresentationMap, ProjectiveCover, Resolution};

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{FinDimAlgebra, Side};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("malformed module data: {0}")]
    Shape(String),
    #[error("relation {label} does not act as zero")]
    RelationViolated { label: String },
    #[error("subspace is not a submodule")]
    NotSubmodule,
    #[error("not locally free at vertex {vertex}: nilpotent blocks {blocks:?}")]
    NotLocallyFree { vertex: usize, blocks: Vec<usize> },
    #[error("modules live over different algebras or sides")]
    SideMismatch,
    #[error("characteristic {characteristic} too small for a module of dimension {dim}")]
    CharacteristicUnsupported { characteristic: u64, dim: usize },
}

/// `r_i` with `dim e_i M = c_i r_i` for a locally free module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankVector(pub Vec<usize>);

/// The action of `ε_i` on `e_i M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HiModuleView<E> {
    pub vertex: usize,
    pub c: u64,
    pub nilpotent: Matrix<E>,
}

#[derive(Debug, Clone)]
pub struct ModuleRep<K: Field> {
    alg: Arc<FinDimAlgebra<K>>,
    side: Side,
    dims: Vec<usize>,
    gens: Vec<Matrix<K::Elem>>,
}

/// Basis of a sum of indecomposable projectives `⊕_s A e_{v_s}`: entry
/// `coord` is the global coordinate of `(summand, basis word)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjLayout {
    pub summands: Vec<usize>,
    /// `(summand, basis index)` per global coordinate.
    pub elements: Vec<(usize, usize)>,
}

impl ProjLayout {
    pub fn coord(&self, summand: usize, b: usize) -> Option<usize> {
        self.elements.iter().position(|&e| e == (summand, b))
    }
}

impl<K: Field> ModuleRep<K> {
    /// Validates shapes and that every defining relation acts as zero.
    pub fn new(
        alg: Arc<FinDimAlgebra<K>>,
        side: Side,
        dims: Vec<usize>,
        gens: Vec<Matrix<K::Elem>>,
    ) -> Result<Self, ModuleError> {
        let m = Self::new_unchecked(alg, side, dims, gens)?;
        m.check_relations()?;
        Ok(m)
    }

    fn new_unchecked(
        alg: Arc<FinDimAlgebra<K>>,
        side: Side,
        dims: Vec<usize>,
        gens: Vec<Matrix<K::Elem>>,
    ) -> Result<Self, ModuleError> {
        if dims.len() != alg.vertices() || gens.len() != alg.generators().len() {
            return Err(ModuleError::Shape(String::from("wrong number of vertices or generators")));
        }
        for (g, m) in gens.iter().enumerate() {
            let (s, t) = alg.ends(alg.generators()[g], side);
            if m.rows() != dims[t] || m.cols() != dims[s] {
                return Err(ModuleError::Shape(alloc::format!("generator {g} has the wrong block shape")));
            }
        }
        Ok(ModuleRep { alg, side, dims, gens })
    }

    pub fn zero(alg: Arc<FinDimAlgebra<K>>, side: Side) -> Self {
        let dims = vec![0; alg.vertices()];
        let k = alg.field().clone();
        let gens = (0..alg.generators().len()).map(|_| Matrix::zeros(&k, 0, 0)).collect();
        ModuleRep { alg, side, dims, gens }
    }

    pub fn algebra(&self) -> &Arc<FinDimAlgebra<K>> {
        &self.alg
    }

    pub fn field(&self) -> &K {
        self.alg.field()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn offset(&self, v: usize) -> usize {
        self.dims[..v].iter().sum()
    }

    pub fn generator_action(&self, g: usize) -> &Matrix<K::Elem> {
        &self.gens[g]
    }

    pub fn compatible(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) && self.side == other.side
    }

    /// Block `e_s M -> e_t M` of basis element `b`.
    pub fn action(&self, b: usize) -> Matrix<K::Elem> {
        let k = self.field();
        let (s, t) = self.alg.ends(b, self.side);
        let word = self.alg.side_word(b, self.side);
        if word.is_empty() {
            return Matrix::identity(k, self.dims[s]);
        }
        let mut m = self.gens[word[0]].clone();
        for &g in &word[1..] {
            m = m.mul(k, &self.gens[g]);
        }
        debug_assert_eq!((m.rows(), m.cols()), (self.dims[t], self.dims[s]));
        m
    }

    /// Action of `b` on all of `M`, as a `dim M x dim M` matrix.
    pub fn full_action(&self, b: usize) -> Matrix<K::Elem> {
        let (s, t) = self.alg.ends(b, self.side);
        let mut out = Matrix::zeros(self.field(), self.dim(), self.dim());
        out.set_block(self.offset(t), self.offset(s), &self.action(b));
        out
    }

    /// Action of an algebra element (in basis coordinates) on all of `M`.
    pub fn element_action(&self, x: &[K::Elem]) -> Matrix<K::Elem> {
        let k = self.field();
        let mut out = Matrix::zeros(k, self.dim(), self.dim());
        for (b, c) in x.iter().enumerate() {
            if !k.is_zero(c) {
                out.add_scaled(k, c, &self.full_action(b));
            }
        }
        out
    }

    /// Projection of a global vector onto vertex `v`, in local coordinates.
    pub fn local(&self, v: usize, x: &[K::Elem]) -> Vec<K::Elem> {
        let o = self.offset(v);
        x[o..o + self.dims[v]].to_vec()
    }

    /// Every defining relation must act as zero.
    pub fn check_relations(&self) -> Result<(), ModuleError> {
        let k = self.field();
        let p = self.alg.presentation();
        let arrow_actions: Vec<Matrix<K::Elem>> =
            (0..p.arrows.len()).map(|a| self.element_action(self.alg.arrow_value(a))).collect();
        for rel in &p.relations {
            let mut total = Matrix::zeros(k, self.dim(), self.dim());
            for (path, &coef) in &rel.terms {
                let mut m = Matrix::identity(k, self.dim());
                let arrows: Vec<usize> = match self.side {
                    Side::Left => path.arrows.clone(),
                    Side::Right => path.arrows.iter().rev().copied().collect(),
                };
                for a in arrows {
                    m = m.mul(k, &arrow_actions[a]);
                }
                total.add_scaled(k, &k.from_i64(coef), &m);
            }
            if !total.is_zero(k) {
                return Err(ModuleError::RelationViolated { label: rel.label.clone() });
            }
        }
        Ok(())
    }

    /// Sum of indecomposable projectives `⊕_s A e_{v_s}` on the given side.
    pub fn projective_sum(alg: Arc<FinDimAlgebra<K>>, side: Side, summands: &[usize]) -> (Self, ProjLayout) {
        let n = alg.vertices();
        let k = alg.field().clone();
        let mut elements = Vec::new();
        let mut dims = vec![0; n];
        for v in 0..n {
            for (s, &w) in summands.iter().enumerate() {
                for b in 0..alg.dim() {
                    if alg.ends(b, side) == (w, v) {
                        elements.push((s, b));
                        dims[v] += 1;
                    }
                }
            }
        }
        let layout = ProjLayout { summands: summands.to_vec(), elements };
        let pos: alloc::collections::BTreeMap<(usize, usize), usize> =
            layout.elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let offsets: Vec<usize> = (0..n).map(|v| dims[..v].iter().sum()).collect();
        let gens = alg
            .generators()
            .iter()
            .map(|&g| {
                let (s, t) = alg.ends(g, side);
                let mut m = Matrix::zeros(&k, dims[t], dims[s]);
                for (col, &(sm, b)) in layout.elements.iter().enumerate() {
                    if alg.ends(b, side).1 != s {
                        continue;
                    }
                    for (r, c) in alg.side_mult(g, b, side) {
                        let row = pos[&(sm, *r)];
                        m.set(row - offsets[t], col - offsets[s], c.clone());
                    }
                }
                m
            })
            .collect();
        let module = ModuleRep { alg, side, dims, gens };
        (module, layout)
    }

    /// `A e_i` (left) or `e_i A` (right).
    pub fn projective(alg: Arc<FinDimAlgebra<K>>, i: usize, side: Side) -> Self {
        Self::projective_sum(alg, side, &[i]).0
    }

    /// `A` as a module over itself, with the map from algebra basis indices to
    /// global coordinates.
    pub fn regular(alg: Arc<FinDimAlgebra<K>>, side: Side) -> (Self, Vec<usize>) {
        let n = alg.vertices();
        let summands: Vec<usize> = (0..n).collect();
        let (m, layout) = Self::projective_sum(alg, side, &summands);
        let mut coords = vec![0; m.alg.dim()];
        for (i, &(_, b)) in layout.elements.iter().enumerate() {
            coords[b] = i;
        }
        (m, coords)
    }

    /// `E_i`: `c_i`-dimensional at `i`, `ε_i` a single Jordan block, all else zero.
    pub fn generalized_simple(alg: Arc<FinDimAlgebra<K>>, i: usize, side: Side) -> Self {
        let c = alg.symmetrizer()[i] as usize;
        Self::loop_module(alg, i, side, c, true)
    }

    /// `S_i`: one-dimensional at `i`.
    pub fn simple(alg: Arc<FinDimAlgebra<K>>, i: usize, side: Side) -> Self {
        Self::loop_module(alg, i, side, 1, false)
    }

    fn loop_module(alg: Arc<FinDimAlgebra<K>>, i: usize, side: Side, size: usize, jordan: bool) -> Self {
        let k = alg.field().clone();
        let mut dims = vec![0; alg.vertices()];
        dims[i] = size;
        let loop_arrow = alg.presentation().loop_arrow(i);
        let gens = alg
            .generators()
            .iter()
            .map(|&g| {
                let (s, t) = alg.ends(g, side);
                let mut m = Matrix::zeros(&k, dims[t], dims[s]);
                if jordan && alg.basis()[g].word == [loop_arrow] {
                    for r in 1..size {
                        m.set(r, r - 1, k.one());
                    }
                }
                m
            })
            .collect();
        ModuleRep { alg, side, dims, gens }
    }

    pub fn direct_sum(parts: &[&Self]) -> Self {
        let first = parts.first().expect("at least one summand");
        let k = first.field().clone();
        let n = first.alg.vertices();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let gens = (0..first.gens.len())
            .map(|g| {
                let (s, t) = first.alg.ends(first.alg.generators()[g], first.side);
                let mut m = Matrix::zeros(&k, dims[t], dims[s]);
                let (mut r0, mut c0) = (0, 0);
                for p in parts {
                    assert!(p.compatible(first), "summands over different algebras");
                    m.set_block(r0, c0, &p.gens[g]);
                    r0 += p.dims[t];
                    c0 += p.dims[s];
                }
                m
            })
            .collect();
        ModuleRep { alg: first.alg.clone(), side: first.side, dims, gens }
    }

    /// `D M = Hom_K(M, K)` over the opposite side; blocks are transposed.
    pub fn dual(&self) -> Self {
        ModuleRep {
            alg: self.alg.clone(),
            side: self.side.flip(),
            dims: self.dims.clone(),
            gens: self.gens.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// `Σ_g image(g)`, the radical of `M`.
    pub fn radical(&self) -> Subspace<K::Elem> {
        let k = self.field();
        let mut out = Subspace::zero(self.dim());
        for (g, m) in self.gens.iter().enumerate() {
            let (_, t) = self.alg.ends(self.alg.generators()[g], self.side);
            let o = self.offset(t);
            for c in 0..m.cols() {
                let mut v = vec![k.zero(); self.dim()];
                for r in 0..m.rows() {
                    v[o + r] = m.get(r, c).clone();
                }
                out.insert(k, v);
            }
        }
        out
    }

    /// `dim e_v (M / rad M)` per vertex.
    pub fn top_dims(&self) -> Vec<usize> {
        let rad = self.radical();
        (0..self.dims.len()).map(|v| self.dims[v] - self.graded_part(&rad, v).dim()).collect()
    }

    /// `{m : g m = 0 for every generator g}`.
    pub fn socle(&self) -> Subspace<K::Elem> {
        let k = self.field();
        let rows: Vec<Vec<K::Elem>> =
            (0..self.gens.len()).flat_map(|g| self.full_action(self.alg.generators()[g]).to_rows()).collect();
        Subspace::from_vectors(k, self.dim(), crate::linalg::kernel_of_rows(k, rows, self.dim()))
    }

    /// `e_v U` in local coordinates at `v`.
    pub fn graded_part(&self, u: &Subspace<K::Elem>, v: usize) -> Subspace<K::Elem> {
        let k = self.field();
        Subspace::from_vectors(k, self.dims[v], u.basis().iter().map(|x| self.local(v, x)))
    }

    /// Smallest submodule containing the given vectors.
    pub fn generated(&self, vectors: impl IntoIterator<Item = Vec<K::Elem>>) -> Subspace<K::Elem> {
        let k = self.field();
        let mut span = Subspace::zero(self.dim());
        let mut queue: Vec<Vec<K::Elem>> = Vec::new();
        let push = |span: &mut Subspace<K::Elem>, queue: &mut Vec<Vec<K::Elem>>, x: Vec<K::Elem>| {
            if span.insert(k, x.clone()) {
                queue.push(x);
            }
        };
        for x in vectors {
            for v in 0..self.dims.len() {
                let mut y = vec![k.zero(); self.dim()];
                let o = self.offset(v);
                y[o..o + self.dims[v]].clone_from_slice(&x[o..o + self.dims[v]]);
                push(&mut span, &mut queue, y);
            }
        }
        let actions: Vec<Matrix<K::Elem>> = self.alg.generators().iter().map(|&g| self.full_action(g)).collect();
        while let Some(x) = queue.pop() {
            for a in &actions {
                let y = a.mul_vec(k, &x);
                push(&mut span, &mut queue, y);
            }
        }
        span
    }

    pub fn is_submodule(&self, u: &Subspace<K::Elem>) -> bool {
        self.generated(u.basis().iter().cloned()) == *u
    }

    /// The submodule `U` with its inclusion (`dim M x dim U`).
    pub fn submodule(&self, u: &Subspace<K::Elem>) -> Result<(Self, Matrix<K::Elem>), ModuleError> {
        if !self.is_submodule(u) {
            return Err(ModuleError::NotSubmodule);
        }
        let k = self.field().clone();
        let n = self.dims.len();
        let parts: Vec<Subspace<K::Elem>> = (0..n).map(|v| self.graded_part(u, v)).collect();
        let dims: Vec<usize> = parts.iter().map(|p| p.dim()).collect();
        let sub_offsets: Vec<usize> = (0..n).map(|v| dims[..v].iter().sum()).collect();
        let total: usize = dims.iter().sum();
        let mut incl = Matrix::zeros(&k, self.dim(), total);
        for v in 0..n {
            for (j, row) in parts[v].basis().iter().enumerate() {
                for (r, x) in row.iter().enumerate() {
                    incl.set(self.offset(v) + r, sub_offsets[v] + j, x.clone());
                }
            }
        }
        let gens = self
            .alg
            .generators()
            .iter()
            .enumerate()
            .map(|(g, &b)| {
                let (s, t) = self.alg.ends(b, self.side);
                let mut m = Matrix::zeros(&k, dims[t], dims[s]);
                for (j, row) in parts[s].basis().iter().enumerate() {
                    let img = self.gens[g].mul_vec(&k, row);
                    for (i, c) in parts[t].coordinates(&img).into_iter().enumerate() {
                        m.set(i, j, c);
                    }
                }
                m
            })
            .collect();
        Ok((ModuleRep { alg: self.alg.clone(), side: self.side, dims, gens }, incl))
    }

    /// `M / U` with the projection (`dim(M/U) x dim M`). Basis: the non-pivot
    /// unit vectors of each `e_v U`.
    pub fn quotient(&self, u: &Subspace<K::Elem>) -> Result<(Self, Matrix<K::Elem>), ModuleError> {
        if !self.is_submodule(u) {
            return Err(ModuleError::NotSubmodule);
        }
        let k = self.field().clone();
        let n = self.dims.len();
        let parts: Vec<Subspace<K::Elem>> = (0..n).map(|v| self.graded_part(u, v)).collect();
        let keep: Vec<Vec<usize>> = parts.iter().map(|p| p.non_pivots()).collect();
        let dims: Vec<usize> = keep.iter().map(|x| x.len()).collect();
        let q_offsets: Vec<usize> = (0..n).map(|v| dims[..v].iter().sum()).collect();
        let total: usize = dims.iter().sum();
        // reduce modulo e_v U, then read off the kept coordinates
        let project = |v: usize, x: &mut Vec<K::Elem>| -> Vec<K::Elem> {
            parts[v].reduce(&k, x);
            keep[v].iter().map(|&i| x[i].clone()).collect()
        };
        let mut proj = Matrix::zeros(&k, total, self.dim());
        for v in 0..n {
            for r in 0..self.dims[v] {
                let mut e = vec![k.zero(); self.dims[v]];
                e[r] = k.one();
                for (i, c) in project(v, &mut e).into_iter().enumerate() {
                    proj.set(q_offsets[v] + i, self.offset(v) + r, c);
                }
            }
        }
        let gens = self
            .alg
            .generators()
            .iter()
            .enumerate()
            .map(|(g, &b)| {
                let (s, t) = self.alg.ends(b, self.side);
                let mut m = Matrix::zeros(&k, dims[t], dims[s]);
                for (j, &col) in keep[s].iter().enumerate() {
                    let mut img = self.gens[g].column(col);
                    for (i, c) in project(t, &mut img).into_iter().enumerate() {
                        m.set(i, j, c);
                    }
                }
                m
            })
            .collect();
        Ok((ModuleRep { alg: self.alg.clone(), side: self.side, dims, gens }, proj))
    }

    /// Matrix of `ε_i` on `e_i M`; zero when `c_i = 1`.
    pub fn hi_view(&self, i: usize) -> HiModuleView<K::Elem> {
        let k = self.field();
        let c = self.alg.symmetrizer()[i];
        let loop_arrow = self.alg.presentation().loop_arrow(i);
        let nilpotent = match self.alg.word_index(&[loop_arrow]) {
            Some(b) => self.action(b),
            None => Matrix::zeros(k, self.dims[i], self.dims[i]),
        };
        HiModuleView { vertex: i, c, nilpotent }
    }

    /// Jordan block sizes of `ε_i` on `e_i M`, largest first, from ranks of powers.
    pub fn jordan_blocks(&self, i: usize) -> Vec<usize> {
        let k = self.field();
        let view = self.hi_view(i);
        let d = self.dims[i];
        let mut ranks = vec![d];
        let mut power = Matrix::identity(k, d);
        while *ranks.last().unwrap() > 0 {
            power = power.mul(k, &view.nilpotent);
            let r = power.rank(k);
            if r == *ranks.last().unwrap() {
                break;
            }
            ranks.push(r);
        }
        // blocks of size >= j: ranks[j-1] - ranks[j]
        let mut at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        at_least.push(0);
        let mut blocks = Vec::new();
        for j in (1..at_least.len()).rev() {
            let exactly = at_least[j - 1] - at_least[j];
            blocks.extend(core::iter::repeat_n(j, exactly));
        }
        blocks
    }

    /// `r_i = dim ker(ε_i | e_i M)`, requiring `c_i r_i = dim e_i M` at every vertex.
    pub fn locally_free_rank(&self) -> Result<RankVector, ModuleError> {
        let k = self.field();
        let mut ranks = Vec::with_capacity(self.dims.len());
        for i in 0..self.dims.len() {
            let view = self.hi_view(i);
            let kernel = self.dims[i] - view.nilpotent.rank(k);
            if view.c as usize * kernel != self.dims[i] {
                return Err(ModuleError::NotLocallyFree { vertex: i, blocks: self.jordan_blocks(i) });
            }
            ranks.push(kernel);
        }
        Ok(RankVector(ranks))
    }

    /// Independent freeness test: every Jordan block of `ε_i` has size `c_i`.
    pub fn is_locally_free_by_blocks(&self) -> bool {
        (0..self.dims.len()).all(|i| {
            let c = self.alg.symmetrizer()[i] as usize;
            self.jordan_blocks(i).iter().all(|&b| b == c)
        })
    }
}


#[cfg(test)]
mod tests {
    use super::test_support::*;
    use super::*;

    #[test]
    fn projectives_and_regular() {
        let a = b2();
        let p1 = ModuleRep::projective(a.clone(), 0, Side::Left);
        let p2 = ModuleRep::projective(a.clone(), 1, Side::Left);
        assert_eq!(p1.dim() + p2.dim(), a.dim());
        p1.check_relations().unwrap();
        p2.check_relations().unwrap();
        let (reg, _) = ModuleRep::regular(a.clone(), Side::Right);
        reg.check_relations().unwrap();
        assert_eq!(reg.dim(), a.dim());
        let a2 = a2();
        assert_eq!(ModuleRep::projective(a2, 0, Side::Left).dims(), &[1, 1]);
        let a1 = algebra(alloc::vec![alloc::vec![2]], alloc::vec![3]);
        assert_eq!(ModuleRep::projective(a1, 0, Side::Left).dims(), &[3]);
    }

    #[test]
    fn generalized_simples() {
        let a = b2();
        let e1 = ModuleRep::generalized_simple(a.clone(), 0, Side::Left);
        let e2 = ModuleRep::generalized_simple(a.clone(), 1, Side::Left);
        assert_eq!(e1.dim(), 2);
        assert_eq!(e2.dim(), 1);
        e1.check_relations().unwrap();
        assert_eq!(e1.locally_free_rank().unwrap(), RankVector(alloc::vec![1, 0]));
        assert_eq!(e2.locally_free_rank().unwrap(), RankVector(alloc::vec![0, 1]));
        let s1 = ModuleRep::simple(a.clone(), 0, Side::Left);
        assert_eq!(
            s1.locally_free_rank().unwrap_err(),
            ModuleError::NotLocallyFree { vertex: 0, blocks: alloc::vec![1] }
        );
        assert!(!s1.is_locally_free_by_blocks());
    }

    #[test]
    fn regular_module_is_locally_free() {
        let a = b2();
        let (pi, _) = ModuleRep::regular(a.clone(), Side::Left);
        let r = pi.locally_free_rank().unwrap();
        let c = a.symmetrizer();
        assert_eq!(c[0] as usize * r.0[0] + c[1] as usize * r.0[1], a.dim());
        assert!(pi.is_locally_free_by_blocks());
        let d = pi.dual();
        d.check_relations().unwrap();
        assert_eq!(d.locally_free_rank().unwrap(), r);
    }

    #[test]
    fn bad_module_rejected() {
        let a = b2();
        let p = ModuleRep::projective(a.clone(), 0, Side::Left);
        let mut gens: Vec<Matrix<_>> = (0..a.generators().len()).map(|g| p.generator_action(g).clone()).collect();
        // an invertible loop cannot be nilpotent
        let g = a.generators().iter().position(|&b| a.label(b) == "eps1").unwrap();
        gens[g] = Matrix::identity(a.field(), p.dims()[0]);
        assert!(matches!(
            ModuleRep::new(a.clone(), Side::Left, p.dims().to_vec(), gens),
            Err(ModuleError::RelationViolated { .. })
        ));
    }

    #[test]
    fn submodule_and_quotient() {
        let a = b2();
        let p = ModuleRep::projective(a.clone(), 0, Side::Left);
        let rad = p.radical();
        let (sub, incl) = p.submodule(&rad).unwrap();
        let (quo, proj) = p.quotient(&rad).unwrap();
        sub.check_relations().unwrap();
        quo.check_relations().unwrap();
        assert_eq!(sub.dim() + quo.dim(), p.dim());
        assert_eq!(quo.dims(), &[1, 0]);
        assert!(proj.mul(a.field(), &incl).is_zero(a.field()));
        let top = p.top_dims();
        assert_eq!(top, alloc::vec![1, 0]);
        let soc = p.socle();
        assert!(p.is_submodule(&soc));
    }

    #[test]
    fn jordan_blocks_of_projective() {
        let a = b2();
        let p = ModuleRep::projective(a.clone(), 0, Side::Left);
        let blocks = p.jordan_blocks(0);
        assert!(blocks.iter().all(|&b| b == 2));
        assert_eq!(blocks.iter().sum::<usize>(), p.dims()[0]);
    }
}
