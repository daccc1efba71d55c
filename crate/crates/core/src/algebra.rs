//! Explicit finite-dimensional algebras assembled from a completed rewriting system.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cartan::{classify, CartanData, CartanTag};
use crate::field::Field;
use crate::quiver::{quiver_presentation, Path, PresentationMode, QuiverPresentation};
use crate::rewrite::{default_max_degree, RewriteError, RewriteSystem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("relation {label} does not vanish in the algebra")]
    RelationViolation { label: String },
    #[error("algebra invariant violated: {0}")]
    Invariant(String),
}

/// Which multiplication a module sees: `Left` modules over `A`, or `Right`
/// modules over `A` viewed as left modules over the opposite algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    /// Arrow indices in written order.
    pub word: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

impl BasisElement {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("input is not of Dynkin type; the algebra would be infinite-dimensional and is not constructed")]
    NotDynkin,
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `Π(C, D)` over `k`: refuses non-Dynkin input, completes the rewriting
/// system (default degree bound unless given) and checks the relations.
pub fn build_preprojective<K: Field>(
    k: &K,
    cd: &CartanData,
    max_degree: Option<usize>,
) -> Result<FinDimAlgebra<K>, BuildError> {
    let p = quiver_presentation(cd, PresentationMode::Pi);
    build_from_presentation(k, cd, &p, max_degree)
}

/// As [`build_preprojective`] for an explicitly given presentation over the
/// same Cartan data, e.g. one with a deliberately altered relation.
pub fn build_from_presentation<K: Field>(
    k: &K,
    cd: &CartanData,
    p: &QuiverPresentation,
    max_degree: Option<usize>,
) -> Result<FinDimAlgebra<K>, BuildError> {
    if classify(cd).tag != CartanTag::Dynkin {
        return Err(BuildError::NotDynkin);
    }
    let rs = RewriteSystem::complete(k, p, max_degree.unwrap_or_else(|| default_max_degree(p)))?;
    let alg = FinDimAlgebra::assemble(&rs, p);
    alg.check_relations(p)?;
    Ok(alg)
}

/// Sparse structure constants: `b_a · b_b = Σ coef · b_k`.
pub type Product<E> = Vec<(usize, E)>;

#[derive(Debug, Clone)]
pub struct FinDimAlgebra<K: Field> {
    field: K,
    presentation: QuiverPresentation,
    basis: Vec<BasisElement>,
    index: BTreeMap<Vec<usize>, usize>,
    mult: Vec<Vec<Product<K::Elem>>>,
    /// Every arrow expressed in the basis; arrows outside the basis reduce.
    arrow_values: Vec<Vec<K::Elem>>,
    generators: Vec<usize>,
    /// For each basis element, the generator positions whose product gives it.
    gen_words: Vec<Vec<usize>>,
    opposite: bool,
}

impl<K: Field> FinDimAlgebra<K> {
    /// Basis = irreducible words; products are normal forms of concatenations.
    pub fn assemble(rs: &RewriteSystem<K>, presentation: &QuiverPresentation) -> Self {
        let k = rs.field().clone();
        let words: Vec<Path> = rs.irreducible_words().to_vec();
        let basis: Vec<BasisElement> =
            words.iter().map(|p| BasisElement { word: p.arrows.clone(), source: p.source, target: p.target }).collect();
        let n = presentation.vertices;
        let index: BTreeMap<Vec<usize>, usize> =
            words.iter().enumerate().filter(|(_, p)| !p.is_trivial()).map(|(i, p)| (p.arrows.clone(), i)).collect();
        let dim = basis.len();
        let to_vec = |poly: &BTreeMap<Path, K::Elem>| -> Vec<K::Elem> {
            let mut v = vec![k.zero(); dim];
            for (p, c) in poly {
                let i = if p.is_trivial() { p.source } else { index[&p.arrows] };
                v[i] = c.clone();
            }
            v
        };
        let sparse = |v: Vec<K::Elem>| -> Product<K::Elem> {
            v.into_iter().enumerate().filter(|(_, c)| !k.is_zero(c)).collect()
        };
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for (a, pa) in words.iter().enumerate() {
            for (b, pb) in words.iter().enumerate() {
                if let Some(cat) = pa.concat(pb) {
                    mult[a][b] = sparse(to_vec(&rs.reduce_path(&cat)));
                }
            }
        }
        let arrow_values =
            (0..presentation.arrows.len()).map(|a| to_vec(&rs.reduce_path(&presentation.path(&[a])))).collect();
        let generators: Vec<usize> = (0..dim).filter(|&b| basis[b].len() == 1).collect();
        let gen_pos: BTreeMap<usize, usize> =
            generators.iter().enumerate().map(|(g, &b)| (basis[b].word[0], g)).collect();
        let gen_words = basis.iter().map(|b| b.word.iter().map(|a| gen_pos[a]).collect()).collect();
        debug_assert!((0..n).all(|v| basis[v].is_empty() && basis[v].source == v));
        FinDimAlgebra {
            field: k,
            presentation: presentation.clone(),
            basis,
            index,
            mult,
            arrow_values,
            generators,
            gen_words,
            opposite: false,
        }
    }

    /// Rebuilds an algebra from stored structure constants, then validates the
    /// defining relations and the algebra axioms.
    pub fn from_parts(
        field: K,
        presentation: &QuiverPresentation,
        basis: Vec<BasisElement>,
        mult: Vec<Vec<Product<K::Elem>>>,
        arrow_values: Vec<Vec<K::Elem>>,
    ) -> Result<Self, AlgebraError> {
        let dim = basis.len();
        let n = presentation.vertices;
        let bad = |what: &str| AlgebraError::Invariant(String::from(what));
        if dim < n || (0..n).any(|v| !basis[v].is_empty() || basis[v].source != v || basis[v].target != v) {
            return Err(bad("the first basis elements must be the vertex idempotents"));
        }
        if mult.len() != dim || mult.iter().any(|row| row.len() != dim) {
            return Err(bad("multiplication table has the wrong shape"));
        }
        if mult.iter().flatten().flatten().any(|(t, _)| *t >= dim) {
            return Err(bad("structure constant out of range"));
        }
        if arrow_values.len() != presentation.arrows.len() || arrow_values.iter().any(|v| v.len() != dim) {
            return Err(bad("arrow values have the wrong shape"));
        }
        let index: BTreeMap<Vec<usize>, usize> =
            basis.iter().enumerate().filter(|(_, b)| !b.is_empty()).map(|(i, b)| (b.word.clone(), i)).collect();
        let generators: Vec<usize> = (0..dim).filter(|&b| basis[b].len() == 1).collect();
        let gen_pos: BTreeMap<usize, usize> =
            generators.iter().enumerate().map(|(g, &b)| (basis[b].word[0], g)).collect();
        let mut gen_words = Vec::with_capacity(dim);
        for b in &basis {
            let word: Option<Vec<usize>> = b.word.iter().map(|a| gen_pos.get(a).copied()).collect();
            gen_words.push(word.ok_or_else(|| bad("basis word uses an arrow outside the basis"))?);
        }
        let alg = FinDimAlgebra {
            field,
            presentation: presentation.clone(),
            basis,
            index,
            mult,
            arrow_values,
            generators,
            gen_words,
            opposite: false,
        };
        alg.check_relations(presentation)?;
        alg.check_invariants(true, 0)?;
        Ok(alg)
    }

    /// Same basis with `a ∘ b = b a`; sources and targets swap, generator words reverse.
    pub fn opposite(&self) -> Self {
        let dim = self.dim();
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                mult[a][b] = self.mult[b][a].clone();
            }
        }
        FinDimAlgebra {
            field: self.field.clone(),
            presentation: self.presentation.clone(),
            basis: self
                .basis
                .iter()
                .map(|b| BasisElement { word: b.word.clone(), source: b.target, target: b.source })
                .collect(),
            index: self.index.clone(),
            mult,
            arrow_values: self.arrow_values.clone(),
            generators: self.generators.clone(),
            gen_words: self.gen_words.iter().map(|w| w.iter().rev().copied().collect()).collect(),
            opposite: !self.opposite,
        }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn presentation(&self) -> &QuiverPresentation {
        &self.presentation
    }

    pub fn is_opposite(&self) -> bool {
        self.opposite
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertices(&self) -> usize {
        self.presentation.vertices
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// `c_i`
    pub fn symmetrizer(&self) -> &[u64] {
        &self.presentation.symmetrizer
    }

    /// Basis index of `e_v`.
    pub fn idempotent(&self, v: usize) -> usize {
        v
    }

    /// Basis index of a nontrivial irreducible word.
    pub fn word_index(&self, word: &[usize]) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// Length-one basis elements; they generate the radical.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Generator positions `g_1 … g_k` with `b = g_1 ⋯ g_k` in this algebra.
    pub fn generator_word(&self, b: usize) -> &[usize] {
        &self.gen_words[b]
    }

    pub fn mult(&self, a: usize, b: usize) -> &Product<K::Elem> {
        &self.mult[a][b]
    }

    /// `(source, target)` of a basis element as seen by modules on `side`.
    pub fn ends(&self, b: usize, side: Side) -> (usize, usize) {
        let e = &self.basis[b];
        match side {
            Side::Left => (e.source, e.target),
            Side::Right => (e.target, e.source),
        }
    }

    /// Generator word of `b` in the algebra acting on `side`.
    pub fn side_word(&self, b: usize, side: Side) -> Vec<usize> {
        match side {
            Side::Left => self.gen_words[b].clone(),
            Side::Right => self.gen_words[b].iter().rev().copied().collect(),
        }
    }

    /// `a · b` in the algebra acting on `side` (the opposite product for `Right`).
    pub fn side_mult(&self, a: usize, b: usize, side: Side) -> &Product<K::Elem> {
        match side {
            Side::Left => &self.mult[a][b],
            Side::Right => &self.mult[b][a],
        }
    }

    pub fn side_multiply(&self, x: &[K::Elem], y: &[K::Elem], side: Side) -> Vec<K::Elem> {
        match side {
            Side::Left => self.multiply(x, y),
            Side::Right => self.multiply(y, x),
        }
    }

    pub fn arrow_value(&self, arrow: usize) -> &[K::Elem] {
        &self.arrow_values[arrow]
    }

    /// Basis indices of `e_j A e_i`.
    pub fn block(&self, j: usize, i: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].target == j && self.basis[b].source == i).collect()
    }

    /// Product of two elements given in coordinates.
    pub fn multiply(&self, x: &[K::Elem], y: &[K::Elem]) -> Vec<K::Elem> {
        let k = &self.field;
        let mut out = vec![k.zero(); self.dim()];
        for (a, xa) in x.iter().enumerate() {
            if k.is_zero(xa) {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if k.is_zero(yb) {
                    continue;
                }
                let s = k.mul(xa, yb);
                for (t, c) in &self.mult[a][b] {
                    k.add_mul_assign(&mut out[*t], &s, c);
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, b: usize) -> Vec<K::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[b] = self.field.one();
        v
    }

    pub fn one(&self) -> Vec<K::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        for i in 0..self.vertices() {
            v[i] = self.field.one();
        }
        v
    }

    /// Human-readable name such as `eps1 a12`, or `e1` for an idempotent.
    pub fn label(&self, b: usize) -> String {
        let e = &self.basis[b];
        if e.word.is_empty() {
            return alloc::format!("e{}", e.source + 1);
        }
        let names: Vec<&str> = e.word.iter().map(|&a| self.presentation.arrows[a].name.as_str()).collect();
        names.join(" ")
    }

    /// Evaluates every defining relation through the multiplication table.
    pub fn check_relations(&self, p: &QuiverPresentation) -> Result<usize, AlgebraError> {
        let k = &self.field;
        for rel in &p.relations {
            let mut total = vec![k.zero(); self.dim()];
            for (path, &coef) in &rel.terms {
                let mut value = self.one();
                let arrows: Vec<usize> =
                    if self.opposite { path.arrows.iter().rev().copied().collect() } else { path.arrows.clone() };
                for a in arrows {
                    value = self.multiply(&value, &self.arrow_values[a]);
                }
                let c = k.from_i64(coef);
                for (t, v) in total.iter_mut().zip(value) {
                    k.add_mul_assign(t, &c, &v);
                }
            }
            if total.iter().any(|x| !k.is_zero(x)) {
                return Err(AlgebraError::RelationViolation { label: rel.label.clone() });
            }
        }
        Ok(p.relations.len())
    }

    /// Associativity (exhaustive when `exhaustive`, otherwise on seeded random
    /// basis triples), unit and idempotent laws, grading, and nilpotency of the
    /// span of positive-length words.
    pub fn check_invariants(&self, exhaustive: bool, seed: u64) -> Result<(), AlgebraError> {
        let k = &self.field;
        let dim = self.dim();
        let n = self.vertices();
        let fail = |msg: &str| Err(AlgebraError::Invariant(String::from(msg)));
        let one = self.one();
        for b in 0..dim {
            let e = self.unit_vector(b);
            if self.multiply(&one, &e) != e || self.multiply(&e, &one) != e {
                return fail("sum of idempotents is not the unit");
            }
        }
        for i in 0..n {
            for j in 0..n {
                let p = self.multiply(&self.unit_vector(i), &self.unit_vector(j));
                let expect = if i == j { self.unit_vector(i) } else { vec![k.zero(); dim] };
                if p != expect {
                    return fail("idempotents are not orthogonal");
                }
            }
        }
        for b in 0..dim {
            let e = &self.basis[b];
            let l = self.multiply(&self.unit_vector(e.target), &self.unit_vector(b));
            let r = self.multiply(&self.unit_vector(b), &self.unit_vector(e.source));
            if l != self.unit_vector(b) || r != self.unit_vector(b) {
                return fail("basis element outside its bigraded block");
            }
        }
        let triple = |a: usize, b: usize, c: usize| -> bool {
            let (x, y, z) = (self.unit_vector(a), self.unit_vector(b), self.unit_vector(c));
            self.multiply(&self.multiply(&x, &y), &z) == self.multiply(&x, &self.multiply(&y, &z))
        };
        if exhaustive {
            for a in 0..dim {
                for b in 0..dim {
                    for c in 0..dim {
                        if !triple(a, b, c) {
                            return fail("multiplication is not associative");
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..4 * dim * dim {
                if !triple(rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim)) {
                    return fail("multiplication is not associative");
                }
            }
        }
        // products of positive-length words only go up in length, so the radical
        // is nilpotent once every product of (max length + 1) generators vanishes
        let max_len = self.basis.iter().map(|b| b.len()).max().unwrap_or(0);
        let mut layer: Vec<usize> = (n..dim).collect();
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for &x in &layer {
                for &g in &self.generators {
                    for (t, _) in &self.mult[x][g] {
                        if self.basis[*t].is_empty() {
                            return fail("radical contains an idempotent");
                        }
                        next.push(*t);
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            layer = next;
        }
        if !layer.is_empty() {
            return fail("span of positive-length words is not nilpotent");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::validate_gcm;
    use crate::field::Rationals;
    use crate::quiver::{quiver_presentation, PresentationMode};
    use crate::rewrite::default_max_degree;

    fn build(c: Vec<Vec<i64>>, d: Vec<u64>) -> (QuiverPresentation, FinDimAlgebra<Rationals>) {
        let cd = validate_gcm(c, d, None).unwrap();
        let p = quiver_presentation(&cd, PresentationMode::Pi);
        let rs = RewriteSystem::complete(&Rationals, &p, default_max_degree(&p)).unwrap();
        let a = FinDimAlgebra::assemble(&rs, &p);
        (p, a)
    }

    #[test]
    fn truncated_polynomial_ring() {
        let (p, a) = build(vec![vec![2]], vec![3]);
        assert_eq!(a.dim(), 3);
        let eps = a.word_index(&[0]).unwrap();
        let eps2 = a.word_index(&[0, 0]).unwrap();
        assert!(a.mult(eps, eps2).is_empty());
        assert_eq!(a.mult(eps, eps), &vec![(eps2, Rationals.one())]);
        let op = a.opposite();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(a.mult(x, y), op.mult(x, y));
            }
        }
        assert_eq!(a.check_relations(&p).unwrap(), 1);
    }

    #[test]
    fn a2_products_vanish() {
        let (p, a) = build(vec![vec![2, -1], vec![-1, 2]], vec![1, 1]);
        let a12 = a.word_index(&[p.ordinary_arrow(0, 1, 1).unwrap()]).unwrap();
        let a21 = a.word_index(&[p.ordinary_arrow(1, 0, 1).unwrap()]).unwrap();
        assert!(a.mult(a12, a21).is_empty());
        assert!(a.mult(a21, a12).is_empty());
        a.check_invariants(true, 0).unwrap();
        a.check_relations(&p).unwrap();
    }

    #[test]
    fn b2_invariants_and_blocks() {
        let (p, a) = build(vec![vec![2, -1], vec![-2, 2]], vec![2, 1]);
        a.check_invariants(true, 0).unwrap();
        a.check_relations(&p).unwrap();
        let c = a.symmetrizer().to_vec();
        for j in 0..2 {
            for i in 0..2 {
                assert_eq!(a.block(j, i).len() as u64 % c[j], 0);
            }
        }
        let op = a.opposite();
        assert_eq!(op.dim(), a.dim());
        op.check_invariants(true, 0).unwrap();
        op.check_relations(&p).unwrap();
        let back = op.opposite();
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                assert_eq!(back.mult(x, y), a.mult(x, y));
            }
            assert_eq!(back.generator_word(x), a.generator_word(x));
        }
    }

    #[test]
    fn orientation_does_not_change_dimension() {
        let cd = validate_gcm(vec![vec![2, -1], vec![-2, 2]], vec![2, 1], Some(vec![(1, 0)])).unwrap();
        let p = quiver_presentation(&cd, PresentationMode::Pi);
        let rs = RewriteSystem::complete(&Rationals, &p, default_max_degree(&p)).unwrap();
        let (_, a) = build(vec![vec![2, -1], vec![-2, 2]], vec![2, 1]);
        assert_eq!(FinDimAlgebra::assemble(&rs, &p).dim(), a.dim());
    }

    #[test]
    fn generator_words_multiply_back() {
        let (_, a) = build(vec![vec![2, -1], vec![-3, 2]], vec![3, 1]);
        for b in a.vertices()..a.dim() {
            let gens = a.generator_word(b);
            let mut v = a.unit_vector(a.generators()[gens[0]]);
            for &g in &gens[1..] {
                v = a.multiply(&v, &a.unit_vector(a.generators()[g]));
            }
            assert_eq!(v, a.unit_vector(b));
        }
    }
}
