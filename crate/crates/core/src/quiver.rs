//! Quivers with relations: the double quiver of a Cartan datum with the
//! defining relations of the generalized preprojective algebra, or the
//! single quiver with the relations of `H`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::cartan::CartanData;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArrowKind {
    /// `ε_i`
    Loop { vertex: usize },
    /// `α_ij^(g)`, running from `j` to `i`; `g` is 1-based.
    Ordinary { i: usize, j: usize, g: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub kind: ArrowKind,
}

/// A path in written order: `arrows[0]` is applied last. A path is
/// composable when `source(arrows[t]) == target(arrows[t + 1])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path { source: vertex, target: vertex, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self · other` (apply `other` first), or `None` when not composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: other.source, target: self.target, arrows })
    }

    /// Position of `needle` as a contiguous subword; trivial needles match
    /// only a trivial path at the same vertex.
    pub fn find(&self, needle: &Path) -> Option<usize> {
        if needle.is_trivial() {
            return (self.is_trivial() && self.source == needle.source).then_some(0);
        }
        if needle.len() > self.len() {
            return None;
        }
        self.arrows.windows(needle.len()).position(|w| w == needle.arrows.as_slice())
    }
}

/// Degree-lexicographic: by length, then by arrow index sequence.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| (self.target, self.source).cmp(&(other.target, other.source)))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A formal integer linear combination of parallel paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub terms: BTreeMap<Path, i64>,
}

impl Relation {
    fn new(label: String) -> Self {
        Relation { label, terms: BTreeMap::new() }
    }

    fn add(&mut self, coef: i64, path: Path) {
        let e = self.terms.entry(path.clone()).or_insert(0);
        *e += coef;
        if *e == 0 {
            self.terms.remove(&path);
        }
    }

    /// All terms share a source and a target.
    pub fn is_parallel(&self) -> bool {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return true };
        it.all(|p| p.source == first.source && p.target == first.target)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresentationMode {
    /// Double quiver with (P1)-(P3).
    Pi,
    /// Single quiver with (H1)-(H2).
    H,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    /// `sgn(i, j)` for every ordered edge.
    pub signs: BTreeMap<(usize, usize), i64>,
    /// `c_i`, the nilpotency index of each loop.
    pub symmetrizer: Vec<u64>,
    pub mode: PresentationMode,
}

impl QuiverPresentation {
    pub fn loop_arrow(&self, vertex: usize) -> usize {
        self.arrows.iter().position(|a| a.kind == ArrowKind::Loop { vertex }).expect("every vertex carries a loop")
    }

    pub fn ordinary_arrow(&self, i: usize, j: usize, g: u64) -> Option<usize> {
        self.arrows.iter().position(|a| a.kind == ArrowKind::Ordinary { i, j, g })
    }

    /// Builds a path from arrows in written order; panics if not composable.
    pub fn path(&self, arrows: &[usize]) -> Path {
        assert!(!arrows.is_empty(), "use Path::trivial for length-zero paths");
        for w in arrows.windows(2) {
            assert_eq!(self.arrows[w[0]].source, self.arrows[w[1]].target, "arrows are not composable");
        }
        Path {
            target: self.arrows[arrows[0]].target,
            source: self.arrows[*arrows.last().unwrap()].source,
            arrows: arrows.to_vec(),
        }
    }

    /// `ε_v^k`, or `e_v` for `k = 0`.
    fn loop_power(&self, v: usize, k: u64) -> Vec<usize> {
        vec![self.loop_arrow(v); k as usize]
    }

    fn word_path(&self, vertex: usize, word: Vec<usize>) -> Path {
        if word.is_empty() {
            Path::trivial(vertex)
        } else {
            self.path(&word)
        }
    }

    pub fn ordinary_arrow_count(&self) -> usize {
        self.arrows.iter().filter(|a| matches!(a.kind, ArrowKind::Ordinary { .. })).count()
    }

    /// Flips the sign of one term of one relation; used to build deliberately
    /// broken presentations for negative controls.
    pub fn with_flipped_term(&self, relation: usize, term: usize) -> Self {
        let mut out = self.clone();
        let rel = &mut out.relations[relation];
        let path = rel.terms.keys().nth(term).expect("term index in range").clone();
        let c = rel.terms[&path];
        rel.terms.insert(path, -c);
        out
    }
}

pub fn quiver_presentation(cd: &CartanData, mode: PresentationMode) -> QuiverPresentation {
    let n = cd.rank();
    let mut arrows = Vec::new();
    for v in 0..n {
        arrows.push(Arrow { name: format!("eps{}", v + 1), source: v, target: v, kind: ArrowKind::Loop { vertex: v } });
    }
    let mut pairs: Vec<(usize, usize)> = match mode {
        PresentationMode::Pi => cd.orientation().iter().flat_map(|&(i, j)| [(i, j), (j, i)]).collect(),
        PresentationMode::H => cd.orientation().to_vec(),
    };
    pairs.sort_unstable();
    for &(i, j) in &pairs {
        let gij = cd.g(i, j).expect("orientation pairs are edges");
        for g in 1..=gij {
            let name = if gij == 1 { format!("a{}{}", i + 1, j + 1) } else { format!("a{}{}^{}", i + 1, j + 1, g) };
            arrows.push(Arrow { name, source: j, target: i, kind: ArrowKind::Ordinary { i, j, g } });
        }
    }
    let mut signs = BTreeMap::new();
    for &(i, j) in cd.orientation() {
        signs.insert((i, j), 1);
        signs.insert((j, i), -1);
    }
    let mut p = QuiverPresentation {
        vertices: n,
        arrows,
        relations: Vec::new(),
        signs,
        symmetrizer: cd.symmetrizer().to_vec(),
        mode,
    };
    let tag = match mode {
        PresentationMode::Pi => ("P1", "P2", "P3"),
        PresentationMode::H => ("H1", "H2", ""),
    };

    let mut relations = Vec::new();
    for v in 0..n {
        let mut r = Relation::new(format!("{}[{}]", tag.0, v + 1));
        r.add(1, p.word_path(v, p.loop_power(v, cd.c(v))));
        relations.push(r);
    }
    for &(i, j) in &pairs {
        let (fji, fij) = (cd.f(j, i).unwrap(), cd.f(i, j).unwrap());
        for g in 1..=cd.g(i, j).unwrap() {
            let a = p.ordinary_arrow(i, j, g).unwrap();
            let mut lhs = p.loop_power(i, fji);
            lhs.push(a);
            let mut rhs = vec![a];
            rhs.extend(p.loop_power(j, fij));
            let label = if cd.g(i, j).unwrap() == 1 {
                format!("{}({},{})", tag.1, i + 1, j + 1)
            } else {
                format!("{}({},{})^{}", tag.1, i + 1, j + 1, g)
            };
            let mut r = Relation::new(label);
            r.add(1, p.path(&lhs));
            r.add(-1, p.path(&rhs));
            relations.push(r);
        }
    }
    if mode == PresentationMode::Pi {
        for i in 0..n {
            let mut r = Relation::new(format!("{}[{}]", tag.2, i + 1));
            for j in (0..n).filter(|&j| p.signs.contains_key(&(j, i))) {
                let sgn = p.signs[&(i, j)];
                let fji = cd.f(j, i).unwrap();
                for g in 1..=cd.g(i, j).unwrap() {
                    let aij = p.ordinary_arrow(i, j, g).unwrap();
                    let aji = p.ordinary_arrow(j, i, g).unwrap();
                    for f in 0..fji {
                        let mut word = p.loop_power(i, f);
                        word.push(aij);
                        word.push(aji);
                        word.extend(p.loop_power(i, fji - 1 - f));
                        r.add(sgn, p.path(&word));
                    }
                }
            }
            if !r.terms.is_empty() {
                relations.push(r);
            }
        }
    }
    p.relations = relations;
    p
}
