//! Finite Weyl groups as integer matrices on the root lattice, with lengths,
//! reduced words and the right weak order.
//!
//! The simple reflection `s_i` acts on the simple-root basis by
//! `s_i(α_j) = α_j - c_ij α_i`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{classify, CartanData, CartanTag};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("the Weyl group is infinite (input is not of Dynkin type)")]
    NotFinite,
}

/// Index of an element inside its [`WeylGroup`].
pub type ElementId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// Row-major `n x n`; column `j` is the image of `α_j`.
    pub matrix: Vec<i64>,
    pub length: usize,
    /// The shortlex-first reduced word.
    pub word: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<WeylElement>,
    index: BTreeMap<Vec<i64>, ElementId>,
    right: Vec<Vec<ElementId>>,
    left: Vec<Vec<ElementId>>,
    inverse: Vec<ElementId>,
    positive_roots: usize,
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for r in 0..n {
        for m in 0..n {
            let x = a[r * n + m];
            if x == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += x * b[m * n + c];
            }
        }
    }
    out
}

fn reflection(cd: &CartanData, i: usize) -> Vec<i64> {
    let n = cd.rank();
    let mut m = vec![0i64; n * n];
    for k in 0..n {
        m[k * n + k] = 1;
    }
    for j in 0..n {
        m[i * n + j] -= cd.entry(i, j);
    }
    m
}

/// Number of positive roots, by closing the simple roots under reflections.
fn count_positive_roots(cd: &CartanData, cap: usize) -> Option<usize> {
    let n = cd.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = 1;
        seen.insert(v.clone());
        queue.push_back(v);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| cd.entry(i, j) * beta[j]).sum();
            let mut img = beta.clone();
            img[i] -= pairing;
            if seen.insert(img.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(img);
            }
        }
    }
    Some(seen.iter().filter(|v| v.iter().all(|&x| x >= 0)).count())
}

impl WeylGroup {
    /// Breadth-first closure over right multiplication by simple reflections.
    pub fn generate(cd: &CartanData) -> Result<Self, WeylError> {
        if classify(cd).tag != CartanTag::Dynkin {
            return Err(WeylError::NotFinite);
        }
        let n = cd.rank();
        let positive_roots = count_positive_roots(cd, 100_000).ok_or(WeylError::NotFinite)?;
        let gens: Vec<Vec<i64>> = (0..n).map(|i| reflection(cd, i)).collect();
        let mut id = vec![0i64; n * n];
        for k in 0..n {
            id[k * n + k] = 1;
        }
        let mut elements = vec![WeylElement { matrix: id.clone(), length: 0, word: Vec::new() }];
        let mut index = BTreeMap::from([(id, 0usize)]);
        let mut right: Vec<Vec<ElementId>> = Vec::new();
        let mut cursor = 0;
        while cursor < elements.len() {
            let mut row = Vec::with_capacity(n);
            for (i, s) in gens.iter().enumerate() {
                let m = mat_mul(n, &elements[cursor].matrix, s);
                let target = match index.get(&m) {
                    Some(&t) => t,
                    None => {
                        let length = elements[cursor].length + 1;
                        if length > positive_roots + 1 {
                            return Err(WeylError::NotFinite);
                        }
                        let mut word = elements[cursor].word.clone();
                        word.push(i);
                        let t = elements.len();
                        index.insert(m.clone(), t);
                        elements.push(WeylElement { matrix: m, length, word });
                        t
                    }
                };
                row.push(target);
            }
            right.push(row);
            cursor += 1;
        }
        let left = elements.iter().map(|e| gens.iter().map(|s| index[&mat_mul(n, s, &e.matrix)]).collect()).collect();
        let mut group = WeylGroup { rank: n, elements, index, right, left, inverse: Vec::new(), positive_roots };
        group.inverse = (0..group.len()).map(|w| group.evaluate(group.elements[w].word.iter().rev())).collect();
        Ok(group)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, w: ElementId) -> &WeylElement {
        &self.elements[w]
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn positive_root_count(&self) -> usize {
        self.positive_roots
    }

    pub fn length(&self, w: ElementId) -> usize {
        self.elements[w].length
    }

    pub fn word(&self, w: ElementId) -> &[usize] {
        &self.elements[w].word
    }

    /// `w s_i`
    pub fn right_mul(&self, w: ElementId, i: usize) -> ElementId {
        self.right[w][i]
    }

    /// `s_i w`
    pub fn left_mul(&self, w: ElementId, i: usize) -> ElementId {
        self.left[w][i]
    }

    pub fn inverse(&self, w: ElementId) -> ElementId {
        self.inverse[w]
    }

    pub fn mul(&self, u: ElementId, v: ElementId) -> ElementId {
        let m = mat_mul(self.rank, &self.elements[u].matrix, &self.elements[v].matrix);
        self.index[&m]
    }

    pub fn lookup(&self, matrix: &[i64]) -> Option<ElementId> {
        self.index.get(matrix).copied()
    }

    /// Product of simple reflections in the given order.
    pub fn evaluate<'a>(&self, word: impl IntoIterator<Item = &'a usize>) -> ElementId {
        word.into_iter().fold(self.identity(), |w, &i| self.right_mul(w, i))
    }

    /// `ℓ(w s_i) > ℓ(w)`
    pub fn is_right_ascent(&self, w: ElementId, i: usize) -> bool {
        self.length(self.right_mul(w, i)) > self.length(w)
    }

    /// `ℓ(s_i w) > ℓ(w)`
    pub fn is_left_ascent(&self, w: ElementId, i: usize) -> bool {
        self.length(self.left_mul(w, i)) > self.length(w)
    }

    pub fn right_ascents(&self, w: ElementId) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.is_right_ascent(w, i)).collect()
    }

    /// All reduced words of `w`, found by peeling off right descents.
    pub fn reduced_words(&self, w: ElementId) -> BTreeSet<Vec<usize>> {
        let mut memo: BTreeMap<ElementId, BTreeSet<Vec<usize>>> = BTreeMap::new();
        self.reduced_words_memo(w, &mut memo)
    }

    fn reduced_words_memo(
        &self,
        w: ElementId,
        memo: &mut BTreeMap<ElementId, BTreeSet<Vec<usize>>>,
    ) -> BTreeSet<Vec<usize>> {
        if let Some(words) = memo.get(&w) {
            return words.clone();
        }
        let mut out = BTreeSet::new();
        if self.length(w) == 0 {
            out.insert(Vec::new());
        }
        for i in 0..self.rank {
            let u = self.right_mul(w, i);
            if self.length(u) < self.length(w) {
                for mut word in self.reduced_words_memo(u, memo) {
                    word.push(i);
                    out.insert(word);
                }
            }
        }
        memo.insert(w, out.clone());
        out
    }

    pub fn longest_element(&self) -> ElementId {
        (0..self.len()).max_by_key(|&w| self.length(w)).expect("group is nonempty")
    }

    /// `u ≤_R v` iff `ℓ(v) = ℓ(u) + ℓ(u⁻¹v)`.
    pub fn weak_leq(&self, u: ElementId, v: ElementId) -> bool {
        self.length(v) == self.length(u) + self.length(self.mul(self.inverse(u), v))
    }

    pub fn weak_order(&self) -> WeakOrderPoset {
        let mut hasse = Vec::new();
        for w in 0..self.len() {
            for i in 0..self.rank {
                if self.is_right_ascent(w, i) {
                    hasse.push((w, self.right_mul(w, i), i));
                }
            }
        }
        WeakOrderPoset { size: self.len(), hasse }
    }

    /// Elements with exactly one right ascent.
    pub fn meet_irreducibles(&self) -> Vec<ElementId> {
        (0..self.len()).filter(|&w| self.right_ascents(w).len() == 1).collect()
    }

    /// `e`, or the stored reduced word such as `s1s2s1` (1-based).
    pub fn label(&self, w: ElementId) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return String::from("e");
        }
        let mut s = String::new();
        for &i in word {
            s.push_str(&alloc::format!("s{}", i + 1));
        }
        s
    }
}

/// Hasse diagram of `(W, ≤_R)`: edges `(w, w s_i, i)` with `ℓ(w s_i) = ℓ(w) + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakOrderPoset {
    pub size: usize,
    pub hasse: Vec<(ElementId, ElementId, usize)>,
}

impl WeakOrderPoset {
    /// Down-set closure of the Hasse diagram: `below[v]` holds every `u ≤ v`.
    pub fn down_sets(&self) -> Vec<BTreeSet<ElementId>> {
        let mut below: Vec<BTreeSet<ElementId>> = (0..self.size).map(|v| BTreeSet::from([v])).collect();
        // edges go up in length, so repeated relaxation over the edge list settles
        let mut changed = true;
        while changed {
            changed = false;
            for &(u, v, _) in &self.hasse {
                let add: Vec<ElementId> = below[u].difference(&below[v]).copied().collect();
                if !add.is_empty() {
                    below[v].extend(add);
                    changed = true;
                }
            }
        }
        below
    }

    /// Checks that every pair has a meet and a join.
    pub fn is_lattice(&self) -> bool {
        let below = self.down_sets();
        let leq = |u: usize, v: usize| below[v].contains(&u);
        let all: Vec<usize> = (0..self.size).collect();
        for &a in &all {
            for &b in &all {
                let lower: Vec<usize> = all.iter().copied().filter(|&x| leq(x, a) && leq(x, b)).collect();
                let upper: Vec<usize> = all.iter().copied().filter(|&x| leq(a, x) && leq(b, x)).collect();
                let has_max = lower.iter().any(|&m| lower.iter().all(|&x| leq(x, m)));
                let has_min = upper.iter().any(|&m| upper.iter().all(|&x| leq(m, x)));
                if !has_max || !has_min {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::validate_gcm;

    fn group(c: Vec<Vec<i64>>, d: Vec<u64>) -> WeylGroup {
        WeylGroup::generate(&validate_gcm(c, d, None).unwrap()).unwrap()
    }

    fn b2() -> WeylGroup {
        group(vec![vec![2, -1], vec![-2, 2]], vec![2, 1])
    }

    fn a2() -> WeylGroup {
        group(vec![vec![2, -1], vec![-1, 2]], vec![1, 1])
    }

    #[test]
    fn orders() {
        assert_eq!(b2().len(), 8);
        assert_eq!(a2().len(), 6);
        assert_eq!(group(vec![vec![2]], vec![1]).len(), 2);
        assert_eq!(group(vec![vec![2, -1], vec![-3, 2]], vec![3, 1]).len(), 12);
        assert_eq!(group(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]], vec![1, 1, 1]).len(), 24);
        assert_eq!(group(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]], vec![2, 2, 1]).len(), 48);
    }

    #[test]
    fn infinite_group_refused() {
        let cd = validate_gcm(vec![vec![2, -2], vec![-2, 2]], vec![1, 1], None).unwrap();
        assert_eq!(WeylGroup::generate(&cd).unwrap_err(), WeylError::NotFinite);
    }

    #[test]
    fn longest_elements() {
        let w = b2();
        let w0 = w.longest_element();
        assert_eq!(w.length(w0), 4);
        assert_eq!(w.mul(w0, w0), w.identity());
        assert_eq!(w.length(w0), w.positive_root_count());
        let a = a2();
        let a0 = a.longest_element();
        assert_eq!(a.length(a0), 3);
        assert_eq!(a.word(a0), &[0, 1, 0]);
        let a1 = group(vec![vec![2]], vec![1]);
        assert_eq!(a1.word(a1.longest_element()), &[0]);
    }

    #[test]
    fn reduced_words_of_longest() {
        let w = b2();
        let words = w.reduced_words(w.longest_element());
        assert_eq!(words, BTreeSet::from([vec![0, 1, 0, 1], vec![1, 0, 1, 0]]));
        assert_eq!(w.reduced_words(w.identity()), BTreeSet::from([vec![]]));
        let a = a2();
        assert_eq!(a.reduced_words(a.longest_element()), BTreeSet::from([vec![0, 1, 0], vec![1, 0, 1]]));
    }

    /// Brute-force oracle: every word of the right length that evaluates to `w`.
    fn words_by_enumeration(g: &WeylGroup, w: ElementId) -> BTreeSet<Vec<usize>> {
        let len = g.length(w);
        let mut out = BTreeSet::new();
        let total = g.rank().pow(len as u32);
        for code in 0..total {
            let mut word = vec![0; len];
            let mut rest = code;
            for slot in word.iter_mut() {
                *slot = rest % g.rank();
                rest /= g.rank();
            }
            if g.evaluate(&word) == w {
                out.insert(word);
            }
        }
        out
    }

    #[test]
    fn reduced_words_match_enumeration() {
        for g in [a2(), b2()] {
            for w in 0..g.len() {
                assert_eq!(g.reduced_words(w), words_by_enumeration(&g, w));
            }
        }
    }

    #[test]
    fn meet_irreducibles() {
        let w = b2();
        let labels: BTreeSet<String> = w.meet_irreducibles().into_iter().map(|x| w.label(x)).collect();
        let expected: BTreeSet<String> =
            ["s1", "s2", "s1s2", "s2s1", "s1s2s1", "s2s1s2"].into_iter().map(String::from).collect();
        assert_eq!(labels, expected);
        assert_eq!(a2().meet_irreducibles().len(), 4);
        let a1 = group(vec![vec![2]], vec![1]);
        assert_eq!(a1.meet_irreducibles(), vec![a1.identity()]);
    }

    #[test]
    fn hasse_edges() {
        let w = b2();
        let poset = w.weak_order();
        let mut edges: Vec<(String, String, usize)> =
            poset.hasse.iter().map(|&(u, v, i)| (w.label(u), w.label(v), i + 1)).collect();
        edges.sort();
        let mut expected: Vec<(String, String, usize)> = [
            ("e", "s1", 1),
            ("e", "s2", 2),
            ("s1", "s1s2", 2),
            ("s2", "s2s1", 1),
            ("s1s2", "s1s2s1", 1),
            ("s2s1", "s2s1s2", 2),
            ("s1s2s1", "s1s2s1s2", 2),
            ("s2s1s2", "s1s2s1s2", 1),
        ]
        .into_iter()
        .map(|(a, b, i)| (String::from(a), String::from(b), i))
        .collect();
        expected.sort();
        assert_eq!(edges, expected);
        assert_eq!(a2().weak_order().hasse.len(), 6);
    }

    #[test]
    fn length_properties_exhaustive() {
        for g in [a2(), b2(), group(vec![vec![2, -1], vec![-3, 2]], vec![3, 1])] {
            let w0 = g.longest_element();
            for u in 0..g.len() {
                assert_eq!(g.length(g.mul(w0, u)), g.length(w0) - g.length(u));
                for i in 0..g.rank() {
                    let d = g.length(g.right_mul(u, i)) as i64 - g.length(u) as i64;
                    assert_eq!(d.abs(), 1);
                }
                for v in 0..g.len() {
                    assert!(g.length(g.mul(u, v)) <= g.length(u) + g.length(v));
                }
            }
        }
    }

    #[test]
    fn weak_order_is_lattice_and_matches_hasse_closure() {
        for g in [a2(), b2(), group(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]], vec![1, 1, 1])] {
            let poset = g.weak_order();
            assert!(poset.is_lattice());
            let below = poset.down_sets();
            for u in 0..g.len() {
                for v in 0..g.len() {
                    assert_eq!(g.weak_leq(u, v), below[v].contains(&u));
                }
            }
        }
    }
}
