//! Noncommutative rewriting on path algebras.
//!
//! Completion follows the diamond lemma: every overlap ambiguity between
//! leading words is resolved, shortest overlap first, and rules whose leading
//! word contains another rule's leading word are re-reduced. Paths are ordered
//! degree-lexicographically, so a rule may shorten a word but never lengthen it.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::field::Field;
use crate::quiver::{Path, QuiverPresentation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("completion or finiteness certificate not reached within degree {max_degree}")]
    DegreeBoundExceeded { max_degree: usize },
    #[error("relation {label} mixes paths with different endpoints")]
    NotParallel { label: String },
    #[error("the relations force the idempotent at vertex {vertex} to vanish")]
    TrivialLeadingTerm { vertex: usize },
}

/// A linear combination of parallel paths.
pub type Poly<E> = BTreeMap<Path, E>;

/// `lead -> tail`, with every tail path strictly below `lead`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule<E> {
    pub lead: Path,
    pub tail: Vec<(Path, E)>,
}

#[derive(Debug, Clone)]
pub struct RewriteSystem<K: Field> {
    field: K,
    vertices: usize,
    /// `(source, target)` per arrow.
    ends: Vec<(usize, usize)>,
    rules: Vec<Rule<K::Elem>>,
    lookup: BTreeMap<Vec<usize>, usize>,
    lead_lengths: BTreeSet<usize>,
    confluent_up_to: usize,
    certificate: usize,
    irreducible: Vec<Path>,
}

struct Completion<'a, K: Field> {
    k: &'a K,
    ends: &'a [(usize, usize)],
    rules: Vec<Option<Rule<K::Elem>>>,
    lookup: BTreeMap<Vec<usize>, usize>,
    lead_lengths: BTreeMap<usize, usize>,
}

fn splice(pre: &[usize], middle: &Path, suf: &[usize], source: usize, target: usize) -> Path {
    let mut arrows = Vec::with_capacity(pre.len() + middle.len() + suf.len());
    arrows.extend_from_slice(pre);
    arrows.extend_from_slice(&middle.arrows);
    arrows.extend_from_slice(suf);
    Path { source, target, arrows }
}

fn add_term<K: Field>(k: &K, poly: &mut Poly<K::Elem>, path: Path, c: K::Elem) {
    match poly.get_mut(&path) {
        Some(e) => {
            *e = k.add(e, &c);
            if k.is_zero(e) {
                poly.remove(&path);
            }
        }
        None => {
            if !k.is_zero(&c) {
                poly.insert(path, c);
            }
        }
    }
}

/// Finds a leading word inside `word`: `(rule, start)`.
fn find_lead(
    lookup: &BTreeMap<Vec<usize>, usize>,
    lengths: impl Iterator<Item = usize> + Clone,
    word: &[usize],
) -> Option<(usize, usize)> {
    for start in 0..word.len() {
        for len in lengths.clone() {
            if start + len > word.len() {
                break;
            }
            if let Some(&r) = lookup.get(&word[start..start + len]) {
                return Some((r, start));
            }
        }
    }
    None
}

impl<'a, K: Field> Completion<'a, K> {
    fn rule(&self, r: usize) -> &Rule<K::Elem> {
        self.rules[r].as_ref().expect("lookup only holds live rules")
    }

    fn normal_form(&self, mut todo: Poly<K::Elem>) -> Poly<K::Elem> {
        let mut out = Poly::new();
        while let Some((path, c)) = todo.pop_last() {
            match find_lead(&self.lookup, self.lead_lengths.keys().copied(), &path.arrows) {
                Some((r, start)) => {
                    let rule = self.rule(r);
                    let pre = &path.arrows[..start];
                    let suf = &path.arrows[start + rule.lead.len()..];
                    for (t, tc) in &rule.tail {
                        let p = splice(pre, t, suf, path.source, path.target);
                        add_term(self.k, &mut todo, p, self.k.mul(&c, tc));
                    }
                }
                None => {
                    out.insert(path, c);
                }
            }
        }
        out
    }

    fn remove_rule(&mut self, r: usize) -> Rule<K::Elem> {
        let rule = self.rules[r].take().expect("rule is live");
        self.lookup.remove(&rule.lead.arrows);
        let n = self.lead_lengths.get_mut(&rule.lead.len()).expect("length is tracked");
        *n -= 1;
        if *n == 0 {
            self.lead_lengths.remove(&rule.lead.len());
        }
        rule
    }

    fn rule_poly(&self, rule: Rule<K::Elem>) -> Poly<K::Elem> {
        let mut p = Poly::new();
        for (t, c) in rule.tail {
            add_term(self.k, &mut p, t, self.k.neg(&c));
        }
        add_term(self.k, &mut p, rule.lead, self.k.one());
        p
    }

    /// Reduces `poly` and, if it survives, installs it as a rule. Returns the new rule index.
    fn install(
        &mut self,
        poly: Poly<K::Elem>,
        pending: &mut Vec<Poly<K::Elem>>,
    ) -> Result<Option<usize>, RewriteError> {
        let mut nf = self.normal_form(poly);
        let Some((lead, lc)) = nf.pop_last() else { return Ok(None) };
        if lead.is_trivial() {
            return Err(RewriteError::TrivialLeadingTerm { vertex: lead.source });
        }
        let inv = self.k.inv(&lc).expect("leading coefficient is nonzero");
        let tail: Vec<(Path, K::Elem)> =
            nf.into_iter().rev().map(|(p, c)| (p, self.k.neg(&self.k.mul(&c, &inv)))).collect();
        // rules whose leading word now contains a reducible subword get re-reduced
        let stale: Vec<usize> = self
            .rules
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_ref().filter(|r| r.lead.find(&lead).is_some()).map(|_| i))
            .collect();
        for r in stale {
            let rule = self.remove_rule(r);
            pending.push(self.rule_poly(rule));
        }
        let idx = self.rules.len();
        self.lookup.insert(lead.arrows.clone(), idx);
        *self.lead_lengths.entry(lead.len()).or_insert(0) += 1;
        self.rules.push(Some(Rule { lead, tail }));
        Ok(Some(idx))
    }

    /// Proper overlaps `lead(a) = X·B`, `lead(b) = B·Y` with `B` nonempty.
    fn overlaps(&self, a: usize, b: usize) -> Vec<(usize, usize, usize)> {
        let la = &self.rule(a).lead.arrows;
        let lb = &self.rule(b).lead.arrows;
        let mut out = Vec::new();
        for k in 1..la.len().min(lb.len()) {
            if la[la.len() - k..] == lb[..k] {
                out.push((a, b, k));
            }
        }
        out
    }

    fn s_poly(&self, a: usize, b: usize, k: usize) -> Poly<K::Elem> {
        let ra = self.rule(a);
        let rb = self.rule(b);
        let x = &ra.lead.arrows[..ra.lead.len() - k];
        let y = &rb.lead.arrows[k..];
        let target = self.ends[ra.lead.arrows[0]].1;
        let source = self.ends[*rb.lead.arrows.last().unwrap()].0;
        let mut p = Poly::new();
        for (t, c) in &ra.tail {
            add_term(self.k, &mut p, splice(&[], t, y, source, target), c.clone());
        }
        for (t, c) in &rb.tail {
            add_term(self.k, &mut p, splice(x, t, &[], source, target), self.k.neg(c));
        }
        p
    }
}

impl<K: Field> RewriteSystem<K> {
    /// Completes the relations of `p` and certifies finite dimension.
    pub fn complete(k: &K, p: &QuiverPresentation, max_degree: usize) -> Result<Self, RewriteError> {
        let ends: Vec<(usize, usize)> = p.arrows.iter().map(|a| (a.source, a.target)).collect();
        let mut c =
            Completion { k, ends: &ends, rules: Vec::new(), lookup: BTreeMap::new(), lead_lengths: BTreeMap::new() };
        let mut pending: Vec<Poly<K::Elem>> = Vec::new();
        for rel in &p.relations {
            if !rel.is_parallel() {
                return Err(RewriteError::NotParallel { label: rel.label.clone() });
            }
            let mut poly = Poly::new();
            for (path, &coef) in &rel.terms {
                add_term(k, &mut poly, path.clone(), k.from_i64(coef));
            }
            pending.push(poly);
        }
        // overlap queue keyed by overlap word length
        let mut queue: BTreeSet<(usize, usize, usize, usize)> = BTreeSet::new();
        let mut confluent_up_to = 0;
        loop {
            while let Some(poly) = pending.pop() {
                if let Some(r) = c.install(poly, &mut pending)? {
                    if c.rule(r).lead.len() > max_degree {
                        return Err(RewriteError::DegreeBoundExceeded { max_degree });
                    }
                    let live: Vec<usize> = (0..c.rules.len()).filter(|&i| c.rules[i].is_some()).collect();
                    for other in live {
                        for (a, b, k) in c.overlaps(r, other).into_iter().chain(if other == r {
                            Vec::new()
                        } else {
                            c.overlaps(other, r)
                        }) {
                            let len = c.rule(a).lead.len() + c.rule(b).lead.len() - k;
                            queue.insert((len, a, b, k));
                        }
                    }
                }
            }
            let Some((len, a, b, k)) = queue.pop_first() else { break };
            if c.rules[a].is_none() || c.rules[b].is_none() {
                continue;
            }
            if len > max_degree {
                return Err(RewriteError::DegreeBoundExceeded { max_degree });
            }
            confluent_up_to = confluent_up_to.max(len);
            let s = c.s_poly(a, b, k);
            pending.push(s);
        }

        // fully reduce the tails and renumber
        let live: Vec<Rule<K::Elem>> = c.rules.iter().flatten().cloned().collect();
        let mut rules = Vec::with_capacity(live.len());
        for rule in live {
            let tail_poly: Poly<K::Elem> = rule.tail.into_iter().collect();
            let tail = c.normal_form(tail_poly).into_iter().rev().collect();
            rules.push(Rule { lead: rule.lead, tail });
        }
        rules.sort_by(|a, b| a.lead.cmp(&b.lead));
        let lookup: BTreeMap<Vec<usize>, usize> =
            rules.iter().enumerate().map(|(i, r)| (r.lead.arrows.clone(), i)).collect();
        let lead_lengths: BTreeSet<usize> = rules.iter().map(|r| r.lead.len()).collect();

        let mut sys = RewriteSystem {
            field: k.clone(),
            vertices: p.vertices,
            ends,
            rules,
            lookup,
            lead_lengths,
            confluent_up_to: confluent_up_to.max(max_degree),
            certificate: 0,
            irreducible: Vec::new(),
        };
        sys.certify(max_degree)?;
        Ok(sys)
    }

    /// Enumerates irreducible words by length until a length has none.
    fn certify(&mut self, max_degree: usize) -> Result<(), RewriteError> {
        let mut level: Vec<Path> = (0..self.vertices).map(Path::trivial).collect();
        let mut all = level.clone();
        let mut d = 0;
        while !level.is_empty() {
            d += 1;
            if d > max_degree {
                return Err(RewriteError::DegreeBoundExceeded { max_degree });
            }
            let mut next = Vec::new();
            for w in &level {
                for (a, &(src, tgt)) in self.ends.iter().enumerate() {
                    if src != w.target {
                        continue;
                    }
                    let mut arrows = Vec::with_capacity(w.len() + 1);
                    arrows.push(a);
                    arrows.extend_from_slice(&w.arrows);
                    // the suffix is irreducible already, so only prefixes can match
                    let reducible =
                        self.lead_lengths.iter().any(|&l| l <= arrows.len() && self.lookup.contains_key(&arrows[..l]));
                    if !reducible {
                        next.push(Path { source: w.source, target: tgt, arrows });
                    }
                }
            }
            next.sort();
            all.extend(next.iter().cloned());
            level = next;
        }
        self.certificate = d;
        all.sort();
        self.irreducible = all;
        Ok(())
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrow_ends(&self) -> &[(usize, usize)] {
        &self.ends
    }

    pub fn rules(&self) -> &[Rule<K::Elem>] {
        &self.rules
    }

    pub fn confluent_up_to(&self) -> usize {
        self.confluent_up_to
    }

    /// The least degree without irreducible words.
    pub fn certificate_degree(&self) -> usize {
        self.certificate
    }

    /// Irreducible words in path order, trivial paths first.
    pub fn irreducible_words(&self) -> &[Path] {
        &self.irreducible
    }

    pub fn is_irreducible(&self, w: &Path) -> bool {
        find_lead(&self.lookup, self.lead_lengths.iter().copied(), &w.arrows).is_none()
    }

    pub fn normal_form(&self, mut todo: Poly<K::Elem>) -> Poly<K::Elem> {
        let k = &self.field;
        let mut out = Poly::new();
        while let Some((path, c)) = todo.pop_last() {
            match find_lead(&self.lookup, self.lead_lengths.iter().copied(), &path.arrows) {
                Some((r, start)) => {
                    let rule = &self.rules[r];
                    let pre = &path.arrows[..start];
                    let suf = &path.arrows[start + rule.lead.len()..];
                    for (t, tc) in &rule.tail {
                        add_term(k, &mut todo, splice(pre, t, suf, path.source, path.target), k.mul(&c, tc));
                    }
                }
                None => {
                    out.insert(path, c);
                }
            }
        }
        out
    }

    pub fn reduce_path(&self, p: &Path) -> Poly<K::Elem> {
        self.normal_form(Poly::from([(p.clone(), self.field.one())]))
    }

    /// Normal form of a relation with integer coefficients.
    pub fn reduce_relation(&self, terms: &BTreeMap<Path, i64>) -> Poly<K::Elem> {
        let mut poly = Poly::new();
        for (p, &c) in terms {
            add_term(&self.field, &mut poly, p.clone(), self.field.from_i64(c));
        }
        self.normal_form(poly)
    }
}

/// `4 (Σ c_i) n`
pub fn default_max_degree(p: &QuiverPresentation) -> usize {
    let total: u64 = p.symmetrizer.iter().sum();
    (4 * total as usize * p.vertices).max(4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::validate_gcm;
    use crate::field::{PrimeField, Rationals};
    use crate::quiver::{quiver_presentation, PresentationMode};
    use alloc::vec;

    fn system(c: Vec<Vec<i64>>, d: Vec<u64>) -> (QuiverPresentation, RewriteSystem<Rationals>) {
        let cd = validate_gcm(c, d, None).unwrap();
        let p = quiver_presentation(&cd, PresentationMode::Pi);
        let rs = RewriteSystem::complete(&Rationals, &p, default_max_degree(&p)).unwrap();
        (p, rs)
    }

    #[test]
    fn a1_truncated_polynomial_ring() {
        let (_, rs) = system(vec![vec![2]], vec![3]);
        assert_eq!(rs.rules().len(), 1);
        assert!(rs.rules()[0].tail.is_empty());
        assert_eq!(rs.rules()[0].lead.arrows, vec![0, 0, 0]);
        assert_eq!(rs.irreducible_words().len(), 3);
        assert_eq!(rs.certificate_degree(), 3);
    }

    #[test]
    fn a2_classical() {
        let (p, rs) = system(vec![vec![2, -1], vec![-1, 2]], vec![1, 1]);
        let names: Vec<String> = rs
            .irreducible_words()
            .iter()
            .map(|w| w.arrows.iter().map(|&a| p.arrows[a].name.clone()).collect::<Vec<_>>().join(" "))
            .collect();
        assert_eq!(names, vec!["", "", "a12", "a21"]);
    }

    #[test]
    fn relations_reduce_to_zero() {
        for (c, d) in [
            (vec![vec![2, -1], vec![-2, 2]], vec![2, 1]),
            (vec![vec![2, -1], vec![-3, 2]], vec![3, 1]),
            (vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]], vec![1, 1, 1]),
        ] {
            let (p, rs) = system(c, d);
            for rel in &p.relations {
                assert!(rs.reduce_relation(&rel.terms).is_empty(), "{}", rel.label);
            }
        }
    }

    #[test]
    fn normal_form_idempotent() {
        let (_, rs) = system(vec![vec![2, -1], vec![-2, 2]], vec![2, 1]);
        for w in rs.irreducible_words() {
            let nf = rs.reduce_path(w);
            assert_eq!(nf.len(), 1);
            assert_eq!(nf.keys().next().unwrap(), w);
        }
        for rule in rs.rules() {
            for (t, _) in &rule.tail {
                assert!(t < &rule.lead);
                assert!(rs.is_irreducible(t));
            }
        }
    }

    #[test]
    fn prime_field_agrees_on_dimension() {
        let cd = validate_gcm(vec![vec![2, -1], vec![-2, 2]], vec![2, 1], None).unwrap();
        let p = quiver_presentation(&cd, PresentationMode::Pi);
        let q = RewriteSystem::complete(&Rationals, &p, default_max_degree(&p)).unwrap();
        let f = PrimeField::new(2_147_483_659).unwrap();
        let r = RewriteSystem::complete(&f, &p, default_max_degree(&p)).unwrap();
        assert_eq!(q.irreducible_words(), r.irreducible_words());
    }

    #[test]
    fn tiny_bound_is_reported() {
        let cd = validate_gcm(vec![vec![2, -1], vec![-2, 2]], vec![2, 1], None).unwrap();
        let p = quiver_presentation(&cd, PresentationMode::Pi);
        assert_eq!(
            RewriteSystem::complete(&Rationals, &p, 2).unwrap_err(),
            RewriteError::DegreeBoundExceeded { max_degree: 2 }
        );
    }
}
