//! Brute-force dimension of a generalized preprojective algebra, written
//! without the rewriting engine: the quiver and relations are rebuilt from
//! the Cartan data, and `dim kQ/(I + J^{L+1})` is computed by exact linear
//! algebra on the space of paths of length at most `L` until it stabilizes.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Copy)]
struct Arrow {
    source: usize,
    target: usize,
}

type Word = Vec<usize>;

struct Quiver {
    vertices: usize,
    arrows: Vec<Arrow>,
    relations: Vec<Vec<(i64, Word)>>,
}

fn build(c: &[Vec<i64>], d: &[u64]) -> Quiver {
    let n = c.len();
    let mut arrows: Vec<Arrow> = (0..n).map(|i| Arrow { source: i, target: i }).collect();
    // alpha[(i, j)] lists the arrows j -> i, one per g
    let mut alpha: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut f = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || c[i][j] == 0 {
                continue;
            }
            let g = (c[i][j].unsigned_abs()).gcd(&c[j][i].unsigned_abs());
            f[i][j] = c[i][j].unsigned_abs() / g;
            for _ in 0..g {
                alpha.entry((i, j)).or_default().push(arrows.len());
                arrows.push(Arrow { source: j, target: i });
            }
        }
    }
    let eps = |i: usize, k: u64| vec![i; k as usize];
    let cat = |parts: &[&Word]| parts.iter().flat_map(|p| p.iter().copied()).collect::<Word>();
    let mut relations = Vec::new();
    for i in 0..n {
        relations.push(vec![(1, eps(i, d[i]))]);
    }
    for (&(i, j), list) in &alpha {
        for &a in list {
            let a = vec![a];
            relations.push(vec![(1, cat(&[&eps(i, f[j][i]), &a])), (-1, cat(&[&a, &eps(j, f[i][j])]))]);
        }
    }
    for i in 0..n {
        let mut rel = Vec::new();
        for j in 0..n {
            let Some(list) = alpha.get(&(i, j)) else { continue };
            let back = &alpha[&(j, i)];
            // orientation: i < j is the chosen direction
            let sign = if i < j { 1 } else { -1 };
            for (&a, &b) in list.iter().zip(back) {
                for k in 0..f[j][i] {
                    rel.push((sign, cat(&[&eps(i, k), &vec![a, b], &eps(i, f[j][i] - 1 - k)])));
                }
            }
        }
        if !rel.is_empty() {
            relations.push(rel);
        }
    }
    Quiver { vertices: n, arrows, relations }
}

/// Paths of each length; trivial paths are `(vertex, [])`.
fn paths(q: &Quiver, max_len: usize) -> Vec<(usize, usize, Word)> {
    let mut out: Vec<(usize, usize, Word)> = (0..q.vertices).map(|v| (v, v, Vec::new())).collect();
    let mut frontier: Vec<(usize, usize, Word)> = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (s, t, w) in &frontier {
            // prepend an arrow applied after the path
            for (a, arr) in q.arrows.iter().enumerate() {
                if arr.source == *t {
                    let mut w2 = vec![a];
                    w2.extend_from_slice(w);
                    next.push((*s, arr.target, w2));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn ends(q: &Quiver, w: &Word) -> (usize, usize) {
    (q.arrows[*w.last().unwrap()].source, q.arrows[w[0]].target)
}

struct Echelon {
    rows: BTreeMap<usize, BTreeMap<usize, BigRational>>,
}

impl Echelon {
    fn insert(&mut self, mut row: BTreeMap<usize, BigRational>) {
        while let Some((&p, _)) = row.iter().next() {
            match self.rows.get(&p) {
                Some(pivot) => {
                    let factor = row[&p].clone();
                    for (c, v) in pivot {
                        let e = row.entry(*c).or_insert_with(BigRational::zero);
                        *e -= &factor * v;
                        if e.is_zero() {
                            row.remove(c);
                        }
                    }
                }
                None => {
                    let inv = BigRational::one() / row[&p].clone();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.rows.insert(p, row);
                    return;
                }
            }
        }
    }
}

fn truncated_dim(q: &Quiver, all: &[(usize, usize, Word)], max_len: usize) -> usize {
    let index: BTreeMap<(usize, &Word), usize> =
        all.iter().enumerate().filter(|(_, p)| p.2.len() <= max_len).map(|(i, p)| ((p.0, &p.2), i)).collect();
    let mut ech = Echelon { rows: BTreeMap::new() };
    for rel in &q.relations {
        let min = rel.iter().map(|(_, w)| w.len()).min().unwrap();
        let (rs, rt) = ends(q, &rel[0].1);
        for (ls, _, lw) in all {
            if *ls != rt || lw.len() + min > max_len {
                continue;
            }
            for (qs, qt, qw) in all {
                if *qt != rs || lw.len() + min + qw.len() > max_len {
                    continue;
                }
                let mut row: BTreeMap<usize, BigRational> = BTreeMap::new();
                for (coef, w) in rel {
                    let word: Word = lw.iter().chain(w).chain(qw).copied().collect();
                    if word.len() > max_len {
                        continue;
                    }
                    let col = index[&(*qs, &word)];
                    let e = row.entry(col).or_insert_with(BigRational::zero);
                    *e += BigRational::from_integer((*coef).into());
                    if e.is_zero() {
                        row.remove(&col);
                    }
                }
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
    }
    index.len() - ech.rows.len()
}

/// `dim Π(C, D)`, or `None` if no stabilization is seen by length `cap`.
pub fn preprojective_dim(c: &[Vec<i64>], d: &[u64], cap: usize) -> Option<usize> {
    let q = build(c, d);
    let mut prev = None;
    for len in 0..=cap {
        let all = paths(&q, len);
        let dim = truncated_dim(&q, &all, len);
        if prev == Some(dim) {
            return Some(dim);
        }
        prev = Some(dim);
    }
    None
}
