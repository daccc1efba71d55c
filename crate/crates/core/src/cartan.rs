//! Symmetrizable generalized Cartan matrices, their symmetrizers and
//! orientations, and the definiteness classification of `DC`.
//!
//! Vertices are 0-based throughout this crate; the file formats in the
//! companion crate translate to and from 1-based labels.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CartanError {
    #[error("matrix is not square or does not match the symmetrizer length")]
    Shape,
    #[error("not a generalized Cartan matrix: entry ({row}, {col}) = {value} violates {rule}")]
    NotGcm { row: usize, col: usize, value: i64, rule: &'static str },
    #[error("not a symmetrizer: {0}")]
    NotSymmetrizer(&'static str),
    #[error("bad orientation: {0}")]
    BadOrientation(&'static str),
    #[error("matrix is disconnected; minimal symmetrizer computed per component")]
    Disconnected { per_component: Vec<u64> },
    #[error("input is not of Dynkin type")]
    NotDynkin,
    #[error("no Euclidean extension found within the search bound")]
    NotFound,
}

/// Definiteness class of the symmetric matrix `DC`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanTag {
    Dynkin,
    Euclidean,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CartanClass {
    pub tag: CartanTag,
    pub connected: bool,
}

/// A validated symmetrizable GCM together with a symmetrizer and an orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanData {
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<u64>,
    orientation: Vec<(usize, usize)>,
}

impl CartanData {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn symmetrizer(&self) -> &[u64] {
        &self.symmetrizer
    }

    /// `c_i`
    pub fn c(&self, i: usize) -> u64 {
        self.symmetrizer[i]
    }

    /// The orientation, sorted.
    pub fn orientation(&self) -> &[(usize, usize)] {
        &self.orientation
    }

    pub fn in_orientation(&self, i: usize, j: usize) -> bool {
        self.orientation.binary_search(&(i, j)).is_ok()
    }

    /// `+1` for `(i, j)` in the orientation, `-1` for its reverse, 0 otherwise.
    pub fn sign(&self, i: usize, j: usize) -> i64 {
        if self.in_orientation(i, j) {
            1
        } else if self.in_orientation(j, i) {
            -1
        } else {
            0
        }
    }

    /// Unordered edges `{i, j}` (as `i < j`) of the valued graph.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.cartan[i][j] < 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `g_ij = |gcd(c_ij, c_ji)|`, defined when `c_ij < 0`.
    pub fn g(&self, i: usize, j: usize) -> Option<u64> {
        let (a, b) = (self.cartan[i][j], self.cartan[j][i]);
        (i != j && a < 0).then(|| a.unsigned_abs().gcd(&b.unsigned_abs()))
    }

    /// `f_ij = |c_ij| / g_ij`, defined when `c_ij < 0`.
    pub fn f(&self, i: usize, j: usize) -> Option<u64> {
        self.g(i, j).map(|g| self.cartan[i][j].unsigned_abs() / g)
    }

    pub fn is_connected(&self) -> bool {
        components(&self.cartan).len() <= 1
    }

    /// The symmetric matrix `DC`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        symmetrized(&self.cartan, &self.symmetrizer)
    }

    /// The same data with a different orientation.
    pub fn with_orientation(&self, orientation: Vec<(usize, usize)>) -> Result<Self, CartanError> {
        validate_gcm(self.cartan.clone(), self.symmetrizer.clone(), Some(orientation))
    }
}

fn symmetrized(c: &[Vec<i64>], d: &[u64]) -> Vec<Vec<i64>> {
    c.iter().zip(d).map(|(row, &ci)| row.iter().map(|&x| ci as i64 * x).collect()).collect()
}

/// Connected components of the graph `c_ij != 0, i != j`, each sorted.
fn components(c: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = c.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if j != i && c[i][j] != 0 && !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                    queue.push_back(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn check_gcm(c: &[Vec<i64>]) -> Result<(), CartanError> {
    let n = c.len();
    if c.iter().any(|row| row.len() != n) || n == 0 {
        return Err(CartanError::Shape);
    }
    for i in 0..n {
        for j in 0..n {
            let v = c[i][j];
            if i == j && v != 2 {
                return Err(CartanError::NotGcm { row: i, col: j, value: v, rule: "C1 (diagonal entries equal 2)" });
            }
            if i != j && v > 0 {
                return Err(CartanError::NotGcm {
                    row: i,
                    col: j,
                    value: v,
                    rule: "C2 (off-diagonal entries are non-positive)",
                });
            }
            if i != j && (v == 0) != (c[j][i] == 0) {
                return Err(CartanError::NotGcm { row: i, col: j, value: v, rule: "C3 (symmetric zero pattern)" });
            }
        }
    }
    Ok(())
}

/// Validates a GCM, a symmetrizer and (optionally) an orientation. Without an
/// orientation the default `{(i, j) : i < j, c_ij < 0}` is used.
pub fn validate_gcm(
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<u64>,
    orientation: Option<Vec<(usize, usize)>>,
) -> Result<CartanData, CartanError> {
    check_gcm(&cartan)?;
    let n = cartan.len();
    if symmetrizer.len() != n {
        return Err(CartanError::Shape);
    }
    if symmetrizer.contains(&0) {
        return Err(CartanError::NotSymmetrizer("symmetrizer entries must be positive"));
    }
    let dc = symmetrized(&cartan, &symmetrizer);
    for i in 0..n {
        for j in 0..n {
            if dc[i][j] != dc[j][i] {
                return Err(CartanError::NotSymmetrizer("DC is not symmetric"));
            }
        }
    }
    let mut omega = match orientation {
        Some(o) => o,
        None => {
            let mut o = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if cartan[i][j] < 0 {
                        o.push((i, j));
                    }
                }
            }
            o
        }
    };
    omega.sort_unstable();
    let set: BTreeSet<(usize, usize)> = omega.iter().copied().collect();
    if set.len() != omega.len() {
        return Err(CartanError::BadOrientation("duplicate pair"));
    }
    for &(i, j) in &omega {
        if i >= n || j >= n || i == j || cartan[i][j] >= 0 {
            return Err(CartanError::BadOrientation("pair is not an edge of the valued graph"));
        }
        if set.contains(&(j, i)) {
            return Err(CartanError::BadOrientation("both directions of an edge given"));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if cartan[i][j] < 0 && !set.contains(&(i, j)) && !set.contains(&(j, i)) {
                return Err(CartanError::BadOrientation("an edge has no direction"));
            }
        }
    }
    if has_cycle(n, &omega) {
        return Err(CartanError::BadOrientation("orientation contains an oriented cycle"));
    }
    Ok(CartanData { cartan, symmetrizer, orientation: omega })
}

fn has_cycle(n: usize, edges: &[(usize, usize)]) -> bool {
    // Kahn's algorithm
    let mut indeg = vec![0usize; n];
    for &(_, j) in edges {
        indeg[j] += 1;
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = queue.pop_front() {
        removed += 1;
        for &(a, b) in edges {
            if a == v {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    queue.push_back(b);
                }
            }
        }
    }
    removed != n
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

fn principal_minor(m: &[Vec<i64>], idx: &[usize]) -> BigInt {
    let sub: Vec<Vec<i64>> = idx.iter().map(|&i| idx.iter().map(|&j| m[i][j]).collect()).collect();
    determinant(&sub)
}

/// Sylvester: positive definite iff every leading principal minor is positive.
fn is_positive_definite(m: &[Vec<i64>]) -> bool {
    (1..=m.len()).all(|k| principal_minor(m, &(0..k).collect::<Vec<_>>()).is_positive())
}

/// Positive semi-definite iff every principal minor is non-negative.
fn is_positive_semidefinite(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    (1u64..(1u64 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        !principal_minor(m, &idx).is_negative()
    })
}

pub fn classify(cd: &CartanData) -> CartanClass {
    let dc = cd.symmetrized();
    let tag = if is_positive_definite(&dc) {
        CartanTag::Dynkin
    } else if is_positive_semidefinite(&dc) {
        // not definite, so the radical is nontrivial
        CartanTag::Euclidean
    } else {
        CartanTag::Other
    };
    CartanClass { tag, connected: cd.is_connected() }
}

/// The unique minimal symmetrizer of a connected GCM. For a disconnected
/// matrix the componentwise minimal symmetrizer is returned inside
/// [`CartanError::Disconnected`].
pub fn minimal_symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<u64>, CartanError> {
    check_gcm(cartan)?;
    let n = cartan.len();
    let comps = components(cartan);
    let mut out = vec![0u64; n];
    for comp in &comps {
        // ratio[v] = num/den relative to the root of the spanning tree
        let mut ratio: BTreeMap<usize, (u64, u64)> = BTreeMap::new();
        let root = comp[0];
        ratio.insert(root, (1, 1));
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let (num, den) = ratio[&i];
            for j in 0..n {
                if j == i || cartan[i][j] == 0 {
                    continue;
                }
                // c_i c_ij = c_j c_ji  =>  c_j = c_i * |c_ij| / |c_ji|
                let (a, b) = (cartan[i][j].unsigned_abs(), cartan[j][i].unsigned_abs());
                let (mut jn, mut jd) = (num * a, den * b);
                let g = jn.gcd(&jd);
                jn /= g;
                jd /= g;
                match ratio.get(&j) {
                    Some(&(pn, pd)) => {
                        if pn * jd != jn * pd {
                            return Err(CartanError::NotSymmetrizer("matrix is not symmetrizable"));
                        }
                    }
                    None => {
                        ratio.insert(j, (jn, jd));
                        queue.push_back(j);
                    }
                }
            }
        }
        let lcm_den = ratio.values().fold(1u64, |acc, &(_, d)| acc.lcm(&d));
        let scaled: Vec<(usize, u64)> = ratio.iter().map(|(&v, &(num, den))| (v, num * (lcm_den / den))).collect();
        let g = scaled.iter().fold(0u64, |acc, &(_, x)| acc.gcd(&x));
        for (v, x) in scaled {
            out[v] = x / g;
        }
    }
    if comps.len() > 1 {
        Err(CartanError::Disconnected { per_component: out })
    } else {
        Ok(out)
    }
}

/// Searches for a connected Euclidean GCM of rank `n + 1` whose vertices
/// `1..=n` carry `cd` (matrix and symmetrizer) and whose new vertex is `0`.
///
/// Candidates are enumerated lexicographically by the new symmetrizer entry
/// (`1..=lcm(c_i)`) and then by the new row `c_{0j}` with entries drawn from
/// `0, -1, -2, -3` in that order; the first hit is returned.
pub fn find_euclidean_extension(cd: &CartanData) -> Result<CartanData, CartanError> {
    let class = classify(cd);
    if class.tag != CartanTag::Dynkin || !class.connected {
        return Err(CartanError::NotDynkin);
    }
    let n = cd.rank();
    let bound = cd.symmetrizer.iter().fold(1u64, |acc, &c| acc.lcm(&c));
    const ROW_VALUES: [i64; 4] = [0, -1, -2, -3];
    for c0 in 1..=bound {
        let total = 4usize.pow(n as u32);
        'row: for code in 0..total {
            let mut row = vec![0i64; n];
            let mut rest = code;
            for slot in (0..n).rev() {
                row[slot] = ROW_VALUES[rest % 4];
                rest /= 4;
            }
            let mut m = vec![vec![0i64; n + 1]; n + 1];
            m[0][0] = 2;
            for i in 0..n {
                for j in 0..n {
                    m[i + 1][j + 1] = cd.cartan[i][j];
                }
            }
            for (j, &a) in row.iter().enumerate() {
                // c_0 c_{0j} = c_j c_{j0}
                let num = c0 as i64 * a;
                let cj = cd.symmetrizer[j] as i64;
                if num % cj != 0 {
                    continue 'row;
                }
                m[0][j + 1] = a;
                m[j + 1][0] = num / cj;
            }
            let mut d = vec![c0];
            d.extend_from_slice(&cd.symmetrizer);
            let Ok(ext) = validate_gcm(m, d, None) else {
                continue;
            };
            let class = classify(&ext);
            if class.connected && class.tag == CartanTag::Euclidean {
                return Ok(ext);
            }
        }
    }
    Err(CartanError::NotFound)
}
