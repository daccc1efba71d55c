//! On-disk algebra cache: structure constants plus two SHA-256 checks, one
//! over the instance and one over the payload.

use std::path::{Path, PathBuf};

use preproj_core::algebra::{AlgebraError, BasisElement, FinDimAlgebra, Product};
use preproj_core::field::Field;
use preproj_core::quiver::QuiverPresentation;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::instance::InstanceDescriptor;

pub const CACHE_FORMAT: &str = "preproj-algebra-cache";
pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cannot access cache {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cache {path} is not a valid cache file: {message}")]
    Malformed { path: PathBuf, message: String },
    #[error("cache {path} failed its integrity check: payload hash mismatch")]
    Integrity { path: PathBuf },
    #[error("cache {path} belongs to a different instance (hash {found}, expected {expected})")]
    InstanceMismatch { path: PathBuf, found: String, expected: String },
    #[error("cache {path} does not describe a valid algebra: {source}")]
    Invalid { path: PathBuf, source: AlgebraError },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedBasis {
    pub word: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

/// Sparse entries `(index, coefficient)` with coefficients in canonical text form.
type Sparse = Vec<(usize, String)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachePayload {
    pub dim: usize,
    pub basis: Vec<CachedBasis>,
    /// `(a, b, product)` for every nonzero product `b_a b_b`.
    pub products: Vec<(usize, usize, Sparse)>,
    pub arrow_values: Vec<Sparse>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub format: String,
    pub version: u32,
    pub instance_hash: String,
    pub instance: InstanceDescriptor,
    pub payload_sha256: String,
    pub payload: CachePayload,
}

fn payload_hash(payload: &CachePayload) -> String {
    hex::encode(Sha256::digest(serde_json::to_vec(payload).expect("plain data serializes")))
}

fn sparse<K: Field>(k: &K, v: &[K::Elem]) -> Sparse {
    v.iter().enumerate().filter(|(_, c)| !k.is_zero(c)).map(|(i, c)| (i, k.format(c))).collect()
}

pub fn to_cache<K: Field>(descriptor: &InstanceDescriptor, alg: &FinDimAlgebra<K>) -> CacheFile {
    let k = alg.field();
    let dim = alg.dim();
    let basis =
        alg.basis().iter().map(|b| CachedBasis { word: b.word.clone(), source: b.source, target: b.target }).collect();
    let mut products = Vec::new();
    for a in 0..dim {
        for b in 0..dim {
            let prod = alg.mult(a, b);
            if !prod.is_empty() {
                products.push((a, b, prod.iter().map(|(t, c)| (*t, k.format(c))).collect()));
            }
        }
    }
    let arrow_values = (0..alg.presentation().arrows.len()).map(|a| sparse(k, alg.arrow_value(a))).collect();
    let payload = CachePayload { dim, basis, products, arrow_values };
    CacheFile {
        format: CACHE_FORMAT.to_string(),
        version: CACHE_VERSION,
        instance_hash: descriptor.hash(),
        instance: descriptor.clone(),
        payload_sha256: payload_hash(&payload),
        payload,
    }
}

pub fn write_cache(path: &Path, cache: &CacheFile) -> Result<(), CacheError> {
    let text = serde_json::to_string(cache).expect("plain data serializes");
    std::fs::write(path, text).map_err(|source| CacheError::Io { path: path.to_path_buf(), source })
}

/// Loads and verifies a cache: format, payload hash, instance hash, then the
/// algebra axioms and defining relations.
pub fn read_cache<K: Field>(
    path: &Path,
    k: &K,
    expected: &InstanceDescriptor,
    presentation: &QuiverPresentation,
) -> Result<FinDimAlgebra<K>, CacheError> {
    let malformed = |message: String| CacheError::Malformed { path: path.to_path_buf(), message };
    let text = std::fs::read_to_string(path).map_err(|source| CacheError::Io { path: path.to_path_buf(), source })?;
    let cache: CacheFile = serde_json::from_str(&text).map_err(|e| malformed(e.to_string()))?;
    if cache.format != CACHE_FORMAT || cache.version != CACHE_VERSION {
        return Err(malformed(format!("unsupported format {} version {}", cache.format, cache.version)));
    }
    if payload_hash(&cache.payload) != cache.payload_sha256 {
        return Err(CacheError::Integrity { path: path.to_path_buf() });
    }
    let want = expected.hash();
    if cache.instance_hash != want || cache.instance.hash() != want {
        return Err(CacheError::InstanceMismatch {
            path: path.to_path_buf(),
            found: cache.instance_hash,
            expected: want,
        });
    }
    let p = &cache.payload;
    let dim = p.dim;
    if p.basis.len() != dim {
        return Err(malformed(String::from("basis length differs from dim")));
    }
    let parse = |s: &str| k.parse(s).ok_or_else(|| malformed(format!("bad coefficient {s}")));
    let dense = |entries: &Sparse| -> Result<Vec<K::Elem>, CacheError> {
        let mut v = vec![k.zero(); dim];
        for (i, c) in entries {
            *v.get_mut(*i).ok_or_else(|| malformed(String::from("index out of range")))? = parse(c)?;
        }
        Ok(v)
    };
    let mut mult: Vec<Vec<Product<K::Elem>>> = vec![vec![Vec::new(); dim]; dim];
    for (a, b, entries) in &p.products {
        if *a >= dim || *b >= dim {
            return Err(malformed(String::from("product index out of range")));
        }
        mult[*a][*b] = entries.iter().map(|(t, c)| Ok((*t, parse(c)?))).collect::<Result<_, CacheError>>()?;
    }
    let arrow_values = p.arrow_values.iter().map(dense).collect::<Result<Vec<_>, _>>()?;
    let basis =
        p.basis.iter().map(|b| BasisElement { word: b.word.clone(), source: b.source, target: b.target }).collect();
    FinDimAlgebra::from_parts(k.clone(), presentation, basis, mult, arrow_values)
        .map_err(|source| CacheError::Invalid { path: path.to_path_buf(), source })
}
