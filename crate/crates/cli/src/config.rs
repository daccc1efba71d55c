//! Instance configuration files. Vertex indices in files are 1-based.

use std::path::{Path, PathBuf};

use preproj_core::cartan::{minimal_symmetrizer, validate_gcm, CartanData, CartanError};
use preproj_core::field::{is_prime, FieldDescriptor};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: field `{field}`: {message} (line {line}, column {column})")]
    Parse { path: PathBuf, field: String, message: String, line: usize, column: usize },
    #[error("invalid Cartan data: {0}")]
    Cartan(#[from] CartanError),
    #[error("orientation entry [{0}, {1}] is not a pair of vertices in 1..={2}")]
    BadVertex(usize, usize, usize),
    #[error("{0} is not a prime below 2^63")]
    NotPrime(u64),
    #[error("bad field specification `{0}`; expected `rational` or `p:PRIME`")]
    BadFieldFlag(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum MinimalKeyword {
    #[default]
    Minimal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum DefaultKeyword {
    #[default]
    Default,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum RationalKeyword {
    #[default]
    Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, expecting = "\"minimal\", a list of positive integers, or {\"multiple\": m}")]
pub enum SymmetrizerSpec {
    Minimal(MinimalKeyword),
    Explicit(Vec<u64>),
    Multiple { multiple: u64 },
}

impl Default for SymmetrizerSpec {
    fn default() -> Self {
        SymmetrizerSpec::Minimal(MinimalKeyword::Minimal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, expecting = "\"default\" or a list of [i, j] pairs")]
pub enum OrientationSpec {
    Default(DefaultKeyword),
    Explicit(Vec<[usize; 2]>),
}

impl Default for OrientationSpec {
    fn default() -> Self {
        OrientationSpec::Default(DefaultKeyword::Default)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, expecting = "\"rational\" or {\"prime\": p}")]
pub enum FieldSpec {
    Rational(RationalKeyword),
    Prime { prime: u64 },
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Rational(RationalKeyword::Rational)
    }
}

impl FieldSpec {
    /// Parses the command-line form `rational` or `p:PRIME`.
    pub fn from_flag(s: &str) -> Result<Self, ConfigError> {
        if s == "rational" {
            return Ok(FieldSpec::default());
        }
        let p = s
            .strip_prefix("p:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| ConfigError::BadFieldFlag(s.to_string()))?;
        Ok(FieldSpec::Prime { prime: p })
    }

    pub fn descriptor(&self) -> Result<FieldDescriptor, ConfigError> {
        match *self {
            FieldSpec::Rational(_) => Ok(FieldDescriptor::Rational),
            FieldSpec::Prime { prime } if is_prime(prime) && prime < 1 << 63 => Ok(FieldDescriptor::Prime(prime)),
            FieldSpec::Prime { prime } => Err(ConfigError::NotPrime(prime)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceConfig {
    #[serde(default)]
    pub name: Option<String>,
    pub cartan: Vec<Vec<i64>>,
    #[serde(default)]
    pub symmetrizer: SymmetrizerSpec,
    #[serde(default)]
    pub orientation: OrientationSpec,
    #[serde(default)]
    pub field: FieldSpec,
    #[serde(default)]
    pub max_degree: Option<usize>,
    #[serde(default)]
    pub cache: Option<PathBuf>,
}

/// A configuration resolved against the Cartan data.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub name: Option<String>,
    pub cartan: CartanData,
    pub field: FieldDescriptor,
    pub max_degree: Option<usize>,
    pub cache: Option<PathBuf>,
    /// Set when the matrix is disconnected and the symmetrizer was taken
    /// minimal per component.
    pub note: Option<String>,
}

impl InstanceConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text =
            std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.to_path_buf(), source })?;
        Self::parse(&text, path)
    }

    pub fn parse(text: &str, path: &Path) -> Result<Self, ConfigError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let field = e.path().to_string();
            let inner = e.into_inner();
            let full = inner.to_string();
            let message = full.rsplit_once(" at line ").map_or(full.as_str(), |(m, _)| m).to_string();
            // untagged values are reported after the whole value is read, so
            // point at the key instead when it can be found
            let untagged = ["symmetrizer", "orientation", "field"].iter().any(|k| field.starts_with(k));
            let (line, column) =
                untagged.then(|| key_position(text, &field)).flatten().unwrap_or((inner.line(), inner.column()));
            ConfigError::Parse { path: path.to_path_buf(), field, message, line, column }
        })
    }

    pub fn resolve(&self) -> Result<Resolved, ConfigError> {
        let n = self.cartan.len();
        let mut note = None;
        let minimal = || -> Result<Vec<u64>, ConfigError> {
            match minimal_symmetrizer(&self.cartan) {
                Ok(d) => Ok(d),
                Err(CartanError::Disconnected { per_component }) => Ok(per_component),
                Err(e) => Err(e.into()),
            }
        };
        let symmetrizer = match &self.symmetrizer {
            SymmetrizerSpec::Minimal(_) => minimal()?,
            SymmetrizerSpec::Explicit(d) => d.clone(),
            SymmetrizerSpec::Multiple { multiple } => minimal()?.into_iter().map(|c| c * multiple).collect(),
        };
        if matches!(minimal_symmetrizer(&self.cartan), Err(CartanError::Disconnected { .. })) {
            note = Some(String::from("disconnected matrix: minimal symmetrizer taken per component"));
        }
        let orientation = match &self.orientation {
            OrientationSpec::Default(_) => None,
            OrientationSpec::Explicit(pairs) => Some(
                pairs
                    .iter()
                    .map(|&[i, j]| {
                        if i == 0 || j == 0 || i > n || j > n {
                            Err(ConfigError::BadVertex(i, j, n))
                        } else {
                            Ok((i - 1, j - 1))
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        let cartan = validate_gcm(self.cartan.clone(), symmetrizer, orientation)?;
        Ok(Resolved {
            name: self.name.clone(),
            cartan,
            field: self.field.descriptor()?,
            max_degree: self.max_degree,
            cache: self.cache.clone(),
            note,
        })
    }
}

/// 1-based line and column of the top-level key of a field path such as `symmetrizer`.
fn key_position(text: &str, field: &str) -> Option<(usize, usize)> {
    let key = field.split(['.', '[']).next().filter(|k| !k.is_empty() && *k != "?")?;
    let needle = format!("\"{key}\"");
    let at = text
        .match_indices(&needle)
        .map(|(i, _)| i)
        .find(|&i| text[i + needle.len()..].trim_start().starts_with(':'))?;
    let before = &text[..at];
    let line = before.matches('\n').count() + 1;
    let column = at - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    Some((line, column))
}
