//! A fully constructed instance: Cartan data, algebra, Weyl group and ideals.

use std::sync::Arc;

use preproj_core::algebra::{build_from_presentation, BuildError, FinDimAlgebra};
use preproj_core::cartan::CartanData;
use preproj_core::field::{Field, FieldDescriptor};
use preproj_core::quiver::{quiver_presentation, PresentationMode, QuiverPresentation};
use preproj_core::tilting::IdealFamily;
use preproj_core::weyl::{WeylError, WeylGroup};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// What identifies an instance in caches and reports. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDescriptor {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizer: Vec<u64>,
    pub orientation: Vec<[usize; 2]>,
    pub field: String,
}

impl InstanceDescriptor {
    pub fn new(name: Option<String>, cd: &CartanData, field: FieldDescriptor) -> Self {
        InstanceDescriptor {
            name,
            cartan: cd.cartan().to_vec(),
            symmetrizer: cd.symmetrizer().to_vec(),
            orientation: cd.orientation().iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
            field: field.to_string(),
        }
    }

    /// SHA-256 over the mathematical content (the name is excluded).
    pub fn hash(&self) -> String {
        let key = (&self.cartan, &self.symmetrizer, &self.orientation, &self.field);
        hex::encode(Sha256::digest(serde_json::to_vec(&key).expect("plain data serializes")))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum InstanceError {
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

pub struct Instance<K: Field> {
    pub descriptor: InstanceDescriptor,
    pub cartan: CartanData,
    pub presentation: QuiverPresentation,
    pub alg: Arc<FinDimAlgebra<K>>,
    pub weyl: WeylGroup,
    pub family: IdealFamily<K>,
}

impl<K: Field> Instance<K> {
    pub fn build(
        k: &K,
        name: Option<String>,
        cd: &CartanData,
        max_degree: Option<usize>,
    ) -> Result<Self, InstanceError> {
        let p = quiver_presentation(cd, PresentationMode::Pi);
        Self::build_with(k, name, cd, p, max_degree)
    }

    /// Builds from an explicit presentation over the same Cartan data.
    pub fn build_with(
        k: &K,
        name: Option<String>,
        cd: &CartanData,
        presentation: QuiverPresentation,
        max_degree: Option<usize>,
    ) -> Result<Self, InstanceError> {
        let alg = build_from_presentation(k, cd, &presentation, max_degree)?;
        Self::from_algebra(name, cd, presentation, alg)
    }

    pub fn from_algebra(
        name: Option<String>,
        cd: &CartanData,
        presentation: QuiverPresentation,
        alg: FinDimAlgebra<K>,
    ) -> Result<Self, InstanceError> {
        let descriptor = InstanceDescriptor::new(name, cd, alg.field().descriptor());
        let weyl = WeylGroup::generate(cd)?;
        let alg = Arc::new(alg);
        let family = IdealFamily::build(alg.clone(), &weyl);
        Ok(Instance { descriptor, cartan: cd.clone(), presentation, alg, weyl, family })
    }
}
