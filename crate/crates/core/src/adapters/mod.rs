//! Reductions of geometric inputs to finite stratified instances.
//!
//! A geometric space is cut into strata on which both the footprint of `F`
//! and the homeomorphism type of elements are constant. The strata form a
//! finite space and carry the semi-decomposition, so the finite machinery
//! runs unchanged.

pub mod digraph;
pub mod simplicial;

use crate::abstract_elements::{self, AbstractPartition, ElementTypes};
use crate::semidecomp::{Classification, SemiDecomposition};

#[derive(Clone, Debug)]
pub struct StratifiedInstance {
    pub semidec: SemiDecomposition,
    pub types: ElementTypes,
    /// Classification of the geometric elements, when the finite footprints
    /// would classify differently.
    pub classification: Option<Classification>,
    /// Human-readable description of each stratum.
    pub provenance: Vec<String>,
}

impl StratifiedInstance {
    pub fn classification(&self) -> Classification {
        self.classification.clone().unwrap_or_else(|| self.semidec.classify())
    }

    pub fn weak_elements(&self) -> AbstractPartition {
        abstract_elements::abstract_weak_elements_with(&self.semidec, &self.classification(), &self.types)
    }
}
