//! Weights: scalar-valued functions on the vertices.
//!
//! A weight is a base generator giving a default value at every vertex plus a
//! finite overlay patch. The base is one of: identically zero, an explicit
//! finite list anchored at vertex 0, or the deformation family λ_i =
//! (i+1)(1+f(b_i)) coming from a Casimir polynomial f (see the sl2 bridge
//! module). Evaluation at any single vertex always terminates; only finitely
//! many vertices ever differ from the base.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::khare::CasimirPolynomial;
use crate::quiver::{DimVec, Vertex};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WeightBase {
    Zero,
    /// Values at vertices 0,1,…,len-1; zero elsewhere.
    Explicit { values: Vec<Scalar> },
    /// λ_i = (i+1)(1+f(b_i)) for i ≥ 0, zero at negative vertices.
    Khare { f: CasimirPolynomial },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Weight {
    base: WeightBase,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    patch: BTreeMap<Vertex, Scalar>,
}

impl Weight {
    pub fn zero() -> Self {
        Weight { base: WeightBase::Zero, patch: BTreeMap::new() }
    }

    /// Weight with the given values at vertices 0,1,2,… and zero elsewhere.
    pub fn explicit(values: Vec<Scalar>) -> Self {
        Weight { base: WeightBase::Explicit { values }, patch: BTreeMap::new() }
    }

    pub fn explicit_ints(values: &[i64]) -> Self {
        Weight::explicit(values.iter().map(|&v| Scalar::from_int(v)).collect())
    }

    pub fn khare(f: CasimirPolynomial) -> Self {
        Weight { base: WeightBase::Khare { f }, patch: BTreeMap::new() }
    }

    /// Weight supported on arbitrary vertices, zero base.
    pub fn from_patch(entries: impl IntoIterator<Item = (Vertex, Scalar)>) -> Self {
        let mut w = Weight::zero();
        for (v, s) in entries {
            w.set(v, s);
        }
        w
    }

    pub fn base(&self) -> &WeightBase {
        &self.base
    }

    pub fn patch(&self) -> &BTreeMap<Vertex, Scalar> {
        &self.patch
    }

    fn base_at(&self, v: Vertex) -> Scalar {
        match &self.base {
            WeightBase::Zero => Scalar::zero(),
            WeightBase::Explicit { values } => {
                if v >= 0 && (v as usize) < values.len() {
                    values[v as usize].clone()
                } else {
                    Scalar::zero()
                }
            }
            WeightBase::Khare { f } => {
                if v >= 0 {
                    f.khare_value(v as u64)
                } else {
                    Scalar::zero()
                }
            }
        }
    }

    /// λ_v, exactly.
    pub fn at(&self, v: Vertex) -> Scalar {
        self.patch.get(&v).cloned().unwrap_or_else(|| self.base_at(v))
    }

    /// Overrides the value at one vertex. Storing the base value back shrinks
    /// the patch instead of growing it.
    pub fn set(&mut self, v: Vertex, value: Scalar) {
        if self.base_at(v) == value {
            self.patch.remove(&v);
        } else {
            self.patch.insert(v, value);
        }
    }

    pub fn with(&self, v: Vertex, value: Scalar) -> Weight {
        let mut w = self.clone();
        w.set(v, value);
        w
    }

    /// The standard pairing λ·α = Σ λ_v α_v over the (finite) support of α.
    pub fn dot(&self, alpha: &DimVec) -> Scalar {
        let mut acc = Scalar::zero();
        for (v, c) in alpha.entries() {
            let term = &self.at(v) * &Scalar::from_int(c);
            acc += &term;
        }
        acc
    }

    /// Two weights agree on a window iff they agree at every window vertex.
    pub fn eq_on(&self, other: &Weight, vertices: &[Vertex]) -> bool {
        vertices.iter().all(|&v| self.at(v) == other.at(v))
    }
}

/// Free-function form of the pairing, matching the operation tables.
pub fn weight_dot(lambda: &Weight, alpha: &DimVec) -> Scalar {
    lambda.dot(alpha)
}
