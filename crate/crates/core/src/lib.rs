//! Exact-arithmetic toolkit for the infinite affine quivers A∞, A+∞, D∞ and
//! their deformed preprojective algebras.
//!
//! Everything is computed over ℚ(i) with no tolerances: root systems and Weyl
//! actions, relation-checked representations of the rank-1 and wreath
//! (rank-n) algebras, the classification of finite-dimensional simples with
//! an independent brute-force oracle, reflection functors on wreath modules,
//! and the wreath-product induction criteria with exact symmetric-group
//! representation data.
//!
//! All values are immutable after construction and safe to share across
//! threads; the operations are pure functions.

pub mod error;
pub mod scalar;
pub mod matrix;
pub mod quiver;
pub mod weight;
pub mod khare;
pub mod forms;
pub mod roots;
pub mod rep;
pub mod young;
pub mod wreath;
pub mod oracle;
pub mod classify;
pub mod reflect;
pub mod induction;

pub use classify::{enumerate_simples, exists_simple, interval_conditions, p_value, SimpleCertificate};
pub use error::{Error, Result};
pub use forms::{cartan_apply, delta_prefix, ringel_form, symmetrized_form};
pub use induction::{check_extension_conditions, content_sum, is_rectangular, symmetric_group_irrep, verify_relation_i_with_zero_arrows, verify_zero_arrow_module, InductionTargets, InductionVerdict};
pub use khare::{casimir_scalar, enumerate_vrs, khare_lambda, morita_params, CasimirPolynomial, VrsModule};
pub use matrix::Matrix;
pub use oracle::{oracle_exists_simple, oracle_simple, solve_chain, ChainSolution};
pub use quiver::{build_quiver, Arrow, DimVec, DoubleArrow, FiniteWindow, Quiver, QuiverSpec, Vertex};
pub use reflect::{in_lambda_i, reflect, reflect_word, WordReflection};
pub use rep::{check_rank1, CheckReport, Rep};
pub use roots::{dominate, dual_reflection, enumerate_positive_roots, simple_reflection, ReflectionWord};
pub use scalar::{compare, Scalar};
pub use weight::{weight_dot, Weight, WeightBase};
pub use wreath::{check_wreath, check_wreath_relation_i, intertwiner_space, is_isomorphic, outer_tensor_induce, Tuple, WreathRep};
pub use young::{Perm, SymmetricGroupIrrep, YoungDiagram};
