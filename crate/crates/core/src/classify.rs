//! Existence and uniqueness of finite-dimensional simple modules of the
//! rank-1 algebra, with the fast interval path on type A.
//!
//! A simple of dimension vector α ≠ 0 exists iff
//! (a) α is a positive root of its (connected) support window,
//! (b) λ·α = 0, and
//! (c) α admits no decomposition into two or more positive roots that all
//!     pair to zero with λ.
//! Any such simple is unique up to isomorphism. The p-inequality of the
//! general criterion is implemented in its strict reading: every root here
//! has p(α) = 0 (no imaginary roots), so the inequality degenerates to
//! forbidding fully λ-orthogonal decompositions outright; this matches the
//! interval conditions used on type A.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle;
use crate::quiver::{DimVec, Quiver, Vertex};
use crate::roots::enumerate_positive_roots;
use crate::scalar::Scalar;
use crate::weight::Weight;

/// p(α) = 1 + Σ_a α_{t(a)} α_{h(a)} − Σ_i α_i², summed over base arrows.
pub fn p_value(q: &Quiver, alpha: &DimVec) -> i64 {
    let mut acc = 1i64;
    for (v, c) in alpha.entries() {
        acc -= c * c;
        for a in q.arrows_out(v) {
            acc += c * alpha.get(a.head);
        }
    }
    acc
}

/// Why a dimension vector carries no simple module.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum FailureReason {
    /// Not a positive root of its support window (disconnected support
    /// included).
    NotARoot,
    /// λ·α ≠ 0; the offending value is recorded.
    PairingNonzero { value: Scalar },
    /// A decomposition into ≥ 2 positive roots, each pairing to zero with λ.
    BlockingDecomposition { parts: Vec<DimVec> },
}

/// Verdict for one dimension vector. Positive type-A/tree verdicts carry the
/// oracle's edge-scalar witness.
#[derive(Clone, Debug, Serialize)]
pub struct SimpleCertificate {
    pub alpha: DimVec,
    /// Support window J (the connected support itself for positive verdicts).
    pub window: Vec<Vertex>,
    pub exists: bool,
    /// Edge scalars of the reconstructed module for multiplicity-free α on
    /// tree supports. `None` for multiplicities ≥ 2 (outside oracle scope).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_scalars: Option<Vec<Scalar>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<FailureReason>,
}

impl SimpleCertificate {
    fn negative(alpha: DimVec, window: Vec<Vertex>, failure: FailureReason) -> Self {
        SimpleCertificate { alpha, window, exists: false, edge_scalars: None, failure: Some(failure) }
    }
}

/// Decides whether a simple module of dimension vector α exists for λ.
pub fn exists_simple(q: &Quiver, lambda: &Weight, alpha: &DimVec) -> Result<SimpleCertificate> {
    if alpha.is_zero() {
        return Err(Error::ZeroDimensionVector);
    }
    if !alpha.is_nonneg() {
        let v = alpha.entries().find(|&(_, c)| c < 0).map(|(v, _)| v).unwrap();
        return Err(Error::NegativeDimension(v));
    }
    let support = alpha.support();
    let window = q.window(support.iter().copied())?;
    if !window.is_connected() {
        return Ok(SimpleCertificate::negative(alpha.clone(), support, FailureReason::NotARoot));
    }
    let roots = enumerate_positive_roots(q, &window)?;
    if !roots.contains(alpha) {
        return Ok(SimpleCertificate::negative(alpha.clone(), support, FailureReason::NotARoot));
    }
    let pairing = lambda.dot(alpha);
    if !pairing.is_zero() {
        return Ok(SimpleCertificate::negative(
            alpha.clone(),
            support,
            FailureReason::PairingNonzero { value: pairing },
        ));
    }
    // Blocking decompositions: parts are positive roots strictly below α,
    // each orthogonal to λ. Depth-first with non-increasing part index, so
    // each multiset is visited once.
    let candidates: Vec<DimVec> = roots
        .iter()
        .filter(|beta| *beta != alpha && beta.leq(alpha) && lambda.dot(beta).is_zero())
        .cloned()
        .collect();
    if let Some(parts) = decompose(alpha, &candidates) {
        return Ok(SimpleCertificate::negative(
            alpha.clone(),
            support,
            FailureReason::BlockingDecomposition { parts },
        ));
    }
    let edge_scalars = if alpha.is_multiplicity_free() {
        oracle::oracle_simple(q, lambda, alpha)?.map(|rep| {
            rep.matrices()
                .iter()
                .filter(|(a, _)| a.starred)
                .map(|(_, m)| m[(0, 0)].clone())
                .collect()
        })
    } else {
        None
    };
    Ok(SimpleCertificate {
        alpha: alpha.clone(),
        window: support,
        exists: true,
        edge_scalars,
        failure: None,
    })
}

fn decompose(alpha: &DimVec, candidates: &[DimVec]) -> Option<Vec<DimVec>> {
    fn go(
        remaining: &DimVec,
        start: usize,
        count: usize,
        candidates: &[DimVec],
        parts: &mut Vec<DimVec>,
    ) -> bool {
        if remaining.is_zero() {
            return count >= 2;
        }
        for idx in start..candidates.len() {
            let beta = &candidates[idx];
            if beta.leq(remaining) {
                parts.push(beta.clone());
                if go(&remaining.sub(beta), idx, count + 1, candidates, parts) {
                    return true;
                }
                parts.pop();
            }
        }
        false
    }
    let mut parts = Vec::new();
    go(alpha, 0, 0, candidates, &mut parts).then_some(parts)
}

/// The type-A fast path: a simple at the interval root α_[s,r] exists iff
/// Σ_{i=s}^r λ_i = 0 and Σ_{i=k}^r λ_i ≠ 0 for every s < k ≤ r.
pub fn interval_conditions(q: &Quiver, lambda: &Weight, s: Vertex, r: Vertex) -> Result<bool> {
    if !q.is_type_a() {
        return Err(Error::NotTypeA);
    }
    if s > r {
        return Err(Error::OracleScope(format!("empty interval {s}..{r}")));
    }
    if !q.contains_vertex(s) || !q.contains_vertex(r) {
        return Err(Error::UnknownVertex(if q.contains_vertex(s) { r } else { s }));
    }
    let mut tail = Scalar::zero();
    for k in ((s + 1)..=r).rev() {
        tail += &lambda.at(k);
        if tail.is_zero() {
            return Ok(false);
        }
    }
    tail += &lambda.at(s);
    Ok(tail.is_zero())
}

/// All positive verdicts supported in a window, one certificate each,
/// ordered by dimension vector.
pub fn enumerate_simples(
    q: &Quiver,
    lambda: &Weight,
    window_vertices: &[Vertex],
) -> Result<Vec<SimpleCertificate>> {
    let window = q.window(window_vertices.iter().copied())?;
    let mut out = Vec::new();
    for alpha in enumerate_positive_roots(q, &window)? {
        let cert = exists_simple(q, lambda, &alpha)?;
        if cert.exists {
            out.push(cert);
        }
    }
    Ok(out)
}
