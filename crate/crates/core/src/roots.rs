//! Simple reflections, dual reflections on weights, positive-root enumeration
//! on finite windows, and the dominance-reduction algorithm.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{cartan_apply, symmetrized_form, window_is_dynkin};
use crate::quiver::{DimVec, FiniteWindow, Quiver, Vertex};
use crate::scalar::Scalar;
use crate::weight::Weight;

/// s_i(α) = α − (α, ε_i) ε_i. An involution changing only coordinate i; the
/// output may be negative, which is why it lives in the signed vector type.
pub fn simple_reflection(q: &Quiver, i: Vertex, alpha: &DimVec) -> DimVec {
    let pairing = symmetrized_form(q, alpha, &DimVec::unit(i));
    let mut out = alpha.clone();
    out.set(i, alpha.get(i) - pairing);
    out
}

/// r_i λ = λ − λ_i ν(ε_i). Adjoint to s_i: (r_iλ)·α = λ·(s_iα). Touches only
/// i and its neighbors.
pub fn dual_reflection(q: &Quiver, i: Vertex, lambda: &Weight) -> Weight {
    let li = lambda.at(i);
    if li.is_zero() {
        return lambda.clone();
    }
    let row = cartan_apply(q, &DimVec::unit(i));
    let mut out = lambda.clone();
    let mut touched: Vec<Vertex> = q.neighbors(i);
    touched.push(i);
    for j in touched {
        let v = &lambda.at(j) - &(&li * &row.at(j));
        out.set(j, v);
    }
    out
}

/// A word in the simple reflections, applied right-to-left: `[a, b]` means
/// "apply reflection b first, then a".
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct ReflectionWord(pub Vec<Vertex>);

impl ReflectionWord {
    pub fn empty() -> Self {
        ReflectionWord(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Reverses the word: since each r_i is an involution this is the inverse
    /// group element.
    pub fn reversed(&self) -> ReflectionWord {
        ReflectionWord(self.0.iter().rev().copied().collect())
    }

    /// Vertices in application order (rightmost first).
    pub fn in_application_order(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().rev().copied()
    }

    pub fn apply_to_weight(&self, q: &Quiver, lambda: &Weight) -> Weight {
        let mut cur = lambda.clone();
        for i in self.in_application_order() {
            cur = dual_reflection(q, i, &cur);
        }
        cur
    }

    pub fn apply_to_dimvec(&self, q: &Quiver, alpha: &DimVec) -> DimVec {
        let mut cur = alpha.clone();
        for i in self.in_application_order() {
            cur = simple_reflection(q, i, &cur);
        }
        cur
    }
}

/// All positive roots supported in the window, each exactly once, in
/// ascending entry order. The window must be a disjoint union of finite
/// Dynkin diagrams (always the case for windows of the three families).
///
/// Closure enumeration: start from the simple roots of the window and keep
/// applying window reflections, retaining the vectors with all coordinates
/// non-negative. Every positive root is reachable from a simple root through
/// positive intermediate steps, so the closure is complete.
pub fn enumerate_positive_roots(q: &Quiver, w: &FiniteWindow) -> Result<Vec<DimVec>> {
    if w.is_empty() {
        return Ok(vec![]);
    }
    if !window_is_dynkin(q, w) {
        return Err(Error::NonDynkinWindow);
    }
    let verts = w.vertices();
    let mut found: BTreeSet<DimVec> = verts.iter().map(|&v| DimVec::unit(v)).collect();
    let mut frontier: Vec<DimVec> = found.iter().cloned().collect();
    while let Some(alpha) = frontier.pop() {
        for &j in verts {
            let beta = simple_reflection(q, j, &alpha);
            if beta.is_nonneg() && !beta.is_zero() && found.insert(beta.clone()) {
                frontier.push(beta);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Whether α is a positive root of the window it spans.
pub fn is_positive_root(q: &Quiver, alpha: &DimVec) -> Result<bool> {
    if alpha.is_zero() || !alpha.is_nonneg() {
        return Ok(false);
    }
    let w = q.window(alpha.support())?;
    if !w.is_connected() {
        return Ok(false);
    }
    if !window_is_dynkin(q, &w) {
        return Err(Error::NonDynkinWindow);
    }
    Ok(enumerate_positive_roots(q, &w)?.contains(alpha))
}

/// Weak J-dominance: no coordinate on J precedes 0 in the order ≺.
pub fn is_weakly_dominant(lambda: &Weight, j: &[Vertex]) -> bool {
    let zero = Scalar::zero();
    j.iter().all(|&v| !lambda.at(v).precedes(&zero))
}

/// Conjugates λ into a weakly J-dominant weight by reflections from J.
///
/// Greedy: while some λ_j ≺ 0 with j ∈ J, reflect at the smallest such j.
/// Each step raises the height of the patched weight strictly, and the window
/// Weyl group is finite, so this terminates. Returns the dominant weight
/// together with the word (replaying the word on λ reproduces the output
/// exactly; the reversed word recovers λ).
///
/// Dominance is the weak reading ¬(λ_j ≺ 0): some orbits contain no strictly
/// positive representative. Minimal-length words are not guaranteed.
pub fn dominate(q: &Quiver, lambda: &Weight, j: &[Vertex]) -> Result<(Weight, ReflectionWord)> {
    let mut jset: Vec<Vertex> = j.to_vec();
    jset.sort();
    jset.dedup();
    for &v in &jset {
        if !q.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    if !jset.is_empty() && !window_is_dynkin(q, &q.window(jset.iter().copied())?) {
        return Err(Error::NonDynkinWindow);
    }
    let zero = Scalar::zero();
    let mut cur = lambda.clone();
    let mut word: Vec<Vertex> = Vec::new();
    while let Some(&v) = jset.iter().find(|&&v| cur.at(v).precedes(&zero)) {
        cur = dual_reflection(q, v, &cur);
        word.push(v);
    }
    // The word is recorded leftmost-last: reverse into right-to-left order.
    word.reverse();
    Ok((cur, ReflectionWord(word)))
}
