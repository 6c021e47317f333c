//! Ringel form, Cartan data and the δ vector.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quiver::{DimVec, Family, FiniteWindow, Quiver, Vertex};
use crate::scalar::Scalar;
use crate::weight::Weight;

/// The (unsymmetrized) Ringel form
/// ⟨α,β⟩ = Σ_i α_i β_i − Σ_a α_{t(a)} β_{h(a)},
/// summed over the base-quiver arrows. Bilinear in both arguments; the finite
/// supports make the arrow sum finite.
pub fn ringel_form(q: &Quiver, alpha: &DimVec, beta: &DimVec) -> i64 {
    let mut acc: i64 = alpha.entries().map(|(v, c)| c * beta.get(v)).sum();
    for (v, c) in alpha.entries() {
        for a in q.arrows_out(v) {
            acc -= c * beta.get(a.head);
        }
    }
    acc
}

/// (α,β) = ⟨α,β⟩ + ⟨β,α⟩; the matrix of this form in the coordinate basis is
/// the Cartan matrix of the underlying graph.
pub fn symmetrized_form(q: &Quiver, alpha: &DimVec, beta: &DimVec) -> i64 {
    ringel_form(q, alpha, beta) + ringel_form(q, beta, alpha)
}

/// Cartan entry a_{uv} = (ε_u, ε_v): 2 on the diagonal (loop-free vertices),
/// minus the edge multiplicity off it.
pub fn cartan_entry(q: &Quiver, u: Vertex, v: Vertex) -> i64 {
    if u == v {
        2 - 2 * q.edge_multiplicity(u, u)
    } else {
        -q.edge_multiplicity(u, v)
    }
}

/// The embedding ν: dimension vectors → weights, ν(α)_j = (α, ε_j). The image
/// has finite support (α's support plus its neighbors).
pub fn cartan_apply(q: &Quiver, alpha: &DimVec) -> Weight {
    let mut entries: Vec<(Vertex, i64)> = Vec::new();
    let mut touched: Vec<Vertex> = alpha.support();
    for v in alpha.support() {
        touched.extend(q.neighbors(v));
    }
    touched.sort();
    touched.dedup();
    for j in touched {
        let mut val = 0;
        for (v, c) in alpha.entries() {
            if v == j || q.edge_multiplicity(v, j) != 0 {
                val += c * cartan_entry(q, v, j);
            }
        }
        if val != 0 {
            entries.push((j, val));
        }
    }
    Weight::from_patch(entries.into_iter().map(|(v, c)| (v, Scalar::from_int(c))))
}

/// Matrix of the symmetrized form restricted to a window, rows/columns in the
/// window's ascending vertex order.
pub fn window_cartan_matrix(q: &Quiver, w: &FiniteWindow) -> Matrix {
    let verts = w.vertices();
    Matrix::from_fn(verts.len(), verts.len(), |i, j| {
        Scalar::from_int(cartan_entry(q, verts[i], verts[j]))
    })
}

/// Positive definiteness via Sylvester's criterion (all leading principal
/// minors positive, exactly). For symmetrized quiver forms this says the
/// window is a disjoint union of finite Dynkin diagrams.
pub fn window_is_dynkin(q: &Quiver, w: &FiniteWindow) -> bool {
    let m = window_cartan_matrix(q, w);
    leading_principal_minors(&m).iter().all(|d| Scalar::zero().precedes(d))
}

pub fn leading_principal_minors(m: &Matrix) -> Vec<Scalar> {
    (1..=m.rows())
        .map(|k| {
            Matrix::from_fn(k, k, |i, j| m[(i, j)].clone()).det().expect("square block")
        })
        .collect()
}

/// First `k` coordinates, in canonical vertex order, of the kernel vector δ
/// of the Cartan operator acting on all column vectors, normalized to minimal
/// positive integers.
///
/// The kernel equations are solved by forward recurrence from the boundary
/// rows of each family:
/// * A+∞: row 0 gives δ_1 = 2δ_0 and the interior rows give
///   δ_{i+1} = 2δ_i − δ_{i−1}, so δ = (1,2,3,…);
/// * A∞: every row is interior, δ affine in i; positivity on all of ℤ forces
///   the constant solution δ = (…,1,1,1,…);
/// * D∞: rows 0 and 1 give δ_2 = 2δ_0 = 2δ_1, row 2 then gives δ_3 = 2δ_0 and
///   the spine recurrence stays constant: δ = (1,1,2,2,2,…).
///
/// Explicit finite quivers have positive definite form, hence trivial kernel;
/// the request is rejected there.
pub fn delta_prefix(q: &Quiver, k: usize) -> Result<Vec<i64>> {
    if k == 0 {
        return Ok(vec![]);
    }
    match q.family() {
        Family::APlusInf => {
            let mut d = Vec::with_capacity(k);
            for i in 0..k {
                match i {
                    0 => d.push(1i64),
                    1 => d.push(2),
                    _ => d.push(2 * d[i - 1] - d[i - 2]),
                }
            }
            Ok(d)
        }
        Family::AInf => Ok(vec![1; k]),
        Family::DInf => {
            let mut d = Vec::with_capacity(k);
            for i in 0..k {
                match i {
                    0 | 1 => d.push(1i64),
                    2 => d.push(2 * d[0]),
                    3 => d.push(2 * d[2] - d[0] - d[1]),
                    _ => d.push(2 * d[i - 1] - d[i - 2]),
                }
            }
            Ok(d)
        }
        Family::Explicit(_) => Err(Error::DeltaUndefined),
    }
}
