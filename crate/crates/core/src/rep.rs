//! Rank-1 representations: explicit matrix data for the double quiver with an
//! exact checker for the deformed preprojective relations.
//!
//! A representation stores a dimension per support vertex and a matrix per
//! double-quiver arrow with both endpoints in the support; arrows touching a
//! vertex outside the support act by zero and are not stored. The defining
//! relation at a support vertex i is
//!
//!   Σ_{h(a)=i} M_a M_{a*} − Σ_{t(a)=i} M_{a*} M_a = λ_i · Id
//!
//! with a running over the base-quiver arrows. All checks are exact.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quiver::{DimVec, DoubleArrow, Quiver, Vertex};
use crate::weight::Weight;

/// Where a relation failed.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ViolationSite {
    /// Preprojective relation at a vertex (rank 1).
    Vertex { vertex: Vertex },
    /// Wreath relation (I) at a component and slot.
    MomentMap { tuple: Vec<Vertex>, slot: usize },
    /// Wreath relation (II) for a pair of slots and a pair of arrows.
    Commutator { tuple: Vec<Vertex>, slot_l: usize, slot_m: usize, a: String, b: String },
    /// σ a_l σ⁻¹ = a_{σ(l)} failed for an adjacent transposition.
    Equivariance { tuple: Vec<Vertex>, transposition: usize, slot: usize, arrow: String },
}

/// One failed identity together with the nonzero residual matrix that
/// witnesses it.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub site: ViolationSite,
    pub residual: Matrix,
}

/// Outcome of a relation check: passes iff the violation list is empty.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn record(&mut self, site: ViolationSite, residual: Matrix) {
        if !residual.is_zero() {
            self.violations.push(Violation { site, residual });
        }
    }
}

/// A finite-dimensional representation of the double quiver.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rep {
    dims: BTreeMap<Vertex, usize>,
    mats: BTreeMap<DoubleArrow, Matrix>,
}

impl Rep {
    /// The zero representation.
    pub fn zero() -> Self {
        Rep { dims: BTreeMap::new(), mats: BTreeMap::new() }
    }

    /// Builds a representation after validating shapes: the matrix for an
    /// arrow must be dims[head] × dims[tail], and both endpoints must carry
    /// positive dimension. Zero dimensions are dropped from the support.
    pub fn new(
        dims: impl IntoIterator<Item = (Vertex, usize)>,
        mats: impl IntoIterator<Item = (DoubleArrow, Matrix)>,
    ) -> Result<Self> {
        let dims: BTreeMap<Vertex, usize> =
            dims.into_iter().filter(|&(_, d)| d > 0).collect();
        let mut stored = BTreeMap::new();
        for (arrow, m) in mats {
            let rows = dims.get(&arrow.head()).copied().unwrap_or(0);
            let cols = dims.get(&arrow.tail()).copied().unwrap_or(0);
            if (m.rows(), m.cols()) != (rows, cols) {
                return Err(Error::ShapeMismatch(format!(
                    "arrow {} wants {}x{}, got {}x{}",
                    arrow.name(),
                    rows,
                    cols,
                    m.rows(),
                    m.cols()
                )));
            }
            if !m.is_zero() {
                stored.insert(arrow, m);
            }
        }
        Ok(Rep { dims, mats: stored })
    }

    pub fn dim(&self, v: Vertex) -> usize {
        self.dims.get(&v).copied().unwrap_or(0)
    }

    pub fn support(&self) -> Vec<Vertex> {
        self.dims.keys().copied().collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn dim_vec(&self) -> DimVec {
        DimVec::from_entries(self.dims.iter().map(|(&v, &d)| (v, d as i64)))
    }

    pub fn dims(&self) -> &BTreeMap<Vertex, usize> {
        &self.dims
    }

    pub fn matrices(&self) -> &BTreeMap<DoubleArrow, Matrix> {
        &self.mats
    }

    /// Matrix of a double arrow, implicit zeros included.
    pub fn matrix(&self, arrow: DoubleArrow) -> Matrix {
        self.mats.get(&arrow).cloned().unwrap_or_else(|| {
            Matrix::zeros(self.dim(arrow.head()), self.dim(arrow.tail()))
        })
    }

    /// Direct sum, used to assemble non-simple test representations.
    pub fn direct_sum(&self, other: &Rep) -> Rep {
        let mut dims = self.dims.clone();
        for (&v, &d) in &other.dims {
            *dims.entry(v).or_insert(0) += d;
        }
        let verts: Vec<Vertex> = dims.keys().copied().collect();
        let mut mats = BTreeMap::new();
        let arrows: std::collections::BTreeSet<DoubleArrow> =
            self.mats.keys().chain(other.mats.keys()).copied().collect();
        for arrow in arrows {
            let rows = dims[&arrow.head()];
            let cols = dims[&arrow.tail()];
            let a = self.matrix(arrow);
            let b = other.matrix(arrow);
            let mut m = Matrix::zeros(rows, cols);
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    m[(i, j)] = a[(i, j)].clone();
                }
            }
            let (ro, co) = (self.dim(arrow.head()), self.dim(arrow.tail()));
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    m[(ro + i, co + j)] = b[(i, j)].clone();
                }
            }
            mats.insert(arrow, m);
        }
        let _ = verts;
        Rep { dims, mats }
    }
}

/// Checks the deformed preprojective relations of `rep` against the weight.
pub fn check_rank1(q: &Quiver, rep: &Rep, lambda: &Weight) -> CheckReport {
    let mut report = CheckReport::default();
    for &v in rep.dims.keys() {
        let d = rep.dim(v);
        let mut acc = Matrix::zeros(d, d);
        for a in q.arrows_in(v) {
            // a·a*: apply a* first, then a.
            let m_star = rep.matrix(DoubleArrow::star(a));
            let m = rep.matrix(DoubleArrow::plain(a));
            acc = &acc + &(&m * &m_star);
        }
        for a in q.arrows_out(v) {
            let m = rep.matrix(DoubleArrow::plain(a));
            let m_star = rep.matrix(DoubleArrow::star(a));
            acc = &acc - &(&m_star * &m);
        }
        let expected = Matrix::scalar(d, &lambda.at(v));
        report.record(ViolationSite::Vertex { vertex: v }, &acc - &expected);
    }
    report
}

// JSON form: {"dims": {"0": 1, ...}, "arrows": {"a_0_1": [[...]], ...}}.
#[derive(Serialize, Deserialize)]
struct RepJson {
    dims: BTreeMap<Vertex, usize>,
    #[serde(default)]
    arrows: BTreeMap<String, Matrix>,
}

impl Serialize for Rep {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let json = RepJson {
            dims: self.dims.clone(),
            arrows: self.mats.iter().map(|(a, m)| (a.name(), m.clone())).collect(),
        };
        json.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rep {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = RepJson::deserialize(deserializer)?;
        let mut mats = Vec::new();
        for (name, m) in json.arrows {
            let arrow = DoubleArrow::parse_name(&name).map_err(D::Error::custom)?;
            mats.push((arrow, m));
        }
        Rep::new(json.dims, mats).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Arrow;
    use crate::scalar::Scalar;

    fn scalar_matrix(v: i64) -> Matrix {
        Matrix::from_rows(vec![vec![Scalar::from_int(v)]]).unwrap()
    }

    #[test]
    fn zero_rep_passes_any_weight() {
        let q = Quiver::a_plus_inf();
        let rep = Rep::zero();
        assert!(check_rank1(&q, &rep, &Weight::explicit_ints(&[3, -1])).pass());
        assert!(check_rank1(&q, &rep, &Weight::zero()).pass());
    }

    #[test]
    fn a2_simple_passes_and_fails() {
        let q = Quiver::a_plus_inf();
        let a = Arrow::new(0, 1);
        let rep = Rep::new(
            [(0, 1), (1, 1)],
            [
                (DoubleArrow::plain(a), scalar_matrix(1)),
                (DoubleArrow::star(a), scalar_matrix(1)),
            ],
        )
        .unwrap();
        // λ = (−1, 1): −a*a = −1 at vertex 0, aa* = 1 at vertex 1.
        assert!(check_rank1(&q, &rep, &Weight::explicit_ints(&[-1, 1])).pass());
        // λ = 0 fails at both vertices.
        let report = check_rank1(&q, &rep, &Weight::zero());
        assert!(!report.pass());
        assert_eq!(report.violations.len(), 2);
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let a = Arrow::new(0, 1);
        let err = Rep::new(
            [(0, 1), (1, 2)],
            [(DoubleArrow::plain(a), scalar_matrix(1))],
        );
        assert!(matches!(err, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn direct_sum_adds_dims_and_blocks() {
        let q = Quiver::a_plus_inf();
        let a = Arrow::new(0, 1);
        let rep = Rep::new(
            [(0, 1), (1, 1)],
            [
                (DoubleArrow::plain(a), scalar_matrix(1)),
                (DoubleArrow::star(a), scalar_matrix(2)),
            ],
        )
        .unwrap();
        let sum = rep.direct_sum(&rep);
        assert_eq!(sum.dim(0), 2);
        assert_eq!(sum.total_dim(), 4);
        let lam = Weight::explicit_ints(&[-2, 2]);
        assert!(check_rank1(&q, &rep, &lam).pass());
        assert!(check_rank1(&q, &sum, &lam).pass());
    }

    #[test]
    fn json_roundtrip() {
        let a = Arrow::new(0, 1);
        let rep = Rep::new(
            [(0, 1), (1, 1)],
            [
                (DoubleArrow::plain(a), scalar_matrix(1)),
                (DoubleArrow::star(a), scalar_matrix(-3)),
            ],
        )
        .unwrap();
        let text = serde_json::to_string(&rep).unwrap();
        let back: Rep = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rep);
        assert!(text.contains("\"astar_0_1\""));
    }
}
