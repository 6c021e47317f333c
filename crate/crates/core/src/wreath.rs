//! Rank-n (wreath) representations and their exact relation checker.
//!
//! A wreath representation of rank n stores
//! * a finite set of component tuples ī ∈ I^n with component dimensions,
//! * per slot l and double arrow a with tail ī_l, a matrix a_l|_ī from V_ī to
//!   V_{a_l(ī)},
//! * per adjacent transposition (k,k+1), a matrix σ_k|_ī from V_ī to
//!   V_{σ_k(ī)}; general permutations act through adjacent words.
//!
//! The defining relations checked by [`check_wreath`] are the slotwise
//! deformed preprojective relation coupled to the transposition sum
//! (relation I), the cross-slot commutator relation (II), and the
//! equivariance σ a_l σ⁻¹ = a_{σ(l)} tying the two actions together. For
//! n = 1 everything reduces to the rank-1 checker.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quiver::{DoubleArrow, Quiver, Vertex};
use crate::rep::{CheckReport, Rep, ViolationSite};
use crate::scalar::Scalar;
use crate::weight::Weight;
use crate::young::{Perm, SymmetricGroupIrrep, YoungDiagram};

/// A component index ī ∈ I^n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tuple(pub Vec<Vertex>);

impl Tuple {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, l: usize) -> Vertex {
        self.0[l]
    }

    /// The tuple a_l(ī): slot l moved to the head of the arrow.
    pub fn move_slot(&self, l: usize, to: Vertex) -> Tuple {
        let mut v = self.0.clone();
        v[l] = to;
        Tuple(v)
    }

    pub fn swap(&self, a: usize, b: usize) -> Tuple {
        let mut v = self.0.clone();
        v.swap(a, b);
        Tuple(v)
    }

    pub fn permuted(&self, p: &Perm) -> Tuple {
        Tuple(p.permute(&self.0))
    }
}

impl std::fmt::Debug for Tuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Rank-n representation data. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WreathRep {
    n: usize,
    dims: BTreeMap<Tuple, usize>,
    arrows: BTreeMap<(usize, DoubleArrow, Tuple), Matrix>,
    sigma: BTreeMap<(usize, Tuple), Matrix>,
}

impl WreathRep {
    /// Validates and builds. Structural requirements: consistent tuple
    /// lengths, matching shapes, σ defined on every component with the
    /// symmetric-group relations holding exactly, and the component family
    /// closed under the σ indexing.
    pub fn new(
        n: usize,
        dims: impl IntoIterator<Item = (Tuple, usize)>,
        arrows: impl IntoIterator<Item = ((usize, DoubleArrow, Tuple), Matrix)>,
        sigma: impl IntoIterator<Item = ((usize, Tuple), Matrix)>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModule("rank must be at least 1".into()));
        }
        let dims: BTreeMap<Tuple, usize> =
            dims.into_iter().filter(|&(_, d)| d > 0).collect();
        let mut rep = WreathRep { n, dims, arrows: BTreeMap::new(), sigma: BTreeMap::new() };
        for ((l, a, t), m) in arrows {
            rep.insert_arrow(l, a, t, m)?;
        }
        for ((k, t), m) in sigma {
            rep.insert_sigma(k, t, m)?;
        }
        rep.validate()?;
        Ok(rep)
    }

    fn insert_arrow(&mut self, l: usize, a: DoubleArrow, t: Tuple, m: Matrix) -> Result<()> {
        if t.len() != self.n || l >= self.n {
            return Err(Error::InvalidModule(format!("bad arrow key ({l}, {}, {t:?})", a.name())));
        }
        if t.get(l) != a.tail() {
            return Err(Error::InvalidModule(format!(
                "arrow {} at slot {l} does not start at tuple entry {}",
                a.name(),
                t.get(l)
            )));
        }
        let target = t.move_slot(l, a.head());
        let (rows, cols) = (self.dim(&target), self.dim(&t));
        if (m.rows(), m.cols()) != (rows, cols) {
            return Err(Error::ShapeMismatch(format!(
                "arrow {} at {t:?} slot {l}: want {rows}x{cols}, got {}x{}",
                a.name(),
                m.rows(),
                m.cols()
            )));
        }
        if !m.is_zero() {
            self.arrows.insert((l, a, t), m);
        }
        Ok(())
    }

    fn insert_sigma(&mut self, k: usize, t: Tuple, m: Matrix) -> Result<()> {
        if t.len() != self.n || k + 1 >= self.n {
            return Err(Error::InvalidModule(format!("bad sigma key ({k}, {t:?})")));
        }
        let target = t.swap(k, k + 1);
        let (rows, cols) = (self.dim(&target), self.dim(&t));
        if (m.rows(), m.cols()) != (rows, cols) {
            return Err(Error::ShapeMismatch(format!(
                "sigma_{k} at {t:?}: want {rows}x{cols}, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        self.sigma.insert((k, t), m);
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        for (t, &d) in &self.dims {
            if t.len() != self.n {
                return Err(Error::InvalidModule(format!("tuple {t:?} has wrong length")));
            }
            for k in 0..self.n.saturating_sub(1) {
                let target = t.swap(k, k + 1);
                if self.dim(&target) != d {
                    return Err(Error::InvalidModule(format!(
                        "components not permuted compatibly: {t:?} vs {target:?}"
                    )));
                }
                let m = self
                    .sigma
                    .get(&(k, t.clone()))
                    .ok_or_else(|| Error::InvalidModule(format!("missing sigma_{k} at {t:?}")))?;
                let back = self
                    .sigma
                    .get(&(k, target.clone()))
                    .ok_or_else(|| Error::InvalidModule(format!("missing sigma_{k} at {target:?}")))?;
                if back * m != Matrix::identity(d) {
                    return Err(Error::InvalidModule(format!(
                        "sigma_{k} is not an involution at {t:?}"
                    )));
                }
            }
            // Braid and commuting relations across tuple paths.
            for k in 0..self.n.saturating_sub(1) {
                for j in 0..k {
                    let lhs = self.perm_matrix(
                        &Perm::adjacent(self.n, k).compose(&Perm::adjacent(self.n, j)),
                        t,
                    );
                    let rhs = self.perm_matrix(
                        &Perm::adjacent(self.n, j).compose(&Perm::adjacent(self.n, k)),
                        t,
                    );
                    let ok = if j + 2 <= k {
                        lhs == rhs
                    } else {
                        // adjacent: braid s_j s_{j+1} s_j = s_{j+1} s_j s_{j+1}
                        let sj = Perm::adjacent(self.n, j);
                        let sk = Perm::adjacent(self.n, k);
                        let l3 = self.perm_matrix(&sj.compose(&sk).compose(&sj), t);
                        let r3 = self.perm_matrix(&sk.compose(&sj).compose(&sk), t);
                        l3 == r3
                    };
                    if !ok {
                        return Err(Error::InvalidModule(format!(
                            "symmetric-group relations fail at {t:?} (generators {j},{k})"
                        )));
                    }
                }
            }
        }
        for (l, a, t) in self.arrows.keys() {
            if self.dim(t) == 0 {
                return Err(Error::InvalidModule(format!(
                    "arrow {} leaves a zero component {t:?}",
                    a.name()
                )));
            }
            let _ = l;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self, t: &Tuple) -> usize {
        self.dims.get(t).copied().unwrap_or(0)
    }

    pub fn components(&self) -> &BTreeMap<Tuple, usize> {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero_module(&self) -> bool {
        self.dims.is_empty()
    }

    /// Vertices occurring in any nonzero component.
    pub fn vertex_support(&self) -> BTreeSet<Vertex> {
        self.dims.keys().flat_map(|t| t.0.iter().copied()).collect()
    }

    /// Componentwise dimension equality with another module.
    pub fn same_dimension_data(&self, other: &WreathRep) -> bool {
        self.n == other.n && self.dims == other.dims
    }

    pub fn arrow_entries(&self) -> impl Iterator<Item = (&(usize, DoubleArrow, Tuple), &Matrix)> {
        self.arrows.iter()
    }

    /// Matrix of a_l at a component, implicit zeros included.
    pub fn arrow_matrix(&self, l: usize, a: DoubleArrow, t: &Tuple) -> Matrix {
        debug_assert_eq!(t.get(l), a.tail());
        self.arrows.get(&(l, a, t.clone())).cloned().unwrap_or_else(|| {
            Matrix::zeros(self.dim(&t.move_slot(l, a.head())), self.dim(t))
        })
    }

    /// Matrix of the adjacent transposition (k,k+1) at a component.
    pub fn sigma_matrix(&self, k: usize, t: &Tuple) -> Matrix {
        self.sigma.get(&(k, t.clone())).cloned().unwrap_or_else(|| {
            Matrix::zeros(self.dim(&t.swap(k, k + 1)), self.dim(t))
        })
    }

    /// Matrix of an arbitrary permutation V_ī → V_{p(ī)}, composed along the
    /// tuple path of an adjacent word for p.
    pub fn perm_matrix(&self, p: &Perm, t: &Tuple) -> Matrix {
        let word = p.adjacent_word();
        let mut cur_tuple = t.clone();
        let mut m = Matrix::identity(self.dim(t));
        for k in word.into_iter().rev() {
            m = &self.sigma_matrix(k, &cur_tuple) * &m;
            cur_tuple = cur_tuple.swap(k, k + 1);
        }
        m
    }

    /// Wraps a rank-1 representation as a rank-1 wreath module.
    pub fn from_rank1(rep: &Rep) -> WreathRep {
        let dims = rep
            .dims()
            .iter()
            .map(|(&v, &d)| (Tuple(vec![v]), d))
            .collect();
        let arrows = rep
            .matrices()
            .iter()
            .map(|(&a, m)| ((0usize, a, Tuple(vec![a.tail()])), m.clone()))
            .collect();
        WreathRep { n: 1, dims, arrows, sigma: BTreeMap::new() }
    }

    /// Inverse of [`WreathRep::from_rank1`]; fails for n > 1.
    pub fn to_rank1(&self) -> Result<Rep> {
        if self.n != 1 {
            return Err(Error::InvalidModule("not a rank-1 module".into()));
        }
        Rep::new(
            self.dims.iter().map(|(t, &d)| (t.get(0), d)),
            self.arrows.iter().map(|((_, a, _), m)| (*a, m.clone())),
        )
    }

    #[cfg(test)]
    pub(crate) fn from_parts_unchecked(
        n: usize,
        dims: BTreeMap<Tuple, usize>,
        arrows: BTreeMap<(usize, DoubleArrow, Tuple), Matrix>,
        sigma: BTreeMap<(usize, Tuple), Matrix>,
    ) -> WreathRep {
        WreathRep { n, dims, arrows, sigma }
    }
}

// JSON form:
// {"n": 2,
//  "components": [{"tuple": [0,1], "dim": 2}, …],
//  "arrows": [{"slot": 0, "arrow": "a_0_1", "tuple": [0,1], "matrix": [[…]]}, …],
//  "sigma": [{"k": 0, "tuple": [0,1], "matrix": [[…]]}, …]}
#[derive(Serialize, Deserialize)]
struct ComponentJson {
    tuple: Vec<Vertex>,
    dim: usize,
}

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    slot: usize,
    arrow: String,
    tuple: Vec<Vertex>,
    matrix: Matrix,
}

#[derive(Serialize, Deserialize)]
struct SigmaJson {
    k: usize,
    tuple: Vec<Vertex>,
    matrix: Matrix,
}

#[derive(Serialize, Deserialize)]
struct WreathJson {
    n: usize,
    components: Vec<ComponentJson>,
    #[serde(default)]
    arrows: Vec<ArrowJson>,
    #[serde(default)]
    sigma: Vec<SigmaJson>,
}

impl Serialize for WreathRep {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let json = WreathJson {
            n: self.n,
            components: self
                .dims
                .iter()
                .map(|(t, &d)| ComponentJson { tuple: t.0.clone(), dim: d })
                .collect(),
            arrows: self
                .arrows
                .iter()
                .map(|((l, a, t), m)| ArrowJson {
                    slot: *l,
                    arrow: a.name(),
                    tuple: t.0.clone(),
                    matrix: m.clone(),
                })
                .collect(),
            sigma: self
                .sigma
                .iter()
                .map(|((k, t), m)| SigmaJson { k: *k, tuple: t.0.clone(), matrix: m.clone() })
                .collect(),
        };
        json.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WreathRep {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = WreathJson::deserialize(deserializer)?;
        let dims = json.components.into_iter().map(|c| (Tuple(c.tuple), c.dim));
        let arrows = json
            .arrows
            .into_iter()
            .map(|a| {
                let arrow = DoubleArrow::parse_name(&a.arrow).map_err(D::Error::custom)?;
                Ok(((a.slot, arrow, Tuple(a.tuple)), a.matrix))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        let sigma = json.sigma.into_iter().map(|s| ((s.k, Tuple(s.tuple)), s.matrix));
        WreathRep::new(json.n, dims, arrows, sigma).map_err(D::Error::custom)
    }
}

/// Double arrows with the given tail vertex.
pub(crate) fn doubles_from(q: &Quiver, v: Vertex) -> Vec<DoubleArrow> {
    let mut out: Vec<DoubleArrow> =
        q.arrows_out(v).into_iter().map(DoubleArrow::plain).collect();
    out.extend(q.arrows_in(v).into_iter().map(DoubleArrow::star));
    out.sort();
    out.dedup();
    out
}

pub(crate) fn relation_i_violations(
    q: &Quiver,
    v: &WreathRep,
    lambda: &Weight,
    nu: &Scalar,
    report: &mut CheckReport,
) {
    for (t, &d) in v.components() {
        for l in 0..v.n() {
            let vertex = t.get(l);
            let mut lhs = Matrix::zeros(d, d);
            for a in q.arrows_in(vertex) {
                // a·a* at slot l: a* first, then a.
                let star = DoubleArrow::star(a);
                let mid = t.move_slot(l, star.head());
                let first = v.arrow_matrix(l, star, t);
                let second = v.arrow_matrix(l, DoubleArrow::plain(a), &mid);
                lhs = &lhs + &(&second * &first);
            }
            for a in q.arrows_out(vertex) {
                let plain = DoubleArrow::plain(a);
                let mid = t.move_slot(l, plain.head());
                let first = v.arrow_matrix(l, plain, t);
                let second = v.arrow_matrix(l, DoubleArrow::star(a), &mid);
                lhs = &lhs - &(&second * &first);
            }
            lhs = &lhs - &Matrix::scalar(d, &lambda.at(vertex));
            let mut rhs = Matrix::zeros(d, d);
            for m in 0..v.n() {
                if m != l && t.get(m) == vertex {
                    let p = Perm::transposition(v.n(), m, l);
                    rhs = &rhs + &v.perm_matrix(&p, t);
                }
            }
            rhs = rhs.scale(nu);
            report.record(
                ViolationSite::MomentMap { tuple: t.0.clone(), slot: l },
                &lhs - &rhs,
            );
        }
    }
}

pub(crate) fn relation_ii_violations(
    q: &Quiver,
    v: &WreathRep,
    nu: &Scalar,
    report: &mut CheckReport,
) {
    for t in v.components().keys() {
        for l in 0..v.n() {
            for m in l + 1..v.n() {
                for a in doubles_from(q, t.get(l)) {
                    for b in doubles_from(q, t.get(m)) {
                        let via_b = t.move_slot(m, b.head());
                        let via_a = t.move_slot(l, a.head());
                        let lhs_one = &v.arrow_matrix(l, a, &via_b) * &v.arrow_matrix(m, b, t);
                        let lhs_two = &v.arrow_matrix(m, b, &via_a) * &v.arrow_matrix(l, a, t);
                        let lhs = &lhs_one - &lhs_two;
                        let rhs = if !b.starred && a == b.dual() {
                            v.perm_matrix(&Perm::transposition(v.n(), l, m), t).scale(nu)
                        } else if !a.starred && b == a.dual() {
                            v.perm_matrix(&Perm::transposition(v.n(), l, m), t)
                                .scale(nu)
                                .neg()
                        } else {
                            Matrix::zeros(lhs.rows(), lhs.cols())
                        };
                        report.record(
                            ViolationSite::Commutator {
                                tuple: t.0.clone(),
                                slot_l: l,
                                slot_m: m,
                                a: a.name(),
                                b: b.name(),
                            },
                            &lhs - &rhs,
                        );
                    }
                }
            }
        }
    }
}

pub(crate) fn equivariance_violations(q: &Quiver, v: &WreathRep, report: &mut CheckReport) {
    for t in v.components().keys() {
        for k in 0..v.n().saturating_sub(1) {
            let tk = Perm::adjacent(v.n(), k);
            let t_swapped = t.swap(k, k + 1);
            for l in 0..v.n() {
                for a in doubles_from(q, t.get(l)) {
                    // σ_k ∘ a_l = a_{σ_k(l)} ∘ σ_k on V_ī.
                    let lhs = &v.sigma_matrix(k, &t.move_slot(l, a.head()))
                        * &v.arrow_matrix(l, a, t);
                    let rhs = &v.arrow_matrix(tk.apply(l), a, &t_swapped)
                        * &v.sigma_matrix(k, t);
                    report.record(
                        ViolationSite::Equivariance {
                            tuple: t.0.clone(),
                            transposition: k,
                            slot: l,
                            arrow: a.name(),
                        },
                        &lhs - &rhs,
                    );
                }
            }
        }
    }
}

/// Full defining-relation check for the rank-n algebra at parameters (λ, ν):
/// relation (I), relation (II) and the equivariance of the arrow action. For
/// n = 1 this coincides with the rank-1 checker.
pub fn check_wreath(q: &Quiver, v: &WreathRep, lambda: &Weight, nu: &Scalar) -> CheckReport {
    let mut report = CheckReport::default();
    relation_i_violations(q, v, lambda, nu, &mut report);
    relation_ii_violations(q, v, nu, &mut report);
    equivariance_violations(q, v, &mut report);
    report
}

/// Relation (I) alone. On zero-arrow modules this is the pure
/// symmetric-group identity −λ_{i_l} = ν Σ σ_{ml}; it is blind to relation
/// (II), which is where adjacency failures surface.
pub fn check_wreath_relation_i(
    q: &Quiver,
    v: &WreathRep,
    lambda: &Weight,
    nu: &Scalar,
) -> CheckReport {
    let mut report = CheckReport::default();
    relation_i_violations(q, v, lambda, nu, &mut report);
    report
}

/// A morphism of wreath modules: one matrix per shared component.
pub type Hom = BTreeMap<Tuple, Matrix>;

/// Exact basis of the space of module homomorphisms V → W: all componentwise
/// maps commuting with every arrow operator and every transposition, computed
/// as the null space of the full constraint system. Both modules must pass
/// the relation check at the same parameters.
pub fn intertwiner_space(
    q: &Quiver,
    v: &WreathRep,
    w: &WreathRep,
    lambda: &Weight,
    nu: &Scalar,
) -> Result<Vec<Hom>> {
    if v.n() != w.n() {
        return Err(Error::ParameterMismatch("modules of different rank".into()));
    }
    if !check_wreath(q, v, lambda, nu).pass() || !check_wreath(q, w, lambda, nu).pass() {
        return Err(Error::RelationCheckFailed(
            "intertwiner_space needs both modules to satisfy the relations".into(),
        ));
    }
    let n = v.n();
    // Unknown blocks: φ_ī of shape dimW(ī) × dimV(ī) on tuples where both
    // modules live.
    let mut offsets: BTreeMap<Tuple, usize> = BTreeMap::new();
    let mut total = 0usize;
    for (t, &dv) in v.components() {
        let dw = w.dim(t);
        if dw > 0 {
            offsets.insert(t.clone(), total);
            total += dv * dw;
        }
    }
    let block_var = |offsets: &BTreeMap<Tuple, usize>, t: &Tuple, row: usize, col: usize, w_rows: usize| -> Option<usize> {
        let _ = w_rows;
        offsets.get(t).map(|&off| off + row * v.dim(t) + col)
    };
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut push_constraints = |src: &Tuple, dst: &Tuple, mv: &Matrix, mw: &Matrix| {
        // Equation: φ_dst ∘ mv = mw ∘ φ_src, entrywise over (r, c) with
        // r < dimW(dst), c < dimV(src).
        let (dv_src, dw_src) = (v.dim(src), w.dim(src));
        let (dv_dst, dw_dst) = (v.dim(dst), w.dim(dst));
        if dv_src == 0 || dw_dst == 0 {
            return;
        }
        for r in 0..dw_dst {
            for c in 0..dv_src {
                let mut row = vec![Scalar::zero(); total];
                // Σ_k φ_dst[r,k] mv[k,c]
                for k in 0..dv_dst {
                    if let Some(var) = block_var(&offsets, dst, r, k, dw_dst) {
                        row[var] = &row[var] + &mv[(k, c)];
                    }
                }
                // − Σ_k mw[r,k] φ_src[k,c]
                for k in 0..dw_src {
                    if let Some(var) = block_var(&offsets, src, k, c, dw_src) {
                        row[var] = &row[var] - &mw[(r, k)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    };
    let mut all_tuples: BTreeSet<Tuple> = v.components().keys().cloned().collect();
    all_tuples.extend(w.components().keys().cloned());
    for t in &all_tuples {
        for l in 0..n {
            for a in doubles_from(q, t.get(l)) {
                let dst = t.move_slot(l, a.head());
                push_constraints(t, &dst, &v.arrow_matrix(l, a, t), &w.arrow_matrix(l, a, t));
            }
        }
        for k in 0..n.saturating_sub(1) {
            let dst = t.swap(k, k + 1);
            push_constraints(t, &dst, &v.sigma_matrix(k, t), &w.sigma_matrix(k, t));
        }
    }
    let system = if rows.is_empty() {
        Matrix::zeros(0, total)
    } else {
        Matrix::from_rows(rows)?
    };
    let kernel = system.nullspace();
    let mut basis = Vec::with_capacity(kernel.cols());
    for col in 0..kernel.cols() {
        let mut hom: Hom = BTreeMap::new();
        for (t, &off) in &offsets {
            let (dv, dw) = (v.dim(t), w.dim(t));
            let block = Matrix::from_fn(dw, dv, |r, c| kernel[(off + r * dv + c, col)].clone());
            if !block.is_zero() {
                hom.insert(t.clone(), block);
            }
        }
        basis.push(hom);
    }
    Ok(basis)
}

/// An isomorphism witness: the map, blockwise, and its exact inverse.
#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub map: Hom,
    pub inverse: Hom,
}

/// Decides isomorphism of two relation-passing modules. Strategy: dimension
/// data must match; then a random exact-coefficient combination of the
/// intertwiner basis is tested for blockwise invertibility and certified by
/// an explicit inverse. The RNG is seeded for reproducibility.
pub fn is_isomorphic(
    q: &Quiver,
    v: &WreathRep,
    w: &WreathRep,
    lambda: &Weight,
    nu: &Scalar,
    seed: u64,
) -> Result<Option<IsoWitness>> {
    if v.n() != w.n() || !v.same_dimension_data(w) {
        return Ok(None);
    }
    if v.is_zero_module() {
        return Ok(Some(IsoWitness { map: BTreeMap::new(), inverse: BTreeMap::new() }));
    }
    let basis = intertwiner_space(q, v, w, lambda, nu)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let tuples: Vec<Tuple> = v.components().keys().cloned().collect();
    let try_combo = |coeffs: &[i64]| -> Option<IsoWitness> {
        let mut map: Hom = BTreeMap::new();
        for t in &tuples {
            let d = v.dim(t);
            let mut block = Matrix::zeros(w.dim(t), d);
            for (b, &c) in basis.iter().zip(coeffs) {
                if c == 0 {
                    continue;
                }
                if let Some(part) = b.get(t) {
                    block = &block + &part.scale(&Scalar::from_int(c));
                }
            }
            map.insert(t.clone(), block);
        }
        let mut inverse: Hom = BTreeMap::new();
        for t in &tuples {
            inverse.insert(t.clone(), map[t].inverse()?);
        }
        Some(IsoWitness { map, inverse })
    };
    // Single basis elements first, deterministically.
    for idx in 0..basis.len() {
        let mut coeffs = vec![0i64; basis.len()];
        coeffs[idx] = 1;
        if let Some(wit) = try_combo(&coeffs) {
            return Ok(Some(wit));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..24 {
        let coeffs: Vec<i64> = (0..basis.len()).map(|_| rng.gen_range(-9..=9)).collect();
        if let Some(wit) = try_combo(&coeffs) {
            return Ok(Some(wit));
        }
    }
    Ok(None)
}

/// Builds the induced module X ⊗ Y↑ over (λ0, ν = 0).
///
/// Inputs: a composition n⃗ = (n_1,…,n_r) of n, one Young diagram of size n_l
/// per part (the irreducible X_l of S_{n_l}), and one rank-1 representation
/// Y_l per part, each passing the rank-1 relation check at λ0. The result is
/// the induction of X ⊗ Y_1^{⊗n_1} ⊗ … ⊗ Y_r^{⊗n_r} from S_{n_1}×…×S_{n_r}
/// to S_n: components are indexed by coset representatives (ordered set
/// partitions of the n slots), arrows act slotwise through the Y_l matrices,
/// and transpositions act by coset shuffling combined with the seminormal
/// X_l matrices and slot permutation inside blocks.
pub fn outer_tensor_induce(
    q: &Quiver,
    partition: &[usize],
    diagrams: &[YoungDiagram],
    reps: &[Rep],
    lambda0: &Weight,
) -> Result<WreathRep> {
    if partition.is_empty() || partition.contains(&0) {
        return Err(Error::PartitionMismatch("parts must be positive".into()));
    }
    if diagrams.len() != partition.len() || reps.len() != partition.len() {
        return Err(Error::PartitionMismatch(format!(
            "{} parts, {} diagrams, {} representations",
            partition.len(),
            diagrams.len(),
            reps.len()
        )));
    }
    for (l, d) in diagrams.iter().enumerate() {
        if d.size() != partition[l] {
            return Err(Error::PartitionMismatch(format!(
                "diagram {l} has size {} but the part is {}",
                d.size(),
                partition[l]
            )));
        }
    }
    for (l, y) in reps.iter().enumerate() {
        let report = crate::rep::check_rank1(q, y, lambda0);
        if !report.pass() {
            return Err(Error::RelationCheckFailed(format!(
                "factor Y_{l} fails the rank-1 relations at the base weight"
            )));
        }
    }
    let n: usize = partition.iter().sum();
    let r = partition.len();
    let irreps: Vec<SymmetricGroupIrrep> = diagrams
        .iter()
        .map(SymmetricGroupIrrep::seminormal)
        .collect::<Result<_>>()?;

    // Block layout: slots offsets[l]..offsets[l]+n_l belong to part l.
    let mut offsets = vec![0usize; r];
    for l in 1..r {
        offsets[l] = offsets[l - 1] + partition[l - 1];
    }
    let block_of_slot: Vec<usize> = (0..r)
        .flat_map(|l| std::iter::repeat_n(l, partition[l]))
        .collect();

    // Per-part bases of Y_l: flattened (vertex, index) pairs.
    let y_basis: Vec<Vec<(Vertex, usize)>> = reps
        .iter()
        .map(|y| {
            y.dims()
                .iter()
                .flat_map(|(&v, &d)| (0..d).map(move |i| (v, i)))
                .collect()
        })
        .collect();

    // Coset representatives: assignments of disjoint position sets to parts.
    fn position_sets(n: usize, parts: &[usize]) -> Vec<Vec<Vec<usize>>> {
        fn go(
            free: &[usize],
            parts: &[usize],
            acc: &mut Vec<Vec<usize>>,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if parts.is_empty() {
                out.push(acc.clone());
                return;
            }
            let k = parts[0];
            let idxs: Vec<usize> = free.to_vec();
            // choose k elements of `idxs` in increasing order
            fn choose(
                idxs: &[usize],
                k: usize,
                start: usize,
                cur: &mut Vec<usize>,
                cb: &mut dyn FnMut(&[usize]),
            ) {
                if cur.len() == k {
                    cb(cur);
                    return;
                }
                for p in start..idxs.len() {
                    cur.push(idxs[p]);
                    choose(idxs, k, p + 1, cur, cb);
                    cur.pop();
                }
            }
            let mut picks: Vec<Vec<usize>> = Vec::new();
            choose(&idxs, k, 0, &mut Vec::new(), &mut |c| picks.push(c.to_vec()));
            for pick in picks {
                let rest: Vec<usize> =
                    idxs.iter().copied().filter(|p| !pick.contains(p)).collect();
                acc.push(pick);
                go(&rest, &parts[1..], acc, out);
                acc.pop();
            }
        }
        let free: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        go(&free, parts, &mut Vec::new(), &mut out);
        out
    }
    let cosets = position_sets(n, partition);
    let coset_perm = |sets: &Vec<Vec<usize>>| -> Perm {
        let mut one_line = vec![0usize; n];
        for (l, set) in sets.iter().enumerate() {
            for (j, &pos) in set.iter().enumerate() {
                one_line[offsets[l] + j] = pos;
            }
        }
        Perm::from_one_line(one_line).expect("coset representative")
    };
    let coset_index = |sets: &Vec<Vec<usize>>| -> usize {
        cosets.iter().position(|c| c == sets).expect("known coset")
    };

    // X basis: multi-indices over the r irreps.
    let x_dims: Vec<usize> = irreps.iter().map(|ir| ir.dim()).collect();
    let x_total: usize = x_dims.iter().product();
    let x_unrank = |mut idx: usize| -> Vec<usize> {
        let mut multi = vec![0usize; r];
        for l in (0..r).rev() {
            multi[l] = idx % x_dims[l];
            idx /= x_dims[l];
        }
        multi
    };
    let x_rank = |multi: &[usize]| -> usize {
        let mut idx = 0usize;
        for l in 0..r {
            idx = idx * x_dims[l] + multi[l];
        }
        idx
    };

    // Y assignment: per slot, an index into y_basis[block_of_slot[s]].
    let y_sizes: Vec<usize> = (0..n).map(|s| y_basis[block_of_slot[s]].len()).collect();
    let y_total: usize = y_sizes.iter().product();
    let y_unrank = |mut idx: usize| -> Vec<usize> {
        let mut multi = vec![0usize; n];
        for s in (0..n).rev() {
            multi[s] = idx % y_sizes[s];
            idx /= y_sizes[s];
        }
        multi
    };
    let y_rank = |multi: &[usize]| -> usize {
        let mut idx = 0usize;
        for s in 0..n {
            idx = idx * y_sizes[s] + multi[s];
        }
        idx
    };

    // Global basis: (coset, x, y) ranked lexicographically; group by tuple.
    struct Basis {
        by_tuple: BTreeMap<Tuple, Vec<(usize, usize, usize)>>,
        local: BTreeMap<(usize, usize, usize), (Tuple, usize)>,
    }
    let tuple_of = |c: usize, y_multi: &[usize]| -> Tuple {
        let g = coset_perm(&cosets[c]);
        let mut verts = vec![0 as Vertex; n];
        for s in 0..n {
            verts[g.apply(s)] = y_basis[block_of_slot[s]][y_multi[s]].0;
        }
        Tuple(verts)
    };
    let mut basis = Basis { by_tuple: BTreeMap::new(), local: BTreeMap::new() };
    for c in 0..cosets.len() {
        for x in 0..x_total {
            for y in 0..y_total {
                let t = tuple_of(c, &y_unrank(y));
                basis.by_tuple.entry(t).or_default().push((c, x, y));
            }
        }
    }
    for (t, elems) in &mut basis.by_tuple {
        elems.sort();
        for (i, e) in elems.iter().enumerate() {
            basis.local.insert(*e, (t.clone(), i));
        }
    }
    let dims: BTreeMap<Tuple, usize> =
        basis.by_tuple.iter().map(|(t, e)| (t.clone(), e.len())).collect();

    // Arrow action: slot s = g⁻¹(l) inside its block, through Y's matrix.
    let mut arrows: BTreeMap<(usize, DoubleArrow, Tuple), Matrix> = BTreeMap::new();
    for (t, elems) in &basis.by_tuple {
        for l in 0..n {
            for a in doubles_from(q, t.get(l)) {
                let target = t.move_slot(l, a.head());
                let rows = dims.get(&target).copied().unwrap_or(0);
                if rows == 0 {
                    continue;
                }
                let mut m = Matrix::zeros(rows, elems.len());
                for (col, &(c, x, y)) in elems.iter().enumerate() {
                    let g = coset_perm(&cosets[c]);
                    let s = g.inverse().apply(l);
                    let part = block_of_slot[s];
                    let y_multi = y_unrank(y);
                    let (vert, vidx) = y_basis[part][y_multi[s]];
                    debug_assert_eq!(vert, a.tail());
                    let my = reps[part].matrix(a);
                    // column of the source basis vector inside Y's vertex block
                    let col_off: usize = y_basis[part]
                        .iter()
                        .position(|&(bv, bi)| bv == vert && bi == vidx)
                        .unwrap();
                    let src_col = y_basis[part][col_off].1;
                    for row_idx in 0..my.rows() {
                        let coeff = my[(row_idx, src_col)].clone();
                        if coeff.is_zero() {
                            continue;
                        }
                        // target basis vector: same (c, x), y with slot s at (head, row_idx)
                        let tgt_pos = y_basis[part]
                            .iter()
                            .position(|&(bv, bi)| bv == a.head() && bi == row_idx)
                            .expect("target vector in basis");
                        let mut y2 = y_multi.clone();
                        y2[s] = tgt_pos;
                        let (t2, local) = &basis.local[&(c, x, y_rank(&y2))];
                        debug_assert_eq!(t2, &target);
                        let v = &m[(*local, col)] + &coeff;
                        m[(*local, col)] = v;
                    }
                }
                if !m.is_zero() {
                    arrows.insert((l, a, t.clone()), m);
                }
            }
        }
    }

    // Transposition action.
    let mut sigma: BTreeMap<(usize, Tuple), Matrix> = BTreeMap::new();
    for (t, elems) in &basis.by_tuple {
        for k in 0..n.saturating_sub(1) {
            let target = t.swap(k, k + 1);
            let rows = dims.get(&target).copied().unwrap_or(0);
            let mut m = Matrix::zeros(rows, elems.len());
            for (col, &(c, x, y)) in elems.iter().enumerate() {
                let g = coset_perm(&cosets[c]);
                let tau = Perm::adjacent(n, k);
                let p = tau.compose(&g);
                // New coset: permuted position sets, sorted increasing.
                let new_sets: Vec<Vec<usize>> = cosets[c]
                    .iter()
                    .map(|set| {
                        let mut moved: Vec<usize> =
                            set.iter().map(|&pos| tau.apply(pos)).collect();
                        moved.sort();
                        moved
                    })
                    .collect();
                let c2 = coset_index(&new_sets);
                let g2 = coset_perm(&cosets[c2]);
                let h = g2.inverse().compose(&p);
                // h preserves blocks; split into per-part permutations.
                let mut h_parts: Vec<Perm> = Vec::with_capacity(r);
                for l in 0..r {
                    let mut one_line = vec![0usize; partition[l]];
                    for (j, slot) in one_line.iter_mut().enumerate() {
                        let img = h.apply(offsets[l] + j);
                        debug_assert!(img >= offsets[l] && img < offsets[l] + partition[l]);
                        *slot = img - offsets[l];
                    }
                    h_parts.push(Perm::from_one_line(one_line).expect("block permutation"));
                }
                // y factors move by h; x factors transform by ⊗ X_l(h_l).
                let y_multi = y_unrank(y);
                let mut y2 = vec![0usize; n];
                for s in 0..n {
                    y2[h.apply(s)] = y_multi[s];
                }
                let y2r = y_rank(&y2);
                let x_multi = x_unrank(x);
                let x_mats: Vec<Matrix> =
                    (0..r).map(|l| irreps[l].matrix_of(&h_parts[l])).collect();
                // Expand the tensor coefficient over target x multi-indices.
                let mut terms: Vec<(Vec<usize>, Scalar)> = vec![(vec![], Scalar::one())];
                for l in 0..r {
                    let mut next = Vec::new();
                    for (prefix, coeff) in &terms {
                        for row_idx in 0..x_dims[l] {
                            let entry = &x_mats[l][(row_idx, x_multi[l])];
                            if entry.is_zero() {
                                continue;
                            }
                            let mut pref = prefix.clone();
                            pref.push(row_idx);
                            next.push((pref, coeff * entry));
                        }
                    }
                    terms = next;
                }
                for (x2_multi, coeff) in terms {
                    let (t2, local) = &basis.local[&(c2, x_rank(&x2_multi), y2r)];
                    debug_assert_eq!(t2, &target);
                    let v = &m[(*local, col)] + &coeff;
                    m[(*local, col)] = v;
                }
            }
            sigma.insert((k, t.clone()), m);
        }
    }

    let out = WreathRep { n, dims, arrows, sigma };
    out.validate()?;
    Ok(out)
}

/// Multinomial coefficient n! / (n_1! ⋯ n_r!) for the expected dimension of
/// induced modules.
pub fn multinomial(parts: &[usize]) -> u64 {
    let n: usize = parts.iter().sum();
    let mut value = 1u64;
    let mut seen = 0usize;
    for &p in parts {
        for j in 1..=p {
            seen += 1;
            value = value * seen as u64 / j as u64;
        }
    }
    let _ = n;
    value
}
