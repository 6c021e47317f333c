//! Reflection functors on wreath representations.
//!
//! For a loop-free vertex i the functor F_i sends modules at parameters
//! (λ, ν) to modules at (r_iλ, ν). The construction works in a presentation
//! where i is a sink: arrows out of i are replaced by their duals with the
//! sign twist (a, a*) ↦ (a*, −a), which preserves the defining relations.
//! Writing R for the arrows into i, the new component at a tuple j̄ is the
//! joint kernel of the contraction maps
//!
//!   π_{j̄,p}: ⊕_{ξ: Δ(j̄)→R} V_{t(j̄,ξ)} → ⊕_{η: Δ(j̄)∖{p}→R} V_{t(j̄,η)}
//!
//! over all p ∈ Δ(j̄), where Δ(j̄) marks the slots equal to i and t(j̄,ξ)
//! replaces each marked slot by the tail of the chosen arrow. Kernel bases
//! come from deterministic exact row reduction, so outputs are reproducible
//! bit for bit. The new operators act through the ambient sums: untouched
//! arrows act blockwise (case I), arrows out of i select blocks (case II),
//! and arrows into i act by −λ_i + inclusion∘contraction + ν·(transposition
//! sum) composed with the block inclusion (case III). The symmetric-group
//! action is induced by the natural permutation of tuples and block labels
//! restricted to the kernels; the relation checker validates the result.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quiver::{DoubleArrow, Quiver, Vertex};
use crate::roots::{dual_reflection, ReflectionWord};
use crate::scalar::Scalar;
use crate::weight::Weight;
use crate::wreath::{check_wreath, doubles_from, Tuple, WreathRep};
use crate::young::Perm;

/// Membership in Λ_i: λ_i ± pν ≠ 0 for p = 0,…,n−1. On Λ_i the functor F_i
/// is an equivalence with quasi-inverse F_i.
pub fn in_lambda_i(lambda: &Weight, nu: &Scalar, i: Vertex, n: usize) -> bool {
    let li = lambda.at(i);
    (0..n as i64).all(|p| {
        let shift = &Scalar::from_int(p) * nu;
        !(&li + &shift).is_zero() && !(&li - &shift).is_zero()
    })
}

/// The arrows of the sink presentation pointing into i, in deterministic
/// order: canonical in-arrows stay, canonical out-arrows contribute their
/// duals.
fn arrows_into(q: &Quiver, i: Vertex) -> Vec<DoubleArrow> {
    let mut r: Vec<DoubleArrow> = q
        .arrows_in(i)
        .into_iter()
        .filter(|a| a.tail != a.head)
        .map(DoubleArrow::plain)
        .collect();
    r.extend(
        q.arrows_out(i)
            .into_iter()
            .filter(|a| a.tail != a.head)
            .map(DoubleArrow::star),
    );
    r.sort();
    r
}

/// View of the module in the sink presentation: the twist negates the plain
/// matrices of arrows out of i and leaves everything else alone. Applying
/// the same negation to the output converts back.
struct SinkView<'a> {
    v: &'a WreathRep,
    i: Vertex,
}

impl SinkView<'_> {
    fn mat(&self, l: usize, d: DoubleArrow, t: &Tuple) -> Matrix {
        let m = self.v.arrow_matrix(l, d, t);
        if twisted(d, self.i) {
            m.neg()
        } else {
            m
        }
    }
}

fn twisted(d: DoubleArrow, i: Vertex) -> bool {
    !d.starred && d.base.tail == i && d.base.head != i
}

fn twist_arrow_maps(arrows: &mut BTreeMap<(usize, DoubleArrow, Tuple), Matrix>, i: Vertex) {
    for ((_, d, _), m) in arrows.iter_mut() {
        if twisted(*d, i) {
            *m = m.neg();
        }
    }
}

/// One ambient sum V(j̄, D) = ⊕_{ξ: D→R} V_{t(j̄,ξ)}, with blocks in
/// lexicographic assignment order.
struct Ambient {
    positions: Vec<usize>,
    assigns: Vec<Vec<usize>>,
    tuples: Vec<Tuple>,
    offsets: Vec<usize>,
    total: usize,
}

impl Ambient {
    fn new(v: &WreathRep, r: &[DoubleArrow], base: &Tuple, positions: Vec<usize>) -> Ambient {
        let k = positions.len();
        let count = if k == 0 { 1 } else { r.len().pow(k as u32) };
        let mut assigns = Vec::with_capacity(count);
        for rank in 0..count {
            let mut assign = vec![0usize; k];
            let mut rest = rank;
            for slot in (0..k).rev() {
                assign[slot] = rest % r.len();
                rest /= r.len();
            }
            assigns.push(assign);
        }
        let tuples: Vec<Tuple> = assigns
            .iter()
            .map(|assign| {
                let mut t = base.clone();
                for (slot, &choice) in positions.iter().zip(assign) {
                    t = t.move_slot(*slot, r[choice].tail());
                }
                t
            })
            .collect();
        let mut offsets = Vec::with_capacity(tuples.len());
        let mut total = 0usize;
        for t in &tuples {
            offsets.push(total);
            total += v.dim(t);
        }
        Ambient { positions, assigns, tuples, offsets, total }
    }

    fn index_of(&self, assign: &[usize]) -> usize {
        self.assigns.iter().position(|a| a == assign).expect("known assignment")
    }

    fn pos_index(&self, slot: usize) -> usize {
        self.positions.iter().position(|&p| p == slot).expect("slot in D")
    }
}

fn place_block(big: &mut Matrix, row_off: usize, col_off: usize, block: &Matrix) {
    for r in 0..block.rows() {
        for c in 0..block.cols() {
            if !block[(r, c)].is_zero() {
                let v = &big[(row_off + r, col_off + c)] + &block[(r, c)];
                big[(row_off + r, col_off + c)] = v;
            }
        }
    }
}

/// The contraction π_{j̄,p}(D): apply the assigned arrow at slot p and drop p
/// from the assignment.
fn pi_map(view: &SinkView, r: &[DoubleArrow], src: &Ambient, dst: &Ambient, p: usize) -> Matrix {
    let mut m = Matrix::zeros(dst.total, src.total);
    let pi = src.pos_index(p);
    for (bi, assign) in src.assigns.iter().enumerate() {
        let mut reduced = assign.clone();
        reduced.remove(pi);
        let bj = dst.index_of(&reduced);
        let block = view.mat(p, r[assign[pi]], &src.tuples[bi]);
        place_block(&mut m, dst.offsets[bj], src.offsets[bi], &block);
    }
    m
}

/// The inclusion μ_{j̄,p}(D): apply the dual of the assigned arrow at slot p,
/// fanning out over all extensions of the assignment.
fn mu_map(view: &SinkView, r: &[DoubleArrow], src: &Ambient, dst: &Ambient, p: usize) -> Matrix {
    let mut m = Matrix::zeros(dst.total, src.total);
    let pi = dst.pos_index(p);
    for (bj, assign) in dst.assigns.iter().enumerate() {
        let mut reduced = assign.clone();
        reduced.remove(pi);
        let bi = src.index_of(&reduced);
        let block = view.mat(p, r[assign[pi]].dual(), &src.tuples[bi]);
        place_block(&mut m, dst.offsets[bj], src.offsets[bi], &block);
    }
    m
}

struct KernelData {
    ambient: Ambient,
    basis: Matrix,
}

/// Restriction of an ambient map to kernel coordinates: solves
/// K_dst · X = A · K_src exactly. The image landing inside the kernel is part
/// of the functor's correctness; failure to solve is an internal error.
fn restrict(a: &Matrix, src: &KernelData, dst: &KernelData) -> Result<Matrix> {
    let image = a * &src.basis;
    if dst.basis.cols() == 0 {
        if image.is_zero() {
            return Ok(Matrix::zeros(0, src.basis.cols()));
        }
        return Err(Error::Internal("reflected operator escapes the kernel".into()));
    }
    match dst.basis.solve(&image)? {
        Some(x) => {
            // The solver zero-fills free variables; K has full column rank by
            // construction so the solution is exact and unique.
            if &dst.basis * &x != image {
                return Err(Error::Internal("kernel coordinates are inconsistent".into()));
            }
            Ok(x)
        }
        None => Err(Error::Internal("reflected operator escapes the kernel".into())),
    }
}

/// Applies the reflection functor F_i. The input must satisfy the defining
/// relations at (λ, ν); the output satisfies them at (r_iλ, ν).
pub fn reflect(
    q: &Quiver,
    v: &WreathRep,
    lambda: &Weight,
    nu: &Scalar,
    i: Vertex,
) -> Result<WreathRep> {
    if !q.contains_vertex(i) {
        return Err(Error::UnknownVertex(i));
    }
    if q.has_loop_at(i) {
        return Err(Error::LoopVertex(i));
    }
    let report = check_wreath(q, v, lambda, nu);
    if !report.pass() {
        return Err(Error::RelationCheckFailed(format!(
            "input violates {} relation(s); first at {:?}",
            report.violations.len(),
            report.violations[0].site
        )));
    }
    reflect_unchecked(q, v, lambda, nu, i)
}

pub(crate) fn reflect_unchecked(
    q: &Quiver,
    v: &WreathRep,
    lambda: &Weight,
    nu: &Scalar,
    i: Vertex,
) -> Result<WreathRep> {
    let n = v.n();
    let r = arrows_into(q, i);
    let tails: BTreeSet<Vertex> = r.iter().map(|d| d.tail()).collect();
    let view = SinkView { v, i };
    let li = lambda.at(i);

    // Candidate output tuples: every tuple whose ambient sum can be nonzero,
    // i.e. obtained from an i-free component by turning some tail-vertex
    // slots into i.
    let mut candidates: BTreeSet<Tuple> = BTreeSet::new();
    for t in v.components().keys() {
        if t.0.contains(&i) {
            continue;
        }
        let free: Vec<usize> = (0..n).filter(|&m| tails.contains(&t.get(m))).collect();
        for mask in 0..(1usize << free.len()) {
            let mut cand = t.clone();
            for (bit, &slot) in free.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    cand = cand.move_slot(slot, i);
                }
            }
            candidates.insert(cand);
        }
    }

    // Joint kernels of the contractions.
    let mut kernels: BTreeMap<Tuple, KernelData> = BTreeMap::new();
    for cand in candidates {
        let dset: Vec<usize> = (0..n).filter(|&m| cand.get(m) == i).collect();
        let ambient = Ambient::new(v, &r, &cand, dset.clone());
        if ambient.total == 0 {
            continue;
        }
        let basis = if dset.is_empty() {
            Matrix::identity(ambient.total)
        } else {
            let mut stacked: Option<Matrix> = None;
            for &p in &dset {
                let mut reduced = dset.clone();
                reduced.retain(|&x| x != p);
                let dst = Ambient::new(v, &r, &cand, reduced);
                let pi = pi_map(&view, &r, &ambient, &dst, p);
                stacked = Some(match stacked {
                    None => pi,
                    Some(s) => s.vstack(&pi)?,
                });
            }
            stacked.expect("nonempty D").nullspace()
        };
        if basis.cols() > 0 {
            kernels.insert(cand, KernelData { ambient, basis });
        }
    }

    let dims: BTreeMap<Tuple, usize> =
        kernels.iter().map(|(t, k)| (t.clone(), k.basis.cols())).collect();

    // New arrow operators.
    let mut arrows: BTreeMap<(usize, DoubleArrow, Tuple), Matrix> = BTreeMap::new();
    for (t, src) in &kernels {
        for l in 0..n {
            for d in doubles_from(q, t.get(l)) {
                let target = t.move_slot(l, d.head());
                let ambient_map = if d.tail() != i && d.head() != i {
                    // Case I: blockwise action of the untouched arrow.
                    let dst_amb = Ambient::new(v, &r, &target, src.ambient.positions.clone());
                    let mut m = Matrix::zeros(dst_amb.total, src.ambient.total);
                    for (bi, assign) in src.ambient.assigns.iter().enumerate() {
                        let bj = dst_amb.index_of(assign);
                        let block = view.mat(l, d, &src.ambient.tuples[bi]);
                        place_block(&mut m, dst_amb.offsets[bj], src.ambient.offsets[bi], &block);
                    }
                    m
                } else if d.tail() == i {
                    // Case II: select the blocks whose assignment at l is the
                    // dual arrow.
                    let r_arrow = d.dual();
                    let Some(choice) = r.iter().position(|&x| x == r_arrow) else {
                        return Err(Error::Internal("dual arrow missing from R".into()));
                    };
                    let mut reduced_pos = src.ambient.positions.clone();
                    reduced_pos.retain(|&x| x != l);
                    let dst_amb = Ambient::new(v, &r, &target, reduced_pos);
                    let pi = src.ambient.pos_index(l);
                    let mut m = Matrix::zeros(dst_amb.total, src.ambient.total);
                    for (bi, assign) in src.ambient.assigns.iter().enumerate() {
                        if assign[pi] != choice {
                            continue;
                        }
                        let mut reduced = assign.clone();
                        reduced.remove(pi);
                        let bj = dst_amb.index_of(&reduced);
                        let block = Matrix::identity(v.dim(&src.ambient.tuples[bi]));
                        place_block(&mut m, dst_amb.offsets[bj], src.ambient.offsets[bi], &block);
                    }
                    m
                } else {
                    // Case III: d points into i.
                    let mut extended_pos = src.ambient.positions.clone();
                    extended_pos.push(l);
                    extended_pos.sort();
                    let dst_amb = Ambient::new(v, &r, &target, extended_pos);
                    // Block inclusion T_!: extend the assignment by l ↦ d.
                    let Some(choice) = r.iter().position(|&x| x == d) else {
                        return Err(Error::Internal("arrow missing from R".into()));
                    };
                    let di = dst_amb.pos_index(l);
                    let mut incl = Matrix::zeros(dst_amb.total, src.ambient.total);
                    for (bi, assign) in src.ambient.assigns.iter().enumerate() {
                        let mut extended = assign.clone();
                        extended.insert(di, choice);
                        let bj = dst_amb.index_of(&extended);
                        let block = Matrix::identity(v.dim(&src.ambient.tuples[bi]));
                        place_block(&mut incl, dst_amb.offsets[bj], src.ambient.offsets[bi], &block);
                    }
                    // −λ_i + μ_l π_l + ν Σ_{m ∈ D} σ_{ml} on the extended sum.
                    let mid_amb = Ambient::new(v, &r, &target, src.ambient.positions.clone());
                    let pi = pi_map(&view, &r, &dst_amb, &mid_amb, l);
                    let mu = mu_map(&view, &r, &mid_amb, &dst_amb, l);
                    let mut theta = Matrix::scalar(dst_amb.total, &li).neg();
                    theta = &theta + &(&mu * &pi);
                    for &m_slot in &src.ambient.positions {
                        let perm = Perm::transposition(n, m_slot, l);
                        let mut sig = Matrix::zeros(dst_amb.total, dst_amb.total);
                        for (bi, assign) in dst_amb.assigns.iter().enumerate() {
                            // block ξ ↦ block ξ∘(m l)
                            let mut swapped = assign.clone();
                            let (pm, pl) = (dst_amb.pos_index(m_slot), dst_amb.pos_index(l));
                            swapped.swap(pm, pl);
                            let bj = dst_amb.index_of(&swapped);
                            let block = v.perm_matrix(&perm, &dst_amb.tuples[bi]);
                            place_block(&mut sig, dst_amb.offsets[bj], dst_amb.offsets[bi], &block);
                        }
                        theta = &theta + &sig.scale(nu);
                    }
                    &theta * &incl
                };
                let Some(dst) = kernels.get(&target) else {
                    // Zero kernel at the target: the image must vanish.
                    let src_cols = src.basis.cols();
                    let image = &ambient_map * &src.basis;
                    if !image.is_zero() {
                        return Err(Error::Internal(
                            "reflected arrow hits a zero component".into(),
                        ));
                    }
                    let _ = src_cols;
                    continue;
                };
                let x = restrict(&ambient_map, src, dst)?;
                if !x.is_zero() {
                    arrows.insert((l, d, t.clone()), x);
                }
            }
        }
    }

    // Induced symmetric-group action: permute tuples and block labels, act by
    // the original σ on each block, restrict to the kernels.
    let mut sigma: BTreeMap<(usize, Tuple), Matrix> = BTreeMap::new();
    for (t, src) in &kernels {
        for k in 0..n.saturating_sub(1) {
            let tau = Perm::adjacent(n, k);
            let target = t.swap(k, k + 1);
            let new_pos: Vec<usize> = {
                let mut p: Vec<usize> =
                    src.ambient.positions.iter().map(|&s| tau.apply(s)).collect();
                p.sort();
                p
            };
            let dst_amb = Ambient::new(v, &r, &target, new_pos);
            let mut m = Matrix::zeros(dst_amb.total, src.ambient.total);
            for (bi, assign) in src.ambient.assigns.iter().enumerate() {
                // target assignment: ξ'(q) = ξ(τ(q)) over the permuted D
                let mut tgt_assign = vec![0usize; assign.len()];
                for (idx, &q_slot) in dst_amb.positions.iter().enumerate() {
                    let src_slot = tau.apply(q_slot);
                    tgt_assign[idx] = assign[src.ambient.pos_index(src_slot)];
                }
                let bj = dst_amb.index_of(&tgt_assign);
                let block = v.sigma_matrix(k, &src.ambient.tuples[bi]);
                place_block(&mut m, dst_amb.offsets[bj], src.ambient.offsets[bi], &block);
            }
            let Some(dst) = kernels.get(&target) else {
                if !(&m * &src.basis).is_zero() {
                    return Err(Error::Internal("sigma escapes the kernel family".into()));
                }
                continue;
            };
            sigma.insert((k, t.clone()), restrict(&m, src, dst)?);
        }
    }

    twist_arrow_maps(&mut arrows, i);
    WreathRep::new(n, dims, arrows, sigma)
}

/// Result of applying a whole reflection word.
#[derive(Clone, Debug)]
pub struct WordReflection {
    pub module: WreathRep,
    /// The word-transformed weight r_{j_m}⋯r_{j_1}λ.
    pub weight: Weight,
    /// Steps at which (λ, ν) left Λ_{j_k}; the functor still applies but the
    /// equivalence guarantees lapse.
    pub warnings: Vec<String>,
}

/// Left-to-right composition of reflections along a word (rightmost letter
/// first), transforming the weight alongside.
pub fn reflect_word(
    q: &Quiver,
    v: &WreathRep,
    lambda: &Weight,
    nu: &Scalar,
    word: &ReflectionWord,
) -> Result<WordReflection> {
    let mut module = v.clone();
    let mut weight = lambda.clone();
    let mut warnings = Vec::new();
    for (step, i) in word.in_application_order().enumerate() {
        if !in_lambda_i(&weight, nu, i, module.n()) {
            warnings.push(format!(
                "step {step}: parameter leaves Λ_{i}; involution guarantees lapse"
            ));
        }
        module = reflect(q, &module, &weight, nu, i)?;
        weight = dual_reflection(q, i, &weight);
    }
    Ok(WordReflection { module, weight, warnings })
}
