//! Young diagrams, standard tableaux and the seminormal representations of
//! the symmetric groups, all over exact rationals.

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Largest diagram size for which seminormal matrices are built.
pub const MAX_DIAGRAM_SIZE: usize = 7;

/// A permutation of {0,…,n−1} in one-line notation: `p[s]` is the image of s.
/// Acting on tuples, the entry at slot s moves to slot p(s).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// The transposition (a b); a == b yields the identity.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a < n && b < n);
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(a, b);
        Perm(p)
    }

    /// Adjacent transposition (k, k+1).
    pub fn adjacent(n: usize, k: usize) -> Self {
        Perm::transposition(n, k, k + 1)
    }

    pub fn from_one_line(p: Vec<usize>) -> Result<Self> {
        let n = p.len();
        let mut seen = vec![false; n];
        for &v in &p {
            if v >= n || seen[v] {
                return Err(Error::Parse("not a permutation".into()));
            }
            seen[v] = true;
        }
        Ok(Perm(p))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn apply(&self, s: usize) -> usize {
        self.0[s]
    }

    /// Composition self ∘ other (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm(other.0.iter().map(|&s| self.0[s]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (s, &v) in self.0.iter().enumerate() {
            inv[v] = s;
        }
        Perm(inv)
    }

    /// Moves items around: output[p(s)] = items[s].
    pub fn permute<T: Clone>(&self, items: &[T]) -> Vec<T> {
        assert_eq!(items.len(), self.len());
        let mut out = items.to_vec();
        for (s, item) in items.iter().enumerate() {
            out[self.0[s]] = item.clone();
        }
        out
    }

    /// Writes the permutation as a product of adjacent transpositions:
    /// p = adj(w[0]) ∘ adj(w[1]) ∘ … ∘ adj(w[last]), rightmost applied first.
    pub fn adjacent_word(&self) -> Vec<usize> {
        // Bubble self down to the identity by right-multiplications; the
        // recorded swaps, reversed, rebuild p from the left.
        let mut q = self.0.clone();
        let mut rec = Vec::new();
        while let Some(s) = (0..q.len().saturating_sub(1)).find(|&s| q[s] > q[s + 1]) {
            q.swap(s, s + 1);
            rec.push(s);
        }
        rec.reverse();
        rec
    }
}

/// An integer partition drawn as a Young diagram: weakly decreasing positive
/// row lengths.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.contains(&0) {
            return Err(Error::InvalidDiagram("rows must be positive".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram("rows must be weakly decreasing".into()));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// All diagrams of a given size, in lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<YoungDiagram> {
        fn go(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if remaining == 0 {
                out.push(YoungDiagram { rows: cur.clone() });
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                cur.push(part);
                go(remaining - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// `Some((rows, cols))` iff every row has the same length.
    pub fn is_rectangular(&self) -> Option<(usize, usize)> {
        let b = self.rows[0];
        self.rows.iter().all(|&r| r == b).then_some((self.rows.len(), b))
    }

    /// Σ over boxes of (column − row), 0-indexed. For an a×b rectangle of
    /// size n this is n(b−a)/2.
    pub fn content_sum(&self) -> i64 {
        let mut acc = 0i64;
        for (r, &len) in self.rows.iter().enumerate() {
            for c in 0..len {
                acc += c as i64 - r as i64;
            }
        }
        acc
    }

    /// Number of standard tableaux via the hook length formula.
    pub fn hook_dimension(&self) -> u64 {
        let n = self.size();
        let cols: Vec<usize> = (0..self.rows[0])
            .map(|c| self.rows.iter().filter(|&&len| len > c).count())
            .collect();
        let mut numer = 1u128;
        let mut denom = 1u128;
        for k in 1..=n {
            numer *= k as u128;
        }
        for (r, &len) in self.rows.iter().enumerate() {
            for (c, &col_len) in cols.iter().enumerate().take(len) {
                let hook = (len - c) + (col_len - r) - 1;
                denom *= hook as u128;
            }
        }
        (numer / denom) as u64
    }

    /// Standard Young tableaux: for each, the box of value v (1-based) is
    /// `tableau[v-1] = (row, col)`, 0-based.
    pub fn standard_tableaux(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.size();
        let mut out = Vec::new();
        let mut filled = vec![0usize; self.rows.len()];
        let mut boxes = Vec::with_capacity(n);
        fn go(
            shape: &[usize],
            filled: &mut Vec<usize>,
            boxes: &mut Vec<(usize, usize)>,
            n: usize,
            out: &mut Vec<Vec<(usize, usize)>>,
        ) {
            if boxes.len() == n {
                out.push(boxes.clone());
                return;
            }
            for r in 0..shape.len() {
                let c = filled[r];
                if c < shape[r] && (r == 0 || filled[r - 1] > c) {
                    filled[r] += 1;
                    boxes.push((r, c));
                    go(shape, filled, boxes, n, out);
                    boxes.pop();
                    filled[r] -= 1;
                }
            }
        }
        go(&self.rows, &mut filled, &mut boxes, n, &mut out);
        out
    }
}

/// An irreducible representation of S_n in Young's seminormal form: exact
/// rational matrices for the adjacent transpositions (k, k+1), k = 0..n−2.
#[derive(Clone, Debug)]
pub struct SymmetricGroupIrrep {
    diagram: YoungDiagram,
    n: usize,
    gens: Vec<Matrix>,
}

impl SymmetricGroupIrrep {
    /// Builds the seminormal matrices. Tableaux are ordered as enumerated by
    /// [`YoungDiagram::standard_tableaux`]; for each adjacent transposition
    /// the action is diagonal ±1 on tableaux where the two values share a row
    /// or column, and a 2×2 involution on each swapped pair, with diagonal
    /// entries ±1/d for the axial distance d.
    pub fn seminormal(diagram: &YoungDiagram) -> Result<Self> {
        let n = diagram.size();
        if n > MAX_DIAGRAM_SIZE {
            return Err(Error::DiagramTooLarge(n, MAX_DIAGRAM_SIZE));
        }
        let tableaux = diagram.standard_tableaux();
        let dim = tableaux.len();
        debug_assert_eq!(dim as u64, diagram.hook_dimension());
        let index_of = |t: &Vec<(usize, usize)>| tableaux.iter().position(|u| u == t).unwrap();
        let content = |(r, c): (usize, usize)| c as i64 - r as i64;
        let mut gens = Vec::with_capacity(n.saturating_sub(1));
        for k in 0..n.saturating_sub(1) {
            let mut m = Matrix::zeros(dim, dim);
            for (idx, t) in tableaux.iter().enumerate() {
                let (bv, bw) = (t[k], t[k + 1]);
                if bv.0 == bw.0 {
                    m[(idx, idx)] = Scalar::one();
                    continue;
                }
                if bv.1 == bw.1 {
                    m[(idx, idx)] = Scalar::from_int(-1);
                    continue;
                }
                let d = content(bw) - content(bv);
                let mut swapped = t.clone();
                swapped.swap(k, k + 1);
                let jdx = index_of(&swapped);
                let inv_d = BigRational::new(1.into(), d.into());
                // Column idx: image of v_t = (1/d) v_t + c v_swapped with the
                // off-diagonal pair (1, 1−1/d²) split by the sign of d.
                m[(idx, idx)] = Scalar::from_rational(inv_d.clone());
                if d > 0 {
                    m[(jdx, idx)] = Scalar::one();
                } else {
                    let c = BigRational::one() - &inv_d * &inv_d;
                    m[(jdx, idx)] = Scalar::from_rational(c);
                }
            }
            gens.push(m);
        }
        Ok(SymmetricGroupIrrep { diagram: diagram.clone(), n, gens })
    }

    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        if self.gens.is_empty() {
            1
        } else {
            self.gens[0].rows()
        }
    }

    /// Matrix of the adjacent transposition (k, k+1).
    pub fn generator(&self, k: usize) -> &Matrix {
        &self.gens[k]
    }

    /// Matrix of an arbitrary permutation via its adjacent word.
    pub fn matrix_of(&self, p: &Perm) -> Matrix {
        assert_eq!(p.len(), self.n);
        let mut m = Matrix::identity(self.dim());
        for k in p.adjacent_word() {
            m = &m * &self.gens[k];
        }
        m
    }
}
