//! Quivers: the three infinite affine families and explicit finite quivers.
//!
//! Vertex conventions (fixed once and for all):
//! * `A_plus_inf`: vertices 0,1,2,… with arrows i→i+1;
//! * `A_inf`: vertices ℤ with arrows i→i+1;
//! * `D_inf`: vertices 0,1,2,3,… with fork arrows 0→2 and 1→2, and spine
//!   arrows i→i+1 for i≥2.
//!
//! The default orientation points toward the higher index, fork arrows point
//! into the spine. Everything downstream is orientation-independent after
//! symmetrization, so one canonical choice suffices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex id. The infinite families use the integer conventions above;
/// explicit quivers may use any distinct ids.
pub type Vertex = i64;

/// An arrow of the base quiver, named deterministically from its endpoints.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Arrow {
    pub fn new(tail: Vertex, head: Vertex) -> Self {
        Arrow { tail, head }
    }

    /// Canonical name `a_{tail}_{head}`, used as a JSON key.
    pub fn name(&self) -> String {
        format!("a_{}_{}", self.tail, self.head)
    }
}

impl fmt::Debug for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

/// An arrow of the double quiver: either a base arrow or its reverse `a*`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubleArrow {
    pub base: Arrow,
    pub starred: bool,
}

impl DoubleArrow {
    pub fn plain(base: Arrow) -> Self {
        DoubleArrow { base, starred: false }
    }

    pub fn star(base: Arrow) -> Self {
        DoubleArrow { base, starred: true }
    }

    pub fn tail(&self) -> Vertex {
        if self.starred {
            self.base.head
        } else {
            self.base.tail
        }
    }

    pub fn head(&self) -> Vertex {
        if self.starred {
            self.base.tail
        } else {
            self.base.head
        }
    }

    pub fn dual(&self) -> DoubleArrow {
        DoubleArrow { base: self.base, starred: !self.starred }
    }

    /// `a_{t}_{h}` or `astar_{t}_{h}` where t,h are the base arrow endpoints.
    pub fn name(&self) -> String {
        if self.starred {
            format!("astar_{}_{}", self.base.tail, self.base.head)
        } else {
            self.base.name()
        }
    }

    /// Inverse of [`DoubleArrow::name`].
    pub fn parse_name(s: &str) -> Result<DoubleArrow> {
        let (starred, rest) = if let Some(r) = s.strip_prefix("astar_") {
            (true, r)
        } else if let Some(r) = s.strip_prefix("a_") {
            (false, r)
        } else {
            return Err(Error::Parse(format!("bad arrow name `{s}`")));
        };
        let (t, h) = rest
            .split_once('_')
            .ok_or_else(|| Error::Parse(format!("bad arrow name `{s}`")))?;
        let tail: Vertex = t.parse().map_err(|_| Error::Parse(format!("bad arrow name `{s}`")))?;
        let head: Vertex = h.parse().map_err(|_| Error::Parse(format!("bad arrow name `{s}`")))?;
        Ok(DoubleArrow { base: Arrow::new(tail, head), starred })
    }
}

impl fmt::Debug for DoubleArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Which quiver we are working over.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Family {
    AInf,
    APlusInf,
    DInf,
    Explicit(ExplicitQuiver),
}

/// A finite quiver given by explicit vertex and arrow lists.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExplicitQuiver {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
}

/// A locally finite quiver, possibly infinite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    family: Family,
}

impl Quiver {
    pub fn a_inf() -> Self {
        Quiver { family: Family::AInf }
    }

    pub fn a_plus_inf() -> Self {
        Quiver { family: Family::APlusInf }
    }

    pub fn d_inf() -> Self {
        Quiver { family: Family::DInf }
    }

    /// Validates and wraps an explicit quiver: vertex ids must be unique,
    /// arrow endpoints must exist, and same-direction parallel arrows are
    /// rejected so that arrow names stay unambiguous. Loops are allowed.
    pub fn explicit(vertices: Vec<Vertex>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        let mut seen_arrows = BTreeSet::new();
        for a in &arrows {
            if !seen.contains(&a.tail) {
                return Err(Error::MissingEndpoint(a.tail));
            }
            if !seen.contains(&a.head) {
                return Err(Error::MissingEndpoint(a.head));
            }
            if !seen_arrows.insert((a.tail, a.head)) {
                return Err(Error::DuplicateArrow(a.tail, a.head));
            }
        }
        Ok(Quiver { family: Family::Explicit(ExplicitQuiver { vertices, arrows }) })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn is_type_a(&self) -> bool {
        matches!(self.family, Family::AInf | Family::APlusInf)
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        match &self.family {
            Family::AInf => true,
            Family::APlusInf | Family::DInf => v >= 0,
            Family::Explicit(q) => q.vertices.contains(&v),
        }
    }

    /// Base-quiver arrows with tail `v`.
    pub fn arrows_out(&self, v: Vertex) -> Vec<Arrow> {
        match &self.family {
            Family::AInf => vec![Arrow::new(v, v + 1)],
            Family::APlusInf => {
                if v >= 0 {
                    vec![Arrow::new(v, v + 1)]
                } else {
                    vec![]
                }
            }
            Family::DInf => match v {
                0 | 1 => vec![Arrow::new(v, 2)],
                v if v >= 2 => vec![Arrow::new(v, v + 1)],
                _ => vec![],
            },
            Family::Explicit(q) => q.arrows.iter().filter(|a| a.tail == v).copied().collect(),
        }
    }

    /// Base-quiver arrows with head `v`.
    pub fn arrows_in(&self, v: Vertex) -> Vec<Arrow> {
        match &self.family {
            Family::AInf => vec![Arrow::new(v - 1, v)],
            Family::APlusInf => {
                if v >= 1 {
                    vec![Arrow::new(v - 1, v)]
                } else {
                    vec![]
                }
            }
            Family::DInf => match v {
                2 => vec![Arrow::new(0, 2), Arrow::new(1, 2)],
                v if v >= 3 => vec![Arrow::new(v - 1, v)],
                _ => vec![],
            },
            Family::Explicit(q) => q.arrows.iter().filter(|a| a.head == v).copied().collect(),
        }
    }

    /// All base arrows incident to `v` (finite by local finiteness).
    pub fn arrows_incident(&self, v: Vertex) -> Vec<Arrow> {
        let mut out = self.arrows_out(v);
        for a in self.arrows_in(v) {
            if a.tail != a.head {
                out.push(a);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut ns: Vec<Vertex> = self
            .arrows_incident(v)
            .into_iter()
            .filter(|a| a.tail != a.head)
            .map(|a| if a.tail == v { a.head } else { a.tail })
            .collect();
        ns.sort();
        ns.dedup();
        ns
    }

    pub fn has_loop_at(&self, v: Vertex) -> bool {
        self.arrows_out(v).iter().any(|a| a.head == v)
    }

    /// Number of arrows between `u` and `v` in either direction; the (u,v)
    /// off-diagonal Cartan entry is minus this count.
    pub fn edge_multiplicity(&self, u: Vertex, v: Vertex) -> i64 {
        if u == v {
            return self.arrows_out(u).iter().filter(|a| a.head == u).count() as i64;
        }
        let uv = self.arrows_out(u).iter().filter(|a| a.head == v).count();
        let vu = self.arrows_out(v).iter().filter(|a| a.head == u).count();
        (uv + vu) as i64
    }

    /// Canonical enumeration of vertices: 0,1,2,… for A+∞ and D∞; the spiral
    /// 0,1,−1,2,−2,… for A∞; list order for explicit quivers.
    pub fn canonical_vertices(&self, count: usize) -> Vec<Vertex> {
        match &self.family {
            Family::APlusInf | Family::DInf => (0..count as i64).collect(),
            Family::AInf => {
                let mut out = Vec::with_capacity(count);
                let mut k = 0i64;
                while out.len() < count {
                    if k == 0 {
                        out.push(0);
                    } else {
                        out.push(k);
                        if out.len() < count {
                            out.push(-k);
                        }
                    }
                    k += 1;
                }
                out
            }
            Family::Explicit(q) => q.vertices.iter().take(count).copied().collect(),
        }
    }

    /// The full subquiver on a finite vertex set.
    pub fn window(&self, vertices: impl IntoIterator<Item = Vertex>) -> Result<FiniteWindow> {
        let set: BTreeSet<Vertex> = vertices.into_iter().collect();
        for &v in &set {
            if !self.contains_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        let mut arrows = Vec::new();
        for &v in &set {
            for a in self.arrows_out(v) {
                if set.contains(&a.head) {
                    arrows.push(a);
                }
            }
        }
        arrows.sort();
        arrows.dedup();
        Ok(FiniteWindow { vertices: set.into_iter().collect(), arrows })
    }
}

/// A finite vertex set together with the full subquiver on it: the window
/// contains exactly the arrows of the ambient quiver with both endpoints in
/// the set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteWindow {
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
}

impl FiniteWindow {
    /// Vertices in ascending order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn neighbors_in_window(&self, v: Vertex) -> Vec<Vertex> {
        let mut ns: Vec<Vertex> = self
            .arrows
            .iter()
            .filter(|a| a.tail != a.head && (a.tail == v || a.head == v))
            .map(|a| if a.tail == v { a.head } else { a.tail })
            .collect();
        ns.sort();
        ns.dedup();
        ns
    }

    /// Connected components of the underlying graph.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut unseen: BTreeSet<Vertex> = self.vertices.iter().copied().collect();
        let mut comps = Vec::new();
        while let Some(&start) = unseen.iter().next() {
            let mut comp = vec![];
            let mut stack = vec![start];
            unseen.remove(&start);
            while let Some(v) = stack.pop() {
                comp.push(v);
                for n in self.neighbors_in_window(v) {
                    if unseen.remove(&n) {
                        stack.push(n);
                    }
                }
            }
            comp.sort();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// Quiver build specification, mirroring the JSON schema.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum QuiverSpec {
    #[serde(rename = "A_inf")]
    AInf,
    #[serde(rename = "A_plus_inf")]
    APlusInf,
    #[serde(rename = "D_inf")]
    DInf,
    #[serde(rename = "explicit")]
    Explicit { vertices: Vec<Vertex>, arrows: Vec<Arrow> },
}

/// Realizes a spec as a validated quiver.
pub fn build_quiver(spec: QuiverSpec) -> Result<Quiver> {
    match spec {
        QuiverSpec::AInf => Ok(Quiver::a_inf()),
        QuiverSpec::APlusInf => Ok(Quiver::a_plus_inf()),
        QuiverSpec::DInf => Ok(Quiver::d_inf()),
        QuiverSpec::Explicit { vertices, arrows } => Quiver::explicit(vertices, arrows),
    }
}

impl Quiver {
    pub fn to_spec(&self) -> QuiverSpec {
        match &self.family {
            Family::AInf => QuiverSpec::AInf,
            Family::APlusInf => QuiverSpec::APlusInf,
            Family::DInf => QuiverSpec::DInf,
            Family::Explicit(q) => {
                QuiverSpec::Explicit { vertices: q.vertices.clone(), arrows: q.arrows.clone() }
            }
        }
    }
}

/// Finitely supported integer vector on the vertices. Dimension vectors are
/// the non-negative ones; reflections may produce negative entries, which is
/// why the type is signed. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct DimVec(BTreeMap<Vertex, i64>);

impl DimVec {
    pub fn zero() -> Self {
        DimVec::default()
    }

    /// The coordinate vector ε_v.
    pub fn unit(v: Vertex) -> Self {
        let mut m = BTreeMap::new();
        m.insert(v, 1);
        DimVec(m)
    }

    /// The interval root α_[s,r] = ε_s + … + ε_r.
    pub fn interval(s: Vertex, r: Vertex) -> Self {
        assert!(s <= r, "interval needs s <= r");
        DimVec((s..=r).map(|v| (v, 1)).collect())
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Vertex, i64)>) -> Self {
        let mut m = BTreeMap::new();
        for (v, c) in entries {
            if c != 0 {
                *m.entry(v).or_insert(0) += c;
            }
        }
        m.retain(|_, c| *c != 0);
        DimVec(m)
    }

    pub fn get(&self, v: Vertex) -> i64 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn set(&mut self, v: Vertex, c: i64) {
        if c == 0 {
            self.0.remove(&v);
        } else {
            self.0.insert(v, c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.values().all(|&c| c >= 0)
    }

    /// All entries in {0, 1}.
    pub fn is_multiplicity_free(&self) -> bool {
        self.0.values().all(|&c| c == 0 || c == 1)
    }

    pub fn support(&self) -> Vec<Vertex> {
        self.0.keys().copied().collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Vertex, i64)> + '_ {
        self.0.iter().map(|(&v, &c)| (v, c))
    }

    pub fn total(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn add(&self, other: &DimVec) -> DimVec {
        let mut out = self.0.clone();
        for (&v, &c) in &other.0 {
            *out.entry(v).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        DimVec(out)
    }

    pub fn sub(&self, other: &DimVec) -> DimVec {
        let mut out = self.0.clone();
        for (&v, &c) in &other.0 {
            *out.entry(v).or_insert(0) -= c;
        }
        out.retain(|_, c| *c != 0);
        DimVec(out)
    }

    pub fn scale(&self, k: i64) -> DimVec {
        if k == 0 {
            return DimVec::zero();
        }
        DimVec(self.0.iter().map(|(&v, &c)| (v, c * k)).collect())
    }

    pub fn neg(&self) -> DimVec {
        self.scale(-1)
    }

    /// Componentwise `self ≤ other` (not the derived lexicographic order).
    pub fn leq(&self, other: &DimVec) -> bool {
        self.0.iter().all(|(&v, &c)| c <= other.get(v))
            && other.0.iter().all(|(&v, &c)| self.get(v) <= c)
    }
}

impl fmt::Debug for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (v, c)) in self.entries().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}:{c}")?;
        }
        write!(f, "]")
    }
}
