//! Finite quivers and their finite-dimensional representations over Q.
//!
//! A [`Quiver`] is a vertex count plus a list of arrows (parallel arrows and
//! oriented cycles allowed; acyclicity is computed, never assumed). A [`Rep`]
//! assigns a rational vector space to each vertex and a matrix to each arrow.
//! On top of these sit exact Hom/Ext computation, the Auslander–Reiten
//! translate, BGP reflection functors, Dynkin enumeration, and the
//! universal-extension construction of tilting objects from exceptional
//! sequences.

mod enumerate;
mod homext;
mod reflect;
mod tilting;
mod translate;

pub use enumerate::{
    enumerate_indecomposables, exceptional_class_injectivity, path_distance_check,
};
pub use homext::{
    hom_ext, indecomposable, is_exceptional, iso_indecomposables, summand_multiplicity,
    HomExtResult,
};
pub use reflect::reflect;
pub use tilting::{tilting_from_sequence, universal_extension};
pub use translate::ar_translate;

use crate::exact::{Int, IntMatrix, Rat, RatMatrix};
use num_traits::{One, Zero};

/// Errors from quiver-level operations.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("arrow ({tail},{head}) out of range for {vertices} vertices")]
    ArrowOutOfRange { tail: usize, head: usize, vertices: usize },
    #[error("map for arrow {arrow} must be {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    MapShape { arrow: usize, expected_rows: usize, expected_cols: usize, rows: usize, cols: usize },
    #[error("expected {expected} dimension entries / maps, got {got}")]
    CountMismatch { expected: usize, got: usize },
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("representation over a quiver with oriented cycles must be nilpotent")]
    NotNilpotent,
    #[error("operation requires an acyclic quiver; use the tube operations for cyclic ones")]
    CyclicUnsupported,
    #[error("vertex {0} is neither a sink nor a source")]
    NotSinkOrSource(usize),
    #[error("representation has a direct summand equal to the simple at vertex {0}")]
    SimpleSummandAtVertex(usize),
    #[error("representation has a projective direct summand, so the translate is undefined")]
    NotTranslatable,
    #[error("underlying graph is not of Dynkin type; enumeration would not terminate")]
    NotDynkin,
    #[error("input is not an exceptional sequence: {0}")]
    NotExceptionalSequence(String),
    #[error("internal construction check failed: {0}")]
    ConstructionFailed(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A finite quiver: `vertex_count` vertices (0-based) and a list of arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<(usize, usize)>) -> Result<Self, QuiverError> {
        for &(s, t) in &arrows {
            if s >= vertex_count || t >= vertex_count {
                return Err(QuiverError::ArrowOutOfRange {
                    tail: s,
                    head: t,
                    vertices: vertex_count,
                });
            }
        }
        Ok(Quiver { vertex_count, arrows })
    }

    /// The linear quiver 0 → 1 → ⋯ → n−1.
    pub fn linear(n: usize) -> Quiver {
        Quiver { vertex_count: n, arrows: (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect() }
    }

    /// The cyclic quiver 0 → 1 → ⋯ → r−1 → 0 (a single loop when r = 1).
    pub fn cyclic(r: usize) -> Quiver {
        Quiver { vertex_count: r, arrows: (0..r).map(|i| (i, (i + 1) % r)).collect() }
    }

    /// Four-vertex star with all arrows into the center vertex 0.
    pub fn star_d4() -> Quiver {
        Quiver { vertex_count: 4, arrows: vec![(1, 0), (2, 0), (3, 0)] }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Topological order of the vertices, or `None` if the quiver has an
    /// oriented cycle. Deterministic: smallest available vertex first.
    pub fn topo_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count;
        let mut indeg = vec![0usize; n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        while let Some(&v) = ready.iter().min() {
            ready.retain(|&u| u != v);
            order.push(v);
            for (i, &(s, t)) in self.arrows.iter().enumerate() {
                let _ = i;
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.push(t);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topo_order().is_some()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|&(_, t)| t != v)
    }

    /// Connectivity of the underlying unoriented graph (vacuously true for
    /// the empty quiver).
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(s, t) in &self.arrows {
                if s == v && !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
                if t == v && !seen[s] {
                    seen[s] = true;
                    stack.push(s);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Whether the underlying unoriented graph is a simply-laced Dynkin
    /// diagram (A/D/E): connected, no self-loops, and 2·Id − adjacency
    /// positive definite.
    pub fn is_dynkin(&self) -> bool {
        if self.vertex_count == 0 || !self.is_connected() {
            return false;
        }
        if self.arrows.iter().any(|&(s, t)| s == t) {
            return false;
        }
        let n = self.vertex_count;
        let mut sym = IntMatrix::from_fn(n, n, |i, j| if i == j { Int::from(2) } else { Int::zero() });
        for &(s, t) in &self.arrows {
            let v = sym.get(s, t) - Int::one();
            sym.set(s, t, v.clone());
            sym.set(t, s, v);
        }
        // positive definiteness via leading principal minors
        for k in 1..=n {
            let minor = RatMatrix::from_fn(k, k, |i, j| Rat::from_integer(sym.get(i, j).clone()));
            let det = det_exact(&minor);
            if det <= Rat::zero() {
                return false;
            }
        }
        true
    }

    /// Gram matrix of the Euler form of the path algebra:
    /// entry (i,j) = δᵢⱼ − #{arrows i → j}.
    pub fn ringel_form(&self) -> IntMatrix {
        let n = self.vertex_count;
        let mut gram = IntMatrix::identity(n);
        for &(s, t) in &self.arrows {
            let v = gram.get(s, t) - Int::one();
            gram.set(s, t, v);
        }
        gram
    }

    /// All paths of the quiver grouped by (source, target), each path a list
    /// of arrow indices in traversal order. Includes the trivial path at
    /// every vertex. Errors on cyclic quivers (infinitely many paths).
    pub fn paths(&self) -> Result<PathTable, QuiverError> {
        if !self.is_acyclic() {
            return Err(QuiverError::CyclicUnsupported);
        }
        let n = self.vertex_count;
        let mut table = vec![vec![Vec::new(); n]; n];
        for v in 0..n {
            // DFS over extensions; deterministic by arrow index order.
            let mut stack: Vec<(usize, Vec<usize>)> = vec![(v, Vec::new())];
            while let Some((end, path)) = stack.pop() {
                table[v][end].push(path.clone());
                for (idx, &(s, t)) in self.arrows.iter().enumerate() {
                    if s == end {
                        let mut longer = path.clone();
                        longer.push(idx);
                        stack.push((t, longer));
                    }
                }
            }
            for end in 0..n {
                // canonical order: by length, then lexicographic arrow list
                table[v][end].sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
            }
        }
        Ok(PathTable { table })
    }
}

/// Paths of an acyclic quiver indexed by (source, target).
pub struct PathTable {
    /// table[source][target] = list of arrow-index sequences
    table: Vec<Vec<Vec<Vec<usize>>>>,
}

impl PathTable {
    pub fn between(&self, source: usize, target: usize) -> &[Vec<usize>] {
        &self.table[source][target]
    }
}

fn det_exact(m: &RatMatrix) -> Rat {
    // determinant via fraction-free elimination on a clone; desk scale
    let n = m.rows();
    let mut a = m.clone();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            det = -det;
            for j in 0..n {
                let tmp = a.get(c, j).clone();
                a.set(c, j, a.get(p, j).clone());
                a.set(p, j, tmp);
            }
        }
        det *= a.get(c, c);
        let inv = a.get(c, c).recip();
        for i in c + 1..n {
            let f = a.get(i, c) * &inv;
            if f.is_zero() {
                continue;
            }
            for j in c..n {
                let v = a.get(i, j) - &f * a.get(c, j);
                a.set(i, j, v);
            }
        }
    }
    det
}

/// A finite-dimensional representation: one Q-vector space per vertex, one
/// matrix per arrow (shape dims[target] × dims[source]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    quiver: Quiver,
    dims: Vec<usize>,
    maps: Vec<RatMatrix>,
}

impl Rep {
    pub fn new(quiver: Quiver, dims: Vec<usize>, maps: Vec<RatMatrix>) -> Result<Self, QuiverError> {
        if dims.len() != quiver.vertex_count() {
            return Err(QuiverError::CountMismatch {
                expected: quiver.vertex_count(),
                got: dims.len(),
            });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(QuiverError::CountMismatch {
                expected: quiver.arrows().len(),
                got: maps.len(),
            });
        }
        for (idx, (&(s, t), m)) in quiver.arrows().iter().zip(maps.iter()).enumerate() {
            if m.rows() != dims[t] || m.cols() != dims[s] {
                return Err(QuiverError::MapShape {
                    arrow: idx,
                    expected_rows: dims[t],
                    expected_cols: dims[s],
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
        }
        Ok(Rep { quiver, dims, maps })
    }

    /// The zero representation.
    pub fn zero(quiver: Quiver) -> Rep {
        let dims = vec![0; quiver.vertex_count()];
        let maps = quiver.arrows().iter().map(|_| RatMatrix::zeros(0, 0)).collect();
        Rep { quiver, dims, maps }
    }

    /// The simple at vertex v: one-dimensional there, zero elsewhere.
    pub fn simple(quiver: Quiver, v: usize) -> Result<Rep, QuiverError> {
        if v >= quiver.vertex_count() {
            return Err(QuiverError::InvalidArgument(format!("vertex {v} out of range")));
        }
        let mut dims = vec![0; quiver.vertex_count()];
        dims[v] = 1;
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| RatMatrix::zeros(dims[t], dims[s]))
            .collect();
        Rep::new(quiver, dims, maps)
    }

    /// Indecomposable projective at v: basis at vertex w = paths v ⇝ w,
    /// arrows act by postcomposition. Acyclic quivers only.
    pub fn projective(quiver: &Quiver, v: usize) -> Result<Rep, QuiverError> {
        let paths = quiver.paths()?;
        let n = quiver.vertex_count();
        if v >= n {
            return Err(QuiverError::InvalidArgument(format!("vertex {v} out of range")));
        }
        let dims: Vec<usize> = (0..n).map(|w| paths.between(v, w).len()).collect();
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(idx, &(s, t))| {
                let from = paths.between(v, s);
                let to = paths.between(v, t);
                RatMatrix::from_fn(to.len(), from.len(), |r, c| {
                    let mut extended = from[c].clone();
                    extended.push(idx);
                    if to[r] == extended {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                })
            })
            .collect();
        Rep::new(quiver.clone(), dims, maps)
    }

    /// Indecomposable injective at v: basis at vertex w = dual paths w ⇝ v,
    /// arrows act by the transpose of precomposition. Acyclic quivers only.
    pub fn injective(quiver: &Quiver, v: usize) -> Result<Rep, QuiverError> {
        let paths = quiver.paths()?;
        let n = quiver.vertex_count();
        if v >= n {
            return Err(QuiverError::InvalidArgument(format!("vertex {v} out of range")));
        }
        let dims: Vec<usize> = (0..n).map(|w| paths.between(w, v).len()).collect();
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(idx, &(s, t))| {
                let from_dual = paths.between(s, v); // basis of the source space (as duals)
                let to_dual = paths.between(t, v);
                // precomposition: (paths t⇝v) → (paths s⇝v), r ↦ r·arrow;
                // the map on duals is its transpose
                RatMatrix::from_fn(to_dual.len(), from_dual.len(), |r, c| {
                    let mut precomposed = vec![idx];
                    precomposed.extend_from_slice(&to_dual[r]);
                    if from_dual[c] == precomposed {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                })
            })
            .collect();
        Rep::new(quiver.clone(), dims, maps)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dims_int(&self) -> Vec<Int> {
        self.dims.iter().map(|&d| Int::from(d)).collect()
    }

    pub fn maps(&self) -> &[RatMatrix] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Direct sum over the same quiver.
    pub fn direct_sum(&self, other: &Rep) -> Result<Rep, QuiverError> {
        if self.quiver != other.quiver {
            return Err(QuiverError::QuiverMismatch);
        }
        let dims: Vec<usize> =
            self.dims.iter().zip(other.dims.iter()).map(|(a, b)| a + b).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(idx, &(s, t))| {
                let (a, b) = (&self.maps[idx], &other.maps[idx]);
                RatMatrix::from_fn(dims[t], dims[s], |i, j| {
                    if i < a.rows() && j < a.cols() {
                        a.get(i, j).clone()
                    } else if i >= a.rows() && j >= a.cols() {
                        b.get(i - a.rows(), j - a.cols()).clone()
                    } else {
                        Rat::zero()
                    }
                })
            })
            .collect();
        Rep::new(self.quiver.clone(), dims, maps)
    }

    /// Nilpotency: every sufficiently long path acts by zero. Tested via the
    /// one-step block endomorphism of ⊕ᵥ Mᵥ. Always true on acyclic quivers.
    pub fn is_nilpotent(&self) -> bool {
        if self.quiver.is_acyclic() {
            return true;
        }
        let total = self.total_dim();
        if total == 0 {
            return true;
        }
        let offsets: Vec<usize> = self
            .dims
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect();
        let mut step = RatMatrix::zeros(total, total);
        for (idx, &(s, t)) in self.quiver.arrows().iter().enumerate() {
            let m = &self.maps[idx];
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let v = step.get(offsets[t] + i, offsets[s] + j) + m.get(i, j);
                    step.set(offsets[t] + i, offsets[s] + j, v);
                }
            }
        }
        let mut acc = step.clone();
        for _ in 1..total {
            if acc.is_zero() {
                return true;
            }
            acc = acc.mul(&step);
        }
        acc.is_zero()
    }
}

/// Solve A·X = B columnwise, panicking if inconsistent (used where exactness
/// guarantees solvability).
pub(crate) fn solve_through(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    assert_eq!(a.rows(), b.rows(), "shape mismatch in solve_through");
    let mut out = RatMatrix::zeros(a.cols(), b.cols());
    for j in 0..b.cols() {
        let col: Vec<Rat> = (0..b.rows()).map(|i| b.get(i, j).clone()).collect();
        let x = a.solve(&col).expect("system is consistent by construction");
        for i in 0..a.cols() {
            out.set(i, j, x[i].clone());
        }
    }
    out
}

/// Kronecker product A ⊗ B.
pub(crate) fn kron(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    RatMatrix::from_fn(a.rows() * b.rows(), a.cols() * b.cols(), |i, j| {
        let (ai, bi) = (i / b.rows(), i % b.rows());
        let (aj, bj) = (j / b.cols(), j % b.cols());
        a.get(ai, aj) * b.get(bi, bj)
    })
}
