//! Combinatorial model of a tube of rank r: the nilpotent indecomposable
//! representations of the cyclic quiver 0 → 1 → ⋯ → r−1 → 0.
//!
//! An object is coordinatized by `(rank, base, length)` where `base` is the
//! vertex of the socle simple. The string basis z₀,…,z_{ℓ−1} places z_k at
//! vertex base−k (mod r) with the arrows acting by z_k ↦ z_{k−1}, z₀ ↦ 0, so
//! the socle is span(z₀). Matrix realizations are built only when an exact
//! Hom/Ext computation is needed; everything else is index bookkeeping.
//!
//! Convention note: with arrows i → i+1 and `base` marking the socle, the
//! translate must shift the base *up* by one — this is pinned by the Serre
//! identity ext(x,y) = hom(y, τx), which fails (e.g. ext(S₀,S₁) = 1 against
//! hom(S₁, S₂) = 0 at rank 3) for the opposite shift.

use crate::exact::{int, Int, RatMatrix};
use crate::klattice::EulerLattice;
use crate::quiver::{hom_ext, Quiver, Rep};

/// Errors from tube-level operations.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum TubeError {
    #[error("tube objects have different ranks: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("invalid tube object: {0}")]
    InvalidObject(String),
}

/// An indecomposable object of the rank-r tube: socle vertex `base`,
/// composition length `length`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TubeObject {
    rank: usize,
    base: usize,
    length: usize,
}

impl TubeObject {
    pub fn new(rank: usize, base: usize, length: usize) -> Result<Self, TubeError> {
        if rank == 0 {
            return Err(TubeError::InvalidObject("rank must be at least 1".into()));
        }
        if base >= rank {
            return Err(TubeError::InvalidObject(format!(
                "base {base} out of range for rank {rank}"
            )));
        }
        if length == 0 {
            return Err(TubeError::InvalidObject("length must be at least 1".into()));
        }
        Ok(TubeObject { rank, base, length })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Vertex of the k-th string basis element (k = 0 is the socle).
    fn vertex_of(&self, k: usize) -> usize {
        (self.base + self.rank - (k % self.rank)) % self.rank
    }

    /// Class in K₀ of the cyclic quiver: multiplicity of each simple in the
    /// composition series.
    pub fn class_vector(&self) -> Vec<Int> {
        let mut v = vec![int(0); self.rank];
        for k in 0..self.length {
            v[self.vertex_of(k)] += int(1);
        }
        v
    }
}

/// Explicit nilpotent representation of the cyclic quiver with the given
/// string structure; all matrix entries are 0 or 1.
pub fn realize(x: &TubeObject) -> Rep {
    let r = x.rank;
    let q = Quiver::cyclic(r);
    // basis elements at each vertex, listed by ascending string index k
    let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); r];
    for k in 0..x.length {
        at_vertex[x.vertex_of(k)].push(k);
    }
    let dims: Vec<usize> = at_vertex.iter().map(Vec::len).collect();
    let local = |k: usize| -> usize {
        at_vertex[x.vertex_of(k)].iter().position(|&j| j == k).expect("basis element is listed")
    };
    // arrow v → v+1 sends z_k at v to z_{k−1} at v+1 (and z₀ to 0)
    let maps: Vec<RatMatrix> = (0..r)
        .map(|v| {
            let (s, t) = (v, (v + 1) % r);
            let mut m = RatMatrix::zeros(dims[t], dims[s]);
            for &k in &at_vertex[s] {
                if k == 0 {
                    continue;
                }
                m.set(local(k - 1), local(k), crate::exact::rat_int(1));
            }
            m
        })
        .collect();
    Rep::new(q, dims, maps).expect("string data is shape-consistent")
}

/// Exact (dim Hom, dim Ext¹) between two tube objects of the same rank.
pub fn tube_hom(x: &TubeObject, y: &TubeObject) -> Result<(usize, usize), TubeError> {
    if x.rank != y.rank {
        return Err(TubeError::RankMismatch { left: x.rank, right: y.rank });
    }
    let he = hom_ext(&realize(x), &realize(y))
        .expect("realized tube objects are nilpotent over a shared quiver");
    Ok((he.hom_dim, he.ext_dim))
}

/// The Auslander–Reiten translate: shifts the socle one step up the cycle.
/// τ^r is the identity on objects.
pub fn tau(x: &TubeObject) -> TubeObject {
    TubeObject { rank: x.rank, base: (x.base + 1) % x.rank, length: x.length }
}

/// The r peripheral (length-1) objects of the rank-r tube, whose direct sum
/// is a minimal 1-spherical object. Verifies the defining dimension counts:
/// the hom matrix totals r with ext the τ-twisted transpose, and τ permutes
/// the list.
pub fn minimal_spherical(r: usize) -> Result<Vec<TubeObject>, TubeError> {
    if r == 0 {
        return Err(TubeError::InvalidObject("rank must be at least 1".into()));
    }
    let objs: Vec<TubeObject> =
        (0..r).map(|b| TubeObject::new(r, b, 1).expect("peripheral data is valid")).collect();
    let mut hom = vec![vec![0usize; r]; r];
    let mut ext = vec![vec![0usize; r]; r];
    for i in 0..r {
        for j in 0..r {
            let (h, e) = tube_hom(&objs[i], &objs[j])?;
            hom[i][j] = h;
            ext[i][j] = e;
        }
    }
    let hom_total: usize = hom.iter().flatten().sum();
    let ext_total: usize = ext.iter().flatten().sum();
    assert_eq!(hom_total, r, "endomorphism algebra of the peripheral sum must have dimension r");
    assert_eq!(ext_total, r, "self-extensions of the peripheral sum must have dimension r");
    for i in 0..r {
        let ti = (i + 1) % r;
        assert!(objs.contains(&tau(&objs[i])), "translate must permute the peripheral objects");
        for j in 0..r {
            assert_eq!(ext[i][j], hom[j][ti], "ext must be the τ-twisted transpose of hom");
        }
    }
    Ok(objs)
}

/// The Euler lattice of the rank-r tube: Gram entries δᵢⱼ − δ_{i+1 mod r, j}
/// (the bilinear form of the cyclic quiver on composition-series classes).
/// Its radical is spanned by (1,…,1).
pub fn tube_lattice(r: usize) -> Result<EulerLattice, TubeError> {
    if r == 0 {
        return Err(TubeError::InvalidObject("rank must be at least 1".into()));
    }
    let lat = EulerLattice::new(Quiver::cyclic(r).ringel_form())
        .expect("Gram matrix is square")
        .with_labels((0..r).map(|i| format!("S{i}")).collect())
        .expect("one label per basis vector");
    Ok(lat)
}
