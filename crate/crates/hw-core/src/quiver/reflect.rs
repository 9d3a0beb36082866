//! BGP reflection functors at a sink or source.
//!
//! At a sink v the reflected space is the kernel of the assembled map
//! ⊕_{a:w→v} M_w → M_v (which must be surjective — failure means the simple
//! at v splits off); at a source it is the cokernel of M_v → ⊕_{a:v→w} M_w
//! (which must be injective). Arrows at v are reversed; dimension vectors
//! transform by the simple reflection s_v.

use super::{Quiver, QuiverError, Rep};
use crate::exact::RatMatrix;

/// Reflect the representation at a sink or source vertex, returning the
/// reflected quiver and representation.
pub fn reflect(q: &Quiver, m: &Rep, v: usize) -> Result<(Quiver, Rep), QuiverError> {
    if m.quiver() != q {
        return Err(QuiverError::QuiverMismatch);
    }
    if v >= q.vertex_count() {
        return Err(QuiverError::InvalidArgument(format!("vertex {v} out of range")));
    }
    let touching: Vec<usize> = q
        .arrows()
        .iter()
        .enumerate()
        .filter(|&(_, &(s, t))| s == v || t == v)
        .map(|(i, _)| i)
        .collect();
    let has_loop = q.arrows().iter().any(|&(s, t)| s == v && t == v);
    let is_sink = !has_loop && q.is_sink(v);
    let is_source = !has_loop && q.is_source(v);
    if !is_sink && !is_source {
        return Err(QuiverError::NotSinkOrSource(v));
    }

    let reversed = Quiver::new(
        q.vertex_count(),
        q.arrows()
            .iter()
            .map(|&(s, t)| if s == v || t == v { (t, s) } else { (s, t) })
            .collect(),
    )
    .expect("reversing arrows preserves vertex range");

    let mut dims = m.dims().to_vec();
    let mut maps = m.maps().to_vec();

    if is_sink {
        // ψ: ⊕_{a:w→v} M_w → M_v as a block row in arrow-index order
        let block_cols: Vec<usize> = touching.iter().map(|&a| m.dims()[q.arrows()[a].0]).collect();
        let total: usize = block_cols.iter().sum();
        let mut psi = RatMatrix::zeros(m.dims()[v], total);
        let mut off = 0;
        for (bi, &a) in touching.iter().enumerate() {
            let blk = &m.maps()[a];
            for i in 0..blk.rows() {
                for j in 0..blk.cols() {
                    psi.set(i, off + j, blk.get(i, j).clone());
                }
            }
            off += block_cols[bi];
        }
        if psi.rank() != m.dims()[v] {
            return Err(QuiverError::SimpleSummandAtVertex(v));
        }
        let kernel = psi.right_kernel();
        let new_dim = kernel.len();
        dims[v] = new_dim;
        // reversed arrow a: v→w picks the w-block rows of the kernel basis
        let mut off = 0;
        for (bi, &a) in touching.iter().enumerate() {
            let w_dim = block_cols[bi];
            maps[a] = RatMatrix::from_fn(w_dim, new_dim, |i, j| kernel[j][off + i].clone());
            off += w_dim;
        }
    } else {
        // φ: M_v → ⊕_{a:v→w} M_w as a block column in arrow-index order
        let block_rows: Vec<usize> = touching.iter().map(|&a| m.dims()[q.arrows()[a].1]).collect();
        let total: usize = block_rows.iter().sum();
        let mut phi = RatMatrix::zeros(total, m.dims()[v]);
        let mut off = 0;
        for (bi, &a) in touching.iter().enumerate() {
            let blk = &m.maps()[a];
            for i in 0..blk.rows() {
                for j in 0..blk.cols() {
                    phi.set(off + i, j, blk.get(i, j).clone());
                }
            }
            off += block_rows[bi];
        }
        if phi.rank() != m.dims()[v] {
            return Err(QuiverError::SimpleSummandAtVertex(v));
        }
        // cokernel projection: rows spanning the left kernel of φ
        let left = phi.transpose().right_kernel();
        let new_dim = left.len();
        dims[v] = new_dim;
        // reversed arrow a: w→v is the w-block of the projection
        let mut off = 0;
        for (bi, &a) in touching.iter().enumerate() {
            let w_dim = block_rows[bi];
            maps[a] = RatMatrix::from_fn(new_dim, w_dim, |i, j| left[i][off + j].clone());
            off += w_dim;
        }
    }

    let rep = Rep::new(reversed.clone(), dims, maps)?;
    Ok((reversed, rep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::homext::hom_ext;

    #[test]
    fn sink_reflection_on_chain() {
        // 0→1, reflect at sink 1: P_0 = (1,1,id) goes to dims (1,0)
        let q = Quiver::linear(2);
        let p0 = Rep::projective(&q, 0).unwrap();
        let (rq, rrep) = reflect(&q, &p0, 1).unwrap();
        assert_eq!(rq.arrows(), &[(1, 0)]);
        assert_eq!(rrep.dims(), &[1, 0]);
        // S_0 (no arrows into its support): dims s_1(1,0) = (1,1)
        let s0 = Rep::simple(q.clone(), 0).unwrap();
        let (_, r) = reflect(&q, &s0, 1).unwrap();
        assert_eq!(r.dims(), &[1, 1]);
        // the reflected rep of S_0 is indecomposable (it is the projective
        // cover over the reversed quiver)
        assert!(crate::quiver::homext::indecomposable(&r).unwrap());
    }

    #[test]
    fn simple_summand_is_detected() {
        let q = Quiver::linear(2);
        let s1 = Rep::simple(q.clone(), 1).unwrap();
        assert!(matches!(reflect(&q, &s1, 1), Err(QuiverError::SimpleSummandAtVertex(1))));
        let s0 = Rep::simple(q.clone(), 0).unwrap();
        assert!(matches!(reflect(&q, &s0, 0), Err(QuiverError::SimpleSummandAtVertex(0))));
        // interior vertex of a 3-chain is neither sink nor source
        let q3 = Quiver::linear(3);
        let s = Rep::simple(q3.clone(), 0).unwrap();
        assert!(matches!(reflect(&q3, &s, 1), Err(QuiverError::NotSinkOrSource(1))));
    }

    #[test]
    fn double_reflection_restores_profile() {
        let q = Quiver::linear(2);
        let p0 = Rep::projective(&q, 0).unwrap();
        let (rq, r1) = reflect(&q, &p0, 1).unwrap();
        let (rq2, r2) = reflect(&rq, &r1, 1).unwrap();
        assert_eq!(rq2, q);
        assert_eq!(r2.dims(), p0.dims());
        // hom/ext profile against the simples is restored
        for v in 0..2 {
            let s = Rep::simple(q.clone(), v).unwrap();
            let a = hom_ext(&p0, &s).unwrap();
            let b = hom_ext(&r2, &s).unwrap();
            assert_eq!((a.hom_dim, a.ext_dim), (b.hom_dim, b.ext_dim));
        }
    }

    #[test]
    fn source_reflection_on_chain() {
        // 0→1, vertex 0 is a source. P_0 = (1,1,id): φ = id is injective with
        // zero cokernel, so the reflected dims are s_0(1,1) = (0,1).
        let q = Quiver::linear(2);
        let p0 = Rep::projective(&q, 0).unwrap();
        let (rq, r) = reflect(&q, &p0, 0).unwrap();
        assert_eq!(rq.arrows(), &[(1, 0)]);
        assert_eq!(r.dims(), &[0, 1]);
        // the simple at a source is rejected
        let s1 = Rep::simple(Quiver::star_d4(), 1).unwrap();
        assert!(matches!(
            reflect(&Quiver::star_d4(), &s1, 1),
            Err(QuiverError::SimpleSummandAtVertex(1))
        ));
    }

    #[test]
    fn star_center_reflection_dims() {
        // D4 with all arrows into center 0: reflect the indecomposable
        // projective P_1 = (1,1,0,0) at the sink 0. s_0(1,1,0,0) = (0,1,0,0).
        let q = Quiver::star_d4();
        let p1 = Rep::projective(&q, 1).unwrap();
        assert_eq!(p1.dims(), &[1, 1, 0, 0]);
        let (rq, r) = reflect(&q, &p1, 0).unwrap();
        assert_eq!(r.dims(), &[0, 1, 0, 0]);
        assert!(rq.arrows().iter().all(|&(s, _)| s == 0));
    }
}
