//! Auslander–Reiten translate over acyclic quivers.
//!
//! τM is computed from the canonical projective presentation
//!   0 → ⊕_{a:i→j} P_j ⊗ M_i --f--> ⊕ᵥ P_v ⊗ M_v → M → 0
//! by applying the Nakayama functor ν (P_v ↦ I_v on objects, dual of path
//! multiplication on morphisms between projectives) and taking the kernel:
//! τM = ker(νf). This is D Tr M expressed without leaving the category of
//! representations. Over a hereditary algebra the presentation need not be
//! minimal: a redundant projective summand P appears in both terms and ν
//! keeps the extra νP component split, so it cancels inside the kernel. The
//! dimension law dims(τM) = C·dims(M) for non-projective indecomposables is
//! asserted in the tests.

use super::{homext::summand_multiplicity, kron, solve_through, Quiver, QuiverError, Rep};
use crate::exact::{Rat, RatMatrix};
use num_traits::{One, Zero};

/// ψ-block of ν applied to the canonical map between projectives: the
/// morphism I_{t(a)} → I_{s(a)} at vertex w is the transpose of
/// "append arrow a": paths(w⇝s(a)) → paths(w⇝t(a)).
fn nu_arrow_block(
    q: &Quiver,
    paths: &super::PathTable,
    arrow: usize,
    w: usize,
) -> RatMatrix {
    let (s, t) = q.arrows()[arrow];
    let rows = paths.between(w, s);
    let cols = paths.between(w, t);
    RatMatrix::from_fn(rows.len(), cols.len(), |r, c| {
        let mut appended = rows[r].clone();
        appended.push(arrow);
        if cols[c] == appended {
            Rat::one()
        } else {
            Rat::zero()
        }
    })
}

/// AR translate τM for a representation of an acyclic quiver with no
/// projective direct summands.
pub fn ar_translate(m: &Rep) -> Result<Rep, QuiverError> {
    let q = m.quiver().clone();
    if !q.is_acyclic() {
        return Err(QuiverError::CyclicUnsupported);
    }
    if m.is_zero() {
        return Ok(Rep::zero(q));
    }
    // Reject projective summands: P_v is a summand iff the composition
    // pairing Hom(P_v,M) × Hom(M,P_v) → End(P_v) = Q is nonzero.
    for v in 0..q.vertex_count() {
        let pv = Rep::projective(&q, v)?;
        if summand_multiplicity(&pv, m)? > 0 {
            return Err(QuiverError::NotTranslatable);
        }
    }

    let paths = q.paths()?;
    let n = q.vertex_count();
    let injectives: Vec<Rep> = (0..n).map(|v| Rep::injective(&q, v)).collect::<Result<_, _>>()?;

    // Layouts of νP₀ = ⊕_v I_v ⊗ M_v and νP₁ = ⊕_a I_{t(a)} ⊗ M_{s(a)}
    // at each vertex w.
    let p0_dim = |w: usize, v: usize| injectives[v].dims()[w] * m.dims()[v];
    let p1_dim =
        |w: usize, a: usize| injectives[q.arrows()[a].1].dims()[w] * m.dims()[q.arrows()[a].0];

    let mut kernels: Vec<RatMatrix> = Vec::with_capacity(n); // columns = τM basis at w
    let mut dims = Vec::with_capacity(n);
    for w in 0..n {
        let row_sizes: Vec<usize> = (0..n).map(|v| p0_dim(w, v)).collect();
        let col_sizes: Vec<usize> = (0..q.arrows().len()).map(|a| p1_dim(w, a)).collect();
        let row_off = offsets(&row_sizes);
        let col_off = offsets(&col_sizes);
        let mut f = RatMatrix::zeros(row_sizes.iter().sum(), col_sizes.iter().sum());
        for (aidx, &(i, j)) in q.arrows().iter().enumerate() {
            // component into the i-block: ν(append a) ⊗ Id_{M_i}
            let psi = nu_arrow_block(&q, &paths, aidx, w);
            let id_mi = RatMatrix::identity(m.dims()[i]);
            place(&mut f, row_off[i], col_off[aidx], &kron(&psi, &id_mi));
            // component into the j-block: −Id_{(I_j)_w} ⊗ M_a
            let idp = RatMatrix::identity(injectives[j].dims()[w]);
            place(&mut f, row_off[j], col_off[aidx], &kron(&idp, &m.maps()[aidx]).neg());
        }
        let basis = f.right_kernel();
        let k = RatMatrix::from_fn(f.cols(), basis.len(), |i, jj| basis[jj][i].clone());
        dims.push(basis.len());
        kernels.push(k);
    }

    // Arrow maps of νP₁ restricted to the kernels.
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(bidx, &(w, wp))| {
            let col_sizes_w: Vec<usize> = (0..q.arrows().len()).map(|a| p1_dim(w, a)).collect();
            let col_sizes_wp: Vec<usize> = (0..q.arrows().len()).map(|a| p1_dim(wp, a)).collect();
            let off_w = offsets(&col_sizes_w);
            let off_wp = offsets(&col_sizes_wp);
            let mut big =
                RatMatrix::zeros(col_sizes_wp.iter().sum(), col_sizes_w.iter().sum());
            for (aidx, &(i, j)) in q.arrows().iter().enumerate() {
                let inj_block = &injectives[j].maps()[bidx]; // (I_j)_w → (I_j)_{w'}
                let id_mi = RatMatrix::identity(m.dims()[i]);
                place(&mut big, off_wp[aidx], off_w[aidx], &kron(inj_block, &id_mi));
            }
            solve_through(&kernels[wp], &big.mul(&kernels[w]))
        })
        .collect();

    Rep::new(q, dims, maps)
}

fn offsets(sizes: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        out.push(acc);
        acc += s;
    }
    out
}

fn place(dst: &mut RatMatrix, r0: usize, c0: usize, block: &RatMatrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            if !block.get(i, j).is_zero() {
                let v = dst.get(r0 + i, c0 + j) + block.get(i, j);
                dst.set(r0 + i, c0 + j, v);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::homext::iso_indecomposables;

    #[test]
    fn translate_on_two_vertex_chain() {
        // 0→1: τS_0 = S_1 (the AR sequence is 0→S_1→P_0→S_0→0)
        let q = Quiver::linear(2);
        let s0 = Rep::simple(q.clone(), 0).unwrap();
        let tau = ar_translate(&s0).unwrap();
        assert_eq!(tau.dims(), &[0, 1]);
        let s1 = Rep::simple(q, 1).unwrap();
        assert!(iso_indecomposables(&tau, &s1).unwrap());
    }

    #[test]
    fn translate_on_opposite_orientation() {
        // 1→0 (reversed chain): S_1 is non-projective there, τS_1 = S_0
        let q = Quiver::new(2, vec![(1, 0)]).unwrap();
        let s1 = Rep::simple(q.clone(), 1).unwrap();
        let tau = ar_translate(&s1).unwrap();
        assert_eq!(tau.dims(), &[1, 0]);
    }

    #[test]
    fn projectives_are_rejected() {
        let q = Quiver::linear(3);
        let p0 = Rep::projective(&q, 0).unwrap(); // dims (1,1,1)
        assert!(matches!(ar_translate(&p0), Err(QuiverError::NotTranslatable)));
        // a rep with a projective summand is rejected too
        let s0 = Rep::simple(q.clone(), 0).unwrap();
        let mixed = p0.direct_sum(&s0).unwrap();
        assert!(matches!(ar_translate(&mixed), Err(QuiverError::NotTranslatable)));
        // cyclic quivers are out of scope here
        let j1 = Rep::new(Quiver::cyclic(1), vec![1], vec![RatMatrix::zeros(1, 1)]).unwrap();
        assert!(matches!(ar_translate(&j1), Err(QuiverError::CyclicUnsupported)));
    }

    #[test]
    fn dimension_law_on_three_chain() {
        // linear 0→1→2: τ shifts interval modules [i,j] ↦ [i+1,j+1]
        let q = Quiver::linear(3);
        let s0 = Rep::simple(q.clone(), 0).unwrap();
        assert_eq!(ar_translate(&s0).unwrap().dims(), &[0, 1, 0]);
        let s1 = Rep::simple(q.clone(), 1).unwrap();
        assert_eq!(ar_translate(&s1).unwrap().dims(), &[0, 0, 1]);
        // the interval [0,1] (dims (1,1,0), identity on the first arrow)
        let m01 = Rep::new(
            q,
            vec![1, 1, 0],
            vec![RatMatrix::identity(1), RatMatrix::zeros(0, 1)],
        )
        .unwrap();
        assert_eq!(ar_translate(&m01).unwrap().dims(), &[0, 1, 1]);
    }

    #[test]
    fn dimension_law_matches_coxeter() {
        let q = Quiver::linear(3);
        let lat = crate::klattice::EulerLattice::new(q.ringel_form()).unwrap();
        let c = lat.coxeter().unwrap();
        for (dims, maps) in [
            (vec![1, 0, 0], vec![RatMatrix::zeros(0, 1), RatMatrix::zeros(0, 0)]),
            (vec![0, 1, 0], vec![RatMatrix::zeros(1, 0), RatMatrix::zeros(0, 1)]),
            (vec![1, 1, 0], vec![RatMatrix::identity(1), RatMatrix::zeros(0, 1)]),
        ] {
            let m = Rep::new(q.clone(), dims, maps).unwrap();
            let tau = ar_translate(&m).unwrap();
            assert_eq!(tau.dims_int(), c.mul_vec(&m.dims_int()));
        }
    }
}
