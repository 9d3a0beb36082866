//! Completion of an exceptional sequence to a tilting object.
//!
//! Given a full exceptional sequence (E₁,…,Eₙ), the summands of the tilting
//! object are built left to right: F₁ = E₁, and F_{k+1} is obtained from
//! E_{k+1} by repeatedly forming the universal extension
//!
//!   0 → cur → X → F_t^m → 0,   m = dim Ext¹(F_t, cur),
//!
//! against each earlier summand. Killing Ext¹(F_t, −) this way is permanent:
//! for s ≠ t the connecting sequence for Hom(F_t, −) shows Ext¹(F_t, X)
//! vanishes once Ext¹(F_t, cur) does, because Ext¹(F_t, F_s) = 0 already
//! holds among earlier summands. The result is therefore independent of the
//! processing order, and all postconditions are re-verified explicitly.

use super::homext::{hom_ext, is_exceptional};
use super::{QuiverError, Rep};
use crate::exact::{Int, Rat, RatMatrix};

/// The universal extension 0 → base → X → by^m → 0 along the given Ext¹
/// cocycle basis (one cocycle per copy of `by`).
pub fn universal_extension(
    base: &Rep,
    by: &Rep,
    cocycles: &[Vec<RatMatrix>],
) -> Result<Rep, QuiverError> {
    let q = base.quiver().clone();
    let m = cocycles.len();
    let dims: Vec<usize> = (0..q.vertex_count())
        .map(|v| base.dims()[v] + m * by.dims()[v])
        .collect();
    let mut maps = Vec::with_capacity(q.arrows().len());
    for (aidx, &(s, t)) in q.arrows().iter().enumerate() {
        let (bs, bt) = (base.dims()[s], base.dims()[t]);
        let (ys, yt) = (by.dims()[s], by.dims()[t]);
        let mut x = RatMatrix::zeros(bt + m * yt, bs + m * ys);
        // top-left: the base map
        for i in 0..bt {
            for j in 0..bs {
                x.set(i, j, base.maps()[aidx].get(i, j).clone());
            }
        }
        // top-right: one cocycle block per copy
        for (c, cocycle) in cocycles.iter().enumerate() {
            let z = &cocycle[aidx];
            debug_assert_eq!((z.rows(), z.cols()), (bt, ys));
            for i in 0..bt {
                for j in 0..ys {
                    x.set(i, bs + c * ys + j, z.get(i, j).clone());
                }
            }
        }
        // bottom-right: diagonal copies of the `by` map
        for c in 0..m {
            for i in 0..yt {
                for j in 0..ys {
                    x.set(bt + c * yt + i, bs + c * ys + j, by.maps()[aidx].get(i, j).clone());
                }
            }
        }
        maps.push(x);
    }
    Rep::new(q, dims, maps)
}

/// Convert an exceptional sequence into the summands of a tilting object.
///
/// Validates the sequence (each term exceptional; Hom and Ext¹ vanish from
/// later terms to earlier ones), then iteratively closes each term under
/// extensions by the earlier summands. Returns the summands F₁,…,Fₙ with
/// Ext¹(Fᵢ, Fⱼ) = 0 in both directions and linearly independent classes, so
/// ⊕Fᵢ is a tilting object with exactly n pairwise non-isomorphic
/// indecomposable summands. An individual Fᵢ may itself be decomposable:
/// a universal extension middle term can split off copies of summands that
/// are already present elsewhere in the list.
pub fn tilting_from_sequence(seq: &[Rep]) -> Result<Vec<Rep>, QuiverError> {
    if seq.is_empty() {
        return Err(QuiverError::InvalidArgument("empty sequence".into()));
    }
    let q = seq[0].quiver();
    for e in seq {
        if e.quiver() != q {
            return Err(QuiverError::QuiverMismatch);
        }
    }
    for (i, e) in seq.iter().enumerate() {
        if !is_exceptional(e)? {
            return Err(QuiverError::NotExceptionalSequence(format!(
                "term {i} is not exceptional"
            )));
        }
        for (j, f) in seq.iter().enumerate().take(i) {
            let back = hom_ext(e, f)?;
            if back.hom_dim != 0 || back.ext_dim != 0 {
                return Err(QuiverError::NotExceptionalSequence(format!(
                    "Hom/Ext from term {i} back to term {j} is nonzero"
                )));
            }
        }
    }

    let mut summands: Vec<Rep> = Vec::with_capacity(seq.len());
    for e in seq {
        let mut cur = e.clone();
        for f in &summands {
            let he = hom_ext(f, &cur)?;
            if he.ext_dim > 0 {
                cur = universal_extension(&cur, f, &he.ext_cocycles)?;
            }
        }
        summands.push(cur);
    }

    // Postconditions. Ext¹ must vanish between all ordered pairs of
    // summands (including self-extensions), making the direct sum rigid.
    for f in &summands {
        for g in &summands {
            if hom_ext(f, g)?.ext_dim != 0 {
                return Err(QuiverError::ConstructionFailed(
                    "extensions between summands remain".into(),
                ));
            }
        }
    }
    // The classes [F₁],…,[Fₙ] must be linearly independent. A rigid module
    // over a hereditary algebra has at most n pairwise non-isomorphic
    // indecomposable summands, and every [Fᵢ] lies in the span of those
    // summand classes; n independent classes therefore force exactly n
    // distinct indecomposables in ⊕Fᵢ, which is the tilting property.
    let class_matrix = RatMatrix::from_fn(summands.len(), q.vertex_count(), |i, j| {
        Rat::from_integer(Int::from(summands[i].dims()[j] as i64))
    });
    if class_matrix.rank() != summands.len() {
        return Err(QuiverError::ConstructionFailed(
            "summand classes are linearly dependent".into(),
        ));
    }
    Ok(summands)
}
