//! Search for the indecomposable with the fewest self-extensions.
//!
//! Over a Dynkin quiver or inside a tube, scanning all indecomposables up to
//! a size bound always lands on an object that is either exceptional
//! (End ≅ ℚ, no self-extensions) or 1-spherical (End ≅ ℚ, one self-extension,
//! fixed by τ). The search reports the minimizer together with which side of
//! the dichotomy it satisfies.

use crate::quiver::{enumerate_indecomposables, hom_ext, Quiver, QuiverError, Rep};
use crate::tube::{tau, tube_hom, TubeError, TubeObject};

/// Errors from the minimal-self-extension search.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Tube(#[from] TubeError),
    #[error("search postcondition failed: {0}")]
    DichotomyFailed(String),
}

/// What to search: the module category of a Dynkin quiver, or a rank-r tube.
#[derive(Debug, Clone)]
pub enum SearchDomain {
    Dynkin(Quiver),
    Tube { rank: usize },
}

/// The minimizer found by [`min_self_ext_search`].
#[derive(Debug, Clone)]
pub enum MinExtWitness {
    QuiverRep(Rep),
    TubeObject(TubeObject),
}

/// Search outcome: the minimizing object with its Hom/Ext profile and the
/// side of the exceptional/1-spherical dichotomy it realizes.
#[derive(Debug, Clone)]
pub struct MinExtResult {
    pub witness: MinExtWitness,
    pub hom_dim: usize,
    pub ext_dim: usize,
    pub exceptional: bool,
    pub spherical: bool,
}

/// Scan the indecomposables of the domain (dimension entries ≤ `bound` for
/// quivers, length ≤ `bound` in tubes) and return the first object with
/// minimal dim Ext¹(X,X), verifying the dichotomy postcondition.
pub fn min_self_ext_search(domain: &SearchDomain, bound: usize) -> Result<MinExtResult, SearchError> {
    match domain {
        SearchDomain::Dynkin(q) => {
            let mut best: Option<(usize, usize, Rep)> = None;
            for m in enumerate_indecomposables(q, bound.max(1))? {
                let he = hom_ext(&m, &m)?;
                if best.as_ref().is_none_or(|b| he.ext_dim < b.1) {
                    best = Some((he.hom_dim, he.ext_dim, m));
                }
            }
            let (hom_dim, ext_dim, m) = best.ok_or_else(|| {
                SearchError::DichotomyFailed("no indecomposables within the bound".into())
            })?;
            let exceptional = hom_dim == 1 && ext_dim == 0;
            finish(MinExtWitness::QuiverRep(m), hom_dim, ext_dim, exceptional, false)
        }
        SearchDomain::Tube { rank } => {
            if *rank == 0 {
                return Err(TubeError::InvalidObject("rank must be at least 1".into()).into());
            }
            let mut best: Option<(usize, usize, TubeObject)> = None;
            for length in 1..=bound.max(1) {
                for base in 0..*rank {
                    let x = TubeObject::new(*rank, base, length)?;
                    let (h, e) = tube_hom(&x, &x)?;
                    if best.as_ref().is_none_or(|b| e < b.1) {
                        best = Some((h, e, x));
                    }
                }
            }
            let (hom_dim, ext_dim, x) =
                best.expect("tube scan covers at least one object");
            let exceptional = hom_dim == 1 && ext_dim == 0;
            let spherical = hom_dim == 1 && ext_dim == 1 && tau(&x) == x;
            finish(MinExtWitness::TubeObject(x), hom_dim, ext_dim, exceptional, spherical)
        }
    }
}

fn finish(
    witness: MinExtWitness,
    hom_dim: usize,
    ext_dim: usize,
    exceptional: bool,
    spherical: bool,
) -> Result<MinExtResult, SearchError> {
    if !exceptional && !spherical {
        return Err(SearchError::DichotomyFailed(format!(
            "minimizer has (hom, ext) = ({hom_dim}, {ext_dim}) and is neither exceptional nor 1-spherical"
        )));
    }
    Ok(MinExtResult { witness, hom_dim, ext_dim, exceptional, spherical })
}
