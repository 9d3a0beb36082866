//! K-theoretic consistency reports for category descriptors.
//!
//! A [`CategoryDescriptor`] names a category whose numerical Grothendieck
//! lattice is known in closed form: modules over an acyclic quiver, a tube of
//! rank r, coherent sheaves on a smooth curve of genus g, or a finite direct
//! sum of these. [`classify`] builds the lattice, passes to the numerical
//! quotient, scans small classes for exceptional (χ(v,v) = 1) and
//! Coxeter-fixed isotropic (χ(v,v) = 0, Cv = v) vectors, and cross-checks the
//! resulting flags against what the branch demands. The descriptor is ground
//! truth, so a failed cross-check is reported as an inconsistency, not a
//! reclassification.

use std::collections::BTreeSet;

use crate::exact::{int, int_right_kernel, lattice_points_in_box, Int, IntMatrix};
use crate::klattice::{curve_lattice, fractional_cy, EulerLattice, FractionalCy, KLatticeError};
use crate::quiver::Quiver;
use crate::tube::{tube_lattice, TubeError};

/// Errors from descriptor classification.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("classification inconsistency: {0}")]
    ClassificationInconsistency(String),
    #[error(transparent)]
    Lattice(#[from] KLatticeError),
}

impl From<TubeError> for ClassifyError {
    fn from(e: TubeError) -> Self {
        ClassifyError::InvalidDescriptor(e.to_string())
    }
}

/// A category with a known numerical K-lattice.
#[derive(Debug, Clone)]
pub enum CategoryDescriptor {
    /// Finite-dimensional modules over the path algebra of an acyclic quiver.
    QuiverCat(Quiver),
    /// A tube of the given rank.
    TubeCat(usize),
    /// Coherent sheaves on a smooth projective curve of the given genus.
    CurveCat(i64),
    /// A finite direct sum of the above.
    DirectSum(Vec<CategoryDescriptor>),
}

/// Which branch of the classification the descriptor exhibits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Tube,
    QuiverRep,
    CurveLike,
    Sum,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Tube => "tube",
            Branch::QuiverRep => "quiver",
            Branch::CurveLike => "curve",
            Branch::Sum => "sum",
        }
    }
}

/// Outcome of [`classify`].
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub num_rank: usize,
    pub serre_ok: bool,
    /// Coxeter transformation on the numerical quotient. For direct sums this
    /// is assembled block-diagonally from the parts (the canonical basis),
    /// and cross-checked against the quotient of the summed lattice.
    pub coxeter: IntMatrix,
    pub branch: Branch,
    pub has_exceptional_class: bool,
    pub has_spherical_class: bool,
    pub fractional_cy: Option<FractionalCy>,
}

/// Assemble the Euler lattice of a descriptor (block-diagonal for sums).
pub fn build_lattice(d: &CategoryDescriptor) -> Result<EulerLattice, ClassifyError> {
    match d {
        CategoryDescriptor::QuiverCat(q) => {
            if !q.is_acyclic() {
                return Err(ClassifyError::InvalidDescriptor(
                    "quiver descriptor requires an acyclic quiver; use a tube descriptor for cyclic ones"
                        .into(),
                ));
            }
            Ok(EulerLattice::new(q.ringel_form())?)
        }
        CategoryDescriptor::TubeCat(r) => Ok(tube_lattice(*r)?),
        CategoryDescriptor::CurveCat(g) => {
            if *g < 0 {
                return Err(ClassifyError::InvalidDescriptor(format!(
                    "genus must be nonnegative, got {g}"
                )));
            }
            Ok(curve_lattice(*g))
        }
        CategoryDescriptor::DirectSum(parts) => {
            if parts.is_empty() {
                return Err(ClassifyError::InvalidDescriptor(
                    "direct sum needs at least one part".into(),
                ));
            }
            let lats: Vec<EulerLattice> =
                parts.iter().map(build_lattice).collect::<Result<_, _>>()?;
            let refs: Vec<&EulerLattice> = lats.iter().collect();
            Ok(EulerLattice::direct_sum(&refs))
        }
    }
}

/// The sets of values χ(v,v) attained on nonzero classes of the numerical
/// lattice within the sup-norm box, and on nonzero Coxeter-fixed classes.
/// For direct sums these compose by Minkowski sum, which matches scanning
/// the product box directly.
struct ScanProfile {
    nonzero: BTreeSet<Int>,
    fixed_nonzero: BTreeSet<Int>,
}

impl ScanProfile {
    fn leaf(num_lat: &EulerLattice, cox: &IntMatrix, bound: i64) -> ScanProfile {
        let n = num_lat.rank();
        let mut nonzero = BTreeSet::new();
        let mut v = vec![-bound; n];
        if n > 0 {
            loop {
                if v.iter().any(|&x| x != 0) {
                    let w: Vec<Int> = v.iter().map(|&x| int(x)).collect();
                    nonzero
                        .insert(num_lat.euler_form(&w, &w).expect("scan vector has lattice rank"));
                }
                let mut pos = n;
                let mut done = true;
                while pos > 0 {
                    pos -= 1;
                    if v[pos] < bound {
                        v[pos] += 1;
                        for x in v.iter_mut().skip(pos + 1) {
                            *x = -bound;
                        }
                        done = false;
                        break;
                    }
                }
                if done {
                    break;
                }
            }
        }
        let fixed_basis = int_right_kernel(&cox.sub(&IntMatrix::identity(n)));
        let mut fixed_nonzero = BTreeSet::new();
        for p in lattice_points_in_box(&fixed_basis, bound) {
            if p.iter().any(|c| c != &Int::from(0)) {
                fixed_nonzero
                    .insert(num_lat.euler_form(&p, &p).expect("fixed point has lattice rank"));
            }
        }
        ScanProfile { nonzero, fixed_nonzero }
    }

    fn compose(&self, other: &ScanProfile) -> ScanProfile {
        let mix = |a: &BTreeSet<Int>, b: &BTreeSet<Int>| {
            let mut out: BTreeSet<Int> = a.union(b).cloned().collect();
            for x in a {
                for y in b {
                    out.insert(x + y);
                }
            }
            out
        };
        ScanProfile {
            nonzero: mix(&self.nonzero, &other.nonzero),
            fixed_nonzero: mix(&self.fixed_nonzero, &other.fixed_nonzero),
        }
    }
}

fn trace(m: &IntMatrix) -> Int {
    (0..m.rows()).map(|i| m.get(i, i).clone()).sum()
}

/// Maximum matrix order probed when searching for a fractional Calabi–Yau
/// identity (−C)^q = ±Id.
const CY_ORDER_BOUND: usize = 64;

struct Analysis {
    report: ClassificationReport,
    profile: ScanProfile,
}

fn analyze(d: &CategoryDescriptor, bound: usize) -> Result<Analysis, ClassifyError> {
    if let CategoryDescriptor::DirectSum(parts) = d {
        if parts.is_empty() {
            return Err(ClassifyError::InvalidDescriptor(
                "direct sum needs at least one part".into(),
            ));
        }
        let analyzed: Vec<Analysis> =
            parts.iter().map(|p| analyze(p, bound)).collect::<Result<_, _>>()?;
        let coxeters: Vec<&IntMatrix> = analyzed.iter().map(|a| &a.report.coxeter).collect();
        let coxeter = IntMatrix::block_diag(&coxeters);
        let mut profile = ScanProfile { nonzero: BTreeSet::new(), fixed_nonzero: BTreeSet::new() };
        for a in &analyzed {
            profile = profile.compose(&a.profile);
        }
        let num_rank: usize = analyzed.iter().map(|a| a.report.num_rank).sum();
        let serre_ok = analyzed.iter().all(|a| a.report.serre_ok);
        // cross-check against the quotient of the assembled lattice: the rank
        // must be additive and the Coxeter conjugate (equal trace)
        let num = build_lattice(d)?.radical_quotient()?;
        if num.num_rank() != num_rank {
            return Err(ClassifyError::ClassificationInconsistency(format!(
                "numerical rank of a direct sum must be additive: parts give {num_rank}, \
                 lattice quotient gives {}",
                num.num_rank()
            )));
        }
        let quotient_cox = num.as_lattice().coxeter()?;
        if trace(&quotient_cox) != trace(&coxeter) {
            return Err(ClassifyError::ClassificationInconsistency(
                "Coxeter of a direct sum is not conjugate to the blocks of its parts".into(),
            ));
        }
        let fcy = fractional_cy(&coxeter, CY_ORDER_BOUND)?;
        let report = ClassificationReport {
            num_rank,
            serre_ok,
            coxeter,
            branch: Branch::Sum,
            has_exceptional_class: profile.nonzero.contains(&int(1)),
            has_spherical_class: profile.fixed_nonzero.contains(&int(0)),
            fractional_cy: fcy,
        };
        return Ok(Analysis { report, profile });
    }

    let lat = build_lattice(d)?;
    let num = lat.radical_quotient()?;
    let num_lat = num.as_lattice();
    let check = num_lat.serre_check();
    let coxeter = check
        .coxeter
        .clone()
        .ok_or(KLatticeError::NoIntegralCoxeter)?;
    let profile = ScanProfile::leaf(&num_lat, &coxeter, bound as i64);
    let branch = match d {
        CategoryDescriptor::QuiverCat(_) => Branch::QuiverRep,
        CategoryDescriptor::TubeCat(_) => Branch::Tube,
        CategoryDescriptor::CurveCat(_) => Branch::CurveLike,
        CategoryDescriptor::DirectSum(_) => unreachable!("sums handled above"),
    };
    let report = ClassificationReport {
        num_rank: num.num_rank(),
        serre_ok: check.holds,
        coxeter: coxeter.clone(),
        branch,
        has_exceptional_class: profile.nonzero.contains(&int(1)),
        has_spherical_class: profile.fixed_nonzero.contains(&int(0)),
        fractional_cy: fractional_cy(&coxeter, CY_ORDER_BOUND)?,
    };

    // branch-specific cross-checks against the descriptor's ground truth
    match d {
        CategoryDescriptor::TubeCat(r) => {
            if report.num_rank != r - 1 {
                return Err(ClassifyError::ClassificationInconsistency(format!(
                    "rank-{r} tube must have numerical rank {}, got {}",
                    r - 1,
                    report.num_rank
                )));
            }
            let total = vec![int(1); *r];
            let image = num.project(&total)?;
            if image.iter().any(|c| c != &Int::from(0)) {
                return Err(ClassifyError::ClassificationInconsistency(format!(
                    "total peripheral class of the rank-{r} tube must die in the numerical quotient"
                )));
            }
        }
        CategoryDescriptor::CurveCat(g) => {
            if *g >= 1 {
                if report.has_exceptional_class {
                    return Err(ClassifyError::ClassificationInconsistency(format!(
                        "genus-{g} curve admits no exceptional classes, but the scan found one"
                    )));
                }
                if !report.has_spherical_class {
                    return Err(ClassifyError::ClassificationInconsistency(format!(
                        "genus-{g} curve must have a Coxeter-fixed isotropic class (the point class)"
                    )));
                }
            } else if !report.has_exceptional_class {
                return Err(ClassifyError::ClassificationInconsistency(
                    "genus-0 curve must have an exceptional class".into(),
                ));
            }
        }
        CategoryDescriptor::QuiverCat(q) => {
            if q.is_dynkin() && report.fractional_cy.is_none() {
                return Err(ClassifyError::ClassificationInconsistency(
                    "Dynkin quiver category must be fractionally Calabi-Yau".into(),
                ));
            }
        }
        CategoryDescriptor::DirectSum(_) => unreachable!("sums handled above"),
    }
    if !report.serre_ok {
        return Err(ClassifyError::ClassificationInconsistency(
            "numerical quotient must satisfy Serre duality".into(),
        ));
    }
    Ok(Analysis { report, profile })
}

/// Classify a descriptor: build its numerical lattice, scan classes of
/// sup-norm ≤ `search_bound`, and verify branch consistency.
pub fn classify(
    d: &CategoryDescriptor,
    search_bound: usize,
) -> Result<ClassificationReport, ClassifyError> {
    if search_bound == 0 {
        return Err(ClassifyError::InvalidDescriptor(
            "search bound must be at least 1".into(),
        ));
    }
    Ok(analyze(d, search_bound)?.report)
}
