//! Integer lattices carrying a bilinear Euler form.
//!
//! An [`EulerLattice`] is Z^n with an integer Gram matrix `A` housing
//! χ(v,w) = vᵀ·A·w. From it we derive the Coxeter matrix C = −A⁻¹Aᵀ (exact,
//! with an integrality check), the two-sided radical and the numerical
//! quotient lattice, K₀-level twist/mutation maps, perpendicular splittings
//! along an exceptional class, fractional Calabi–Yau detection, and a
//! closed-form verification suite for a 3×3 family of Coxeter blocks.

use crate::exact::{int, int_right_kernel, smith_normal_form, split_along, Int, IntMatrix};
use num_traits::{One, Zero};

/// Errors from lattice-level operations.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum KLatticeError {
    #[error("dimension mismatch: expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the Gram matrix is singular, so no Coxeter matrix exists")]
    SingularCartan,
    #[error("-A^-1 A^T is not integral: the form has no integral Serre operator in this basis")]
    NoIntegralCoxeter,
    #[error("left radical differs from right radical; the form admits no two-sided quotient")]
    LeftRightRadicalMismatch,
    #[error("class is not exceptional: the form does not evaluate to 1 on it")]
    NotExceptionalClass,
    #[error("classes do not satisfy the spherical conditions (fixed by Coxeter, isotropic, mutually orthogonal)")]
    NotSphericalClasses,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Why a Serre-duality check failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SerreFailure {
    SingularGram,
    NonIntegralCoxeter,
    /// The pairing identity χ(v,w) = −χ(w,Cv) failed on a basis pair. This
    /// cannot happen once C = −A⁻¹Aᵀ exists over Z (the identity is then a
    /// matrix algebra fact), but the report checks it explicitly anyway.
    IdentityFailed,
}

/// Outcome of [`EulerLattice::serre_check`]: whether the form has an integral
/// Serre operator, with the Coxeter matrix as witness when it does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SerreCheck {
    pub holds: bool,
    pub coxeter: Option<IntMatrix>,
    pub failure: Option<SerreFailure>,
}

/// Free abelian group Z^n with an integer Gram matrix for χ(−,−).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerLattice {
    gram: IntMatrix,
    basis_labels: Option<Vec<String>>,
}

impl EulerLattice {
    pub fn new(gram: IntMatrix) -> Result<Self, KLatticeError> {
        if !gram.is_square() {
            return Err(KLatticeError::InvalidArgument(format!(
                "Gram matrix must be square, got {}x{}",
                gram.rows(),
                gram.cols()
            )));
        }
        Ok(EulerLattice { gram, basis_labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, KLatticeError> {
        if labels.len() != self.rank() {
            return Err(KLatticeError::DimensionMismatch {
                expected: self.rank(),
                got: labels.len(),
            });
        }
        self.basis_labels = Some(labels);
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn basis_labels(&self) -> Option<&[String]> {
        self.basis_labels.as_deref()
    }

    fn check_len(&self, v: &[Int]) -> Result<(), KLatticeError> {
        if v.len() != self.rank() {
            return Err(KLatticeError::DimensionMismatch { expected: self.rank(), got: v.len() });
        }
        Ok(())
    }

    /// χ(v,w) = vᵀ·A·w.
    pub fn euler_form(&self, v: &[Int], w: &[Int]) -> Result<Int, KLatticeError> {
        self.check_len(v)?;
        self.check_len(w)?;
        let aw = self.gram.mul_vec(w);
        Ok(v.iter().zip(aw.iter()).map(|(a, b)| a * b).sum())
    }

    /// The symmetrized form χ(v,w) + χ(w,v).
    pub fn symmetrized_form(&self, v: &[Int], w: &[Int]) -> Result<Int, KLatticeError> {
        Ok(self.euler_form(v, w)? + self.euler_form(w, v)?)
    }

    /// Coxeter matrix C = −A⁻¹Aᵀ, which expresses Serre duality on the
    /// lattice: χ(v,w) = −χ(w,Cv). Exists only when A is nonsingular and the
    /// rational result happens to be integral.
    pub fn coxeter(&self) -> Result<IntMatrix, KLatticeError> {
        let a = self.gram.to_rat();
        let inv = a.inverse().ok_or(KLatticeError::SingularCartan)?;
        let c = inv.mul(&a.transpose()).neg();
        c.to_int().ok_or(KLatticeError::NoIntegralCoxeter)
    }

    /// Full Serre-duality report: Coxeter existence plus the explicit pairing
    /// identity χ(eᵢ,eⱼ) = −χ(eⱼ,C·eᵢ) on all basis pairs.
    pub fn serre_check(&self) -> SerreCheck {
        let c = match self.coxeter() {
            Ok(c) => c,
            Err(KLatticeError::SingularCartan) => {
                return SerreCheck {
                    holds: false,
                    coxeter: None,
                    failure: Some(SerreFailure::SingularGram),
                }
            }
            Err(_) => {
                return SerreCheck {
                    holds: false,
                    coxeter: None,
                    failure: Some(SerreFailure::NonIntegralCoxeter),
                }
            }
        };
        // χ(eᵢ,eⱼ) = A[i][j]; χ(eⱼ, C·eᵢ) = (A·C)[j][i]. The identity says
        // A = −(A·C)ᵀ.
        let ac = self.gram.mul(&c);
        if self.gram != ac.transpose().neg() {
            return SerreCheck {
                holds: false,
                coxeter: Some(c),
                failure: Some(SerreFailure::IdentityFailed),
            };
        }
        SerreCheck { holds: true, coxeter: Some(c), failure: None }
    }

    /// Quotient by the radical of χ. Requires the left and right radicals to
    /// coincide (the two-sided radical of a form with Serre duality).
    pub fn radical_quotient(&self) -> Result<NumLattice, KLatticeError> {
        let right = int_right_kernel(&self.gram);
        let left = int_right_kernel(&self.gram.transpose());
        if right != left {
            return Err(KLatticeError::LeftRightRadicalMismatch);
        }
        let split = split_along(&right);
        let lift = split.complement.clone();
        let induced = lift.mul(&self.gram).mul(&lift.transpose());
        debug_assert!(
            induced.to_rat().inverse().is_some() || induced.rows() == 0,
            "induced form must be nondegenerate once the radical is removed"
        );
        Ok(NumLattice {
            parent: self.clone(),
            radical_basis: right.row_vecs(),
            num_rank: self.rank() - right.rows(),
            induced_gram: induced,
            proj: split.proj,
            lift,
        })
    }

    /// Block-diagonal direct sum of lattices.
    pub fn direct_sum(parts: &[&EulerLattice]) -> EulerLattice {
        let grams: Vec<&IntMatrix> = parts.iter().map(|p| p.gram()).collect();
        EulerLattice { gram: IntMatrix::block_diag(&grams), basis_labels: None }
    }
}

/// Numerical quotient lattice: parent modulo the radical of its form.
#[derive(Debug, Clone)]
pub struct NumLattice {
    parent: EulerLattice,
    radical_basis: Vec<Vec<Int>>,
    num_rank: usize,
    induced_gram: IntMatrix,
    /// num_rank × n: quotient coordinates of a parent vector.
    proj: IntMatrix,
    /// num_rank × n: rows lift the quotient basis back to the parent.
    lift: IntMatrix,
}

impl NumLattice {
    pub fn parent(&self) -> &EulerLattice {
        &self.parent
    }

    pub fn radical_basis(&self) -> &[Vec<Int>] {
        &self.radical_basis
    }

    pub fn num_rank(&self) -> usize {
        self.num_rank
    }

    pub fn induced_gram(&self) -> &IntMatrix {
        &self.induced_gram
    }

    /// Quotient coordinates of a parent class.
    pub fn project(&self, v: &[Int]) -> Result<Vec<Int>, KLatticeError> {
        if v.len() != self.parent.rank() {
            return Err(KLatticeError::DimensionMismatch {
                expected: self.parent.rank(),
                got: v.len(),
            });
        }
        Ok(self.proj.mul_vec(v))
    }

    /// A parent representative of a quotient class.
    pub fn lift(&self, q: &[Int]) -> Result<Vec<Int>, KLatticeError> {
        if q.len() != self.num_rank {
            return Err(KLatticeError::DimensionMismatch { expected: self.num_rank, got: q.len() });
        }
        Ok(self.lift.vec_mul(q))
    }

    /// The quotient as a lattice in its own right.
    pub fn as_lattice(&self) -> EulerLattice {
        EulerLattice { gram: self.induced_gram.clone(), basis_labels: None }
    }
}

/// Smallest 1 ≤ r ≤ bound with C^r·v = v, if any. A matching period is a
/// necessary condition for v to be the class of an object of τ-period r; it
/// is not sufficient on its own.
pub fn coxeter_period(c: &IntMatrix, v: &[Int], bound: usize) -> Result<Option<usize>, KLatticeError> {
    if !c.is_square() {
        return Err(KLatticeError::InvalidArgument("Coxeter matrix must be square".into()));
    }
    if v.len() != c.rows() {
        return Err(KLatticeError::DimensionMismatch { expected: c.rows(), got: v.len() });
    }
    if bound == 0 {
        return Err(KLatticeError::InvalidArgument("period bound must be positive".into()));
    }
    let mut w = v.to_vec();
    for r in 1..=bound {
        w = c.mul_vec(&w);
        if w == v {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// A fractional Calabi–Yau witness at K₀ level: (−C)^q = (−1)^p·Id.
/// Only the parity of p is determined by the matrix identity; `p` is the
/// canonical representative 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FractionalCy {
    pub p: i64,
    pub q: usize,
}

/// Search 1 ≤ q ≤ max_order for the smallest q with (−C)^q = ±Id, where the
/// Serre functor acts as −C and the shift as −Id on the lattice.
pub fn fractional_cy(c: &IntMatrix, max_order: usize) -> Result<Option<FractionalCy>, KLatticeError> {
    if !c.is_square() {
        return Err(KLatticeError::InvalidArgument("Coxeter matrix must be square".into()));
    }
    let s = c.neg();
    let mut acc = IntMatrix::identity(c.rows());
    for q in 1..=max_order {
        acc = acc.mul(&s);
        if acc.is_identity() {
            return Ok(Some(FractionalCy { p: 0, q }));
        }
        if acc.neg().is_identity() {
            return Ok(Some(FractionalCy { p: 1, q }));
        }
    }
    Ok(None)
}

/// Does (−C)^q = (−1)^p·Id hold for this specific pair?
pub fn cy_pair_holds(c: &IntMatrix, q: usize, p: i64) -> bool {
    if !c.is_square() || q == 0 {
        return false;
    }
    let m = c.neg().pow(q);
    if p.rem_euclid(2) == 0 {
        m.is_identity()
    } else {
        m.neg().is_identity()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistDirection {
    Left,
    Right,
}

/// Validation mode for [`twist_k_checked`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistMode {
    /// Every class must be fixed by the Coxeter matrix, isotropic, and
    /// χ-orthogonal to the others; under these conditions the left and right
    /// twists are mutually inverse on the lattice.
    Spherical,
    /// A single class e with χ(e,e) = 1; the left twist sends e itself to 0
    /// (projection into its perpendicular).
    Exceptional,
}

/// K₀ shadow of the twist functor along the classes `s`:
/// left:  v ↦ v − Σᵢ χ(sᵢ,v)·sᵢ; right: v ↦ v − Σᵢ χ(v,sᵢ)·sᵢ.
/// Performs the arithmetic with shape validation only; see
/// [`twist_k_checked`] for the mode preconditions.
pub fn twist_k(
    lat: &EulerLattice,
    s: &[Vec<Int>],
    v: &[Int],
    direction: TwistDirection,
) -> Result<Vec<Int>, KLatticeError> {
    lat.check_len(v)?;
    for si in s {
        lat.check_len(si)?;
    }
    let mut out = v.to_vec();
    for si in s {
        let coef = match direction {
            TwistDirection::Left => lat.euler_form(si, v)?,
            TwistDirection::Right => lat.euler_form(v, si)?,
        };
        for (o, x) in out.iter_mut().zip(si.iter()) {
            *o -= &coef * x;
        }
    }
    Ok(out)
}

/// [`twist_k`] after validating the preconditions of the given mode.
pub fn twist_k_checked(
    lat: &EulerLattice,
    s: &[Vec<Int>],
    v: &[Int],
    direction: TwistDirection,
    mode: TwistMode,
) -> Result<Vec<Int>, KLatticeError> {
    match mode {
        TwistMode::Spherical => {
            let c = lat.coxeter()?;
            for si in s {
                lat.check_len(si)?;
                if c.mul_vec(si) != *si {
                    return Err(KLatticeError::NotSphericalClasses);
                }
            }
            for si in s {
                for sj in s {
                    if !lat.euler_form(si, sj)?.is_zero() {
                        return Err(KLatticeError::NotSphericalClasses);
                    }
                }
            }
        }
        TwistMode::Exceptional => {
            if s.len() != 1 {
                return Err(KLatticeError::InvalidArgument(
                    "exceptional mutation takes exactly one class".into(),
                ));
            }
            if !lat.euler_form(&s[0], &s[0])?.is_one() {
                return Err(KLatticeError::NotExceptionalClass);
            }
        }
    }
    twist_k(lat, s, v, direction)
}

/// Splitting of a lattice along an exceptional class e (χ(e,e) = 1):
/// the right-perpendicular sublattice {w : χ(e,w) = 0} with its restricted
/// form, together with exact embed/project maps realizing
/// lat ≅ perp ⊕ Z·e.
#[derive(Debug, Clone)]
pub struct PerpSplit {
    pub perp: EulerLattice,
    /// (n−1)×n: rows are the chosen basis of the perpendicular sublattice.
    pub basis: IntMatrix,
    pub e: Vec<Int>,
    /// (n−1)×n: coordinate functionals; coords·w = basis coordinates for any
    /// w in the perpendicular sublattice.
    coords: IntMatrix,
}

impl PerpSplit {
    /// Basis coordinates of v − χ(e,v)·e in the perpendicular lattice.
    pub fn project(&self, lat: &EulerLattice, v: &[Int]) -> Result<Vec<Int>, KLatticeError> {
        lat.check_len(v)?;
        let coef = lat.euler_form(&self.e, v)?;
        let mut w = v.to_vec();
        for (wi, ei) in w.iter_mut().zip(self.e.iter()) {
            *wi -= &coef * ei;
        }
        Ok(self.coords.mul_vec(&w))
    }

    /// Parent coordinates of a perpendicular class.
    pub fn embed(&self, p: &[Int]) -> Result<Vec<Int>, KLatticeError> {
        if p.len() != self.basis.rows() {
            return Err(KLatticeError::DimensionMismatch {
                expected: self.basis.rows(),
                got: p.len(),
            });
        }
        Ok(self.basis.vec_mul(p))
    }
}

/// Split a lattice along an exceptional class: perp ⊕ Z·e ≅ lat, with
/// project(v) = v − χ(e,v)·e in perpendicular coordinates.
pub fn perp_split(lat: &EulerLattice, e: &[Int]) -> Result<PerpSplit, KLatticeError> {
    lat.check_len(e)?;
    if !lat.euler_form(e, e)?.is_one() {
        return Err(KLatticeError::NotExceptionalClass);
    }
    // χ(e,w) = fᵀ·w with f = Aᵀe; f(e) = 1 makes f primitive, so the kernel
    // is a primitive sublattice of corank 1.
    let f = lat.gram.transpose().mul_vec(e);
    let f_row = IntMatrix::from_rows(vec![f]);
    let basis = int_right_kernel(&f_row);
    debug_assert_eq!(basis.rows() + 1, lat.rank());
    // Coordinate functionals K with K·basisᵀ = Id, built from the Smith
    // transforms of the basis.
    let coords = if basis.rows() == 0 {
        IntMatrix::zeros(0, lat.rank())
    } else {
        let snf = smith_normal_form(&basis);
        let vt = snf.v.transpose();
        let top = IntMatrix::from_rows((0..basis.rows()).map(|i| vt.row(i)).collect());
        snf.u.transpose().mul(&top)
    };
    debug_assert!(coords.mul(&basis.transpose()).is_identity() || basis.rows() == 0);
    let induced = basis.mul(&lat.gram).mul(&basis.transpose());
    Ok(PerpSplit {
        perp: EulerLattice::new(induced).expect("restricted Gram is square"),
        basis,
        e: e.to_vec(),
        coords,
    })
}

/// True iff χ(v,s) = 0 for every s in the set: at K₀ level, v behaves like a
/// torsion class relative to the given spherical classes.
pub fn torsion_test(
    lat: &EulerLattice,
    v: &[Int],
    spherical_set: &[Vec<Int>],
) -> Result<bool, KLatticeError> {
    for s in spherical_set {
        if !lat.euler_form(v, s)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The rank-2 lattice of a smooth curve of genus g in the basis
/// (point class, structure class): Gram [[0,−1],[1,1−g]].
pub fn curve_lattice(genus: i64) -> EulerLattice {
    let g = int(genus);
    let gram = IntMatrix::from_rows(vec![
        vec![Int::zero(), -Int::one()],
        vec![Int::one(), Int::one() - &g],
    ]);
    EulerLattice::new(gram)
        .expect("2x2 matrix is square")
        .with_labels(vec!["point".into(), "structure".into()])
        .expect("two labels for rank two")
}

/// One verified identity in a [`CoxeterBlockReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCheck {
    pub label: String,
    pub pass: bool,
}

/// Report from [`verify_coxeter_block`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterBlockReport {
    pub a: i64,
    pub b: i64,
    pub g: i64,
    pub checks: Vec<BlockCheck>,
}

impl CoxeterBlockReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Closed-form identities for the Cartan block family
/// A = [[1,0,0],[a,0,−1],[b,1,1−g]] (an exceptional class glued to a genus-g
/// curve block, after basis reduction):
///   1. C = −A⁻¹Aᵀ equals the closed-form 3×3 matrix with top row (−1,−a,−b);
///   2. the (0,0) entry of (C²)ᵀ·A equals a⁴(1−g)² + a²(1−g) + 1
///      (the self-pairing χ(τ²E,E) of the glued exceptional class);
///   3. at a=0, b=1, C² is unipotent: [[1,0,0],[0,1,4g−3],[0,0,1]].
pub fn verify_coxeter_block(a: i64, b: i64, g: i64) -> Result<CoxeterBlockReport, KLatticeError> {
    if g < 1 {
        return Err(KLatticeError::InvalidArgument("genus must be at least 1".into()));
    }
    let (ai, bi, gi) = (int(a), int(b), int(g));
    let one = Int::one();
    let gram = IntMatrix::from_rows(vec![
        vec![one.clone(), Int::zero(), Int::zero()],
        vec![ai.clone(), Int::zero(), -one.clone()],
        vec![bi.clone(), one.clone(), &one - &gi],
    ]);
    let lat = EulerLattice::new(gram.clone())?;
    let c = lat.coxeter()?;

    let om_g = &one - &gi; // 1−g
    let closed = IntMatrix::from_rows(vec![
        vec![-one.clone(), -ai.clone(), -bi.clone()],
        vec![
            &ai * &om_g + &bi,
            &ai * &ai * &om_g + &ai * &bi + &one,
            (&ai * &bi - int(2)) * &om_g + &bi * &bi,
        ],
        vec![-ai.clone(), -(&ai * &ai), &one - &ai * &bi],
    ]);
    let mut checks = Vec::new();
    checks.push(BlockCheck { label: "coxeter_closed_form".into(), pass: c == closed });

    let c2 = c.pow(2);
    let paired = c2.transpose().mul(&gram);
    let expect = &ai * &ai * &ai * &ai * &om_g * &om_g + &ai * &ai * &om_g + &one;
    checks.push(BlockCheck {
        label: "twisted_self_pairing".into(),
        pass: *paired.get(0, 0) == expect,
    });

    if a == 0 && b == 1 {
        let mut unipotent = IntMatrix::identity(3);
        unipotent.set(1, 2, int(4 * g - 3));
        checks.push(BlockCheck { label: "square_unipotent".into(), pass: c2 == unipotent });
    }
    Ok(CoxeterBlockReport { a, b, g, checks })
}
