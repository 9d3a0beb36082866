//! Exact integer and rational matrix arithmetic.
//!
//! Everything downstream (Euler forms, Coxeter matrices, intertwiner solves,
//! Smith/Hermite reductions) runs on arbitrary-precision scalars so that no
//! identity is ever checked up to rounding. Matrices are small (desk scale),
//! so the implementations favor clarity and determinism over asymptotics:
//! pivot choices are fixed scan orders, never magnitude heuristics, which
//! keeps every derived basis reproducible byte-for-byte.
//!
//! Shape mismatches in these low-level routines are programming errors and
//! panic; the public operations in the domain modules validate their inputs
//! first and return structured errors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Dense row-major matrix over the integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Int) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Build from nested rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Test/fixture helper.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = m.get(i, j) + a * other.get(k, j);
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// v^T · M as a row vector.
    pub fn vec_mul(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.rows, v.len(), "shape mismatch in vec_mul");
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| &v[i] * self.get(i, j)).sum())
            .collect()
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square(), "pow of non-square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Int::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn block_diag(blocks: &[&IntMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(ro + i, co + j, b.get(i, j).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |i, j| Rat::from_integer(self.get(i, j).clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(dst, j) - q * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    fn col_axpy(&mut self, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, dst) - q * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    /// Exact inverse of a matrix with determinant ±1; `None` if singular or
    /// the rational inverse is not integral.
    pub fn int_inverse(&self) -> Option<IntMatrix> {
        self.to_rat().inverse().and_then(|inv| inv.to_int())
    }
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = m.get(i, j) + a * other.get(k, j);
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "shape mismatch in hstack");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    /// Pivoting is "first nonzero in scan order" so the result is canonical.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows_rat(r, p);
            let inv = m.get(r, c).recip();
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j) - &f * m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows_rat(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of { x : self · x = 0 }, one vector per free column,
    /// in increasing free-column order.
    pub fn right_kernel(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let piv_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = Some(row);
            }
            v
        };
        for f in 0..self.cols {
            if piv_set[f].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[f] = Rat::one();
            for (row, &c) in pivots.iter().enumerate() {
                vec[c] = -r.get(row, f);
            }
            basis.push(vec);
        }
        basis
    }

    /// Solve self · x = b exactly; `None` if inconsistent. Free variables are
    /// set to zero, making the solution canonical.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len(), "shape mismatch in solve");
        let bm = RatMatrix::from_rows(b.iter().map(|x| vec![x.clone()]).collect());
        let aug = self.hstack(&bm);
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Exact inverse; `None` if singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&RatMatrix::identity(n));
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        Some(RatMatrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        Some(IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).to_integer()))
    }
}

/// Smith normal form data: `u * a * v = d` with `u`, `v` unimodular and `d`
/// diagonal with nonnegative entries satisfying d₁ | d₂ | ….
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

/// Smith normal form with deterministic pivoting (minimal absolute value,
/// ties by row-major position).
pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    let find_pivot = |d: &IntMatrix, t: usize| -> Option<(usize, usize)> {
        let mut best: Option<(Int, usize, usize)> = None;
        for i in t..d.rows() {
            for j in t..d.cols() {
                let x = d.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                match &best {
                    Some((b, _, _)) if *b <= ax => {}
                    _ => best = Some((ax, i, j)),
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    };

    for t in 0..m.min(n) {
        'pivot: loop {
            let Some((pi, pj)) = find_pivot(&d, t) else {
                break;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Clear below in column t; a nonzero remainder becomes a smaller
            // pivot candidate, so restart.
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t) / d.get(t, t);
                d.row_axpy(i, t, &q);
                u.row_axpy(i, t, &q);
                if !d.get(i, t).is_zero() {
                    continue 'pivot;
                }
            }
            // Clear to the right in row t.
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j) / d.get(t, t);
                d.col_axpy(j, t, &q);
                v.col_axpy(j, t, &q);
                if !d.get(t, j).is_zero() {
                    continue 'pivot;
                }
            }
            // Enforce divisibility of the remaining block by d[t][t].
            let mut fixed = true;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if !(d.get(i, j) % d.get(t, t)).is_zero() {
                        let minus_one = -Int::one();
                        d.row_axpy(t, i, &minus_one); // row t += row i
                        u.row_axpy(t, i, &minus_one);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    debug_assert_eq!(u.mul(a).mul(&v), d);
    Snf { d, u, v }
}

/// Row-style Hermite normal form: canonical basis of the row lattice.
/// Pivots are positive, entries above a pivot are reduced into [0, pivot),
/// zero rows are dropped.
pub fn hnf_rows(a: &IntMatrix) -> IntMatrix {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        // Reduce rows r.. to a single nonzero entry in column c by gcd steps.
        loop {
            let mut best: Option<(Int, usize)> = None;
            for i in r..m {
                let x = h.get(i, c);
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                match &best {
                    Some((b, _)) if *b <= ax => {}
                    _ => best = Some((ax, i)),
                }
            }
            let Some((_, pi)) = best else {
                break;
            };
            h.swap_rows(r, pi);
            let mut done = true;
            for i in r + 1..m {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c) / h.get(r, c);
                h.row_axpy(i, r, &q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
        }
        // Reduce entries above the pivot into [0, pivot).
        for i in 0..r {
            let q = h.get(i, c).div_floor(h.get(r, c));
            h.row_axpy(i, r, &q);
        }
        r += 1;
    }
    IntMatrix::from_rows((0..r).map(|i| h.row(i)).collect())
}

/// Canonical primitive basis (HNF rows) of { x : a·x = 0 } over the integers.
pub fn int_right_kernel(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let min = a.rows().min(a.cols());
    let mut gens: Vec<Vec<Int>> = Vec::new();
    for j in 0..a.cols() {
        let in_diag = j < min && !snf.d.get(j, j).is_zero();
        if !in_diag {
            // column j of v
            gens.push((0..a.cols()).map(|i| snf.v.get(i, j).clone()).collect());
        }
    }
    if gens.is_empty() {
        return IntMatrix::zeros(0, a.cols());
    }
    hnf_rows(&IntMatrix::from_rows(gens))
}

/// A primitive sublattice of Z^n presented by a canonical (HNF) basis, with
/// exact coordinate extraction and a distinguished complement describing the
/// quotient Z^n / L.
pub struct SplitSublattice {
    /// k×n: canonical basis rows of the sublattice L.
    pub basis: IntMatrix,
    /// (n−k)×n: rows are lattice lifts of the quotient basis.
    pub complement: IntMatrix,
    /// (n−k)×n: quotient coordinates, proj·v = class of v in Z^(n−k);
    /// proj kills L and proj · complementᵀ = I.
    pub proj: IntMatrix,
}

/// Split Z^n along a primitive sublattice given by basis rows.
/// Panics if the rows are not a primitive basis (all our callers pass
/// kernels, which are).
pub fn split_along(basis: &IntMatrix) -> SplitSublattice {
    let k = basis.rows();
    let n = basis.cols();
    if k == 0 {
        return SplitSublattice {
            basis: basis.clone(),
            complement: IntMatrix::identity(n),
            proj: IntMatrix::identity(n),
        };
    }
    let snf = smith_normal_form(basis);
    for t in 0..k {
        assert!(snf.d.get(t, t).is_one(), "basis rows are not a primitive sublattice basis");
    }
    // basis = u⁻¹ [I 0] v⁻¹, so the rows of w = v⁻¹ extend the sublattice to
    // a basis of Z^n: rows 0..k span L, rows k..n are the complement.
    let w = snf.v.int_inverse().expect("SNF transform must be unimodular");
    let complement =
        IntMatrix::from_fn(n - k, n, |i, j| w.get(k + i, j).clone());
    // Coordinates in the w-row basis of any v are vᵀ·v_snf; the quotient
    // coordinates are the last n−k of them.
    let vt = snf.v.transpose();
    let proj = IntMatrix::from_fn(n - k, n, |i, j| vt.get(k + i, j).clone());
    SplitSublattice { basis: hnf_rows(basis), complement, proj }
}

/// Coordinates of `w` in terms of `basis` rows (full row rank); `None` if `w`
/// is outside the span or the coordinates are not integral.
pub fn coords_in_basis(basis: &IntMatrix, w: &[Int]) -> Option<Vec<Int>> {
    let bt = basis.transpose().to_rat();
    let b: Vec<Rat> = w.iter().map(|x| Rat::from_integer(x.clone())).collect();
    let x = bt.solve(&b)?;
    if x.iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(x.into_iter().map(|c| c.to_integer()).collect())
}

/// All points of the row lattice of `basis` (HNF form expected) with
/// sup-norm ≤ bound, in a deterministic odometer order. The zero vector is
/// included. Intended for desk-scale scans only.
pub fn lattice_points_in_box(basis: &IntMatrix, bound: i64) -> Vec<Vec<Int>> {
    let k = basis.rows();
    let n = basis.cols();
    if k == 0 {
        return vec![vec![Int::zero(); n]];
    }
    // Pivot columns of the HNF basis give conservative per-coefficient
    // bounds by interval back-substitution.
    let mut pivot_col = vec![0usize; k];
    for i in 0..k {
        pivot_col[i] = (0..n)
            .find(|&j| !basis.get(i, j).is_zero())
            .expect("HNF basis rows are nonzero");
    }
    let bound_i = Int::from(bound);
    let mut coeff_bound = vec![Int::zero(); k];
    for i in 0..k {
        // |c_i| ≤ (bound + Σ_{l<i} |c_l|·|basis[l][p_i]|) / basis[i][p_i]
        let mut num = bound_i.clone();
        for l in 0..i {
            num += &coeff_bound[l] * basis.get(l, pivot_col[i]).abs();
        }
        coeff_bound[i] = num / basis.get(i, pivot_col[i]).abs();
    }
    let ranges: Vec<i64> = coeff_bound
        .iter()
        .map(|b| i64::try_from(b).expect("scan bound too large for a desk-scale search"))
        .collect();

    let mut out = Vec::new();
    let mut c = vec![0i64; k];
    for i in 0..k {
        c[i] = -ranges[i];
    }
    loop {
        let mut v = vec![Int::zero(); n];
        for i in 0..k {
            if c[i] != 0 {
                let ci = Int::from(c[i]);
                for j in 0..n {
                    v[j] += &ci * basis.get(i, j);
                }
            }
        }
        if v.iter().all(|x| x.abs() <= bound_i) {
            out.push(v);
        }
        // odometer increment
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if c[pos] < ranges[pos] {
                c[pos] += 1;
                for (idx, x) in c.iter_mut().enumerate().skip(pos + 1) {
                    *x = -ranges[idx];
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_kernel() {
        let m = RatMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        let (_, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        let ker = m.right_kernel();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            let mv = m.mul_vec(v);
            assert!(mv.iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = RatMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_exact() {
        let m = RatMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let b = vec![rat_int(1), rat_int(1)];
        let x = m.solve(&b).unwrap();
        assert_eq!(x[0], Rat::new(int(1), int(2)));
        let inconsistent = RatMatrix::from_i64(&[&[1, 0], &[1, 0]]);
        assert!(inconsistent.solve(&[rat_int(0), rat_int(1)]).is_none());
    }

    #[test]
    fn smith_diagonal_divisibility() {
        let a = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.d);
        let d: Vec<Int> = (0..3).map(|i| snf.d.get(i, i).clone()).collect();
        for w in d.windows(2) {
            if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        // unimodularity
        assert!(snf.u.int_inverse().is_some());
        assert!(snf.v.int_inverse().is_some());
    }

    #[test]
    fn int_kernel_is_primitive() {
        // Gram matrix of the rank-2 tube: kernel spanned by (1,1).
        let g = IntMatrix::from_i64(&[&[1, -1], &[-1, 1]]);
        let k = int_right_kernel(&g);
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), vec![int(1), int(1)]);
        // full-rank matrix has trivial kernel
        let id = IntMatrix::identity(3);
        assert_eq!(int_right_kernel(&id).rows(), 0);
    }

    #[test]
    fn hnf_canonicalizes() {
        let a = IntMatrix::from_i64(&[&[2, 3, 1], &[4, 6, 2], &[0, 3, 3]]);
        let b = IntMatrix::from_i64(&[&[0, 3, 3], &[2, 3, 1]]);
        // same row lattice (row 2 of a is a multiple), so same HNF
        assert_eq!(hnf_rows(&a), hnf_rows(&b));
    }

    #[test]
    fn split_gives_projection_and_section() {
        let basis = IntMatrix::from_i64(&[&[1, 1]]);
        let split = split_along(&basis);
        assert_eq!(split.proj.rows(), 1);
        // proj kills the sublattice
        assert!(split.proj.mul_vec(&[int(1), int(1)]).iter().all(Int::is_zero));
        // proj ∘ complementᵀ = identity
        let pc = split.proj.mul(&split.complement.transpose());
        assert!(pc.is_identity());
    }

    #[test]
    fn coords_roundtrip() {
        let basis = IntMatrix::from_i64(&[&[1, 0, 1], &[0, 2, 0]]);
        let w = vec![int(3), int(4), int(3)];
        assert_eq!(coords_in_basis(&basis, &w), Some(vec![int(3), int(2)]));
        assert_eq!(coords_in_basis(&basis, &[int(0), int(1), int(0)]), None);
    }

    #[test]
    fn box_enumeration_covers() {
        // full lattice Z^2, bound 1 → 9 points
        let basis = IntMatrix::identity(2);
        let pts = lattice_points_in_box(&basis, 1);
        assert_eq!(pts.len(), 9);
        // sublattice spanned by (1,1): points with |v|∞ ≤ 2 are c·(1,1), |c| ≤ 2
        let diag = IntMatrix::from_i64(&[&[1, 1]]);
        let pts = lattice_points_in_box(&diag, 2);
        assert_eq!(pts.len(), 5);
    }
}
