//! Dense square matrices over a [`StarScalar`]: the concrete unital *-ring.
//!
//! The involution is conjugate-transpose. Products and sums through the
//! operator traits panic on a dimension mismatch; the `checked_*` methods
//! return [`Error::DimensionMismatch`] instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::StarScalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: StarScalar> Mat<S> {
    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| S::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Mat { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Malformed("matrix must have at least one row".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: bad.len(),
            });
        }
        Ok(Mat {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Build from small integer literals, e.g. `Mat::from_ints([[1, 1], [0, 0]])`.
    pub fn from_ints<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Self::from_fn(N, |i, j| S::from_i64(rows[i][j]))
    }

    pub fn diag(values: Vec<S>) -> Self {
        let dim = values.len();
        let mut m = Self::zeros(dim);
        for (i, v) in values.into_iter().enumerate() {
            m.entries[i * dim + i] = v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(S::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Conjugate transpose: the involution a ↦ a*.
    pub fn star(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    /// Plain transpose, no conjugation.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        Mat {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x.clone() * k).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// 1 − self.
    pub fn complement(&self) -> Self {
        &Self::identity(self.dim) - self
    }

    pub fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_dim(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_dim(rhs)?;
        Ok(self.zip_with(rhs, |x, y| x.clone() + y))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_dim(rhs)?;
        Ok(self.zip_with(rhs, |x, y| x.clone() - y))
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        Mat {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(x, y)| f(x, y))
                .collect(),
        }
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        let n = self.dim;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = S::zero();
                for k in 0..n {
                    let x = self.get(i, k);
                    if x.is_zero() {
                        continue;
                    }
                    acc = acc + &(x.clone() * rhs.get(k, j));
                }
                out.push(acc);
            }
        }
        Mat {
            dim: n,
            entries: out,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        &(self * self) == self
    }

    pub fn is_hermitian(&self) -> bool {
        self.star() == *self
    }

    /// `true` iff w·m is Hermitian, i.e. (wm)* = wm.
    pub fn is_hermitian_wrt(&self, w: &Weight<S>) -> bool {
        (w.mat() * self).is_hermitian()
    }

    /// Two-sided inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let id = Self::identity(self.dim);
        let sol = solve_right(self, &id);
        // Over a field a one-sided inverse of a square matrix is two-sided.
        sol.consistent.then_some(sol.solution)
    }

    pub fn is_invertible(&self) -> bool {
        rank(self) == self.dim
    }
}

impl<S: fmt::Debug> fmt::Debug for Mat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.entries.chunks(self.dim.max(1)))
            .finish()
    }
}

impl<S: fmt::Display> fmt::Display for Mat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.chunks(self.dim.max(1)).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

fn assert_dims<S>(a: &Mat<S>, b: &Mat<S>) {
    assert_eq!(a.dim, b.dim, "matrix dimension mismatch");
}

impl<S: StarScalar> Mul for &Mat<S> {
    type Output = Mat<S>;
    fn mul(self, rhs: &Mat<S>) -> Mat<S> {
        assert_dims(self, rhs);
        self.mul_unchecked(rhs)
    }
}

impl<S: StarScalar> Add for &Mat<S> {
    type Output = Mat<S>;
    fn add(self, rhs: &Mat<S>) -> Mat<S> {
        assert_dims(self, rhs);
        self.zip_with(rhs, |x, y| x.clone() + y)
    }
}

impl<S: StarScalar> Sub for &Mat<S> {
    type Output = Mat<S>;
    fn sub(self, rhs: &Mat<S>) -> Mat<S> {
        assert_dims(self, rhs);
        self.zip_with(rhs, |x, y| x.clone() - y)
    }
}

impl<S: StarScalar> Neg for &Mat<S> {
    type Output = Mat<S>;
    fn neg(self) -> Mat<S> {
        Mat {
            dim: self.dim,
            entries: self.entries.iter().map(|x| -x.clone()).collect(),
        }
    }
}

macro_rules! owned_matops {
    ($($trait:ident :: $method:ident),+) => {$(
        impl<S: StarScalar> $trait for Mat<S> {
            type Output = Mat<S>;
            fn $method(self, rhs: Mat<S>) -> Mat<S> {
                (&self).$method(&rhs)
            }
        }
        impl<S: StarScalar> $trait<&Mat<S>> for Mat<S> {
            type Output = Mat<S>;
            fn $method(self, rhs: &Mat<S>) -> Mat<S> {
                (&self).$method(rhs)
            }
        }
        impl<S: StarScalar> $trait<Mat<S>> for &Mat<S> {
            type Output = Mat<S>;
            fn $method(self, rhs: Mat<S>) -> Mat<S> {
                self.$method(&rhs)
            }
        }
    )+};
}

owned_matops!(Mul::mul, Add::add, Sub::sub);

impl<S: StarScalar> Neg for Mat<S> {
    type Output = Mat<S>;
    fn neg(self) -> Mat<S> {
        -&self
    }
}

/// Product of a sequence of matrices, left to right.
pub fn product<'a, S: StarScalar>(factors: impl IntoIterator<Item = &'a Mat<S>>) -> Mat<S> {
    let mut it = factors.into_iter();
    let first = it.next().expect("product of no factors").clone();
    it.fold(first, |acc, m| &acc * m)
}

// ---------------------------------------------------------------------------
// Weights

/// An invertible Hermitian matrix, used as a weight e or f.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight<S> {
    value: Mat<S>,
    inverse: Mat<S>,
}

impl<S: StarScalar> Weight<S> {
    pub fn new(value: Mat<S>) -> Result<Self> {
        if !value.is_hermitian() {
            return Err(Error::InvalidWeight("weight is not Hermitian".into()));
        }
        let inverse = value
            .inverse()
            .ok_or_else(|| Error::InvalidWeight("weight is not invertible".into()))?;
        Ok(Weight { value, inverse })
    }

    pub fn identity(dim: usize) -> Self {
        Weight {
            value: Mat::identity(dim),
            inverse: Mat::identity(dim),
        }
    }

    pub fn mat(&self) -> &Mat<S> {
        &self.value
    }

    pub fn inv(&self) -> &Mat<S> {
        &self.inverse
    }

    pub fn dim(&self) -> usize {
        self.value.dim()
    }

    /// The inverse weight; again Hermitian and invertible.
    pub fn inverted(&self) -> Self {
        Weight {
            value: self.inverse.clone(),
            inverse: self.value.clone(),
        }
    }

    pub fn into_mat(self) -> Mat<S> {
        self.value
    }
}

// ---------------------------------------------------------------------------
// Exact linear solves

/// Result of solving a linear matrix equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveWitness<S> {
    pub solution: Mat<S>,
    pub consistent: bool,
}

/// Row-reduce `[lhs | rhs]` to reduced row echelon form. Returns the reduced
/// rows and the pivot column of each nonzero row. Pivot search scans columns
/// left to right and takes the first nonzero entry at or below the current row.
fn rref<S: StarScalar>(lhs: &Mat<S>, rhs: &Mat<S>) -> (Vec<Vec<S>>, Vec<usize>) {
    let n = lhs.dim();
    let mut rows: Vec<Vec<S>> = (0..n)
        .map(|i| {
            let mut r = Vec::with_capacity(2 * n);
            r.extend_from_slice(&lhs.entries[i * n..(i + 1) * n]);
            r.extend_from_slice(&rhs.entries[i * n..(i + 1) * n]);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == n {
            break;
        }
        let Some(found) = (row..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, found);
        let inv = rows[row][col].inv().expect("pivot is nonzero");
        for x in rows[row].iter_mut() {
            *x = x.clone() * &inv;
        }
        for r in 0..n {
            if r == row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            let pivot_row = rows[row].clone();
            for (x, p) in rows[r].iter_mut().zip(&pivot_row).skip(col) {
                *x = x.clone() - &(factor.clone() * p);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (rows, pivots)
}

pub fn rank<S: StarScalar>(a: &Mat<S>) -> usize {
    rref(a, &Mat::zeros(a.dim())).1.len()
}

/// Find x with a·x = b. Free variables are set to zero, so the witness is a
/// deterministic function of (a, b).
pub fn solve_right<S: StarScalar>(a: &Mat<S>, b: &Mat<S>) -> SolveWitness<S> {
    assert_dims(a, b);
    let n = a.dim();
    let (rows, pivots) = rref(a, b);
    let consistent = rows[pivots.len()..]
        .iter()
        .all(|r| r[n..].iter().all(S::is_zero));
    let mut solution = Mat::zeros(n);
    if consistent {
        for (r, &col) in pivots.iter().enumerate() {
            for j in 0..n {
                solution.set(col, j, rows[r][n + j].clone());
            }
        }
    }
    SolveWitness {
        solution,
        consistent,
    }
}

/// Find x with x·a = b, via the transposed system aᵀ·xᵀ = bᵀ.
pub fn solve_left<S: StarScalar>(a: &Mat<S>, b: &Mat<S>) -> SolveWitness<S> {
    let t = solve_right(&a.transpose(), &b.transpose());
    SolveWitness {
        solution: t.solution.transpose(),
        consistent: t.consistent,
    }
}

/// Basis of the row vectors v with v·a = 0.
pub fn left_null_space<S: StarScalar>(a: &Mat<S>) -> Vec<Vec<S>> {
    // v·a = 0  ⇔  aᵀ·vᵀ = 0
    let at = a.transpose();
    let n = a.dim();
    let (rows, pivots) = rref(&at, &Mat::zeros(n));
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![S::zero(); n];
            v[f] = S::one();
            for (r, &col) in pivots.iter().enumerate() {
                v[col] = -rows[r][f].clone();
            }
            v
        })
        .collect()
}

/// v·m for a row vector v.
pub fn row_times<S: StarScalar>(v: &[S], m: &Mat<S>) -> Vec<S> {
    let n = m.dim();
    (0..n)
        .map(|j| {
            v.iter()
                .enumerate()
                .fold(S::zero(), |acc, (k, x)| acc + &(x.clone() * m.get(k, j)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GaussianRational as Qi, Rational as Q, F3, F5};

    type M = Mat<Q>;

    #[test]
    fn ring_arithmetic() {
        let a = M::from_ints([[1, 2], [3, 4]]);
        assert_eq!(&M::identity(2) * &a, a);
        assert!((&a + &(-&a)).is_zero());
        let nil = M::from_ints([[0, 1], [0, 0]]);
        assert!((&nil * &nil).is_zero());
        assert_eq!(
            a.checked_mul(&M::identity(3)),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
        assert!(a.checked_add(&M::zeros(3)).is_err());
        assert_eq!(a.scale(&Q::from(2)), M::from_ints([[2, 4], [6, 8]]));
    }

    #[test]
    fn star_is_conjugate_transpose() {
        let i = Qi::i();
        let one = Qi::one();
        let a = Mat::from_rows(vec![
            vec![one.clone(), i.clone()],
            vec![Qi::zero(), one.clone()],
        ])
        .unwrap();
        let expected = Mat::from_rows(vec![vec![one.clone(), Qi::zero()], vec![-i, one]]).unwrap();
        assert_eq!(a.star(), expected);
        let b = Mat::<F3>::from_ints([[1, 2], [0, 1]]);
        assert_eq!(b.star(), b.transpose());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            M::from_ints([[1, 1], [0, 1]]).inverse(),
            Some(M::from_ints([[1, -1], [0, 1]]))
        );
        assert_eq!(M::from_ints([[1, 1], [0, 0]]).inverse(), None);
        assert_eq!(
            Mat::<F5>::from_ints([[2]]).inverse(),
            Some(Mat::<F5>::from_ints([[3]]))
        );
    }

    #[test]
    fn solve_examples() {
        let b = M::from_ints([[3, -1], [2, 7]]);
        assert_eq!(solve_right(&M::identity(2), &b).solution, b);
        assert_eq!(solve_left(&M::identity(2), &b).solution, b);

        let ones = M::from_ints([[1, 1], [1, 1]]);
        let w = solve_right(&ones, &ones);
        assert!(w.consistent);
        assert_eq!(&ones * &w.solution, ones);
        // Free row zeroed.
        assert_eq!(w.solution, M::from_ints([[1, 1], [0, 0]]));

        let target = M::from_ints([[1, 1], [0, 0]]);
        let w = solve_left(&ones, &target);
        assert!(w.consistent);
        assert_eq!(w.solution, M::from_ints([[1, 0], [0, 0]]));
        assert_eq!(&w.solution * &ones, target);

        assert!(!solve_right(&M::zeros(2), &b).consistent);
        assert!(!solve_left(&M::zeros(2), &b).consistent);
    }

    #[test]
    fn hermitian_and_idempotent_predicates() {
        let proj = M::from_ints([[0, 0], [0, 1]]);
        assert!(proj.is_hermitian_wrt(&Weight::identity(2)));
        assert!(!M::from_ints([[0, 1], [0, 0]]).is_hermitian_wrt(&Weight::identity(2)));
        let w = Weight::new(M::from_ints([[1, 0], [0, 2]])).unwrap();
        // diag(1,2)·proj = diag(0,2), Hermitian.
        assert!(proj.is_hermitian_wrt(&w));

        assert!(M::identity(2).is_idempotent());
        assert!(M::from_ints([[1, 1], [0, 0]]).is_idempotent());
        assert!(!M::from_ints([[0, 1], [0, 0]]).is_idempotent());
    }

    #[test]
    fn weight_validation() {
        assert!(matches!(
            Weight::new(M::from_ints([[1, 1], [0, 1]])),
            Err(Error::InvalidWeight(_))
        ));
        assert!(matches!(
            Weight::new(M::from_ints([[1, 1], [1, 1]])),
            Err(Error::InvalidWeight(_))
        ));
        let w = Weight::new(M::from_ints([[2, 1], [1, 1]])).unwrap();
        assert_eq!(w.mat() * w.inv(), M::identity(2));
    }

    #[test]
    fn left_null_space_annihilates() {
        let a = M::from_ints([[1, 2, 3], [2, 4, 6], [1, 0, 1]]);
        let basis = left_null_space(&a);
        assert_eq!(basis.len(), 1);
        assert!(row_times(&basis[0], &a).iter().all(|x| x.is_zero()));
        assert!(left_null_space(&M::identity(3)).is_empty());
        assert_eq!(left_null_space(&M::zeros(3)).len(), 3);
    }

    #[test]
    fn rank_counts_pivots() {
        assert_eq!(rank(&M::from_ints([[1, 2], [2, 4]])), 1);
        assert_eq!(rank(&M::identity(3)), 3);
        assert_eq!(rank(&M::zeros(2)), 0);
    }
}
