//! Dense vectors and matrices over an exact field.
//!
//! Matrices act on column vectors: column `j` holds the coordinates of the
//! image of `e_j`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Field, GaussianRational, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector<F>(pub Vec<F>);

impl<F: Field> Vector<F> {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![F::zero(); n])
    }

    /// The standard basis vector `e_i` (0-based).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = F::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, F> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(F::is_zero)
    }

    pub fn dot(&self, other: &Self) -> F {
        debug_assert_eq!(self.len(), other.len());
        let mut acc = F::zero();
        for (x, y) in self.0.iter().zip(&other.0) {
            if !x.is_zero() && !y.is_zero() {
                acc += x.clone() * y.clone();
            }
        }
        acc
    }

    pub fn scale(&self, s: &F) -> Self {
        Vector(self.0.iter().map(|x| x.clone() * s.clone()).collect())
    }

    pub fn map<G, M: Fn(&F) -> G>(&self, f: M) -> Vector<G> {
        Vector(self.0.iter().map(f).collect())
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Vector(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Self {
        Vector(self.0[start..end].to_vec())
    }
}

impl Vector<Rational> {
    pub fn to_gaussian(&self) -> Vector<GaussianRational> {
        self.map(|x| GaussianRational::real(x.clone()))
    }
}

impl Vector<GaussianRational> {
    pub fn conj(&self) -> Self {
        self.map(GaussianRational::conj)
    }
}

impl<F> From<Vec<F>> for Vector<F> {
    fn from(v: Vec<F>) -> Self {
        Vector(v)
    }
}

impl<F> Index<usize> for Vector<F> {
    type Output = F;
    fn index(&self, i: usize) -> &F {
        &self.0[i]
    }
}

impl<F> IndexMut<usize> for Vector<F> {
    fn index_mut(&mut self, i: usize) -> &mut F {
        &mut self.0[i]
    }
}

impl<F: Field> Add for Vector<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<'a, F: Field> Add<&'a Vector<F>> for &'a Vector<F> {
    type Output = Vector<F>;
    fn add(self, rhs: &'a Vector<F>) -> Vector<F> {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<F: Field> Sub for Vector<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<'a, F: Field> Sub<&'a Vector<F>> for &'a Vector<F> {
    type Output = Vector<F>;
    fn sub(self, rhs: &'a Vector<F>) -> Vector<F> {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<F: Field> Neg for Vector<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Vector(self.0.into_iter().map(|x| -x).collect())
    }
}

impl<F: fmt::Display> fmt::Display for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl<F: fmt::Display> fmt::Debug for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Outcome of [`Matrix::solve`].
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<F: Field> {
    Unique(Vector<F>),
    NoSolution,
    /// One particular solution plus a nonzero kernel vector.
    NonUnique {
        particular: Vector<F>,
        kernel: Vector<F>,
    },
}

impl<F: Field> Solution<F> {
    pub fn unique(self) -> Result<Vector<F>> {
        match self {
            Solution::Unique(x) => Ok(x),
            Solution::NoSolution => Err(Error::NoSolution),
            Solution::NonUnique { .. } => Err(Error::NonUnique),
        }
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn diag(entries: Vec<F>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.into_iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from a list of rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Builds the operator whose column `j` is `images[j]`, the image of `e_j`.
    pub fn from_columns(images: Vec<Vector<F>>) -> Result<Self> {
        let cols = images.len();
        let rows = images.first().map_or(0, Vector::len);
        for v in &images {
            if v.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: v.len(),
                });
            }
        }
        Ok(Self::from_fn(rows, cols, |r, c| images[c][r].clone()))
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

    pub fn row(&self, r: usize) -> Vector<F> {
        Vector(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn column(&self, c: usize) -> Vector<F> {
        Vector((0..self.rows).map(|r| self[(r, c)].clone()).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).0).collect()
    }

    /// Row-major entries as one vector.
    pub fn flatten(&self) -> Vector<F> {
        Vector(self.data.clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && *self == -self.transpose()
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    pub fn map<G, M: Fn(&F) -> G>(&self, f: M) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul_vec(&self, v: &Vector<F>) -> Vector<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let mut out = Vector::zeros(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = &self[(r, c)];
                if !a.is_zero() {
                    out[r] += a.clone() * x.clone();
                }
            }
        }
        out
    }

    /// `xᵀ · self · y`, the bilinear form with this Gram matrix.
    pub fn bilinear(&self, x: &Vector<F>, y: &Vector<F>) -> F {
        x.dot(&self.mul_vec(y))
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m[(self.rows + r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }

    /// Writes `block` with its top-left corner at `(row, col)`.
    pub fn set_block(&mut self, row: usize, col: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(row + r, col + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination with
    /// first-nonzero-pivot selection.
    pub fn determinant(&self) -> Result<F> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(F::one());
        }
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev = F::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(F::zero()),
                }
            }
            let pivot = m[(k, k)].clone();
            let prev_inv = prev.inv().expect("Bareiss pivot is nonzero");
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = pivot.clone() * m[(i, j)].clone() - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = v * prev_inv.clone();
                }
                m[(i, k)] = F::zero();
            }
            prev = pivot;
        }
        let d = m[(n - 1, n - 1)].clone();
        Ok(if sign_flip { -d } else { d })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m[(row, c)].clone() * inv.clone();
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    let v = m[(r, c)].clone() - factor.clone() * m[(row, c)].clone();
                    m[(r, c)] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self·x = 0}`, one vector per free column, in column order.
    pub fn nullspace(&self) -> Vec<Vector<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::zeros(self.cols);
                v[f] = F::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Exact solve of `self · x = b` by Gaussian elimination.
    pub fn solve(&self, b: &Vector<F>) -> Result<Solution<F>> {
        self.require_square()?;
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let n = self.cols;
        let aug = Self::from_fn(self.rows, n + 1, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.contains(&n) {
            return Ok(Solution::NoSolution);
        }
        let mut x = Vector::zeros(n);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, n)].clone();
        }
        if pivots.len() == n {
            Ok(Solution::Unique(x))
        } else {
            let kernel = self
                .nullspace()
                .into_iter()
                .next()
                .expect("rank deficiency implies a kernel vector");
            Ok(Solution::NonUnique {
                particular: x,
                kernel,
            })
        }
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                F::one()
            } else {
                F::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::from_fn(n, n, |r, c| red[(r, n + c)].clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Matrix<Rational> {
    pub fn to_gaussian(&self) -> Matrix<GaussianRational> {
        self.map(|x| GaussianRational::real(x.clone()))
    }

    /// Convenience constructor from integer rows.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }
}

/// Free-function form of [`Matrix::solve`].
pub fn solve_linear<F: Field>(a: &Matrix<F>, b: &Vector<F>) -> Result<Solution<F>> {
    a.solve(b)
}

pub fn determinant<F: Field>(a: &Matrix<F>) -> Result<F> {
    a.determinant()
}

pub fn matrix_inverse<F: Field>(a: &Matrix<F>) -> Result<Matrix<F>> {
    a.inverse()
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.data[r * self.cols + c]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl<'a, F: Field> Mul<&'a Matrix<F>> for &'a Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &'a Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

impl<F: Field> Mul for Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: Matrix<F>) -> Matrix<F> {
        &self * &rhs
    }
}

impl<'a, F: Field> Add<&'a Matrix<F>> for &'a Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, rhs: &'a Matrix<F>) -> Matrix<F> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<'a, F: Field> Sub<&'a Matrix<F>> for &'a Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, rhs: &'a Matrix<F>) -> Matrix<F> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<F: Field> Neg for Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.into_iter().map(|x| -x).collect(),
        }
    }
}

impl<F: fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[r * self.cols + c])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field + Serialize> Serialize for Matrix<F> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de, F: Field + Deserialize<'de>> Deserialize<'de> for Matrix<F> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<F>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn v(xs: &[Rational]) -> Vector<Rational> {
        Vector(xs.to_vec())
    }

    #[test]
    fn solve_identity() {
        let a = Matrix::<Rational>::identity(3);
        let b = v(&[q(1, 1), q(1, 2), q(-3, 1)]);
        assert_eq!(a.solve(&b).unwrap(), Solution::Unique(b.clone()));
    }

    #[test]
    fn solve_diagonal() {
        let a = Matrix::from_ints(&[&[2, 0], &[0, 3]]);
        let x = a.solve(&v(&[q(1, 1), q(1, 1)])).unwrap().unique().unwrap();
        assert_eq!(x, v(&[q(1, 2), q(1, 3)]));
    }

    #[test]
    fn solve_inconsistent() {
        let a = Matrix::from_ints(&[&[1, 1], &[2, 2]]);
        assert_eq!(a.solve(&v(&[q(1, 1), q(3, 1)])).unwrap(), Solution::NoSolution);
    }

    #[test]
    fn solve_underdetermined_reports_kernel() {
        let a = Matrix::from_ints(&[&[1, 1], &[2, 2]]);
        match a.solve(&v(&[q(1, 1), q(2, 1)])).unwrap() {
            Solution::NonUnique { particular, kernel } => {
                assert!(!kernel.is_zero());
                assert!(a.mul_vec(&kernel).is_zero());
                assert_eq!(a.mul_vec(&particular), v(&[q(1, 1), q(2, 1)]));
            }
            other => panic!("expected NonUnique, got {other:?}"),
        }
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = Matrix::<Rational>::identity(2);
        assert!(matches!(
            a.solve(&v(&[q(1, 1)])),
            Err(Error::DimensionMismatch { .. })
        ));
        let r = Matrix::<Rational>::zeros(2, 3);
        assert!(matches!(r.solve(&v(&[q(1, 1), q(1, 1)])), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn determinants() {
        assert_eq!(Matrix::<Rational>::identity(4).determinant().unwrap(), q(1, 1));
        assert_eq!(Matrix::from_ints(&[&[0, -1], &[1, 0]]).determinant().unwrap(), q(1, 1));
        assert_eq!(Matrix::from_ints(&[&[2, 1], &[1, 1]]).determinant().unwrap(), q(1, 1));
        // pivot swap path
        let m = Matrix::from_ints(&[&[0, 2, 1], &[1, 0, 0], &[0, 0, 3]]);
        assert_eq!(m.determinant().unwrap(), q(-6, 1));
        assert!(Matrix::<Rational>::zeros(2, 3).determinant().is_err());
    }

    #[test]
    fn inverses() {
        let id = Matrix::<Rational>::identity(3);
        assert_eq!(id.inverse().unwrap(), id);
        let d = Matrix::from_ints(&[&[-1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]]);
        assert_eq!(d.inverse().unwrap(), d);
        let s = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(s.inverse().unwrap(), s);
        let sing = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn nullspace_and_rank() {
        let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for k in ns {
            assert!(m.mul_vec(&k).is_zero());
        }
    }

    #[test]
    fn columns_are_images() {
        let m = Matrix::from_columns(vec![v(&[q(0, 1), q(1, 1)]), v(&[q(-1, 1), q(0, 1)])]).unwrap();
        assert_eq!(m, Matrix::from_ints(&[&[0, -1], &[1, 0]]));
        assert_eq!(m.mul_vec(&Vector::basis(2, 0)), v(&[q(0, 1), q(1, 1)]));
    }
}
