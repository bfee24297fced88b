//! Dense exact linear algebra over the rationals.
//!
//! Matrices are row-major. A linear map is stored with the images of the basis
//! vectors as its columns, so `m.mul_vec(x)` applies the map to coordinates `x`.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Vector = Vec<Rational>;

pub fn zero_vector(len: usize) -> Vector {
    vec![Rational::zero(); len]
}

pub fn unit_vector(len: usize, i: usize) -> Vector {
    let mut v = zero_vector(len);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

pub fn add_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(s: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|x| s * x).collect()
}

/// `dst += s * src`
pub fn axpy(dst: &mut [Rational], s: &Rational, src: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (d, x) in dst.iter_mut().zip(src) {
        if !x.is_zero() {
            *d += &(s * x);
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Rational::one())
    }

    pub fn scalar(n: usize, s: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// All rows must have the same length; an empty list gives a 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("column length".into()));
        }
        Ok(Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
    }

    /// Integer literal helper, mostly for tests and catalog data.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect();
        Self::from_rows(rows).expect("rectangular literal")
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

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vector {
        assert_eq!(x.len(), self.cols, "matrix-vector shape");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(x).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape");
        Matrix { rows: self.rows, cols: self.cols, data: add_vectors(&self.data, &other.data) }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shape");
        Matrix { rows: self.rows, cols: self.cols, data: sub_vectors(&self.data, &other.data) }
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: scale_vector(s, &self.data) }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Rational::one())
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            &self[(r / other.rows, c / other.cols)] * &other[(r % other.rows, c % other.cols)]
        })
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn vstack(blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        assert!(blocks.iter().all(|b| b.cols == cols), "vstack column mismatch");
        let data = blocks.iter().flat_map(|b| b.data.iter().cloned()).collect();
        Matrix { rows: blocks.iter().map(|b| b.rows).sum(), cols, data }
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Matrix::identity(n));
        let reduced = rref(&aug);
        if reduced.rank < n || reduced.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| reduced.matrix[(r, n + c)].clone()))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

/// Result of Gauss-Jordan elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        if pr == rows {
            break;
        }
        let Some(found) = (pr..rows).find(|&r| !a[(r, c)].is_zero()) else {
            continue;
        };
        if found != pr {
            for k in 0..cols {
                a.data.swap(found * cols + k, pr * cols + k);
            }
        }
        let inv = a[(pr, c)].recip().expect("nonzero pivot");
        for k in c..cols {
            let v = &a[(pr, k)] * &inv;
            a[(pr, k)] = v;
        }
        let pivot_row: Vector = a.row(pr).to_vec();
        for r in 0..rows {
            if r == pr || a[(r, c)].is_zero() {
                continue;
            }
            let factor = -&a[(r, c)];
            axpy(&mut a.data[r * cols..(r + 1) * cols], &factor, &pivot_row);
        }
        pivots.push(c);
        pr += 1;
    }
    Rref { matrix: a, rank: pr, pivots }
}

/// A linear subspace of `Q^ambient_dim`, stored as the nonzero rows of a reduced
/// row-echelon matrix. Two subspaces are equal iff their bases compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vector>,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis { ambient_dim, vectors: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, &(0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect::<Vec<_>>())
            .expect("unit vectors have the ambient length")
    }

    /// Echelonized span of arbitrary vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {ambient_dim}",
                v.len()
            )));
        }
        let m = Matrix::from_fn(vectors.len(), ambient_dim, |r, c| vectors[r][c].clone());
        let red = rref(&m);
        let vectors = (0..red.rank).map(|r| red.matrix.row(r).to_vec()).collect();
        Ok(SubspaceBasis { ambient_dim, vectors, pivots: red.pivots })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the echelon basis; the remainder is zero iff `v` is in the span.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.vectors.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                axpy(&mut r, &-c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && is_zero_vector(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.vectors.iter().all(|v| self.contains(v))
    }
}

/// Basis of `{x : m x = 0}`, echelonized.
pub fn kernel_basis(m: &Matrix) -> SubspaceBasis {
    let red = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vector> = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = unit_vector(n, free);
            for (row, &p) in red.pivots.iter().enumerate() {
                v[p] = -&red.matrix[(row, free)];
            }
            v
        })
        .collect();
    SubspaceBasis::span(n, &vectors).expect("kernel vectors have the column length")
}

/// Echelonized basis of the column space of `m`.
pub fn image_basis(m: &Matrix) -> SubspaceBasis {
    let columns: Vec<Vector> = (0..m.cols()).map(|c| m.column(c)).collect();
    SubspaceBasis::span(m.rows(), &columns).expect("columns have the row length")
}

/// Representatives for a basis of `z / b`: an echelonized complement of `b` inside `z`.
pub fn quotient_representatives(z: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis> {
    if z.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "quotient of subspaces in ambient dimensions {} and {}",
            z.ambient_dim, b.ambient_dim
        )));
    }
    if let Some(index) = b.vectors.iter().position(|v| !z.contains(v)) {
        return Err(Error::ContainmentViolation { index });
    }
    let mut acc = b.clone();
    let mut reps = Vec::new();
    for v in &z.vectors {
        if !acc.contains(v) {
            reps.push(v.clone());
            let mut all = acc.vectors.clone();
            all.push(v.clone());
            acc = SubspaceBasis::span(z.ambient_dim, &all)?;
        }
    }
    SubspaceBasis::span(z.ambient_dim, &reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn rref_identity() {
        let r = rref(&Matrix::identity(2));
        assert_eq!(r.matrix, Matrix::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_dependent_rows() {
        let r = rref(&Matrix::from_ints(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.matrix, Matrix::from_ints(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_with_fractions() {
        let m = Matrix::from_ints(&[&[2, 1, 1], &[4, 3, 3], &[8, 7, 9]]);
        let r = rref(&m);
        assert_eq!(r.rank, 3);
        assert_eq!(r.matrix, Matrix::identity(3));
        let m = Matrix::from_ints(&[&[0, 3, 1]]);
        assert_eq!(rref(&m).matrix.row(0), &[q(0, 1), q(1, 1), q(1, 3)]);
    }

    #[test]
    fn kernel_edge_cases() {
        assert_eq!(kernel_basis(&Matrix::identity(3)).dim(), 0);
        let k = kernel_basis(&Matrix::zeros(3, 3));
        assert_eq!(k, SubspaceBasis::full(3));
        let k = kernel_basis(&Matrix::zeros(0, 2));
        assert_eq!(k.dim(), 2);
    }

    #[test]
    fn image_edge_cases() {
        assert_eq!(image_basis(&Matrix::identity(3)), SubspaceBasis::full(3));
        assert_eq!(image_basis(&Matrix::zeros(2, 3)).dim(), 0);
        let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        let im = image_basis(&m);
        assert_eq!(im.dim(), 1);
        assert!(im.contains(&[q(1, 1), q(2, 1)]));
    }

    #[test]
    fn quotient_cases() {
        let plane = SubspaceBasis::span(3, &[unit_vector(3, 0), unit_vector(3, 1)]).unwrap();
        let reps = quotient_representatives(&plane, &plane).unwrap();
        assert_eq!(reps.dim(), 0);
        let reps = quotient_representatives(&plane, &SubspaceBasis::zero(3)).unwrap();
        assert_eq!(reps, plane);
        let line = SubspaceBasis::span(3, &[vec![q(1, 1), q(1, 1), q(0, 1)]]).unwrap();
        let reps = quotient_representatives(&plane, &line).unwrap();
        assert_eq!(reps.dim(), 1);
        assert!(!line.contains(&reps.vectors()[0]));
        assert!(plane.contains(&reps.vectors()[0]));
    }

    #[test]
    fn quotient_rejects_non_subspace() {
        let line = SubspaceBasis::span(2, &[unit_vector(2, 0)]).unwrap();
        let other = SubspaceBasis::span(2, &[unit_vector(2, 1)]).unwrap();
        assert_eq!(quotient_representatives(&line, &other), Err(Error::ContainmentViolation { index: 0 }));
        let wrong_dim = SubspaceBasis::zero(3);
        assert!(matches!(quotient_representatives(&line, &wrong_dim), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn inverse_and_kron() {
        let m = Matrix::from_ints(&[&[1, 0], &[3, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, Matrix::from_ints(&[&[1, 0], &[-3, 1]]));
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let k = Matrix::identity(2).kron(&Matrix::from_ints(&[&[0, 1], &[0, 0]]));
        assert_eq!(k.rows(), 4);
        assert_eq!(k[(0, 1)], q(1, 1));
        assert_eq!(k[(2, 3)], q(1, 1));
        assert_eq!(k[(0, 3)], q(0, 1));
    }
}
