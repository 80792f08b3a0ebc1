//! Dense vectors and matrices over a clodum.
//!
//! The max-⋆ product ⊠ replaces (+,×) with (∨,⋆); the min-⋆′ product ⊠′
//! replaces them with (∧,⋆′). A matrix acts on vectors as a dilation
//! δ_M(x) = M ⊠ x or an erosion M ⊠′ y; each has a unique adjoint operator
//! built from the scalar adjoints, and for clogs the adjoints reduce to
//! products with the conjugate transpose M*.
//!
//! Storage is dense row-major; the systems this library targets are small.

use crate::clodum::{Clodum, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    clodum: Clodum,
    data: Vec<Scalar>,
}

impl Vector {
    pub fn new(clodum: Clodum, data: Vec<Scalar>) -> Self {
        Vector { clodum, data }
    }

    /// Build from raw numbers, validating each against the carrier.
    pub fn from_f64s(clodum: Clodum, values: &[f64]) -> Result<Self> {
        let data = values
            .iter()
            .map(|&v| clodum.scalar(v))
            .collect::<Result<_>>()?;
        Ok(Vector { clodum, data })
    }

    pub fn filled(clodum: Clodum, len: usize, s: Scalar) -> Self {
        Vector {
            clodum,
            data: vec![s; len],
        }
    }

    pub fn bottoms(clodum: Clodum, len: usize) -> Self {
        Self::filled(clodum, len, Scalar::Bottom)
    }

    pub fn tops(clodum: Clodum, len: usize) -> Self {
        Self::filled(clodum, len, Scalar::Top)
    }

    /// Impulse vector q_j: identity e at position j, ⊥ elsewhere.
    pub fn impulse(clodum: Clodum, len: usize, j: usize) -> Self {
        let mut v = Self::bottoms(clodum, len);
        v.data[j] = clodum.unit();
        v
    }

    /// Dual impulse q′_j: e′ at position j, ⊤ elsewhere.
    pub fn dual_impulse(clodum: Clodum, len: usize, j: usize) -> Self {
        let mut v = Self::tops(clodum, len);
        v.data[j] = clodum.dual_unit();
        v
    }

    pub fn clodum(&self) -> Clodum {
        self.clodum
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        self.data[i]
    }

    pub fn set(&mut self, i: usize, s: Scalar) {
        self.data[i] = s;
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn iter(&self) -> impl Iterator<Item = &Scalar> {
        self.data.iter()
    }

    pub fn join(&self, other: &Vector) -> Result<Vector> {
        self.zip_with(other, Scalar::join)
    }

    pub fn meet(&self, other: &Vector) -> Result<Vector> {
        self.zip_with(other, Scalar::meet)
    }

    fn zip_with(&self, other: &Vector, f: impl Fn(Scalar, Scalar) -> Scalar) -> Result<Vector> {
        check_clodum(self.clodum, other.clodum)?;
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!(
                "vector lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(Vector {
            clodum: self.clodum,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// V-translation a ⋆ x, componentwise.
    pub fn scale(&self, a: Scalar) -> Vector {
        Vector {
            clodum: self.clodum,
            data: self.data.iter().map(|&x| self.clodum.mul(a, x)).collect(),
        }
    }

    /// Dual V-translation a ⋆′ x, componentwise.
    pub fn dual_scale(&self, a: Scalar) -> Vector {
        Vector {
            clodum: self.clodum,
            data: self
                .data
                .iter()
                .map(|&x| self.clodum.dual_mul(a, x))
                .collect(),
        }
    }

    pub fn conjugate(&self) -> Vector {
        Vector {
            clodum: self.clodum,
            data: self.data.iter().map(|&x| self.clodum.conjugate(x)).collect(),
        }
    }

    pub fn le(&self, other: &Vector) -> bool {
        self.len() == other.len()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.le(*b))
    }

    /// Coordinatewise ≤ up to tolerance.
    pub fn le_tol(&self, other: &Vector, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.le_tol(*b, tol))
    }

    pub fn approx_eq(&self, other: &Vector, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.approx_eq(*b, tol))
    }

    /// Supremum of the entries.
    pub fn sup(&self) -> Scalar {
        self.data
            .iter()
            .copied()
            .fold(Scalar::Bottom, Scalar::join)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    clodum: Clodum,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(clodum: Clodum, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix {
            clodum,
            rows,
            cols,
            data,
        })
    }

    /// Build from rows of raw numbers, validating against the carrier.
    pub fn from_rows(clodum: Clodum, rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch(
                    "ragged rows in matrix literal".to_string(),
                ));
            }
            for &v in row {
                data.push(clodum.scalar(v)?);
            }
        }
        Matrix::new(clodum, r, c, data)
    }

    pub fn filled(clodum: Clodum, rows: usize, cols: usize, s: Scalar) -> Self {
        Matrix {
            clodum,
            rows,
            cols,
            data: vec![s; rows * cols],
        }
    }

    pub fn bottoms(clodum: Clodum, rows: usize, cols: usize) -> Self {
        Self::filled(clodum, rows, cols, Scalar::Bottom)
    }

    /// Max-⋆ identity: e on the diagonal, ⊥ off it.
    pub fn identity(clodum: Clodum, n: usize) -> Self {
        let mut m = Self::bottoms(clodum, n, n);
        for i in 0..n {
            m.set(i, i, clodum.unit());
        }
        m
    }

    /// Min-⋆′ identity: e′ on the diagonal, ⊤ off it.
    pub fn dual_identity(clodum: Clodum, n: usize) -> Self {
        let mut m = Self::filled(clodum, n, n, Scalar::Top);
        for i in 0..n {
            m.set(i, i, clodum.dual_unit());
        }
        m
    }

    pub fn clodum(&self) -> Clodum {
        self.clodum
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

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        self.data[i * self.cols + j] = s;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector {
            clodum: self.clodum,
            data: (0..self.rows).map(|i| self.get(i, j)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
        }
        Matrix {
            clodum: self.clodum,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Adjoint (conjugate transpose) M* = [conj(m_ji)]. Involutive.
    pub fn adjoint(&self) -> Result<Matrix> {
        if !self.clodum.is_self_conjugate() {
            return Err(Error::Unsupported(format!(
                "adjoint requires a self-conjugate clodum, {} is not",
                self.clodum
            )));
        }
        let t = self.transpose();
        Ok(Matrix {
            clodum: t.clodum,
            rows: t.rows,
            cols: t.cols,
            data: t.data.iter().map(|&s| self.clodum.conjugate(s)).collect(),
        })
    }

    fn check_mul(&self, other_rows: usize, other_clodum: Clodum) -> Result<()> {
        check_clodum(self.clodum, other_clodum)?;
        if self.cols != other_rows {
            return Err(Error::DimensionMismatch(format!(
                "inner dimensions {} and {other_rows}",
                self.cols
            )));
        }
        Ok(())
    }

    /// Max-⋆ matrix product: entry (i,j) = ⋁_k a_ik ⋆ b_kj.
    pub fn max_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_mul(other.rows, other.clodum)?;
        self.product(other, Scalar::Bottom, Scalar::join, |a, b| {
            self.clodum.mul(a, b)
        })
    }

    /// Min-⋆′ matrix product: entry (i,j) = ⋀_k a_ik ⋆′ b_kj.
    pub fn min_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_mul(other.rows, other.clodum)?;
        self.product(other, Scalar::Top, Scalar::meet, |a, b| {
            self.clodum.dual_mul(a, b)
        })
    }

    /// Min-⋆♯ product ⊠♯: entry (i,j) = ⋀_k ⋆♯(a_ik, b_kj).
    pub fn adj_erosion_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_mul(other.rows, other.clodum)?;
        self.product(other, Scalar::Top, Scalar::meet, |a, b| {
            self.clodum.adj_erosion(a, b)
        })
    }

    /// Max-adjoint-dilation product: entry (i,j) = ⋁_k adj_dilation(a_ik, b_kj).
    pub fn adj_dilation_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_mul(other.rows, other.clodum)?;
        self.product(other, Scalar::Bottom, Scalar::join, |a, b| {
            self.clodum.adj_dilation(a, b)
        })
    }

    fn product(
        &self,
        other: &Matrix,
        init: Scalar,
        fold: impl Fn(Scalar, Scalar) -> Scalar,
        op: impl Fn(Scalar, Scalar) -> Scalar,
    ) -> Result<Matrix> {
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = init;
                for k in 0..self.cols {
                    acc = fold(acc, op(self.get(i, k), other.get(k, j)));
                }
                data.push(acc);
            }
        }
        Matrix::new(self.clodum, self.rows, other.cols, data)
    }

    fn vec_product(
        &self,
        x: &Vector,
        init: Scalar,
        fold: impl Fn(Scalar, Scalar) -> Scalar,
        op: impl Fn(Scalar, Scalar) -> Scalar,
    ) -> Result<Vector> {
        self.check_mul(x.len(), x.clodum())?;
        let data = (0..self.rows)
            .map(|i| {
                let mut acc = init;
                for k in 0..self.cols {
                    acc = fold(acc, op(self.get(i, k), x.get(k)));
                }
                acc
            })
            .collect();
        Ok(Vector {
            clodum: self.clodum,
            data,
        })
    }

    /// Vector dilation δ_M(x) = M ⊠ x, b_i = ⋁_j m_ij ⋆ x_j.
    pub fn max_mul_vec(&self, x: &Vector) -> Result<Vector> {
        self.vec_product(x, Scalar::Bottom, Scalar::join, |a, b| self.clodum.mul(a, b))
    }

    /// Vector erosion M ⊠′ y, b_i = ⋀_j m_ij ⋆′ y_j.
    pub fn min_mul_vec(&self, y: &Vector) -> Result<Vector> {
        self.vec_product(y, Scalar::Top, Scalar::meet, |a, b| {
            self.clodum.dual_mul(a, b)
        })
    }

    /// Adjoint vector erosion of δ_M: ε_M(y)_j = ⋀_i ⋆♯(m_ij, y_i), so that
    /// δ_M(x) ≤ y ⇔ x ≤ ε_M(y). For clogs this equals M* ⊠′ y.
    pub fn adjoint_erosion_vec(&self, y: &Vector) -> Result<Vector> {
        check_clodum(self.clodum, y.clodum())?;
        if self.rows != y.len() {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} rows, vector has {}",
                self.rows,
                y.len()
            )));
        }
        let data = (0..self.cols)
            .map(|j| {
                let mut acc = Scalar::Top;
                for i in 0..self.rows {
                    acc = acc.meet(self.clodum.adj_erosion(self.get(i, j), y.get(i)));
                }
                acc
            })
            .collect();
        Ok(Vector {
            clodum: self.clodum,
            data,
        })
    }

    /// Adjoint vector dilation of the erosion M ⊠′ y:
    /// δ′_M(x)_j = ⋁_i adj_dilation(m_ij, x_i), so M ⊠′ y ≥ x ⇔ y ≥ δ′_M(x).
    pub fn adjoint_dilation_vec(&self, x: &Vector) -> Result<Vector> {
        check_clodum(self.clodum, x.clodum())?;
        if self.rows != x.len() {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} rows, vector has {}",
                self.rows,
                x.len()
            )));
        }
        let data = (0..self.cols)
            .map(|j| {
                let mut acc = Scalar::Bottom;
                for i in 0..self.rows {
                    acc = acc.join(self.clodum.adj_dilation(self.get(i, j), x.get(i)));
                }
                acc
            })
            .collect();
        Ok(Vector {
            clodum: self.clodum,
            data,
        })
    }

    /// t-fold max-⋆ power; A^(0) is the identity.
    pub fn power(&self, t: usize) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Matrix::identity(self.clodum, self.rows);
        for _ in 0..t {
            acc = self.max_mul(&acc)?;
        }
        Ok(acc)
    }

    /// t-fold min-⋆′ power; A^(0) is the dual identity.
    pub fn dual_power(&self, t: usize) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Matrix::dual_identity(self.clodum, self.rows);
        for _ in 0..t {
            acc = self.min_mul(&acc)?;
        }
        Ok(acc)
    }

    /// Elementwise supremum.
    pub fn join(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, Scalar::join)
    }

    /// Elementwise infimum.
    pub fn meet(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, Scalar::meet)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(Scalar, Scalar) -> Scalar) -> Result<Matrix> {
        check_clodum(self.clodum, other.clodum)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            clodum: self.clodum,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// Scalar V-translation a ⋆ M, entrywise.
    pub fn scale(&self, a: Scalar) -> Matrix {
        Matrix {
            clodum: self.clodum,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&m| self.clodum.mul(a, m)).collect(),
        }
    }

    pub fn le(&self, other: &Matrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.le(*b))
    }

    /// Entrywise ≤ up to tolerance.
    pub fn le_tol(&self, other: &Matrix, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.le_tol(*b, tol))
    }

    pub fn approx_eq(&self, other: &Matrix, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.approx_eq(*b, tol))
    }

    pub fn entries(&self) -> impl Iterator<Item = &Scalar> {
        self.data.iter()
    }

    /// Paste `block` into self with its upper-left corner at (i0, j0).
    pub fn paste(&mut self, i0: usize, j0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(i0 + i, j0 + j, block.get(i, j));
            }
        }
    }
}

fn check_clodum(a: Clodum, b: Clodum) -> Result<()> {
    if a != b {
        return Err(Error::CloudmMismatch(a.name(), b.name()));
    }
    Ok(())
}
