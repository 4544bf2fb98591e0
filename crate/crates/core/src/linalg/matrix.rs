//! Dense exact matrices with Gaussian elimination.
//!
//! Tensor products follow one global convention: the basis vector
//! `e_i ⊗ f_j` of `V ⊗ W` has index `i * dim(W) + j`. Every module builds
//! tensor products through [`Matrix::kron`] or the helpers in
//! [`crate::linalg::tensor`], never by hand.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn scalar(field: &Field, n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(field, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(field: &Field, rows: &[&[i64]]) -> Self {
        let data: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_rows(field, data).expect("rectangular literal")
    }

    /// A single column built from a vector.
    pub fn column_vector(field: &Field, v: &[Scalar]) -> Self {
        Matrix { field: field.clone(), rows: v.len(), cols: 1, data: v.to_vec() }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: &Field, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
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

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.field.is_zero(v))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(&self.field, self.rows)
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j].clone();
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field.clone();
        if f.is_zero(c) {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !f.is_zero(b) {
                f.mul_add_assign(a, c, b);
            }
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let f = &self.field;
        if let Field::Prime(p) = f {
            let a = residues(&self.data);
            let b = residues(&other.data);
            let mut c = vec![0u64; self.rows * other.cols];
            for i in 0..self.rows {
                let crow = &mut c[i * other.cols..(i + 1) * other.cols];
                for k in 0..self.cols {
                    let x = a[i * self.cols + k];
                    if x == 0 {
                        continue;
                    }
                    let brow = &b[k * other.cols..(k + 1) * other.cols];
                    for (cv, &bv) in crow.iter_mut().zip(brow) {
                        *cv = (*cv + x * bv) % p;
                    }
                }
            }
            return Matrix {
                field: f.clone(),
                rows: self.rows,
                cols: other.cols,
                data: c.into_iter().map(Scalar::Residue).collect(),
            };
        }
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = &self.data[i * self.cols + k];
                if f.is_zero(x) {
                    continue;
                }
                for j in 0..other.cols {
                    let y = &other.data[k * other.cols + j];
                    if !f.is_zero(y) {
                        f.mul_add_assign(&mut out.data[i * other.cols + j], x, y);
                    }
                }
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        f.mul_add_assign(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..self.rows.min(self.cols) {
            f.add_assign(&mut acc, self.get(i, i));
        }
        acc
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut acc = Self::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Kronecker product; `(A ⊗ B)[(i*rB + k), (j*cB + l)] = A[i][j] * B[k][l]`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(&self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * out.cols + j] = self.get(i, j).clone();
            }
            for j in 0..other.cols {
                out.data[i * out.cols + self.cols + j] = other.get(i, j).clone();
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = idx.iter().map(|&j| self.column(j)).collect();
        Self::from_columns(&self.field, self.rows, &cols)
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Self::zeros(&self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.data[i * cols + j] = self.get(r0 + i, c0 + j).clone();
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        if let Field::Prime(p) = self.field {
            let mut a = residues(&self.data);
            let piv = rref_mod_p(&mut a, self.rows, self.cols, p);
            self.data = a.into_iter().map(Scalar::Residue).collect();
            return piv;
        }
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !f.is_zero(&self.data[i * cols + c])) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(&self.data[r * cols + c]).unwrap();
            for j in c..cols {
                let v = f.mul(&self.data[r * cols + j], &inv);
                self.data[r * cols + j] = v;
            }
            let pivot_row: Vec<Scalar> = self.data[r * cols..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c].clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let neg = f.neg(&factor);
                for j in c..cols {
                    if !f.is_zero(&pivot_row[j]) {
                        f.mul_add_assign(&mut self.data[i * cols + j], &neg, &pivot_row[j]);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns spanning the null space, in the echelon-determined order.
    pub fn kernel_basis(&self) -> Matrix {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(f, self.cols, free.len());
        for (t, &fc) in free.iter().enumerate() {
            k.data[fc * free.len() + t] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                let v = r.get(row, fc);
                if !f.is_zero(v) {
                    k.data[pc * free.len() + t] = f.neg(v);
                }
            }
        }
        k
    }

    /// Solves `self * x = b`; `Ok(None)` when inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        self.same_field(b)?;
        if b.rows != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "system with {} rows, right-hand side with {}",
                self.rows, b.rows
            )));
        }
        let f = &self.field;
        let (r, pivots) = self.hstack(b).rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zeros(f, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.data[pc * b.cols + j] = r.get(row, self.cols + j).clone();
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Self::identity(&self.field, n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.submatrix(0, n, n, n))
    }

    /// Least-degree monic polynomial annihilating a square matrix.
    pub fn minimal_polynomial(&self) -> Polynomial {
        assert!(self.is_square(), "minimal polynomial of a non-square matrix");
        let f = &self.field;
        let n = self.rows;
        let mut basis = crate::linalg::EchelonBasis::new(f, n * n);
        let mut power = Self::identity(f, n);
        let mut d = 0;
        loop {
            let flat = power.data.clone();
            if let Some(combo) = basis.dependency(&flat) {
                // power = Σ combo[i] * M^i
                let mut coeffs: Vec<Scalar> = combo.iter().map(|c| f.neg(c)).collect();
                coeffs.resize(d, f.zero());
                coeffs.push(f.one());
                return Polynomial::new(f, coeffs);
            }
            basis.insert_tracked(&flat);
            power = power.mul(self);
            d += 1;
        }
    }

    pub fn eval_polynomial(&self, p: &Polynomial) -> Matrix {
        let f = &self.field;
        let n = self.rows;
        let mut acc = Self::zeros(f, n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = f.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| self.field.format_scalar(v)).collect())
            .collect()
    }

    pub fn from_strings(field: &Field, rows: &[Vec<String>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| field.parse_scalar(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, parsed)
    }
}

fn residues(data: &[Scalar]) -> Vec<u64> {
    data.iter()
        .map(|s| match s {
            Scalar::Residue(v) => *v,
            _ => unreachable!("prime-field matrix with a non-residue entry"),
        })
        .collect()
}

fn rref_mod_p(a: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                a.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = inv_mod(a[r * cols + c], p);
        for j in c..cols {
            a[r * cols + j] = a[r * cols + j] * inv % p;
        }
        let (before, rest) = a.split_at_mut(r * cols);
        let (prow, after) = rest.split_at_mut(cols);
        for row in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
            let factor = row[c];
            if factor == 0 {
                continue;
            }
            let neg = p - factor;
            for j in c..cols {
                if prow[j] != 0 {
                    row[j] = (row[j] + neg * prow[j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_strings() {
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random(field: &Field, r: usize, c: usize, seed: u64) -> Matrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data = (0..r * c).map(|_| field.sample(&mut rng)).collect();
        Matrix::new(field, r, c, data).unwrap()
    }

    #[test]
    fn rref_examples() {
        let q = Field::rationals();
        let (r, p) = Matrix::identity(&q, 3).rref();
        assert!(r.is_identity());
        assert_eq!(p, vec![0, 1, 2]);
        let (r, p) = Matrix::from_i64(&q, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r, Matrix::from_i64(&q, &[&[1, 1], &[0, 0]]));
        assert_eq!(p, vec![0]);
        let f = Field::prime(7).unwrap();
        let m = random(&f, 5, 5, 3);
        let (r1, _) = m.rref();
        assert_eq!(r1.rref().0, r1);
    }

    #[test]
    fn kernel_examples() {
        let q = Field::rationals();
        let k = Matrix::from_i64(&q, &[&[1, 1], &[1, 1]]).kernel_basis();
        assert_eq!(k, Matrix::from_i64(&q, &[&[-1], &[1]]));
        assert_eq!(Matrix::zeros(&q, 2, 3).kernel_basis().rank(), 3);
        let f = Field::prime(7).unwrap();
        let m = random(&f, 6, 4, 11);
        let k = m.kernel_basis();
        assert!(m.mul(&k).is_zero());
        assert_eq!(k.cols(), 4 - m.rank());
        assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn solve_examples() {
        let q = Field::rationals();
        let b = Matrix::from_i64(&q, &[&[3], &[4]]);
        assert_eq!(Matrix::identity(&q, 2).solve(&b).unwrap(), Some(b.clone()));
        let m = Matrix::from_i64(&q, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.solve(&Matrix::from_i64(&q, &[&[1], &[0]])).unwrap(), None);
        assert!(matches!(m.solve(&Matrix::zeros(&q, 3, 1)), Err(Error::ShapeMismatch(_))));
        let f = Field::prime(7).unwrap();
        let a = random(&f, 4, 6, 5);
        let x0 = random(&f, 6, 1, 6);
        let rhs = a.mul(&x0);
        let x = a.solve(&rhs).unwrap().unwrap();
        assert_eq!(a.mul(&x), rhs);
    }

    #[test]
    fn kron_examples() {
        let f = Field::prime(7).unwrap();
        assert!(Matrix::identity(&f, 2).kron(&Matrix::identity(&f, 3)).unwrap().is_identity());
        let (a, b, c, d) = (random(&f, 3, 3, 1), random(&f, 3, 3, 2), random(&f, 3, 3, 3), random(&f, 3, 3, 4));
        let ab = a.kron(&b).unwrap();
        assert_eq!(ab.trace(), f.mul(&a.trace(), &b.trace()));
        // direct multiplication oracle
        assert_eq!(ab.mul(&c.kron(&d).unwrap()), a.mul(&c).kron(&b.mul(&d)).unwrap());
        let g = Field::prime(11).unwrap();
        assert!(matches!(a.kron(&Matrix::identity(&g, 1)), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn minimal_polynomials() {
        let q = Field::rationals();
        assert_eq!(Matrix::zeros(&q, 3, 3).minimal_polynomial(), Polynomial::x(&q));
        assert_eq!(Matrix::identity(&q, 3).minimal_polynomial(), Polynomial::from_i64(&q, &[-1, 1]));
        let j = Matrix::from_i64(&q, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        // powers of J: J^2 != 0, J^3 = 0
        assert!(!j.pow(2).is_zero() && j.pow(3).is_zero());
        assert_eq!(j.minimal_polynomial(), Polynomial::x(&q).pow(3));
        let f = Field::prime(7).unwrap();
        let m = random(&f, 5, 5, 9);
        assert!(m.eval_polynomial(&m.minimal_polynomial()).is_zero());
    }

    #[test]
    fn inverse_round_trip() {
        let q = Field::rationals();
        let m = Matrix::from_i64(&q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::from_i64(&q, &[&[1, 1], &[1, 1]]).inverse().is_none());
    }
}
