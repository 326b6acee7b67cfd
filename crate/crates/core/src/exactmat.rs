//! Dense exact linear algebra over prime fields.
//!
//! Every entry is stored reduced modulo `p`. Elimination uses the first
//! nonzero entry of each column as pivot, so all results are deterministic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) && p < (1 << 31) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn gf2() -> Self {
        PrimeField { p: 2 }
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(a != 0, "inverse of zero");
        // Fermat: a^(p-2)
        self.pow(a, self.p - 2)
    }

    pub fn pow(self, mut a: u32, mut e: u32) -> u32 {
        let mut r = 1u32 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
}

impl TryFrom<u32> for PrimeField {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.p
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A dense `rows × cols` matrix over a prime field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over GF({})",
            self.rows, self.cols, self.field.p
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Row-reduced echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing entries mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Matrix::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = field.reduce(x);
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given (already reduced) vectors.
    pub fn from_cols(field: PrimeField, rows: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, &x) in col.iter().enumerate() {
                m.data[i * cols.len() + j] = x % field.p;
            }
        }
        m
    }

    pub fn from_raw(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < field.p));
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn col(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        assert_eq!(self.field, other.field, "field mismatch in product");
        let p = self.field.p as u64;
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o = (*o + a * b as u64) % p;
                }
            }
        }
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data: out.into_iter().map(|x| x as u32).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p as u64;
        (0..self.rows)
            .map(|r| {
                let mut s = 0u64;
                for (a, &b) in self.row(r).iter().zip(v) {
                    s = (s + *a as u64 * b as u64) % p;
                }
                s as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    /// `self += s * other`, in place.
    pub fn add_scaled(&mut self, other: &Matrix, s: u32) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            if b != 0 {
                *a = f.add(*a, f.mul(b, s));
            }
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            m.data[r * m.cols..r * m.cols + self.cols].copy_from_slice(self.row(r));
            m.data[r * m.cols + self.cols..(r + 1) * m.cols].copy_from_slice(other.row(r));
        }
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            m.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(self.row(r));
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.data[r * idx.len() + j] = self.data[r * self.cols + c];
            }
        }
        m
    }

    /// Block `self[rows, cols]`.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.data[i * cols.len() + j] = self.data[r * self.cols + c];
            }
        }
        m
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    pub fn echelon(&self) -> Echelon {
        let mut a = self.clone();
        let pivots = a.rref_in_place();
        Echelon { reduced: a, pivots }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let p = f.p as u64;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]) as u64;
            if inv != 1 {
                for j in c..cols {
                    let x = &mut self.data[r * cols + j];
                    *x = ((*x as u64 * inv) % p) as u32;
                }
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let factor = row[c] as u64;
                if factor == 0 {
                    return;
                }
                let neg = p - factor;
                for j in c..cols {
                    let b = pivot_row[j] as u64;
                    if b != 0 {
                        row[j] = ((row[j] as u64 + neg * b) % p) as u32;
                    }
                }
            };
            for row in before.chunks_mut(cols) {
                eliminate(row);
            }
            for row in after.chunks_mut(cols) {
                eliminate(row);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate on the shorter side
        if self.rows > self.cols {
            self.transpose().rank()
        } else {
            self.clone().rref_in_place().len()
        }
    }

    /// Columns form a basis of the null space `{x : self·x = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let f = self.field;
        let ech = self.echelon();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in ech.pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| pivot_set[c].is_none()).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.data[fc * free.len() + j] = 1 % f.p;
            for (r, &pc) in ech.pivots.iter().enumerate() {
                let v = ech.reduced.get(r, fc);
                if v != 0 {
                    k.data[pc * free.len() + j] = f.neg(v);
                }
            }
        }
        k
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "row count mismatch in solve");
        let aug = self.hstack(b);
        let ech = aug.echelon();
        if ech.pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (r, &pc) in ech.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.data[pc * b.cols + j] = ech.reduced.get(r, self.cols + j);
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let x = self.solve(&Matrix::identity(self.field, n))?;
        if self.rank() == n {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Indices of a maximal linearly independent set of columns (leftmost first).
    pub fn independent_columns(&self) -> Vec<usize> {
        self.echelon().pivots
    }

    /// A basis of the column space, as columns of the result.
    pub fn column_space(&self) -> Matrix {
        let idx = self.independent_columns();
        self.select_cols(&idx)
    }

    /// Left inverse of a matrix with independent columns: `L · self = I`.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let t = self.transpose();
        let ech = t.echelon();
        if ech.pivots.len() != self.cols {
            return None;
        }
        let square = self.select_rows(&ech.pivots);
        let inv = square.inverse()?;
        let mut l = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.cols {
            for (j, &pr) in ech.pivots.iter().enumerate() {
                l.data[i * self.rows + pr] = inv.get(i, j);
            }
        }
        Some(l)
    }

    /// Flatten row-major into a single vector (used to compare maps as vectors).
    pub fn to_vec(&self) -> Vec<u32> {
        self.data.clone()
    }
}

/// Extends the columns of `basis` by standard basis vectors drawn from `candidates`
/// until the span contains every candidate; returns the chosen candidates.
pub fn extend_by_standard(field: PrimeField, basis: &Matrix, candidates: &[usize]) -> Vec<usize> {
    let n = basis.rows();
    let mut current = basis.column_space();
    let mut rank = current.cols();
    let mut chosen = Vec::new();
    for &c in candidates {
        let mut e = Matrix::zeros(field, n, 1);
        e.set(c, 0, 1);
        let trial = current.hstack(&e);
        let r = trial.rank();
        if r > rank {
            current = trial;
            rank = r;
            chosen.push(c);
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rank_examples() {
        let f = gf(2);
        assert_eq!(Matrix::zeros(f, 0, 0).rank(), 0);
        assert_eq!(Matrix::identity(f, 3).rank(), 3);
        assert_eq!(Matrix::from_rows(f, &[vec![1, 1], vec![1, 1]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(2);
        assert_eq!(Matrix::identity(f, 4).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(f, 2, 3).kernel_basis().cols(), 3);
        let k = Matrix::from_rows(f, &[vec![1, 1]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.col(0), vec![1, 1]);
    }

    #[test]
    fn solve_examples() {
        let f = gf(2);
        let b = Matrix::from_rows(f, &[vec![1], vec![0], vec![1]]);
        assert_eq!(Matrix::identity(f, 3).solve(&b), Some(b.clone()));
        assert_eq!(Matrix::zeros(f, 3, 3).solve(&b), None);
        let m = Matrix::from_rows(f, &[vec![1, 1], vec![0, 1]]);
        let x = m.solve(&Matrix::from_rows(f, &[vec![0], vec![1]])).unwrap();
        assert_eq!(x.col(0), vec![1, 1]);
    }

    #[test]
    fn not_prime_rejected() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn inverse_and_left_inverse() {
        let f = gf(5);
        let m = Matrix::from_rows(f, &[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 2));
        let tall = Matrix::from_rows(f, &[vec![1, 0], vec![3, 1], vec![0, 4]]);
        let l = tall.left_inverse().unwrap();
        assert_eq!(l.mul(&tall), Matrix::identity(f, 2));
    }

    fn arb_matrix(p: u32, max: usize) -> impl Strategy<Value = Matrix> {
        (0..=max, 0..=max).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0..p, r * c)
                .prop_map(move |d| Matrix::from_raw(PrimeField::new(p).unwrap(), r, c, d))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in prop_oneof![arb_matrix(2, 7), arb_matrix(3, 6), arb_matrix(7, 5)]) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.cols(), m.cols());
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn solve_is_exact(m in arb_matrix(3, 6), seed in proptest::collection::vec(0u32..3, 6)) {
            let x0: Vec<u32> = (0..m.cols()).map(|i| seed[i % seed.len()]).collect();
            let b = Matrix::from_cols(m.field(), m.rows(), &[m.mul_vec(&x0)]);
            let x = m.solve(&b).expect("consistent by construction");
            prop_assert_eq!(m.mul(&x), b);
        }

        #[test]
        fn rank_of_product_bounded(
            (a, b) in (1usize..6, 1usize..6, 1usize..6).prop_flat_map(|(r, k, c)| (
                proptest::collection::vec(0u32..2, r * k)
                    .prop_map(move |d| Matrix::from_raw(PrimeField::gf2(), r, k, d)),
                proptest::collection::vec(0u32..2, k * c)
                    .prop_map(move |d| Matrix::from_raw(PrimeField::gf2(), k, c, d)),
            ))
        ) {
            let ab = a.mul(&b);
            prop_assert!(ab.rank() <= a.rank().min(b.rank()));
        }
    }
}
