//! Dense exact linear algebra over prime fields and the rationals.
//!
//! Matrices here are small (quiver representations at desk scale), so plain
//! Gaussian elimination is all we need. Every element carries enough context
//! to produce its own zero and one, which lets the same code run over F_p
//! (runtime modulus) and over arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// An exact field element. `zero_like`/`one_like` exist because F_p elements
/// carry their modulus at runtime.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64_like(&self, v: i64) -> Self;
}

/// Element of F_p for an odd prime p.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    pub val: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(val: i64, p: u64) -> Self {
        let m = val.rem_euclid(p as i64) as u64;
        Fp { val: m, p }
    }

    pub fn random<R: Rng>(p: u64, rng: &mut R) -> Self {
        Fp {
            val: rng.gen_range(0..p),
            p,
        }
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp { val: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { val: 1, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.val == 0
    }
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        Fp {
            val: (self.val + other.val) % self.p,
            p: self.p,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        Fp {
            val: (self.val + self.p - other.val) % self.p,
            p: self.p,
        }
    }
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        Fp {
            val: ((self.val as u128 * other.val as u128) % self.p as u128) as u64,
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            val: (self.p - self.val) % self.p,
            p: self.p,
        }
    }
    fn inv(&self) -> Self {
        assert!(self.val != 0, "division by zero in F_p");
        // extended Euclid
        let (mut a, mut b) = (self.val as i128, self.p as i128);
        let (mut x0, mut x1) = (1i128, 0i128);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        debug_assert_eq!(a, 1);
        Fp {
            val: x0.rem_euclid(self.p as i128) as u64,
            p: self.p,
        }
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Fp::new(v, self.p)
    }
}

/// Arbitrary-precision rational, wrapped so it can implement [`Field`].
#[derive(Clone, PartialEq, Debug)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn from_int(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }
}

impl Field for Rat {
    fn zero_like(&self) -> Self {
        Rat(BigRational::zero())
    }
    fn one_like(&self) -> Self {
        Rat(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Rat(-self.0.clone())
    }
    fn inv(&self) -> Self {
        assert!(!self.0.is_zero(), "division by zero");
        Rat(self.0.recip())
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Rat::from_int(v)
    }
}

impl Rat {
    pub fn abs_cmp_key(&self) -> BigRational {
        self.0.abs()
    }
}

/// Dense row-major matrix over an exact field. Keeps its own zero element so
/// that 0×n matrices retain field context.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
    zero_elem: F,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize, zero: F) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero.clone(); rows * cols],
            zero_elem: zero,
        }
    }

    pub fn identity(n: usize, zero: F) -> Self {
        let mut m = Matrix::zeros(n, n, zero.clone());
        for i in 0..n {
            m[(i, i)] = zero.one_like();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>, zero: F) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Matrix::zeros(r, c, zero);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, zero: F, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut m = Matrix::zeros(rows, cols, zero);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let zero = self.zero();
        Matrix::from_fn(self.cols, self.rows, zero, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let zero = self.zero();
        let mut out = Matrix::zeros(self.rows, other.cols, zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)].add(&a.mul(&other[(k, j)]));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let zero = self.zero();
        Matrix::from_fn(self.rows, self.cols, zero, |i, j| {
            self[(i, j)].add(&other[(i, j)])
        })
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let zero = self.zero();
        Matrix::from_fn(self.rows, self.cols, zero, |i, j| {
            self[(i, j)].sub(&other[(i, j)])
        })
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        let zero = self.zero();
        Matrix::from_fn(self.rows, self.cols, zero, |i, j| self[(i, j)].mul(c))
    }

    pub fn zero(&self) -> F {
        self.zero_elem.clone()
    }

    /// Row-reduce in place; returns the rank. `self` becomes row echelon.
    pub fn row_reduce(&mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let pivot = (rank..self.rows).find(|&r| !self[(r, col)].is_zero());
            let Some(p) = pivot else { continue };
            self.swap_rows(rank, p);
            let inv = self[(rank, col)].inv();
            for j in col..self.cols {
                self[(rank, j)] = self[(rank, j)].mul(&inv);
            }
            for r in 0..self.rows {
                if r != rank && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)].clone();
                    for j in col..self.cols {
                        let delta = factor.mul(&self[(rank, j)]);
                        self[(r, j)] = self[(r, j)].sub(&delta);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m = self.clone();
        m.row_reduce()
    }

    /// Basis of the right kernel {x : Ax = 0}, as column vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let zero = self.zero();
        if self.cols == 0 {
            return vec![];
        }
        if self.rows == 0 {
            // whole space
            return (0..self.cols)
                .map(|j| {
                    let mut v = vec![zero.clone(); self.cols];
                    v[j] = zero.one_like();
                    v
                })
                .collect();
        }
        let mut m = self.clone();
        m.row_reduce();
        // locate pivots
        let mut pivot_of_col = vec![None; m.cols];
        let mut r = 0;
        for c in 0..m.cols {
            if r < m.rows && !m[(r, c)].is_zero() {
                pivot_of_col[c] = Some(r);
                r += 1;
            }
        }
        let mut basis = vec![];
        for free in 0..m.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![zero.clone(); m.cols];
            v[free] = zero.one_like();
            for c in 0..m.cols {
                if let Some(pr) = pivot_of_col[c] {
                    v[c] = m[(pr, free)].neg();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, or None when singular.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols, "inverse needs a square matrix");
        let n = self.rows;
        let zero = self.zero();
        // augmented [A | I] reduction
        let mut aug = Matrix::zeros(n, 2 * n, zero.clone());
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = zero.one_like();
        }
        aug.row_reduce();
        // invertible iff the left block reduced to the identity
        for i in 0..n {
            for j in 0..n {
                let want_one = i == j;
                if aug[(i, j)].is_zero() == want_one {
                    return None;
                }
            }
        }
        let mut inv = Matrix::zeros(n, n, zero);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}
