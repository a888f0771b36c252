use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::Polynomial;
use crate::scalar::Scalar;

/// Dense square matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidSize(format!(
                "row of length {} in a matrix with {n} rows",
                bad.len()
            )));
        }
        Ok(Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Symmetric 0/1 adjacency matrix of `g`.
    pub fn adjacency(g: &Graph) -> Self {
        let mut m = Self::zeros(g.vertex_count());
        for &(u, v) in g.edges() {
            m[(u, v)] = T::one();
            m[(v, u)] = T::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|x| x.clone() * k.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// `Aᵀ = −A`, which also forces a zero diagonal.
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|i| (0..=i).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    /// The `size × size` block at block coordinates `(bi, bj)`.
    pub fn block(&self, bi: usize, bj: usize, size: usize) -> Self {
        Self::from_fn(size, |i, j| self[(bi * size + i, bj * size + j)].clone())
    }

    /// Determinant by Bareiss fraction-free elimination. Every division in
    /// the elimination is exact, so integer entries stay integral.
    pub fn det_bareiss(&self) -> T {
        let n = self.n;
        if n == 0 {
            return T::one();
        }
        let mut m = self.data.clone();
        let at = |i: usize, j: usize| i * n + j;
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[at(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[at(i, k)].is_zero()) else {
                    return T::zero();
                };
                for j in 0..n {
                    m.swap(at(k, j), at(p, j));
                }
                negate = !negate;
            }
            let pivot = m[at(k, k)].clone();
            for i in k + 1..n {
                let lead = m[at(i, k)].clone();
                for j in k + 1..n {
                    let v = (m[at(i, j)].clone() * pivot.clone()
                        - lead.clone() * m[at(k, j)].clone())
                        / prev.clone();
                    m[at(i, j)] = v;
                }
                m[at(i, k)] = T::zero();
            }
            prev = pivot;
        }
        let d = m[at(n - 1, n - 1)].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// `det(xI − A)` by Berkowitz's division-free algorithm.
    pub fn char_poly(&self) -> Polynomial<T> {
        // coefficients highest degree first while iterating
        let mut c: Vec<T> = vec![T::one()];
        for r in 0..self.n {
            // A_r = [[A_{r-1}, s], [row, a_rr]]
            let s: Vec<T> = (0..r).map(|i| self[(i, r)].clone()).collect();
            let row: Vec<T> = (0..r).map(|j| self[(r, j)].clone()).collect();
            let mut col = Vec::with_capacity(r + 1);
            col.push(T::one());
            col.push(-self[(r, r)].clone());
            // −row · A_{r-1}^k · s for k = 0..r-1
            let mut v = s;
            for k in 0..r {
                if k > 0 {
                    v = (0..r)
                        .map(|i| {
                            (0..r).fold(T::zero(), |acc, j| {
                                acc + self[(i, j)].clone() * v[j].clone()
                            })
                        })
                        .collect();
                }
                let dot = row
                    .iter()
                    .zip(&v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone());
                col.push(-dot);
            }
            // Toeplitz (r+2)×(r+1) times c
            let next: Vec<T> = (0..r + 2)
                .map(|i| {
                    (0..=r.min(i)).fold(T::zero(), |acc, j| {
                        if i - j < col.len() && j < c.len() {
                            acc + col[i - j].clone() * c[j].clone()
                        } else {
                            acc
                        }
                    })
                })
                .collect();
            c = next;
        }
        c.reverse();
        Polynomial::new(c)
    }

    /// `Σ coeffs[k] · A^k`, with `A⁰ = I`, by Horner's rule.
    pub fn eval_poly(&self, coeffs: &[T]) -> Self {
        let mut acc = Self::zeros(self.n);
        for c in coeffs.iter().rev() {
            acc = &(&acc * self) + &Self::identity(self.n).scale(c);
        }
        acc
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n + j]
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Matrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = Matrix::<T>::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|x| -x.clone()).collect(),
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        f.debug_list()
            .entries((0..n).map(|i| &self.data[i * n..(i + 1) * n]))
            .finish()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.data[i * self.n..(i + 1) * self.n]
                .iter()
                .map(|x| x.to_string())
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(rows: &[&[i64]]) -> Matrix<i64> {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn det_small() {
        assert_eq!(int(&[&[0, 1], &[-1, 0]]).det_bareiss(), 1);
        assert_eq!(Matrix::<BigInt>::identity(5).det_bareiss(), BigInt::from(1));
        assert_eq!(int(&[&[1, 2], &[3, 4]]).det_bareiss(), -2);
        assert_eq!(Matrix::<i64>::zeros(0).det_bareiss(), 1);
        assert_eq!(int(&[&[1, 2], &[2, 4]]).det_bareiss(), 0);
    }

    #[test]
    fn det_needs_pivoting() {
        // zero leading entry, and a zero pivot that appears mid-elimination
        assert_eq!(int(&[&[0, 2, 1], &[1, 0, 0], &[0, 1, 3]]).det_bareiss(), -5);
        assert_eq!(int(&[&[1, 1, 1], &[1, 1, 2], &[1, 2, 1]]).det_bareiss(), -1);
    }

    #[test]
    fn det_over_floats() {
        let m = Matrix::<f64>::from_rows(vec![vec![2.0, 1.0], vec![1.0, 3.0]]).unwrap();
        assert!((m.det_bareiss() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn non_square_rows_rejected() {
        assert!(Matrix::<i64>::from_rows(vec![vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn char_poly_small() {
        // det(xI - [[1,2],[3,4]]) = x^2 - 5x - 2
        assert_eq!(int(&[&[1, 2], &[3, 4]]).char_poly().coeffs(), &[-2, -5, 1]);
        assert_eq!(Matrix::<i64>::zeros(0).char_poly().coeffs(), &[1]);
        assert_eq!(int(&[&[7]]).char_poly().coeffs(), &[-7, 1]);
    }

    #[test]
    fn char_poly_constant_term_is_signed_det() {
        let m = int(&[
            &[2, -1, 0, 3],
            &[1, 0, 4, -2],
            &[0, 5, -1, 1],
            &[3, 1, 1, 0],
        ]);
        let p = m.char_poly();
        assert_eq!(p.coeffs()[0], m.det_bareiss()); // (-1)^4 det
        assert_eq!(p.coeffs()[3], -1); // minus the trace
    }

    #[test]
    fn eval_poly_examples() {
        let k2 = int(&[&[0, 1], &[1, 0]]);
        assert_eq!(k2.eval_poly(&[2, 0, 1]), int(&[&[3, 0], &[0, 3]]));
        assert_eq!(k2.eval_poly(&[1]), Matrix::identity(2));
        let p3 = int(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(
            p3.eval_poly(&[2, 0, 1]),
            int(&[&[3, 0, 1], &[0, 4, 0], &[1, 0, 3]])
        );
        assert_eq!(p3.eval_poly(&[]), Matrix::zeros(3));
    }

    #[test]
    fn antisymmetry() {
        assert!(int(&[&[0, 1], &[-1, 0]]).is_antisymmetric());
        assert!(!int(&[&[1, 1], &[-1, 0]]).is_antisymmetric());
        assert!(int(&[&[0, 1], &[1, 0]]).is_symmetric());
    }
}
