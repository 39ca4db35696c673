//! Dense matrices over a generic ring.

use std::ops::{Index, IndexMut, Mul};

use crate::scalar::{from_int, Domain, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
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

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
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

    pub fn add_scalar_identity(&self, c: &T) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] = m[(i, i)].clone() + c.clone();
        }
        m
    }
}

impl<T: Domain> Matrix<T> {
    /// Determinant by fraction-free (Bareiss) elimination. Every division is
    /// exact, so this works over ℤ and ℤ[t, t⁻¹] as well as over fields.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                    return T::zero();
                };
                for c in 0..n {
                    a.data.swap(k * n + c, swap * n + c);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[(k, k)].clone() * a[(i, j)].clone()
                        - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = v
                        .exact_div(&prev)
                        .expect("Bareiss step must divide exactly");
                }
                a[(i, k)] = T::zero();
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Coefficients `c_0, ..., c_n` of `det(xI − A)`, lowest degree first,
    /// by the Faddeev–LeVerrier recurrence.
    pub fn charpoly(&self) -> Vec<T> {
        assert!(
            self.is_square(),
            "characteristic polynomial of a non-square matrix"
        );
        let n = self.rows;
        let mut c = vec![T::zero(); n + 1];
        c[n] = T::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            m = (self * &m).add_scalar_identity(&c[n - k + 1]);
            let tr = (self * &m).trace();
            c[n - k] = (-tr)
                .exact_div(&from_int(k as i64))
                .expect("Faddeev-LeVerrier division must be exact");
        }
        c
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * rhs[(k, j)].clone();
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::LaurentPoly;
    use num_rational::Ratio;
    use num_traits::One;

    /// Cofactor expansion, only for checking.
    fn det_expand(m: &Matrix<i64>) -> i64 {
        let n = m.rows();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor = Matrix::from_rows(
                    (1..n)
                        .map(|r| (0..n).filter(|&c| c != j).map(|c| m[(r, c)]).collect())
                        .collect(),
                );
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[(0, j)] * det_expand(&minor)
            })
            .sum()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let cases = [
            vec![vec![2, 3], vec![1, 4]],
            vec![vec![0, 1, 2], vec![3, 0, 1], vec![4, 5, 0]],
            vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]],
            vec![
                vec![0, 0, 1, 2],
                vec![3, -1, 0, 4],
                vec![2, 2, 2, 2],
                vec![-1, 5, 3, 0],
            ],
        ];
        for rows in cases {
            let m = Matrix::from_rows(rows);
            assert_eq!(m.det(), det_expand(&m));
        }
        assert_eq!(Matrix::<i64>::zeros(0, 0).det(), 1);
    }

    #[test]
    fn charpoly_small_cases() {
        let m = Matrix::from_rows(vec![vec![2i64, 1], vec![1, 3]]);
        // x^2 - 5x + 5
        assert_eq!(m.charpoly(), vec![5, -5, 1]);
        let r = Matrix::from_rows(vec![
            vec![Ratio::new(1i64, 2), Ratio::from_integer(1)],
            vec![Ratio::from_integer(0), Ratio::new(1, 3)],
        ]);
        assert_eq!(
            r.charpoly(),
            vec![Ratio::new(1, 6), Ratio::new(-5, 6), Ratio::from_integer(1)]
        );
        let f = Matrix::from_rows(vec![vec![1.0f64, 2.0], vec![3.0, 4.0]]);
        assert_eq!(f.charpoly(), vec![-2.0, -5.0, 1.0]);
    }

    #[test]
    fn polynomial_determinant() {
        type P = LaurentPoly<i64>;
        let t = P::t();
        // det [[1 + t, 1], [t, 1]] = 1
        let m = Matrix::from_rows(vec![
            vec![P::one() + t.clone(), P::one()],
            vec![t, P::one()],
        ]);
        assert_eq!(m.det(), P::one());
    }
}
