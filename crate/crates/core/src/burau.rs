//! Reduced Burau representation `B_n → GL_{n-1}(R)` for any ring `R` holding
//! an invertible `t`.

use crate::matrix::Matrix;
use crate::poly::LaurentPoly;
use crate::scalar::{Domain, Ring};
use crate::word::{BraidWord, Letter, Sign};

/// Matrix of one letter on `strands` strands, given `t` and `t⁻¹`.
pub fn letter_matrix<T: Ring>(strands: usize, letter: Letter, t: &T, t_inv: &T) -> Matrix<T> {
    let m = strands - 1;
    let k = letter.index() - 1;
    let mut a = Matrix::identity(m);
    match letter.sign() {
        Sign::Positive => {
            a[(k, k)] = -t.clone();
            if k > 0 {
                a[(k, k - 1)] = t.clone();
            }
            if k + 1 < m {
                a[(k, k + 1)] = T::one();
            }
        }
        Sign::Negative => {
            a[(k, k)] = -t_inv.clone();
            if k > 0 {
                a[(k, k - 1)] = T::one();
            }
            if k + 1 < m {
                a[(k, k + 1)] = t_inv.clone();
            }
        }
    }
    a
}

/// Product of the letter matrices in word order.
pub fn reduced_burau<T: Ring>(w: &BraidWord, t: &T, t_inv: &T) -> Matrix<T> {
    let n = w.strands();
    w.letters().iter().fold(Matrix::identity(n - 1), |acc, &l| {
        &acc * &letter_matrix(n, l, t, t_inv)
    })
}

/// Burau matrix with entries in `ℤ[t, t⁻¹]` (or `R[t, t⁻¹]`).
pub fn reduced_burau_poly<T: Ring>(w: &BraidWord) -> Matrix<LaurentPoly<T>> {
    reduced_burau(w, &LaurentPoly::t(), &LaurentPoly::t_inv())
}

/// Burau matrix specialised at `t = x`; `None` if `x` has no inverse.
pub fn reduced_burau_at<T: Domain>(w: &BraidWord, x: &T) -> Option<Matrix<T>> {
    let inv = T::one().exact_div(x)?;
    Some(reduced_burau(w, x, &inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;
    use num_traits::One;

    type P = LaurentPoly<i64>;

    #[test]
    fn letters_times_inverses_are_identity() {
        for n in 2..6 {
            for i in 1..n {
                let pos =
                    reduced_burau_poly::<i64>(&BraidWord::new(n, vec![Letter::pos(i)]).unwrap());
                let neg =
                    reduced_burau_poly::<i64>(&BraidWord::new(n, vec![Letter::neg(i)]).unwrap());
                assert_eq!(&pos * &neg, Matrix::identity(n - 1), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        let n = 4;
        let lhs = reduced_burau_poly::<i64>(
            &BraidWord::from_powers(n, &[(1, 1), (2, 1), (1, 1)]).unwrap(),
        );
        let rhs = reduced_burau_poly::<i64>(
            &BraidWord::from_powers(n, &[(2, 1), (1, 1), (2, 1)]).unwrap(),
        );
        assert_eq!(lhs, rhs);
        let a = reduced_burau_poly::<i64>(&BraidWord::from_powers(n, &[(1, 1), (3, 1)]).unwrap());
        let b = reduced_burau_poly::<i64>(&BraidWord::from_powers(n, &[(3, 1), (1, 1)]).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn determinant_is_power_of_minus_t() {
        let w = BraidWord::from_powers(3, &[(1, 3), (2, -1), (1, 2)]).unwrap();
        let m = reduced_burau_poly::<i64>(&w);
        // det = (-t)^e with e = 4
        assert_eq!(m.det(), P::monomial(1, 4));
        let r = reduced_burau_at(&w, &Ratio::new(2i64, 3)).unwrap();
        assert_eq!(r.det(), Ratio::new(16, 81));
        let f = reduced_burau_at(&w, &2.0f64).unwrap();
        assert!((f.det() - 16.0).abs() < 1e-9);
    }

    #[test]
    fn one_strand_gives_empty_matrix() {
        let m = reduced_burau_poly::<i64>(&BraidWord::identity(1));
        assert_eq!(m.rows(), 0);
        assert_eq!(m.det(), P::one());
        assert_eq!(reduced_burau_at(&BraidWord::identity(2), &0i64), None);
    }
}
