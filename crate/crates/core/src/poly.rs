//! Laurent polynomials in one variable `t` over a generic coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{pow, Domain, ExactDiv, Ring};

/// `Σ c_k t^k` with finitely many nonzero terms, `k ∈ ℤ`.
///
/// Stored as a lowest degree plus a dense coefficient list whose first and
/// last entries are nonzero. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<T> {
    low: i32,
    coeffs: Vec<T>,
}

impl<T: Ring> LaurentPoly<T> {
    pub fn from_coeffs(low: i32, coeffs: Vec<T>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    pub fn monomial(c: T, degree: i32) -> Self {
        Self::from_coeffs(degree, vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn t_inv() -> Self {
        Self::monomial(T::one(), -1)
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        self.coeffs.drain(..lead);
        self.low += lead as i32;
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn low_degree(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, degree: i32) -> T {
        let k = degree - self.low;
        if k < 0 {
            return T::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_else(T::zero)
    }

    /// Nonzero terms `(degree, coefficient)` in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &T)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(
            self.low,
            self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        )
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn invert_variable(&self) -> Self {
        match self.high_degree() {
            None => self.clone(),
            Some(high) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPoly { low: -high, coeffs }
            }
        }
    }
}

impl<T: Domain> LaurentPoly<T> {
    /// Evaluates at `t = x`. Returns `None` when negative powers appear and
    /// `x` is not invertible.
    pub fn eval(&self, x: &T) -> Option<T> {
        let mut acc = T::zero();
        for (k, c) in self.terms() {
            let p = if k >= 0 {
                pow(x, k as u32)
            } else {
                T::one().exact_div(&pow(x, k.unsigned_abs()))?
            };
            acc = acc + c.clone() * p;
        }
        Some(acc)
    }
}

impl<T: Ring + PartialOrd> LaurentPoly<T> {
    /// Representative of the class of `self` under multiplication by the
    /// units `±t^k`: lowest degree 0 and positive top coefficient.
    pub fn normalize_units(&self) -> Self {
        let Some(low) = self.low_degree() else {
            return self.clone();
        };
        let p = self.shift(-low);
        if p.coeffs.last().is_some_and(|c| *c < T::zero()) {
            -p
        } else {
            p
        }
    }
}

impl<T: Ring> Zero for LaurentPoly<T> {
    fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for LaurentPoly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Ring> Add for LaurentPoly<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().unwrap().max(rhs.high_degree().unwrap());
        let coeffs = (low..=high).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Self::from_coeffs(low, coeffs)
    }
}

impl<T: Ring> Neg for LaurentPoly<T> {
    type Output = Self;

    fn neg(self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Ring> Sub for LaurentPoly<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Mul for LaurentPoly<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl<T: Domain> ExactDiv for LaurentPoly<T> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Both have nonzero constant term after shifting, so divisibility in
        // the Laurent ring is divisibility of ordinary polynomials.
        let divisor = &rhs.coeffs;
        let top = divisor.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.len() {
            return None;
        }
        let qlen = rem.len() - divisor.len() + 1;
        let mut quot = vec![T::zero(); qlen];
        for k in (0..qlen).rev() {
            let lead = &rem[k + divisor.len() - 1];
            if lead.is_zero() {
                continue;
            }
            let c = lead.exact_div(top)?;
            for (j, d) in divisor.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.low - rhs.low, quot))
    }
}

/// Prints `c0 + c1*t + c2*t^2 ...` in increasing degree.
impl<T: Ring + PartialOrd + fmt::Display> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            let negative = *c < T::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match k {
                0 => write!(f, "{magnitude}")?,
                1 => write!(f, "{magnitude}*t")?,
                _ => write!(f, "{magnitude}*t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<i64>;

    fn p(low: i32, c: &[i64]) -> P {
        P::from_coeffs(low, c.to_vec())
    }

    #[test]
    fn trims_zeros() {
        let x = p(-2, &[0, 0, 1, 2, 0]);
        assert_eq!(x.low_degree(), Some(0));
        assert_eq!(x.high_degree(), Some(1));
        assert!(p(3, &[0, 0]).is_zero());
        assert_eq!(p(3, &[0, 0]), P::zero());
    }

    #[test]
    fn arithmetic() {
        let a = p(0, &[1, 1]);
        let b = p(0, &[1, -1]);
        assert_eq!(a.clone() * b.clone(), p(0, &[1, 0, -1]));
        assert_eq!(a.clone() - a.clone(), P::zero());
        assert_eq!(P::t() * P::t_inv(), P::one());
        assert_eq!(a + b, P::constant(2));
    }

    #[test]
    fn exact_division() {
        // (1 + t^3) / (1 + t) = 1 - t + t^2
        let num = p(0, &[1, 0, 0, 1]);
        let den = p(0, &[1, 1]);
        assert_eq!(num.exact_div(&den), Some(p(0, &[1, -1, 1])));
        assert_eq!(p(0, &[1, 0, 1]).exact_div(&den), None);
        assert_eq!(p(-1, &[2, 4]).exact_div(&p(0, &[2])), Some(p(-1, &[1, 2])));
        assert_eq!(p(0, &[1, 2]).exact_div(&P::zero()), None);
    }

    #[test]
    fn normalization_and_display() {
        let x = p(-3, &[-1, 1, -1]);
        let n = x.normalize_units();
        assert_eq!(n, p(0, &[1, -1, 1]));
        assert_eq!(n.to_string(), "1 - 1*t + 1*t^2");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(p(-1, &[-2, 0, 3]).to_string(), "-2*t^-1 + 3*t");
        let big: LaurentPoly<BigInt> = LaurentPoly::from_coeffs(2, vec![BigInt::from(-5)]);
        assert_eq!(big.normalize_units().to_string(), "5");
    }

    #[test]
    fn evaluation() {
        use num_rational::Ratio;
        let x: LaurentPoly<Ratio<i64>> = LaurentPoly::from_coeffs(
            -1,
            vec![
                Ratio::from_integer(1),
                Ratio::from_integer(0),
                Ratio::from_integer(2),
            ],
        );
        assert_eq!(x.eval(&Ratio::from_integer(2)), Some(Ratio::new(9, 2)));
        assert_eq!(p(-1, &[1]).eval(&2), None);
        assert_eq!(p(0, &[1, 1]).invert_variable(), p(-1, &[1, 1]));
    }
}
