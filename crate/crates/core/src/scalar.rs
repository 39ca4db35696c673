//! Scalar traits shared by the polynomial and matrix code.
//!
//! Everything numeric in this crate is generic over a commutative ring `T`
//! (see [`Ring`]); determinants and characteristic polynomials additionally
//! need exact division (see [`Domain`]). Integers, big integers, rationals,
//! floats and Laurent polynomials over any of these all qualify.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Division that succeeds only when the quotient exists in the ring.
pub trait ExactDiv: Sized {
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

/// A ring with exact division: enough for fraction-free elimination.
pub trait Domain: Ring + ExactDiv {}

impl<T: Ring + ExactDiv> Domain for T {}

macro_rules! exact_div_integer {
    ($($t:ty),*) => {$(
        impl ExactDiv for $t {
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                if *rhs == 0 || self % rhs != 0 {
                    None
                } else {
                    Some(self / rhs)
                }
            }
        }
    )*};
}

exact_div_integer!(i32, i64, i128);

impl ExactDiv for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl<T: Clone + Integer> ExactDiv for Ratio<T> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self.clone() / rhs.clone())
        }
    }
}

macro_rules! exact_div_float {
    ($($t:ty),*) => {$(
        impl ExactDiv for $t {
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                (*rhs != 0.0).then(|| self / rhs)
            }
        }
    )*};
}

exact_div_float!(f32, f64);

/// The image of `k` under `Z -> T`.
pub fn from_int<T: Ring>(k: i64) -> T {
    let mut acc = T::zero();
    let mut base = T::one();
    let mut m = k.unsigned_abs();
    while m > 0 {
        if m & 1 == 1 {
            acc = acc + base.clone();
        }
        base = base.clone() + base;
        m >>= 1;
    }
    if k < 0 {
        -acc
    } else {
        acc
    }
}

/// `x^k` for `k ≥ 0`.
pub fn pow<T: Ring>(x: &T, k: u32) -> T {
    let mut acc = T::one();
    let mut base = x.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base.clone();
        }
        base = base.clone() * base;
        k >>= 1;
    }
    acc
}
