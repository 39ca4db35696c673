//! Braid-group calculus for transverse closed braids.
//!
//! Words, closure components and Bennequin numbers, the reduced Burau
//! representation and Alexander polynomials, Markov and exchange moves,
//! block-strand templates, conjugacy in `B₃`, and a certifier for a family of
//! flype pairs of 3-braids.
//!
//! Polynomials, matrices and the Burau representation are generic over the
//! coefficient type; the aliases below fix the common choices.

pub mod b3;
pub mod burau;
pub mod certify;
pub mod closure;
pub mod markov;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod template;
pub mod word;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use b3::{classify_closure, conjugate_in_b3, normal_form, B3NormalForm, ClosureClass};
pub use certify::{certify, sweep, CertificationReport, FamilyParams, Verdict};
pub use closure::{alexander_polynomial, components, linking_matrix, AlexanderPolynomial};
pub use markov::{validate_tower, MarkovTower, Move, TowerMode};
pub use matrix::Matrix;
pub use poly::LaurentPoly;
pub use template::{builtin_template, BraidingAssignment, Template, TemplateKind};
pub use word::{BraidWord, Letter, Sign, WordError};

/// Laurent polynomials with integer coefficients.
pub type IntPoly = LaurentPoly<BigInt>;
pub type RationalPoly = LaurentPoly<BigRational>;
pub type IntMatrix = Matrix<BigInt>;
pub type RationalMatrix = Matrix<BigRational>;
/// Burau matrices over `ℤ[t, t⁻¹]`.
pub type BurauMatrix = Matrix<IntPoly>;
