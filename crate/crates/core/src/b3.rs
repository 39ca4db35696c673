//! Conjugacy in the 3-strand braid group.
//!
//! `B₃` is a central extension of `B₃/⟨Δ²⟩ ≅ ℤ/2 ∗ ℤ/3` with
//! `X = image(σ1σ2σ1)` of order 2 and `Y = image(σ1σ2)` of order 3, so that
//! `σ1 ↦ Y²X`, `σ2 ↦ XY²`, `σ1⁻¹ ↦ XY`, `σ2⁻¹ ↦ YX`. Since the exponent sum
//! of `Δ²` is 6, two 3-braids are conjugate exactly when they have the same
//! exponent sum and conjugate images in the free product, and the latter is
//! decided by cyclic reduction.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::word::{BraidWord, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum B3Error {
    #[error("expected a 3-strand braid, got {0} strands")]
    WrongStrandCount(usize),
}

fn require_three(w: &BraidWord) -> Result<(), B3Error> {
    if w.strands() == 3 {
        Ok(())
    } else {
        Err(B3Error::WrongStrandCount(w.strands()))
    }
}

/// Nontrivial elements of the two factors, ordered `X < Y < Y²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuotientLetter {
    X,
    Y,
    Y2,
}

impl QuotientLetter {
    fn is_x(self) -> bool {
        self == QuotientLetter::X
    }

    fn y_power(self) -> u8 {
        match self {
            QuotientLetter::X => 0,
            QuotientLetter::Y => 1,
            QuotientLetter::Y2 => 2,
        }
    }

    /// Product of two letters from the same factor; `None` is the identity.
    fn merge(self, other: QuotientLetter) -> Option<QuotientLetter> {
        if self.is_x() {
            debug_assert!(other.is_x());
            return None;
        }
        match (self.y_power() + other.y_power()) % 3 {
            0 => None,
            1 => Some(QuotientLetter::Y),
            _ => Some(QuotientLetter::Y2),
        }
    }

    fn same_factor(self, other: QuotientLetter) -> bool {
        self.is_x() == other.is_x()
    }
}

impl fmt::Display for QuotientLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuotientLetter::X => "X",
            QuotientLetter::Y => "Y",
            QuotientLetter::Y2 => "Y2",
        })
    }
}

/// Reduced word in `ℤ/2 ∗ ℤ/3`: adjacent letters always come from
/// different factors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeProductWord {
    letters: Vec<QuotientLetter>,
}

impl FreeProductWord {
    pub fn identity() -> Self {
        FreeProductWord::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = QuotientLetter>) -> Self {
        let mut w = FreeProductWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[QuotientLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: QuotientLetter) {
        match self.letters.last() {
            Some(&top) if top.same_factor(l) => {
                self.letters.pop();
                if let Some(m) = top.merge(l) {
                    self.letters.push(m);
                }
            }
            _ => self.letters.push(l),
        }
    }

    pub fn product(&self, other: &FreeProductWord) -> FreeProductWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(a), Some(b)) if self.len() >= 2 => !a.same_factor(*b),
            _ => true,
        }
    }

    /// A cyclically reduced conjugate.
    pub fn cyclically_reduce(&self) -> FreeProductWord {
        let mut w = self.letters.clone();
        while w.len() >= 2 && w[0].same_factor(w[w.len() - 1]) {
            let last = w.pop().unwrap();
            let first = w.remove(0);
            if let Some(m) = last.merge(first) {
                w.insert(0, m);
            }
        }
        FreeProductWord { letters: w }
    }
}

impl fmt::Display for FreeProductWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Image of a 3-braid in `B₃/⟨Δ²⟩ ≅ ℤ/2 ∗ ℤ/3`.
pub fn quotient_image(w: &BraidWord) -> Result<FreeProductWord, B3Error> {
    use QuotientLetter::*;
    require_three(w)?;
    let mut out = FreeProductWord::identity();
    for l in w.letters() {
        let image: [QuotientLetter; 2] = match (l.index(), l.sign()) {
            (1, Sign::Positive) => [Y2, X],
            (2, Sign::Positive) => [X, Y2],
            (1, Sign::Negative) => [X, Y],
            (_, Sign::Negative) => [Y, X],
            (_, Sign::Positive) => unreachable!("index checked by require_three"),
        };
        for q in image {
            out.push(q);
        }
    }
    Ok(out)
}

/// Conjugacy class of the quotient image.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QuotientClass {
    Identity,
    /// A single letter; `Y` and `Y²` are different classes.
    Torsion(QuotientLetter),
    /// Lexicographically least rotation of a cyclically reduced word of
    /// length ≥ 2.
    Cyclic(Vec<QuotientLetter>),
}

impl QuotientClass {
    pub fn letters(&self) -> Vec<QuotientLetter> {
        match self {
            QuotientClass::Identity => Vec::new(),
            QuotientClass::Torsion(l) => vec![*l],
            QuotientClass::Cyclic(ls) => ls.clone(),
        }
    }
}

/// Complete conjugacy invariant of a 3-braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct B3NormalForm {
    pub exponent_sum: i64,
    pub class: QuotientClass,
}

impl fmt::Display for B3NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .class
            .letters()
            .iter()
            .map(ToString::to_string)
            .collect();
        write!(f, "e={}; [{}]", self.exponent_sum, parts.join(","))
    }
}

impl Serialize for B3NormalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn normal_form(w: &BraidWord) -> Result<B3NormalForm, B3Error> {
    let reduced = quotient_image(w)?.cyclically_reduce();
    let class = match reduced.letters() {
        [] => QuotientClass::Identity,
        [l] => QuotientClass::Torsion(*l),
        ls => {
            let n = ls.len();
            let best = (0..n)
                .map(|k| {
                    let mut r = ls.to_vec();
                    r.rotate_left(k);
                    r
                })
                .min()
                .unwrap();
            QuotientClass::Cyclic(best)
        }
    };
    Ok(B3NormalForm {
        exponent_sum: w.exponent_sum(),
        class,
    })
}

pub fn conjugate_in_b3(w1: &BraidWord, w2: &BraidWord) -> Result<bool, B3Error> {
    Ok(normal_form(w1)? == normal_form(w2)?)
}

/// Closed 3-braid classes with more than one braid isotopy class of 3-braid
/// representatives that can be recognized from the conjugacy class alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum ClosureClass {
    /// Conjugate to `σ1^μ σ2^τ`.
    UnknotClass {
        mu: i64,
        tau: i64,
    },
    /// Conjugate to `σ1^k σ2^μ`, `|k| ≥ 2`, `μ = ±1`.
    TorusKnot2k {
        k: i64,
        mu: i64,
    },
    GenericUnique,
}

impl fmt::Display for ClosureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureClass::UnknotClass { mu, tau } => write!(f, "UnknotClass({mu},{tau})"),
            ClosureClass::TorusKnot2k { k, mu } => write!(f, "TorusKnot2k({k},{mu})"),
            ClosureClass::GenericUnique => f.write_str("GenericUnique"),
        }
    }
}

pub const UNKNOT_REPRESENTATIVES: [(i64, i64); 3] = [(1, 1), (-1, -1), (1, -1)];

fn s1k_s2m(k: i64, m: i64) -> BraidWord {
    BraidWord::from_powers(3, &[(1, k), (2, m)]).expect("3-strand word")
}

pub fn classify_closure(w: &BraidWord) -> Result<ClosureClass, B3Error> {
    let nf = normal_form(w)?;
    let e = nf.exponent_sum;
    for (mu, tau) in UNKNOT_REPRESENTATIVES {
        if mu + tau == e && normal_form(&s1k_s2m(mu, tau))? == nf {
            return Ok(ClosureClass::UnknotClass { mu, tau });
        }
    }
    for mu in [1, -1] {
        let k = e - mu;
        if k.abs() >= 2 && normal_form(&s1k_s2m(k, mu))? == nf {
            return Ok(ClosureClass::TorusKnot2k { k, mu });
        }
    }
    Ok(ClosureClass::GenericUnique)
}

/// Whether `σ1^u σ2^v σ1^w σ2^ε` admits flypes of both signs:
/// `u = −ε ∨ w = −ε ∨ v = −2ε`.
pub fn kolee_both_signs(u: i64, v: i64, w: i64, eps: Sign) -> bool {
    let e = eps.value();
    u == -e || w == -e || v == -2 * e
}
