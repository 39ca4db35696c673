//! The closure of a braid word as an oriented link.
//!
//! Components are the cycles of the strand permutation. Crossings are sorted
//! into self-crossings of one component (its writhe) and mixed crossings
//! between two components (twice their linking number), which gives
//! `β(w) = Σ β_i + 2 Σ_{i<j} lk_ij`.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::burau::reduced_burau_poly;
use crate::matrix::Matrix;
use crate::poly::LaurentPoly;
use crate::scalar::{Domain, ExactDiv};
use crate::word::BraidWord;

/// One closure component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    /// 1-based starting positions of the component's strands.
    pub members: Vec<usize>,
    pub strands: usize,
    pub self_writhe: i64,
    pub beta: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkComponents {
    pub parts: Vec<Component>,
}

impl LinkComponents {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total_beta(&self) -> i64 {
        self.parts.iter().map(|c| c.beta).sum()
    }
}

/// Symmetric matrix of pairwise linking numbers with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkingMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// `Σ_{i<j} lk_ij`
    pub fn upper_sum(&self) -> i64 {
        let n = self.size();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.entries[i][j])
            .sum()
    }
}

/// Which component occupies each axis position at each moment of the word.
///
/// `labels[k][p]` is the component index at 0-based position `p` just before
/// letter `k` (so `labels[len]` is the state after the whole word).
#[derive(Debug, Clone)]
pub struct ComponentTrace {
    cycles: Vec<Vec<usize>>,
    labels: Vec<Vec<usize>>,
    self_writhe: Vec<i64>,
    mixed: Vec<Vec<i64>>,
}

impl ComponentTrace {
    pub fn new(w: &BraidWord) -> ComponentTrace {
        let n = w.strands();
        let cycles = w.underlying_permutation().cycles();
        let mut owner = vec![0; n];
        for (c, members) in cycles.iter().enumerate() {
            for &m in members {
                owner[m - 1] = c;
            }
        }
        let k = cycles.len();
        let mut self_writhe = vec![0; k];
        let mut mixed = vec![vec![0; k]; k];
        let mut labels = Vec::with_capacity(w.len() + 1);
        let mut current = owner;
        for l in w.letters() {
            labels.push(current.clone());
            let (p, q) = (l.index() - 1, l.index());
            let (a, b) = (current[p], current[q]);
            let s = l.sign().value();
            if a == b {
                self_writhe[a] += s;
            } else {
                mixed[a][b] += s;
                mixed[b][a] += s;
            }
            current.swap(p, q);
        }
        labels.push(current);
        ComponentTrace {
            cycles,
            labels,
            self_writhe,
            mixed,
        }
    }

    pub fn component_count(&self) -> usize {
        self.cycles.len()
    }

    /// Component passing position `position` (0-based) just before letter
    /// `time`.
    pub fn component_at(&self, time: usize, position: usize) -> usize {
        self.labels[time][position]
    }

    pub fn components(&self) -> LinkComponents {
        LinkComponents {
            parts: self
                .cycles
                .iter()
                .zip(&self.self_writhe)
                .map(|(members, &e)| Component {
                    members: members.clone(),
                    strands: members.len(),
                    self_writhe: e,
                    beta: e - members.len() as i64,
                })
                .collect(),
        }
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        LinkingMatrix {
            entries: self
                .mixed
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&m| {
                            debug_assert!(
                                m % 2 == 0,
                                "mixed crossings between closed components come in pairs"
                            );
                            m / 2
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

pub fn components(w: &BraidWord) -> LinkComponents {
    ComponentTrace::new(w).components()
}

pub fn linking_matrix(w: &BraidWord) -> LinkingMatrix {
    ComponentTrace::new(w).linking_matrix()
}

/// Integer Alexander polynomials, normalized up to `±t^k`.
pub type AlexanderPolynomial = LaurentPoly<BigInt>;

/// One-variable Alexander polynomial of the closure,
/// `det(I − ρ(w)) · (1 − t) / (1 − tⁿ)` with `ρ` the reduced Burau
/// representation, normalized to lowest degree 0 and positive top
/// coefficient.
pub fn alexander_polynomial(w: &BraidWord) -> AlexanderPolynomial {
    alexander_polynomial_in(w)
}

/// [`alexander_polynomial`] over an arbitrary ordered coefficient domain.
pub fn alexander_polynomial_in<T: Domain + PartialOrd>(w: &BraidWord) -> LaurentPoly<T> {
    type Poly<T> = LaurentPoly<T>;
    let n = w.strands();
    let burau = reduced_burau_poly::<T>(w);
    let det = Matrix::identity(n - 1).sub(&burau).det();
    let one = Poly::<T>::one();
    let numerator = det * (one.clone() - Poly::t());
    let denominator = one - Poly::monomial(T::one(), n as i32);
    numerator
        .exact_div(&denominator)
        .expect("closure correction divides the Burau determinant")
        .normalize_units()
}
