//! Brute-force conjugacy oracle for `B₃`, independent of the free-product
//! normal form.
//!
//! Positive answers come with a conjugator found by bounded search and checked
//! on the integral reduced Burau matrices (faithful on `B₃`). Negative answers
//! come from the exponent sum or from an invariant battery: the
//! characteristic polynomial of the Burau matrix at rational values of `t`,
//! or the conjugacy class of the image in `SL₂(ℤ/m)` under
//! `σ1 ↦ [[1,1],[0,1]]`, `σ2 ↦ [[1,0],[-1,1]]`, or the conjugacy class of
//! the image in `SL₂(ℤ)` itself, read off from the binary quadratic form
//! fixed by the matrix. The kernel of `B₃ → SL₂(ℤ)` is generated by the
//! central element `Δ⁴` of exponent sum 12, so the last battery together with
//! the exponent sum is complete. Anything else is unresolved.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::b3::B3Error;
use crate::burau::{reduced_burau_at, reduced_burau_poly};
use crate::matrix::Matrix;
use crate::poly::LaurentPoly;
use crate::word::{BraidWord, Letter, Sign};

type BurauPoly = Matrix<LaurentPoly<i64>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonConjugacyWitness {
    ExponentSum(i64, i64),
    /// Characteristic polynomials (lowest degree first) at `t`.
    BurauCharPoly {
        t: BigRational,
        first: Vec<BigRational>,
        second: Vec<BigRational>,
    },
    ModularClass {
        first: ModularClass,
        second: ModularClass,
    },
    /// Least conjugates `[a, b, c, d]` of the two images in `SL₂(ℤ/m)`.
    CongruenceClass {
        modulus: u32,
        first: [u32; 4],
        second: [u32; 4],
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantBattery {
    BurauCharPoly(Vec<BigRational>),
    CongruenceClass(Vec<u32>),
    ModularClass,
}

/// Burau characteristic polynomials at [`default_points`], congruence
/// classes modulo 2 through 7 and the `SL₂(ℤ)` class.
pub fn default_batteries() -> Vec<InvariantBattery> {
    vec![
        InvariantBattery::BurauCharPoly(default_points()),
        InvariantBattery::CongruenceClass((2..=7).collect()),
        InvariantBattery::ModularClass,
    ]
}

/// Conjugacy class of a matrix in `SL₂(ℤ)`.
///
/// `[[a,b],[c,d]]` fixes the form `c x² + (d−a) xy − b y²`; conjugation acts
/// on it by proper equivalence and the matrix is recovered from the trace and
/// the form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModularClass {
    /// `|trace| = 2`: the form is `λ·(rx + sy)²` with `gcd(r, s) = 1`.
    Parabolic { trace: i128, lambda: i128 },
    /// `|trace| < 2`: reduced definite form.
    Elliptic { trace: i128, form: [i128; 3] },
    /// `|trace| > 2`: content and least reduced form in the cycle of the
    /// primitive part.
    Hyperbolic {
        trace: i128,
        content: i128,
        form: [i128; 3],
    },
}

fn gcd(a: i128, b: i128) -> i128 {
    num_integer::Integer::gcd(&a, &b)
}

fn reduce_definite(mut f: [i128; 3]) -> [i128; 3] {
    let negative = f[0] < 0;
    if negative {
        f = f.map(|x| -x);
    }
    loop {
        let [a, b, c] = f;
        // b into (-a, a]
        let k = (a - b).div_euclid(2 * a);
        let b2 = b + 2 * k * a;
        let c2 = (b2 * b2 - (b * b - 4 * a * c)) / (4 * a);
        f = [a, b2, c2];
        if a > c2 {
            f = [c2, -b2, a];
            continue;
        }
        if a == c2 && b2 < 0 {
            f = [a, -b2, c2];
        }
        break;
    }
    if negative {
        f.map(|x| -x)
    } else {
        f
    }
}

fn isqrt(n: i128) -> i128 {
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// `ρ` on indefinite forms of discriminant `d` with `r = ⌊√d⌋`, `d` not a
/// square.
fn rho(f: [i128; 3], d: i128, r: i128) -> [i128; 3] {
    let [_, b, c] = f;
    let m = 2 * c.abs();
    let b2 = if c.abs() <= r {
        // √d − 2|c| < b' < √d
        let lo = r + 1 - m;
        lo + (-b - lo).rem_euclid(m)
    } else {
        // −|c| < b' ≤ |c|
        let lo = -c.abs() + 1;
        lo + (-b - lo).rem_euclid(m)
    };
    [c, b2, (b2 * b2 - d) / (4 * c)]
}

fn is_reduced_indefinite(f: [i128; 3], r: i128) -> bool {
    let [a, b, _] = f;
    b <= r && b + 2 * a.abs() > r && 2 * a.abs() - b <= r
}

impl ModularClass {
    /// `None` when the entries are too large for exact machine arithmetic.
    pub fn of(m: [i128; 4]) -> Option<ModularClass> {
        if m.iter().any(|x| x.abs() > 1 << 30) {
            return None;
        }
        let [a, b, c, d] = m;
        let trace = a + d;
        let f = [c, d - a, -b];
        let disc = trace * trace - 4;
        Some(match trace.abs() {
            2 => {
                let g = gcd(gcd(f[0], f[1]), f[2]);
                let lead = if f[0] != 0 { f[0] } else { f[2] };
                ModularClass::Parabolic {
                    trace,
                    lambda: g * lead.signum(),
                }
            }
            0 | 1 => ModularClass::Elliptic {
                trace,
                form: reduce_definite(f),
            },
            _ => {
                let content = gcd(gcd(f[0], f[1]), f[2]);
                let prim = f.map(|x| x / content);
                let dp = disc / (content * content);
                let r = isqrt(dp);
                let mut g = prim;
                while !is_reduced_indefinite(g, r) {
                    g = rho(g, dp, r);
                }
                let start = g;
                let mut best = g;
                loop {
                    g = rho(g, dp, r);
                    if g == start {
                        break;
                    }
                    best = best.min(g);
                }
                ModularClass::Hyperbolic {
                    trace,
                    content,
                    form: best,
                }
            }
        })
    }

    pub fn of_braid(w: &BraidWord) -> Option<ModularClass> {
        let mut acc: [i128; 4] = [1, 0, 0, 1];
        for l in w.letters() {
            let g: [i128; 4] = match (l.index(), l.sign()) {
                (1, Sign::Positive) => [1, 1, 0, 1],
                (1, Sign::Negative) => [1, -1, 0, 1],
                (_, Sign::Positive) => [1, 0, -1, 1],
                (_, Sign::Negative) => [1, 0, 1, 1],
            };
            let [p, q, r, s] = acc;
            acc = [
                p * g[0] + q * g[2],
                p * g[1] + q * g[3],
                r * g[0] + s * g[2],
                r * g[1] + s * g[3],
            ];
            if acc.iter().any(|x| x.abs() > 1 << 60) {
                return None;
            }
        }
        ModularClass::of(acc)
    }
}

type Mat2 = [u32; 4];

fn mul2(a: &Mat2, b: &Mat2, m: u32) -> Mat2 {
    let f = |x: u32, y: u32, z: u32, w: u32| {
        ((x as u64 * y as u64 + z as u64 * w as u64) % m as u64) as u32
    };
    [
        f(a[0], b[0], a[1], b[2]),
        f(a[0], b[1], a[1], b[3]),
        f(a[2], b[0], a[3], b[2]),
        f(a[2], b[1], a[3], b[3]),
    ]
}

/// `SL₂(ℤ/m)` with each element paired with its inverse.
struct CongruenceGroup {
    modulus: u32,
    elements: Vec<(Mat2, Mat2)>,
}

impl CongruenceGroup {
    fn new(m: u32) -> Self {
        let mut elements = Vec::new();
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    for d in 0..m {
                        if (a * d + m * m - (b * c) % m) % m == 1 % m {
                            let inv = [d, (m - b) % m, (m - c) % m, a];
                            elements.push(([a, b, c, d], inv));
                        }
                    }
                }
            }
        }
        CongruenceGroup {
            modulus: m,
            elements,
        }
    }

    fn image(&self, w: &BraidWord) -> Mat2 {
        let m = self.modulus;
        let n1 = m - 1;
        let mut acc = [1 % m, 0, 0, 1 % m];
        for l in w.letters() {
            let g = match (l.index(), l.sign()) {
                (1, Sign::Positive) => [1, 1 % m, 0, 1],
                (1, Sign::Negative) => [1, n1, 0, 1],
                (_, Sign::Positive) => [1, 0, n1, 1],
                (_, Sign::Negative) => [1, 0, 1 % m, 1],
            };
            acc = mul2(&acc, &g.map(|x| x % m), m);
        }
        acc
    }

    /// Least element of the conjugacy class of the image.
    fn class(&self, w: &BraidWord) -> Mat2 {
        let x = self.image(w);
        self.elements
            .iter()
            .map(|(p, q)| mul2(&mul2(p, &x, self.modulus), q, self.modulus))
            .min()
            .expect("group is nonempty")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    /// `g · w1 · g⁻¹ = w2`
    Conjugate(BraidWord),
    NotConjugate(NonConjugacyWitness),
    Unresolved,
}

/// Rational points used when the caller supplies none.
pub fn default_points() -> Vec<BigRational> {
    [(2, 1), (3, 1), (1, 2), (-2, 1), (5, 3)]
        .into_iter()
        .map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
        .collect()
}

/// Freely reduced 3-braid words of length `0..=max_len`, shortest first and
/// in a fixed order within each length.
pub fn reduced_words(max_len: usize) -> Vec<BraidWord> {
    let alphabet = [
        Letter::pos(1),
        Letter::neg(1),
        Letter::pos(2),
        Letter::neg(2),
    ];
    let mut out = vec![BraidWord::identity(3)];
    let mut frontier = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for word in &frontier {
            for &l in &alphabet {
                if word.last().is_some_and(|&p| p.cancels(l)) {
                    continue;
                }
                let mut w = word.clone();
                w.push(l);
                next.push(w);
            }
        }
        out.extend(next.iter().map(|ls| BraidWord::new(3, ls.clone()).unwrap()));
        frontier = next;
    }
    out
}

/// Caches per-word data so that many pairs can be checked cheaply.
///
/// A conjugator of length ≤ `bound` splits as `h⁻¹g` with `|g| ≤ ⌈bound/2⌉`
/// and `|h| ≤ ⌊bound/2⌋`; the oracle tabulates `g w g⁻¹` for every short `g`
/// and meets in the middle.
pub struct ConjugacyOracle {
    bound: usize,
    points: Vec<BigRational>,
    groups: Vec<CongruenceGroup>,
    modular: bool,
    short: Vec<(BraidWord, BurauPoly, BurauPoly)>,
    cache: HashMap<BraidWord, WordData>,
}

struct WordData {
    charpolys: Vec<Vec<BigRational>>,
    classes: Vec<Mat2>,
    modular: Option<ModularClass>,
    /// Conjugate matrix → shortest `g` producing it, for `|g| ≤ ⌈bound/2⌉`.
    conjugates: HashMap<BurauPoly, BraidWord>,
    ordered: Vec<(BurauPoly, BraidWord)>,
}

impl ConjugacyOracle {
    pub fn new(conjugator_bound: usize, batteries: &[InvariantBattery]) -> Self {
        let mut points = Vec::new();
        let mut groups = Vec::new();
        let mut modular = false;
        for b in batteries {
            match b {
                InvariantBattery::BurauCharPoly(ts) => points.extend(ts.iter().cloned()),
                InvariantBattery::CongruenceClass(ms) => groups.extend(
                    ms.iter()
                        .filter(|&&m| m >= 2)
                        .map(|&m| CongruenceGroup::new(m)),
                ),
                InvariantBattery::ModularClass => modular = true,
            }
        }
        let radius = conjugator_bound.div_ceil(2);
        let short = reduced_words(radius)
            .into_iter()
            .map(|g| {
                let m = reduced_burau_poly::<i64>(&g);
                let inv = reduced_burau_poly::<i64>(&g.inverse());
                (g, m, inv)
            })
            .collect();
        ConjugacyOracle {
            bound: conjugator_bound,
            points,
            groups,
            modular,
            short,
            cache: HashMap::new(),
        }
    }

    fn data(&mut self, w: &BraidWord) -> &WordData {
        if !self.cache.contains_key(w) {
            let charpolys = self
                .points
                .iter()
                .map(|t| {
                    reduced_burau_at(w, t)
                        .expect("evaluation points are nonzero")
                        .charpoly()
                })
                .collect();
            let classes = self.groups.iter().map(|g| g.class(w)).collect();
            let modular = if self.modular {
                ModularClass::of_braid(w)
            } else {
                None
            };
            let mw = reduced_burau_poly::<i64>(w);
            let mut conjugates = HashMap::new();
            let mut ordered = Vec::new();
            for (g, m, inv) in &self.short {
                let c = &(m * &mw) * inv;
                if !conjugates.contains_key(&c) {
                    conjugates.insert(c.clone(), g.clone());
                    ordered.push((c, g.clone()));
                }
            }
            self.cache.insert(
                w.clone(),
                WordData {
                    charpolys,
                    classes,
                    modular,
                    conjugates,
                    ordered,
                },
            );
        }
        &self.cache[w]
    }

    pub fn check(&mut self, w1: &BraidWord, w2: &BraidWord) -> Result<OracleVerdict, B3Error> {
        for w in [w1, w2] {
            if w.strands() != 3 {
                return Err(B3Error::WrongStrandCount(w.strands()));
            }
        }
        let (e1, e2) = (w1.exponent_sum(), w2.exponent_sum());
        if e1 != e2 {
            return Ok(OracleVerdict::NotConjugate(
                NonConjugacyWitness::ExponentSum(e1, e2),
            ));
        }
        self.data(w1);
        self.data(w2);
        let (c1, c2) = (&self.cache[w1].charpolys, &self.cache[w2].charpolys);
        for ((t, a), b) in self.points.iter().zip(c1).zip(c2) {
            if a != b {
                return Ok(OracleVerdict::NotConjugate(
                    NonConjugacyWitness::BurauCharPoly {
                        t: t.clone(),
                        first: a.clone(),
                        second: b.clone(),
                    },
                ));
            }
        }
        let (k1, k2) = (&self.cache[w1].classes, &self.cache[w2].classes);
        for ((g, a), b) in self.groups.iter().zip(k1).zip(k2) {
            if a != b {
                return Ok(OracleVerdict::NotConjugate(
                    NonConjugacyWitness::CongruenceClass {
                        modulus: g.modulus,
                        first: *a,
                        second: *b,
                    },
                ));
            }
        }
        if let (Some(a), Some(b)) = (&self.cache[w1].modular, &self.cache[w2].modular) {
            if a != b {
                return Ok(OracleVerdict::NotConjugate(
                    NonConjugacyWitness::ModularClass {
                        first: a.clone(),
                        second: b.clone(),
                    },
                ));
            }
        }
        let d1 = &self.cache[w1];
        let d2 = &self.cache[w2];
        for (c, g) in &d1.ordered {
            if let Some(h) = d2.conjugates.get(c) {
                let conj = h.inverse().concat(g).expect("3 strands").free_reduce();
                debug_assert!(conj.len() <= self.bound);
                return Ok(OracleVerdict::Conjugate(conj));
            }
        }
        Ok(OracleVerdict::Unresolved)
    }
}

/// One-shot form of [`ConjugacyOracle::check`].
pub fn brute_force_conjugacy_oracle(
    w1: &BraidWord,
    w2: &BraidWord,
    conjugator_bound: usize,
    batteries: &[InvariantBattery],
) -> Result<OracleVerdict, B3Error> {
    ConjugacyOracle::new(conjugator_bound, batteries).check(w1, w2)
}

/// Checks a claimed certificate on the Burau matrices.
pub fn verify_conjugator(w1: &BraidWord, w2: &BraidWord, g: &BraidWord) -> bool {
    let Ok(c) = w1.conjugate(g) else { return false };
    reduced_burau_poly::<i64>(&c) == reduced_burau_poly::<i64>(w2)
}
