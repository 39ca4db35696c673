//! Words in the Artin generators of the braid group `B_n`.
//!
//! A [`BraidWord`] carries its strand count explicitly: the Bennequin number
//! depends on the braid index even when the highest strands are never touched
//! by a crossing.

use std::fmt;
use std::num::NonZeroUsize;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("a braid needs at least one strand")]
    ZeroStrands,
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("cannot parse braid word: {0}")]
    Parse(String),
}

/// Crossing sign of a generator letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn of(k: i64) -> Option<Sign> {
        match k.signum() {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = String;

    fn try_from(value: i64) -> Result<Self, Self::Error> {
        match value {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(format!("sign must be +1 or -1, got {other}")),
        }
    }
}

impl From<Sign> for i64 {
    fn from(s: Sign) -> i64 {
        s.value()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// One letter `σ_i^{±1}`. The index is 1-based and never zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    index: NonZeroUsize,
    sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Option<Letter> {
        NonZeroUsize::new(index).map(|index| Letter { index, sign })
    }

    pub fn pos(index: usize) -> Letter {
        Letter::new(index, Sign::Positive).expect("generator index must be nonzero")
    }

    pub fn neg(index: usize) -> Letter {
        Letter::new(index, Sign::Negative).expect("generator index must be nonzero")
    }

    pub fn index(self) -> usize {
        self.index.get()
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            sign: self.sign.flip(),
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.sign != other.sign
    }

    /// Same sign, index moved by `offset`.
    pub fn shifted(self, offset: usize) -> Letter {
        Letter::new(self.index() + offset, self.sign).unwrap()
    }
}

/// A braid word on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord, WordError> {
        if strands == 0 {
            return Err(WordError::ZeroStrands);
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= strands) {
            return Err(WordError::IndexOutOfRange {
                index: bad.index(),
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> BraidWord {
        assert!(strands > 0, "a braid needs at least one strand");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Builds `σ_{i1}^{k1} σ_{i2}^{k2} ...` from `(i, k)` pairs.
    pub fn from_powers(strands: usize, powers: &[(usize, i64)]) -> Result<BraidWord, WordError> {
        let mut letters = Vec::new();
        for &(index, k) in powers {
            let Some(sign) = Sign::of(k) else { continue };
            let letter =
                Letter::new(index, sign).ok_or(WordError::IndexOutOfRange { index, strands })?;
            letters.extend(std::iter::repeat_n(letter, k.unsigned_abs() as usize));
        }
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    /// Same letters on a different number of strands.
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord, WordError> {
        BraidWord::new(strands, self.letters.clone())
    }

    pub fn push(&self, letter: Letter) -> Result<BraidWord, WordError> {
        let mut letters = self.letters.clone();
        letters.push(letter);
        BraidWord::new(self.strands, letters)
    }

    /// Deletes adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, WordError> {
        self.check_same_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `g · self · g⁻¹`
    pub fn conjugate(&self, g: &BraidWord) -> Result<BraidWord, WordError> {
        g.concat(self)?.concat(&g.inverse())
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign().value()).sum()
    }

    /// Self-linking number `e − b` of the closed braid.
    pub fn bennequin(&self) -> i64 {
        self.exponent_sum() - self.strands as i64
    }

    pub fn underlying_permutation(&self) -> StrandPermutation {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at.swap(l.index() - 1, l.index());
        }
        // `at[p]` is the starting position of the strand now at p.
        let mut images = vec![0; self.strands];
        for (end, &start) in at.iter().enumerate() {
            images[start] = end;
        }
        StrandPermutation { images }
    }

    /// Word rotated left by `k` letters.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Every cyclic rotation, starting with the word itself. The empty word
    /// has the single (empty) rotation.
    pub fn cyclic_rotations(&self) -> Vec<BraidWord> {
        (0..self.letters.len().max(1))
            .map(|k| self.rotate(k))
            .collect()
    }

    /// Moves every generator index up by `offset` and places the word on
    /// `strands` strands.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<BraidWord, WordError> {
        BraidWord::new(
            strands,
            self.letters.iter().map(|l| l.shifted(offset)).collect(),
        )
    }

    /// Maps `σ_i` to `σ_{n-i}` with the same sign: the braid turned over about
    /// the vertical axis in the projection plane.
    pub fn mirrored_positions(&self) -> BraidWord {
        let n = self.strands;
        BraidWord {
            strands: n,
            letters: self
                .letters
                .iter()
                .map(|l| Letter::new(n - l.index(), l.sign()).unwrap())
                .collect(),
        }
    }

    fn check_same_strands(&self, other: &BraidWord) -> Result<(), WordError> {
        if self.strands != other.strands {
            return Err(WordError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// Text notation `s1^3 s2^-1 ...`. An `n=<k>` prefix is emitted only when
    /// the strand count differs from the inferred `max index + 1`.
    pub fn to_notation(&self) -> String {
        let mut parts = Vec::new();
        if self.strands != self.max_index() + 1 {
            parts.push(format!("n={}", self.strands));
        }
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let run = self.letters[i..].iter().take_while(|&&m| m == l).count();
            parts.push(format!("s{}^{}", l.index(), l.sign().value() * run as i64));
            i += run;
        }
        parts.join(" ")
    }

    /// Parses the text notation. `strands` overrides both the inferred count
    /// and any `n=` prefix.
    pub fn parse_with_strands(text: &str, strands: Option<usize>) -> Result<BraidWord, WordError> {
        let mut prefix = None;
        let mut letters = Vec::new();
        for (pos, token) in text.split_whitespace().enumerate() {
            if let Some(rest) = token.strip_prefix("n=") {
                if pos != 0 {
                    return Err(WordError::Parse(format!("`{token}` must come first")));
                }
                let n = rest
                    .parse::<usize>()
                    .map_err(|_| WordError::Parse(format!("bad strand count `{token}`")))?;
                prefix = Some(n);
                continue;
            }
            let body = token
                .strip_prefix('s')
                .ok_or_else(|| WordError::Parse(format!("bad factor `{token}`")))?;
            let (index, exp) = match body.split_once('^') {
                Some((i, k)) => (i, k),
                None => (body, "1"),
            };
            let index: usize = index
                .parse()
                .map_err(|_| WordError::Parse(format!("bad generator index in `{token}`")))?;
            let exp: i64 = exp
                .parse()
                .map_err(|_| WordError::Parse(format!("bad exponent in `{token}`")))?;
            if exp == 0 {
                return Err(WordError::Parse(format!("zero exponent in `{token}`")));
            }
            let letter = Letter::new(index, Sign::of(exp).unwrap())
                .ok_or_else(|| WordError::Parse(format!("generator index 0 in `{token}`")))?;
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        let inferred = letters.iter().map(|l| l.index()).max().unwrap_or(0) + 1;
        BraidWord::new(strands.or(prefix).unwrap_or(inferred), letters)
    }
}

impl FromStr for BraidWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BraidWord::parse_with_strands(s, None)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_notation())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_notation())
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Permutation of strand positions induced by a braid word.
///
/// `images[i]` is the final position of the strand that starts at position
/// `i` (both 0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrandPermutation {
    images: Vec<usize>,
}

impl StrandPermutation {
    pub fn identity(n: usize) -> StrandPermutation {
        StrandPermutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from 0-based images; `None` unless the list is a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<StrandPermutation> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(StrandPermutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &StrandPermutation) -> StrandPermutation {
        assert_eq!(self.len(), then.len());
        StrandPermutation {
            images: self.images.iter().map(|&i| then.images[i]).collect(),
        }
    }

    /// Cycles as sorted lists of 1-based positions, ordered by smallest member.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            cycle.sort_unstable();
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for StrandPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        let mut seen = vec![false; self.len()];
        for start in 0..self.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut i = start;
            let mut cycle = Vec::new();
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.images[i];
            }
            write!(f, "({})", cycle.join(" "))?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}
