//! Markov towers: sequences of closed braids joined by stabilization,
//! destabilization, conjugation and exchange moves.
//!
//! In transversal mode only positive (de)stabilizations are allowed and the
//! Bennequin number is constant along the tower. Each (de)stabilization is
//! also charged to the vertex/singularity counts of the braid-foliated annulus
//! between the end braids, and the tower is checked against
//! `β(first) − β(last) = (s₊ − s₋) − (v₊ − v₋)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{BraidWord, Letter, Sign, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("no cyclic rotation ends in a lone σ_(n-1) of the requested sign")]
    NotDestabilizable,
    #[error("invalid exchange split: {0}")]
    InvalidSplit(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Lengths of the blocks `P` and `Q` in `w = P σ_{n−1}^δ Q σ_{n−1}^{−δ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExchangeSplit {
    pub p_len: usize,
    pub q_len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Move {
    Stabilize { sign: Sign },
    Destabilize { sign: Sign },
    ConjugateBy { conjugator: BraidWord },
    Exchange { split: ExchangeSplit },
}

impl Move {
    /// Negative stabilizations and destabilizations.
    pub fn is_negative_markov(&self) -> bool {
        matches!(
            self,
            Move::Stabilize {
                sign: Sign::Negative
            } | Move::Destabilize {
                sign: Sign::Negative
            }
        )
    }
}

/// Appends `σ_n^{sign}` on a new strand `n + 1`.
pub fn stabilize(w: &BraidWord, sign: Sign) -> BraidWord {
    let n = w.strands();
    w.with_strands(n + 1)
        .and_then(|u| u.push(Letter::new(n, sign).unwrap()))
        .expect("stabilization stays in range")
}

/// Removes a trailing lone `σ_{n−1}^{sign}` from some cyclic rotation of the
/// free reduction of `w`.
pub fn destabilize(w: &BraidWord, sign: Sign) -> Result<BraidWord, MoveError> {
    let n = w.strands();
    if n < 2 {
        return Err(MoveError::NotDestabilizable);
    }
    let reduced = w.free_reduce();
    let top = n - 1;
    if reduced
        .letters()
        .iter()
        .filter(|l| l.index() == top)
        .count()
        != 1
    {
        return Err(MoveError::NotDestabilizable);
    }
    let at = reduced
        .letters()
        .iter()
        .position(|l| l.index() == top)
        .unwrap();
    if reduced.letters()[at].sign() != sign {
        return Err(MoveError::NotDestabilizable);
    }
    let rotated = reduced.rotate(at + 1);
    let body = &rotated.letters()[..rotated.len() - 1];
    Ok(BraidWord::new(n - 1, body.to_vec())?)
}

/// Rewrites `P σ_{n−1}^δ Q σ_{n−1}^{−δ}` as `P σ_{n−1}^{−δ} Q σ_{n−1}^δ`.
pub fn exchange_move(w: &BraidWord, split: ExchangeSplit) -> Result<BraidWord, MoveError> {
    let n = w.strands();
    let letters = w.letters();
    let ExchangeSplit { p_len, q_len } = split;
    if n < 3 {
        return Err(MoveError::InvalidSplit(
            "exchange needs at least 3 strands".into(),
        ));
    }
    if p_len + q_len + 2 != letters.len() {
        return Err(MoveError::InvalidSplit(format!(
            "P and Q lengths {p_len} + {q_len} + 2 do not cover {} letters",
            letters.len()
        )));
    }
    let top = n - 1;
    let first = letters[p_len];
    let last = letters[letters.len() - 1];
    if first.index() != top || last.index() != top || first.sign() == last.sign() {
        return Err(MoveError::InvalidSplit(format!(
            "expected σ{top}^±1 ... σ{top}^∓1 at the split points"
        )));
    }
    let p = &letters[..p_len];
    let q = &letters[p_len + 1..p_len + 1 + q_len];
    if p.iter().chain(q).any(|l| l.index() >= top) {
        return Err(MoveError::InvalidSplit(format!("P or Q uses σ{top}")));
    }
    let mut out = Vec::with_capacity(letters.len());
    out.extend_from_slice(p);
    out.push(first.inverse());
    out.extend_from_slice(q);
    out.push(last.inverse());
    Ok(BraidWord::new(n, out)?)
}

/// Every split at which [`exchange_move`] applies to `w` as written.
pub fn exchange_splits(w: &BraidWord) -> Vec<ExchangeSplit> {
    let n = w.strands();
    if n < 3 || w.len() < 2 {
        return Vec::new();
    }
    let top = n - 1;
    let tops: Vec<usize> = w
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.index() == top)
        .map(|(i, _)| i)
        .collect();
    match tops[..] {
        [a, b] if b == w.len() - 1 && w.letters()[a].sign() != w.letters()[b].sign() => {
            vec![ExchangeSplit {
                p_len: a,
                q_len: b - a - 1,
            }]
        }
        _ => Vec::new(),
    }
}

pub fn apply_move(w: &BraidWord, mv: &Move) -> Result<BraidWord, MoveError> {
    match mv {
        Move::Stabilize { sign } => Ok(stabilize(w, *sign)),
        Move::Destabilize { sign } => destabilize(w, *sign),
        Move::ConjugateBy { conjugator } => {
            let g = if conjugator.strands() == w.strands() {
                conjugator.clone()
            } else {
                conjugator.with_strands(w.strands())?
            };
            Ok(w.conjugate(&g)?)
        }
        Move::Exchange { split } => exchange_move(w, *split),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TowerMode {
    Topological,
    Transversal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    #[error("step {0}: the move does not reproduce the next state")]
    StepMismatch(usize),
    #[error("step {0}: negative (de)stabilization in a transversal tower")]
    IllegalMoveForMode(usize),
    #[error("tower has {states} states for {moves} moves")]
    Shape { states: usize, moves: usize },
    #[error("Bennequin bookkeeping fails: {0}")]
    Bookkeeping(String),
}

/// A sequence of closed braids joined by moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovTower {
    pub mode: TowerMode,
    pub states: Vec<BraidWord>,
    pub moves: Vec<Move>,
}

impl MarkovTower {
    pub fn new(
        mode: TowerMode,
        states: Vec<BraidWord>,
        moves: Vec<Move>,
    ) -> Result<Self, TowerError> {
        if states.len() != moves.len() + 1 {
            return Err(TowerError::Shape {
                states: states.len(),
                moves: moves.len(),
            });
        }
        Ok(MarkovTower {
            mode,
            states,
            moves,
        })
    }

    /// Builds the states by applying `moves` to `initial`. A move that does not
    /// apply is reported as a mismatch at its step.
    pub fn replay(
        mode: TowerMode,
        initial: BraidWord,
        moves: Vec<Move>,
    ) -> Result<Self, TowerError> {
        let mut states = vec![initial];
        for (k, mv) in moves.iter().enumerate() {
            let next = apply_move(&states[k], mv).map_err(|_| TowerError::StepMismatch(k))?;
            states.push(next);
        }
        MarkovTower::new(mode, states, moves)
    }
}

/// Net change of the annulus vertex and singularity counts over a tower.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FoliationCounts {
    pub v_plus: i64,
    pub v_minus: i64,
    pub s_plus: i64,
    pub s_minus: i64,
}

impl FoliationCounts {
    /// `v₊ + v₋ = s₊ + s₋`
    pub fn euler_balanced(&self) -> bool {
        self.v_plus + self.v_minus == self.s_plus + self.s_minus
    }

    /// `(s₊ − s₋) − (v₊ − v₋)`
    pub fn bennequin_change(&self) -> i64 {
        (self.s_plus - self.s_minus) - (self.v_plus - self.v_minus)
    }

    fn record(&mut self, mv: &Move) {
        let (sign, delta) = match mv {
            Move::Stabilize { sign } => (*sign, 1),
            Move::Destabilize { sign } => (*sign, -1),
            _ => return,
        };
        match sign {
            Sign::Positive => {
                self.v_plus += delta;
                self.s_plus += delta;
            }
            Sign::Negative => {
                self.v_minus += delta;
                self.s_minus += delta;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReport {
    pub mode: TowerMode,
    pub counts: FoliationCounts,
    /// Bennequin number of every state.
    pub betas: Vec<i64>,
}

impl TowerReport {
    pub fn beta_constant(&self) -> bool {
        self.betas.windows(2).all(|p| p[0] == p[1])
    }
}

/// Replays the tower and checks every step, the mode restriction and the
/// Bennequin bookkeeping.
pub fn validate_tower(t: &MarkovTower) -> Result<TowerReport, TowerError> {
    if t.states.len() != t.moves.len() + 1 {
        return Err(TowerError::Shape {
            states: t.states.len(),
            moves: t.moves.len(),
        });
    }
    let mut counts = FoliationCounts::default();
    for (k, mv) in t.moves.iter().enumerate() {
        if t.mode == TowerMode::Transversal && mv.is_negative_markov() {
            return Err(TowerError::IllegalMoveForMode(k));
        }
        let next = apply_move(&t.states[k], mv).map_err(|_| TowerError::StepMismatch(k))?;
        let expected = &t.states[k + 1];
        if next.strands() != expected.strands() || next.free_reduce() != expected.free_reduce() {
            return Err(TowerError::StepMismatch(k));
        }
        counts.record(mv);
    }
    let betas: Vec<i64> = t.states.iter().map(BraidWord::bennequin).collect();
    let report = TowerReport {
        mode: t.mode,
        counts,
        betas,
    };
    if !counts.euler_balanced() {
        return Err(TowerError::Bookkeeping("v₊ + v₋ ≠ s₊ + s₋".into()));
    }
    if t.mode == TowerMode::Transversal {
        let first = report.betas[0];
        let last = *report.betas.last().unwrap();
        if first - last != counts.bennequin_change() {
            return Err(TowerError::Bookkeeping(format!(
                "β(first) − β(last) = {} but (s₊ − s₋) − (v₊ − v₋) = {}",
                first - last,
                counts.bennequin_change()
            )));
        }
        if !report.beta_constant() {
            return Err(TowerError::Bookkeeping(
                "β varies along a transversal tower".into(),
            ));
        }
    }
    Ok(report)
}

/// On-disk tower description. `states`, when present, is checked against
/// the replay instead of being derived from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerFile {
    pub mode: TowerMode,
    pub initial_word: BraidWord,
    pub moves: Vec<Move>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub states: Option<Vec<BraidWord>>,
}

impl TowerFile {
    pub fn into_tower(self) -> Result<MarkovTower, TowerError> {
        match self.states {
            Some(states) => {
                if states.first() != Some(&self.initial_word) {
                    return Err(TowerError::StepMismatch(0));
                }
                MarkovTower::new(self.mode, states, self.moves)
            }
            None => MarkovTower::replay(self.mode, self.initial_word, self.moves),
        }
    }
}
