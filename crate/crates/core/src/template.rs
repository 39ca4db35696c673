//! Block-strand templates.
//!
//! A skeleton is a closed-braid word with holes: fixed crossings between
//! skeleton strands plus block slots that receive a braid at instantiation.
//! Skeleton strands may carry a weight, meaning that many parallel strands;
//! a crossing between weighted strands becomes the full grid of crossings of
//! the two cables. A template pairs two skeletons over the same blocks. The
//! blocks are carried rigidly from one side to the other, so each block port
//! sits on the same link component on both sides; that is how components are
//! matched across the template.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closure::ComponentTrace;
use crate::word::{BraidWord, Letter, Sign, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TemplateError {
    #[error("no braid assigned to block {0}")]
    MissingAssignment(BlockId),
    #[error("block {id} has width {expected} but was assigned a braid on {got} strands")]
    WidthMismatch {
        id: BlockId,
        expected: usize,
        got: usize,
    },
    #[error("flype weights need k' - w >= 0 (k' = {k_prime}, w = {w})")]
    WeightConstraintViolation { w: usize, k_prime: usize },
    #[error(
        "weighted flype templates are not instantiated: the half-twist convention is undecided"
    )]
    UnsupportedWeights,
    #[error("invalid skeleton: {0}")]
    InvalidSkeleton(String),
    #[error("inconsistent component correspondence: {0}")]
    InconsistentCorrespondence(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BlockId(pub String);

impl BlockId {
    pub fn new(name: &str) -> BlockId {
        BlockId(name.to_string())
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SkeletonItem {
    /// Crossing between skeleton strands `position` and `position + 1`
    /// (1-based).
    Crossing { position: usize, sign: Sign },
    /// Block over skeleton strands `start .. start + span`. A flipped block is
    /// the same braid turned over about the vertical axis: generator indices
    /// and port order are reversed.
    Block {
        id: BlockId,
        start: usize,
        span: usize,
        flipped: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSkeleton {
    weights: Vec<usize>,
    items: Vec<SkeletonItem>,
}

impl BlockSkeleton {
    pub fn new(weights: Vec<usize>, items: Vec<SkeletonItem>) -> Result<Self, TemplateError> {
        let invalid = |m: String| Err(TemplateError::InvalidSkeleton(m));
        if weights.is_empty() || weights.contains(&0) {
            return invalid("weights must be positive".into());
        }
        let n = weights.len();
        let mut layout = weights.clone();
        let mut seen = Vec::new();
        for item in &items {
            match item {
                SkeletonItem::Crossing { position, .. } => {
                    if *position == 0 || *position >= n {
                        return invalid(format!("crossing at {position} on {n} skeleton strands"));
                    }
                    layout.swap(position - 1, *position);
                }
                SkeletonItem::Block {
                    id, start, span, ..
                } => {
                    if *start == 0 || start + span - 1 > n {
                        return invalid(format!("block {id} does not fit"));
                    }
                    let width: usize = layout[start - 1..start - 1 + span].iter().sum();
                    if width < 2 {
                        return invalid(format!("block {id} meets fewer than 2 strands"));
                    }
                    if seen.contains(id) {
                        return invalid(format!("block {id} appears twice"));
                    }
                    seen.push(id.clone());
                }
            }
        }
        Ok(BlockSkeleton { weights, items })
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn items(&self) -> &[SkeletonItem] {
        &self.items
    }

    /// Number of braid strands after cabling.
    pub fn strands(&self) -> usize {
        self.weights.iter().sum()
    }

    pub fn block_ids(&self) -> Vec<BlockId> {
        let mut ids: Vec<BlockId> = self
            .items
            .iter()
            .filter_map(|it| match it {
                SkeletonItem::Block { id, .. } => Some(id.clone()),
                _ => None,
            })
            .collect();
        ids.sort();
        ids
    }

    /// Cabled width of every block.
    pub fn block_widths(&self) -> BTreeMap<BlockId, usize> {
        let mut layout = self.weights.clone();
        let mut out = BTreeMap::new();
        for item in &self.items {
            match item {
                SkeletonItem::Crossing { position, .. } => layout.swap(position - 1, *position),
                SkeletonItem::Block {
                    id, start, span, ..
                } => {
                    out.insert(id.clone(), layout[start - 1..start - 1 + span].iter().sum());
                }
            }
        }
        out
    }
}

/// Where a block landed in an instantiated word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPlacement {
    pub id: BlockId,
    /// Letters `first_letter .. end_letter` of the word come from the block.
    pub first_letter: usize,
    pub end_letter: usize,
    /// 0-based position of the block's leftmost strand.
    pub offset: usize,
    pub width: usize,
    pub flipped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instantiation {
    pub word: BraidWord,
    pub placements: Vec<BlockPlacement>,
}

/// Braid words assigned to blocks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BraidingAssignment(pub BTreeMap<BlockId, BraidWord>);

impl BraidingAssignment {
    pub fn new() -> Self {
        BraidingAssignment::default()
    }

    pub fn with(mut self, id: &str, word: BraidWord) -> Self {
        self.0.insert(BlockId::new(id), word);
        self
    }

    pub fn get(&self, id: &BlockId) -> Option<&BraidWord> {
        self.0.get(id)
    }
}

/// Grid of `a · b` crossings of one sign moving a cable of `b` strands across
/// a cable of `a` strands, the left cable starting at 0-based `offset`.
fn cabled_crossing(offset: usize, a: usize, b: usize, sign: Sign) -> Vec<Letter> {
    let mut out = Vec::with_capacity(a * b);
    for i in 0..b {
        for k in (0..a).rev() {
            out.push(Letter::new(offset + k + i + 1, sign).unwrap());
        }
    }
    out
}

pub fn instantiate_with_placements(
    sk: &BlockSkeleton,
    a: &BraidingAssignment,
) -> Result<Instantiation, TemplateError> {
    let mut layout = sk.weights.clone();
    let mut letters = Vec::new();
    let mut placements = Vec::new();
    let offset_of = |layout: &[usize], pos: usize| -> usize { layout[..pos - 1].iter().sum() };
    for item in &sk.items {
        match item {
            SkeletonItem::Crossing { position, sign } => {
                let off = offset_of(&layout, *position);
                let (wa, wb) = (layout[position - 1], layout[*position]);
                letters.extend(cabled_crossing(off, wa, wb, *sign));
                layout.swap(position - 1, *position);
            }
            SkeletonItem::Block {
                id,
                start,
                span,
                flipped,
            } => {
                let off = offset_of(&layout, *start);
                let width: usize = layout[start - 1..start - 1 + span].iter().sum();
                let word = a
                    .get(id)
                    .ok_or_else(|| TemplateError::MissingAssignment(id.clone()))?;
                if word.strands() != width {
                    return Err(TemplateError::WidthMismatch {
                        id: id.clone(),
                        expected: width,
                        got: word.strands(),
                    });
                }
                let body = if *flipped {
                    word.mirrored_positions()
                } else {
                    word.clone()
                };
                let first_letter = letters.len();
                letters.extend(body.letters().iter().map(|l| l.shifted(off)));
                placements.push(BlockPlacement {
                    id: id.clone(),
                    first_letter,
                    end_letter: letters.len(),
                    offset: off,
                    width,
                    flipped: *flipped,
                });
            }
        }
    }
    Ok(Instantiation {
        word: BraidWord::new(sk.strands(), letters)?,
        placements,
    })
}

/// The braid carried by `sk` under the assignment `a`.
pub fn instantiate(sk: &BlockSkeleton, a: &BraidingAssignment) -> Result<BraidWord, TemplateError> {
    instantiate_with_placements(sk, a).map(|i| i.word)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TemplateKind {
    Destabilize {
        sign: Sign,
        weight: usize,
    },
    Exchange {
        weight: usize,
    },
    Flype {
        sign: Sign,
        w: usize,
        w_prime: usize,
        k: usize,
        k_prime: usize,
    },
}

impl TemplateKind {
    pub fn flype(sign: Sign) -> TemplateKind {
        TemplateKind::Flype {
            sign,
            w: 1,
            w_prime: 1,
            k: 1,
            k_prime: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PortMap {
    Identity,
    Reversed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    pub kind: TemplateKind,
    pub plus: BlockSkeleton,
    pub minus: BlockSkeleton,
    pub port_map: BTreeMap<BlockId, PortMap>,
}

fn block(id: &str, start: usize, span: usize) -> SkeletonItem {
    SkeletonItem::Block {
        id: BlockId::new(id),
        start,
        span,
        flipped: false,
    }
}

fn flipped_block(id: &str, start: usize, span: usize) -> SkeletonItem {
    SkeletonItem::Block {
        id: BlockId::new(id),
        start,
        span,
        flipped: true,
    }
}

fn crossing(position: usize, sign: Sign) -> SkeletonItem {
    SkeletonItem::Crossing { position, sign }
}

pub fn builtin_template(kind: TemplateKind) -> Result<Template, TemplateError> {
    let (plus, minus) = match kind {
        TemplateKind::Destabilize { sign, weight } => {
            if weight == 0 {
                return Err(TemplateError::InvalidSkeleton(
                    "weight must be positive".into(),
                ));
            }
            (
                BlockSkeleton::new(
                    vec![weight, 1, 1],
                    vec![block("P", 1, 2), crossing(2, sign)],
                )?,
                BlockSkeleton::new(vec![weight, 1], vec![block("P", 1, 2)])?,
            )
        }
        TemplateKind::Exchange { weight } => {
            if weight == 0 {
                return Err(TemplateError::InvalidSkeleton(
                    "weight must be positive".into(),
                ));
            }
            let side = |first: Sign| {
                BlockSkeleton::new(
                    vec![weight, 1, 1],
                    vec![
                        block("P", 1, 2),
                        crossing(2, first),
                        block("Q", 1, 2),
                        crossing(2, first.flip()),
                    ],
                )
            };
            (side(Sign::Positive)?, side(Sign::Negative)?)
        }
        TemplateKind::Flype {
            sign,
            w,
            w_prime,
            k,
            k_prime,
        } => {
            if k_prime < w {
                return Err(TemplateError::WeightConstraintViolation { w, k_prime });
            }
            if [w, w_prime, k, k_prime] != [1, 1, 1, 1] {
                return Err(TemplateError::UnsupportedWeights);
            }
            (
                BlockSkeleton::new(
                    vec![1, 1, 1],
                    vec![
                        block("P", 1, 2),
                        block("R", 2, 2),
                        block("Q", 1, 2),
                        crossing(2, sign),
                    ],
                )?,
                BlockSkeleton::new(
                    vec![1, 1, 1],
                    vec![
                        block("P", 1, 2),
                        crossing(2, sign),
                        block("Q", 1, 2),
                        flipped_block("R", 2, 2),
                    ],
                )?,
            )
        }
    };
    let port_map = port_map_between(&plus, &minus)?;
    Ok(Template {
        kind,
        plus,
        minus,
        port_map,
    })
}

fn flips(sk: &BlockSkeleton) -> BTreeMap<BlockId, bool> {
    sk.items
        .iter()
        .filter_map(|it| match it {
            SkeletonItem::Block { id, flipped, .. } => Some((id.clone(), *flipped)),
            _ => None,
        })
        .collect()
}

fn port_map_between(
    plus: &BlockSkeleton,
    minus: &BlockSkeleton,
) -> Result<BTreeMap<BlockId, PortMap>, TemplateError> {
    let (fp, fm) = (flips(plus), flips(minus));
    if fp.keys().ne(fm.keys()) {
        return Err(TemplateError::InvalidSkeleton(
            "the two sides have different blocks".into(),
        ));
    }
    if plus.block_widths() != minus.block_widths() {
        return Err(TemplateError::InvalidSkeleton(
            "block widths differ between sides".into(),
        ));
    }
    Ok(fp
        .iter()
        .map(|(id, f)| {
            let map = if *f == fm[id] {
                PortMap::Identity
            } else {
                PortMap::Reversed
            };
            (id.clone(), map)
        })
        .collect())
}

impl Template {
    pub fn instantiate(
        &self,
        a: &BraidingAssignment,
    ) -> Result<(BraidWord, BraidWord), TemplateError> {
        Ok((instantiate(&self.plus, a)?, instantiate(&self.minus, a)?))
    }

    pub fn block_widths(&self) -> BTreeMap<BlockId, usize> {
        self.plus.block_widths()
    }
}

/// A closure component of the plus side together with its image on the
/// minus side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchedComponent {
    /// `L1, L2, ...` in order of first appearance on a block port of the plus
    /// side (blocks in skeleton order; in-ports, then out-ports, left to
    /// right).
    pub label: String,
    /// Index into [`crate::closure::components`] of each side.
    pub plus_index: usize,
    pub minus_index: usize,
}

fn port_components(
    trace: &ComponentTrace,
    p: &BlockPlacement,
    i: usize,
    reversed: bool,
) -> (usize, usize) {
    let slot = if reversed { p.width - 1 - i } else { i };
    (
        trace.component_at(p.first_letter, p.offset + slot),
        trace.component_at(p.end_letter, p.offset + slot),
    )
}

/// Matches the closure components of the two instantiations through block
/// ports.
pub fn component_correspondence(
    t: &Template,
    a: &BraidingAssignment,
) -> Result<Vec<MatchedComponent>, TemplateError> {
    let plus = instantiate_with_placements(&t.plus, a)?;
    let minus = instantiate_with_placements(&t.minus, a)?;
    let tp = ComponentTrace::new(&plus.word);
    let tm = ComponentTrace::new(&minus.word);
    let mut forward: Vec<Option<usize>> = vec![None; tp.component_count()];
    let mut backward: Vec<Option<usize>> = vec![None; tm.component_count()];
    let mut order = Vec::new();
    for pp in &plus.placements {
        let pm = minus
            .placements
            .iter()
            .find(|m| m.id == pp.id)
            .ok_or_else(|| {
                TemplateError::InvalidSkeleton(format!("block {} missing on minus side", pp.id))
            })?;
        let reversed = t.port_map.get(&pp.id) == Some(&PortMap::Reversed);
        let mut pairs = Vec::new();
        for i in 0..pp.width {
            let (pin, pout) = port_components(&tp, pp, i, false);
            let (min, mout) = port_components(&tm, pm, i, reversed);
            pairs.push((pin, min, i, "in"));
            pairs.push((pout, mout, i, "out"));
        }
        pairs.sort_by_key(|&(_, _, i, side)| (side == "out", i));
        for (cp, cm, i, side) in pairs {
            let clash = |what: &str| {
                TemplateError::InconsistentCorrespondence(format!(
                    "block {} {side}-port {} links {what}",
                    pp.id,
                    i + 1
                ))
            };
            match forward[cp] {
                None => {
                    if backward[cm].is_some() {
                        return Err(clash("two plus components to one minus component"));
                    }
                    forward[cp] = Some(cm);
                    backward[cm] = Some(cp);
                    order.push(cp);
                }
                Some(prev) if prev != cm => {
                    return Err(clash("one plus component to two minus components"));
                }
                Some(_) => {}
            }
        }
    }
    if forward.iter().any(Option::is_none) || backward.iter().any(Option::is_none) {
        return Err(TemplateError::InconsistentCorrespondence(
            "some component meets no block port".into(),
        ));
    }
    Ok(order
        .into_iter()
        .enumerate()
        .map(|(k, cp)| MatchedComponent {
            label: format!("L{}", k + 1),
            plus_index: cp,
            minus_index: forward[cp].unwrap(),
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaDelta {
    pub component: String,
    pub beta_plus: i64,
    pub beta_minus: i64,
}

impl BetaDelta {
    pub fn changed(&self) -> bool {
        self.beta_plus != self.beta_minus
    }
}

/// Bennequin number of each matched component on both sides.
pub fn per_component_beta_delta(
    t: &Template,
    a: &BraidingAssignment,
) -> Result<Vec<BetaDelta>, TemplateError> {
    let matched = component_correspondence(t, a)?;
    let (wp, wm) = t.instantiate(a)?;
    let (cp, cm) = (
        crate::closure::components(&wp),
        crate::closure::components(&wm),
    );
    Ok(matched
        .into_iter()
        .map(|m| BetaDelta {
            component: m.label,
            beta_plus: cp.parts[m.plus_index].beta,
            beta_minus: cm.parts[m.minus_index].beta,
        })
        .collect())
}

/// Template description file: `{kind, params, assignment}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateFile {
    #[serde(flatten)]
    pub kind: TemplateKind,
    pub assignment: BTreeMap<String, String>,
}

impl TemplateFile {
    /// Builds the template and parses each block word on its block's width.
    pub fn resolve(&self) -> Result<(Template, BraidingAssignment), TemplateError> {
        let t = builtin_template(self.kind)?;
        let widths = t.block_widths();
        let mut a = BraidingAssignment::new();
        for (name, text) in &self.assignment {
            let id = BlockId::new(name);
            let width = widths.get(&id).copied().ok_or_else(|| {
                TemplateError::InvalidSkeleton(format!("template has no block {name}"))
            })?;
            let word = BraidWord::parse_with_strands(text, Some(width))?;
            a.0.insert(id, word);
        }
        Ok((t, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, p: &[(usize, i64)]) -> BraidWord {
        BraidWord::from_powers(n, p).unwrap()
    }

    fn prq(p: i64, r: i64, q: i64) -> BraidingAssignment {
        BraidingAssignment::new()
            .with("P", w(2, &[(1, p)]))
            .with("R", w(2, &[(1, r)]))
            .with("Q", w(2, &[(1, q)]))
    }

    #[test]
    fn negative_flype_instantiation() {
        let t = builtin_template(TemplateKind::flype(Sign::Negative)).unwrap();
        let (plus, minus) = t.instantiate(&prq(5, 6, 8)).unwrap();
        assert_eq!(plus, w(3, &[(1, 5), (2, 6), (1, 8), (2, -1)]));
        assert_eq!(minus, w(3, &[(1, 5), (2, -1), (1, 8), (2, 6)]));
        let (plus, _) = t.instantiate(&prq(3, 4, -5)).unwrap();
        assert_eq!(plus, w(3, &[(1, 3), (2, 4), (1, -5), (2, -1)]));
        let (plus, minus) = t.instantiate(&prq(0, 0, 0)).unwrap();
        assert_eq!(plus, w(3, &[(2, -1)]));
        assert_eq!(minus, w(3, &[(2, -1)]));
        assert_eq!(t.port_map[&BlockId::new("R")], PortMap::Reversed);
        assert_eq!(t.port_map[&BlockId::new("P")], PortMap::Identity);
    }

    #[test]
    fn assignment_errors() {
        let t = builtin_template(TemplateKind::flype(Sign::Negative)).unwrap();
        let missing = BraidingAssignment::new().with("P", w(2, &[(1, 1)]));
        assert!(matches!(
            t.instantiate(&missing),
            Err(TemplateError::MissingAssignment(_))
        ));
        let wide = prq(1, 1, 1).with("R", w(3, &[(1, 1)]));
        assert!(matches!(
            t.instantiate(&wide),
            Err(TemplateError::WidthMismatch {
                expected: 2,
                got: 3,
                ..
            })
        ));
    }

    #[test]
    fn weight_constraints() {
        let bad = TemplateKind::Flype {
            sign: Sign::Negative,
            w: 3,
            w_prime: 1,
            k: 1,
            k_prime: 2,
        };
        assert_eq!(
            builtin_template(bad),
            Err(TemplateError::WeightConstraintViolation { w: 3, k_prime: 2 })
        );
        let heavy = TemplateKind::Flype {
            sign: Sign::Positive,
            w: 1,
            w_prime: 2,
            k: 1,
            k_prime: 2,
        };
        assert_eq!(
            builtin_template(heavy),
            Err(TemplateError::UnsupportedWeights)
        );
    }

    #[test]
    fn destabilization_template() {
        let t = builtin_template(TemplateKind::Destabilize {
            sign: Sign::Positive,
            weight: 1,
        })
        .unwrap();
        let a = BraidingAssignment::new().with("P", w(2, &[(1, 3)]));
        let (plus, minus) = t.instantiate(&a).unwrap();
        assert_eq!(plus, w(3, &[(1, 3), (2, 1)]));
        assert_eq!(minus, w(2, &[(1, 3)]));

        let t2 = builtin_template(TemplateKind::Destabilize {
            sign: Sign::Negative,
            weight: 2,
        })
        .unwrap();
        assert_eq!(t2.plus.strands(), 4);
        let a2 = BraidingAssignment::new().with("P", w(3, &[(1, 1), (2, -2)]));
        let (plus, minus) = t2.instantiate(&a2).unwrap();
        assert_eq!(plus, w(4, &[(1, 1), (2, -2), (3, -1)]));
        assert_eq!(minus, w(3, &[(1, 1), (2, -2)]));
        let deltas = per_component_beta_delta(&t2, &a2).unwrap();
        assert_eq!(deltas.len(), 2);
    }

    #[test]
    fn exchange_template() {
        let t = builtin_template(TemplateKind::Exchange { weight: 2 }).unwrap();
        assert_eq!(t.plus.strands(), 4);
        let a = BraidingAssignment::new()
            .with("P", w(3, &[(1, 2), (2, 1)]))
            .with("Q", w(3, &[(2, -3)]));
        let (plus, minus) = t.instantiate(&a).unwrap();
        assert_eq!(plus, w(4, &[(1, 2), (2, 1), (3, 1), (2, -3), (3, -1)]));
        assert_eq!(minus, w(4, &[(1, 2), (2, 1), (3, -1), (2, -3), (3, 1)]));
        assert!(per_component_beta_delta(&t, &a)
            .unwrap()
            .iter()
            .all(|d| !d.changed()));
    }

    #[test]
    fn cabled_crossings_move_whole_cables() {
        let sk = BlockSkeleton::new(vec![2, 3], vec![crossing(1, Sign::Positive)]).unwrap();
        let word = instantiate(&sk, &BraidingAssignment::new()).unwrap();
        assert_eq!(word.len(), 6);
        assert!(word.letters().iter().all(|l| l.sign() == Sign::Positive));
        // the 3-cable ends up on the left, the 2-cable on the right
        assert_eq!(word.underlying_permutation().images(), &[3, 4, 0, 1, 2]);
    }

    #[test]
    fn skeleton_validation() {
        assert!(BlockSkeleton::new(vec![1, 1], vec![block("P", 1, 1)]).is_err());
        assert!(BlockSkeleton::new(vec![1, 1], vec![block("P", 1, 3)]).is_err());
        assert!(BlockSkeleton::new(vec![1, 1], vec![crossing(2, Sign::Positive)]).is_err());
        assert!(BlockSkeleton::new(vec![1, 1], vec![block("P", 1, 2), block("P", 1, 2)]).is_err());
        assert!(BlockSkeleton::new(vec![2], vec![block("P", 1, 1)]).is_ok());
    }

    #[test]
    fn flype_link_obstruction() {
        let t = builtin_template(TemplateKind::flype(Sign::Negative)).unwrap();
        let deltas = per_component_beta_delta(&t, &prq(3, 4, -5)).unwrap();
        assert_eq!(
            deltas,
            vec![
                BetaDelta {
                    component: "L1".into(),
                    beta_plus: -1,
                    beta_minus: -3
                },
                BetaDelta {
                    component: "L2".into(),
                    beta_plus: -3,
                    beta_minus: -1
                },
            ]
        );
        let knot = per_component_beta_delta(&t, &prq(5, 6, 8)).unwrap();
        assert_eq!(
            knot,
            vec![BetaDelta {
                component: "L1".into(),
                beta_plus: 15,
                beta_minus: 15
            }]
        );
    }

    #[test]
    fn correspondence_is_consistent_for_small_flypes() {
        for sign in [Sign::Positive, Sign::Negative] {
            let t = builtin_template(TemplateKind::flype(sign)).unwrap();
            for p in -3..=3 {
                for r in -3..=3 {
                    for q in -3..=3 {
                        let m = component_correspondence(&t, &prq(p, r, q))
                            .unwrap_or_else(|e| panic!("{sign} ({p},{r},{q}): {e}"));
                        let mut plus: Vec<_> = m.iter().map(|c| c.plus_index).collect();
                        let mut minus: Vec<_> = m.iter().map(|c| c.minus_index).collect();
                        plus.sort();
                        minus.sort();
                        plus.dedup();
                        minus.dedup();
                        assert_eq!(plus.len(), m.len());
                        assert_eq!(minus.len(), m.len());
                    }
                }
            }
        }
    }

    #[test]
    fn template_file_parses_words_at_block_width() {
        let text = r#"{"kind":"flype","sign":-1,"w":1,"w_prime":1,"k":1,"k_prime":1,
                       "assignment":{"P":"s1^3","R":"s1^4","Q":"s1^-5"}}"#;
        let file: TemplateFile = serde_json::from_str(text).unwrap();
        let (t, a) = file.resolve().unwrap();
        let (plus, _) = t.instantiate(&a).unwrap();
        assert_eq!(plus.to_notation(), "s1^3 s2^4 s1^-5 s2^-1");
        let identity = TemplateFile {
            kind: TemplateKind::Exchange { weight: 1 },
            assignment: [
                ("P".to_string(), "".to_string()),
                ("Q".to_string(), "".to_string()),
            ]
            .into_iter()
            .collect(),
        };
        let (t, a) = identity.resolve().unwrap();
        assert!(per_component_beta_delta(&t, &a)
            .unwrap()
            .iter()
            .all(|d| !d.changed()));
    }
}
