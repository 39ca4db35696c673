//! Certification of the flype family
//! `TX₊ = σ1^{2p+1} σ2^{2q} σ1^{2r} σ2⁻¹`, `TX₋ = σ1^{2p+1} σ2⁻¹ σ1^{2r} σ2^{2q}`
//! as pairs of transverse closed 3-braids with equal topological type and
//! Bennequin number that are not transversally isotopic.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::b3::{classify_closure, conjugate_in_b3, kolee_both_signs, ClosureClass};
use crate::closure::alexander_polynomial;
use crate::template::{
    builtin_template, per_component_beta_delta, BetaDelta, BraidingAssignment, TemplateKind,
};
use crate::word::{BraidWord, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub p: i64,
    pub q: i64,
    pub r: i64,
}

impl FamilyParams {
    pub fn new(p: i64, q: i64, r: i64) -> Self {
        FamilyParams { p, q, r }
    }

    /// Violated conditions among `p, q, r > 1`, `p + 1 ≠ q`, `q ≠ r`.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (name, v) in [("p", self.p), ("q", self.q), ("r", self.r)] {
            if v <= 1 {
                out.push(format!("conditions: {name} ≤ 1"));
            }
        }
        if self.p + 1 == self.q {
            out.push("conditions: p + 1 = q".to_string());
        }
        if self.q == self.r {
            out.push("conditions: q = r".to_string());
        }
        out
    }

    pub fn is_admissible(&self) -> bool {
        self.violations().is_empty()
    }

    /// `2p + 2q + 2r − 3`
    pub fn expected_beta(&self) -> i64 {
        2 * (self.p + self.q + self.r) - 3
    }

    /// Exponents `(u, v, w)` of `σ1^u σ2^v σ1^w σ2^ε`.
    pub fn exponents(&self) -> (i64, i64, i64) {
        (2 * self.p + 1, 2 * self.q, 2 * self.r)
    }
}

pub fn family_words(params: FamilyParams) -> (BraidWord, BraidWord) {
    let (u, v, w) = params.exponents();
    let plus = BraidWord::from_powers(3, &[(1, u), (2, v), (1, w), (2, -1)]).expect("3 strands");
    let minus = BraidWord::from_powers(3, &[(1, u), (2, -1), (1, w), (2, v)]).expect("3 strands");
    (plus, minus)
}

/// Block assignment that realizes the family pair on the negative flype.
pub fn family_assignment(params: FamilyParams) -> BraidingAssignment {
    let (u, v, w) = params.exponents();
    let b2 = |k| BraidWord::from_powers(2, &[(1, k)]).expect("2 strands");
    BraidingAssignment::new()
        .with("P", b2(u))
        .with("R", b2(v))
        .with("Q", b2(w))
}

/// Assignment `P ← σ1³, R ← σ1⁴, Q ← σ1⁻⁵` whose closure is a two-component
/// link on which the negative flype exchanges the Bennequin numbers of the
/// components.
pub fn obstruction_assignment() -> BraidingAssignment {
    let b2 = |k| BraidWord::from_powers(2, &[(1, k)]).expect("2 strands");
    BraidingAssignment::new()
        .with("P", b2(3))
        .with("R", b2(4))
        .with("Q", b2(-5))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCheck {
    pub assignment: BTreeMap<String, BraidWord>,
    pub component_table: Vec<BetaDelta>,
    pub swap_detected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub conditions_ok: bool,
    pub beta_plus: i64,
    pub beta_minus: i64,
    pub beta_formula_ok: bool,
    pub alexander_equal: bool,
    pub conjugacy_distinct: bool,
    pub not_unknot: bool,
    pub not_torus: bool,
    pub kolee_single_sign: bool,
    pub obstruction: ObstructionCheck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum Verdict {
    #[serde(rename = "CERTIFIED_NOT_TRANSVERSALLY_SIMPLE")]
    Certified,
    #[serde(rename = "FAILED")]
    Failed { reasons: Vec<String> },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub params: FamilyParams,
    pub tx_plus: BraidWord,
    pub tx_minus: BraidWord,
    pub checks: Checks,
    pub verdict: Verdict,
}

fn obstruction() -> ObstructionCheck {
    let assignment = obstruction_assignment();
    let t = builtin_template(TemplateKind::flype(Sign::Negative)).expect("weight-one flype");
    let component_table =
        per_component_beta_delta(&t, &assignment).expect("assignment fits the template");
    ObstructionCheck {
        assignment: assignment
            .0
            .iter()
            .map(|(k, v)| (k.0.clone(), v.clone()))
            .collect(),
        swap_detected: component_table.iter().any(BetaDelta::changed),
        component_table,
    }
}

/// Runs every check; failures are collected, never short-circuited.
pub fn certify(params: FamilyParams) -> CertificationReport {
    let mut reasons = params.violations();
    let conditions_ok = reasons.is_empty();
    let (plus, minus) = family_words(params);

    let (beta_plus, beta_minus) = (plus.bennequin(), minus.bennequin());
    let expected = params.expected_beta();
    let beta_formula_ok = beta_plus == expected && beta_minus == expected;
    if !beta_formula_ok {
        reasons.push(format!(
            "beta: plus {beta_plus}, minus {beta_minus}, formula {expected}"
        ));
    }

    let alexander_equal = alexander_polynomial(&plus) == alexander_polynomial(&minus);
    if !alexander_equal {
        reasons.push("alexander: polynomials differ".to_string());
    }

    let conjugacy_distinct = !conjugate_in_b3(&plus, &minus).expect("3 strands");
    if !conjugacy_distinct {
        reasons.push("conjugacy: the two braids are conjugate in B3".to_string());
    }

    let classes = [&plus, &minus].map(|w| classify_closure(w).expect("3 strands"));
    let not_unknot = classes
        .iter()
        .all(|c| !matches!(c, ClosureClass::UnknotClass { .. }));
    let not_torus = classes
        .iter()
        .all(|c| !matches!(c, ClosureClass::TorusKnot2k { .. }));
    for (name, c) in ["TX+", "TX-"].iter().zip(&classes) {
        if *c != ClosureClass::GenericUnique {
            reasons.push(format!("classification: {name} is {c}"));
        }
    }

    let (u, v, w) = params.exponents();
    let kolee_single_sign = !kolee_both_signs(u, v, w, Sign::Negative);
    if !kolee_single_sign {
        reasons.push("kolee: the braid admits flypes of both signs".to_string());
    }

    let obstruction = obstruction();
    if !obstruction.swap_detected {
        reasons.push("obstruction: no component changes beta".to_string());
    }

    let verdict = if reasons.is_empty() {
        Verdict::Certified
    } else {
        Verdict::Failed { reasons }
    };
    CertificationReport {
        params,
        tx_plus: plus,
        tx_minus: minus,
        checks: Checks {
            conditions_ok,
            beta_plus,
            beta_minus,
            beta_formula_ok,
            alexander_equal,
            conjugacy_distinct,
            not_unknot,
            not_torus,
            kolee_single_sign,
            obstruction,
        },
        verdict,
    }
}

/// Admissible triples with `2 ≤ p ≤ p_max` etc., in lexicographic order.
pub fn admissible_triples(p_max: i64, q_max: i64, r_max: i64) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for p in 2..=p_max {
        for q in 2..=q_max {
            for r in 2..=r_max {
                let fp = FamilyParams::new(p, q, r);
                if fp.is_admissible() {
                    out.push(fp);
                }
            }
        }
    }
    out
}

/// Certifies every admissible triple in range. Reports come back in
/// lexicographic order of `(p, q, r)`.
pub fn sweep(p_max: i64, q_max: i64, r_max: i64) -> Vec<CertificationReport> {
    admissible_triples(p_max, q_max, r_max)
        .into_par_iter()
        .map(certify)
        .collect()
}
