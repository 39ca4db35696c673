use braidcert::b3::{conjugate_in_b3, normal_form, quotient_image};
use braidcert::burau::reduced_burau_poly;
use braidcert::closure::{alexander_polynomial, components, linking_matrix};
use braidcert::markov::{destabilize, exchange_move, exchange_splits, stabilize};
use braidcert::oracle::ModularClass;
use braidcert::template::{
    builtin_template, component_correspondence, per_component_beta_delta, TemplateKind,
};
use braidcert::{BraidWord, BraidingAssignment, Letter, Sign};
use proptest::prelude::*;

fn letters(max_index: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((1..=max_index, any::<bool>()), 0..=max_len).prop_map(|ls| {
        ls.into_iter()
            .map(|(i, s)| if s { Letter::pos(i) } else { Letter::neg(i) })
            .collect()
    })
}

fn word_on(n: usize, max_len: usize) -> BoxedStrategy<BraidWord> {
    if n == 1 {
        return Just(BraidWord::identity(1)).boxed();
    }
    letters(n - 1, max_len)
        .prop_map(move |ls| BraidWord::new(n, ls).unwrap())
        .boxed()
}

fn any_word() -> impl Strategy<Value = BraidWord> {
    (1usize..=6).prop_flat_map(|n| word_on(n, 30))
}

fn word_pair() -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (1usize..=6).prop_flat_map(|n| (word_on(n, 20), word_on(n, 12)))
}

fn betas(w: &BraidWord) -> Vec<i64> {
    let mut b: Vec<i64> = components(w).parts.iter().map(|c| c.beta).collect();
    b.sort();
    b
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Positive), Just(Sign::Negative)]
}

proptest! {
    #[test]
    fn notation_round_trips(w in any_word()) {
        let back = BraidWord::parse_with_strands(&w.to_notation(), Some(w.strands())).unwrap();
        prop_assert_eq!(&back, &w);
        let json = serde_json::to_string(&w).unwrap();
        let again: BraidWord = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(again.letters(), w.letters());
    }

    #[test]
    fn free_reduction_is_idempotent(w in any_word()) {
        let r = w.free_reduce();
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert_eq!(r.exponent_sum(), w.exponent_sum());
        prop_assert_eq!(r.underlying_permutation(), w.underlying_permutation());
        prop_assert!(r.letters().windows(2).all(|p| !p[0].cancels(p[1])));
    }

    #[test]
    fn permutations_compose((a, b) in word_pair()) {
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(
            ab.underlying_permutation(),
            a.underlying_permutation().then(&b.underlying_permutation())
        );
        prop_assert_eq!(ab.exponent_sum(), a.exponent_sum() + b.exponent_sum());
    }

    #[test]
    fn inverse_cancels(w in any_word()) {
        prop_assert!(w.concat(&w.inverse()).unwrap().free_reduce().is_empty());
    }

    #[test]
    fn bennequin_decomposes(w in any_word()) {
        let parts = components(&w);
        prop_assert_eq!(w.bennequin(), parts.total_beta() + 2 * linking_matrix(&w).upper_sum());
        let members: usize = parts.parts.iter().map(|c| c.strands).sum();
        prop_assert_eq!(members, w.strands());
    }

    #[test]
    fn conjugation_preserves_closure_data((w, g) in word_pair()) {
        let c = w.conjugate(&g).unwrap();
        prop_assert_eq!(c.exponent_sum(), w.exponent_sum());
        prop_assert_eq!(c.bennequin(), w.bennequin());
        prop_assert_eq!(betas(&c), betas(&w));
        prop_assert_eq!(alexander_polynomial(&c), alexander_polynomial(&w));
    }

    #[test]
    fn burau_is_multiplicative((a, b) in (2usize..=4).prop_flat_map(|n| (word_on(n, 8), word_on(n, 8)))) {
        let ab = a.concat(&b).unwrap();
        let m = |w: &BraidWord| reduced_burau_poly::<num_bigint::BigInt>(w);
        prop_assert_eq!(m(&ab), &m(&a) * &m(&b));
    }

    #[test]
    fn quotient_is_a_homomorphism((a, b) in (word_on(3, 20), word_on(3, 20))) {
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(
            quotient_image(&ab).unwrap(),
            quotient_image(&a).unwrap().product(&quotient_image(&b).unwrap())
        );
    }

    #[test]
    fn normal_form_is_a_conjugacy_invariant((w, g) in (word_on(3, 20), word_on(3, 12))) {
        let c = w.conjugate(&g).unwrap();
        prop_assert_eq!(normal_form(&c).unwrap(), normal_form(&w).unwrap());
        prop_assert!(conjugate_in_b3(&w, &c).unwrap());
        prop_assert_eq!(ModularClass::of_braid(&c), ModularClass::of_braid(&w));
        let delta2: BraidWord = "s1 s2 s1 s1 s2 s1".parse().unwrap();
        let shifted = normal_form(&delta2.concat(&w).unwrap()).unwrap();
        let base = normal_form(&w).unwrap();
        prop_assert_eq!(shifted.exponent_sum, base.exponent_sum + 6);
        prop_assert_eq!(shifted.class, base.class);
    }

    #[test]
    fn destabilization_undoes_stabilization(w in any_word(), s in sign()) {
        let up = stabilize(&w, s);
        prop_assert_eq!(up.strands(), w.strands() + 1);
        prop_assert_eq!(up.bennequin() - w.bennequin(), if s == Sign::Positive { 0 } else { -2 });
        prop_assert_eq!(destabilize(&up, s), Ok(w.free_reduce()));
        prop_assert!(destabilize(&up, s.flip()).is_err());
    }

    #[test]
    fn exchange_preserves_closure_data(
        n in 3usize..=5,
        p in letters(3, 8),
        q in letters(3, 8),
        s in sign(),
    ) {
        let top = n - 1;
        let fit = |ls: &[Letter]| -> Vec<Letter> {
            ls.iter().map(|l| Letter::new(1 + (l.index() - 1) % (top - 1), l.sign()).unwrap()).collect()
        };
        let mut ls = fit(&p);
        let p_len = ls.len();
        ls.push(Letter::new(top, s).unwrap());
        let qs = fit(&q);
        let q_len = qs.len();
        ls.extend(qs);
        ls.push(Letter::new(top, s.flip()).unwrap());
        let w = BraidWord::new(n, ls).unwrap();
        let split = braidcert::markov::ExchangeSplit { p_len, q_len };
        prop_assert_eq!(exchange_splits(&w), vec![split]);
        let x = exchange_move(&w, split).unwrap();
        prop_assert_eq!(x.exponent_sum(), w.exponent_sum());
        prop_assert_eq!(x.bennequin(), w.bennequin());
        prop_assert_eq!(betas(&x), betas(&w));
        prop_assert_eq!(alexander_polynomial(&x), alexander_polynomial(&w));
        prop_assert_eq!(exchange_move(&x, split).unwrap(), w);
    }

    #[test]
    fn flype_correspondence_is_a_bijection(
        p in -6i64..=6, r in -6i64..=6, q in -6i64..=6, s in sign(),
    ) {
        let t = builtin_template(TemplateKind::flype(s)).unwrap();
        let b2 = |k| BraidWord::from_powers(2, &[(1, k)]).unwrap();
        let a = BraidingAssignment::new().with("P", b2(p)).with("R", b2(r)).with("Q", b2(q));
        let m = component_correspondence(&t, &a).unwrap();
        let (plus, minus) = t.instantiate(&a).unwrap();
        prop_assert_eq!(m.len(), components(&plus).len());
        prop_assert_eq!(m.len(), components(&minus).len());
        let deltas = per_component_beta_delta(&t, &a).unwrap();
        let sum_plus: i64 = deltas.iter().map(|d| d.beta_plus).sum();
        let sum_minus: i64 = deltas.iter().map(|d| d.beta_minus).sum();
        prop_assert_eq!(sum_plus, components(&plus).total_beta());
        prop_assert_eq!(sum_minus, components(&minus).total_beta());
        // a positive flype is a transverse isotopy
        if s == Sign::Positive {
            prop_assert!(deltas.iter().all(|d| !d.changed()));
        }
    }

    #[test]
    fn destabilization_template_keeps_component_betas(
        weight in 1usize..=3,
        body in letters(3, 12),
    ) {
        let t = builtin_template(TemplateKind::Destabilize { sign: Sign::Positive, weight }).unwrap();
        let fit: Vec<Letter> = body
            .iter()
            .map(|l| Letter::new(1 + (l.index() - 1) % weight.max(1), l.sign()).unwrap())
            .collect();
        let a = BraidingAssignment::new().with("P", BraidWord::new(weight + 1, fit).unwrap());
        let deltas = per_component_beta_delta(&t, &a).unwrap();
        prop_assert!(deltas.iter().all(|d| !d.changed()));
    }
}
