mod common;

use proptest::prelude::*;
use proptest::strategy::ValueTree;

use common::{bullets_accounted, categorical_props, diagram, rll_formula};
use syllogic::diagram::Diagram;
use syllogic::nets::{build_net, check_cmll_proof, translate_proof, translate_sequent};
use syllogic::rll::{check_rll_proof, prove_rll, RllFormula, RllProver, RllSequent};
use syllogic::syll::{check_proof, prove, reject_precheck, AxiomBudget, SyllSequent, SystemLevel};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn diagram_text_round_trips(d in diagram()) {
        let text = d.to_string();
        prop_assert_eq!(text.parse::<Diagram>().unwrap(), d);
    }

    #[test]
    fn reversal_is_an_involution(d in diagram()) {
        prop_assert_eq!(d.reversal().reversal(), d.clone());
        prop_assert_eq!(d.reversal().bullet_count(), d.bullet_count());
        prop_assert_eq!(d.reversal().is_well_formed(), d.is_well_formed());
    }

    #[test]
    fn complemented_occurrences_survive_reversal(d in diagram()) {
        let r = d.reversal();
        for v in d.vars() {
            prop_assert_eq!(d.complemented_occurrences(v), r.complemented_occurrences(v));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rll_proofs_replay_and_translate(
        ctx in prop::collection::vec(rll_formula(), 0..3),
        goal in rll_formula(),
    ) {
        let seq = RllSequent::new(ctx, goal);
        if let Some(p) = prove_rll(&seq) {
            prop_assert!(check_rll_proof(&p));
            prop_assert_eq!(&p.sequent, &seq);
            let c = translate_proof(&p).unwrap();
            prop_assert!(check_cmll_proof(&c));
            let net = build_net(&c).unwrap();
            prop_assert_eq!(&net.conclusions, &translate_sequent(&seq));
            prop_assert_eq!(net.links.len() * 2, net.atoms.len());
            for &(a, b) in &net.links {
                prop_assert_eq!(&net.atoms[a].name, &net.atoms[b].name);
                prop_assert_ne!(net.atoms[a].negated, net.atoms[b].negated);
            }
        }
    }

    #[test]
    fn triple_complement(a in rll_formula()) {
        let mut p = RllProver::new();
        let once = a.clone().complement();
        let thrice = a.complement().complement().complement();
        prop_assert!(p.provable(&RllSequent::new(vec![once.clone()], thrice.clone())));
        prop_assert!(p.provable(&RllSequent::new(vec![thrice], once)));
    }
}

/// Contraposition over every pair of categorical formulas on two terms.
#[test]
fn contraposition_on_categorical_instances() {
    let props = categorical_props("A", "B");
    let mut p = RllProver::new();
    let mut provable = 0;
    for x in &props {
        for y in &props {
            let (f, g) = (x.to_formula(), y.to_formula());
            if p.provable(&RllSequent::new(vec![f.clone()], g.clone())) {
                provable += 1;
                let back = RllSequent::new(vec![g.complement()], f.complement());
                assert!(p.provable(&back), "{x} |- {y} but not its contrapositive");
            }
        }
    }
    assert!(provable >= props.len());
}

/// Diagram sequents assembled from categorical propositions: every proof
/// replays and keeps bullet accounting, and the precheck never rejects a
/// provable one.
#[test]
fn diagram_search_soundness() {
    let p1 = categorical_props("A", "B");
    let p2 = categorical_props("B", "C");
    let goals: Vec<Diagram> = categorical_props("A", "C")
        .iter()
        .map(|c| c.to_diagram())
        .collect();
    for sys in [
        SystemLevel::syll(),
        SystemLevel::syll_plus(),
        SystemLevel::syll_plus_star(),
    ] {
        for x in &p1 {
            for y in &p2 {
                for g in &goals {
                    let seq = SyllSequent::new(vec![x.to_diagram(), y.to_diagram()], g.clone());
                    if !seq.is_well_formed(&sys) {
                        continue;
                    }
                    let budget = AxiomBudget::zero();
                    if let Some(p) = prove(&seq, &sys, budget) {
                        assert!(check_proof(&p, &seq, &sys), "{seq} in {sys}");
                        assert!(bullets_accounted(&p), "{seq} in {sys}");
                        assert!(reject_precheck(&seq, &sys, budget).is_none(), "{seq}");
                    }
                }
            }
        }
    }
}

#[test]
fn formula_round_trip_samples() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for _ in 0..500 {
        let f = rll_formula().new_tree(&mut runner).unwrap().current();
        assert_eq!(f.to_string().parse::<RllFormula>().unwrap(), f);
    }
}
