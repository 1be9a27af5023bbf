#![allow(dead_code)]

use proptest::prelude::*;

use syllogic::diagram::{Diagram, Token};
use syllogic::rll::RllFormula;
use syllogic::syll::{SyllProof, SyllRule};
use syllogic::syllogistics::{CategoricalProp, Quantity, SignedTerm};

fn var() -> impl Strategy<Value = Token> {
    prop::sample::select(vec!["A", "B", "C", "S", "M", "P", "X1", "term_2"]).prop_map(Token::var)
}

fn arrow() -> impl Strategy<Value = Token> {
    prop_oneof![Just(Token::Right), Just(Token::Left)]
}

/// Alternating token sequences of up to five segments with up to three
/// bullets each; not necessarily well formed.
pub fn diagram() -> impl Strategy<Value = Diagram> {
    let segment =
        (arrow(), prop::collection::vec(arrow(), 0..=3), var()).prop_map(|(first, more, end)| {
            let mut v = vec![first];
            for a in more {
                v.push(Token::Bullet);
                v.push(a);
            }
            v.push(end);
            v
        });
    (var(), prop::collection::vec(segment, 0..=5)).prop_map(|(start, segs)| {
        let mut tokens = vec![start];
        tokens.extend(segs.into_iter().flatten());
        Diagram::from_tokens(tokens).expect("alternation holds by construction")
    })
}

/// Every categorical proposition over two variables, in both orders, with
/// any subject or predicate complemented.
pub fn categorical_props(a: &str, b: &str) -> Vec<CategoricalProp> {
    let mut out = Vec::new();
    for (x, y) in [(a, b), (b, a)] {
        for q in [Quantity::Universal, Quantity::Particular] {
            for sc in [false, true] {
                for pc in [false, true] {
                    let t = |n: &str, c: bool| {
                        if c {
                            SignedTerm::complement(n)
                        } else {
                            SignedTerm::plain(n)
                        }
                    };
                    out.push(CategoricalProp::new(q, t(x, sc), t(y, pc)));
                }
            }
        }
    }
    out
}

pub fn rll_formula() -> impl Strategy<Value = RllFormula> {
    let leaf = prop_oneof![
        4 => prop::sample::select(vec!["A", "B", "C"]).prop_map(RllFormula::atom),
        1 => Just(RllFormula::Bottom),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| RllFormula::tensor(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| RllFormula::lollipop(a, b)),
        ]
    })
}

/// Bullets at each node equal those of its children, plus one for an
/// existential axiom leaf, minus two for a star step.
pub fn bullets_accounted(p: &SyllProof) -> bool {
    let below: usize = p.children.iter().map(|c| c.node.bullet_count()).sum();
    let ok = match &p.rule {
        SyllRule::Premise(_) => true,
        SyllRule::ExistAxiom(_) => p.node.bullet_count() == 1,
        SyllRule::IdentAxiom(_) => p.node.bullet_count() == 0,
        SyllRule::Star { .. } => p.node.bullet_count() + 2 == below,
        _ => p.node.bullet_count() == below,
    };
    ok && p.children.iter().all(bullets_accounted)
}
