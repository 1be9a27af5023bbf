use crate::rll::RllSequent;
use crate::syll::{SyllSequent, SystemLevel};

use super::prop::Syllogism;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawMode {
    /// Propositions with uncomplemented subjects.
    Traditional,
    /// Their analogues with a complemented subject.
    New,
}

/// A law of the square of opposition. Laws whose conclusion is a
/// categorical proposition also have a diagrammatic form.
#[derive(Debug, Clone)]
pub struct SquareLaw {
    pub name: String,
    pub rll: RllSequent,
    pub diagram: Option<SyllSequent>,
    pub system: SystemLevel,
}

/// A proof obligation for both calculi. `rll` is `None` when the
/// diagrammatic law has no intuitionistic counterpart (the existential
/// import axiom).
#[derive(Debug, Clone)]
pub struct Obligation {
    pub name: String,
    pub syll: SyllSequent,
    pub rll: Option<RllSequent>,
}

/// A reduction of one syllogism to another, with the sequents that witness
/// it.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub name: String,
    pub source: Syllogism,
    pub rule: String,
    pub target: Syllogism,
    pub obligations: Vec<Obligation>,
}

fn rll(s: &str) -> RllSequent {
    s.parse().expect("catalog sequent")
}

fn syll(s: &str) -> SyllSequent {
    s.parse().expect("catalog sequent")
}

fn law(name: &str, f: &str, d: Option<&str>, system: &SystemLevel) -> SquareLaw {
    SquareLaw {
        name: name.to_string(),
        rll: rll(f),
        diagram: d.map(syll),
        system: system.clone(),
    }
}

/// Contradiction, subalternation (with contrariety and subcontrariety) and
/// the complement entailments, for the chosen kind of proposition.
pub fn square_laws(mode: LawMode) -> Vec<SquareLaw> {
    let rows: [(&str, &str, Option<&str>); 8] = match mode {
        LawMode::Traditional => [
            (
                "contradiction A(A,B) / I(A,b)",
                "A -o B, A * B^ |- A * A^",
                Some("A -> B, A <- * -> * <- B |= A <- * -> * <- A"),
            ),
            (
                "contradiction A(A,b) / I(A,B)",
                "A -o B^, A * B |- A * A^",
                Some("A -> * <- B, A <- * -> B |= A <- * -> * <- A"),
            ),
            (
                "subalternation A(A,B) / I(A,B)",
                "A -o B, A * A |- A * B",
                Some("A -> B, A <- * -> A |= A <- * -> B"),
            ),
            (
                "subalternation A(A,b) / I(A,b)",
                "A -o B^, A * A |- A * B^",
                Some("A -> * <- B, A <- * -> A |= A <- * -> * <- B"),
            ),
            ("complement A(A,B) / I(A,b)", "A -o B |- (A * B^)^", None),
            ("complement I(A,B) / A(A,b)", "A * B |- (A -o B^)^", None),
            ("complement A(A,b) / I(A,B)", "A -o B^ |- (A * B)^", None),
            ("complement I(A,b) / A(A,B)", "A * B^ |- (A -o B)^", None),
        ],
        LawMode::New => [
            (
                "contradiction A(a,B) / I(a,b)",
                "A^ -o B, A^ * B^ |- B * B^",
                Some("A -> * -> B, A -> * <- * -> * <- B |= B <- * -> * <- B"),
            ),
            (
                "contradiction A(a,b) / I(a,B)",
                "A^ -o B^, A^ * B |- B * B^",
                Some("A -> * -> * <- B, A -> * <- * -> B |= B <- * -> * <- B"),
            ),
            (
                "subalternation A(a,B) / I(a,B)",
                "A^ -o B, A^ * A^ |- A^ * B",
                Some("A -> * -> B, A -> * <- * -> * <- A |= A -> * <- * -> B"),
            ),
            (
                "subalternation A(a,b) / I(a,b)",
                "A^ -o B^, A^ * A^ |- A^ * B^",
                Some("A -> * -> * <- B, A -> * <- * -> * <- A |= A -> * <- * -> * <- B"),
            ),
            ("complement A(a,B) / I(a,b)", "A^ -o B |- (A^ * B^)^", None),
            ("complement I(a,B) / A(a,b)", "A^ * B |- (A^ -o B^)^", None),
            ("complement A(a,b) / I(a,B)", "A^ -o B^ |- (A^ * B)^", None),
            ("complement I(a,b) / A(a,B)", "A^ * B^ |- (A^ -o B)^", None),
        ],
    };
    let system = match mode {
        LawMode::Traditional => SystemLevel::syll_plus(),
        LawMode::New => SystemLevel::syll_plus_star(),
    };
    rows.iter()
        .map(|(n, f, d)| law(n, f, *d, &system))
        .collect()
}

fn obligation(name: &str, d: &str, f: Option<&str>) -> Obligation {
    Obligation {
        name: name.to_string(),
        syll: syll(d),
        rll: f.map(rll),
    }
}

fn from_syllogism(name: &str, s: &Syllogism) -> Obligation {
    Obligation {
        name: name.to_string(),
        syll: s.syll_sequent(),
        rll: Some(s.rll_sequent()),
    }
}

/// The identity laws and the ten valid two-term syllogisms, all to be
/// proved in SYLL++.
pub fn two_term_laws() -> Vec<Obligation> {
    [
        ("identity A(A,A)", "|= A -> A", Some("|- A -o A")),
        ("identity I(A,A)", "|= A <- * -> A", None),
        (
            "repetition A(A,B)",
            "A -> B |= A -> B",
            Some("A -o B |- A -o B"),
        ),
        (
            "repetition A(A,b)",
            "A -> * <- B |= A -> * <- B",
            Some("A -o B^ |- A -o B^"),
        ),
        (
            "repetition I(A,B)",
            "A <- * -> B |= A <- * -> B",
            Some("A * B |- A * B"),
        ),
        (
            "repetition I(A,b)",
            "A <- * -> * <- B |= A <- * -> * <- B",
            Some("A * B^ |- A * B^"),
        ),
        (
            "subalternation A(A,B)",
            "A -> B, A <- * -> A |= A <- * -> B",
            Some("A -o B, A * A |- A * B"),
        ),
        (
            "subalternation A(A,b)",
            "A -> * <- B, A <- * -> A |= A <- * -> * <- B",
            Some("A -o B^, A * A |- A * B^"),
        ),
        (
            "simple conversion A(A,b)",
            "A -> * <- B |= B -> * <- A",
            Some("A -o B^ |- B -o A^"),
        ),
        (
            "simple conversion I(A,B)",
            "A <- * -> B |= B <- * -> A",
            Some("A * B |- B * A"),
        ),
        (
            "conversion per accidens A(B,A)",
            "B -> A, B <- * -> B |= A <- * -> B",
            Some("B -o A, B * B |- A * B"),
        ),
        (
            "conversion per accidens A(B,a)",
            "B -> * <- A, A <- * -> A |= A <- * -> * <- B",
            Some("B -o A^, A * A |- A * B^"),
        ),
    ]
    .iter()
    .map(|(n, d, f)| obligation(n, d, *f))
    .collect()
}

fn syl(s: &str) -> Syllogism {
    s.parse().expect("catalog syllogism")
}

/// The laws of identity, the two-term syllogisms and three worked
/// reductions. Every obligation is stated for SYLL++.
pub fn reduction_catalog() -> (Vec<Obligation>, Vec<Reduction>) {
    let contradiction = Reduction {
        name: "second figure to first by contradiction".into(),
        source: syl("A(P,m) ; I(M,S) / I(S,p)"),
        rule: "contradiction and simple conversion".into(),
        target: syl("A(M,p) ; A(S,M) / A(S,p)"),
        obligations: vec![obligation(
            "contradictory of a premise",
            "S -> P, P -> * <- M |= M -> * <- S",
            Some("S -o P, P -o M^ |- M -o S^"),
        )],
    };
    let ex_source = syl("A(P,M) ; A(M,s) ; I(S,S) / I(S,p)");
    let ex_target = syl("A(M,p) ; A(S,M) ; I(S,S) / I(S,p)");
    let exchange = Reduction {
        name: "fourth figure to first by exchange".into(),
        obligations: vec![
            from_syllogism("source", &ex_source),
            from_syllogism("target", &ex_target),
        ],
        source: ex_source,
        rule: "exchange of premises and renaming".into(),
        target: ex_target,
    };
    let subalternation = Reduction {
        name: "strengthened to plain by subalternation".into(),
        source: syl("A(M,P) ; A(S,M) ; I(S,S) / I(S,P)"),
        rule: "subalternation".into(),
        target: syl("A(M,P) ; A(S,M) / A(S,P)"),
        obligations: vec![obligation(
            "import by axiom",
            "M -> P, S -> M |= S <- * -> P",
            Some("M -o P, S -o M, S * S |- S * P"),
        )],
    };
    (
        two_term_laws(),
        vec![contradiction, exchange, subalternation],
    )
}

/// The system in which catalog obligations are proved.
pub fn catalog_system() -> SystemLevel {
    SystemLevel::syll_plus_plus()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rll::prove_rll;
    use crate::syll::{check_proof, prove, AxiomBudget};

    #[test]
    fn square_laws_hold_in_both_calculi() {
        for mode in [LawMode::Traditional, LawMode::New] {
            for l in square_laws(mode) {
                assert!(prove_rll(&l.rll).is_some(), "{}", l.name);
                if let Some(d) = &l.diagram {
                    let p = prove(d, &l.system, AxiomBudget::default());
                    assert!(
                        p.is_some_and(|p| check_proof(&p, d, &l.system)),
                        "{}",
                        l.name
                    );
                }
            }
        }
    }

    #[test]
    fn catalog_obligations_hold() {
        let (laws, reductions) = reduction_catalog();
        assert_eq!((laws.len(), reductions.len()), (12, 3));
        let sys = catalog_system();
        let all = laws
            .iter()
            .chain(reductions.iter().flat_map(|r| &r.obligations));
        for o in all {
            let p = prove(&o.syll, &sys, AxiomBudget::default());
            assert!(
                p.is_some_and(|p| check_proof(&p, &o.syll, &sys)),
                "{}",
                o.name
            );
            if let Some(f) = &o.rll {
                assert!(prove_rll(f).is_some(), "{}", o.name);
            }
        }
    }
}
