use std::collections::BTreeSet;
use std::fmt;

use crate::rll::prove_rll;
use crate::syll::{prove, reject_precheck, AxiomBudget, SystemLevel};

use super::prop::{CategoricalProp, Quantity, SignedTerm, Syllogism};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Subjects are never complemented.
    Traditional,
    /// Any term may be complemented.
    DeMorgan,
}

impl Kind {
    /// The diagrammatic system in which this kind of syllogism is proved.
    pub fn system(self) -> SystemLevel {
        match self {
            Kind::Traditional => SystemLevel::syll_plus(),
            Kind::DeMorgan => SystemLevel::syll_plus_star(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Traditional => "traditional",
            Kind::DeMorgan => "demorgan",
        }
    }
}

/// The valid syllogisms of one kind, split into plain and strengthened.
#[derive(Debug, Clone)]
pub struct ValidityTable {
    pub kind: Kind,
    pub plain: Vec<Syllogism>,
    pub strengthened: Vec<Syllogism>,
}

const TRADITIONAL_PLAIN: [&str; 15] = [
    "A(M,P) ; A(S,M) / A(S,P)",
    "A(M,p) ; A(S,M) / A(S,p)",
    "A(M,P) ; I(S,M) / I(S,P)",
    "A(M,p) ; I(S,M) / I(S,p)",
    "A(P,m) ; A(S,M) / A(S,p)",
    "A(P,M) ; A(S,m) / A(S,p)",
    "A(P,m) ; I(S,M) / I(S,p)",
    "A(P,M) ; I(S,m) / I(S,p)",
    "I(M,P) ; A(M,S) / I(S,P)",
    "A(M,P) ; I(M,S) / I(S,P)",
    "I(M,p) ; A(M,S) / I(S,p)",
    "A(M,p) ; I(M,S) / I(S,p)",
    "A(P,M) ; A(M,s) / A(S,p)",
    "I(P,M) ; A(M,S) / I(S,P)",
    "A(P,m) ; I(M,S) / I(S,p)",
];

const TRADITIONAL_STRENGTHENED: [&str; 9] = [
    "A(M,P) ; A(S,M) ; I(S,S) / I(S,P)",
    "A(M,p) ; A(S,M) ; I(S,S) / I(S,p)",
    "A(P,M) ; A(S,m) ; I(S,S) / I(S,p)",
    "A(P,m) ; A(S,M) ; I(S,S) / I(S,p)",
    "A(M,P) ; A(M,S) ; I(M,M) / I(S,P)",
    "A(M,p) ; A(M,S) ; I(M,M) / I(S,p)",
    "A(P,M) ; A(M,s) ; I(S,S) / I(S,p)",
    "A(P,m) ; A(M,S) ; I(M,M) / I(S,p)",
    "A(P,M) ; A(M,S) ; I(P,P) / I(S,P)",
];

const DEMORGAN_PLAIN: [&str; 24] = [
    "A(M,P) ; A(S,M) / A(S,P)",
    "A(m,P) ; A(S,m) / A(S,P)",
    "A(M,p) ; A(S,M) / A(S,p)",
    "A(m,p) ; A(S,m) / A(S,p)",
    "A(M,P) ; A(s,M) / A(s,P)",
    "A(m,P) ; A(s,m) / A(s,P)",
    "A(M,p) ; A(s,M) / A(s,p)",
    "A(m,p) ; A(s,m) / A(s,p)",
    "A(M,P) ; I(S,M) / I(S,P)",
    "A(m,P) ; I(S,m) / I(S,P)",
    "A(M,p) ; I(S,M) / I(S,p)",
    "A(m,p) ; I(S,m) / I(S,p)",
    "A(M,P) ; I(s,M) / I(s,P)",
    "A(m,P) ; I(s,m) / I(s,P)",
    "A(M,p) ; I(s,M) / I(s,p)",
    "A(m,p) ; I(s,m) / I(s,p)",
    "I(M,P) ; A(M,S) / I(S,P)",
    "I(m,P) ; A(m,S) / I(S,P)",
    "I(M,P) ; A(M,s) / I(s,P)",
    "I(m,P) ; A(m,s) / I(s,P)",
    "I(M,p) ; A(M,S) / I(S,p)",
    "I(m,p) ; A(m,S) / I(S,p)",
    "I(M,p) ; A(M,s) / I(s,p)",
    "I(m,p) ; A(m,s) / I(s,p)",
];

const DEMORGAN_STRENGTHENED: [&str; 8] = [
    "A(M,P) ; A(S,M) ; I(S,S) / I(S,P)",
    "A(m,P) ; A(S,m) ; I(S,S) / I(S,P)",
    "A(M,p) ; A(S,M) ; I(S,S) / I(S,p)",
    "A(m,p) ; A(S,m) ; I(S,S) / I(S,p)",
    "A(M,P) ; A(s,M) ; I(s,s) / I(s,P)",
    "A(m,P) ; A(s,m) ; I(s,s) / I(s,P)",
    "A(M,p) ; A(s,M) ; I(s,s) / I(s,p)",
    "A(m,p) ; A(s,m) ; I(s,s) / I(s,p)",
];

fn parse_all(entries: &[&str]) -> Vec<Syllogism> {
    entries
        .iter()
        .map(|s| s.parse().expect("fixture entries are well formed"))
        .collect()
}

/// The known valid syllogisms of each kind, as fixture data.
pub fn validity_table(kind: Kind) -> ValidityTable {
    let (plain, strengthened): (&[&str], &[&str]) = match kind {
        Kind::Traditional => (&TRADITIONAL_PLAIN, &TRADITIONAL_STRENGTHENED),
        Kind::DeMorgan => (&DEMORGAN_PLAIN, &DEMORGAN_STRENGTHENED),
    };
    ValidityTable {
        kind,
        plain: parse_all(plain),
        strengthened: parse_all(strengthened),
    }
}

fn terms(name: &str, kind: Kind) -> Vec<SignedTerm> {
    let mut v = vec![SignedTerm::plain(name)];
    if kind == Kind::DeMorgan {
        v.push(SignedTerm::complement(name));
    }
    v
}

/// All propositions on the two variables in both orders. Traditional
/// subjects are uncomplemented.
fn props(a: &str, b: &str, kind: Kind) -> Vec<CategoricalProp> {
    let mut out = Vec::new();
    for (x, y) in [(a, b), (b, a)] {
        for quantity in [Quantity::Universal, Quantity::Particular] {
            for subject in terms(x, kind) {
                for predicate in [SignedTerm::plain(y), SignedTerm::complement(y)] {
                    out.push(CategoricalProp::new(quantity, subject.clone(), predicate));
                }
            }
        }
    }
    out
}

/// The candidate space: 256 traditional, 2048 De Morgan; strengthening
/// multiplies by the available imports (S, M, P, and their complements in
/// De Morgan mode). The order is deterministic.
pub fn enumerate_candidates(kind: Kind, strengthened: bool) -> Vec<Syllogism> {
    let p1s = props("M", "P", kind);
    let p2s = props("S", "M", kind);
    let conclusions: Vec<CategoricalProp> = props("S", "P", kind)
        .into_iter()
        .filter(|c| c.subject.var.as_str() == "S")
        .collect();
    let imports: Vec<Option<SignedTerm>> = if strengthened {
        ["S", "M", "P"]
            .iter()
            .flat_map(|v| terms(v, kind))
            .map(Some)
            .collect()
    } else {
        vec![None]
    };
    let mut out = Vec::new();
    for p1 in &p1s {
        for p2 in &p2s {
            for import in &imports {
                for c in &conclusions {
                    let s = Syllogism::new(p1.clone(), p2.clone(), import.clone(), c.clone())
                        .expect("candidate grid respects term placement");
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Verdicts of both calculi on one candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub syll_provable: bool,
    pub rll_provable: bool,
    /// Whether bullet accounting alone already rules the diagram sequent out.
    pub prechecked_out: bool,
}

impl Classification {
    pub fn agree(&self) -> bool {
        self.syll_provable == self.rll_provable
    }
}

/// Runs both provers. Any import is supplied as a premise, so the
/// diagrammatic search gets no extra axiom leaves.
pub fn classify(s: &Syllogism, system: &SystemLevel) -> Classification {
    let seq = s.syll_sequent();
    let budget = AxiomBudget::zero();
    Classification {
        syll_provable: prove(&seq, system, budget).is_some(),
        rll_provable: prove_rll(&s.rll_sequent()).is_some(),
        prechecked_out: reject_precheck(&seq, system, budget).is_some(),
    }
}

/// One line of an enumeration report.
#[derive(Debug, Clone)]
pub struct ReportRecord {
    pub syllogism: Syllogism,
    pub verdict: Classification,
}

impl fmt::Display for ReportRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "provable" } else { "unprovable" };
        write!(
            f,
            "{}\tfigure={}\tmood={}\tsyll={}\trll={}",
            self.syllogism,
            self.syllogism.figure(),
            self.syllogism.mood(),
            yn(self.verdict.syll_provable),
            yn(self.verdict.rll_provable)
        )
    }
}

/// Classifies every candidate of a space.
pub fn sweep(kind: Kind, strengthened: bool) -> Vec<ReportRecord> {
    let system = kind.system();
    enumerate_candidates(kind, strengthened)
        .into_iter()
        .map(|s| {
            let verdict = classify(&s, &system);
            ReportRecord {
                syllogism: s,
                verdict,
            }
        })
        .collect()
}

/// Candidates proved by both calculi.
pub fn provable_set(records: &[ReportRecord]) -> BTreeSet<Syllogism> {
    records
        .iter()
        .filter(|r| r.verdict.syll_provable && r.verdict.rll_provable)
        .map(|r| r.syllogism.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_counts() {
        let t = validity_table(Kind::Traditional);
        assert_eq!((t.plain.len(), t.strengthened.len()), (15, 9));
        let d = validity_table(Kind::DeMorgan);
        assert_eq!((d.plain.len(), d.strengthened.len()), (24, 8));
        for s in t.plain.iter().chain(&t.strengthened) {
            assert!(s.premise1.is_traditional() && s.premise2.is_traditional());
        }
    }

    #[test]
    fn candidate_counts() {
        assert_eq!(enumerate_candidates(Kind::Traditional, false).len(), 256);
        assert_eq!(enumerate_candidates(Kind::Traditional, true).len(), 768);
        assert_eq!(enumerate_candidates(Kind::DeMorgan, false).len(), 2048);
        assert_eq!(enumerate_candidates(Kind::DeMorgan, true).len(), 12288);
        let set: BTreeSet<_> = enumerate_candidates(Kind::DeMorgan, true)
            .into_iter()
            .collect();
        assert_eq!(set.len(), 12288);
    }

    #[test]
    fn fixtures_lie_in_the_candidate_space() {
        for kind in [Kind::Traditional, Kind::DeMorgan] {
            let t = validity_table(kind);
            let plain: BTreeSet<_> = enumerate_candidates(kind, false).into_iter().collect();
            let strong: BTreeSet<_> = enumerate_candidates(kind, true).into_iter().collect();
            assert!(t.plain.iter().all(|s| plain.contains(s)));
            assert!(t.strengthened.iter().all(|s| strong.contains(s)));
        }
    }

    #[test]
    fn classify_examples() {
        let sys = SystemLevel::syll_plus_star();
        let both = |s: &str| {
            let c = classify(&s.parse().unwrap(), &sys);
            (c.syll_provable, c.rll_provable)
        };
        assert_eq!(both("A(M,P) ; A(S,M) / A(S,P)"), (true, true));
        assert_eq!(both("A(m,P) ; I(S,m) / I(S,P)"), (true, true));
        assert_eq!(both("I(P,m) ; A(M,s) / I(S,P)"), (false, false));
    }
}
