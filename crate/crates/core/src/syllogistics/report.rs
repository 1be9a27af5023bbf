use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::rll::prove_rll;
use crate::syll::{prove, AxiomBudget, SystemLevel};

use super::laws::{catalog_system, reduction_catalog, square_laws, LawMode, Obligation};
use super::prop::Syllogism;
use super::tables::{classify, provable_set, sweep, validity_table, Kind, ReportRecord};

/// Whether a candidate falls in the part of the space a validity table
/// claims to describe. Strengthened De Morgan tables only list imports on
/// the conclusion's subject term.
pub fn in_asserted_scope(kind: Kind, strengthened: bool, s: &Syllogism) -> bool {
    match (kind, strengthened) {
        (Kind::DeMorgan, true) => s.import.as_ref() == Some(&s.conclusion.subject),
        _ => true,
    }
}

/// A sweep compared with its fixture table.
#[derive(Debug, Clone)]
pub struct TableComparison {
    pub kind: Kind,
    pub strengthened: bool,
    pub records: Vec<ReportRecord>,
    /// Provable in both calculi and inside the asserted scope.
    pub found: BTreeSet<Syllogism>,
    pub expected: BTreeSet<Syllogism>,
    pub disagreements: Vec<Syllogism>,
}

impl TableComparison {
    pub fn missing(&self) -> Vec<&Syllogism> {
        self.expected.difference(&self.found).collect()
    }

    pub fn extra(&self) -> Vec<&Syllogism> {
        self.found.difference(&self.expected).collect()
    }

    pub fn table_matches(&self) -> bool {
        self.found == self.expected
    }

    pub fn calculi_agree(&self) -> bool {
        self.disagreements.is_empty()
    }
}

pub fn compare_with_table(kind: Kind, strengthened: bool) -> TableComparison {
    let records = sweep(kind, strengthened);
    let found = provable_set(&records)
        .into_iter()
        .filter(|s| in_asserted_scope(kind, strengthened, s))
        .collect();
    let table = validity_table(kind);
    let expected = if strengthened {
        table.strengthened
    } else {
        table.plain
    };
    let disagreements = records
        .iter()
        .filter(|r| !r.verdict.agree())
        .map(|r| r.syllogism.clone())
        .collect();
    TableComparison {
        kind,
        strengthened,
        records,
        found,
        expected: expected.into_iter().collect(),
        disagreements,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Section {
    Traditional,
    DeMorgan,
    Square,
    Catalog,
    Reductions,
}

impl Section {
    pub const ALL: [Section; 5] = [
        Section::Traditional,
        Section::DeMorgan,
        Section::Square,
        Section::Catalog,
        Section::Reductions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::Traditional => "traditional",
            Section::DeMorgan => "demorgan",
            Section::Square => "square",
            Section::Catalog => "catalog",
            Section::Reductions => "reductions",
        }
    }
}

impl FromStr for Section {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Section::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| ParseError::new(0, format!("unknown section `{s}`")))
    }
}

/// One re-derived entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub section: Section,
    pub name: String,
    pub proved: bool,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.proved { "PROVED" } else { "FAILED" };
        write!(f, "{mark}\t{}\t{}", self.section.name(), self.name)
    }
}

/// Every entry must be provable in both calculi.
pub fn check_syllogisms(
    section: Section,
    entries: &[Syllogism],
    system: &SystemLevel,
) -> Vec<CheckLine> {
    entries
        .iter()
        .map(|s| {
            let v = classify(s, system);
            CheckLine {
                section,
                name: s.to_string(),
                proved: v.syll_provable && v.rll_provable,
            }
        })
        .collect()
}

fn obligation_holds(o: &Obligation, system: &SystemLevel) -> bool {
    prove(&o.syll, system, AxiomBudget::default()).is_some()
        && o.rll.as_ref().is_none_or(|r| prove_rll(r).is_some())
}

/// Re-derives the validity tables, the square of opposition, the identity
/// and two-term laws and the worked reductions.
pub fn regenerate(only: Option<Section>) -> Vec<CheckLine> {
    let mut out = Vec::new();
    for section in Section::ALL {
        if only.is_some_and(|o| o != section) {
            continue;
        }
        match section {
            Section::Traditional | Section::DeMorgan => {
                let kind = if section == Section::Traditional {
                    Kind::Traditional
                } else {
                    Kind::DeMorgan
                };
                let t = validity_table(kind);
                out.extend(check_syllogisms(section, &t.plain, &kind.system()));
                out.extend(check_syllogisms(section, &t.strengthened, &kind.system()));
            }
            Section::Square => {
                for mode in [LawMode::Traditional, LawMode::New] {
                    for law in square_laws(mode) {
                        let diagram_ok = law.diagram.as_ref().is_none_or(|d| {
                            prove(d, &law.system, AxiomBudget::default()).is_some()
                        });
                        out.push(CheckLine {
                            section,
                            name: law.name.clone(),
                            proved: diagram_ok && prove_rll(&law.rll).is_some(),
                        });
                    }
                }
            }
            Section::Catalog => {
                let (laws, _) = reduction_catalog();
                for o in &laws {
                    out.push(CheckLine {
                        section,
                        name: o.name.clone(),
                        proved: obligation_holds(o, &catalog_system()),
                    });
                }
            }
            Section::Reductions => {
                let (_, reductions) = reduction_catalog();
                for r in &reductions {
                    out.push(CheckLine {
                        section,
                        name: r.name.clone(),
                        proved: r
                            .obligations
                            .iter()
                            .all(|o| obligation_holds(o, &catalog_system())),
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_parse() {
        for s in Section::ALL {
            assert_eq!(s.name().parse::<Section>().unwrap(), s);
        }
        assert!("tables".parse::<Section>().is_err());
    }

    #[test]
    fn corrupted_fixture_fails() {
        let mut entries = validity_table(Kind::Traditional).plain;
        entries[0] = "A(M,P) ; A(S,M) / A(S,p)".parse().unwrap();
        let lines = check_syllogisms(Section::Traditional, &entries, &Kind::Traditional.system());
        assert!(!lines[0].proved);
        assert!(lines[1..].iter().all(|l| l.proved));
    }

    #[test]
    fn catalog_sections_are_proved() {
        for section in [Section::Square, Section::Catalog, Section::Reductions] {
            let lines = regenerate(Some(section));
            assert!(!lines.is_empty());
            for l in lines {
                assert!(l.proved, "{l}");
            }
        }
    }

    #[test]
    fn scope() {
        let s: Syllogism = "A(M,P) ; A(S,M) ; I(M,M) / I(S,P)".parse().unwrap();
        assert!(!in_asserted_scope(Kind::DeMorgan, true, &s));
        assert!(in_asserted_scope(Kind::Traditional, true, &s));
    }
}
