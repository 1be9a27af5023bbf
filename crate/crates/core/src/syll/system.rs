use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::diagram::{parse_diagram, Diagram, TermVar};
use crate::error::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SystemFlag {
    BaseRules,
    ExistentialAxiom,
    IdentityAxiom,
    NewDiagramRules,
}

/// A member of the SYLL family, given by the rule groups it enables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SystemLevel {
    flags: BTreeSet<SystemFlag>,
}

impl SystemLevel {
    pub fn from_flags(flags: impl IntoIterator<Item = SystemFlag>) -> Self {
        SystemLevel {
            flags: flags.into_iter().collect(),
        }
    }

    pub fn syll() -> Self {
        Self::from_flags([SystemFlag::BaseRules])
    }

    pub fn syll_plus() -> Self {
        Self::syll().with(SystemFlag::ExistentialAxiom)
    }

    pub fn syll_plus_plus() -> Self {
        Self::syll_plus().with(SystemFlag::IdentityAxiom)
    }

    pub fn syll_plus_star() -> Self {
        Self::syll_plus().with(SystemFlag::NewDiagramRules)
    }

    pub fn with(mut self, flag: SystemFlag) -> Self {
        self.flags.insert(flag);
        self
    }

    pub fn has(&self, flag: SystemFlag) -> bool {
        self.flags.contains(&flag)
    }

    pub fn flags(&self) -> impl Iterator<Item = SystemFlag> + '_ {
        self.flags.iter().copied()
    }

    /// Whether the new syllogistic diagrams count as well formed.
    pub fn admits_new(&self) -> bool {
        self.has(SystemFlag::NewDiagramRules)
    }

    pub fn name(&self) -> String {
        for (name, sys) in [
            ("SYLL", Self::syll()),
            ("SYLL+", Self::syll_plus()),
            ("SYLL++", Self::syll_plus_plus()),
            ("SYLL+*", Self::syll_plus_star()),
        ] {
            if *self == sys {
                return name.to_string();
            }
        }
        let names: Vec<String> = self.flags.iter().map(|f| format!("{f:?}")).collect();
        format!("{{{}}}", names.join(", "))
    }
}

impl fmt::Display for SystemLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for SystemLevel {
    type Err = ParseError;

    /// Accepts `syll`, `syll+`, `syll++` and `syll+*` in any case.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "syll" => Ok(Self::syll()),
            "syll+" => Ok(Self::syll_plus()),
            "syll++" => Ok(Self::syll_plus_plus()),
            "syll+*" => Ok(Self::syll_plus_star()),
            other => Err(ParseError::new(0, format!("unknown system `{other}`"))),
        }
    }
}

/// Per-variable limits on axiom leaves during search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AxiomBudget {
    pub exist_per_var: usize,
    pub ident_per_var: usize,
}

impl AxiomBudget {
    pub fn zero() -> Self {
        Self::uniform(0)
    }

    pub fn uniform(n: usize) -> Self {
        AxiomBudget {
            exist_per_var: n,
            ident_per_var: n,
        }
    }
}

impl Default for AxiomBudget {
    fn default() -> Self {
        Self::uniform(1)
    }
}

/// `G1, ..., Gn |= goal`. Premise order is not significant for search.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SyllSequent {
    pub premises: Vec<Diagram>,
    pub goal: Diagram,
}

impl SyllSequent {
    pub fn new(premises: Vec<Diagram>, goal: Diagram) -> Self {
        SyllSequent { premises, goal }
    }

    /// Distinct term-variables of premises and goal, sorted.
    pub fn vars(&self) -> Vec<TermVar> {
        let set: BTreeSet<TermVar> = self
            .premises
            .iter()
            .chain(std::iter::once(&self.goal))
            .flat_map(|d| d.vars().cloned())
            .collect();
        set.into_iter().collect()
    }

    pub fn is_well_formed(&self, system: &SystemLevel) -> bool {
        let new = system.admits_new();
        self.premises.iter().all(|d| d.is_well_formed_with(new))
            && self.goal.is_well_formed_with(new)
    }
}

impl fmt::Display for SyllSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.premises.iter().map(|d| d.to_string()).collect();
        if ps.is_empty() {
            write!(f, "|= {}", self.goal)
        } else {
            write!(f, "{} |= {}", ps.join(", "), self.goal)
        }
    }
}

impl FromStr for SyllSequent {
    type Err = ParseError;

    /// `d1, d2 |= goal`; `⊨` is accepted for `|=`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lhs, rhs, at) = match (s.find("|="), s.find('⊨')) {
            (Some(i), _) => (&s[..i], &s[i + 2..], i + 2),
            (None, Some(i)) => (&s[..i], &s[i + '⊨'.len_utf8()..], i + '⊨'.len_utf8()),
            (None, None) => return Err(ParseError::new(s.len(), "expected `|=`")),
        };
        let shift = |e: ParseError, by: usize| ParseError::new(e.position + by, e.message);
        let mut premises = Vec::new();
        if !lhs.trim().is_empty() {
            let mut start = 0;
            for part in lhs.split(',') {
                premises.push(parse_diagram(part).map_err(|e| shift(e, start))?);
                start += part.len() + 1;
            }
        }
        let goal = parse_diagram(rhs).map_err(|e| shift(e, at))?;
        Ok(SyllSequent { premises, goal })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_systems() {
        assert!(SystemLevel::syll_plus_star().has(SystemFlag::ExistentialAxiom));
        assert!(!SystemLevel::syll_plus_star().has(SystemFlag::IdentityAxiom));
        assert_eq!(
            "SYLL++".parse::<SystemLevel>().unwrap(),
            SystemLevel::syll_plus_plus()
        );
        assert_eq!(SystemLevel::syll_plus().to_string(), "SYLL+");
        assert!("syll*".parse::<SystemLevel>().is_err());
    }

    #[test]
    fn sequent_text() {
        let s: SyllSequent = "M -> P, S -> M |= S -> P".parse().unwrap();
        assert_eq!(s.premises.len(), 2);
        assert_eq!(s.to_string(), "M -> P, S -> M |= S -> P");
        assert_eq!(s.vars().len(), 3);
        let e: SyllSequent = "|= A -> A".parse().unwrap();
        assert!(e.premises.is_empty());
        let err = "A -> B, A -> |= B".parse::<SyllSequent>().unwrap_err();
        assert!(err.position >= 7, "{err}");
    }
}
