use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::rc::Rc;

use crate::diagram::{is_syllogistic_shape, reversal_is_traditional, Diagram, TermVar};

use super::proof::SyllProof;
use super::rules::{apply_rule, exist_axiom, ident_axiom, local_rewrites, SyllRule};
use super::system::{AxiomBudget, SyllSequent, SystemFlag, SystemLevel};

/// Derivation with shared subtrees, converted to a [`SyllProof`] once found.
struct Deriv {
    node: Diagram,
    rule: SyllRule,
    children: Vec<Rc<Deriv>>,
}

impl Deriv {
    fn leaf(node: Diagram, rule: SyllRule) -> Rc<Deriv> {
        Rc::new(Deriv {
            node,
            rule,
            children: vec![],
        })
    }

    fn to_proof(&self) -> SyllProof {
        SyllProof {
            node: self.node.clone(),
            rule: self.rule.clone(),
            children: self.children.iter().map(|c| c.to_proof()).collect(),
        }
    }
}

/// Search state: the current diagrams (kept sorted) with their derivations,
/// and the axiom leaves still available per variable.
#[derive(Clone)]
struct State {
    items: Vec<Rc<Deriv>>,
    exist_left: Vec<usize>,
    ident_left: Vec<usize>,
}

impl State {
    fn key(&self) -> (Vec<Diagram>, Vec<usize>, Vec<usize>) {
        (
            self.items.iter().map(|p| p.node.clone()).collect(),
            self.exist_left.clone(),
            self.ident_left.clone(),
        )
    }

    fn normalise(mut self) -> Self {
        self.items.sort_by(|a, b| a.node.cmp(&b.node));
        self
    }

    /// Replaces the items at `drop` by `new`.
    fn replace(&self, drop: &[usize], new: Rc<Deriv>) -> State {
        let mut items: Vec<Rc<Deriv>> = self
            .items
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, p)| Rc::clone(p))
            .collect();
        items.push(new);
        State {
            items,
            ..self.clone()
        }
        .normalise()
    }
}

/// Breadth-first search over multisets of derived diagrams.
///
/// Every intermediate diagram must be well formed for `system`; all premises
/// must be consumed. Returns the first proof found in BFS order, or `None`
/// once the finite state space (bounded by `budget`) is exhausted.
pub fn prove(seq: &SyllSequent, system: &SystemLevel, budget: AxiomBudget) -> Option<SyllProof> {
    let new = system.admits_new();
    if !seq.is_well_formed(system) {
        return None;
    }
    let vars = seq.vars();
    let exist = if system.has(SystemFlag::ExistentialAxiom) {
        budget.exist_per_var
    } else {
        0
    };
    let ident = if system.has(SystemFlag::IdentityAxiom) {
        budget.ident_per_var
    } else {
        0
    };
    let start = State {
        items: seq
            .premises
            .iter()
            .enumerate()
            .map(|(i, d)| Deriv::leaf(d.clone(), SyllRule::Premise(i)))
            .collect(),
        exist_left: vec![exist; vars.len()],
        ident_left: vec![ident; vars.len()],
    }
    .normalise();

    let done = |s: &State| s.items.len() == 1 && s.items[0].node == seq.goal;
    let star = system.has(SystemFlag::NewDiagramRules);
    let goal_bullets = seq.goal.bullet_count();
    // bullet accounting holds along every proof, so it prunes whole subtrees
    let viable = |s: &State| {
        let b = s.items.iter().map(|p| p.node.bullet_count()).sum();
        bullets_feasible(b, s.exist_left.iter().sum(), goal_bullets, star)
    };
    if done(&start) {
        return Some(start.items[0].to_proof());
    }
    let mut seen = HashSet::new();
    seen.insert(start.key());
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        for next in successors(&state, &vars, system, new) {
            if done(&next) {
                return Some(next.items[0].to_proof());
            }
            if viable(&next) && seen.insert(next.key()) {
                queue.push_back(next);
            }
        }
    }
    None
}

fn successors(state: &State, vars: &[TermVar], system: &SystemLevel, new: bool) -> Vec<State> {
    let mut out = Vec::new();
    let mut push = |s: State| {
        if s.items.iter().all(|p| p.node.is_well_formed_with(new)) {
            out.push(s);
        }
    };
    let step = |rule: SyllRule, children: Vec<Rc<Deriv>>| -> Option<Rc<Deriv>> {
        let inputs: Vec<Diagram> = children.iter().map(|c| c.node.clone()).collect();
        let node = apply_rule(&rule, &inputs).ok()?;
        Some(Rc::new(Deriv {
            node,
            rule,
            children,
        }))
    };

    for (i, p) in state.items.iter().enumerate() {
        if !is_syllogistic_shape(&p.node, new) {
            continue;
        }
        let rule = if reversal_is_traditional(&p.node) {
            SyllRule::ReverseSyllogistic
        } else if system.has(SystemFlag::NewDiagramRules) {
            SyllRule::ReverseNew
        } else {
            continue;
        };
        if let Some(q) = step(rule, vec![Rc::clone(p)]) {
            push(state.replace(&[i], q));
        }
    }

    for (i, x) in state.items.iter().enumerate() {
        for (j, y) in state.items.iter().enumerate() {
            if i == j || x.node.last_var() != y.node.first_var() {
                continue;
            }
            // children stay in state order; the rule says which side goes first
            let (rule, children) = if i < j {
                (SyllRule::ConcatLeft, vec![Rc::clone(x), Rc::clone(y)])
            } else {
                (SyllRule::ConcatRight, vec![Rc::clone(y), Rc::clone(x)])
            };
            if let Some(q) = step(rule, children) {
                push(state.replace(&[i, j], q));
            }
        }
    }

    let star = system.has(SystemFlag::NewDiagramRules);
    for (i, p) in state.items.iter().enumerate() {
        for rule in local_rewrites(&p.node, star) {
            if let Some(q) = step(rule, vec![Rc::clone(p)]) {
                push(state.replace(&[i], q));
            }
        }
    }

    for (k, v) in vars.iter().enumerate() {
        if state.exist_left[k] > 0 {
            let mut s = state.clone();
            s.exist_left[k] -= 1;
            s.items
                .push(Deriv::leaf(exist_axiom(v), SyllRule::ExistAxiom(v.clone())));
            push(s.normalise());
        }
        if state.ident_left[k] > 0 {
            let mut s = state.clone();
            s.ident_left[k] -= 1;
            s.items
                .push(Deriv::leaf(ident_axiom(v), SyllRule::IdentAxiom(v.clone())));
            push(s.normalise());
        }
    }
    out
}

/// Whether `goal = current + m - 2k` is solvable with `m <= injections`,
/// and `k = 0` unless star steps are available.
fn bullets_feasible(current: usize, injections: usize, goal: usize, star: bool) -> bool {
    (0..=injections).any(|m| {
        let total = current + m;
        if star {
            total >= goal && (total - goal).is_multiple_of(2)
        } else {
            total == goal
        }
    })
}

/// Why a sequent was rejected without search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejectReason {
    pub premise_bullets: usize,
    pub goal_bullets: usize,
    pub max_injections: usize,
    pub star_allowed: bool,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bullet count mismatch: premises carry {}, goal carries {}, at most {} may be added",
            self.premise_bullets, self.goal_bullets, self.max_injections
        )?;
        if self.star_allowed {
            f.write_str(" and pairs may be removed")
        } else {
            f.write_str(" and none may be removed")
        }
    }
}

/// Bullet accounting: concatenation, reversal and deletion preserve the
/// bullet count, each existential axiom leaf adds one and each star step
/// removes two. Rejects when `goal = premises + m - 2k` has no solution with
/// `m` within the budget and `k = 0` unless star is enabled.
pub fn reject_precheck(
    seq: &SyllSequent,
    system: &SystemLevel,
    budget: AxiomBudget,
) -> Option<RejectReason> {
    let premise_bullets: usize = seq.premises.iter().map(Diagram::bullet_count).sum();
    let goal_bullets = seq.goal.bullet_count();
    let max_injections = if system.has(SystemFlag::ExistentialAxiom) {
        budget.exist_per_var * seq.vars().len()
    } else {
        0
    };
    let star_allowed = system.has(SystemFlag::NewDiagramRules);
    let feasible = bullets_feasible(premise_bullets, max_injections, goal_bullets, star_allowed);
    (!feasible).then_some(RejectReason {
        premise_bullets,
        goal_bullets,
        max_injections,
        star_allowed,
    })
}

#[cfg(test)]
mod tests {
    use super::super::proof::check_proof;
    use super::*;

    fn seq(s: &str) -> SyllSequent {
        s.parse().unwrap()
    }

    fn found(s: &str, sys: &SystemLevel, budget: AxiomBudget) -> Option<SyllProof> {
        let q = seq(s);
        let p = prove(&q, sys, budget);
        if let Some(p) = &p {
            assert!(check_proof(p, &q, sys), "replay failed for {s}:\n{p}");
        }
        p
    }

    #[test]
    fn barbara() {
        assert!(found(
            "M -> P, S -> M |= S -> P",
            &SystemLevel::syll(),
            AxiomBudget::default()
        )
        .is_some());
    }

    #[test]
    fn star_example() {
        let s = "M -> * -> P, S <- * -> * <- M |= S <- * -> P";
        let p = found(s, &SystemLevel::syll_plus_star(), AxiomBudget::default()).unwrap();
        assert_eq!(p.uses(|r| matches!(r, SyllRule::Star { .. })), 1);
        assert!(found(s, &SystemLevel::syll_plus(), AxiomBudget::default()).is_none());
    }

    #[test]
    fn subalternation_needs_import() {
        let s = "M -> P, S -> M |= S <- * -> P";
        assert!(found(s, &SystemLevel::syll_plus(), AxiomBudget::zero()).is_none());
        assert!(found(s, &SystemLevel::syll(), AxiomBudget::default()).is_none());
        let p = found(s, &SystemLevel::syll_plus(), AxiomBudget::default()).unwrap();
        assert_eq!(p.uses(|r| matches!(r, SyllRule::ExistAxiom(_))), 1);
    }

    #[test]
    fn premises_are_linear() {
        assert!(found(
            "A -> B, C -> D |= A -> B",
            &SystemLevel::syll(),
            AxiomBudget::default()
        )
        .is_none());
    }

    #[test]
    fn goal_reversal() {
        let p = found(
            "A <- * -> B |= B <- * -> A",
            &SystemLevel::syll(),
            AxiomBudget::zero(),
        )
        .unwrap();
        assert_eq!(p.rule, SyllRule::ReverseSyllogistic);
    }

    #[test]
    fn precheck() {
        let sys = SystemLevel::syll();
        let q = seq("P <- * -> * <- M, M -> * <- S |= S <- * -> P");
        assert!(reject_precheck(&q, &sys, AxiomBudget::zero()).is_some());
        let q = seq("M -> * -> P, S -> * <- M |= S -> P");
        assert!(reject_precheck(&q, &SystemLevel::syll_plus_star(), AxiomBudget::zero()).is_none());
        assert!(found(
            "M -> * -> P, S -> * <- M |= S -> P",
            &SystemLevel::syll_plus_star(),
            AxiomBudget::zero()
        )
        .is_some());
        let q = seq("M -> P, S -> M |= S -> P");
        assert!(reject_precheck(&q, &sys, AxiomBudget::zero()).is_none());
    }

    #[test]
    fn corrupted_and_gated_replay() {
        let q = seq("M -> P, S -> M |= S -> P");
        let sys = SystemLevel::syll();
        let mut p = prove(&q, &sys, AxiomBudget::zero()).unwrap();
        assert!(check_proof(&p, &q, &sys));
        p.children[0].node = "S -> X".parse().unwrap();
        assert!(!check_proof(&p, &q, &sys));

        let s = seq("M -> * -> P, S <- * -> * <- M |= S <- * -> P");
        let star = prove(&s, &SystemLevel::syll_plus_star(), AxiomBudget::zero()).unwrap();
        assert!(!check_proof(&star, &s, &SystemLevel::syll_plus()));
    }
}
