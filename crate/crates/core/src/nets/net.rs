use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::NetError;

use super::formula::{CmllFormula, CmllSequent};
use super::proof::{check_cmll_proof, premises, CmllProof, CmllRule};

/// An atom occurrence of the root sequent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomOccurrence {
    pub name: String,
    pub negated: bool,
    /// Index of the conclusion it belongs to.
    pub conclusion: usize,
}

/// A connective or unit node of a conclusion's formula tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NetNode {
    Atom(usize),
    One,
    Bot,
    Tensor(Box<NetNode>, Box<NetNode>),
    Par(Box<NetNode>, Box<NetNode>),
}

/// Axiom links over the atom occurrences of the unit-free root sequent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofNet {
    pub conclusions: CmllSequent,
    pub atoms: Vec<AtomOccurrence>,
    /// Pairs `(i, j)` with `i < j`, sorted.
    pub links: Vec<(usize, usize)>,
    pub nodes: Vec<NetNode>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planarity {
    pub planar: bool,
    /// Every interleaving pair of links.
    pub crossings: Vec<((usize, usize), (usize, usize))>,
}

/// Structured rendering of a net.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetDoc {
    pub conclusions: Vec<String>,
    pub atoms: Vec<String>,
    pub links: Vec<[usize; 2]>,
    pub planar: bool,
    pub crossings: Vec<[[usize; 2]; 2]>,
}

/// Follows every atom occurrence of the root up to the identity leaf that
/// introduces it. Unit removal keeps atom order, so the ids are also those
/// of the normalised conclusions.
///
/// ```
/// use syllogic::nets::{build_net, translate_proof};
/// use syllogic::rll::prove_rll;
///
/// let p = prove_rll(&"A |- A".parse().unwrap()).unwrap();
/// let net = build_net(&translate_proof(&p).unwrap()).unwrap();
/// assert_eq!(net.links, [(0, 1)]);
/// ```
pub fn build_net(p: &CmllProof) -> Result<ProofNet, NetError> {
    if let Some(leaf) = first_bad_identity(p) {
        return Err(NetError::NonAtomicIdentity(leaf.to_string()));
    }
    if !check_cmll_proof(p) {
        return Err(NetError::InvalidProof(
            "rule instances do not replay".into(),
        ));
    }
    let root = &p.sequent.conclusions;
    let mut next = 0;
    let mut ids = Vec::with_capacity(root.len());
    let mut atoms = Vec::new();
    for (c, f) in root.iter().enumerate() {
        let n = f.atom_count();
        ids.push((next..next + n).collect::<Vec<_>>());
        for a in f.atoms() {
            let (name, negated) = match a {
                CmllFormula::Pos(n) => (n.clone(), false),
                CmllFormula::Neg(n) => (n.clone(), true),
                _ => unreachable!("atoms() yields atoms"),
            };
            atoms.push(AtomOccurrence {
                name,
                negated,
                conclusion: c,
            });
        }
        next += n;
    }
    let mut links = Vec::new();
    trace(p, ids, &mut links);
    for l in &mut links {
        if l.0 > l.1 {
            *l = (l.1, l.0);
        }
    }
    links.sort_unstable();

    let mut counter = 0;
    let nodes = root
        .iter()
        .map(|f| tree(&f.normalize_units(), &mut counter))
        .collect();
    Ok(ProofNet {
        conclusions: p.sequent.normalize_units(),
        atoms,
        links,
        nodes,
    })
}

fn first_bad_identity(p: &CmllProof) -> Option<&CmllSequent> {
    if p.rule == CmllRule::Identity && !p.sequent.conclusions.iter().all(CmllFormula::is_atom) {
        return Some(&p.sequent);
    }
    p.children.iter().find_map(first_bad_identity)
}

fn trace(p: &CmllProof, ids: Vec<Vec<usize>>, links: &mut Vec<(usize, usize)>) {
    let seq = &p.sequent.conclusions;
    let split = |f: &CmllFormula, v: &[usize]| -> (Vec<usize>, Vec<usize>) {
        let (a, _) = match f {
            CmllFormula::Tensor(a, b) | CmllFormula::Par(a, b) => (a, b),
            _ => unreachable!("replayed rule is principal on a connective"),
        };
        let k = a.atom_count();
        (v[..k].to_vec(), v[k..].to_vec())
    };
    match &p.rule {
        CmllRule::Identity => links.push((ids[0][0], ids[1][0])),
        CmllRule::One => {}
        CmllRule::False { pos } => {
            let mut ids = ids;
            ids.remove(*pos);
            trace(&p.children[0], ids, links);
        }
        CmllRule::Parr { pos } => {
            let (a, b) = split(&seq[*pos], &ids[*pos]);
            let mut rest: Vec<Vec<usize>> = ids
                .into_iter()
                .enumerate()
                .filter(|(i, _)| i != pos)
                .map(|(_, v)| v)
                .collect();
            rest.push(a);
            rest.push(b);
            trace(&p.children[0], rest, links);
        }
        CmllRule::Times { pos, left } => {
            let (a, b) = split(&seq[*pos], &ids[*pos]);
            let mut l: Vec<Vec<usize>> = left.iter().map(|&i| ids[i].clone()).collect();
            l.push(a);
            let mut r: Vec<Vec<usize>> = (0..seq.len())
                .filter(|i| i != pos && !left.contains(i))
                .map(|i| ids[i].clone())
                .collect();
            r.push(b);
            trace(&p.children[0], l, links);
            trace(&p.children[1], r, links);
        }
        CmllRule::Exchange { perm } => {
            let ids = perm.iter().map(|&i| ids[i].clone()).collect();
            trace(&p.children[0], ids, links);
        }
    }
    debug_assert!(premises(&p.rule, seq).is_some());
}

fn tree(f: &CmllFormula, counter: &mut usize) -> NetNode {
    match f {
        CmllFormula::Pos(_) | CmllFormula::Neg(_) => {
            *counter += 1;
            NetNode::Atom(*counter - 1)
        }
        CmllFormula::One => NetNode::One,
        CmllFormula::Bot => NetNode::Bot,
        CmllFormula::Tensor(a, b) => {
            let a = tree(a, counter);
            NetNode::Tensor(Box::new(a), Box::new(tree(b, counter)))
        }
        CmllFormula::Par(a, b) => {
            let a = tree(a, counter);
            NetNode::Par(Box::new(a), Box::new(tree(b, counter)))
        }
    }
}

/// Places the atoms on a circle in conclusion order; two links cross when
/// exactly one endpoint of one lies strictly between the endpoints of the
/// other.
pub fn planarity(net: &ProofNet) -> Planarity {
    let mut crossings = Vec::new();
    for (k, &(a, b)) in net.links.iter().enumerate() {
        for &(c, d) in &net.links[k + 1..] {
            let inside = |x: usize| a < x && x < b;
            if inside(c) != inside(d) {
                crossings.push(((a, b), (c, d)));
            }
        }
    }
    Planarity {
        planar: crossings.is_empty(),
        crossings,
    }
}

impl ProofNet {
    pub fn atom_label(&self, i: usize) -> String {
        let a = &self.atoms[i];
        if a.negated {
            format!("{}^", a.name)
        } else {
            a.name.clone()
        }
    }

    pub fn to_doc(&self) -> NetDoc {
        let pl = planarity(self);
        NetDoc {
            conclusions: self
                .conclusions
                .conclusions
                .iter()
                .map(|f| f.to_string())
                .collect(),
            atoms: (0..self.atoms.len()).map(|i| self.atom_label(i)).collect(),
            links: self.links.iter().map(|&(a, b)| [a, b]).collect(),
            planar: pl.planar,
            crossings: pl
                .crossings
                .iter()
                .map(|&((a, b), (c, d))| [[a, b], [c, d]])
                .collect(),
        }
    }

    /// Graphviz rendering: atoms on one rank in order, formula-tree edges
    /// down to each conclusion, axiom links as dashed edges.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph net {\n  node [shape=plaintext];\n");
        let mut rank = String::from("  { rank=same;");
        for i in 0..self.atoms.len() {
            let _ = writeln!(out, "  a{i} [label=\"{}\"];", self.atom_label(i));
            let _ = write!(rank, " a{i}");
        }
        let _ = writeln!(out, "{rank} }}");
        for i in 1..self.atoms.len() {
            let _ = writeln!(out, "  a{} -- a{i} [style=invis];", i - 1);
        }
        let mut fresh = 0;
        for (c, node) in self.nodes.iter().enumerate() {
            let id = dot_node(node, &mut out, &mut fresh);
            let _ = writeln!(
                out,
                "  c{c} [label=\"{}\"];",
                self.conclusions.conclusions[c]
            );
            let _ = writeln!(out, "  {id} -- c{c};");
        }
        for &(a, b) in &self.links {
            let _ = writeln!(out, "  a{a} -- a{b} [style=dashed, constraint=false];");
        }
        out.push_str("}\n");
        out
    }
}

fn dot_node(n: &NetNode, out: &mut String, fresh: &mut usize) -> String {
    let mut inner = |label: &str, kids: &[&NetNode], out: &mut String| {
        let id = format!("n{}", *fresh);
        *fresh += 1;
        let _ = writeln!(out, "  {id} [label=\"{label}\"];");
        for k in kids {
            let kid = dot_node(k, out, fresh);
            let _ = writeln!(out, "  {kid} -- {id};");
        }
        id
    };
    match n {
        NetNode::Atom(i) => format!("a{i}"),
        NetNode::One => inner("1", &[], out),
        NetNode::Bot => inner("bot", &[], out),
        NetNode::Tensor(a, b) => inner("*", &[a, b], out),
        NetNode::Par(a, b) => inner("|", &[a, b], out),
    }
}

#[cfg(test)]
mod tests {
    use super::super::translate::translate_proof;
    use super::*;
    use crate::rll::prove_rll;

    fn net(s: &str) -> ProofNet {
        let p = prove_rll(&s.parse().unwrap()).unwrap();
        build_net(&translate_proof(&p).unwrap()).unwrap()
    }

    fn rotate(n: &ProofNet, k: usize) -> ProofNet {
        let m = n.atoms.len();
        let mut links: Vec<(usize, usize)> = n
            .links
            .iter()
            .map(|&(a, b)| {
                let (a, b) = ((a + k) % m, (b + k) % m);
                (a.min(b), a.max(b))
            })
            .collect();
        links.sort_unstable();
        ProofNet { links, ..n.clone() }
    }

    #[test]
    fn barbara_is_planar() {
        let n = net("M -o P, S -o M |- S -o P");
        assert_eq!(n.conclusions.to_string(), "=> P^ * M, M^ * S, S^ | P");
        assert_eq!(n.links, [(0, 5), (1, 2), (3, 4)]);
        assert!(planarity(&n).planar);
    }

    #[test]
    fn fourth_figure_crosses() {
        let n = net("P -o M^, M * S |- S * P^");
        assert_eq!(n.conclusions.to_string(), "=> M * P, S^ | M^, S * P^");
        assert_eq!(n.links, [(0, 3), (1, 5), (2, 4)]);
        let pl = planarity(&n);
        assert!(!pl.planar);
        assert!(!pl.crossings.is_empty());
    }

    #[test]
    fn verdict_survives_rotation() {
        for s in ["M -o P, S -o M |- S -o P", "P -o M^, M * S |- S * P^"] {
            let n = net(s);
            let base = planarity(&n).planar;
            for k in 0..n.atoms.len() {
                let r = rotate(&n, k);
                assert_eq!(planarity(&r).planar, base);
                assert_eq!(planarity(&r).crossings.len(), planarity(&n).crossings.len());
            }
        }
    }

    #[test]
    fn links_are_dual_perfect_matchings() {
        for s in ["A * A^ |- bot", "A -o B |- B^ -o A^", "A |- A^^"] {
            let n = net(s);
            let mut seen = vec![false; n.atoms.len()];
            for &(a, b) in &n.links {
                assert!(!seen[a] && !seen[b]);
                seen[a] = true;
                seen[b] = true;
                assert_eq!(n.atoms[a].name, n.atoms[b].name);
                assert_ne!(n.atoms[a].negated, n.atoms[b].negated);
            }
            assert!(seen.iter().all(|&x| x));
        }
    }

    #[test]
    fn single_link() {
        let n = net("A |- A");
        assert_eq!(n.links, [(0, 1)]);
        assert!(planarity(&n).planar);
        let doc = n.to_doc();
        assert_eq!(doc.atoms, ["A^", "A"]);
        assert!(n.to_dot().contains("a0 -- a1 [style=dashed"));
    }

    #[test]
    fn non_atomic_identity_is_rejected() {
        let f: CmllFormula = "A * B".parse().unwrap();
        let p = CmllProof {
            sequent: CmllSequent::new(vec![f.negation(), f]),
            rule: CmllRule::Identity,
            children: vec![],
        };
        assert!(matches!(build_net(&p), Err(NetError::NonAtomicIdentity(_))));
    }
}
