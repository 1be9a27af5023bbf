//! Classical multiplicative logic, the polarised translation and proof nets.
//!
//! ```
//! use syllogic::nets::{build_net, planarity, translate_proof, translate_sequent};
//! use syllogic::rll::prove_rll;
//!
//! let seq = "M -o P, S -o M |- S -o P".parse().unwrap();
//! assert_eq!(translate_sequent(&seq).to_string(), "=> P^ * M, M^ * S, S^ | P");
//! let proof = translate_proof(&prove_rll(&seq).unwrap()).unwrap();
//! assert!(planarity(&build_net(&proof).unwrap()).planar);
//! ```

mod formula;
mod net;
mod proof;
mod translate;

pub use formula::{linear_negation, CmllFormula, CmllSequent};
pub use net::{build_net, planarity, AtomOccurrence, NetDoc, NetNode, Planarity, ProofNet};
pub use proof::{check_cmll_proof, unit_law_proofs, CmllProof, CmllRule};
pub use translate::{
    translate_formula, translate_formula_raw, translate_proof, translate_sequent,
    translate_sequent_raw, Polarity,
};
