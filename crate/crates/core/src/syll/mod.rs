//! The diagrammatic inference systems SYLL, SYLL+, SYLL++ and SYLL+*.
//!
//! ```
//! use syllogic::syll::{check_proof, prove, AxiomBudget, SyllSequent, SystemLevel};
//!
//! let seq: SyllSequent = "M -> P, S -> M |= S -> P".parse().unwrap();
//! let sys = SystemLevel::syll();
//! let proof = prove(&seq, &sys, AxiomBudget::default()).unwrap();
//! assert!(check_proof(&proof, &seq, &sys));
//! ```

mod proof;
mod rules;
mod search;
mod system;

pub use proof::{check_proof, SyllProof, SyllProofDoc};
pub use rules::{apply_rule, concatenate, exist_axiom, ident_axiom, SyllRule};
pub use search::{prove, reject_precheck, RejectReason};
pub use system::{AxiomBudget, SyllSequent, SystemFlag, SystemLevel};
