//! The intuitionistic calculus with tensor, linear implication and a
//! distinguished atom `bot` used only to form complements.
//!
//! ```
//! use syllogic::rll::{prove_rll, check_rll_proof, RllSequent};
//!
//! let seq: RllSequent = "M -o P, S -o M |- S -o P".parse().unwrap();
//! let proof = prove_rll(&seq).expect("Barbara is provable");
//! assert!(check_rll_proof(&proof));
//!
//! let converse: RllSequent = "A^^ |- A".parse().unwrap();
//! assert!(prove_rll(&converse).is_none());
//! ```

mod formula;
mod proof;
mod prover;
mod sequent;

pub use formula::{complement, RllFormula};
pub use proof::{check_rll_proof, RllProof, RllProofDoc, RllRule};
pub use prover::{equivalent, prove_rll, RllProver};
pub use sequent::RllSequent;
