//! Categorical propositions and syllogisms, their encodings as diagrams and
//! formulas, and the validity tables.
//!
//! ```
//! use syllogic::syllogistics::{classify, Kind, Syllogism};
//!
//! let barbara: Syllogism = "A(M,P) ; A(S,M) / A(S,P)".parse().unwrap();
//! assert_eq!(barbara.figure(), 1);
//! assert_eq!(barbara.syll_sequent().to_string(), "M -> P, S -> M |= S -> P");
//! let verdict = classify(&barbara, &Kind::Traditional.system());
//! assert!(verdict.syll_provable && verdict.rll_provable);
//! ```

mod laws;
mod prop;
mod report;
mod tables;

pub use laws::{
    catalog_system, reduction_catalog, square_laws, two_term_laws, LawMode, Obligation, Reduction,
    SquareLaw,
};
pub use prop::{CategoricalProp, Quantity, SignedTerm, Syllogism};
pub use report::{
    check_syllogisms, compare_with_table, in_asserted_scope, regenerate, CheckLine, Section,
    TableComparison,
};
pub use tables::{
    classify, enumerate_candidates, provable_set, sweep, validity_table, Classification, Kind,
    ReportRecord, ValidityTable,
};
