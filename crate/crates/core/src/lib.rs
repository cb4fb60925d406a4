//! Degree-sequence toolkit for potentially (K5-P4)- and (K5-Y4)-graphic
//! sequences.
//!
//! A graphic sequence is *potentially H-graphic* when at least one of its
//! realizations contains H as a subgraph. This crate provides:
//!
//! - [`seq`]: the [`DegreeSequence`] type and the `r^t` text notation;
//! - [`graphicality`]: Erdős–Gallai, lay-off recursion and Havel–Hakimi;
//! - [`graph`]: simple graphs, the two target patterns, embedding search;
//! - [`characterize`]: closed-form predicates and a pattern-aware realizer;
//! - [`oracle`]: exhaustive enumeration used as ground truth;
//! - [`sigma`]: the extremal threshold σ(H, n);
//! - [`crosscheck`]: predicate vs. oracle sweeps;
//! - [`cli`]: the `pgraphic` command line.
//!
//! ```
//! use potential_graphic::{check_k5_p4, parse_sequence};
//!
//! let seq = parse_sequence("4^2,2^3").unwrap();
//! let verdict = check_k5_p4(&seq).unwrap();
//! assert!(!verdict.is_yes());
//! assert_eq!(verdict.violated.unwrap().id(), "P4-4");
//! ```
//!
//! Runnable walkthroughs live in `examples/`; see the README.

pub mod characterize;
pub mod cli;
pub mod crosscheck;
pub mod error;
pub mod graph;
pub mod graphicality;
pub mod oracle;
pub mod seq;
pub mod sigma;

pub use characterize::{
    check, check_k5_p4, check_k5_y4, condition4_cut_defect, realize_with_pattern,
    residual_after_pattern, Condition, Decision, PatternRealization, Verdict,
};
pub use crosscheck::{crosscheck, CrosscheckReport, Mismatch};
pub use error::{Error, ParseError, Result};
pub use graph::{
    degree_sequence_of, find_embedding, remove_pattern, Embedding, SimpleGraph, TargetPattern,
    K5_MINUS_P4, K5_MINUS_Y4,
};
pub use graphicality::{
    havel_hakimi_realize, is_graphic_erdos_gallai, is_graphic_lay_off, is_graphic_small_degree,
    lay_off, LayOffResult,
};
pub use oracle::{
    enumerate_graphic_sequences, enumerate_realizations, oracle_potentially, EnumerationBudget,
};
pub use seq::{match_condition3, match_condition4, parse_sequence, DegreeSequence, FamilyMatch};
pub use sigma::{compute_sigma, lower_bound_witness, Decider, SigmaResult};
