//! Synchronizing automata toolkit.
//!
//! The crate covers four areas:
//!
//! * [`dfa`]: complete deterministic automata, words, state subsets and the
//!   polynomial synchronizability test on the pair automaton.
//! * [`exact`]: shortest reset words by breadth-first search over images of
//!   the full state set.
//! * [`greedy`]: the pairwise-merging greedy heuristic and exact performance
//!   ratios.
//! * [`cnf`] and [`gadget`]: DIMACS ingestion and the automata built from CNF
//!   formulas whose shortest reset length separates satisfiable from
//!   unsatisfiable inputs.

pub mod cnf;
pub mod dfa;
mod error;
pub mod exact;
pub mod format;
pub mod gadget;
pub mod greedy;
mod pairs;

pub use cnf::{brute_force_sat, parse_dimacs, CnfFormula, Literal, TruthAssignment};
pub use dfa::{Dfa, StateSet, Word};
pub use error::{Error, Result};
pub use exact::{
    min_reset_word, shortest_path_length, ResetSearchResult, SearchBudget, SearchStatus,
};
pub use format::{parse_dfa, parse_dfa_labeled, serialize_dfa, serialize_labeled};
pub use gadget::{
    binary_encoding, build_base_gadget, build_iterated_gadget, build_iterated_gadget_capped,
    encode_assignment, f_aux, to_binary, translate_word, witness_word, GadgetMeta, LabeledDfa,
    StateLabel, DEFAULT_STATE_CAP, LETTER_A, LETTER_B, LETTER_C,
};
pub use greedy::{eppstein_greedy, format_ratio, performance_ratio, Ratio, RatioRecord};
pub use pairs::PairDistances;
