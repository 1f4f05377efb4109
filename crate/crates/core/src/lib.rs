//! Backtracking pattern-matching combinators.
//!
//! * [`pattern`]: restartable patterns, variables, conjunction and
//!   disjunction, and continuation-based clause helpers.
//! * [`motif`]: pattern transformers, Kleene star/plus, encapsulated search.
//! * [`value`], [`reader`]: s-expression data and its textual form.
//! * [`lists`]: patterns and clause operators for pair-based lists.
//! * [`query`]: a textual pattern language compiled to patterns.
//! * [`cli`]: the `sxq` tool.

pub mod cli;
pub mod lists;
pub mod motif;
pub mod pattern;
pub mod query;
pub mod reader;
pub mod value;

pub use motif::Motif;
pub use pattern::{MatchFailure, Pattern, Variable};
pub use reader::{print, read};
pub use value::Value;
