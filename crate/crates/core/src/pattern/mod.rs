//! Restartable, backtracking patterns.
//!
//! A [`Pattern`] is matched against a target with [`Pattern::matches`], which
//! opens a *session* and reports whether a first solution exists. Further
//! solutions are requested with [`Pattern::match_again`] until it reports
//! `false`. Data flows out of a match only through side effects: binding
//! [`Variable`]s and running attached actions.
//!
//! ```
//! use sxq::pattern::{any, Pattern};
//!
//! let mut p: Pattern<i32> = any().or(any());
//! assert!(p.matches(&7).unwrap());
//! assert!(p.match_again().unwrap());
//! assert!(!p.match_again().unwrap());
//! ```

mod combinators;
mod control;
pub mod stats;
mod variable;

use std::fmt;

pub use combinators::{any, eq, fail, test, Deferred};
pub use control::{ensure, otherwise, test_then};
pub use variable::Variable;

/// Result of a match step: `Ok(true)` for a solution, `Ok(false)` when none
/// (or no further) solution exists.
pub type Outcome = Result<bool, MatchFailure>;

/// Raised by [`ensure`], by reading an unbound [`Variable`], or by user code
/// that wants to abort a match.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatchFailure {
    #[error("match failure: ensured condition does not hold")]
    Ensure,
    #[error("variable `{name}` is unbound; read it only after a successful match")]
    Unbound { name: String },
    #[error("match failure: {0}")]
    Custom(String),
}

/// Conversion of closure results into the library's fallible protocol.
///
/// Predicates may return `bool` or `Result<bool, MatchFailure>`. Actions may
/// return `()` or `Result<(), MatchFailure>`; an action may also end in a
/// nested match, whose `bool` is discarded.
pub trait IntoMatchResult<T> {
    fn into_match_result(self) -> Result<T, MatchFailure>;
}

impl IntoMatchResult<()> for () {
    fn into_match_result(self) -> Result<(), MatchFailure> {
        Ok(())
    }
}

impl IntoMatchResult<bool> for bool {
    fn into_match_result(self) -> Result<bool, MatchFailure> {
        Ok(self)
    }
}

impl IntoMatchResult<()> for bool {
    fn into_match_result(self) -> Result<(), MatchFailure> {
        Ok(())
    }
}

impl IntoMatchResult<()> for Result<bool, MatchFailure> {
    fn into_match_result(self) -> Result<(), MatchFailure> {
        self.map(drop)
    }
}

impl<T> IntoMatchResult<T> for Result<T, MatchFailure> {
    fn into_match_result(self) -> Result<T, MatchFailure> {
        self
    }
}

/// The matching protocol behind every [`Pattern`].
///
/// Implement this to add new primitive patterns. `start` begins a fresh
/// search against `target` and must discard any previous state; `resume`
/// is only called after `start` or `resume` returned `Ok(true)`.
pub trait Matcher<'a, A> {
    fn start(&mut self, target: &A) -> Outcome;

    fn resume(&mut self) -> Outcome;

    /// An equivalent matcher with no session state. Variables and actions
    /// are shared with `self`, search state is not.
    fn fresh(&self) -> Box<dyn Matcher<'a, A> + 'a>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Session {
    Closed,
    Open,
    Exhausted,
}

/// A stateful matcher over targets of type `A`.
pub struct Pattern<'a, A> {
    matcher: Box<dyn Matcher<'a, A> + 'a>,
    session: Session,
}

impl<'a, A> Pattern<'a, A> {
    pub fn new(matcher: impl Matcher<'a, A> + 'a) -> Self {
        Self::from_box(Box::new(matcher))
    }

    pub fn from_box(matcher: Box<dyn Matcher<'a, A> + 'a>) -> Self {
        Pattern {
            matcher,
            session: Session::Closed,
        }
    }

    /// Opens a new session against `target`, discarding any previous one.
    ///
    /// A failure raised by user code aborts the session and leaves the
    /// pattern exhausted.
    pub fn matches(&mut self, target: &A) -> Outcome {
        let result = self.matcher.start(target);
        self.session = match result {
            Ok(true) => Session::Open,
            _ => Session::Exhausted,
        };
        result
    }

    /// Searches for the next solution of the current session.
    ///
    /// Without an open session (never matched, or already exhausted) this
    /// returns `Ok(false)`.
    pub fn match_again(&mut self) -> Outcome {
        stats::record_match_again();
        if self.session != Session::Open {
            return Ok(false);
        }
        let result = self.matcher.resume();
        if !matches!(result, Ok(true)) {
            self.session = Session::Exhausted;
        }
        result
    }

    /// An unmatched copy with the same structure, sharing variables and
    /// actions.
    pub fn fresh(&self) -> Self {
        Self::from_box(self.matcher.fresh())
    }

    /// Whether the current session has been drained (or aborted).
    pub fn is_exhausted(&self) -> bool {
        self.session == Session::Exhausted
    }

    /// Counts the solutions against `target` by draining a session.
    pub fn count_solutions(&mut self, target: &A) -> Result<usize, MatchFailure> {
        let mut n = 0;
        let mut ok = self.matches(target)?;
        while ok {
            n += 1;
            ok = self.match_again()?;
        }
        Ok(n)
    }
}

impl<'a, A: Clone + 'a> Pattern<'a, A> {
    /// Conjunction: for every solution of `self`, every solution of `other`
    /// against the same target (`other` varies fastest).
    pub fn and(self, other: impl Into<Pattern<'a, A>>) -> Self {
        Pattern::new(combinators::Conj::new(self, other.into()))
    }

    /// Disjunction: all solutions of `self`, then all solutions of `other`.
    pub fn or(self, other: impl Into<Pattern<'a, A>>) -> Self {
        Pattern::new(combinators::Disj::new(self, other.into()))
    }

    /// Runs `action` after every solution, on `matches` and `match_again`.
    pub fn and_then<R>(self, action: impl Fn() -> R + 'a) -> Self
    where
        R: IntoMatchResult<()>,
    {
        Pattern::new(control::AndThen::new(self, action))
    }

    /// Runs `action` once when the initial `matches` fails. Exhaustion
    /// through `match_again` does not run it.
    pub fn or_else<R>(self, action: impl Fn() -> R + 'a) -> Self
    where
        R: IntoMatchResult<()>,
    {
        Pattern::new(control::OrElse::new(self, action))
    }
}

impl<A> fmt::Debug for Pattern<'_, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Pattern")
            .field("session", &self.session)
            .finish_non_exhaustive()
    }
}

impl<'a, A: Clone + 'a> From<&Variable<A>> for Pattern<'a, A> {
    fn from(v: &Variable<A>) -> Self {
        v.pattern()
    }
}

impl<'a, A: Clone + 'a> From<Variable<A>> for Pattern<'a, A> {
    fn from(v: Variable<A>) -> Self {
        v.pattern()
    }
}
