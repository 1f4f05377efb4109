//! Per-thread instrumentation of the backtracking protocol.

use std::cell::Cell;

thread_local! {
    static MATCH_AGAIN_CALLS: Cell<u64> = const { Cell::new(0) };
}

pub(super) fn record_match_again() {
    MATCH_AGAIN_CALLS.with(|c| c.set(c.get() + 1));
}

/// Number of [`Pattern::match_again`](super::Pattern::match_again) calls on
/// this thread since the last [`reset`], including those made internally
/// by combinators.
pub fn match_again_calls() -> u64 {
    MATCH_AGAIN_CALLS.with(Cell::get)
}

pub fn reset() {
    MATCH_AGAIN_CALLS.with(|c| c.set(0));
}
