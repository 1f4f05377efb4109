use std::rc::Rc;

use super::{IntoMatchResult, MatchFailure, Matcher, Outcome, Pattern};

type Action<'a> = Rc<dyn Fn() -> Result<(), MatchFailure> + 'a>;

fn action<'a, R: IntoMatchResult<()>>(f: impl Fn() -> R + 'a) -> Action<'a> {
    Rc::new(move || f().into_match_result())
}

pub(super) struct AndThen<'a, A> {
    inner: Pattern<'a, A>,
    action: Action<'a>,
}

impl<'a, A> AndThen<'a, A> {
    pub(super) fn new<R: IntoMatchResult<()>>(inner: Pattern<'a, A>, f: impl Fn() -> R + 'a) -> Self {
        AndThen {
            inner,
            action: action(f),
        }
    }

    fn after(&self, found: bool) -> Outcome {
        if found {
            (self.action)()?;
        }
        Ok(found)
    }
}

impl<'a, A: 'a> Matcher<'a, A> for AndThen<'a, A> {
    fn start(&mut self, target: &A) -> Outcome {
        let found = self.inner.matches(target)?;
        self.after(found)
    }

    fn resume(&mut self) -> Outcome {
        let found = self.inner.match_again()?;
        self.after(found)
    }

    fn fresh(&self) -> Box<dyn Matcher<'a, A> + 'a> {
        Box::new(AndThen {
            inner: self.inner.fresh(),
            action: Rc::clone(&self.action),
        })
    }
}

pub(super) struct OrElse<'a, A> {
    inner: Pattern<'a, A>,
    action: Action<'a>,
}

impl<'a, A> OrElse<'a, A> {
    pub(super) fn new<R: IntoMatchResult<()>>(inner: Pattern<'a, A>, f: impl Fn() -> R + 'a) -> Self {
        OrElse {
            inner,
            action: action(f),
        }
    }
}

impl<'a, A: 'a> Matcher<'a, A> for OrElse<'a, A> {
    fn start(&mut self, target: &A) -> Outcome {
        if self.inner.matches(target)? {
            return Ok(true);
        }
        (self.action)()?;
        Ok(false)
    }

    // exhaustion is not an initial failure: no else-branch here
    fn resume(&mut self) -> Outcome {
        self.inner.match_again()
    }

    fn fresh(&self) -> Box<dyn Matcher<'a, A> + 'a> {
        Box::new(OrElse {
            inner: self.inner.fresh(),
            action: Rc::clone(&self.action),
        })
    }
}

/// Clause operator: matches `target` and runs `action` on success.
///
/// Equivalent to `pattern.and_then(action).matches(target)`.
pub fn test_then<'a, A, R>(target: &A, pattern: Pattern<'a, A>, action: impl Fn() -> R + 'a) -> Outcome
where
    A: Clone + 'a,
    R: IntoMatchResult<()>,
{
    pattern.and_then(action).matches(target)
}

/// Runs `action` and reports success, for the last clause of a `||` chain.
pub fn otherwise<R: IntoMatchResult<()>>(action: impl FnOnce() -> R) -> Outcome {
    action().into_match_result()?;
    Ok(true)
}

/// Turns a clause result back into a statement; `false` raises
/// [`MatchFailure::Ensure`].
pub fn ensure(success: bool) -> Result<(), MatchFailure> {
    if success {
        Ok(())
    } else {
        Err(MatchFailure::Ensure)
    }
}
