use std::cell::RefCell;
use std::fmt;
use std::rc::Rc;
use std::sync::atomic::{AtomicUsize, Ordering};

use super::{MatchFailure, Matcher, Outcome, Pattern};

static ANONYMOUS: AtomicUsize = AtomicUsize::new(0);

/// A binding variable: matches every target exactly once and records it.
///
/// Cloning a `Variable` yields another handle to the same binding. A
/// variable keeps its most recent binding; after a failed match the value
/// is whatever was bound last and should not be relied upon.
pub struct Variable<A> {
    name: Rc<str>,
    value: Rc<RefCell<Option<A>>>,
}

impl<A> Variable<A> {
    pub fn new() -> Self {
        let id = ANONYMOUS.fetch_add(1, Ordering::Relaxed);
        Self::named(&format!("_{id}"))
    }

    pub fn named(name: &str) -> Self {
        Variable {
            name: Rc::from(name),
            value: Rc::new(RefCell::new(None)),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_bound(&self) -> bool {
        self.value.borrow().is_some()
    }
}

impl<A: Clone> Variable<A> {
    /// The bound value, or [`MatchFailure::Unbound`] if no match has ever
    /// bound this variable.
    pub fn get_value(&self) -> Result<A, MatchFailure> {
        self.value.borrow().clone().ok_or_else(|| MatchFailure::Unbound {
            name: self.name.to_string(),
        })
    }

    pub fn pattern<'a>(&self) -> Pattern<'a, A>
    where
        A: 'a,
    {
        Pattern::new(self.clone())
    }
}

impl<A> Default for Variable<A> {
    fn default() -> Self {
        Self::new()
    }
}

impl<A> Clone for Variable<A> {
    fn clone(&self) -> Self {
        Variable {
            name: Rc::clone(&self.name),
            value: Rc::clone(&self.value),
        }
    }
}

impl<A: fmt::Debug> fmt::Debug for Variable<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Variable")
            .field("name", &self.name)
            .field("value", &self.value.borrow())
            .finish()
    }
}

impl<'a, A: Clone + 'a> Matcher<'a, A> for Variable<A> {
    fn start(&mut self, target: &A) -> Outcome {
        *self.value.borrow_mut() = Some(target.clone());
        Ok(true)
    }

    fn resume(&mut self) -> Outcome {
        Ok(false)
    }

    fn fresh(&self) -> Box<dyn Matcher<'a, A> + 'a> {
        Box::new(self.clone())
    }
}
