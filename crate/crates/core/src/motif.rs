//! Pattern transformers.
//!
//! A `Motif<'a, A, B>` turns a pattern over `A` into a pattern over `B`. The
//! basic way to obtain one is to lift a projection `B -> A` with
//! [`transform`]; motifs then compose with [`Motif::then`] and iterate with
//! [`star`] and [`plus`].

use std::fmt;
use std::rc::Rc;

use crate::pattern::{Deferred, MatchFailure, Matcher, Outcome, Pattern, Variable};

type Lift<'a, A, B> = Rc<dyn Fn(Pattern<'a, A>) -> Pattern<'a, B> + 'a>;
type Projection<'a, A, B> = Rc<dyn Fn(&B) -> Option<A> + 'a>;

/// An immutable transformer from patterns over `A` to patterns over `B`.
pub struct Motif<'a, A, B> {
    name: Rc<str>,
    lift: Lift<'a, A, B>,
}

impl<'a, A: 'a, B: 'a> Motif<'a, A, B> {
    pub fn new(name: &str, lift: impl Fn(Pattern<'a, A>) -> Pattern<'a, B> + 'a) -> Self {
        Motif {
            name: Rc::from(name),
            lift: Rc::new(lift),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: &str) -> Self {
        Motif {
            name: Rc::from(name),
            lift: Rc::clone(&self.lift),
        }
    }

    pub fn apply(&self, pattern: impl Into<Pattern<'a, A>>) -> Pattern<'a, B> {
        (self.lift)(pattern.into())
    }

    /// Composition: `self.then(inner).apply(p) == self.apply(inner.apply(p))`.
    pub fn then<C: 'a>(&self, inner: &Motif<'a, C, A>) -> Motif<'a, C, B> {
        let outer = self.clone();
        let inner = inner.clone();
        Motif::new(&format!("{}.{}", outer.name, inner.name), move |p| {
            outer.apply(inner.apply(p))
        })
    }
}

impl<'a, A: Clone + 'a, B: Clone + 'a> Motif<'a, A, B> {
    /// All bindings of a fresh variable under this motif, in solution order.
    pub fn eager_bindings(&self, target: &B) -> Result<Vec<A>, MatchFailure> {
        self.lazy_bindings(target).collect()
    }

    /// Bindings produced one solution at a time as the iterator is pulled.
    pub fn lazy_bindings(&self, target: &B) -> Bindings<'a, A, B> {
        let var = Variable::new();
        Bindings {
            pattern: self.apply(&var),
            var,
            target: Some(target.clone()),
            done: false,
        }
    }
}

impl<A, B> Clone for Motif<'_, A, B> {
    fn clone(&self) -> Self {
        Motif {
            name: Rc::clone(&self.name),
            lift: Rc::clone(&self.lift),
        }
    }
}

impl<A, B> fmt::Debug for Motif<'_, A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Motif({})", self.name)
    }
}

/// Iterator over the bindings of an encapsulated search.
///
/// Each `next` advances the underlying session by one solution. The
/// iterator is fused: after the first `None` or error it stays empty.
pub struct Bindings<'a, A, B> {
    pattern: Pattern<'a, B>,
    var: Variable<A>,
    target: Option<B>,
    done: bool,
}

impl<'a, A: Clone + 'a, B: 'a> Iterator for Bindings<'a, A, B> {
    type Item = Result<A, MatchFailure>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let step = match self.target.take() {
            Some(target) => self.pattern.matches(&target),
            None => self.pattern.match_again(),
        };
        match step {
            Ok(true) => Some(self.var.get_value()),
            Ok(false) => {
                self.done = true;
                None
            }
            Err(e) => {
                self.done = true;
                Some(Err(e))
            }
        }
    }
}

impl<'a, A: Clone + 'a, B: 'a> std::iter::FusedIterator for Bindings<'a, A, B> {}

/// The identity motif.
pub fn identity<'a, A: 'a>() -> Motif<'a, A, A> {
    Motif::new("id", |p| p)
}

/// Lifts a total projection `B -> A`.
pub fn transform<'a, A, B>(project: impl Fn(&B) -> A + 'a) -> Motif<'a, A, B>
where
    A: 'a,
    B: 'a,
{
    transform_partial(move |b: &B| Some(project(b)))
}

/// Lifts a partial projection; where it yields `None` the lifted pattern
/// has no solutions.
pub fn transform_partial<'a, A, B>(project: impl Fn(&B) -> Option<A> + 'a) -> Motif<'a, A, B>
where
    A: 'a,
    B: 'a,
{
    let project: Projection<'a, A, B> = Rc::new(project);
    Motif::new("transform", move |inner| {
        Pattern::new(Projected {
            project: Rc::clone(&project),
            inner,
        })
    })
}

struct Projected<'a, A, B> {
    project: Projection<'a, A, B>,
    inner: Pattern<'a, A>,
}

impl<'a, A: 'a, B: 'a> Matcher<'a, B> for Projected<'a, A, B> {
    fn start(&mut self, target: &B) -> Outcome {
        match (self.project)(target) {
            Some(view) => self.inner.matches(&view),
            None => Ok(false),
        }
    }

    fn resume(&mut self) -> Outcome {
        self.inner.match_again()
    }

    fn fresh(&self) -> Box<dyn Matcher<'a, B> + 'a> {
        Box::new(Projected {
            project: Rc::clone(&self.project),
            inner: self.inner.fresh(),
        })
    }
}

/// Zero or more iterations of `step`.
///
/// Solutions come in depth-first pre-order: the inner pattern against the
/// target itself, then everything reachable through the first solution of
/// one `step`, and so on. Deeper levels are only built when reached. There
/// is no cycle detection; see [`star_bounded`].
pub fn star<'a, A: Clone + 'a>(step: &Motif<'a, A, A>) -> Motif<'a, A, A> {
    iterate(step, None, format!("star({})", step.name()))
}

/// Like [`star`] but never iterates `step` more than `max_depth` times.
pub fn star_bounded<'a, A: Clone + 'a>(step: &Motif<'a, A, A>, max_depth: usize) -> Motif<'a, A, A> {
    iterate(step, Some(max_depth), format!("star{max_depth}({})", step.name()))
}

/// One or more iterations of `step`: `step.apply(star(step).apply(p))`.
pub fn plus<'a, A: Clone + 'a>(step: &Motif<'a, A, A>) -> Motif<'a, A, A> {
    step.then(&star(step)).renamed(&format!("plus({})", step.name()))
}

fn iterate<'a, A: Clone + 'a>(step: &Motif<'a, A, A>, limit: Option<usize>, name: String) -> Motif<'a, A, A> {
    let step = step.clone();
    Motif::new(&name, move |p| unroll(&step, p, limit))
}

fn unroll<'a, A: Clone + 'a>(step: &Motif<'a, A, A>, here: Pattern<'a, A>, limit: Option<usize>) -> Pattern<'a, A> {
    if limit == Some(0) {
        return here;
    }
    let template = here.fresh();
    let step = step.clone();
    let deeper = Deferred::new(move || {
        step.apply(unroll(&step, template.fresh(), limit.map(|d| d - 1)))
    });
    here.or(Pattern::new(deeper))
}
