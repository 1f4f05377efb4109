use std::rc::Rc;

use super::{IntoMatchResult, Matcher, Outcome, Pattern};

type Predicate<'a, A> = Rc<dyn Fn(&A) -> Outcome + 'a>;

/// Succeeds once when `pred` holds for the target.
pub fn test<'a, A, R>(pred: impl Fn(&A) -> R + 'a) -> Pattern<'a, A>
where
    A: 'a,
    R: IntoMatchResult<bool>,
{
    Pattern::new(Test {
        pred: Rc::new(move |t: &A| pred(t).into_match_result()),
    })
}

/// Succeeds once on every target.
pub fn any<'a, A: 'a>() -> Pattern<'a, A> {
    test(|_: &A| true)
}

/// Never succeeds.
pub fn fail<'a, A: 'a>() -> Pattern<'a, A> {
    test(|_: &A| false)
}

/// Succeeds once on targets equal to `reference`.
pub fn eq<'a, A: PartialEq + 'a>(reference: A) -> Pattern<'a, A> {
    test(move |t: &A| *t == reference)
}

struct Test<'a, A> {
    pred: Predicate<'a, A>,
}

impl<'a, A: 'a> Matcher<'a, A> for Test<'a, A> {
    fn start(&mut self, target: &A) -> Outcome {
        (self.pred)(target)
    }

    fn resume(&mut self) -> Outcome {
        Ok(false)
    }

    fn fresh(&self) -> Box<dyn Matcher<'a, A> + 'a> {
        Box::new(Test {
            pred: Rc::clone(&self.pred),
        })
    }
}

pub(super) struct Conj<'a, A> {
    left: Pattern<'a, A>,
    right: Pattern<'a, A>,
    target: Option<A>,
}

impl<'a, A> Conj<'a, A> {
    pub(super) fn new(left: Pattern<'a, A>, right: Pattern<'a, A>) -> Self {
        Conj {
            left,
            right,
            target: None,
        }
    }
}

impl<'a, A: Clone + 'a> Conj<'a, A> {
    /// Restarts the right side for the current left solution, backtracking
    /// into the left side until the right one succeeds.
    fn settle(&mut self) -> Outcome {
        let target = self.target.as_ref().expect("conjunction session holds its target");
        loop {
            if self.right.matches(target)? {
                return Ok(true);
            }
            if !self.left.match_again()? {
                return Ok(false);
            }
        }
    }
}

impl<'a, A: Clone + 'a> Matcher<'a, A> for Conj<'a, A> {
    fn start(&mut self, target: &A) -> Outcome {
        self.target = Some(target.clone());
        if !self.left.matches(target)? {
            return Ok(false);
        }
        self.settle()
    }

    fn resume(&mut self) -> Outcome {
        if self.right.match_again()? {
            return Ok(true);
        }
        if !self.left.match_again()? {
            return Ok(false);
        }
        self.settle()
    }

    fn fresh(&self) -> Box<dyn Matcher<'a, A> + 'a> {
        Box::new(Conj::new(self.left.fresh(), self.right.fresh()))
    }
}

pub(super) struct Disj<'a, A> {
    left: Pattern<'a, A>,
    right: Pattern<'a, A>,
    target: Option<A>,
    on_right: bool,
}

impl<'a, A> Disj<'a, A> {
    pub(super) fn new(left: Pattern<'a, A>, right: Pattern<'a, A>) -> Self {
        Disj {
            left,
            right,
            target: None,
            on_right: false,
        }
    }
}

impl<'a, A: Clone + 'a> Matcher<'a, A> for Disj<'a, A> {
    fn start(&mut self, target: &A) -> Outcome {
        self.on_right = false;
        self.target = Some(target.clone());
        if self.left.matches(target)? {
            return Ok(true);
        }
        self.on_right = true;
        self.right.matches(target)
    }

    fn resume(&mut self) -> Outcome {
        if self.on_right {
            return self.right.match_again();
        }
        if self.left.match_again()? {
            return Ok(true);
        }
        self.on_right = true;
        let target = self.target.as_ref().expect("disjunction session holds its target");
        self.right.matches(target)
    }

    fn fresh(&self) -> Box<dyn Matcher<'a, A> + 'a> {
        Box::new(Disj::new(self.left.fresh(), self.right.fresh()))
    }
}

/// A pattern built on first use.
///
/// Recursive pattern definitions (such as the unrolling of Kleene star)
/// use this so that only as much structure exists as matching has demanded.
pub struct Deferred<'a, A> {
    build: Rc<dyn Fn() -> Pattern<'a, A> + 'a>,
    built: Option<Pattern<'a, A>>,
}

impl<'a, A: 'a> Deferred<'a, A> {
    pub fn new(build: impl Fn() -> Pattern<'a, A> + 'a) -> Self {
        Deferred {
            build: Rc::new(build),
            built: None,
        }
    }

    pub fn is_built(&self) -> bool {
        self.built.is_some()
    }
}

impl<'a, A: 'a> Matcher<'a, A> for Deferred<'a, A> {
    fn start(&mut self, target: &A) -> Outcome {
        let build = &self.build;
        self.built.get_or_insert_with(|| build()).matches(target)
    }

    fn resume(&mut self) -> Outcome {
        match &mut self.built {
            Some(p) => p.match_again(),
            None => Ok(false),
        }
    }

    fn fresh(&self) -> Box<dyn Matcher<'a, A> + 'a> {
        Box::new(Deferred {
            build: Rc::clone(&self.build),
            built: None,
        })
    }
}
