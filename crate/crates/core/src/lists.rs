//! Patterns, motifs and clause operators for s-expression lists.

use crate::motif::{star, transform, transform_partial, Motif};
use crate::pattern::{eq, test, test_then, IntoMatchResult, Outcome, Pattern, Variable};
use crate::value::{PairView, Value};

pub fn is_pair<'a>() -> Pattern<'a, Value> {
    test(Value::is_pair)
}

pub fn is_empty<'a>() -> Pattern<'a, Value> {
    eq(Value::Empty)
}

/// Views a value as a pair; fails on anything else.
pub fn as_pair<'a>() -> Motif<'a, PairView, Value> {
    transform_partial(|v: &Value| v.as_pair().cloned()).renamed("as_pair")
}

pub fn car_proj<'a>() -> Motif<'a, Value, PairView> {
    transform(|p: &PairView| p.car.clone()).renamed("car")
}

pub fn cdr_proj<'a>() -> Motif<'a, Value, PairView> {
    transform(|p: &PairView| p.cdr.clone()).renamed("cdr")
}

/// Inverse of `cons`: matches pairs whose car matches `pcar` and whose cdr
/// matches `pcdr`.
pub fn pair<'a>(pcar: impl Into<Pattern<'a, Value>>, pcdr: impl Into<Pattern<'a, Value>>) -> Pattern<'a, Value> {
    as_pair().apply(car_proj().apply(pcar).and(cdr_proj().apply(pcdr)))
}

pub fn pair_car<'a>() -> Motif<'a, Value, Value> {
    as_pair().then(&car_proj()).renamed("pair_car")
}

pub fn pair_cdr<'a>() -> Motif<'a, Value, Value> {
    as_pair().then(&cdr_proj()).renamed("pair_cdr")
}

/// The value itself and every iterated cdr of it, outermost first.
pub fn nthcdr<'a>() -> Motif<'a, Value, Value> {
    star(&pair_cdr()).renamed("nthcdr")
}

/// Every element of a list, in order.
pub fn nth<'a>() -> Motif<'a, Value, Value> {
    nthcdr().then(&pair_car()).renamed("nth")
}

/// Proper lists of exactly three elements.
pub fn triple<'a>(
    x: impl Into<Pattern<'a, Value>>,
    y: impl Into<Pattern<'a, Value>>,
    z: impl Into<Pattern<'a, Value>>,
) -> Pattern<'a, Value> {
    pair(x, pair(y, pair(z, is_empty())))
}

/// Proper lists of exactly one element.
pub fn singleton<'a>(x: impl Into<Pattern<'a, Value>>) -> Pattern<'a, Value> {
    pair(x, is_empty())
}

pub fn singleton_then<'a, R: IntoMatchResult<()>>(target: &Value, action: impl Fn() -> R + 'a) -> Outcome {
    test_then(target, singleton(crate::pattern::any()), action)
}

/// Clause operator: if `target` is a pair, passes its car and cdr to
/// `cont` and reports success.
pub fn pair_then<R: IntoMatchResult<()>>(target: &Value, cont: impl FnOnce(Value, Value) -> R) -> Outcome {
    let car = Variable::named("car");
    let cdr = Variable::named("cdr");
    if pair(&car, &cdr).matches(target)? {
        cont(car.get_value()?, cdr.get_value()?).into_match_result()?;
        Ok(true)
    } else {
        Ok(false)
    }
}

/// Clause operator without data flow.
pub fn pair_then_simple<R: IntoMatchResult<()>>(target: &Value, action: impl FnOnce() -> R) -> Outcome {
    if is_pair().matches(target)? {
        action().into_match_result()?;
        Ok(true)
    } else {
        Ok(false)
    }
}

/// Pattern wrapper around [`pair_then`], for use with `matches` and
/// `or_else`.
pub fn pair_cont<'a, R: IntoMatchResult<()>>(cont: impl Fn(Value, Value) -> R + 'a) -> Pattern<'a, Value> {
    test(move |v: &Value| pair_then(v, &cont))
}

pub fn pair_cont_simple<'a, R: IntoMatchResult<()>>(action: impl Fn() -> R + 'a) -> Pattern<'a, Value> {
    test(move |v: &Value| pair_then_simple(v, &action))
}
