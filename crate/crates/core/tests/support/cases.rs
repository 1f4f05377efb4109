//! Four equivalent ways of telling apart lists of zero, one, two, and three
//! or more elements: clause operators or pattern wrappers, written as
//! statements or as expressions.

use std::cell::RefCell;

use sxq::lists::{pair_cont, pair_then};
use sxq::pattern::{ensure, otherwise};
use sxq::{MatchFailure, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Case {
    Zero,
    One(Value),
    Two(Value, Value),
    ThreeOrMore(Value, Value, Value),
}

#[derive(Debug, Default)]
pub struct CaseLog(RefCell<Vec<Case>>);

impl CaseLog {
    pub fn case0(&self) {
        self.0.borrow_mut().push(Case::Zero);
    }

    pub fn case1(&self, x: &Value) {
        self.0.borrow_mut().push(Case::One(x.clone()));
    }

    pub fn case2(&self, x: &Value, y: &Value) {
        self.0.borrow_mut().push(Case::Two(x.clone(), y.clone()));
    }

    pub fn case3(&self, x: &Value, y: &Value, z: &Value) {
        self.0.borrow_mut().push(Case::ThreeOrMore(x.clone(), y.clone(), z.clone()));
    }

    pub fn take(&self) -> Vec<Case> {
        self.0.take()
    }
}

pub type Style = fn(&Value, &CaseLog) -> Result<(), MatchFailure>;

pub const STYLES: [(&str, Style); 4] = [
    ("clause operators, statements", clause_statements),
    ("clause operators, expressions", clause_expressions),
    ("pattern wrappers, statements", wrapper_statements),
    ("pattern wrappers, expressions", wrapper_expressions),
];

pub fn clause_statements(list1: &Value, log: &CaseLog) -> Result<(), MatchFailure> {
    if !pair_then(list1, |x, list2| {
        if !pair_then(&list2, |y, list3| {
            if !pair_then(&list3, |z, _list4| log.case3(&x, &y, &z))? {
                log.case2(&x, &y);
            }
            Ok(())
        })? {
            log.case1(&x);
        }
        Ok(())
    })? {
        log.case0();
    }
    Ok(())
}

pub fn clause_expressions(list1: &Value, log: &CaseLog) -> Result<(), MatchFailure> {
    ensure(
        pair_then(list1, |x, list2| {
            ensure(
                pair_then(&list2, |y, list3| {
                    ensure(
                        pair_then(&list3, |z, _list4| log.case3(&x, &y, &z))? || otherwise(|| log.case2(&x, &y))?,
                    )
                })? || otherwise(|| log.case1(&x))?,
            )
        })? || otherwise(|| log.case0())?,
    )
}

pub fn wrapper_statements(list1: &Value, log: &CaseLog) -> Result<(), MatchFailure> {
    if !pair_cont(|x, list2| {
        if !pair_cont(|y, list3| {
            if !pair_cont(|z, _list4| log.case3(&x, &y, &z)).matches(&list3)? {
                log.case2(&x, &y);
            }
            Ok(())
        })
        .matches(&list2)?
        {
            log.case1(&x);
        }
        Ok(())
    })
    .matches(list1)?
    {
        log.case0();
    }
    Ok(())
}

pub fn wrapper_expressions(list1: &Value, log: &CaseLog) -> Result<(), MatchFailure> {
    pair_cont(|x, list2| {
        pair_cont(|y, list3| {
            pair_cont(|z, _list4| log.case3(&x, &y, &z))
                .or_else(|| log.case2(&x, &y))
                .matches(&list3)
        })
        .or_else(|| log.case1(&x))
        .matches(&list2)
    })
    .or_else(|| log.case0())
    .matches(list1)
    .map(drop)
}

/// The case a list should select, computed by walking it directly.
pub fn expected_case(list: &Value) -> Case {
    let items = super::elements(list);
    match items.as_slice() {
        [] => Case::Zero,
        [x] => Case::One(x.clone()),
        [x, y] => Case::Two(x.clone(), y.clone()),
        [x, y, z, ..] => Case::ThreeOrMore(x.clone(), y.clone(), z.clone()),
    }
}
