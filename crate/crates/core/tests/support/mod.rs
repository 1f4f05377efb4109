//! Independent oracles and generators shared by the integration tests.
//!
//! Nothing here goes through the pattern machinery: the oracles walk
//! `Value`s directly.

#![allow(dead_code)]

pub mod cases;
pub mod golden;

use rand::rngs::StdRng;
use rand::Rng;
use sxq::query::{BindingSet, QueryAst};
use sxq::Value;

pub fn v(text: &str) -> Value {
    sxq::read(text).unwrap()
}

/// The target and every iterated cdr, stopping after the first non-pair.
pub fn suffixes(target: &Value) -> Vec<Value> {
    let mut out = vec![target.clone()];
    let mut cur = target.clone();
    while let Value::Pair(p) = cur {
        cur = p.cdr.clone();
        out.push(cur.clone());
    }
    out
}

/// The cars of every pair reachable through cdrs.
pub fn elements(target: &Value) -> Vec<Value> {
    let mut out = Vec::new();
    let mut cur = target;
    while let Value::Pair(p) = cur {
        out.push(p.car.clone());
        cur = &p.cdr;
    }
    out
}

pub fn proper_len(target: &Value) -> Option<usize> {
    let mut n = 0;
    let mut cur = target;
    loop {
        match cur {
            Value::Empty => return Some(n),
            Value::Pair(p) => {
                n += 1;
                cur = &p.cdr;
            }
            _ => return None,
        }
    }
}

pub type Env = Vec<(String, Value)>;

/// Direct recursive interpreter of the query language: every solution as
/// an environment in binding order.
pub fn interpret(query: &QueryAst, target: &Value, env: &Env) -> Vec<Env> {
    match query {
        QueryAst::Wildcard => vec![env.clone()],
        QueryAst::Var(name) => match env.iter().find(|(n, _)| n == name) {
            Some((_, bound)) if bound == target => vec![env.clone()],
            Some(_) => vec![],
            None => {
                let mut e = env.clone();
                e.push((name.clone(), target.clone()));
                vec![e]
            }
        },
        QueryAst::Literal(lit) => {
            if lit == target {
                vec![env.clone()]
            } else {
                vec![]
            }
        }
        QueryAst::Empty => {
            if *target == Value::Empty {
                vec![env.clone()]
            } else {
                vec![]
            }
        }
        QueryAst::Pair(car, cdr) => match target {
            Value::Pair(p) => interpret(car, &p.car, env)
                .iter()
                .flat_map(|e| interpret(cdr, &p.cdr, e))
                .collect(),
            _ => vec![],
        },
        QueryAst::Or(branches) => branches.iter().flat_map(|b| interpret(b, target, env)).collect(),
        QueryAst::And(branches) => branches.iter().fold(vec![env.clone()], |envs, b| {
            envs.iter().flat_map(|e| interpret(b, target, e)).collect()
        }),
        QueryAst::Suffix(inner) => suffixes(target).iter().flat_map(|s| interpret(inner, s, env)).collect(),
        QueryAst::Elem(inner) => elements(target).iter().flat_map(|x| interpret(inner, x, env)).collect(),
    }
}

pub fn oracle_bindings(query: &QueryAst, target: &Value) -> Vec<BindingSet> {
    interpret(query, target, &Vec::new())
        .into_iter()
        .map(|env| env.into_iter().collect())
        .collect()
}

/// Every value of pair-depth at most `depth` over the atoms `a`, `b`, `()`.
pub fn all_values(depth: usize) -> Vec<Value> {
    let atoms = vec![Value::sym("a"), Value::sym("b"), Value::Empty];
    if depth == 0 {
        return atoms;
    }
    let smaller = all_values(depth - 1);
    let mut out = atoms;
    for car in &smaller {
        for cdr in &smaller {
            out.push(Value::cons(car.clone(), cdr.clone()));
        }
    }
    out
}

/// Proper lists of each length up to `max_len` over `a` and `b`.
pub fn ab_lists(max_len: usize) -> Vec<Value> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        for bits in 0..(1u32 << len) {
            let items = (0..len).map(|i| Value::sym(if bits >> i & 1 == 1 { "b" } else { "a" }));
            out.push(Value::list(items.collect::<Vec<_>>()));
        }
    }
    out
}

/// A random value of pair-depth at most `depth` over a 2-symbol alphabet.
pub fn small_value(rng: &mut StdRng, depth: usize) -> Value {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..3) {
            0 => Value::sym("a"),
            1 => Value::sym("b"),
            _ => Value::Empty,
        };
    }
    if rng.gen_bool(0.5) {
        // proper list, so list templates have something to match
        let len = rng.gen_range(0..4);
        let items: Vec<_> = (0..len).map(|_| small_value(rng, depth - 1)).collect();
        let mut list = Value::Empty;
        for item in items.into_iter().rev() {
            list = Value::cons(item, list);
        }
        return trim_depth(list, depth);
    }
    Value::cons(small_value(rng, depth - 1), small_value(rng, depth - 1))
}

fn depth_of(v: &Value) -> usize {
    match v {
        Value::Pair(p) => 1 + depth_of(&p.car).max(depth_of(&p.cdr)),
        _ => 0,
    }
}

fn trim_depth(v: Value, depth: usize) -> Value {
    if depth_of(&v) <= depth {
        v
    } else {
        Value::Empty
    }
}

/// A random query of depth at most `depth`.
pub fn small_query(rng: &mut StdRng, depth: usize) -> QueryAst {
    let leaf = |rng: &mut StdRng| match rng.gen_range(0..6) {
        0 => QueryAst::Wildcard,
        1 => QueryAst::var("x"),
        2 => QueryAst::var("y"),
        3 => QueryAst::Literal(Value::sym("a")),
        4 => QueryAst::Literal(Value::sym("b")),
        _ => QueryAst::Empty,
    };
    if depth == 0 || rng.gen_bool(0.25) {
        return leaf(rng);
    }
    let sub = |rng: &mut StdRng| small_query(rng, depth - 1);
    match rng.gen_range(0..5) {
        0 => QueryAst::pair(sub(rng), sub(rng)),
        1 => {
            let n = rng.gen_range(2..4);
            QueryAst::Or((0..n).map(|_| sub(rng)).collect())
        }
        2 => {
            let n = rng.gen_range(2..4);
            QueryAst::And((0..n).map(|_| sub(rng)).collect())
        }
        3 => QueryAst::Suffix(Box::new(sub(rng))),
        _ => QueryAst::Elem(Box::new(sub(rng))),
    }
}

/// A random value of depth at most `depth` drawn from every atom kind.
pub fn any_value(rng: &mut StdRng, depth: usize) -> Value {
    if depth == 0 || rng.gen_bool(0.35) {
        return match rng.gen_range(0..6) {
            0 => {
                const FIRST: &[char] = &['a', 'z', 'Q', '+', '-', '*', '!', '?', '<', 'λ'];
                const REST: &[char] = &['a', 'b', '1', '-', '.', '#', '/', 'é'];
                let mut s = String::new();
                s.push(FIRST[rng.gen_range(0..FIRST.len())]);
                for _ in 0..rng.gen_range(0..4) {
                    s.push(REST[rng.gen_range(0..REST.len())]);
                }
                if sxq::value::Number::parse(&s).is_some() {
                    s.insert(0, 'k');
                }
                Value::sym(&s)
            }
            1 => Value::int(rng.gen_range(-1000..1000)),
            2 => {
                let text = format!("{}.{}", rng.gen_range(-99..100), rng.gen_range(0..1000));
                Value::Number(sxq::value::Number::parse(&text).unwrap())
            }
            3 => {
                const CHARS: &[char] = &['x', ' ', '"', '\\', '(', ')', ';', '\n', 'ü'];
                let s: String = (0..rng.gen_range(0..6)).map(|_| CHARS[rng.gen_range(0..CHARS.len())]).collect();
                Value::str(&s)
            }
            4 => Value::Bool(rng.gen_bool(0.5)),
            _ => Value::Empty,
        };
    }
    Value::cons(any_value(rng, depth - 1), any_value(rng, depth - 1))
}
