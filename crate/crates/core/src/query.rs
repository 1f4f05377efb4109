//! A textual pattern language over s-expressions.
//!
//! Queries are s-expressions themselves:
//!
//! | syntax               | meaning                                   |
//! |----------------------|-------------------------------------------|
//! | `_`                  | anything                                  |
//! | `?name`              | bind (or, if already bound, compare)      |
//! | other atom           | that literal value                        |
//! | `()`                 | the empty list                            |
//! | `(p q . r)`          | list template, optionally dotted          |
//! | `(%or p q ...)`      | any branch, in order                      |
//! | `(%and p q ...)`     | all branches                              |
//! | `(%suffix p)`        | some iterated cdr (including the target)  |
//! | `(%elem p)`          | some list element                         |
//!
//! Symbols starting with `%` are reserved in head position.

use std::cell::{Cell, RefCell};
use std::fmt;
use std::rc::Rc;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::lists::{is_empty, nth, nthcdr, pair};
use crate::pattern::{any, eq, Matcher, Outcome, Pattern};
use crate::reader::{read_syntax, ReadError, SourcePosition, Syntax, SyntaxNode};
use crate::value::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryAst {
    Wildcard,
    Var(String),
    Literal(Value),
    Pair(Box<QueryAst>, Box<QueryAst>),
    Empty,
    Or(Vec<QueryAst>),
    And(Vec<QueryAst>),
    Suffix(Box<QueryAst>),
    Elem(Box<QueryAst>),
}

impl QueryAst {
    pub fn pair(car: QueryAst, cdr: QueryAst) -> QueryAst {
        QueryAst::Pair(Box::new(car), Box::new(cdr))
    }

    pub fn var(name: &str) -> QueryAst {
        QueryAst::Var(name.to_string())
    }

    /// Variable names in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        fn walk(ast: &QueryAst, out: &mut Vec<String>) {
            match ast {
                QueryAst::Var(n) if !out.contains(n) => out.push(n.clone()),
                QueryAst::Pair(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                QueryAst::Or(bs) | QueryAst::And(bs) => bs.iter().for_each(|b| walk(b, out)),
                QueryAst::Suffix(p) | QueryAst::Elem(p) => walk(p, out),
                _ => {}
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

/// Renders back to query syntax.
impl fmt::Display for QueryAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn ops(f: &mut fmt::Formatter<'_>, head: &str, args: &[&QueryAst]) -> fmt::Result {
            write!(f, "({head}")?;
            for a in args {
                write!(f, " {a}")?;
            }
            f.write_str(")")
        }
        match self {
            QueryAst::Wildcard => f.write_str("_"),
            QueryAst::Var(n) => write!(f, "?{n}"),
            QueryAst::Literal(v) => write!(f, "{v}"),
            QueryAst::Empty => f.write_str("()"),
            QueryAst::Or(bs) => ops(f, "%or", &bs.iter().collect::<Vec<_>>()),
            QueryAst::And(bs) => ops(f, "%and", &bs.iter().collect::<Vec<_>>()),
            QueryAst::Suffix(p) => ops(f, "%suffix", &[p]),
            QueryAst::Elem(p) => ops(f, "%elem", &[p]),
            QueryAst::Pair(car, cdr) => {
                write!(f, "({car}")?;
                let mut rest: &QueryAst = cdr;
                loop {
                    match rest {
                        QueryAst::Empty => break,
                        QueryAst::Pair(a, d) => {
                            write!(f, " {a}")?;
                            rest = d;
                        }
                        tail => {
                            write!(f, " . {tail}")?;
                            break;
                        }
                    }
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QueryError {
    #[error(transparent)]
    Read(#[from] ReadError),
    #[error("{position}: {message}")]
    Syntax { position: SourcePosition, message: String },
}

impl QueryError {
    pub fn position(&self) -> SourcePosition {
        match self {
            QueryError::Read(e) => e.position,
            QueryError::Syntax { position, .. } => *position,
        }
    }

    fn at(position: SourcePosition, message: impl Into<String>) -> Self {
        QueryError::Syntax { position, message: message.into() }
    }
}

pub fn parse_query(text: &str) -> Result<QueryAst, QueryError> {
    convert(&read_syntax(text)?)
}

fn valid_symbol_name(name: &str) -> bool {
    // must read back as a symbol
    !name.is_empty() && name != "." && matches!(crate::reader::read(name), Ok(Value::Symbol(_)))
}

fn convert(syntax: &Syntax) -> Result<QueryAst, QueryError> {
    match &syntax.node {
        SyntaxNode::Atom(Value::Symbol(s)) if &**s == "_" => Ok(QueryAst::Wildcard),
        SyntaxNode::Atom(Value::Symbol(s)) if s.starts_with('?') => {
            let name = &s[1..];
            if valid_symbol_name(name) {
                Ok(QueryAst::var(name))
            } else {
                Err(QueryError::at(syntax.position, format!("malformed variable `{s}`")))
            }
        }
        SyntaxNode::Atom(v) => Ok(QueryAst::Literal(v.clone())),
        SyntaxNode::List { items, tail } => {
            if let Some(Syntax { node: SyntaxNode::Atom(Value::Symbol(head)), .. }) = items.first() {
                if head.starts_with('%') {
                    return operator(syntax.position, head, &items[1..], tail.is_some());
                }
            }
            let tail = match tail {
                Some(t) => convert(t)?,
                None => QueryAst::Empty,
            };
            items
                .iter()
                .rev()
                .try_fold(tail, |cdr, item| Ok(QueryAst::pair(convert(item)?, cdr)))
        }
    }
}

fn operator(position: SourcePosition, head: &str, args: &[Syntax], dotted: bool) -> Result<QueryAst, QueryError> {
    if dotted {
        return Err(QueryError::at(position, format!("operator form `{head}` cannot be dotted")));
    }
    let n = args.len();
    let operands = || args.iter().map(convert).collect::<Result<Vec<_>, _>>();
    match head {
        "%or" | "%and" => {
            if n < 2 {
                return Err(QueryError::at(
                    position,
                    format!("`{head}` takes at least 2 operands, got {n}"),
                ));
            }
            Ok(if head == "%or" { QueryAst::Or(operands()?) } else { QueryAst::And(operands()?) })
        }
        "%suffix" | "%elem" => {
            if n != 1 {
                return Err(QueryError::at(position, format!("`{head}` takes exactly 1 operand, got {n}")));
            }
            let inner = Box::new(operands()?.remove(0));
            Ok(if head == "%suffix" { QueryAst::Suffix(inner) } else { QueryAst::Elem(inner) })
        }
        _ => Err(QueryError::at(position, format!("unknown operator `{head}`"))),
    }
}

/// Variable bindings of one solution, in the order they were bound.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BindingSet(Vec<(String, Value)>);

impl BindingSet {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Value)> {
        self.0.iter().map(|(n, v)| (n.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(String, Value)> for BindingSet {
    fn from_iter<I: IntoIterator<Item = (String, Value)>>(iter: I) -> Self {
        BindingSet(iter.into_iter().collect())
    }
}

/// `name=value` pairs separated by single spaces.
impl fmt::Display for BindingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, value)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{name}={value}")?;
        }
        Ok(())
    }
}

/// A JSON object of canonically printed values.
impl Serialize for BindingSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, value) in &self.0 {
            map.serialize_entry(name, &value.to_string())?;
        }
        map.end()
    }
}

#[derive(Debug)]
struct Binding {
    value: Value,
    owner: u64,
    order: u64,
}

#[derive(Debug)]
struct Slot {
    name: String,
    binding: RefCell<Option<Binding>>,
}

/// Shared binding environment of one compiled query.
#[derive(Debug)]
struct Env {
    slots: Vec<Slot>,
    clock: Cell<u64>,
}

impl Env {
    fn clear(&self) {
        for slot in &self.slots {
            slot.binding.take();
        }
    }

    fn snapshot(&self) -> BindingSet {
        let mut bound: Vec<_> = self
            .slots
            .iter()
            .filter_map(|s| s.binding.borrow().as_ref().map(|b| (b.order, s.name.clone(), b.value.clone())))
            .collect();
        bound.sort_by_key(|(order, _, _)| *order);
        bound.into_iter().map(|(_, n, v)| (n, v)).collect()
    }
}

static OCCURRENCE_IDS: AtomicU64 = AtomicU64::new(1);

/// One occurrence of a query variable.
///
/// The first occurrence reached on a search path binds the variable and
/// owns that binding until it is backtracked over; occurrences reached
/// while the variable is bound only compare.
struct Occurrence {
    env: Rc<Env>,
    slot: usize,
    id: u64,
}

impl Occurrence {
    fn new(env: Rc<Env>, slot: usize) -> Self {
        Occurrence { env, slot, id: OCCURRENCE_IDS.fetch_add(1, Ordering::Relaxed) }
    }

    fn release(&self) {
        let mut binding = self.env.slots[self.slot].binding.borrow_mut();
        if binding.as_ref().is_some_and(|b| b.owner == self.id) {
            *binding = None;
        }
    }
}

impl<'a> Matcher<'a, Value> for Occurrence {
    fn start(&mut self, target: &Value) -> Outcome {
        self.release();
        let mut binding = self.env.slots[self.slot].binding.borrow_mut();
        if let Some(b) = binding.as_ref() {
            return Ok(b.value == *target);
        }
        let order = self.env.clock.get();
        self.env.clock.set(order + 1);
        *binding = Some(Binding { value: target.clone(), owner: self.id, order });
        Ok(true)
    }

    fn resume(&mut self) -> Outcome {
        self.release();
        Ok(false)
    }

    fn fresh(&self) -> Box<dyn Matcher<'a, Value> + 'a> {
        Box::new(Occurrence::new(Rc::clone(&self.env), self.slot))
    }
}

/// A query compiled to a pattern, with its variable table.
pub struct CompiledQuery {
    pattern: Pattern<'static, Value>,
    env: Rc<Env>,
}

impl fmt::Debug for CompiledQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CompiledQuery").field("variables", &self.variables()).finish()
    }
}

pub fn compile_query(ast: &QueryAst) -> CompiledQuery {
    let env = Rc::new(Env {
        slots: ast
            .variables()
            .into_iter()
            .map(|name| Slot { name, binding: RefCell::new(None) })
            .collect(),
        clock: Cell::new(0),
    });
    CompiledQuery { pattern: build(ast, &env), env }
}

fn build(ast: &QueryAst, env: &Rc<Env>) -> Pattern<'static, Value> {
    match ast {
        QueryAst::Wildcard => any(),
        QueryAst::Var(name) => {
            let slot = env.slots.iter().position(|s| &s.name == name).expect("variable table covers the query");
            Pattern::new(Occurrence::new(Rc::clone(env), slot))
        }
        QueryAst::Literal(v) => eq(v.clone()),
        QueryAst::Empty => is_empty(),
        QueryAst::Pair(car, cdr) => pair(build(car, env), build(cdr, env)),
        QueryAst::Or(branches) => chain(branches, env, Pattern::or),
        QueryAst::And(branches) => chain(branches, env, Pattern::and),
        QueryAst::Suffix(inner) => nthcdr().apply(build(inner, env)),
        QueryAst::Elem(inner) => nth().apply(build(inner, env)),
    }
}

fn chain(
    branches: &[QueryAst],
    env: &Rc<Env>,
    join: fn(Pattern<'static, Value>, Pattern<'static, Value>) -> Pattern<'static, Value>,
) -> Pattern<'static, Value> {
    let mut it = branches.iter().map(|b| build(b, env));
    let first = it.next().expect("operator forms have operands");
    it.fold(first, join)
}

impl CompiledQuery {
    pub fn variables(&self) -> Vec<&str> {
        self.env.slots.iter().map(|s| s.name.as_str()).collect()
    }

    /// Starts a session against `target`; bindings from earlier sessions
    /// are cleared first.
    pub fn matches(&mut self, target: &Value) -> bool {
        self.env.clear();
        self.pattern.matches(target).expect(NO_USER_CODE)
    }

    pub fn match_again(&mut self) -> bool {
        self.pattern.match_again().expect(NO_USER_CODE)
    }

    /// Bindings of the current solution.
    pub fn bindings(&self) -> BindingSet {
        self.env.snapshot()
    }

    pub fn first(&mut self, target: &Value) -> Option<BindingSet> {
        self.matches(target).then(|| self.bindings())
    }

    /// Drains the session, snapshotting every solution (at most `max`).
    pub fn collect_bindings(&mut self, target: &Value, max: Option<usize>) -> Vec<BindingSet> {
        let limit = max.unwrap_or(usize::MAX);
        let mut out = Vec::new();
        if limit == 0 {
            return out;
        }
        let mut found = self.matches(target);
        while found {
            out.push(self.bindings());
            if out.len() >= limit {
                break;
            }
            found = self.match_again();
        }
        out
    }
}

const NO_USER_CODE: &str = "compiled queries run no user code and cannot raise match failures";

/// Parses, compiles and drains `query` against `target`.
pub fn collect_bindings(query: &str, target: &Value, max: Option<usize>) -> Result<Vec<BindingSet>, QueryError> {
    Ok(compile_query(&parse_query(query)?).collect_bindings(target, max))
}
