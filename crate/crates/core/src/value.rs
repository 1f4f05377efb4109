//! The s-expression data universe.

use std::fmt;
use std::rc::Rc;

/// An immutable s-expression value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Symbol(Rc<str>),
    Number(Number),
    Str(Rc<str>),
    Bool(bool),
    Pair(Rc<Pair>),
    Empty,
}

/// A cons cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pair {
    pub car: Value,
    pub cdr: Value,
}

/// The pair view exposed to patterns by `as_pair`.
pub type PairView = Rc<Pair>;

impl Value {
    pub fn sym(name: &str) -> Value {
        Value::Symbol(Rc::from(name))
    }

    pub fn str(text: &str) -> Value {
        Value::Str(Rc::from(text))
    }

    pub fn int(n: i64) -> Value {
        Value::Number(Number::from(n))
    }

    pub fn cons(car: Value, cdr: Value) -> Value {
        Value::Pair(Rc::new(Pair { car, cdr }))
    }

    /// A proper list of `items`.
    pub fn list(items: impl IntoIterator<Item = Value, IntoIter: DoubleEndedIterator>) -> Value {
        Self::dotted(items, Value::Empty)
    }

    /// A list of `items` ending in `tail` instead of the empty list.
    pub fn dotted(items: impl IntoIterator<Item = Value, IntoIter: DoubleEndedIterator>, tail: Value) -> Value {
        items.into_iter().rev().fold(tail, |cdr, car| Value::cons(car, cdr))
    }

    pub fn is_pair(&self) -> bool {
        matches!(self, Value::Pair(_))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Value::Empty)
    }

    pub fn as_pair(&self) -> Option<&PairView> {
        match self {
            Value::Pair(p) => Some(p),
            _ => None,
        }
    }

    pub fn car(&self) -> Option<&Value> {
        self.as_pair().map(|p| &p.car)
    }

    pub fn cdr(&self) -> Option<&Value> {
        self.as_pair().map(|p| &p.cdr)
    }

    /// Length of a proper list, `None` for anything else.
    pub fn list_len(&self) -> Option<usize> {
        let mut n = 0;
        let mut cur = self;
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

    pub fn is_list(&self) -> bool {
        self.list_len().is_some()
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Symbol(s) => f.write_str(s),
            Value::Number(n) => write!(f, "{n}"),
            Value::Str(s) => {
                f.write_str("\"")?;
                for c in s.chars() {
                    if c == '"' || c == '\\' {
                        f.write_str("\\")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("\"")
            }
            Value::Bool(true) => f.write_str("#t"),
            Value::Bool(false) => f.write_str("#f"),
            Value::Empty => f.write_str("()"),
            Value::Pair(p) => {
                write!(f, "({}", p.car)?;
                let mut rest = &p.cdr;
                loop {
                    match rest {
                        Value::Empty => break,
                        Value::Pair(q) => {
                            write!(f, " {}", q.car)?;
                            rest = &q.cdr;
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

/// An exact number: an integer or a decimal with a fractional part.
///
/// Stored as normalized digit strings, so equality is exact and there is no
/// size limit. Integers and decimals are distinct: `1` is not `1.0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Number {
    negative: bool,
    whole: String,
    fraction: Option<String>,
}

impl Number {
    /// Parses `[+-]?digits` or `[+-]?digits.digits`.
    pub fn parse(text: &str) -> Option<Number> {
        let (negative, body) = match text.as_bytes().first()? {
            b'-' => (true, &text[1..]),
            b'+' => (false, &text[1..]),
            _ => (false, text),
        };
        let (whole, fraction) = match body.split_once('.') {
            Some((w, f)) => (w, Some(f)),
            None => (body, None),
        };
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if !digits(whole) || !fraction.is_none_or(digits) {
            return None;
        }
        let whole = match whole.trim_start_matches('0') {
            "" => "0".to_string(),
            w => w.to_string(),
        };
        let fraction = fraction.map(|f| match f.trim_end_matches('0') {
            "" => "0".to_string(),
            f => f.to_string(),
        });
        let zero = whole == "0" && fraction.as_deref().is_none_or(|f| f == "0");
        Some(Number {
            negative: negative && !zero,
            whole,
            fraction,
        })
    }

    pub fn is_integer(&self) -> bool {
        self.fraction.is_none()
    }

    pub fn as_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        self.to_string().parse().ok()
    }
}

impl From<i64> for Number {
    fn from(n: i64) -> Self {
        Number::parse(&n.to_string()).expect("integer text is a number")
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        f.write_str(&self.whole)?;
        if let Some(frac) = &self.fraction {
            write!(f, ".{frac}")?;
        }
        Ok(())
    }
}
