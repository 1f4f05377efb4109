//! Textual s-expressions: reading and canonical printing.
//!
//! Grammar: symbols, integers (`-12`), decimals (`3.25`), strings with `\"`
//! and `\\` escapes, booleans `#t`/`#f`, lists `(a b c)` with an optional
//! dotted tail `(a . b)`, and `;` line comments.

use std::fmt;
use std::iter::Peekable;
use std::str::Chars;

use crate::value::{Number, Value};

/// 1-based line and column (in characters).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SourcePosition {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for SourcePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReadErrorKind {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unbalanced parentheses: unexpected `)`")]
    UnexpectedClose,
    #[error("unbalanced parentheses: list opened here is never closed")]
    Unclosed,
    #[error("bad dotted syntax: {0}")]
    BadDot(&'static str),
    #[error("unterminated string")]
    UnterminatedString,
    #[error("unknown string escape `\\{0}`")]
    BadEscape(char),
    #[error("trailing garbage after expression")]
    TrailingGarbage,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{position}: {kind}")]
pub struct ReadError {
    pub position: SourcePosition,
    pub kind: ReadErrorKind,
}

/// A parsed expression that remembers where each node started.
#[derive(Debug, Clone, PartialEq)]
pub struct Syntax {
    pub position: SourcePosition,
    pub node: SyntaxNode,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SyntaxNode {
    Atom(Value),
    List { items: Vec<Syntax>, tail: Option<Box<Syntax>> },
}

impl Syntax {
    pub fn to_value(&self) -> Value {
        match &self.node {
            SyntaxNode::Atom(v) => v.clone(),
            SyntaxNode::List { items, tail } => {
                let tail = tail.as_ref().map_or(Value::Empty, |t| t.to_value());
                Value::dotted(items.iter().map(Syntax::to_value), tail)
            }
        }
    }
}

/// Reads exactly one expression.
pub fn read(text: &str) -> Result<Value, ReadError> {
    read_syntax(text).map(|s| s.to_value())
}

/// Reads exactly one expression, keeping source positions.
pub fn read_syntax(text: &str) -> Result<Syntax, ReadError> {
    let mut reader = Reader::new(text);
    let expr = match reader.datum()? {
        Item::Datum(s) => s,
        Item::Close(position) => return Err(ReadError { position, kind: ReadErrorKind::UnexpectedClose }),
        Item::Dot(position) => {
            return Err(ReadError { position, kind: ReadErrorKind::BadDot("`.` outside a list") })
        }
        Item::End(position) => return Err(ReadError { position, kind: ReadErrorKind::UnexpectedEnd }),
    };
    reader.skip_atmosphere();
    if reader.peek().is_some() {
        return Err(reader.error(ReadErrorKind::TrailingGarbage));
    }
    Ok(expr)
}

/// Canonical text of `value`; `read(&print(v)) == Ok(v)` for values whose
/// symbols are themselves readable as symbols.
pub fn print(value: &Value) -> String {
    value.to_string()
}

enum Item {
    Datum(Syntax),
    Close(SourcePosition),
    Dot(SourcePosition),
    End(SourcePosition),
}

struct Reader<'t> {
    chars: Peekable<Chars<'t>>,
    position: SourcePosition,
}

fn is_delimiter(c: char) -> bool {
    c.is_whitespace() || matches!(c, '(' | ')' | '"' | ';')
}

impl<'t> Reader<'t> {
    fn new(text: &'t str) -> Self {
        Reader {
            chars: text.chars().peekable(),
            position: SourcePosition { line: 1, column: 1 },
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.position.line += 1;
            self.position.column = 1;
        } else {
            self.position.column += 1;
        }
        Some(c)
    }

    fn error(&self, kind: ReadErrorKind) -> ReadError {
        ReadError { position: self.position, kind }
    }

    fn skip_atmosphere(&mut self) {
        while let Some(c) = self.peek() {
            if c == ';' {
                while !matches!(self.peek(), None | Some('\n')) {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn datum(&mut self) -> Result<Item, ReadError> {
        self.skip_atmosphere();
        let start = self.position;
        let Some(c) = self.peek() else {
            return Ok(Item::End(start));
        };
        let node = match c {
            '(' => {
                self.bump();
                self.list(start)?
            }
            ')' => {
                self.bump();
                return Ok(Item::Close(start));
            }
            '"' => {
                self.bump();
                SyntaxNode::Atom(self.string(start)?)
            }
            _ => {
                let mut token = String::new();
                while let Some(c) = self.peek().filter(|c| !is_delimiter(*c)) {
                    token.push(c);
                    self.bump();
                }
                if token == "." {
                    return Ok(Item::Dot(start));
                }
                SyntaxNode::Atom(atom(&token))
            }
        };
        Ok(Item::Datum(Syntax { position: start, node }))
    }

    fn list(&mut self, open: SourcePosition) -> Result<SyntaxNode, ReadError> {
        let mut items = Vec::new();
        loop {
            match self.datum()? {
                Item::Datum(s) => items.push(s),
                Item::Close(_) => return Ok(SyntaxNode::List { items, tail: None }),
                Item::End(_) => return Err(ReadError { position: open, kind: ReadErrorKind::Unclosed }),
                Item::Dot(position) => {
                    if items.is_empty() {
                        return Err(ReadError {
                            position,
                            kind: ReadErrorKind::BadDot("`.` must follow at least one element"),
                        });
                    }
                    let tail = match self.datum()? {
                        Item::Datum(s) => s,
                        Item::End(_) => return Err(ReadError { position: open, kind: ReadErrorKind::Unclosed }),
                        Item::Close(position) | Item::Dot(position) => {
                            return Err(ReadError {
                                position,
                                kind: ReadErrorKind::BadDot("expected one expression after `.`"),
                            })
                        }
                    };
                    return match self.datum()? {
                        Item::Close(_) => Ok(SyntaxNode::List { items, tail: Some(Box::new(tail)) }),
                        Item::End(_) => Err(ReadError { position: open, kind: ReadErrorKind::Unclosed }),
                        Item::Datum(Syntax { position, .. }) | Item::Dot(position) => Err(ReadError {
                            position,
                            kind: ReadErrorKind::BadDot("only one expression may follow `.`"),
                        }),
                    };
                }
            }
        }
    }

    fn string(&mut self, open: SourcePosition) -> Result<Value, ReadError> {
        let mut text = String::new();
        loop {
            match self.bump() {
                None => return Err(ReadError { position: open, kind: ReadErrorKind::UnterminatedString }),
                Some('"') => return Ok(Value::str(&text)),
                Some('\\') => {
                    let at = self.position;
                    match self.bump() {
                        Some(c @ ('"' | '\\')) => text.push(c),
                        Some(c) => {
                            return Err(ReadError {
                                position: SourcePosition { column: at.column - 1, ..at },
                                kind: ReadErrorKind::BadEscape(c),
                            })
                        }
                        None => return Err(ReadError { position: open, kind: ReadErrorKind::UnterminatedString }),
                    }
                }
                Some(c) => text.push(c),
            }
        }
    }
}

fn atom(token: &str) -> Value {
    match token {
        "#t" => Value::Bool(true),
        "#f" => Value::Bool(false),
        _ => match Number::parse(token) {
            Some(n) => Value::Number(n),
            None => Value::sym(token),
        },
    }
}
