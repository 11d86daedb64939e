//! S-expression reader with line/column positions.
//!
//! Atoms are maximal runs of characters other than whitespace, parentheses
//! and `;`, which starts a comment running to the end of the line.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SExpr {
    Atom(String, Pos),
    List(Vec<SExpr>, Pos),
}

impl SExpr {
    pub fn pos(&self) -> Pos {
        match self {
            SExpr::Atom(_, pos) | SExpr::List(_, pos) => *pos,
        }
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            SExpr::Atom(a, _) => Some(a),
            SExpr::List(..) => None,
        }
    }

    pub fn as_list(&self) -> Option<&[SExpr]> {
        match self {
            SExpr::List(items, _) => Some(items),
            SExpr::Atom(..) => None,
        }
    }
}

impl fmt::Display for SExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SExpr::Atom(a, _) => f.write_str(a),
            SExpr::List(items, _) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    item.fmt(f)?;
                }
                f.write_str(")")
            }
        }
    }
}

/// A syntax error at a source position.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {message}")]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        ParseError { pos, message: message.into() }
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl Reader<'_> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.col = 1;
        } else {
            self.pos.col += 1;
        }
        Some(c)
    }

    fn skip_blank(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == ';' {
                while self.chars.peek().is_some_and(|&c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn read(&mut self) -> Result<Option<SExpr>, ParseError> {
        self.skip_blank();
        let start = self.pos;
        match self.chars.peek() {
            None => Ok(None),
            Some(')') => Err(ParseError::new(start, "unexpected `)`")),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_blank();
                    match self.chars.peek() {
                        None => {
                            return Err(ParseError::new(
                                self.pos,
                                format!("unexpected end of input: `(` opened at {start} is not closed"),
                            ))
                        }
                        Some(')') => {
                            self.bump();
                            return Ok(Some(SExpr::List(items, start)));
                        }
                        Some(_) => items.extend(self.read()?),
                    }
                }
            }
            Some(_) => {
                let mut atom = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == ';' {
                        break;
                    }
                    atom.push(c);
                    self.bump();
                }
                Ok(Some(SExpr::Atom(atom, start)))
            }
        }
    }
}

/// Reads every top-level expression of `text`.
pub fn read_all(text: &str) -> Result<Vec<SExpr>, ParseError> {
    let mut reader = Reader { chars: text.chars().peekable(), pos: Pos { line: 1, col: 1 } };
    let mut out = Vec::new();
    while let Some(e) = reader.read()? {
        out.push(e);
    }
    Ok(out)
}

/// Reads exactly one expression.
pub fn read_one(text: &str) -> Result<SExpr, ParseError> {
    let mut all = read_all(text)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        0 => Err(ParseError::new(end_of(text), "unexpected end of input: expected an expression")),
        _ => Err(ParseError::new(all[1].pos(), "unexpected expression after the end of the program")),
    }
}

fn end_of(text: &str) -> Pos {
    let line = text.matches('\n').count() + 1;
    let col = text.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Pos { line, col }
}
