//! Textual literals: `T(s1,...,sr;s)`, `Z(s1,...,sr)` and `P(s1,...,sr)`.
//! Whitespace is ignored anywhere between tokens.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::index::{MtIndex, MzvIndex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Mt(MtIndex),
    Mzv(MzvIndex),
    /// Arguments of a product of single zeta values.
    Product(Vec<u32>),
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Mt(t) => write!(f, "{t}"),
            Literal::Mzv(z) => write!(f, "{z}"),
            Literal::Product(args) => {
                let joined: Vec<String> = args.iter().map(u32::to_string).collect();
                write!(f, "P({})", joined.join(","))
            }
        }
    }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            chars: src.chars().enumerate().collect(),
            pos: 0,
            src,
        }
    }

    /// 1-based column of the next unread character.
    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.chars.len(), |&(i, _)| i)
            + 1
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.column(),
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.pos)
            .is_some_and(|(_, c)| c.is_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.error(format!("expected '{want}', found '{c}'")),
            None => self.error(format!("expected '{want}', found end of input")),
        }
    }

    fn positive_integer(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let start_col = self.column();
        while self
            .chars
            .get(self.pos)
            .is_some_and(|(_, c)| c.is_ascii_digit())
        {
            self.pos += 1;
        }
        if start == self.pos {
            self.pos = start;
            return match self.peek() {
                Some(c) => self.error(format!("expected a positive integer, found '{c}'")),
                None => self.error("expected a positive integer, found end of input"),
            };
        }
        let digits: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        match digits.parse::<u32>() {
            Ok(0) => Err(Error::Parse {
                column: start_col,
                message: "arguments must be positive".into(),
            }),
            Ok(v) => Ok(v),
            Err(_) => Err(Error::Parse {
                column: start_col,
                message: format!("argument {digits} is too large"),
            }),
        }
    }

    fn integer_list(&mut self) -> Result<Vec<u32>> {
        let mut out = vec![self.positive_integer()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            out.push(self.positive_integer()?);
        }
        Ok(out)
    }

    fn end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected trailing '{c}' in {:?}", self.src)),
        }
    }
}

pub fn parse_literal(src: &str) -> Result<Literal> {
    let mut cur = Cursor::new(src);
    let head = match cur.peek() {
        Some(c @ ('T' | 'Z' | 'P')) => {
            cur.pos += 1;
            c
        }
        Some(c) => return cur.error(format!("expected 'T', 'Z' or 'P', found '{c}'")),
        None => return cur.error("empty input"),
    };
    cur.expect('(')?;
    let args = cur.integer_list()?;
    let literal = if head == 'T' {
        cur.expect(';')?;
        let last = cur.positive_integer()?;
        Literal::Mt(MtIndex::new(args, last)?)
    } else if head == 'Z' {
        Literal::Mzv(MzvIndex::new(args)?)
    } else {
        Literal::Product(args)
    };
    cur.expect(')')?;
    cur.end()?;
    Ok(literal)
}

fn wrong_kind(src: &str, want: &str) -> Error {
    let column = src.chars().position(|c| !c.is_whitespace()).unwrap_or(0) + 1;
    Error::Parse {
        column,
        message: format!("expected a {want} literal"),
    }
}

pub fn parse_mt(src: &str) -> Result<MtIndex> {
    match parse_literal(src)? {
        Literal::Mt(t) => Ok(t),
        _ => Err(wrong_kind(src, "T(...;...)")),
    }
}

pub fn parse_mzv(src: &str) -> Result<MzvIndex> {
    match parse_literal(src)? {
        Literal::Mzv(z) => Ok(z),
        _ => Err(wrong_kind(src, "Z(...)")),
    }
}

pub fn parse_product(src: &str) -> Result<Vec<u32>> {
    match parse_literal(src)? {
        Literal::Product(p) => Ok(p),
        _ => Err(wrong_kind(src, "P(...)")),
    }
}

impl FromStr for Literal {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_literal(s)
    }
}

impl FromStr for MtIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_mt(s)
    }
}

impl FromStr for MzvIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_mzv(s)
    }
}
