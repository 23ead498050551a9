//! Regular path queries over edge labels of a solved game.
//!
//! Expressions use the letters `Wpr`, `Wsc`, `W`, `L` and `D`, with `.` for
//! concatenation, `|` for alternation, postfix `*` and `+`, and parentheses.
//! `W` is shorthand for `(Wpr|Wsc)`. Whitespace is ignored.
//!
//! Expressions compile to an epsilon-free position (Glushkov) automaton: one
//! state per letter occurrence plus an initial state.

use std::fmt;

use crate::error::{Error, Result};
use crate::solver::EdgeType;

/// Label of a typed move as seen by a query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Wpr,
    Wsc,
    L,
    D,
}

impl Symbol {
    /// Blunders carry no label and never match.
    pub fn of_edge(t: EdgeType) -> Option<Symbol> {
        match t {
            EdgeType::WinPrimary => Some(Symbol::Wpr),
            EdgeType::WinSecondary => Some(Symbol::Wsc),
            EdgeType::Delaying => Some(Symbol::L),
            EdgeType::Drawing => Some(Symbol::D),
            EdgeType::Blunder1 | EdgeType::Blunder2 | EdgeType::Blunder3 => None,
        }
    }

    fn bit(self) -> u8 {
        1 << self as u8
    }
}

/// A letter of the query alphabet. `W` matches both winning labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    Wpr,
    Wsc,
    W,
    L,
    D,
}

impl Letter {
    fn mask(self) -> u8 {
        match self {
            Letter::Wpr => Symbol::Wpr.bit(),
            Letter::Wsc => Symbol::Wsc.bit(),
            Letter::W => Symbol::Wpr.bit() | Symbol::Wsc.bit(),
            Letter::L => Symbol::L.bit(),
            Letter::D => Symbol::D.bit(),
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Letter::Wpr => "Wpr",
            Letter::Wsc => "Wsc",
            Letter::W => "W",
            Letter::L => "L",
            Letter::D => "D",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rpq {
    Letter(Letter),
    Concat(Box<Rpq>, Box<Rpq>),
    Alt(Box<Rpq>, Box<Rpq>),
    Star(Box<Rpq>),
    Plus(Box<Rpq>),
}

impl Rpq {
    pub fn letter(l: Letter) -> Rpq {
        Rpq::Letter(l)
    }

    pub fn then(self, other: Rpq) -> Rpq {
        Rpq::Concat(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Rpq) -> Rpq {
        Rpq::Alt(Box::new(self), Box::new(other))
    }

    pub fn star(self) -> Rpq {
        Rpq::Star(Box::new(self))
    }

    pub fn plus(self) -> Rpq {
        Rpq::Plus(Box::new(self))
    }

    pub fn parse(text: &str) -> Result<Rpq> {
        let tokens = tokenize(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let expr = p.alternation()?;
        match p.peek() {
            None => Ok(expr),
            Some((off, tok)) => Err(malformed(off, format!("unexpected {tok}"))),
        }
    }

    pub fn compile(&self) -> Automaton {
        Automaton::glushkov(self)
    }

    fn precedence(&self) -> u8 {
        match self {
            Rpq::Alt(..) => 0,
            Rpq::Concat(..) => 1,
            Rpq::Star(_) | Rpq::Plus(_) | Rpq::Letter(_) => 2,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Rpq::Letter(l) => f.write_str(l.as_str()),
            Rpq::Alt(a, b) => {
                a.fmt_at(f, 0)?;
                f.write_str("|")?;
                b.fmt_at(f, 1)
            }
            Rpq::Concat(a, b) => {
                a.fmt_at(f, 1)?;
                f.write_str(".")?;
                b.fmt_at(f, 2)
            }
            Rpq::Star(a) => {
                a.fmt_at(f, 2)?;
                f.write_str("*")
            }
            Rpq::Plus(a) => {
                a.fmt_at(f, 2)?;
                f.write_str("+")
            }
        }
    }
}

impl fmt::Display for Rpq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

impl std::str::FromStr for Rpq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rpq> {
        Rpq::parse(s)
    }
}

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedExpression {
        offset,
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Letter(Letter),
    Dot,
    Bar,
    Star,
    Plus,
    Open,
    Close,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Letter(l) => write!(f, "'{}'", l.as_str()),
            Token::Dot => f.write_str("'.'"),
            Token::Bar => f.write_str("'|'"),
            Token::Star => f.write_str("'*'"),
            Token::Plus => f.write_str("'+'"),
            Token::Open => f.write_str("'('"),
            Token::Close => f.write_str("')'"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let mut rest = text.char_indices().peekable();
    while let Some((off, c)) = rest.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '.' => Token::Dot,
            '|' => Token::Bar,
            '*' => Token::Star,
            '+' => Token::Plus,
            '(' => Token::Open,
            ')' => Token::Close,
            'L' => Token::Letter(Letter::L),
            'D' => Token::Letter(Letter::D),
            'W' => {
                if text[off + 1..].starts_with("pr") {
                    rest.next();
                    rest.next();
                    Token::Letter(Letter::Wpr)
                } else if text[off + 1..].starts_with("sc") {
                    rest.next();
                    rest.next();
                    Token::Letter(Letter::Wsc)
                } else {
                    Token::Letter(Letter::W)
                }
            }
            other => return Err(malformed(off, format!("unexpected character {other:?}"))),
        };
        out.push((off, tok));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, Token)> {
        self.tokens.get(self.pos).copied()
    }

    fn end_offset(&self) -> usize {
        self.tokens.last().map_or(0, |(off, _)| off + 1)
    }

    fn alternation(&mut self) -> Result<Rpq> {
        let mut lhs = self.concatenation()?;
        while let Some((_, Token::Bar)) = self.peek() {
            self.pos += 1;
            lhs = lhs.or(self.concatenation()?);
        }
        Ok(lhs)
    }

    fn concatenation(&mut self) -> Result<Rpq> {
        let mut lhs = self.postfix()?;
        while let Some((_, Token::Dot)) = self.peek() {
            self.pos += 1;
            lhs = lhs.then(self.postfix()?);
        }
        Ok(lhs)
    }

    fn postfix(&mut self) -> Result<Rpq> {
        let mut e = self.atom()?;
        loop {
            match self.peek() {
                Some((_, Token::Star)) => e = e.star(),
                Some((_, Token::Plus)) => e = e.plus(),
                _ => return Ok(e),
            }
            self.pos += 1;
        }
    }

    fn atom(&mut self) -> Result<Rpq> {
        let Some((off, tok)) = self.peek() else {
            return Err(malformed(self.end_offset(), "unexpected end of expression"));
        };
        self.pos += 1;
        match tok {
            Token::Letter(l) => Ok(Rpq::Letter(l)),
            Token::Open => {
                let inner = self.alternation()?;
                match self.peek() {
                    Some((_, Token::Close)) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some((o, t)) => Err(malformed(o, format!("expected ')', found {t}"))),
                    None => Err(malformed(self.end_offset(), "unclosed '('")),
                }
            }
            other => Err(malformed(off, format!("unexpected {other}"))),
        }
    }
}

/// Epsilon-free NFA. State 0 is initial; every other state is entered by
/// reading one letter occurrence and only on symbols in its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    class: Vec<u8>,
    next: Vec<Vec<usize>>,
    accepting: Vec<bool>,
}

struct Linear {
    nullable: bool,
    first: Vec<usize>,
    last: Vec<usize>,
}

impl Automaton {
    fn glushkov(r: &Rpq) -> Automaton {
        // state 0 is the initial state; positions start at 1
        let mut class = vec![0u8];
        let mut follow: Vec<Vec<usize>> = vec![Vec::new()];
        let lin = linearize(r, &mut class, &mut follow);
        let n = class.len();
        let mut next = follow;
        next[0] = lin.first.clone();
        let mut accepting = vec![false; n];
        accepting[0] = lin.nullable;
        for &p in &lin.last {
            accepting[p] = true;
        }
        for succ in &mut next {
            succ.sort_unstable();
            succ.dedup();
        }
        Automaton {
            class,
            next,
            accepting,
        }
    }

    pub fn num_states(&self) -> usize {
        self.class.len()
    }

    pub fn initial(&self) -> usize {
        0
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    /// States reachable from `q` by reading `sym`.
    pub fn step(&self, q: usize, sym: Symbol) -> impl Iterator<Item = usize> + '_ {
        self.next[q]
            .iter()
            .copied()
            .filter(move |&t| self.class[t] & sym.bit() != 0)
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        let mut current = vec![false; self.num_states()];
        current[0] = true;
        for &sym in word {
            let mut next = vec![false; self.num_states()];
            for q in (0..self.num_states()).filter(|&q| current[q]) {
                for t in self.step(q, sym) {
                    next[t] = true;
                }
            }
            current = next;
        }
        (0..self.num_states()).any(|q| current[q] && self.accepting[q])
    }

    /// Pairs `(q, t)` with `t` reachable from `q` on some symbol.
    pub(crate) fn transitions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.next
            .iter()
            .enumerate()
            .flat_map(|(q, ts)| ts.iter().map(move |&t| (q, t)))
    }

    pub(crate) fn reads(&self, t: usize, sym: Symbol) -> bool {
        self.class[t] & sym.bit() != 0
    }
}

fn linearize(r: &Rpq, class: &mut Vec<u8>, follow: &mut Vec<Vec<usize>>) -> Linear {
    match r {
        Rpq::Letter(l) => {
            let p = class.len();
            class.push(l.mask());
            follow.push(Vec::new());
            Linear {
                nullable: false,
                first: vec![p],
                last: vec![p],
            }
        }
        Rpq::Alt(a, b) => {
            let a = linearize(a, class, follow);
            let b = linearize(b, class, follow);
            Linear {
                nullable: a.nullable || b.nullable,
                first: [a.first, b.first].concat(),
                last: [a.last, b.last].concat(),
            }
        }
        Rpq::Concat(a, b) => {
            let a = linearize(a, class, follow);
            let b = linearize(b, class, follow);
            for &p in &a.last {
                follow[p].extend(&b.first);
            }
            Linear {
                nullable: a.nullable && b.nullable,
                first: if a.nullable {
                    [a.first, b.first.clone()].concat()
                } else {
                    a.first
                },
                last: if b.nullable {
                    [a.last, b.last].concat()
                } else {
                    b.last
                },
            }
        }
        Rpq::Star(a) | Rpq::Plus(a) => {
            let inner = linearize(a, class, follow);
            for &p in &inner.last {
                follow[p].extend(&inner.first);
            }
            Linear {
                nullable: matches!(r, Rpq::Star(_)) || inner.nullable,
                ..inner
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::Symbol::*;
    use super::*;

    fn rpq(s: &str) -> Rpq {
        Rpq::parse(s).unwrap()
    }

    #[test]
    fn d_plus_has_two_states() {
        let a = rpq("D+").compile();
        assert_eq!(a.num_states(), 2);
        assert!(!a.accepts(&[]));
        assert!(a.accepts(&[D]));
        assert!(a.accepts(&[D, D, D]));
        assert!(!a.accepts(&[D, L]));
    }

    #[test]
    fn won_actual_pattern() {
        let a = rpq("W.(L.W)*").compile();
        assert!(a.accepts(&[Wpr]));
        assert!(a.accepts(&[Wsc, L, Wpr]));
        assert!(a.accepts(&[Wpr, L, Wsc, L, Wsc]));
        assert!(!a.accepts(&[]));
        assert!(!a.accepts(&[Wpr, L]));
        assert!(!a.accepts(&[L, Wpr]));
        assert!(!a.accepts(&[D]));
    }

    #[test]
    fn primary_pattern_rejects_secondary() {
        let a = rpq("Wpr.(L.Wpr)*").compile();
        assert!(a.accepts(&[Wpr, L, Wpr]));
        assert!(!a.accepts(&[Wsc]));
        assert!(!a.accepts(&[Wpr, L, Wsc]));
    }

    #[test]
    fn lost_pattern_accepts_empty_word() {
        let a = rpq("(L.W)*").compile();
        assert!(a.accepts(&[]));
        assert!(a.accepts(&[L, Wsc]));
        assert!(!a.accepts(&[L]));
    }

    #[test]
    fn whitespace_and_precedence() {
        assert_eq!(rpq(" W . ( L . W ) * "), rpq("W.(L.W)*"));
        // '.' binds tighter than '|'
        let a = rpq("D|L.W").compile();
        assert!(a.accepts(&[D]));
        assert!(a.accepts(&[L, Wpr]));
        assert!(!a.accepts(&[D, Wpr]));
        assert_eq!(rpq("D|L.W").to_string(), "D|L.W");
        assert_eq!(rpq("(D|L).W").to_string(), "(D|L).W");
        assert_eq!(rpq("(L.W)*").to_string(), "(L.W)*");
        assert_eq!(rpq("W.(L.W)*").to_string(), "W.(L.W)*");
        assert_eq!(rpq("D++").to_string(), "D++");
    }

    #[test]
    fn malformed() {
        for bad in ["", "(", "D.", "D..L", "|D", "X", "(D", "D)", "*", "Wx"] {
            assert!(
                matches!(Rpq::parse(bad), Err(Error::MalformedExpression { .. })),
                "{bad:?}"
            );
        }
    }
}
