//! APX argumentation frameworks: `arg(a).` declares an argument and
//! `att(a,b).` says `a` attacks `b`. Statements may share a line; `%` starts
//! a comment.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::argumentation::ArgumentationFramework;
use crate::error::{Error, Result};
use crate::graph::PositionId;

pub fn parse_apx(text: &str) -> Result<ArgumentationFramework> {
    let mut arguments = BTreeSet::new();
    let mut attacks = Vec::new();
    let mut cur = Cursor::new(text);
    loop {
        cur.skip_trivia();
        if cur.at_end() {
            break;
        }
        let line = cur.line;
        let directive = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
        cur.skip_trivia();
        cur.expect('(')?;
        let body = cur.take_while(|c| c != ')' && c != '\n');
        cur.expect(')')?;
        cur.skip_trivia();
        cur.expect('.')?;
        let name = |raw: &str| {
            let raw = raw.trim();
            PositionId::new(raw).map_err(|_| Error::Parse {
                line,
                reason: format!("invalid argument name {raw:?}"),
            })
        };
        match directive {
            "arg" => {
                arguments.insert(name(body)?);
            }
            "att" => {
                let Some((a, b)) = body.split_once(',') else {
                    return Err(Error::Parse {
                        line,
                        reason: "att needs two arguments".into(),
                    });
                };
                attacks.push((line, name(a)?, name(b)?));
            }
            other => {
                return Err(Error::Parse {
                    line,
                    reason: format!("unknown directive {other:?}"),
                })
            }
        }
    }
    for (line, a, b) in &attacks {
        for n in [a, b] {
            if !arguments.contains(n) {
                return Err(Error::UndeclaredArgument {
                    line: *line,
                    name: n.to_string(),
                });
            }
        }
    }
    ArgumentationFramework::new(arguments, attacks.into_iter().map(|(_, a, b)| (a, b)))
}

pub fn render_apx(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for a in af.arguments() {
        let _ = writeln!(out, "arg({a}).");
    }
    for (a, b) in af.attacks() {
        let _ = writeln!(out, "att({a},{b}).");
    }
    out
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            text,
            pos: 0,
            line: 1,
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c == '%' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn take_while(&mut self, keep: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&keep) {
            self.bump();
        }
        &self.text[start..self.pos]
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            found => Err(Error::Parse {
                line: self.line,
                reason: match found {
                    Some(c) => format!("expected {want:?}, found {c:?}"),
                    None => format!("expected {want:?}, found end of input"),
                },
            }),
        }
    }
}
