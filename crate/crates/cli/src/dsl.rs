//! The ideal description language:
//!
//! ```text
//! ring x, y [char 32003]; gens x^20, x^3*y^17, x^12 y^8, y^20
//! ```
//!
//! A term is a product of `name` or `name^k` factors joined by `*` or by
//! whitespace; `1` is the empty product. An empty `gens` list is the zero
//! ideal. Line breaks count as whitespace.

use std::fmt;

use regulus_core::gb::Ring;
use regulus_core::monomial::{ExpVec, MonomialIdeal};

pub const DEFAULT_CHAR: u32 = 32003;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec {
    pub var_names: Vec<String>,
    pub char: u32,
    pub generators: Vec<ExpVec>,
}

impl IdealSpec {
    pub fn ring(&self) -> Result<Ring, regulus_core::CoreError> {
        Ok(Ring::standard(&self.var_names, self.char)?)
    }

    /// The ideal over `F_p`, with `char_override` replacing the declared prime.
    pub fn ideal(&self, char_override: Option<u32>) -> Result<MonomialIdeal, regulus_core::CoreError> {
        let ring = Ring::standard(&self.var_names, char_override.unwrap_or(self.char))?;
        MonomialIdeal::new(&ring, self.generators.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Comma,
    Semi,
    Star,
    Caret,
    Other(char),
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

fn lex(text: &str) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, cl) = (line, col);
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            toks.push((Tok::Ident(s), l, cl));
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            let v = s.parse().map_err(|_| ParseError {
                line: l,
                column: cl,
                message: format!("integer {s} is too large"),
            })?;
            toks.push((Tok::Int(v), l, cl));
            continue;
        }
        chars.next();
        col += 1;
        let t = match c {
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            other => Tok::Other(other),
        };
        toks.push((t, l, cl));
    }
    Ok(Lexer {
        toks,
        pos: 0,
        end: (line, col),
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.end, |t| (t.1, t.2))
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        let (line, column) = self.here();
        Err(ParseError {
            line,
            column,
            message: message.into(),
        })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected `{kw}`")),
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.err(format!("expected {what}")),
        }
    }

    fn int(&mut self, what: &str) -> Result<u64, ParseError> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => self.err(format!("expected {what}")),
        }
    }
}

pub fn parse_ideal(text: &str) -> Result<IdealSpec, ParseError> {
    let mut lx = lex(text)?;
    lx.keyword("ring")?;
    let mut names: Vec<String> = Vec::new();
    loop {
        let here = lx.here();
        let name = lx.ident("a variable name")?;
        if name == "char" || name == "gens" || name == "ring" {
            lx.pos -= 1;
            return lx.err(format!("`{name}` is reserved"));
        }
        if names.contains(&name) {
            return Err(ParseError {
                line: here.0,
                column: here.1,
                message: format!("variable `{name}` declared twice"),
            });
        }
        names.push(name);
        if lx.peek() == Some(&Tok::Comma) {
            lx.next();
        } else {
            break;
        }
    }
    let mut char = DEFAULT_CHAR;
    if matches!(lx.peek(), Some(Tok::Ident(s)) if s == "char") {
        lx.next();
        let here = lx.here();
        let p = lx.int("a prime after `char`")?;
        char = u32::try_from(p)
            .ok()
            .filter(|&p| regulus_core::gb::is_prime(p))
            .ok_or(ParseError {
                line: here.0,
                column: here.1,
                message: format!("{p} is not a prime below 2^32"),
            })?;
    }
    if lx.peek() != Some(&Tok::Semi) {
        return lx.err("expected `;` after the ring declaration");
    }
    lx.next();
    lx.keyword("gens")?;
    let mut generators = Vec::new();
    if lx.peek().is_some() {
        loop {
            generators.push(term(&mut lx, &names)?);
            match lx.peek() {
                Some(Tok::Comma) => {
                    lx.next();
                }
                Some(Tok::Semi) => {
                    lx.next();
                    if lx.peek().is_some() {
                        return lx.err("unexpected input after the generator list");
                    }
                    break;
                }
                None => break,
                Some(Tok::Other(c)) if "+-/".contains(*c) => {
                    return lx.err("generators must be monomials");
                }
                Some(_) => return lx.err("expected `,` between generators"),
            }
        }
    }
    Ok(IdealSpec {
        var_names: names,
        char,
        generators,
    })
}

fn term(lx: &mut Lexer, names: &[String]) -> Result<ExpVec, ParseError> {
    let mut exps = vec![0u32; names.len()];
    let mut factors = 0;
    loop {
        match lx.peek() {
            Some(Tok::Int(1)) if factors == 0 => {
                lx.next();
                factors += 1;
            }
            Some(Tok::Int(_)) => return lx.err("coefficients are not allowed; terms are monomials"),
            Some(Tok::Ident(_)) => {
                let here = lx.here();
                let name = lx.ident("a variable")?;
                let j = names.iter().position(|n| *n == name).ok_or(ParseError {
                    line: here.0,
                    column: here.1,
                    message: format!("unknown variable `{name}`"),
                })?;
                let mut e = 1u64;
                if lx.peek() == Some(&Tok::Caret) {
                    lx.next();
                    if let Some(Tok::Other('-')) = lx.peek() {
                        return lx.err("negative exponent");
                    }
                    let at = lx.here();
                    e = lx.int("an exponent")?;
                    if e == 0 {
                        return Err(ParseError {
                            line: at.0,
                            column: at.1,
                            message: "zero exponent".into(),
                        });
                    }
                }
                let sum = exps[j] as u64 + e;
                exps[j] = u32::try_from(sum).ok().filter(|&v| v <= u16::MAX as u32).ok_or(ParseError {
                    line: here.0,
                    column: here.1,
                    message: format!("exponent of `{name}` is too large"),
                })?;
                factors += 1;
            }
            _ if factors == 0 => return lx.err("expected a monomial"),
            _ => return lx.err("expected a variable"),
        }
        match lx.peek() {
            Some(Tok::Star) => {
                lx.next();
            }
            Some(Tok::Ident(_)) => {}
            _ => return Ok(exps),
        }
    }
}

/// The DSL text of `ideal`; `parse_ideal` inverts it.
pub fn print_ideal(ideal: &MonomialIdeal) -> String {
    let r = ideal.ring();
    let gens: Vec<String> = ideal.gens().iter().map(|g| ideal.term_string(g)).collect();
    format!(
        "ring {} char {}; gens {}",
        r.names().join(", "),
        r.char(),
        gens.join(", ")
    )
}
