//! Line-oriented presentation DSL.
//!
//! ```text
//! free N
//! group K
//! binoid g1,...,gn | rel ; rel ; ...      rel := word = word | word = inf
//! smash { <spec> } { <spec> }
//! sr v1,...,vn ; facet a,b ; facet c,d
//! affine (2;1) (3;0) mod 2                 lattice points in ℤ^m × ⊕ℤ/k
//! ```
//!
//! Words are sums of terms `[coeff] generator`; `0` is the neutral word.
//! `#` starts a comment running to the end of the line.

use crate::error::{Error, Result};
use crate::presentation::{
    free_binoid, group_binoid, smash, stanley_reisner, Presentation, SimplicialComplex, Word,
};
use crate::structure::{affine_binoid, LatticePoint};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    Plus,
    Minus,
    Eq,
    Bar,
    Semi,
    Comma,
    LBrace,
    RBrace,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Eq => "'='".into(),
        Tok::Bar => "'|'".into(),
        Tok::Semi => "';'".into(),
        Tok::Comma => "','".into(),
        Tok::LBrace => "'{'".into(),
        Tok::RBrace => "'}'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let single = match c {
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '=' => Some(Tok::Eq),
                '|' => Some(Tok::Bar),
                ';' => Some(Tok::Semi),
                ',' => Some(Tok::Comma),
                '{' => Some(Tok::LBrace),
                '}' => Some(Tok::RBrace),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                _ => None,
            };
            if let Some(tok) = single {
                out.push(Spanned {
                    tok,
                    line: line_no,
                    column,
                });
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value = digits.parse::<u64>().map_err(|_| Error::Syntax {
                    line: line_no,
                    column,
                    message: format!("integer `{digits}` out of range"),
                })?;
                out.push(Spanned {
                    tok: Tok::Int(value),
                    line: line_no,
                    column,
                });
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line: line_no,
                    column,
                });
            } else {
                return Err(Error::Syntax {
                    line: line_no,
                    column,
                    message: format!("unexpected character '{c}'"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

/// The right-hand side of a relation: a word or `inf`.
enum Side {
    Word(Word),
    Infinity,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        let toks = tokenize(text)?;
        let lines: Vec<&str> = text.lines().collect();
        let end = match lines.last() {
            Some(l) => (lines.len(), l.chars().count() + 1),
            None => (1, 1),
        };
        Ok(Parser { toks, pos: 0, end })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn position(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.column))
            .unwrap_or(self.end)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let (line, column) = self.position();
        Err(Error::Syntax {
            line,
            column,
            message: message.into(),
        })
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T> {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {}", describe(t))),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            self.unexpected(&describe(&tok))
        }
    }

    fn keyword(&self) -> Option<&str> {
        match self.peek() {
            Some(Tok::Ident(s)) => Some(s.as_str()),
            _ => None,
        }
    }

    fn int(&mut self) -> Result<u64> {
        if self.peek() == Some(&Tok::Minus) {
            let (line, column) = self.position();
            return Err(Error::NegativeExponent { line, column });
        }
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => self.unexpected("an integer"),
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let negative = self.eat(&Tok::Minus);
        let n = match self.peek() {
            Some(Tok::Int(n)) => *n as i64,
            _ => return self.unexpected("an integer"),
        };
        self.pos += 1;
        Ok(if negative { -n } else { n })
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.unexpected("a name"),
        }
    }

    fn name_list(&mut self) -> Result<Vec<String>> {
        let mut names = vec![self.ident()?];
        while self.eat(&Tok::Comma) {
            names.push(self.ident()?);
        }
        for n in &names {
            if n == "inf" {
                return self.error("`inf` is reserved and cannot name a generator");
            }
        }
        Ok(names)
    }

    fn spec(&mut self) -> Result<Presentation> {
        let kw = match self.keyword() {
            Some(k) => k.to_string(),
            None => {
                if self.peek().is_none() {
                    return self.error("empty input");
                }
                return self.unexpected("`free`, `group`, `binoid`, `smash`, `sr` or `affine`");
            }
        };
        match kw.as_str() {
            "free" => {
                self.pos += 1;
                let n = self.int()?;
                Ok(free_binoid(n as usize))
            }
            "group" => {
                self.pos += 1;
                let k = self.int()?;
                group_binoid(u32::try_from(k).map_err(|_| Error::GroupOrder(k))?)
            }
            "binoid" => {
                self.pos += 1;
                self.binoid()
            }
            "smash" => {
                self.pos += 1;
                self.expect(Tok::LBrace)?;
                let a = self.spec()?;
                self.expect(Tok::RBrace)?;
                self.expect(Tok::LBrace)?;
                let b = self.spec()?;
                self.expect(Tok::RBrace)?;
                Ok(smash(&a, &b))
            }
            "sr" => {
                self.pos += 1;
                self.stanley_reisner()
            }
            "affine" => {
                self.pos += 1;
                self.affine()
            }
            _ => self.unexpected("`free`, `group`, `binoid`, `smash`, `sr` or `affine`"),
        }
    }

    fn binoid(&mut self) -> Result<Presentation> {
        let generators = match self.peek() {
            Some(Tok::Ident(_)) => self.name_list()?,
            _ => Vec::new(),
        };
        let mut congruences = Vec::new();
        let mut infinity = Vec::new();
        if self.eat(&Tok::Bar) {
            if matches!(self.peek(), None | Some(Tok::RBrace)) {
                return Presentation::new(generators, congruences, infinity);
            }
            loop {
                let lhs = self.side(&generators)?;
                self.expect(Tok::Eq)?;
                let rhs = self.side(&generators)?;
                match (lhs, rhs) {
                    (Side::Word(l), Side::Word(r)) => congruences.push((l, r)),
                    (Side::Word(w), Side::Infinity) | (Side::Infinity, Side::Word(w)) => {
                        infinity.push(w)
                    }
                    (Side::Infinity, Side::Infinity) => {}
                }
                if !self.eat(&Tok::Semi) {
                    break;
                }
            }
        }
        Presentation::new(generators, congruences, infinity)
    }

    fn side(&mut self, generators: &[String]) -> Result<Side> {
        if self.keyword() == Some("inf") {
            self.pos += 1;
            return Ok(Side::Infinity);
        }
        self.word(generators).map(Side::Word)
    }

    fn word(&mut self, generators: &[String]) -> Result<Word> {
        let mut w = Word::zero(generators.len());
        self.term(generators, &mut w)?;
        loop {
            let plus_at = self.position();
            if !self.eat(&Tok::Plus) {
                break;
            }
            if !matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Minus)) {
                return Err(Error::Syntax {
                    line: plus_at.0,
                    column: plus_at.1,
                    message: "dangling '+' without a following term".into(),
                });
            }
            self.term(generators, &mut w)?;
        }
        Ok(w)
    }

    fn term(&mut self, generators: &[String], w: &mut Word) -> Result<()> {
        let coeff = match self.peek() {
            Some(Tok::Int(_)) | Some(Tok::Minus) => Some(self.int()?),
            _ => None,
        };
        match (coeff, self.peek()) {
            (_, Some(Tok::Ident(name))) if name != "inf" => {
                let name = name.clone();
                let i = generators
                    .iter()
                    .position(|g| *g == name)
                    .ok_or(Error::UndeclaredGenerator(name))?;
                self.pos += 1;
                let k = u32::try_from(coeff.unwrap_or(1)).map_err(|_| Error::Syntax {
                    line: self.toks[self.pos - 1].line,
                    column: self.toks[self.pos - 1].column,
                    message: "exponent out of range".into(),
                })?;
                w[i] += k;
                Ok(())
            }
            (Some(0), _) => Ok(()),
            (Some(_), _) => self.error("a bare integer other than 0 is not a word"),
            (None, _) => self.unexpected("a term"),
        }
    }

    fn stanley_reisner(&mut self) -> Result<Presentation> {
        let vertices = self.name_list()?;
        let mut facets = Vec::new();
        while self.eat(&Tok::Semi) {
            if self.keyword() != Some("facet") {
                return self.unexpected("`facet`");
            }
            self.pos += 1;
            let names = self.name_list()?;
            let facet = names
                .iter()
                .map(|n| {
                    vertices
                        .iter()
                        .position(|v| v == n)
                        .ok_or_else(|| Error::UndeclaredGenerator(n.clone()))
                })
                .collect::<Result<Vec<_>>>()?;
            facets.push(facet);
        }
        let complex = SimplicialComplex::new(vertices, facets)?;
        Ok(stanley_reisner(&complex))
    }

    fn affine(&mut self) -> Result<Presentation> {
        let mut points = Vec::new();
        while self.eat(&Tok::LParen) {
            let mut free = vec![self.signed_int()?];
            while self.eat(&Tok::Comma) {
                free.push(self.signed_int()?);
            }
            let mut torsion = Vec::new();
            if self.eat(&Tok::Semi) {
                torsion.push(self.signed_int()?);
                while self.eat(&Tok::Comma) {
                    torsion.push(self.signed_int()?);
                }
            }
            self.expect(Tok::RParen)?;
            points.push(LatticePoint { free, torsion });
        }
        if points.is_empty() {
            return self.unexpected("'('");
        }
        let mut orders = Vec::new();
        if self.keyword() == Some("mod") {
            self.pos += 1;
            orders.push(self.int()?);
            while self.eat(&Tok::Comma) {
                orders.push(self.int()?);
            }
        }
        affine_binoid(&points, &orders)
    }
}

/// Parses a presentation from DSL source.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut p = Parser::new(text)?;
    let out = p.spec()?;
    if p.peek().is_some() {
        return p.unexpected("end of input");
    }
    Ok(out)
}

pub(crate) fn parse_word(text: &str, generators: &[String]) -> Result<Word> {
    let mut p = Parser::new(text)?;
    if p.peek().is_none() {
        return p.error("empty word");
    }
    let w = p.word(generators)?;
    if p.peek().is_some() {
        return p.unexpected("end of word");
    }
    Ok(w)
}
