//! Recursive-descent parser for terms, formulas and sequents.
//!
//! ```text
//! sequent  := [formula] "|-" [formula]
//! formula  := or ["->" formula]
//! or       := and {"|" and}
//! and      := unary {"&" unary}
//! unary    := "~" unary | ("forall" | "exists") var "." formula | atom
//! atom     := "(" formula ")" | Pred ["(" terms ")"] | term "=" term
//! term     := prod {"+" prod}
//! prod     := post {"*" post}
//! post     := primary {"'"}
//! primary  := decimal | "s(" term ")" | fun "(" terms ")" | var | "(" term ")"
//! ```
//!
//! Predicates start with an upper-case letter, variables and function
//! symbols with a lower-case letter. The usual Unicode connectives are
//! accepted as synonyms.

use super::formula::{Formula, Sequent};
use super::term::{sym, Term};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(u64),
    LParen,
    RParen,
    Comma,
    Dot,
    Tilde,
    Amp,
    Bar,
    Arrow,
    Turnstile,
    Eq,
    Plus,
    Star,
    Quote,
    End,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let next = chars.get(i + 1).map(|p| p.1);
        let single = |t: Tok| (t, 1usize);
        let (tok, width) = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => single(Tok::LParen),
            ')' => single(Tok::RParen),
            ',' => single(Tok::Comma),
            '.' => single(Tok::Dot),
            '~' | '∼' | '¬' => single(Tok::Tilde),
            '&' | '∧' => single(Tok::Amp),
            '|' if next == Some('-') => (Tok::Turnstile, 2),
            '|' | '∨' => single(Tok::Bar),
            '-' if next == Some('>') => (Tok::Arrow, 2),
            '⊃' => single(Tok::Arrow),
            '⊢' | '→' => single(Tok::Turnstile),
            '=' => single(Tok::Eq),
            '+' => single(Tok::Plus),
            '*' | '·' => single(Tok::Star),
            '\'' | '′' => single(Tok::Quote),
            '∀' => single(Tok::Ident("forall".into())),
            '∃' => single(Tok::Ident("exists".into())),
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                let text: String = chars[i..j].iter().map(|p| p.1).collect();
                let n = text.parse::<u64>().map_err(|_| Error::Syntax { pos, msg: format!("numeral `{text}` too large") })?;
                out.push((Tok::Num(n), pos));
                i = j;
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].1.is_ascii_alphanumeric() || chars[j].1 == '_') {
                    j += 1;
                }
                out.push((Tok::Ident(chars[i..j].iter().map(|p| p.1).collect()), pos));
                i = j;
                continue;
            }
            other => return Err(Error::Syntax { pos, msg: format!("unexpected character `{other}`") }),
        };
        out.push((tok, pos));
        i += width;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
}

fn is_keyword(s: &str) -> bool {
    s == "forall" || s == "exists"
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> usize {
        self.toks[self.i].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].0.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let a = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let b = self.formula()?;
            return Ok(Formula::imp(a, b));
        }
        Ok(a)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut a = self.conjunction()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            a = Formula::or(a, self.conjunction()?);
        }
        Ok(a)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut a = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            a = Formula::and(a, self.unary()?);
        }
        Ok(a)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Tok::Ident(q) if is_keyword(&q) => {
                self.bump();
                let v = match self.bump() {
                    Tok::Ident(v) if !is_keyword(&v) && v.starts_with(|c: char| c.is_ascii_lowercase() || c == '_') => v,
                    _ => {
                        self.i -= 1;
                        return self.err("expected a bound variable");
                    }
                };
                self.expect(Tok::Dot, "`.` after the bound variable")?;
                let body = self.formula()?;
                Ok(if q == "forall" { Formula::forall(&v, body) } else { Formula::exists(&v, body) })
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula> {
        if *self.peek() == Tok::LParen {
            let save = self.i;
            self.bump();
            if let Ok(f) = self.formula() {
                if *self.peek() == Tok::RParen {
                    self.bump();
                    if !matches!(self.peek(), Tok::Eq | Tok::Plus | Tok::Star | Tok::Quote) {
                        return Ok(f);
                    }
                }
            }
            self.i = save;
        }
        if let Tok::Ident(name) = self.peek().clone() {
            if name.starts_with(|c: char| c.is_ascii_uppercase()) {
                self.bump();
                let args = if *self.peek() == Tok::LParen { self.args()? } else { Vec::new() };
                return Ok(Formula::pred(&name, args));
            }
        }
        let s = self.term()?;
        if *self.peek() != Tok::Eq {
            return self.err("expected `=`");
        }
        self.bump();
        let t = self.term()?;
        Ok(Formula::eq(s, t))
    }

    fn args(&mut self) -> Result<Vec<Term>> {
        self.expect(Tok::LParen, "`(`")?;
        let mut out = Vec::new();
        if *self.peek() == Tok::RParen {
            self.bump();
            return Ok(out);
        }
        loop {
            out.push(self.term()?);
            match self.bump() {
                Tok::Comma => continue,
                Tok::RParen => return Ok(out),
                _ => {
                    self.i -= 1;
                    return self.err("expected `,` or `)`");
                }
            }
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut a = self.product()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            a = Term::add(a, self.product()?);
        }
        Ok(a)
    }

    fn product(&mut self) -> Result<Term> {
        let mut a = self.postfix()?;
        while *self.peek() == Tok::Star {
            self.bump();
            a = Term::mul(a, self.postfix()?);
        }
        Ok(a)
    }

    fn postfix(&mut self) -> Result<Term> {
        let mut a = self.primary()?;
        while *self.peek() == Tok::Quote {
            self.bump();
            a = Term::succ(a);
        }
        Ok(a)
    }

    fn primary(&mut self) -> Result<Term> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(Term::num(n))
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Tok::Ident(name) if !is_keyword(&name) && name.starts_with(|c: char| c.is_ascii_lowercase() || c == '_') => {
                self.bump();
                if *self.peek() == Tok::LParen {
                    let args = self.args()?;
                    if name == "s" {
                        if args.len() != 1 {
                            return self.err("`s` takes exactly one argument");
                        }
                        return Ok(Term::succ(args.into_iter().next().unwrap()));
                    }
                    return Ok(Term::App(sym(&name), args));
                }
                Ok(Term::Var(sym(&name)))
            }
            _ => self.err("expected a term"),
        }
    }

    fn finish(&self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }
}

pub fn parse_term(src: &str) -> Result<Term> {
    let mut p = Parser { toks: lex(src)?, i: 0 };
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_formula(src: &str) -> Result<Formula> {
    let mut p = Parser { toks: lex(src)?, i: 0 };
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_sequent(src: &str) -> Result<Sequent> {
    let mut p = Parser { toks: lex(src)?, i: 0 };
    let ant = if *p.peek() == Tok::Turnstile { None } else { Some(p.formula()?) };
    p.expect(Tok::Turnstile, "`|-`")?;
    let suc = if *p.peek() == Tok::End { None } else { Some(p.formula()?) };
    p.finish()?;
    Ok(Sequent { ant, suc })
}
