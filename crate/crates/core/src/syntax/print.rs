//! Canonical text form. Output always parses back to the same tree.

use std::fmt::{self, Display, Formatter, Write};

use super::formula::{Formula, Sequent, EQ};
use super::term::{Term, ADD, MUL};

fn term_prec(t: &Term) -> u8 {
    match t {
        Term::App(f, args) if args.len() == 2 && &**f == ADD => 1,
        Term::App(f, args) if args.len() == 2 && &**f == MUL => 2,
        _ => 3,
    }
}

fn write_term(out: &mut Formatter<'_>, t: &Term, min: u8) -> fmt::Result {
    let p = term_prec(t);
    if p < min {
        out.write_char('(')?;
    }
    match t {
        Term::Var(v) => out.write_str(v)?,
        Term::Zero => out.write_char('0')?,
        Term::Succ(inner) => match t.numeral_value() {
            Some(n) => write!(out, "{n}")?,
            None => {
                out.write_str("s(")?;
                write_term(out, inner, 0)?;
                out.write_char(')')?;
            }
        },
        Term::App(f, args) if p < 3 => {
            write_term(out, &args[0], p)?;
            write!(out, " {f} ")?;
            write_term(out, &args[1], p + 1)?;
        }
        Term::App(f, args) => {
            write!(out, "{f}(")?;
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.write_str(", ")?;
                }
                write_term(out, a, 0)?;
            }
            out.write_char(')')?;
        }
    }
    if p < min {
        out.write_char(')')?;
    }
    Ok(())
}

impl Display for Term {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_term(f, self, 0)
    }
}

// Levels: 1 implication, 2 disjunction, 3 conjunction, 4 unary and atoms.
// Quantifiers get level 0 so that they are parenthesized whenever they are an
// operand; their own scope runs to the end.
fn formula_prec(f: &Formula) -> u8 {
    match f {
        Formula::Forall(..) | Formula::Exists(..) => 0,
        Formula::Imp(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        Formula::Neg(..) | Formula::Prime(..) => 4,
    }
}

fn write_formula(out: &mut Formatter<'_>, f: &Formula, min: u8) -> fmt::Result {
    let p = formula_prec(f);
    let paren = p < min;
    if paren {
        out.write_char('(')?;
    }
    match f {
        Formula::Prime(name, args) if &**name == EQ && args.len() == 2 => {
            write_term(out, &args[0], 0)?;
            out.write_str(" = ")?;
            write_term(out, &args[1], 0)?;
        }
        Formula::Prime(name, args) => {
            out.write_str(name)?;
            if !args.is_empty() {
                out.write_char('(')?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.write_str(", ")?;
                    }
                    write_term(out, a, 0)?;
                }
                out.write_char(')')?;
            }
        }
        Formula::Neg(a) => {
            out.write_char('~')?;
            let eq_atom = matches!(&**a, Formula::Prime(n, args) if &**n == EQ && args.len() == 2);
            if eq_atom {
                out.write_char('(')?;
                write_formula(out, a, 0)?;
                out.write_char(')')?;
            } else {
                write_formula(out, a, 4)?;
            }
        }
        Formula::And(a, b) => {
            write_formula(out, a, 3)?;
            out.write_str(" & ")?;
            write_formula(out, b, 4)?;
        }
        Formula::Or(a, b) => {
            write_formula(out, a, 2)?;
            out.write_str(" | ")?;
            write_formula(out, b, 3)?;
        }
        Formula::Imp(a, b) => {
            write_formula(out, a, 2)?;
            out.write_str(" -> ")?;
            write_formula(out, b, 1)?;
        }
        Formula::Forall(v, a) | Formula::Exists(v, a) => {
            let q = if matches!(f, Formula::Forall(..)) { "forall" } else { "exists" };
            write!(out, "{q} {v}. ")?;
            write_formula(out, a, 0)?;
        }
    }
    if paren {
        out.write_char(')')?;
    }
    Ok(())
}

impl Display for Formula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_formula(f, self, 0)
    }
}

impl Display for Sequent {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match (&self.ant, &self.suc) {
            (Some(a), Some(b)) => write!(f, "{a} |- {b}"),
            (Some(a), None) => write!(f, "{a} |-"),
            (None, Some(b)) => write!(f, "|- {b}"),
            (None, None) => f.write_str("|-"),
        }
    }
}
