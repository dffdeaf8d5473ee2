//! Canonical printing. `parse(print(x)) == x` for every term and formula.

use std::fmt;

use super::{Formula, Term};

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => write!(f, "0"),
            Term::Var(n) => write!(f, "{n}"),
            Term::Succ(t) => write!(f, "S({t})"),
            Term::App(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

// Precedence levels: quantifiers 0, `<->` 1, `->` 2, `|` 3, `&` 4,
// `~` 5, equations 6.
fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Forall(_, _, _) | Formula::Exists(_, _, _) | Formula::ExistsUnique(_, _, _) => 0,
        Formula::Iff(_, _) => 1,
        Formula::Implies(_, _) => 2,
        Formula::Or(_, _) => 3,
        Formula::And(_, _) => 4,
        Formula::Not(_) => 5,
        Formula::Eq(_, _) => 6,
    }
}

fn write_prec(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    let p = prec(f);
    let parens = p < min;
    if parens {
        write!(out, "(")?;
    }
    match f {
        Formula::Eq(a, b) => write!(out, "{a}={b}")?,
        Formula::Not(inner) => {
            write!(out, "~")?;
            if matches!(**inner, Formula::Not(_)) {
                write_prec(inner, 5, out)?;
            } else {
                write!(out, "(")?;
                write_prec(inner, 0, out)?;
                write!(out, ")")?;
            }
        }
        Formula::And(a, b) => {
            write_prec(a, 4, out)?;
            write!(out, " & ")?;
            write_prec(b, 5, out)?;
        }
        Formula::Or(a, b) => {
            write_prec(a, 3, out)?;
            write!(out, " | ")?;
            write_prec(b, 4, out)?;
        }
        Formula::Implies(a, b) => {
            write_prec(a, 3, out)?;
            write!(out, " -> ")?;
            write_prec(b, 2, out)?;
        }
        Formula::Iff(a, b) => {
            write_prec(a, 2, out)?;
            write!(out, " <-> ")?;
            write_prec(b, 1, out)?;
        }
        Formula::Forall(x, s, body) => {
            write!(out, "all {x}:{s}. ")?;
            write_prec(body, 0, out)?;
        }
        Formula::Exists(x, s, body) => {
            write!(out, "ex {x}:{s}. ")?;
            write_prec(body, 0, out)?;
        }
        Formula::ExistsUnique(x, s, body) => {
            write!(out, "ex! {x}:{s}. ")?;
            write_prec(body, 0, out)?;
        }
    }
    if parens {
        write!(out, ")")?;
    }
    Ok(())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prec(self, 0, f)
    }
}
