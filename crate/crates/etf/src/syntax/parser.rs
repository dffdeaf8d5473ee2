//! Recursive-descent parser for terms, formulas, context files, and
//! single-hole context terms.
//!
//! Precedence (loosest to tightest): `<->`, `->`, `|`, `&`, `~`.
//! `->` and `<->` are right-associative, `|` and `&` left-associative,
//! and quantifier scope extends maximally to the right.

use super::lexer::{describe, tokenize, Tok, Token};
use super::{Context, Formula, Sort, SyntaxError, Term};

/// Parser configuration. With `auto_declare_nums`, an undeclared
/// identifier used as a plain variable is treated as a number variable
/// (handy on the command line); applications of undeclared identifiers
/// are always errors.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    pub auto_declare_nums: bool,
    pub allow_hole: bool,
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    ctx: &'a Context,
    scope: Vec<(String, Sort)>,
    opts: ParseOptions,
}

impl<'a> Parser<'a> {
    fn new(input: &str, ctx: &'a Context, opts: ParseOptions) -> Result<Parser<'a>, SyntaxError> {
        Ok(Parser { toks: tokenize(input)?, pos: 0, ctx, scope: Vec::new(), opts })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<Token, SyntaxError> {
        let t = self.next();
        if t.tok == tok {
            Ok(t)
        } else {
            Err(SyntaxError::Syntax {
                pos: t.pos,
                expected: describe(&tok),
                found: describe(&t.tok),
            })
        }
    }

    fn sort_of(&self, name: &str) -> Option<Sort> {
        self.scope
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, s)| *s)
            .or_else(|| self.ctx.sort_of(name))
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        let t = self.next();
        match t.tok {
            Tok::Zero => Ok(Term::Zero),
            Tok::Hole if self.opts.allow_hole => Ok(Term::var("_")),
            Tok::SuccSym => {
                self.expect(Tok::LParen)?;
                let inner = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(Term::succ(inner))
            }
            Tok::Ident(name) => {
                if self.peek().tok == Tok::LParen {
                    self.next();
                    let mut args = vec![self.term()?];
                    while self.peek().tok == Tok::Comma {
                        self.next();
                        args.push(self.term()?);
                    }
                    self.expect(Tok::RParen)?;
                    match self.sort_of(&name) {
                        Some(s) if s.arity() == Some(args.len()) => Ok(Term::App(name, args)),
                        Some(s) => Err(SyntaxError::Sort {
                            pos: t.pos,
                            message: format!(
                                "`{name}` has sort {s} but is applied to {} argument(s)",
                                args.len()
                            ),
                        }),
                        None => Err(SyntaxError::Unbound { pos: t.pos, name }),
                    }
                } else {
                    match self.sort_of(&name) {
                        Some(Sort::N) => Ok(Term::Var(name)),
                        Some(s) => Err(SyntaxError::Sort {
                            pos: t.pos,
                            message: format!("`{name}` has sort {s} but is used as a number"),
                        }),
                        None if self.opts.auto_declare_nums => Ok(Term::Var(name)),
                        None => Err(SyntaxError::Unbound { pos: t.pos, name }),
                    }
                }
            }
            other => Err(SyntaxError::Syntax {
                pos: t.pos,
                expected: "a term".into(),
                found: describe(&other),
            }),
        }
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        self.iff()
    }

    fn iff(&mut self) -> Result<Formula, SyntaxError> {
        let left = self.implies()?;
        if self.peek().tok == Tok::DArrow {
            self.next();
            let right = self.iff()?;
            Ok(Formula::iff(left, right))
        } else {
            Ok(left)
        }
    }

    fn implies(&mut self) -> Result<Formula, SyntaxError> {
        let left = self.or()?;
        if self.peek().tok == Tok::Arrow {
            self.next();
            let right = self.implies()?;
            Ok(Formula::implies(left, right))
        } else {
            Ok(left)
        }
    }

    fn or(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.and()?;
        while self.peek().tok == Tok::Pipe {
            self.next();
            let rhs = self.and()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.unary()?;
        while self.peek().tok == Tok::Amp {
            self.next();
            let rhs = self.unary()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        match self.peek().tok {
            Tok::Tilde => {
                self.next();
                Ok(Formula::not(self.unary()?))
            }
            Tok::All | Tok::Ex | Tok::ExBang => self.quantifier(),
            _ => self.primary(),
        }
    }

    fn quantifier(&mut self) -> Result<Formula, SyntaxError> {
        let q = self.next();
        let name_tok = self.next();
        let name = match name_tok.tok {
            Tok::Ident(n) => n,
            other => {
                return Err(SyntaxError::Syntax {
                    pos: name_tok.pos,
                    expected: "a bound variable name".into(),
                    found: describe(&other),
                })
            }
        };
        self.expect(Tok::Colon)?;
        let sort_tok = self.next();
        let sort = match sort_tok.tok {
            Tok::SortName(s) => Sort::from_name(&s).unwrap(),
            other => {
                return Err(SyntaxError::Syntax {
                    pos: sort_tok.pos,
                    expected: "a sort (`N`, `F1`, `F2`, `F3`)".into(),
                    found: describe(&other),
                })
            }
        };
        self.expect(Tok::Dot)?;
        self.scope.push((name.clone(), sort));
        let body = self.formula();
        self.scope.pop();
        let body = body?;
        Ok(match q.tok {
            Tok::All => Formula::forall(&name, sort, body),
            Tok::Ex => Formula::exists(&name, sort, body),
            _ => Formula::exists_unique(&name, sort, body),
        })
    }

    fn primary(&mut self) -> Result<Formula, SyntaxError> {
        if self.peek().tok == Tok::LParen {
            self.next();
            let inner = self.formula()?;
            self.expect(Tok::RParen)?;
            Ok(inner)
        } else {
            let lhs = self.term()?;
            self.expect(Tok::Equal)?;
            let rhs = self.term()?;
            Ok(Formula::Eq(lhs, rhs))
        }
    }

    fn finish<T>(&mut self, value: T) -> Result<T, SyntaxError> {
        let t = self.peek();
        if t.tok == Tok::Eof {
            Ok(value)
        } else {
            Err(SyntaxError::Syntax {
                pos: t.pos,
                expected: "end of input".into(),
                found: describe(&t.tok),
            })
        }
    }
}

pub fn parse_term(input: &str, ctx: &Context) -> Result<Term, SyntaxError> {
    parse_term_with(input, ctx, ParseOptions::default())
}

pub fn parse_term_with(
    input: &str,
    ctx: &Context,
    opts: ParseOptions,
) -> Result<Term, SyntaxError> {
    let mut p = Parser::new(input, ctx, opts)?;
    let t = p.term()?;
    p.finish(t)
}

pub fn parse_formula(input: &str, ctx: &Context) -> Result<Formula, SyntaxError> {
    parse_formula_with(input, ctx, ParseOptions::default())
}

pub fn parse_formula_with(
    input: &str,
    ctx: &Context,
    opts: ParseOptions,
) -> Result<Formula, SyntaxError> {
    let mut p = Parser::new(input, ctx, opts)?;
    let f = p.formula()?;
    p.finish(f)
}

/// Parses a term with exactly one hole `_` (for the congruence rule).
pub fn parse_context_term(input: &str, ctx: &Context) -> Result<Term, SyntaxError> {
    let opts = ParseOptions { allow_hole: true, ..ParseOptions::default() };
    let mut p = Parser::new(input, ctx, opts)?;
    let t = p.term()?;
    let t = p.finish(t)?;
    let holes = count_holes(&t);
    if holes != 1 {
        return Err(SyntaxError::Syntax {
            pos: 0,
            expected: "exactly one hole `_`".into(),
            found: format!("{holes} hole(s)"),
        });
    }
    Ok(t)
}

pub fn count_holes(t: &Term) -> usize {
    match t {
        Term::Zero => 0,
        Term::Var(n) => usize::from(n == "_"),
        Term::Succ(inner) => count_holes(inner),
        Term::App(_, args) => args.iter().map(count_holes).sum(),
    }
}

/// Parses a context file: one `decl <ident> : <Sort>` per line. Blank
/// lines and lines starting with `#` are skipped.
pub fn parse_context(input: &str) -> Result<Context, SyntaxError> {
    let mut ctx = Context::new();
    for line in input.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let rest = line.strip_prefix("decl").ok_or_else(|| SyntaxError::Syntax {
            pos: 0,
            expected: "`decl <ident> : <Sort>`".into(),
            found: format!("`{line}`"),
        })?;
        let mut parts = rest.splitn(2, ':');
        let name = parts.next().unwrap_or("").trim();
        let sort_str = parts.next().unwrap_or("").trim();
        let sort = Sort::from_name(sort_str).ok_or_else(|| SyntaxError::Syntax {
            pos: 0,
            expected: "a sort (`N`, `F1`, `F2`, `F3`)".into(),
            found: format!("`{sort_str}`"),
        })?;
        if name.is_empty()
            || !name.chars().next().unwrap().is_ascii_lowercase()
            || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            return Err(SyntaxError::Syntax {
                pos: 0,
                expected: "an identifier".into(),
                found: format!("`{name}`"),
            });
        }
        ctx.declare(name, sort)?;
    }
    Ok(ctx)
}
