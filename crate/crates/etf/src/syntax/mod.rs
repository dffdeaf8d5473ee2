//! Abstract and concrete syntax: sorts, contexts, terms, formulas,
//! substitution, free variables, alpha-equivalence, and `ex!` desugaring.

use std::collections::BTreeSet;
use std::fmt;

mod lexer;
mod parser;
mod printer;

pub use parser::{parse_context, parse_context_term, parse_formula, parse_term, ParseOptions};

/// The four sorts: numbers and function sorts of arity 1, 2, 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    N,
    F1,
    F2,
    F3,
}

impl Sort {
    /// Arity of a function sort; `None` for the number sort.
    pub fn arity(self) -> Option<usize> {
        match self {
            Sort::N => None,
            Sort::F1 => Some(1),
            Sort::F2 => Some(2),
            Sort::F3 => Some(3),
        }
    }

    pub fn function(arity: usize) -> Option<Sort> {
        match arity {
            1 => Some(Sort::F1),
            2 => Some(Sort::F2),
            3 => Some(Sort::F3),
            _ => None,
        }
    }

    pub fn from_name(s: &str) -> Option<Sort> {
        match s {
            "N" => Some(Sort::N),
            "F1" => Some(Sort::F1),
            "F2" => Some(Sort::F2),
            "F3" => Some(Sort::F3),
            _ => None,
        }
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sort::N => write!(f, "N"),
            Sort::F1 => write!(f, "F1"),
            Sort::F2 => write!(f, "F2"),
            Sort::F3 => write!(f, "F3"),
        }
    }
}

/// Ordered declarations mapping identifiers to sorts. Identifiers are
/// unique; insertion order is preserved (it matters for round-tripping
/// proof-script headers).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Context {
    decls: Vec<(String, Sort)>,
}

impl Context {
    pub fn new() -> Context {
        Context::default()
    }

    pub fn declare(&mut self, name: &str, sort: Sort) -> Result<(), SyntaxError> {
        if self.decls.iter().any(|(n, _)| n == name) {
            return Err(SyntaxError::DuplicateDecl { name: name.to_string() });
        }
        self.decls.push((name.to_string(), sort));
        Ok(())
    }

    /// Declare, replacing any existing declaration of the same name.
    pub fn declare_or_replace(&mut self, name: &str, sort: Sort) {
        if let Some(entry) = self.decls.iter_mut().find(|(n, _)| n == name) {
            entry.1 = sort;
        } else {
            self.decls.push((name.to_string(), sort));
        }
    }

    pub fn sort_of(&self, name: &str) -> Option<Sort> {
        self.decls.iter().find(|(n, _)| n == name).map(|(_, s)| *s)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.sort_of(name).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Sort)> {
        self.decls.iter().map(|(n, s)| (n.as_str(), *s))
    }

    pub fn is_empty(&self) -> bool {
        self.decls.is_empty()
    }

    /// Builds a context from `(name, sort)` pairs, failing on duplicates.
    pub fn from_pairs<'a, I: IntoIterator<Item = (&'a str, Sort)>>(
        pairs: I,
    ) -> Result<Context, SyntaxError> {
        let mut ctx = Context::new();
        for (n, s) in pairs {
            ctx.declare(n, s)?;
        }
        Ok(ctx)
    }
}

/// Terms of the language. Every term has sort `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Zero,
    Var(String),
    Succ(Box<Term>),
    /// Application of a function variable; the arity is the argument count.
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn succ(t: Term) -> Term {
        Term::Succ(Box::new(t))
    }

    pub fn app(name: &str, args: Vec<Term>) -> Term {
        Term::App(name.to_string(), args)
    }

    /// `S` applied `k` times to `0`.
    pub fn numeral(k: u64) -> Term {
        let mut t = Term::Zero;
        for _ in 0..k {
            t = Term::succ(t);
        }
        t
    }

    pub fn is_numeral(&self) -> bool {
        self.numeral_value().is_some()
    }

    pub fn numeral_value(&self) -> Option<u64> {
        let mut k = 0u64;
        let mut t = self;
        loop {
            match t {
                Term::Zero => return Some(k),
                Term::Succ(inner) => {
                    k += 1;
                    t = inner;
                }
                _ => return None,
            }
        }
    }

    fn collect_free(&self, acc: &mut BTreeSet<(String, Sort)>) {
        match self {
            Term::Zero => {}
            Term::Var(n) => {
                acc.insert((n.clone(), Sort::N));
            }
            Term::Succ(t) => t.collect_free(acc),
            Term::App(f, args) => {
                if let Some(sort) = Sort::function(args.len()) {
                    acc.insert((f.clone(), sort));
                }
                for a in args {
                    a.collect_free(acc);
                }
            }
        }
    }

    pub fn free_vars(&self) -> BTreeSet<(String, Sort)> {
        let mut acc = BTreeSet::new();
        self.collect_free(&mut acc);
        acc
    }

    /// Substitutes `replacement` for the number variable `var`. Terms bind
    /// nothing, so this is plain structural replacement.
    pub fn subst_num(&self, var: &str, replacement: &Term) -> Term {
        match self {
            Term::Zero => Term::Zero,
            Term::Var(n) => {
                if n == var {
                    replacement.clone()
                } else {
                    self.clone()
                }
            }
            Term::Succ(t) => Term::succ(t.subst_num(var, replacement)),
            Term::App(f, args) => Term::App(
                f.clone(),
                args.iter().map(|a| a.subst_num(var, replacement)).collect(),
            ),
        }
    }

    /// Renames a function variable (head positions only).
    pub fn rename_fvar(&self, from: &str, to: &str) -> Term {
        match self {
            Term::Zero | Term::Var(_) => self.clone(),
            Term::Succ(t) => Term::succ(t.rename_fvar(from, to)),
            Term::App(f, args) => {
                let name = if f == from { to.to_string() } else { f.clone() };
                Term::App(name, args.iter().map(|a| a.rename_fvar(from, to)).collect())
            }
        }
    }

    pub fn mentions_name(&self, name: &str) -> bool {
        match self {
            Term::Zero => false,
            Term::Var(n) => n == name,
            Term::Succ(t) => t.mentions_name(name),
            Term::App(f, args) => f == name || args.iter().any(|a| a.mentions_name(name)),
        }
    }
}

/// Formulas. Atomic formulas are equations between terms; quantifiers may
/// bind variables of any sort. `ExistsUnique` is surface syntax that
/// [`Formula::desugar`] eliminates before any kernel use.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(String, Sort, Box<Formula>),
    Exists(String, Sort, Box<Formula>),
    ExistsUnique(String, Sort, Box<Formula>),
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn forall(var: &str, sort: Sort, body: Formula) -> Formula {
        Formula::Forall(var.to_string(), sort, Box::new(body))
    }

    pub fn exists(var: &str, sort: Sort, body: Formula) -> Formula {
        Formula::Exists(var.to_string(), sort, Box::new(body))
    }

    pub fn exists_unique(var: &str, sort: Sort, body: Formula) -> Formula {
        Formula::ExistsUnique(var.to_string(), sort, Box::new(body))
    }

    /// Conjunction of a non-empty list, right-nested.
    pub fn conj(mut fs: Vec<Formula>) -> Formula {
        let last = fs.pop().expect("conj of empty list");
        fs.into_iter().rev().fold(last, |acc, f| Formula::and(f, acc))
    }

    pub fn is_open(&self) -> bool {
        match self {
            Formula::Eq(_, _) => true,
            Formula::Not(f) => f.is_open(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => a.is_open() && b.is_open(),
            Formula::Forall(_, _, _) | Formula::Exists(_, _, _) | Formula::ExistsUnique(_, _, _) => {
                false
            }
        }
    }

    pub fn contains_exists_unique(&self) -> bool {
        match self {
            Formula::Eq(_, _) => false,
            Formula::Not(f) => f.contains_exists_unique(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => a.contains_exists_unique() || b.contains_exists_unique(),
            Formula::Forall(_, _, f) | Formula::Exists(_, _, f) => f.contains_exists_unique(),
            Formula::ExistsUnique(_, _, _) => true,
        }
    }

    fn collect_free(&self, bound: &mut Vec<(String, Sort)>, acc: &mut BTreeSet<(String, Sort)>) {
        match self {
            Formula::Eq(a, b) => {
                for (name, sort) in a.free_vars().into_iter().chain(b.free_vars()) {
                    if !bound.iter().any(|(n, s)| *n == name && *s == sort) {
                        acc.insert((name, sort));
                    }
                }
            }
            Formula::Not(f) => f.collect_free(bound, acc),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_free(bound, acc);
                b.collect_free(bound, acc);
            }
            Formula::Forall(x, s, f) | Formula::Exists(x, s, f) | Formula::ExistsUnique(x, s, f) => {
                bound.push((x.clone(), *s));
                f.collect_free(bound, acc);
                bound.pop();
            }
        }
    }

    pub fn free_vars(&self) -> BTreeSet<(String, Sort)> {
        let mut acc = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut acc);
        acc
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Does `name` occur free (at any sort)?
    pub fn has_free_name(&self, name: &str) -> bool {
        self.free_vars().iter().any(|(n, _)| n == name)
    }

    /// Capture-avoiding substitution of a term for a number variable.
    /// Bound variables that would capture free variables of `replacement`
    /// are renamed with the smallest unused numeric suffix.
    pub fn subst_num(&self, var: &str, replacement: &Term) -> Formula {
        let repl_names: BTreeSet<String> =
            replacement.free_vars().into_iter().map(|(n, _)| n).collect();
        self.subst_num_inner(var, replacement, &repl_names)
    }

    fn subst_num_inner(
        &self,
        var: &str,
        replacement: &Term,
        repl_names: &BTreeSet<String>,
    ) -> Formula {
        match self {
            Formula::Eq(a, b) => {
                Formula::Eq(a.subst_num(var, replacement), b.subst_num(var, replacement))
            }
            Formula::Not(f) => Formula::not(f.subst_num_inner(var, replacement, repl_names)),
            Formula::And(a, b) => Formula::and(
                a.subst_num_inner(var, replacement, repl_names),
                b.subst_num_inner(var, replacement, repl_names),
            ),
            Formula::Or(a, b) => Formula::or(
                a.subst_num_inner(var, replacement, repl_names),
                b.subst_num_inner(var, replacement, repl_names),
            ),
            Formula::Implies(a, b) => Formula::implies(
                a.subst_num_inner(var, replacement, repl_names),
                b.subst_num_inner(var, replacement, repl_names),
            ),
            Formula::Iff(a, b) => Formula::iff(
                a.subst_num_inner(var, replacement, repl_names),
                b.subst_num_inner(var, replacement, repl_names),
            ),
            Formula::Forall(x, s, f) | Formula::Exists(x, s, f) | Formula::ExistsUnique(x, s, f) => {
                let rebuild = |x: String, s: Sort, f: Formula| match self {
                    Formula::Forall(_, _, _) => Formula::Forall(x, s, Box::new(f)),
                    Formula::Exists(_, _, _) => Formula::Exists(x, s, Box::new(f)),
                    _ => Formula::ExistsUnique(x, s, Box::new(f)),
                };
                if x == var {
                    // Shadowed: substitution stops here.
                    return rebuild(x.clone(), *s, (**f).clone());
                }
                if repl_names.contains(x) && f.has_free_name(var) {
                    // The binder would capture a variable of the replacement.
                    let mut avoid: BTreeSet<String> =
                        f.free_vars().into_iter().map(|(n, _)| n).collect();
                    avoid.extend(repl_names.iter().cloned());
                    avoid.insert(var.to_string());
                    let fresh = fresh_name(x, &avoid);
                    let renamed = match s {
                        Sort::N => f.subst_num(x, &Term::var(&fresh)),
                        _ => f.subst_fvar(x, &fresh),
                    };
                    rebuild(fresh, *s, renamed.subst_num_inner(var, replacement, repl_names))
                } else {
                    rebuild(
                        x.clone(),
                        *s,
                        f.subst_num_inner(var, replacement, repl_names),
                    )
                }
            }
        }
    }

    /// Capture-avoiding renaming of a function variable to another
    /// function variable of the same sort.
    pub fn subst_fvar(&self, var: &str, newname: &str) -> Formula {
        match self {
            Formula::Eq(a, b) => {
                Formula::Eq(a.rename_fvar(var, newname), b.rename_fvar(var, newname))
            }
            Formula::Not(f) => Formula::not(f.subst_fvar(var, newname)),
            Formula::And(a, b) => {
                Formula::and(a.subst_fvar(var, newname), b.subst_fvar(var, newname))
            }
            Formula::Or(a, b) => {
                Formula::or(a.subst_fvar(var, newname), b.subst_fvar(var, newname))
            }
            Formula::Implies(a, b) => {
                Formula::implies(a.subst_fvar(var, newname), b.subst_fvar(var, newname))
            }
            Formula::Iff(a, b) => {
                Formula::iff(a.subst_fvar(var, newname), b.subst_fvar(var, newname))
            }
            Formula::Forall(x, s, f) | Formula::Exists(x, s, f) | Formula::ExistsUnique(x, s, f) => {
                let rebuild = |x: String, s: Sort, f: Formula| match self {
                    Formula::Forall(_, _, _) => Formula::Forall(x, s, Box::new(f)),
                    Formula::Exists(_, _, _) => Formula::Exists(x, s, Box::new(f)),
                    _ => Formula::ExistsUnique(x, s, Box::new(f)),
                };
                if x == var {
                    return rebuild(x.clone(), *s, (**f).clone());
                }
                if x == newname && f.has_free_name(var) {
                    let mut avoid: BTreeSet<String> =
                        f.free_vars().into_iter().map(|(n, _)| n).collect();
                    avoid.insert(var.to_string());
                    avoid.insert(newname.to_string());
                    let fresh = fresh_name(x, &avoid);
                    let renamed = match s {
                        Sort::N => f.subst_num(x, &Term::var(&fresh)),
                        _ => f.subst_fvar(x, &fresh),
                    };
                    rebuild(fresh, *s, renamed.subst_fvar(var, newname))
                } else {
                    rebuild(x.clone(), *s, f.subst_fvar(var, newname))
                }
            }
        }
    }

    /// Eliminates every `ex!`, innermost first. `ex! x:σ. ψ` becomes
    /// `ex x:σ. (ψ & all y:σ. (ψ[y/x] -> y=x))` with `y` fresh; at
    /// function sorts the equation `y=x` is expressed pointwise.
    pub fn desugar(&self) -> Formula {
        match self {
            Formula::Eq(_, _) => self.clone(),
            Formula::Not(f) => Formula::not(f.desugar()),
            Formula::And(a, b) => Formula::and(a.desugar(), b.desugar()),
            Formula::Or(a, b) => Formula::or(a.desugar(), b.desugar()),
            Formula::Implies(a, b) => Formula::implies(a.desugar(), b.desugar()),
            Formula::Iff(a, b) => Formula::iff(a.desugar(), b.desugar()),
            Formula::Forall(x, s, f) => Formula::Forall(x.clone(), *s, Box::new(f.desugar())),
            Formula::Exists(x, s, f) => Formula::Exists(x.clone(), *s, Box::new(f.desugar())),
            Formula::ExistsUnique(x, s, f) => {
                let body = f.desugar();
                let mut avoid: BTreeSet<String> =
                    body.free_vars().into_iter().map(|(n, _)| n).collect();
                avoid.insert(x.clone());
                let y = fresh_name(x, &avoid);
                avoid.insert(y.clone());
                let (renamed, equality) = match s {
                    Sort::N => (
                        body.subst_num(x, &Term::var(&y)),
                        Formula::eq(Term::var(&y), Term::var(x)),
                    ),
                    _ => {
                        let k = s.arity().unwrap();
                        let mut args = Vec::new();
                        for _ in 0..k {
                            let a = fresh_name("a", &avoid);
                            avoid.insert(a.clone());
                            args.push(a);
                        }
                        let arg_terms: Vec<Term> = args.iter().map(|a| Term::var(a)).collect();
                        let mut eq = Formula::eq(
                            Term::App(x.clone(), arg_terms.clone()),
                            Term::App(y.clone(), arg_terms),
                        );
                        for a in args.iter().rev() {
                            eq = Formula::forall(a, Sort::N, eq);
                        }
                        (body.subst_fvar(x, &y), eq)
                    }
                };
                let uniq = Formula::forall(&y, *s, Formula::implies(renamed, equality));
                Formula::Exists(x.clone(), *s, Box::new(Formula::and(body, uniq)))
            }
        }
    }
}

/// Smallest unused name of the form `base`, `base1`, `base2`, ...
/// The base first has any numeric suffix stripped so renamed names do not
/// pile up suffixes.
pub fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    let stem: &str = {
        let trimmed = base.trim_end_matches(|c: char| c.is_ascii_digit());
        if trimmed.is_empty() {
            base
        } else {
            trimmed
        }
    };
    if !avoid.contains(stem) {
        return stem.to_string();
    }
    let mut i = 1u64;
    loop {
        let candidate = format!("{stem}{i}");
        if !avoid.contains(&candidate) {
            return candidate;
        }
        i += 1;
    }
}

/// Alpha-equivalence: equality up to renaming of bound variables.
pub fn alpha_eq(a: &Formula, b: &Formula) -> bool {
    fn term_eq(a: &Term, b: &Term, la: &[(String, usize)], lb: &[(String, usize)]) -> bool {
        fn lookup(name: &str, env: &[(String, usize)]) -> Option<usize> {
            env.iter().rev().find(|(n, _)| n == name).map(|(_, i)| *i)
        }
        match (a, b) {
            (Term::Zero, Term::Zero) => true,
            (Term::Var(x), Term::Var(y)) => match (lookup(x, la), lookup(y, lb)) {
                (Some(i), Some(j)) => i == j,
                (None, None) => x == y,
                _ => false,
            },
            (Term::Succ(x), Term::Succ(y)) => term_eq(x, y, la, lb),
            (Term::App(f, xs), Term::App(g, ys)) => {
                if xs.len() != ys.len() {
                    return false;
                }
                let heads = match (lookup(f, la), lookup(g, lb)) {
                    (Some(i), Some(j)) => i == j,
                    (None, None) => f == g,
                    _ => false,
                };
                heads && xs.iter().zip(ys).all(|(x, y)| term_eq(x, y, la, lb))
            }
            _ => false,
        }
    }

    fn go(
        a: &Formula,
        b: &Formula,
        la: &mut Vec<(String, usize)>,
        lb: &mut Vec<(String, usize)>,
        depth: usize,
    ) -> bool {
        match (a, b) {
            (Formula::Eq(s1, t1), Formula::Eq(s2, t2)) => {
                term_eq(s1, s2, la, lb) && term_eq(t1, t2, la, lb)
            }
            (Formula::Not(x), Formula::Not(y)) => go(x, y, la, lb, depth),
            (Formula::And(x1, y1), Formula::And(x2, y2))
            | (Formula::Or(x1, y1), Formula::Or(x2, y2))
            | (Formula::Implies(x1, y1), Formula::Implies(x2, y2))
            | (Formula::Iff(x1, y1), Formula::Iff(x2, y2)) => {
                go(x1, x2, la, lb, depth) && go(y1, y2, la, lb, depth)
            }
            (Formula::Forall(x, s1, f1), Formula::Forall(y, s2, f2))
            | (Formula::Exists(x, s1, f1), Formula::Exists(y, s2, f2))
            | (Formula::ExistsUnique(x, s1, f1), Formula::ExistsUnique(y, s2, f2)) => {
                if s1 != s2 {
                    return false;
                }
                la.push((x.clone(), depth));
                lb.push((y.clone(), depth));
                let r = go(f1, f2, la, lb, depth + 1);
                la.pop();
                lb.pop();
                r
            }
            _ => false,
        }
    }

    go(a, b, &mut Vec::new(), &mut Vec::new(), 0)
}

/// A canonical alpha-variant: bound names are rewritten to `#0`, `#1`, ...
/// in binder order. Useful as a hash key where alpha-equivalent formulas
/// must collide ( `#` cannot appear in user identifiers).
pub fn alpha_canon(f: &Formula) -> Formula {
    fn canon_term(t: &Term, env: &[(String, String)]) -> Term {
        fn lookup<'a>(name: &str, env: &'a [(String, String)]) -> Option<&'a str> {
            env.iter().rev().find(|(n, _)| n == name).map(|(_, c)| c.as_str())
        }
        match t {
            Term::Zero => Term::Zero,
            Term::Var(x) => match lookup(x, env) {
                Some(c) => Term::Var(c.to_string()),
                None => t.clone(),
            },
            Term::Succ(inner) => Term::succ(canon_term(inner, env)),
            Term::App(f, args) => {
                let head = lookup(f, env).map(|c| c.to_string()).unwrap_or_else(|| f.clone());
                Term::App(head, args.iter().map(|a| canon_term(a, env)).collect())
            }
        }
    }

    fn go(f: &Formula, env: &mut Vec<(String, String)>, next: &mut usize) -> Formula {
        match f {
            Formula::Eq(a, b) => Formula::Eq(canon_term(a, env), canon_term(b, env)),
            Formula::Not(x) => Formula::not(go(x, env, next)),
            Formula::And(a, b) => Formula::and(go(a, env, next), go(b, env, next)),
            Formula::Or(a, b) => Formula::or(go(a, env, next), go(b, env, next)),
            Formula::Implies(a, b) => Formula::implies(go(a, env, next), go(b, env, next)),
            Formula::Iff(a, b) => Formula::iff(go(a, env, next), go(b, env, next)),
            Formula::Forall(x, s, body)
            | Formula::Exists(x, s, body)
            | Formula::ExistsUnique(x, s, body) => {
                let c = format!("#{next}");
                *next += 1;
                env.push((x.clone(), c.clone()));
                let inner = go(body, env, next);
                env.pop();
                match f {
                    Formula::Forall(_, _, _) => Formula::Forall(c, *s, Box::new(inner)),
                    Formula::Exists(_, _, _) => Formula::Exists(c, *s, Box::new(inner)),
                    _ => Formula::ExistsUnique(c, *s, Box::new(inner)),
                }
            }
        }
    }

    go(f, &mut Vec::new(), &mut 0)
}

/// Errors from parsing and context handling.
#[derive(Debug, Clone, PartialEq)]
pub enum SyntaxError {
    Syntax { pos: usize, expected: String, found: String },
    Sort { pos: usize, message: String },
    Unbound { pos: usize, name: String },
    DuplicateDecl { name: String },
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyntaxError::Syntax { pos, expected, found } => {
                write!(f, "syntax error at byte {pos}: expected {expected}, found {found}")
            }
            SyntaxError::Sort { pos, message } => write!(f, "sort error at byte {pos}: {message}"),
            SyntaxError::Unbound { pos, name } => {
                write!(f, "unbound identifier `{name}` at byte {pos}")
            }
            SyntaxError::DuplicateDecl { name } => write!(f, "duplicate declaration of `{name}`"),
        }
    }
}

impl std::error::Error for SyntaxError {}

#[cfg(test)]
mod tests;
