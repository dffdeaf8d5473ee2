//! The axiom systems and standalone statements, stored as closed formulas.
//!
//! `COM_fcn` (successor + initial-function + composition axioms, 13 in
//! all) grows to `COMI_fcn` with rudimentary induction, to `PRA_fcn` with
//! primitive recursion, and to `ETF` with the permutation axiom. Each
//! axiom is the universal closure of its schema over all free variables,
//! number and function sorts alike.

use std::fmt;
use std::sync::LazyLock;

use crate::syntax::{parse_formula, Context, Formula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoryId {
    ComFcn,
    ComiFcn,
    PraFcn,
    Etf,
}

impl TheoryId {
    pub fn from_name(s: &str) -> Option<TheoryId> {
        match s {
            "COM_fcn" => Some(TheoryId::ComFcn),
            "COMI_fcn" => Some(TheoryId::ComiFcn),
            "PRA_fcn" => Some(TheoryId::PraFcn),
            "ETF" => Some(TheoryId::Etf),
            _ => None,
        }
    }

    pub fn all() -> [TheoryId; 4] {
        [TheoryId::ComFcn, TheoryId::ComiFcn, TheoryId::PraFcn, TheoryId::Etf]
    }
}

impl fmt::Display for TheoryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoryId::ComFcn => write!(f, "COM_fcn"),
            TheoryId::ComiFcn => write!(f, "COMI_fcn"),
            TheoryId::PraFcn => write!(f, "PRA_fcn"),
            TheoryId::Etf => write!(f, "ETF"),
        }
    }
}

/// A named closed axiom. The stored formula is surface syntax (it may
/// contain `ex!`); the kernel desugars on entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Axiom {
    pub name: String,
    pub formula: Formula,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Theory {
    pub id: TheoryId,
    pub axioms: Vec<Axiom>,
}

impl Theory {
    pub fn axiom(&self, name: &str) -> Option<&Axiom> {
        self.axioms.iter().find(|a| a.name == name)
    }
}

/// A named closed statement usable as an extra premise.
#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub name: String,
    pub formula: Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatementName {
    Wpra,
    Min1,
    Min2,
    Min3,
    Perm,
}

impl StatementName {
    pub fn from_name(s: &str) -> Option<StatementName> {
        match s {
            "WPRA" => Some(StatementName::Wpra),
            "MIN1" => Some(StatementName::Min1),
            "MIN2" => Some(StatementName::Min2),
            "MIN3" => Some(StatementName::Min3),
            "PERM" => Some(StatementName::Perm),
            _ => None,
        }
    }

    pub fn all() -> [StatementName; 5] {
        [
            StatementName::Wpra,
            StatementName::Min1,
            StatementName::Min2,
            StatementName::Min3,
            StatementName::Perm,
        ]
    }
}

impl fmt::Display for StatementName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatementName::Wpra => write!(f, "WPRA"),
            StatementName::Min1 => write!(f, "MIN1"),
            StatementName::Min2 => write!(f, "MIN2"),
            StatementName::Min3 => write!(f, "MIN3"),
            StatementName::Perm => write!(f, "PERM"),
        }
    }
}

const PERM_TEXT: &str =
    "all f:F1. ((all n:N. ex! m:N. f(m)=n) -> ex g:F1. all n:N. f(g(n))=n)";

const AXIOM_SOURCES: [(&str, &str); 16] = [
    ("succ-i", "all n:N. ~(S(n)=0)"),
    ("succ-ii", "all n:N. all m:N. (S(n)=S(m) -> n=m)"),
    ("succ-iii", "all n:N. (~(n=0) -> ex m:N. S(m)=n)"),
    ("init-i", "all n:N. ex f:F1. all m:N. f(m)=n"),
    ("init-ii", "ex f:F3. all m:N. all n:N. all r:N. f(m,n,r)=m"),
    ("init-iii", "ex f:F3. all m:N. all n:N. all r:N. f(m,n,r)=n"),
    ("init-iv", "ex f:F3. all m:N. all n:N. all r:N. f(m,n,r)=r"),
    ("init-v", "ex f:F1. all n:N. f(n)=S(n)"),
    ("comp-i", "all g:F2. ex f:F3. all m:N. all n:N. all r:N. f(m,n,r)=g(m,n)"),
    ("comp-ii", "all g:F1. ex f:F3. all m:N. all n:N. all r:N. f(m,n,r)=g(m)"),
    ("comp-iii", "all g:F3. all r:N. ex f:F2. all m:N. all n:N. f(m,n)=g(m,n,r)"),
    // The schema binds m in f(m), so the closure quantifies n and r as
    // parameters and m inside.
    ("comp-iv", "all g:F3. all n:N. all r:N. ex f:F1. all m:N. f(m)=g(m,n,r)"),
    (
        "comp-v",
        "all g:F3. all h1:F3. all h2:F3. all h3:F3. ex f:F3. all m:N. all n:N. all r:N. \
         f(m,n,r)=g(h1(m,n,r),h2(m,n,r),h3(m,n,r))",
    ),
    (
        "ind",
        "all f:F1. all g:F1. all n:N. ((f(0)=g(0) & all m:N. (f(m)=g(m) -> f(S(m))=g(S(m)))) \
         -> f(n)=g(n))",
    ),
    (
        "pra",
        "all g:F1. all h:F3. ex f:F2. all m:N. (f(m,0)=g(m) & all n:N. f(m,S(n))=h(m,n,f(m,n)))",
    ),
    ("perm", PERM_TEXT),
];

fn parse_closed(text: &str) -> Formula {
    let f = parse_formula(text, &Context::new())
        .unwrap_or_else(|e| panic!("bad axiom source `{text}`: {e}"));
    assert!(f.is_closed(), "axiom source not closed: {text}");
    f
}

static AXIOMS: LazyLock<Vec<Axiom>> = LazyLock::new(|| {
    AXIOM_SOURCES
        .iter()
        .map(|(name, text)| Axiom { name: name.to_string(), formula: parse_closed(text) })
        .collect()
});

/// The fixed, closed axiom list of a system. Deterministic across runs.
pub fn axioms_of(id: TheoryId) -> Theory {
    let count = match id {
        TheoryId::ComFcn => 13,
        TheoryId::ComiFcn => 14,
        TheoryId::PraFcn => 15,
        TheoryId::Etf => 16,
    };
    Theory { id, axioms: AXIOMS[..count].to_vec() }
}

const LTDEF_TEXT: &str = "(all m:N. lt(m,0)=0) & (all m:N. all n:N. \
     ((lt(m,S(n))=S(0) <-> (lt(m,n)=S(0) | m=n)) & (lt(m,S(n))=0 <-> ~(lt(m,n)=S(0)) & ~(m=n))))";

fn statement_text(name: StatementName) -> String {
    match name {
        StatementName::Wpra => "all g:F1. all h:F3. ex f:F2. all m:N. \
             (f(m,0)=g(m) & all n:N. f(m,S(n))=h(m,S(n),f(m,n)))"
            .to_string(),
        StatementName::Min1 => "all f:F2. ((all m:N. ex! n:N. f(m,n)=0) -> \
             ex g:F1. all m:N. f(m,g(m))=0)"
            .to_string(),
        // The least-witness clause is spelled out with an order function
        // variable `lt` constrained by its defining equations.
        StatementName::Min2 => format!(
            "all f:F2. all lt:F2. ((({LTDEF_TEXT}) & all m:N. ex n:N. f(m,n)=0) -> \
             ex g:F1. all m:N. (f(m,g(m))=0 & all r:N. (lt(r,g(m))=S(0) -> ~(f(m,r)=0))))"
        ),
        StatementName::Min3 => format!(
            "all f:F3. all lt:F2. ((({LTDEF_TEXT}) & all m:N. all n:N. ex r:N. f(m,n,r)=0) -> \
             ex g:F2. all m:N. all n:N. (f(m,n,g(m,n))=0 & \
             all r:N. (lt(r,g(m,n))=S(0) -> ~(f(m,n,r)=0))))"
        ),
        StatementName::Perm => PERM_TEXT.to_string(),
    }
}

/// A named statement as a closed, desugared formula.
pub fn statement(name: StatementName) -> Statement {
    let f = parse_closed(&statement_text(name)).desugar();
    Statement { name: name.to_string(), formula: f }
}

/// Classification of a formula per the open/singular-open distinction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaClass {
    /// Quantifier-free with a numeral on one side of every equation.
    SingularOpen,
    /// Quantifier-free.
    Open,
    General,
}

pub fn classify(f: &Formula) -> FormulaClass {
    fn singular(f: &Formula) -> bool {
        match f {
            Formula::Eq(a, b) => a.is_numeral() || b.is_numeral(),
            Formula::Not(x) => singular(x),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => singular(a) && singular(b),
            _ => false,
        }
    }
    if !f.is_open() {
        FormulaClass::General
    } else if singular(f) {
        FormulaClass::SingularOpen
    } else {
        FormulaClass::Open
    }
}

/// `theories export` payload: one `name : formula` line per axiom.
pub fn export(id: TheoryId) -> String {
    let theory = axioms_of(id);
    let mut out = String::new();
    for ax in &theory.axioms {
        out.push_str(&format!("{} : {}\n", ax.name, ax.formula));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    #[test]
    fn axiom_counts_and_containment() {
        let com = axioms_of(TheoryId::ComFcn);
        let comi = axioms_of(TheoryId::ComiFcn);
        let pra = axioms_of(TheoryId::PraFcn);
        let etf = axioms_of(TheoryId::Etf);
        assert_eq!(com.axioms.len(), 13);
        assert_eq!(comi.axioms.len(), 14);
        assert_eq!(pra.axioms.len(), 15);
        assert_eq!(etf.axioms.len(), 16);
        // Monotone containment as sets of formulas.
        for (small, big) in [(&com, &comi), (&comi, &pra), (&pra, &etf)] {
            for ax in &small.axioms {
                assert!(big.axioms.iter().any(|b| b.formula == ax.formula));
            }
            assert!(small.axioms.len() < big.axioms.len());
        }
    }

    #[test]
    fn axioms_closed_and_expected_members() {
        for ax in &axioms_of(TheoryId::Etf).axioms {
            assert!(ax.formula.is_closed(), "{} not closed", ax.name);
        }
        let etf = axioms_of(TheoryId::Etf);
        let succ_i = etf.axiom("succ-i").unwrap();
        assert_eq!(succ_i.formula.to_string(), "all n:N. ~(S(n)=0)");
        assert!(etf.axiom("perm").is_some());
        assert!(axioms_of(TheoryId::ComiFcn).axiom("ind").is_some());
        assert!(axioms_of(TheoryId::ComFcn).axiom("ind").is_none());
        assert!(axioms_of(TheoryId::ComFcn).axiom("perm").is_none());
    }

    #[test]
    fn statements_closed_and_desugared() {
        for name in StatementName::all() {
            let st = statement(name);
            assert!(st.formula.is_closed(), "{name} not closed");
            assert!(!st.formula.contains_exists_unique(), "{name} still has ex!");
        }
        // WPRA's step function receives the successor of the recursion
        // variable.
        let wpra = statement(StatementName::Wpra);
        assert!(wpra.formula.to_string().contains("h(m,S(n),f(m,n))"));
        let min2 = statement(StatementName::Min2);
        assert!(min2.formula.to_string().contains("lt(r,g(m))=S(0)"));
    }

    #[test]
    fn classification() {
        let ctx = crate::syntax::Context::from_pairs([
            ("f", crate::syntax::Sort::F1),
            ("g", crate::syntax::Sort::F1),
            ("n", crate::syntax::Sort::N),
            ("m", crate::syntax::Sort::N),
        ])
        .unwrap();
        let f = parse_formula("f(n)=S(0) & ~(m=0)", &ctx).unwrap();
        assert_eq!(classify(&f), FormulaClass::SingularOpen);
        let f = parse_formula("f(n)=g(n)", &ctx).unwrap();
        assert_eq!(classify(&f), FormulaClass::Open);
        let f = parse_formula("all n:N. n=n", &ctx).unwrap();
        assert_eq!(classify(&f), FormulaClass::General);
    }

    #[test]
    fn export_stable() {
        let text = export(TheoryId::ComFcn);
        assert_eq!(text.lines().count(), 13);
        assert!(text.starts_with("succ-i : all n:N. ~(S(n)=0)\n"));
        // Printing then reparsing every axiom is the identity.
        for line in export(TheoryId::Etf).lines() {
            let (_, formula) = line.split_once(" : ").unwrap();
            let parsed = parse_formula(formula, &crate::syntax::Context::new()).unwrap();
            assert_eq!(parsed.to_string(), formula);
        }
    }
}
