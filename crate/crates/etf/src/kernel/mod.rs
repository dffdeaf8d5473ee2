//! Trusted checker for Hilbert-style proofs in the four-sorted language,
//! parameterized by a theory plus named closed premises.
//!
//! A proof is a list of steps, each carrying its formula and the rule
//! that justifies it. Rules fall into three groups:
//!
//! - step rules consuming earlier steps: `taut`, `mp`, `gen`, `inst`,
//!   `instf`, `exintro`, `exrule`, `gen_imp`, `sym`, `trans`, `cong`;
//! - leaf rules: `axiom`, `refl`;
//! - implication-form leaf rules, the quantifier/equality facts needed
//!   so that generated proofs can reason under hypotheses: `all_elim`,
//!   `all_elim_f`, `ex_intro_imp`, `ex_intro_imp_f`, `eq_sym_imp`,
//!   `eq_trans_imp`, `eq_cong_imp`.
//!
//! Everything is validated syntactically against the step's stated
//! formula; the checker never infers formulas. The propositional `taut`
//! rule treats equations and quantified subformulas as opaque letters
//! (at most [`TAUT_LETTER_CAP`] of them) and decides consequence by
//! exhaustive truth table.

pub mod script;

use std::collections::HashMap;
use std::fmt;

use crate::syntax::{alpha_canon, alpha_eq, Context, Formula, Sort, Term};
use crate::theories::Theory;

/// Cap on distinct propositional letters per `taut` application.
pub const TAUT_LETTER_CAP: usize = 20;

/// A witness for an existential: a number term or a function variable.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    Term(Term),
    FVar(String),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Rule {
    /// The named closed axiom or premise, verbatim (up to bound renaming).
    Axiom { name: String },
    /// Tautological consequence of the cited steps.
    Taut { of: Vec<usize> },
    /// From `phi` (step `of`) and `phi -> psi` (step `imp`), infer `psi`.
    Mp { of: usize, imp: usize },
    /// From `phi` infer `all x. phi`.
    Gen { of: usize, var: String },
    /// From `all x:N. phi` infer `phi[term/x]`.
    Inst { of: usize, term: Term },
    /// From `all x:Fk. phi` infer `phi[fvar/x]`.
    InstF { of: usize, fvar: String },
    /// From `phi[w/x]` infer `ex x. phi`.
    ExIntro { of: usize, witness: Witness },
    /// From `phi -> psi` with eigenvariable `var` infer `(ex x. phi) -> psi`.
    ExRule { of: usize, var: String },
    /// From `chi -> psi` with `var` not free in `chi` infer `chi -> all x. psi`.
    GenImp { of: usize, var: String },
    /// `t=t`.
    Refl { term: Term },
    /// From `s=t` infer `t=s`.
    Sym { of: usize },
    /// From `s=t` (step `of`) and `t=u` (step `and`) infer `s=u`.
    Trans { of: usize, and: usize },
    /// From `s=t` infer `C[s]=C[t]` for a single-hole context.
    Cong { of: usize, context: Term },
    /// `(all x:N. phi) -> phi[term/x]`.
    AllElim { term: Term },
    /// `(all x:Fk. phi) -> phi[fvar/x]`.
    AllElimF { fvar: String },
    /// `phi[w/x] -> ex x. phi`.
    ExIntroImp { witness: Witness },
    /// `s=t -> t=s`.
    EqSymImp,
    /// `s=t -> (t=u -> s=u)`.
    EqTransImp,
    /// `s=t -> C[s]=C[t]`.
    EqCongImp { context: Term },
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Axiom { .. } => "axiom",
            Rule::Taut { .. } => "taut",
            Rule::Mp { .. } => "mp",
            Rule::Gen { .. } => "gen",
            Rule::Inst { .. } => "inst",
            Rule::InstF { .. } => "instf",
            Rule::ExIntro { .. } => "exintro",
            Rule::ExRule { .. } => "exrule",
            Rule::GenImp { .. } => "gen_imp",
            Rule::Refl { .. } => "refl",
            Rule::Sym { .. } => "sym",
            Rule::Trans { .. } => "trans",
            Rule::Cong { .. } => "cong",
            Rule::AllElim { .. } => "all_elim",
            Rule::AllElimF { .. } => "all_elim_f",
            Rule::ExIntroImp { .. } => "ex_intro_imp",
            Rule::EqSymImp => "eq_sym_imp",
            Rule::EqTransImp => "eq_trans_imp",
            Rule::EqCongImp { .. } => "eq_cong_imp",
        }
    }

    /// Ids of earlier steps this rule cites.
    pub fn references(&self) -> Vec<usize> {
        match self {
            Rule::Taut { of } => of.clone(),
            Rule::Mp { of, imp } => vec![*of, *imp],
            Rule::Gen { of, .. }
            | Rule::Inst { of, .. }
            | Rule::InstF { of, .. }
            | Rule::ExIntro { of, .. }
            | Rule::ExRule { of, .. }
            | Rule::GenImp { of, .. }
            | Rule::Sym { of }
            | Rule::Cong { of, .. } => vec![*of],
            Rule::Trans { of, and } => vec![*of, *and],
            _ => Vec::new(),
        }
    }

    /// Shifts every step reference by `delta` (used when splicing proofs).
    pub fn shift_refs(&mut self, delta: usize) {
        match self {
            Rule::Taut { of } => {
                for i in of {
                    *i += delta;
                }
            }
            Rule::Mp { of, imp } => {
                *of += delta;
                *imp += delta;
            }
            Rule::Gen { of, .. }
            | Rule::Inst { of, .. }
            | Rule::InstF { of, .. }
            | Rule::ExIntro { of, .. }
            | Rule::ExRule { of, .. }
            | Rule::GenImp { of, .. }
            | Rule::Sym { of }
            | Rule::Cong { of, .. } => *of += delta,
            Rule::Trans { of, and } => {
                *of += delta;
                *and += delta;
            }
            _ => {}
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProofStep {
    pub id: usize,
    pub formula: Formula,
    pub rule: Rule,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub ok: bool,
    pub failing_step: Option<usize>,
    pub message: String,
}

impl CheckResult {
    fn ok() -> CheckResult {
        CheckResult { ok: true, failing_step: None, message: "ok".to_string() }
    }

    fn fail(step: Option<usize>, message: String) -> CheckResult {
        CheckResult { ok: false, failing_step: step, message }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CheckError {
    BadStepReference(usize),
    SideCondition(String),
    TautTooLarge(usize),
    AxiomUnknown(String),
    SortError(String),
    NotDesugared,
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckError::BadStepReference(i) => write!(f, "reference to missing step {i}"),
            CheckError::SideCondition(m) => write!(f, "side condition violated: {m}"),
            CheckError::TautTooLarge(n) => {
                write!(f, "taut has {n} distinct letters (cap {TAUT_LETTER_CAP})")
            }
            CheckError::AxiomUnknown(name) => write!(f, "unknown axiom or premise `{name}`"),
            CheckError::SortError(m) => write!(f, "ill-sorted formula: {m}"),
            CheckError::NotDesugared => write!(f, "formula contains ex! (desugar first)"),
        }
    }
}

impl std::error::Error for CheckError {}

/// Sort-checks a formula against a context plus quantifier scope.
pub fn sort_check(f: &Formula, ctx: &Context) -> Result<(), CheckError> {
    fn term_ok(
        t: &Term,
        ctx: &Context,
        scope: &[(String, Sort)],
    ) -> Result<(), CheckError> {
        let lookup = |name: &str| {
            scope
                .iter()
                .rev()
                .find(|(n, _)| n == name)
                .map(|(_, s)| *s)
                .or_else(|| ctx.sort_of(name))
        };
        match t {
            Term::Zero => Ok(()),
            Term::Var(n) => match lookup(n) {
                Some(Sort::N) => Ok(()),
                Some(s) => Err(CheckError::SortError(format!(
                    "`{n}` has sort {s} but is used as a number"
                ))),
                None => Err(CheckError::SortError(format!("`{n}` is not declared"))),
            },
            Term::Succ(inner) => term_ok(inner, ctx, scope),
            Term::App(f, args) => {
                match lookup(f) {
                    Some(s) if s.arity() == Some(args.len()) => {}
                    Some(s) => {
                        return Err(CheckError::SortError(format!(
                            "`{f}` has sort {s} but is applied to {} argument(s)",
                            args.len()
                        )))
                    }
                    None => return Err(CheckError::SortError(format!("`{f}` is not declared"))),
                }
                for a in args {
                    term_ok(a, ctx, scope)?;
                }
                Ok(())
            }
        }
    }

    fn go(f: &Formula, ctx: &Context, scope: &mut Vec<(String, Sort)>) -> Result<(), CheckError> {
        match f {
            Formula::Eq(a, b) => {
                term_ok(a, ctx, scope)?;
                term_ok(b, ctx, scope)
            }
            Formula::Not(x) => go(x, ctx, scope),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                go(a, ctx, scope)?;
                go(b, ctx, scope)
            }
            Formula::ExistsUnique(_, _, _) => Err(CheckError::NotDesugared),
            Formula::Forall(x, s, body) | Formula::Exists(x, s, body) => {
                scope.push((x.clone(), *s));
                let r = go(body, ctx, scope);
                scope.pop();
                r
            }
        }
    }

    go(f, ctx, &mut Vec::new())
}

/// Propositional skeleton over opaque letters.
enum Skel {
    Letter(usize),
    Not(Box<Skel>),
    And(Box<Skel>, Box<Skel>),
    Or(Box<Skel>, Box<Skel>),
    Implies(Box<Skel>, Box<Skel>),
    Iff(Box<Skel>, Box<Skel>),
}

impl Skel {
    fn eval(&self, assignment: u32) -> bool {
        match self {
            Skel::Letter(i) => assignment & (1 << i) != 0,
            Skel::Not(x) => !x.eval(assignment),
            Skel::And(a, b) => a.eval(assignment) && b.eval(assignment),
            Skel::Or(a, b) => a.eval(assignment) || b.eval(assignment),
            Skel::Implies(a, b) => !a.eval(assignment) || b.eval(assignment),
            Skel::Iff(a, b) => a.eval(assignment) == b.eval(assignment),
        }
    }
}

fn skeleton(
    f: &Formula,
    letters: &mut HashMap<Formula, usize>,
) -> Result<Skel, CheckError> {
    match f {
        Formula::Not(x) => Ok(Skel::Not(Box::new(skeleton(x, letters)?))),
        Formula::And(a, b) => Ok(Skel::And(
            Box::new(skeleton(a, letters)?),
            Box::new(skeleton(b, letters)?),
        )),
        Formula::Or(a, b) => Ok(Skel::Or(
            Box::new(skeleton(a, letters)?),
            Box::new(skeleton(b, letters)?),
        )),
        Formula::Implies(a, b) => Ok(Skel::Implies(
            Box::new(skeleton(a, letters)?),
            Box::new(skeleton(b, letters)?),
        )),
        Formula::Iff(a, b) => Ok(Skel::Iff(
            Box::new(skeleton(a, letters)?),
            Box::new(skeleton(b, letters)?),
        )),
        Formula::ExistsUnique(_, _, _) => Err(CheckError::NotDesugared),
        Formula::Eq(_, _) | Formula::Forall(_, _, _) | Formula::Exists(_, _, _) => {
            let key = alpha_canon(f);
            let next = letters.len();
            let idx = *letters.entry(key).or_insert(next);
            if letters.len() > TAUT_LETTER_CAP {
                return Err(CheckError::TautTooLarge(letters.len()));
            }
            Ok(Skel::Letter(idx))
        }
    }
}

/// True iff `(/\ premises) -> target` is a propositional tautology
/// treating equations and quantified subformulas as opaque letters.
pub fn taut_check(premises: &[&Formula], target: &Formula) -> Result<bool, CheckError> {
    let mut letters = HashMap::new();
    let premise_skels: Vec<Skel> = premises
        .iter()
        .map(|p| skeleton(p, &mut letters))
        .collect::<Result<_, _>>()?;
    let target_skel = skeleton(target, &mut letters)?;
    let k = letters.len();
    for assignment in 0..(1u32 << k) {
        if premise_skels.iter().all(|p| p.eval(assignment)) && !target_skel.eval(assignment) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fill_hole(context: &Term, t: &Term) -> Result<Term, CheckError> {
    match context {
        Term::Var(n) if n == "_" => Ok(t.clone()),
        Term::Zero | Term::Var(_) => Ok(context.clone()),
        Term::Succ(inner) => Ok(Term::succ(fill_hole(inner, t)?)),
        Term::App(f, args) => Ok(Term::App(
            f.clone(),
            args.iter().map(|a| fill_hole(a, t)).collect::<Result<_, _>>()?,
        )),
    }
}

fn hole_count(t: &Term) -> usize {
    match t {
        Term::Var(n) if n == "_" => 1,
        Term::Zero | Term::Var(_) => 0,
        Term::Succ(inner) => hole_count(inner),
        Term::App(_, args) => args.iter().map(hole_count).sum(),
    }
}

fn subst_by_sort(body: &Formula, var: &str, witness: &Witness) -> Formula {
    match witness {
        Witness::Term(t) => body.subst_num(var, t),
        Witness::FVar(name) => body.subst_fvar(var, name),
    }
}

struct Checker<'a> {
    ctx: &'a Context,
    /// Desugared named formulas available to the `axiom` rule.
    facts: HashMap<String, Formula>,
    derived: HashMap<usize, Formula>,
}

impl<'a> Checker<'a> {
    fn get(&self, id: usize) -> Result<&Formula, CheckError> {
        self.derived.get(&id).ok_or(CheckError::BadStepReference(id))
    }

    fn term_ok(&self, t: &Term) -> Result<(), CheckError> {
        sort_check(&Formula::eq(t.clone(), Term::Zero), self.ctx)
    }

    fn check_step(&self, step: &ProofStep) -> Result<(), CheckError> {
        sort_check(&step.formula, self.ctx)?;
        let stated = &step.formula;
        match &step.rule {
            Rule::Axiom { name } => {
                let ax = self
                    .facts
                    .get(name)
                    .ok_or_else(|| CheckError::AxiomUnknown(name.clone()))?;
                if alpha_eq(stated, ax) {
                    Ok(())
                } else {
                    Err(CheckError::SideCondition(format!(
                        "stated formula is not the axiom `{name}`"
                    )))
                }
            }
            Rule::Taut { of } => {
                let premises: Vec<&Formula> =
                    of.iter().map(|i| self.get(*i)).collect::<Result<_, _>>()?;
                if taut_check(&premises, stated)? {
                    Ok(())
                } else {
                    Err(CheckError::SideCondition(
                        "not a tautological consequence of the cited steps".to_string(),
                    ))
                }
            }
            Rule::Mp { of, imp } => {
                let phi = self.get(*of)?;
                let implication = self.get(*imp)?;
                match implication {
                    Formula::Implies(a, b) if alpha_eq(a, phi) && alpha_eq(b, stated) => Ok(()),
                    _ => Err(CheckError::SideCondition(
                        "mp premises do not match `phi` and `phi -> psi`".to_string(),
                    )),
                }
            }
            Rule::Gen { of, var } => {
                let phi = self.get(*of)?;
                match stated {
                    Formula::Forall(_, s, _) => {
                        let expected = Formula::Forall(var.clone(), *s, Box::new(phi.clone()));
                        if alpha_eq(stated, &expected) {
                            Ok(())
                        } else {
                            Err(CheckError::SideCondition(
                                "gen conclusion does not generalize the premise".to_string(),
                            ))
                        }
                    }
                    _ => Err(CheckError::SideCondition(
                        "gen conclusion is not universal".to_string(),
                    )),
                }
            }
            Rule::Inst { of, term } => {
                self.term_ok(term)?;
                let phi = self.get(*of)?;
                match phi {
                    Formula::Forall(x, Sort::N, body) => {
                        let expected = body.subst_num(x, term);
                        if alpha_eq(stated, &expected) {
                            Ok(())
                        } else {
                            Err(CheckError::SideCondition(
                                "inst conclusion is not the instance of the premise".to_string(),
                            ))
                        }
                    }
                    _ => Err(CheckError::SideCondition(
                        "inst premise is not a number-sort universal".to_string(),
                    )),
                }
            }
            Rule::InstF { of, fvar } => {
                let phi = self.get(*of)?;
                match phi {
                    Formula::Forall(x, s, body) if s.arity().is_some() => {
                        match self.ctx.sort_of(fvar) {
                            Some(fs) if fs == *s => {}
                            _ => {
                                return Err(CheckError::SideCondition(format!(
                                    "`{fvar}` is not declared with sort {s}"
                                )))
                            }
                        }
                        let expected = body.subst_fvar(x, fvar);
                        if alpha_eq(stated, &expected) {
                            Ok(())
                        } else {
                            Err(CheckError::SideCondition(
                                "instf conclusion is not the instance of the premise".to_string(),
                            ))
                        }
                    }
                    _ => Err(CheckError::SideCondition(
                        "instf premise is not a function-sort universal".to_string(),
                    )),
                }
            }
            Rule::ExIntro { of, witness } => {
                let phi = self.get(*of)?;
                match stated {
                    Formula::Exists(x, s, body) => {
                        self.witness_ok(witness, *s)?;
                        let expected = subst_by_sort(body, x, witness);
                        if alpha_eq(phi, &expected) {
                            Ok(())
                        } else {
                            Err(CheckError::SideCondition(
                                "exintro premise is not the witness instance".to_string(),
                            ))
                        }
                    }
                    _ => Err(CheckError::SideCondition(
                        "exintro conclusion is not existential".to_string(),
                    )),
                }
            }
            Rule::ExRule { of, var } => {
                let premise = self.get(*of)?;
                let (phi_p, psi_p) = match premise {
                    Formula::Implies(a, b) => (a, b),
                    _ => {
                        return Err(CheckError::SideCondition(
                            "exrule premise is not an implication".to_string(),
                        ))
                    }
                };
                match stated {
                    Formula::Implies(ex, psi_c) => match ex.as_ref() {
                        Formula::Exists(x, s, chi) => {
                            let var_sort = self.ctx.sort_of(var).ok_or_else(|| {
                                CheckError::SideCondition(format!("`{var}` is not declared"))
                            })?;
                            if var_sort != *s {
                                return Err(CheckError::SideCondition(format!(
                                    "eigenvariable `{var}` has sort {var_sort}, binder has {s}"
                                )));
                            }
                            let opened = match s {
                                Sort::N => chi.subst_num(x, &Term::var(var)),
                                _ => chi.subst_fvar(x, var),
                            };
                            if !alpha_eq(psi_p, psi_c) || !alpha_eq(phi_p, &opened) {
                                return Err(CheckError::SideCondition(
                                    "exrule conclusion does not match the premise".to_string(),
                                ));
                            }
                            if stated.has_free_name(var) {
                                return Err(CheckError::SideCondition(format!(
                                    "eigenvariable `{var}` occurs free in the conclusion"
                                )));
                            }
                            Ok(())
                        }
                        _ => Err(CheckError::SideCondition(
                            "exrule conclusion antecedent is not existential".to_string(),
                        )),
                    },
                    _ => Err(CheckError::SideCondition(
                        "exrule conclusion is not an implication".to_string(),
                    )),
                }
            }
            Rule::GenImp { of, var } => {
                let premise = self.get(*of)?;
                let (chi, psi) = match premise {
                    Formula::Implies(a, b) => (a, b),
                    _ => {
                        return Err(CheckError::SideCondition(
                            "gen_imp premise is not an implication".to_string(),
                        ))
                    }
                };
                if chi.has_free_name(var) {
                    return Err(CheckError::SideCondition(format!(
                        "`{var}` occurs free in the antecedent"
                    )));
                }
                match stated {
                    Formula::Implies(chi_c, all) => match all.as_ref() {
                        Formula::Forall(_, s, _) => {
                            let expected = Formula::implies(
                                (**chi_c).clone(),
                                Formula::Forall(var.clone(), *s, Box::new((**psi).clone())),
                            );
                            if alpha_eq(chi_c, chi) && alpha_eq(stated, &expected) {
                                Ok(())
                            } else {
                                Err(CheckError::SideCondition(
                                    "gen_imp conclusion does not match".to_string(),
                                ))
                            }
                        }
                        _ => Err(CheckError::SideCondition(
                            "gen_imp consequent is not universal".to_string(),
                        )),
                    },
                    _ => Err(CheckError::SideCondition(
                        "gen_imp conclusion is not an implication".to_string(),
                    )),
                }
            }
            Rule::Refl { term } => {
                self.term_ok(term)?;
                if alpha_eq(stated, &Formula::eq(term.clone(), term.clone())) {
                    Ok(())
                } else {
                    Err(CheckError::SideCondition("refl formula is not `t=t`".to_string()))
                }
            }
            Rule::Sym { of } => {
                let premise = self.get(*of)?;
                match (premise, stated) {
                    (Formula::Eq(s, t), Formula::Eq(t2, s2)) if s == s2 && t == t2 => Ok(()),
                    _ => Err(CheckError::SideCondition(
                        "sym does not flip the premise equation".to_string(),
                    )),
                }
            }
            Rule::Trans { of, and } => {
                let first = self.get(*of)?;
                let second = self.get(*and)?;
                match (first, second, stated) {
                    (Formula::Eq(s, t), Formula::Eq(t2, u), Formula::Eq(s2, u2))
                        if t == t2 && s == s2 && u == u2 =>
                    {
                        Ok(())
                    }
                    _ => Err(CheckError::SideCondition(
                        "trans premises do not chain".to_string(),
                    )),
                }
            }
            Rule::Cong { of, context } => {
                if hole_count(context) != 1 {
                    return Err(CheckError::SideCondition(
                        "congruence context must have exactly one hole".to_string(),
                    ));
                }
                let premise = self.get(*of)?;
                match premise {
                    Formula::Eq(s, t) => {
                        let left = fill_hole(context, s)?;
                        let right = fill_hole(context, t)?;
                        self.term_ok(&left)?;
                        if alpha_eq(stated, &Formula::eq(left, right)) {
                            Ok(())
                        } else {
                            Err(CheckError::SideCondition(
                                "cong conclusion does not match the context".to_string(),
                            ))
                        }
                    }
                    _ => Err(CheckError::SideCondition(
                        "cong premise is not an equation".to_string(),
                    )),
                }
            }
            Rule::AllElim { term } => {
                self.term_ok(term)?;
                match stated {
                    Formula::Implies(all, instance) => match all.as_ref() {
                        Formula::Forall(x, Sort::N, body) => {
                            let expected = body.subst_num(x, term);
                            if alpha_eq(instance, &expected) {
                                Ok(())
                            } else {
                                Err(CheckError::SideCondition(
                                    "all_elim instance does not match".to_string(),
                                ))
                            }
                        }
                        _ => Err(CheckError::SideCondition(
                            "all_elim antecedent is not a number-sort universal".to_string(),
                        )),
                    },
                    _ => Err(CheckError::SideCondition(
                        "all_elim formula is not an implication".to_string(),
                    )),
                }
            }
            Rule::AllElimF { fvar } => match stated {
                Formula::Implies(all, instance) => match all.as_ref() {
                    Formula::Forall(x, s, body) if s.arity().is_some() => {
                        match self.ctx.sort_of(fvar) {
                            Some(fs) if fs == *s => {}
                            _ => {
                                return Err(CheckError::SideCondition(format!(
                                    "`{fvar}` is not declared with sort {s}"
                                )))
                            }
                        }
                        let expected = body.subst_fvar(x, fvar);
                        if alpha_eq(instance, &expected) {
                            Ok(())
                        } else {
                            Err(CheckError::SideCondition(
                                "all_elim_f instance does not match".to_string(),
                            ))
                        }
                    }
                    _ => Err(CheckError::SideCondition(
                        "all_elim_f antecedent is not a function-sort universal".to_string(),
                    )),
                },
                _ => Err(CheckError::SideCondition(
                    "all_elim_f formula is not an implication".to_string(),
                )),
            },
            Rule::ExIntroImp { witness } => match stated {
                Formula::Implies(instance, ex) => match ex.as_ref() {
                    Formula::Exists(x, s, body) => {
                        self.witness_ok(witness, *s)?;
                        let expected = subst_by_sort(body, x, witness);
                        if alpha_eq(instance, &expected) {
                            Ok(())
                        } else {
                            Err(CheckError::SideCondition(
                                "ex_intro_imp antecedent is not the witness instance".to_string(),
                            ))
                        }
                    }
                    _ => Err(CheckError::SideCondition(
                        "ex_intro_imp consequent is not existential".to_string(),
                    )),
                },
                _ => Err(CheckError::SideCondition(
                    "ex_intro_imp formula is not an implication".to_string(),
                )),
            },
            Rule::EqSymImp => match stated {
                Formula::Implies(a, b) => match (a.as_ref(), b.as_ref()) {
                    (Formula::Eq(s, t), Formula::Eq(t2, s2)) if s == s2 && t == t2 => Ok(()),
                    _ => Err(CheckError::SideCondition(
                        "eq_sym_imp is not `s=t -> t=s`".to_string(),
                    )),
                },
                _ => Err(CheckError::SideCondition(
                    "eq_sym_imp formula is not an implication".to_string(),
                )),
            },
            Rule::EqTransImp => match stated {
                Formula::Implies(first, rest) => match (first.as_ref(), rest.as_ref()) {
                    (Formula::Eq(s, t), Formula::Implies(second, conclusion)) => {
                        match (second.as_ref(), conclusion.as_ref()) {
                            (Formula::Eq(t2, u), Formula::Eq(s2, u2))
                                if t == t2 && s == s2 && u == u2 =>
                            {
                                Ok(())
                            }
                            _ => Err(CheckError::SideCondition(
                                "eq_trans_imp is not `s=t -> (t=u -> s=u)`".to_string(),
                            )),
                        }
                    }
                    _ => Err(CheckError::SideCondition(
                        "eq_trans_imp is not `s=t -> (t=u -> s=u)`".to_string(),
                    )),
                },
                _ => Err(CheckError::SideCondition(
                    "eq_trans_imp formula is not an implication".to_string(),
                )),
            },
            Rule::EqCongImp { context } => {
                if hole_count(context) != 1 {
                    return Err(CheckError::SideCondition(
                        "congruence context must have exactly one hole".to_string(),
                    ));
                }
                match stated {
                    Formula::Implies(a, b) => match (a.as_ref(), b.as_ref()) {
                        (Formula::Eq(s, t), Formula::Eq(left, right)) => {
                            let el = fill_hole(context, s)?;
                            let er = fill_hole(context, t)?;
                            self.term_ok(&el)?;
                            if *left == el && *right == er {
                                Ok(())
                            } else {
                                Err(CheckError::SideCondition(
                                    "eq_cong_imp conclusion does not match the context"
                                        .to_string(),
                                ))
                            }
                        }
                        _ => Err(CheckError::SideCondition(
                            "eq_cong_imp is not `s=t -> C[s]=C[t]`".to_string(),
                        )),
                    },
                    _ => Err(CheckError::SideCondition(
                        "eq_cong_imp formula is not an implication".to_string(),
                    )),
                }
            }
        }
    }

    fn witness_ok(&self, witness: &Witness, sort: Sort) -> Result<(), CheckError> {
        match (witness, sort) {
            (Witness::Term(t), Sort::N) => self.term_ok(t),
            (Witness::FVar(name), s) if s.arity().is_some() => match self.ctx.sort_of(name) {
                Some(fs) if fs == s => Ok(()),
                _ => Err(CheckError::SideCondition(format!(
                    "witness `{name}` is not declared with sort {s}"
                ))),
            },
            (Witness::Term(_), s) => Err(CheckError::SideCondition(format!(
                "a term witness cannot instantiate sort {s}"
            ))),
            (Witness::FVar(name), _) => Err(CheckError::SideCondition(format!(
                "witness `{name}` is not declared with sort {sort}"
            ))),
        }
    }
}

/// Checks a proof against a theory plus named closed premises. Premises
/// and axioms are desugared on entry; step formulas must already be
/// `ex!`-free. The proof succeeds iff every step validates and the last
/// step's formula equals `goal` up to bound-variable renaming.
pub fn check_proof(
    theory: &Theory,
    premises: &[(String, Formula)],
    ctx: &Context,
    steps: &[ProofStep],
    goal: &Formula,
) -> CheckResult {
    let mut facts: HashMap<String, Formula> = HashMap::new();
    for ax in &theory.axioms {
        facts.insert(ax.name.clone(), ax.formula.desugar());
    }
    for (name, f) in premises {
        let d = f.desugar();
        if !d.is_closed() {
            return CheckResult::fail(None, format!("premise `{name}` is not closed"));
        }
        facts.insert(name.clone(), d);
    }

    let goal = goal.desugar();
    let mut checker = Checker { ctx, facts, derived: HashMap::new() };

    let mut last_id = None;
    for step in steps {
        if let Some(prev) = last_id {
            if step.id <= prev {
                return CheckResult::fail(
                    Some(step.id),
                    format!("step ids must be strictly increasing (step {} after {prev})", step.id),
                );
            }
        }
        for r in step.rule.references() {
            if !checker.derived.contains_key(&r) {
                return CheckResult::fail(
                    Some(step.id),
                    CheckError::BadStepReference(r).to_string(),
                );
            }
        }
        if let Err(e) = checker.check_step(step) {
            return CheckResult::fail(Some(step.id), format!("rule {}: {e}", step.rule.name()));
        }
        checker.derived.insert(step.id, step.formula.clone());
        last_id = Some(step.id);
    }

    match last_id {
        None => CheckResult::fail(None, "empty proof".to_string()),
        Some(id) => {
            let last = &checker.derived[&id];
            if alpha_eq(last, &goal) {
                CheckResult::ok()
            } else {
                CheckResult::fail(
                    Some(id),
                    format!("last step proves `{last}`, not the goal `{goal}`"),
                )
            }
        }
    }
}

#[cfg(test)]
mod tests;
