use super::script::ProofScript;
use super::*;
use crate::syntax::parse_formula;
use crate::theories::{axioms_of, TheoryId};

fn com() -> Theory {
    axioms_of(TheoryId::ComFcn)
}

fn ctx_empty() -> Context {
    Context::new()
}

#[test]
fn succ_nonzero_instance() {
    // [axiom succ-i; inst 0] proves ~(S(0)=0).
    let ctx = ctx_empty();
    let goal = parse_formula("~(S(0)=0)", &ctx).unwrap();
    let ax = parse_formula("all n:N. ~(S(n)=0)", &ctx).unwrap();
    let steps = vec![
        ProofStep { id: 1, formula: ax, rule: Rule::Axiom { name: "succ-i".into() } },
        ProofStep { id: 2, formula: goal.clone(), rule: Rule::Inst { of: 1, term: Term::Zero } },
    ];
    let r = check_proof(&com(), &[], &ctx, &steps, &goal);
    assert!(r.ok, "{}", r.message);
}

#[test]
fn refl_numeral() {
    let ctx = ctx_empty();
    let goal = Formula::eq(Term::numeral(3), Term::numeral(3));
    let steps = vec![ProofStep {
        id: 1,
        formula: goal.clone(),
        rule: Rule::Refl { term: Term::numeral(3) },
    }];
    let r = check_proof(&com(), &[], &ctx, &steps, &goal);
    assert!(r.ok, "{}", r.message);
}

#[test]
fn bad_step_reference() {
    let ctx = ctx_empty();
    let goal = Formula::eq(Term::Zero, Term::Zero);
    let steps = vec![ProofStep { id: 1, formula: goal.clone(), rule: Rule::Sym { of: 7 } }];
    let r = check_proof(&com(), &[], &ctx, &steps, &goal);
    assert!(!r.ok);
    assert_eq!(r.failing_step, Some(1));
    assert!(r.message.contains("missing step 7"), "{}", r.message);
}

#[test]
fn goal_matching_is_alpha_only() {
    let ctx = ctx_empty();
    // The axiom uses n; an alpha-variant goal with k is accepted.
    let goal = parse_formula("all k:N. ~(S(k)=0)", &ctx).unwrap();
    let ax = parse_formula("all n:N. ~(S(n)=0)", &ctx).unwrap();
    let steps =
        vec![ProofStep { id: 1, formula: ax, rule: Rule::Axiom { name: "succ-i".into() } }];
    let r = check_proof(&com(), &[], &ctx, &steps, &goal);
    assert!(r.ok, "{}", r.message);

    // But a propositionally reshaped goal is not.
    let other = parse_formula("all k:N. (S(k)=0 -> 0=S(0))", &ctx).unwrap();
    let ax = parse_formula("all n:N. ~(S(n)=0)", &ctx).unwrap();
    let steps =
        vec![ProofStep { id: 1, formula: ax, rule: Rule::Axiom { name: "succ-i".into() } }];
    let r = check_proof(&com(), &[], &ctx, &steps, &other);
    assert!(!r.ok);
}

#[test]
fn taut_check_examples() {
    let ctx = ctx_empty();
    let phi = parse_formula("0=0", &ctx).unwrap();
    let psi = parse_formula("S(0)=0", &ctx).unwrap();
    // phi |= phi | psi
    assert!(taut_check(&[&phi], &Formula::or(phi.clone(), psi.clone())).unwrap());
    // |= phi -> phi
    assert!(taut_check(&[], &Formula::implies(phi.clone(), phi.clone())).unwrap());
    // phi | psi does not entail phi
    assert!(!taut_check(&[&Formula::or(phi.clone(), psi.clone())], &phi).unwrap());
}

#[test]
fn taut_letter_cap() {
    // 21 distinct equations exceed the cap.
    let mut disjunction = Formula::eq(Term::numeral(0), Term::numeral(0));
    for i in 1..21u64 {
        disjunction =
            Formula::or(disjunction, Formula::eq(Term::numeral(i), Term::numeral(i)));
    }
    match taut_check(&[], &disjunction) {
        Err(CheckError::TautTooLarge(n)) => assert!(n > TAUT_LETTER_CAP),
        other => panic!("expected TautTooLarge, got {other:?}"),
    }
}

#[test]
fn taut_letters_are_alpha_classes() {
    let ctx = ctx_empty();
    let a = parse_formula("all n:N. n=n", &ctx).unwrap();
    let b = parse_formula("all k:N. k=k", &ctx).unwrap();
    // Alpha-variants are the same letter, so a |= b.
    assert!(taut_check(&[&a], &b).unwrap());
}

#[test]
fn mp_and_gen() {
    let ctx = Context::from_pairs([("n", crate::syntax::Sort::N)]).unwrap();
    let phi = parse_formula("n=n", &ctx).unwrap();
    let goal = parse_formula("all n:N. n=n", &ctx).unwrap();
    let steps = vec![
        ProofStep { id: 1, formula: phi, rule: Rule::Refl { term: Term::var("n") } },
        ProofStep { id: 2, formula: goal.clone(), rule: Rule::Gen { of: 1, var: "n".into() } },
    ];
    let r = check_proof(&com(), &[], &ctx, &steps, &goal);
    assert!(r.ok, "{}", r.message);
}

#[test]
fn exrule_freshness_enforced() {
    // (ex m. m=n) -> n=n must reject eigenvariable n (free in consequent).
    let ctx = Context::from_pairs([("n", crate::syntax::Sort::N)]).unwrap();
    let premise = parse_formula("n=n -> n=n", &ctx).unwrap();
    let conclusion = parse_formula("(ex m:N. m=m) -> n=n", &ctx).unwrap();
    let steps = vec![
        ProofStep {
            id: 1,
            formula: premise,
            rule: Rule::Taut { of: vec![] },
        },
        ProofStep { id: 2, formula: conclusion.clone(), rule: Rule::ExRule { of: 1, var: "n".into() } },
    ];
    let r = check_proof(&com(), &[], &ctx, &steps, &conclusion);
    assert!(!r.ok);
    assert!(r.message.contains("free in the conclusion"), "{}", r.message);
}

#[test]
fn script_round_trip_and_check() {
    let text = r#"{
        "context": [],
        "theory": "COM_fcn",
        "premises": [],
        "goal": "~(S(0)=0)",
        "steps": [
            {"id": 1, "formula": "all n:N. ~(S(n)=0)", "rule": "axiom", "args": {"name": "succ-i"}},
            {"id": 2, "formula": "~(S(0)=0)", "rule": "inst", "args": {"of": 1, "term": "0"}}
        ]
    }"#;
    let script = ProofScript::from_json(text).unwrap();
    let r = script.check();
    assert!(r.ok, "{}", r.message);
    let reparsed = ProofScript::from_json(&script.to_json()).unwrap();
    assert!(reparsed.check().ok);
}

#[test]
fn determinism() {
    let ctx = ctx_empty();
    let goal = Formula::eq(Term::numeral(2), Term::numeral(2));
    let steps = vec![ProofStep {
        id: 1,
        formula: goal.clone(),
        rule: Rule::Refl { term: Term::numeral(2) },
    }];
    let a = check_proof(&com(), &[], &ctx, &steps, &goal);
    let b = check_proof(&com(), &[], &ctx, &steps, &goal);
    assert_eq!(a, b);
}
