use super::*;

fn ctx_gm() -> Context {
    Context::from_pairs([("g", Sort::F2), ("m", Sort::N), ("n", Sort::N), ("f", Sort::F1)])
        .unwrap()
}

#[test]
fn parse_zero_and_numerals() {
    let ctx = Context::new();
    assert_eq!(parse_term("0", &ctx).unwrap(), Term::Zero);
    assert_eq!(parse_term("S(S(0))", &ctx).unwrap(), Term::numeral(2));
}

#[test]
fn parse_application_sort_checked() {
    let ctx = ctx_gm();
    let t = parse_term("g(m, S(0))", &ctx).unwrap();
    assert_eq!(
        t,
        Term::app("g", vec![Term::var("m"), Term::succ(Term::Zero)])
    );
    // Wrong arity is a sort error, not a malformed term.
    match parse_term("g(m)", &ctx) {
        Err(SyntaxError::Sort { .. }) => {}
        other => panic!("expected sort error, got {other:?}"),
    }
    match parse_term("q(m)", &ctx) {
        Err(SyntaxError::Unbound { .. }) => {}
        other => panic!("expected unbound error, got {other:?}"),
    }
}

#[test]
fn parse_formula_precedence() {
    let ctx = ctx_gm();
    let f = parse_formula("S(n)=0 -> 0=S(0)", &ctx).unwrap();
    assert_eq!(
        f,
        Formula::implies(
            Formula::eq(Term::succ(Term::var("n")), Term::Zero),
            Formula::eq(Term::Zero, Term::succ(Term::Zero)),
        )
    );

    let f = parse_formula("all n:N. ex m:N. S(m)=n", &Context::new()).unwrap();
    assert_eq!(
        f,
        Formula::forall(
            "n",
            Sort::N,
            Formula::exists("m", Sort::N, Formula::eq(Term::succ(Term::var("m")), Term::var("n"))),
        )
    );

    let f = parse_formula("ex! m:N. f(m)=n", &ctx).unwrap();
    assert!(matches!(f, Formula::ExistsUnique(_, Sort::N, _)));

    // ~ binds tighter than &, which binds tighter than |, -> is
    // right-associative, and quantifier scope extends maximally right.
    let f = parse_formula("~0=0 & 0=0 | 0=0 -> 0=0 -> 0=0", &Context::new()).unwrap();
    let zz = || Formula::eq(Term::Zero, Term::Zero);
    assert_eq!(
        f,
        Formula::implies(
            Formula::or(Formula::and(Formula::not(zz()), zz()), zz()),
            Formula::implies(zz(), zz()),
        )
    );

    let f = parse_formula("0=0 & all n:N. n=n -> 0=0", &Context::new()).unwrap();
    match f {
        Formula::And(_, rhs) => assert!(matches!(*rhs, Formula::Forall(_, _, _))),
        other => panic!("quantifier should extend right: {other:?}"),
    }
}

#[test]
fn print_examples() {
    assert_eq!(Term::numeral(2).to_string(), "S(S(0))");
    assert_eq!(Formula::eq(Term::Zero, Term::Zero).to_string(), "0=0");
    let ctx = ctx_gm();
    let f = parse_formula("(0=0 | 0=0) & ~(m=0)", &ctx).unwrap();
    assert_eq!(f.to_string(), "(0=0 | 0=0) & ~(m=0)");
}

#[test]
fn substitute_examples() {
    let ctx = ctx_gm();
    let f = parse_formula("n=0", &ctx).unwrap();
    assert_eq!(
        f.subst_num("n", &Term::numeral(2)),
        Formula::eq(Term::numeral(2), Term::Zero)
    );

    // Capture: the binder is renamed with the smallest numeric suffix.
    let f = Formula::forall("n", Sort::N, Formula::eq(Term::var("n"), Term::var("m")));
    let g = f.subst_num("m", &Term::succ(Term::var("n")));
    assert_eq!(
        g,
        Formula::forall(
            "n1",
            Sort::N,
            Formula::eq(Term::var("n1"), Term::succ(Term::var("n"))),
        )
    );

    // Identity substitution.
    let t = parse_term("g(m,S(n))", &ctx).unwrap();
    assert_eq!(t.subst_num("n", &Term::var("n")), t);
}

#[test]
fn free_vars_examples() {
    assert!(Term::Zero.free_vars().is_empty());
    let ctx = ctx_gm();
    let f = parse_formula("f(n)=0", &ctx).unwrap();
    let fv = f.free_vars();
    assert!(fv.contains(&("f".to_string(), Sort::F1)));
    assert!(fv.contains(&("n".to_string(), Sort::N)));

    let f = Formula::forall("n", Sort::N, Formula::eq(Term::var("n"), Term::var("m")));
    let fv = f.free_vars();
    assert_eq!(fv.len(), 1);
    assert!(fv.contains(&("m".to_string(), Sort::N)));
}

#[test]
fn desugar_unique_number_sort() {
    let ctx = ctx_gm();
    let f = parse_formula("ex! m:N. f(m)=n", &ctx).unwrap();
    let d = f.desugar();
    let expected =
        parse_formula("ex m:N. (f(m)=n & all m1:N. (f(m1)=n -> m1=m))", &ctx).unwrap();
    assert_eq!(d, expected);
    assert!(!d.contains_exists_unique());

    // Formulas without ex! are unchanged.
    let f = parse_formula("all n:N. n=n", &Context::new()).unwrap();
    assert_eq!(f.desugar(), f);
}

#[test]
fn desugar_unique_function_sort_pointwise() {
    let f = parse_formula("ex! h:F1. h(0)=0", &Context::new()).unwrap();
    let d = f.desugar();
    assert!(!d.contains_exists_unique());
    // The uniqueness clause compares h and its double pointwise.
    let printed = d.to_string();
    assert!(printed.contains("all a:N. h(a)=h1(a)"), "got: {printed}");
}

#[test]
fn desugar_nested_innermost_first() {
    let f = parse_formula("ex! n:N. ex! m:N. g(n,m)=0", &ctx_gm()).unwrap();
    let d = f.desugar();
    assert!(!d.contains_exists_unique());
}

#[test]
fn alpha_equivalence() {
    let ctx = Context::new();
    let a = parse_formula("all n:N. ex m:N. S(m)=n", &ctx).unwrap();
    let b = parse_formula("all k:N. ex j:N. S(j)=k", &ctx).unwrap();
    assert!(alpha_eq(&a, &b));
    let c = parse_formula("all n:N. ex m:N. S(n)=m", &ctx).unwrap();
    assert!(!alpha_eq(&a, &c));
    assert_eq!(alpha_canon(&a), alpha_canon(&b));
}

#[test]
fn context_files_round_trip() {
    let ctx = parse_context("decl g : F2\ndecl m : N\n# comment\n\ndecl h3 : F3\n").unwrap();
    assert_eq!(ctx.sort_of("g"), Some(Sort::F2));
    assert_eq!(ctx.sort_of("m"), Some(Sort::N));
    assert_eq!(ctx.sort_of("h3"), Some(Sort::F3));
    assert!(parse_context("decl g : F2\ndecl g : N\n").is_err());
}

#[test]
fn context_term_single_hole() {
    let ctx = ctx_gm();
    let c = parse_context_term("S(_)", &ctx).unwrap();
    assert_eq!(c, Term::succ(Term::var("_")));
    assert!(parse_context_term("S(0)", &ctx).is_err());
    assert!(parse_context_term("g(_,_)", &ctx).is_err());
}
