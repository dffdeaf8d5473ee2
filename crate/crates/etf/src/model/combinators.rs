//! Constructive realizations of the initial-function and composition
//! axioms, the recursion operators, and the translations between plain
//! and weakened primitive recursion.
//!
//! Everything here returns a [`Func`]; the compose/convert helpers for
//! lower arities are chained from the ternary combinators the axioms
//! provide, mirroring how the lower-arity axioms are derived.

use std::sync::Arc;

use num_traits::One;

use super::{EvalError, Func, FuncValue, Imp, Nat};

pub fn host1(f: impl Fn(&Nat) -> Result<Nat, EvalError> + Send + Sync + 'static) -> Func {
    FuncValue::with_memo(1, Imp::Host(Box::new(move |args| f(&args[0]))))
}

pub fn host2(
    f: impl Fn(&Nat, &Nat) -> Result<Nat, EvalError> + Send + Sync + 'static,
) -> Func {
    FuncValue::with_memo(2, Imp::Host(Box::new(move |args| f(&args[0], &args[1]))))
}

pub fn host3(
    f: impl Fn(&Nat, &Nat, &Nat) -> Result<Nat, EvalError> + Send + Sync + 'static,
) -> Func {
    FuncValue::with_memo(3, Imp::Host(Box::new(move |args| f(&args[0], &args[1], &args[2]))))
}

/// Constant unary function (initial-function axiom i).
pub fn const_unary(c: Nat) -> Func {
    FuncValue::with_memo(1, Imp::Host(Box::new(move |_| Ok(c.clone()))))
}

/// Ternary projection (initial-function axioms ii-iv); `i` is 0-based.
pub fn proj3(i: usize) -> Func {
    assert!(i < 3);
    FuncValue::with_memo(3, Imp::Host(Box::new(move |args| Ok(args[i].clone()))))
}

/// The successor as a unary function (initial-function axiom v).
pub fn succ_fn() -> Func {
    FuncValue::with_memo(1, Imp::Host(Box::new(|args| Ok(args[0].clone() + Nat::one()))))
}

/// General composition (composition axiom v):
/// `f(m,n,r) = g(h1(m,n,r), h2(m,n,r), h3(m,n,r))`.
pub fn compose3(g: &Func, h1: &Func, h2: &Func, h3: &Func) -> Func {
    assert_eq!(g.arity(), 3);
    for h in [h1, h2, h3] {
        assert_eq!(h.arity(), 3);
    }
    let (g, h1, h2, h3) = (Arc::clone(g), Arc::clone(h1), Arc::clone(h2), Arc::clone(h3));
    FuncValue::with_memo(
        3,
        Imp::Host(Box::new(move |args| {
            let a = h1.eval(args)?;
            let b = h2.eval(args)?;
            let c = h3.eval(args)?;
            g.eval(&[a, b, c])
        })),
    )
}

/// Binary to ternary with a dummy argument (composition axiom i):
/// `f(m,n,r) = g(m,n)`.
pub fn to_ternary_from2(g: &Func) -> Func {
    assert_eq!(g.arity(), 2);
    let g = Arc::clone(g);
    FuncValue::with_memo(
        3,
        Imp::Host(Box::new(move |args| g.eval(&[args[0].clone(), args[1].clone()]))),
    )
}

/// Unary to ternary with dummy arguments (composition axiom ii):
/// `f(m,n,r) = g(m)`.
pub fn to_ternary_from1(g: &Func) -> Func {
    assert_eq!(g.arity(), 1);
    let g = Arc::clone(g);
    FuncValue::with_memo(3, Imp::Host(Box::new(move |args| g.eval(&[args[0].clone()]))))
}

/// Drop to binary by fixing the last argument (composition axiom iii):
/// `f(m,n) = g(m,n,r)`.
pub fn fix_last1(g: &Func, r: Nat) -> Func {
    assert_eq!(g.arity(), 3);
    let g = Arc::clone(g);
    FuncValue::with_memo(
        2,
        Imp::Host(Box::new(move |args| {
            g.eval(&[args[0].clone(), args[1].clone(), r.clone()])
        })),
    )
}

/// Drop to unary by fixing the last two arguments (composition axiom iv):
/// `f(m) = g(m,n,r)`.
pub fn fix_last2(g: &Func, n: Nat, r: Nat) -> Func {
    assert_eq!(g.arity(), 3);
    let g = Arc::clone(g);
    FuncValue::with_memo(
        1,
        Imp::Host(Box::new(move |args| g.eval(&[args[0].clone(), n.clone(), r.clone()]))),
    )
}

/// Unary identity: first projection with the other arguments fixed.
pub fn identity1() -> Func {
    fix_last2(&proj3(0), Nat::from(0u32), Nat::from(0u32))
}

/// Unary composition `g . h`, chained from the ternary combinators.
pub fn compose1(g: &Func, h: &Func) -> Func {
    let h3 = to_ternary_from1(h);
    fix_last2(
        &compose3(&to_ternary_from1(g), &h3, &h3, &h3),
        Nat::from(0u32),
        Nat::from(0u32),
    )
}

/// Binary-headed composition `f(m,n,r) = g(h1(m,n,r), h2(m,n,r))`.
pub fn compose2(g: &Func, h1: &Func, h2: &Func) -> Func {
    compose3(&to_ternary_from2(g), h1, h2, h2)
}

/// Fixes the first argument of a binary function; argument places are
/// swapped with projections before fixing, as the composition axioms
/// allow.
pub fn fix_first_of_binary(g: &Func, value: Nat) -> Func {
    assert_eq!(g.arity(), 2);
    let swapped = compose3(&to_ternary_from2(g), &proj3(1), &proj3(0), &proj3(0));
    fix_last2(&swapped, value, Nat::from(0u32))
}

/// Primitive recursion: `f(m,0)=g(m)`, `f(m,S(n))=h(m,n,f(m,n))`.
pub fn pra(g: &Func, h: &Func) -> Func {
    assert_eq!(g.arity(), 1);
    assert_eq!(h.arity(), 3);
    FuncValue::with_memo(2, Imp::Rec { base: Arc::clone(g), step: Arc::clone(h), sees_succ: false })
}

/// Weakened primitive recursion: the step sees the successor,
/// `f(m,0)=g(m)`, `f(m,S(n))=h(m,S(n),f(m,n))`.
pub fn wpra(g: &Func, h: &Func) -> Func {
    assert_eq!(g.arity(), 1);
    assert_eq!(h.arity(), 3);
    FuncValue::with_memo(2, Imp::Rec { base: Arc::clone(g), step: Arc::clone(h), sees_succ: true })
}

/// Unary iteration: `f(0)=r`, `f(S(n))=h(f(n))`.
pub fn iter(r: Nat, h: &Func) -> Func {
    assert_eq!(h.arity(), 1);
    FuncValue::with_memo(1, Imp::Iter { start: r, step: Arc::clone(h) })
}

/// The iteration lemma's route: weakened recursion applied to a step that
/// reads only the accumulated value, with the parameter then fixed.
pub fn iter_via_wpra(r: Nat, h: &Func) -> Func {
    assert_eq!(h.arity(), 1);
    let hp = compose3(&to_ternary_from1(h), &proj3(2), &proj3(2), &proj3(2));
    let f2 = wpra(&const_unary(r), &hp);
    fix_first_of_binary(&f2, Nat::from(0u32))
}

/// Plain recursion from weakened recursion: shift the step's index access
/// through the predecessor.
pub fn pra_from_wpra(g: &Func, h: &Func, pred: &Func) -> Func {
    let (h, pred) = (Arc::clone(h), Arc::clone(pred));
    let shifted = host3(move |m, k, r| {
        let p = pred.eval(std::slice::from_ref(k))?;
        h.eval(&[m.clone(), p, r.clone()])
    });
    wpra(g, &shifted)
}

/// Weakened recursion from plain recursion: feed the step the successor
/// of its index.
pub fn wpra_from_pra(g: &Func, h: &Func) -> Func {
    let h = Arc::clone(h);
    let shifted = host3(move |m, k, r| h.eval(&[m.clone(), k.clone() + Nat::one(), r.clone()]));
    pra(g, &shifted)
}
