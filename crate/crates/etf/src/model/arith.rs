//! The arithmetic function suite in two builds.
//!
//! `strict_arith` follows the defining recursions literally, assembled
//! only from the initial-function/composition combinators plus the two
//! recursion operators: addition and multiplication by weakened
//! recursion, the sign functions and parity by iteration, the
//! predecessor through the parity of the fast-growing auxiliary
//! function, and truncated subtraction by iterated predecessor. The one
//! concession to feasibility: the auxiliary function's step evaluates
//! its `sg`/product formula directly on big integers, since its values
//! grow doubly exponentially and no iterative multiplication can touch
//! them (the iteration itself is literal).
//!
//! `oracle_arith` computes the same functions with direct host
//! arithmetic; the harness cross-checks the two on exhaustive boxes.

use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use super::combinators::*;
use super::{Env, Func, Nat};
use crate::syntax::Sort;

#[derive(Clone)]
pub struct ArithSuite {
    pub plus: Func,
    pub times: Func,
    pub sg: Func,
    pub sgbar: Func,
    pub odd: Func,
    pub fprime: Func,
    pub pred: Func,
    pub monus: Func,
}

/// The literal construction. See the module docs for what "literal"
/// means for the auxiliary function's step.
pub fn strict_arith() -> ArithSuite {
    let zero = Nat::zero();
    let succ = succ_fn();
    let id = identity1();

    // plus(m,0)=m, plus(m,S(n))=S(plus(m,n)): step (m,k,r) -> S(r).
    let step_succ_of_acc = compose3(&to_ternary_from1(&succ), &proj3(2), &proj3(2), &proj3(2));
    let plus = wpra(&id, &step_succ_of_acc);

    // times(m,0)=0, times(m,S(n))=plus(times(m,n),m): step (m,k,r) -> plus(r,m).
    let step_times = compose3(&to_ternary_from2(&plus), &proj3(2), &proj3(0), &proj3(0));
    let times = wpra(&const_unary(zero.clone()), &step_times);

    // sg(0)=0, sg(S(n))=1 and sgbar(0)=1, sgbar(S(n))=0 by iteration.
    let sg = iter(Nat::zero(), &const_unary(Nat::one()));
    let sgbar = iter(Nat::one(), &const_unary(Nat::zero()));

    // odd(0)=0, odd(S(n))=sgbar(odd(n)).
    let odd = iter(Nat::zero(), &sgbar);

    // fprime(0)=0, fprime(S(n)) = sgbar(fprime(n)) + fprime(n)*S(fprime(n)).
    // Values double their digit count every step, so the step formula is
    // evaluated on big integers directly.
    let fprime_step = host1(|r| {
        let sg_bar = if r.is_zero() { Nat::one() } else { Nat::zero() };
        Ok(sg_bar + r * (r + Nat::one()))
    });
    let fprime = iter(Nat::zero(), &fprime_step);

    // pred(0)=0, pred(S(n)) = sgbar(odd(fprime(S(n)))) * S(pred(n)).
    let flag = compose1(&sgbar, &compose1(&odd, &fprime));
    let flag_of_index = compose3(&to_ternary_from1(&flag), &proj3(1), &proj3(1), &proj3(1));
    let pred_step = compose3(&to_ternary_from2(&times), &flag_of_index, &step_succ_of_acc, &step_succ_of_acc);
    let pred_binary = wpra(&const_unary(zero.clone()), &pred_step);
    let pred = fix_first_of_binary(&pred_binary, Nat::zero());

    // monus(m,0)=m, monus(m,S(n))=pred(monus(m,n)): step (m,k,r) -> pred(r).
    let step_monus = compose3(&to_ternary_from1(&pred), &proj3(2), &proj3(2), &proj3(2));
    let monus = wpra(&id, &step_monus);

    ArithSuite { plus, times, sg, sgbar, odd, fprime, pred, monus }
}

/// Direct host-arithmetic versions of the same functions.
pub fn oracle_arith() -> ArithSuite {
    let plus = host2(|a, b| Ok(a + b));
    let times = host2(|a, b| Ok(a * b));
    let sg = host1(|a| Ok(if a.is_zero() { Nat::zero() } else { Nat::one() }));
    let sgbar = host1(|a| Ok(if a.is_zero() { Nat::one() } else { Nat::zero() }));
    let odd = host1(|a| Ok(a % 2u32));
    // fprime(n+1) = sgbar(fprime(n)) + fprime(n)*(fprime(n)+1), with the
    // whole prefix cached so repeated queries stay linear overall.
    let cache: Arc<Mutex<Vec<Nat>>> = Arc::new(Mutex::new(vec![Nat::zero()]));
    let fprime = host1(move |n| {
        use num_traits::ToPrimitive;
        let idx = n.to_usize().ok_or_else(|| {
            super::EvalError::IterationBudget(format!("fprime argument {n} is out of range"))
        })?;
        let mut seq = cache.lock().unwrap();
        while seq.len() <= idx {
            let last = seq.last().unwrap();
            let sg_bar = if last.is_zero() { Nat::one() } else { Nat::zero() };
            let next = sg_bar + last * (last + Nat::one());
            seq.push(next);
        }
        Ok(seq[idx].clone())
    });
    let pred = host1(|a| Ok(if a.is_zero() { Nat::zero() } else { a - Nat::one() }));
    let monus = host2(|a, b| Ok(if a >= b { a - b } else { Nat::zero() }));
    ArithSuite { plus, times, sg, sgbar, odd, fprime, pred, monus }
}

/// The order function by host comparison: `lt(m,n)=1` iff `m<n`.
pub fn lt_oracle() -> Func {
    host2(|a, b| Ok(if a < b { Nat::one() } else { Nat::zero() }))
}

/// The order function by its construction: primitive recursion whose
/// step is the conditional `S(0)` if `r=S(0) | n=m` else `0`, built as a
/// conditional term over the compiled condition.
pub fn lt_fn() -> Func {
    use crate::syntax::{parse_formula, parse_term, Context};
    let ctx = Context::from_pairs([("n", Sort::N), ("m", Sort::N), ("r", Sort::N)]).unwrap();
    let phi = parse_formula("r=S(0) | n=m", &ctx).unwrap();
    let one = parse_term("S(0)", &ctx).unwrap();
    let zero = parse_term("0", &ctx).unwrap();
    let (witness, _term) = crate::tactics::conditional_def(&phi, &one, &zero, &oracle_env())
        .expect("lt step conditional is well-formed");
    pra(&const_unary(Nat::zero()), &witness)
}

/// Environment binding every reserved defined-function name to its
/// oracle realization (used when evaluating compiled terms and
/// conditional definitions).
pub fn oracle_env() -> Env {
    let a = oracle_arith();
    let mut env = Env::new();
    env.bind_fn("plus", a.plus);
    env.bind_fn("times", a.times);
    env.bind_fn("sg", a.sg);
    env.bind_fn("sgbar", a.sgbar);
    env.bind_fn("odd", a.odd);
    env.bind_fn("fprime", a.fprime);
    env.bind_fn("pred", a.pred);
    env.bind_fn("monus", a.monus);
    env.bind_fn("lt", lt_oracle());
    env
}

/// Environment binding the reserved names to the strict constructions
/// (plus the constructed order function).
pub fn strict_env() -> Env {
    let a = strict_arith();
    let mut env = Env::new();
    env.bind_fn("plus", a.plus);
    env.bind_fn("times", a.times);
    env.bind_fn("sg", a.sg);
    env.bind_fn("sgbar", a.sgbar);
    env.bind_fn("odd", a.odd);
    env.bind_fn("fprime", a.fprime);
    env.bind_fn("pred", a.pred);
    env.bind_fn("monus", a.monus);
    env.bind_fn("lt", lt_fn());
    env
}
