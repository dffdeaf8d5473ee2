//! The standard model over the naturals: total functions of arity 1-3 as
//! evaluation procedures over arbitrary-precision numbers, term/formula
//! evaluation, and bounded checking of quantified formulas.
//!
//! Unbounded searches (function inversion, least-witness search) take an
//! explicit [`Fuel`] budget; exhaustion is a reported error, never a
//! wrong value.

mod arith;
mod combinators;
mod constructions;
mod theorem2;

pub use arith::{lt_fn, lt_oracle, oracle_arith, oracle_env, strict_arith, strict_env, ArithSuite};
pub use combinators::{
    compose1, compose2, compose3, const_unary, fix_first_of_binary, fix_last1, fix_last2, host1,
    host2, host3, identity1, iter, iter_via_wpra, pra, pra_from_wpra, proj3, succ_fn,
    to_ternary_from1, to_ternary_from2, wpra, wpra_from_pra,
};
pub use constructions::{
    invert_function, max_suite, mu_min, pairing_suite, perm_extend, quotient_fn, MaxSuite,
    PairingSuite, PermExtension,
};
pub use theorem2::{p_1to2, p_2to1, p_3to2, p_3to4, p_4to3};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::syntax::{Formula, Sort, Term};

/// Arbitrary-precision natural number.
pub type Nat = BigUint;

pub fn nat(v: u64) -> Nat {
    BigUint::from(v)
}

/// Step budget for unbounded searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fuel(pub u64);

impl Default for Fuel {
    fn default() -> Fuel {
        Fuel(1_000_000)
    }
}

/// Hard cap on literal recursion/iteration depth inside a single
/// evaluation. Guards against astronomically large arguments reaching an
/// iterative combinator; exceeding it is a reported error.
pub const ITERATION_BUDGET: u64 = 50_000_000;

/// Memo tables are capacity-bounded; on overflow the table is cleared
/// (results are unaffected, caching restarts).
pub const MEMO_CAPACITY: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq)]
pub enum EvalError {
    Unbound(String),
    Arity { expected: usize, got: usize },
    FunctionQuantifier(String),
    /// Search exhausted its fuel: either the sought value does not exist
    /// or the budget was too small — the caller cannot distinguish.
    FuelExhausted(String),
    IterationBudget(String),
    Precondition(String),
    NotOpen,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Unbound(n) => write!(f, "unbound variable `{n}`"),
            EvalError::Arity { expected, got } => {
                write!(f, "arity mismatch: expected {expected} argument(s), got {got}")
            }
            EvalError::FunctionQuantifier(n) => {
                write!(f, "cannot decide a function-sort quantifier (over `{n}`)")
            }
            EvalError::FuelExhausted(m) => write!(
                f,
                "fuel exhausted: {m} (no witness below the budget; either none exists or the \
                 budget is too small)"
            ),
            EvalError::IterationBudget(m) => write!(f, "iteration budget exceeded: {m}"),
            EvalError::Precondition(m) => write!(f, "precondition failed: {m}"),
            EvalError::NotOpen => write!(f, "formula is not quantifier-free"),
        }
    }
}

impl std::error::Error for EvalError {}

type HostFn = Box<dyn Fn(&[Nat]) -> Result<Nat, EvalError> + Send + Sync>;

enum Imp {
    Host(HostFn),
    /// `f(0)=start`, `f(n+1)=step(f(n))`. Evaluation iterates, detecting
    /// value cycles so that huge arguments of eventually-periodic
    /// iterations stay cheap.
    Iter { start: Nat, step: Func },
    /// Primitive recursion on the last argument. With `sees_succ`, the
    /// step receives the current index `n+1` instead of `n`.
    Rec { base: Func, step: Func, sees_succ: bool },
}

/// A total function on naturals with a synchronized, capacity-bounded
/// memo table. Shared via [`Func`] (= `Arc<FuncValue>`); safe to use
/// across threads.
pub struct FuncValue {
    arity: usize,
    imp: Imp,
    memo: Option<Mutex<HashMap<Vec<Nat>, Nat>>>,
}

pub type Func = Arc<FuncValue>;

impl fmt::Debug for FuncValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.imp {
            Imp::Host(_) => "host",
            Imp::Iter { .. } => "iter",
            Imp::Rec { sees_succ: true, .. } => "wpra",
            Imp::Rec { sees_succ: false, .. } => "pra",
        };
        write!(f, "FuncValue(arity={}, {kind})", self.arity)
    }
}

impl FuncValue {
    fn with_memo(arity: usize, imp: Imp) -> Func {
        Arc::new(FuncValue { arity, imp, memo: Some(Mutex::new(HashMap::new())) })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// A view of this function with memoization disabled (for
    /// differential testing; results must be identical).
    pub fn without_memo(self: &Func) -> Func {
        let this = Arc::clone(self);
        Arc::new(FuncValue {
            arity: self.arity,
            imp: Imp::Host(Box::new(move |args| this.eval_uncached(args))),
            memo: None,
        })
    }

    pub fn eval(&self, args: &[Nat]) -> Result<Nat, EvalError> {
        if args.len() != self.arity {
            return Err(EvalError::Arity { expected: self.arity, got: args.len() });
        }
        if let Some(memo) = &self.memo {
            if let Some(v) = memo.lock().unwrap().get(args) {
                return Ok(v.clone());
            }
        }
        let result = self.eval_uncached(args)?;
        if let Some(memo) = &self.memo {
            let mut table = memo.lock().unwrap();
            if table.len() >= MEMO_CAPACITY {
                table.clear();
            }
            table.insert(args.to_vec(), result.clone());
        }
        Ok(result)
    }

    /// Convenience: evaluate at small arguments.
    pub fn at(&self, args: &[u64]) -> Result<Nat, EvalError> {
        let args: Vec<Nat> = args.iter().map(|v| nat(*v)).collect();
        self.eval(&args)
    }

    fn eval_uncached(&self, args: &[Nat]) -> Result<Nat, EvalError> {
        match &self.imp {
            Imp::Host(f) => f(args),
            Imp::Iter { start, step } => eval_iter(start, step, &args[0]),
            Imp::Rec { base, step, sees_succ } => {
                self.eval_rec(base, step, *sees_succ, args)
            }
        }
    }

    fn eval_rec(
        &self,
        base: &Func,
        step: &Func,
        sees_succ: bool,
        args: &[Nat],
    ) -> Result<Nat, EvalError> {
        let (params, n) = args.split_at(args.len() - 1);
        let n = &n[0];
        let n64 = n.to_u64().filter(|v| *v <= ITERATION_BUDGET).ok_or_else(|| {
            EvalError::IterationBudget(format!("recursion depth {n} exceeds the budget"))
        })?;
        // Resume from the deepest memoized prefix.
        let mut start_k = 0u64;
        let mut acc = None;
        if let Some(memo) = &self.memo {
            let table = memo.lock().unwrap();
            let mut key: Vec<Nat> = args.to_vec();
            let mut k = n64;
            while k > 0 {
                k -= 1;
                *key.last_mut().unwrap() = Nat::from(k);
                if let Some(v) = table.get(&key) {
                    start_k = k;
                    acc = Some(v.clone());
                    break;
                }
            }
        }
        let mut acc = match acc {
            Some(v) => v,
            None => base.eval(params)?,
        };
        let mut call: Vec<Nat> = Vec::with_capacity(params.len() + 2);
        for k in start_k..n64 {
            let idx = if sees_succ { k + 1 } else { k };
            call.clear();
            call.extend_from_slice(params);
            call.push(Nat::from(idx));
            call.push(acc);
            acc = step.eval(&call)?;
            if let Some(memo) = &self.memo {
                let mut table = memo.lock().unwrap();
                if table.len() >= MEMO_CAPACITY {
                    table.clear();
                }
                let mut key = params.to_vec();
                key.push(Nat::from(k + 1));
                table.insert(key, acc.clone());
            }
        }
        Ok(acc)
    }
}

fn eval_iter(start: &Nat, step: &Func, n: &Nat) -> Result<Nat, EvalError> {
    let mut seen: HashMap<Nat, u64> = HashMap::new();
    let mut seq: Vec<Nat> = vec![start.clone()];
    seen.insert(start.clone(), 0);
    let mut i: u64 = 0;
    let mut value = start.clone();
    loop {
        if Nat::from(i) == *n {
            return Ok(value);
        }
        if i >= ITERATION_BUDGET {
            return Err(EvalError::IterationBudget(format!(
                "iteration at argument {n} exceeds {ITERATION_BUDGET} steps"
            )));
        }
        let next = step.eval(std::slice::from_ref(&value))?;
        i += 1;
        if let Some(&j) = seen.get(&next) {
            // Entered a cycle: values repeat with period i-j from j on.
            let period = i - j;
            let offset = ((n - Nat::from(j)) % Nat::from(period))
                .to_u64()
                .expect("cycle offset fits in u64");
            return Ok(seq[(j + offset) as usize].clone());
        }
        seen.insert(next.clone(), i);
        seq.push(next.clone());
        value = next;
    }
}

/// Assignment of numbers to number variables and functions to function
/// variables.
#[derive(Debug, Clone, Default)]
pub struct Env {
    nums: HashMap<String, Nat>,
    fns: HashMap<String, Func>,
}

impl Env {
    pub fn new() -> Env {
        Env::default()
    }

    pub fn bind_num(&mut self, name: &str, v: Nat) {
        self.nums.insert(name.to_string(), v);
    }

    pub fn bind_fn(&mut self, name: &str, f: Func) {
        self.fns.insert(name.to_string(), f);
    }

    pub fn num(&self, name: &str) -> Option<&Nat> {
        self.nums.get(name)
    }

    pub fn func(&self, name: &str) -> Option<&Func> {
        self.fns.get(name)
    }

    pub fn with_num(&self, name: &str, v: Nat) -> Env {
        let mut e = self.clone();
        e.bind_num(name, v);
        e
    }

    pub fn with_fn(&self, name: &str, f: Func) -> Env {
        let mut e = self.clone();
        e.bind_fn(name, f);
        e
    }
}

pub fn eval_term(t: &Term, env: &Env) -> Result<Nat, EvalError> {
    match t {
        Term::Zero => Ok(Nat::zero()),
        Term::Var(n) => env.num(n).cloned().ok_or_else(|| EvalError::Unbound(n.clone())),
        Term::Succ(inner) => Ok(eval_term(inner, env)? + Nat::one()),
        Term::App(f, args) => {
            let func = env.func(f).cloned().ok_or_else(|| EvalError::Unbound(f.clone()))?;
            let vals: Vec<Nat> =
                args.iter().map(|a| eval_term(a, env)).collect::<Result<_, _>>()?;
            func.eval(&vals)
        }
    }
}

/// Evaluates a quantifier-free formula.
pub fn eval_open(f: &Formula, env: &Env) -> Result<bool, EvalError> {
    match f {
        Formula::Eq(a, b) => Ok(eval_term(a, env)? == eval_term(b, env)?),
        Formula::Not(x) => Ok(!eval_open(x, env)?),
        Formula::And(a, b) => Ok(eval_open(a, env)? && eval_open(b, env)?),
        Formula::Or(a, b) => Ok(eval_open(a, env)? || eval_open(b, env)?),
        Formula::Implies(a, b) => Ok(!eval_open(a, env)? || eval_open(b, env)?),
        Formula::Iff(a, b) => Ok(eval_open(a, env)? == eval_open(b, env)?),
        Formula::Forall(_, _, _) | Formula::Exists(_, _, _) | Formula::ExistsUnique(_, _, _) => {
            Err(EvalError::NotOpen)
        }
    }
}

/// Truth value of the relativization of `f` with number quantifiers
/// bounded by `[0, bound]`. Function-sort quantifiers are not decided;
/// witnesses must already be bound in `env`.
pub fn bounded_check(f: &Formula, env: &Env, bound: &Nat) -> Result<bool, EvalError> {
    match f {
        Formula::Eq(_, _) => eval_open(f, env),
        Formula::Not(x) => Ok(!bounded_check(x, env, bound)?),
        Formula::And(a, b) => Ok(bounded_check(a, env, bound)? && bounded_check(b, env, bound)?),
        Formula::Or(a, b) => Ok(bounded_check(a, env, bound)? || bounded_check(b, env, bound)?),
        Formula::Implies(a, b) => {
            Ok(!bounded_check(a, env, bound)? || bounded_check(b, env, bound)?)
        }
        Formula::Iff(a, b) => Ok(bounded_check(a, env, bound)? == bounded_check(b, env, bound)?),
        Formula::Forall(x, Sort::N, body) => {
            let mut k = Nat::zero();
            while k <= *bound {
                let scoped = env.with_num(x, k.clone());
                if !bounded_check(body, &scoped, bound)? {
                    return Ok(false);
                }
                k += Nat::one();
            }
            Ok(true)
        }
        Formula::Exists(x, Sort::N, body) => {
            let mut k = Nat::zero();
            while k <= *bound {
                let scoped = env.with_num(x, k.clone());
                if bounded_check(body, &scoped, bound)? {
                    return Ok(true);
                }
                k += Nat::one();
            }
            Ok(false)
        }
        Formula::ExistsUnique(x, Sort::N, body) => {
            let mut count = 0usize;
            let mut k = Nat::zero();
            while k <= *bound {
                let scoped = env.with_num(x, k.clone());
                if bounded_check(body, &scoped, bound)? {
                    count += 1;
                    if count > 1 {
                        return Ok(false);
                    }
                }
                k += Nat::one();
            }
            Ok(count == 1)
        }
        Formula::Forall(x, _, _) | Formula::Exists(x, _, _) | Formula::ExistsUnique(x, _, _) => {
            Err(EvalError::FunctionQuantifier(x.clone()))
        }
    }
}

/// A function given by a term: `arg_names` name the argument positions,
/// other free variables are read from the captured environment.
pub fn term_func(term: &Term, arg_names: &[&str], env: &Env) -> Func {
    let term = term.clone();
    let names: Vec<String> = arg_names.iter().map(|s| s.to_string()).collect();
    let base = env.clone();
    FuncValue::with_memo(
        names.len(),
        Imp::Host(Box::new(move |args| {
            let mut env = base.clone();
            for (name, v) in names.iter().zip(args) {
                env.bind_num(name, v.clone());
            }
            eval_term(&term, &env)
        })),
    )
}

#[cfg(test)]
mod tests;
