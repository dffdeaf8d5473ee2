//! Proof-script files: a JSON object with a context header, theory name,
//! premise list, goal, and steps.
//!
//! ```json
//! {"context":[{"name":"g","sort":"F2"}],
//!  "theory":"COM_fcn",
//!  "premises":["WPRA", {"name":"eq1","formula":"all n:N. n=n"}],
//!  "goal":"~(S(0)=0)",
//!  "steps":[{"id":1,"formula":"all n:N. ~(S(n)=0)","rule":"axiom","args":{"name":"succ-i"}},
//!           {"id":2,"formula":"~(S(0)=0)","rule":"inst","args":{"of":1,"term":"0"}}]}
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::syntax::{
    parse_context_term, parse_formula, parse_term, Context, Formula, Sort, SyntaxError, Term,
};
use crate::theories::{self, StatementName, TheoryId};

use super::{CheckResult, ProofStep, Rule, Witness};

#[derive(Debug, Clone, Serialize, Deserialize)]
struct DeclJson {
    name: String,
    sort: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct StepJson {
    id: usize,
    formula: String,
    rule: String,
    #[serde(default)]
    args: Map<String, Value>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ScriptJson {
    context: Vec<DeclJson>,
    theory: String,
    #[serde(default)]
    premises: Vec<Value>,
    goal: String,
    steps: Vec<StepJson>,
}

/// A fully resolved proof script.
#[derive(Debug, Clone)]
pub struct ProofScript {
    pub ctx: Context,
    pub theory: TheoryId,
    pub premises: Vec<(String, Formula)>,
    pub goal: Formula,
    pub steps: Vec<ProofStep>,
}

#[derive(Debug)]
pub enum ScriptError {
    Json(String),
    Syntax(SyntaxError),
    Malformed(String),
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScriptError::Json(m) => write!(f, "invalid JSON: {m}"),
            ScriptError::Syntax(e) => write!(f, "{e}"),
            ScriptError::Malformed(m) => write!(f, "malformed script: {m}"),
        }
    }
}

impl std::error::Error for ScriptError {}

impl From<SyntaxError> for ScriptError {
    fn from(e: SyntaxError) -> ScriptError {
        ScriptError::Syntax(e)
    }
}

fn get_usize(args: &Map<String, Value>, key: &str) -> Result<usize, ScriptError> {
    args.get(key)
        .and_then(Value::as_u64)
        .map(|v| v as usize)
        .ok_or_else(|| ScriptError::Malformed(format!("missing integer arg `{key}`")))
}

fn get_str<'a>(args: &'a Map<String, Value>, key: &str) -> Result<&'a str, ScriptError> {
    args.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| ScriptError::Malformed(format!("missing string arg `{key}`")))
}

fn get_term(args: &Map<String, Value>, key: &str, ctx: &Context) -> Result<Term, ScriptError> {
    Ok(parse_term(get_str(args, key)?, ctx)?)
}

fn get_witness(args: &Map<String, Value>, ctx: &Context) -> Result<Witness, ScriptError> {
    if args.contains_key("term") {
        Ok(Witness::Term(get_term(args, "term", ctx)?))
    } else if args.contains_key("fvar") {
        Ok(Witness::FVar(get_str(args, "fvar")?.to_string()))
    } else {
        Err(ScriptError::Malformed("expected a `term` or `fvar` witness arg".to_string()))
    }
}

fn rule_from_json(
    name: &str,
    args: &Map<String, Value>,
    ctx: &Context,
) -> Result<Rule, ScriptError> {
    let rule = match name {
        "axiom" => Rule::Axiom { name: get_str(args, "name")?.to_string() },
        "taut" => {
            let of = args
                .get("of")
                .and_then(Value::as_array)
                .ok_or_else(|| ScriptError::Malformed("taut needs an `of` array".to_string()))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| ScriptError::Malformed("bad step id".to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Rule::Taut { of }
        }
        "mp" => Rule::Mp { of: get_usize(args, "of")?, imp: get_usize(args, "imp")? },
        "gen" => Rule::Gen { of: get_usize(args, "of")?, var: get_str(args, "var")?.to_string() },
        "inst" => Rule::Inst { of: get_usize(args, "of")?, term: get_term(args, "term", ctx)? },
        "instf" => {
            Rule::InstF { of: get_usize(args, "of")?, fvar: get_str(args, "fvar")?.to_string() }
        }
        "exintro" => Rule::ExIntro { of: get_usize(args, "of")?, witness: get_witness(args, ctx)? },
        "exrule" => {
            Rule::ExRule { of: get_usize(args, "of")?, var: get_str(args, "var")?.to_string() }
        }
        "gen_imp" => {
            Rule::GenImp { of: get_usize(args, "of")?, var: get_str(args, "var")?.to_string() }
        }
        "refl" => Rule::Refl { term: get_term(args, "term", ctx)? },
        "sym" => Rule::Sym { of: get_usize(args, "of")? },
        "trans" => Rule::Trans { of: get_usize(args, "of")?, and: get_usize(args, "and")? },
        "cong" => Rule::Cong {
            of: get_usize(args, "of")?,
            context: parse_context_term(get_str(args, "context")?, ctx)?,
        },
        "all_elim" => Rule::AllElim { term: get_term(args, "term", ctx)? },
        "all_elim_f" => Rule::AllElimF { fvar: get_str(args, "fvar")?.to_string() },
        "ex_intro_imp" => Rule::ExIntroImp { witness: get_witness(args, ctx)? },
        "eq_sym_imp" => Rule::EqSymImp,
        "eq_trans_imp" => Rule::EqTransImp,
        "eq_cong_imp" => {
            Rule::EqCongImp { context: parse_context_term(get_str(args, "context")?, ctx)? }
        }
        other => return Err(ScriptError::Malformed(format!("unknown rule `{other}`"))),
    };
    Ok(rule)
}

fn rule_to_json(rule: &Rule) -> Map<String, Value> {
    let mut m = Map::new();
    match rule {
        Rule::Axiom { name } => {
            m.insert("name".into(), json!(name));
        }
        Rule::Taut { of } => {
            m.insert("of".into(), json!(of));
        }
        Rule::Mp { of, imp } => {
            m.insert("of".into(), json!(of));
            m.insert("imp".into(), json!(imp));
        }
        Rule::Gen { of, var } | Rule::ExRule { of, var } | Rule::GenImp { of, var } => {
            m.insert("of".into(), json!(of));
            m.insert("var".into(), json!(var));
        }
        Rule::Inst { of, term } => {
            m.insert("of".into(), json!(of));
            m.insert("term".into(), json!(term.to_string()));
        }
        Rule::InstF { of, fvar } => {
            m.insert("of".into(), json!(of));
            m.insert("fvar".into(), json!(fvar));
        }
        Rule::ExIntro { of, witness } => {
            m.insert("of".into(), json!(of));
            witness_to_json(witness, &mut m);
        }
        Rule::Refl { term } => {
            m.insert("term".into(), json!(term.to_string()));
        }
        Rule::Sym { of } => {
            m.insert("of".into(), json!(of));
        }
        Rule::Trans { of, and } => {
            m.insert("of".into(), json!(of));
            m.insert("and".into(), json!(and));
        }
        Rule::Cong { of, context } => {
            m.insert("of".into(), json!(of));
            m.insert("context".into(), json!(context.to_string()));
        }
        Rule::AllElim { term } => {
            m.insert("term".into(), json!(term.to_string()));
        }
        Rule::AllElimF { fvar } => {
            m.insert("fvar".into(), json!(fvar));
        }
        Rule::ExIntroImp { witness } => {
            witness_to_json(witness, &mut m);
        }
        Rule::EqSymImp | Rule::EqTransImp => {}
        Rule::EqCongImp { context } => {
            m.insert("context".into(), json!(context.to_string()));
        }
    }
    m
}

fn witness_to_json(witness: &Witness, m: &mut Map<String, Value>) {
    match witness {
        Witness::Term(t) => {
            m.insert("term".into(), json!(t.to_string()));
        }
        Witness::FVar(name) => {
            m.insert("fvar".into(), json!(name));
        }
    }
}

impl ProofScript {
    pub fn from_json(text: &str) -> Result<ProofScript, ScriptError> {
        let raw: ScriptJson =
            serde_json::from_str(text).map_err(|e| ScriptError::Json(e.to_string()))?;
        let mut ctx = Context::new();
        for d in &raw.context {
            let sort = Sort::from_name(&d.sort)
                .ok_or_else(|| ScriptError::Malformed(format!("unknown sort `{}`", d.sort)))?;
            ctx.declare(&d.name, sort)?;
        }
        let theory = TheoryId::from_name(&raw.theory)
            .ok_or_else(|| ScriptError::Malformed(format!("unknown theory `{}`", raw.theory)))?;
        let mut premises = Vec::new();
        for p in &raw.premises {
            match p {
                Value::String(name) => {
                    let st = StatementName::from_name(name).ok_or_else(|| {
                        ScriptError::Malformed(format!("unknown statement `{name}`"))
                    })?;
                    let st = theories::statement(st);
                    premises.push((st.name, st.formula));
                }
                Value::Object(obj) => {
                    let name = obj.get("name").and_then(Value::as_str).ok_or_else(|| {
                        ScriptError::Malformed("premise object needs a `name`".to_string())
                    })?;
                    let text = obj.get("formula").and_then(Value::as_str).ok_or_else(|| {
                        ScriptError::Malformed("premise object needs a `formula`".to_string())
                    })?;
                    let f = parse_formula(text, &ctx)?;
                    premises.push((name.to_string(), f));
                }
                _ => {
                    return Err(ScriptError::Malformed(
                        "premises must be statement names or {name, formula} objects".to_string(),
                    ))
                }
            }
        }
        let goal = parse_formula(&raw.goal, &ctx)?.desugar();
        let mut steps = Vec::new();
        for s in &raw.steps {
            let formula = parse_formula(&s.formula, &ctx)?.desugar();
            let rule = rule_from_json(&s.rule, &s.args, &ctx)?;
            steps.push(ProofStep { id: s.id, formula, rule });
        }
        Ok(ProofScript { ctx, theory, premises, goal, steps })
    }

    pub fn to_json(&self) -> String {
        let context: Vec<DeclJson> = self
            .ctx
            .iter()
            .map(|(n, s)| DeclJson { name: n.to_string(), sort: s.to_string() })
            .collect();
        let steps: Vec<StepJson> = self
            .steps
            .iter()
            .map(|s| StepJson {
                id: s.id,
                formula: s.formula.to_string(),
                rule: s.rule.name().to_string(),
                args: rule_to_json(&s.rule),
            })
            .collect();
        let premises: Vec<Value> = self
            .premises
            .iter()
            .map(|(name, f)| {
                if StatementName::from_name(name).is_some() {
                    json!(name)
                } else {
                    json!({"name": name, "formula": f.to_string()})
                }
            })
            .collect();
        let script = ScriptJson {
            context,
            theory: self.theory.to_string(),
            premises,
            goal: self.goal.to_string(),
            steps,
        };
        serde_json::to_string_pretty(&script).expect("script serialization cannot fail")
    }

    /// Runs the kernel on this script.
    pub fn check(&self) -> CheckResult {
        let theory = theories::axioms_of(self.theory);
        super::check_proof(&theory, &self.premises, &self.ctx, &self.steps, &self.goal)
    }
}
