//! Classical arithmetic CN as a Hilbert system, the translation `T` into
//! implication-free formulas, and embedding of CN proofs into PCN proofs of
//! `∼TA |-`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::calculus::{apply_tracked, Arg, Just, Kernel, RuleId, System, Tableau, Verdict};
use crate::cutelim::{consistency_demos, pcn_cut, CutInstance};
use crate::error::{Error, Result};
use crate::metatheory::replay::adapt;
use crate::metatheory::{xf_equality_in, xf_extended_axiom_in, xf_fn_prime, xf_neg_right};
use crate::polarity::{locate, parts, PartRef, Side, Sign, Step};
use crate::search::{prove, SearchBudget, SearchOutcome};
use crate::syntax::{alpha_eq, parse_formula, Formula, Sequent, Sym, Term, ADD, EQ, MUL};

/// Axiom schemata of CN. `Refl` and `Leibniz` are the two theses taken as
/// given; they are accepted in proofs used as fixtures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Schema {
    S2_11a,
    S2_11b,
    S2_12,
    S2_13a,
    S2_13b,
    S2_14a,
    S2_14b,
    S2_15,
    S2_16,
    S2_17,
    S2_18,
    S2_19,
    S2_21,
    S2_22,
    S2_23,
    S2_24,
    S2_25,
    S2_26,
    S2_27,
    S2_28,
    Refl,
    Leibniz,
}

impl Schema {
    pub const ALL: [Schema; 22] = [
        Schema::S2_11a,
        Schema::S2_11b,
        Schema::S2_12,
        Schema::S2_13a,
        Schema::S2_13b,
        Schema::S2_14a,
        Schema::S2_14b,
        Schema::S2_15,
        Schema::S2_16,
        Schema::S2_17,
        Schema::S2_18,
        Schema::S2_19,
        Schema::S2_21,
        Schema::S2_22,
        Schema::S2_23,
        Schema::S2_24,
        Schema::S2_25,
        Schema::S2_26,
        Schema::S2_27,
        Schema::S2_28,
        Schema::Refl,
        Schema::Leibniz,
    ];

    pub fn id(self) -> &'static str {
        use Schema::*;
        match self {
            S2_11a => "2.11a",
            S2_11b => "2.11b",
            S2_12 => "2.12",
            S2_13a => "2.13a",
            S2_13b => "2.13b",
            S2_14a => "2.14a",
            S2_14b => "2.14b",
            S2_15 => "2.15",
            S2_16 => "2.16",
            S2_17 => "2.17",
            S2_18 => "2.18",
            S2_19 => "2.19",
            S2_21 => "2.21",
            S2_22 => "2.22",
            S2_23 => "2.23",
            S2_24 => "2.24",
            S2_25 => "2.25",
            S2_26 => "2.26",
            S2_27 => "2.27",
            S2_28 => "2.28",
            Refl => "2.41",
            Leibniz => "2.42",
        }
    }

    /// The schema as a formula over meta letters `A`, `B`, `C` and `a`, `b`, `c`.
    pub fn shape(self) -> &'static str {
        use Schema::*;
        match self {
            S2_11a => "A -> B -> A",
            S2_11b => "(A -> B) -> (A -> B -> C) -> A -> C",
            S2_12 => "A -> B -> A & B",
            S2_13a => "A & B -> A",
            S2_13b => "A & B -> B",
            S2_14a => "A -> A | B",
            S2_14b => "B -> A | B",
            S2_15 => "(A -> C) -> (B -> C) -> A | B -> C",
            S2_16 => "(A -> B) -> (A -> ~B) -> ~A",
            S2_17 => "~~A -> A",
            S2_18 => "(forall x. A(x)) -> A(t)",
            S2_19 => "A(t) -> exists x. A(x)",
            S2_21 => "a' = b' -> a = b",
            S2_22 => "~(a' = 0)",
            S2_23 => "a = b -> b = c -> a = c",
            S2_24 => "a = b -> a' = b'",
            S2_25 => "a + 0 = a",
            S2_26 => "a + b' = (a + b)'",
            S2_27 => "a * 0 = 0",
            S2_28 => "a * b' = a * b + a",
            Refl => "x = x",
            Leibniz => "x = y -> A(x) -> A(y)",
        }
    }

    /// Arithmetic schemata whose embedding is a single axiom-8 leaf.
    fn is_arithmetic(self) -> bool {
        use Schema::*;
        matches!(self, S2_21 | S2_22 | S2_24 | S2_25 | S2_26 | S2_27 | S2_28 | Refl)
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Schema {
    type Err = Error;

    fn from_str(s: &str) -> Result<Schema> {
        Schema::ALL
            .into_iter()
            .find(|k| k.id() == s)
            .ok_or_else(|| Error::SchemaMismatch { schema: s.into(), msg: "unknown schema".into() })
    }
}

/// One line of a CN derivation. Line numbers are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CnLine {
    Axiom { schema: Schema, formula: Formula },
    /// From line `minor` (B) and line `major` (B ⊃ A), infer A.
    Mp { minor: usize, major: usize },
    /// From `C ⊃ A(x)` infer `C ⊃ ∀x A(x)`.
    GenAll { from: usize, var: Sym },
    /// From `A(x) ⊃ C` infer `∃x A(x) ⊃ C`.
    GenEx { from: usize, var: Sym },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CnProof {
    pub lines: Vec<CnLine>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLine {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    axiom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    formula: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mp: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gen_all: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gen_ex: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    var: Option<String>,
}

/// Binder of the quantifier introduced on the consequent (`∀`) or the
/// antecedent (`∃`) of an explicitly written conclusion.
fn binder_in(text: &str, universal: bool) -> Result<Sym> {
    let f = parse_formula(text)?;
    let q = match (&f, universal) {
        (Formula::Imp(_, b), true) => b.as_ref(),
        (Formula::Imp(a, _), false) => a.as_ref(),
        _ => return Err(Error::Format(format!("`{f}` is not an implication"))),
    };
    match (q, universal) {
        (Formula::Forall(v, _), true) | (Formula::Exists(v, _), false) => Ok(v.clone()),
        _ => Err(Error::Format(format!("`{f}` has no quantifier to introduce"))),
    }
}

impl RawLine {
    fn into_line(self) -> Result<CnLine> {
        let var = |from_formula: bool| -> Result<Sym> {
            match (&self.var, &self.formula) {
                (Some(v), _) => Ok(crate::syntax::sym(v)),
                (None, Some(text)) => binder_in(text, from_formula),
                (None, None) => Err(Error::Format("generalization needs `var` or `formula`".into())),
            }
        };
        match (&self.axiom, self.mp, self.gen_all, self.gen_ex) {
            (Some(s), None, None, None) => {
                let text = self.formula.as_deref().ok_or_else(|| Error::Format("axiom line without formula".into()))?;
                Ok(CnLine::Axiom { schema: s.parse()?, formula: parse_formula(text)? })
            }
            (None, Some([i, j]), None, None) => Ok(CnLine::Mp { minor: i, major: j }),
            (None, None, Some(i), None) => Ok(CnLine::GenAll { from: i, var: var(true)? }),
            (None, None, None, Some(i)) => Ok(CnLine::GenEx { from: i, var: var(false)? }),
            _ => Err(Error::Format("each line needs exactly one of axiom, mp, gen_all, gen_ex".into())),
        }
    }

    fn from_line(l: &CnLine) -> RawLine {
        match l {
            CnLine::Axiom { schema, formula } => RawLine { axiom: Some(schema.id().into()), formula: Some(formula.to_string()), ..RawLine::default() },
            CnLine::Mp { minor, major } => RawLine { mp: Some([*minor, *major]), ..RawLine::default() },
            CnLine::GenAll { from, var } => RawLine { gen_all: Some(*from), var: Some(var.to_string()), ..RawLine::default() },
            CnLine::GenEx { from, var } => RawLine { gen_ex: Some(*from), var: Some(var.to_string()), ..RawLine::default() },
        }
    }
}

impl CnProof {
    /// Accepts a JSON array of lines or one JSON object per line.
    pub fn from_json(text: &str) -> Result<CnProof> {
        let trimmed = text.trim_start();
        let raws: Vec<RawLine> = if trimmed.starts_with('[') {
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?
        } else {
            text.lines()
                .filter(|l| !l.trim().is_empty())
                .enumerate()
                .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::Format(format!("line {}: {e}", i + 1))))
                .collect::<Result<_>>()?
        };
        let lines = raws.into_iter().map(RawLine::into_line).collect::<Result<_>>()?;
        Ok(CnProof { lines })
    }

    pub fn to_json(&self) -> String {
        let raws: Vec<RawLine> = self.lines.iter().map(RawLine::from_line).collect();
        serde_json::to_string_pretty(&raws).expect("plain data serializes")
    }
}

/// What a schema instance binds.
#[derive(Clone, Debug, Default)]
pub struct Instance {
    pub formulas: BTreeMap<char, Formula>,
    pub terms: BTreeMap<char, Term>,
    /// The term of a quantifier schema, or the two sides of a Leibniz instance.
    pub quantifier: Option<(Sym, Term)>,
}

fn mismatch(schema: Schema, msg: impl Into<String>) -> Error {
    Error::SchemaMismatch { schema: schema.id().into(), msg: msg.into() }
}

struct Matcher {
    schema: Schema,
    inst: Instance,
}

impl Matcher {
    fn formula(&mut self, meta: char, f: &Formula) -> Result<()> {
        match self.inst.formulas.get(&meta) {
            Some(g) if alpha_eq(g, f) => Ok(()),
            Some(g) => Err(mismatch(self.schema, format!("`{meta}` is both `{g}` and `{f}`"))),
            None => {
                self.inst.formulas.insert(meta, f.clone());
                Ok(())
            }
        }
    }

    fn term(&mut self, meta: char, t: &Term) -> Result<()> {
        match self.inst.terms.get(&meta) {
            Some(u) if u == t => Ok(()),
            Some(u) => Err(mismatch(self.schema, format!("`{meta}` is both `{u}` and `{t}`"))),
            None => {
                self.inst.terms.insert(meta, t.clone());
                Ok(())
            }
        }
    }
}

fn imp(f: &Formula) -> Option<(&Formula, &Formula)> {
    match f {
        Formula::Imp(a, b) => Some((a, b)),
        _ => None,
    }
}

fn eq_sides(f: &Formula) -> Option<(&Term, &Term)> {
    match f {
        Formula::Prime(p, args) if &**p == EQ && args.len() == 2 => Some((&args[0], &args[1])),
        _ => None,
    }
}

fn app<'t>(t: &'t Term, name: &str) -> Option<(&'t Term, &'t Term)> {
    match t {
        Term::App(f, args) if &**f == name && args.len() == 2 => Some((&args[0], &args[1])),
        _ => None,
    }
}

fn succ(t: &Term) -> Option<&Term> {
    match t {
        Term::Succ(a) => Some(a),
        _ => None,
    }
}

/// The term `t` with `body[x:=t] = inst`, if any. `None` inside means `x`
/// does not occur and any term works.
fn find_instance(body: &Formula, x: &Sym, inst: &Formula) -> std::result::Result<Option<Term>, ()> {
    let mut found: Option<Term> = None;
    fn terms(a: &Term, b: &Term, x: &Sym, found: &mut Option<Term>) -> std::result::Result<(), ()> {
        match (a, b) {
            (Term::Var(v), _) if v == x => match found {
                Some(t) if t != b => Err(()),
                Some(_) => Ok(()),
                None => {
                    *found = Some(b.clone());
                    Ok(())
                }
            },
            (Term::Var(v), Term::Var(w)) if v == w => Ok(()),
            (Term::Zero, Term::Zero) => Ok(()),
            (Term::Succ(a), Term::Succ(b)) => terms(a, b, x, found),
            (Term::App(f, xs), Term::App(g, ys)) if f == g && xs.len() == ys.len() => xs.iter().zip(ys).try_for_each(|(a, b)| terms(a, b, x, found)),
            _ => Err(()),
        }
    }
    fn go(a: &Formula, b: &Formula, x: &Sym, found: &mut Option<Term>) -> std::result::Result<(), ()> {
        use Formula::*;
        match (a, b) {
            (Prime(p, xs), Prime(q, ys)) if p == q && xs.len() == ys.len() => xs.iter().zip(ys).try_for_each(|(s, t)| terms(s, t, x, found)),
            (Neg(a), Neg(b)) => go(a, b, x, found),
            (And(a1, a2), And(b1, b2)) | (Or(a1, a2), Or(b1, b2)) | (Imp(a1, a2), Imp(b1, b2)) => {
                go(a1, b1, x, found)?;
                go(a2, b2, x, found)
            }
            (Forall(v, a), Forall(w, b)) | (Exists(v, a), Exists(w, b)) if v == w => {
                if v == x {
                    return if a == b { Ok(()) } else { Err(()) };
                }
                go(a, b, x, found)
            }
            _ => Err(()),
        }
    }
    go(body, inst, x, &mut found)?;
    Ok(found)
}

/// Check that `inst` is `body[x:=t]` with `t` free for `x`, and return `t`
/// (`0` if `x` does not occur).
fn quantifier_instance(schema: Schema, x: &Sym, body: &Formula, inst: &Formula) -> Result<Term> {
    let t = match find_instance(body, x, inst) {
        Ok(t) => t.unwrap_or(Term::Zero),
        Err(()) => {
            // Fall back to alpha-equivalence after substitution for renamed binders.
            return Err(mismatch(schema, format!("`{inst}` is not an instance of `{body}`")));
        }
    };
    let again = body.subst(x, &t).map_err(|_| mismatch(schema, format!("`{t}` is not free for `{x}`")))?;
    if !alpha_eq(&again, inst) {
        return Err(mismatch(schema, format!("`{inst}` is not an instance of `{body}`")));
    }
    Ok(t)
}

/// Is `c` obtained from `b` by replacing some free occurrences of `x` by `y`?
fn leibniz(b: &Formula, c: &Formula, x: &Term, y: &Term) -> bool {
    fn terms(s: &Term, t: &Term, x: &Term, y: &Term) -> bool {
        if s == t || (s == x && t == y) {
            return true;
        }
        match (s, t) {
            (Term::Succ(a), Term::Succ(b)) => terms(a, b, x, y),
            (Term::App(f, xs), Term::App(g, ys)) => f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(a, b)| terms(a, b, x, y)),
            _ => false,
        }
    }
    let bound = |v: &Sym| x.contains_var(v) || y.contains_var(v);
    use Formula::*;
    match (b, c) {
        (Prime(p, xs), Prime(q, ys)) => p == q && xs.len() == ys.len() && xs.iter().zip(ys).all(|(s, t)| terms(s, t, x, y)),
        (Neg(a), Neg(b)) => leibniz(a, b, x, y),
        (And(a1, a2), And(b1, b2)) | (Or(a1, a2), Or(b1, b2)) | (Imp(a1, a2), Imp(b1, b2)) => leibniz(a1, b1, x, y) && leibniz(a2, b2, x, y),
        (Forall(v, a), Forall(w, b)) | (Exists(v, a), Exists(w, b)) => v == w && (if bound(v) { a == b } else { leibniz(a, b, x, y) }),
        _ => false,
    }
}

/// Match an instance against a schema.
pub fn match_schema(schema: Schema, f: &Formula) -> Result<Instance> {
    use Schema::*;
    let mut m = Matcher { schema, inst: Instance::default() };
    let bad = |msg: &str| mismatch(schema, format!("`{f}`: {msg}"));
    fn need<T>(x: Option<T>, bad: &dyn Fn(&str) -> Error, what: &str) -> Result<T> {
        x.ok_or_else(|| bad(what))
    }
    let need_imp = |g| need(imp(g), &bad, "expected an implication");
    match schema {
        S2_11a => {
            let (a, r) = need_imp(f)?;
            let (b, a2) = need_imp(r)?;
            m.formula('A', a)?;
            m.formula('B', b)?;
            m.formula('A', a2)?;
        }
        S2_11b => {
            let (ab, r) = need_imp(f)?;
            let (abc, ac) = need_imp(r)?;
            let (a, b) = need_imp(ab)?;
            let (a2, bc) = need_imp(abc)?;
            let (b2, c) = need_imp(bc)?;
            let (a3, c2) = need_imp(ac)?;
            for (k, g) in [('A', a), ('B', b), ('A', a2), ('B', b2), ('C', c), ('A', a3), ('C', c2)] {
                m.formula(k, g)?;
            }
        }
        S2_12 => {
            let (a, r) = need_imp(f)?;
            let (b, ab) = need_imp(r)?;
            let Formula::And(a2, b2) = ab else { return Err(bad("expected a conjunction")) };
            for (k, g) in [('A', a), ('B', b), ('A', a2.as_ref()), ('B', b2.as_ref())] {
                m.formula(k, g)?;
            }
        }
        S2_13a | S2_13b => {
            let (ab, x) = need_imp(f)?;
            let Formula::And(a, b) = ab else { return Err(bad("expected a conjunction")) };
            m.formula('A', a)?;
            m.formula('B', b)?;
            m.formula(if schema == S2_13a { 'A' } else { 'B' }, x)?;
        }
        S2_14a | S2_14b => {
            let (x, ab) = need_imp(f)?;
            let Formula::Or(a, b) = ab else { return Err(bad("expected a disjunction")) };
            m.formula('A', a)?;
            m.formula('B', b)?;
            m.formula(if schema == S2_14a { 'A' } else { 'B' }, x)?;
        }
        S2_15 => {
            let (ac, r) = need_imp(f)?;
            let (bc, r2) = need_imp(r)?;
            let (ab, c3) = need_imp(r2)?;
            let (a, c) = need_imp(ac)?;
            let (b, c2) = need_imp(bc)?;
            let Formula::Or(a2, b2) = ab else { return Err(bad("expected a disjunction")) };
            for (k, g) in [('A', a), ('C', c), ('B', b), ('C', c2), ('A', a2.as_ref()), ('B', b2.as_ref()), ('C', c3)] {
                m.formula(k, g)?;
            }
        }
        S2_16 => {
            let (ab, r) = need_imp(f)?;
            let (anb, na) = need_imp(r)?;
            let (a, b) = need_imp(ab)?;
            let (a2, nb) = need_imp(anb)?;
            let (Formula::Neg(b2), Formula::Neg(a3)) = (nb, na) else { return Err(bad("expected negations")) };
            for (k, g) in [('A', a), ('B', b), ('A', a2), ('B', b2.as_ref()), ('A', a3.as_ref())] {
                m.formula(k, g)?;
            }
        }
        S2_17 => {
            let (nna, a) = need_imp(f)?;
            let Formula::Neg(na) = nna else { return Err(bad("expected a double negation")) };
            let Formula::Neg(a2) = na.as_ref() else { return Err(bad("expected a double negation")) };
            m.formula('A', a2)?;
            m.formula('A', a)?;
        }
        S2_18 => {
            let (all, inst) = need_imp(f)?;
            let Formula::Forall(x, body) = all else { return Err(bad("expected a universal antecedent")) };
            let t = quantifier_instance(schema, x, body, inst)?;
            m.inst.quantifier = Some((x.clone(), t));
            m.formula('A', all)?;
        }
        S2_19 => {
            let (inst, ex) = need_imp(f)?;
            let Formula::Exists(x, body) = ex else { return Err(bad("expected an existential consequent")) };
            let t = quantifier_instance(schema, x, body, inst)?;
            m.inst.quantifier = Some((x.clone(), t));
            m.formula('A', ex)?;
        }
        S2_21 => {
            let (l, r) = need_imp(f)?;
            let ((sa, sb), (a, b)) = (eq_sides(l).ok_or_else(|| bad("expected an equation"))?, eq_sides(r).ok_or_else(|| bad("expected an equation"))?);
            let (sa, sb) = (succ(sa).ok_or_else(|| bad("expected a successor"))?, succ(sb).ok_or_else(|| bad("expected a successor"))?);
            for (k, t) in [('a', sa), ('b', sb), ('a', a), ('b', b)] {
                m.term(k, t)?;
            }
        }
        S2_22 => {
            let Formula::Neg(e) = f else { return Err(bad("expected a negation")) };
            let (sa, z) = eq_sides(e).ok_or_else(|| bad("expected an equation"))?;
            let a = succ(sa).ok_or_else(|| bad("expected a successor"))?;
            if *z != Term::Zero {
                return Err(bad("right side must be 0"));
            }
            m.term('a', a)?;
        }
        S2_23 => {
            let (l, r) = need_imp(f)?;
            let (m2, r2) = need_imp(r)?;
            let e = |g| need(eq_sides(g), &bad, "expected an equation");
            let ((a, b), (x, y), (u, v)) = (e(l)?, e(m2)?, e(r2)?);
            // Either a=b ⊃ b=c ⊃ a=c or a=b ⊃ a=c ⊃ b=c.
            let first = a == u && b == x && y == v;
            let second = a == x && b == u && y == v;
            if !first && !second {
                return Err(bad("not a transitivity instance"));
            }
            m.term('a', a)?;
            m.term('b', b)?;
            m.term('c', y)?;
        }
        S2_24 => {
            let (l, r) = need_imp(f)?;
            let (a, b) = eq_sides(l).ok_or_else(|| bad("expected an equation"))?;
            let (sa, sb) = eq_sides(r).ok_or_else(|| bad("expected an equation"))?;
            m.term('a', a)?;
            m.term('b', b)?;
            m.term('a', succ(sa).ok_or_else(|| bad("expected a successor"))?)?;
            m.term('b', succ(sb).ok_or_else(|| bad("expected a successor"))?)?;
        }
        S2_25 | S2_27 => {
            let (l, r) = eq_sides(f).ok_or_else(|| bad("expected an equation"))?;
            let op = if schema == S2_25 { ADD } else { MUL };
            let (a, z) = app(l, op).ok_or_else(|| bad("wrong operator"))?;
            if *z != Term::Zero {
                return Err(bad("second argument must be 0"));
            }
            m.term('a', a)?;
            m.term(if schema == S2_25 { 'a' } else { 'z' }, r)?;
            if schema == S2_27 && *r != Term::Zero {
                return Err(bad("right side must be 0"));
            }
        }
        S2_26 => {
            let (l, r) = eq_sides(f).ok_or_else(|| bad("expected an equation"))?;
            let (a, sb) = app(l, ADD).ok_or_else(|| bad("expected a sum"))?;
            let (a2, b2) = app(succ(r).ok_or_else(|| bad("expected a successor"))?, ADD).ok_or_else(|| bad("expected a sum"))?;
            m.term('a', a)?;
            m.term('b', succ(sb).ok_or_else(|| bad("expected a successor"))?)?;
            m.term('a', a2)?;
            m.term('b', b2)?;
        }
        S2_28 => {
            let (l, r) = eq_sides(f).ok_or_else(|| bad("expected an equation"))?;
            let (a, sb) = app(l, MUL).ok_or_else(|| bad("expected a product"))?;
            let (ab, a3) = app(r, ADD).ok_or_else(|| bad("expected a sum"))?;
            let (a2, b2) = app(ab, MUL).ok_or_else(|| bad("expected a product"))?;
            m.term('a', a)?;
            m.term('b', succ(sb).ok_or_else(|| bad("expected a successor"))?)?;
            m.term('a', a2)?;
            m.term('b', b2)?;
            m.term('a', a3)?;
        }
        Refl => {
            let (a, b) = eq_sides(f).ok_or_else(|| bad("expected an equation"))?;
            m.term('a', a)?;
            m.term('a', b)?;
        }
        Leibniz => {
            let (e, r) = need_imp(f)?;
            let (b, c) = need_imp(r)?;
            let (x, y) = eq_sides(e).ok_or_else(|| bad("expected an equation"))?;
            if !leibniz(b, c, x, y) {
                return Err(bad("consequent is not the antecedent with the left term replaced by the right"));
            }
            m.term('a', x)?;
            m.term('b', y)?;
            m.formula('A', b)?;
            m.formula('B', c)?;
        }
    }
    Ok(m.inst)
}

/// The translation `T`: implications become `∼TA ∨ TB`, all else commutes.
pub fn translate(a: &Formula) -> Formula {
    use Formula::*;
    match a {
        Prime(..) => a.clone(),
        Neg(b) => Formula::neg(translate(b)),
        And(b, c) => Formula::and(translate(b), translate(c)),
        Or(b, c) => Formula::or(translate(b), translate(c)),
        Imp(b, c) => Formula::or(Formula::neg(translate(b)), translate(c)),
        Forall(v, b) => Forall(v.clone(), Box::new(translate(b))),
        Exists(v, b) => Exists(v.clone(), Box::new(translate(b))),
    }
}

/// The sequent `∼TA |-` that an embedding proves.
pub fn embedded_sequent(a: &Formula) -> Sequent {
    Sequent::ant(Formula::neg(translate(a)))
}

/// A checked CN derivation with the formula and length of every line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnChecked {
    pub formulas: Vec<Formula>,
    pub lengths: Vec<usize>,
}

impl CnChecked {
    pub fn conclusion(&self) -> Option<&Formula> {
        self.formulas.last()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CnVerdict {
    Accepted(CnChecked),
    Rejected { line: usize, reason: String },
}

fn earlier(formulas: &[Formula], i: usize, at: usize) -> std::result::Result<&Formula, String> {
    if i == 0 || i >= at {
        return Err(format!("line {i} is not an earlier line"));
    }
    Ok(&formulas[i - 1])
}

fn check_line(line: &CnLine, at: usize, done: &CnChecked) -> std::result::Result<(Formula, usize), String> {
    let fs = &done.formulas;
    match line {
        CnLine::Axiom { schema, formula } => {
            match_schema(*schema, formula).map_err(|e| e.to_string())?;
            Ok((formula.clone(), 0))
        }
        CnLine::Mp { minor, major } => {
            let b = earlier(fs, *minor, at)?;
            let ba = earlier(fs, *major, at)?;
            let (b2, a) = imp(ba).ok_or_else(|| format!("line {major} `{ba}` is not an implication"))?;
            if !alpha_eq(b, b2) {
                return Err(format!("line {major} has antecedent `{b2}`, line {minor} is `{b}`"));
            }
            Ok((a.clone(), done.lengths[minor - 1].max(done.lengths[major - 1]) + 1))
        }
        CnLine::GenAll { from, var } => {
            let f = earlier(fs, *from, at)?;
            let (c, a) = imp(f).ok_or_else(|| format!("line {from} `{f}` is not an implication"))?;
            if c.has_free(var) {
                return Err(format!("`{c}` contains `{var}` free"));
            }
            Ok((Formula::imp(c.clone(), Formula::Forall(var.clone(), Box::new(a.clone()))), done.lengths[from - 1] + 1))
        }
        CnLine::GenEx { from, var } => {
            let f = earlier(fs, *from, at)?;
            let (a, c) = imp(f).ok_or_else(|| format!("line {from} `{f}` is not an implication"))?;
            if c.has_free(var) {
                return Err(format!("`{c}` contains `{var}` free"));
            }
            Ok((Formula::imp(Formula::Exists(var.clone(), Box::new(a.clone())), c.clone()), done.lengths[from - 1] + 1))
        }
    }
}

/// Validate every line of a CN derivation.
pub fn cn_check(p: &CnProof) -> CnVerdict {
    let mut done = CnChecked { formulas: Vec::new(), lengths: Vec::new() };
    if p.lines.is_empty() {
        return CnVerdict::Rejected { line: 0, reason: "empty derivation".into() };
    }
    for (i, l) in p.lines.iter().enumerate() {
        match check_line(l, i + 1, &done) {
            Ok((f, n)) => {
                done.formulas.push(f);
                done.lengths.push(n);
            }
            Err(reason) => return CnVerdict::Rejected { line: i + 1, reason },
        }
    }
    CnVerdict::Accepted(done)
}

fn disjoint(p: &PartRef, q: &PartRef) -> bool {
    !p.is_prefix_of(q) && !q.is_prefix_of(p)
}

/// Close `F[X⁺, X⁻] |-` by an extended axiom on the largest matching pair,
/// splitting the leftmost antecedent disjunction or negative conjunction
/// when no pair is present yet.
fn drive(kernel: &Kernel, s: &Sequent) -> Result<Tableau> {
    let ps = parts(s);
    let mut pairs: Vec<(usize, PartRef, PartRef)> = Vec::new();
    for (p, a) in &ps {
        if p.sign != Sign::Pos {
            continue;
        }
        for (q, b) in &ps {
            if q.sign == Sign::Neg && disjoint(p, q) && alpha_eq(a, b) {
                pairs.push((a.length(), p.clone(), q.clone()));
            }
        }
    }
    pairs.sort_by(|x, y| y.0.cmp(&x.0));
    for (_, p, q) in &pairs {
        if let Ok(tb) = xf_extended_axiom_in(kernel, s, p, q) {
            if kernel.accepts(&tb, System::Pcn) {
                return Ok(tb);
            }
        }
    }
    let split = crate::polarity::leaves(s)
        .into_iter()
        .find(|(p, f)| matches!(RuleId::for_part(f, p.side, p.sign), Some(RuleId::OrPosL | RuleId::AndNegL)));
    let Some((p, f)) = split else {
        return kernel.leaf(s.clone(), System::Pcn);
    };
    let rule = RuleId::for_part(f, p.side, p.sign).expect("found above");
    let kids = apply_tracked(s, rule, &p, &Arg::None)?;
    let children = kids.iter().map(|k| drive(kernel, &k.seq)).collect::<Result<Vec<_>>>()?;
    Ok(Tableau::step(s.clone(), rule, p, Arg::None, children))
}

/// Locate the single part holding the quantifier introduced by the instance or introduction schema.
fn quantifier_part(s: &Sequent, q: &Formula) -> Result<PartRef> {
    parts(s)
        .into_iter()
        .find(|(_, f)| *f == q)
        .map(|(p, _)| p)
        .ok_or_else(|| Error::Replay(format!("`{q}` not found in `{s}`")))
}

/// PCN proof of `∼T(instance) |-` for an axiom instance.
pub fn embed_axiom(kernel: &Kernel, schema: Schema, instance: &Formula) -> Result<Tableau> {
    use Schema::*;
    let inst = match_schema(schema, instance)?;
    let s = embedded_sequent(instance);
    let proof = match schema {
        S2_18 | S2_19 => {
            let (_, t) = inst.quantifier.clone().expect("set by the matcher");
            let q = translate(&inst.formulas[&'A']);
            let at = quantifier_part(&s, &q)?;
            let rule = if schema == S2_18 { RuleId::AllPosL } else { RuleId::ExNegL };
            let arg = Arg::Term(t);
            let kids = apply_tracked(&s, rule, &at, &arg)?;
            Tableau::step(s.clone(), rule, at, arg, vec![drive(kernel, &kids[0].seq)?])
        }
        S2_23 | Leibniz => {
            let (ta, tb) = equality_parts(&s, schema)?;
            xf_equality_in(kernel, &s, &ta, &tb)?
        }
        _ if schema.is_arithmetic() => kernel.leaf(s.clone(), System::Pcn)?,
        _ => drive(kernel, &s)?,
    };
    match kernel.check(&proof, System::Pcn) {
        Verdict::Accepted { .. } => Ok(proof),
        Verdict::Rejected { node, reason } => Err(Error::Rejected { node, reason }),
    }
}

/// `A(s)⁺` and `A(t)⁻` in `∼(∼ s=t ∨ (∼A(s) ∨ A(t)))`.
fn equality_parts(s: &Sequent, _schema: Schema) -> Result<(PartRef, PartRef)> {
    let x = locate(s, Side::Ant, &[Step::Not, Step::OrR, Step::OrL, Step::Not])?;
    let y = locate(s, Side::Ant, &[Step::Not, Step::OrR, Step::OrR])?;
    Ok((x, y))
}

/// Embed a whole derivation, line by line.
pub fn embed(kernel: &Kernel, p: &CnProof) -> Result<Tableau> {
    let checked = match cn_check(p) {
        CnVerdict::Accepted(c) => c,
        CnVerdict::Rejected { line, reason } => return Err(Error::Rejected { node: format!("line {line}"), reason }),
    };
    let mut proofs: Vec<Tableau> = Vec::with_capacity(p.lines.len());
    for (i, line) in p.lines.iter().enumerate() {
        let target = embedded_sequent(&checked.formulas[i]);
        let tb = match line {
            CnLine::Axiom { schema, formula } => embed_axiom(kernel, *schema, formula)?,
            CnLine::Mp { minor, major } => {
                let right = proofs[minor - 1].clone();
                let left = proofs[major - 1].clone();
                let left_part = locate(&left.seq, Side::Ant, &[Step::Not, Step::OrL, Step::Not])?;
                let right_part = locate(&right.seq, Side::Ant, &[Step::Not])?;
                let out = pcn_cut(kernel, &CutInstance { left, right, left_part, right_part })?.proof;
                adapt(kernel, System::Pcn, &out, &target, &[])?
            }
            CnLine::GenAll { from, var } => {
                let at = locate(&target, Side::Ant, &[Step::Not, Step::OrR])?;
                introduce(kernel, &target, RuleId::AllNegL, at, var, &proofs[from - 1])?
            }
            CnLine::GenEx { from, var } => {
                let at = locate(&target, Side::Ant, &[Step::Not, Step::OrL, Step::Not])?;
                introduce(kernel, &target, RuleId::ExPosL, at, var, &proofs[from - 1])?
            }
        };
        proofs.push(tb);
    }
    let last = proofs.pop().expect("nonempty derivation");
    match kernel.check(&last, System::Pcn) {
        Verdict::Accepted { .. } => Ok(last),
        Verdict::Rejected { node, reason } => Err(Error::Rejected { node, reason }),
    }
}

/// One eigenvariable step with the generalized variable, atop `premise`.
fn introduce(kernel: &Kernel, target: &Sequent, rule: RuleId, at: PartRef, var: &Sym, premise: &Tableau) -> Result<Tableau> {
    let arg = Arg::Eigen(var.clone());
    let kids = apply_tracked(target, rule, &at, &arg)?;
    let child = adapt(kernel, System::Pcn, premise, &kids[0].seq, &[])?;
    Ok(Tableau { seq: target.clone(), just: Just::Rule { rule, part: at, arg }, children: vec![child] })
}

/// One fact in the consistency argument for CN.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnDemoLine {
    pub claim: String,
    pub holds: bool,
}

/// The finite checks behind the consistency of CN: a CN proof of `0=1`
/// would embed into a PCN proof of `∼(0=1) |-`, and no such proof exists.
pub fn consistency_cn_demo(kernel: &Kernel) -> Vec<CnDemoLine> {
    let mut out = Vec::new();
    let target = embedded_sequent(&Formula::eq(Term::Zero, Term::num(1)));
    out.push(CnDemoLine { claim: format!("a CN proof of 0 = 1 embeds as `{target}`"), holds: target.to_string() == "~(0 = 1) |-" });
    for d in consistency_demos(kernel) {
        out.push(CnDemoLine { claim: format!("`{}` in {}: {}", d.sequent, d.system, d.expected), holds: d.holds });
    }
    let refuted = matches!(prove(kernel, &target, System::Pcn, SearchBudget::default()), SearchOutcome::Refuted(_));
    out.push(CnDemoLine { claim: format!("search refutes `{target}` in PCN"), holds: refuted });
    // The second argument moves `∼∼(0=1) |-` to `|- ∼(0=1)`; both moves are exercised.
    let nn = Sequent::ant(Formula::neg(Formula::neg(Formula::eq(Term::Zero, Term::num(1)))));
    let base = kernel.leaf(nn.clone(), System::Pcn);
    let moved = base.as_ref().ok().and_then(|b| {
        let p = locate(&nn, Side::Ant, &[Step::Not]).ok()?;
        xf_neg_right(kernel, b, &p).ok()
    });
    out.push(CnDemoLine {
        claim: "`~~(0 = 1) |-` gives `|- ~(0 = 1)` by moving the negative part".into(),
        holds: moved.is_some_and(|m| m.seq.to_string() == "|- ~(0 = 1)" && kernel.accepts(&m, System::Sn)),
    });
    let moved = base.as_ref().ok().and_then(|b| {
        let p = locate(&nn, Side::Ant, &[Step::Not, Step::Not]).ok()?;
        xf_fn_prime(kernel, b, &p).ok()
    });
    out.push(CnDemoLine {
        claim: "`~~(0 = 1) |-` gives `|- ~(0 = 1)` in FN by moving the prime part".into(),
        holds: moved.is_some_and(|m| m.seq.to_string() == "|- ~(0 = 1)" && kernel.accepts(&m, System::Fn)),
    });
    out
}
