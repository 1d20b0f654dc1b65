use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polarity::{
    attach, delete_tracked, part_at, replace, Conn, PartRef, PathMap, SeqMap, Side, Sign, Step,
};
use crate::syntax::{Formula, Sequent, Sym, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum System {
    Sn,
    Pcn,
    Fn,
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            System::Sn => "SN",
            System::Pcn => "PCN",
            System::Fn => "FN",
        })
    }
}

impl FromStr for System {
    type Err = Error;

    fn from_str(s: &str) -> Result<System> {
        match s.to_ascii_lowercase().as_str() {
            "sn" => Ok(System::Sn),
            "pcn" => Ok(System::Pcn),
            "fn" => Ok(System::Fn),
            _ => Err(Error::Format(format!("unknown system `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Conn3 {
    And,
    Or,
    Imp,
    All,
    Ex,
}

/// The fifteen reduction rules, named by connective, side and sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    AndNegL,
    AndPosR,
    OrPosL,
    OrNegR,
    ImpPosL,
    ImpPosR,
    ImpNegR,
    AllPosL,
    AllNegL,
    AllPosR,
    AllNegR,
    ExPosL,
    ExNegL,
    ExPosR,
    ExNegR,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgKind {
    None,
    Term,
    Eigen,
}

impl RuleId {
    pub const ALL: [RuleId; 15] = [
        RuleId::AndNegL,
        RuleId::AndPosR,
        RuleId::OrPosL,
        RuleId::OrNegR,
        RuleId::ImpPosL,
        RuleId::ImpPosR,
        RuleId::ImpNegR,
        RuleId::AllPosL,
        RuleId::AllNegL,
        RuleId::AllPosR,
        RuleId::AllNegR,
        RuleId::ExPosL,
        RuleId::ExNegL,
        RuleId::ExPosR,
        RuleId::ExNegR,
    ];

    /// Side, sign and main connective of the principal part.
    pub fn shape(self) -> (Side, Sign, Conn3) {
        use RuleId::*;
        match self {
            AndNegL => (Side::Ant, Sign::Neg, Conn3::And),
            AndPosR => (Side::Suc, Sign::Pos, Conn3::And),
            OrPosL => (Side::Ant, Sign::Pos, Conn3::Or),
            OrNegR => (Side::Suc, Sign::Neg, Conn3::Or),
            ImpPosL => (Side::Ant, Sign::Pos, Conn3::Imp),
            ImpPosR => (Side::Suc, Sign::Pos, Conn3::Imp),
            ImpNegR => (Side::Suc, Sign::Neg, Conn3::Imp),
            AllPosL => (Side::Ant, Sign::Pos, Conn3::All),
            AllNegL => (Side::Ant, Sign::Neg, Conn3::All),
            AllPosR => (Side::Suc, Sign::Pos, Conn3::All),
            AllNegR => (Side::Suc, Sign::Neg, Conn3::All),
            ExPosL => (Side::Ant, Sign::Pos, Conn3::Ex),
            ExNegL => (Side::Ant, Sign::Neg, Conn3::Ex),
            ExPosR => (Side::Suc, Sign::Pos, Conn3::Ex),
            ExNegR => (Side::Suc, Sign::Neg, Conn3::Ex),
        }
    }

    /// The rule whose principal part has this side, sign and connective.
    pub fn for_shape(side: Side, sign: Sign, conn: Conn3) -> Option<RuleId> {
        RuleId::ALL.into_iter().find(|r| r.shape() == (side, sign, conn))
    }

    /// The rule acting on the given leaf, if any.
    pub fn for_part(f: &Formula, side: Side, sign: Sign) -> Option<RuleId> {
        let conn = match f {
            Formula::And(..) => Conn3::And,
            Formula::Or(..) => Conn3::Or,
            Formula::Imp(..) => Conn3::Imp,
            Formula::Forall(..) => Conn3::All,
            Formula::Exists(..) => Conn3::Ex,
            _ => return None,
        };
        RuleId::for_shape(side, sign, conn)
    }

    pub fn arg_kind(self) -> ArgKind {
        use RuleId::*;
        match self {
            AllPosL | AllNegR | ExNegL | ExPosR => ArgKind::Term,
            AllNegL | AllPosR | ExPosL | ExNegR => ArgKind::Eigen,
            _ => ArgKind::None,
        }
    }

    /// Rules that keep their principal formula in the conclusion.
    pub fn is_retention(self) -> bool {
        use RuleId::*;
        matches!(self, ImpPosL | AllPosL | AllNegR | ExNegL | ExPosR)
    }

    /// Rules that discard the rest of the succedent.
    pub fn drops_succedent(self) -> bool {
        use RuleId::*;
        matches!(self, ImpPosR | AllPosR | ExNegR)
    }

    pub fn admitted(self, system: System) -> bool {
        use RuleId::*;
        match system {
            System::Sn => true,
            System::Fn => self != ImpPosL,
            System::Pcn => matches!(self, AndNegL | OrPosL | AllPosL | AllNegL | ExPosL | ExNegL),
        }
    }

    /// Counterpart acting on the mirrored part, if the mirror is a leaf.
    ///
    /// A succedent part of sign `s` and an antecedent part of sign `-s`
    /// play the same role in an axiom; this pairs the rules acting on them.
    pub fn mirror(self) -> Option<RuleId> {
        use RuleId::*;
        Some(match self {
            AndPosR => AndNegL,
            AndNegL => AndPosR,
            OrNegR => OrPosL,
            OrPosL => OrNegR,
            ImpNegR => ImpPosL,
            ImpPosL => ImpNegR,
            AllPosR => AllNegL,
            AllNegL => AllPosR,
            AllNegR => AllPosL,
            AllPosL => AllNegR,
            ExPosR => ExNegL,
            ExNegL => ExPosR,
            ExNegR => ExPosL,
            ExPosL => ExNegR,
            ImpPosR => return None,
        })
    }

    pub fn id(self) -> &'static str {
        use RuleId::*;
        match self {
            AndNegL => "and-l-",
            AndPosR => "and-r+",
            OrPosL => "or-l+",
            OrNegR => "or-r-",
            ImpPosL => "imp-l+",
            ImpPosR => "imp-r+",
            ImpNegR => "imp-r-",
            AllPosL => "all-l+",
            AllNegL => "all-l-",
            AllPosR => "all-r+",
            AllNegR => "all-r-",
            ExPosL => "ex-l+",
            ExNegL => "ex-l-",
            ExPosR => "ex-r+",
            ExNegR => "ex-r-",
        }
    }

    pub fn label(self) -> &'static str {
        use RuleId::*;
        match self {
            AndNegL => "(∧⁻→)",
            AndPosR => "(→∧₊)",
            OrPosL => "(∨⁺→)",
            OrNegR => "(→∨₋)",
            ImpPosL => "(⊃⁺→)",
            ImpPosR => "(→⊃₊)",
            ImpNegR => "(→⊃₋)",
            AllPosL => "(∀⁺→)",
            AllNegL => "(∀⁻→)",
            AllPosR => "(→∀₊)",
            AllNegR => "(→∀₋)",
            ExPosL => "(∃⁺→)",
            ExNegL => "(∃⁻→)",
            ExPosR => "(→∃₊)",
            ExNegR => "(→∃₋)",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<RuleId> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.id() == s || r.label() == s)
            .ok_or_else(|| Error::Format(format!("unknown rule `{s}`")))
    }
}

/// Witness term or eigenvariable of a rule application.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Arg {
    None,
    Term(Term),
    Eigen(Sym),
}

impl Arg {
    pub fn term(&self) -> Option<&Term> {
        match self {
            Arg::Term(t) => Some(t),
            _ => None,
        }
    }

    pub fn eigen(&self) -> Option<&Sym> {
        match self {
            Arg::Eigen(b) => Some(b),
            _ => None,
        }
    }
}

/// One premise of a rule application together with bookkeeping that lets
/// callers follow parts of the conclusion into it.
#[derive(Clone, Debug)]
pub struct Child {
    pub seq: Sequent,
    /// Where each surviving part of the conclusion sits in this premise.
    pub map: SeqMap,
    /// The new side formulas produced by the rule (the instance, or the
    /// immediate subformula), in the order of the rule schema.
    pub comps: Vec<PartRef>,
    /// Location of the retained principal formula, for retention rules.
    pub retained: Option<PartRef>,
}

fn wrong(rule: RuleId, p: &PartRef, msg: impl Into<String>) -> Error {
    Error::WrongShape { rule: rule.label().into(), part: p.to_string(), msg: msg.into() }
}

fn instance(rule: RuleId, p: &PartRef, v: &Sym, body: &Formula, t: &Term) -> Result<Formula> {
    body.instantiate(v, t).map_err(|e| wrong(rule, p, e.to_string()))
}

fn left_step(conn: Conn) -> Step {
    match conn {
        Conn::And => Step::AndL,
        Conn::Or => Step::OrL,
    }
}

fn right_step(conn: Conn) -> Step {
    match conn {
        Conn::And => Step::AndR,
        Conn::Or => Step::OrR,
    }
}

/// Conjoin or disjoin `b` onto a side, reporting where old parts and `b` go.
fn attach_side(side_f: Option<Formula>, conn: Conn, b: Formula) -> (Formula, PathMap, Vec<Step>) {
    match side_f {
        None => (b, PathMap::dropped(), Vec::new()),
        Some(c) => (attach(Some(c), conn, b), PathMap::under(vec![left_step(conn)]), vec![right_step(conn)]),
    }
}

/// Apply `rule` at part `p`, returning the premises with tracking data.
pub fn apply_tracked(s: &Sequent, rule: RuleId, p: &PartRef, arg: &Arg) -> Result<Vec<Child>> {
    let f = part_at(s, p)?;
    let (side, sign, _) = rule.shape();
    if p.side != side || p.sign != sign || RuleId::for_part(f, side, sign) != Some(rule) {
        return Err(wrong(rule, p, format!("principal part is `{f}`")));
    }
    match (rule.arg_kind(), arg) {
        (ArgKind::None, Arg::None) | (ArgKind::Term, Arg::Term(_)) | (ArgKind::Eigen, Arg::Eigen(_)) => {}
        (ArgKind::None, _) => return Err(wrong(rule, p, "takes no argument")),
        _ => return Err(Error::MissingArgument(rule.label().into())),
    }
    if let Arg::Eigen(b) = arg {
        if s.has_free(b) {
            return Err(Error::EigenNotFresh(b.to_string()));
        }
    }
    apply_tracked_unchecked(s, rule, p, arg)
}

/// Like [`apply_tracked`] but without the eigenvariable freshness check, for
/// transformations that deliberately reuse a variable already in scope.
pub fn apply_tracked_unchecked(s: &Sequent, rule: RuleId, p: &PartRef, arg: &Arg) -> Result<Vec<Child>> {
    let f = part_at(s, p)?;
    if RuleId::for_part(f, p.side, p.sign) != Some(rule) {
        return Err(wrong(rule, p, format!("principal part is `{f}`")));
    }
    match (rule.arg_kind(), arg) {
        (ArgKind::None, Arg::None) | (ArgKind::Term, Arg::Term(_)) | (ArgKind::Eigen, Arg::Eigen(_)) => {}
        _ => return Err(Error::MissingArgument(rule.label().into())),
    }
    let in_place = |new: Formula| -> Result<Child> {
        let seq = replace(s, p, new)?;
        let mut map = SeqMap::identity();
        *map.side_mut(p.side) = PathMap::except(p.path.clone());
        Ok(Child { seq, map, comps: vec![p.clone()], retained: None })
    };
    use RuleId::*;
    let children = match (rule, f) {
        (AndNegL, Formula::And(a, b)) | (AndPosR, Formula::And(a, b)) | (OrPosL, Formula::Or(a, b)) | (OrNegR, Formula::Or(a, b)) => {
            vec![in_place((**a).clone())?, in_place((**b).clone())?]
        }
        (ImpPosL, Formula::Imp(a, b)) => {
            let (suc, suc_map, a_path) = attach_side(s.suc.clone(), Conn::Or, (**a).clone());
            let c1 = Child {
                seq: Sequent::new(s.ant.clone(), Some(suc)),
                map: SeqMap { ant: PathMap::identity(), suc: suc_map },
                comps: vec![PartRef { side: Side::Suc, path: a_path, sign: Sign::Pos }],
                retained: Some(p.clone()),
            };
            let ant = Formula::and(s.ant.clone().expect("principal lives here"), (**b).clone());
            let c2 = Child {
                seq: Sequent::new(Some(ant), s.suc.clone()),
                map: SeqMap { ant: PathMap::under(vec![Step::AndL]), suc: PathMap::identity() },
                comps: vec![PartRef { side: Side::Ant, path: vec![Step::AndR], sign: Sign::Pos }],
                retained: Some(PartRef::root(Side::Ant).join(&[Step::AndL], Sign::Pos).join(&p.path, p.sign)),
            };
            vec![c1, c2]
        }
        (ImpPosR, Formula::Imp(a, b)) => {
            let (ant, ant_map, a_path) = attach_side(s.ant.clone(), Conn::And, (**a).clone());
            vec![Child {
                seq: Sequent::new(Some(ant), Some((**b).clone())),
                map: SeqMap { ant: ant_map, suc: PathMap::dropped() },
                comps: vec![
                    PartRef { side: Side::Ant, path: a_path, sign: Sign::Pos },
                    PartRef::root(Side::Suc),
                ],
                retained: None,
            }]
        }
        (ImpNegR, Formula::Imp(a, b)) => {
            let (rest, del_map) = delete_tracked(s, p)?;
            let (suc, attach_map, a_path) = attach_side(rest.suc.clone(), Conn::Or, (**a).clone());
            let mut suc_map = del_map;
            crate::polarity::compose(&mut suc_map, &attach_map);
            let c1 = Child {
                seq: Sequent::new(s.ant.clone(), Some(suc)),
                map: SeqMap { ant: PathMap::identity(), suc: suc_map },
                comps: vec![PartRef { side: Side::Suc, path: a_path, sign: Sign::Pos }],
                retained: None,
            };
            vec![c1, in_place((**b).clone())?]
        }
        (AllPosL, Formula::Forall(v, body)) | (ExNegL, Formula::Exists(v, body)) => {
            let t = arg.term().expect("checked");
            let inst = instance(rule, p, v, body, t)?;
            let (new, comp) = if rule == AllPosL {
                (inst, PartRef { side: Side::Ant, path: vec![Step::AndR], sign: Sign::Pos })
            } else {
                (Formula::neg(inst), PartRef { side: Side::Ant, path: vec![Step::AndR, Step::Not], sign: Sign::Neg })
            };
            let ant = Formula::and(s.ant.clone().expect("principal lives here"), new);
            vec![Child {
                seq: Sequent::new(Some(ant), s.suc.clone()),
                map: SeqMap { ant: PathMap::under(vec![Step::AndL]), suc: PathMap::identity() },
                comps: vec![comp],
                retained: Some(PartRef::root(Side::Ant).join(&[Step::AndL], Sign::Pos).join(&p.path, p.sign)),
            }]
        }
        (AllNegR, Formula::Forall(v, body)) | (ExPosR, Formula::Exists(v, body)) => {
            let t = arg.term().expect("checked");
            let inst = instance(rule, p, v, body, t)?;
            let (new, comp) = if rule == ExPosR {
                (inst, PartRef { side: Side::Suc, path: vec![Step::OrR], sign: Sign::Pos })
            } else {
                (Formula::neg(inst), PartRef { side: Side::Suc, path: vec![Step::OrR, Step::Not], sign: Sign::Neg })
            };
            let suc = Formula::or(s.suc.clone().expect("principal lives here"), new);
            vec![Child {
                seq: Sequent::new(s.ant.clone(), Some(suc)),
                map: SeqMap { ant: PathMap::identity(), suc: PathMap::under(vec![Step::OrL]) },
                comps: vec![comp],
                retained: Some(PartRef::root(Side::Suc).join(&[Step::OrL], Sign::Pos).join(&p.path, p.sign)),
            }]
        }
        (AllNegL, Formula::Forall(v, body)) | (ExPosL, Formula::Exists(v, body)) => {
            let b = Term::Var(arg.eigen().expect("checked").clone());
            vec![in_place(instance(rule, p, v, body, &b)?)?]
        }
        (AllPosR, Formula::Forall(v, body)) | (ExNegR, Formula::Exists(v, body)) => {
            let b = Term::Var(arg.eigen().expect("checked").clone());
            let inst = instance(rule, p, v, body, &b)?;
            let (suc, comp) = if rule == AllPosR {
                (inst, PartRef::root(Side::Suc))
            } else {
                (Formula::neg(inst), PartRef { side: Side::Suc, path: vec![Step::Not], sign: Sign::Neg })
            };
            vec![Child {
                seq: Sequent::new(s.ant.clone(), Some(suc)),
                map: SeqMap { ant: PathMap::identity(), suc: PathMap::dropped() },
                comps: vec![comp],
                retained: None,
            }]
        }
        _ => return Err(wrong(rule, p, "shape mismatch")),
    };
    Ok(children)
}

/// Premises of a rule application.
pub fn apply_rule(s: &Sequent, rule: RuleId, p: &PartRef, arg: &Arg) -> Result<Vec<Sequent>> {
    Ok(apply_tracked(s, rule, p, arg)?.into_iter().map(|c| c.seq).collect())
}
