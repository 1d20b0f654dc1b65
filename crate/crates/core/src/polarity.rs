//! Signed parts of a sequent, addressed by side and descent path.
//!
//! A part is reached from a side formula by descending through the
//! connectives that the sign rules look through: conjunctions of positive
//! antecedent parts, disjunctions of negative ones, implications of negative
//! ones, and the mirror cases in the succedent. Strong negation flips the
//! sign. Everything else is a leaf.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::syntax::{Formula, Sequent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Ant,
    Suc,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Ant => Side::Suc,
            Side::Suc => Side::Ant,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    AndL,
    AndR,
    OrL,
    OrR,
    ImpL,
    ImpR,
    Not,
}

impl Step {
    pub fn name(self) -> &'static str {
        match self {
            Step::AndL => "and.left",
            Step::AndR => "and.right",
            Step::OrL => "or.left",
            Step::OrR => "or.right",
            Step::ImpL => "imp.left",
            Step::ImpR => "imp.right",
            Step::Not => "neg",
        }
    }

    fn from_name(s: &str) -> Option<Step> {
        Some(match s {
            "and.left" => Step::AndL,
            "and.right" => Step::AndR,
            "or.left" => Step::OrL,
            "or.right" => Step::OrR,
            "imp.left" => Step::ImpL,
            "imp.right" => Step::ImpR,
            "neg" => Step::Not,
            _ => return None,
        })
    }
}

pub type Path = Vec<Step>;

/// A signed occurrence of a subformula in a sequent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartRef {
    pub side: Side,
    pub path: Path,
    pub sign: Sign,
}

impl PartRef {
    pub fn root(side: Side) -> PartRef {
        PartRef { side, path: Vec::new(), sign: Sign::Pos }
    }

    pub fn child(&self, step: Step, sign: Sign) -> PartRef {
        let mut path = self.path.clone();
        path.push(step);
        PartRef { side: self.side, path, sign }
    }

    /// Extend by a relative path whose sign changes were computed elsewhere.
    pub fn join(&self, rel: &[Step], sign: Sign) -> PartRef {
        let mut path = self.path.clone();
        path.extend_from_slice(rel);
        PartRef { side: self.side, path, sign }
    }

    pub fn is_prefix_of(&self, other: &PartRef) -> bool {
        self.side == other.side && other.path.starts_with(&self.path)
    }

    pub fn disjoint(&self, other: &PartRef) -> bool {
        !(self.is_prefix_of(other) || other.is_prefix_of(self))
    }

    /// Parse a path string and recompute the sign against `s`.
    pub fn parse_in(text: &str, s: &Sequent) -> Result<PartRef> {
        let loc: Location = text.parse()?;
        let sign = sign_along(s, loc.side, &loc.path)?;
        Ok(PartRef { side: loc.side, path: loc.path, sign })
    }
}

impl fmt::Display for PartRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.side {
            Side::Ant => "ant:/",
            Side::Suc => "suc:/",
        })?;
        let names: Vec<&str> = self.path.iter().map(|s| s.name()).collect();
        f.write_str(&names.join("/"))
    }
}

/// Side and path without a sign, as written in proof files.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Location {
    pub side: Side,
    pub path: Path,
}

impl FromStr for Location {
    type Err = Error;

    fn from_str(text: &str) -> Result<Location> {
        let bad = || Error::InvalidPart(format!("malformed path `{text}`"));
        let (side, rest) = text.split_once(':').ok_or_else(bad)?;
        let side = match side {
            "ant" => Side::Ant,
            "suc" => Side::Suc,
            _ => return Err(bad()),
        };
        let rest = rest.strip_prefix('/').ok_or_else(bad)?;
        let path = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split('/').map(|s| Step::from_name(s).ok_or_else(bad)).collect::<Result<Path>>()?
        };
        Ok(Location { side, path })
    }
}

/// Polarity children of a node: the steps the sign rules descend through.
pub fn descend(f: &Formula, side: Side, sign: Sign) -> Vec<(Step, Sign, &Formula)> {
    use Formula::*;
    match (f, side, sign) {
        (Neg(a), _, s) => vec![(Step::Not, s.flip(), a)],
        (And(a, b), Side::Ant, Sign::Pos) => vec![(Step::AndL, Sign::Pos, a), (Step::AndR, Sign::Pos, b)],
        (Or(a, b), Side::Ant, Sign::Neg) => vec![(Step::OrL, Sign::Neg, a), (Step::OrR, Sign::Neg, b)],
        (Imp(a, b), Side::Ant, Sign::Neg) => vec![(Step::ImpL, Sign::Pos, a), (Step::ImpR, Sign::Neg, b)],
        (Or(a, b), Side::Suc, Sign::Pos) => vec![(Step::OrL, Sign::Pos, a), (Step::OrR, Sign::Pos, b)],
        (And(a, b), Side::Suc, Sign::Neg) => vec![(Step::AndL, Sign::Neg, a), (Step::AndR, Sign::Neg, b)],
        _ => Vec::new(),
    }
}

/// True when no sign rule looks inside this part.
pub fn is_leaf(f: &Formula, side: Side, sign: Sign) -> bool {
    descend(f, side, sign).is_empty()
}

pub fn side_formula(s: &Sequent, side: Side) -> Option<&Formula> {
    match side {
        Side::Ant => s.ant.as_ref(),
        Side::Suc => s.suc.as_ref(),
    }
}

fn side_formula_mut(s: &mut Sequent, side: Side) -> &mut Option<Formula> {
    match side {
        Side::Ant => &mut s.ant,
        Side::Suc => &mut s.suc,
    }
}

fn walk_parts<'a>(f: &'a Formula, r: PartRef, out: &mut Vec<(PartRef, &'a Formula)>) {
    let kids = descend(f, r.side, r.sign);
    out.push((r.clone(), f));
    for (step, sign, g) in kids {
        walk_parts(g, r.child(step, sign), out);
    }
}

/// Every part of the sequent, antecedent first, in preorder.
pub fn parts(s: &Sequent) -> Vec<(PartRef, &Formula)> {
    let mut out = Vec::new();
    for side in [Side::Ant, Side::Suc] {
        if let Some(f) = side_formula(s, side) {
            walk_parts(f, PartRef::root(side), &mut out);
        }
    }
    out
}

pub fn enumerate_parts(s: &Sequent) -> Vec<(PartRef, Formula)> {
    parts(s).into_iter().map(|(r, f)| (r, f.clone())).collect()
}

/// The leaves of the sequent: parts that no sign rule decomposes.
pub fn leaves(s: &Sequent) -> Vec<(PartRef, &Formula)> {
    parts(s).into_iter().filter(|(r, f)| is_leaf(f, r.side, r.sign)).collect()
}

/// Parts of a subformula sitting at `at`, with paths relative to it.
pub fn leaves_below<'a>(f: &'a Formula, at: &PartRef) -> Vec<(PartRef, &'a Formula)> {
    let mut out = Vec::new();
    walk_parts(f, at.clone(), &mut out);
    out.into_iter().filter(|(r, g)| is_leaf(g, r.side, r.sign)).collect()
}

fn sign_along(s: &Sequent, side: Side, path: &[Step]) -> Result<Sign> {
    let mut f = side_formula(s, side).ok_or_else(|| Error::InvalidPart(format!("{side:?} side is empty")))?;
    let mut sign = Sign::Pos;
    for step in path {
        let (_, sg, g) = descend(f, side, sign)
            .into_iter()
            .find(|(st, _, _)| st == step)
            .ok_or_else(|| Error::InvalidPart(format!("no `{}` descent here", step.name())))?;
        f = g;
        sign = sg;
    }
    Ok(sign)
}

/// The part at `path` on `side`, with its sign computed.
pub fn locate(s: &Sequent, side: Side, path: &[Step]) -> Result<PartRef> {
    Ok(PartRef { side, path: path.to_vec(), sign: sign_along(s, side, path)? })
}

/// The subformula addressed by `r`, checking path validity and sign.
pub fn part_at<'a>(s: &'a Sequent, r: &PartRef) -> Result<&'a Formula> {
    let mut f = side_formula(s, r.side).ok_or_else(|| Error::InvalidPart(r.to_string()))?;
    let mut sign = Sign::Pos;
    for step in &r.path {
        let (_, sg, g) = descend(f, r.side, sign)
            .into_iter()
            .find(|(st, _, _)| st == step)
            .ok_or_else(|| Error::InvalidPart(r.to_string()))?;
        f = g;
        sign = sg;
    }
    if sign != r.sign {
        return Err(Error::InvalidPart(format!("{r} has the wrong sign")));
    }
    Ok(f)
}

fn child_mut(f: &mut Formula, step: Step) -> Option<&mut Formula> {
    use Formula::*;
    match (f, step) {
        (Neg(a), Step::Not) => Some(a),
        (And(a, _), Step::AndL) | (Or(a, _), Step::OrL) | (Imp(a, _), Step::ImpL) => Some(a),
        (And(_, b), Step::AndR) | (Or(_, b), Step::OrR) | (Imp(_, b), Step::ImpR) => Some(b),
        _ => None,
    }
}

fn child(f: &Formula, step: Step) -> Option<&Formula> {
    use Formula::*;
    match (f, step) {
        (Neg(a), Step::Not) => Some(a),
        (And(a, _), Step::AndL) | (Or(a, _), Step::OrL) | (Imp(a, _), Step::ImpL) => Some(a),
        (And(_, b), Step::AndR) | (Or(_, b), Step::OrR) | (Imp(_, b), Step::ImpR) => Some(b),
        _ => None,
    }
}

/// Replace the addressed subformula in place.
pub fn replace(s: &Sequent, r: &PartRef, b: Formula) -> Result<Sequent> {
    part_at(s, r)?;
    let mut out = s.clone();
    let mut f = side_formula_mut(&mut out, r.side).as_mut().expect("validated");
    for step in &r.path {
        f = child_mut(f, *step).expect("validated");
    }
    *f = b;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conn {
    And,
    Or,
}

/// Conjoin or disjoin a formula onto a possibly empty context.
pub fn attach(ctx: Option<Formula>, conn: Conn, b: Formula) -> Formula {
    match (ctx, conn) {
        (None, _) => b,
        (Some(c), Conn::And) => Formula::and(c, b),
        (Some(c), Conn::Or) => Formula::or(c, b),
    }
}

/// Combine two possibly empty contexts.
pub fn attach2(a: Option<Formula>, conn: Conn, b: Option<Formula>) -> Option<Formula> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => Some(attach(Some(a), conn, b)),
    }
}

/// Where the parts of an old side formula ended up after an edit.
///
/// Entries are (old prefix, new prefix); the longest matching old prefix
/// wins and `None` means the part no longer exists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathMap {
    entries: Vec<(Path, Option<Path>)>,
}

impl PathMap {
    pub fn identity() -> PathMap {
        PathMap { entries: vec![(Vec::new(), Some(Vec::new()))] }
    }

    pub fn dropped() -> PathMap {
        PathMap { entries: Vec::new() }
    }

    pub fn under(prefix: Path) -> PathMap {
        PathMap { entries: vec![(Vec::new(), Some(prefix))] }
    }

    /// Identity except that the subtree at `at` vanishes.
    pub fn except(at: Path) -> PathMap {
        PathMap { entries: vec![(Vec::new(), Some(Vec::new())), (at, None)] }
    }

    pub fn apply(&self, p: &[Step]) -> Option<Path> {
        let (old, new) = self.entries.iter().filter(|(old, _)| p.starts_with(old)).max_by_key(|(old, _)| old.len())?;
        let new = new.as_ref()?;
        let mut out = new.clone();
        out.extend_from_slice(&p[old.len()..]);
        Some(out)
    }

    /// Prepend `pre` to every surviving destination.
    pub fn prefixed(mut self, pre: &[Step]) -> PathMap {
        for (_, new) in &mut self.entries {
            if let Some(n) = new {
                let mut v = pre.to_vec();
                v.extend_from_slice(n);
                *n = v;
            }
        }
        self
    }
}

/// Path maps for both sides of a sequent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqMap {
    pub ant: PathMap,
    pub suc: PathMap,
}

impl SeqMap {
    pub fn identity() -> SeqMap {
        SeqMap { ant: PathMap::identity(), suc: PathMap::identity() }
    }

    pub fn side(&self, side: Side) -> &PathMap {
        match side {
            Side::Ant => &self.ant,
            Side::Suc => &self.suc,
        }
    }

    pub fn side_mut(&mut self, side: Side) -> &mut PathMap {
        match side {
            Side::Ant => &mut self.ant,
            Side::Suc => &mut self.suc,
        }
    }

    /// The new location of a part; signs are preserved by every edit.
    pub fn apply(&self, r: &PartRef) -> Option<PartRef> {
        self.side(r.side).apply(&r.path).map(|path| PartRef { side: r.side, path, sign: r.sign })
    }
}

fn delete_in(f: &Formula, side: Side, path: &[Step], signs: &[Sign]) -> (Option<Formula>, PathMap) {
    let Some((&last, parent_path)) = path.split_last() else {
        return (None, PathMap::dropped());
    };
    let parent = parent_path.iter().try_fold(f, |g, st| child(g, *st)).expect("validated path");
    let parent_sign = signs[parent_path.len()];
    let (ctx, map) = delete_in(f, side, parent_path, signs);
    if last == Step::Not {
        return (ctx, map);
    }
    let sib_step = match last {
        Step::AndL => Step::AndR,
        Step::AndR => Step::AndL,
        Step::OrL => Step::OrR,
        Step::OrR => Step::OrL,
        Step::ImpL => Step::ImpR,
        Step::ImpR => Step::ImpL,
        Step::Not => unreachable!(),
    };
    let sib = child(parent, sib_step).expect("binary node").clone();
    // Whether the retained sibling must be negated, and how it is attached.
    let (negate, conn) = match (parent, side, parent_sign, last) {
        (Formula::And(..), Side::Ant, Sign::Pos, _) => (false, Conn::And),
        (Formula::Or(..), Side::Ant, Sign::Neg, _) => (true, Conn::And),
        (Formula::Imp(..), Side::Ant, Sign::Neg, Step::ImpL) => (true, Conn::And),
        (Formula::Imp(..), Side::Ant, Sign::Neg, Step::ImpR) => (false, Conn::And),
        (Formula::Or(..), Side::Suc, Sign::Pos, _) => (false, Conn::Or),
        (Formula::And(..), Side::Suc, Sign::Neg, _) => (true, Conn::Or),
        _ => unreachable!("path validated against the sign rules"),
    };
    let has_ctx = ctx.is_some();
    let mut map = if has_ctx {
        map.prefixed(&[if conn == Conn::And { Step::AndL } else { Step::OrL }])
    } else {
        map
    };
    let mut sib_new = Vec::new();
    if has_ctx {
        sib_new.push(if conn == Conn::And { Step::AndR } else { Step::OrR });
    }
    if negate {
        sib_new.push(Step::Not);
    }
    let mut sib_old = parent_path.to_vec();
    sib_old.push(sib_step);
    map.entries.push((sib_old, Some(sib_new)));
    let x = if negate { Formula::neg(sib) } else { sib };
    (Some(attach(ctx, conn, x)), map)
}

/// Delete a part, returning the new sequent and where the other parts of
/// that side went. The other side is untouched.
pub fn delete_tracked(s: &Sequent, r: &PartRef) -> Result<(Sequent, PathMap)> {
    part_at(s, r)?;
    let f = side_formula(s, r.side).expect("validated");
    let mut signs = vec![Sign::Pos];
    let mut g = f;
    let mut sign = Sign::Pos;
    for step in &r.path {
        let (_, sg, h) = descend(g, r.side, sign).into_iter().find(|(st, _, _)| st == step).expect("validated");
        g = h;
        sign = sg;
        signs.push(sign);
    }
    let (res, map) = delete_in(f, r.side, &r.path, &signs);
    let mut out = s.clone();
    *side_formula_mut(&mut out, r.side) = res;
    Ok((out, map))
}

pub fn delete(s: &Sequent, r: &PartRef) -> Result<Sequent> {
    delete_tracked(s, r).map(|(s, _)| s)
}

/// Delete several pairwise disjoint parts, in order.
pub fn delete_many(s: &Sequent, rs: &[PartRef]) -> Result<(Sequent, SeqMap)> {
    check_disjoint(rs)?;
    let mut cur = s.clone();
    let mut total = SeqMap::identity();
    let mut pending: Vec<PartRef> = rs.to_vec();
    while let Some(r) = pending.first().cloned() {
        let (next, map) = delete_tracked(&cur, &r)?;
        pending.remove(0);
        pending = pending.into_iter().map(|p| if p.side == r.side { p_apply(&map, &p) } else { Some(p) }).collect::<Option<Vec<_>>>().ok_or_else(|| Error::InvalidPart(r.to_string()))?;
        compose(total.side_mut(r.side), &map);
        cur = next;
    }
    Ok((cur, total))
}

fn p_apply(map: &PathMap, p: &PartRef) -> Option<PartRef> {
    map.apply(&p.path).map(|path| PartRef { side: p.side, path, sign: p.sign })
}

/// `first` followed by `then`, stored back into `first`.
pub fn compose(first: &mut PathMap, then: &PathMap) {
    let entries = std::mem::take(&mut first.entries);
    let mut out = Vec::new();
    for (old, new) in entries {
        match new {
            None => out.push((old, None)),
            Some(mid) => {
                // Everything below `mid` is redirected by `then`; collect the
                // entries of `then` that start inside or above `mid`.
                match then.apply(&mid) {
                    Some(n) => out.push((old.clone(), Some(n))),
                    None => out.push((old.clone(), None)),
                }
                for (t_old, t_new) in &then.entries {
                    if t_old.len() > mid.len() && t_old.starts_with(&mid) {
                        let mut o = old.clone();
                        o.extend_from_slice(&t_old[mid.len()..]);
                        out.push((o, t_new.clone()));
                    }
                }
            }
        }
    }
    first.entries = out;
}

pub fn check_disjoint(rs: &[PartRef]) -> Result<()> {
    for (i, a) in rs.iter().enumerate() {
        for b in &rs[i + 1..] {
            if !a.disjoint(b) {
                return Err(Error::OverlappingParts(a.to_string(), b.to_string()));
            }
        }
    }
    Ok(())
}
