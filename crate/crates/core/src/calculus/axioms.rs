use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use super::oracle::{decide_axiom8, OracleConfig, Verdict8};
use super::rules::System;
use crate::error::{Error, Result};
use crate::polarity::{leaves, PartRef, Side, Sign};
use crate::syntax::{equivalent, Formula, Sequent, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomKind {
    Ax1,
    Ax2,
    Ax3,
    Ax4,
    Ax5,
    Ax6,
    Ax7,
    Ax8,
}

impl AxiomKind {
    pub const ALL: [AxiomKind; 8] = [
        AxiomKind::Ax1,
        AxiomKind::Ax2,
        AxiomKind::Ax3,
        AxiomKind::Ax4,
        AxiomKind::Ax5,
        AxiomKind::Ax6,
        AxiomKind::Ax7,
        AxiomKind::Ax8,
    ];

    pub fn admitted(self, system: System) -> bool {
        system != System::Pcn || matches!(self, AxiomKind::Ax1 | AxiomKind::Ax2 | AxiomKind::Ax5 | AxiomKind::Ax8)
    }

    /// The axiom playing the same role once succedent parts are read as
    /// antecedent parts of opposite sign.
    pub fn mirror(self) -> AxiomKind {
        use AxiomKind::*;
        match self {
            Ax3 => Ax1,
            Ax1 => Ax3,
            Ax4 => Ax2,
            Ax2 => Ax4,
            other => other,
        }
    }
}

impl fmt::Display for AxiomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ax{}", *self as u8 + 1)
    }
}

impl FromStr for AxiomKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<AxiomKind> {
        AxiomKind::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Format(format!("unknown axiom `{s}`")))
    }
}

/// A successful axiom match with its witnessing parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomMatch {
    pub kind: AxiomKind,
    pub parts: Vec<PartRef>,
    pub certificate: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomOutcome {
    Match(AxiomMatch),
    NoMatch,
    /// Only axiom 8 could apply and the oracle could not decide it.
    Unknown(String),
}

/// Signature, oracle settings and the axiom-8 cache shared by all checks.
pub struct Kernel {
    pub sig: Signature,
    pub oracle: OracleConfig,
    /// Treat an undecided axiom 8 as no match.
    pub strict: bool,
    cache: Mutex<HashMap<(Sequent, System), Verdict8>>,
}

impl Default for Kernel {
    fn default() -> Self {
        Kernel::new(Signature::default())
    }
}

impl fmt::Debug for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Kernel").field("sig", &self.sig).field("oracle", &self.oracle).field("strict", &self.strict).finish()
    }
}

impl Kernel {
    pub fn new(sig: Signature) -> Kernel {
        Kernel { sig, oracle: OracleConfig::default(), strict: true, cache: Mutex::new(HashMap::new()) }
    }

    pub fn permissive(mut self) -> Kernel {
        self.strict = false;
        self
    }

    pub fn axiom8(&self, s: &Sequent, system: System) -> Verdict8 {
        // PCN admits a subset of the witnesses SN does, so the verdicts differ.
        let key = (s.clone(), if system == System::Pcn { System::Pcn } else { System::Sn });
        if let Some(v) = self.cache.lock().expect("cache poisoned").get(&key) {
            return v.clone();
        }
        let v = decide_axiom8(s, system, &self.sig, &self.oracle);
        self.cache.lock().expect("cache poisoned").insert(key, v.clone());
        v
    }

    /// First axiom matching `s` in the fixed order Ax1..Ax8.
    pub fn match_axiom(&self, s: &Sequent, system: System) -> AxiomOutcome {
        if system == System::Pcn && s.suc.is_some() {
            return AxiomOutcome::NoMatch;
        }
        for kind in AxiomKind::ALL {
            if !kind.admitted(system) || kind == AxiomKind::Ax8 {
                continue;
            }
            if let Some(parts) = self.witness(s, kind) {
                return AxiomOutcome::Match(AxiomMatch { kind, parts, certificate: None });
            }
        }
        if s.free_vars().is_empty() {
            return AxiomOutcome::NoMatch;
        }
        match self.axiom8(s, system) {
            Verdict8::Certified(c) => {
                AxiomOutcome::Match(AxiomMatch { kind: AxiomKind::Ax8, parts: Vec::new(), certificate: Some(c) })
            }
            Verdict8::Refuted(_) => AxiomOutcome::NoMatch,
            Verdict8::Unknown(why) => AxiomOutcome::Unknown(why),
        }
    }

    /// Axiom closing `s`, counting an undecided axiom 8 only when permissive.
    pub fn close(&self, s: &Sequent, system: System) -> Option<AxiomKind> {
        match self.match_axiom(s, system) {
            AxiomOutcome::Match(m) => Some(m.kind),
            AxiomOutcome::Unknown(_) if !self.strict => Some(AxiomKind::Ax8),
            _ => None,
        }
    }

    /// Witnessing parts for one of the first seven axioms.
    pub fn witness(&self, s: &Sequent, kind: AxiomKind) -> Option<Vec<PartRef>> {
        let primes: Vec<(PartRef, &Formula)> = leaves(s).into_iter().filter(|(_, f)| f.is_prime()).collect();
        let single = |side: Side, sign: Sign, want: bool| {
            primes
                .iter()
                .find(|(r, f)| r.side == side && r.sign == sign && self.sig.truth(f) == Some(want))
                .map(|(r, _)| vec![r.clone()])
        };
        let pair = |a: (Side, Sign), b: (Side, Sign)| {
            for (r1, f1) in primes.iter().filter(|(r, _)| (r.side, r.sign) == a) {
                for (r2, f2) in primes.iter().filter(|(r, _)| (r.side, r.sign) == b) {
                    if equivalent(f1, f2, &self.sig) {
                        return Some(vec![r1.clone(), r2.clone()]);
                    }
                }
            }
            None
        };
        use AxiomKind::*;
        match kind {
            Ax1 => single(Side::Ant, Sign::Neg, true),
            Ax2 => single(Side::Ant, Sign::Pos, false),
            Ax3 => single(Side::Suc, Sign::Pos, true),
            Ax4 => single(Side::Suc, Sign::Neg, false),
            Ax5 => pair((Side::Ant, Sign::Pos), (Side::Ant, Sign::Neg)),
            Ax6 => pair((Side::Ant, Sign::Pos), (Side::Suc, Sign::Pos)),
            Ax7 => pair((Side::Ant, Sign::Neg), (Side::Suc, Sign::Neg)),
            Ax8 => None,
        }
    }

    /// Does `s` satisfy axiom `kind` in `system`? `Err` carries the reason.
    /// An undecided axiom 8 passes with a warning unless the kernel is strict.
    pub fn check_axiom(&self, s: &Sequent, kind: AxiomKind, system: System) -> std::result::Result<Option<String>, String> {
        if !kind.admitted(system) {
            return Err(format!("{kind} is not an axiom of {system}"));
        }
        if system == System::Pcn && s.suc.is_some() {
            return Err("PCN sequents have an empty succedent".into());
        }
        if kind != AxiomKind::Ax8 {
            return match self.witness(s, kind) {
                Some(_) => Ok(None),
                None => Err(format!("`{s}` is not an instance of {kind}")),
            };
        }
        if s.free_vars().is_empty() {
            return Err("axiom 8 needs free variables".into());
        }
        match self.axiom8(s, system) {
            Verdict8::Certified(_) => Ok(None),
            Verdict8::Refuted(cex) => Err(format!(
                "axiom 8 fails at {}",
                cex.iter().map(|(v, n)| format!("{v}={n}")).collect::<Vec<_>>().join(", ")
            )),
            Verdict8::Unknown(why) if self.strict => Err(format!("axiom 8 undecided: {why}")),
            Verdict8::Unknown(why) => Ok(Some(format!("`{s}`: axiom 8 accepted without certificate ({why})"))),
        }
    }
}
