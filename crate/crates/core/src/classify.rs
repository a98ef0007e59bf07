//! Symbolic FIG / IG / ¬IG status of wreath products from facts about the
//! factors.
//!
//! The engine performs no group computation: descriptors are facts asserted
//! by the caller. Finite groups are FIG and finitely generated, which is
//! what [`GroupDescriptor::finite`] encodes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::action::ActionDescriptor;
use crate::error::{Error, Result};

/// `Ig` means invariably generated but *not* by any finite set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IgStatus {
    #[serde(rename = "FIG")]
    Fig,
    #[serde(rename = "IG")]
    Ig,
    #[serde(rename = "NEG_IG")]
    NegIg,
}

impl IgStatus {
    pub const ALL: [IgStatus; 3] = [IgStatus::Fig, IgStatus::Ig, IgStatus::NegIg];

    /// FIG or IG.
    pub fn is_invariably_generated(self) -> bool {
        self != IgStatus::NegIg
    }
}

impl fmt::Display for IgStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IgStatus::Fig => "FIG",
            IgStatus::Ig => "IG",
            IgStatus::NegIg => "NEG_IG",
        })
    }
}

impl FromStr for IgStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "FIG" => Ok(IgStatus::Fig),
            "IG" => Ok(IgStatus::Ig),
            "NEG_IG" | "¬IG" => Ok(IgStatus::NegIg),
            other => Err(Error::Precondition(format!("unknown status {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDescriptor {
    status: IgStatus,
    finitely_generated: bool,
}

impl GroupDescriptor {
    /// Rejects FIG without finite generation.
    pub fn new(status: IgStatus, finitely_generated: bool) -> Result<Self> {
        if status == IgStatus::Fig && !finitely_generated {
            return Err(Error::Precondition(
                "a FIG group is finitely generated".into(),
            ));
        }
        Ok(GroupDescriptor {
            status,
            finitely_generated,
        })
    }

    pub fn finite() -> Self {
        GroupDescriptor {
            status: IgStatus::Fig,
            finitely_generated: true,
        }
    }

    /// The infinite cyclic group.
    pub fn integers() -> Self {
        Self::finite()
    }

    pub fn status(&self) -> IgStatus {
        self.status
    }

    pub fn finitely_generated(&self) -> bool {
        self.finitely_generated
    }

    /// Every valid descriptor.
    pub fn all() -> Vec<GroupDescriptor> {
        IgStatus::ALL
            .iter()
            .flat_map(|&s| [true, false].map(move |fg| GroupDescriptor::new(s, fg)))
            .filter_map(Result::ok)
            .collect()
    }
}

impl ActionDescriptor {
    /// `ℤ` translating `ℤ`.
    pub fn int_translation() -> Self {
        ActionDescriptor {
            torsion_type: false,
            finitely_many_orbits: true,
        }
    }

    pub fn finite() -> Self {
        ActionDescriptor {
            torsion_type: true,
            finitely_many_orbits: true,
        }
    }

    pub fn all() -> [ActionDescriptor; 4] {
        [(true, true), (true, false), (false, true), (false, false)].map(|(t, o)| {
            ActionDescriptor {
                torsion_type: t,
                finitely_many_orbits: o,
            }
        })
    }
}

/// `G ≀_X H` is finitely generated iff `G` and `H` are and `H` has finitely
/// many orbits on `X`.
pub fn wreath_fg(g: &GroupDescriptor, h: &GroupDescriptor, a: &ActionDescriptor) -> bool {
    g.finitely_generated && h.finitely_generated && a.finitely_many_orbits
}

/// The rule that decided a wreath product's status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    HeadNotInvariablyGenerated,
    NonTorsionFigHeadFinitelyGenerated,
    NonTorsionFigHeadNotFinitelyGenerated,
    NonTorsionIgHead,
    TorsionBaseNotInvariablyGenerated,
    TorsionBothFigFinitelyGenerated,
    TorsionBothFigNotFinitelyGenerated,
    TorsionSomeFactorIg,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::HeadNotInvariablyGenerated => "head is NEG_IG, which forces NEG_IG",
            Rule::NonTorsionFigHeadFinitelyGenerated => {
                "action not of torsion type, head FIG, product finitely generated: FIG"
            }
            Rule::NonTorsionFigHeadNotFinitelyGenerated => {
                "action not of torsion type, head FIG, product not finitely generated: IG"
            }
            Rule::NonTorsionIgHead => "action not of torsion type, head IG: IG",
            Rule::TorsionBaseNotInvariablyGenerated => {
                "action of torsion type, base NEG_IG: NEG_IG"
            }
            Rule::TorsionBothFigFinitelyGenerated => {
                "base and head FIG, product finitely generated: FIG"
            }
            Rule::TorsionBothFigNotFinitelyGenerated => {
                "base and head FIG, product not finitely generated: IG"
            }
            Rule::TorsionSomeFactorIg => "action of torsion type, base or head IG: IG",
        })
    }
}

/// Status of `G ≀_X H` together with the rule that produced it.
///
/// Rules apply in order: a ¬IG head wins; otherwise non-torsion-type
/// actions depend only on the head and finite generation; otherwise a ¬IG
/// base wins, and FIG needs both factors FIG plus finite generation.
pub fn wreath_status_with_rule(
    g: &GroupDescriptor,
    h: &GroupDescriptor,
    a: &ActionDescriptor,
) -> (IgStatus, Rule) {
    use IgStatus::*;
    let fg = wreath_fg(g, h, a);
    if h.status == NegIg {
        return (NegIg, Rule::HeadNotInvariablyGenerated);
    }
    if !a.torsion_type {
        return match (h.status, fg) {
            (Fig, true) => (Fig, Rule::NonTorsionFigHeadFinitelyGenerated),
            (Fig, false) => (Ig, Rule::NonTorsionFigHeadNotFinitelyGenerated),
            _ => (Ig, Rule::NonTorsionIgHead),
        };
    }
    match (g.status, h.status, fg) {
        (NegIg, _, _) => (NegIg, Rule::TorsionBaseNotInvariablyGenerated),
        (Fig, Fig, true) => (Fig, Rule::TorsionBothFigFinitelyGenerated),
        (Fig, Fig, false) => (Ig, Rule::TorsionBothFigNotFinitelyGenerated),
        _ => (Ig, Rule::TorsionSomeFactorIg),
    }
}

pub fn wreath_status(g: &GroupDescriptor, h: &GroupDescriptor, a: &ActionDescriptor) -> IgStatus {
    wreath_status_with_rule(g, h, a).0
}

/// One level of an iterated wreath product. The innermost level has no action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainLevel {
    pub group: GroupDescriptor,
    pub action: Option<ActionDescriptor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    /// 1-based level index; level 1 is the innermost base.
    pub level: usize,
    pub status: IgStatus,
    pub finitely_generated: bool,
    pub rule: Option<Rule>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Derivation {
    pub status: IgStatus,
    pub finitely_generated: bool,
    pub trace: Vec<TraceStep>,
}

fn check_chain(chain: &[ChainLevel]) -> Result<()> {
    let Some(first) = chain.first() else {
        return Err(Error::MalformedChain("empty chain".into()));
    };
    if first.action.is_some() {
        return Err(Error::MalformedChain(
            "the innermost level cannot carry an action".into(),
        ));
    }
    if let Some(i) = chain[1..].iter().position(|l| l.action.is_none()) {
        return Err(Error::MalformedChain(format!(
            "level {} has no action",
            i + 2
        )));
    }
    Ok(())
}

/// Folds [`wreath_status`] from the innermost level outwards.
pub fn iterated_status(chain: &[ChainLevel]) -> Result<Derivation> {
    check_chain(chain)?;
    let mut current = chain[0].group;
    let mut trace = vec![TraceStep {
        level: 1,
        status: current.status,
        finitely_generated: current.finitely_generated,
        rule: None,
    }];
    for (i, level) in chain.iter().enumerate().skip(1) {
        let action = level.action.expect("checked");
        let (status, rule) = wreath_status_with_rule(&current, &level.group, &action);
        current = GroupDescriptor {
            status,
            finitely_generated: wreath_fg(&current, &level.group, &action),
        };
        trace.push(TraceStep {
            level: i + 1,
            status,
            finitely_generated: current.finitely_generated,
            rule: Some(rule),
        });
    }
    Ok(Derivation {
        status: current.status,
        finitely_generated: current.finitely_generated,
        trace,
    })
}

/// Closed-form status of an iterated wreath product.
///
/// Let `k` be the outermost level whose action is not of torsion type
/// (`k = 1` if there is none). The product is FIG iff it is finitely
/// generated and levels `k..n` are all FIG; otherwise IG iff levels `k..n`
/// are all FIG or IG; otherwise ¬IG.
pub fn iterated_status_direct(chain: &[ChainLevel]) -> Result<IgStatus> {
    check_chain(chain)?;
    let k = chain
        .iter()
        .rposition(|l| l.action.is_some_and(|a| !a.torsion_type))
        .unwrap_or(0);
    let tail = &chain[k..];
    let finitely_generated = chain.iter().all(|l| {
        l.group.finitely_generated && l.action.is_none_or(|a| a.finitely_many_orbits)
    });
    if finitely_generated && tail.iter().all(|l| l.group.status == IgStatus::Fig) {
        Ok(IgStatus::Fig)
    } else if tail.iter().all(|l| l.group.status.is_invariably_generated()) {
        Ok(IgStatus::Ig)
    } else {
        Ok(IgStatus::NegIg)
    }
}
