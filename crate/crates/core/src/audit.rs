//! Post-hoc compliance checking of recorded traces.
//!
//! The auditor replays a trace tolerantly — every move's arguments join the
//! revealed set whether or not the move was legal — and grades each move
//! (structure, effectiveness, minimality where the standard demands it) plus
//! the ending (the claimed winner moved last and the loser was genuinely
//! stuck). A trace that stops while the loser still had an effective move is
//! the "premature surrender" violation. Self-inflicted-injury advisories are
//! attached for information only; they never change the verdict.

use alloc::vec::Vec;

use crate::af::{ArgumentId, DEFAULT_ENUM_BOUND};
use crate::aims::Side;
use crate::game::{GameTrace, SplitFramework, Standard};
use crate::set::ArgSet;

/// Ways a recorded move can break the rules of the game regardless of
/// effectiveness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructuralViolation {
    WrongTurn { expected: Side },
    NotOwned { id: ArgumentId },
    AlreadyRevealed { id: ArgumentId },
}

/// The minimality grade of one move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Minimality {
    /// The standard does not hold this mover to minimality.
    NotRequired,
    Minimal,
    /// Not minimal; `witness` is the canonically least effective proper
    /// subset.
    NonMinimal {
        witness: ArgSet,
    },
    /// Not graded: the move was ineffective (minimality is moot) or too
    /// large to enumerate.
    NotAssessed,
}

/// Everything the auditor established about one recorded move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveAudit {
    /// 1-based position in the trace.
    pub index: usize,
    pub player: Side,
    pub args: ArgSet,
    pub structural: Vec<StructuralViolation>,
    pub effective: bool,
    pub minimality: Minimality,
    /// Informational only: this move's size versus the smallest effective
    /// move available to the mover at that point (minimum cardinality is
    /// not a standard, so the gap is reported, never judged).
    pub move_size: usize,
    pub min_effective_size: Option<usize>,
}

impl MoveAudit {
    pub fn passes(&self, standard: Standard) -> bool {
        self.structural.is_empty()
            && self.effective
            && (!standard.requires(self.player) || self.minimality == Minimality::Minimal)
    }
}

/// The two ending conditions: the claimed winner made the final move, and
/// the loser then (or, for an empty trace, immediately) had no effective
/// move. A false `loser_had_no_move` is the premature-surrender violation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EndCheck {
    pub claimed_winner: Side,
    pub winner_moved_last: bool,
    pub loser_had_no_move: bool,
}

impl EndCheck {
    pub fn passes(&self) -> bool {
        self.winner_moved_last && self.loser_had_no_move
    }
}

/// A move whose arguments attack the mover's own arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfInjury {
    pub index: usize,
    /// `(attacker, target)` pairs, attacker drawn from the move.
    pub pairs: Vec<(ArgumentId, ArgumentId)>,
}

/// Which of the mover's arguments count as injurable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SelfInjuryMode {
    /// The mover's whole private pool, played or not. Hurting an argument
    /// still in hand is the classic pattern.
    #[default]
    FullPool,
    /// Only own arguments already on the table once the move lands.
    RevealedOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Compliant,
    Violation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub standard: Standard,
    pub moves: Vec<MoveAudit>,
    pub end: EndCheck,
    /// Informational; never affects the verdict.
    pub advisories: Vec<SelfInjury>,
    pub verdict: Verdict,
}

impl AuditReport {
    pub fn is_compliant(&self) -> bool {
        self.verdict == Verdict::Compliant
    }
}

/// Audit `trace` against `standard`, with self-injury advisories judged
/// against the mover's full pool.
pub fn audit_trace(split: &SplitFramework, trace: &GameTrace, standard: Standard) -> AuditReport {
    audit_trace_with(split, trace, standard, SelfInjuryMode::default())
}

pub fn audit_trace_with(
    split: &SplitFramework,
    trace: &GameTrace,
    standard: Standard,
    mode: SelfInjuryMode,
) -> AuditReport {
    let mut revealed = split.common();
    let mut moves: Vec<MoveAudit> = Vec::with_capacity(trace.moves.len());
    let mut advisories: Vec<SelfInjury> = Vec::new();
    let mut expected = Side::Proponent;

    for (k, m) in trace.moves.iter().enumerate() {
        let index = k + 1;
        let player = m.player();
        let args = m.args();

        let mut structural = Vec::new();
        if player != expected {
            structural.push(StructuralViolation::WrongTurn { expected });
        }
        let own = split.pool(player);
        if let Some(i) = args.minus(own).iter().next() {
            structural.push(StructuralViolation::NotOwned {
                id: split.af().id(i).clone(),
            });
        }
        if let Some(i) = args.intersect(revealed).iter().next() {
            structural.push(StructuralViolation::AlreadyRevealed {
                id: split.af().id(i).clone(),
            });
        }

        let effective = split.aim_holds_on(revealed.union(args), player);
        let minimality = if !effective || args.len() > DEFAULT_ENUM_BOUND {
            Minimality::NotAssessed
        } else if !standard.requires(player) {
            Minimality::NotRequired
        } else {
            match least_effective_proper_subset(split, revealed, args, player) {
                Some(witness) => Minimality::NonMinimal { witness },
                None => Minimality::Minimal,
            }
        };
        let min_effective_size = smallest_effective_size(split, revealed, player);

        if let Some(pairs) = self_injury_pairs(split, revealed, args, player, mode) {
            advisories.push(SelfInjury { index, pairs });
        }

        moves.push(MoveAudit {
            index,
            player,
            args,
            structural,
            effective,
            minimality,
            move_size: args.len(),
            min_effective_size,
        });

        revealed = revealed.union(args);
        expected = expected.other();
    }

    let claimed = trace.winner;
    let winner_moved_last = match trace.moves.last() {
        Some(last) => last.player() == claimed,
        // No moves at all: only a loss by the proponent, stuck before her
        // first move, can be claimed.
        None => claimed == Side::Opponent,
    };
    let loser = claimed.other();
    let loser_had_no_move = !has_effective(split, revealed, loser);
    let end = EndCheck {
        claimed_winner: claimed,
        winner_moved_last,
        loser_had_no_move,
    };

    let compliant = moves.iter().all(|ma| ma.passes(standard)) && end.passes();
    AuditReport {
        standard,
        moves,
        end,
        advisories,
        verdict: if compliant {
            Verdict::Compliant
        } else {
            Verdict::Violation
        },
    }
}

/// Just the self-injury advisories for a trace (full-pool scope).
pub fn self_injury_report(split: &SplitFramework, trace: &GameTrace) -> Vec<SelfInjury> {
    self_injury_report_with(split, trace, SelfInjuryMode::default())
}

pub fn self_injury_report_with(
    split: &SplitFramework,
    trace: &GameTrace,
    mode: SelfInjuryMode,
) -> Vec<SelfInjury> {
    let mut revealed = split.common();
    let mut out = Vec::new();
    for (k, m) in trace.moves.iter().enumerate() {
        if let Some(pairs) = self_injury_pairs(split, revealed, m.args(), m.player(), mode) {
            out.push(SelfInjury {
                index: k + 1,
                pairs,
            });
        }
        revealed = revealed.union(m.args());
    }
    out
}

fn self_injury_pairs(
    split: &SplitFramework,
    revealed: ArgSet,
    args: ArgSet,
    player: Side,
    mode: SelfInjuryMode,
) -> Option<Vec<(ArgumentId, ArgumentId)>> {
    let scope = match mode {
        SelfInjuryMode::FullPool => split.pool(player),
        SelfInjuryMode::RevealedOnly => split.pool(player).intersect(revealed.union(args)),
    };
    let mut pairs = Vec::new();
    for a in args.iter() {
        for t in split.af().targets_of(a).intersect(scope).iter() {
            pairs.push((split.af().id(a).clone(), split.af().id(t).clone()));
        }
    }
    if pairs.is_empty() {
        None
    } else {
        pairs.sort();
        Some(pairs)
    }
}

/// The canonically least effective nonempty proper subset, if any.
fn least_effective_proper_subset(
    split: &SplitFramework,
    revealed: ArgSet,
    args: ArgSet,
    player: Side,
) -> Option<ArgSet> {
    let mut effective: Vec<ArgSet> = args
        .subsets()
        .filter(|s| !s.is_empty() && *s != args && split.aim_holds_on(revealed.union(*s), player))
        .collect();
    effective.sort_by(|a, b| a.canonical_cmp(*b));
    effective.first().copied()
}

/// Size of the smallest effective move open to `side`, when enumerable.
fn smallest_effective_size(split: &SplitFramework, revealed: ArgSet, side: Side) -> Option<usize> {
    let pool = split.pool(side).minus(revealed);
    if pool.len() > DEFAULT_ENUM_BOUND {
        return None;
    }
    pool.subsets()
        .filter(|s| !s.is_empty() && split.aim_holds_on(revealed.union(*s), side))
        .map(|s| s.len())
        .min()
}

fn has_effective(split: &SplitFramework, revealed: ArgSet, side: Side) -> bool {
    let pool = split.pool(side).minus(revealed);
    pool.subsets()
        .any(|s| !s.is_empty() && split.aim_holds_on(revealed.union(s), side))
}
