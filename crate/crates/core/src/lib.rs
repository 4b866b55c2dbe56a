//! Strategic argumentation: frameworks, aims, reveal games, and auditing.
//!
//! The crate models debates as *split frameworks*: a Dung-style attack graph
//! whose arguments are divided into a common pool (on the table from the
//! start) and two private pools, one per player. The proponent tries to make
//! an aim — a claim about the status of a focal argument under grounded or
//! stable semantics — hold over the revealed part of the graph; the opponent
//! tries to make it fail. Players alternate revealing nonempty sets of their
//! own arguments, each reveal has to make the mover's aim hold, and whoever
//! cannot move loses.
//!
//! Module map:
//!
//! * [`af`] — argumentation frameworks and their semantics (grounded
//!   labelings, stable extensions, well-foundedness).
//! * [`aims`] — the seven aims and their evaluation over a revealed set.
//! * [`game`] — split frameworks, moves, traces, legality and minimality.
//! * [`search`] — exact game values, canonical winning sequences and
//!   strategies, move dominance.
//! * [`agents`] — honest players with limited knowledge, plus colluding and
//!   eavesdropping ones with full knowledge.
//! * [`audit`] — after-the-fact trace verification against a compliance
//!   standard, with self-injury advisories.
//! * [`corpus` adjacents][`fixtures`] — the worked examples used throughout
//!   the tests, and [`generator`] for seeded random instances.
//!
//! The crate is `no_std` (it allocates, so `alloc` is required); file
//! formats and the command-line front end live in the companion crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod af;
pub mod agents;
pub mod aims;
pub mod audit;
pub mod fixtures;
pub mod game;
pub mod generator;
pub mod search;
pub mod set;

pub use af::{
    AfError, ArgumentId, ArgumentationFramework, Labeling, MaskLabeling, DEFAULT_ENUM_BOUND,
    MAX_ARGUMENTS,
};
pub use agents::{
    collusion_script, espionage_strategy, honest_move, play_match, MovePolicy, PlayerView,
};
pub use aims::{
    aim_counts, aim_holds_in, verify_aim, verify_aim_with, Aim, AimCounts, ParseEnumError,
    Semantics, Side, VacuousMode,
};
pub use audit::{
    audit_trace, audit_trace_with, self_injury_report, AuditReport, EndCheck, Minimality,
    MoveAudit, SelfInjury, SelfInjuryMode, StructuralViolation, Verdict,
};
pub use game::{GameError, GameState, GameTrace, Move, SplitFramework, Standard};
pub use generator::{random_split, GenError, GeneratorParams};
pub use search::{
    dominates, game_value, winning_sequence, winning_strategy, Adversary, SearchError, Solver,
    Strategy, DEFAULT_SEARCH_BOUND,
};
pub use set::ArgSet;
