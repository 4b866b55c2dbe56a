//! The split-framework reveal game.
//!
//! A split framework divides one attack graph into a common pool and two
//! private pools. Starting from the common part, the proponent and opponent
//! alternate (proponent first) revealing nonempty sets of their own unplayed
//! arguments. A move is *effective* when, on the framework induced by the
//! revealed arguments afterwards, the mover's aim holds; a player who cannot
//! make an effective move on her turn loses. This module is the state
//! machine: move legality, effectiveness, the minimality standard, and
//! transitions. Solvers live in [`crate::search`], players in
//! [`crate::agents`].

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::af::{AfError, ArgumentId, ArgumentationFramework, DEFAULT_ENUM_BOUND};
use crate::agents::MovePolicy;
use crate::aims::{self, Aim, ParseEnumError, Semantics, Side, VacuousMode};
use crate::set::ArgSet;

/// Which sides a standard of play holds to minimal moves. `Legacy` is
/// effectiveness-only — the implicit standard where any effective move is
/// acceptable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Standard {
    Legacy,
    MinP,
    MinO,
    MinBoth,
}

impl Standard {
    pub const ALL: [Standard; 4] = [
        Standard::Legacy,
        Standard::MinP,
        Standard::MinO,
        Standard::MinBoth,
    ];

    /// Does this standard require `side`'s moves to be minimal?
    pub fn requires(self, side: Side) -> bool {
        match self {
            Standard::Legacy => false,
            Standard::MinP => side == Side::Proponent,
            Standard::MinO => side == Side::Opponent,
            Standard::MinBoth => true,
        }
    }
}

impl fmt::Display for Standard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Standard::Legacy => "legacy",
            Standard::MinP => "min_p",
            Standard::MinO => "min_o",
            Standard::MinBoth => "min_both",
        })
    }
}

impl FromStr for Standard {
    type Err = ParseEnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "legacy" => Ok(Standard::Legacy),
            "min_p" => Ok(Standard::MinP),
            "min_o" => Ok(Standard::MinO),
            "min_both" => Ok(Standard::MinBoth),
            _ => Err(ParseEnumError {
                what: "standard",
                token: s.into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameError {
    Af(AfError),
    /// The same argument appears in two of the three pools.
    OverlappingPools {
        id: ArgumentId,
    },
    /// The focal argument must be common or the proponent's to reveal.
    FocalNotPlayable {
        id: ArgumentId,
    },
    /// A state's revealed set must contain the whole common pool.
    MissingCommon {
        id: ArgumentId,
    },
    WrongTurn {
        expected: Side,
    },
    NotOwned {
        id: ArgumentId,
    },
    AlreadyRevealed {
        id: ArgumentId,
    },
    EmptyMove,
    Ineffective,
    SizeBoundExceeded {
        size: usize,
        bound: usize,
    },
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::Af(e) => e.fmt(f),
            GameError::OverlappingPools { id } => {
                write!(f, "argument `{id}` belongs to more than one pool")
            }
            GameError::FocalNotPlayable { id } => {
                write!(
                    f,
                    "focal argument `{id}` is neither common nor the proponent's"
                )
            }
            GameError::MissingCommon { id } => {
                write!(f, "revealed set is missing common argument `{id}`")
            }
            GameError::WrongTurn { expected } => write!(f, "it is {expected}'s turn to move"),
            GameError::NotOwned { id } => write!(f, "argument `{id}` is not the mover's to play"),
            GameError::AlreadyRevealed { id } => write!(f, "argument `{id}` is already revealed"),
            GameError::EmptyMove => f.write_str("a move must reveal at least one argument"),
            GameError::Ineffective => f.write_str("move is not effective"),
            GameError::SizeBoundExceeded { size, bound } => {
                write!(
                    f,
                    "refusing to enumerate over {size} arguments (bound {bound})"
                )
            }
        }
    }
}

impl core::error::Error for GameError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            GameError::Af(e) => Some(e),
            _ => None,
        }
    }
}

impl From<AfError> for GameError {
    fn from(e: AfError) -> Self {
        GameError::Af(e)
    }
}

/// A split framework: one attack graph, three disjoint pools, a focal
/// argument, and the pair of mutually exclusive aims (the opponent's aim is
/// the negation of the stated one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitFramework {
    af: ArgumentationFramework,
    common: ArgSet,
    p_pool: ArgSet,
    o_pool: ArgSet,
    focal: usize,
    semantics: Semantics,
    aim: Aim,
}

impl SplitFramework {
    pub fn new(
        common: Vec<ArgumentId>,
        proponent: Vec<ArgumentId>,
        opponent: Vec<ArgumentId>,
        attacks: Vec<(ArgumentId, ArgumentId)>,
        focal: ArgumentId,
        semantics: Semantics,
        aim: Aim,
    ) -> Result<Self, GameError> {
        let all: Vec<ArgumentId> = common
            .iter()
            .chain(&proponent)
            .chain(&opponent)
            .cloned()
            .collect();
        let af = ArgumentationFramework::new(all, attacks)?;
        let common = af.set_of(&common)?;
        let p_pool = af.set_of(&proponent)?;
        let o_pool = af.set_of(&opponent)?;
        for (a, b) in [(common, p_pool), (common, o_pool), (p_pool, o_pool)] {
            if let Some(i) = a.intersect(b).iter().next() {
                return Err(GameError::OverlappingPools {
                    id: af.id(i).clone(),
                });
            }
        }
        let focal_index = af.index_of(focal.as_str())?;
        if !common.union(p_pool).contains(focal_index) {
            return Err(GameError::FocalNotPlayable { id: focal });
        }
        Ok(SplitFramework {
            af,
            common,
            p_pool,
            o_pool,
            focal: focal_index,
            semantics,
            aim,
        })
    }

    /// Convenience constructor from string literals; mostly for tests and
    /// fixtures.
    pub fn from_named(
        common: &[&str],
        proponent: &[&str],
        opponent: &[&str],
        attacks: &[(&str, &str)],
        focal: &str,
        semantics: Semantics,
        aim: Aim,
    ) -> Result<Self, GameError> {
        let conv = |names: &[&str]| -> Result<Vec<ArgumentId>, AfError> {
            names.iter().map(|s| ArgumentId::new(s)).collect()
        };
        let pairs = attacks
            .iter()
            .map(|(a, b)| Ok((ArgumentId::new(a)?, ArgumentId::new(b)?)))
            .collect::<Result<Vec<_>, AfError>>()?;
        SplitFramework::new(
            conv(common)?,
            conv(proponent)?,
            conv(opponent)?,
            pairs,
            ArgumentId::new(focal)?,
            semantics,
            aim,
        )
    }

    pub fn af(&self) -> &ArgumentationFramework {
        &self.af
    }

    pub fn common(&self) -> ArgSet {
        self.common
    }

    pub fn proponent_private(&self) -> ArgSet {
        self.p_pool
    }

    pub fn opponent_private(&self) -> ArgSet {
        self.o_pool
    }

    pub fn pool(&self, side: Side) -> ArgSet {
        match side {
            Side::Proponent => self.p_pool,
            Side::Opponent => self.o_pool,
        }
    }

    /// `None` means the argument is common knowledge from the start.
    pub fn owner_of(&self, index: usize) -> Option<Side> {
        if self.p_pool.contains(index) {
            Some(Side::Proponent)
        } else if self.o_pool.contains(index) {
            Some(Side::Opponent)
        } else {
            None
        }
    }

    pub fn focal_index(&self) -> usize {
        self.focal
    }

    pub fn focal(&self) -> &ArgumentId {
        self.af.id(self.focal)
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn aim(&self) -> Aim {
        self.aim
    }

    pub fn with_semantics(mut self, semantics: Semantics) -> Self {
        self.semantics = semantics;
        self
    }

    pub fn with_aim(mut self, aim: Aim) -> Self {
        self.aim = aim;
        self
    }

    /// Does `side`'s aim hold on the framework induced by `revealed`?
    pub fn aim_holds_on(&self, revealed: ArgSet, side: Side) -> bool {
        aims::aim_holds_in(
            &self.af,
            revealed,
            self.semantics,
            self.aim,
            Some(self.focal),
            side,
            VacuousMode::Literal,
        )
    }

    /// True when the proponent's aim already holds on the common part, so
    /// the game is decided before anyone moves. Play proceeds normally from
    /// such a start; this flag merely marks the instance.
    pub fn degenerate_start(&self) -> bool {
        self.aim_holds_on(self.common, Side::Proponent)
    }

    pub fn initial_state(&self) -> GameState<'_> {
        GameState {
            split: self,
            revealed: self.common,
            turn: Side::Proponent,
        }
    }

    /// Build a mid-game state from explicit data, validating the state
    /// invariants (revealed ⊇ common, revealed private arguments drawn from
    /// the pools — the latter is automatic since pools partition the rest).
    pub fn state_at<'a>(
        &self,
        revealed: impl IntoIterator<Item = &'a ArgumentId>,
        turn: Side,
    ) -> Result<GameState<'_>, GameError> {
        let revealed = self.af.set_of(revealed)?;
        if let Some(i) = self.common.minus(revealed).iter().next() {
            return Err(GameError::MissingCommon {
                id: self.af.id(i).clone(),
            });
        }
        Ok(GameState {
            split: self,
            revealed,
            turn,
        })
    }

    /// Build a move from ids. Checks existence and nonemptiness only;
    /// ownership and turn order are judged where the move is used, so that
    /// recorded traces with illegal moves can still be represented and
    /// audited.
    pub fn move_of<'a>(
        &self,
        player: Side,
        ids: impl IntoIterator<Item = &'a ArgumentId>,
    ) -> Result<Move, GameError> {
        let args = self.af.set_of(ids)?;
        if args.is_empty() {
            return Err(GameError::EmptyMove);
        }
        Ok(Move { player, args })
    }

    /// Replay a trace from the initial state, validating every move.
    pub fn replay(&self, trace: &GameTrace) -> Result<GameState<'_>, GameError> {
        let mut state = self.initial_state();
        for m in &trace.moves {
            state = state.apply_move(m)?;
        }
        Ok(state)
    }
}

/// A player's attempt to reveal `args` (a nonempty set of her private,
/// still-hidden arguments). Constructed via [`SplitFramework::move_of`] or by
/// the engine itself.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Move {
    player: Side,
    args: ArgSet,
}

impl Move {
    pub(crate) fn new_unchecked(player: Side, args: ArgSet) -> Move {
        Move { player, args }
    }

    pub fn player(&self) -> Side {
        self.player
    }

    pub fn args(&self) -> ArgSet {
        self.args
    }

    pub fn ids(&self, split: &SplitFramework) -> BTreeSet<ArgumentId> {
        split.af().ids_of(self.args)
    }
}

/// A finished (or recorded) game: the move list in play order and the
/// claimed winner. Pair it with the [`SplitFramework`] it was played on to
/// replay or audit it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameTrace {
    pub moves: Vec<Move>,
    pub winner: Side,
}

/// An immutable position: what has been revealed, and whose turn it is.
#[derive(Clone, Copy)]
pub struct GameState<'a> {
    split: &'a SplitFramework,
    revealed: ArgSet,
    turn: Side,
}

impl<'a> GameState<'a> {
    pub fn split(&self) -> &'a SplitFramework {
        self.split
    }

    pub fn revealed(&self) -> ArgSet {
        self.revealed
    }

    pub fn revealed_ids(&self) -> BTreeSet<ArgumentId> {
        self.split.af().ids_of(self.revealed)
    }

    pub fn turn(&self) -> Side {
        self.turn
    }

    /// `side`'s still-hidden private arguments.
    pub fn hidden_pool(&self, side: Side) -> ArgSet {
        self.split.pool(side).minus(self.revealed)
    }

    /// Ownership and freshness of the move's arguments (not the turn).
    fn validate_args(&self, m: &Move) -> Result<(), GameError> {
        if m.args.is_empty() {
            return Err(GameError::EmptyMove);
        }
        let own = self.split.pool(m.player);
        if let Some(i) = m.args.minus(own).iter().next() {
            return Err(GameError::NotOwned {
                id: self.split.af().id(i).clone(),
            });
        }
        if let Some(i) = m.args.intersect(self.revealed).iter().next() {
            return Err(GameError::AlreadyRevealed {
                id: self.split.af().id(i).clone(),
            });
        }
        Ok(())
    }

    /// Does the mover's aim hold once `m.args` joins the revealed set?
    /// Judged for `m.player` whatever the turn; turn order is enforced by
    /// [`apply_move`](Self::apply_move).
    pub fn is_effective(&self, m: &Move) -> Result<bool, GameError> {
        self.validate_args(m)?;
        Ok(self
            .split
            .aim_holds_on(self.revealed.union(m.args), m.player))
    }

    /// Is `m` effective with no effective proper subset? Minimality
    /// quantifies over nonempty proper subsets: the empty move is no move,
    /// and mid-game it could never be effective anyway (the previous mover
    /// just established the mutually exclusive aim).
    pub fn is_minimal(&self, m: &Move) -> Result<bool, GameError> {
        if !self.is_effective(m)? {
            return Err(GameError::Ineffective);
        }
        for sub in m.args.subsets() {
            if sub.is_empty() || sub == m.args {
                continue;
            }
            if self.split.aim_holds_on(self.revealed.union(sub), m.player) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Does `side`'s aim hold on the currently revealed framework?
    pub fn aim_holds_now(&self, side: Side) -> bool {
        self.split.aim_holds_on(self.revealed, side)
    }

    /// The Desired Outcome question for the turn player: does any nonempty
    /// subset of her hidden pool make her aim hold?
    pub fn has_effective_move(&self) -> bool {
        let pool = self.hidden_pool(self.turn);
        for s in pool.subsets() {
            if !s.is_empty() && self.split.aim_holds_on(self.revealed.union(s), self.turn) {
                return true;
            }
        }
        false
    }

    /// Every effective move of the turn player, canonical order.
    pub(crate) fn effective_sets(&self) -> Vec<ArgSet> {
        effective_sets_for(
            self.split,
            self.revealed,
            self.hidden_pool(self.turn),
            self.turn,
        )
    }

    /// Every effective move of the turn player (the witnesses to
    /// [`has_effective_move`](Self::has_effective_move)), canonical order.
    /// Guarded by [`DEFAULT_ENUM_BOUND`] on the hidden pool.
    pub fn effective_moves(&self) -> Result<Vec<Move>, GameError> {
        self.effective_moves_bounded(DEFAULT_ENUM_BOUND)
    }

    pub fn effective_moves_bounded(&self, bound: usize) -> Result<Vec<Move>, GameError> {
        let pool = self.hidden_pool(self.turn);
        if pool.len() > bound {
            return Err(GameError::SizeBoundExceeded {
                size: pool.len(),
                bound,
            });
        }
        let sets = self.effective_sets();
        Ok(sets
            .into_iter()
            .map(|s| Move {
                player: self.turn,
                args: s,
            })
            .collect())
    }

    /// The antichain of minimal effective moves for the turn player, in
    /// canonical order. Guarded by [`DEFAULT_ENUM_BOUND`] on the hidden
    /// pool; see [`minimal_moves_bounded`](Self::minimal_moves_bounded).
    pub fn minimal_moves(&self) -> Result<Vec<Move>, GameError> {
        self.minimal_moves_bounded(DEFAULT_ENUM_BOUND)
    }

    pub fn minimal_moves_bounded(&self, bound: usize) -> Result<Vec<Move>, GameError> {
        let pool = self.hidden_pool(self.turn);
        if pool.len() > bound {
            return Err(GameError::SizeBoundExceeded {
                size: pool.len(),
                bound,
            });
        }
        let sets = minimal_antichain(&self.effective_sets());
        Ok(sets
            .into_iter()
            .map(|s| Move {
                player: self.turn,
                args: s,
            })
            .collect())
    }

    /// A minimal effective move chosen by `policy`, or `None` when the turn
    /// player has no effective move (and has therefore lost).
    pub fn find_minimal_move(&self, policy: MovePolicy) -> Result<Option<Move>, GameError> {
        let moves = self.minimal_moves()?;
        Ok(pick_by_policy(&moves, policy))
    }

    /// Advance the game: the move must be the turn player's, legal, and
    /// effective.
    pub fn apply_move(&self, m: &Move) -> Result<GameState<'a>, GameError> {
        if m.player != self.turn {
            return Err(GameError::WrongTurn {
                expected: self.turn,
            });
        }
        if !self.is_effective(m)? {
            return Err(GameError::Ineffective);
        }
        Ok(GameState {
            split: self.split,
            revealed: self.revealed.union(m.args),
            turn: self.turn.other(),
        })
    }
}

impl fmt::Debug for GameState<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GameState(revealed {:?}, turn {})",
            self.revealed, self.turn
        )
    }
}

/// Select from an already-canonical list of minimal moves. `LexFirst` takes
/// the canonical head. `Optimal` also takes the canonical head: it prefers
/// provably winning continuations under the mover's knowledge closure, and
/// every minimal effective move is one — with the opponent's hidden pool
/// assumed empty, any effective move leaves the opponent (whose aim just
/// became false) without a reply. `SeededRandom` is uniform over the list.
pub(crate) fn pick_by_policy(moves: &[Move], policy: MovePolicy) -> Option<Move> {
    if moves.is_empty() {
        return None;
    }
    match policy {
        MovePolicy::LexFirst | MovePolicy::Optimal => Some(moves[0]),
        MovePolicy::SeededRandom(seed) => {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            Some(moves[rng.gen_range(0..moves.len())])
        }
    }
}

/// All effective sets for `side` from `pool` on top of `revealed`, canonical
/// order.
pub(crate) fn effective_sets_for(
    split: &SplitFramework,
    revealed: ArgSet,
    pool: ArgSet,
    side: Side,
) -> Vec<ArgSet> {
    let mut out: Vec<ArgSet> = pool
        .subsets()
        .filter(|s| !s.is_empty() && split.aim_holds_on(revealed.union(*s), side))
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(*b));
    out
}

/// The ⊆-minimal members of a canonically sorted family. Size-ascending
/// order makes a single forward scan sufficient: any effective proper subset
/// of a candidate contains some smaller minimal set seen earlier.
pub(crate) fn minimal_antichain(sorted: &[ArgSet]) -> Vec<ArgSet> {
    let mut minimal: Vec<ArgSet> = Vec::new();
    for &s in sorted {
        if !minimal.iter().any(|&m| m.is_proper_subset_of(s)) {
            minimal.push(s);
        }
    }
    minimal
}
