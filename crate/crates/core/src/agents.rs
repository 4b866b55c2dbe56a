//! Automated players.
//!
//! Honest players see only what has been revealed plus their own pool; the
//! [`PlayerView`] type makes that a hard interface boundary — it is a
//! restricted copy of the framework from which the opposing private
//! arguments (and any attacks touching them) are simply absent. Colluders
//! and spies, by contrast, are thin wrappers over the full-knowledge
//! solvers in [`crate::search`].

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::af::{ArgumentId, ArgumentationFramework, DEFAULT_ENUM_BOUND};
use crate::aims::{self, Aim, Semantics, Side, VacuousMode};
use crate::game::{
    minimal_antichain, GameError, GameState, GameTrace, Move, SplitFramework, Standard,
};
use crate::search::{self, Adversary, SearchError, Strategy};
use crate::set::ArgSet;

/// How an honest player chooses among her minimal effective moves.
///
/// `Optimal` prefers moves whose continuation she can prove winning from her
/// own knowledge (revealed arguments plus her pool, the opponent's hidden
/// pool assumed empty), breaking ties canonically. Under that closure every
/// effective move is immediately winning — it falsifies the opponent's aim,
/// and an opponent without hidden arguments has no reply — so the choice
/// coincides with `LexFirst`; it is kept as a distinct policy because the
/// tie-break rationale, not the outcome, is what callers select.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MovePolicy {
    LexFirst,
    SeededRandom(u64),
    Optimal,
}

/// What one player can see: the revealed arguments plus her own pool,
/// with the attack relation restricted accordingly.
#[derive(Clone, Debug)]
pub struct PlayerView {
    side: Side,
    af: ArgumentationFramework,
    revealed: ArgSet,
    hidden_own: ArgSet,
    focal: Option<usize>,
    semantics: Semantics,
    aim: Aim,
}

impl PlayerView {
    /// The turn player's view of `state`. Only `state.revealed()` and the
    /// turn player's own pool are consulted.
    pub fn of(state: &GameState<'_>) -> PlayerView {
        let split = state.split();
        let side = state.turn();
        let known = state.revealed().union(split.pool(side));
        let full = split.af();
        let ids: Vec<ArgumentId> = known.iter().map(|i| full.id(i).clone()).collect();
        let attacks: Vec<(ArgumentId, ArgumentId)> = full
            .attack_pairs()
            .into_iter()
            .filter(|&(a, b)| known.contains(a) && known.contains(b))
            .map(|(a, b)| (full.id(a).clone(), full.id(b).clone()))
            .collect();
        let af =
            ArgumentationFramework::new(ids, attacks).expect("view of a valid framework is valid");
        let to_view = |mask: ArgSet| -> ArgSet {
            let mut out = ArgSet::EMPTY;
            for i in mask.iter() {
                out.insert(af.index_of(full.id(i).as_str()).expect("known argument"));
            }
            out
        };
        let revealed = to_view(state.revealed());
        let hidden_own = to_view(split.pool(side).minus(state.revealed()));
        let focal = af.index_of(split.focal().as_str()).ok();
        PlayerView {
            side,
            af,
            revealed,
            hidden_own,
            focal,
            semantics: split.semantics(),
            aim: split.aim(),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// The restricted framework (revealed plus own pool).
    pub fn af(&self) -> &ArgumentationFramework {
        &self.af
    }

    pub fn revealed_ids(&self) -> BTreeSet<ArgumentId> {
        self.af.ids_of(self.revealed)
    }

    fn aim_holds_after(&self, extra: ArgSet) -> bool {
        aims::aim_holds_in(
            &self.af,
            self.revealed.union(extra),
            self.semantics,
            self.aim,
            self.focal,
            self.side,
            VacuousMode::Literal,
        )
    }

    /// Minimal effective moves visible to this player, canonical order,
    /// as view-local masks.
    fn minimal_view_sets(&self) -> Result<Vec<ArgSet>, GameError> {
        if self.hidden_own.len() > DEFAULT_ENUM_BOUND {
            return Err(GameError::SizeBoundExceeded {
                size: self.hidden_own.len(),
                bound: DEFAULT_ENUM_BOUND,
            });
        }
        let mut effective: Vec<ArgSet> = self
            .hidden_own
            .subsets()
            .filter(|s| !s.is_empty() && self.aim_holds_after(*s))
            .collect();
        effective.sort_by(|a, b| a.canonical_cmp(*b));
        Ok(minimal_antichain(&effective))
    }

    /// Minimal effective moves as id sets, canonical order.
    pub fn minimal_moves(&self) -> Result<Vec<BTreeSet<ArgumentId>>, GameError> {
        Ok(self
            .minimal_view_sets()?
            .into_iter()
            .map(|s| self.af.ids_of(s))
            .collect())
    }
}

/// Running form of a policy: seeded policies keep one stream for a whole
/// match, so successive picks consume successive draws.
enum PolicyRuntime {
    Canonical,
    Seeded(ChaCha12Rng),
}

impl PolicyRuntime {
    fn new(policy: MovePolicy) -> PolicyRuntime {
        match policy {
            MovePolicy::LexFirst | MovePolicy::Optimal => PolicyRuntime::Canonical,
            MovePolicy::SeededRandom(seed) => {
                PolicyRuntime::Seeded(ChaCha12Rng::seed_from_u64(seed))
            }
        }
    }

    fn select(&mut self, candidates: &[ArgSet]) -> Option<ArgSet> {
        if candidates.is_empty() {
            return None;
        }
        match self {
            PolicyRuntime::Canonical => Some(candidates[0]),
            PolicyRuntime::Seeded(rng) => Some(candidates[rng.gen_range(0..candidates.len())]),
        }
    }
}

/// An honest move for the turn player: a minimal effective move chosen by
/// `policy` from the player's view alone, or `None` when she has no
/// effective move (and has lost).
pub fn honest_move(state: &GameState<'_>, policy: MovePolicy) -> Result<Option<Move>, GameError> {
    let view = PlayerView::of(state);
    let sets = view.minimal_view_sets()?;
    let mut rt = PolicyRuntime::new(policy);
    match rt.select(&sets) {
        None => Ok(None),
        Some(s) => {
            let ids = view.af.ids_of(s);
            Ok(Some(state.split().move_of(state.turn(), &ids)?))
        }
    }
}

/// Play a full honest match, each side drawing from its own policy (and, for
/// seeded policies, its own random stream). The loser is the first player
/// with no effective move on her turn; in the degenerate case where that is
/// the proponent before anyone moved, the opponent wins with an empty trace.
pub fn play_match(
    split: &SplitFramework,
    policy_p: MovePolicy,
    policy_o: MovePolicy,
) -> Result<GameTrace, GameError> {
    let mut runtimes = [PolicyRuntime::new(policy_p), PolicyRuntime::new(policy_o)];
    let mut state = split.initial_state();
    let mut moves: Vec<Move> = Vec::new();
    let winner = loop {
        let view = PlayerView::of(&state);
        let sets = view.minimal_view_sets()?;
        let rt = match state.turn() {
            Side::Proponent => &mut runtimes[0],
            Side::Opponent => &mut runtimes[1],
        };
        match rt.select(&sets) {
            None => break state.turn().other(),
            Some(s) => {
                let ids = view.af.ids_of(s);
                let m = split.move_of(state.turn(), &ids)?;
                state = state.apply_move(&m)?;
                moves.push(m);
            }
        }
    };
    Ok(GameTrace { moves, winner })
}

/// The script a colluding pair replays verbatim so that `winner` wins while
/// honoring `standard`: just the canonical winning sequence, if any.
pub fn collusion_script(
    split: &SplitFramework,
    winner: Side,
    standard: Standard,
) -> Result<Option<GameTrace>, SearchError> {
    search::winning_sequence(split, winner, standard)
}

/// The strategy a spy plays after learning the opponent's whole pool: a
/// full-knowledge winning strategy for `side`, against an adversary free to
/// play any effective move.
pub fn espionage_strategy(
    split: &SplitFramework,
    side: Side,
) -> Result<Option<Strategy>, SearchError> {
    search::winning_strategy(split, side, Adversary::AllEffective)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agents::MovePolicy::{LexFirst, Optimal, SeededRandom};
    use crate::fixtures::fixture;
    use crate::game::Standard;

    fn ids(names: &[&str]) -> Vec<ArgumentId> {
        names.iter().map(|s| ArgumentId::new(s).unwrap()).collect()
    }

    fn names(split: &SplitFramework, m: &Move) -> Vec<alloc::string::String> {
        m.ids(split)
            .iter()
            .map(|a| alloc::string::ToString::to_string(a))
            .collect()
    }

    fn trace_names(split: &SplitFramework, t: &GameTrace) -> Vec<Vec<alloc::string::String>> {
        t.moves.iter().map(|m| names(split, m)).collect()
    }

    #[test]
    fn test_honest_move_examples() {
        let saf8 = fixture("saf8").unwrap();
        let s = saf8.state_at(&ids(&["A"]), Side::Opponent).unwrap();
        let m = honest_move(&s, LexFirst).unwrap().unwrap();
        assert_eq!(names(&saf8, &m), ["B1"]);

        let lost = saf8
            .state_at(&ids(&["A", "B1", "C", "D"]), Side::Proponent)
            .unwrap();
        assert!(honest_move(&lost, LexFirst).unwrap().is_none());

        let ah = fixture("ah").unwrap();
        let s = ah.state_at(&ids(&["A", "E"]), Side::Proponent).unwrap();
        let m1 = honest_move(&s, SeededRandom(7)).unwrap().unwrap();
        let m2 = honest_move(&s, SeededRandom(7)).unwrap().unwrap();
        assert_eq!(m1, m2);
        assert!(names(&ah, &m1) == ["G"] || names(&ah, &m1) == ["H"]);
    }

    #[test]
    fn test_honest_move_agrees_with_full_state_minimality() {
        // The view computation must coincide with the full-framework one:
        // minimality only ever evaluates subsets of revealed ∪ own pool,
        // and on those the restricted framework induces identical
        // subframeworks.
        let saf16 = fixture("saf16").unwrap();
        let s = saf16
            .state_at(&ids(&["A", "B1", "B2", "C1", "C2"]), Side::Opponent)
            .unwrap();
        let via_view = honest_move(&s, LexFirst).unwrap().unwrap();
        let via_state = s.find_minimal_move(LexFirst).unwrap().unwrap();
        assert_eq!(via_view, via_state);
        let view = PlayerView::of(&s);
        let view_sets: Vec<BTreeSet<ArgumentId>> = view.minimal_moves().unwrap();
        let state_sets: Vec<BTreeSet<ArgumentId>> = s
            .minimal_moves()
            .unwrap()
            .iter()
            .map(|m| m.ids(&saf16))
            .collect();
        assert_eq!(view_sets, state_sets);
    }

    #[test]
    fn test_view_ignores_the_hidden_pool() {
        // Replace P's hidden argument C by an unrelated Z: O's view — and
        // hence O's honest move — must not change.
        let saf8 = fixture("saf8").unwrap();
        let variant = SplitFramework::from_named(
            &[],
            &["A", "Z"],
            &["B1", "B2", "D"],
            &[("B1", "A"), ("Z", "B1"), ("D", "Z"), ("B2", "D")],
            "A",
            Semantics::Grounded,
            Aim::Existential,
        )
        .unwrap();
        let s1 = saf8.state_at(&ids(&["A"]), Side::Opponent).unwrap();
        let s2 = variant.state_at(&ids(&["A"]), Side::Opponent).unwrap();
        let v1 = PlayerView::of(&s1);
        let v2 = PlayerView::of(&s2);
        assert_eq!(v1.af(), v2.af());
        assert_eq!(
            honest_move(&s1, LexFirst).unwrap().unwrap().ids(&saf8),
            honest_move(&s2, LexFirst).unwrap().unwrap().ids(&variant)
        );
    }

    #[test]
    fn test_play_match_saf8_normal_course() {
        let saf8 = fixture("saf8").unwrap();
        let trace = play_match(&saf8, LexFirst, LexFirst).unwrap();
        assert_eq!(trace.winner, Side::Opponent);
        assert_eq!(
            trace_names(&saf8, &trace),
            [vec!["A"], vec!["B1"], vec!["C"], vec!["D"]]
        );
        // Replay must succeed and leave P stuck.
        let end = saf8.replay(&trace).unwrap();
        assert!(!end.has_effective_move());
    }

    #[test]
    fn test_play_match_safmulti_and_ah() {
        let safmulti = fixture("safmulti").unwrap();
        assert_eq!(
            play_match(&safmulti, LexFirst, LexFirst).unwrap().winner,
            Side::Proponent
        );

        let ah = fixture("ah").unwrap();
        let trace = play_match(&ah, Optimal, Optimal).unwrap();
        assert_eq!(trace.winner, Side::Proponent);
        // The honest outcome matches the solved value.
        assert_eq!(
            crate::search::game_value(&ah.initial_state(), Standard::Legacy).unwrap(),
            Side::Proponent
        );
    }

    #[test]
    fn test_play_match_seeded_is_reproducible() {
        let saf16 = fixture("saf16").unwrap();
        let a = play_match(&saf16, SeededRandom(11), SeededRandom(99)).unwrap();
        let b = play_match(&saf16, SeededRandom(11), SeededRandom(99)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn test_collusion_script_examples() {
        let saf8 = fixture("saf8").unwrap();
        let script = collusion_script(&saf8, Side::Proponent, Standard::Legacy)
            .unwrap()
            .unwrap();
        assert_eq!(
            trace_names(&saf8, &script),
            [vec!["A"], vec!["B1", "B2"], vec!["C"]]
        );
        assert!(collusion_script(&saf8, Side::Proponent, Standard::MinO)
            .unwrap()
            .is_none());
        // Colluders replay the script verbatim; it must be legal throughout.
        assert!(saf8.replay(&script).is_ok());
    }

    #[test]
    fn test_espionage_examples() {
        let safmulti = fixture("safmulti").unwrap();
        assert!(espionage_strategy(&safmulti, Side::Proponent)
            .unwrap()
            .is_some());

        let saf8 = fixture("saf8").unwrap();
        assert!(espionage_strategy(&saf8, Side::Proponent)
            .unwrap()
            .is_none());
        let spy = espionage_strategy(&saf8, Side::Opponent).unwrap().unwrap();
        // O's prescription after P's honest opening is the honest {B1}.
        let after_a = saf8.af().set_of(&ids(&["A"])).unwrap();
        assert_eq!(
            spy.get(after_a).unwrap().ids(&saf8),
            ids(&["B1"]).into_iter().collect()
        );
    }
}
