//! Strategic aims: graded acceptance targets for one focal argument.
//!
//! An aim is a predicate over how the focal argument fares across the
//! extensions of a framework under a chosen semantics. The proponent wants
//! the predicate to hold; the opponent's aim is its exact negation. Counting
//! conventions: the grounded semantics contributes a single labeling, in
//! which the focal argument is accepted, rejected, or undecided; the stable
//! semantics contributes one vote per stable extension (accepted if the
//! focal argument is in the extension, rejected if the extension attacks
//! it — which is the only other case for a present argument, since stable
//! extensions leave nothing undecided).

use core::fmt;
use core::str::FromStr;

use crate::af::{AfError, ArgumentId, ArgumentationFramework, DEFAULT_ENUM_BOUND};
use crate::set::ArgSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    Grounded,
    Stable,
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semantics::Grounded => "grounded",
            Semantics::Stable => "stable",
        })
    }
}

impl FromStr for Semantics {
    type Err = ParseEnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grounded" => Ok(Semantics::Grounded),
            "stable" => Ok(Semantics::Stable),
            _ => Err(ParseEnumError {
                what: "semantics",
                token: s.into(),
            }),
        }
    }
}

/// The seven graded aims, stated as the proponent's target.
///
/// With `acc`, `rej`, `und` counting extensions that accept / reject / leave
/// undecided the focal argument, and `total` their sum:
///
/// * `Existential`: `acc >= 1`
/// * `Universal`: `acc == total`
/// * `Unrejected`: `rej == 0`
/// * `Uncontested`: `acc >= 1 && rej == 0`
/// * `Plurality`: `acc > rej`
/// * `Majority`: `acc > total - acc`
/// * `Supermajority`: `acc >= 2 * (total - acc)`
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Aim {
    Existential,
    Universal,
    Unrejected,
    Uncontested,
    Plurality,
    Majority,
    Supermajority,
}

impl Aim {
    pub const ALL: [Aim; 7] = [
        Aim::Existential,
        Aim::Universal,
        Aim::Unrejected,
        Aim::Uncontested,
        Aim::Plurality,
        Aim::Majority,
        Aim::Supermajority,
    ];
}

impl fmt::Display for Aim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Aim::Existential => "existential",
            Aim::Universal => "universal",
            Aim::Unrejected => "unrejected",
            Aim::Uncontested => "uncontested",
            Aim::Plurality => "plurality",
            Aim::Majority => "majority",
            Aim::Supermajority => "supermajority",
        })
    }
}

impl FromStr for Aim {
    type Err = ParseEnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "existential" => Ok(Aim::Existential),
            "universal" => Ok(Aim::Universal),
            "unrejected" => Ok(Aim::Unrejected),
            "uncontested" => Ok(Aim::Uncontested),
            "plurality" => Ok(Aim::Plurality),
            "majority" => Ok(Aim::Majority),
            "supermajority" => Ok(Aim::Supermajority),
            _ => Err(ParseEnumError {
                what: "aim",
                token: s.into(),
            }),
        }
    }
}

/// The two players. The proponent asserts the aim; the opponent asserts its
/// negation (and so always holds the complementary position, never merely
/// the absence of one).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Proponent,
    Opponent,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Proponent => Side::Opponent,
            Side::Opponent => Side::Proponent,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Proponent => "P",
            Side::Opponent => "O",
        })
    }
}

impl FromStr for Side {
    type Err = ParseEnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" | "p" | "proponent" => Ok(Side::Proponent),
            "O" | "o" | "opponent" => Ok(Side::Opponent),
            _ => Err(ParseEnumError {
                what: "side",
                token: s.into(),
            }),
        }
    }
}

/// Failed to parse one of the small closed vocabularies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseEnumError {
    pub what: &'static str,
    pub token: alloc::string::String,
}

impl fmt::Display for ParseEnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown {} `{}`", self.what, self.token)
    }
}

impl core::error::Error for ParseEnumError {}

/// How the focal argument fared across the evaluated extensions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AimCounts {
    pub accepted: usize,
    pub rejected: usize,
    pub undecided: usize,
    pub total: usize,
}

/// What to do when the stable semantics yields no extension at all.
///
/// `Literal` (the default) evaluates each aim's arithmetic over the zero
/// counts, so the universally-quantified aims (universal, unrejected,
/// supermajority) hold vacuously while the rest fail. `StrictFalse` makes
/// every proponent aim fail instead.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum VacuousMode {
    #[default]
    Literal,
    StrictFalse,
}

/// Pure arithmetic of an aim over counts, from `side`'s point of view.
pub fn holds(aim: Aim, counts: AimCounts, side: Side, mode: VacuousMode) -> bool {
    let proponent_truth = if counts.total == 0 && mode == VacuousMode::StrictFalse {
        false
    } else {
        let not_accepted = counts.total - counts.accepted;
        match aim {
            Aim::Existential => counts.accepted >= 1,
            Aim::Universal => counts.accepted == counts.total,
            Aim::Unrejected => counts.rejected == 0,
            Aim::Uncontested => counts.accepted >= 1 && counts.rejected == 0,
            Aim::Plurality => counts.accepted > counts.rejected,
            Aim::Majority => counts.accepted > not_accepted,
            Aim::Supermajority => counts.accepted >= 2 * not_accepted,
        }
    };
    match side {
        Side::Proponent => proponent_truth,
        Side::Opponent => !proponent_truth,
    }
}

/// Count how the focal argument fares in the subframework induced by
/// `within`. A focal of `None` (or one outside `within`) counts as undecided
/// under the grounded semantics and as neither-in-nor-attacked in every
/// stable extension; this is how positions where the focal argument is not
/// yet revealed are scored.
pub fn counts_in(
    af: &ArgumentationFramework,
    within: ArgSet,
    semantics: Semantics,
    focal: Option<usize>,
) -> AimCounts {
    let live_focal = focal.filter(|&i| within.contains(i));
    match semantics {
        Semantics::Grounded => {
            let lab = af.grounded_in(within);
            let mut c = AimCounts {
                total: 1,
                ..AimCounts::default()
            };
            match live_focal {
                Some(i) if lab.accepted.contains(i) => c.accepted = 1,
                Some(i) if lab.rejected.contains(i) => c.rejected = 1,
                _ => c.undecided = 1,
            }
            c
        }
        Semantics::Stable => {
            let mut c = AimCounts::default();
            af.for_each_stable_in(within, &mut |ext| {
                c.total += 1;
                match live_focal {
                    Some(i) if ext.contains(i) => c.accepted += 1,
                    Some(i) if af.attacked_by_in(ext, within).contains(i) => c.rejected += 1,
                    _ => c.undecided += 1,
                }
            });
            c
        }
    }
}

/// Does `side`'s aim hold in the subframework induced by `within`?
pub fn aim_holds_in(
    af: &ArgumentationFramework,
    within: ArgSet,
    semantics: Semantics,
    aim: Aim,
    focal: Option<usize>,
    side: Side,
    mode: VacuousMode,
) -> bool {
    holds(aim, counts_in(af, within, semantics, focal), side, mode)
}

/// Counts for the full framework, guarded by [`DEFAULT_ENUM_BOUND`] when the
/// semantics requires enumerating extensions.
pub fn aim_counts(
    af: &ArgumentationFramework,
    semantics: Semantics,
    focal: &ArgumentId,
) -> Result<AimCounts, AfError> {
    aim_counts_bounded(af, semantics, focal, DEFAULT_ENUM_BOUND)
}

pub fn aim_counts_bounded(
    af: &ArgumentationFramework,
    semantics: Semantics,
    focal: &ArgumentId,
    bound: usize,
) -> Result<AimCounts, AfError> {
    let i = af.index_of(focal.as_str())?;
    if semantics == Semantics::Stable && af.len() > bound {
        return Err(AfError::SizeBoundExceeded {
            size: af.len(),
            bound,
        });
    }
    Ok(counts_in(af, af.all(), semantics, Some(i)))
}

/// Top-level aim check on a full framework.
pub fn verify_aim(
    af: &ArgumentationFramework,
    semantics: Semantics,
    aim: Aim,
    focal: &ArgumentId,
    side: Side,
) -> Result<bool, AfError> {
    verify_aim_with(af, semantics, aim, focal, side, VacuousMode::default())
}

pub fn verify_aim_with(
    af: &ArgumentationFramework,
    semantics: Semantics,
    aim: Aim,
    focal: &ArgumentId,
    side: Side,
    mode: VacuousMode,
) -> Result<bool, AfError> {
    let counts = aim_counts(af, semantics, focal)?;
    Ok(holds(aim, counts, side, mode))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::ArgumentationFramework;

    fn id(s: &str) -> ArgumentId {
        ArgumentId::new(s).unwrap()
    }

    #[test]
    fn test_grounded_counts_always_total_one() {
        let af = ArgumentationFramework::from_named(&["a", "b"], &[("a", "b")]).unwrap();
        assert_eq!(
            aim_counts(&af, Semantics::Grounded, &id("a")).unwrap(),
            AimCounts {
                accepted: 1,
                rejected: 0,
                undecided: 0,
                total: 1
            }
        );
        assert_eq!(
            aim_counts(&af, Semantics::Grounded, &id("b")).unwrap(),
            AimCounts {
                accepted: 0,
                rejected: 1,
                undecided: 0,
                total: 1
            }
        );
    }

    #[test]
    fn test_two_cycle_stable_counts_split() {
        let af =
            ArgumentationFramework::from_named(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        let c = aim_counts(&af, Semantics::Stable, &id("a")).unwrap();
        assert_eq!(
            c,
            AimCounts {
                accepted: 1,
                rejected: 1,
                undecided: 0,
                total: 2
            }
        );
        // a is accepted somewhere but not everywhere, and is rejected somewhere.
        assert!(holds(
            Aim::Existential,
            c,
            Side::Proponent,
            VacuousMode::Literal
        ));
        assert!(!holds(
            Aim::Universal,
            c,
            Side::Proponent,
            VacuousMode::Literal
        ));
        assert!(!holds(
            Aim::Unrejected,
            c,
            Side::Proponent,
            VacuousMode::Literal
        ));
        assert!(!holds(
            Aim::Uncontested,
            c,
            Side::Proponent,
            VacuousMode::Literal
        ));
        assert!(!holds(
            Aim::Plurality,
            c,
            Side::Proponent,
            VacuousMode::Literal
        ));
        assert!(!holds(
            Aim::Majority,
            c,
            Side::Proponent,
            VacuousMode::Literal
        ));
        assert!(!holds(
            Aim::Supermajority,
            c,
            Side::Proponent,
            VacuousMode::Literal
        ));
    }

    #[test]
    fn test_three_cycle_vacuous_aims() {
        let af = ArgumentationFramework::from_named(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("c", "a")],
        )
        .unwrap();
        let c = aim_counts(&af, Semantics::Stable, &id("a")).unwrap();
        assert_eq!(
            c,
            AimCounts {
                accepted: 0,
                rejected: 0,
                undecided: 0,
                total: 0
            }
        );
        // Literal reading: the universally quantified aims hold over an
        // empty set of extensions, the existence-flavored ones do not.
        let lit = VacuousMode::Literal;
        assert!(!holds(Aim::Existential, c, Side::Proponent, lit));
        assert!(holds(Aim::Universal, c, Side::Proponent, lit));
        assert!(holds(Aim::Unrejected, c, Side::Proponent, lit));
        assert!(!holds(Aim::Uncontested, c, Side::Proponent, lit));
        assert!(!holds(Aim::Plurality, c, Side::Proponent, lit));
        assert!(!holds(Aim::Majority, c, Side::Proponent, lit));
        assert!(holds(Aim::Supermajority, c, Side::Proponent, lit));
        // Strict reading: everything fails for the proponent.
        for aim in Aim::ALL {
            assert!(!holds(aim, c, Side::Proponent, VacuousMode::StrictFalse));
            assert!(holds(aim, c, Side::Opponent, VacuousMode::StrictFalse));
        }
    }

    #[test]
    fn test_grounded_undecided_focal() {
        let af = ArgumentationFramework::from_named(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "a"), ("a", "c"), ("b", "c")],
        )
        .unwrap();
        let c = aim_counts(&af, Semantics::Grounded, &id("c")).unwrap();
        assert_eq!(
            c,
            AimCounts {
                accepted: 0,
                rejected: 0,
                undecided: 1,
                total: 1
            }
        );
        // Undecided satisfies exactly the rejection-free aims.
        let lit = VacuousMode::Literal;
        assert!(!holds(Aim::Existential, c, Side::Proponent, lit));
        assert!(holds(Aim::Unrejected, c, Side::Proponent, lit));
        assert!(!holds(Aim::Uncontested, c, Side::Proponent, lit));
    }

    #[test]
    fn test_opponent_is_exact_negation() {
        let counts = [
            AimCounts {
                accepted: 3,
                rejected: 1,
                undecided: 0,
                total: 4,
            },
            AimCounts {
                accepted: 0,
                rejected: 0,
                undecided: 2,
                total: 2,
            },
            AimCounts {
                accepted: 0,
                rejected: 0,
                undecided: 0,
                total: 0,
            },
            AimCounts {
                accepted: 2,
                rejected: 2,
                undecided: 1,
                total: 5,
            },
        ];
        for c in counts {
            for aim in Aim::ALL {
                for mode in [VacuousMode::Literal, VacuousMode::StrictFalse] {
                    assert_ne!(
                        holds(aim, c, Side::Proponent, mode),
                        holds(aim, c, Side::Opponent, mode)
                    );
                }
            }
        }
    }

    #[test]
    fn test_supermajority_threshold() {
        // 4 of 6 accepted: 4 >= 2*2 holds; 3 of 5: 3 < 2*2 fails.
        let four_of_six = AimCounts {
            accepted: 4,
            rejected: 2,
            undecided: 0,
            total: 6,
        };
        let three_of_five = AimCounts {
            accepted: 3,
            rejected: 2,
            undecided: 0,
            total: 5,
        };
        let lit = VacuousMode::Literal;
        assert!(holds(Aim::Supermajority, four_of_six, Side::Proponent, lit));
        assert!(!holds(
            Aim::Supermajority,
            three_of_five,
            Side::Proponent,
            lit
        ));
    }

    #[test]
    fn test_unrevealed_focal_counts_as_undecided() {
        let af = ArgumentationFramework::from_named(&["a", "b"], &[("a", "b")]).unwrap();
        let within = ArgSet::singleton(1); // focal a (index 0) not live
        let c = counts_in(&af, within, Semantics::Grounded, Some(0));
        assert_eq!(
            c,
            AimCounts {
                accepted: 0,
                rejected: 0,
                undecided: 1,
                total: 1
            }
        );
        let c = counts_in(&af, within, Semantics::Stable, Some(0));
        assert_eq!(
            c,
            AimCounts {
                accepted: 0,
                rejected: 0,
                undecided: 1,
                total: 1
            }
        );
    }

    #[test]
    fn test_vocabulary_round_trips() {
        for sem in [Semantics::Grounded, Semantics::Stable] {
            assert_eq!(alloc::format!("{sem}").parse::<Semantics>().unwrap(), sem);
        }
        for aim in Aim::ALL {
            assert_eq!(alloc::format!("{aim}").parse::<Aim>().unwrap(), aim);
        }
        for side in [Side::Proponent, Side::Opponent] {
            assert_eq!(alloc::format!("{side}").parse::<Side>().unwrap(), side);
        }
        assert!("Grounded".parse::<Semantics>().is_err());
    }
}
