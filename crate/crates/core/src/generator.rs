//! Seeded random split frameworks for tests and benchmarks.
//!
//! Determinism is the whole point: equal parameters give byte-identical
//! frameworks, so failures found on generated instances are reproducible
//! from their seed alone.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::af::{ArgumentId, MAX_ARGUMENTS};
use crate::aims::{Aim, Semantics};
use crate::game::SplitFramework;

/// Parameters for [`random_split`]. Arguments are named `c1..`, `p1..`,
/// `o1..`; every ordered pair of distinct arguments carries an attack
/// independently with `attack_probability`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorParams {
    pub n_common: usize,
    pub n_p: usize,
    pub n_o: usize,
    pub attack_probability: f64,
    pub seed: u64,
    /// Demand a focal argument the proponent can put in play (`p1`); when
    /// relaxed and `n_p` is zero the focal falls back to `c1`.
    pub require_focal_playable: bool,
    /// Orient every sampled attack along one random topological order, so
    /// the result is acyclic (well-founded). Self-attacks are never sampled
    /// in this mode.
    pub acyclic_only: bool,
    /// Also sample `(a, a)` self-attacks (off by default).
    pub include_self_attacks: bool,
}

impl GeneratorParams {
    pub fn new(
        n_common: usize,
        n_p: usize,
        n_o: usize,
        attack_probability: f64,
        seed: u64,
    ) -> GeneratorParams {
        GeneratorParams {
            n_common,
            n_p,
            n_o,
            attack_probability,
            seed,
            require_focal_playable: true,
            acyclic_only: false,
            include_self_attacks: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GenError {
    InvalidProbability {
        value: f64,
    },
    /// `require_focal_playable` with no proponent arguments, or no argument
    /// at all to serve as the focal.
    NoFocalCandidate,
    TooManyArguments {
        count: usize,
    },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::InvalidProbability { value } => {
                write!(f, "attack probability {value} is not in [0, 1]")
            }
            GenError::NoFocalCandidate => {
                f.write_str("no focal candidate (need p1, or c1 when playability is not required)")
            }
            GenError::TooManyArguments { count } => {
                write!(
                    f,
                    "{count} arguments exceed the supported maximum of {MAX_ARGUMENTS}"
                )
            }
        }
    }
}

impl core::error::Error for GenError {}

pub fn random_split(params: &GeneratorParams) -> Result<SplitFramework, GenError> {
    let p = params.attack_probability;
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::InvalidProbability { value: p });
    }
    let total = params.n_common + params.n_p + params.n_o;
    if total > MAX_ARGUMENTS {
        return Err(GenError::TooManyArguments { count: total });
    }
    let focal = if params.n_p >= 1 {
        "p1"
    } else if !params.require_focal_playable && params.n_common >= 1 {
        "c1"
    } else {
        return Err(GenError::NoFocalCandidate);
    };

    // Names in construction order: c1.., p1.., o1..; the sampling loops
    // below follow this order, which pins the random stream layout.
    let mut names: Vec<alloc::string::String> = Vec::with_capacity(total);
    for i in 0..params.n_common {
        names.push(format!("c{}", i + 1));
    }
    for i in 0..params.n_p {
        names.push(format!("p{}", i + 1));
    }
    for i in 0..params.n_o {
        names.push(format!("o{}", i + 1));
    }

    let mut rng = ChaCha12Rng::seed_from_u64(params.seed);

    // One random order per draw (Fisher-Yates), consumed before the pair
    // sweep so both modes read a well-defined stream prefix.
    let mut rank: Vec<usize> = (0..total).collect();
    if params.acyclic_only {
        for k in (1..total).rev() {
            let j = rng.gen_range(0..=k);
            rank.swap(k, j);
        }
    }

    let mut attacks: Vec<(usize, usize)> = Vec::new();
    for i in 0..total {
        for j in 0..total {
            if i == j {
                if params.include_self_attacks && !params.acyclic_only && rng.gen_bool(p) {
                    attacks.push((i, i));
                }
                continue;
            }
            if rng.gen_bool(p) {
                // In acyclic mode, orient along the random order.
                let edge = if params.acyclic_only && rank[i] > rank[j] {
                    (j, i)
                } else {
                    (i, j)
                };
                attacks.push(edge);
            }
        }
    }

    let id = |k: usize| ArgumentId::new(&names[k]).expect("generated names are valid");
    let split = SplitFramework::new(
        (0..params.n_common).map(id).collect(),
        (params.n_common..params.n_common + params.n_p)
            .map(id)
            .collect(),
        (params.n_common + params.n_p..total).map(id).collect(),
        attacks.into_iter().map(|(a, b)| (id(a), id(b))).collect(),
        ArgumentId::new(focal).expect("focal name is valid"),
        Semantics::Grounded,
        Aim::Existential,
    );
    Ok(split.expect("generated split data is valid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agents::{play_match, MovePolicy};
    use crate::aims::Side;

    #[test]
    fn test_determinism() {
        let params = GeneratorParams::new(2, 3, 3, 0.35, 42);
        let a = random_split(&params).unwrap();
        let b = random_split(&params).unwrap();
        assert_eq!(a, b);
        let other_seed = random_split(&GeneratorParams::new(2, 3, 3, 0.35, 43)).unwrap();
        assert_ne!(a, other_seed);
    }

    #[test]
    fn test_probability_extremes() {
        // p = 0: no attacks, so P wins at once by revealing the focal.
        let empty = random_split(&GeneratorParams::new(1, 2, 2, 0.0, 7)).unwrap();
        assert_eq!(empty.af().attack_count(), 0);
        let t = play_match(&empty, MovePolicy::LexFirst, MovePolicy::LexFirst).unwrap();
        assert_eq!(t.winner, Side::Proponent);
        assert_eq!(t.moves.len(), 1);
        assert_eq!(t.moves[0].ids(&empty).iter().next().unwrap().as_str(), "p1");

        // p = 1: all ordered pairs attack (no self-attacks by default).
        let dense = random_split(&GeneratorParams::new(0, 1, 1, 1.0, 7)).unwrap();
        let i = dense.af().index_of("p1").unwrap();
        let j = dense.af().index_of("o1").unwrap();
        assert!(dense.af().attacks(i, j) && dense.af().attacks(j, i));
        assert!(!dense.af().attacks(i, i) && !dense.af().attacks(j, j));
        assert_eq!(dense.af().attack_count(), 2);

        let mut with_self = GeneratorParams::new(0, 1, 1, 1.0, 7);
        with_self.include_self_attacks = true;
        let dense = random_split(&with_self).unwrap();
        assert_eq!(dense.af().attack_count(), 4);

        assert!(matches!(
            random_split(&GeneratorParams::new(1, 1, 1, 1.5, 7)),
            Err(GenError::InvalidProbability { .. })
        ));
    }

    #[test]
    fn test_acyclic_mode_is_well_founded() {
        for seed in 0..40 {
            let mut params = GeneratorParams::new(1, 3, 3, 0.5, seed);
            params.acyclic_only = true;
            let split = random_split(&params).unwrap();
            assert!(split.af().is_well_founded(), "seed {seed} produced a cycle");
        }
    }

    #[test]
    fn test_focal_selection_rules() {
        assert_eq!(
            random_split(&GeneratorParams::new(1, 1, 0, 0.2, 1))
                .unwrap()
                .focal()
                .as_str(),
            "p1"
        );
        assert!(matches!(
            random_split(&GeneratorParams::new(1, 0, 1, 0.2, 1)),
            Err(GenError::NoFocalCandidate)
        ));
        let mut relaxed = GeneratorParams::new(1, 0, 1, 0.2, 1);
        relaxed.require_focal_playable = false;
        assert_eq!(random_split(&relaxed).unwrap().focal().as_str(), "c1");
        relaxed.n_common = 0;
        assert!(matches!(
            random_split(&relaxed),
            Err(GenError::NoFocalCandidate)
        ));
    }

    #[test]
    fn test_size_cap() {
        assert!(matches!(
            random_split(&GeneratorParams::new(30, 30, 30, 0.1, 1)),
            Err(GenError::TooManyArguments { count: 90 })
        ));
    }
}
