//! Built-in split frameworks used throughout the tests and the CLI.
//!
//! Each fixture is a small, fully worked instance with a known game-theoretic
//! story: `saf8` (collusion beats honest play, and the minimality standard
//! blocks it), `safmulti` (a proponent with a dominant position), `saf16`
//! (minimum-cardinality moves are not dominant), `ah` (minimality-compliant
//! collusion), and `choice` (an odd cycle the grounded semantics cannot
//! break). All use the grounded semantics with the existential aim and an
//! empty common pool; the focal argument is `A`.

use alloc::string::String;
use alloc::string::ToString;
use core::fmt;

use crate::aims::{Aim, Semantics};
use crate::game::SplitFramework;

/// Fixture names accepted by [`fixture`], in canonical order.
pub const NAMES: [&str; 5] = ["ah", "choice", "saf16", "saf8", "safmulti"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownFixture {
    pub name: String,
}

impl fmt::Display for UnknownFixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown fixture `{}` (expected one of: {})",
            self.name,
            NAMES.join(", ")
        )
    }
}

impl core::error::Error for UnknownFixture {}

pub fn fixture(name: &str) -> Result<SplitFramework, UnknownFixture> {
    let split = match name {
        "saf8" => SplitFramework::from_named(
            &[],
            &["A", "C"],
            &["B1", "B2", "D"],
            &[("B1", "A"), ("C", "B1"), ("D", "C"), ("B2", "D")],
            "A",
            Semantics::Grounded,
            Aim::Existential,
        ),
        "safmulti" => SplitFramework::from_named(
            &[],
            &["A", "C", "E", "G", "H"],
            &["B", "D", "F"],
            &[
                ("B", "A"),
                ("C", "B"),
                ("G", "B"),
                ("D", "C"),
                ("E", "D"),
                ("H", "D"),
                ("F", "C"),
                ("F", "E"),
            ],
            "A",
            Semantics::Grounded,
            Aim::Existential,
        ),
        "saf16" => SplitFramework::from_named(
            &[],
            &["A", "C1", "C2", "F"],
            &["B1", "B2", "D1", "D2", "E"],
            &[
                ("B1", "A"),
                ("B2", "A"),
                ("C1", "B1"),
                ("C2", "B2"),
                ("D1", "C1"),
                ("D2", "C2"),
                ("F", "B1"),
                ("E", "B2"),
                ("E", "C1"),
                ("E", "C2"),
                ("E", "D1"),
                ("E", "D2"),
            ],
            "A",
            Semantics::Grounded,
            Aim::Existential,
        ),
        "ah" => SplitFramework::from_named(
            &[],
            &["A", "C", "F", "G", "H"],
            &["B", "D", "E"],
            &[
                ("B", "A"),
                ("C", "B"),
                ("D", "C"),
                ("E", "A"),
                ("F", "B"),
                ("G", "E"),
                ("H", "E"),
                ("H", "F"),
            ],
            "A",
            Semantics::Grounded,
            Aim::Existential,
        ),
        "choice" => SplitFramework::from_named(
            &[],
            &["A", "D"],
            &["B", "C"],
            &[("B", "A"), ("B", "C"), ("C", "A"), ("C", "B"), ("D", "C")],
            "A",
            Semantics::Grounded,
            Aim::Existential,
        ),
        other => {
            return Err(UnknownFixture {
                name: other.to_string(),
            })
        }
    };
    Ok(split.expect("fixture data is valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_every_fixture_loads() {
        for name in NAMES {
            let split = fixture(name).unwrap();
            assert_eq!(split.focal().as_str(), "A");
            assert!(split.common().is_empty());
        }
        assert!(fixture("nope").is_err());
    }

    #[test]
    fn test_fixture_shapes() {
        let saf16 = fixture("saf16").unwrap();
        assert_eq!(saf16.af().len(), 9);
        assert_eq!(saf16.af().attack_count(), 12);
        let ah = fixture("ah").unwrap();
        assert_eq!(ah.af().len(), 8);
        assert_eq!(ah.af().attack_count(), 8);
        let saf8 = fixture("saf8").unwrap();
        assert_eq!(saf8.af().len(), 5);
        assert_eq!(saf8.af().attack_count(), 4);
    }

    #[test]
    fn test_fixture_well_foundedness() {
        assert!(fixture("safmulti").unwrap().af().is_well_founded());
        assert!(!fixture("choice").unwrap().af().is_well_founded());
    }
}
