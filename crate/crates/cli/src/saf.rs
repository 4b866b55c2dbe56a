//! The `.saf` split-framework file format.
//!
//! Line-oriented ASCII. `%` starts a comment that runs to the end of the
//! line; the rest of the file is whitespace-separated directives:
//!
//! ```text
//! arg(A).            % one per argument
//! att(B1,A).         % attacker, target
//! own(A,p).          % p | o | common; common is the default
//! focal(A).          % exactly once
//! sem(grounded).     % optional, default grounded
//! aim(existential).  % optional, default existential
//! ```
//!
//! Serialization is canonical — arguments sorted, attacks sorted by
//! attacker then target, `own` lines only for private arguments — so
//! parse → serialize is byte-identical up to comments and whitespace.

use std::collections::BTreeMap;

use stratarg_core::af::ArgumentId;
use stratarg_core::aims::{Aim, Semantics, Side};
use stratarg_core::game::SplitFramework;

use crate::FormatError;

/// Ownership tokens as they appear in `own(...)` directives.
fn owner_token(owner: Option<Side>) -> &'static str {
    match owner {
        None => "common",
        Some(Side::Proponent) => "p",
        Some(Side::Opponent) => "o",
    }
}

/// Split one directive token `name(a,b).` into its name and arguments.
fn split_directive(token: &str) -> Result<(&str, Vec<&str>), FormatError> {
    let bad = || FormatError::Malformed {
        token: token.to_string(),
    };
    let open = token.find('(').ok_or_else(bad)?;
    if !token.ends_with(").") {
        return Err(bad());
    }
    let name = &token[..open];
    let inner = &token[open + 1..token.len() - 2];
    if name.is_empty() || inner.contains('(') || inner.contains(')') {
        return Err(bad());
    }
    let args = if inner.is_empty() {
        Vec::new()
    } else {
        inner.split(',').collect()
    };
    Ok((name, args))
}

fn arity<'a>(token: &str, args: &[&'a str], n: usize) -> Result<&'a str, FormatError> {
    if args.len() != n {
        return Err(FormatError::Malformed {
            token: token.to_string(),
        });
    }
    Ok(args[0])
}

pub fn parse_saf(text: &str) -> Result<SplitFramework, FormatError> {
    let mut args: Vec<ArgumentId> = Vec::new();
    let mut attacks: Vec<(ArgumentId, ArgumentId)> = Vec::new();
    let mut owners: BTreeMap<ArgumentId, Side> = BTreeMap::new();
    let mut focal: Option<ArgumentId> = None;
    let mut semantics: Option<Semantics> = None;
    let mut aim: Option<Aim> = None;

    let ident = |s: &str| -> Result<ArgumentId, FormatError> {
        ArgumentId::new(s).map_err(|e| FormatError::Engine {
            message: e.to_string(),
        })
    };

    for line in text.lines() {
        let content = line.split('%').next().unwrap_or("");
        for token in content.split_whitespace() {
            let (name, inner) = split_directive(token)?;
            match name {
                "arg" => {
                    let id = ident(arity(token, &inner, 1)?)?;
                    if !args.contains(&id) {
                        args.push(id);
                    }
                }
                "att" => {
                    if inner.len() != 2 {
                        return Err(FormatError::Malformed {
                            token: token.to_string(),
                        });
                    }
                    attacks.push((ident(inner[0])?, ident(inner[1])?));
                }
                "own" => {
                    if inner.len() != 2 {
                        return Err(FormatError::Malformed {
                            token: token.to_string(),
                        });
                    }
                    let id = ident(inner[0])?;
                    let owner = match inner[1] {
                        "common" => None,
                        "p" => Some(Side::Proponent),
                        "o" => Some(Side::Opponent),
                        other => {
                            return Err(FormatError::UnknownToken {
                                what: "owner",
                                token: other.to_string(),
                            })
                        }
                    };
                    if let Some(side) = owner {
                        if owners.insert(id.clone(), side).is_some() {
                            return Err(FormatError::Duplicate {
                                what: "own",
                                token: id.as_str().to_string(),
                            });
                        }
                    }
                }
                "focal" => {
                    let id = ident(arity(token, &inner, 1)?)?;
                    if focal.replace(id).is_some() {
                        return Err(FormatError::Duplicate {
                            what: "focal",
                            token: token.to_string(),
                        });
                    }
                }
                "sem" => {
                    let s: Semantics = arity(token, &inner, 1)?.parse().map_err(
                        |e: stratarg_core::aims::ParseEnumError| FormatError::Engine {
                            message: e.to_string(),
                        },
                    )?;
                    if semantics.replace(s).is_some() {
                        return Err(FormatError::Duplicate {
                            what: "sem",
                            token: token.to_string(),
                        });
                    }
                }
                "aim" => {
                    let a: Aim = arity(token, &inner, 1)?.parse().map_err(
                        |e: stratarg_core::aims::ParseEnumError| FormatError::Engine {
                            message: e.to_string(),
                        },
                    )?;
                    if aim.replace(a).is_some() {
                        return Err(FormatError::Duplicate {
                            what: "aim",
                            token: token.to_string(),
                        });
                    }
                }
                other => {
                    return Err(FormatError::UnknownToken {
                        what: "directive",
                        token: other.to_string(),
                    })
                }
            }
        }
    }

    let focal = focal.ok_or(FormatError::MissingFocal)?;
    for id in owners.keys() {
        if !args.contains(id) {
            return Err(FormatError::Engine {
                message: format!("own() references undeclared argument {id}"),
            });
        }
    }
    let pool = |side: Side| -> Vec<ArgumentId> {
        args.iter()
            .filter(|a| owners.get(a) == Some(&side))
            .cloned()
            .collect()
    };
    let common: Vec<ArgumentId> = args
        .iter()
        .filter(|a| !owners.contains_key(a))
        .cloned()
        .collect();
    SplitFramework::new(
        common,
        pool(Side::Proponent),
        pool(Side::Opponent),
        attacks,
        focal,
        semantics.unwrap_or(Semantics::Grounded),
        aim.unwrap_or(Aim::Existential),
    )
    .map_err(|e| FormatError::Engine {
        message: e.to_string(),
    })
}

pub fn write_saf(split: &SplitFramework) -> String {
    let af = split.af();
    let mut out = String::new();
    for a in af.arguments() {
        out.push_str(&format!("arg({a}).\n"));
    }
    for i in 0..af.len() {
        if let Some(side) = split.owner_of(i) {
            out.push_str(&format!("own({},{}).\n", af.id(i), owner_token(Some(side))));
        }
    }
    let mut pairs = af.attack_pairs();
    pairs.sort_unstable();
    for (a, b) in pairs {
        out.push_str(&format!("att({},{}).\n", af.id(a), af.id(b)));
    }
    out.push_str(&format!("focal({}).\n", split.focal()));
    out.push_str(&format!("sem({}).\n", split.semantics()));
    out.push_str(&format!("aim({}).\n", split.aim()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use stratarg_core::fixtures;

    #[test]
    fn test_fixture_round_trips_byte_identically() {
        for name in fixtures::NAMES {
            let split = fixtures::fixture(name).unwrap();
            let text = write_saf(&split);
            let reparsed = parse_saf(&text).unwrap();
            assert_eq!(reparsed, split, "{name} did not survive a round trip");
            assert_eq!(
                write_saf(&reparsed),
                text,
                "{name} serialization is unstable"
            );
        }
    }

    #[test]
    fn test_parse_tolerates_comments_and_whitespace() {
        let text = "% a two-argument duel\n  arg(x).\targ(y).\n\natt(x,y). own(x,p). own(y,o).\nfocal(x). % trailing comment\n";
        let split = parse_saf(text).unwrap();
        assert_eq!(split.af().len(), 2);
        assert_eq!(split.focal().as_str(), "x");
        assert_eq!(split.semantics(), Semantics::Grounded);
        assert_eq!(split.aim(), Aim::Existential);
    }

    #[test]
    fn test_parse_rejects_bad_input() {
        assert!(matches!(
            parse_saf("arg(x). focal(x). frob(x)."),
            Err(FormatError::UnknownToken { .. })
        ));
        assert!(matches!(
            parse_saf("arg(x)."),
            Err(FormatError::MissingFocal)
        ));
        assert!(matches!(
            parse_saf("arg(x). focal(x). focal(x)."),
            Err(FormatError::Duplicate { .. })
        ));
        assert!(matches!(
            parse_saf("arg(x). att(x y). focal(x)."),
            Err(FormatError::Malformed { .. })
        ));
        assert!(matches!(
            parse_saf("arg(x). own(x,q). focal(x)."),
            Err(FormatError::UnknownToken { .. })
        ));
        // Attacks may only reference declared arguments.
        assert!(matches!(
            parse_saf("arg(x). att(x,ghost). focal(x)."),
            Err(FormatError::Engine { .. })
        ));
    }
}
