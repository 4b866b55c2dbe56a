//! The `.trace` game-record file format.
//!
//! ```text
//! game fixture:saf8      % path or fixture:<name>, first line
//! semantics grounded     % optional override of the framework file
//! aim existential        % optional override
//! move P A               % one line per move, in order
//! move O B1
//! winner O               % final line
//! ```
//!
//! `%` comments and blank lines are allowed anywhere. The `game` line is
//! recorded verbatim; audit-style commands take the framework explicitly
//! and use the trace's `semantics`/`aim` lines to override it.

use stratarg_core::af::ArgumentId;
use stratarg_core::aims::{Aim, Semantics, Side};
use stratarg_core::game::{GameTrace, SplitFramework};

use crate::FormatError;

/// A parsed trace file: the game reference and moves, still by name, plus
/// any semantics/aim overrides. [`bind`](TraceFile::bind) resolves it
/// against a concrete framework.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceFile {
    pub game_ref: String,
    pub semantics: Option<Semantics>,
    pub aim: Option<Aim>,
    pub moves: Vec<(Side, Vec<String>)>,
    pub winner: Side,
}

impl TraceFile {
    /// Record an engine trace for `split`, with explicit semantics and aim.
    pub fn from_game(game_ref: &str, split: &SplitFramework, trace: &GameTrace) -> TraceFile {
        TraceFile {
            game_ref: game_ref.to_string(),
            semantics: Some(split.semantics()),
            aim: Some(split.aim()),
            moves: trace
                .moves
                .iter()
                .map(|m| {
                    let ids = m
                        .ids(split)
                        .iter()
                        .map(|a| a.as_str().to_string())
                        .collect();
                    (m.player(), ids)
                })
                .collect(),
            winner: trace.winner,
        }
    }

    /// Resolve against a framework: apply the overrides and intern the move
    /// ids. Unknown arguments are errors here; ownership and order problems
    /// are left for the auditor to report.
    pub fn bind(&self, split: &SplitFramework) -> Result<(SplitFramework, GameTrace), FormatError> {
        let mut bound = split.clone();
        if let Some(s) = self.semantics {
            bound = bound.with_semantics(s);
        }
        if let Some(a) = self.aim {
            bound = bound.with_aim(a);
        }
        let mut moves = Vec::with_capacity(self.moves.len());
        for (side, names) in &self.moves {
            let ids = names
                .iter()
                .map(|n| ArgumentId::new(n))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| FormatError::Engine {
                    message: e.to_string(),
                })?;
            let m = bound
                .move_of(*side, &ids)
                .map_err(|e| FormatError::Engine {
                    message: e.to_string(),
                })?;
            moves.push(m);
        }
        Ok((
            bound,
            GameTrace {
                moves,
                winner: self.winner,
            },
        ))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("game {}\n", self.game_ref);
        if let Some(s) = self.semantics {
            out.push_str(&format!("semantics {s}\n"));
        }
        if let Some(a) = self.aim {
            out.push_str(&format!("aim {a}\n"));
        }
        for (side, ids) in &self.moves {
            out.push_str(&format!("move {side}"));
            for id in ids {
                out.push(' ');
                out.push_str(id);
            }
            out.push('\n');
        }
        out.push_str(&format!("winner {}\n", self.winner));
        out
    }
}

pub fn parse_trace(text: &str) -> Result<TraceFile, FormatError> {
    let mut game_ref: Option<String> = None;
    let mut semantics: Option<Semantics> = None;
    let mut aim: Option<Aim> = None;
    let mut moves: Vec<(Side, Vec<String>)> = Vec::new();
    let mut winner: Option<Side> = None;

    let enum_err = |e: stratarg_core::aims::ParseEnumError| FormatError::Engine {
        message: e.to_string(),
    };

    for raw in text.lines() {
        let line = raw.split('%').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap();
        if winner.is_some() {
            return Err(FormatError::Malformed {
                token: line.to_string(),
            });
        }
        match keyword {
            "game" => {
                let rest = line["game".len()..].trim();
                if rest.is_empty() {
                    return Err(FormatError::Malformed {
                        token: line.to_string(),
                    });
                }
                if game_ref.replace(rest.to_string()).is_some() {
                    return Err(FormatError::Duplicate {
                        what: "game",
                        token: line.to_string(),
                    });
                }
            }
            // Overrides must precede the moves they govern.
            "semantics" if moves.is_empty() => {
                let tok = words.next().ok_or(FormatError::Malformed {
                    token: line.to_string(),
                })?;
                let s = tok.parse().map_err(enum_err)?;
                if semantics.replace(s).is_some() || words.next().is_some() {
                    return Err(FormatError::Duplicate {
                        what: "semantics",
                        token: line.to_string(),
                    });
                }
            }
            "aim" if moves.is_empty() => {
                let tok = words.next().ok_or(FormatError::Malformed {
                    token: line.to_string(),
                })?;
                let a = tok.parse().map_err(enum_err)?;
                if aim.replace(a).is_some() || words.next().is_some() {
                    return Err(FormatError::Duplicate {
                        what: "aim",
                        token: line.to_string(),
                    });
                }
            }
            "move" => {
                if game_ref.is_none() {
                    return Err(FormatError::MissingGame);
                }
                let side: Side = words
                    .next()
                    .ok_or(FormatError::Malformed {
                        token: line.to_string(),
                    })?
                    .parse()
                    .map_err(enum_err)?;
                let ids: Vec<String> = words.map(|w| w.to_string()).collect();
                if ids.is_empty() {
                    return Err(FormatError::Malformed {
                        token: line.to_string(),
                    });
                }
                moves.push((side, ids));
            }
            "winner" => {
                let side: Side = words
                    .next()
                    .ok_or(FormatError::Malformed {
                        token: line.to_string(),
                    })?
                    .parse()
                    .map_err(enum_err)?;
                if words.next().is_some() {
                    return Err(FormatError::Malformed {
                        token: line.to_string(),
                    });
                }
                winner = Some(side);
            }
            _ => {
                return Err(FormatError::UnknownToken {
                    what: "line",
                    token: line.to_string(),
                })
            }
        }
    }

    Ok(TraceFile {
        game_ref: game_ref.ok_or(FormatError::MissingGame)?,
        semantics,
        aim,
        moves,
        winner: winner.ok_or(FormatError::MissingWinner)?,
    })
}
