//! Human-readable and JSON rendering of audit reports.

use serde::Serialize;

use stratarg_core::af::{ArgumentId, ArgumentationFramework};
use stratarg_core::audit::{AuditReport, Minimality, StructuralViolation, Verdict};
use stratarg_core::game::SplitFramework;
use stratarg_core::set::ArgSet;

/// `{A,B1,C}` — canonical order, no inner spaces (matching move ids as they
/// appear in files).
pub fn fmt_set(af: &ArgumentationFramework, s: ArgSet) -> String {
    let mut out = String::from("{");
    for (k, i) in s.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(af.id(i).as_str());
    }
    out.push('}');
    out
}

pub fn fmt_ids<'a>(ids: impl IntoIterator<Item = &'a ArgumentId>) -> String {
    let mut out = String::from("{");
    for (k, id) in ids.into_iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(id.as_str());
    }
    out.push('}');
    out
}

pub fn render_text(split: &SplitFramework, report: &AuditReport, advisories: bool) -> String {
    let af = split.af();
    let mut out = format!("standard {}\n", report.standard);
    for m in &report.moves {
        let mut problems: Vec<String> = Vec::new();
        for v in &m.structural {
            problems.push(match v {
                StructuralViolation::WrongTurn { expected } => {
                    format!("wrong turn (expected {expected})")
                }
                StructuralViolation::NotOwned { id } => format!("not owned ({id})"),
                StructuralViolation::AlreadyRevealed { id } => {
                    format!("already revealed ({id})")
                }
            });
        }
        if !m.effective {
            problems.push("ineffective".to_string());
        }
        if let Minimality::NonMinimal { witness } = m.minimality {
            let mut note = format!("non-minimal (witness {})", fmt_set(af, witness));
            if let Some(least) = m.min_effective_size {
                note.push_str(&format!(
                    "; played {} arguments, {} would do",
                    m.move_size, least
                ));
            }
            problems.push(note);
        }
        let line = if problems.is_empty() {
            "ok".to_string()
        } else {
            format!("violation: {}", problems.join("; "))
        };
        out.push_str(&format!(
            "move {} {} {}: {}\n",
            m.index,
            m.player,
            fmt_set(af, m.args),
            line
        ));
    }
    let end = &report.end;
    out.push_str(&format!(
        "end: claimed winner {}; winner moved last: {}; loser had no move: {}\n",
        end.claimed_winner,
        if end.winner_moved_last { "yes" } else { "no" },
        if end.loser_had_no_move {
            "yes"
        } else {
            "no (premature surrender)"
        },
    ));
    if advisories {
        for adv in &report.advisories {
            for (from, to) in &adv.pairs {
                out.push_str(&format!(
                    "advisory: move {} attacks the mover's own pool ({from} -> {to})\n",
                    adv.index
                ));
            }
        }
    }
    out.push_str(&format!(
        "verdict: {}\n",
        match report.verdict {
            Verdict::Compliant => "compliant",
            Verdict::Violation => "violation",
        }
    ));
    out
}

#[derive(Serialize)]
struct MoveDto {
    index: usize,
    player: String,
    args: Vec<String>,
    structural: Vec<String>,
    effective: bool,
    minimality: String,
    witness: Option<Vec<String>>,
    move_size: usize,
    min_effective_size: Option<usize>,
}

#[derive(Serialize)]
struct EndDto {
    claimed_winner: String,
    winner_moved_last: bool,
    loser_had_no_move: bool,
}

#[derive(Serialize)]
struct AdvisoryDto {
    index: usize,
    pairs: Vec<[String; 2]>,
}

#[derive(Serialize)]
struct ReportDto {
    standard: String,
    verdict: String,
    moves: Vec<MoveDto>,
    end: EndDto,
    advisories: Vec<AdvisoryDto>,
}

pub fn render_json(split: &SplitFramework, report: &AuditReport) -> String {
    let af = split.af();
    let names =
        |s: ArgSet| -> Vec<String> { s.iter().map(|i| af.id(i).as_str().to_string()).collect() };
    let dto = ReportDto {
        standard: report.standard.to_string(),
        verdict: match report.verdict {
            Verdict::Compliant => "compliant".to_string(),
            Verdict::Violation => "violation".to_string(),
        },
        moves: report
            .moves
            .iter()
            .map(|m| MoveDto {
                index: m.index,
                player: m.player.to_string(),
                args: names(m.args),
                structural: m
                    .structural
                    .iter()
                    .map(|v| match v {
                        StructuralViolation::WrongTurn { expected } => {
                            format!("wrong-turn:{expected}")
                        }
                        StructuralViolation::NotOwned { id } => format!("not-owned:{id}"),
                        StructuralViolation::AlreadyRevealed { id } => {
                            format!("already-revealed:{id}")
                        }
                    })
                    .collect(),
                effective: m.effective,
                minimality: match m.minimality {
                    Minimality::NotRequired => "not-required".to_string(),
                    Minimality::Minimal => "minimal".to_string(),
                    Minimality::NonMinimal { .. } => "non-minimal".to_string(),
                    Minimality::NotAssessed => "not-assessed".to_string(),
                },
                witness: match m.minimality {
                    Minimality::NonMinimal { witness } => Some(names(witness)),
                    _ => None,
                },
                move_size: m.move_size,
                min_effective_size: m.min_effective_size,
            })
            .collect(),
        end: EndDto {
            claimed_winner: report.end.claimed_winner.to_string(),
            winner_moved_last: report.end.winner_moved_last,
            loser_had_no_move: report.end.loser_had_no_move,
        },
        advisories: report
            .advisories
            .iter()
            .map(|a| AdvisoryDto {
                index: a.index,
                pairs: a
                    .pairs
                    .iter()
                    .map(|(x, y)| [x.as_str().to_string(), y.as_str().to_string()])
                    .collect(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&dto).expect("report serialization");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use stratarg_core::aims::Side;
    use stratarg_core::audit::audit_trace;
    use stratarg_core::fixtures::fixture;
    use stratarg_core::game::{GameTrace, Standard};

    fn collusion_report() -> (SplitFramework, AuditReport) {
        let split = fixture("saf8").unwrap();
        let mk = |side: Side, ids: &[&str]| {
            let ids: Vec<_> = ids.iter().map(|s| ArgumentId::new(s).unwrap()).collect();
            split.move_of(side, &ids).unwrap()
        };
        let trace = GameTrace {
            moves: vec![
                mk(Side::Proponent, &["A"]),
                mk(Side::Opponent, &["B1", "B2"]),
                mk(Side::Proponent, &["C"]),
            ],
            winner: Side::Proponent,
        };
        let report = audit_trace(&split, &trace, Standard::MinBoth);
        (split, report)
    }

    #[test]
    fn test_text_report_names_the_violation() {
        let (split, report) = collusion_report();
        let text = render_text(&split, &report, true);
        assert!(text.contains("move 2 O {B1,B2}: violation: non-minimal (witness {B1})"));
        assert!(text.contains("verdict: violation"));
    }

    #[test]
    fn test_json_report_is_stable_and_carries_the_witness() {
        let (split, report) = collusion_report();
        let a = render_json(&split, &report);
        let b = render_json(&split, &report);
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["verdict"], "violation");
        assert_eq!(v["moves"][1]["witness"][0], "B1");
    }
}
