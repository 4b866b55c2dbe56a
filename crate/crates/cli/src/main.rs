//! `stratarg` — strategic argumentation games from the command line.
//!
//! Exit codes: 0 = yes / compliant / success, 1 = no / violation / nothing
//! found, 2 = usage, parse, or bound errors.

use std::path::PathBuf;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use stratarg_cli::report::{fmt_ids, fmt_set, render_json, render_text};
use stratarg_cli::trace::TraceFile;
use stratarg_cli::{load_framework, load_trace, saf};
use stratarg_core::agents::{honest_move, play_match, MovePolicy};
use stratarg_core::aims::{verify_aim_with, Aim, Semantics, Side, VacuousMode};
use stratarg_core::audit::{audit_trace_with, SelfInjuryMode};
use stratarg_core::game::{SplitFramework, Standard};
use stratarg_core::generator::{random_split, GeneratorParams};
use stratarg_core::search::{Adversary, Solver};

#[derive(Parser)]
#[command(name = "stratarg", version, about = "Strategic argumentation engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the grounded labeling or the stable extensions of a framework.
    Semantics {
        /// Framework reference: a .saf path or fixture:<name>.
        #[arg(long)]
        af: String,
        #[arg(long)]
        sem: String,
        /// List extensions one per line (stable semantics).
        #[arg(long)]
        enumerate: bool,
    },
    /// Decide whether a side's aim holds on the full framework (exit 0/1).
    Verify {
        #[arg(long)]
        af: String,
        #[arg(long)]
        sem: String,
        #[arg(long)]
        aim: String,
        #[arg(long)]
        focal: String,
        #[arg(long)]
        side: String,
        /// Treat aims over zero stable extensions as false instead of
        /// evaluating them literally.
        #[arg(long)]
        strict_vacuous: bool,
    },
    /// Suggest the turn player's opening move (honest, limited knowledge).
    Move {
        #[arg(long)]
        split: String,
        /// lex | random:<seed> | optimal
        #[arg(long, default_value = "lex")]
        policy: String,
        /// List every minimal effective move instead of picking one.
        #[arg(long)]
        all_minimal: bool,
    },
    /// Play a full match between two honest agents and print the trace.
    Play {
        #[arg(long)]
        split: String,
        #[arg(long, default_value = "lex")]
        agent_p: String,
        #[arg(long, default_value = "lex")]
        agent_o: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a cooperative winning sequence (exit 1 if none exists).
    SearchSeq {
        #[arg(long)]
        split: String,
        #[arg(long)]
        winner: String,
        #[arg(long, default_value = "legacy")]
        standard: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a winning strategy for one side (exit 1 if none exists).
    SearchStrat {
        #[arg(long)]
        split: String,
        #[arg(long)]
        side: String,
        /// all | minimal — what the adversary may play.
        #[arg(long, default_value = "all")]
        adversary: String,
    },
    /// Check a recorded trace against a compliance standard (exit 0/1).
    Audit {
        #[arg(long)]
        split: String,
        #[arg(long)]
        trace: PathBuf,
        #[arg(long, default_value = "legacy")]
        standard: String,
        /// Also print self-injury advisories (never affect the verdict).
        #[arg(long)]
        advisory: bool,
        /// Advisory scope: full (whole private pool) | revealed.
        #[arg(long, default_value = "full")]
        advisory_scope: String,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Generate a seeded random split framework as a .saf file.
    Gen {
        #[arg(long)]
        n_common: usize,
        #[arg(long)]
        n_p: usize,
        #[arg(long)]
        n_o: usize,
        /// Attack probability per ordered pair, in [0, 1].
        #[arg(long)]
        p_att: f64,
        #[arg(long)]
        seed: u64,
        /// Orient attacks along a random order so the result is acyclic.
        #[arg(long)]
        acyclic: bool,
        /// Also sample self-attacks.
        #[arg(long)]
        self_attacks: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a built-in fixture as a .saf file.
    Fixture {
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_policy(text: &str) -> Result<MovePolicy> {
    if let Some(seed) = text.strip_prefix("random:") {
        let seed: u64 = seed.parse().context("policy seed must be a number")?;
        return Ok(MovePolicy::SeededRandom(seed));
    }
    match text {
        "lex" => Ok(MovePolicy::LexFirst),
        "optimal" => Ok(MovePolicy::Optimal),
        _ => Err(anyhow!(
            "unknown policy `{text}` (expected lex, random:<seed>, or optimal)"
        )),
    }
}

fn emit(text: &str, out: Option<&PathBuf>, echo: bool) -> Result<()> {
    if let Some(path) = out {
        std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
        if !echo {
            return Ok(());
        }
    }
    print!("{text}");
    Ok(())
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Semantics { af, sem, enumerate } => {
            let split = load_framework(&af)?;
            let af = split.af();
            match sem.parse::<Semantics>()? {
                Semantics::Grounded => {
                    let lab = af.grounded_labeling();
                    println!("accepted {}", fmt_ids(&lab.accepted));
                    println!("rejected {}", fmt_ids(&lab.rejected));
                    println!("undecided {}", fmt_ids(&lab.undecided));
                }
                Semantics::Stable => {
                    let exts = af.stable_extensions()?;
                    println!("stable extensions: {}", exts.len());
                    if enumerate {
                        for e in exts {
                            println!("extension {}", fmt_ids(&e));
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Verify {
            af,
            sem,
            aim,
            focal,
            side,
            strict_vacuous,
        } => {
            let split = load_framework(&af)?;
            let focal = stratarg_core::af::ArgumentId::new(&focal)?;
            let mode = if strict_vacuous {
                VacuousMode::StrictFalse
            } else {
                VacuousMode::Literal
            };
            let holds = verify_aim_with(
                split.af(),
                sem.parse::<Semantics>()?,
                aim.parse::<Aim>()?,
                &focal,
                side.parse::<Side>()?,
                mode,
            )?;
            println!("{holds}");
            Ok(if holds { 0 } else { 1 })
        }
        Command::Move {
            split,
            policy,
            all_minimal,
        } => {
            let split = load_framework(&split)?;
            let state = split.initial_state();
            if all_minimal {
                for m in state.minimal_moves()? {
                    println!("{} {}", m.player(), fmt_set(split.af(), m.args()));
                }
                return Ok(0);
            }
            match honest_move(&state, parse_policy(&policy)?)? {
                Some(m) => println!("{} {}", m.player(), fmt_set(split.af(), m.args())),
                None => println!("none"),
            }
            Ok(0)
        }
        Command::Play {
            split,
            agent_p,
            agent_o,
            out,
        } => {
            let loaded = load_framework(&split)?;
            let trace = play_match(&loaded, parse_policy(&agent_p)?, parse_policy(&agent_o)?)?;
            let text = TraceFile::from_game(&split, &loaded, &trace).to_text();
            emit(&text, out.as_ref(), true)?;
            Ok(0)
        }
        Command::SearchSeq {
            split,
            winner,
            standard,
            out,
        } => {
            let loaded = load_framework(&split)?;
            let mut solver = Solver::new(&loaded)?;
            match solver.winning_sequence(winner.parse::<Side>()?, standard.parse::<Standard>()?) {
                Some(trace) => {
                    let text = TraceFile::from_game(&split, &loaded, &trace).to_text();
                    emit(&text, out.as_ref(), true)?;
                    Ok(0)
                }
                None => {
                    println!("none");
                    Ok(1)
                }
            }
        }
        Command::SearchStrat {
            split,
            side,
            adversary,
        } => {
            let loaded = load_framework(&split)?;
            let side = side.parse::<Side>()?;
            let adversary = adversary.parse::<Adversary>()?;
            let mut solver = Solver::new(&loaded)?;
            match solver.winning_strategy(side, adversary) {
                Some(strategy) => {
                    println!("strategy {side} adversary {adversary}");
                    for (revealed, m) in strategy.entries() {
                        println!(
                            "at {} play {}",
                            fmt_set(loaded.af(), revealed),
                            fmt_set(loaded.af(), m.args())
                        );
                    }
                    Ok(0)
                }
                None => {
                    println!("none");
                    Ok(1)
                }
            }
        }
        Command::Audit {
            split,
            trace,
            standard,
            advisory,
            advisory_scope,
            json,
        } => {
            let loaded = load_framework(&split)?;
            let parsed = load_trace(&trace)?;
            let (bound, game_trace) = parsed.bind(&loaded)?;
            let scope = match advisory_scope.as_str() {
                "full" => SelfInjuryMode::FullPool,
                "revealed" => SelfInjuryMode::RevealedOnly,
                other => return Err(anyhow!("unknown advisory scope `{other}`")),
            };
            let report =
                audit_trace_with(&bound, &game_trace, standard.parse::<Standard>()?, scope);
            if json {
                print!("{}", render_json(&bound, &report));
            } else {
                print!("{}", render_text(&bound, &report, advisory));
            }
            Ok(if report.is_compliant() { 0 } else { 1 })
        }
        Command::Gen {
            n_common,
            n_p,
            n_o,
            p_att,
            seed,
            acyclic,
            self_attacks,
            out,
        } => {
            let mut params = GeneratorParams::new(n_common, n_p, n_o, p_att, seed);
            params.acyclic_only = acyclic;
            params.include_self_attacks = self_attacks;
            let split = random_split(&params)?;
            emit(&saf::write_saf(&split), out.as_ref(), false)?;
            Ok(0)
        }
        Command::Fixture { name, out } => {
            let split: SplitFramework = stratarg_core::fixtures::fixture(&name)?;
            emit(&saf::write_saf(&split), out.as_ref(), false)?;
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    std::process::exit(code);
}
