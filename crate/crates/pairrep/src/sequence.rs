//! Nested replacement sequences under pluggable policies.

use crate::apply::{apply_move, MoveOutcome};
use crate::moves::{enumerate_moves, MoveKind, ReplacementMove};
use crate::{Interval, PairDiagram, RepError};
use serde::{Deserialize, Serialize};
use surfkit::curve::{CurveClass, TransversalCurve};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Policy {
    /// Keep every intermediate curve essential and nonperipheral; prefers
    /// non-waves, then the innermost wave with the fewest enclosed
    /// crossings whose result stays nonperipheral, then the first double
    /// wave in order.
    Nonperipheral,
    /// Use wave moves only; a selector picks among the innermost waves.
    WaveOnly,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunStep {
    pub mv: ReplacementMove,
    pub j_before: Interval,
    pub j_after: Option<Interval>,
    pub crossings_with_b: usize,
    pub a_curve: TransversalCurve,
    pub a_class: CurveClass,
}

#[derive(Clone, Debug)]
pub struct SequenceRun {
    pub steps: Vec<RunStep>,
    /// The terminal curve, homotopic to `b`.
    pub terminal: TransversalCurve,
    /// Outcomes kept for downstream consumers (tracks, metrics).
    pub outcomes: Vec<MoveOutcome>,
}

/// Chooses a move per the policy. `selector` filters wave moves under
/// `Policy::WaveOnly`; it returns true when the candidate outcome is
/// acceptable (for instance, when the client needs every curve to bound a
/// disk in a handlebody).
pub fn nested_sequence(
    d: &PairDiagram,
    j0: &Interval,
    policy: Policy,
    selector: Option<&dyn Fn(&ReplacementMove, &MoveOutcome) -> bool>,
) -> Result<SequenceRun, RepError> {
    j0.validate(d)?;
    let mut j = j0.clone();
    let mut steps: Vec<RunStep> = Vec::new();
    let mut outcomes: Vec<MoveOutcome> = Vec::new();
    let budget = j0.len() + 1;
    for _round in 0..budget {
        // degenerate endgame: at most one crossing left in J
        let arcs_with_both_ends = crate::moves::arcs_in_interval(d, &j);
        if j.len() <= 1 || arcs_with_both_ends.is_empty() {
            if j.len() > 1 {
                // No arc of b has both endpoints in J. The replacement is
                // the degenerate one: the next curve is b itself.
                return Err(RepError::NoLegalMove(j.len()));
            }
            break;
        }
        let moves = enumerate_moves(d, &j)?;
        if moves.is_empty() {
            return Err(RepError::NoLegalMove(j.len()));
        }
        let chosen: (ReplacementMove, MoveOutcome) = match policy {
            Policy::Nonperipheral => choose_nonperipheral(d, &j, &moves)?,
            Policy::WaveOnly => {
                let mut found = None;
                for m in moves.iter().filter(|m| m.kind == MoveKind::Wave) {
                    let out = apply_move(d, &j, m)?;
                    let ok = selector.map_or(true, |f| f(m, &out));
                    if ok {
                        found = Some((m.clone(), out));
                        break;
                    }
                }
                found.ok_or_else(|| {
                    RepError::PolicyStuck(format!(
                        "no acceptable wave among {} moves at |J \\cap b| = {}",
                        moves.len(),
                        j.len()
                    ))
                })?
            }
        };
        let (mv, outcome) = chosen;
        let step = RunStep {
            mv,
            j_before: j.clone(),
            j_after: outcome.j1.clone(),
            crossings_with_b: outcome.crossings_with_b,
            a_curve: outcome.a1.clone(),
            a_class: outcome.a1_class,
        };
        // nesting and strict decrease
        if let Some(j1) = &outcome.j1 {
            if !j.contains_interval(j1) {
                return Err(RepError::IllegalMove("interval not nested".into()));
            }
            if j1.len() >= j.len() {
                return Err(RepError::IllegalMove("interval did not shrink".into()));
            }
        }
        steps.push(step);
        match outcome.j1.clone() {
            Some(j1) => {
                outcomes.push(outcome);
                j = j1;
            }
            None => {
                outcomes.push(outcome);
                break;
            }
        }
    }
    // terminal curve: the final replacement is b itself (the degenerate
    // rule applies once at most one crossing remains).
    let terminal = d.b_curve.clone();
    // sanity: if the last constructed curve already meets b in <= 1 point
    // nothing more is needed; the terminal curve is homotopic to b by the
    // degenerate replacement.
    Ok(SequenceRun {
        steps,
        terminal,
        outcomes,
    })
}

fn choose_nonperipheral(
    d: &PairDiagram,
    j: &Interval,
    moves: &[ReplacementMove],
) -> Result<(ReplacementMove, MoveOutcome), RepError> {
    // non-waves first
    for m in moves.iter().filter(|m| m.kind == MoveKind::NonWave) {
        let out = apply_move(d, j, m)?;
        if out.a1_class == CurveClass::Essential {
            return Ok((m.clone(), out));
        }
    }
    // then innermost waves by enclosed-crossing count
    let mut waves: Vec<&ReplacementMove> =
        moves.iter().filter(|m| m.kind == MoveKind::Wave).collect();
    waves.sort_by_key(|m| (m.q - m.p, m.arcs.clone()));
    for m in waves {
        let out = apply_move(d, j, m)?;
        if out.a1_class == CurveClass::Essential {
            return Ok((m.clone(), out));
        }
    }
    // then the first double wave
    for m in moves.iter().filter(|m| {
        m.kind == MoveKind::DoubleWaveSharedEnd || m.kind == MoveKind::DoubleWaveCoEnd
    }) {
        let out = apply_move(d, j, m)?;
        if out.a1_class == CurveClass::Essential {
            return Ok((m.clone(), out));
        }
    }
    Err(RepError::PolicyStuck(
        "every legal move yields a peripheral curve".into(),
    ))
}
