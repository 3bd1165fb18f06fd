use super::{GameRules, GameState, IncrementalDetector, MoveRecord, Outcome, Role, Transcript};
use crate::error::{Error, Result};
use crate::strategy::Strategy;

/// Plays until the property first holds on the Avoider seat's graph, the board
/// is exhausted, or `max_rounds` rounds are complete (`None` = no limit).
pub fn play_match(
    avoider: &mut dyn Strategy,
    enforcer: &mut dyn Strategy,
    rules: &GameRules,
    max_rounds: Option<usize>,
    seed: Option<u64>,
) -> Result<Transcript> {
    run(avoider, enforcer, rules, max_rounds, seed, true).map(|(t, _)| t)
}

/// Plays every edge, still recording the first hit. Returns the final position too.
pub fn play_full_board(
    avoider: &mut dyn Strategy,
    enforcer: &mut dyn Strategy,
    rules: &GameRules,
    seed: Option<u64>,
) -> Result<(Transcript, GameState)> {
    run(avoider, enforcer, rules, None, seed, false)
}

fn run(
    avoider: &mut dyn Strategy,
    enforcer: &mut dyn Strategy,
    rules: &GameRules,
    max_rounds: Option<usize>,
    seed: Option<u64>,
    stop_at_hit: bool,
) -> Result<(Transcript, GameState)> {
    let mut state = GameState::new(rules.clone())?;
    let mut detector = IncrementalDetector::new(rules.property.clone());
    let mut moves = Vec::with_capacity(rules.edge_count());
    let mut outcome = Outcome::NeverHit;
    let limit = max_rounds.unwrap_or(usize::MAX);
    while let Some(role) = state.to_move() {
        if state.round() >= limit {
            break;
        }
        let player: &mut dyn Strategy = match role {
            Role::Avoider => &mut *avoider,
            Role::Enforcer => &mut *enforcer,
        };
        let illegal = |player: &dyn Strategy, reason: String| Error::IllegalStrategyMove {
            strategy: player.descriptor(),
            reason,
        };
        let Some(edge) = player.next_move(&state, role) else {
            return Err(illegal(player, "no move on a nonempty board".into()));
        };
        state
            .apply_move(role, edge)
            .map_err(|e| illegal(player, format!("{edge}: {e}")))?;
        let round = state.moves_by(role);
        moves.push(MoveRecord {
            round,
            role,
            edge,
            fallback: player.last_move_was_fallback(),
        });
        if role == Role::Avoider
            && outcome == Outcome::NeverHit
            && detector.observe(state.avoider_graph(), edge)
        {
            outcome = Outcome::HitAtRound(round);
            if stop_at_hit {
                break;
            }
        }
    }
    let transcript = Transcript {
        rules: rules.clone(),
        seed,
        moves,
        outcome,
        final_claims: state.claims().to_vec(),
    };
    Ok((transcript, state))
}
