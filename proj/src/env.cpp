#include "gridmind/env.hpp"

#include "gridmind/rng.hpp"

namespace gridmind {

namespace {

std::string render_board(const GameState& state) {
  return std::visit([](const auto& board) { return board.render(); }, state.board);
}

EpisodeOutcome make_outcome(bool success, int steps, TerminationReason reason) {
  EpisodeOutcome outcome;
  outcome.success = success;
  outcome.steps_taken = steps;
  outcome.termination_reason = reason;
  outcome.return_value = success ? 1.0 : 0.0;
  return outcome;
}

}  // namespace

int default_step_limit(GameId game) {
  switch (game) {
    case GameId::minesweeper: return 30;
    case GameId::frozen_lake: return 30;
    case GameId::sokoban: return 50;
  }
  return 30;
}

GameState reset(GameId game, uint64_t seed) {
  Rng rng(seed);
  GameState state;
  state.game = game;
  switch (game) {
    case GameId::minesweeper:
      state.board = MinesweeperBoard::generate(rng);
      break;
    case GameId::frozen_lake:
      state.board = FrozenLakeBoard::generate(rng);
      break;
    case GameId::sokoban:
      state.board = SokobanBoard::generate(rng);
      break;
  }
  state.observation_text = render_board(state);
  return state;
}

std::vector<Action> legal_actions(const GameState& state) {
  if (state.terminal) {
    throw Error(ErrorCode::terminal_state, "legal_actions: state is terminal");
  }
  std::vector<Action> actions;
  if (state.game == GameId::minesweeper) {
    const auto& board = std::get<MinesweeperBoard>(state.board);
    for (Cell c : board.unrevealed_cells()) actions.push_back(make_reveal_action(c));
  } else {
    for (Direction dir :
         {Direction::up, Direction::down, Direction::left, Direction::right}) {
      actions.push_back(make_move_action(state.game, dir));
    }
  }
  return actions;
}

Transition step(const GameState& state, const Action& action) {
  if (state.terminal) {
    throw Error(ErrorCode::terminal_state, "step: state is terminal");
  }
  if (action.game != state.game) {
    throw Error(ErrorCode::illegal_action, "step: action belongs to a different game");
  }

  Transition transition;
  transition.state_before = state;
  transition.action = action;

  GameState next = state;
  next.step_index = state.step_index + 1;

  switch (state.game) {
    case GameId::minesweeper: {
      auto& board = std::get<MinesweeperBoard>(next.board);
      const auto* cell = std::get_if<Cell>(&action.payload);
      if (!cell || !board.in_bounds(*cell) || board.is_revealed(*cell)) {
        throw Error(ErrorCode::illegal_action,
                    "step: minesweeper action must reveal an unrevealed in-bounds cell");
      }
      auto result = board.reveal(*cell);
      if (result.exploded) {
        next.terminal = true;
        next.outcome = make_outcome(false, next.step_index, TerminationReason::fatal_state);
      } else if (result.won) {
        next.terminal = true;
        next.outcome = make_outcome(true, next.step_index, TerminationReason::objective_met);
      }
      break;
    }
    case GameId::frozen_lake: {
      auto& board = std::get<FrozenLakeBoard>(next.board);
      const auto* dir = std::get_if<Direction>(&action.payload);
      if (!dir) throw Error(ErrorCode::illegal_action, "step: frozen_lake action must be a move");
      auto result = board.move(*dir);
      if (result.terminal) {
        next.terminal = true;
        next.outcome = make_outcome(result.success, next.step_index,
                                    result.success ? TerminationReason::objective_met
                                                   : TerminationReason::fatal_state);
      }
      break;
    }
    case GameId::sokoban: {
      auto& board = std::get<SokobanBoard>(next.board);
      const auto* dir = std::get_if<Direction>(&action.payload);
      if (!dir) throw Error(ErrorCode::illegal_action, "step: sokoban action must be a move");
      auto result = board.move(*dir);
      if (result.terminal) {
        next.terminal = true;
        next.outcome = make_outcome(true, next.step_index, TerminationReason::objective_met);
      }
      break;
    }
  }

  next.observation_text = render_board(next);
  transition.reward = (next.terminal && next.outcome && next.outcome->success) ? 1.0 : 0.0;
  transition.state_after = std::move(next);
  return transition;
}

GameState finalize_truncated(const GameState& state, TerminationReason reason) {
  if (state.terminal) {
    throw Error(ErrorCode::terminal_state, "finalize_truncated: state already terminal");
  }
  if (reason != TerminationReason::step_limit &&
      reason != TerminationReason::parse_fallback_limit) {
    throw Error(ErrorCode::invalid_argument,
                "finalize_truncated: reason must be a runner-imposed stop");
  }
  GameState next = state;
  next.terminal = true;
  next.outcome = make_outcome(false, next.step_index, reason);
  return next;
}

void append_step(Trajectory& trajectory, const Transition& transition) {
  const int expected_index = static_cast<int>(trajectory.steps.size());
  if (transition.state_before.step_index != expected_index) {
    throw Error(ErrorCode::discontinuous_trajectory,
                "append_step: transition step_index does not continue the trajectory");
  }
  if (!trajectory.steps.empty() &&
      transition.state_before.observation_text != trajectory.terminal_observation) {
    throw Error(ErrorCode::discontinuous_trajectory,
                "append_step: transition does not start from the last recorded successor");
  }
  trajectory.steps.push_back({transition.state_before.observation_text,
                              transition.action.canonical_text, transition.reward});
  trajectory.terminal_observation = transition.state_after.observation_text;
}

double trajectory_return(const Trajectory& trajectory) {
  double total = 0.0;
  for (const auto& step : trajectory.steps) total += step.reward;
  return total;
}

}  // namespace gridmind
