#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gridmind/frozen_lake.hpp"
#include "gridmind/minesweeper.hpp"
#include "gridmind/sokoban.hpp"
#include "gridmind/types.hpp"

namespace gridmind {

// Full environment state: the hidden board plus the agent-visible text
// observation, which is always a pure function of the hidden state.
struct GameState {
  GameId game = GameId::minesweeper;
  std::variant<MinesweeperBoard, FrozenLakeBoard, SokobanBoard> board;
  std::string observation_text;
  int step_index = 0;
  bool terminal = false;
  std::optional<EpisodeOutcome> outcome;
};

// Deterministic: identical (game, seed) produce bit-identical states.
// Generation resamples internally until the game's solvability guarantee
// holds; a bounded retry overrun raises generation_failure.
GameState reset(GameId game, uint64_t seed);

// Canonical deterministic ordering: row-major cells for reveals,
// Up/Down/Left/Right for moves. Throws terminal_state on finished episodes.
std::vector<Action> legal_actions(const GameState& state);

struct Transition {
  GameState state_before;
  Action action;
  double reward = 0.0;  // sparse: 1 exactly on a success terminal
  GameState state_after;
};

// Pure: returns the transition without mutating the input. Throws
// illegal_action for actions outside legal_actions(state).
Transition step(const GameState& state, const Action& action);

// Marks a non-terminal state as a failed terminal for runner-imposed stops
// (step limit, parse-fallback limit), keeping terminal <=> outcome intact.
GameState finalize_truncated(const GameState& state, TerminationReason reason);

// Episode trajectory: T entries of (observation, action, reward), in order.
struct TrajectoryStep {
  std::string observation;
  std::string action_text;
  double reward = 0.0;
};

struct Trajectory {
  int episode_index = 0;
  std::vector<TrajectoryStep> steps;
  std::string terminal_observation;
};

// Appends one (s, a, r) triple; throws discontinuous_trajectory when the
// transition does not continue from the trajectory's last successor.
void append_step(Trajectory& trajectory, const Transition& transition);

double trajectory_return(const Trajectory& trajectory);

int default_step_limit(GameId game);

}  // namespace gridmind
