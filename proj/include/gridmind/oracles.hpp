#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "gridmind/env.hpp"
#include "gridmind/gateway.hpp"
#include "gridmind/types.hpp"

namespace gridmind {

// Brute-force ground truth, kept independent of the agent: these solvers are
// the oracle side of every derived expectation and must not share code with
// the implementation paths they check.

// Shortest hole-avoiding path from the agent's current cell to the goal.
// Ties broken by canonical action order (Up, Down, Left, Right).
std::optional<std::vector<Direction>> bfs_frozenlake(const FrozenLakeBoard& board);

// Shortest action sequence over (player, box) states under push-only
// dynamics, or nullopt when the box cannot reach the goal.
std::optional<std::vector<Direction>> bfs_sokoban(const SokobanBoard& board);

// Omniscient policy: next unrevealed non-mine cell in row-major order.
std::optional<Cell> minesweeper_next_safe_cell(const MinesweeperBoard& board);

// The oracle's next action for an arbitrary non-terminal state.
std::optional<Action> oracle_next_action(const GameState& state);

// Full plan from a fresh state to the success terminal (for `oracle solve`).
std::optional<std::vector<Action>> oracle_plan(const GameState& state);

// Scripted gateway backend that answers the agent's whole prompt contract
// from oracle knowledge of the current hidden state: value block, one
// predict block per candidate with score 10 on the oracle action and 0
// elsewhere, a choose tag, and fixed placeholder rules/playbook text for
// reflection prompts. Raises contract_violation when a prompt is missing
// the sections it relies on, which catches prompt-builder regressions.
//
// current_state must return the state the step's prompts were built from;
// intended for single-threaded runs.
std::shared_ptr<Backend> make_oracle_backend(std::function<GameState()> current_state);

// Stateless scripted backend that always commits to the first candidate
// action; safe for concurrent runs.
std::shared_ptr<Backend> make_first_action_backend();

}  // namespace gridmind
