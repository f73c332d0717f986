#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace gridmind {

enum class GameId { minesweeper, frozen_lake, sokoban };

std::string to_string(GameId game);
std::optional<GameId> game_from_string(std::string_view name);

enum class ErrorCode {
  invalid_argument,
  not_found,
  io,
  parse,
  illegal_action,
  terminal_state,
  already_revealed,
  discontinuous_trajectory,
  generation_failure,
  storage_failure,
  corrupt_store,
  missing_snapshot,
  backend_unreachable,
  replay_miss,
  budget_exceeded,
  contract_violation,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

// Canonical ordering for movement actions is Up, Down, Left, Right.
enum class Direction { up, down, left, right };

std::string to_string(Direction dir);
std::optional<Direction> direction_from_string(std::string_view text);
Cell neighbor(Cell cell, Direction dir);

// One agent-visible action. canonical_text is the exact token sequence the
// agent is expected to emit: "(r, c)" for reveals, "Up"/"Down"/"Left"/"Right"
// for moves. It round-trips through parse_action.
struct Action {
  GameId game = GameId::minesweeper;
  std::variant<Cell, Direction> payload;
  std::string canonical_text;

  bool operator==(const Action& other) const {
    return game == other.game && payload == other.payload;
  }
};

Action make_reveal_action(Cell cell);
Action make_move_action(GameId game, Direction dir);

// Lenient on interior whitespace and case; returns nullopt on anything that
// is not a syntactically valid action for the game.
std::optional<Action> parse_action(GameId game, std::string_view text);

enum class TerminationReason {
  objective_met,
  fatal_state,
  step_limit,
  parse_fallback_limit,
};

std::string to_string(TerminationReason reason);
std::optional<TerminationReason> termination_reason_from_string(std::string_view text);

struct EpisodeOutcome {
  bool success = false;
  int steps_taken = 0;
  TerminationReason termination_reason = TerminationReason::fatal_state;
  double return_value = 0.0;
};

}  // namespace gridmind
