#include "gridmind/types.hpp"

#include <algorithm>
#include <cctype>

namespace gridmind {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

}  // namespace

std::string to_string(GameId game) {
  switch (game) {
    case GameId::minesweeper: return "minesweeper";
    case GameId::frozen_lake: return "frozen_lake";
    case GameId::sokoban: return "sokoban";
  }
  return "unknown";
}

std::optional<GameId> game_from_string(std::string_view name) {
  std::string n = lower(trim(name));
  if (n == "minesweeper") return GameId::minesweeper;
  if (n == "frozen_lake" || n == "frozenlake") return GameId::frozen_lake;
  if (n == "sokoban") return GameId::sokoban;
  return std::nullopt;
}

std::string to_string(Direction dir) {
  switch (dir) {
    case Direction::up: return "Up";
    case Direction::down: return "Down";
    case Direction::left: return "Left";
    case Direction::right: return "Right";
  }
  return "Up";
}

std::optional<Direction> direction_from_string(std::string_view text) {
  std::string t = lower(trim(text));
  if (t == "up") return Direction::up;
  if (t == "down") return Direction::down;
  if (t == "left") return Direction::left;
  if (t == "right") return Direction::right;
  return std::nullopt;
}

Cell neighbor(Cell cell, Direction dir) {
  switch (dir) {
    case Direction::up: return {cell.row - 1, cell.col};
    case Direction::down: return {cell.row + 1, cell.col};
    case Direction::left: return {cell.row, cell.col - 1};
    case Direction::right: return {cell.row, cell.col + 1};
  }
  return cell;
}

Action make_reveal_action(Cell cell) {
  Action a;
  a.game = GameId::minesweeper;
  a.payload = cell;
  a.canonical_text = "(" + std::to_string(cell.row) + ", " + std::to_string(cell.col) + ")";
  return a;
}

Action make_move_action(GameId game, Direction dir) {
  Action a;
  a.game = game;
  a.payload = dir;
  a.canonical_text = to_string(dir);
  return a;
}

std::optional<Action> parse_action(GameId game, std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) return std::nullopt;
  if (game == GameId::minesweeper) {
    // "(r, c)" with optional spaces; row/col are small non-negative ints.
    if (body.front() != '(' || body.back() != ')') return std::nullopt;
    body = trim(body.substr(1, body.size() - 2));
    size_t comma = body.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    std::string_view left = trim(body.substr(0, comma));
    std::string_view right = trim(body.substr(comma + 1));
    if (left.empty() || right.empty()) return std::nullopt;
    auto parse_int = [](std::string_view s) -> std::optional<int> {
      int value = 0;
      if (s.size() > 3) return std::nullopt;
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        value = value * 10 + (c - '0');
      }
      return value;
    };
    auto row = parse_int(left);
    auto col = parse_int(right);
    if (!row || !col) return std::nullopt;
    return make_reveal_action({*row, *col});
  }
  auto dir = direction_from_string(body);
  if (!dir) return std::nullopt;
  return make_move_action(game, *dir);
}

std::string to_string(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::objective_met: return "objective_met";
    case TerminationReason::fatal_state: return "fatal_state";
    case TerminationReason::step_limit: return "step_limit";
    case TerminationReason::parse_fallback_limit: return "parse_fallback_limit";
  }
  return "fatal_state";
}

std::optional<TerminationReason> termination_reason_from_string(std::string_view text) {
  std::string t = lower(trim(text));
  if (t == "objective_met") return TerminationReason::objective_met;
  if (t == "fatal_state") return TerminationReason::fatal_state;
  if (t == "step_limit") return TerminationReason::step_limit;
  if (t == "parse_fallback_limit") return TerminationReason::parse_fallback_limit;
  return std::nullopt;
}

}  // namespace gridmind
