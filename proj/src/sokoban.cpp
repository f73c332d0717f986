#include "gridmind/sokoban.hpp"

#include <deque>
#include <sstream>
#include <vector>

namespace gridmind {

namespace {
constexpr int kGenerationRetryLimit = 10000;
constexpr Direction kDirections[] = {Direction::up, Direction::down, Direction::left,
                                     Direction::right};
}  // namespace

SokobanBoard SokobanBoard::generate(Rng& rng, const SokobanConfig& cfg) {
  if (cfg.rows < 4 || cfg.cols < 4) {
    throw Error(ErrorCode::invalid_argument, "sokoban: grid too small for a wall border");
  }
  std::vector<Cell> interior;
  for (int r = 1; r < cfg.rows - 1; ++r) {
    for (int c = 1; c < cfg.cols - 1; ++c) interior.push_back({r, c});
  }
  for (int attempt = 0; attempt < kGenerationRetryLimit; ++attempt) {
    std::vector<int> picks = rng.sample_indices(static_cast<int>(interior.size()), 3);
    Cell player = interior[static_cast<size_t>(picks[0])];
    Cell box = interior[static_cast<size_t>(picks[1])];
    Cell goal = interior[static_cast<size_t>(picks[2])];
    SokobanBoard board = with_layout(player, box, goal, cfg);
    if (board.solvable()) return board;
  }
  throw Error(ErrorCode::generation_failure,
              "sokoban: no solvable layout after bounded retries (config bug?)");
}

SokobanBoard SokobanBoard::with_layout(Cell player, Cell box, Cell goal,
                                       const SokobanConfig& cfg) {
  SokobanBoard board;
  board.cfg_ = cfg;
  board.player_ = player;
  board.box_ = box;
  board.goal_ = goal;
  for (Cell c : {player, box, goal}) {
    if (!board.in_bounds(c) || board.is_wall(c)) {
      throw Error(ErrorCode::invalid_argument, "sokoban: entity on wall or out of bounds");
    }
  }
  if (player == box) throw Error(ErrorCode::invalid_argument, "sokoban: player on box");
  return board;
}

bool SokobanBoard::in_bounds(Cell c) const {
  return c.row >= 0 && c.row < cfg_.rows && c.col >= 0 && c.col < cfg_.cols;
}

bool SokobanBoard::is_wall(Cell c) const {
  return c.row == 0 || c.row == cfg_.rows - 1 || c.col == 0 || c.col == cfg_.cols - 1;
}

SokobanBoard::MoveResult SokobanBoard::move(Direction dir) {
  if (terminal()) throw Error(ErrorCode::terminal_state, "sokoban: board is terminal");
  MoveResult result;
  Cell next = neighbor(player_, dir);
  if (!in_bounds(next) || is_wall(next)) return result;
  if (next == box_) {
    Cell box_next = neighbor(box_, dir);
    if (!in_bounds(box_next) || is_wall(box_next)) return result;  // blocked push
    box_ = box_next;
    player_ = next;
    result.moved = true;
    result.pushed = true;
  } else {
    player_ = next;
    result.moved = true;
  }
  result.terminal = terminal();
  result.success = success();
  return result;
}

bool SokobanBoard::solvable() const {
  if (terminal()) return true;
  // BFS over (player, box) pairs under push dynamics.
  const int cells = cfg_.rows * cfg_.cols;
  auto encode = [&](Cell p, Cell b) {
    return (p.row * cfg_.cols + p.col) * cells + (b.row * cfg_.cols + b.col);
  };
  std::vector<bool> seen(static_cast<size_t>(cells) * static_cast<size_t>(cells), false);
  std::deque<std::pair<Cell, Cell>> frontier{{player_, box_}};
  seen[static_cast<size_t>(encode(player_, box_))] = true;
  while (!frontier.empty()) {
    auto [p, b] = frontier.front();
    frontier.pop_front();
    for (Direction dir : kDirections) {
      Cell np = neighbor(p, dir);
      if (!in_bounds(np) || is_wall(np)) continue;
      Cell nb = b;
      if (np == b) {
        nb = neighbor(b, dir);
        if (!in_bounds(nb) || is_wall(nb)) continue;
      }
      if (nb == goal_) return true;
      size_t key = static_cast<size_t>(encode(np, nb));
      if (seen[key]) continue;
      seen[key] = true;
      frontier.push_back({np, nb});
    }
  }
  return false;
}

std::string SokobanBoard::render() const {
  std::ostringstream out;
  out << "sokoban " << cfg_.rows << "x" << cfg_.cols
      << " | # wall | P player | B box | G goal | . floor\n";
  out << " ";
  for (int c = 0; c < cfg_.cols; ++c) out << " " << c;
  out << "\n";
  for (int r = 0; r < cfg_.rows; ++r) {
    out << r;
    for (int c = 0; c < cfg_.cols; ++c) {
      Cell cell{r, c};
      out << " ";
      if (is_wall(cell)) {
        out << "#";
      } else if (cell == player_) {
        out << "P";
      } else if (cell == box_) {
        out << "B";
      } else if (cell == goal_) {
        out << "G";
      } else {
        out << ".";
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace gridmind
