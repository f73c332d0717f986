#include "gridmind/frozen_lake.hpp"

#include <deque>
#include <sstream>

namespace gridmind {

namespace {
constexpr int kGenerationRetryLimit = 10000;
constexpr Direction kDirections[] = {Direction::up, Direction::down, Direction::left,
                                     Direction::right};
}  // namespace

FrozenLakeBoard FrozenLakeBoard::generate(Rng& rng, const FrozenLakeConfig& cfg) {
  const int total = cfg.rows * cfg.cols;
  if (cfg.holes <= 0 || cfg.holes > total - 2) {
    throw Error(ErrorCode::invalid_argument, "frozen_lake: bad hole count");
  }
  Cell start{0, 0};
  Cell goal{cfg.rows - 1, cfg.cols - 1};
  // Candidate cells exclude start and goal.
  std::vector<Cell> candidates;
  for (int r = 0; r < cfg.rows; ++r) {
    for (int c = 0; c < cfg.cols; ++c) {
      Cell cell{r, c};
      if (cell == start || cell == goal) continue;
      candidates.push_back(cell);
    }
  }
  for (int attempt = 0; attempt < kGenerationRetryLimit; ++attempt) {
    std::vector<int> picks = rng.sample_indices(static_cast<int>(candidates.size()), cfg.holes);
    std::vector<Cell> holes;
    holes.reserve(picks.size());
    for (int idx : picks) holes.push_back(candidates[static_cast<size_t>(idx)]);
    FrozenLakeBoard board = with_layout(holes, start, goal, cfg);
    if (board.reachable()) return board;
  }
  throw Error(ErrorCode::generation_failure,
              "frozen_lake: no solvable layout after bounded retries (config bug?)");
}

FrozenLakeBoard FrozenLakeBoard::with_layout(const std::vector<Cell>& holes, Cell start,
                                             Cell goal, const FrozenLakeConfig& cfg) {
  FrozenLakeBoard board;
  board.cfg_ = cfg;
  board.hole_.assign(static_cast<size_t>(cfg.rows) * static_cast<size_t>(cfg.cols), false);
  board.start_ = start;
  board.goal_ = goal;
  board.agent_ = start;
  if (start == goal) throw Error(ErrorCode::invalid_argument, "frozen_lake: start == goal");
  for (Cell h : holes) {
    if (!board.in_bounds(h)) throw Error(ErrorCode::invalid_argument, "frozen_lake: hole out of bounds");
    if (h == start || h == goal) {
      throw Error(ErrorCode::invalid_argument, "frozen_lake: hole on start or goal");
    }
    if (board.hole_[board.index(h)]) {
      throw Error(ErrorCode::invalid_argument, "frozen_lake: duplicate hole");
    }
    board.hole_[board.index(h)] = true;
  }
  return board;
}

bool FrozenLakeBoard::in_bounds(Cell c) const {
  return c.row >= 0 && c.row < cfg_.rows && c.col >= 0 && c.col < cfg_.cols;
}

bool FrozenLakeBoard::is_hole(Cell c) const { return hole_[index(c)]; }

int FrozenLakeBoard::hole_count() const {
  int count = 0;
  for (bool h : hole_) count += h ? 1 : 0;
  return count;
}

FrozenLakeBoard::MoveResult FrozenLakeBoard::move(Direction dir) {
  if (terminal_) throw Error(ErrorCode::terminal_state, "frozen_lake: board is terminal");
  MoveResult result;
  Cell next = neighbor(agent_, dir);
  if (!in_bounds(next)) {
    // Off-grid: the agent stays put; the step still counts.
    return result;
  }
  agent_ = next;
  result.moved = true;
  if (is_hole(next)) {
    terminal_ = true;
    success_ = false;
  } else if (next == goal_) {
    terminal_ = true;
    success_ = true;
  }
  result.terminal = terminal_;
  result.success = success_;
  return result;
}

bool FrozenLakeBoard::reachable() const {
  std::vector<bool> seen(hole_.size(), false);
  std::deque<Cell> frontier{start_};
  seen[index(start_)] = true;
  while (!frontier.empty()) {
    Cell cur = frontier.front();
    frontier.pop_front();
    if (cur == goal_) return true;
    for (Direction dir : kDirections) {
      Cell n = neighbor(cur, dir);
      if (!in_bounds(n) || seen[index(n)] || hole_[index(n)]) continue;
      seen[index(n)] = true;
      frontier.push_back(n);
    }
  }
  return false;
}

std::string FrozenLakeBoard::render() const {
  std::ostringstream out;
  out << "frozen_lake " << cfg_.rows << "x" << cfg_.cols
      << " | P player | S start | G goal | O hole | . frozen\n";
  out << " ";
  for (int c = 0; c < cfg_.cols; ++c) out << " " << c;
  out << "\n";
  for (int r = 0; r < cfg_.rows; ++r) {
    out << r;
    for (int c = 0; c < cfg_.cols; ++c) {
      Cell cell{r, c};
      out << " ";
      if (cell == agent_) {
        out << "P";
      } else if (is_hole(cell)) {
        out << "O";
      } else if (cell == goal_) {
        out << "G";
      } else if (cell == start_) {
        out << "S";
      } else {
        out << ".";
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace gridmind
