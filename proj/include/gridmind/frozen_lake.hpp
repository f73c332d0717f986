#pragma once

#include <string>
#include <vector>

#include "gridmind/rng.hpp"
#include "gridmind/types.hpp"

namespace gridmind {

struct FrozenLakeConfig {
  int rows = 6;
  int cols = 6;
  int holes = 6;
};

// Deterministic 6x6 lake: start fixed at (0,0), goal at (rows-1, cols-1),
// 6 holes placed uniformly among the remaining cells, resampled until a
// hole-free path from start to goal exists. Off-grid moves are no-ops.
class FrozenLakeBoard {
 public:
  static FrozenLakeBoard generate(Rng& rng, const FrozenLakeConfig& cfg = {});
  static FrozenLakeBoard with_layout(const std::vector<Cell>& holes, Cell start, Cell goal,
                                     const FrozenLakeConfig& cfg = {});

  int rows() const { return cfg_.rows; }
  int cols() const { return cfg_.cols; }
  Cell start() const { return start_; }
  Cell goal() const { return goal_; }
  Cell agent() const { return agent_; }
  bool is_hole(Cell c) const;
  bool in_bounds(Cell c) const;
  int hole_count() const;

  bool terminal() const { return terminal_; }
  bool success() const { return success_; }

  struct MoveResult {
    bool moved = false;
    bool terminal = false;
    bool success = false;
  };

  MoveResult move(Direction dir);

  // True when some hole-avoiding path start -> goal exists. Used by the
  // generator; the independent plan-producing solver lives in oracles.
  bool reachable() const;

  std::string render() const;

  bool operator==(const FrozenLakeBoard&) const = default;

 private:
  FrozenLakeConfig cfg_;
  std::vector<bool> hole_;
  Cell start_{0, 0};
  Cell goal_{5, 5};
  Cell agent_{0, 0};
  bool terminal_ = false;
  bool success_ = false;

  size_t index(Cell c) const {
    return static_cast<size_t>(c.row) * static_cast<size_t>(cfg_.cols) +
           static_cast<size_t>(c.col);
  }
};

}  // namespace gridmind
