#pragma once

#include <string>

#include "gridmind/rng.hpp"
#include "gridmind/types.hpp"

namespace gridmind {

struct SokobanConfig {
  int rows = 6;
  int cols = 6;
};

// 6x6 grid whose outer ring is wall, leaving a wall-free 4x4 interior.
// Single box, single goal. The player pushes the box one cell when the cell
// behind it is free; pushes into walls and moves into walls are no-ops.
// Success when the box reaches the goal. There is no failure terminal: a
// deadlocked box just runs the episode into its step limit.
class SokobanBoard {
 public:
  static SokobanBoard generate(Rng& rng, const SokobanConfig& cfg = {});
  static SokobanBoard with_layout(Cell player, Cell box, Cell goal,
                                  const SokobanConfig& cfg = {});

  int rows() const { return cfg_.rows; }
  int cols() const { return cfg_.cols; }
  Cell player() const { return player_; }
  Cell box() const { return box_; }
  Cell goal() const { return goal_; }

  bool in_bounds(Cell c) const;
  bool is_wall(Cell c) const;
  bool terminal() const { return box_ == goal_; }
  bool success() const { return terminal(); }

  struct MoveResult {
    bool moved = false;
    bool pushed = false;
    bool terminal = false;
    bool success = false;
  };

  MoveResult move(Direction dir);

  // Generator-side reachability check: can the box be pushed to the goal
  // from this configuration? The plan-producing solver lives in oracles.
  bool solvable() const;

  std::string render() const;

  bool operator==(const SokobanBoard&) const = default;

 private:
  SokobanConfig cfg_;
  Cell player_{1, 1};
  Cell box_{2, 2};
  Cell goal_{3, 3};
};

}  // namespace gridmind
