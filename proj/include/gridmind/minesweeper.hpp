#pragma once

#include <string>
#include <vector>

#include "gridmind/rng.hpp"
#include "gridmind/types.hpp"

namespace gridmind {

struct MinesweeperConfig {
  int rows = 5;
  int cols = 5;
  int mines = 3;
};

// 5x5 board with 3 mines. Reveal-only action set; revealing a zero cell
// cascades over the 8-connected zero region plus its numbered boundary.
// Win when every non-mine cell is revealed, lose on revealing a mine.
class MinesweeperBoard {
 public:
  static MinesweeperBoard generate(Rng& rng, const MinesweeperConfig& cfg = {});
  // Fixed mine layout, for tests and fixtures.
  static MinesweeperBoard with_mines(const std::vector<Cell>& mines,
                                     const MinesweeperConfig& cfg = {});

  int rows() const { return cfg_.rows; }
  int cols() const { return cfg_.cols; }
  int mine_count() const { return cfg_.mines; }
  int safe_cell_count() const { return cfg_.rows * cfg_.cols - cfg_.mines; }

  bool in_bounds(Cell c) const;
  bool is_mine(Cell c) const;
  bool is_revealed(Cell c) const;
  int adjacency(Cell c) const;
  int revealed_count() const { return revealed_count_; }

  bool won() const { return won_; }
  bool lost() const { return lost_; }
  bool terminal() const { return won_ || lost_; }

  struct RevealResult {
    bool exploded = false;
    bool won = false;
    std::vector<Cell> newly_revealed;  // row-major order
  };

  // Throws already_revealed / illegal_action on bad cells.
  RevealResult reveal(Cell c);

  std::vector<Cell> unrevealed_cells() const;  // row-major
  std::string render() const;

  bool operator==(const MinesweeperBoard&) const = default;

 private:
  MinesweeperConfig cfg_;
  std::vector<bool> mine_;
  std::vector<bool> revealed_;
  std::vector<int> adjacency_;
  int revealed_count_ = 0;
  bool won_ = false;
  bool lost_ = false;

  size_t index(Cell c) const {
    return static_cast<size_t>(c.row) * static_cast<size_t>(cfg_.cols) +
           static_cast<size_t>(c.col);
  }
  void fill_adjacency();
};

}  // namespace gridmind
