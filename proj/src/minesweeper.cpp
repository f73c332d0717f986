#include "gridmind/minesweeper.hpp"

#include <deque>
#include <sstream>

namespace gridmind {

MinesweeperBoard MinesweeperBoard::generate(Rng& rng, const MinesweeperConfig& cfg) {
  const int total = cfg.rows * cfg.cols;
  if (cfg.mines <= 0 || cfg.mines >= total) {
    throw Error(ErrorCode::invalid_argument, "minesweeper: mine count must be in (0, cells)");
  }
  std::vector<int> picks = rng.sample_indices(total, cfg.mines);
  std::vector<Cell> mines;
  mines.reserve(picks.size());
  for (int idx : picks) mines.push_back({idx / cfg.cols, idx % cfg.cols});
  return with_mines(mines, cfg);
}

MinesweeperBoard MinesweeperBoard::with_mines(const std::vector<Cell>& mines,
                                              const MinesweeperConfig& cfg) {
  MinesweeperBoard board;
  board.cfg_ = cfg;
  board.cfg_.mines = static_cast<int>(mines.size());
  const size_t total = static_cast<size_t>(cfg.rows) * static_cast<size_t>(cfg.cols);
  board.mine_.assign(total, false);
  board.revealed_.assign(total, false);
  board.adjacency_.assign(total, 0);
  for (Cell m : mines) {
    if (!board.in_bounds(m)) {
      throw Error(ErrorCode::invalid_argument, "minesweeper: mine out of bounds");
    }
    if (board.mine_[board.index(m)]) {
      throw Error(ErrorCode::invalid_argument, "minesweeper: duplicate mine cell");
    }
    board.mine_[board.index(m)] = true;
  }
  board.fill_adjacency();
  return board;
}

void MinesweeperBoard::fill_adjacency() {
  for (int r = 0; r < cfg_.rows; ++r) {
    for (int c = 0; c < cfg_.cols; ++c) {
      int count = 0;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          Cell n{r + dr, c + dc};
          if (in_bounds(n) && mine_[index(n)]) ++count;
        }
      }
      adjacency_[index({r, c})] = count;
    }
  }
}

bool MinesweeperBoard::in_bounds(Cell c) const {
  return c.row >= 0 && c.row < cfg_.rows && c.col >= 0 && c.col < cfg_.cols;
}

bool MinesweeperBoard::is_mine(Cell c) const { return mine_[index(c)]; }
bool MinesweeperBoard::is_revealed(Cell c) const { return revealed_[index(c)]; }
int MinesweeperBoard::adjacency(Cell c) const { return adjacency_[index(c)]; }

MinesweeperBoard::RevealResult MinesweeperBoard::reveal(Cell c) {
  if (terminal()) {
    throw Error(ErrorCode::terminal_state, "minesweeper: board is terminal");
  }
  if (!in_bounds(c)) {
    throw Error(ErrorCode::illegal_action, "minesweeper: cell out of bounds");
  }
  if (revealed_[index(c)]) {
    throw Error(ErrorCode::already_revealed, "minesweeper: cell already revealed");
  }

  RevealResult result;
  if (mine_[index(c)]) {
    revealed_[index(c)] = true;
    ++revealed_count_;
    lost_ = true;
    result.exploded = true;
    result.newly_revealed.push_back(c);
    return result;
  }

  // Cascade: BFS over the 8-connected zero-adjacency region, revealing the
  // region and its numbered boundary.
  std::vector<bool> queued(mine_.size(), false);
  std::deque<Cell> frontier;
  frontier.push_back(c);
  queued[index(c)] = true;
  while (!frontier.empty()) {
    Cell cur = frontier.front();
    frontier.pop_front();
    if (revealed_[index(cur)]) continue;
    revealed_[index(cur)] = true;
    ++revealed_count_;
    if (adjacency_[index(cur)] != 0) continue;
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        Cell n{cur.row + dr, cur.col + dc};
        if (!in_bounds(n) || queued[index(n)] || revealed_[index(n)] || mine_[index(n)]) continue;
        queued[index(n)] = true;
        frontier.push_back(n);
      }
    }
  }

  // Row-major collection of everything newly revealed this call.
  // (queued marks the BFS set; singleton reveals were queued too.)
  for (int r = 0; r < cfg_.rows; ++r) {
    for (int col = 0; col < cfg_.cols; ++col) {
      Cell cell{r, col};
      if (queued[index(cell)]) result.newly_revealed.push_back(cell);
    }
  }

  if (revealed_count_ == safe_cell_count()) {
    won_ = true;
    result.won = true;
  }
  return result;
}

std::vector<Cell> MinesweeperBoard::unrevealed_cells() const {
  std::vector<Cell> out;
  for (int r = 0; r < cfg_.rows; ++r) {
    for (int c = 0; c < cfg_.cols; ++c) {
      if (!revealed_[index({r, c})]) out.push_back({r, c});
    }
  }
  return out;
}

std::string MinesweeperBoard::render() const {
  std::ostringstream out;
  out << "minesweeper " << cfg_.rows << "x" << cfg_.cols << " | . unrevealed | 0-8 adjacent mine count | * mine\n";
  out << " ";
  for (int c = 0; c < cfg_.cols; ++c) out << " " << c;
  out << "\n";
  for (int r = 0; r < cfg_.rows; ++r) {
    out << r;
    for (int c = 0; c < cfg_.cols; ++c) {
      Cell cell{r, c};
      out << " ";
      if (!revealed_[index(cell)]) {
        out << ".";
      } else if (mine_[index(cell)]) {
        out << "*";
      } else {
        out << adjacency_[index(cell)];
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace gridmind
