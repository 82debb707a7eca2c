#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace grouplang {

/// Grid of label sets indexed 1-based, as in g_ij^k. `level` counts the
/// pivots applied so far. Rows/columns outside the active set (useless
/// vertices) are kept empty and skipped by closure.
template <class CellT>
class LabelMatrix {
 public:
  LabelMatrix(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        cells_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)),
        active_(static_cast<std::size_t>(cols > rows ? cols : rows) + 1, true) {
    active_[0] = false;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int level() const noexcept { return level_; }
  void set_level(int k) noexcept { level_ = k; }

  CellT& at(int i, int j) {
    assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
    return cells_[index(i, j)];
  }
  const CellT& at(int i, int j) const {
    assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
    return cells_[index(i, j)];
  }

  bool active(int v) const noexcept {
    return v >= 1 && static_cast<std::size_t>(v) < active_.size() && active_[static_cast<std::size_t>(v)];
  }
  void set_active(int v, bool on) { active_.at(static_cast<std::size_t>(v)) = on; }

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j - 1);
  }

  int rows_;
  int cols_;
  int level_ = 0;
  std::vector<CellT> cells_;
  std::vector<bool> active_;
};

}  // namespace grouplang
