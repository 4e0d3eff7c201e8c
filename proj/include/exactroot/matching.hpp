#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace exactroot {

/// 0/1 matrix with `rows` x `cols` entries, stored as the column indices of
/// the unit entries of each row.
class BipartiteMatrix {
 public:
  BipartiteMatrix(int rows, int cols);
  BipartiteMatrix(int rows, int cols,
                  const std::vector<std::pair<int, int>>& ones);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  void set(int row, int col);
  bool at(int row, int col) const;
  const std::vector<int>& row_ones(int row) const { return ones_[row]; }
  std::size_t unit_count() const;

 private:
  int rows_;
  int cols_;
  std::vector<std::vector<int>> ones_;  // sorted per row
};

/// A set of unit entries, no two sharing a row or a column. Pairs are
/// (row, col) sorted by row.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  bool operator==(const Matching&) const = default;
};

/// Maximum-cardinality matching (Hopcroft-Karp). Rows and columns are
/// scanned in increasing order, so the result is a function of the input.
///
/// When `seed` is given the search starts from it; augmenting paths never
/// unmatch a vertex, so every row and column matched by `seed` stays matched.
Matching maximum_matching(const BipartiteMatrix& m, const Matching& seed = {});

bool is_complete_for_rows(const BipartiteMatrix& m, const Matching& match);

/// True when `match` is a matching of `m` (unit entries, rows and columns
/// used at most once).
bool is_valid_matching(const BipartiteMatrix& m, const Matching& match);

}  // namespace exactroot
