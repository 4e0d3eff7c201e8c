#include "exactroot/matching.hpp"

#include <algorithm>
#include <limits>

#include "exactroot/error.hpp"

namespace exactroot {

BipartiteMatrix::BipartiteMatrix(int rows, int cols)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix shape");
  ones_.resize(static_cast<std::size_t>(rows));
}

BipartiteMatrix::BipartiteMatrix(int rows, int cols,
                                 const std::vector<std::pair<int, int>>& ones)
    : BipartiteMatrix(rows, cols) {
  for (auto [r, c] : ones) set(r, c);
}

void BipartiteMatrix::set(int row, int col) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw PreconditionError("matrix position out of bounds");
  }
  auto& list = ones_[row];
  auto it = std::lower_bound(list.begin(), list.end(), col);
  if (it == list.end() || *it != col) list.insert(it, col);
}

bool BipartiteMatrix::at(int row, int col) const {
  const auto& list = ones_[row];
  return std::binary_search(list.begin(), list.end(), col);
}

std::size_t BipartiteMatrix::unit_count() const {
  std::size_t total = 0;
  for (const auto& list : ones_) total += list.size();
  return total;
}

namespace {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteMatrix& m)
      : m_(m),
        row_match_(static_cast<std::size_t>(m.rows()), -1),
        col_match_(static_cast<std::size_t>(m.cols()), -1),
        dist_(static_cast<std::size_t>(m.rows()), 0) {}

  void seed(const Matching& s) {
    for (auto [r, c] : s.pairs) {
      row_match_[r] = c;
      col_match_[c] = r;
    }
  }

  Matching run() {
    while (bfs()) {
      for (int r = 0; r < m_.rows(); ++r) {
        if (row_match_[r] == -1) augment(r);
      }
    }
    Matching out;
    for (int r = 0; r < m_.rows(); ++r) {
      if (row_match_[r] != -1) out.pairs.emplace_back(r, row_match_[r]);
    }
    return out;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::vector<int> queue;
    for (int r = 0; r < m_.rows(); ++r) {
      if (row_match_[r] == -1) {
        dist_[r] = 0;
        queue.push_back(r);
      } else {
        dist_[r] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int r = queue[head];
      for (int c : m_.row_ones(r)) {
        const int next = col_match_[c];
        if (next == -1) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[r] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  // Iterative layered DFS; `cursor` keeps the per-row scan position so each
  // phase touches every edge at most once.
  bool augment(int start) {
    struct Frame {
      int row;
      std::size_t next;
    };
    std::vector<Frame> path{{start, 0}};
    while (!path.empty()) {
      Frame& f = path.back();
      const auto& ones = m_.row_ones(f.row);
      if (f.next == ones.size()) {
        dist_[f.row] = kInf;
        path.pop_back();
        continue;
      }
      const int c = ones[f.next++];
      const int next = col_match_[c];
      if (next == -1) {
        // Flip the alternating path recorded on the stack.
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
          const int col = m_.row_ones(it->row)[it->next - 1];
          row_match_[it->row] = col;
          col_match_[col] = it->row;
        }
        return true;
      }
      if (dist_[next] == dist_[f.row] + 1) path.push_back({next, 0});
    }
    return false;
  }

  const BipartiteMatrix& m_;
  std::vector<int> row_match_;
  std::vector<int> col_match_;
  std::vector<int> dist_;
};

}  // namespace

Matching maximum_matching(const BipartiteMatrix& m, const Matching& seed) {
  if (!is_valid_matching(m, seed)) {
    throw PreconditionError("seed is not a matching of the matrix");
  }
  HopcroftKarp hk(m);
  hk.seed(seed);
  return hk.run();
}

bool is_valid_matching(const BipartiteMatrix& m, const Matching& match) {
  std::vector<char> row_used(static_cast<std::size_t>(m.rows()), 0);
  std::vector<char> col_used(static_cast<std::size_t>(m.cols()), 0);
  for (auto [r, c] : match.pairs) {
    if (r < 0 || r >= m.rows() || c < 0 || c >= m.cols()) return false;
    if (!m.at(r, c) || row_used[r] || col_used[c]) return false;
    row_used[r] = col_used[c] = 1;
  }
  return true;
}

bool is_complete_for_rows(const BipartiteMatrix& m, const Matching& match) {
  return is_valid_matching(m, match) &&
         match.size() == static_cast<std::size_t>(m.rows());
}

}  // namespace exactroot
