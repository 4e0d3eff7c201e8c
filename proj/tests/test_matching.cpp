#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "exactroot/matching.hpp"

using namespace exactroot;

namespace {

// Exhaustive maximum matching size for small matrices.
std::size_t brute_size(const BipartiteMatrix& m, int row, std::vector<char>& used) {
  if (row == m.rows()) return 0;
  std::size_t best = brute_size(m, row + 1, used);
  for (int c : m.row_ones(row)) {
    if (used[c]) continue;
    used[c] = 1;
    best = std::max(best, 1 + brute_size(m, row + 1, used));
    used[c] = 0;
  }
  return best;
}

}  // namespace

TEST_CASE("small matrices") {
  BipartiteMatrix ones(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const Matching a = maximum_matching(ones);
  CHECK(a.size() == 2);
  CHECK(is_complete_for_rows(ones, a));

  BipartiteMatrix id(3, 3, {{0, 0}, {1, 1}, {2, 2}});
  CHECK(maximum_matching(id).pairs ==
        std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}});

  BipartiteMatrix shared(2, 1, {{0, 0}, {1, 0}});
  const Matching s = maximum_matching(shared);
  CHECK(s.size() == 1);
  CHECK_FALSE(is_complete_for_rows(shared, s));

  BipartiteMatrix empty(0, 3);
  CHECK(is_complete_for_rows(empty, Matching{}));
}

TEST_CASE("matching validity") {
  BipartiteMatrix m(2, 2, {{0, 0}, {1, 1}});
  CHECK(is_valid_matching(m, Matching{{{0, 0}, {1, 1}}}));
  CHECK_FALSE(is_valid_matching(m, Matching{{{0, 1}}}));
  CHECK_FALSE(is_valid_matching(m, Matching{{{0, 0}, {0, 0}}}));
  CHECK(m.unit_count() == 2);
}

TEST_CASE("seeded matching keeps seed columns covered") {
  // Column 1 must stay matched once seeded.
  BipartiteMatrix m(2, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}});
  const Matching got = maximum_matching(m, Matching{{{0, 1}}});
  CHECK(got.size() == 2);
  bool has_col1 = false;
  for (auto [r, c] : got.pairs) has_col1 |= (c == 1);
  CHECK(has_col1);
}

TEST_CASE("agrees with exhaustive search on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int rows = static_cast<int>(rng() % 6);
    const int cols = static_cast<int>(rng() % 6) + 1;
    BipartiteMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        if (rng() % 3 == 0) m.set(r, c);
      }
    }
    std::vector<char> used(static_cast<std::size_t>(cols), 0);
    const Matching got = maximum_matching(m);
    REQUIRE(is_valid_matching(m, got));
    REQUIRE(got.size() == brute_size(m, 0, used));
  }
}
