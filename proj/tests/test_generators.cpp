#include <catch2/catch_amalgamated.hpp>

#include "exactroot/error.hpp"
#include "exactroot/generators.hpp"
#include "exactroot/io.hpp"
#include "exactroot/oracle.hpp"

using namespace exactroot;

namespace {

std::vector<int> component_sizes(const Graph& g) {
  std::vector<int> out;
  for (const auto& c : connected_components(g)) {
    out.push_back(static_cast<int>(c.size()));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST_CASE("G_S component sizes") {
  CHECK(component_sizes(gen_GS({4, 6})) == std::vector<int>{10, 9});
  CHECK(component_sizes(gen_GS({2, 3})) == std::vector<int>{5, 4});
  CHECK(component_sizes(gen_GS({2, 3, 4})) == std::vector<int>{9, 7});
  CHECK_THROWS_AS(gen_GS({3, 3}), PreconditionError);
  CHECK_THROWS_AS(gen_GS({1, 3}), PreconditionError);
  CHECK_THROWS_AS(gen_GS({}), PreconditionError);
}

TEST_CASE("T_L trees") {
  const Graph a = gen_TL({4, 6}, {4, 6});
  const Graph b = gen_TL({4, 6}, {6, 4});
  CHECK(a.order() == 19);
  CHECK(b.order() == 19);
  CHECK(is_tree(a));
  CHECK(tree_canonical_form(a) != tree_canonical_form(b));
  CHECK(gen_TL({2, 3}, {3, 2}).order() == 9);
  CHECK_THROWS_AS(gen_TL({2, 3}, {2, 2}), PreconditionError);
}

TEST_CASE("T_L squares to G_S") {
  for (auto perm : {std::vector<int>{2, 3}, std::vector<int>{3, 2}}) {
    CHECK(small_graph_isomorphic(exact_square(gen_TL({2, 3}, perm)), gen_GS({2, 3})));
  }
  CHECK(small_graph_isomorphic(exact_square(gen_TL({4, 6}, {6, 4})), gen_GS({4, 6}), 19));
}

TEST_CASE("fixed-seed outputs") {
  CHECK(random_tree(2, 99) == Graph(2, {{0, 1}}));
  CHECK(io::emit_graph6(random_tree(5, 1)) == "DR_");
  CHECK(io::emit_graph6(gen_GS({2, 3})) == "HqS?GGD");
  CHECK(io::emit_graph6(gen_TL({2, 3}, {3, 2})) == "HqG___G");
  CHECK(random_tree(40, 3) == random_tree(40, 3));
  CHECK(random_clique_tree(40, 3) == random_clique_tree(40, 3));
}

TEST_CASE("random trees and clique trees") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 30);
    const Graph t = random_tree(n, seed);
    CHECK(t.order() == n);
    CHECK(is_tree(t));
    const Graph w = random_clique_tree(n, seed);
    CHECK(w.order() == n);
    CHECK(is_clique_tree(w));
  }
}

TEST_CASE("bounded draws stay in range") {
  std::mt19937_64 rng(1);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL}) {
    for (int i = 0; i < 200; ++i) CHECK(uniform_below(rng, bound) < bound);
  }
}
