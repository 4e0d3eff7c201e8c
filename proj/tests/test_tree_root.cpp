#include <catch2/catch_amalgamated.hpp>

#include "exactroot/error.hpp"
#include "exactroot/generators.hpp"
#include "exactroot/oracle.hpp"
#include "exactroot/tree_root.hpp"

using namespace exactroot;

namespace {

const Graph kK2(2, {{0, 1}});
const Graph kK3(3, {{0, 1}, {0, 2}, {1, 2}});
const Graph kBowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
const Graph kC4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});

void check_answer(const Graph& g, const TreeRootAnswer& a) {
  REQUIRE(a.decision);
  REQUIRE(a.root);
  CHECK(is_tree(*a.root));
  CHECK(exact_square(*a.root) == g);
  CHECK(a.iso_to_input == VertexMapping::identity(g.order()));
}

}  // namespace

TEST_CASE("canonical trees") {
  CHECK(canonical_tree(kK3).tree == Graph(4, {{0, 3}, {1, 3}, {2, 3}}));
  CHECK(canonical_tree(kK2).tree == Graph(3, {{0, 2}, {1, 2}}));
  const CanonicalTree bow = canonical_tree(kBowtie);
  CHECK(bow.tree ==
        Graph(7, {{0, 5}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {4, 6}}));
  CHECK(bow.is_block(5));
  CHECK(bow.block_of(6) == 1);
  CHECK(canonical_tree(Graph(1)).tree == kK2);
  CHECK_THROWS_AS(canonical_tree(kC4), PreconditionError);
}

TEST_CASE("clique-tree test through the canonical tree") {
  CHECK(clique_tree_via_canonical(Graph(4, {{0, 1}, {1, 2}, {1, 3}})));
  CHECK(clique_tree_via_canonical(kBowtie));
  CHECK_FALSE(clique_tree_via_canonical(kC4));
}

TEST_CASE("stage one") {
  CHECK_FALSE(stage1(kC4));
  CHECK_FALSE(stage1(Graph(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})));
  const auto s = stage1(Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}));
  REQUIRE(s);
  CHECK(s->c1_vertices == VertexSet{0, 1, 2});
  CHECK(s->hat_c2.order() == 1);
  const auto swapped =
      stage1(Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}), true);
  REQUIRE(swapped);
  CHECK(swapped->c1_vertices == VertexSet{3, 4, 5});
}

TEST_CASE("restriction") {
  const CanonicalTree c = canonical_tree(kBowtie);
  CHECK(restriction_iso(VertexMapping::identity(7), c, c) ==
        VertexMapping::identity(5));
  CHECK_THROWS_AS(
      restriction_iso(VertexMapping({{0, 5}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 0}, {6, 6}}),
                      c, c),
      PreconditionError);
}

TEST_CASE("tree completion") {
  // W1 = K2 on {0,1}, W2 = path 2-3-4, the block of W1 goes to the middle.
  const Graph g(5, {{0, 1}, {2, 3}, {3, 4}});
  const TreeCompletion a = complete_tree_root(canonical_tree(kK2), g, VertexMapping({{0, 1}}));
  CHECK(is_tree(a.tree));
  CHECK(a.tree.order() == 5);
  CHECK(is_isomorphism(a.psi, exact_square(a.tree), g));

  const Graph two_k3(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  const TreeCompletion b = complete_tree_root(canonical_tree(kK3), two_k3, VertexMapping({{0, 2}}));
  CHECK(is_tree(b.tree));
  CHECK(is_isomorphism(b.psi, exact_square(b.tree), two_k3));

  const Graph k2k1(3, {{0, 1}});
  const TreeCompletion c = complete_tree_root(canonical_tree(kK2), k2k1, VertexMapping({{0, 0}}));
  CHECK(c.tree == Graph(3, {{0, 2}, {1, 2}}));
  CHECK(is_isomorphism(c.psi, exact_square(c.tree), k2k1));

  // phi must send the block to a vertex of W2 that exists.
  CHECK_THROWS_AS(complete_tree_root(canonical_tree(kK2), k2k1, VertexMapping({{0, 3}})),
                  PreconditionError);
}

TEST_CASE("recognizer examples") {
  const Graph k3k1(4, {{0, 1}, {0, 2}, {1, 2}});
  const TreeRootAnswer star = recognize_tree_root(k3k1);
  check_answer(k3k1, star);
  CHECK(*star.root == Graph(4, {{0, 3}, {1, 3}, {2, 3}}));

  const Graph p5sq(5, {{0, 2}, {2, 4}, {1, 3}});
  const TreeRootAnswer p5 = recognize_tree_root(p5sq);
  check_answer(p5sq, p5);
  CHECK(*p5.root == Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));

  CHECK_FALSE(recognize_tree_root(Graph(4, {{1, 2}, {2, 3}})).decision);
  CHECK_FALSE(recognize_tree_root(Graph(1)).decision);
  CHECK_FALSE(recognize_tree_root(kC4).decision);

  const Graph two_k3(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  check_answer(two_k3, recognize_tree_root(two_k3));

  const TreeRootAnswer k2 = recognize_tree_root(Graph(2));
  check_answer(Graph(2), k2);
  CHECK(*k2.root == kK2);
}

TEST_CASE("square needing more than one retrace per entry") {
  const Graph t(8, {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 6}, {4, 5}, {5, 7}});
  const Graph g = exact_square(t);
  bool fallback = false;
  for (bool swap : {false, true}) {
    TreeRootOptions opts;
    opts.swap_components = swap;
    const TreeRootAnswer a = recognize_tree_root(g, opts);
    check_answer(g, a);
    fallback |= a.used_coverage_fallback;
  }
  CHECK(fallback);
}

TEST_CASE("both component orders agree on all trees up to 6 vertices") {
  for (int n = 2; n <= 6; ++n) {
    for_each_labeled_tree(n, [](const Graph& t) {
      const Graph g = exact_square(t);
      for (bool swap : {false, true}) {
        TreeRootOptions opts;
        opts.swap_components = swap;
        check_answer(g, recognize_tree_root(g, opts));
      }
    });
  }
}

TEST_CASE("no root where the oracle finds none") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int a = 1 + static_cast<int>(seed % 4);
    const int b = 1 + static_cast<int>((seed / 4) % 4);
    const Graph g = disjoint_union(random_clique_tree(a, seed), random_clique_tree(b, seed + 9));
    const bool expected = !bruteforce_tree_roots(g).empty();
    INFO("seed " << seed);
    CHECK(recognize_tree_root(g).decision == expected);
  }
}

TEST_CASE("large random trees") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Graph g = exact_square(random_tree(400, seed));
    check_answer(g, recognize_tree_root(g));
  }
}
