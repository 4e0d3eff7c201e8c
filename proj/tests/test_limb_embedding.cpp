#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "exactroot/error.hpp"
#include "exactroot/generators.hpp"
#include "exactroot/limb_embedding.hpp"
#include "exactroot/oracle.hpp"

using namespace exactroot;

namespace {

const Graph kP3(3, {{0, 1}, {1, 2}});
const Graph kStar3(4, {{0, 1}, {1, 2}, {1, 3}});  // center 1
const Graph kK13(4, {{0, 1}, {0, 2}, {0, 3}});    // center 0
const Graph kP5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});

Vertex some_leaf(const Graph& t) {
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) == 1) return v;
  }
  return 0;
}

bool injective(const VertexMapping& m) {
  const VertexSet img = m.image();
  return img.size() == m.size();
}

}  // namespace

TEST_CASE("rooted limbs") {
  CHECK(limbs_of_rooted(kP3, 0) == std::vector<Limb>{{1, 2, 1}, {0, 1, 2}});
  CHECK(limbs_of_rooted(kStar3, 0) ==
        std::vector<Limb>{{1, 2, 1}, {1, 3, 1}, {0, 1, 2}});
  CHECK(limbs_of_rooted(Graph(2, {{0, 1}}), 0) == std::vector<Limb>{{0, 1, 1}});
  CHECK_THROWS_AS(limbs_of_rooted(kP3, 1), PreconditionError);
}

TEST_CASE("unrooted limbs") {
  CHECK(limbs_of_unrooted(Graph(2, {{0, 1}})).size() == 2);
  CHECK(limbs_of_unrooted(kP3).size() == 4);
  const auto star = limbs_of_unrooted(kK13);
  CHECK(star.size() == 6);
  for (const Limb& l : star) CHECK(l.height == (l.root == 0 ? 1 : 2));
  CHECK_THROWS_AS(limbs_of_unrooted(Graph(1)), PreconditionError);
}

TEST_CASE("embedding matrix on small pairs") {
  const EmbeddingMatrix m = build_embedding_matrix(kP3, 0, kK13);
  const int last = m.last_row();
  int units = 0;
  for (int c = 0; c < static_cast<int>(m.cols.size()); ++c) {
    if (!m.at(last, c)) continue;
    ++units;
    const VertexMapping f = retrace_embedding(m, last, c);
    CHECK(f.size() == 3);
    CHECK(f.at(0) == m.cols[c].root);
    CHECK(injective(f));
    CHECK(is_edge_preserving(f, kP3, kK13));
  }
  // Only limbs rooted at a leaf of K_{1,3} have room for P3.
  CHECK(units == 3);
  CHECK_THROWS_AS(retrace_embedding(m, last, m.column(0, 1)), PreconditionError);

  const EmbeddingMatrix bad = build_embedding_matrix(kK13, 1, kP5);
  for (int c = 0; c < static_cast<int>(bad.cols.size()); ++c) {
    CHECK_FALSE(bad.at(bad.last_row(), c));
  }
}

TEST_CASE("subtree isomorphism against exhaustive search") {
  CHECK(subtree_isomorphic(kP3, kK13));
  CHECK_FALSE(subtree_isomorphic(kK13, kP5));
  CHECK(subtree_isomorphic(kP5, kP5));
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph s = random_tree(2 + static_cast<int>(seed % 5), seed);
    const Graph t = random_tree(2 + static_cast<int>(seed % 7), seed + 1000);
    INFO("seed " << seed);
    CHECK(subtree_isomorphic(s, t) == bruteforce_subtree_embedding(s, t));
  }
}

TEST_CASE("retraced embeddings are valid") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph s = random_tree(2 + static_cast<int>(seed % 5), seed);
    const Graph t = random_tree(4 + static_cast<int>(seed % 6), seed + 77);
    const EmbeddingMatrix m = build_embedding_matrix(s, some_leaf(s), t);
    for (int c = 0; c < static_cast<int>(m.cols.size()); ++c) {
      if (!m.at(m.last_row(), c)) continue;
      const VertexMapping f = retrace_embedding(m, m.last_row(), c);
      CHECK(f.size() == static_cast<std::size_t>(s.order()));
      CHECK(injective(f));
      CHECK(is_edge_preserving(f, s, t));
    }
  }
}

TEST_CASE("covering entries reach every required vertex") {
  // Target: path 0..4. Columns pointing towards 4 must reach it.
  const EmbeddingMatrix m = build_embedding_matrix(kP3, 0, kP5, std::nullopt, {4});
  const int last = m.last_row();
  std::set<Vertex> roots;
  for (int c = 0; c < static_cast<int>(m.cols.size()); ++c) {
    if (!m.covering_at(last, c)) continue;
    CHECK(m.at(last, c));
    if (m.required_beyond[c] == 0) continue;
    const VertexMapping f = retrace_covering_embedding(m, last, c);
    const VertexSet img = f.image();
    CHECK(std::binary_search(img.begin(), img.end(), 4));
    roots.insert(m.cols[c].root);
  }
  CHECK(roots == std::set<Vertex>{2});
}
