#include <catch2/catch_amalgamated.hpp>

#include "exactroot/error.hpp"
#include "exactroot/graph.hpp"

using namespace exactroot;

namespace {

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph pentagram() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 2) % 5);
  return Graph(5, e);
}

const Graph kBowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});

}  // namespace

TEST_CASE("constructor normalizes and rejects bad edges") {
  Graph g(3, {{2, 0}, {1, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(g.size() == 2);
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), PreconditionError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST_CASE("exact square") {
  CHECK(exact_square(Graph(4, {{0, 1}, {1, 2}, {2, 3}})) ==
        Graph(4, {{0, 2}, {1, 3}}));
  CHECK(exact_square(Graph(2, {{0, 1}})) == Graph(2));
  CHECK(exact_square(Graph(4, {{0, 1}, {0, 2}, {0, 3}})) ==
        Graph(4, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(exact_square(cycle(5)) == pentagram());
  CHECK(exact_square(cycle(6)) ==
        Graph(6, {{0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}}));
}

TEST_CASE("complement") {
  CHECK(complement(Graph(3, {{0, 1}, {0, 2}, {1, 2}})) == Graph(3));
  CHECK(complement(Graph(2)) == Graph(2, {{0, 1}}));
  CHECK(complement(cycle(5)) == pentagram());
  CHECK(complement(Graph(0)) == Graph(0));
}

TEST_CASE("digraph square and complement") {
  CHECK(exact_square(Digraph(3, {{0, 1}, {1, 2}})) == Digraph(3, {{0, 2}}));
  CHECK(exact_square(Digraph(2, {{0, 1}, {1, 0}})) == Digraph(2));
  CHECK(exact_square(Digraph(3, {{0, 1}, {1, 2}, {2, 0}})) ==
        Digraph(3, {{0, 2}, {1, 0}, {2, 1}}));
  CHECK(complement(Digraph(2)) == Digraph(2, {{0, 1}, {1, 0}}));
  CHECK(complement(Digraph(3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}})) ==
        Digraph(3));
  CHECK(complement(Digraph(2, {{0, 1}})) == Digraph(2, {{1, 0}}));
  CHECK(exact_square(Digraph::symmetric(cycle(5))) ==
        Digraph::symmetric(pentagram()));
}

TEST_CASE("components") {
  using Sets = std::vector<VertexSet>;
  CHECK(connected_components(Graph(4, {{0, 1}, {0, 2}, {1, 2}})) ==
        Sets{{0, 1, 2}, {3}});
  CHECK(connected_components(Graph(3)) == Sets{{0}, {1}, {2}});
  CHECK(connected_components(Graph(5, {{0, 1}, {1, 2}, {3, 4}})) ==
        Sets{{0, 1, 2}, {3, 4}});
  CHECK(is_connected(cycle(5)));
  CHECK_FALSE(is_connected(Graph(2)));
}

TEST_CASE("block decomposition") {
  using Sets = std::vector<VertexSet>;
  auto p3 = block_decomposition(Graph(3, {{0, 1}, {1, 2}}));
  CHECK(p3.blocks == Sets{{0, 1}, {1, 2}});
  CHECK(p3.cut_vertices == VertexSet{1});
  CHECK(p3.edge_block_count(1) == 2);

  auto tri = block_decomposition(Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(tri.blocks == Sets{{0, 1, 2}});
  CHECK(tri.cut_vertices.empty());

  auto bow = block_decomposition(kBowtie);
  CHECK(bow.blocks == Sets{{0, 1, 2}, {2, 3, 4}});
  CHECK(bow.cut_vertices == VertexSet{2});
  CHECK(bow.block_membership[2] == std::vector<int>{0, 1});

  auto iso = block_decomposition(Graph(2));
  CHECK(iso.blocks == Sets{{0}, {1}});
  CHECK(iso.edge_block_count(0) == 0);
}

TEST_CASE("clique trees and predicates") {
  CHECK(is_clique_tree(Graph(4, {{0, 1}, {1, 2}, {1, 3}})));
  CHECK(is_clique_tree(kBowtie));
  CHECK_FALSE(is_clique_tree(cycle(4)));
  CHECK_FALSE(is_clique_tree(Graph(2)));
  CHECK(is_clique_tree(Graph(1)));

  CHECK(is_tree(Graph(2, {{0, 1}})));
  CHECK_FALSE(is_tree(cycle(3)));
  CHECK(is_tree(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})));

  CHECK(is_bipartite(cycle(6)));
  CHECK_FALSE(is_bipartite(cycle(5)));
  CHECK(is_triangle_free(cycle(4)));
  CHECK_FALSE(is_triangle_free(kBowtie));
  std::vector<Vertex> tri{0, 1, 2};
  CHECK(is_clique(kBowtie, tri));
  std::vector<Vertex> not_clique{0, 1, 3};
  CHECK_FALSE(is_clique(kBowtie, not_clique));
}

TEST_CASE("subgraphs, unions and relabeling") {
  std::vector<Vertex> keep{2, 3, 4};
  CHECK(induced_subgraph(kBowtie, keep) == Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(disjoint_union(Graph(2, {{0, 1}}), Graph(1)) == Graph(3, {{0, 1}}));
  std::vector<Vertex> map{2, 0, 1};
  CHECK(relabel(Graph(3, {{0, 1}}), map, 3) == Graph(3, {{0, 2}}));
}
