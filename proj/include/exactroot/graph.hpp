#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace exactroot {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // always sorted ascending

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted, so two graphs compare equal exactly when
/// they are equal as labeled graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws PreconditionError on self-loops, repeated edges or endpoints
  /// outside [0, n).
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from adjacency lists (sorted here); rejects asymmetric lists.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Simple digraph on vertices 0..n-1: no loops, at most one arc per
/// ordered pair.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::span<const Edge> arcs);
  Digraph(int n, std::initializer_list<Edge> arcs)
      : Digraph(n, std::span<const Edge>(arcs.begin(), arcs.size())) {}

  int order() const noexcept { return static_cast<int>(out_.size()); }
  std::size_t size() const noexcept { return arc_count_; }
  std::span<const Vertex> successors(Vertex v) const { return out_[v]; }
  bool has_arc(Vertex u, Vertex v) const;
  std::vector<Edge> arcs() const;

  /// The digraph with both (u,v) and (v,u) for every edge of g.
  static Digraph symmetric(const Graph& g);

  bool operator==(const Digraph&) const = default;

 private:
  std::vector<std::vector<Vertex>> out_;
  std::size_t arc_count_ = 0;
};

/// Blocks (maximal pieces without a cut-vertex) and cut-vertices.
///
/// Every vertex belongs to at least one block: an isolated vertex forms a
/// singleton block. Blocks are sorted vertex sets ordered lexicographically.
struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  std::vector<std::vector<int>> block_membership;  // per vertex, ascending

  /// Number of blocks with at least one edge that contain v.
  int edge_block_count(Vertex v) const;
};

Graph exact_square(const Graph& g);
Graph complement(const Graph& g);
Digraph exact_square(const Digraph& d);
Digraph complement(const Digraph& d);

/// Components ordered by smallest vertex; each component sorted.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
BlockDecomposition block_decomposition(const Graph& g);
bool is_clique_tree(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_clique(const Graph& g, std::span<const Vertex> vertices);

/// Induced subgraph; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Vertices of `a` first, then those of `b` shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Graph on `image_order` vertices with edge {map[u], map[v]} for every edge
/// {u, v} of g. `map` must be injective.
Graph relabel(const Graph& g, std::span<const Vertex> map, int image_order);

}  // namespace exactroot
