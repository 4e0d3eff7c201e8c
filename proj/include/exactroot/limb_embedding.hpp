#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exactroot/graph.hpp"
#include "exactroot/vertex_mapping.hpp"

namespace exactroot {

/// The limb T[root, anchor]: the largest subtree containing the edge
/// root-anchor in which `root` is a leaf. `height` is the eccentricity of
/// `root` inside it.
struct Limb {
  Vertex root = 0;
  Vertex anchor = 0;
  int height = 0;

  bool operator==(const Limb&) const = default;
};

/// Limbs of t rooted at the leaf `leaf`, one per non-root vertex, ordered by
/// height and then by (root, anchor). Throws if `leaf` is not a leaf.
std::vector<Limb> limbs_of_rooted(const Graph& t, Vertex leaf);

/// Both orientations of every edge, ordered by (root, anchor). Throws when
/// t has fewer than two vertices.
std::vector<Limb> limbs_of_unrooted(const Graph& t);

/// Weights restricting which source vertex may land on which target
/// vertex. A negative weight marks a vertex without a constraint role.
/// The pair (a,b) -> (u,v) is admissible when
///   source[a] >= 0, target[u] >= 0 and source[a] >= target[u], or
///   source[b] >= 0, target[v] >= 0 and source[b] >= target[v].
struct EmbeddingRule {
  std::vector<int> source;
  std::vector<int> target;
};

/// Embedding matrix of the rooted source against every limb of the target.
/// Entry (r, c) is 1 when the row limb maps onto a sub-limb of the column
/// limb, root to root, with every consecutive pair admissible under `rule`
/// (or unconditionally when there is no rule).
///
/// When `required` is non-empty a second matrix `covering` is kept: its
/// entry (r, c) is 1 when such an embedding exists whose image also
/// contains every required vertex lying beyond the column's root.
struct EmbeddingMatrix {
  Graph source;
  Vertex source_leaf = 0;
  Graph target;
  std::optional<EmbeddingRule> rule;
  std::vector<Limb> rows;
  std::vector<Limb> cols;
  std::vector<std::vector<std::uint8_t>> entries;

  VertexSet required;
  std::vector<std::vector<std::uint8_t>> covering;

  // Lookup tables.
  std::vector<Vertex> parent;            // in the source rooted at the leaf
  std::vector<std::vector<Vertex>> children;
  std::vector<int> row_of_anchor;        // -1 for the leaf
  std::vector<int> col_base;             // column of (u, neighbors(u)[k])
  std::vector<int> required_beyond;      // per column

  int column(Vertex u, Vertex v) const;
  int row(Vertex anchor) const { return row_of_anchor[anchor]; }
  int last_row() const { return static_cast<int>(rows.size()) - 1; }
  bool at(int r, int c) const { return entries[r][c] != 0; }
  bool covering_at(int r, int c) const { return covering[r][c] != 0; }
};

/// Requires trees with at least two vertices each.
EmbeddingMatrix build_embedding_matrix(const Graph& source, Vertex leaf,
                                       const Graph& target,
                                       std::optional<EmbeddingRule> rule = {},
                                       const VertexSet& required = {});

/// Rebuilds the embedding behind a unit entry, recomputing each matching
/// from the matrix. The mapping takes every vertex of the row limb (its root
/// included) into the column limb. Throws if the entry is 0.
VertexMapping retrace_embedding(const EmbeddingMatrix& m, int row, int col);

/// Same for a unit entry of `covering`.
VertexMapping retrace_covering_embedding(const EmbeddingMatrix& m, int row,
                                         int col);

/// True when s is isomorphic to a subtree of t.
bool subtree_isomorphic(const Graph& s, const Graph& t);

}  // namespace exactroot
