#pragma once

#include <optional>
#include <vector>

#include "exactroot/graph.hpp"
#include "exactroot/limb_embedding.hpp"
#include "exactroot/vertex_mapping.hpp"

namespace exactroot {

/// T_W of a clique-tree W: vertices 0..n-1 are those of W ("original"),
/// vertex n+j stands for block j and is adjacent to exactly its members.
/// An isolated vertex counts as a singleton block, so T_{K1} = K2.
struct CanonicalTree {
  Graph tree;
  Graph source;  // W itself
  int original_count = 0;
  std::vector<VertexSet> blocks;

  bool is_block(Vertex v) const { return v >= original_count; }
  int block_of(Vertex v) const { return v - original_count; }
  Vertex block_vertex(int j) const { return original_count + j; }
};

CanonicalTree canonical_tree(const Graph& w);

/// True iff w is a clique-tree. For clique-trees it also checks that w is
/// a component of exact_square(canonical_tree(w).tree) and throws
/// std::logic_error if not.
bool clique_tree_via_canonical(const Graph& w);

/// Output of stage1. c1 and c2 use local labels; c1_vertices[i] is the
/// input vertex behind local vertex i (same for c2). hat_c2 is labelled by
/// C1's block indices, so vertex j of hat_c2 is vertex n1 + j of t_c1.
struct StageOne {
  VertexSet c1_vertices;
  VertexSet c2_vertices;
  Graph c1;
  Graph c2;
  BlockDecomposition c2_blocks;
  std::vector<int> b_c2;  // blocks with an edge containing each C2 vertex
  CanonicalTree t_c1;
  Graph hat_c2;
  std::vector<int> d_t;   // degree in T_C1 of each hat_c2 vertex
  CanonicalTree t_hat_c2;
  CanonicalTree t_c2;
};

/// Absent when g is not two clique-tree components. C1 is the component
/// holding vertex 0, unless `swap_components` is set.
std::optional<StageOne> stage1(const Graph& g, bool swap_components = false);

/// Well-embedding matrix of T_hatC2, rooted at its lowest leaf, against
/// T_C2. Requires hat_c2 to have at least two vertices. A non-empty
/// `required` (T_C2 labels) also fills the covering matrix.
EmbeddingMatrix stage2_embedding_matrix(const StageOne& s,
                                        const VertexSet& required = {});

/// Restricts an embedding of c.tree into d.tree to the original vertices,
/// checking that originals go to originals and that the result is an
/// induced isomorphism of c.source onto d.source[image].
VertexMapping restriction_iso(const VertexMapping& phi_tree,
                              const CanonicalTree& c, const CanonicalTree& d);

/// Output of the tree completion. `psi` maps each tree vertex to the
/// vertex of g (W1 first, then W2) it stands for; it is an isomorphism from
/// exact_square(tree) onto g.
struct TreeCompletion {
  Graph tree;
  VertexMapping psi;
};

/// g must be the disjoint union W1 + W2 of two clique-trees with W1 on
/// vertices 0..n1-1 and t_w1 = canonical_tree(W1). phi maps the block
/// indices of W1 (the vertices of hatW2) to local vertices of W2.
TreeCompletion complete_tree_root(const CanonicalTree& t_w1, const Graph& g,
                                  const VertexMapping& phi);

struct TreeRootAnswer {
  bool decision = false;
  std::optional<Graph> root;
  std::optional<VertexMapping> iso_to_input;
  bool used_coverage_fallback = false;
};

struct TreeRootOptions {
  bool swap_components = false;
  bool verify = true;  // recheck exact_square(root) == g before returning
};

/// The root is labelled like g, so exact_square(root) == g and
/// iso_to_input is the identity.
TreeRootAnswer recognize_tree_root(const Graph& g, TreeRootOptions opts = {});

}  // namespace exactroot
