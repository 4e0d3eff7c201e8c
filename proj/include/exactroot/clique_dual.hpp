#pragma once

#include <optional>
#include <vector>

#include "exactroot/graph.hpp"

namespace exactroot {

/// Cliques C_1..C_k of a host graph covering every edge.
struct CliqueCover {
  std::vector<VertexSet> cliques;
};

/// Cliques Cl_1..Cl_n of a host F', one per vertex of a partner graph F.
struct LabeledCliqueCover {
  std::vector<VertexSet> cliques;
};

/// Cliques Cl_1..Cl_n of G itself, one per vertex of G.
struct TriangleFreeCollection {
  std::vector<VertexSet> cliques;
};

/// Throws PreconditionError when a clique names a vertex outside g.
bool verify_clique_cover(const Graph& g, const CliqueCover& cover);

// ---------------------------------------------------------------------------
// Clique edge cover reduction. Layout of the gadget: vertices of g first,
// then the universal vertex u = n, then the clique c_1..c_k = n+1..n+k.

Graph clique_cover_gadget(const Graph& g, int k);

/// The bipartite graph with edges u c_i and c_i v for v in C_i; its exact
/// square is clique_cover_gadget(g, k) with k = cover.cliques.size().
Graph cover_to_bipartite_root(const Graph& g, const CliqueCover& cover);

/// Reads C_i = N_b(c_i) - u back from a bipartite root of the gadget.
CliqueCover bipartite_root_to_cover(const Graph& gadget, const Graph& b, int n,
                                    int k);

// ---------------------------------------------------------------------------
// Clique duals. Adjacency in F is compared only for distinct vertices.

bool verify_clique_dual(const Graph& f, const Graph& fprime,
                        const LabeledCliqueCover& labeled);

/// Cl'_r = { i : r in Cl_i }, which presents F as a clique-dual of F'.
LabeledCliqueCover dual_transpose(const Graph& f, const Graph& fprime,
                                  const LabeledCliqueCover& labeled);

/// `labeled.cliques[i]` is the clique (in g's labels) attached to the i-th
/// vertex of `part_f`. Returns the bipartite root with v_i adjacent to every
/// vertex of Cl_i, or nullopt when the clique-dual conditions fail.
std::optional<Graph> recognize_bipartite_root_structure(
    const Graph& g, const LabeledCliqueCover& labeled, const VertexSet& part_f,
    const VertexSet& part_fprime);

/// The two squares and the neighbourhood cover of a connected bipartite h.
struct CliqueDualPair {
  VertexSet part_f;       // side containing vertex 0
  VertexSet part_fprime;
  Graph f;                // exact_square(h)[part_f]
  Graph fprime;           // exact_square(h)[part_fprime]
  LabeledCliqueCover cover;  // local labels of fprime
};
CliqueDualPair clique_dual_from_bipartite(const Graph& h);

// ---------------------------------------------------------------------------
// Triangle-free roots.

bool verify_triangle_free_collection(const Graph& g,
                                     const TriangleFreeCollection& coll);
Graph triangle_free_root_from_collection(const Graph& g,
                                         const TriangleFreeCollection& coll);
TriangleFreeCollection extract_collection_from_root(const Graph& h);

/// Exhaustive search over symmetric clique assignments. Throws BudgetError
/// when g has more than `limit_n` vertices.
std::optional<TriangleFreeCollection> bruteforce_clique_collection(
    const Graph& g, int limit_n = 7);

}  // namespace exactroot
