#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exactroot/clique_dual.hpp"
#include "exactroot/graph.hpp"
#include "exactroot/vertex_mapping.hpp"

namespace exactroot {

// Brute-force engines. Every engine has a size budget and throws
// BudgetError beyond it; callers may pass a larger limit explicitly.

/// The larger of `default_limit` and the integer in EXACTROOT_BUDGET.
int oracle_budget(int default_limit);

/// All labeled graphs on n vertices. Graph number `mask` has the pair with
/// index k (pairs (i,j), i<j, in lexicographic order) iff bit k is set.
void for_each_graph(int n, const std::function<void(const Graph&)>& fn,
                    int max_n = 5);
std::vector<Graph> enumerate_all_graphs(int n, int max_n = 5);

/// All n^(n-2) labeled trees, in lexicographic order of Prüfer sequence.
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn,
                           int max_n = 9);
std::vector<Graph> enumerate_labeled_trees(int n, int max_n = 9);
Graph tree_from_pruefer(int n, const std::vector<int>& seq);

/// Some H with exact_square(H) == g, searching every H inside the
/// complement of g.
std::optional<Graph> bruteforce_any_root(const Graph& g, int max_n = 5);

/// Labeled searches for triangle-free / bipartite roots: exact_square(H) ==
/// g. Any two edges xz, zy of such an H force xy into g, which prunes the
/// search.
std::optional<Graph> bruteforce_triangle_free_root(const Graph& g,
                                                   int max_n = 9);
std::optional<Graph> bruteforce_bipartite_root(const Graph& g, int max_n = 10);

/// All labeled trees t on n(g) vertices with exact_square(t) isomorphic to g.
std::vector<Graph> bruteforce_tree_roots(const Graph& g, int max_n = 9);

/// Isomorphism a -> b, by colour refinement and backtracking.
std::optional<VertexMapping> small_graph_isomorphic(const Graph& a,
                                                    const Graph& b,
                                                    int max_n = 12);

/// True iff s is isomorphic to a subtree of t (all connected vertex subsets
/// of t are tried).
bool bruteforce_subtree_embedding(const Graph& s, const Graph& t,
                                  int max_s = 7, int max_t = 9);

int count_nonisomorphic_tree_roots(const Graph& g, int max_n = 9);

/// A k-clique edge cover of g with nonempty cliques, if one exists.
std::optional<CliqueCover> bruteforce_clique_cover(const Graph& g, int k,
                                                   int max_n = 6);

/// Canonical string of an unrooted tree (centre-rooted AHU encoding).
/// Two trees are isomorphic iff their strings are equal.
std::string tree_canonical_form(const Graph& t);

}  // namespace exactroot
