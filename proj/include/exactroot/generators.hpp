#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "exactroot/graph.hpp"

namespace exactroot {

/// Two-component graph built from 1 < n_1 < ... < n_m, m >= 2.
/// First component: K_m on 0..m-1 (vertex i-1 plays v_i), then for each i
/// the n_i - 1 vertices completing v_i's block K_{n_i}. Second component:
/// a hub, then for each i the n_i - 1 vertices of a block K_{n_i} on it.
Graph gen_GS(const std::vector<int>& s);

/// Tree whose exact square is isomorphic to gen_GS(s), one per permutation
/// `perm` of s. Layout: 0 is the hub, 1..m its neighbours, then n_i - 1
/// children of each neighbour i (the first of them listed first), then
/// perm_i - 1 leaves below that first child.
Graph gen_TL(const std::vector<int>& s, const std::vector<int>& perm);

/// Uniform labeled tree from a random Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// Random clique-tree on n vertices: blocks of 2..5 vertices glued one at
/// a time onto a random existing vertex.
Graph random_clique_tree(int n, std::uint64_t seed);

/// Uniform value in [0, bound) by rejection sampling. Unlike
/// std::uniform_int_distribution the result is the same on every standard
/// library for a given engine state.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace exactroot
