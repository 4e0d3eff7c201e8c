#include "exactroot/generators.hpp"

#include <algorithm>
#include <limits>

#include "exactroot/error.hpp"
#include "exactroot/oracle.hpp"

namespace exactroot {

namespace {

void check_sequence(const std::vector<int>& s) {
  if (s.size() < 2) throw PreconditionError("sequence needs at least two terms");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] <= 1) throw PreconditionError("sequence terms must exceed 1");
    if (i > 0 && s[i] <= s[i - 1]) {
      throw PreconditionError("sequence must be strictly increasing");
    }
  }
}

void add_clique(std::vector<Edge>& edges, const VertexSet& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      edges.emplace_back(std::min(vs[i], vs[j]), std::max(vs[i], vs[j]));
    }
  }
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("empty range");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

Graph gen_GS(const std::vector<int>& s) {
  check_sequence(s);
  const int m = static_cast<int>(s.size());
  std::vector<Edge> edges;
  VertexSet hub_clique;
  for (int i = 0; i < m; ++i) hub_clique.push_back(i);
  add_clique(edges, hub_clique);
  int next = m;
  for (int i = 0; i < m; ++i) {
    VertexSet block{i};
    for (int k = 0; k < s[i] - 1; ++k) block.push_back(next++);
    add_clique(edges, block);
  }
  const int hub = next++;
  for (int i = 0; i < m; ++i) {
    VertexSet block{hub};
    for (int k = 0; k < s[i] - 1; ++k) block.push_back(next++);
    add_clique(edges, block);
  }
  return Graph(next, edges);
}

Graph gen_TL(const std::vector<int>& s, const std::vector<int>& perm) {
  check_sequence(s);
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != s) throw PreconditionError("perm is not a permutation of the sequence");
  const int m = static_cast<int>(s.size());
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) edges.emplace_back(0, i);
  int next = m + 1;
  std::vector<int> first_child(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    first_child[i] = next;
    for (int k = 0; k < s[i] - 1; ++k) edges.emplace_back(i + 1, next++);
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < perm[i] - 1; ++k) edges.emplace_back(first_child[i], next++);
  }
  return Graph(next, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("tree needs at least one vertex");
  if (n == 1) return Graph(1);
  std::mt19937_64 rng(seed);
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (int& x : seq) x = static_cast<int>(uniform_below(rng, n));
  return tree_from_pruefer(n, seq);
}

Graph random_clique_tree(int n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("clique-tree needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  int count = 1;
  while (count < n) {
    const int size = std::min(2 + static_cast<int>(uniform_below(rng, 4)),
                              n - count + 1);
    VertexSet block{static_cast<Vertex>(uniform_below(rng, count))};
    for (int k = 1; k < size; ++k) block.push_back(count++);
    add_clique(edges, block);
  }
  // Shuffle the labels so the layout carries no structure.
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) label[v] = v;
  for (int i = n - 1; i > 0; --i) {
    std::swap(label[i], label[uniform_below(rng, i + 1)]);
  }
  return relabel(Graph(n, edges), label, n);
}

}  // namespace exactroot
