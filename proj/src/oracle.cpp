#include "exactroot/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <map>
#include <set>

#include "exactroot/error.hpp"

namespace exactroot {

namespace {

using Mask = std::uint32_t;

void check_budget(int n, int max_n, const char* what) {
  if (n > max_n) {
    throw BudgetError(std::string(what) + ": " + std::to_string(n) +
                      " vertices exceeds the budget of " +
                      std::to_string(max_n));
  }
  if (n > 31) throw BudgetError(std::string(what) + ": at most 31 vertices");
}

std::vector<Mask> to_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

Graph from_masks(const std::vector<Mask>& adj) {
  std::vector<Edge> edges;
  const int n = static_cast<int>(adj.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[u] >> v & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

void square_masks(const std::vector<Mask>& adj, std::vector<Mask>& out) {
  const int n = static_cast<int>(adj.size());
  out.assign(adj.size(), 0);
  for (int v = 0; v < n; ++v) {
    Mask reach = 0;
    for (Mask rest = adj[v]; rest; rest &= rest - 1) {
      reach |= adj[std::countr_zero(rest)];
    }
    out[v] = reach & ~adj[v] & ~(Mask{1} << v);
  }
}

bool bipartite_masks(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (Mask rest = adj[v]; rest; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Edge> complement_pairs(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

// Backtracking over subsets H of the complement of g in which any two
// edges xz, zy have xy in g. `accept` sees candidates whose square is g.
class TriangleFreeSearch {
 public:
  TriangleFreeSearch(const Graph& g,
                     std::function<bool(const std::vector<Mask>&)> accept)
      : g_(to_masks(g)),
        h_(g_.size(), 0),
        pairs_(complement_pairs(g)),
        accept_(std::move(accept)) {}

  std::optional<Graph> run() {
    if (search(0)) return from_masks(h_);
    return std::nullopt;
  }

 private:
  bool search(std::size_t idx) {
    if (idx == pairs_.size()) {
      square_masks(h_, sq_);
      return sq_ == g_ && accept_(h_);
    }
    auto [x, y] = pairs_[idx];
    const Mask bx = Mask{1} << x;
    const Mask by = Mask{1} << y;
    if ((h_[x] & ~g_[y]) == 0 && (h_[y] & ~g_[x]) == 0) {
      h_[x] |= by;
      h_[y] |= bx;
      if (search(idx + 1)) return true;
      h_[x] &= ~by;
      h_[y] &= ~bx;
    }
    return search(idx + 1);
  }

  std::vector<Mask> g_;
  std::vector<Mask> h_;
  std::vector<Mask> sq_;
  std::vector<Edge> pairs_;
  std::function<bool(const std::vector<Mask>&)> accept_;
};

bool decode_pruefer_masks(int n, const std::vector<int>& seq,
                          std::vector<Mask>& adj) {
  adj.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) ++degree[x];
  for (int x : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    adj[leaf] |= Mask{1} << x;
    adj[x] |= Mask{1} << leaf;
    --degree[leaf];
    --degree[x];
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        adj[a] |= Mask{1} << v;
        adj[v] |= Mask{1} << a;
        return true;
      }
    }
  }
  return false;
}

// Calls fn(adjacency masks) for every Prüfer sequence in lexicographic order.
void for_each_tree_masks(int n,
                         const std::function<void(const std::vector<Mask>&)>& fn) {
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  std::vector<Mask> adj;
  while (true) {
    decode_pruefer_masks(n, seq, adj);
    fn(adj);
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

std::vector<int> sorted_degrees(const std::vector<Mask>& adj) {
  std::vector<int> out;
  out.reserve(adj.size());
  for (Mask m : adj) out.push_back(std::popcount(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int oracle_budget(int default_limit) {
  const char* env = std::getenv("EXACTROOT_BUDGET");
  if (env == nullptr) return default_limit;
  int value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end) return default_limit;
  return std::max(default_limit, value);
}

void for_each_graph(int n, const std::function<void(const Graph&)>& fn,
                    int max_n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  check_budget(n, max_n, "graph enumeration");
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  if (pairs.size() > 40) throw BudgetError("graph enumeration: too many pairs");
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    edges.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) edges.push_back(pairs[k]);
    }
    fn(Graph(n, edges));
  }
}

std::vector<Graph> enumerate_all_graphs(int n, int max_n) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) { out.push_back(g); }, max_n);
  return out;
}

Graph tree_from_pruefer(int n, const std::vector<int>& seq) {
  if (n < 2 || static_cast<int>(seq.size()) != n - 2) {
    throw PreconditionError("Prüfer sequence must have n - 2 entries, n >= 2");
  }
  for (int x : seq) {
    if (x < 0 || x >= n) throw PreconditionError("Prüfer entry out of range");
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) ++degree[x];
  std::vector<Edge> edges;
  for (int x : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    --degree[leaf];
    --degree[x];
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return Graph(n, edges);
}

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn,
                           int max_n) {
  if (n < 2) throw PreconditionError("labeled tree enumeration needs n >= 2");
  check_budget(n, max_n, "tree enumeration");
  for_each_tree_masks(n, [&](const std::vector<Mask>& adj) { fn(from_masks(adj)); });
}

std::vector<Graph> enumerate_labeled_trees(int n, int max_n) {
  std::vector<Graph> out;
  for_each_labeled_tree(n, [&](const Graph& t) { out.push_back(t); }, max_n);
  return out;
}

std::optional<Graph> bruteforce_any_root(const Graph& g, int max_n) {
  check_budget(g.order(), max_n, "any-root search");
  const auto pairs = complement_pairs(g);
  if (pairs.size() > 40) throw BudgetError("any-root search: too many pairs");
  const std::vector<Mask> target = to_masks(g);
  std::vector<Mask> h;
  std::vector<Mask> sq;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    h.assign(target.size(), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) {
        h[pairs[k].first] |= Mask{1} << pairs[k].second;
        h[pairs[k].second] |= Mask{1} << pairs[k].first;
      }
    }
    square_masks(h, sq);
    if (sq == target) return from_masks(h);
  }
  return std::nullopt;
}

std::optional<Graph> bruteforce_triangle_free_root(const Graph& g, int max_n) {
  check_budget(g.order(), max_n, "triangle-free root search");
  return TriangleFreeSearch(g, [](const std::vector<Mask>&) { return true; })
      .run();
}

std::optional<Graph> bruteforce_bipartite_root(const Graph& g, int max_n) {
  check_budget(g.order(), max_n, "bipartite root search");
  return TriangleFreeSearch(g, bipartite_masks).run();
}

std::vector<Graph> bruteforce_tree_roots(const Graph& g, int max_n) {
  check_budget(g.order(), max_n, "tree-root search");
  std::vector<Graph> out;
  const int n = g.order();
  if (n < 2) return out;
  const std::vector<int> want = sorted_degrees(to_masks(g));
  std::vector<Mask> sq;
  for_each_tree_masks(n, [&](const std::vector<Mask>& adj) {
    square_masks(adj, sq);
    if (sorted_degrees(sq) != want) return;
    if (small_graph_isomorphic(from_masks(sq), g, 31)) {
      out.push_back(from_masks(adj));
    }
  });
  return out;
}

std::optional<VertexMapping> small_graph_isomorphic(const Graph& a,
                                                    const Graph& b,
                                                    int max_n) {
  const int n = a.order();
  if (n != b.order()) return std::nullopt;
  check_budget(n, std::max(max_n, 0), "isomorphism search");
  if (a.size() != b.size()) return std::nullopt;

  // Colour refinement on both graphs at once so colours are comparable.
  std::vector<int> ca(static_cast<std::size_t>(n));
  std::vector<int> cb(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    ca[v] = a.degree(v);
    cb[v] = b.degree(v);
  }
  int classes = -1;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto signature = [](const Graph& g, const std::vector<int>& c, int v) {
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(c[w]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(c[v], nb);
    };
    std::vector<std::pair<int, std::vector<int>>> sa, sb;
    for (int v = 0; v < n; ++v) {
      sa.push_back(signature(a, ca, v));
      sb.push_back(signature(b, cb, v));
    }
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) {
      ca[v] = ids[sa[v]];
      cb[v] = ids[sb[v]];
    }
    if (next == classes) break;
    classes = next;
  }
  std::vector<int> ha(static_cast<std::size_t>(classes), 0);
  std::vector<int> hb(static_cast<std::size_t>(classes), 0);
  for (int v = 0; v < n; ++v) {
    ++ha[ca[v]];
    ++hb[cb[v]];
  }
  if (ha != hb) return std::nullopt;

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return ha[ca[x]] < ha[ca[y]]; });

  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> extend = [&](int depth) {
    if (depth == n) return true;
    const int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w] || cb[w] != ca[v]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int u = order[d];
        ok = a.adjacent(u, v) == b.adjacent(map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return VertexMapping::from_images(map);
}

bool bruteforce_subtree_embedding(const Graph& s, const Graph& t, int max_s,
                                  int max_t) {
  if (!is_tree(s) || !is_tree(t)) throw PreconditionError("inputs must be trees");
  check_budget(s.order(), max_s, "subtree search (pattern)");
  check_budget(t.order(), max_t, "subtree search (host)");
  const int k = s.order();
  const int n = t.order();
  if (k > n) return false;
  const std::vector<Mask> adj = to_masks(t);
  for (Mask subset = 1; subset < (Mask{1} << n); ++subset) {
    if (std::popcount(subset) != k) continue;
    // Connected iff a search from the lowest member reaches all of it.
    Mask seen = subset & -subset;
    Mask frontier = seen;
    while (frontier) {
      Mask grow = 0;
      for (Mask rest = frontier; rest; rest &= rest - 1) {
        grow |= adj[std::countr_zero(rest)];
      }
      frontier = grow & subset & ~seen;
      seen |= frontier;
    }
    if (seen != subset) continue;
    VertexSet vs;
    for (Mask rest = subset; rest; rest &= rest - 1) {
      vs.push_back(std::countr_zero(rest));
    }
    if (small_graph_isomorphic(s, induced_subgraph(t, vs), 31)) return true;
  }
  return false;
}

int count_nonisomorphic_tree_roots(const Graph& g, int max_n) {
  std::set<std::string> forms;
  for (const Graph& t : bruteforce_tree_roots(g, max_n)) {
    forms.insert(tree_canonical_form(t));
  }
  return static_cast<int>(forms.size());
}

std::optional<CliqueCover> bruteforce_clique_cover(const Graph& g, int k,
                                                   int max_n) {
  if (k < 1) throw PreconditionError("cover size must be positive");
  check_budget(g.order(), max_n, "clique-cover search");
  const int n = g.order();
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  auto pair_bit = [&](int u, int v) {
    // Index of (u, v), u < v, in lexicographic order.
    return u * n - u * (u + 1) / 2 + (v - u - 1);
  };
  std::uint64_t all_edges = 0;
  for (auto [u, v] : g.edges()) all_edges |= std::uint64_t{1} << pair_bit(u, v);

  std::vector<Mask> cliques;
  std::vector<std::uint64_t> covered;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    VertexSet vs;
    for (Mask rest = s; rest; rest &= rest - 1) vs.push_back(std::countr_zero(rest));
    if (!is_clique(g, vs)) continue;
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        c |= std::uint64_t{1} << pair_bit(vs[i], vs[j]);
      }
    }
    cliques.push_back(s);
    covered.push_back(c);
  }
  std::vector<int> pick;
  std::function<bool(std::size_t, std::uint64_t)> search =
      [&](std::size_t from, std::uint64_t have) {
        if (static_cast<int>(pick.size()) == k) return have == all_edges;
        for (std::size_t i = from; i < cliques.size(); ++i) {
          pick.push_back(static_cast<int>(i));
          if (search(i, have | covered[i])) return true;
          pick.pop_back();
        }
        return false;
      };
  if (!search(0, 0)) return std::nullopt;
  CliqueCover out;
  for (int i : pick) {
    VertexSet vs;
    for (Mask rest = cliques[i]; rest; rest &= rest - 1) {
      vs.push_back(std::countr_zero(rest));
    }
    out.cliques.push_back(std::move(vs));
  }
  return out;
}

std::string tree_canonical_form(const Graph& t) {
  if (!is_tree(t)) throw PreconditionError("canonical form needs a tree");
  const int n = t.order();
  if (n == 1) return "()";
  // Centres: peel leaves layer by layer.
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  auto encode = [&](int root) {
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> order{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Vertex w : t.neighbors(order[i])) {
        if (w != parent[order[i]] && w != root) {
          parent[w] = order[i];
          order.push_back(w);
        }
      }
    }
    std::vector<std::vector<std::string>> kids(static_cast<std::size_t>(n));
    std::string result;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto& parts = kids[*it];
      std::sort(parts.begin(), parts.end());
      std::string code = "(";
      for (auto& p : parts) code += p;
      code += ")";
      parts.clear();
      if (parent[*it] >= 0) {
        kids[parent[*it]].push_back(std::move(code));
      } else {
        result = std::move(code);
      }
    }
    return result;
  };
  std::string best = encode(layer[0]);
  if (layer.size() > 1) best = std::min(best, encode(layer[1]));
  return best;
}

}  // namespace exactroot
