#include "exactroot/clique_dual.hpp"

#include <algorithm>
#include <stdexcept>

#include "exactroot/error.hpp"

namespace exactroot {

namespace {

VertexSet normalized(const VertexSet& s) {
  VertexSet out = s;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_range(const std::vector<VertexSet>& sets, int n, const char* what) {
  for (const auto& s : sets) {
    for (Vertex v : s) {
      if (v < 0 || v >= n) {
        throw PreconditionError(std::string(what) + " names vertex " +
                                std::to_string(v) + " outside the host");
      }
    }
  }
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

// Marks every edge of g inside some set; false when a set is not a clique.
bool covers_all_edges(const Graph& g, const std::vector<VertexSet>& sets) {
  std::vector<std::vector<char>> covered(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) covered[v].assign(g.degree(v), 0);
  for (const auto& raw : sets) {
    const VertexSet s = normalized(raw);
    if (!is_clique(g, s)) return false;
    for (std::size_t a = 0; a < s.size(); ++a) {
      auto nb = g.neighbors(s[a]);
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        auto it = std::lower_bound(nb.begin(), nb.end(), s[b]);
        covered[s[a]][it - nb.begin()] = 1;
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] > v && !covered[v][i]) return false;
    }
  }
  return true;
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

}  // namespace

bool verify_clique_cover(const Graph& g, const CliqueCover& cover) {
  check_range(cover.cliques, g.order(), "clique");
  return covers_all_edges(g, cover.cliques);
}

Graph clique_cover_gadget(const Graph& g, int k) {
  if (!is_connected(g)) throw PreconditionError("gadget input must be connected");
  if (k < 1) throw PreconditionError("gadget needs k >= 1");
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, n);
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) edges.emplace_back(n + i, n + j);
  }
  return Graph(n + 1 + k, edges);
}

Graph cover_to_bipartite_root(const Graph& g, const CliqueCover& cover) {
  if (!is_connected(g)) throw PreconditionError("input graph must be connected");
  if (cover.cliques.empty()) throw PreconditionError("cover must have k >= 1");
  if (!verify_clique_cover(g, cover)) {
    throw PreconditionError("not a clique edge cover of the graph");
  }
  const int n = g.order();
  const int k = static_cast<int>(cover.cliques.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    const Vertex c = n + 1 + i;
    edges.emplace_back(n, c);
    for (Vertex v : normalized(cover.cliques[i])) {
      edges.emplace_back(v, c);
      seen[v] = 1;
    }
  }
  // Without this a vertex of g would be isolated in the root and lose its
  // square edge to u.
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw PreconditionError("every vertex must lie in some clique of the cover");
  }
  Graph b(n + 1 + k, edges);
  if (exact_square(b) != clique_cover_gadget(g, k)) {
    throw std::logic_error("cover_to_bipartite_root: square mismatch");
  }
  return b;
}

CliqueCover bipartite_root_to_cover(const Graph& gadget, const Graph& b, int n,
                                    int k) {
  if (n < 1 || k < 1 || gadget.order() != n + 1 + k || b.order() != n + 1 + k) {
    throw PreconditionError("gadget shape does not match n and k");
  }
  std::vector<Vertex> base(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) base[v] = v;
  const Graph g = induced_subgraph(gadget, base);
  if (clique_cover_gadget(g, k) != gadget) {
    throw PreconditionError("graph is not a clique-cover gadget");
  }
  if (!is_bipartite(b) || exact_square(b) != gadget) {
    throw PreconditionError("not a bipartite root of the gadget");
  }
  CliqueCover cover;
  for (int i = 0; i < k; ++i) {
    VertexSet c;
    for (Vertex v : b.neighbors(n + 1 + i)) {
      if (v != n) c.push_back(v);
    }
    cover.cliques.push_back(std::move(c));
  }
  if (!verify_clique_cover(g, cover)) {
    throw std::logic_error("bipartite_root_to_cover: extracted sets fail");
  }
  return cover;
}

bool verify_clique_dual(const Graph& f, const Graph& fprime,
                        const LabeledCliqueCover& labeled) {
  if (static_cast<int>(labeled.cliques.size()) != f.order()) {
    throw PreconditionError("need one clique per vertex of F");
  }
  check_range(labeled.cliques, fprime.order(), "clique");
  if (!covers_all_edges(fprime, labeled.cliques)) return false;
  std::vector<VertexSet> cl;
  cl.reserve(labeled.cliques.size());
  for (const auto& s : labeled.cliques) cl.push_back(normalized(s));
  for (Vertex i = 0; i < f.order(); ++i) {
    for (Vertex j = i + 1; j < f.order(); ++j) {
      if (f.adjacent(i, j) != intersects(cl[i], cl[j])) return false;
    }
  }
  return true;
}

LabeledCliqueCover dual_transpose(const Graph& f, const Graph& fprime,
                                  const LabeledCliqueCover& labeled) {
  if (has_isolated_vertex(f) || has_isolated_vertex(fprime)) {
    throw PreconditionError("clique duals require graphs without isolated vertices");
  }
  if (!verify_clique_dual(f, fprime, labeled)) {
    throw PreconditionError("input is not a clique-dual");
  }
  LabeledCliqueCover out;
  out.cliques.resize(static_cast<std::size_t>(fprime.order()));
  for (Vertex i = 0; i < f.order(); ++i) {
    for (Vertex r : normalized(labeled.cliques[i])) out.cliques[r].push_back(i);
  }
  if (!verify_clique_dual(fprime, f, out)) {
    throw std::logic_error("dual_transpose: transposed cover fails");
  }
  return out;
}

std::optional<Graph> recognize_bipartite_root_structure(
    const Graph& g, const LabeledCliqueCover& labeled, const VertexSet& part_f,
    const VertexSet& part_fprime) {
  if (has_isolated_vertex(g)) {
    throw PreconditionError("graph must have no isolated vertices");
  }
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> local(static_cast<std::size_t>(n), -1);
  auto assign = [&](const VertexSet& part, int s) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      const Vertex v = part[i];
      if (v < 0 || v >= n || side[v] != -1) {
        throw PreconditionError("parts must partition the vertex set");
      }
      side[v] = s;
      local[v] = static_cast<int>(i);
    }
  };
  assign(part_f, 0);
  assign(part_fprime, 1);
  if (std::find(side.begin(), side.end(), -1) != side.end()) {
    throw PreconditionError("parts must partition the vertex set");
  }
  for (auto [u, v] : g.edges()) {
    if (side[u] != side[v]) {
      throw PreconditionError("parts must be unions of components");
    }
  }
  if (labeled.cliques.size() != part_f.size()) {
    throw PreconditionError("need one clique per vertex of the first part");
  }
  LabeledCliqueCover local_cover;
  for (const auto& s : labeled.cliques) {
    VertexSet c;
    for (Vertex v : s) {
      if (v < 0 || v >= n) throw PreconditionError("clique vertex out of range");
      if (side[v] != 1) return std::nullopt;
      c.push_back(local[v]);
    }
    local_cover.cliques.push_back(normalized(c));
  }
  const Graph f = induced_subgraph(g, part_f);
  const Graph fprime = induced_subgraph(g, part_fprime);
  if (!verify_clique_dual(f, fprime, local_cover)) return std::nullopt;

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < part_f.size(); ++i) {
    for (Vertex r : local_cover.cliques[i]) {
      const Vertex a = part_f[i];
      const Vertex b = part_fprime[r];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  Graph h(n, edges);
  if (exact_square(h) != g) {
    throw std::logic_error("recognize_bipartite_root_structure: square mismatch");
  }
  return h;
}

CliqueDualPair clique_dual_from_bipartite(const Graph& h) {
  if (!is_connected(h) || !is_bipartite(h)) {
    throw PreconditionError("need a connected bipartite graph");
  }
  const int n = h.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue{0};
  color[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : h.neighbors(queue[head])) {
      if (color[w] == -1) {
        color[w] = 1 - color[queue[head]];
        queue.push_back(w);
      }
    }
  }
  CliqueDualPair out;
  std::vector<int> local(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    auto& part = color[v] == 0 ? out.part_f : out.part_fprime;
    local[v] = static_cast<int>(part.size());
    part.push_back(v);
  }
  const Graph sq = exact_square(h);
  out.f = induced_subgraph(sq, out.part_f);
  out.fprime = induced_subgraph(sq, out.part_fprime);
  for (Vertex v : out.part_f) {
    VertexSet c;
    for (Vertex w : h.neighbors(v)) c.push_back(local[w]);
    out.cover.cliques.push_back(std::move(c));
  }
  return out;
}

bool verify_triangle_free_collection(const Graph& g,
                                     const TriangleFreeCollection& coll) {
  const int n = g.order();
  if (static_cast<int>(coll.cliques.size()) != n) {
    throw PreconditionError("need one clique per vertex");
  }
  check_range(coll.cliques, n, "clique");
  std::vector<VertexSet> cl;
  cl.reserve(coll.cliques.size());
  for (const auto& s : coll.cliques) cl.push_back(normalized(s));
  for (Vertex i = 0; i < n; ++i) {
    if (!is_clique(g, cl[i])) return false;
    if (contains(cl[i], i)) return false;
    for (Vertex j : cl[i]) {
      if (!contains(cl[j], i)) return false;
    }
    for (std::size_t a = 0; a < cl[i].size(); ++a) {
      for (std::size_t b = a + 1; b < cl[i].size(); ++b) {
        if (contains(cl[cl[i][b]], cl[i][a])) return false;
      }
    }
  }
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j) != intersects(cl[i], cl[j])) return false;
    }
  }
  return true;
}

Graph triangle_free_root_from_collection(const Graph& g,
                                         const TriangleFreeCollection& coll) {
  if (!verify_triangle_free_collection(g, coll)) {
    throw PreconditionError("not a valid triangle-free clique collection");
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j : normalized(coll.cliques[i])) {
      if (i < j) edges.emplace_back(i, j);
    }
  }
  Graph h(g.order(), edges);
  if (!is_triangle_free(h) || exact_square(h) != g) {
    throw std::logic_error("triangle_free_root_from_collection: bad root");
  }
  return h;
}

TriangleFreeCollection extract_collection_from_root(const Graph& h) {
  if (!is_triangle_free(h)) throw PreconditionError("root is not triangle-free");
  TriangleFreeCollection out;
  for (Vertex v = 0; v < h.order(); ++v) {
    auto nb = h.neighbors(v);
    out.cliques.emplace_back(nb.begin(), nb.end());
  }
  return out;
}

namespace {

class CollectionSearch {
 public:
  explicit CollectionSearch(const Graph& g) : g_(g), cl_(g.order()) {
    for (Vertex i = 0; i < g.order(); ++i) {
      for (Vertex j = i + 1; j < g.order(); ++j) {
        // j in Cl_i together with (b), (c), (d) forces i and j apart in g.
        if (!g.adjacent(i, j)) pairs_.emplace_back(i, j);
      }
    }
  }

  std::optional<TriangleFreeCollection> run() {
    if (search(0)) return TriangleFreeCollection{cl_};
    return std::nullopt;
  }

 private:
  bool can_add(Vertex i, Vertex j) const {
    for (Vertex k : cl_[i]) {
      if (!g_.adjacent(k, j) || contains(cl_[k], j)) return false;
    }
    for (Vertex k : cl_[j]) {
      if (!g_.adjacent(k, i)) return false;
    }
    return true;
  }

  static void insert(VertexSet& s, Vertex v) {
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
  }
  static void erase(VertexSet& s, Vertex v) {
    s.erase(std::lower_bound(s.begin(), s.end(), v));
  }

  bool search(std::size_t idx) {
    if (idx == pairs_.size()) {
      return verify_triangle_free_collection(g_, TriangleFreeCollection{cl_});
    }
    auto [i, j] = pairs_[idx];
    if (can_add(i, j)) {
      insert(cl_[i], j);
      insert(cl_[j], i);
      if (search(idx + 1)) return true;
      erase(cl_[i], j);
      erase(cl_[j], i);
    }
    return search(idx + 1);
  }

  const Graph& g_;
  std::vector<VertexSet> cl_;
  std::vector<Edge> pairs_;
};

}  // namespace

std::optional<TriangleFreeCollection> bruteforce_clique_collection(
    const Graph& g, int limit_n) {
  if (g.order() > limit_n) {
    throw BudgetError("clique-collection search exceeds its budget of " +
                      std::to_string(limit_n) + " vertices");
  }
  return CollectionSearch(g).run();
}

}  // namespace exactroot
