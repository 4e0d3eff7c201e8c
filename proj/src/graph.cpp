#include "exactroot/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "exactroot/error.hpp"

namespace exactroot {

namespace {

void check_vertex(Vertex v, int n) {
  if (v < 0 || v >= n) {
    throw PreconditionError("vertex " + std::to_string(v) +
                            " out of range for order " + std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(u));
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw PreconditionError("repeated edge");
    }
  }
  edge_count_ = edges.size();
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  Graph g;
  const int n = static_cast<int>(adjacency.size());
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw PreconditionError("repeated edge");
    }
    for (Vertex u : list) {
      check_vertex(u, n);
      if (u == v) {
        throw PreconditionError("self-loop at vertex " + std::to_string(u));
      }
    }
    degree_sum += list.size();
  }
  g.adj_ = std::move(adjacency);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.adj_[v]) {
      if (!g.adjacent(u, v)) throw PreconditionError("asymmetric adjacency");
    }
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex target = &a == &adj_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Digraph::Digraph(int n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  out_.resize(static_cast<std::size_t>(n));
}

Digraph::Digraph(int n, std::span<const Edge> arcs) : Digraph(n) {
  for (auto [u, v] : arcs) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    out_[u].push_back(v);
  }
  for (auto& list : out_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw PreconditionError("repeated arc");
    }
  }
  arc_count_ = arcs.size();
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<Edge> Digraph::arcs() const {
  std::vector<Edge> out;
  out.reserve(arc_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : out_[u]) out.emplace_back(u, v);
  }
  return out;
}

Digraph Digraph::symmetric(const Graph& g) {
  std::vector<Edge> arcs;
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph(g.order(), arcs);
}

int BlockDecomposition::edge_block_count(Vertex v) const {
  int count = 0;
  for (int b : block_membership[v]) {
    if (blocks[b].size() >= 2) ++count;
  }
  return count;
}

// Vertices at distance exactly 2 are the neighbors of neighbors that are
// neither v nor a neighbor of v.
Graph exact_square(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  std::vector<Vertex> near(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> seen(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    near[v] = v;
    for (Vertex u : g.neighbors(v)) near[u] = v;
    for (Vertex u : g.neighbors(v)) {
      for (Vertex w : g.neighbors(u)) {
        if (near[w] != v && seen[w] != v) {
          seen[w] = v;
          adj[v].push_back(w);
        }
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Digraph exact_square(const Digraph& d) {
  const int n = d.order();
  std::vector<Edge> arcs;
  std::vector<Vertex> near(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> seen(static_cast<std::size_t>(n), -1);
  for (Vertex x = 0; x < n; ++x) {
    near[x] = x;
    for (Vertex y : d.successors(x)) near[y] = x;
    for (Vertex y : d.successors(x)) {
      for (Vertex z : d.successors(y)) {
        if (near[z] != x && seen[z] != x) {
          seen[z] = x;
          arcs.emplace_back(x, z);
        }
      }
    }
  }
  return Digraph(n, arcs);
}

Digraph complement(const Digraph& d) {
  const int n = d.order();
  std::vector<Edge> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && !d.has_arc(u, v)) arcs.emplace_back(u, v);
    }
  }
  return Digraph(n, arcs);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> out;
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (visited[s]) continue;
    VertexSet comp;
    visited[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!visited[u]) {
          visited[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() > 0 && connected_components(g).size() == 1;
}

// Iterative Hopcroft-Tarjan lowpoint search with an edge stack.
BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::vector<Vertex> marker(static_cast<std::size_t>(n), -1);
  int clock = 0;

  auto pop_block = [&](Vertex v, Vertex w) {
    VertexSet block;
    const Vertex tag = static_cast<Vertex>(out.blocks.size());
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      for (Vertex x : {e.first, e.second}) {
        if (marker[x] != tag) {
          marker[x] = tag;
          block.push_back(x);
        }
      }
      if (e == Edge{v, w}) break;
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = clock++;
    if (g.degree(root) == 0) {
      out.blocks.push_back({root});
      continue;
    }
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (disc[w] == -1) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = clock++;
          frames.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex w = f.v;
      const Vertex v = f.parent;
      frames.pop_back();
      if (v == -1) continue;
      low[v] = std::min(low[v], low[w]);
      if (low[w] >= disc[v]) pop_block(v, w);
    }
  }

  std::sort(out.blocks.begin(), out.blocks.end());
  out.block_membership.assign(static_cast<std::size_t>(n), {});
  for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b) {
    for (Vertex v : out.blocks[b]) out.block_membership[v].push_back(b);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (out.block_membership[v].size() >= 2) out.cut_vertices.push_back(v);
  }
  return out;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool is_clique_tree(const Graph& g) {
  if (!is_connected(g)) return false;
  const auto blocks = block_decomposition(g);
  for (const auto& block : blocks.blocks) {
    if (!is_clique(g, block)) return false;
  }
  return true;
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.size() + 1 == static_cast<std::size_t>(g.order());
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      if (a[i] < b[j]) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i], g.order());
    if (local[vertices[i]] != -1) {
      throw PreconditionError("repeated vertex in induced_subgraph");
    }
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex u : g.neighbors(vertices[i])) {
      if (local[u] != -1) adj[i].push_back(local[u]);
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.order();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.order() + b.order(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> map, int image_order) {
  if (map.size() != static_cast<std::size_t>(g.order())) {
    throw PreconditionError("relabel map must cover every vertex");
  }
  std::vector<char> used(static_cast<std::size_t>(image_order), 0);
  for (Vertex x : map) {
    check_vertex(x, image_order);
    if (used[x]) throw PreconditionError("relabel map is not injective");
    used[x] = 1;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(map[u], map[v]);
  return Graph(image_order, edges);
}

}  // namespace exactroot
