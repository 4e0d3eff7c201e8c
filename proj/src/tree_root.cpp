#include "exactroot/tree_root.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "exactroot/error.hpp"

namespace exactroot {

namespace {

VertexSet iota_set(int from, int count) {
  VertexSet out(static_cast<std::size_t>(count));
  std::iota(out.begin(), out.end(), from);
  return out;
}

Vertex common_neighbor(const Graph& t, Vertex a, Vertex b) {
  auto na = t.neighbors(a);
  auto nb = t.neighbors(b);
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i == *j) return *i;
    if (*i < *j) ++i; else ++j;
  }
  return -1;
}

}  // namespace

CanonicalTree canonical_tree(const Graph& w) {
  if (!is_clique_tree(w)) throw PreconditionError("graph is not a clique-tree");
  CanonicalTree out;
  out.source = w;
  out.original_count = w.order();
  out.blocks = block_decomposition(w).blocks;
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < out.blocks.size(); ++j) {
    const Vertex b = out.block_vertex(static_cast<int>(j));
    for (Vertex v : out.blocks[j]) edges.emplace_back(v, b);
  }
  out.tree = Graph(w.order() + static_cast<int>(out.blocks.size()), edges);
  return out;
}

bool clique_tree_via_canonical(const Graph& w) {
  if (!is_clique_tree(w)) return false;
  const CanonicalTree ct = canonical_tree(w);
  if (!is_tree(ct.tree)) throw std::logic_error("canonical tree is not a tree");
  const Graph sq = exact_square(ct.tree);
  const VertexSet originals = iota_set(0, w.order());
  if (induced_subgraph(sq, originals) != w) {
    throw std::logic_error("clique-tree differs from its square component");
  }
  for (const auto& comp : connected_components(sq)) {
    if (comp.front() == 0 && comp != originals) {
      throw std::logic_error("clique-tree is not a whole square component");
    }
  }
  return true;
}

std::optional<StageOne> stage1(const Graph& g, bool swap_components) {
  const auto comps = connected_components(g);
  if (comps.size() != 2) return std::nullopt;
  StageOne s;
  s.c1_vertices = comps[swap_components ? 1 : 0];
  s.c2_vertices = comps[swap_components ? 0 : 1];
  s.c1 = induced_subgraph(g, s.c1_vertices);
  s.c2 = induced_subgraph(g, s.c2_vertices);
  if (!is_clique_tree(s.c1) || !is_clique_tree(s.c2)) return std::nullopt;

  s.c2_blocks = block_decomposition(s.c2);
  s.b_c2.resize(static_cast<std::size_t>(s.c2.order()));
  for (Vertex v = 0; v < s.c2.order(); ++v) {
    s.b_c2[v] = s.c2_blocks.edge_block_count(v);
  }

  s.t_c1 = canonical_tree(s.c1);
  const int n1 = s.c1.order();
  const int nb = static_cast<int>(s.t_c1.blocks.size());
  const Graph sq = exact_square(s.t_c1.tree);
  if (induced_subgraph(sq, iota_set(0, n1)) != s.c1) {
    throw std::logic_error("stage1: C1 is not a component of its square");
  }
  s.hat_c2 = induced_subgraph(sq, iota_set(n1, nb));
  s.d_t.resize(static_cast<std::size_t>(nb));
  for (int j = 0; j < nb; ++j) s.d_t[j] = s.t_c1.tree.degree(n1 + j);
  s.t_hat_c2 = canonical_tree(s.hat_c2);
  s.t_c2 = canonical_tree(s.c2);
  return s;
}

EmbeddingMatrix stage2_embedding_matrix(const StageOne& s,
                                        const VertexSet& required) {
  const int nh = s.hat_c2.order();
  if (nh < 2) {
    throw PreconditionError("embedding matrix needs at least two vertices in hatC2");
  }
  const Graph& src = s.t_hat_c2.tree;
  const Graph& dst = s.t_c2.tree;
  EmbeddingRule rule;
  rule.source.assign(static_cast<std::size_t>(src.order()), -1);
  for (Vertex v = 0; v < nh; ++v) rule.source[v] = s.d_t[v];
  rule.target.assign(static_cast<std::size_t>(dst.order()), -1);
  for (Vertex x = 0; x < s.c2.order(); ++x) rule.target[x] = s.b_c2[x];
  Vertex leaf = 0;
  while (src.degree(leaf) != 1) ++leaf;
  return build_embedding_matrix(src, leaf, dst, std::move(rule), required);
}

VertexMapping restriction_iso(const VertexMapping& phi_tree,
                              const CanonicalTree& c, const CanonicalTree& d) {
  if (!is_edge_preserving(phi_tree, c.tree, d.tree)) {
    throw PreconditionError("mapping is not an embedding of the canonical trees");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (auto [s, x] : phi_tree.pairs()) {
    if (c.is_block(s)) continue;
    if (d.is_block(x)) {
      throw PreconditionError("an original vertex is mapped to a block vertex");
    }
    pairs.emplace_back(s, x);
  }
  VertexMapping psi(std::move(pairs));
  const int n = c.original_count;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (c.source.adjacent(i, j) != d.source.adjacent(psi.at(i), psi.at(j))) {
        throw std::logic_error("restriction is not an induced isomorphism");
      }
    }
  }
  return psi;
}

TreeCompletion complete_tree_root(const CanonicalTree& t_w1, const Graph& g,
                                  const VertexMapping& phi) {
  const int n1 = t_w1.original_count;
  const int n2 = g.order() - n1;
  if (n2 < 1) throw PreconditionError("graph has no second component");
  const Graph w1 = induced_subgraph(g, iota_set(0, n1));
  const Graph w2 = induced_subgraph(g, iota_set(n1, n2));
  if (w1 != t_w1.source || disjoint_union(w1, w2) != g || !is_clique_tree(w2)) {
    throw PreconditionError("graph is not W1 + W2 for the given canonical tree");
  }

  const int nb = static_cast<int>(t_w1.blocks.size());
  const Graph hat =
      induced_subgraph(exact_square(t_w1.tree), iota_set(n1, nb));
  if (phi.domain() != iota_set(0, nb)) {
    throw PreconditionError("mapping must be defined on every vertex of hatW2");
  }
  std::vector<Vertex> inv(static_cast<std::size_t>(n2), -1);
  for (auto [j, x] : phi.pairs()) {
    if (x < 0 || x >= n2) throw PreconditionError("mapping image outside W2");
    inv[x] = j;
  }
  for (int j = 0; j < nb; ++j) {
    for (int k = j + 1; k < nb; ++k) {
      if (hat.adjacent(j, k) != w2.adjacent(phi.at(j), phi.at(k))) {
        throw PreconditionError("mapping is not an isomorphism onto an induced subgraph");
      }
    }
  }
  const BlockDecomposition bd = block_decomposition(w2);
  for (int j = 0; j < nb; ++j) {
    if (t_w1.tree.degree(n1 + j) < bd.edge_block_count(phi.at(j))) {
      throw PreconditionError("mapping violates the degree/block condition");
    }
  }
  for (Vertex x : bd.cut_vertices) {
    if (inv[x] < 0) throw PreconditionError("a cut-vertex of W2 is not in the image");
  }

  std::vector<Edge> edges = t_w1.tree.edges();
  int next = t_w1.tree.order();
  std::vector<Vertex> placed(static_cast<std::size_t>(n2), -1);
  auto attach = [&](const VertexSet& group, Vertex at) {
    for (Vertex a : group) {
      if (placed[a] != -1) throw std::logic_error("completion adds a vertex twice");
      placed[a] = next;
      edges.emplace_back(at, next++);
    }
  };
  auto unimaged = [&](const VertexSet& block) {
    VertexSet out;
    for (Vertex a : block) {
      if (inv[a] < 0) out.push_back(a);
    }
    return out;
  };

  if (bd.cut_vertices.empty()) {
    Vertex w = -1;
    if (nb == 1) {
      w = t_w1.blocks[0].front();
    } else {
      VertexSet common = t_w1.blocks[0];
      for (const auto& b : t_w1.blocks) {
        VertexSet next_common;
        std::set_intersection(common.begin(), common.end(), b.begin(), b.end(),
                              std::back_inserter(next_common));
        common = std::move(next_common);
      }
      if (common.empty()) throw PreconditionError("blocks of W1 share no vertex");
      w = common.front();
    }
    VertexSet rest;
    for (Vertex a = 0; a < n2; ++a) {
      if (inv[a] < 0) rest.push_back(a);
    }
    attach(rest, w);
  } else {
    VertexSet used;  // F
    auto in_used = [&](Vertex z) {
      return std::find(used.begin(), used.end(), z) != used.end();
    };
    for (Vertex x : bd.cut_vertices) {
      const Vertex v = n1 + inv[x];
      std::vector<int> lonely;
      for (int bi : bd.block_membership[x]) {
        const VertexSet& block = bd.blocks[bi];
        if (block.size() < 2) continue;
        Vertex y = -1;
        for (Vertex a : block) {
          if (a != x && inv[a] >= 0) {
            y = a;
            break;
          }
        }
        if (y < 0) {
          lonely.push_back(bi);
          continue;
        }
        const Vertex z = common_neighbor(t_w1.tree, v, n1 + inv[y]);
        if (z < 0) throw std::logic_error("completion: blocks do not meet");
        if (!in_used(z)) {
          attach(unimaged(block), z);
          used.push_back(z);
        }
      }
      for (int bi : lonely) {
        Vertex h = -1;
        for (Vertex c : t_w1.tree.neighbors(v)) {
          if (!in_used(c)) {
            h = c;
            break;
          }
        }
        if (h < 0) throw PreconditionError("no free neighbour left for a block");
        attach(unimaged(bd.blocks[bi]), h);
        used.push_back(h);
      }
    }
  }
  for (Vertex a = 0; a < n2; ++a) {
    if (inv[a] < 0 && placed[a] < 0) {
      throw std::logic_error("completion leaves a vertex of W2 out");
    }
  }

  TreeCompletion out;
  out.tree = Graph(next, edges);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n1; ++i) pairs.emplace_back(i, i);
  for (int j = 0; j < nb; ++j) pairs.emplace_back(n1 + j, n1 + phi.at(j));
  for (Vertex a = 0; a < n2; ++a) {
    if (placed[a] >= 0) pairs.emplace_back(placed[a], n1 + a);
  }
  out.psi = VertexMapping(std::move(pairs));
  if (!is_tree(out.tree) ||
      !is_isomorphism(out.psi, exact_square(out.tree), g)) {
    throw std::logic_error("completion does not reproduce the input");
  }
  return out;
}

namespace {

bool covers(const VertexMapping& m, const VertexSet& required) {
  VertexSet image = m.image();
  return std::includes(image.begin(), image.end(), required.begin(),
                       required.end());
}

}  // namespace

TreeRootAnswer recognize_tree_root(const Graph& g, TreeRootOptions opts) {
  TreeRootAnswer answer;
  const int n = g.order();
  if (n < 2) return answer;
  const auto s = stage1(g, opts.swap_components);
  if (!s) return answer;

  const int n1 = s->c1.order();
  const Graph layout = disjoint_union(s->c1, s->c2);
  const VertexSet& cut = s->c2_blocks.cut_vertices;

  auto finish = [&](const VertexMapping& phi, bool fallback) {
    const TreeCompletion tc = complete_tree_root(s->t_c1, layout, phi);
    std::vector<Vertex> to_g(static_cast<std::size_t>(tc.tree.order()));
    for (auto [t, p] : tc.psi.pairs()) {
      to_g[t] = p < n1 ? s->c1_vertices[p] : s->c2_vertices[p - n1];
    }
    Graph root = relabel(tc.tree, to_g, n);
    if (opts.verify && (!is_tree(root) || exact_square(root) != g)) {
      throw std::logic_error("recognize_tree_root: certificate check failed");
    }
    answer.decision = true;
    answer.root = std::move(root);
    answer.iso_to_input = VertexMapping::identity(n);
    answer.used_coverage_fallback = fallback;
    return answer;
  };

  if (s->hat_c2.order() == 1) {
    for (Vertex x = 0; x < s->c2.order(); ++x) {
      const bool cut_ok =
          cut.empty() || (cut.size() == 1 && cut.front() == x);
      if (s->d_t[0] >= s->b_c2[x] && cut_ok) {
        return finish(VertexMapping({{0, x}}), false);
      }
    }
    return answer;
  }

  {
    const EmbeddingMatrix m = stage2_embedding_matrix(*s);
    const int last = m.last_row();
    for (int c = 0; c < static_cast<int>(m.cols.size()); ++c) {
      if (!m.at(last, c)) continue;
      const VertexMapping phi_tree = retrace_embedding(m, last, c);
      if (covers(phi_tree, cut)) {
        return finish(restriction_iso(phi_tree, s->t_hat_c2, s->t_c2), false);
      }
    }
  }
  if (cut.empty()) return answer;

  // The retraced embeddings all missed a cut-vertex; search the embeddings
  // that cover them directly.
  const EmbeddingMatrix m = stage2_embedding_matrix(*s, cut);
  const int last = m.last_row();
  const int total = static_cast<int>(cut.size());
  for (int c = 0; c < static_cast<int>(m.cols.size()); ++c) {
    // The column root is the image of the leaf, so it counts as covered.
    const Vertex u = m.cols[c].root;
    const int at_root = std::binary_search(cut.begin(), cut.end(), u) ? 1 : 0;
    if (!m.covering_at(last, c) || m.required_beyond[c] + at_root != total) {
      continue;
    }
    const VertexMapping phi_tree = retrace_covering_embedding(m, last, c);
    if (!covers(phi_tree, cut)) {
      throw std::logic_error("covering embedding misses a cut-vertex");
    }
    return finish(restriction_iso(phi_tree, s->t_hat_c2, s->t_c2), true);
  }
  return answer;
}

}  // namespace exactroot
