#include "exactroot/limb_embedding.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "exactroot/error.hpp"
#include "exactroot/matching.hpp"

namespace exactroot {

namespace {

struct Rooted {
  std::vector<Vertex> order;  // BFS order from the root
  std::vector<Vertex> parent;
};

Rooted root_at(const Graph& t, Vertex r) {
  Rooted out;
  out.parent.assign(static_cast<std::size_t>(t.order()), -1);
  out.order.push_back(r);
  for (std::size_t head = 0; head < out.order.size(); ++head) {
    const Vertex v = out.order[head];
    for (Vertex w : t.neighbors(v)) {
      if (w != out.parent[v] && w != r) {
        out.parent[w] = v;
        out.order.push_back(w);
      }
    }
  }
  return out;
}

// Height of T[parent(v), v] for every non-root v (1 for a leaf).
std::vector<int> down_heights(const Graph& t, const Rooted& rt) {
  std::vector<int> h(static_cast<std::size_t>(t.order()), 1);
  for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
    const Vertex p = rt.parent[*it];
    if (p >= 0) h[p] = std::max(h[p], h[*it] + 1);
  }
  // h[v] is now 1 + depth of v's subtree, which is the limb height.
  return h;
}

void require_tree(const Graph& t, const char* what) {
  if (!is_tree(t)) throw PreconditionError(std::string(what) + " must be a tree");
}

}  // namespace

std::vector<Limb> limbs_of_rooted(const Graph& t, Vertex leaf) {
  require_tree(t, "graph");
  if (leaf < 0 || leaf >= t.order() || t.degree(leaf) != 1) {
    throw PreconditionError("root of a rooted limb order must be a leaf");
  }
  const Rooted rt = root_at(t, leaf);
  const std::vector<int> h = down_heights(t, rt);
  std::vector<Limb> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (v != leaf) out.push_back({rt.parent[v], v, h[v]});
  }
  std::sort(out.begin(), out.end(), [](const Limb& x, const Limb& y) {
    return std::tie(x.height, x.root, x.anchor) <
           std::tie(y.height, y.root, y.anchor);
  });
  return out;
}

std::vector<Limb> limbs_of_unrooted(const Graph& t) {
  require_tree(t, "graph");
  if (t.order() < 2) throw PreconditionError("tree needs at least two vertices");
  const Rooted rt = root_at(t, 0);
  const std::vector<int> down = down_heights(t, rt);

  // up[v]: height of T[v, parent(v)], from the two tallest children of the
  // parent and the parent's own upward limb.
  std::vector<int> up(static_cast<std::size_t>(t.order()), 0);
  for (Vertex p : rt.order) {
    int best = 0;
    int second = 0;
    Vertex best_child = -1;
    for (Vertex c : t.neighbors(p)) {
      if (c == rt.parent[p]) continue;
      if (down[c] > best) {
        second = best;
        best = down[c];
        best_child = c;
      } else if (down[c] > second) {
        second = down[c];
      }
    }
    const int above = rt.parent[p] >= 0 ? up[p] : 0;
    for (Vertex c : t.neighbors(p)) {
      if (c == rt.parent[p]) continue;
      up[c] = 1 + std::max(above, c == best_child ? second : best);
    }
  }

  std::vector<Limb> out;
  for (Vertex u = 0; u < t.order(); ++u) {
    for (Vertex v : t.neighbors(u)) {
      out.push_back({u, v, rt.parent[v] == u ? down[v] : up[u]});
    }
  }
  return out;
}

int EmbeddingMatrix::column(Vertex u, Vertex v) const {
  auto nb = target.neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) throw PreconditionError("not a target edge");
  return col_base[u] + static_cast<int>(it - nb.begin());
}

namespace {

bool admissible(const EmbeddingRule& rule, Vertex a, Vertex b, Vertex u,
                Vertex v) {
  auto ok = [&](Vertex s, Vertex x) {
    return rule.source[s] >= 0 && rule.target[x] >= 0 &&
           rule.source[s] >= rule.target[x];
  };
  return ok(a, u) || ok(b, v);
}

bool needs_cover(const EmbeddingMatrix& m, int col) {
  return !m.required.empty() && m.required_beyond[col] > 0;
}

// Gives each child of the row's anchor a distinct neighbour w != u of v, as
// the maximum matching of the highest-limbs matrix. In covering mode every
// column that still has required vertices behind it must be used, and those
// columns read from `covering`.
std::optional<std::vector<Vertex>> assign_children(const EmbeddingMatrix& m,
                                                   int r, Vertex u, Vertex v,
                                                   bool covering) {
  const auto& kids = m.children[m.rows[r].anchor];
  std::vector<Vertex> cand;
  std::vector<int> cand_col;
  std::vector<int> needed;  // indices into cand
  const int base = m.col_base[v];
  auto nb = m.target.neighbors(v);
  for (std::size_t k = 0; k < nb.size(); ++k) {
    if (nb[k] == u) continue;
    const int col = base + static_cast<int>(k);
    if (covering && needs_cover(m, col)) {
      needed.push_back(static_cast<int>(cand.size()));
    }
    cand.push_back(nb[k]);
    cand_col.push_back(col);
  }
  const int rows = static_cast<int>(kids.size());
  const int cols = static_cast<int>(cand.size());
  if (rows > cols || static_cast<int>(needed.size()) > rows) return std::nullopt;

  auto entry = [&](int i, int j) {
    const int cr = m.row_of_anchor[kids[i]];
    if (covering && needs_cover(m, cand_col[j])) {
      return m.covering[cr][cand_col[j]] != 0;
    }
    return m.entries[cr][cand_col[j]] != 0;
  };

  BipartiteMatrix h(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (entry(i, j)) h.set(i, j);
    }
  }

  Matching seed;
  if (!needed.empty()) {
    BipartiteMatrix hr(rows, static_cast<int>(needed.size()));
    for (int i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < needed.size(); ++j) {
        if (h.at(i, needed[j])) hr.set(i, static_cast<int>(j));
      }
    }
    const Matching mr = maximum_matching(hr);
    if (mr.size() < needed.size()) return std::nullopt;
    for (auto [i, j] : mr.pairs) seed.pairs.emplace_back(i, needed[j]);
  }
  // Augmenting from the seed keeps the needed columns matched, and reaches
  // a row-complete matching whenever one exists.
  const Matching mm = maximum_matching(h, seed);
  if (static_cast<int>(mm.size()) < rows) return std::nullopt;
  std::vector<Vertex> out(static_cast<std::size_t>(rows));
  for (auto [i, j] : mm.pairs) out[i] = cand[j];
  return out;
}

bool entry_value(const EmbeddingMatrix& m, int r, int col, Vertex u, Vertex v,
                 const std::vector<int>& target_height, bool covering) {
  const Limb& row = m.rows[r];
  if (covering) {
    if (!m.entries[r][col]) return false;
  } else {
    if (target_height[col] < row.height) return false;
    const auto& kids = m.children[row.anchor];
    if (m.target.degree(v) - 1 < static_cast<int>(kids.size())) return false;
    if (m.rule && !admissible(*m.rule, row.root, row.anchor, u, v)) {
      return false;
    }
    if (kids.empty()) return true;
    if (kids.size() == 1) {
      // Single child: no matching needed.
      const int cr = m.row_of_anchor[kids[0]];
      const int base = m.col_base[v];
      auto nb = m.target.neighbors(v);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        if (nb[k] != u && m.entries[cr][base + static_cast<int>(k)]) return true;
      }
      return false;
    }
  }
  return assign_children(m, r, u, v, covering).has_value();
}

}  // namespace

EmbeddingMatrix build_embedding_matrix(const Graph& source, Vertex leaf,
                                       const Graph& target,
                                       std::optional<EmbeddingRule> rule,
                                       const VertexSet& required) {
  EmbeddingMatrix m;
  m.rows = limbs_of_rooted(source, leaf);
  m.cols = limbs_of_unrooted(target);
  m.source = source;
  m.source_leaf = leaf;
  m.target = target;
  if (rule && (static_cast<int>(rule->source.size()) != source.order() ||
               static_cast<int>(rule->target.size()) != target.order())) {
    throw PreconditionError("rule weights must cover both trees");
  }
  m.rule = std::move(rule);
  for (Vertex x : required) {
    if (x < 0 || x >= target.order()) {
      throw PreconditionError("required vertex outside the target");
    }
  }
  m.required = required;
  std::sort(m.required.begin(), m.required.end());
  m.required.erase(std::unique(m.required.begin(), m.required.end()),
                   m.required.end());

  const Rooted rs = root_at(source, leaf);
  m.parent = rs.parent;
  m.children.resize(static_cast<std::size_t>(source.order()));
  for (Vertex s = 0; s < source.order(); ++s) {
    if (m.parent[s] >= 0) m.children[m.parent[s]].push_back(s);
  }
  m.row_of_anchor.assign(static_cast<std::size_t>(source.order()), -1);
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    m.row_of_anchor[m.rows[r].anchor] = static_cast<int>(r);
  }

  const int nt = target.order();
  m.col_base.assign(static_cast<std::size_t>(nt), 0);
  for (Vertex u = 1; u < nt; ++u) m.col_base[u] = m.col_base[u - 1] + target.degree(u - 1);
  std::vector<int> target_height(m.cols.size());
  for (std::size_t c = 0; c < m.cols.size(); ++c) target_height[c] = m.cols[c].height;

  // Required vertices behind each column: subtree counts from vertex 0.
  if (!m.required.empty()) {
    const Rooted rt = root_at(target, 0);
    std::vector<int> sub(static_cast<std::size_t>(nt), 0);
    for (Vertex x : m.required) sub[x] = 1;
    for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
      if (rt.parent[*it] >= 0) sub[rt.parent[*it]] += sub[*it];
    }
    const int total = static_cast<int>(m.required.size());
    m.required_beyond.resize(m.cols.size());
    for (std::size_t c = 0; c < m.cols.size(); ++c) {
      const Vertex u = m.cols[c].root;
      const Vertex v = m.cols[c].anchor;
      m.required_beyond[c] = rt.parent[v] == u ? sub[v] : total - sub[u];
    }
  }

  const std::size_t ncols = m.cols.size();
  m.entries.assign(m.rows.size(), std::vector<std::uint8_t>(ncols, 0));
  if (!m.required.empty()) {
    m.covering.assign(m.rows.size(), std::vector<std::uint8_t>(ncols, 0));
  }
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (std::size_t c = 0; c < ncols; ++c) {
      const Vertex u = m.cols[c].root;
      const Vertex v = m.cols[c].anchor;
      const int ri = static_cast<int>(r);
      const int ci = static_cast<int>(c);
      m.entries[r][c] = entry_value(m, ri, ci, u, v, target_height, false);
      if (!m.required.empty()) {
        m.covering[r][c] = entry_value(m, ri, ci, u, v, target_height, true);
      }
    }
  }
  return m;
}

namespace {

VertexMapping retrace(const EmbeddingMatrix& m, int row, int col,
                      bool covering) {
  if (row < 0 || row >= static_cast<int>(m.rows.size()) || col < 0 ||
      col >= static_cast<int>(m.cols.size())) {
    throw PreconditionError("matrix position out of range");
  }
  if (covering ? !m.covering_at(row, col) : !m.at(row, col)) {
    throw PreconditionError("cannot retrace a zero entry");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  struct Item {
    int row;
    Vertex u;
    Vertex v;
    bool covering;
  };
  const Vertex u0 = m.cols[col].root;
  const Vertex v0 = m.cols[col].anchor;
  pairs.emplace_back(m.rows[row].root, u0);
  pairs.emplace_back(m.rows[row].anchor, v0);
  std::vector<Item> stack{{row, u0, v0, covering}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    const auto& kids = m.children[m.rows[it.row].anchor];
    if (kids.empty()) continue;
    auto chosen = assign_children(m, it.row, it.u, it.v, it.covering);
    if (!chosen) throw std::logic_error("retrace: unit entry without matching");
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const Vertex w = (*chosen)[i];
      pairs.emplace_back(kids[i], w);
      const bool cov = it.covering && needs_cover(m, m.column(it.v, w));
      stack.push_back({m.row_of_anchor[kids[i]], it.v, w, cov});
    }
  }
  return VertexMapping(std::move(pairs));
}

}  // namespace

VertexMapping retrace_embedding(const EmbeddingMatrix& m, int row, int col) {
  return retrace(m, row, col, false);
}

VertexMapping retrace_covering_embedding(const EmbeddingMatrix& m, int row,
                                         int col) {
  if (m.required.empty()) {
    throw PreconditionError("matrix has no covering entries");
  }
  return retrace(m, row, col, true);
}

bool subtree_isomorphic(const Graph& s, const Graph& t) {
  require_tree(s, "pattern");
  require_tree(t, "host");
  if (s.order() == 1) return true;
  if (t.order() < 2) return false;
  Vertex leaf = 0;
  while (s.degree(leaf) != 1) ++leaf;
  const EmbeddingMatrix m = build_embedding_matrix(s, leaf, t);
  const auto& last = m.entries.back();
  return std::find(last.begin(), last.end(), 1) != last.end();
}

}  // namespace exactroot
