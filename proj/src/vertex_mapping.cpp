#include "exactroot/vertex_mapping.hpp"

#include <algorithm>
#include <string>

#include "exactroot/error.hpp"

namespace exactroot {

VertexMapping::VertexMapping(std::vector<std::pair<Vertex, Vertex>> pairs)
    : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i].first == pairs_[i - 1].first) {
      throw PreconditionError("vertex " + std::to_string(pairs_[i].first) +
                              " mapped twice");
    }
  }
  auto targets = image();
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) {
    throw PreconditionError("mapping is not injective");
  }
}

VertexMapping VertexMapping::from_images(const std::vector<Vertex>& images) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= 0) pairs.emplace_back(static_cast<Vertex>(i), images[i]);
  }
  return VertexMapping(std::move(pairs));
}

VertexMapping VertexMapping::identity(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < n; ++v) pairs.emplace_back(v, v);
  return VertexMapping(std::move(pairs));
}

std::optional<Vertex> VertexMapping::find(Vertex from) const {
  auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), from,
      [](const auto& p, Vertex key) { return p.first < key; });
  if (it == pairs_.end() || it->first != from) return std::nullopt;
  return it->second;
}

Vertex VertexMapping::at(Vertex from) const {
  auto to = find(from);
  if (!to) {
    throw PreconditionError("vertex " + std::to_string(from) + " is unmapped");
  }
  return *to;
}

VertexSet VertexMapping::domain() const {
  VertexSet out;
  for (auto [a, b] : pairs_) out.push_back(a);
  return out;
}

VertexSet VertexMapping::image() const {
  VertexSet out;
  for (auto [a, b] : pairs_) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

VertexMapping VertexMapping::inverse() const {
  std::vector<std::pair<Vertex, Vertex>> flipped;
  for (auto [a, b] : pairs_) flipped.emplace_back(b, a);
  return VertexMapping(std::move(flipped));
}

std::vector<Vertex> VertexMapping::images(int n) const {
  std::vector<Vertex> out(static_cast<std::size_t>(n), -1);
  for (auto [a, b] : pairs_) {
    if (a >= 0 && a < n) out[a] = b;
  }
  return out;
}

bool is_edge_preserving(const VertexMapping& m, const Graph& a,
                        const Graph& b) {
  if (m.size() != static_cast<std::size_t>(a.order())) return false;
  auto img = m.images(a.order());
  for (Vertex v = 0; v < a.order(); ++v) {
    if (img[v] < 0 || img[v] >= b.order()) return false;
  }
  for (auto [u, v] : a.edges()) {
    if (!b.adjacent(img[u], img[v])) return false;
  }
  return true;
}

bool is_isomorphism(const VertexMapping& m, const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         is_edge_preserving(m, a, b);
}

}  // namespace exactroot
