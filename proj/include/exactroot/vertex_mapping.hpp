#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "exactroot/graph.hpp"

namespace exactroot {

/// Injective partial map between two vertex sets, stored as (from, to) pairs
/// sorted by `from`.
class VertexMapping {
 public:
  VertexMapping() = default;
  /// Throws PreconditionError when a source repeats or two sources share an
  /// image.
  explicit VertexMapping(std::vector<std::pair<Vertex, Vertex>> pairs);
  /// Dense form: from[i] = i, to = images[i]; entries < 0 are skipped.
  static VertexMapping from_images(const std::vector<Vertex>& images);
  static VertexMapping identity(int n);

  const std::vector<std::pair<Vertex, Vertex>>& pairs() const noexcept {
    return pairs_;
  }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  std::optional<Vertex> find(Vertex from) const;
  Vertex at(Vertex from) const;  // throws PreconditionError if unmapped
  bool contains(Vertex from) const { return find(from).has_value(); }

  VertexSet domain() const;
  VertexSet image() const;
  VertexMapping inverse() const;

  /// Dense image vector of length n (-1 where unmapped).
  std::vector<Vertex> images(int n) const;

  bool operator==(const VertexMapping&) const = default;

 private:
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

/// True when `m` is a bijection V(a) -> V(b) with uv in E(a) iff
/// m(u)m(v) in E(b).
bool is_isomorphism(const VertexMapping& m, const Graph& a, const Graph& b);

/// True when every edge of `a` maps to an edge of `b` and `m` is defined on
/// all of V(a) (a subgraph embedding, not necessarily induced).
bool is_edge_preserving(const VertexMapping& m, const Graph& a,
                        const Graph& b);

}  // namespace exactroot
