#include "exactroot/general_root.hpp"

namespace exactroot {

std::optional<Graph> recognize_any_root(const Graph& g) {
  Graph candidate = complement(g);
  if (exact_square(candidate) == g) return candidate;
  return std::nullopt;
}

std::optional<Digraph> recognize_any_root(const Digraph& d) {
  Digraph candidate = complement(d);
  if (exact_square(candidate) == d) return candidate;
  return std::nullopt;
}

}  // namespace exactroot
