#pragma once

#include <optional>

#include "exactroot/graph.hpp"

namespace exactroot {

/// A graph has an exact-distance square root iff it equals, as a labeled
/// graph, the exact square of its complement. Returns that complement when
/// the equality holds (so exact_square(*result) == g), otherwise nullopt.
std::optional<Graph> recognize_any_root(const Graph& g);

/// Same criterion for digraphs; unreachable pairs have infinite distance.
std::optional<Digraph> recognize_any_root(const Digraph& d);

}  // namespace exactroot
