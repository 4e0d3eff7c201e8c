#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exactroot/graph.hpp"
#include "exactroot/vertex_mapping.hpp"

namespace exactroot::io {

// graph6 follows McKay's formats.txt: a size header N(n) followed by the
// upper triangle of the adjacency matrix, column by column, packed six bits
// per byte with an offset of 63.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// "n m" on the first line, then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Graphviz DOT. Vertices in the domain of `highlight` get a color.
std::string emit_dot(const Graph& g,
                     const std::optional<VertexMapping>& highlight = {});

enum class Format { graph6, edge_list };

/// Edge lists start with a digit; graph6 bytes are all >= 63.
Format detect_format(std::string_view text);
Graph parse_graph(std::string_view text, std::optional<Format> format = {});
std::string emit_graph(const Graph& g, Format format);
Format parse_format_name(std::string_view name);

enum class CertificateKind {
  any_root,
  tree_root,
  bipartite_root,
  triangle_free_root,
  clique_dual,
  clique_cover,
  none,
};

std::string_view to_string(CertificateKind kind);
CertificateKind parse_certificate_kind(std::string_view name);

struct CertificateDocument {
  CertificateKind kind = CertificateKind::none;
  std::optional<Graph> root;
  std::optional<VertexMapping> mapping;
  std::optional<std::vector<VertexSet>> cliques;
  bool verified = false;

  bool operator==(const CertificateDocument&) const = default;
};

/// One line of JSON: {"kind", "root"?, "mapping"?, "cliques"?, "verified"}.
std::string emit_certificate_json(const CertificateDocument& c);
/// Strict: unknown fields and type mismatches raise ParseError whose message
/// starts with the JSON pointer of the offending value.
CertificateDocument parse_certificate_json(std::string_view text);

}  // namespace exactroot::io
