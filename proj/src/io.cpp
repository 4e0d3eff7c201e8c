#include "exactroot/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <sstream>
#include <tuple>

#include "exactroot/error.hpp"
#include "json.hpp"

namespace exactroot::io {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kSmallLimit = 62;
constexpr std::int64_t kMediumLimit = 258047;

std::int64_t triangle_bits(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    base = kGraph6Header.size();
    text.remove_prefix(base);
  }
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", base);

  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte at offset " + std::to_string(base + i) +
                           " outside [63,126]",
                       base + i);
    }
  }
  auto value = [&](std::size_t i) {
    return static_cast<std::int64_t>(static_cast<unsigned char>(text[i]) - 63);
  };

  std::int64_t n = 0;
  std::size_t header = 0;
  if (value(0) != 63) {
    n = value(0);
    header = 1;
  } else if (text.size() >= 2 && value(1) != 63) {
    if (text.size() < 4) {
      throw ParseError("graph6: truncated 4-byte length header", base);
    }
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    header = 4;
    if (n <= kSmallLimit) {
      throw ParseError("graph6: non-canonical length header", base);
    }
  } else {
    if (text.size() < 8) {
      throw ParseError("graph6: truncated 8-byte length header", base);
    }
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    header = 8;
    if (n <= kMediumLimit) {
      throw ParseError("graph6: non-canonical length header", base);
    }
  }

  const std::int64_t bits = triangle_bits(n);
  const std::int64_t body = (bits + 5) / 6;
  const auto actual = static_cast<std::int64_t>(text.size() - header);
  if (actual != body) {
    const std::size_t at =
        base + header + static_cast<std::size_t>(std::min(actual, body));
    throw ParseError("graph6: expected " + std::to_string(body) +
                         " data bytes for " + std::to_string(n) +
                         " vertices, found " + std::to_string(actual),
                     at);
  }

  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::int64_t byte = value(header + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = header + static_cast<std::size_t>(body - 1);
    const int padding = static_cast<int>(6 - bits % 6);
    if ((value(last) & ((1 << padding) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits in byte at offset " +
                           std::to_string(base + last),
                       base + last);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  if (n <= kSmallLimit) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= kMediumLimit) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<long long> parse_ints(std::string_view line, std::size_t lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    auto [ptr, ec] =
        std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() ||
        (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError("edge list line " + std::to_string(lineno) +
                           ": expected integers",
                       lineno);
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("edge list line 1: missing header", 1);
  const auto header = parse_ints(lines[0], 1);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
    throw ParseError("edge list line 1: expected \"n m\"", 1);
  }
  const auto n = header[0];
  const auto m = header[1];
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("edge list: header announces " + std::to_string(m) +
                         " edges, found " + std::to_string(lines.size() - 1),
                     std::min<std::size_t>(lines.size(),
                                           static_cast<std::size_t>(m) + 1) +
                         1);
  }
  struct Entry {
    Vertex u, v;
    std::size_t line;
  };
  std::vector<Entry> entries;
  entries.reserve(lines.size());
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::size_t lineno = k + 1;
    const auto uv = parse_ints(lines[k], lineno);
    auto fail = [&](const std::string& why) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": " + why,
                       lineno);
    };
    if (uv.size() != 2) fail("expected \"u v\"");
    const auto u = uv[0];
    const auto v = uv[1];
    if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
    if (u == v) fail("self-loop");
    entries.push_back({static_cast<Vertex>(std::min(u, v)),
                       static_cast<Vertex>(std::max(u, v)), lineno});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.u, a.v, a.line) < std::tie(b.u, b.v, b.line);
  });
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k > 0 && entries[k].u == entries[k - 1].u &&
        entries[k].v == entries[k - 1].v) {
      throw ParseError("edge list line " + std::to_string(entries[k].line) +
                           ": duplicate edge",
                       entries[k].line);
    }
    adj[entries[k].u].push_back(entries[k].v);
    adj[entries[k].v].push_back(entries[k].u);
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string emit_dot(const Graph& g,
                     const std::optional<VertexMapping>& highlight) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (highlight) {
      if (auto to = highlight->find(v)) {
        out << " [color=red, xlabel=\"" << *to << "\"]";
      }
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Format detect_format(std::string_view text) {
  if (!text.empty() && text.front() >= '0' && text.front() <= '9') {
    return Format::edge_list;
  }
  return Format::graph6;
}

Graph parse_graph(std::string_view text, std::optional<Format> format) {
  switch (format.value_or(detect_format(text))) {
    case Format::graph6:
      return parse_graph6(text);
    case Format::edge_list:
      return parse_edge_list(text);
  }
  throw PreconditionError("unknown format");
}

std::string emit_graph(const Graph& g, Format format) {
  if (format == Format::graph6) return emit_graph6(g) + "\n";
  return emit_edge_list(g);
}

Format parse_format_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return Format::graph6;
  if (name == "edgelist" || name == "edge-list") return Format::edge_list;
  throw PreconditionError("unknown format '" + std::string(name) + "'");
}

namespace {

constexpr std::pair<CertificateKind, std::string_view> kKindNames[] = {
    {CertificateKind::any_root, "any-root"},
    {CertificateKind::tree_root, "tree-root"},
    {CertificateKind::bipartite_root, "bipartite-root"},
    {CertificateKind::triangle_free_root, "triangle-free-root"},
    {CertificateKind::clique_dual, "clique-dual"},
    {CertificateKind::clique_cover, "clique-cover"},
    {CertificateKind::none, "none"},
};

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& pointer,
                               const std::string& why) {
  throw ParseError(pointer + ": " + why, 0);
}

Vertex as_vertex(const json& value, const std::string& pointer) {
  if (!value.is_number_integer()) schema_error(pointer, "expected integer");
  const auto x = value.get<long long>();
  if (x < 0 || x > std::numeric_limits<Vertex>::max()) {
    schema_error(pointer, "vertex out of range");
  }
  return static_cast<Vertex>(x);
}

}  // namespace

std::string_view to_string(CertificateKind kind) {
  for (auto [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "none";
}

CertificateKind parse_certificate_kind(std::string_view name) {
  for (auto [k, label] : kKindNames) {
    if (label == name) return k;
  }
  throw ParseError("/kind: unknown certificate kind '" + std::string(name) +
                       "'",
                   0);
}

std::string emit_certificate_json(const CertificateDocument& c) {
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(to_string(c.kind));
  if (c.root) doc["root"] = emit_graph6(*c.root);
  if (c.mapping) {
    auto pairs = nlohmann::ordered_json::array();
    for (auto [a, b] : c.mapping->pairs()) pairs.push_back({a, b});
    doc["mapping"] = pairs;
  }
  if (c.cliques) doc["cliques"] = *c.cliques;
  doc["verified"] = c.verified;
  return doc.dump();
}

CertificateDocument parse_certificate_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("/: invalid JSON: ") + e.what(), 0);
  }
  if (!doc.is_object()) schema_error("", "expected object");

  CertificateDocument out;
  bool saw_kind = false;
  bool saw_verified = false;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    const json& value = it.value();
    const std::string pointer = "/" + key;
    if (key == "kind") {
      if (!value.is_string()) schema_error(pointer, "expected string");
      out.kind = parse_certificate_kind(value.get<std::string>());
      saw_kind = true;
    } else if (key == "root") {
      if (!value.is_string()) schema_error(pointer, "expected graph6 string");
      try {
        out.root = parse_graph6(value.get<std::string>());
      } catch (const Error& e) {
        schema_error(pointer, e.what());
      }
    } else if (key == "mapping") {
      if (!value.is_array()) schema_error(pointer, "expected array");
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (std::size_t i = 0; i < value.size(); ++i) {
        const auto p = pointer + "/" + std::to_string(i);
        if (!value[i].is_array() || value[i].size() != 2) {
          schema_error(p, "expected [int, int]");
        }
        pairs.emplace_back(as_vertex(value[i][0], p + "/0"),
                           as_vertex(value[i][1], p + "/1"));
      }
      try {
        out.mapping = VertexMapping(std::move(pairs));
      } catch (const Error& e) {
        schema_error(pointer, e.what());
      }
    } else if (key == "cliques") {
      if (!value.is_array()) schema_error(pointer, "expected array");
      std::vector<VertexSet> cliques;
      for (std::size_t i = 0; i < value.size(); ++i) {
        const auto p = pointer + "/" + std::to_string(i);
        if (!value[i].is_array()) schema_error(p, "expected array");
        VertexSet clique;
        for (std::size_t j = 0; j < value[i].size(); ++j) {
          clique.push_back(as_vertex(value[i][j], p + "/" + std::to_string(j)));
        }
        cliques.push_back(std::move(clique));
      }
      out.cliques = std::move(cliques);
    } else if (key == "verified") {
      if (!value.is_boolean()) schema_error(pointer, "expected boolean");
      out.verified = value.get<bool>();
      saw_verified = true;
    } else {
      schema_error(pointer, "unknown field");
    }
  }
  if (!saw_kind) schema_error("/kind", "missing required field");
  if (!saw_verified) schema_error("/verified", "missing required field");

  auto forbid = [&](bool present, const char* field) {
    if (present) {
      schema_error(std::string("/") + field,
                   "not allowed for kind " + std::string(to_string(out.kind)));
    }
  };
  auto require = [&](bool present, const char* field) {
    if (!present) {
      schema_error(std::string("/") + field,
                   "required for kind " + std::string(to_string(out.kind)));
    }
  };
  switch (out.kind) {
    case CertificateKind::none:
      forbid(out.root.has_value(), "root");
      forbid(out.mapping.has_value(), "mapping");
      forbid(out.cliques.has_value(), "cliques");
      break;
    case CertificateKind::any_root:
    case CertificateKind::bipartite_root:
    case CertificateKind::tree_root:
      require(out.root.has_value(), "root");
      forbid(out.cliques.has_value(), "cliques");
      break;
    case CertificateKind::triangle_free_root:
      if (!out.root && !out.cliques) require(false, "root");
      forbid(out.mapping.has_value(), "mapping");
      break;
    case CertificateKind::clique_dual:
      require(out.cliques.has_value(), "cliques");
      require(out.mapping.has_value(), "mapping");
      forbid(out.root.has_value(), "root");
      break;
    case CertificateKind::clique_cover:
      require(out.cliques.has_value(), "cliques");
      forbid(out.root.has_value(), "root");
      forbid(out.mapping.has_value(), "mapping");
      break;
  }
  return out;
}

}  // namespace exactroot::io
