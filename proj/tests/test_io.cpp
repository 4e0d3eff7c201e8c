#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "exactroot/error.hpp"
#include "exactroot/io.hpp"

using namespace exactroot;
using namespace exactroot::io;

TEST_CASE("graph6 decoding") {
  // Reference decoder (networkx) gives K_{1,4} for "D?{".
  CHECK(parse_graph6("D?{") == Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(parse_graph6("A_") == Graph(2, {{0, 1}}));
  CHECK(parse_graph6("?") == Graph(0));
  CHECK(parse_graph6("A_\n") == Graph(2, {{0, 1}}));
}

TEST_CASE("graph6 encoding") {
  CHECK(emit_graph6(Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}})) == "D?{");
  CHECK(emit_graph6(Graph(1)) == "@");
  CHECK(emit_graph6(Graph(2, {{0, 1}})) == "A_");
}

TEST_CASE("graph6 errors name the byte") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("A"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Aw"), ParseError);  // padding bits set
  CHECK_THROWS_AS(parse_graph6("A_?"), ParseError);
  try {
    parse_graph6("D?\x7f");
    FAIL("accepted an out-of-range byte");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("edge lists") {
  CHECK(parse_edge_list("2 1\n0 1") == Graph(2, {{0, 1}}));
  CHECK(parse_edge_list("3 0") == Graph(3));
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(parse_edge_list(emit_edge_list(c5)) == c5);
  CHECK(emit_edge_list(Graph(2, {{0, 1}})) == "2 1\n0 1\n");
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 2"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 1\n1 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("x"), ParseError);
}

TEST_CASE("format detection") {
  CHECK(detect_format("D?{") == Format::graph6);
  CHECK(detect_format("5 0") == Format::edge_list);
  CHECK(parse_graph("2 1\n0 1") == parse_graph("A_"));
  CHECK(parse_format_name("g6") == Format::graph6);
  CHECK_THROWS_AS(parse_format_name("dot"), PreconditionError);
}

TEST_CASE("DOT output") {
  CHECK(emit_dot(Graph(2, {{0, 1}})) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
  CHECK(emit_dot(Graph(1)) == "graph G {\n  0;\n}\n");
  const std::string dot =
      emit_dot(Graph(3, {{0, 1}, {1, 2}}), VertexMapping({{1, 1}}));
  CHECK(dot.find("  1 [color=red") != std::string::npos);
  CHECK(dot.find("  0 [") == std::string::npos);
}

TEST_CASE("certificate JSON") {
  CertificateDocument star;
  star.kind = CertificateKind::tree_root;
  star.root = Graph(4, {{0, 3}, {1, 3}, {2, 3}});
  star.mapping = VertexMapping::identity(4);
  star.verified = true;
  const std::string text = emit_certificate_json(star);
  CHECK(text ==
        R"({"kind":"tree-root","root":"CF","mapping":[[0,0],[1,1],[2,2],[3,3]],"verified":true})");
  CHECK(parse_certificate_json(text) == star);

  CertificateDocument none;
  CHECK(emit_certificate_json(none) == R"({"kind":"none","verified":false})");
  CHECK(parse_certificate_json(emit_certificate_json(none)) == none);

  CertificateDocument cover;
  cover.kind = CertificateKind::clique_cover;
  cover.cliques = std::vector<VertexSet>{{0, 1, 2}};
  CHECK(parse_certificate_json(emit_certificate_json(cover)) == cover);
}

TEST_CASE("certificate JSON is strict") {
  CHECK_THROWS_AS(parse_certificate_json("{"), ParseError);
  CHECK_THROWS_AS(parse_certificate_json(R"({"kind":"none","verified":false,"x":1})"),
                  ParseError);
  CHECK_THROWS_AS(parse_certificate_json(R"({"kind":"tree-root","verified":true})"),
                  ParseError);
  CHECK_THROWS_AS(parse_certificate_json(R"({"kind":"none","root":"@","verified":false})"),
                  ParseError);
  CHECK_THROWS_AS(parse_certificate_json(R"({"kind":"any-root","root":7,"verified":true})"),
                  ParseError);
  CHECK_THROWS_AS(parse_certificate_json(R"({"kind":"banana","verified":true})"),
                  ParseError);
}

TEST_CASE("graph6 matches the reference corpus") {
  std::ifstream in(EXACTROOT_TEST_DATA "/graph6_corpus.txt");
  REQUIRE(in);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string code, n_text, ends;
    std::getline(fields, code, '\t');
    std::getline(fields, n_text, '\t');
    std::getline(fields, ends);
    std::istringstream es(ends);
    std::vector<Edge> edges;
    Vertex u, v;
    while (es >> u >> v) edges.emplace_back(u, v);
    const Graph g(std::stoi(n_text), edges);
    CHECK(emit_graph6(g) == code);
    CHECK(parse_graph6(code) == g);
    ++count;
  }
  CHECK(count == 100);
}
