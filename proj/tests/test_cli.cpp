#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "exactroot/io.hpp"

using namespace exactroot;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("exactroot_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("root tree on K3 + K1 gives a star") {
  const std::string k3k1 = io::emit_graph6(Graph(4, {{0, 1}, {0, 2}, {1, 2}}));
  const Result r = run({"root", "tree", "-"}, k3k1);
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(io::parse_graph6(ls[0]) == Graph(4, {{0, 3}, {1, 3}, {2, 3}}));
  const auto cert = io::parse_certificate_json(ls[1]);
  CHECK(cert.kind == io::CertificateKind::tree_root);
  CHECK(cert.verified);
}

TEST_CASE("root any on K2 says no") {
  const Result r = run({"root", "any", "-"}, "A_");
  CHECK(r.code == 1);
  CHECK(r.out == "{\"kind\":\"none\",\"verified\":false}\n");
}

TEST_CASE("generated G_S has a tree root") {
  const Result gs = run({"gen", "gs", "--seq", "4,6"});
  REQUIRE(gs.code == 0);
  CHECK(run({"root", "tree", "-"}, gs.out).code == 0);
}

TEST_CASE("square and convert") {
  const Result sq = run({"square", "-", "--format", "edgelist"}, "4 3\n0 1\n1 2\n2 3\n");
  CHECK(sq.code == 0);
  CHECK(sq.out == "4 2\n0 2\n1 3\n");
  CHECK(run({"convert", "-", "--to", "graph6"}, "2 1\n0 1\n").out == "A_\n");
  CHECK(run({"--from", "graph6", "--to", "edgelist", "convert", "-"}, "A_").out ==
        "2 1\n0 1\n");
  CHECK(run({"convert", "-"}, "A_").code == 2);
}

TEST_CASE("dot output highlights the certificate") {
  const Result r = run({"root", "tree", "-", "--dot"}, "Cw");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("graph G {") != std::string::npos);
  CHECK(r.out.find("color=red") != std::string::npos);
}

TEST_CASE("errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"root"}).code == 2);
  CHECK(run({"root", "tree", "-"}, "A").code == 2);
  CHECK(run({"root", "tree", "-"}, "\x01\x02").code == 2);
  CHECK(run({"root", "tree", "/nonexistent/file"}).code == 2);
  CHECK(run({"gen", "gs", "--seq", "3,2"}).code == 2);
  CHECK(run({"gen", "tree", "-n", "0"}).code == 2);
  CHECK(run({"gadget", "-", "-k", "0"}, "A_").code == 2);
  CHECK(run({"root", "bruteforce", "any", "-"}, "F????").code == 2);
  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("square") != std::string::npos);
}

TEST_CASE("brute-force search") {
  const Result c5 = run({"root", "bruteforce", "any", "-"}, "DUW");
  CHECK(c5.code == 0);
  CHECK(run({"root", "bruteforce", "tree", "-"}, "Cs").code == 1);
  CHECK(run({"root", "bruteforce", "trianglefree", "-"}, "Bw").code == 1);
}

TEST_CASE("gadget round trip through files") {
  const std::string k3 = write_temp("k3.g6", "Bw\n");
  const Result gadget = run({"gadget", k3, "-k", "1"});
  REQUIRE(gadget.code == 0);
  CHECK(io::parse_graph6(gadget.out) ==
        Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}));

  const std::string cover =
      write_temp("cover.json", R"({"kind":"clique-cover","cliques":[[0,1,2]],"verified":false})");
  const Result root = run({"gadget", "cover-to-root", k3, cover});
  REQUIRE(root.code == 0);
  const auto ls = lines(root.out);
  REQUIRE(ls.size() == 2);

  const std::string g_k = write_temp("gk.g6", gadget.out);
  const std::string cert = write_temp("b.json", ls[1]);
  const Result back = run({"gadget", "root-to-cover", g_k, cert, "-k", "1"});
  REQUIRE(back.code == 0);
  const auto doc = io::parse_certificate_json(back.out);
  CHECK(doc.cliques == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(doc.verified);
}

TEST_CASE("certificate verification") {
  // Two disjoint edges 01 and 23; C4 0-2-1-3 is a bipartite root.
  const std::string g = write_temp("2k2.el", "4 2\n0 1\n2 3\n");
  const std::string good = write_temp(
      "c4.json", R"({"kind":"bipartite-root","root":"C]","verified":false})");
  CHECK(io::parse_graph6("C]") == Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK(run({"root", "bipartite", "verify", g, good}).code == 0);

  const std::string dual = write_temp(
      "dual.json",
      R"({"kind":"clique-dual","mapping":[[0,0],[1,1]],"cliques":[[2,3],[2,3]],"verified":false})");
  const Result d = run({"root", "bipartite", "verify", g, dual});
  CHECK(d.code == 0);
  CHECK(io::parse_certificate_json(d.out).verified);

  const std::string bad = write_temp(
      "bad.json", R"({"kind":"bipartite-root","root":"Cw","verified":false})");
  CHECK(run({"root", "bipartite", "verify", g, bad}).code == 1);

  const std::string c5 = write_temp("c5.g6", "Dhc\n");
  const std::string coll = write_temp(
      "coll.json",
      R"({"kind":"triangle-free-root","cliques":[[2,3],[3,4],[0,4],[0,1],[1,2]],"verified":false})");
  CHECK(run({"root", "trianglefree", "verify", c5, coll}).code == 0);
  const std::string wrong = write_temp(
      "wrong.json",
      R"({"kind":"triangle-free-root","cliques":[[0,1],[3,4],[0,4],[0,1],[1,2]],"verified":false})");
  CHECK(run({"root", "trianglefree", "verify", c5, wrong}).code == 1);
}

TEST_CASE("generators are deterministic") {
  CHECK(run({"gen", "tree", "-n", "5", "--seed", "1"}).out == "DR_\n");
  CHECK(run({"gen", "tl", "--seq", "2,3", "--perm", "3,2"}).out == "HqG___G\n");
}
