#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "exactroot/clique_dual.hpp"
#include "exactroot/error.hpp"
#include "exactroot/general_root.hpp"
#include "exactroot/generators.hpp"
#include "exactroot/io.hpp"
#include "exactroot/oracle.hpp"
#include "exactroot/tree_root.hpp"

namespace exactroot::cli {

namespace {

using io::CertificateDocument;
using io::CertificateKind;

struct Options {
  std::string input = "-";
  std::string second;  // certificate or cover file
  std::string out_format;
  std::string in_format;
  bool dot = false;
  bool no_verify = false;
  int k = 0;
  std::vector<int> seq;
  std::vector<int> perm;
  int n = 0;
  std::uint64_t seed = 0;
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err)
      : in_(in), out_(out), err_(err) {}

  Options opt;

  std::string read_text(const std::string& path) {
    if (path == "-") {
      return std::string(std::istreambuf_iterator<char>(in_), {});
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(f), {});
  }

  Graph read_graph(const std::string& path) {
    const std::string text = read_text(path);
    std::optional<io::Format> fmt;
    if (!opt.in_format.empty()) fmt = io::parse_format_name(opt.in_format);
    last_format_ = fmt ? *fmt : io::detect_format(text);
    return io::parse_graph(text, fmt);
  }

  io::Format output_format() const {
    if (!opt.out_format.empty()) return io::parse_format_name(opt.out_format);
    return last_format_;
  }

  void emit(const Graph& g) { out_ << io::emit_graph(g, output_format()); }

  void emit_certificate(const CertificateDocument& c) {
    out_ << io::emit_certificate_json(c) << '\n';
    if (opt.dot && c.root) out_ << io::emit_dot(*c.root, c.mapping);
  }

  int answer_no() {
    CertificateDocument c;
    c.kind = CertificateKind::none;
    emit_certificate(c);
    return kNo;
  }

  // Emits root and certificate; `check` decides "verified".
  int answer_root(CertificateKind kind, const Graph& root,
                  std::optional<VertexMapping> mapping, bool check) {
    CertificateDocument c;
    c.kind = kind;
    c.root = root;
    c.mapping = std::move(mapping);
    if (!opt.no_verify) {
      if (!check) {
        err_ << "error: certificate failed verification\n";
        return kError;
      }
      c.verified = true;
    }
    emit(root);
    emit_certificate(c);
    return kYes;
  }

  int square() {
    emit(exact_square(read_graph(opt.input)));
    return kYes;
  }

  int root_any() {
    const Graph g = read_graph(opt.input);
    const auto h = recognize_any_root(g);
    if (!h) return answer_no();
    return answer_root(CertificateKind::any_root, *h, std::nullopt,
                       opt.no_verify || exact_square(*h) == g);
  }

  int root_tree() {
    const Graph g = read_graph(opt.input);
    TreeRootOptions topts;
    topts.verify = !opt.no_verify;
    const TreeRootAnswer a = recognize_tree_root(g, topts);
    if (!a.decision) return answer_no();
    const bool ok = opt.no_verify ||
                    (is_tree(*a.root) &&
                     is_isomorphism(*a.iso_to_input, exact_square(*a.root), g));
    return answer_root(CertificateKind::tree_root, *a.root, a.iso_to_input, ok);
  }

  CertificateDocument read_certificate(const std::string& path) {
    return io::parse_certificate_json(read_text(path));
  }

  // Verification commands print the certificate back with "verified" set.
  int report(CertificateDocument c, bool ok) {
    c.verified = ok;
    emit_certificate(c);
    if (!ok) err_ << "certificate rejected\n";
    return ok ? kYes : kNo;
  }

  bool root_matches(const Graph& g, const CertificateDocument& c) {
    const Graph sq = exact_square(*c.root);
    if (c.mapping) return is_isomorphism(*c.mapping, sq, g);
    return sq == g;
  }

  int verify_bipartite() {
    const Graph g = read_graph(opt.input);
    CertificateDocument c = read_certificate(opt.second);
    if (c.kind == CertificateKind::bipartite_root) {
      if (c.root->order() != g.order()) return report(c, false);
      return report(c, is_bipartite(*c.root) && root_matches(g, c));
    }
    if (c.kind == CertificateKind::clique_dual) {
      // mapping i -> v attaches cliques[i] to vertex v of g.
      std::vector<std::pair<Vertex, int>> owners;
      for (auto [i, v] : c.mapping->pairs()) {
        if (i < 0 || i >= static_cast<int>(c.cliques->size())) {
          throw PreconditionError("mapping names a missing clique");
        }
        owners.emplace_back(v, i);
      }
      if (owners.size() != c.cliques->size()) {
        throw PreconditionError("every clique needs an owner vertex");
      }
      std::sort(owners.begin(), owners.end());
      VertexSet part_f;
      LabeledCliqueCover cover;
      std::vector<char> in_f(static_cast<std::size_t>(g.order()), 0);
      for (auto [v, i] : owners) {
        if (v < 0 || v >= g.order()) throw PreconditionError("owner out of range");
        part_f.push_back(v);
        in_f[v] = 1;
        cover.cliques.push_back((*c.cliques)[i]);
      }
      VertexSet part_fprime;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (!in_f[v]) part_fprime.push_back(v);
      }
      const auto root =
          recognize_bipartite_root_structure(g, cover, part_f, part_fprime);
      return report(c, root.has_value());
    }
    throw PreconditionError("expected a bipartite-root or clique-dual certificate");
  }

  int verify_triangle_free() {
    const Graph g = read_graph(opt.input);
    CertificateDocument c = read_certificate(opt.second);
    if (c.kind != CertificateKind::triangle_free_root) {
      throw PreconditionError("expected a triangle-free-root certificate");
    }
    if (c.root) {
      if (c.root->order() != g.order()) return report(c, false);
      return report(c, is_triangle_free(*c.root) && root_matches(g, c));
    }
    TriangleFreeCollection coll{*c.cliques};
    if (static_cast<int>(coll.cliques.size()) != g.order()) return report(c, false);
    const bool ok = verify_triangle_free_collection(g, coll);
    if (ok) c.root = triangle_free_root_from_collection(g, coll);
    return report(c, ok);
  }

  int bruteforce(const std::string& what) {
    const Graph g = read_graph(opt.input);
    if (what == "any") {
      const auto h = bruteforce_any_root(g, oracle_budget(5));
      if (!h) return answer_no();
      return answer_root(CertificateKind::any_root, *h, std::nullopt,
                         exact_square(*h) == g);
    }
    if (what == "tree") {
      const auto roots = bruteforce_tree_roots(g, oracle_budget(9));
      if (roots.empty()) return answer_no();
      const Graph& t = roots.front();
      const auto iso = small_graph_isomorphic(exact_square(t), g, 31);
      return answer_root(CertificateKind::tree_root, t, iso,
                         iso && is_isomorphism(*iso, exact_square(t), g));
    }
    if (what == "trianglefree") {
      const auto h = bruteforce_triangle_free_root(g, oracle_budget(9));
      if (!h) return answer_no();
      return answer_root(CertificateKind::triangle_free_root, *h, std::nullopt,
                         is_triangle_free(*h) && exact_square(*h) == g);
    }
    if (what == "bipartite") {
      const auto h = bruteforce_bipartite_root(g, oracle_budget(10));
      if (!h) return answer_no();
      return answer_root(CertificateKind::bipartite_root, *h, std::nullopt,
                         is_bipartite(*h) && exact_square(*h) == g);
    }
    throw PreconditionError("unknown brute-force target " + what);
  }

  int gadget() {
    emit(clique_cover_gadget(read_graph(opt.input), opt.k));
    return kYes;
  }

  int cover_to_root() {
    const Graph g = read_graph(opt.input);
    const CertificateDocument c = read_certificate(opt.second);
    if (c.kind != CertificateKind::clique_cover) {
      throw PreconditionError("expected a clique-cover certificate");
    }
    const Graph b = cover_to_bipartite_root(g, CliqueCover{*c.cliques});
    const int k = static_cast<int>(c.cliques->size());
    return answer_root(CertificateKind::bipartite_root, b, std::nullopt,
                       is_bipartite(b) &&
                           exact_square(b) == clique_cover_gadget(g, k));
  }

  int root_to_cover() {
    const Graph gk = read_graph(opt.input);
    const CertificateDocument c = read_certificate(opt.second);
    if (c.kind != CertificateKind::bipartite_root) {
      throw PreconditionError("expected a bipartite-root certificate");
    }
    if (opt.k < 1) throw PreconditionError("-k must be positive");
    const int n = gk.order() - 1 - opt.k;
    const CliqueCover cover = bipartite_root_to_cover(gk, *c.root, n, opt.k);
    CertificateDocument out;
    out.kind = CertificateKind::clique_cover;
    out.cliques = cover.cliques;
    if (!opt.no_verify) {
      const Graph g = induced_subgraph(gk, [&] {
        VertexSet vs(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) vs[i] = i;
        return vs;
      }());
      if (!verify_clique_cover(g, cover)) {
        err_ << "error: certificate failed verification\n";
        return kError;
      }
      out.verified = true;
    }
    emit_certificate(out);
    return kYes;
  }

  int generate(const std::string& what) {
    if (opt.out_format.empty()) last_format_ = io::Format::graph6;
    if (what == "gs") {
      emit(gen_GS(opt.seq));
    } else if (what == "tl") {
      emit(gen_TL(opt.seq, opt.perm));
    } else if (what == "tree") {
      emit(random_tree(opt.n, opt.seed));
    } else if (what == "clique-tree") {
      emit(random_clique_tree(opt.n, opt.seed));
    }
    return kYes;
  }

  int convert() {
    const Graph g = read_graph(opt.input);
    if (opt.out_format.empty()) throw PreconditionError("--to is required");
    emit(g);
    if (opt.dot) out_ << io::emit_dot(g);
    return kYes;
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  io::Format last_format_ = io::Format::graph6;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Runner r(in, out, err);
  Options& o = r.opt;
  std::function<int()> action;

  CLI::App app{"Exact-distance square roots: recognition, certificates, oracles"};
  app.name("exactroot");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format,--to", o.out_format, "output format: graph6 | edgelist");
  app.add_option("--input-format,--from", o.in_format,
                 "input format (default: detect from the first byte)");
  app.add_flag("--dot", o.dot, "also print Graphviz DOT of the witness");
  app.add_flag("--no-verify", o.no_verify, "skip certificate re-checks");

  auto input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "graph file, or - for stdin");
  };

  auto* sq = app.add_subcommand("square", "print the exact-distance square");
  input(sq);
  sq->callback([&] { action = [&] { return r.square(); }; });

  auto* root = app.add_subcommand("root", "decide and certify roots");
  root->require_subcommand(1);
  auto* any = root->add_subcommand("any", "any root (complement test)");
  input(any);
  any->callback([&] { action = [&] { return r.root_any(); }; });
  auto* tree = root->add_subcommand("tree", "tree root");
  input(tree);
  tree->callback([&] { action = [&] { return r.root_tree(); }; });

  auto* bip = root->add_subcommand("bipartite", "bipartite roots");
  bip->require_subcommand(1);
  auto* bipv = bip->add_subcommand("verify", "check a bipartite-root or clique-dual certificate");
  bipv->add_option("input", o.input, "graph file")->required();
  bipv->add_option("certificate", o.second, "certificate JSON file")->required();
  bipv->callback([&] { action = [&] { return r.verify_bipartite(); }; });

  auto* tf = root->add_subcommand("trianglefree", "triangle-free roots");
  tf->require_subcommand(1);
  auto* tfv = tf->add_subcommand("verify", "check a triangle-free-root certificate");
  tfv->add_option("input", o.input, "graph file")->required();
  tfv->add_option("certificate", o.second, "certificate JSON file")->required();
  tfv->callback([&] { action = [&] { return r.verify_triangle_free(); }; });

  std::string bf_target;
  auto* bf = root->add_subcommand("bruteforce", "exhaustive oracle search");
  bf->add_option("target", bf_target, "any | tree | trianglefree | bipartite")
      ->required()
      ->check(CLI::IsMember({"any", "tree", "trianglefree", "bipartite"}));
  input(bf);
  bf->callback([&] { action = [&] { return r.bruteforce(bf_target); }; });

  auto* gadget = app.add_subcommand("gadget", "clique edge cover reduction");
  gadget->add_option("-k", o.k, "clique size k");
  input(gadget);
  auto* c2r = gadget->add_subcommand("cover-to-root", "cover certificate to bipartite root");
  c2r->add_option("input", o.input, "graph file")->required();
  c2r->add_option("cover", o.second, "clique-cover certificate")->required();
  c2r->callback([&] { action = [&] { return r.cover_to_root(); }; });
  auto* r2c = gadget->add_subcommand("root-to-cover", "bipartite root of a gadget to cover");
  r2c->add_option("input", o.input, "gadget graph file")->required();
  r2c->add_option("root", o.second, "bipartite-root certificate")->required();
  r2c->add_option("-k", o.k, "clique size k")->required();
  r2c->callback([&] { action = [&] { return r.root_to_cover(); }; });
  gadget->callback([&] {
    if (!action) action = [&] { return r.gadget(); };
  });

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  auto* gs = gen->add_subcommand("gs", "two-component graph G_S");
  gs->add_option("--seq", o.seq, "strictly increasing terms > 1")->delimiter(',')->required();
  gs->callback([&] { action = [&] { return r.generate("gs"); }; });
  auto* tl = gen->add_subcommand("tl", "tree T_L for a permutation of the sequence");
  tl->add_option("--seq", o.seq, "strictly increasing terms > 1")->delimiter(',')->required();
  tl->add_option("--perm", o.perm, "permutation of --seq")->delimiter(',')->required();
  tl->callback([&] { action = [&] { return r.generate("tl"); }; });
  auto* rt = gen->add_subcommand("tree", "random labeled tree");
  rt->add_option("-n", o.n, "vertices")->required()->check(CLI::PositiveNumber);
  rt->add_option("--seed", o.seed, "seed");
  rt->callback([&] { action = [&] { return r.generate("tree"); }; });
  auto* rc = gen->add_subcommand("clique-tree", "random clique-tree");
  rc->add_option("-n", o.n, "vertices")->required()->check(CLI::PositiveNumber);
  rc->add_option("--seed", o.seed, "seed");
  rc->callback([&] { action = [&] { return r.generate("clique-tree"); }; });

  auto* conv = app.add_subcommand("convert", "re-encode a graph (needs --to)");
  input(conv);
  conv->callback([&] { action = [&] { return r.convert(); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kError;
  }
  if (!action) {
    err << "usage error: missing subcommand\n";
    return kError;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

}  // namespace exactroot::cli
