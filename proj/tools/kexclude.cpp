// kexclude: command-line front end for the k-enabling / k-excluding toolkit.
//
// Exit codes: 0 success or PASS, 1 negative verdict or FAIL, 2 usage,
// parameter or file errors.

#include "kexclude/almost_structures.hpp"
#include "kexclude/bounds.hpp"
#include "kexclude/exact_oracle.hpp"
#include "kexclude/generators.hpp"
#include "kexclude/io.hpp"
#include "kexclude/poly_excluder.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

namespace {

using namespace kex;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const VertexSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  s.for_each([&](std::size_t v) {
    os << (first ? "" : " ") << v;
    first = false;
  });
  os << "}";
  return os.str();
}

void emit_graph(const Graph& g, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << write_dimacs(g);
    return;
  }
  save_graph(out, g, format_for(out));
  std::cout << "wrote " << out << " (" << g.order() << " vertices, " << g.edge_count()
            << " edges)\n";
}

Rational rational_option(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::size_t d = 0;
  std::size_t n = 0;
  double p = 0.5;
  std::optional<std::uint64_t> seed;
  std::size_t k = 0;
  std::string eps;
  std::string kind = "clique";
  std::string graph;
  std::string out;
};

std::uint64_t need_seed(const GenOptions& o) {
  if (!o.seed) throw UsageError("randomised generators require an explicit --seed");
  return *o.seed;
}

int run_gen(const std::string& family, const GenOptions& o) {
  if (family == "4pd") {
    emit_graph(gen_4pd(o.d).graph, o.out);
  } else if (family == "gnp") {
    emit_graph(gen_gnp(o.n, o.p, need_seed(o)), o.out);
  } else if (family == "planted") {
    if (o.kind != "clique" && o.kind != "is") throw UsageError("--kind must be clique or is");
    const StructureKind kind =
        o.kind == "clique" ? StructureKind::Clique : StructureKind::IndependentSet;
    const PlantedGraph pg = gen_planted(o.n, o.p, o.k, kind, need_seed(o));
    std::cout << "planted " << join(pg.planted) << "\n";
    emit_graph(pg.graph, o.out);
  } else if (family == "reduction") {
    if (o.graph.empty()) throw UsageError("reduction needs --graph (the embedded graph g1)");
    const Graph g1 = load_graph(o.graph);
    const ReductionInstance r = gen_hardness_reduction(g1, o.k, rational_option(o.eps, "eps"));
    std::cout << "S = " << r.s.count() << " vertices, T = " << join(r.t)
              << ", IS threshold " << r.is_threshold << "\n";
    emit_graph(r.graph, o.out);
  } else if (family == "isolated") {
    if (o.graph.empty()) throw UsageError("isolated needs --graph");
    emit_graph(append_isolated(load_graph(o.graph), o.k), o.out);
  } else {
    throw UsageError("unknown generator '" + family + "'");
  }
  return kOk;
}

// ---------------------------------------------------------- oracle

int run_check(const std::string& file, std::size_t v, std::size_t k) {
  const Graph g = load_graph(file);
  if (v >= g.order())
    throw UsageError("vertex " + std::to_string(v) + " out of range (n = " +
                     std::to_string(g.order()) + ")");
  if (k == 0) throw UsageError("k must be at least 1");
  const VertexClassification c = classify_vertex(g, complement(g), v);
  const bool enabling = c.enabling_for(k);
  std::cout << "vertex " << v << " is " << k << (enabling ? "-enabling" : "-excluding") << "\n"
            << "  largest clique through it: " << c.max_clique_through << " "
            << join(c.witness_clique) << "\n"
            << "  largest independent set through it: " << c.max_is_through << " "
            << join(c.witness_is) << "\n";
  if (!enabling) {
    if (c.max_clique_through < k) std::cout << "  fails: no " << k << "-clique\n";
    if (c.max_is_through < k) std::cout << "  fails: no " << k << "-independent set\n";
  }
  return enabling ? kOk : kNegative;
}

int run_scan(const std::string& file, std::size_t k) {
  const Graph g = load_graph(file);
  if (k == 0) throw UsageError("k must be at least 1");
  const Classification c = classify_all(g, k);
  std::cout << c.excluding.size() << " excluding vertices\n";
  for (Vertex v : c.excluding) {
    const auto& vc = c.vertices[v];
    std::cout << "  " << v << " omega_v=" << vc.max_clique_through
              << " alpha_v=" << vc.max_is_through << "\n";
  }
  return c.excluding.empty() ? kOk : kNegative;
}

int run_kfn(std::size_t n, const std::string& mode_name, unsigned threads,
            const std::string& out) {
  EnumerationMode mode;
  if (mode_name == "labeled")
    mode = EnumerationMode::Labeled;
  else if (mode_name == "canonical")
    mode = EnumerationMode::Canonical;
  else
    throw UsageError("--mode must be labeled or canonical");
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

  const auto t0 = std::chrono::steady_clock::now();
  KTable t;
  try {
    t = k_of_n_exhaustive(n, mode, threads);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "k(" << n << ") = " << t.k_of_n << "\n"
            << "  " << t.graphs_examined
            << (mode == EnumerationMode::Labeled ? " labelled graphs" : " isomorphism classes")
            << " in " << std::fixed << std::setprecision(2) << secs << " s\n";
  if (n > 0) {
    std::cout << "  witness graph6: " << write_graph6(t.witness) << "\n";
    if (!out.empty()) emit_graph(t.witness, out);
  }
  return kOk;
}

// ---------------------------------------------------------- bounds

int run_bounds(std::int64_t k, std::int64_t m, std::optional<std::int64_t> n,
               const std::string& delta) {
  if (k < 1) throw UsageError("k must be at least 1");
  if (m < 2) throw UsageError("m must be at least 2");
  std::cout << "k = " << k << ", m = " << m << "\n";
  if (k >= m * m * m)
    std::cout << "  lower bound on n: ceil((4 - 5/m)k) = " << theorem1_lower(k, m) << "\n";
  else
    std::cout << "  lower bound (4 - 5/m)k needs k >= m^3 = " << m * m * m << "\n";
  std::cout << "  j   c_j floor\n";
  for (std::int64_t j = 1; j <= m; ++j)
    std::cout << "  " << std::setw(2) << j << "  " << cj_floor(j, k) << "  ("
              << to_string(cj_floor_exact(j, k)) << ")\n";

  if (n) {
    try {
      const BoundReport r = kj_sequence(*n, k, m);
      std::cout << "n = " << *n << (r.floor_regime ? " (n <= 4k - 3m)" : "") << "\n"
                << "  j   k_j   floor (1-2/(j+1))k   holds\n";
      for (const FloorCheck& f : r.floors)
        std::cout << "  " << std::setw(2) << f.j << "  " << std::setw(4) << f.kj << "   "
                  << std::setw(18) << to_string(f.floor) << "   " << (f.holds ? "yes" : "no")
                  << "\n";
      std::cout << "  implied n >= 2(k + k_m) - m^2 = " << r.implied_n_lower << "\n";
    } catch (const BoundDivergence& e) {
      std::cout << "  recurrence diverges at j = " << e.step() << ": " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!delta.empty()) {
    ExcluderParams p;
    try {
      p = derive_params(rational_option(delta, "delta"));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::cout << "delta = " << to_string(p.delta) << ": m = " << p.m << ", eps = "
              << to_string(p.eps) << ", K_delta = " << p.k_min << "\n";
  }
  return kOk;
}

// ----------------------------------------------------- almost-clique

int run_almost_clique(const std::string& file, std::size_t k, const std::string& eps_text) {
  const Graph g = load_graph(file);
  const Rational eps = rational_option(eps_text, "eps");
  SearchStats stats;
  AcceptableResult r;
  try {
    r = find_acceptable_graph(g, k, eps, &stats);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (std::holds_alternative<NoClique>(r)) {
    std::cout << "no " << k << "-clique (" << stats.calls << " calls)\n";
    return kNegative;
  }
  const AlmostStructure& s = std::get<Acceptable>(r).structure;
  std::cout << "acceptable: " << s.size() << " vertices, eps = " << to_string(s.eps) << " ("
            << stats.calls << " calls)\n"
            << "  " << join(s.vertices) << "\n";
  return kOk;
}

// ------------------------------------------------------ poly-exclude

void print_certificate(const ExclusionCertificate& c) {
  std::cout << "vertex " << c.vertex << " is " << c.k << "-excluding: " << to_string(c.reason)
            << "\n"
            << "  evidence " << to_string(c.evidence) << ", side " << to_string(c.side)
            << ", round " << c.round << "\n";
  if (c.evidence == EvidenceKind::OutsideShortfall)
    std::cout << "  " << c.outside_non_edges << " non-edges leave the union (c = " << c.union_size
              << "), threshold " << to_string(c.threshold) << "\n";
  if (c.evidence == EvidenceKind::CandidateNoClique)
    std::cout << "  t = " << c.non_edges_into_union << ", no " << c.target
              << "-clique among " << c.candidate.count() << " candidates\n";
}

int run_poly_exclude(const std::string& file, std::size_t k, const std::string& delta_text,
                     const std::string& cert_out) {
  const Graph g = load_graph(file);
  const Rational delta = rational_option(delta_text, "delta");
  ExcluderRun run;
  try {
    run = find_excluding_poly(g, k, delta);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << "m = " << run.params.m << ", eps = " << to_string(run.params.eps)
            << ", K_delta = " << run.params.k_min << "\n";
  for (const auto& v : run.violations) std::cout << "invariant violation: " << v << "\n";

  std::optional<ExclusionCertificate> cert;
  if (const auto* c = std::get_if<ExclusionCertificate>(&run.outcome)) {
    cert = *c;
  } else if (const auto* fb = std::get_if<SmallKFallback>(&run.outcome)) {
    std::cout << "k <= K_delta: decided by the exact oracle\n";
    if (!fb->certificate) {
      std::cout << "graph is " << k << "-enabling; no excluding vertex exists\n";
      return kNegative;
    }
    cert = fb->certificate;
  } else {
    const auto& ic = std::get<InternalContradiction>(run.outcome);
    std::cout << "internal contradiction: both systems completed\n"
              << "  union " << ic.system.union_size << ", required "
              << to_string(ic.required_size) << "\n"
              << ic.dump;
    return kNegative;
  }
  print_certificate(*cert);
  if (!cert_out.empty()) {
    save_certificate(cert_out, *cert);
    std::cout << "wrote " << cert_out << "\n";
  }
  return kOk;
}

int run_verify(const std::string& file, const std::string& cert_file) {
  const Graph g = load_graph(file);
  const ExclusionCertificate cert = load_certificate(cert_file);
  const VerifyResult r = verify_certificate(g, cert.k, cert);
  std::cout << (r.ok ? "PASS" : "FAIL") << ": " << r.reason << "\n";
  return r.ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-enabling and k-excluding vertices: generators, exact oracle, poly excluder"};
  app.require_subcommand(1);

  GenOptions gen;
  std::string family;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
  gen_cmd->add_option("family", family, "4pd | gnp | planted | reduction | isolated")
      ->required()
      ->check(CLI::IsMember({"4pd", "gnp", "planted", "reduction", "isolated"}));
  gen_cmd->add_option("--d", gen.d, "cluster size for 4pd");
  gen_cmd->add_option("--n", gen.n, "vertex count");
  gen_cmd->add_option("--p", gen.p, "edge probability");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed (required for gnp and planted)");
  gen_cmd->add_option("--k", gen.k,
                      "planted size, reduction k, or isolated-vertex count");
  gen_cmd->add_option("--eps", gen.eps, "reduction eps, e.g. 1/2");
  gen_cmd->add_option("--kind", gen.kind, "planted structure: clique | is");
  gen_cmd->add_option("--graph", gen.graph, "input graph (reduction, isolated)");
  gen_cmd->add_option("--out", gen.out, "output file; .g6 selects graph6");

  std::string graph_file;
  std::size_t vertex = 0;
  std::size_t k = 0;
  auto* check_cmd = app.add_subcommand("check", "exact verdict for one vertex");
  check_cmd->add_option("--graph", graph_file)->required();
  check_cmd->add_option("--vertex", vertex)->required();
  check_cmd->add_option("--k", k)->required();

  auto* scan_cmd = app.add_subcommand("scan", "list every k-excluding vertex");
  scan_cmd->add_option("--graph", graph_file)->required();
  scan_cmd->add_option("--k", k)->required();

  std::size_t n = 0;
  std::string mode = "labeled";
  unsigned threads = 1;
  std::string out;
  auto* kfn_cmd = app.add_subcommand("kfn", "exhaustive k(n)");
  kfn_cmd->add_option("--n", n)->required();
  kfn_cmd->add_option("--mode", mode, "labeled (n <= 7) | canonical (n <= 9)");
  kfn_cmd->add_option("--threads", threads, "worker threads; 0 uses all cores");
  kfn_cmd->add_option("--out", out, "witness graph file");

  std::int64_t bk = 0, bm = 0;
  std::optional<std::int64_t> bn;
  std::string delta;
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds and k_j table");
  bounds_cmd->add_option("--k", bk)->required();
  bounds_cmd->add_option("--m", bm)->required();
  bounds_cmd->add_option("--n", bn);
  bounds_cmd->add_option("--delta", delta);

  std::string eps;
  auto* almost_cmd = app.add_subcommand("almost-clique", "dense-subgraph search");
  almost_cmd->add_option("--graph", graph_file)->required();
  almost_cmd->add_option("--k", k)->required();
  almost_cmd->add_option("--eps", eps)->required();

  std::string cert_file;
  auto* poly_cmd = app.add_subcommand("poly-exclude", "polynomial excluder with certificate");
  poly_cmd->add_option("--graph", graph_file)->required();
  poly_cmd->add_option("--k", k)->required();
  poly_cmd->add_option("--delta", delta)->required();
  poly_cmd->add_option("--cert-out", cert_file);

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a graph");
  verify_cmd->add_option("--graph", graph_file)->required();
  verify_cmd->add_option("--cert", cert_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(family, gen);
    if (*check_cmd) return run_check(graph_file, vertex, k);
    if (*scan_cmd) return run_scan(graph_file, k);
    if (*kfn_cmd) return run_kfn(n, mode, threads, out);
    if (*bounds_cmd) return run_bounds(bk, bm, bn, delta);
    if (*almost_cmd) return run_almost_clique(graph_file, k, eps);
    if (*poly_cmd) return run_poly_exclude(graph_file, k, delta, cert_file);
    if (*verify_cmd) return run_verify(graph_file, cert_file);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
