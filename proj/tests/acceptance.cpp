// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every gating line passes.

#include "kexclude/almost_structures.hpp"
#include "kexclude/bounds.hpp"
#include "kexclude/exact_oracle.hpp"
#include "kexclude/generators.hpp"
#include "kexclude/io.hpp"
#include "kexclude/poly_excluder.hpp"

#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace kex;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
  int id;
  bool pass;
  std::string detail;
  double secs;
};

std::vector<Line> lines;

void report(int id, bool pass, const std::string& detail, double secs) {
  lines.push_back({id, pass, detail, secs});
  std::printf("criterion %d: %s  %s [%.2f s]\n", id, pass ? "PASS" : "FAIL", detail.c_str(), secs);
  std::fflush(stdout);
}

// Shared between criteria 5, 6 and 7.
struct Harvest {
  std::size_t pairs = 0;
  std::size_t violations = 0;
  std::size_t metered_runs = 0;
  std::size_t envelope_breaches = 0;

  void cross(const std::vector<AlmostStructure>& cliques, const std::vector<AlmostStructure>& iss) {
    for (const auto& c : cliques)
      for (const auto& i : iss) {
        if (c.vertices.none() || i.vertices.none()) continue;
        ++pairs;
        if (!check_intersection_lemma(c, i)) ++violations;
      }
  }
};

Harvest harvest_5, harvest_6, harvest_extra;

// ---------------------------------------------------------------------------

#ifdef KEXCLUDE_CLI_PATH
// Runs `kexclude scan` and parses its "N excluding vertices" line.
std::size_t scan_count(const std::string& file, std::size_t k) {
  const std::string cmd = std::string(KEXCLUDE_CLI_PATH) + " scan --graph " + file + " --k " +
                          std::to_string(k) + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return SIZE_MAX;
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  pclose(pipe);
  const auto at = out.find(" excluding vertices");
  if (at == std::string::npos) return SIZE_MAX;
  const auto start = out.rfind('\n', at);
  return std::stoul(out.substr(start == std::string::npos ? 0 : start + 1));
}
#endif

void criterion_1() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream bad;
#ifdef KEXCLUDE_CLI_PATH
  const auto dir = std::filesystem::temp_directory_path() / "kexclude_acceptance";
  std::filesystem::create_directories(dir);
  const std::string via = "kexclude scan";
#else
  const std::string via = "classify_all";
#endif
  for (std::size_t d = 1; d <= 8; ++d) {
    const Graph g = gen_4pd(d).graph;
#ifdef KEXCLUDE_CLI_PATH
    const std::string file = (dir / ("4p" + std::to_string(d) + ".col")).string();
    save_graph(file, g);
    const std::size_t at_d1 = scan_count(file, d + 1);
    const std::size_t at_d2 = scan_count(file, d + 2);
#else
    const std::size_t at_d1 = classify_all(g, d + 1).excluding.size();
    const std::size_t at_d2 = classify_all(g, d + 2).excluding.size();
#endif
    if (at_d1 != 0 || at_d2 != 4 * d) {
      ok = false;
      bad << " d=" << d << ":" << at_d1 << "/" << at_d2;
    }
  }
#ifdef KEXCLUDE_CLI_PATH
  std::filesystem::remove_all(dir);
#endif
  const double secs = seconds_since(t0);
  ok = ok && secs < 30.0;
  report(1, ok,
         via + " on 4P_d for d=1..8: 0 excluding at k=d+1, all 4d excluding at k=d+2" +
             (bad.str().empty() ? std::string() : " mismatches" + bad.str()) + " (limit 30 s)",
         secs);
}

bool enumeration_ok = false;

void criterion_2() {
  const auto t0 = Clock::now();
  const unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  bool ok = true;
  std::ostringstream got;
  for (std::size_t n = 1; n <= 7; ++n) {
    const KTable t = k_of_n_exhaustive(n, EnumerationMode::Labeled, threads);
    const bool witness_ok = k_of_graph(t.witness) == t.k_of_n && t.witness.order() == n;
    ok = ok && t.k_of_n == n / 4 + 1 && witness_ok;
    got << (n == 1 ? "" : ",") << t.k_of_n;
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 600.0;
  enumeration_ok = ok;

  // Canonical n = 8, 9: reported, not gating.
  std::ostringstream stretch;
  const auto s0 = Clock::now();
  for (std::size_t n = 8; n <= 9; ++n) {
    const KTable t = k_of_n_exhaustive(n, EnumerationMode::Canonical, threads);
    stretch << " k(" << n << ")=" << t.k_of_n << (t.k_of_n == 3 ? " ok" : " MISMATCH") << " over "
            << t.graphs_examined << " classes;";
  }
  report(2, ok,
         "labeled k(n), n=1..7 = " + got.str() + " (expected 1,1,1,2,2,2,2; " +
             std::to_string(threads) + " thread(s), limit 600 s); non-gating canonical:" +
             stretch.str() + " " + std::to_string(seconds_since(s0)).substr(0, 5) + " s",
         secs);
}

void criterion_3() {
  const auto t0 = Clock::now();
  bool ok = theorem1_lower(8, 2) == 12 && theorem1_lower(27, 3) == 63;
  std::size_t cells = 0;
  for (std::int64_t k = 1; k <= 200; ++k) {
    const std::array<std::int64_t, 1> one{k};
    ok = ok && msystem_size_lower(one, one) == 2 * k - 1;
    for (std::int64_t n = k + 1; n <= 4 * k; ++n) {
      const std::int64_t k2 = oracle::ceil_div(k * (k - 1), n - k);
      const std::array<std::int64_t, 2> two{k, k2};
      ok = ok && msystem_size_lower(two, two) == 2 * k + 2 * k2 - 4;
      ok = ok && kj_sequence(n, k, 2).implied_n_lower == 2 * k + 2 * k2 - 4;
      ++cells;
    }
  }
  report(3, ok,
         "theorem1_lower(8,2)=12, (27,3)=63; m=1 gives 2k-1 and m=2 gives 2k+2k_2-4 on " +
             std::to_string(cells) + " (k,n) cells, k<=200, k<n<=4k",
         seconds_since(t0));
}

void criterion_4() {
  const auto t0 = Clock::now();
  const BoundReport r = kj_sequence(380, 100, 5);
  const auto reference = oracle::kj_recurrence(380, 100, 5);
  bool ok = r.kj == reference && !r.kj.empty() && r.kj.front() == 36;
  std::ostringstream seq;
  for (const FloorCheck& f : r.floors) {
    // k_j >= (1 - 2/(j+1)) k  <=>  k_j (j+1) >= (j-1) k
    const auto j = static_cast<std::int64_t>(f.j);
    const bool floor_ok = f.kj * (j + 1) >= (j - 1) * 100;
    ok = ok && floor_ok && f.holds;
    seq << " k_" << f.j << "=" << f.kj << (floor_ok ? "" : "(below floor)");
  }
  report(4, ok, "(n,k,m)=(380,100,5):" + seq.str() + "; matches independent recurrence", seconds_since(t0));
}

void criterion_5() {
  const auto t0 = Clock::now();
  const Rational eps(1, 4);
  std::size_t acceptable = 0;
  std::size_t valid = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const PlantedGraph pg = gen_planted(100, 0.3, 20, StructureKind::Clique, seed);
    SearchStats stats;
    const AcceptableResult r = find_acceptable_graph(pg.graph, 20, eps, &stats);
    ++harvest_5.metered_runs;
    if (stats.calls > recursion_call_bound(100, 20, eps)) ++harvest_5.envelope_breaches;
    if (!std::holds_alternative<Acceptable>(r)) continue;
    ++acceptable;
    const AlmostStructure& s = std::get<Acceptable>(r).structure;
    if (s.size() >= 20 && s.eps == eps && check_almost(pg.graph, s.vertices, StructureKind::Clique, eps).ok)
      ++valid;

    // almost-IS on the same graph for the cross-pair harvest
    SearchStats is_stats;
    const AcceptableResult i = find_acceptable_is(pg.graph, 8, eps, &is_stats);
    ++harvest_5.metered_runs;
    if (is_stats.calls > recursion_call_bound(100, 8, eps)) ++harvest_5.envelope_breaches;
    if (const auto* a = std::get_if<Acceptable>(&i)) harvest_5.cross({s}, {a->structure});
  }
  const double secs = seconds_since(t0);
  const bool ok = acceptable == 500 && valid == 500 && secs < 120.0;
  report(5, ok,
         "planted cliques n=100 p=0.3 size 20 eps=1/4: acceptable " + std::to_string(acceptable) +
             "/500, size>=20 and degree check " + std::to_string(valid) + "/500 (limit 120 s)",
         secs);
}

bool soundness_ok = false;

void run_excluder_for_harvest(const Graph& g, std::size_t k, Harvest& h) {
  ExcluderOptions opts;
  opts.build_both_sides = true;
  const ExcluderRun run = find_excluding_poly(g, k, Rational(1), opts);
  if (run.sides.size() == 2) h.cross(run.sides[0].structures, run.sides[1].structures);
  if (!run.violations.empty()) h.violations += run.violations.size();
}

void criterion_6() {
  const auto t0 = Clock::now();
  std::size_t certificates = 0, passed = 0, contradictions = 0, sound = 0, invariant_failures = 0;
  std::string first_failure;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = gen_gnp(150, 0.5, seed);
    const ExcluderRun run = find_excluding_poly(g, 50, Rational(1));
    invariant_failures += run.violations.size();
    if (std::holds_alternative<InternalContradiction>(run.outcome)) ++contradictions;
    const auto* cert = std::get_if<ExclusionCertificate>(&run.outcome);
    if (!cert) continue;
    ++certificates;
    // through the serialised document, as the verify subcommand sees it
    const ExclusionCertificate loaded = certificate_from_json(certificate_to_json(*cert));
    const VerifyResult v = verify_certificate(g, 50, loaded);
    if (v.ok)
      ++passed;
    else if (first_failure.empty())
      first_failure = " first failure: " + v.reason;
    const VertexClassification vc = classify_vertex(g, complement(g), cert->vertex);
    const bool fails_named = cert->reason == FailedRequirement::NoKClique ? vc.max_clique_through < 50
                                                                           : vc.max_is_through < 50;
    if (!vc.enabling_for(50) && fails_named) ++sound;
    run_excluder_for_harvest(g, 50, harvest_6);
  }
  const double secs = seconds_since(t0);
  const bool ok = certificates == 50 && passed == 50 && sound == 50 && contradictions == 0 &&
                  invariant_failures == 0 && secs < 300.0;
  soundness_ok = ok;
  report(6, ok,
         "G(150,1/2) k=50 delta=1, 50 seeds: certificates " + std::to_string(certificates) +
             "/50, verify PASS " + std::to_string(passed) + "/50, oracle-sound " +
             std::to_string(sound) + "/50, internal contradictions " +
             std::to_string(contradictions) + ", invariant failures " +
             std::to_string(invariant_failures) + first_failure + " (limit 300 s)",
         secs);
}

void criterion_7() {
  const auto t0 = Clock::now();
  // The random instances of criterion 6 end in round 0 and build no
  // structures, so structured instances that reach later rounds are added.
  for (std::size_t d : {40UL, 50UL, 60UL, 80UL}) {
    const FourPathGraph p = gen_4pd(d);
    const Graph g =
        induced_subgraph(p.graph, p.graph.all_vertices() - p.layout.members(Cluster::ExternalA)).graph;
    run_excluder_for_harvest(g, d + 1, harvest_extra);
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t k = 50 + seed % 10;
    const double p = 0.3 + 0.2 * static_cast<double>(seed % 3);
    const StructureKind kind = (seed / 3) % 2 ? StructureKind::Clique : StructureKind::IndependentSet;
    run_excluder_for_harvest(gen_planted(3 * k - 5, p, k, kind, seed).graph, k, harvest_extra);
  }
  const std::size_t pairs = harvest_5.pairs + harvest_6.pairs + harvest_extra.pairs;
  const std::size_t violations =
      harvest_5.violations + harvest_6.violations + harvest_extra.violations;
  const bool ok = violations == 0 && harvest_5.pairs > 0 && harvest_extra.pairs > 0;
  report(7, ok,
         "cross pairs |C and I| <= eps(|C|+|I|): " + std::to_string(pairs) + " harvested (" +
             std::to_string(harvest_5.pairs) + " from criterion 5, " +
             std::to_string(harvest_6.pairs) + " from criterion 6, " +
             std::to_string(harvest_extra.pairs) + " from structured excluder runs), " +
             std::to_string(violations) + " violations",
         seconds_since(t0));
}

void criterion_8() {
  const auto t0 = Clock::now();
  const ReductionInstance yes = gen_hardness_reduction(Graph::from_edges(6, {}), 12, Rational(1, 2));
  bool ok = yes.graph.order() == 54 && yes.s.count() == 37 && yes.t.count() == 11;
  std::size_t block_edges = 0;
  for (Vertex x : yes.embedding)
    for (Vertex v = 0; v < 48; ++v) {
      const bool want = yes.s.test(v);
      ok = ok && yes.graph.adjacent(x, v) == want;
      block_edges += want ? 1 : 0;
    }
  ok = ok && block_edges == 6 * 37;
  const bool yes_enabling = classify_all(yes.graph, 12).graph_enabling();

  GraphBuilder k12(12);
  for (Vertex u = 0; u < 12; ++u)
    for (Vertex v = u + 1; v < 12; ++v) k12.add_edge(u, v);
  const ReductionInstance no = gen_hardness_reduction(std::move(k12).build(), 24, Rational(1, 2));
  const Classification no_class = classify_all(no.graph, 24);
  const bool no_excluding = !no_class.graph_enabling() && no.is_threshold == 2;

  const double secs = seconds_since(t0);
  ok = ok && yes_enabling && no_excluding && secs < 60.0;
  report(8, ok,
         "reduction k=12 eps=1/2: 54 vertices, |S|=37, |T|=11, " + std::to_string(block_edges) +
             " block edges checked; yes-instance 12-enabling: " + (yes_enabling ? "yes" : "no") +
             "; no-instance (k=24, g1=K_12) excluding vertices: " +
             std::to_string(no_class.excluding.size()) + " (limit 60 s)",
         secs);
}

void criterion_9() {
  const auto t0 = Clock::now();
  // The asymptotic statements are replaced by the desk-scale suites:
  // soundness (criterion 6), n <= 7 enumeration (criterion 2) and the
  // recursion-call envelope, metered over every search of criterion 5.
  const bool metering_ok = harvest_5.metered_runs > 0 && harvest_5.envelope_breaches == 0;
  const bool ok = metering_ok && soundness_ok && enumeration_ok;
  report(9, ok,
         "asymptotic claims not reproduced at desk scale; substitutes: recursion calls within the "
         "T(N) envelope in " +
             std::to_string(harvest_5.metered_runs - harvest_5.envelope_breaches) + "/" +
             std::to_string(harvest_5.metered_runs) + " searches, soundness sweep " +
             (soundness_ok ? "passed" : "failed") + ", n<=7 enumeration " +
             (enumeration_ok ? "passed" : "failed"),
         seconds_since(t0));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  const auto failed = std::count_if(lines.begin(), lines.end(), [](const Line& l) { return !l.pass; });
  std::printf("%zu/%zu criteria passed\n", lines.size() - static_cast<std::size_t>(failed), lines.size());
  return failed == 0 ? 0 : 1;
}
