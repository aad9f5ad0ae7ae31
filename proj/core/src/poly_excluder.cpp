#include "kexclude/poly_excluder.hpp"

#include <sstream>

namespace kex {

namespace {

Rational as_rational(std::size_t x) { return Rational(static_cast<std::int64_t>(x)); }

// Non-neighbours of u inside s, not counting u itself.
std::size_t non_edges_into(const Graph& w, Vertex u, const VertexSet& s) {
  const std::size_t others = s.count() - (s.test(u) ? 1 : 0);
  return others - w.neighbors(u).intersection_count(s);
}

Rational shortfall_threshold(std::size_t k, const Rational& eps, std::size_t c, std::size_t j) {
  return as_rational(k) - eps * as_rational(c) - as_rational(j) - 1;
}

VertexSet union_of(const std::vector<VertexSet>& sets, std::size_t n) {
  VertexSet u(n);
  for (const auto& s : sets) u |= s;
  return u;
}

bool pairwise_disjoint(const std::vector<VertexSet>& sets, std::size_t n) {
  VertexSet seen(n);
  for (const auto& s : sets) {
    if (seen.intersects(s)) return false;
    seen |= s;
  }
  return true;
}

// Requirement that fails in g, given the one that fails in the side's graph.
FailedRequirement in_host_terms(FailedRequirement on_side, Side side) {
  if (side == Side::Clique) return on_side;
  return on_side == FailedRequirement::NoKClique ? FailedRequirement::NoKIndependentSet
                                                 : FailedRequirement::NoKClique;
}

struct SideResult {
  std::optional<ExclusionCertificate> certificate;
  SystemState state;
};

class SideBuilder {
 public:
  SideBuilder(const Graph& w, Side side, std::size_t k, const ExcluderParams& params,
              ExcluderRun& run)
      : w_(w), side_(side), k_(k), params_(params), run_(run) {}

  SideResult build() {
    SideResult out;
    out.state.side = side_;
    const std::size_t n = w_.order();
    const auto m = static_cast<std::size_t>(params_.m);
    const auto ki = static_cast<std::int64_t>(k_);
    const bool cj_regime =
        as_rational(n) <= Rational(4 * ki) - 6 * params_.eps * Rational(ki) -
                              Rational(3 * (params_.m + 1));

    SearchStats stats;
    AcceptableResult first = find_dense_subgraph(w_, w_.all_vertices(), k_, params_.eps, &stats);
    if (std::holds_alternative<NoClique>(first)) {
      run_.search_calls += stats.calls;
      auto cert = base_certificate(0, FailedRequirement::NoKClique, 0);
      cert.evidence = EvidenceKind::WholeGraphNoClique;
      out.certificate = std::move(cert);
      return out;
    }
    structures_.push_back(std::get<Acceptable>(first).structure);

    for (std::size_t j = 1;; ++j) {
      std::vector<VertexSet> sets = vertex_sets();
      const VertexSet u_set = union_of(sets, n);
      const std::size_t c = u_set.count();
      check_invariants(sets, c, j, cj_regime);

      const Rational threshold = shortfall_threshold(k_, params_.eps, c, j);
      const VertexSet outside = u_set.flipped();
      for (Vertex u = u_set.first(); u < n; u = u_set.next(u + 1)) {
        const std::size_t non_edges = non_edges_into(w_, u, outside);
        if (as_rational(non_edges) < threshold) {
          auto cert = base_certificate(u, FailedRequirement::NoKIndependentSet, j);
          cert.evidence = EvidenceKind::OutsideShortfall;
          cert.structures = std::move(sets);
          cert.union_size = c;
          cert.outside_non_edges = non_edges;
          cert.threshold = threshold;
          out.certificate = std::move(cert);
          run_.search_calls += stats.calls;
          return out;
        }
      }
      if (j == m) break;

      if (outside.none()) {
        structures_.push_back(empty_structure());
        continue;
      }
      Vertex best = outside.first();
      std::size_t best_t = 0;
      bool have = false;
      outside.for_each([&](std::size_t v) {
        const std::size_t t = non_edges_into(w_, v, u_set);
        if (!have || t > best_t) {
          best = v;
          best_t = t;
          have = true;
        }
      });
      const std::int64_t target =
          static_cast<std::int64_t>(k_) - (static_cast<std::int64_t>(c) -
                                           static_cast<std::int64_t>(best_t));
      if (target < 1) {
        structures_.push_back(empty_structure());
        continue;
      }
      VertexSet candidate = w_.neighbors(best) - u_set;
      candidate.set(best);
      AcceptableResult next = find_dense_subgraph(w_, candidate, static_cast<std::size_t>(target),
                                                  params_.eps, &stats);
      if (std::holds_alternative<NoClique>(next)) {
        auto cert = base_certificate(best, FailedRequirement::NoKClique, j);
        cert.evidence = EvidenceKind::CandidateNoClique;
        cert.structures = std::move(sets);
        cert.union_size = c;
        cert.non_edges_into_union = best_t;
        cert.target = target;
        cert.candidate = std::move(candidate);
        out.certificate = std::move(cert);
        run_.search_calls += stats.calls;
        return out;
      }
      AlmostStructure found = std::get<Acceptable>(next).structure;
      if (static_cast<std::int64_t>(found.size()) < target)
        run_.violations.push_back(side_name() + ": structure smaller than its target");
      structures_.push_back(std::move(found));
    }

    run_.search_calls += stats.calls;
    out.state.structures = structures_;
    out.state.union_size = union_of(vertex_sets(), n).count();
    out.state.round = structures_.size();
    return out;
  }

  const std::vector<AlmostStructure>& structures() const { return structures_; }

 private:
  std::string side_name() const { return side_ == Side::Clique ? "clique side" : "IS side"; }

  AlmostStructure empty_structure() const {
    return AlmostStructure{StructureKind::Clique, VertexSet(w_.order()), params_.eps};
  }

  std::vector<VertexSet> vertex_sets() const {
    std::vector<VertexSet> sets;
    sets.reserve(structures_.size());
    for (const auto& s : structures_) sets.push_back(s.vertices);
    return sets;
  }

  ExclusionCertificate base_certificate(Vertex v, FailedRequirement on_side, std::size_t round) {
    ExclusionCertificate cert;
    cert.vertex = v;
    cert.reason = in_host_terms(on_side, side_);
    cert.round = round;
    cert.side = side_;
    cert.k = k_;
    cert.params = params_;
    cert.graph_order = w_.order();
    cert.candidate = VertexSet(w_.order());
    return cert;
  }

  void check_invariants(const std::vector<VertexSet>& sets, std::size_t c, std::size_t j,
                        bool cj_regime) {
    if (!pairwise_disjoint(sets, w_.order()))
      run_.violations.push_back(side_name() + ": structures overlap after round " +
                                std::to_string(j));
    for (const auto& s : structures_)
      if (!is_valid_structure(w_, s))
        run_.violations.push_back(side_name() + ": invalid almost-clique in round " +
                                  std::to_string(j));
    if (cj_regime && j >= 2) {
      const auto floor = cj_floor(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k_));
      if (static_cast<std::int64_t>(c) < floor)
        run_.violations.push_back(side_name() + ": c_" + std::to_string(j) + " = " +
                                  std::to_string(c) + " below floor " + std::to_string(floor));
    }
  }

  const Graph& w_;
  Side side_;
  std::size_t k_;
  ExcluderParams params_;
  ExcluderRun& run_;
  std::vector<AlmostStructure> structures_;
};

SystemState in_host_terms(SystemState s) {
  if (s.side == Side::IndependentSet)
    for (auto& st : s.structures) st.kind = StructureKind::IndependentSet;
  return s;
}

std::string describe(const SystemState& s) {
  std::ostringstream os;
  os << to_string(s.side) << ": rounds=" << s.round << " c=" << s.union_size << "\n";
  for (std::size_t i = 0; i < s.structures.size(); ++i) {
    os << "  #" << (i + 1) << " size=" << s.structures[i].size() << " {";
    bool first = true;
    s.structures[i].vertices.for_each([&](std::size_t v) {
      os << (first ? "" : " ") << v;
      first = false;
    });
    os << "}\n";
  }
  return os.str();
}

}  // namespace

ExcluderRun find_excluding_poly(const Graph& g, std::size_t k, const Rational& delta,
                                const ExcluderOptions& options) {
  ExcluderRun run;
  run.params = derive_params(delta);
  if (k == 0) throw ExcluderPrecondition("k must be at least 1");
  if (g.order() == 0) throw ExcluderPrecondition("graph has no vertices");
  const Rational limit = (4 - delta) * Rational(static_cast<std::int64_t>(k));
  if (Rational(static_cast<std::int64_t>(g.order())) > limit)
    throw ExcluderPrecondition("n = " + std::to_string(g.order()) + " exceeds (4 - delta)k = " +
                               to_string(limit));

  if (static_cast<std::int64_t>(k) <= run.params.k_min) {
    SmallKFallback fb;
    fb.classification = classify_all(g, k);
    if (!fb.classification.excluding.empty()) {
      const auto& vc = fb.classification.vertices[fb.classification.excluding.front()];
      ExclusionCertificate cert;
      cert.vertex = vc.vertex;
      cert.reason = vc.max_clique_through < k ? FailedRequirement::NoKClique
                                              : FailedRequirement::NoKIndependentSet;
      cert.evidence = EvidenceKind::ExactOracle;
      cert.k = k;
      cert.params = run.params;
      cert.graph_hash = graph_hash(g);
      cert.graph_order = g.order();
      cert.candidate = VertexSet(g.order());
      fb.certificate = std::move(cert);
    }
    run.outcome = std::move(fb);
    return run;
  }

  SideBuilder clique_side(g, Side::Clique, k, run.params, run);
  SideResult clique = clique_side.build();
  auto record = [&](const SideBuilder& b, Side side) {
    SystemState s;
    s.side = side;
    s.structures = b.structures();
    s.round = s.structures.size();
    VertexSet u(g.order());
    for (const auto& st : s.structures) u |= st.vertices;
    s.union_size = u.count();
    run.sides.push_back(in_host_terms(std::move(s)));
  };
  record(clique_side, Side::Clique);

  if (clique.certificate && !options.build_both_sides) {
    clique.certificate->graph_hash = graph_hash(g);
    run.outcome = std::move(*clique.certificate);
    return run;
  }

  const Graph co = complement(g);
  SideBuilder is_side(co, Side::IndependentSet, k, run.params, run);
  SideResult independent = is_side.build();
  record(is_side, Side::IndependentSet);

  if (clique.certificate) {
    clique.certificate->graph_hash = graph_hash(g);
    run.outcome = std::move(*clique.certificate);
    return run;
  }
  if (independent.certificate) {
    independent.certificate->graph_hash = graph_hash(g);
    run.outcome = std::move(*independent.certificate);
    return run;
  }

  InternalContradiction ic;
  ic.clique_side = run.sides[0];
  ic.is_side = run.sides[1];
  EpsMSystem sys;
  sys.cliques = ic.clique_side.structures;
  sys.iss = ic.is_side.structures;
  sys.eps = run.params.eps;
  sys.m = static_cast<std::size_t>(run.params.m);
  ic.system = system_size(sys);
  const Rational m = Rational(run.params.m);
  ic.required_size = 2 * (1 - run.params.eps * m) * (2 - Rational(2) / (m + 1)) *
                     Rational(static_cast<std::int64_t>(k));
  ic.size_inequality_holds = ic.required_size <= Rational(static_cast<std::int64_t>(g.order()));
  ic.dump = describe(ic.clique_side) + describe(ic.is_side);
  run.outcome = std::move(ic);
  return run;
}

VerifyResult verify_certificate(const Graph& g, std::size_t k, const ExclusionCertificate& cert) {
  auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };
  const std::size_t n = g.order();
  if (cert.k != k) return fail("certificate is for k = " + std::to_string(cert.k));
  if (cert.graph_hash != 0 && cert.graph_hash != graph_hash(g))
    return fail("graph hash mismatch");
  if (cert.graph_order != n) return fail("certificate is for a graph of order " + std::to_string(cert.graph_order));
  if (cert.vertex >= n) return fail("vertex out of range");

  ExcluderParams expected;
  try {
    expected = derive_params(cert.params.delta);
  } catch (const std::invalid_argument& e) {
    return fail(std::string("bad delta: ") + e.what());
  }
  if (expected.m != cert.params.m || expected.eps != cert.params.eps ||
      expected.k_min != cert.params.k_min)
    return fail("derived parameters do not match delta");
  const Rational& eps = expected.eps;

  const Graph w = cert.side == Side::Clique ? g : complement(g);
  const FailedRequirement on_side = in_host_terms(cert.reason, cert.side);

  auto check_structures = [&]() -> std::optional<std::string> {
    if (cert.round != cert.structures.size()) return "round does not match structure count";
    for (const auto& s : cert.structures)
      if (s.size() != n) return "structure has the wrong universe";
    if (!pairwise_disjoint(cert.structures, n)) return "structures overlap";
    const VertexSet u = union_of(cert.structures, n);
    if (u.count() != cert.union_size) return "union size mismatch";
    return std::nullopt;
  };

  switch (cert.evidence) {
    case EvidenceKind::WholeGraphNoClique: {
      if (on_side != FailedRequirement::NoKClique || cert.round != 0)
        return fail("inconsistent whole-graph evidence");
      if (!std::holds_alternative<NoClique>(find_dense_subgraph(w, w.all_vertices(), k, eps)))
        return fail("dense-subgraph search finds a structure on recomputation");
      break;
    }
    case EvidenceKind::OutsideShortfall: {
      if (on_side != FailedRequirement::NoKIndependentSet)
        return fail("shortfall evidence must refute the independent-set requirement");
      if (auto why = check_structures()) return fail(*why);
      if (cert.round == 0) return fail("shortfall evidence needs at least one structure");
      for (const auto& s : cert.structures) {
        if (s.none()) continue;
        AlmostStructure st{StructureKind::Clique, s, eps};
        if (!is_valid_structure(w, st) && !is_clique(w, s))
          return fail("a stored structure is not an almost-clique");
      }
      const VertexSet u = union_of(cert.structures, n);
      if (!u.test(cert.vertex)) return fail("vertex is not inside the union");
      const std::size_t non_edges = non_edges_into(w, cert.vertex, u.flipped());
      if (non_edges != cert.outside_non_edges) return fail("non-edge count mismatch");
      const Rational threshold = shortfall_threshold(k, eps, cert.union_size, cert.round);
      if (threshold != cert.threshold) return fail("threshold arithmetic mismatch");
      if (!(as_rational(non_edges) < threshold)) return fail("no shortfall against threshold");
      break;
    }
    case EvidenceKind::CandidateNoClique: {
      if (on_side != FailedRequirement::NoKClique)
        return fail("candidate evidence must refute the clique requirement");
      if (auto why = check_structures()) return fail(*why);
      const VertexSet u = union_of(cert.structures, n);
      if (u.test(cert.vertex)) return fail("vertex lies inside the union");
      const std::size_t t = non_edges_into(w, cert.vertex, u);
      if (t != cert.non_edges_into_union) return fail("non-edge count mismatch");
      const std::int64_t target = static_cast<std::int64_t>(k) -
                                  (static_cast<std::int64_t>(cert.union_size) -
                                   static_cast<std::int64_t>(t));
      if (target != cert.target || target < 1) return fail("target arithmetic mismatch");
      VertexSet candidate = w.neighbors(cert.vertex) - u;
      candidate.set(cert.vertex);
      if (!(candidate == cert.candidate)) return fail("candidate set mismatch");
      if (!std::holds_alternative<NoClique>(
              find_dense_subgraph(w, candidate, static_cast<std::size_t>(target), eps)))
        return fail("dense-subgraph search finds a structure on recomputation");
      break;
    }
    case EvidenceKind::ExactOracle:
      if (static_cast<std::int64_t>(k) > expected.k_min)
        return fail("oracle evidence is only issued for k <= K_delta");
      break;
  }

  const CliqueResult witness = cert.reason == FailedRequirement::NoKClique
                                   ? max_clique_through(g, cert.vertex, k)
                                   : max_is_through(g, cert.vertex, k);
  if (witness.size >= k)
    return fail("exact oracle finds a " + std::string(cert.reason == FailedRequirement::NoKClique
                                                          ? "clique"
                                                          : "independent set") +
                " of size " + std::to_string(witness.size) + " through the vertex");
  return {true, "evidence recomputed and confirmed by the exact oracle"};
}

std::string to_string(FailedRequirement r) {
  return r == FailedRequirement::NoKClique ? "no-k-clique" : "no-k-independent-set";
}

std::string to_string(EvidenceKind e) {
  switch (e) {
    case EvidenceKind::WholeGraphNoClique: return "whole-graph-no-clique";
    case EvidenceKind::OutsideShortfall: return "outside-shortfall";
    case EvidenceKind::CandidateNoClique: return "candidate-no-clique";
    case EvidenceKind::ExactOracle: return "exact-oracle";
  }
  return "unknown";
}

std::string to_string(Side s) { return s == Side::Clique ? "clique" : "independent-set"; }

}  // namespace kex
