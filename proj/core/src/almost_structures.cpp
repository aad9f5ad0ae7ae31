#include "kexclude/almost_structures.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace kex {

namespace {

Rational size_r(std::size_t x) { return Rational(static_cast<std::int64_t>(x)); }

// deg < (1 - eps) * size, by cross-multiplication.
bool below_clique_threshold(std::size_t deg, std::size_t size, const Rational& eps) {
  const std::int64_t num = eps.numerator();
  const std::int64_t den = eps.denominator();
  return static_cast<std::int64_t>(deg) * den < (den - num) * static_cast<std::int64_t>(size);
}

class DenseSubgraphSearch {
 public:
  DenseSubgraphSearch(const Graph& g, std::size_t k, const Rational& eps, SearchStats* stats)
      : g_(g), k_(k), eps_(eps), stats_(stats) {}

  std::optional<VertexSet> run(VertexSet vertices) {
    while (true) {
      if (stats_) ++stats_->calls;
      const std::size_t size = vertices.count();
      if (size < k_ || size == 0) return std::nullopt;

      Vertex v = vertices.first();
      std::size_t h = std::numeric_limits<std::size_t>::max();
      vertices.for_each([&](std::size_t u) {
        const std::size_t d = g_.neighbors(u).intersection_count(vertices);
        if (d < h) {
          h = d;
          v = u;
        }
      });

      if (!below_clique_threshold(h, size, eps_)) return vertices;
      // All-adjacent but eps*|V| < 1: the closed neighbourhood is V itself.
      if (h + 1 == size) return vertices;

      VertexSet closed = g_.neighbors(v) & vertices;
      closed.set(v);
      if (auto found = run(std::move(closed))) return found;
      // Second branch of the recursion, G minus v, as a loop.
      vertices.reset(v);
    }
  }

 private:
  const Graph& g_;
  std::size_t k_;
  Rational eps_;
  SearchStats* stats_;
};

AcceptableResult to_result(const Graph& g, std::optional<VertexSet> found, const Rational& eps,
                           StructureKind kind) {
  if (!found) return NoClique{};
  AlmostStructure s;
  s.kind = kind;
  s.vertices = std::move(*found);
  const std::size_t size = s.vertices.count();
  const bool meets = check_almost(g, s.vertices, StructureKind::Clique, eps).ok;
  s.eps = meets ? eps : Rational(1, static_cast<std::int64_t>(size));
  return Acceptable{std::move(s)};
}

void require_eps_below_one(const Rational& eps) {
  if (eps < 0 || eps >= 1)
    throw std::invalid_argument("eps must lie in [0,1), got " + to_string(eps));
}

}  // namespace

AlmostCheck check_almost(const Graph& g, const VertexSet& s, StructureKind kind,
                         const Rational& eps) {
  AlmostCheck out;
  const std::size_t size = s.count();
  const Rational limit = kind == StructureKind::Clique ? (1 - eps) * size_r(size)
                                                       : eps * size_r(size);
  s.for_each([&](std::size_t v) {
    const Rational d = size_r(g.neighbors(v).intersection_count(s));
    const bool bad = kind == StructureKind::Clique ? d < limit : d > limit;
    if (bad) out.violators.push_back(v);
  });
  out.ok = out.violators.empty();
  return out;
}

bool is_valid_structure(const Graph& g, const AlmostStructure& s) {
  const std::size_t size = s.size();
  if (size == 0) return true;
  if (s.eps * size_r(size) < 1) return false;
  return check_almost(g, s.vertices, s.kind, s.eps).ok;
}

std::size_t max_is_bound_in_almost_clique(const AlmostStructure& c) {
  return static_cast<std::size_t>(floor_of(c.eps * size_r(c.size())));
}

std::size_t max_clique_bound_in_almost_is(const AlmostStructure& i) {
  return static_cast<std::size_t>(floor_of(i.eps * size_r(i.size()))) + 1;
}

bool check_intersection_lemma(const AlmostStructure& c, const AlmostStructure& i) {
  const std::size_t common = c.vertices.intersection_count(i.vertices);
  return size_r(common) <= c.eps * size_r(c.size()) + i.eps * size_r(i.size());
}

SystemSize system_size(const EpsMSystem& sys) {
  SystemSize out;
  std::size_t universe = 0;
  for (const auto& s : sys.cliques) universe = std::max(universe, s.vertices.size());
  for (const auto& s : sys.iss) universe = std::max(universe, s.vertices.size());

  VertexSet all(universe);
  auto absorb = [&](const std::vector<AlmostStructure>& family) {
    VertexSet seen(universe);
    for (const auto& s : family) {
      if (seen.intersects(s.vertices)) out.disjoint_families = false;
      seen |= s.vertices;
      all |= s.vertices;
      out.total += s.size();
    }
  };
  absorb(sys.cliques);
  absorb(sys.iss);
  out.union_size = all.count();
  const std::size_t m =
      sys.m != 0 ? sys.m : std::max(sys.cliques.size(), sys.iss.size());
  out.lower_bound = (1 - size_r(m) * sys.eps) * size_r(out.total);
  out.bound_holds = out.disjoint_families && size_r(out.union_size) >= out.lower_bound;
  return out;
}

AcceptableResult find_acceptable_graph(const Graph& g, std::size_t k, const Rational& eps,
                                       SearchStats* stats) {
  if (k == 0) throw std::invalid_argument("target clique size k must be at least 1");
  require_eps_below_one(eps);
  if (eps < Rational(2, static_cast<std::int64_t>(k)))
    throw std::invalid_argument("eps = " + to_string(eps) + " is below 2/k = 2/" +
                                std::to_string(k));
  return find_dense_subgraph(g, g.all_vertices(), k, eps, stats);
}

AcceptableResult find_dense_subgraph(const Graph& g, const VertexSet& within, std::size_t k,
                                     const Rational& eps, SearchStats* stats) {
  require_eps_below_one(eps);
  DenseSubgraphSearch search(g, k, eps, stats);
  return to_result(g, search.run(within), eps, StructureKind::Clique);
}

AcceptableResult find_acceptable_is(const Graph& g, std::size_t k, const Rational& eps,
                                    SearchStats* stats) {
  AcceptableResult r = find_acceptable_graph(complement(g), k, eps, stats);
  if (auto* a = std::get_if<Acceptable>(&r)) a->structure.kind = StructureKind::IndependentSet;
  return r;
}

std::uint64_t recursion_call_bound(std::size_t n, std::size_t k, const Rational& eps) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> t(n + 1, 1);
  for (std::size_t size = std::max<std::size_t>(k, 1); size <= n; ++size) {
    auto dense = static_cast<std::size_t>(
        std::max<std::int64_t>(0, ceil_of((1 - eps) * size_r(size))));
    dense = std::min(dense, size - 1);
    const std::uint64_t a = t[size - 1];
    const std::uint64_t b = t[dense];
    t[size] = (a > kMax - 1 - b) ? kMax : 1 + a + b;
  }
  return t[n];
}

}  // namespace kex
