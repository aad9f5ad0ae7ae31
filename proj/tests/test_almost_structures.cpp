#include "kexclude/almost_structures.hpp"
#include "kexclude/exact_oracle.hpp"
#include "kexclude/generators.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace kex;

namespace {

Graph complete(std::size_t n) { return complement(Graph::from_edges(n, {})); }

Graph complete_minus_edge(std::size_t n, Vertex a, Vertex b) {
  GraphBuilder gb(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) gb.add_edge(u, v);
  gb.remove_edge(a, b);
  return std::move(gb).build();
}

AlmostStructure structure(StructureKind kind, std::size_t n, std::initializer_list<Vertex> v,
                          Rational eps) {
  return AlmostStructure{kind, make_vertex_set(n, v), eps};
}

AlmostStructure sized(StructureKind kind, std::size_t size, Rational eps) {
  VertexSet s(size);
  s.set_all();
  return AlmostStructure{kind, s, eps};
}

}  // namespace

TEST_SUITE("almost structures") {
  TEST_CASE("K_10 is a 1/10-almost-clique") {
    const Graph g = complete(10);
    CHECK(check_almost(g, g.all_vertices(), StructureKind::Clique, Rational(1, 10)).ok);
  }

  TEST_CASE("K_10 minus an edge") {
    const Graph g = complete_minus_edge(10, 3, 7);
    // threshold 9: only the two endpoints of the missing edge fall short
    const AlmostCheck loose = check_almost(g, g.all_vertices(), StructureKind::Clique, Rational(1, 10));
    CHECK_FALSE(loose.ok);
    CHECK(loose.violators == std::vector<Vertex>{3, 7});
    // threshold 9.5: every vertex falls short, degree 9 included
    const AlmostCheck tight = check_almost(g, g.all_vertices(), StructureKind::Clique, Rational(1, 20));
    CHECK_FALSE(tight.ok);
    CHECK(tight.violators.size() == 10);
  }

  TEST_CASE("edgeless graph is an almost-IS for any eps") {
    const Graph g = Graph::from_edges(12, {});
    for (Rational eps : {Rational(0), Rational(1, 100), Rational(1, 2)})
      CHECK(check_almost(g, g.all_vertices(), StructureKind::IndependentSet, eps).ok);
  }

  TEST_CASE("validity needs eps|S| >= 1") {
    const Graph g = complete(10);
    CHECK(is_valid_structure(g, AlmostStructure{StructureKind::Clique, g.all_vertices(), Rational(1, 10)}));
    CHECK_FALSE(is_valid_structure(g, AlmostStructure{StructureKind::Clique, g.all_vertices(), Rational(1, 20)}));
    CHECK(is_valid_structure(g, AlmostStructure{StructureKind::Clique, VertexSet(10), Rational(0)}));
  }

  TEST_CASE("inner bounds") {
    CHECK(max_is_bound_in_almost_clique(sized(StructureKind::Clique, 40, Rational(1, 20))) == 2);
    CHECK(max_is_bound_in_almost_clique(sized(StructureKind::Clique, 40, Rational(0))) == 0);
    CHECK(max_clique_bound_in_almost_is(sized(StructureKind::IndependentSet, 40, Rational(1, 20))) == 3);
  }

  TEST_CASE("inner bounds hold on random almost structures") {
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Graph g = oracle::random_graph(16, 0.9, seed);
      const Rational eps(1, 4);
      if (!check_almost(g, g.all_vertices(), StructureKind::Clique, eps).ok) continue;
      const AlmostStructure c{StructureKind::Clique, g.all_vertices(), eps};
      std::size_t alpha = 0;
      for (Vertex v = 0; v < 16; ++v) alpha = std::max(alpha, oracle::brute_through(g, v, true));
      CHECK(alpha <= max_is_bound_in_almost_clique(c));
      const AlmostStructure i{StructureKind::IndependentSet, g.all_vertices(), eps};
      const Graph co = complement(g);
      std::size_t omega_co = 0;
      for (Vertex v = 0; v < 16; ++v) omega_co = std::max(omega_co, oracle::brute_through(co, v, false));
      CHECK(omega_co <= max_clique_bound_in_almost_is(i));
      ++checked;
    }
    CHECK(checked >= 10);
  }

  TEST_CASE("intersection bound") {
    const AlmostStructure c = structure(StructureKind::Clique, 20, {0, 1, 2, 3, 4}, Rational(1, 5));
    const AlmostStructure i = structure(StructureKind::IndependentSet, 20, {5, 6, 7}, Rational(1, 5));
    CHECK(check_intersection_lemma(c, i));
    const AlmostStructure overlap = structure(StructureKind::IndependentSet, 20, {4, 5, 6, 7, 8}, Rational(1, 5));
    CHECK(check_intersection_lemma(c, overlap));
    const AlmostStructure big = structure(StructureKind::IndependentSet, 20, {0, 1, 2, 3}, Rational(1, 10));
    CHECK_FALSE(check_intersection_lemma(
        structure(StructureKind::Clique, 20, {0, 1, 2, 3}, Rational(1, 10)), big));
  }

  TEST_CASE("intersection bound on true structures of a random graph") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Graph g = oracle::random_graph(40, 0.5, seed);
      const CliqueResult c = max_clique_through(g, 0);
      const CliqueResult i = max_is_through(g, 0);
      const Rational eps(1, static_cast<std::int64_t>(std::min(c.size, i.size)));
      CHECK(c.members.intersection_count(i.members) == 1);
      CHECK(check_intersection_lemma(AlmostStructure{StructureKind::Clique, c.members, eps},
                                     AlmostStructure{StructureKind::IndependentSet, i.members, eps}));
    }
  }
}

TEST_SUITE("system size") {
  TEST_CASE("disjoint families add up") {
    EpsMSystem sys;
    sys.eps = Rational(1, 10);
    sys.m = 2;
    sys.cliques = {structure(StructureKind::Clique, 20, {0, 1, 2}, sys.eps),
                   structure(StructureKind::Clique, 20, {3, 4}, sys.eps)};
    sys.iss = {structure(StructureKind::IndependentSet, 20, {5, 6, 7}, sys.eps),
               structure(StructureKind::IndependentSet, 20, {8}, sys.eps)};
    const SystemSize s = system_size(sys);
    CHECK(s.union_size == 9);
    CHECK(s.total == 9);
    CHECK(s.lower_bound == Rational(36, 5));
    CHECK(s.bound_holds);
  }

  TEST_CASE("one clique and one independent set sharing a vertex") {
    const std::size_t k = 10;
    EpsMSystem sys;
    sys.eps = Rational(1, 20);
    sys.m = 1;
    VertexSet c(30), i(30);
    for (Vertex v = 0; v < k; ++v) c.set(v);
    for (Vertex v = k - 1; v < 2 * k - 1; ++v) i.set(v);
    sys.cliques = {AlmostStructure{StructureKind::Clique, c, sys.eps}};
    sys.iss = {AlmostStructure{StructureKind::IndependentSet, i, sys.eps}};
    const SystemSize s = system_size(sys);
    CHECK(s.union_size == 2 * k - 1);
    CHECK(s.lower_bound == Rational(19));
    CHECK(s.bound_holds);
  }

  TEST_CASE("overlap inside a family is reported") {
    EpsMSystem sys;
    sys.eps = Rational(1, 10);
    sys.cliques = {structure(StructureKind::Clique, 10, {0, 1}, sys.eps),
                   structure(StructureKind::Clique, 10, {1, 2}, sys.eps)};
    CHECK_FALSE(system_size(sys).disjoint_families);
    CHECK_FALSE(system_size(sys).bound_holds);
  }
}

TEST_SUITE("acceptable graph search") {
  TEST_CASE("K_10 is returned whole") {
    const Graph g = complete(10);
    const AcceptableResult r = find_acceptable_graph(g, 10, Rational(1, 5));
    REQUIRE(std::holds_alternative<Acceptable>(r));
    CHECK(std::get<Acceptable>(r).structure.vertices == g.all_vertices());
  }

  TEST_CASE("edgeless graph has no 5-clique") {
    CHECK(std::holds_alternative<NoClique>(
        find_acceptable_graph(Graph::from_edges(20, {}), 5, Rational(2, 5))));
  }

  TEST_CASE("planted cliques are found") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const PlantedGraph pg = gen_planted(100, 0.3, 20, StructureKind::Clique, seed);
      const AcceptableResult r = find_acceptable_graph(pg.graph, 20, Rational(1, 4));
      REQUIRE(std::holds_alternative<Acceptable>(r));
      const AlmostStructure& s = std::get<Acceptable>(r).structure;
      CHECK(s.size() >= 20);
      CHECK(s.eps == Rational(1, 4));
      CHECK(is_valid_structure(pg.graph, s));
    }
  }

  TEST_CASE("almost independent sets via the complement") {
    const PlantedGraph pg = gen_planted(80, 0.6, 20, StructureKind::IndependentSet, 3);
    const AcceptableResult r = find_acceptable_is(pg.graph, 20, Rational(1, 4));
    REQUIRE(std::holds_alternative<Acceptable>(r));
    const AlmostStructure& s = std::get<Acceptable>(r).structure;
    CHECK(s.kind == StructureKind::IndependentSet);
    CHECK(is_valid_structure(pg.graph, s));
  }

  TEST_CASE("argument checks") {
    const Graph g = complete(5);
    CHECK_THROWS_AS(find_acceptable_graph(g, 0, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(find_acceptable_graph(g, 4, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(find_acceptable_graph(g, 4, Rational(1, 4)), std::invalid_argument);
    CHECK_NOTHROW(find_acceptable_graph(g, 4, Rational(1, 2)));
  }

  TEST_CASE("small eps returns exact cliques") {
    const Graph g = complete(6);
    const AcceptableResult r = find_dense_subgraph(g, g.all_vertices(), 4, Rational(1, 42));
    REQUIRE(std::holds_alternative<Acceptable>(r));
    const AlmostStructure& s = std::get<Acceptable>(r).structure;
    CHECK(is_clique(g, s.vertices));
    CHECK(s.eps == Rational(1, 6));
    CHECK(is_valid_structure(g, s));
  }

  TEST_CASE("NoClique is sound and Acceptable is complete on random graphs") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      const std::size_t n = 10 + seed % 9;
      const Graph g = oracle::random_graph(n, 0.45 + 0.003 * static_cast<double>(seed), seed);
      const std::size_t omega = oracle::brute_omega(g);
      for (std::size_t k = 3; k <= 6; ++k) {
        const Rational eps(2, static_cast<std::int64_t>(k));
        const AcceptableResult r = find_acceptable_graph(g, k, eps);
        if (std::holds_alternative<NoClique>(r)) {
          CHECK(omega < k);
        } else {
          const AlmostStructure& s = std::get<Acceptable>(r).structure;
          CHECK(s.size() >= k);
          CHECK(check_almost(g, s.vertices, StructureKind::Clique, s.eps).ok);
        }
        if (omega >= k) CHECK(std::holds_alternative<Acceptable>(r));
      }
    }
  }
}

TEST_SUITE("recursion metering") {
  TEST_CASE("call bound matches an independent recurrence") {
    for (std::size_t n = 0; n <= 60; n += 3)
      for (std::size_t k = 1; k <= 12; k += 2)
        for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{1, 4}, {1, 3}, {1, 42}, {2, 5}})
          CHECK(recursion_call_bound(n, k, Rational(p, q)) == oracle::call_envelope(n, k, p, q));
  }

  TEST_CASE("call bound saturates") {
    CHECK(recursion_call_bound(5000, 2, Rational(1, 1000)) == UINT64_MAX);
  }

  TEST_CASE("observed calls stay under the envelope") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const std::size_t n = 20 + seed % 40;
      const Graph g = oracle::random_graph(n, 0.2 + 0.01 * static_cast<double>(seed % 60), seed);
      for (std::size_t k : {8UL, 10UL, 12UL}) {
        const Rational eps(1, 4);
        SearchStats stats;
        find_acceptable_graph(g, k, eps, &stats);
        CHECK(stats.calls >= 1);
        CHECK(stats.calls <= recursion_call_bound(n, k, eps));
      }
    }
  }
}
