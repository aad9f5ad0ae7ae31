#include "kexclude/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace kex {

VertexSet ClusterLayout::members(Cluster c) const {
  VertexSet s(assignment.size());
  for (Vertex v = 0; v < assignment.size(); ++v)
    if (assignment[v] == c) s.set(v);
  return s;
}

namespace {

void add_4pd_edges(GraphBuilder& b, std::size_t d) {
  auto base = [d](Cluster c) { return static_cast<std::size_t>(c) * d; };
  auto clique = [&](Cluster c) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) b.add_edge(base(c) + i, base(c) + j);
  };
  auto join = [&](Cluster x, Cluster y) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) b.add_edge(base(x) + i, base(y) + j);
  };
  clique(Cluster::InternalB);
  clique(Cluster::InternalC);
  join(Cluster::ExternalA, Cluster::InternalB);
  join(Cluster::InternalB, Cluster::InternalC);
  join(Cluster::InternalC, Cluster::ExternalD);
}

ClusterLayout layout_4pd(std::size_t d) {
  ClusterLayout layout;
  layout.d = d;
  layout.assignment.resize(4 * d);
  for (std::size_t v = 0; v < 4 * d; ++v) layout.assignment[v] = static_cast<Cluster>(v / d);
  return layout;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0,1], got " + std::to_string(p));
}

void fill_gnp(GraphBuilder& b, std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
}

}  // namespace

FourPathGraph gen_4pd(std::size_t d) {
  if (d == 0) throw std::invalid_argument("4P_d requires d >= 1");
  GraphBuilder b(4 * d);
  add_4pd_edges(b, d);
  return {std::move(b).build(), layout_4pd(d)};
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  std::mt19937_64 rng(seed);
  GraphBuilder b(n);
  fill_gnp(b, n, p, rng);
  return std::move(b).build();
}

PlantedGraph gen_planted(std::size_t n, double p, std::size_t size, StructureKind kind,
                         std::uint64_t seed) {
  check_probability(p);
  if (size > n)
    throw std::invalid_argument("planted size " + std::to_string(size) + " exceeds n = " +
                                std::to_string(n));
  std::mt19937_64 rng(seed);
  GraphBuilder b(n);
  fill_gnp(b, n, p, rng);

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(size);
  std::sort(order.begin(), order.end());

  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) {
      if (kind == StructureKind::Clique)
        b.add_edge(order[i], order[j]);
      else
        b.remove_edge(order[i], order[j]);
    }
  return {std::move(b).build(), make_vertex_set(n, order)};
}

ReductionInstance gen_hardness_reduction(const Graph& g1, std::size_t k, const Rational& eps) {
  if (k == 0) throw std::invalid_argument("reduction requires k >= 1");
  if (eps <= 0) throw std::invalid_argument("reduction requires eps > 0");
  const Rational embedded = eps * Rational(static_cast<std::int64_t>(k));
  if (embedded.denominator() != 1)
    throw std::invalid_argument("eps*k = " + to_string(embedded) + " is not an integer");
  const Rational threshold = embedded / 6;
  if (threshold.denominator() != 1)
    throw std::invalid_argument("eps*k/6 = " + to_string(threshold) + " is not an integer");
  if (static_cast<std::int64_t>(g1.order()) != embedded.numerator())
    throw std::invalid_argument("g1 must have eps*k = " + to_string(embedded) +
                                " vertices, has " + std::to_string(g1.order()));
  const auto is_threshold = static_cast<std::size_t>(threshold.numerator());
  if (is_threshold > k)
    throw std::invalid_argument("eps*k/6 = " + std::to_string(is_threshold) + " exceeds k = " +
                                std::to_string(k));

  const std::size_t base_n = 4 * k;
  const std::size_t n = base_n + g1.order();
  GraphBuilder b(n);
  add_4pd_edges(b, k);

  ReductionInstance out;
  out.layout = layout_4pd(k);
  out.is_threshold = is_threshold;
  out.embedding.resize(g1.order());
  for (std::size_t i = 0; i < g1.order(); ++i) out.embedding[i] = base_n + i;
  for (auto [u, v] : g1.edges()) b.add_edge(out.embedding[u], out.embedding[v]);

  // T: the lowest-indexed k - eps*k/6 vertices of external cluster A.
  out.t = VertexSet(n);
  out.s = VertexSet(n);
  const std::size_t t_size = k - is_threshold;
  for (Vertex v = 0; v < base_n; ++v) {
    if (v < t_size)
      out.t.set(v);
    else
      out.s.set(v);
  }
  for (Vertex x : out.embedding)
    out.s.for_each([&](std::size_t v) { b.add_edge(x, v); });

  out.graph = std::move(b).build();
  return out;
}

Graph append_isolated(const Graph& g, std::size_t count) {
  GraphBuilder b(g.order() + count);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace kex
