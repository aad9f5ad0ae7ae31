#include "kexclude/graph.hpp"

#include <string>

namespace kex {

VertexSet make_vertex_set(std::size_t n, std::span<const Vertex> members) {
  VertexSet s(n);
  for (Vertex v : members) {
    if (v >= n)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                              std::to_string(n));
    s.set(v);
  }
  return s;
}

VertexSet make_vertex_set(std::size_t n, std::initializer_list<Vertex> members) {
  return make_vertex_set(n, std::span<const Vertex>(members.begin(), members.size()));
}

std::vector<Vertex> members_of(const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  s.for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), rows_(n, Bitset(n)) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_)
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside 0.." + std::to_string(n_ == 0 ? 0 : n_ - 1),
                     {u, v});
  if (u == v)
    throw GraphError("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")", {u, v});
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  rows_[u].set(v);
  rows_[v].set(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  rows_[u].reset(v);
  rows_[v].reset(u);
  return *this;
}

Graph GraphBuilder::build() && {
  std::size_t twice = 0;
  for (const Bitset& row : rows_) twice += row.count();
  return Graph(std::move(rows_), twice / 2);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = rows_[u].next(u + 1); v < order(); v = rows_[u].next(v + 1))
      out.emplace_back(u, v);
  }
  return out;
}

std::size_t degree_in(const Graph& g, Vertex v, const VertexSet& s) {
  if (v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return g.neighbors(v).intersection_count(s);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

VertexSet InducedSubgraph::lift(const VertexSet& local, std::size_t host_order) const {
  VertexSet out(host_order);
  local.for_each([&](std::size_t i) { out.set(to_parent[i]); });
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_parent = members_of(s);
  const std::size_t m = out.to_parent.size();
  GraphBuilder b(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (g.adjacent(out.to_parent[i], out.to_parent[j])) b.add_edge(i, j);
  out.graph = std::move(b).build();
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const std::size_t size = s.count();
  bool ok = true;
  s.for_each([&](std::size_t v) {
    if (ok && g.neighbors(v).intersection_count(s) != size - 1) ok = false;
  });
  return ok;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](std::size_t v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(g.order());
  for (auto [u, v] : g.edges()) {
    mix(u);
    mix(v);
  }
  return h;
}

}  // namespace kex
