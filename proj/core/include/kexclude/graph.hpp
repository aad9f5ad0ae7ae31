#pragma once

#include "kexclude/bitset.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kex {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// A set of vertices of some host graph, stored as a bitset over [0, n).
using VertexSet = Bitset;

VertexSet make_vertex_set(std::size_t n, std::span<const Vertex> members);
VertexSet make_vertex_set(std::size_t n, std::initializer_list<Vertex> members);
/// Sorted member list.
std::vector<Vertex> members_of(const VertexSet& s);

class GraphError : public std::invalid_argument {
 public:
  GraphError(const std::string& what, Edge offending)
      : std::invalid_argument(what), offending_(offending) {}
  Edge offending() const { return offending_; }

 private:
  Edge offending_;
};

class Graph;

/// Mutable staging area; the only way to produce a Graph besides the
/// algebraic operations below.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  /// Throws GraphError on an out-of-range endpoint or a self-loop.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }
  std::size_t order() const { return n_; }

  Graph build() &&;

 private:
  void check(Vertex u, Vertex v) const;

  std::size_t n_;
  std::vector<Bitset> rows_;
};

/// Undirected simple graph on vertices 0..n-1, bit-packed adjacency rows.
/// Immutable once built, so it can be shared freely between threads.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  VertexSet all_vertices() const { return Bitset::full(order()); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  Graph(std::vector<Bitset> rows, std::size_t edge_count)
      : rows_(std::move(rows)), edge_count_(edge_count) {}

  std::vector<Bitset> rows_;
  std::size_t edge_count_ = 0;
};

/// Number of neighbours of v inside s. Membership of v itself is irrelevant
/// since there are no self-loops.
std::size_t degree_in(const Graph& g, Vertex v, const VertexSet& s);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[i] is the id in the host graph of local vertex i; ascending.
  std::vector<Vertex> to_parent;

  VertexSet lift(const VertexSet& local, std::size_t host_order) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent_set(const Graph& g, const VertexSet& s);

/// FNV-1a over the order and the sorted edge list; stable across platforms
/// and runs.
std::uint64_t graph_hash(const Graph& g);

}  // namespace kex
