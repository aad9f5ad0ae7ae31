#pragma once

#include "kexclude/graph.hpp"
#include "kexclude/rational.hpp"

#include <cstdint>
#include <vector>

namespace kex {

/// Cluster roles in the blown-up 4-vertex path, in path order.
enum class Cluster : std::uint8_t { ExternalA, InternalB, InternalC, ExternalD };

struct ClusterLayout {
  std::size_t d = 0;
  /// assignment[v] for v in 0..4d-1. Cluster i occupies ids [i*d, (i+1)*d).
  std::vector<Cluster> assignment;

  VertexSet members(Cluster c) const;
};

struct FourPathGraph {
  Graph graph;
  ClusterLayout layout;
};

/// 4P_d: each vertex of the path A-B-C-D becomes a cluster of d vertices.
/// Internal clusters B, C are cliques, external clusters A, D independent
/// sets, and path-adjacent clusters are joined completely.
/// Throws std::invalid_argument for d == 0.
FourPathGraph gen_4pd(std::size_t d);

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

enum class StructureKind : std::uint8_t { Clique, IndependentSet };

struct PlantedGraph {
  Graph graph;
  VertexSet planted;
};

/// G(n, p) with a uniformly chosen `size`-subset overwritten to a clique
/// (or independent set).
PlantedGraph gen_planted(std::size_t n, double p, std::size_t size, StructureKind kind,
                         std::uint64_t seed);

struct ReductionInstance {
  Graph graph;
  ClusterLayout layout;  // layout of the embedded 4P_k (ids 0..4k-1)
  VertexSet s;           // 4P_k vertices joined completely to the embedded graph
  VertexSet t;           // the k - eps*k/6 excluded vertices, inside cluster A
  std::vector<Vertex> embedding;  // embedding[i] = id of g1's vertex i
  std::size_t is_threshold = 0;   // eps*k/6
};

/// Builds 4P_k together with g1, joined completely between V(g1) and S.
/// Requires |V(g1)| = eps*k with eps*k and eps*k/6 integral; throws
/// std::invalid_argument naming the violated constraint.
ReductionInstance gen_hardness_reduction(const Graph& g1, std::size_t k, const Rational& eps);

/// g plus `count` isolated vertices with ids order()..order()+count-1.
Graph append_isolated(const Graph& g, std::size_t count);

}  // namespace kex
