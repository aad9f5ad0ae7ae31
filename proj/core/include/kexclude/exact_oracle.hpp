#pragma once

// Ground-truth clique / independent-set queries. Everything here is exact
// and deterministic; the polynomial algorithms are checked against it.

#include "kexclude/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace kex {

struct CliqueResult {
  std::size_t size = 0;
  VertexSet members;
};

/// Maximum clique of g restricted to `candidates`, by branch and bound with
/// a greedy colouring bound. Candidates are ordered by descending degree
/// inside the candidate set (ties by lowest id). When `stop_at` is reached
/// the search returns early with a clique of at least that size.
CliqueResult max_clique_within(const Graph& g, const VertexSet& candidates,
                               std::size_t stop_at = std::numeric_limits<std::size_t>::max());

/// Largest clique containing v: 1 + a maximum clique of N(v).
CliqueResult max_clique_through(const Graph& g, Vertex v,
                                std::size_t stop_at = std::numeric_limits<std::size_t>::max());

/// Largest independent set containing v (max_clique_through on the complement).
CliqueResult max_is_through(const Graph& g, Vertex v,
                            std::size_t stop_at = std::numeric_limits<std::size_t>::max());

struct VertexClassification {
  Vertex vertex = 0;
  std::size_t max_clique_through = 0;  // omega_v
  std::size_t max_is_through = 0;      // alpha_v
  VertexSet witness_clique;
  VertexSet witness_is;

  bool enabling_for(std::size_t k) const {
    return max_clique_through >= k && max_is_through >= k;
  }
};

struct Classification {
  std::size_t k = 0;
  std::vector<VertexClassification> vertices;
  std::vector<Vertex> excluding;

  bool graph_enabling() const { return excluding.empty(); }
};

/// Exact omega_v and alpha_v with witnesses for every vertex.
/// Throws std::invalid_argument for k == 0.
Classification classify_all(const Graph& g, std::size_t k);

/// Same as classify_all for one vertex, using a precomputed complement.
VertexClassification classify_vertex(const Graph& g, const Graph& complement_of_g, Vertex v);

/// min over v of min(omega_v, alpha_v); 0 for the empty graph.
std::size_t k_of_graph(const Graph& g);

enum class EnumerationMode : std::uint8_t { Labeled, Canonical };

inline constexpr std::size_t kLabeledCap = 7;
inline constexpr std::size_t kCanonicalCap = 9;

struct KTable {
  std::size_t n = 0;
  std::size_t k_of_n = 0;
  Graph witness;
  EnumerationMode mode = EnumerationMode::Labeled;
  /// Graphs inspected: labelled adjacency masks, or isomorphism classes.
  std::uint64_t graphs_examined = 0;
  bool exhaustive = true;
};

/// Exact k(n). Labeled mode walks every adjacency bitmask (n <= 7);
/// canonical mode walks one representative per isomorphism class (n <= 9).
/// Throws std::invalid_argument past the mode's cap.
KTable k_of_n_exhaustive(std::size_t n, EnumerationMode mode, unsigned threads = 1);

/// Smallest n admitting a k-enabling graph, for k <= 3.
std::size_t n_of_k_small(std::size_t k, unsigned threads = 1);

}  // namespace kex
