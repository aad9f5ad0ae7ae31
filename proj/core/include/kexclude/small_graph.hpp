#pragma once

// Fixed-capacity graphs for exhaustive enumeration: one 16-bit adjacency
// mask per vertex, no allocation.

#include "kexclude/graph.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace kex {

inline constexpr std::size_t kSmallGraphCap = 11;

struct SmallGraph {
  std::uint8_t n = 0;
  std::array<std::uint16_t, 16> adj{};

  bool adjacent(unsigned u, unsigned v) const { return (adj[u] >> v) & 1U; }
  void add_edge(unsigned u, unsigned v) {
    adj[u] |= static_cast<std::uint16_t>(1U << v);
    adj[v] |= static_cast<std::uint16_t>(1U << u);
  }
  std::uint16_t all() const { return static_cast<std::uint16_t>((1U << n) - 1U); }

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
};

/// Labelled graph whose edge (i,j), i<j, is present iff bit e of `mask` is
/// set, where e enumerates pairs as (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
SmallGraph small_from_mask(unsigned n, std::uint64_t mask);

/// Upper-triangle code in the same pair order; inverse of small_from_mask.
std::uint64_t small_to_mask(const SmallGraph& g);

SmallGraph small_from_graph(const Graph& g);
Graph small_to_graph(const SmallGraph& g);

/// Size of a maximum clique inside `candidates`.
unsigned small_max_clique(const SmallGraph& g, std::uint16_t candidates);

/// min over v of min(omega_v, alpha_v). When some vertex has
/// min(omega_v, alpha_v) <= floor the exact value is not needed and any
/// value <= floor may be returned.
unsigned small_k_of_graph(const SmallGraph& g, unsigned floor = 0);

/// Canonical code: equal for two graphs iff they are isomorphic.
/// Individualisation-refinement with automorphism pruning.
std::uint64_t canonical_code(const SmallGraph& g);

/// The canonical representative (small_from_mask of canonical_code).
SmallGraph canonical_form(const SmallGraph& g);

/// One representative per isomorphism class on n vertices, ascending by code.
std::vector<SmallGraph> nonisomorphic_graphs(unsigned n, unsigned threads = 1);

}  // namespace kex
