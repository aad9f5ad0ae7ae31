#pragma once

// Epsilon-relaxed cliques and independent sets, the size/intersection
// inequalities they satisfy, and the recursive min-degree search that finds
// a dense (epsilon-almost-clique) subgraph or proves a clique absent.

#include "kexclude/generators.hpp"
#include "kexclude/graph.hpp"
#include "kexclude/rational.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace kex {

/// kind == Clique: every member has in-set degree >= (1 - eps)|set|.
/// kind == IndependentSet: every member has in-set degree <= eps|set|.
struct AlmostStructure {
  StructureKind kind = StructureKind::Clique;
  VertexSet vertices;
  Rational eps;

  std::size_t size() const { return vertices.count(); }
};

struct AlmostCheck {
  bool ok = true;
  std::vector<Vertex> violators;
};

AlmostCheck check_almost(const Graph& g, const VertexSet& s, StructureKind kind,
                         const Rational& eps);

/// Degree condition of `s` plus the requirement eps*|set| >= 1 for nonempty
/// sets (vacuous for the empty set).
bool is_valid_structure(const Graph& g, const AlmostStructure& s);

/// For an almost-clique: no independent set inside it exceeds floor(eps|C|).
/// For an almost-IS: no clique inside it exceeds floor(eps|I|) + 1.
std::size_t max_is_bound_in_almost_clique(const AlmostStructure& c);
std::size_t max_clique_bound_in_almost_is(const AlmostStructure& i);

/// |C ∩ I| <= eps_C|C| + eps_I|I| (both equal eps in the uniform case).
bool check_intersection_lemma(const AlmostStructure& c, const AlmostStructure& i);

struct EpsMSystem {
  std::vector<AlmostStructure> cliques;
  std::vector<AlmostStructure> iss;
  Rational eps;
  std::size_t m = 0;
};

struct SystemSize {
  std::size_t union_size = 0;
  std::size_t total = 0;  // sum of member sizes over both families
  Rational lower_bound;   // (1 - m*eps) * total
  bool disjoint_families = true;
  bool bound_holds = true;
};

/// Union cardinality and the lower bound (1 - m eps)(sum |I_i| + sum |C_i|).
SystemSize system_size(const EpsMSystem& sys);

struct NoClique {};
struct Acceptable {
  AlmostStructure structure;
};
using AcceptableResult = std::variant<NoClique, Acceptable>;

struct SearchStats {
  std::uint64_t calls = 0;
};

/// Returns an eps-almost-clique of size >= k, or NoClique, which certifies
/// that g has no clique of size k. Requires eps >= 2/k (and k >= 1);
/// throws std::invalid_argument otherwise.
AcceptableResult find_acceptable_graph(const Graph& g, std::size_t k, const Rational& eps,
                                       SearchStats* stats = nullptr);

/// The same recursion restricted to `within`, without the eps >= 2/k
/// requirement. When eps*|V| < 1 an all-adjacent subgraph cannot shrink
/// and is returned as-is: it is an exact clique, and its structure carries
/// eps' = 1/|C| (the smallest value for which it satisfies the definition).
/// Requires eps < 1.
AcceptableResult find_dense_subgraph(const Graph& g, const VertexSet& within, std::size_t k,
                                     const Rational& eps, SearchStats* stats = nullptr);

/// Almost-IS search: find_acceptable_graph on the complement with the kind
/// of the returned structure flipped.
AcceptableResult find_acceptable_is(const Graph& g, std::size_t k, const Rational& eps,
                                    SearchStats* stats = nullptr);

/// Worst-case call count implied by T(N) = 1 + T(N-1) + T(ceil((1-eps)N)),
/// T(N) = 1 for N < k. Saturates at UINT64_MAX.
std::uint64_t recursion_call_bound(std::size_t n, std::size_t k, const Rational& eps);

}  // namespace kex
