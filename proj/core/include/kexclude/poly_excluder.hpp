#pragma once

// Polynomial-time search for a k-excluding vertex when n <= (4 - delta) k.
//
// Each side grows a system of disjoint epsilon-almost-cliques C_1, C_2, ...
// (the independent-set side runs the same code on the complement). After
// round j, with U the union of the first j structures and c_j = |U|, any
// u in U lacking k - eps*c_j - j - 1 non-edges towards V \ U cannot lie in
// a k-independent set. Otherwise the outside vertex v with the most
// non-edges t into U must have at least n_{j+1} = k - (c_j - t) clique
// partners outside U, and the dense-subgraph search on v plus its outside
// neighbours either finds C_{j+1} or proves v is in no k-clique.

#include "kexclude/almost_structures.hpp"
#include "kexclude/bounds.hpp"
#include "kexclude/exact_oracle.hpp"
#include "kexclude/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kex {

enum class FailedRequirement : std::uint8_t { NoKClique, NoKIndependentSet };

enum class EvidenceKind : std::uint8_t {
  WholeGraphNoClique,  // round 0: the side's graph has no k-clique at all
  OutsideShortfall,    // u in U with too few non-edges leaving U
  CandidateNoClique,   // v's outside neighbourhood has no n_{j+1}-clique
  ExactOracle,         // small-k fallback, decided by the exact oracle
};

/// Which graph the evidence refers to: g itself (clique side) or its
/// complement (independent-set side).
enum class Side : std::uint8_t { Clique, IndependentSet };

struct ExclusionCertificate {
  Vertex vertex = 0;
  FailedRequirement reason = FailedRequirement::NoKClique;
  std::size_t round = 0;
  Side side = Side::Clique;
  EvidenceKind evidence = EvidenceKind::WholeGraphNoClique;

  std::size_t k = 0;
  ExcluderParams params;
  std::uint64_t graph_hash = 0;
  std::size_t graph_order = 0;

  /// C_1..C_round on the side's graph; empty sets are kept in place.
  std::vector<VertexSet> structures;
  std::size_t union_size = 0;  // c_j

  // OutsideShortfall
  std::size_t outside_non_edges = 0;
  Rational threshold;  // k - eps*c_j - j - 1

  // CandidateNoClique
  std::size_t non_edges_into_union = 0;  // t
  std::int64_t target = 0;               // n_{j+1}
  VertexSet candidate;
};

struct SystemState {
  Side side = Side::Clique;
  std::vector<AlmostStructure> structures;
  std::size_t union_size = 0;  // c_j
  std::size_t round = 0;       // j
};

struct SmallKFallback {
  Classification classification;
  std::optional<ExclusionCertificate> certificate;  // empty iff g is k-enabling
};

struct InternalContradiction {
  SystemState clique_side;
  SystemState is_side;
  SystemSize system;
  Rational required_size;  // 2(1 - eps m)(2 - 2/(m+1)) k
  bool size_inequality_holds = false;
  std::string dump;
};

using ExcluderOutcome = std::variant<ExclusionCertificate, SmallKFallback, InternalContradiction>;

struct ExcluderOptions {
  /// Also build the independent-set side after the clique side has already
  /// produced a certificate. The outcome is unchanged; the extra structures
  /// are reported for invariant checking.
  bool build_both_sides = false;
};

struct ExcluderRun {
  ExcluderOutcome outcome;
  ExcluderParams params;
  /// Structures built on each side, in g's terms (IS-side structures are
  /// epsilon-almost-independent sets of g).
  std::vector<SystemState> sides;
  std::uint64_t search_calls = 0;
  /// Runtime invariant failures (disjointness, c_j floor, degree condition).
  std::vector<std::string> violations;
};

class ExcluderPrecondition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ExcluderPrecondition when n > (4 - delta) k or k == 0, and
/// std::invalid_argument for an unusable delta.
ExcluderRun find_excluding_poly(const Graph& g, std::size_t k, const Rational& delta,
                                const ExcluderOptions& options = {});

struct VerifyResult {
  bool ok = false;
  std::string reason;
};

/// Recomputes the stored evidence from g and asks the exact oracle whether
/// the named vertex fails the named requirement. Passes only if both agree.
VerifyResult verify_certificate(const Graph& g, std::size_t k, const ExclusionCertificate& cert);

std::string to_string(FailedRequirement r);
std::string to_string(EvidenceKind e);
std::string to_string(Side s);

}  // namespace kex
