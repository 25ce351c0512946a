#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "confmodel/degree.hpp"
#include "confmodel/multigraph.hpp"
#include "confmodel/random.hpp"

namespace confmodel {

/// Half-edge (i, k): the k-th stub of vertex i, both 0-based.
struct HalfEdge {
  std::size_t vertex;
  std::size_t index;
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

/// Half-edges of a degree sequence, numbered 0..|H|-1 vertex by vertex.
class HalfEdgeSystem {
 public:
  explicit HalfEdgeSystem(DegreeSequence degrees);

  const DegreeSequence& degrees() const { return degrees_; }
  std::size_t vertex_count() const { return degrees_.size(); }
  std::size_t size() const { return owner_.size(); }
  std::size_t owner(std::size_t h) const { return owner_[h]; }
  HalfEdge label(std::size_t h) const { return {owner_[h], h - offset_[owner_[h]]}; }
  /// Throws std::out_of_range for a half-edge not in the system.
  std::size_t id(HalfEdge e) const;

 private:
  DegreeSequence degrees_;
  std::vector<std::size_t> owner_;
  std::vector<std::size_t> offset_;
};

/// Set of disjoint half-edge pairs, kept sorted (smaller id first in each pair).
class Matching {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  Matching() = default;
  /// Validates range and disjointness against sys.
  Matching(const HalfEdgeSystem& sys, std::vector<Pair> pairs);
  /// Normalizes and sorts pairs without validation; callers guarantee disjointness.
  static Matching trusted(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  /// c(i): unmatched half-edges at each vertex.
  std::vector<std::size_t> unmatched_counts(const HalfEdgeSystem& sys) const;
  std::size_t unmatched_total(const HalfEdgeSystem& sys) const { return sys.size() - 2 * pairs_.size(); }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<Pair> pairs_;
};

/// V = A u B, A and B disjoint.
class Bipartition {
 public:
  explicit Bipartition(std::vector<bool> in_a) : in_a_(std::move(in_a)) {}
  /// A given as 0-based vertex list.
  static Bipartition from_a(std::size_t n, std::span<const std::size_t> a);

  std::size_t vertex_count() const { return in_a_.size(); }
  bool in_a(std::size_t v) const { return in_a_[v]; }
  std::vector<std::size_t> a_vertices() const;
  std::vector<std::size_t> b_vertices() const;
  std::size_t degree_a(const DegreeSequence& d) const;
  std::size_t degree_b(const DegreeSequence& d) const;

 private:
  std::vector<bool> in_a_;
};

/// alpha A-internal pairs, beta B-internal pairs, gamma cross pairs.
struct PairingCounts {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t gamma = 0;

  bool feasible(std::size_t degree_a, std::size_t degree_b) const {
    return 2 * alpha + gamma <= degree_a && 2 * beta + gamma <= degree_b;
  }
  friend bool operator==(const PairingCounts&, const PairingCounts&) = default;
  friend auto operator<=>(const PairingCounts&, const PairingCounts&) = default;
};

enum class PairingKind { a_internal, b_internal, cross };

inline constexpr std::size_t kEnumerationBudget = 12;  // total degree
inline constexpr std::size_t kDefaultSimpleTries = 10000;

Multigraph graph_of_matching(const HalfEdgeSystem& sys, const Matching& m);

PairingCounts classify(const HalfEdgeSystem& sys, const Bipartition& bp, const Matching& m);

/// Uniform maximal matching: shuffle the half-edges and pair consecutive ones.
Matching sample_uniform_matching(const HalfEdgeSystem& sys, RandomStream& rng);
Multigraph sample_uniform_graph(const DegreeSequence& d, RandomStream& rng);

/// Uniform element of M(alpha, beta, gamma) by sequential random pairings,
/// performed in the given order (default: all A, then all B, then all cross).
Matching sample_in_class(const HalfEdgeSystem& sys, const Bipartition& bp, const PairingCounts& c,
                         RandomStream& rng);
Matching sample_in_class(const HalfEdgeSystem& sys, const Bipartition& bp, std::span<const PairingKind> order,
                         RandomStream& rng);

/// Every matching in M(alpha, beta, gamma), in canonical order; empty when infeasible.
std::vector<Matching> enumerate_class(const HalfEdgeSystem& sys, const Bipartition& bp, const PairingCounts& c);

/// Every maximal matching (at most one unmatched half-edge).
std::vector<Matching> enumerate_maximal_matchings(const HalfEdgeSystem& sys);

class SimpleSamplingError : public std::runtime_error {
 public:
  explicit SimpleSamplingError(std::size_t attempts);
  std::size_t attempts() const { return attempts_; }

 private:
  std::size_t attempts_;
};

/// Rejection sampling of sample_uniform_graph until the result is simple.
Multigraph sample_simple(const DegreeSequence& d, RandomStream& rng, std::size_t max_tries = kDefaultSimpleTries);

/// Pairing order with alpha A-steps, beta B-steps, gamma cross-steps in that order.
std::vector<PairingKind> default_order(const PairingCounts& c);

/// Exact tally of all sequential-pairing histories for a given order.
struct HistoryTally {
  /// Number of complete histories ending at each matching.
  std::map<Matching, std::uint64_t> arrivals;
  /// Available choices at each step; a history's probability is the product of
  /// reciprocals, uniform when every state at a given step offers the same count.
  std::vector<std::uint64_t> choices_per_step;
  bool choices_state_independent = true;
  std::uint64_t histories = 0;

  /// All arrival counts equal.
  bool uniform() const;
};

HistoryTally count_histories(const HalfEdgeSystem& sys, const Bipartition& bp, std::span<const PairingKind> order);

/// For every m' in M(c + e_kind): number of m in M(c) and one allowed pairing of that
/// kind with m + pair = m'. The pairing lemma states this equals the incremented coordinate.
std::map<Matching, std::uint64_t> predecessor_counts(const HalfEdgeSystem& sys, const Bipartition& bp,
                                                     const PairingCounts& c, PairingKind kind);

}  // namespace confmodel
