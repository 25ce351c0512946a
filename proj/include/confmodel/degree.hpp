#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confmodel/random.hpp"
#include "confmodel/rational.hpp"

namespace confmodel {

/// Finite list of vertex degrees d(1..n).
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<std::size_t> degrees) : degrees_(std::move(degrees)) {}
  DegreeSequence(std::initializer_list<std::size_t> degrees) : degrees_(degrees) {}

  std::size_t size() const { return degrees_.size(); }
  bool empty() const { return degrees_.empty(); }
  std::size_t operator[](std::size_t i) const { return degrees_[i]; }
  const std::vector<std::size_t>& values() const { return degrees_; }
  auto begin() const { return degrees_.begin(); }
  auto end() const { return degrees_.end(); }

  std::size_t total() const;
  std::size_t max_degree() const;

  /// Concatenation d followed by other.
  DegreeSequence concat(const DegreeSequence& other) const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<std::size_t> degrees_;
};

/// Probability measure on the naturals with finite support.
///
/// Distributions built from counts (empirical measures, mixtures of them)
/// also keep exact rational weights, which wasserstein_exact uses.
class DegreeDistribution {
 public:
  /// Validates nonnegativity and sum == 1 within 1e-12.
  static DegreeDistribution from_probabilities(const std::map<std::size_t, double>& probs);
  static DegreeDistribution from_rationals(const std::map<std::size_t, Rational>& probs);
  static DegreeDistribution point_mass(std::size_t k);

  /// JSON object {"degree": probability}; rejects negatives and sums outside 1 +- 1e-9.
  static DegreeDistribution parse_json(const std::string& text);
  std::string to_json() const;

  const std::map<std::size_t, double>& probabilities() const { return probs_; }
  const std::optional<std::map<std::size_t, Rational>>& exact() const { return exact_; }
  double probability(std::size_t k) const;
  std::size_t max_degree() const;
  double mean() const { return mean_; }

  /// theta * this + (1 - theta) * other. Exact when both are and theta == 1/2.
  DegreeDistribution mixture(const DegreeDistribution& other, double theta = 0.5) const;

 private:
  DegreeDistribution() = default;
  void finish();

  std::map<std::size_t, double> probs_;
  std::optional<std::map<std::size_t, Rational>> exact_;
  double mean_ = 0.0;
};

double mean(const DegreeDistribution& mu);

/// Sum over i >= 1 of |sum_{k >= i} (mu(k) - mu2(k))|.
double wasserstein(const DegreeDistribution& mu, const DegreeDistribution& mu2);

/// Same quantity in exact arithmetic; nullopt unless both carry rational weights.
std::optional<Rational> wasserstein_exact(const DegreeDistribution& mu, const DegreeDistribution& mu2);

DegreeDistribution empirical(const DegreeSequence& d);

/// L1 distance between ascending rearrangements.
std::uint64_t sorted_l1(const DegreeSequence& d, const DegreeSequence& d2);

DegreeSequence sample_iid(const DegreeDistribution& mu, std::size_t n, RandomStream& rng);

}  // namespace confmodel
