#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "confmodel/degree.hpp"
#include "confmodel/parameters.hpp"
#include "confmodel/random.hpp"
#include "confmodel/stats.hpp"

namespace confmodel {

enum class DegreeMode {
  fixed,  // deterministic sequence realizing mu by largest-remainder rounding
  iid,    // fresh IID degrees per replication
};

/// n degrees with counts round(n mu(k)) by largest remainder; if the total is
/// odd, the largest degree is lowered by one.
DegreeSequence fixed_degree_sequence(const DegreeDistribution& mu, std::size_t n);

struct PsiRow {
  std::size_t n = 0;
  std::size_t reps = 0;
  double mean = 0.0;    // of f(G) / n
  double std_error = 0.0;
};

struct PsiEstimate {
  std::string parameter;
  DegreeDistribution mu = DegreeDistribution::point_mass(0);
  std::vector<PsiRow> rows;  // ascending n
  double psi_hat = 0.0;      // largest-n mean
  double psi_std_error = 0.0;
  std::uint64_t seed = 0;
};

struct LimitOptions {
  DegreeMode mode = DegreeMode::fixed;
  int workers = default_workers();
};

/// Monte Carlo table of E f(G)/n. Evaluation is component-wise (f is additive).
/// Throws std::domain_error listing every n above the parameter's exact-solver limit.
PsiEstimate estimate_psi(const GraphParameter& f, const DegreeDistribution& mu, std::vector<std::size_t> n_list,
                         std::size_t reps, const RandomStream& rng, const LimitOptions& options = {});

/// Verdict record for a sampled inequality lhs <= rhs + allowance.
struct InequalityReport {
  std::string check;
  double lhs = 0.0;
  double rhs = 0.0;
  double allowance = 0.0;
  bool verdict = true;
  std::uint64_t seed = 0;
  std::string detail;
};

/// E f(G^iid_{n1}) + E f(G^iid_{n2}) <= E f(G^iid_{n1+n2}) + phi(mean(mu) (n1 + n2) / 2).
std::vector<InequalityReport> check_superadditivity(const GraphParameter& f, const DegreeDistribution& mu,
                                                    const std::vector<std::pair<std::size_t, std::size_t>>& n_pairs,
                                                    std::size_t reps, const RandomStream& rng,
                                                    int workers = default_workers());

/// |Psi(mu) - Psi(mu2)| <= 2 kappa W(mu, mu2) + 4 combined stderr + finite_n_allowance.
InequalityReport check_lipschitz_psi(const GraphParameter& f, const DegreeDistribution& mu,
                                     const DegreeDistribution& mu2, std::size_t n, std::size_t reps,
                                     const RandomStream& rng, const LimitOptions& options = {},
                                     double finite_n_allowance = 0.0);

/// (Psi(mu) + Psi(mu2)) / 2 <= Psi((mu + mu2) / 2) + 4 combined stderr. The mixture
/// sequence in fixed mode concatenates the n/2 fixed sequences of mu and mu2.
InequalityReport check_midpoint_concavity(const GraphParameter& f, const DegreeDistribution& mu,
                                          const DegreeDistribution& mu2, std::size_t n, std::size_t reps,
                                          const RandomStream& rng, const LimitOptions& options = {});

/// exp(-eps^2 / (4 kappa^2 total_degree)).
double azuma_bound(double eps, double kappa, std::size_t total_degree);

struct ConcentrationRow {
  double eps = 0.0;
  double frequency = 0.0;
  double bound = 0.0;
  double sigma = 0.0;
  bool verdict = true;  // frequency <= bound + 3 sigma
};

struct ConcentrationReport {
  DegreeSequence d;
  std::size_t reps = 0;
  double mean = 0.0;
  std::vector<ConcentrationRow> rows;
  std::uint64_t seed = 0;

  bool passed() const;
};

ConcentrationReport check_concentration(const GraphParameter& f, const DegreeSequence& d, std::size_t reps,
                                        const std::vector<double>& eps_grid, const RandomStream& rng,
                                        int workers = default_workers());

/// |E f(G_d)/n - E f(G_d2)/n| <= 2 kappa W(emp(d), emp(d2)) + 4 combined stderr.
InequalityReport compare_expectations(const GraphParameter& f, const DegreeSequence& d, const DegreeSequence& d2,
                                      std::size_t reps, const RandomStream& rng, int workers = default_workers());

}  // namespace confmodel
