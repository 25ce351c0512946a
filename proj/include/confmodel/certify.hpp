#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "confmodel/multigraph.hpp"
#include "confmodel/parameters.hpp"
#include "confmodel/random.hpp"

namespace confmodel {

/// Delta[i][j] = f(G + ij) - f(G), diagonal entries are loop additions.
using IncrementMatrix = Eigen::MatrixXd;

IncrementMatrix increment_matrix(const GraphParameter& f, const Multigraph& g);

/// Largest eigenvalue of P M P with P = I - 11^T / n (the form on sum-zero vectors).
double cnd_max_eigenvalue(const Eigen::MatrixXd& m);

/// True iff x^T M x <= tol for all x with sum(x) = 0 (up to the eigenvalue tolerance).
/// Throws for non-square input or asymmetry beyond 1e-12.
bool is_cnd(const Eigen::MatrixXd& m, double tol = 1e-8);

/// Random multigraph: n uniform in [1, nmax], edge count uniform in [0, max_edges],
/// endpoints uniform (loops and repeats allowed).
Multigraph random_multigraph(std::size_t nmax, std::size_t max_edges, RandomStream& rng);

struct PropertyResult {
  std::string property;
  bool passed = true;
  std::size_t checked = 0;
  std::optional<Multigraph> counterexample;
  std::string detail;
};

struct CertificationReport {
  std::string parameter;
  double kappa = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;  // additive, lipschitz, concave, isomorphism

  bool passed() const;
  const PropertyResult& property(const std::string& name) const;
  nlohmann::json to_json() const;
};

struct CertifyOptions {
  std::size_t samples = 200;
  std::size_t nmax = 6;
  std::size_t max_edges = 12;             // default 2 * nmax
  std::size_t permutations_per_sample = 3;
  double value_tol = 1e-9;
  double cnd_tol = 1e-8;
  int workers = default_workers();
};

/// Samples random multigraphs and checks additivity on disjoint unions,
/// |Delta| <= kappa, CND increments and relabelling invariance.
/// Sample i uses rng.substream(i); the report does not depend on workers.
CertificationReport certify_parameter(const GraphParameter& f, const CertifyOptions& options,
                                      const RandomStream& rng);

}  // namespace confmodel
