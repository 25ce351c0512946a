#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "confmodel/kernels.hpp"
#include "confmodel/multigraph.hpp"

namespace confmodel {

/// Solver size limits.
inline constexpr std::size_t kBranchAndBoundLimit = 40;
inline constexpr std::size_t kBranchAndBoundMax = 64;  // bitmask width
inline constexpr std::size_t kBruteForceLimit = 20;
inline constexpr std::size_t kMaxCutLimit = 24;
inline constexpr std::uint64_t kSpinStateBudget = std::uint64_t{1} << 24;

/// Spin system with vertex weights h(s) > 0 and symmetric interactions J(s,t) > 0.
class SpinModel {
 public:
  SpinModel(std::vector<double> h, std::vector<std::vector<double>> j);

  std::size_t q() const { return h_.size(); }
  double h(std::size_t s) const { return h_[s]; }
  double j(std::size_t s, std::size_t t) const { return j_[s * q() + t]; }
  /// q x q interaction matrix, row-major.
  const std::vector<double>& interactions() const { return j_; }
  /// max |log J(s,t)|.
  double lipschitz_constant() const;
  const kernels::LogWeights& log_weights() const { return log_; }

 private:
  std::vector<double> h_;
  std::vector<double> j_;
  kernels::LogWeights log_;
};

/// Ising: q = 2, h = 1, J(s,t) = exp(-beta s t) for s,t in {-1,+1}.
SpinModel ising_model(double beta);
/// Potts: h = 1, J(s,t) = 1 if s != t, exp(-beta) if s == t.
SpinModel potts_model(std::size_t q, double beta);

std::size_t num_components(const Multigraph& g);
/// Exact independence number. Graphs of maximum degree <= 2 use the path/cycle
/// closed form at any size; otherwise branch-and-bound up to `limit` vertices (at most kBranchAndBoundMax).
std::size_t independence_number(const Multigraph& g, std::size_t limit = kBranchAndBoundLimit);
/// Vertices (0-based, ascending) common to all maximum independent sets; n <= kBruteForceLimit.
std::vector<std::size_t> mis_core(const Multigraph& g);
/// Exact maximum cut; closed form for maximum degree <= 2, else enumeration up to kMaxCutLimit vertices.
std::size_t max_cut(const Multigraph& g);
/// log of the partition function; throws when q^n exceeds kSpinStateBudget.
double log_partition(const Multigraph& g, const SpinModel& model);

/// Named graph parameter with a declared Lipschitz constant.
class GraphParameter {
 public:
  using Evaluator = std::function<double(const Multigraph&)>;
  /// Largest vertex count the evaluator accepts for graphs of the given maximum
  /// degree; nullopt when unbounded.
  using SizeLimit = std::function<std::optional<std::size_t>(std::size_t max_degree)>;

  GraphParameter(std::string name, double kappa, Evaluator evaluate, bool integer_valued = false,
                 SizeLimit size_limit = {});

  const std::string& name() const { return name_; }
  double kappa() const { return kappa_; }
  /// Values are integers, so expectations over finite ensembles are exact rationals.
  bool integer_valued() const { return integer_valued_; }
  std::optional<std::size_t> size_limit(std::size_t max_degree) const {
    return size_limit_ ? size_limit_(max_degree) : std::nullopt;
  }

  double operator()(const Multigraph& g) const { return evaluate_(g); }
  double evaluate(const Multigraph& g) const { return evaluate_(g); }

 private:
  std::string name_;
  double kappa_;
  Evaluator evaluate_;
  bool integer_valued_;
  SizeLimit size_limit_;
};

GraphParameter independence_parameter(std::size_t limit = kBranchAndBoundLimit);
GraphParameter max_cut_parameter();
/// f = -num_components (the concave member of the class).
GraphParameter neg_components_parameter();
/// f = +num_components; not concave, kept as a negative control.
GraphParameter components_parameter();
GraphParameter log_partition_parameter(SpinModel model, std::string name);
GraphParameter ising_parameter(double beta);
GraphParameter potts_parameter(std::size_t q, double beta);

/// f(G) = sum of f over connected components. Valid for additive f; lets whole-graph
/// solvers run on large graphs whose components are small.
GraphParameter by_components(const GraphParameter& f);

/// Parameter lookup by CLI name: independence, maxcut, components, neg-components, ising, potts.
GraphParameter parameter_by_name(const std::string& name, double beta = 1.0, std::size_t q = 3);

}  // namespace confmodel
