#include "confmodel/parameters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace confmodel {

SpinModel::SpinModel(std::vector<double> h, std::vector<std::vector<double>> j) : h_(std::move(h)) {
  const std::size_t q = h_.size();
  if (q == 0) throw std::invalid_argument("spin model needs at least one state");
  if (j.size() != q) throw std::invalid_argument("interaction matrix must be q x q");
  for (double x : h_)
    if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("vertex weights must be positive");
  j_.resize(q * q);
  for (std::size_t s = 0; s < q; ++s) {
    if (j[s].size() != q) throw std::invalid_argument("interaction matrix must be q x q");
    for (std::size_t t = 0; t < q; ++t) {
      if (!(j[s][t] > 0.0) || !std::isfinite(j[s][t])) throw std::invalid_argument("interactions must be positive");
      if (j[s][t] != j[t][s]) throw std::invalid_argument("interaction matrix must be symmetric");
      j_[s * q + t] = j[s][t];
    }
  }
  log_.q = q;
  for (double x : h_) log_.log_h.push_back(std::log(x));
  for (double x : j_) log_.log_j.push_back(std::log(x));
}

double SpinModel::lipschitz_constant() const {
  double k = 0.0;
  for (double x : log_.log_j) k = std::max(k, std::abs(x));
  return k;
}

SpinModel ising_model(double beta) {
  if (!(beta >= 0.0)) throw std::invalid_argument("ising_model: beta must be nonnegative");
  const double same = std::exp(-beta), diff = std::exp(beta);
  return SpinModel({1.0, 1.0}, {{same, diff}, {diff, same}});
}

SpinModel potts_model(std::size_t q, double beta) {
  if (q < 2) throw std::invalid_argument("potts_model: q must be at least 2");
  if (!(beta >= 0.0)) throw std::invalid_argument("potts_model: beta must be nonnegative");
  std::vector<std::vector<double>> j(q, std::vector<double>(q, 1.0));
  for (std::size_t s = 0; s < q; ++s) j[s][s] = std::exp(-beta);
  return SpinModel(std::vector<double>(q, 1.0), std::move(j));
}

std::size_t num_components(const Multigraph& g) {
  if (g.vertex_count() == 0) return 0;
  auto label = g.component_labels();
  return *std::max_element(label.begin(), label.end()) + 1;
}

namespace {

struct ComponentShape {
  std::size_t vertices = 0;
  std::size_t edges = 0;
};

// With maximum degree <= 2 every component is a path (edges = vertices - 1)
// or a cycle (edges = vertices), counting a loop as a 1-cycle and a double
// edge as a 2-cycle.
std::vector<ComponentShape> path_cycle_components(const Multigraph& g) {
  auto label = g.component_labels();
  std::size_t k = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<ComponentShape> shapes(k);
  for (auto l : label) ++shapes[l].vertices;
  for (auto [i, j] : g.edges()) ++shapes[label[i]].edges;
  return shapes;
}

std::size_t independence_low_degree(const Multigraph& g) {
  std::size_t total = 0;
  for (auto c : path_cycle_components(g)) total += c.edges == c.vertices ? c.vertices / 2 : (c.vertices + 1) / 2;
  return total;
}

std::size_t max_cut_low_degree(const Multigraph& g) {
  std::size_t total = 0;
  for (auto c : path_cycle_components(g)) {
    if (c.edges == c.vertices)
      total += c.vertices % 2 == 0 ? c.vertices : c.vertices - 1;
    else
      total += c.edges;
  }
  return total;
}

int kernel_workers() { return omp_in_parallel() ? 1 : default_workers(); }

}  // namespace

std::size_t independence_number(const Multigraph& g, std::size_t limit) {
  if (g.max_degree() <= 2) return independence_low_degree(g);
  if (g.vertex_count() > std::min(limit, kBranchAndBoundMax)) throw std::domain_error("instance too large for exact solver");
  return kernels::independent_set_branch_and_bound(g);
}

std::vector<std::size_t> mis_core(const Multigraph& g) {
  if (g.vertex_count() > kBruteForceLimit) throw std::domain_error("instance too large for exact solver");
  // v lies in every maximum independent set iff forbidding it (a loop at v) lowers alpha.
  const std::size_t alpha = kernels::independent_set_branch_and_bound(g);
  const auto loops = g.loop_vertices();
  std::vector<std::size_t> core;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (loops[v]) continue;
    if (kernels::independent_set_branch_and_bound(g.with_edge(v, v)) < alpha) core.push_back(v);
  }
  return core;
}

std::size_t max_cut(const Multigraph& g) {
  if (g.max_degree() <= 2) return max_cut_low_degree(g);
  if (g.vertex_count() > kMaxCutLimit) throw std::domain_error("instance too large for exact solver");
  return kernels::max_cut_parallel(g, kernel_workers());
}

double log_partition(const Multigraph& g, const SpinModel& model) {
  double states = std::pow(static_cast<double>(model.q()), static_cast<double>(g.vertex_count()));
  if (states > static_cast<double>(kSpinStateBudget))
    throw std::domain_error("spin enumeration budget exceeded (" + std::to_string(model.q()) + "^" +
                            std::to_string(g.vertex_count()) + " states)");
  return kernels::log_partition_parallel(g, model.log_weights(), kernel_workers());
}

GraphParameter::GraphParameter(std::string name, double kappa, Evaluator evaluate, bool integer_valued,
                               SizeLimit size_limit)
    : name_(std::move(name)),
      kappa_(kappa),
      evaluate_(std::move(evaluate)),
      integer_valued_(integer_valued),
      size_limit_(std::move(size_limit)) {
  if (!(kappa_ >= 0.0)) throw std::invalid_argument("Lipschitz constant must be nonnegative");
  if (!evaluate_) throw std::invalid_argument("graph parameter needs an evaluator");
}

GraphParameter independence_parameter(std::size_t limit) {
  limit = std::min(limit, kBranchAndBoundMax);
  return GraphParameter(
      "independence", 1.0, [limit](const Multigraph& g) { return static_cast<double>(independence_number(g, limit)); },
      true, [limit](std::size_t max_degree) -> std::optional<std::size_t> {
        if (max_degree <= 2) return std::nullopt;
        return limit;
      });
}

GraphParameter max_cut_parameter() {
  return GraphParameter(
      "maxcut", 1.0, [](const Multigraph& g) { return static_cast<double>(max_cut(g)); }, true,
      [](std::size_t max_degree) -> std::optional<std::size_t> {
        if (max_degree <= 2) return std::nullopt;
        return kMaxCutLimit;
      });
}

GraphParameter neg_components_parameter() {
  return GraphParameter(
      "neg-components", 1.0, [](const Multigraph& g) { return -static_cast<double>(num_components(g)); }, true);
}

GraphParameter components_parameter() {
  return GraphParameter(
      "components", 1.0, [](const Multigraph& g) { return static_cast<double>(num_components(g)); }, true);
}

GraphParameter log_partition_parameter(SpinModel model, std::string name) {
  const double kappa = model.lipschitz_constant();
  const std::size_t q = model.q();
  std::size_t limit = 0;
  for (std::uint64_t states = 1; states * q <= kSpinStateBudget; states *= q) ++limit;
  auto shared = std::make_shared<const SpinModel>(std::move(model));
  return GraphParameter(
      std::move(name), kappa, [shared](const Multigraph& g) { return log_partition(g, *shared); }, false,
      [limit](std::size_t) -> std::optional<std::size_t> { return limit; });
}

GraphParameter ising_parameter(double beta) { return log_partition_parameter(ising_model(beta), "ising"); }

GraphParameter potts_parameter(std::size_t q, double beta) {
  return log_partition_parameter(potts_model(q, beta), "potts");
}

GraphParameter by_components(const GraphParameter& f) {
  return GraphParameter(
      f.name(), f.kappa(),
      [f](const Multigraph& g) {
        double total = 0.0;
        for (const auto& c : g.components()) total += f(c);
        return total;
      },
      f.integer_valued(),
      [f](std::size_t max_degree) -> std::optional<std::size_t> {
        // Components of a graph with maximum degree <= 1 have at most two vertices.
        if (max_degree <= 1) return std::nullopt;
        return f.size_limit(max_degree);
      });
}

GraphParameter parameter_by_name(const std::string& name, double beta, std::size_t q) {
  if (name == "independence") return independence_parameter();
  if (name == "maxcut" || name == "max_cut") return max_cut_parameter();
  if (name == "neg-components") return neg_components_parameter();
  if (name == "components") return components_parameter();
  if (name == "ising") return ising_parameter(beta);
  if (name == "potts") return potts_parameter(q, beta);
  throw std::invalid_argument("unknown parameter '" + name + "'");
}

}  // namespace confmodel
