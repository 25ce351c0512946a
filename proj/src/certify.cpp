#include "confmodel/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "confmodel/graph_io.hpp"

namespace confmodel {

IncrementMatrix increment_matrix(const GraphParameter& f, const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  const double base = f(g);
  IncrementMatrix delta(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double d = f(g.with_edge(i, j)) - base;
      delta(i, j) = d;
      delta(j, i) = d;
    }
  }
  return delta;
}

double cnd_max_eigenvalue(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_cnd: matrix must be square");
  const auto n = m.rows();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw std::invalid_argument("is_cnd: matrix not symmetric");
  if (n <= 1) return 0.0;
  const Eigen::MatrixXd p =
      Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  const Eigen::MatrixXd form = p * m * p;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (form + form.transpose()), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

bool is_cnd(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_cnd: matrix must be square");
  if (m.rows() == 0) return true;
  return cnd_max_eigenvalue(m) <= tol;
}

Multigraph random_multigraph(std::size_t nmax, std::size_t max_edges, RandomStream& rng) {
  if (nmax == 0) throw std::invalid_argument("random_multigraph: nmax must be positive");
  const std::size_t n = 1 + rng.below(nmax);
  const std::size_t m = rng.below(max_edges + 1);
  Multigraph g(n);
  for (std::size_t e = 0; e < m; ++e) g.add_edge(rng.below(n), rng.below(n));
  return g;
}

bool CertificationReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed; });
}

const PropertyResult& CertificationReport::property(const std::string& name) const {
  for (const auto& p : properties)
    if (p.property == name) return p;
  throw std::out_of_range("no property " + name);
}

nlohmann::json CertificationReport::to_json() const {
  nlohmann::json j;
  j["parameter"] = parameter;
  j["kappa"] = kappa;
  j["samples"] = samples;
  j["seed"] = seed;
  j["passed"] = passed();
  j["properties"] = nlohmann::json::array();
  for (const auto& p : properties) {
    nlohmann::json e;
    e["property"] = p.property;
    e["passed"] = p.passed;
    e["checked"] = p.checked;
    e["detail"] = p.detail;
    e["counterexample"] = p.counterexample ? nlohmann::json(format_graph(*p.counterexample)) : nlohmann::json();
    j["properties"].push_back(std::move(e));
  }
  return j;
}

namespace {

struct SampleOutcome {
  // One entry per property; empty detail means the check passed.
  std::string additive, lipschitz, concave, isomorphism;
  Multigraph additive_graph, local_graph;
};

std::string fmt_double(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

SampleOutcome check_sample(const GraphParameter& f, const CertifyOptions& opt, RandomStream rng) {
  SampleOutcome out;
  const Multigraph g1 = random_multigraph(opt.nmax, opt.max_edges, rng);
  const Multigraph g2 = random_multigraph(opt.nmax, opt.max_edges, rng);
  out.local_graph = g1;
  out.additive_graph = g1.disjoint_union(g2);

  const double f1 = f(g1), f2 = f(g2), fu = f(out.additive_graph);
  if (std::abs(fu - (f1 + f2)) > opt.value_tol)
    out.additive = "f(G1+G2) = " + fmt_double(fu) + " but f(G1) + f(G2) = " + fmt_double(f1 + f2);

  const IncrementMatrix delta = increment_matrix(f, g1);
  const double worst = delta.size() == 0 ? 0.0 : delta.cwiseAbs().maxCoeff();
  if (worst > f.kappa() + opt.value_tol)
    out.lipschitz = "max |Delta| = " + fmt_double(worst) + " exceeds kappa = " + fmt_double(f.kappa());

  const double top = cnd_max_eigenvalue(delta);
  if (top > opt.cnd_tol) out.concave = "largest eigenvalue on sum-zero space = " + fmt_double(top);

  std::vector<std::size_t> perm(g1.vertex_count());
  for (std::size_t p = 0; p < opt.permutations_per_sample && out.isomorphism.empty(); ++p) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    const double fp = f(g1.relabeled(perm));
    if (std::abs(fp - f1) > opt.value_tol)
      out.isomorphism = "relabelled value " + fmt_double(fp) + " differs from " + fmt_double(f1);
  }
  return out;
}

}  // namespace

CertificationReport certify_parameter(const GraphParameter& f, const CertifyOptions& options,
                                      const RandomStream& rng) {
  auto outcomes = kernels::parallel_map(options.samples, options.workers, [&](std::size_t i) {
    return check_sample(f, options, rng.substream(i));
  });

  CertificationReport report;
  report.parameter = f.name();
  report.kappa = f.kappa();
  report.samples = options.samples;
  report.seed = rng.seed();
  for (const char* name : {"additive", "lipschitz", "concave", "isomorphism"}) {
    PropertyResult prop;
    prop.property = name;
    report.properties.push_back(std::move(prop));
  }

  auto record = [&](PropertyResult& prop, const std::string& failure, const Multigraph& g, std::size_t index) {
    ++prop.checked;
    if (failure.empty() || !prop.passed) return;
    prop.passed = false;
    prop.counterexample = g;
    prop.detail = "sample " + std::to_string(index) + ": " + failure;
  };
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    record(report.properties[0], o.additive, o.additive_graph, i);
    record(report.properties[1], o.lipschitz, o.local_graph, i);
    record(report.properties[2], o.concave, o.local_graph, i);
    record(report.properties[3], o.isomorphism, o.local_graph, i);
  }
  return report;
}

}  // namespace confmodel
