#include "confmodel/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "confmodel/config_model.hpp"
#include "confmodel/interpolation.hpp"
#include "confmodel/kernels.hpp"

namespace confmodel {

DegreeSequence fixed_degree_sequence(const DegreeDistribution& mu, std::size_t n) {
  if (n == 0) throw std::invalid_argument("fixed_degree_sequence: n must be at least 1");
  struct Share {
    std::size_t degree;
    std::size_t count;
    double remainder;
  };
  std::vector<Share> shares;
  std::size_t assigned = 0;
  for (auto [k, p] : mu.probabilities()) {
    const double target = p * static_cast<double>(n);
    const auto base = static_cast<std::size_t>(std::floor(target));
    shares.push_back({k, base, target - static_cast<double>(base)});
    assigned += base;
  }
  std::vector<std::size_t> order(shares.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return shares[a].remainder > shares[b].remainder; });
  for (std::size_t i = 0; assigned < n; i = (i + 1) % order.size(), ++assigned) ++shares[order[i]].count;
  // Floating rounding can overshoot by one when remainders are ~1.
  while (assigned > n) {
    auto& s = *std::max_element(shares.begin(), shares.end(),
                                [](const Share& a, const Share& b) { return a.count < b.count; });
    --s.count;
    --assigned;
  }
  std::vector<std::size_t> d;
  d.reserve(n);
  for (const auto& s : shares) d.insert(d.end(), s.count, s.degree);
  std::sort(d.begin(), d.end());
  std::size_t total = std::accumulate(d.begin(), d.end(), std::size_t{0});
  if (total % 2 == 1) --d.back();
  return DegreeSequence(std::move(d));
}

namespace {

template <class Generator>
McEstimate per_vertex_mean(const GraphParameter& f, Generator&& degrees_for, std::size_t n, std::size_t reps,
                           const RandomStream& rng, int workers) {
  const GraphParameter additive = by_components(f);
  auto values = kernels::parallel_map(reps, workers, [&](std::size_t r) {
    RandomStream stream = rng.substream(r);
    const DegreeSequence d = degrees_for(stream);
    return additive(sample_uniform_graph(d, stream)) / static_cast<double>(n);
  });
  return summarize(values);
}

template <class Generator>
McEstimate total_mean(const GraphParameter& f, Generator&& degrees_for, std::size_t reps, const RandomStream& rng,
                      int workers) {
  return per_vertex_mean(f, degrees_for, 1, reps, rng, workers);
}

void require_within_limit(const GraphParameter& f, std::size_t max_degree, const std::vector<std::size_t>& sizes) {
  const auto limit = by_components(f).size_limit(max_degree);
  if (!limit) return;
  std::vector<std::size_t> bad;
  for (auto n : sizes)
    if (n > *limit) bad.push_back(n);
  if (bad.empty()) return;
  std::ostringstream msg;
  msg << "n = ";
  for (std::size_t i = 0; i < bad.size(); ++i) msg << (i ? ", " : "") << bad[i];
  msg << " exceeds the exact-solver limit " << *limit << " for " << f.name() << " at maximum degree " << max_degree;
  throw std::domain_error(msg.str());
}

auto degree_generator(const DegreeDistribution& mu, std::size_t n, DegreeMode mode) {
  std::optional<DegreeSequence> fixed;
  if (mode == DegreeMode::fixed) fixed = fixed_degree_sequence(mu, n);
  return [mu, n, fixed](RandomStream& stream) { return fixed ? *fixed : sample_iid(mu, n, stream); };
}

double combined(double a, double b) { return std::sqrt(a * a + b * b); }

InequalityReport report(std::string check, double lhs, double rhs, double allowance, std::uint64_t seed,
                        std::string detail) {
  InequalityReport r;
  r.check = std::move(check);
  r.lhs = lhs;
  r.rhs = rhs;
  r.allowance = allowance;
  r.verdict = lhs <= rhs + allowance;
  r.seed = seed;
  r.detail = std::move(detail);
  return r;
}

void require_reps(std::size_t reps) {
  if (reps == 0) throw std::invalid_argument("reps must be at least 1");
}

}  // namespace

PsiEstimate estimate_psi(const GraphParameter& f, const DegreeDistribution& mu, std::vector<std::size_t> n_list,
                         std::size_t reps, const RandomStream& rng, const LimitOptions& options) {
  require_reps(reps);
  if (n_list.empty()) throw std::invalid_argument("estimate_psi: empty size list");
  std::sort(n_list.begin(), n_list.end());
  if (n_list.front() == 0) throw std::invalid_argument("estimate_psi: n must be at least 1");
  require_within_limit(f, mu.max_degree(), n_list);

  PsiEstimate est;
  est.parameter = f.name();
  est.mu = mu;
  est.seed = rng.seed();
  for (std::size_t row = 0; row < n_list.size(); ++row) {
    const std::size_t n = n_list[row];
    const McEstimate m =
        per_vertex_mean(f, degree_generator(mu, n, options.mode), n, reps, rng.substream(n), options.workers);
    est.rows.push_back({n, reps, m.mean, m.std_error});
  }
  est.psi_hat = est.rows.back().mean;
  est.psi_std_error = est.rows.back().std_error;
  return est;
}

std::vector<InequalityReport> check_superadditivity(const GraphParameter& f, const DegreeDistribution& mu,
                                                    const std::vector<std::pair<std::size_t, std::size_t>>& n_pairs,
                                                    std::size_t reps, const RandomStream& rng, int workers) {
  require_reps(reps);
  std::vector<InequalityReport> out;
  for (std::size_t p = 0; p < n_pairs.size(); ++p) {
    const auto [n1, n2] = n_pairs[p];
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("check_superadditivity: sizes must be positive");
    require_within_limit(f, mu.max_degree(), {n1, n2, n1 + n2});
    const RandomStream base = rng.substream(p);
    const McEstimate e1 = total_mean(f, degree_generator(mu, n1, DegreeMode::iid), reps, base.substream(0), workers);
    const McEstimate e2 = total_mean(f, degree_generator(mu, n2, DegreeMode::iid), reps, base.substream(1), workers);
    const McEstimate e12 =
        total_mean(f, degree_generator(mu, n1 + n2, DegreeMode::iid), reps, base.substream(2), workers);
    const double slack = phi(mu.mean() / 2.0 * static_cast<double>(n1 + n2), f.kappa());
    const double se = std::sqrt(e1.std_error * e1.std_error + e2.std_error * e2.std_error +
                                e12.std_error * e12.std_error);
    out.push_back(report("superadditivity", e1.mean + e2.mean, e12.mean + slack, kStderrAllowance * se, rng.seed(),
                         "n1=" + std::to_string(n1) + ";n2=" + std::to_string(n2)));
  }
  return out;
}

InequalityReport check_lipschitz_psi(const GraphParameter& f, const DegreeDistribution& mu,
                                     const DegreeDistribution& mu2, std::size_t n, std::size_t reps,
                                     const RandomStream& rng, const LimitOptions& options,
                                     double finite_n_allowance) {
  const PsiEstimate a = estimate_psi(f, mu, {n}, reps, rng.substream(1), options);
  const PsiEstimate b = estimate_psi(f, mu2, {n}, reps, rng.substream(2), options);
  const double w = wasserstein(mu, mu2);
  return report("lipschitz-psi", std::abs(a.psi_hat - b.psi_hat), 2.0 * f.kappa() * w,
                kStderrAllowance * combined(a.psi_std_error, b.psi_std_error) + finite_n_allowance, rng.seed(),
                "n=" + std::to_string(n) + ";W=" + std::to_string(w) +
                    ";finite_n_allowance=" + std::to_string(finite_n_allowance));
}

InequalityReport check_midpoint_concavity(const GraphParameter& f, const DegreeDistribution& mu,
                                          const DegreeDistribution& mu2, std::size_t n, std::size_t reps,
                                          const RandomStream& rng, const LimitOptions& options) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("check_midpoint_concavity: n must be even");
  const DegreeDistribution mix = mu.mixture(mu2, 0.5);
  const PsiEstimate a = estimate_psi(f, mu, {n}, reps, rng.substream(1), options);
  const PsiEstimate b = estimate_psi(f, mu2, {n}, reps, rng.substream(2), options);
  require_within_limit(f, mix.max_degree(), {n});

  McEstimate m;
  if (options.mode == DegreeMode::fixed) {
    const DegreeSequence half = fixed_degree_sequence(mu, n / 2).concat(fixed_degree_sequence(mu2, n / 2));
    m = per_vertex_mean(f, [&](RandomStream&) { return half; }, n, reps, rng.substream(3), options.workers);
  } else {
    m = per_vertex_mean(f, degree_generator(mix, n, DegreeMode::iid), n, reps, rng.substream(3), options.workers);
  }
  const double se = std::sqrt(m.std_error * m.std_error +
                              0.25 * (a.psi_std_error * a.psi_std_error + b.psi_std_error * b.psi_std_error));
  return report("midpoint-concavity", 0.5 * (a.psi_hat + b.psi_hat), m.mean, kStderrAllowance * se, rng.seed(),
                "n=" + std::to_string(n));
}

double azuma_bound(double eps, double kappa, std::size_t total_degree) {
  if (total_degree == 0 || kappa == 0.0) return eps > 0.0 ? 0.0 : 1.0;
  return std::exp(-eps * eps / (4.0 * kappa * kappa * static_cast<double>(total_degree)));
}

bool ConcentrationReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.verdict; });
}

ConcentrationReport check_concentration(const GraphParameter& f, const DegreeSequence& d, std::size_t reps,
                                        const std::vector<double>& eps_grid, const RandomStream& rng, int workers) {
  require_reps(reps);
  if (d.empty()) throw std::invalid_argument("empty degree sequence");
  require_within_limit(f, d.max_degree(), {d.size()});
  const GraphParameter additive = by_components(f);
  const auto values = kernels::parallel_map(reps, workers, [&](std::size_t r) {
    RandomStream stream = rng.substream(r);
    return additive(sample_uniform_graph(d, stream));
  });
  ConcentrationReport rep;
  rep.d = d;
  rep.reps = reps;
  rep.seed = rng.seed();
  rep.mean = summarize(values).mean;
  for (double eps : eps_grid) {
    if (!(eps >= 0.0)) throw std::invalid_argument("concentration: eps must be nonnegative");
    std::size_t hits = 0;
    for (double v : values) hits += std::abs(v - rep.mean) >= eps;
    ConcentrationRow row;
    row.eps = eps;
    row.frequency = static_cast<double>(hits) / static_cast<double>(reps);
    row.bound = azuma_bound(eps, f.kappa(), d.total());
    row.sigma = binomial_sigma(row.bound, reps);
    row.verdict = row.frequency <= row.bound + 3.0 * row.sigma;
    rep.rows.push_back(row);
  }
  return rep;
}

InequalityReport compare_expectations(const GraphParameter& f, const DegreeSequence& d, const DegreeSequence& d2,
                                      std::size_t reps, const RandomStream& rng, int workers) {
  require_reps(reps);
  if (d.size() != d2.size()) throw std::invalid_argument("length mismatch");
  if (d.empty()) throw std::invalid_argument("empty degree sequence");
  require_within_limit(f, std::max(d.max_degree(), d2.max_degree()), {d.size()});
  const std::size_t n = d.size();
  const McEstimate a = per_vertex_mean(f, [&](RandomStream&) { return d; }, n, reps, rng.substream(1), workers);
  const McEstimate b = per_vertex_mean(f, [&](RandomStream&) { return d2; }, n, reps, rng.substream(2), workers);
  const double w = wasserstein(empirical(d), empirical(d2));
  return report("compare", std::abs(a.mean - b.mean), 2.0 * f.kappa() * w,
                kStderrAllowance * combined(a.std_error, b.std_error), rng.seed(),
                "n=" + std::to_string(n) + ";W=" + std::to_string(w));
}

}  // namespace confmodel
