// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "confmodel/certify.hpp"
#include "confmodel/config_model.hpp"
#include "confmodel/degree.hpp"
#include "confmodel/interpolation.hpp"
#include "confmodel/limits.hpp"
#include "confmodel/parameters.hpp"

using namespace confmodel;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string fmt(double x, int precision = 6) {
  std::ostringstream out;
  out.precision(precision);
  out << x;
  return out.str();
}

/// Degree functions on 1..max_vertices vertices with total <= max_total.
std::vector<DegreeSequence> degree_functions(std::size_t max_vertices, std::size_t max_total) {
  std::vector<DegreeSequence> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (!cur.empty()) out.emplace_back(cur);
    if (cur.size() == max_vertices) return;
    for (std::size_t k = 0; k <= left; ++k) {
      cur.push_back(k);
      rec(left - k);
      cur.pop_back();
    }
  };
  rec(max_total);
  return out;
}

Outcome sweep() {
  SweepOptions opts;
  opts.max_total_degree = 8;
  opts.max_vertices = 4;
  Outcome o;
  for (const auto& f : {independence_parameter(), max_cut_parameter(), neg_components_parameter()}) {
    const auto r = interpolation_sweep(f, opts);
    std::size_t checked = 0;
    for (const auto& [name, t] : r.tallies) checked += t.checked;
    o.passed = o.passed && r.violations() == 0 && r.tallies.at("local").checked > 0;
    o.detail += f.name() + ": " + std::to_string(r.instances) + " instances, " + std::to_string(checked) +
                " checks, " + std::to_string(r.violations()) + " violations; ";
  }
  return o;
}

Outcome pairing_uniformity() {
  std::size_t instances = 0, classes = 0, bad = 0;
  for (const auto& d : degree_functions(4, 8)) {
    HalfEdgeSystem sys(d);
    const std::size_t n = d.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<bool> in_a(n);
      for (std::size_t v = 0; v < n; ++v) in_a[v] = (mask >> v) & 1;
      Bipartition bp(in_a);
      const std::size_t da = bp.degree_a(d), db = bp.degree_b(d);
      ++instances;
      for (std::size_t a = 0; 2 * a <= da; ++a)
        for (std::size_t b = 0; 2 * b <= db; ++b)
          for (std::size_t g = 0; 2 * a + g <= da && 2 * b + g <= db; ++g) {
            const auto tally = count_histories(sys, bp, default_order({a, b, g}));
            const auto target = enumerate_class(sys, bp, {a, b, g});
            ++classes;
            if (!tally.uniform() || tally.arrivals.size() != target.size()) ++bad;
          }
    }
  }
  return {bad == 0, std::to_string(instances) + " instances, " + std::to_string(classes) + " classes, " +
                        std::to_string(bad) + " non-uniform"};
}

Outcome constant() {
  const double c47 = c_constant(47);
  bool ok = c47 >= 6.58 && c47 <= 6.60 && c47 < 7.0;
  double worst = 0.0;
  for (std::size_t g = 47; g <= 10000; ++g) worst = std::max(worst, c_constant(g));
  ok = ok && worst < 7.0;
  return {ok, "c(47) = " + fmt(c47) + ", max over 47..10^4 = " + fmt(worst)};
}

Outcome small_gamma() {
  std::size_t holds = 0;
  double min_slack = 1e300;
  for (std::size_t g = 1; g <= 46; ++g) {
    const double lhs = 1.0 * (2.0 * static_cast<double>(g) + 1.0);
    const double rhs = phi(static_cast<double>(g), 1.0);
    if (lhs <= rhs) ++holds;
    min_slack = std::min(min_slack, rhs - lhs);
  }
  return {holds == 46, std::to_string(holds) + "/46 hold, min slack " + fmt(min_slack)};
}

Outcome certification() {
  CertifyOptions opts;
  opts.samples = 200;
  opts.nmax = 6;
  opts.max_edges = 8;
  const RandomStream rng(5);
  std::vector<GraphParameter> params{independence_parameter(), max_cut_parameter(), neg_components_parameter(),
                                     ising_parameter(0.0),     ising_parameter(0.5), ising_parameter(2.0),
                                     potts_parameter(3, 1.0)};
  Outcome o;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto r = certify_parameter(params[i], opts, rng.substream(i));
    o.passed = o.passed && r.passed();
    o.detail += params[i].name() + (r.passed() ? " ok; " : " FAILED; ");
  }
  const auto control = certify_parameter(components_parameter(), opts, rng.substream(params.size()));
  const bool control_ok = !control.property("concave").passed && control.property("additive").passed &&
                          control.property("lipschitz").passed;
  o.passed = o.passed && control_ok;
  o.detail += std::string("+components concavity ") + (control.property("concave").passed ? "passed" : "fails");
  return o;
}

Outcome limit_values() {
  const RandomStream rng(6);
  const auto d1 = DegreeDistribution::point_mass(1), d2 = DegreeDistribution::point_mass(2);
  const auto ind1 = estimate_psi(independence_parameter(), d1, {2000}, 50, rng.substream(0));
  const auto ind2 = estimate_psi(independence_parameter(), d2, {2000}, 50, rng.substream(1));
  const auto cut2 = estimate_psi(max_cut_parameter(), d2, {2000}, 50, rng.substream(2));
  const double target = 0.5 * std::log(2 * std::exp(1.0) + 2 * std::exp(-1.0));
  double worst = 0.0;
  const GraphParameter ising = by_components(ising_parameter(1.0));
  RandomStream draws = rng.substream(3);
  for (int r = 0; r < 50; ++r) {
    const std::vector<std::size_t> ones(2000, 1);
    const double per_vertex = ising(sample_uniform_graph(DegreeSequence(ones), draws)) / 2000.0;
    worst = std::max(worst, std::abs(per_vertex - target));
  }
  const bool ok = ind1.psi_hat == 0.5 && ind1.psi_std_error == 0.0 && ind2.psi_hat >= 0.49 && ind2.psi_hat <= 0.50 &&
                  cut2.psi_hat >= 0.99 && cut2.psi_hat <= 1.00 && worst <= 1e-9;
  return {ok, "indep(d1) = " + fmt(ind1.psi_hat) + " se " + fmt(ind1.psi_std_error) + ", indep(d2) = " +
                  fmt(ind2.psi_hat) + ", maxcut(d2) = " + fmt(cut2.psi_hat) + ", ising |err| max " + fmt(worst)};
}

Outcome sampled_inequalities() {
  const RandomStream rng(7);
  const auto d1 = DegreeDistribution::point_mass(1), d2 = DegreeDistribution::point_mass(2),
             d3 = DegreeDistribution::point_mass(3);
  std::vector<InequalityReport> reports;
  reports.push_back(check_lipschitz_psi(independence_parameter(), d1, d2, 500, 50, rng.substream(0)));
  reports.push_back(check_lipschitz_psi(neg_components_parameter(), d2, d3, 500, 50, rng.substream(1)));
  reports.push_back(check_lipschitz_psi(max_cut_parameter(), d2, d3, 24, 50, rng.substream(2)));
  RandomStream pairs = rng.substream(3);
  std::size_t compare_fail = 0;
  for (std::size_t t = 0; t < 100; ++t) {
    std::vector<std::size_t> a(100), b(100);
    for (auto& x : a) x = pairs.below(4);
    for (auto& x : b) x = pairs.below(4);
    const auto r = compare_expectations(neg_components_parameter(), DegreeSequence(a), DegreeSequence(b), 50,
                                        rng.substream(4, t));
    compare_fail += !r.verdict;
  }
  reports.push_back(check_midpoint_concavity(neg_components_parameter(), d1, d3, 1000, 50, rng.substream(5)));
  std::size_t failed = compare_fail;
  std::string detail;
  for (const auto& r : reports) {
    failed += !r.verdict;
    detail += r.check + " " + fmt(r.lhs, 4) + " <= " + fmt(r.rhs, 4) + " + " + fmt(r.allowance, 3) + "; ";
  }
  detail += "compare 100 pairs, " + std::to_string(compare_fail) + " failures";
  return {failed == 0, detail};
}

Outcome concentration() {
  const RandomStream rng(8);
  const std::vector<std::size_t> threes(200, 3);
  const auto rep =
      check_concentration(neg_components_parameter(), DegreeSequence(threes), 2000, {10, 20, 40, 80}, rng);
  const double spot = azuma_bound(40, 1, 600);
  const bool spot_ok = std::abs(spot - std::exp(-2.0 / 3.0)) <= 1e-15;
  std::string detail;
  for (const auto& r : rep.rows) detail += "eps " + fmt(r.eps) + ": " + fmt(r.frequency, 4) + " <= " + fmt(r.bound, 4) + "; ";
  detail += "bound(40, 600) = " + fmt(spot, 10);
  return {rep.passed() && spot_ok, detail};
}

Outcome doob() {
  const auto e = doob_experiment(200, 14, 100000, RandomStream(9));
  return {e.verdict, "P(T <= tau) = " + fmt(e.frequency, 5) + " vs bound " + fmt(e.bound, 5) + " + 3 sigma " +
                         fmt(3 * e.sigma, 3) + " (tau = " + std::to_string(e.horizon) + ")"};
}

Outcome wasserstein_identity() {
  RandomStream rng(10);
  std::size_t agree = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.below(200);
    std::vector<std::size_t> a(n), b(n);
    for (auto& x : a) x = rng.below(11);
    for (auto& x : b) x = rng.below(11);
    const DegreeSequence d(a), d2(b);
    const Rational lhs(static_cast<long long>(sorted_l1(d, d2)));
    const Rational rhs = *wasserstein_exact(empirical(d), empirical(d2)) * static_cast<long long>(n);
    agree += lhs == rhs;
  }
  return {agree == 1000, std::to_string(agree) + "/1000 exact matches"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exhaustive interpolation sweep", 300, sweep},
      {2, "pairing uniformity by history counting", 120, pairing_uniformity},
      {3, "constant c(gamma)", 60, constant},
      {4, "small-gamma branch", 60, small_gamma},
      {5, "class certification", 120, certification},
      {6, "limit values", 180, limit_values},
      {7, "sampled theorem-level inequalities", 300, sampled_inequalities},
      {8, "concentration", 120, concentration},
      {9, "Doob bound", 60, doob},
      {10, "sorted L1 equals n W", 10, wasserstein_identity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.time_limit_s;
    const bool ok = o.passed && in_time;
    failures += !ok;
    std::printf("[%s] %d: %s (%.2fs, limit %.0fs%s) %s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.time_limit_s, in_time ? "" : ", over time", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
