#include "confmodel/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "confmodel/kernels.hpp"

namespace confmodel {

namespace {

std::string format_counts(const PairingCounts& c) {
  return "(" + std::to_string(c.alpha) + "," + std::to_string(c.beta) + "," + std::to_string(c.gamma) + ")";
}

// Expectation of f over a list of matchings; exact for integer-valued f.
Expectation average(const GraphParameter& f, const HalfEdgeSystem& sys, const std::vector<Matching>& ms) {
  if (ms.empty()) throw std::domain_error("empty class");
  Expectation e;
  if (f.integer_valued()) {
    long long total = 0;
    for (const auto& m : ms) total += std::llround(f(graph_of_matching(sys, m)));
    e.exact = Rational(total, static_cast<long long>(ms.size()));
    e.value = to_double(*e.exact);
  } else {
    double total = 0.0;
    for (const auto& m : ms) total += f(graph_of_matching(sys, m));
    e.value = total / static_cast<double>(ms.size());
  }
  return e;
}

std::optional<Rational> exact_kappa(double kappa) {
  if (kappa == std::floor(kappa) && kappa < 1e9) return Rational(static_cast<long long>(kappa));
  return std::nullopt;
}

InequalityCheck finish(std::string check, std::string instance, std::string counts, double lhs, double rhs,
                       double allowance, std::optional<bool> exact_verdict = {}) {
  InequalityCheck r;
  r.check = std::move(check);
  r.instance = std::move(instance);
  r.counts = std::move(counts);
  r.lhs = lhs;
  r.rhs = rhs;
  r.allowance = allowance;
  r.slack = rhs + allowance - lhs;
  r.verdict = exact_verdict ? *exact_verdict : lhs <= rhs + allowance;
  return r;
}

std::size_t floor_half_diff(std::size_t total, std::size_t gamma) { return (total - gamma) / 2; }

}  // namespace

std::string InterpolationInstance::describe() const {
  std::ostringstream out;
  out << "d=(";
  const auto& d = sys.degrees();
  for (std::size_t v = 0; v < d.size(); ++v) out << (v ? "," : "") << d[v];
  out << ");A={";
  bool first = true;
  for (auto v : bp.a_vertices()) {
    out << (first ? "" : ",") << v + 1;
    first = false;
  }
  out << "}";
  return out.str();
}

InterpolationTable::InterpolationTable(InterpolationInstance inst) : inst_(std::move(inst)) {
  if (inst_.bp.vertex_count() != inst_.sys.vertex_count()) throw std::invalid_argument("bipartition size mismatch");
}

const Expectation& InterpolationTable::F(const PairingCounts& c) {
  auto it = memo_.find(c);
  if (it != memo_.end()) return it->second;
  if (!c.feasible(inst_.degree_a(), inst_.degree_b())) throw std::domain_error("empty class");
  return memo_.emplace(c, average(inst_.f, inst_.sys, enumerate_class(inst_.sys, inst_.bp, c))).first->second;
}

std::vector<PairingCounts> InterpolationTable::feasible_triples() const {
  const std::size_t da = inst_.degree_a(), db = inst_.degree_b();
  std::vector<PairingCounts> out;
  for (std::size_t a = 0; 2 * a <= da; ++a)
    for (std::size_t b = 0; 2 * b <= db; ++b)
      for (std::size_t g = 0; 2 * a + g <= da && 2 * b + g <= db; ++g) out.push_back({a, b, g});
  return out;
}

Expectation F_exact(const InterpolationInstance& inst, const PairingCounts& c) {
  if (!c.feasible(inst.degree_a(), inst.degree_b())) throw std::domain_error("empty class");
  return average(inst.f, inst.sys, enumerate_class(inst.sys, inst.bp, c));
}

McEstimate F_mc(const InterpolationInstance& inst, const PairingCounts& c, std::size_t reps, const RandomStream& rng,
                int workers) {
  if (reps == 0) throw std::invalid_argument("F_mc: reps must be at least 1");
  if (!c.feasible(inst.degree_a(), inst.degree_b()))
    throw std::invalid_argument("infeasible (α,β,γ) = " + format_counts(c));
  const auto order = default_order(c);
  auto values = kernels::parallel_map(reps, workers, [&](std::size_t r) {
    RandomStream stream = rng.substream(r);
    return inst.f(graph_of_matching(inst.sys, sample_in_class(inst.sys, inst.bp, order, stream)));
  });
  return summarize(values);
}

double phi(double x, double kappa) {
  if (!(x >= 0.0)) throw std::invalid_argument("phi: x must be nonnegative");
  return 7.0 * kappa * std::sqrt(x * std::log1p(x));
}

nlohmann::json InequalityCheck::to_json() const {
  return {{"check", check},  {"instance", instance},   {"counts", counts}, {"lhs", lhs},
          {"rhs", rhs},      {"allowance", allowance}, {"slack", slack},   {"verdict", verdict}};
}

InequalityCheck verify_F_lipschitz(InterpolationTable& table, const PairingCounts& c1, const PairingCounts& c2) {
  const auto& inst = table.instance();
  const Expectation f1 = table.F(c1);
  const Expectation f2 = table.F(c2);
  auto dist = [](std::size_t x, std::size_t y) { return static_cast<long long>(x > y ? x - y : y - x); };
  const long long l1 = dist(c1.alpha, c2.alpha) + dist(c1.beta, c2.beta) + dist(c1.gamma, c2.gamma);
  const double kappa = inst.f.kappa();
  std::optional<bool> exact;
  auto k = exact_kappa(kappa);
  if (f1.exact && f2.exact && k) exact = abs(*f1.exact - *f2.exact) <= *k * l1;
  return finish("lipschitz", inst.describe(), format_counts(c1) + "|" + format_counts(c2),
                std::abs(f1.value - f2.value), kappa * static_cast<double>(l1), kExactTolerance, exact);
}

InequalityCheck verify_local_superadd(InterpolationTable& table, const PairingCounts& c, std::size_t delta) {
  const auto& inst = table.instance();
  if (delta < 2 || !PairingCounts{c.alpha, c.beta, c.gamma + delta}.feasible(inst.degree_a(), inst.degree_b()))
    throw std::invalid_argument("requires (α,β,γ+δ) feasible, δ ≥ 2");
  const Expectation fa = table.F({c.alpha + 1, c.beta, c.gamma});
  const Expectation fb = table.F({c.alpha, c.beta + 1, c.gamma});
  const Expectation fc = table.F({c.alpha, c.beta, c.gamma + 1});
  const double kappa = inst.f.kappa();
  std::optional<bool> exact;
  if (auto k = exact_kappa(kappa); k && fa.exact && fb.exact && fc.exact)
    exact = (*fa.exact + *fb.exact) / 2 <= *fc.exact + *k * 2 / static_cast<long long>(delta);
  return finish("local", inst.describe(), format_counts(c) + ";delta=" + std::to_string(delta),
                (fa.value + fb.value) / 2.0, fc.value + 2.0 * kappa / static_cast<double>(delta), kExactTolerance,
                exact);
}

InequalityCheck verify_global(InterpolationTable& table, std::size_t gamma, double phi_scale) {
  const auto& inst = table.instance();
  const std::size_t da = inst.degree_a(), db = inst.degree_b();
  if (gamma > std::min(da, db)) throw std::invalid_argument("verify_global: gamma exceeds d(A) ∧ d(B)");
  const Expectation top = table.F({da / 2, db / 2, 0});
  const Expectation mid = table.F({floor_half_diff(da, gamma), floor_half_diff(db, gamma), gamma});
  const double slack = phi_scale * phi(static_cast<double>(gamma), inst.f.kappa());
  std::optional<bool> exact;
  // phi is irrational except at 0; compare exactly when there is no slack.
  if (gamma == 0 && top.exact && mid.exact) exact = *top.exact <= *mid.exact;
  return finish("global", inst.describe(), "gamma=" + std::to_string(gamma), top.value, mid.value + slack,
                kExactTolerance, exact);
}

Expectation config_expectation_exact(const GraphParameter& f, const DegreeSequence& d) {
  if (d.empty()) return Expectation{0.0, Rational(0)};
  HalfEdgeSystem sys(d);
  return average(f, sys, enumerate_maximal_matchings(sys));
}

McEstimate config_expectation_mc(const GraphParameter& f, const DegreeSequence& d, std::size_t reps,
                                 const RandomStream& rng, int workers) {
  if (reps == 0) throw std::invalid_argument("reps must be at least 1");
  if (d.empty()) return McEstimate{0.0, 0.0, reps};
  auto values = kernels::parallel_map(reps, workers, [&](std::size_t r) {
    RandomStream stream = rng.substream(r);
    return f(sample_uniform_graph(d, stream));
  });
  return summarize(values);
}

namespace {

DegreeSequence restrict_to(const DegreeSequence& d, const std::vector<std::size_t>& vertices) {
  std::vector<std::size_t> out;
  for (auto v : vertices) out.push_back(d[v]);
  return DegreeSequence(std::move(out));
}

}  // namespace

InequalityCheck verify_main(const GraphParameter& f, const DegreeSequence& d, const Bipartition& bp,
                            const MainCheckOptions& options, const RandomStream& rng) {
  if (bp.vertex_count() != d.size()) throw std::invalid_argument("bipartition size mismatch");
  const DegreeSequence da = restrict_to(d, bp.a_vertices());
  const DegreeSequence db = restrict_to(d, bp.b_vertices());
  const double slack = options.phi_scale * phi(static_cast<double>(d.total()) / 2.0, f.kappa());
  InterpolationInstance inst{HalfEdgeSystem(d), bp, f};

  if (options.mode == EstimationMode::exact) {
    if (d.total() > kEnumerationBudget) throw std::domain_error("exact mode requires total degree <= 12");
    const Expectation ea = config_expectation_exact(f, da);
    const Expectation eb = config_expectation_exact(f, db);
    const Expectation ed = config_expectation_exact(f, d);
    std::optional<bool> exact;
    if (ea.exact && eb.exact && ed.exact && options.phi_scale == 0.0) exact = *ea.exact + *eb.exact <= *ed.exact;
    return finish("main", inst.describe(), "exact", ea.value + eb.value, ed.value + slack, kExactTolerance, exact);
  }
  const McEstimate ea = config_expectation_mc(f, da, options.reps, rng.substream(0), options.workers);
  const McEstimate eb = config_expectation_mc(f, db, options.reps, rng.substream(1), options.workers);
  const McEstimate ed = config_expectation_mc(f, d, options.reps, rng.substream(2), options.workers);
  const double se = std::sqrt(ea.std_error * ea.std_error + eb.std_error * eb.std_error + ed.std_error * ed.std_error);
  return finish("main", inst.describe(), "mc;reps=" + std::to_string(options.reps), ea.mean + eb.mean,
                ed.mean + slack, kStderrAllowance * se);
}

double c_constant(std::size_t gamma) {
  if (gamma == 0) throw std::domain_error("c_constant: gamma must be at least 1");
  const double g = static_cast<double>(gamma);
  const double l = std::log1p(g);
  const double denom = l - std::sqrt(l / g);
  if (!(denom > 0.0)) throw std::domain_error("c_constant: nonpositive denominator at gamma = " + std::to_string(gamma));
  return 2.0 / denom + 4.0 + 4.0 / std::sqrt(l);
}

std::size_t default_delta(std::size_t gamma) {
  const double g = static_cast<double>(gamma);
  return static_cast<std::size_t>(std::floor(std::sqrt(g * std::log1p(g))));
}

double global_walk_bound(std::size_t gamma, std::size_t delta, double kappa) {
  if (delta == 0) throw std::invalid_argument("global_walk_bound: delta must be positive");
  const double g = static_cast<double>(gamma), dl = static_cast<double>(delta);
  return kappa * (2.0 * g / dl + 4.0 * dl + 4.0 * g * std::exp(-(dl + 1.0) * (dl + 1.0) / (2.0 * g)));
}

WalkPath walk_path(std::size_t gamma, std::size_t delta, RandomStream& rng, std::optional<std::size_t> degree_a,
                   std::optional<std::size_t> degree_b) {
  if (delta < 2 || 2 * delta > gamma) throw std::invalid_argument("walk_path requires 2 ≤ δ ≤ γ/2");
  const std::size_t da = degree_a.value_or(gamma), db = degree_b.value_or(gamma);
  if (gamma > std::min(da, db)) throw std::invalid_argument("walk_path requires γ ≤ d(A) ∧ d(B)");
  WalkPath path;
  path.delta = delta;
  path.horizon = gamma - 2 * delta;
  const auto base_a = static_cast<long long>((da - gamma) / 2);
  const auto base_b = static_cast<long long>((db - gamma) / 2);
  const auto tau = static_cast<long long>(path.horizon);
  long long s = 0;
  for (long long t = 0; t <= tau; ++t) {
    if (t > 0) s += rng.coin() ? 1 : -1;
    path.positions.push_back(s);
    if (!path.stopping_time && std::llabs(s) > static_cast<long long>(delta))
      path.stopping_time = static_cast<std::size_t>(t);
    path.triples.push_back({base_a + (t + s) / 2, base_b + (t - s) / 2, tau - t});
  }
  return path;
}

DoobExperiment doob_experiment(std::size_t gamma, std::size_t delta, std::size_t runs, const RandomStream& rng,
                               int workers) {
  if (runs == 0) throw std::invalid_argument("doob_experiment: runs must be at least 1");
  if (delta < 2 || 2 * delta > gamma) throw std::invalid_argument("walk_path requires 2 ≤ δ ≤ γ/2");
  DoobExperiment e;
  e.gamma = gamma;
  e.delta = delta;
  e.horizon = gamma - 2 * delta;
  e.runs = runs;
  const long long tau = static_cast<long long>(e.horizon), limit = static_cast<long long>(delta);
  auto hits = kernels::parallel_map(runs, workers, [&](std::size_t r) {
    RandomStream stream = rng.substream(r);
    long long s = 0;
    for (long long t = 1; t <= tau; ++t) {
      s += stream.coin() ? 1 : -1;
      if (std::llabs(s) > limit) return 1;
    }
    return 0;
  });
  for (int h : hits) e.hits += static_cast<std::size_t>(h);
  e.frequency = static_cast<double>(e.hits) / static_cast<double>(runs);
  const double d1 = static_cast<double>(delta) + 1.0;
  e.bound = tau == 0 ? 0.0 : 2.0 * std::exp(-d1 * d1 / (2.0 * static_cast<double>(tau)));
  e.sigma = binomial_sigma(e.bound, runs);
  e.verdict = e.frequency <= e.bound + 3.0 * e.sigma;
  return e;
}

std::size_t SweepResult::violations() const {
  std::size_t total = 0;
  for (const auto& [name, t] : tallies) total += t.violations;
  return total;
}

namespace {

struct SweepInstance {
  DegreeSequence d;
  Bipartition bp;
};

void all_degree_functions(std::size_t n, std::size_t budget, std::vector<std::size_t>& cur,
                          std::vector<DegreeSequence>& out) {
  if (cur.size() == n) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t k = 0; k <= budget; ++k) {
    cur.push_back(k);
    all_degree_functions(n, budget - k, cur, out);
    cur.pop_back();
  }
}

void sorted_degree_functions(std::size_t n, std::size_t budget, std::size_t min_value,
                             std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = min_value; k <= budget; ++k) {
    cur.push_back(k);
    sorted_degree_functions(n, budget - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<SweepInstance> sweep_instances(const SweepOptions& opt) {
  std::vector<SweepInstance> out;
  for (std::size_t n = 1; n <= opt.max_vertices; ++n) {
    if (!opt.canonical) {
      std::vector<DegreeSequence> ds;
      std::vector<std::size_t> cur;
      all_degree_functions(n, opt.max_total_degree, cur, ds);
      for (const auto& d : ds) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          std::vector<bool> in_a(n);
          for (std::size_t v = 0; v < n; ++v) in_a[v] = (mask >> v) & 1;
          out.push_back({d, Bipartition(std::move(in_a))});
        }
      }
      continue;
    }
    // One representative per (multiset of A-degrees, multiset of B-degrees): A first.
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<std::vector<std::size_t>> as, scratch;
      std::vector<std::size_t> cur;
      sorted_degree_functions(k, opt.max_total_degree, 0, cur, as);
      for (const auto& a : as) {
        std::size_t used = 0;
        for (auto x : a) used += x;
        std::vector<std::vector<std::size_t>> bs;
        sorted_degree_functions(n - k, opt.max_total_degree - used, 0, cur, bs);
        for (const auto& b : bs) {
          std::vector<std::size_t> d = a;
          d.insert(d.end(), b.begin(), b.end());
          std::vector<bool> in_a(n, false);
          for (std::size_t v = 0; v < k; ++v) in_a[v] = true;
          out.push_back({DegreeSequence(std::move(d)), Bipartition(std::move(in_a))});
        }
      }
    }
  }
  return out;
}

std::vector<InequalityCheck> sweep_one(const GraphParameter& f, const SweepInstance& si, double phi_scale) {
  std::vector<InequalityCheck> rows;
  InterpolationTable table({HalfEdgeSystem(si.d), si.bp, f});
  const auto triples = table.feasible_triples();
  const std::size_t da = table.instance().degree_a(), db = table.instance().degree_b();

  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j) rows.push_back(verify_F_lipschitz(table, triples[i], triples[j]));

  for (const auto& c : triples)
    for (std::size_t delta = 2; PairingCounts{c.alpha, c.beta, c.gamma + delta}.feasible(da, db); ++delta)
      rows.push_back(verify_local_superadd(table, c, delta));

  for (std::size_t gamma = 0; gamma <= std::min(da, db); ++gamma) rows.push_back(verify_global(table, gamma, phi_scale));

  MainCheckOptions main_opt;
  main_opt.phi_scale = phi_scale;
  rows.push_back(verify_main(f, si.d, si.bp, main_opt, RandomStream(0)));
  return rows;
}

}  // namespace

SweepResult interpolation_sweep(const GraphParameter& f, const SweepOptions& options) {
  if (options.max_total_degree > kEnumerationBudget)
    throw std::domain_error("sweep: max total degree above the enumeration budget");
  const auto instances = sweep_instances(options);
  auto per_instance = kernels::parallel_map(instances.size(), options.workers, [&](std::size_t i) {
    return sweep_one(f, instances[i], options.phi_scale);
  });

  SweepResult result;
  result.parameter = f.name();
  result.instances = instances.size();
  for (const char* name : {"lipschitz", "local", "global", "main"}) result.tallies[name];
  for (auto& rows : per_instance) {
    for (auto& r : rows) {
      auto& t = result.tallies[r.check];
      if (t.checked == 0 || r.slack < t.min_slack) t.min_slack = r.slack;
      ++t.checked;
      if (!r.verdict) {
        ++t.violations;
        if (!t.first_violation) t.first_violation = r;
      }
      if (options.keep_rows) result.rows.push_back(std::move(r));
    }
  }
  return result;
}

}  // namespace confmodel
