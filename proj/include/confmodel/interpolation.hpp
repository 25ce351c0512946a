#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "confmodel/config_model.hpp"
#include "confmodel/parameters.hpp"
#include "confmodel/random.hpp"
#include "confmodel/rational.hpp"
#include "confmodel/stats.hpp"

namespace confmodel {

struct InterpolationInstance {
  HalfEdgeSystem sys;
  Bipartition bp;
  GraphParameter f;

  std::size_t degree_a() const { return bp.degree_a(sys.degrees()); }
  std::size_t degree_b() const { return bp.degree_b(sys.degrees()); }
  /// "d=(2,2);A={1}" with 1-based vertices.
  std::string describe() const;
};

/// Expectation over a finite ensemble; exact is set for integer-valued parameters.
struct Expectation {
  double value = 0.0;
  std::optional<Rational> exact;
};

/// F(alpha, beta, gamma) over one instance, memoized per triple.
class InterpolationTable {
 public:
  explicit InterpolationTable(InterpolationInstance inst);

  const InterpolationInstance& instance() const { return inst_; }
  /// Throws "empty class" for infeasible triples.
  const Expectation& F(const PairingCounts& c);
  /// All feasible triples, lexicographic.
  std::vector<PairingCounts> feasible_triples() const;

 private:
  InterpolationInstance inst_;
  std::map<PairingCounts, Expectation> memo_;
};

Expectation F_exact(const InterpolationInstance& inst, const PairingCounts& c);
McEstimate F_mc(const InterpolationInstance& inst, const PairingCounts& c, std::size_t reps,
                const RandomStream& rng, int workers = default_workers());

/// 7 kappa sqrt(x ln(1 + x)).
double phi(double x, double kappa);

/// One checked inequality lhs <= rhs (+ allowance).
struct InequalityCheck {
  std::string check;
  std::string instance;
  std::string counts;
  double lhs = 0.0;
  double rhs = 0.0;
  double allowance = 0.0;
  double slack = 0.0;  // rhs + allowance - lhs
  bool verdict = true;

  nlohmann::json to_json() const;
};

inline constexpr double kExactTolerance = 1e-9;
inline constexpr double kStderrAllowance = 4.0;

InequalityCheck verify_F_lipschitz(InterpolationTable& table, const PairingCounts& c1, const PairingCounts& c2);
/// Requires delta >= 2 and (alpha, beta, gamma + delta) feasible.
InequalityCheck verify_local_superadd(InterpolationTable& table, const PairingCounts& c, std::size_t delta);
/// phi_scale multiplies the phi slack; values other than 1 exist only to exercise failure paths.
InequalityCheck verify_global(InterpolationTable& table, std::size_t gamma, double phi_scale = 1.0);

/// E f(G_d) over all maximal matchings; total degree <= kEnumerationBudget.
Expectation config_expectation_exact(const GraphParameter& f, const DegreeSequence& d);
McEstimate config_expectation_mc(const GraphParameter& f, const DegreeSequence& d, std::size_t reps,
                                 const RandomStream& rng, int workers = default_workers());

enum class EstimationMode { exact, mc };

struct MainCheckOptions {
  EstimationMode mode = EstimationMode::exact;
  std::size_t reps = 1000;
  int workers = default_workers();
  double phi_scale = 1.0;
};

/// E f(G_{d|A}) + E f(G_{d|B}) <= E f(G_d) + phi(sum(d) / 2).
InequalityCheck verify_main(const GraphParameter& f, const DegreeSequence& d, const Bipartition& bp,
                            const MainCheckOptions& options, const RandomStream& rng);

/// 2 / (ln(1+g) - sqrt(ln(1+g)/g)) + 4 + 4 / sqrt(ln(1+g)).
double c_constant(std::size_t gamma);
/// floor(sqrt(gamma ln(1 + gamma))).
std::size_t default_delta(std::size_t gamma);
/// kappa (2 gamma / delta + 4 delta + 4 gamma exp(-(delta+1)^2 / (2 gamma))) at the given delta.
double global_walk_bound(std::size_t gamma, std::size_t delta, double kappa);

struct WalkTriple {
  long long alpha = 0;
  long long beta = 0;
  long long gamma = 0;
};

struct WalkPath {
  std::size_t horizon = 0;  // tau = gamma - 2 delta
  std::size_t delta = 0;
  std::vector<long long> positions;             // S_0..S_tau
  std::optional<std::size_t> stopping_time;     // T when T <= tau
  std::vector<WalkTriple> triples;              // t = 0..tau
};

/// Simple random walk driving the global interpolation path. degree_a and
/// degree_b (default gamma) fix the offsets floor((d(A) - gamma) / 2).
WalkPath walk_path(std::size_t gamma, std::size_t delta, RandomStream& rng, std::optional<std::size_t> degree_a = {},
                   std::optional<std::size_t> degree_b = {});

struct DoobExperiment {
  std::size_t gamma = 0, delta = 0, horizon = 0, runs = 0, hits = 0;
  double frequency = 0.0;
  double bound = 0.0;  // 2 exp(-(delta+1)^2 / (2 tau))
  double sigma = 0.0;  // binomial sigma at the bound
  bool verdict = true;  // frequency <= bound + 3 sigma
};

DoobExperiment doob_experiment(std::size_t gamma, std::size_t delta, std::size_t runs, const RandomStream& rng,
                               int workers = default_workers());

struct SweepOptions {
  std::size_t max_total_degree = 8;
  std::size_t max_vertices = 4;
  /// Only one degree function per (sorted A-degrees, sorted B-degrees) class.
  bool canonical = false;
  bool keep_rows = false;
  double phi_scale = 1.0;
  int workers = default_workers();
};

struct CheckTally {
  std::size_t checked = 0;
  std::size_t violations = 0;
  double min_slack = 0.0;
  std::optional<InequalityCheck> first_violation;
};

struct SweepResult {
  std::string parameter;
  std::size_t instances = 0;
  std::map<std::string, CheckTally> tallies;  // lipschitz, local, global, main
  std::vector<InequalityCheck> rows;          // when keep_rows

  std::size_t violations() const;
};

/// Exhaustive exact check of all four inequalities on every small instance.
SweepResult interpolation_sweep(const GraphParameter& f, const SweepOptions& options);

}  // namespace confmodel
