// confmodel: samplers, evaluators, verifiers and experiments for the configuration model.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "confmodel/certify.hpp"
#include "confmodel/config_model.hpp"
#include "confmodel/degree.hpp"
#include "confmodel/graph_io.hpp"
#include "confmodel/interpolation.hpp"
#include "confmodel/limits.hpp"
#include "confmodel/parameters.hpp"
#include "confmodel/report.hpp"

using namespace confmodel;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;

/// Bad input discovered after flag parsing (malformed mu, missing seed, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::optional<std::uint64_t> seed;
  int workers = default_workers();
  std::string out;
  std::string format = "csv";
};

struct ParamFlags {
  std::string name = "independence";
  double beta = 1.0;
  std::size_t q = 3;
  GraphParameter make() const { return parameter_by_name(name, beta, q); }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "64-bit root seed");
  sub->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out, "output file (default stdout)");
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_param(CLI::App* sub, ParamFlags& p) {
  sub->add_option("--param", p.name, "independence, maxcut, components, neg-components, ising, potts")
      ->check(CLI::IsMember({"independence", "maxcut", "components", "neg-components", "ising", "potts"}));
  sub->add_option("--beta", p.beta, "inverse temperature for ising/potts");
  sub->add_option("--q", p.q, "number of Potts states");
}

/// Stream of one stochastic command: depends on the seed and the command name only.
RandomStream command_stream(const Common& c, const std::string& command) {
  if (!c.seed) throw UsageError("--seed is required for " + command);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : command) h = (h ^ ch) * 1099511628211ull;
  return RandomStream(*c.seed).substream(h);
}

DegreeDistribution parse_mu(const std::string& arg) {
  std::string text = arg;
  if (arg.find('{') == std::string::npos) {
    std::ifstream in(arg);
    if (!in) throw UsageError("mu: '" + arg + "' is neither inline JSON nor a readable file");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return DegreeDistribution::parse_json(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::size_t> parse_list(const std::string& arg, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream in(arg);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || item.front() == '-') throw UsageError(what + ": bad entry '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

std::vector<double> parse_reals(const std::string& arg, const std::string& what) {
  std::vector<double> out;
  std::stringstream in(arg);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) throw UsageError(what + ": bad entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

PairingCounts parse_counts(const std::string& arg) {
  const auto v = parse_list(arg, "counts");
  if (v.size() != 3) throw UsageError("counts: expected alpha,beta,gamma");
  return {v[0], v[1], v[2]};
}

/// A given as 1-based vertex list; empty string means A = {}.
Bipartition parse_bipartition(const std::string& arg, std::size_t n) {
  std::vector<bool> in_a(n, false);
  if (arg.empty()) return Bipartition(in_a);
  for (auto v : parse_list(arg, "A")) {
    if (v < 1 || v > n) throw UsageError("A: vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    in_a[v - 1] = true;
  }
  return Bipartition(in_a);
}

/// Writes to --out or stdout.
void emit(const Common& c, const std::function<void(std::ostream&)>& body) {
  if (c.out.empty()) {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + c.out);
  body(file);
}

void emit_json(const Common& c, const json& j) {
  emit(c, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
}

void summary(const std::string& line) { std::cerr << line << '\n'; }

std::string inequality_line(const InequalityReport& r) {
  return r.check + ": " + format_number(r.lhs) + " <= " + format_number(r.rhs) + " + " + format_number(r.allowance) +
         " -> " + (r.verdict ? "holds" : "VIOLATED");
}

int emit_inequalities(const Common& c, const std::vector<InequalityReport>& reports) {
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    emit_json(c, arr);
  } else {
    emit(c, [&](std::ostream& out) { write_inequality_csv(out, reports); });
  }
  bool ok = true;
  for (const auto& r : reports) {
    summary(inequality_line(r));
    ok = ok && r.verdict;
  }
  return ok ? kExitOk : kExitVerdict;
}

DegreeMode parse_mode(const std::string& mode) { return mode == "iid" ? DegreeMode::iid : DegreeMode::fixed; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Configuration-model graph parameters: sampling, certification and limit experiments"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all help");

  Common common;
  ParamFlags param;
  std::function<int()> action;
  double phi_scale = 1.0;

  // sample
  auto* sample = app.add_subcommand("sample", "emit a configuration-model graph");
  std::string degrees, mu_arg, mu2_arg;
  std::size_t n = 0, reps = 100, max_tries = kDefaultSimpleTries;
  bool simple = false;
  add_common(sample, common);
  auto* deg_opt = sample->add_option("--degrees", degrees, "comma-separated degrees d(1..n)");
  auto* mu_opt = sample->add_option("--mu", mu_arg, "degree distribution (inline JSON or file)");
  sample->add_option("--n", n, "vertex count when sampling IID degrees from --mu");
  sample->add_flag("--simple", simple, "reject until the graph is simple");
  sample->add_option("--max-tries", max_tries, "rejection budget for --simple")->check(CLI::PositiveNumber);
  deg_opt->excludes(mu_opt);
  sample->callback([&] {
    action = [&] {
      RandomStream rng = command_stream(common, "sample");
      DegreeSequence d;
      if (!degrees.empty()) {
        d = DegreeSequence(parse_list(degrees, "degrees"));
      } else if (!mu_arg.empty()) {
        if (n == 0) throw UsageError("--n is required with --mu");
        RandomStream degree_stream = rng.substream(0);
        d = sample_iid(parse_mu(mu_arg), n, degree_stream);
      } else {
        throw UsageError("sample needs --degrees or --mu with --n");
      }
      RandomStream graph_stream = rng.substream(1);
      Multigraph g;
      try {
        g = simple ? sample_simple(d, graph_stream, max_tries) : sample_uniform_graph(d, graph_stream);
      } catch (const SimpleSamplingError& e) {
        summary(e.what());
        return kExitVerdict;
      }
      if (common.format == "json") {
        json edges = json::array();
        for (auto [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
        emit_json(common, {{"n", g.vertex_count()}, {"edges", edges}});
      } else {
        emit(common, [&](std::ostream& out) { write_graph(out, g); });
      }
      summary("sampled graph with " + std::to_string(g.vertex_count()) + " vertices and " +
              std::to_string(g.edge_count()) + " edges" + (g.is_simple() ? " (simple)" : ""));
      return kExitOk;
    };
  });

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a parameter on a graph file");
  std::string graph_path;
  add_common(eval, common);
  add_param(eval, param);
  eval->add_option("--graph", graph_path, "graph file (\"n m\" header, 1-based edges)")->required();
  eval->callback([&] {
    action = [&] {
      Multigraph g;
      try {
        g = read_graph_file(graph_path);
      } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
      }
      const auto f = param.make();
      const double value = f(g);
      if (common.format == "json")
        emit_json(common, {{"param", f.name()}, {"value", value}});
      else
        emit(common, [&](std::ostream& out) { out << format_number(value) << '\n'; });
      summary(f.name() + "(G) = " + format_number(value));
      return kExitOk;
    };
  });

  // certify
  auto* certify = app.add_subcommand("certify", "Monte Carlo class-membership report");
  CertifyOptions cert;
  std::optional<std::size_t> max_edges;
  add_common(certify, common);
  add_param(certify, param);
  certify->add_option("--samples", cert.samples, "random multigraphs")->check(CLI::PositiveNumber);
  certify->add_option("--nmax", cert.nmax, "maximum vertex count")->check(CLI::PositiveNumber);
  certify->add_option("--max-edges", max_edges, "maximum edge count (default 2 nmax)");
  certify->callback([&] {
    action = [&] {
      RandomStream rng = command_stream(common, "certify");
      cert.max_edges = max_edges.value_or(2 * cert.nmax);
      cert.workers = common.workers;
      const auto report = certify_parameter(param.make(), cert, rng);
      emit_json(common, report.to_json());
      std::string line = report.parameter + ":";
      for (const auto& p : report.properties) line += " " + p.property + "=" + (p.passed ? "pass" : "FAIL");
      summary(line);
      return report.passed() ? kExitOk : kExitVerdict;
    };
  });

  // wasserstein
  auto* wass = app.add_subcommand("wasserstein", "distance between two degree distributions or sequences");
  std::string degrees2;
  add_common(wass, common);
  wass->add_option("--mu", mu_arg, "first distribution (inline JSON or file)");
  wass->add_option("--mu2", mu2_arg, "second distribution");
  wass->add_option("--degrees", degrees, "first degree sequence (uses its empirical measure)");
  wass->add_option("--degrees2", degrees2, "second degree sequence");
  wass->callback([&] {
    action = [&] {
      std::optional<DegreeSequence> s1, s2;
      auto side = [&](const std::string& mu_text, const std::string& seq, std::optional<DegreeSequence>& keep,
                      const char* which) {
        if (!mu_text.empty() && !seq.empty()) throw UsageError(std::string("give one of --mu/--degrees for ") + which);
        if (!mu_text.empty()) return parse_mu(mu_text);
        if (seq.empty()) throw UsageError(std::string("missing ") + which + " distribution");
        keep = DegreeSequence(parse_list(seq, "degrees"));
        return empirical(*keep);
      };
      const auto a = side(mu_arg, degrees, s1, "first");
      const auto b = side(mu2_arg, degrees2, s2, "second");
      const double w = wasserstein(a, b);
      const auto exact = wasserstein_exact(a, b);
      std::optional<std::uint64_t> l1;
      if (s1 && s2 && s1->size() == s2->size()) l1 = sorted_l1(*s1, *s2);
      if (common.format == "json") {
        json j{{"wasserstein", w}};
        if (exact) j["exact"] = to_string(*exact);
        if (l1) j["sorted_l1"] = *l1;
        emit_json(common, j);
      } else {
        emit(common, [&](std::ostream& out) {
          out << "wasserstein,exact,sorted_l1\n"
              << format_number(w) << ',' << (exact ? to_string(*exact) : "") << ',' << (l1 ? std::to_string(*l1) : "")
              << '\n';
        });
      }
      summary("W = " + format_number(w) + (exact ? " (" + to_string(*exact) + ")" : ""));
      return kExitOk;
    };
  });

  // interp-verify
  auto* interp = app.add_subcommand("interp-verify", "interpolation inequalities, exhaustive or single");
  bool sweep = false, labelled = false;
  std::string check, a_arg, counts_arg, counts2_arg, mode = "exact";
  std::size_t max_total = 8, max_vertices = 4, delta = 2, gamma = 0;
  std::size_t main_reps = 1000;
  add_common(interp, common);
  add_param(interp, param);
  interp->add_flag("--sweep", sweep, "check every instance up to --max-total-degree");
  interp->add_option("--max-total-degree", max_total, "sweep: largest total degree");
  interp->add_option("--max-vertices", max_vertices, "sweep: largest vertex count");
  interp->add_flag("--labelled", labelled, "sweep: every labelled degree function, not one per class");
  interp->add_option("--check", check, "single check")->check(CLI::IsMember({"lipschitz", "local", "global", "main"}));
  interp->add_option("--degrees", degrees, "degree function d(1..n)");
  interp->add_option("--A", a_arg, "1-based vertices of side A (comma-separated)");
  interp->add_option("--counts", counts_arg, "alpha,beta,gamma");
  interp->add_option("--counts2", counts2_arg, "second triple for lipschitz");
  interp->add_option("--delta", delta, "local: corridor width");
  interp->add_option("--gamma", gamma, "global: cross-edge count");
  interp->add_option("--mode", mode, "main: exact or mc")->check(CLI::IsMember({"exact", "mc"}));
  interp->add_option("--reps", main_reps, "main, mc mode: replications")->check(CLI::PositiveNumber);
  interp->add_option("--phi-scale", phi_scale)->group("");  // test hook: scales the phi slack
  interp->callback([&] {
    action = [&] {
      const auto f = param.make();
      std::vector<InequalityCheck> rows;
      if (sweep == !check.empty()) throw UsageError("interp-verify needs exactly one of --sweep or --check");
      if (sweep) {
        if (max_total > kEnumerationBudget)
          throw UsageError("--max-total-degree above the enumeration budget " + std::to_string(kEnumerationBudget));
        SweepOptions opt;
        opt.max_total_degree = max_total;
        opt.max_vertices = max_vertices;
        opt.canonical = !labelled;
        opt.keep_rows = true;
        opt.phi_scale = phi_scale;
        opt.workers = common.workers;
        const auto result = interpolation_sweep(f, opt);
        rows = result.rows;
        if (common.format == "json") {
          emit_json(common, to_json(result));
        } else {
          emit(common, [&](std::ostream& out) { write_checks_csv(out, rows); });
        }
        summary(f.name() + ": " + std::to_string(result.instances) + " instances, " + std::to_string(rows.size()) +
                " checks, " + std::to_string(result.violations()) + " violations");
        return result.violations() == 0 ? kExitOk : kExitVerdict;
      }
      if (degrees.empty()) throw UsageError("--check needs --degrees");
      const DegreeSequence d(parse_list(degrees, "degrees"));
      const Bipartition bp = parse_bipartition(a_arg, d.size());
      if (d.total() > kEnumerationBudget && !(check == "main" && mode == "mc"))
        throw UsageError("total degree above the enumeration budget " + std::to_string(kEnumerationBudget));
      InterpolationTable table({HalfEdgeSystem(d), bp, f});
      const std::size_t da = table.instance().degree_a(), db = table.instance().degree_b();
      auto feasible = [&](const PairingCounts& c) {
        if (!c.feasible(da, db)) throw UsageError("infeasible (α,β,γ) for this instance");
        return c;
      };
      try {
        if (check == "lipschitz") {
          if (counts_arg.empty() || counts2_arg.empty()) throw UsageError("lipschitz needs --counts and --counts2");
          rows.push_back(verify_F_lipschitz(table, feasible(parse_counts(counts_arg)),
                                            feasible(parse_counts(counts2_arg))));
        } else if (check == "local") {
          if (counts_arg.empty()) throw UsageError("local needs --counts");
          rows.push_back(verify_local_superadd(table, parse_counts(counts_arg), delta));
        } else if (check == "global") {
          rows.push_back(verify_global(table, gamma, phi_scale));
        } else {
          MainCheckOptions opt;
          opt.mode = mode == "mc" ? EstimationMode::mc : EstimationMode::exact;
          opt.reps = main_reps;
          opt.workers = common.workers;
          opt.phi_scale = phi_scale;
          const RandomStream rng = opt.mode == EstimationMode::mc ? command_stream(common, "interp-verify")
                                                                  : RandomStream(common.seed.value_or(0));
          rows.push_back(verify_main(f, d, bp, opt, rng));
        }
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (common.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(r.to_json());
        emit_json(common, arr);
      } else {
        emit(common, [&](std::ostream& out) { write_checks_csv(out, rows); });
      }
      const auto& r = rows.front();
      summary(r.check + " " + r.instance + " " + r.counts + ": " + format_number(r.lhs) + " <= " +
              format_number(r.rhs) + " + " + format_number(r.allowance) + " -> " +
              (r.verdict ? "holds" : "VIOLATED"));
      return r.verdict ? kExitOk : kExitVerdict;
    };
  });

  // psi
  auto* psi = app.add_subcommand("psi", "Monte Carlo table of E f(G)/n");
  std::string n_list, degree_mode = "fixed";
  add_common(psi, common);
  add_param(psi, param);
  psi->add_option("--mu", mu_arg, "degree distribution (inline JSON or file)")->required();
  psi->add_option("--n", n_list, "comma-separated sizes")->required();
  psi->add_option("--reps", reps, "replications per size")->check(CLI::PositiveNumber);
  psi->add_option("--mode", degree_mode, "fixed or iid degrees")->check(CLI::IsMember({"fixed", "iid"}));
  psi->callback([&] {
    action = [&] {
      RandomStream rng = command_stream(common, "psi");
      const auto mu = parse_mu(mu_arg);
      const auto est = estimate_psi(param.make(), mu, parse_list(n_list, "n"), reps, rng,
                                    {parse_mode(degree_mode), common.workers});
      if (common.format == "json")
        emit_json(common, to_json(est));
      else
        emit(common, [&](std::ostream& out) { write_psi_csv(out, est); });
      summary(est.parameter + ": psi_hat = " + format_number(est.psi_hat) + " (stderr " +
              format_number(est.psi_std_error) + ") at n = " + std::to_string(est.rows.back().n));
      return kExitOk;
    };
  });

  // concavity and lipschitz-psi share their flags
  std::size_t size = 0;
  double finite_n = 0.0;
  auto two_mu = [&](CLI::App* sub) {
    add_common(sub, common);
    add_param(sub, param);
    sub->add_option("--mu", mu_arg, "first distribution")->required();
    sub->add_option("--mu2", mu2_arg, "second distribution")->required();
    sub->add_option("--n", size, "vertex count")->required()->check(CLI::PositiveNumber);
    sub->add_option("--reps", reps, "replications")->check(CLI::PositiveNumber);
    sub->add_option("--mode", degree_mode, "fixed or iid degrees")->check(CLI::IsMember({"fixed", "iid"}));
  };
  auto* concavity = app.add_subcommand("concavity", "midpoint concavity of psi in mu");
  two_mu(concavity);
  concavity->callback([&] {
    action = [&] {
      RandomStream rng = command_stream(common, "concavity");
      if (size % 2 != 0) throw UsageError("--n must be even");
      return emit_inequalities(common, {check_midpoint_concavity(param.make(), parse_mu(mu_arg), parse_mu(mu2_arg),
                                                                 size, reps, rng,
                                                                 {parse_mode(degree_mode), common.workers})});
    };
  });
  auto* lip = app.add_subcommand("lipschitz-psi", "|psi(mu) - psi(mu2)| <= 2 kappa W");
  two_mu(lip);
  lip->add_option("--finite-n-allowance", finite_n, "extra declared allowance")->check(CLI::NonNegativeNumber);
  lip->callback([&] {
    action = [&] {
      RandomStream rng = command_stream(common, "lipschitz-psi");
      return emit_inequalities(common, {check_lipschitz_psi(param.make(), parse_mu(mu_arg), parse_mu(mu2_arg), size,
                                                            reps, rng, {parse_mode(degree_mode), common.workers},
                                                            finite_n)});
    };
  });

  // concentration
  auto* conc = app.add_subcommand("concentration", "tail frequencies against the Azuma bound");
  std::string eps_arg = "10,20,40,80";
  add_common(conc, common);
  add_param(conc, param);
  conc->add_option("--degrees", degrees, "degree sequence");
  conc->add_option("--mu", mu_arg, "distribution realized by a fixed sequence of length --n");
  conc->add_option("--n", size, "vertex count with --mu");
  conc->add_option("--reps", reps, "replications")->check(CLI::PositiveNumber);
  conc->add_option("--eps", eps_arg, "comma-separated thresholds");
  conc->callback([&] {
    action = [&] {
      RandomStream rng = command_stream(common, "concentration");
      DegreeSequence d;
      if (!degrees.empty())
        d = DegreeSequence(parse_list(degrees, "degrees"));
      else if (!mu_arg.empty() && size > 0)
        d = fixed_degree_sequence(parse_mu(mu_arg), size);
      else
        throw UsageError("concentration needs --degrees or --mu with --n");
      const auto rep = check_concentration(param.make(), d, reps, parse_reals(eps_arg, "eps"), rng, common.workers);
      if (common.format == "json")
        emit_json(common, to_json(rep));
      else
        emit(common, [&](std::ostream& out) { write_concentration_csv(out, rep); });
      std::size_t bad = 0;
      for (const auto& r : rep.rows) bad += !r.verdict;
      summary("concentration: " + std::to_string(rep.rows.size()) + " thresholds, " + std::to_string(bad) +
              " above bound + 3 sigma");
      return rep.passed() ? kExitOk : kExitVerdict;
    };
  });

  // compare
  auto* compare = app.add_subcommand("compare", "E f(G_d)/n against E f(G_d2)/n");
  add_common(compare, common);
  add_param(compare, param);
  compare->add_option("--degrees", degrees, "first degree sequence")->required();
  compare->add_option("--degrees2", degrees2, "second degree sequence")->required();
  compare->add_option("--reps", reps, "replications")->check(CLI::PositiveNumber);
  compare->callback([&] {
    action = [&] {
      RandomStream rng = command_stream(common, "compare");
      const DegreeSequence d(parse_list(degrees, "degrees")), d2(parse_list(degrees2, "degrees2"));
      if (d.size() != d2.size()) throw UsageError("length mismatch");
      return emit_inequalities(common, {compare_expectations(param.make(), d, d2, reps, rng, common.workers)});
    };
  });

  // walk
  auto* walk = app.add_subcommand("walk", "random-walk path of the global interpolation");
  std::size_t walk_gamma = 200, runs = 100000;
  std::optional<std::size_t> walk_delta;
  bool single = false;
  add_common(walk, common);
  walk->add_option("--gamma", walk_gamma, "cross-edge count")->check(CLI::PositiveNumber);
  walk->add_option("--delta", walk_delta, "corridor half-width (default floor(sqrt(gamma ln(1+gamma))))");
  walk->add_option("--runs", runs, "walks for the stopping-time experiment")->check(CLI::PositiveNumber);
  walk->add_flag("--path", single, "emit one trajectory instead of the experiment");
  walk->callback([&] {
    action = [&] {
      RandomStream rng = command_stream(common, "walk");
      const std::size_t dl = walk_delta.value_or(default_delta(walk_gamma));
      if (dl < 2 || 2 * dl > walk_gamma) throw UsageError("walk requires 2 <= delta <= gamma/2");
      if (single) {
        RandomStream s = rng.substream(0);
        const auto p = walk_path(walk_gamma, dl, s);
        if (common.format == "json") {
          json rows = json::array();
          for (std::size_t t = 0; t < p.positions.size(); ++t)
            rows.push_back({{"t", t},
                            {"S", p.positions[t]},
                            {"alpha", p.triples[t].alpha},
                            {"beta", p.triples[t].beta},
                            {"gamma", p.triples[t].gamma}});
          json j{{"tau", p.horizon}, {"delta", p.delta}, {"path", rows}};
          j["T"] = p.stopping_time ? json(*p.stopping_time) : json(nullptr);
          emit_json(common, j);
        } else {
          emit(common, [&](std::ostream& out) { write_walk_csv(out, p); });
        }
        summary("walk: tau = " + std::to_string(p.horizon) + ", T " +
                (p.stopping_time ? "= " + std::to_string(*p.stopping_time) : "> tau"));
        return kExitOk;
      }
      const auto e = doob_experiment(walk_gamma, dl, runs, rng, common.workers);
      if (common.format == "json")
        emit_json(common, to_json(e));
      else
        emit(common, [&](std::ostream& out) { write_doob_csv(out, e); });
      summary("walk: P(T <= tau) = " + format_number(e.frequency) + " vs bound " + format_number(e.bound) + " -> " +
              (e.verdict ? "holds" : "VIOLATED"));
      return e.verdict ? kExitOk : kExitVerdict;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  // Anything thrown past this point is bad input: malformed flags, sizes beyond the solvers, and so on.
  try {
    return action ? action() : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
