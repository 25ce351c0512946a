#include "confmodel/report.hpp"

#include <charconv>
#include <ostream>

namespace confmodel {

std::string format_number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {
const char* verdict(bool ok) { return ok ? "true" : "false"; }
}  // namespace

void write_psi_csv(std::ostream& out, const PsiEstimate& est) {
  out << "param,mu,n,reps,mean,stderr,seed\n";
  const std::string mu = csv_field(est.mu.to_json());
  for (const auto& r : est.rows)
    out << est.parameter << ',' << mu << ',' << r.n << ',' << r.reps << ',' << format_number(r.mean) << ','
        << format_number(r.std_error) << ',' << est.seed << '\n';
}

void write_inequality_csv(std::ostream& out, const std::vector<InequalityReport>& reports) {
  out << "check,lhs,rhs,allowance,verdict,seed\n";
  for (const auto& r : reports)
    out << r.check << ',' << format_number(r.lhs) << ',' << format_number(r.rhs) << ','
        << format_number(r.allowance) << ',' << verdict(r.verdict) << ',' << r.seed << '\n';
}

void write_concentration_csv(std::ostream& out, const ConcentrationReport& rep) {
  out << "eps,freq,bound,verdict\n";
  for (const auto& r : rep.rows)
    out << format_number(r.eps) << ',' << format_number(r.frequency) << ',' << format_number(r.bound) << ','
        << verdict(r.verdict) << '\n';
}

void write_checks_csv(std::ostream& out, const std::vector<InequalityCheck>& rows) {
  out << "check,instance,counts,lhs,rhs,allowance,slack,verdict\n";
  for (const auto& r : rows)
    out << r.check << ',' << csv_field(r.instance) << ',' << csv_field(r.counts) << ',' << format_number(r.lhs)
        << ',' << format_number(r.rhs) << ',' << format_number(r.allowance) << ',' << format_number(r.slack) << ','
        << verdict(r.verdict) << '\n';
}

void write_doob_csv(std::ostream& out, const DoobExperiment& e) {
  out << "gamma,delta,tau,runs,hits,freq,bound,sigma,verdict\n";
  out << e.gamma << ',' << e.delta << ',' << e.horizon << ',' << e.runs << ',' << e.hits << ','
      << format_number(e.frequency) << ',' << format_number(e.bound) << ',' << format_number(e.sigma) << ','
      << verdict(e.verdict) << '\n';
}

void write_walk_csv(std::ostream& out, const WalkPath& path) {
  out << "t,S,alpha,beta,gamma\n";
  for (std::size_t t = 0; t < path.positions.size(); ++t)
    out << t << ',' << path.positions[t] << ',' << path.triples[t].alpha << ',' << path.triples[t].beta << ','
        << path.triples[t].gamma << '\n';
}

nlohmann::json to_json(const PsiEstimate& est) {
  nlohmann::json j;
  j["param"] = est.parameter;
  j["mu"] = nlohmann::json::parse(est.mu.to_json());
  j["seed"] = est.seed;
  j["psi_hat"] = est.psi_hat;
  j["psi_stderr"] = est.psi_std_error;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : est.rows)
    j["rows"].push_back({{"n", r.n}, {"reps", r.reps}, {"mean", r.mean}, {"stderr", r.std_error}});
  return j;
}

nlohmann::json to_json(const InequalityReport& r) {
  return {{"check", r.check},         {"lhs", r.lhs},         {"rhs", r.rhs},   {"allowance", r.allowance},
          {"verdict", r.verdict},     {"seed", r.seed},       {"detail", r.detail}};
}

nlohmann::json to_json(const ConcentrationReport& rep) {
  nlohmann::json j;
  j["n"] = rep.d.size();
  j["total_degree"] = rep.d.total();
  j["reps"] = rep.reps;
  j["mean"] = rep.mean;
  j["seed"] = rep.seed;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rep.rows)
    j["rows"].push_back({{"eps", r.eps}, {"freq", r.frequency}, {"bound", r.bound}, {"verdict", r.verdict}});
  return j;
}

nlohmann::json to_json(const SweepResult& sweep) {
  nlohmann::json j;
  j["param"] = sweep.parameter;
  j["instances"] = sweep.instances;
  j["violations"] = sweep.violations();
  for (const auto& [name, t] : sweep.tallies) {
    nlohmann::json e{{"checked", t.checked}, {"violations", t.violations}, {"min_slack", t.min_slack}};
    if (t.first_violation) e["first_violation"] = t.first_violation->to_json();
    j["checks"][name] = e;
  }
  return j;
}

nlohmann::json to_json(const DoobExperiment& e) {
  return {{"gamma", e.gamma}, {"delta", e.delta}, {"tau", e.horizon}, {"runs", e.runs},        {"hits", e.hits},
          {"freq", e.frequency}, {"bound", e.bound}, {"sigma", e.sigma},  {"verdict", e.verdict}};
}

}  // namespace confmodel
