#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "confmodel/interpolation.hpp"
#include "confmodel/limits.hpp"

namespace confmodel {

/// Shortest round-trip decimal form.
std::string format_number(double x);
/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(const std::string& s);

// psi table: param,mu,n,reps,mean,stderr,seed
void write_psi_csv(std::ostream& out, const PsiEstimate& est);
// inequality reports: check,lhs,rhs,allowance,verdict,seed
void write_inequality_csv(std::ostream& out, const std::vector<InequalityReport>& reports);
// concentration: eps,freq,bound,verdict
void write_concentration_csv(std::ostream& out, const ConcentrationReport& rep);
// interpolation checks: check,instance,counts,lhs,rhs,allowance,slack,verdict
void write_checks_csv(std::ostream& out, const std::vector<InequalityCheck>& rows);
// walk experiment: gamma,delta,tau,runs,hits,freq,bound,sigma,verdict
void write_doob_csv(std::ostream& out, const DoobExperiment& e);
// single path: t,S,alpha,beta,gamma
void write_walk_csv(std::ostream& out, const WalkPath& path);

nlohmann::json to_json(const PsiEstimate& est);
nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const ConcentrationReport& rep);
nlohmann::json to_json(const SweepResult& sweep);
nlohmann::json to_json(const DoobExperiment& e);

}  // namespace confmodel
