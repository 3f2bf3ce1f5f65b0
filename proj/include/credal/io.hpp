#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "credal/axioms.hpp"
#include "credal/belief.hpp"
#include "credal/persuasion.hpp"
#include "credal/signals.hpp"

namespace credal {

// Rule as written in a spec file; contingent weights are keyed by event name
// until they are resolved against the spec's event table.
struct RuleSpec {
  std::string type = "FB";  // FB | ML | RML | ContingentRML | LikelihoodRatio
  double alpha = 0.0;
  double lambda = 1.0;
  std::map<std::string, double> alphas;

  UpdateRule resolve(const std::map<std::string, Event>& events) const;
};

// One self-contained problem: a credal set plus named acts and events, an
// updating rule, and optional signal-model and persuasion blocks.
struct ProblemSpec {
  StateSpace states{std::vector<std::string>{"s0", "s1"}};
  CredalSet credal;
  std::map<std::string, Act> acts;
  std::map<std::string, Event> events;
  RuleSpec rule;
  std::optional<SignalModel> signal_model;
  std::optional<PersuasionGame> persuasion;
  std::uint64_t seed = 1;
};

// Strict parser: unknown fields are rejected. Throws ParseError.
ProblemSpec parse_problem_spec(const nlohmann::json& j, double tolerance = kGeomTol);
ProblemSpec load_problem_spec(const std::string& path, double tolerance = kGeomTol);

// Canonical serialization; parse -> serialize -> parse is the identity on
// the canonical form.
nlohmann::json to_json(const ProblemSpec& spec);

nlohmann::json report_to_json(const AxiomReport& report, const StateSpace& states);

// Fixed 12-significant-digit formatting used by every emitter.
std::string fmt_g12(double v);

std::string comparison_name(Comparison c);
std::string ml_prior_name(MlPriorCase c);

}  // namespace credal
