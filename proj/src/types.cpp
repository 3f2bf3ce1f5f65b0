#include "credal/types.hpp"

#include <bit>
#include <cmath>
#include <unordered_set>

namespace credal {

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) throw BadModel("state space needs at least two states");
  if (labels_.size() > 64) throw BadModel("state space capped at 64 states");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw BadModel("duplicate state label: " + l);
  }
}

std::size_t StateSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw UnknownName("unknown state label: " + label);
}

std::size_t Event::count() const { return static_cast<std::size_t>(std::popcount(bits)); }

std::vector<std::size_t> Event::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

double Prior::mass(Event e) const {
  double s = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (e.contains(i)) s += probs[i];
  }
  return s;
}

void validate_prior(const Prior& p, std::size_t dim, double tol) {
  if (p.probs.size() != dim) throw DimensionMismatch("prior has wrong dimension");
  double s = 0.0;
  for (double v : p.probs) {
    if (!std::isfinite(v) || v < -tol) throw BadModel("prior entry negative or non-finite");
    s += v;
  }
  if (std::abs(s - 1.0) > tol * std::max(1.0, std::abs(s)) + tol) {
    throw BadModel("prior does not sum to one");
  }
}

void validate_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw BadAlpha("alpha must lie in [0,1]");
}

void validate_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw BadLambda("lambda must lie in [0,1]");
}

std::string rule_name(const UpdateRule& rule) {
  struct Namer {
    std::string operator()(const FullBayes&) const { return "FB"; }
    std::string operator()(const MaxLikelihood&) const { return "ML"; }
    std::string operator()(const Rml& r) const { return "RML(" + std::to_string(r.alpha) + ")"; }
    std::string operator()(const ContingentRml&) const { return "ContingentRML"; }
    std::string operator()(const LikelihoodRatioRule& r) const {
      return "LikelihoodRatio(" + std::to_string(r.lambda) + ")";
    }
  };
  return std::visit(Namer{}, rule);
}

}  // namespace credal
