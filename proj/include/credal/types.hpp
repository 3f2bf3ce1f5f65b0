#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace credal {

// Geometric tolerance: hull membership, face ties, canonical set comparison.
inline constexpr double kGeomTol = 1e-9;
// Normalization tolerance for probability vectors.
inline constexpr double kNormTol = 1e-9;
// Indifference tolerance for axiom checks; conclusions get 10x slack.
inline constexpr double kAxiomTol = 1e-7;

struct CredalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInput : CredalError { using CredalError::CredalError; };
struct BadAlpha : CredalError { using CredalError::CredalError; };
struct BadLambda : CredalError { using CredalError::CredalError; };
struct BadModel : CredalError { using CredalError::CredalError; };
struct ZeroLikelihood : CredalError { using CredalError::CredalError; };
struct NotStrictNonnull : CredalError { using CredalError::CredalError; };
struct MissingAlpha : CredalError { using CredalError::CredalError; };
struct InconsistentData : CredalError { using CredalError::CredalError; };
struct RootBracketFailure : CredalError { using CredalError::CredalError; };
struct UnboundedThreshold : CredalError { using CredalError::CredalError; };
struct UnknownAxiom : CredalError { using CredalError::CredalError; };
struct UnknownName : CredalError { using CredalError::CredalError; };
struct BoundedBoxRequired : CredalError { using CredalError::CredalError; };
struct DimensionMismatch : CredalError { using CredalError::CredalError; };
struct NotTwoStates : CredalError { using CredalError::CredalError; };
struct ParseError : CredalError { using CredalError::CredalError; };

// Finite ordered state space. Events are bitmasks over its indices, so the
// space is capped at 64 states; every instance in this library is far smaller.
class StateSpace {
 public:
  explicit StateSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(const std::string& label) const;  // throws UnknownName

 private:
  std::vector<std::string> labels_;
};

// Subset of state indices with bitmask semantics.
struct Event {
  std::uint64_t bits = 0;

  static Event full(std::size_t n) {
    return Event{n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)};
  }
  static Event of(std::initializer_list<std::size_t> indices) {
    Event e;
    for (std::size_t i : indices) e.bits |= std::uint64_t{1} << i;
    return e;
  }

  bool empty() const { return bits == 0; }
  bool contains(std::size_t i) const { return (bits >> i) & 1u; }
  std::size_t count() const;
  Event complement(std::size_t n) const { return Event{full(n).bits & ~bits}; }
  std::vector<std::size_t> indices() const;

  friend bool operator==(Event a, Event b) { return a.bits == b.bits; }
  friend bool operator<(Event a, Event b) { return a.bits < b.bits; }
};

// One point of the simplex over the state space.
struct Prior {
  std::vector<double> probs;

  double mass(Event e) const;
};

// State-contingent payoff in utility units.
struct Act {
  std::vector<double> utils;

  static Act constant(std::size_t n, double value) {
    return Act{std::vector<double>(n, value)};
  }
};

void validate_prior(const Prior& p, std::size_t dim, double tol = kNormTol);
void validate_alpha(double alpha);
void validate_lambda(double lambda);

// Updating rules. Rml contracts toward the maximum-likelihood face by alpha;
// alpha = 0 is full Bayesian, alpha = 1 is maximum likelihood.
struct FullBayes {};
struct MaxLikelihood {};
struct Rml {
  double alpha = 0.0;
};
struct ContingentRml {
  std::map<std::uint64_t, double> alpha_by_event;  // keyed by Event::bits
};
struct LikelihoodRatioRule {
  double lambda = 1.0;  // keep priors with p(E) >= lambda * max p(E)
};

using UpdateRule =
    std::variant<FullBayes, MaxLikelihood, Rml, ContingentRml, LikelihoodRatioRule>;

std::string rule_name(const UpdateRule& rule);

}  // namespace credal
