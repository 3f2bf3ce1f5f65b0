#pragma once

#include <utility>
#include <vector>

#include "credal/types.hpp"

namespace credal {

// Convex set of priors stored by its extreme points. Canonical form:
// hull-reduced (no vertex inside the hull of the others) and
// lexicographically sorted, so equal sets compare equal.
struct CredalSet {
  std::vector<Prior> vertices;
  double tolerance = kGeomTol;

  std::size_t dim() const { return vertices.empty() ? 0 : vertices.front().probs.size(); }
  std::size_t size() const { return vertices.size(); }
};

// Minimal extreme-point representation of the convex hull of `points`.
CredalSet hull_reduce(std::vector<Prior> points, double tol = kGeomTol);

// LP test: is p a convex combination of c's vertices (within c.tolerance)?
bool in_credal_hull(const CredalSet& c, const Prior& p);

// Canonical comparison of two hull-reduced sets.
bool sets_equal(const CredalSet& a, const CredalSet& b);

// (min, max) of p(E) over the set.
std::pair<double, double> event_prob_bounds(const CredalSet& c, Event e);

// Every prior gives E positive probability.
bool strict_nonnull(const CredalSet& c, Event e);

// Sub-set of vertices attaining the maximal probability of E.
CredalSet max_likelihood_face(const CredalSet& c, Event e);

// Linear contraction of c toward its maximum-likelihood face:
// all mixtures alpha*p + (1-alpha)*q, p in the face, q in c.
CredalSet contract(const CredalSet& c, Event e, double alpha);

// Bayes' rule for a single prior: renormalize on E, zero off E.
Prior bayes_update(const Prior& p, Event e, double tol = kNormTol);

// Posterior credal set under the given rule.
CredalSet update(const CredalSet& c, Event e, const UpdateRule& rule);

// min over the set of the expected utility of f.
double meu_value(const CredalSet& c, const Act& f);

// Utility of the constant act conditionally indifferent to f given E.
double conditional_ce(const CredalSet& c, Event e, const UpdateRule& rule, const Act& f);

// Act equal to f on E and to h off E.
Act splice(const Act& f, Event e, const Act& h);

// sum over states in E of f(w) * p(w).
double event_dot(const Act& f, const Prior& p, Event e);

}  // namespace credal
