#include "credal/refine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace credal {

namespace {

void require_strict(const CredalSet& c, Event e) {
  if (!strict_nonnull(c, e)) {
    throw NotStrictNonnull("event must have positive probability under every prior");
  }
}

// Unnormalized minimum of the E-part of f over the face vertices.
double face_event_min(const CredalSet& c, Event e, const Act& f) {
  const CredalSet face = max_likelihood_face(c, e);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& q : face.vertices) best = std::min(best, event_dot(f, q, e));
  return best;
}

}  // namespace

bool meu_minimizer_in_face(const CredalSet& c, Event e, const Act& f, double x_star) {
  const Act spliced = splice(f, e, Act::constant(c.dim(), x_star));
  const double global_min = meu_value(c, spliced);
  const double face_min = meu_value(max_likelihood_face(c, e), spliced);
  const double scale = std::max({1.0, std::abs(global_min), std::abs(face_min)});
  return face_min <= global_min + c.tolerance * scale * 10.0;
}

ThresholdResult sufficiently_good_threshold(const CredalSet& c, Event e, const Act& f) {
  require_strict(c, e);
  const auto [lo, hi] = event_prob_bounds(c, e);
  (void)lo;

  const double ml_ce = conditional_ce(c, e, MaxLikelihood{}, f);
  const double face_min = face_event_min(c, e, f);

  ThresholdResult out;
  out.value = ml_ce;

  double best_ratio = -std::numeric_limits<double>::infinity();
  std::optional<std::size_t> best_vertex;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double pe = c.vertices[i].mass(e);
    if (pe >= hi - c.tolerance) continue;  // face vertex
    const double ratio = (face_min - event_dot(f, c.vertices[i], e)) / (hi - pe);
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best_vertex = i;
    }
  }

  if (best_vertex && best_ratio >= ml_ce) {
    out.value = best_ratio;
    out.binding_vertex = best_vertex;
  }
  return out;
}

double shrink_threshold(const CredalSet& c, Event e, const Act& f, double u_max) {
  require_strict(c, e);
  if (!(u_max > 0.0)) throw BadModel("u_max must be positive");
  for (double v : f.utils) {
    if (v < -kNormTol || v > u_max + kNormTol) {
      throw BadModel("act utilities must lie in [0, u_max]");
    }
  }
  const auto [lo, hi] = event_prob_bounds(c, e);
  (void)lo;
  const double face_min = face_event_min(c, e, f);

  double k = 1.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double pe = c.vertices[i].mass(e);
    if (pe >= hi - c.tolerance) continue;
    const double num = face_min - event_dot(f, c.vertices[i], e);
    const double den = (hi - pe) * u_max;
    if (den <= 0.0) {
      throw UnboundedThreshold("no finite shrink factor separates the face");
    }
    k = std::max(k, num / den);
  }
  return k;
}

double mix_threshold(const CredalSet& c, Event e, const Act& f, double u_min, double u_max) {
  require_strict(c, e);
  if (!(u_min < u_max)) throw BadModel("u_min must be below u_max");
  for (double v : f.utils) {
    if (v < u_min - kNormTol || v > u_max + kNormTol) {
      throw BadModel("act utilities must lie in [u_min, u_max]");
    }
  }
  const auto [lo, hi] = event_prob_bounds(c, e);
  (void)lo;
  const double face_min = face_event_min(c, e, f);

  // The face keeps the minimum iff, for every non-face vertex p,
  //   lam * [face_min - I_p - (hi - p(E)) u_min] <= (hi - p(E)) (u_max - u_min).
  double lam = 1.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double pe = c.vertices[i].mass(e);
    if (pe >= hi - c.tolerance) continue;
    const double d = hi - pe;
    const double coeff = face_min - event_dot(f, c.vertices[i], e) - d * u_min;
    if (coeff <= 0.0) continue;
    lam = std::min(lam, d * (u_max - u_min) / coeff);
  }
  return lam;
}

AlphaEstimate alpha_from_preference(const CredalSet& c, Event e, const Act& f,
                                    double cond_value) {
  require_strict(c, e);
  const auto [lo, hi] = event_prob_bounds(c, e);
  (void)lo;
  const std::size_t n = c.dim();

  const double x = cond_value;
  // Any payoff above the threshold gives the same alpha; the common
  // (1 - p*(E)) u(x*) terms cancel in the overshoot.
  const double x_star = sufficiently_good_threshold(c, e, f).value + 1.0;

  const double u_fx = meu_value(c, splice(f, e, Act::constant(n, x)));
  const double u_fxs = meu_value(c, splice(f, e, Act::constant(n, x_star)));
  const double u_xxs = x * hi + x_star * (1.0 - hi);

  AlphaEstimate est;
  est.undershoot = x - u_fx;
  est.overshoot = u_fxs - u_xxs;

  const double scale = std::max({1.0, std::abs(x), std::abs(u_fxs)});
  const double tol = kAxiomTol * scale;
  if (est.undershoot < -tol || est.overshoot < -tol) {
    throw InconsistentData("conditional value is not rationalizable by any contraction");
  }
  est.undershoot = std::max(est.undershoot, 0.0);
  est.overshoot = std::max(est.overshoot, 0.0);

  const double total = est.undershoot + est.overshoot;
  if (total > c.tolerance * scale) {
    est.unique = true;
    est.alpha = std::clamp(est.undershoot / total, 0.0, 1.0);
  } else {
    est.unique = false;
    est.alpha = 0.0;
  }
  return est;
}

}  // namespace credal
