#pragma once

#include <optional>

#include "credal/belief.hpp"

namespace credal {

// Threshold for sufficiently good consequences: any payoff at or above
// `value` on the complement of E forces the MEU minimizer of the spliced
// act into the maximum-likelihood face. `binding_vertex` indexes the
// non-face vertex whose ratio binds, when one does.
struct ThresholdResult {
  double value = 0.0;
  std::optional<std::size_t> binding_vertex;
};

// Calibration of the contraction weight from one conditional certainty
// equivalent. alpha = undershoot / (undershoot + overshoot) when the sum is
// positive; otherwise every alpha in [0,1] is consistent and unique=false.
struct AlphaEstimate {
  double alpha = 0.0;
  bool unique = false;
  double undershoot = 0.0;
  double overshoot = 0.0;
};

ThresholdResult sufficiently_good_threshold(const CredalSet& c, Event e, const Act& f);

// Smallest K >= 1 such that f/K spliced with the constant u_max off E is
// MEU-minimized in the maximum-likelihood face. Utilities of f must lie in
// [0, u_max].
double shrink_threshold(const CredalSet& c, Event e, const Act& f, double u_max);

// Largest mix weight in (0,1] such that lam*(f on E, u_max off E) +
// (1-lam)*(u_min on E, u_max off E) is MEU-minimized in the face.
double mix_threshold(const CredalSet& c, Event e, const Act& f, double u_min, double u_max);

AlphaEstimate alpha_from_preference(const CredalSet& c, Event e, const Act& f,
                                    double cond_value);

// True when the minimal MEU value of (f on E, x_star off E) is attained at a
// face vertex.
bool meu_minimizer_in_face(const CredalSet& c, Event e, const Act& f, double x_star);

}  // namespace credal
