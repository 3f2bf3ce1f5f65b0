#include "credal/persuasion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace credal {

namespace {

// Joint cell index for (state s, message m): state-major.
std::size_t cell(std::size_t s, std::size_t m, std::size_t num_messages) {
  return s * num_messages + m;
}

// Receiver's best action against a posterior credal set over states,
// sender-favorable ties. Returns the action index.
std::size_t best_action(const PersuasionGame& g, const CredalSet& posterior) {
  const std::size_t num_actions = g.actions.size();
  std::size_t best = 0;
  double best_recv = -std::numeric_limits<double>::infinity();
  double best_send = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < num_actions; ++a) {
    const double rv = meu_value(posterior, Act{g.receiver_payoff[a]});
    const double sv = meu_value(posterior, Act{g.sender_payoff[a]});
    const bool wins = rv > best_recv + kAxiomTol;
    const bool ties = std::abs(rv - best_recv) <= kAxiomTol;
    if (wins || (ties && sv > best_send)) {
      best = a;
      best_recv = std::max(best_recv, rv);
      best_send = sv;
    }
  }
  return best;
}

}  // namespace

void validate_game(const PersuasionGame& g) {
  const std::size_t n = g.states.size();
  validate_prior(g.prior, n);
  if (g.actions.empty()) throw BadModel("game needs at least one action");
  if (g.sender_payoff.size() != g.actions.size() ||
      g.receiver_payoff.size() != g.actions.size()) {
    throw DimensionMismatch("payoff matrices must have one row per action");
  }
  for (std::size_t a = 0; a < g.actions.size(); ++a) {
    if (g.sender_payoff[a].size() != n || g.receiver_payoff[a].size() != n) {
      throw DimensionMismatch("payoff rows must have one entry per state");
    }
  }
}

void validate_device(const AmbiguousDevice& d, const PersuasionGame& g) {
  if (d.kernels.empty()) throw BadModel("device needs at least one kernel");
  const std::size_t num_messages = d.messages.size();
  const std::size_t n = g.states.size();
  for (const auto& kernel : d.kernels) {
    if (kernel.size() != num_messages) {
      throw DimensionMismatch("kernel must have one row per message");
    }
    for (const auto& row : kernel) {
      if (row.size() != n) throw DimensionMismatch("kernel row must span the states");
    }
    for (std::size_t s = 0; s < n; ++s) {
      double col = 0.0;
      for (std::size_t m = 0; m < num_messages; ++m) {
        if (kernel[m][s] < -kNormTol) throw BadModel("kernel entries must be nonnegative");
        col += kernel[m][s];
      }
      if (std::abs(col - 1.0) > 1e-9) throw BadModel("kernel columns must sum to one");
    }
  }
}

PersuasionGame example_game() {
  PersuasionGame g{StateSpace({"w_l", "w_h"}),
                   Prior{{0.5, 0.5}},
                   {"a_l", "a_m", "a_h"},
                   {{-1.0, -1.0}, {0.0, 0.0}, {1.0, 1.0}},
                   {{3.0, -1.0}, {2.0, 2.0}, {-1.0, 3.0}}};
  return g;
}

AmbiguousDevice mirrored_ambiguous_device(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw BadLambda("device mix must lie in [0,1]");
  const double l = lambda;
  AmbiguousDevice d;
  d.messages = {"m_l", "m_l'", "m_h"};
  // rows: message, columns: (w_l, w_h)
  d.kernels = {
      {{2.0 / 3.0 * l, 0.0},
       {0.75 * (1.0 - l), 0.25 * (1.0 - l)},
       {l / 3.0 + 0.25 * (1.0 - l), l + 0.75 * (1.0 - l)}},
      {{0.75 * (1.0 - l), 0.25 * (1.0 - l)},
       {2.0 / 3.0 * l, 0.0},
       {l / 3.0 + 0.25 * (1.0 - l), l + 0.75 * (1.0 - l)}},
  };
  return d;
}

CredalSet device_prior_set(const PersuasionGame& g, const AmbiguousDevice& d) {
  validate_game(g);
  validate_device(d, g);
  const std::size_t n = g.states.size();
  const std::size_t num_messages = d.messages.size();
  std::vector<Prior> joints;
  joints.reserve(d.kernels.size());
  for (const auto& kernel : d.kernels) {
    Prior p;
    p.probs.assign(n * num_messages, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t m = 0; m < num_messages; ++m) {
        p.probs[cell(s, m, num_messages)] = g.prior.probs[s] * kernel[m][s];
      }
    }
    joints.push_back(std::move(p));
  }
  return hull_reduce(std::move(joints));
}

Event message_event(const PersuasionGame& g, const AmbiguousDevice& d, std::size_t msg) {
  if (msg >= d.messages.size()) throw UnknownName("message index out of range");
  Event e;
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    e.bits |= std::uint64_t{1} << cell(s, msg, d.messages.size());
  }
  return e;
}

std::vector<std::vector<double>> message_likelihoods(const AmbiguousDevice& d,
                                                     const PersuasionGame& g) {
  validate_game(g);
  validate_device(d, g);
  std::vector<std::vector<double>> out(d.kernels.size(),
                                       std::vector<double>(d.messages.size(), 0.0));
  for (std::size_t k = 0; k < d.kernels.size(); ++k) {
    for (std::size_t m = 0; m < d.messages.size(); ++m) {
      double s = 0.0;
      for (std::size_t w = 0; w < g.states.size(); ++w) {
        s += g.prior.probs[w] * d.kernels[k][m][w];
      }
      out[k][m] = s;
    }
  }
  return out;
}

bool is_uniform_likelihood(const AmbiguousDevice& d, const PersuasionGame& g) {
  const auto likes = message_likelihoods(d, g);
  for (std::size_t k = 1; k < likes.size(); ++k) {
    for (std::size_t m = 0; m < likes[k].size(); ++m) {
      if (std::abs(likes[k][m] - likes[0][m]) > kGeomTol * 10.0) return false;
    }
  }
  return true;
}

std::vector<CredalSet> message_posteriors(const PersuasionGame& g, const AmbiguousDevice& d,
                                          const UpdateRule& rule) {
  const CredalSet joint = device_prior_set(g, d);
  const std::size_t num_messages = d.messages.size();
  std::vector<CredalSet> out;
  out.reserve(num_messages);
  for (std::size_t m = 0; m < num_messages; ++m) {
    const CredalSet joint_post = update(joint, message_event(g, d, m), rule);
    // Project the joint posterior (supported on the message's cells) onto
    // the states.
    std::vector<Prior> margins;
    margins.reserve(joint_post.size());
    for (const auto& v : joint_post.vertices) {
      Prior p;
      p.probs.resize(g.states.size());
      for (std::size_t s = 0; s < g.states.size(); ++s) {
        p.probs[s] = v.probs[cell(s, m, num_messages)];
      }
      margins.push_back(std::move(p));
    }
    out.push_back(hull_reduce(std::move(margins)));
  }
  return out;
}

std::vector<std::size_t> receiver_response(const PersuasionGame& g, const AmbiguousDevice& d,
                                           const UpdateRule& rule) {
  const auto posteriors = message_posteriors(g, d, rule);
  std::vector<std::size_t> actions;
  actions.reserve(posteriors.size());
  for (const auto& post : posteriors) actions.push_back(best_action(g, post));
  return actions;
}

double sender_value(const PersuasionGame& g, const AmbiguousDevice& d, const UpdateRule& rule) {
  const auto actions = receiver_response(g, d, rule);
  double value = std::numeric_limits<double>::infinity();
  for (const auto& kernel : d.kernels) {
    double v = 0.0;
    for (std::size_t m = 0; m < d.messages.size(); ++m) {
      for (std::size_t s = 0; s < g.states.size(); ++s) {
        v += g.prior.probs[s] * kernel[m][s] * g.sender_payoff[actions[m]][s];
      }
    }
    value = std::min(value, v);
  }
  return value;
}

double bayesian_optimum(const PersuasionGame& g, std::size_t grid) {
  validate_game(g);
  if (g.states.size() != 2) throw NotTwoStates("concavification needs exactly two states");
  if (grid < 2) throw BadModel("grid too small");

  // Indirect sender payoff at every point posterior q = P(second state).
  const std::size_t points = grid + 1;
  std::vector<double> value(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double q = static_cast<double>(i) / static_cast<double>(grid);
    std::size_t best = 0;
    double best_recv = -std::numeric_limits<double>::infinity();
    double best_send = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < g.actions.size(); ++a) {
      const double rv = (1.0 - q) * g.receiver_payoff[a][0] + q * g.receiver_payoff[a][1];
      const double sv = (1.0 - q) * g.sender_payoff[a][0] + q * g.sender_payoff[a][1];
      const bool wins = rv > best_recv + kAxiomTol;
      const bool ties = std::abs(rv - best_recv) <= kAxiomTol;
      if (wins || (ties && sv > best_send)) {
        best = a;
        best_recv = std::max(best_recv, rv);
        best_send = sv;
      }
    }
    value[i] = (1.0 - q) * g.sender_payoff[best][0] + q * g.sender_payoff[best][1];
  }

  // Upper concave envelope via the upper hull of (q_i, value_i).
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < points; ++i) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull[hull.size() - 1];
      // cross((b-a), (i-a)) >= 0 means b is below the chord a-i.
      const double cross =
          (static_cast<double>(b) - static_cast<double>(a)) * (value[i] - value[a]) -
          (static_cast<double>(i) - static_cast<double>(a)) * (value[b] - value[a]);
      if (cross >= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }

  const double q0 = g.prior.probs[1];
  const double pos = q0 * static_cast<double>(grid);
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const double qa = static_cast<double>(hull[h]);
    const double qb = static_cast<double>(hull[h + 1]);
    if (pos >= qa - 1e-12 && pos <= qb + 1e-12) {
      const double t = qb > qa ? (pos - qa) / (qb - qa) : 0.0;
      return (1.0 - t) * value[hull[h]] + t * value[hull[h + 1]];
    }
  }
  return value[hull.back()];
}

}  // namespace credal
