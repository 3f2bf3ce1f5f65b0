#pragma once

#include <string>
#include <vector>

#include "credal/belief.hpp"

namespace credal {

// Sender commits to a signaling device; the receiver best-responds to the
// posterior after each message. Payoff matrices are action x state.
struct PersuasionGame {
  StateSpace states;
  Prior prior;
  std::vector<std::string> actions;
  std::vector<std::vector<double>> sender_payoff;
  std::vector<std::vector<double>> receiver_payoff;
};

// A set of probabilistic devices; which one generates the signals is unknown.
// kernels[k][m][s] = probability of message m in state s under device k.
struct AmbiguousDevice {
  std::vector<std::string> messages;
  std::vector<std::vector<std::vector<double>>> kernels;
};

void validate_game(const PersuasionGame& g);
void validate_device(const AmbiguousDevice& d, const PersuasionGame& g);

// Two-state, three-action game: the receiver wants to match the state, the
// sender always prefers the higher action.
PersuasionGame example_game();

// Two-kernel device over messages {m_l, m_l', m_h} in which the kernels swap
// the roles of the two low messages; the mix weight trades off how much mass
// the high message carries.
AmbiguousDevice mirrored_ambiguous_device(double lambda);

// Joint priors over state x message cells, one vertex per kernel.
CredalSet device_prior_set(const PersuasionGame& g, const AmbiguousDevice& d);

// Conditioning event "message m realized" in the joint space.
Event message_event(const PersuasionGame& g, const AmbiguousDevice& d, std::size_t msg);

// Total message probabilities, kernel x message.
std::vector<std::vector<double>> message_likelihoods(const AmbiguousDevice& d,
                                                     const PersuasionGame& g);

// All kernels induce the same total message probabilities, making every
// updating attitude behaviorally equivalent.
bool is_uniform_likelihood(const AmbiguousDevice& d, const PersuasionGame& g);

// Posterior credal set over states after each message.
std::vector<CredalSet> message_posteriors(const PersuasionGame& g, const AmbiguousDevice& d,
                                          const UpdateRule& rule);

// Receiver's action per message: maximize min expected payoff over the
// posterior set, ties broken in the sender's favor.
std::vector<std::size_t> receiver_response(const PersuasionGame& g, const AmbiguousDevice& d,
                                           const UpdateRule& rule);

// Sender's MEU over kernels of the expected payoff induced by the receiver's
// response.
double sender_value(const PersuasionGame& g, const AmbiguousDevice& d, const UpdateRule& rule);

// Bayesian-persuasion optimum for two-state games: grid concavification of
// the sender's indirect payoff over posteriors.
double bayesian_optimum(const PersuasionGame& g, std::size_t grid);

}  // namespace credal
