#pragma once

#include <utility>

#include "credal/belief.hpp"

namespace credal {

// Two payoff states with a probabilistic marginal (beta on the first) and two
// signals whose correlation with the states is ambiguous: either device
// accuracy lambda1 or lambda2 generates the signals, and which one is unknown.
struct SignalModel {
  double beta = 0.5;
  double lambda1 = 0.5;
  double lambda2 = 0.5;
};

enum class Signal { S1, S2 };
enum class MlPriorCase { MuZero, MuOne, All };
enum class Comparison { Lower, Equal, Higher };

struct SignalTableRow {
  MlPriorCase ml_prior = MlPriorCase::All;
  double eval_f = 0.0;      // MEU of the bet on the first state, given the signal
  double benchmark = 0.0;   // Bayesian posterior at the average accuracy
  Comparison comparison = Comparison::Equal;
};

void validate_model(const SignalModel& m);

// Device-average accuracy at mixing weight mu on the first device.
double device_accuracy(const SignalModel& m, double mu);
// Total probability of the signal under the mu-mixture prior.
double signal_likelihood(const SignalModel& m, double mu, Signal s);
// Posterior of the first state after the signal, under the mu-mixture prior.
double signal_posterior(const SignalModel& m, double mu, Signal s);

// Four-cell product space (state x signal) with one credal vertex per device.
std::pair<StateSpace, CredalSet> build_signal_credal(const SignalModel& m);

// Conditioning event "signal s realized" in the four-cell space.
Event signal_event(Signal s);

// Interval of first-state posteriors across the priors retained by the
// alpha-contraction toward the signal's maximum-likelihood device mix.
std::pair<double, double> posterior_interval(const SignalModel& m, double alpha, Signal s);

SignalTableRow signal_table_row(const SignalModel& m, double alpha, Signal s);

}  // namespace credal
