#include "credal/signals.hpp"

#include <algorithm>
#include <cmath>

namespace credal {

namespace {

// Cell order: (t1,s1), (t1,s2), (t2,s1), (t2,s2).
Prior mixture_prior(const SignalModel& m, double mu) {
  const double acc = device_accuracy(m, mu);
  Prior p;
  p.probs = {m.beta * acc, m.beta * (1.0 - acc), (1.0 - m.beta) * (1.0 - acc),
             (1.0 - m.beta) * acc};
  return p;
}

void require_signal_nonnull(const SignalModel& m, Signal s) {
  const double l0 = signal_likelihood(m, 0.0, s);
  const double l1 = signal_likelihood(m, 1.0, s);
  if (std::min(l0, l1) <= kNormTol) {
    throw NotStrictNonnull("signal has zero likelihood under some prior");
  }
}

}  // namespace

void validate_model(const SignalModel& m) {
  const bool in_range = m.beta >= 0.0 && m.beta <= 1.0 && m.lambda1 >= 0.0 &&
                        m.lambda1 <= 1.0 && m.lambda2 >= 0.0 && m.lambda2 <= 1.0;
  if (!in_range) throw BadModel("signal model parameters must lie in [0,1]");
  if (m.lambda1 < m.lambda2 - kNormTol) {
    throw BadModel("the first device must be at least as accurate");
  }
  if ((m.lambda1 + m.lambda2) / 2.0 < 0.5 - kNormTol) {
    throw BadModel("average accuracy must be at least one half");
  }
}

double device_accuracy(const SignalModel& m, double mu) {
  return mu * m.lambda1 + (1.0 - mu) * m.lambda2;
}

double signal_likelihood(const SignalModel& m, double mu, Signal s) {
  const double acc = device_accuracy(m, mu);
  return s == Signal::S1 ? m.beta * acc + (1.0 - m.beta) * (1.0 - acc)
                         : m.beta * (1.0 - acc) + (1.0 - m.beta) * acc;
}

double signal_posterior(const SignalModel& m, double mu, Signal s) {
  const double acc = device_accuracy(m, mu);
  const double like = signal_likelihood(m, mu, s);
  const double top = s == Signal::S1 ? m.beta * acc : m.beta * (1.0 - acc);
  return top / like;
}

std::pair<StateSpace, CredalSet> build_signal_credal(const SignalModel& m) {
  validate_model(m);
  StateSpace space({"t1*s1", "t1*s2", "t2*s1", "t2*s2"});
  std::vector<Prior> vertices = {mixture_prior(m, 0.0), mixture_prior(m, 1.0)};
  return {std::move(space), hull_reduce(std::move(vertices))};
}

Event signal_event(Signal s) {
  return s == Signal::S1 ? Event::of({0, 2}) : Event::of({1, 3});
}

std::pair<double, double> posterior_interval(const SignalModel& m, double alpha, Signal s) {
  validate_model(m);
  validate_alpha(alpha);
  require_signal_nonnull(m, s);

  // The signal's likelihood is affine in mu with slope (lambda1-lambda2)(2b-1)
  // for s1 and the negative for s2. The retained mixtures under the
  // alpha-contraction are the interval of mu closest to the maximizing end.
  const double slope_s1 = (m.lambda1 - m.lambda2) * (2.0 * m.beta - 1.0);
  const double slope = s == Signal::S1 ? slope_s1 : -slope_s1;

  double mu_lo = 0.0, mu_hi = 1.0;
  if (slope > kNormTol) {
    mu_lo = alpha;  // maximum likelihood at mu = 1
  } else if (slope < -kNormTol) {
    mu_hi = 1.0 - alpha;  // maximum likelihood at mu = 0
  }

  const double a = signal_posterior(m, mu_lo, s);
  const double b = signal_posterior(m, mu_hi, s);
  return {std::min(a, b), std::max(a, b)};
}

SignalTableRow signal_table_row(const SignalModel& m, double alpha, Signal s) {
  validate_model(m);
  validate_alpha(alpha);
  require_signal_nonnull(m, s);

  SignalTableRow row;
  const double slope_s1 = (m.lambda1 - m.lambda2) * (2.0 * m.beta - 1.0);
  const double slope = s == Signal::S1 ? slope_s1 : -slope_s1;
  if (slope > kNormTol) {
    row.ml_prior = MlPriorCase::MuOne;
  } else if (slope < -kNormTol) {
    row.ml_prior = MlPriorCase::MuZero;
  } else {
    row.ml_prior = MlPriorCase::All;
  }

  row.eval_f = posterior_interval(m, alpha, s).first;
  row.benchmark = signal_posterior(m, 0.5, s);  // average accuracy == mu = 1/2

  const double diff = row.eval_f - row.benchmark;
  if (diff > kAxiomTol) {
    row.comparison = Comparison::Higher;
  } else if (diff < -kAxiomTol) {
    row.comparison = Comparison::Lower;
  } else {
    row.comparison = Comparison::Equal;
  }
  return row;
}

}  // namespace credal
