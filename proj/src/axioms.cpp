#include "credal/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace credal {

namespace {

constexpr double kConclusionTol = 10.0 * kAxiomTol;

double unnormalized_face_min(const CredalSet& c, Event e, const Act& f) {
  const CredalSet face = max_likelihood_face(c, e);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& q : face.vertices) best = std::min(best, event_dot(f, q, e));
  return best;
}

double splice_value(const CredalSet& c, Event e, const Act& f, double off_event) {
  return meu_value(c, splice(f, e, Act::constant(c.dim(), off_event)));
}

Act shift(const Act& f, double delta) {
  Act out = f;
  for (double& v : out.utils) v += delta;
  return out;
}

// Affine map of f into [0, eps]; constant acts map to the zero act.
Act shrink_to(const Act& f, double eps) {
  const auto [mn, mx] = std::minmax_element(f.utils.begin(), f.utils.end());
  const double range = *mx - *mn;
  Act out = f;
  if (range <= 0.0) {
    std::fill(out.utils.begin(), out.utils.end(), 0.0);
    return out;
  }
  for (double& v : out.utils) v = (v - *mn) * (eps / range);
  return out;
}

std::vector<Act> make_acts(const CredalSet& c, const ActSampler& cfg) {
  std::vector<Act> acts;
  const std::size_t n = c.dim();
  // Box corners first: they exercise the extreme bets.
  if (n <= 5) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Act f;
      f.utils.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        f.utils[i] = (mask >> i) & 1u ? cfg.box_hi : cfg.box_lo;
      }
      acts.push_back(std::move(f));
    }
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> dist(cfg.box_lo, cfg.box_hi);
  while (acts.size() < std::max(cfg.count, std::size_t{1})) {
    Act f;
    f.utils.resize(n);
    for (double& v : f.utils) v = dist(rng);
    acts.push_back(std::move(f));
  }
  return acts;
}

std::vector<Event> strict_events(const CredalSet& c, const std::vector<Event>& events) {
  std::vector<Event> out;
  for (Event e : events) {
    if (!e.empty() && strict_nonnull(c, e)) out.push_back(e);
  }
  if (out.empty()) throw NotStrictNonnull("no strict-nonnull event to check against");
  return out;
}

bool is_constant_act(const Act& f) {
  const auto [mn, mx] = std::minmax_element(f.utils.begin(), f.utils.end());
  return *mx - *mn <= 1e-12;
}

struct Checker {
  const CredalSet& c;
  const UpdateRule& rule;
  const ActSampler& cfg;
  AxiomReport report;
  std::map<std::uint64_t, CredalSet> posterior_cache;

  const CredalSet& posterior(Event e) {
    auto it = posterior_cache.find(e.bits);
    if (it == posterior_cache.end()) {
      it = posterior_cache.emplace(e.bits, update(c, e, rule)).first;
    }
    return it->second;
  }

  double ce(Event e, const Act& f) { return meu_value(posterior(e), f); }

  void fail(AxiomWitness w) {
    if (report.passed) {
      report.passed = false;
      report.witness = std::move(w);
    }
  }

  bool conclude_equal(double lhs, double rhs, Event e, Event e2, const Act& f, const Act& g,
                      double x, double x_star, const std::string& note) {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    const double margin = std::abs(lhs - rhs);
    ++report.samples_tested;
    if (margin > kConclusionTol * scale) {
      fail(AxiomWitness{f, g, e, e2, x, x_star, lhs, rhs, margin, note});
      return false;
    }
    return true;
  }
};

void check_cr_c(Checker& ck, const std::vector<Event>& events, const std::vector<Act>& acts) {
  for (Event e : events) {
    for (const Act& f : acts) {
      const double x = ck.ce(e, f);
      const double lhs = splice_value(ck.c, e, f, x);
      if (!ck.conclude_equal(lhs, x, e, Event{}, f, Act::constant(ck.c.dim(), x), x, 0.0,
                             "U(f_E x) != u(x) for x ~ f given E")) {
        return;
      }
    }
  }
}

void check_cr_b(Checker& ck, const std::vector<Event>& events, const std::vector<Act>& acts) {
  if (!std::isfinite(ck.cfg.box_hi) || !(ck.cfg.box_hi > ck.cfg.box_lo)) {
    throw BoundedBoxRequired("CR-B needs a bounded act box");
  }
  const double x_star = ck.cfg.box_hi;
  for (Event e : events) {
    for (const Act& f : acts) {
      const double x = ck.ce(e, f);
      const double lhs = splice_value(ck.c, e, f, x_star);
      const double rhs = meu_value(ck.c, splice(Act::constant(ck.c.dim(), x), e,
                                                Act::constant(ck.c.dim(), x_star)));
      if (!ck.conclude_equal(lhs, rhs, e, Event{}, f, Act::constant(ck.c.dim(), x), x, x_star,
                             "U(f_E best) != U(x_E best)")) {
        return;
      }
    }
  }
}

void check_cr_s(Checker& ck, const std::vector<Event>& events, const std::vector<Act>& acts) {
  for (Event e : events) {
    for (const Act& f : acts) {
      const double x = ck.ce(e, f);
      const double xbar = sufficiently_good_threshold(ck.c, e, f).value;
      const double lhs = splice_value(ck.c, e, f, xbar);
      const double rhs = meu_value(
          ck.c, splice(Act::constant(ck.c.dim(), x), e, Act::constant(ck.c.dim(), xbar)));
      if (!ck.conclude_equal(lhs, rhs, e, Event{}, f, Act::constant(ck.c.dim(), x), x, xbar,
                             "U(f_E xbar) != U(x_E xbar)")) {
        return;
      }
    }
  }
}

void check_cr_uo(Checker& ck, const std::vector<Event>& events, const std::vector<Act>& acts) {
  for (Event e : events) {
    for (const Act& f : acts) {
      const double x = ck.ce(e, f);
      const double under = x - splice_value(ck.c, e, f, x);
      const double xbar = sufficiently_good_threshold(ck.c, e, f).value;
      const double lhs_good = splice_value(ck.c, e, f, xbar);
      const double rhs_good = meu_value(
          ck.c, splice(Act::constant(ck.c.dim(), x), e, Act::constant(ck.c.dim(), xbar)));
      const double over = lhs_good - rhs_good;
      const double scale = std::max({1.0, std::abs(x), std::abs(lhs_good)});
      ++ck.report.samples_tested;
      if (under < -kConclusionTol * scale || over < -kConclusionTol * scale) {
        ck.fail(AxiomWitness{f, Act{}, e, Event{}, x, xbar, under, over,
                             std::max(-under, -over), "undershoot or overshoot negative"});
        return;
      }
    }
  }
}

struct PairPremises {
  double res_ce = 0.0;
  double res_good = 0.0;
  double x = 0.0;
  double x_star = 0.0;
};

PairPremises pair_premises(Checker& ck, Event e, const Act& f, const Act& g) {
  PairPremises p;
  p.x = ck.ce(e, f);
  const double tf = sufficiently_good_threshold(ck.c, e, f).value;
  const double tg = sufficiently_good_threshold(ck.c, e, g).value;
  p.x_star = std::max(tf, tg) + 1.0;
  p.res_ce = std::abs(splice_value(ck.c, e, f, p.x) - splice_value(ck.c, e, g, p.x));
  p.res_good =
      std::abs(splice_value(ck.c, e, f, p.x_star) - splice_value(ck.c, e, g, p.x_star));
  return p;
}

enum class DcFlavor { CeOnly, GoodOnly, Both };

// Mix g0 with a constant act so that exactly the requested premise holds
// against f. The conditional-value premise is solved by bisection on the
// constant (the spliced value is increasing in it); the sufficiently-good
// premise reduces to matching unnormalized face integrals, a linear equation.
std::optional<std::pair<Act, Act>> make_single_premise_pair(Checker& ck, Event e, const Act& f,
                                                            const Act& g0, DcFlavor flavor) {
  const std::size_t n = ck.c.dim();
  const double hi = event_prob_bounds(ck.c, e).second;
  const auto mix = [&](double t) {
    Act g;
    g.utils.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.utils[i] = 0.5 * g0.utils[i] + 0.5 * t;
    return g;
  };

  if (flavor == DcFlavor::GoodOnly) {
    const double t =
        (unnormalized_face_min(ck.c, e, f) - 0.5 * unnormalized_face_min(ck.c, e, g0)) /
        (0.5 * hi);
    return std::make_pair(f, mix(t));
  }

  const double x = ck.ce(e, f);
  const double target = splice_value(ck.c, e, f, x);
  double lo = -1.0, hi_t = 1.0;
  const auto value_at = [&](double t) { return splice_value(ck.c, e, mix(t), x); };
  for (int guard = 0; guard < 200 && value_at(lo) > target; ++guard) lo = 2.0 * lo - 1.0;
  for (int guard = 0; guard < 200 && value_at(hi_t) < target; ++guard) hi_t = 2.0 * hi_t + 1.0;
  if (value_at(lo) > target || value_at(hi_t) < target) return std::nullopt;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi_t);
    (value_at(mid) <= target ? lo : hi_t) = mid;
  }
  return std::make_pair(f, mix(0.5 * (lo + hi_t)));
}

void check_dc(Checker& ck, const std::vector<Event>& events, const std::vector<Act>& acts,
              DcFlavor flavor, const std::string& name) {
  std::mt19937_64 rng(ck.cfg.seed + 17);
  std::uniform_int_distribution<std::size_t> pick(0, acts.size() - 1);

  const auto premises_hold = [&](const PairPremises& p) {
    const bool ce_ok = p.res_ce <= kAxiomTol;
    const bool good_ok = p.res_good <= kAxiomTol;
    switch (flavor) {
      case DcFlavor::CeOnly: return ce_ok;
      case DcFlavor::GoodOnly: return good_ok;
      default: return ce_ok && good_ok;
    }
  };

  const auto test_pair = [&](Event e, const Act& f, const Act& g,
                             const std::string& origin) -> bool {
    const PairPremises p = pair_premises(ck, e, f, g);
    ++ck.report.samples_tested;
    if (!premises_hold(p)) return true;
    const double ce_f = p.x;
    const double ce_g = ck.ce(e, g);
    if (std::abs(ce_g - ce_f) > kConclusionTol * std::max(1.0, std::abs(ce_f))) {
      ck.fail(AxiomWitness{f, g, e, Event{}, p.x, p.x_star, ce_g, ce_f, std::abs(ce_g - ce_f),
                           name + ": " + origin});
      return false;
    }
    return true;
  };

  for (Event e : events) {
    // Sampled pairs: the implication is tested only when the premises hold.
    for (std::size_t k = 0; k < ck.cfg.count; ++k) {
      if (!test_pair(e, acts[pick(rng)], acts[pick(rng)], "sampled premise pair")) return;
    }

    // Constructed pairs keep the check non-vacuous.
    std::size_t built = 0;
    for (std::size_t k = 0;
         k < 20 * ck.cfg.constructed_pairs && built < ck.cfg.constructed_pairs; ++k) {
      const Act& f = acts[pick(rng)];
      const Act& g = acts[pick(rng)];
      if (is_constant_act(f) || is_constant_act(g)) continue;
      if (flavor == DcFlavor::Both) {
        std::optional<DcCsPair> pair;
        try {
          pair = construct_dc_cs_pair(ck.c, e, f, g, 1.0, ck.rule);
        } catch (const CredalError&) {
          continue;
        }
        if (!pair) continue;
        ++built;
        if (!test_pair(e, pair->f, pair->g, "constructed premise pair")) return;
      } else {
        const auto pair = make_single_premise_pair(ck, e, f, g, flavor);
        if (!pair) continue;
        ++built;
        if (!test_pair(e, pair->first, pair->second, "constructed premise pair")) return;
      }
    }
  }
}

void check_ec(Checker& ck, const std::vector<Event>& events, const std::vector<Act>& acts) {
  if (events.size() < 2) throw EmptyInput("EC needs at least two events");
  std::mt19937_64 rng(ck.cfg.seed + 41);
  std::uniform_int_distribution<std::size_t> pick(0, acts.size() - 1);

  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t j = 0; j < events.size(); ++j) {
      if (i == j) continue;
      const Event e1 = events[i], e2 = events[j];
      const double hi1 = event_prob_bounds(ck.c, e1).second;
      const double hi2 = event_prob_bounds(ck.c, e2).second;
      if (hi2 < hi1 - 1e-12 || hi2 > 1.0 - 1e-9) continue;

      std::size_t built = 0;
      for (std::size_t k = 0;
           k < 20 * ck.cfg.constructed_pairs && built < ck.cfg.constructed_pairs; ++k) {
        const Act& f = acts[pick(rng)];
        const Act& g = acts[pick(rng)];
        if (is_constant_act(f) || is_constant_act(g)) continue;
        std::optional<EcPair> pair;
        try {
          pair = construct_ec_pair(ck.c, e1, e2, f, g, 1.0, ck.rule);
        } catch (const CredalError&) {
          continue;
        }
        if (!pair) continue;
        ++built;
        ++ck.report.samples_tested;
        if (pair->residual_ce > kAxiomTol || pair->residual_good > kAxiomTol ||
            pair->residual_calibration > kAxiomTol) {
          continue;  // construction missed its own premises; not evidence either way
        }
        const double ce_g = ck.ce(e2, pair->g);
        if (std::abs(ce_g - pair->x) > kConclusionTol * std::max(1.0, std::abs(pair->x))) {
          ck.fail(AxiomWitness{pair->f, pair->g, e1, e2, pair->x, pair->x1_star, ce_g, pair->x,
                               std::abs(ce_g - pair->x), "EC: constructed cross-event pair"});
          return;
        }
      }
    }
  }
}

void check_cr_basic(Checker& ck, const std::vector<Event>& events,
                    const std::vector<Act>& acts) {
  std::mt19937_64 rng(ck.cfg.seed + 7);
  std::uniform_int_distribution<std::size_t> pick(0, acts.size() - 1);
  for (Event e : events) {
    for (const Act& f : acts) {
      const double x = ck.ce(e, f);
      const Act& h = acts[pick(rng)];
      const double lhs = meu_value(ck.c, splice(f, e, h));
      const double rhs = meu_value(ck.c, splice(Act::constant(ck.c.dim(), x), e, h));
      if (!ck.conclude_equal(lhs, rhs, e, Event{}, f, h, x, 0.0,
                             "CR: f_E h vs x_E h for sampled h")) {
        return;
      }
    }
  }
}

void check_dc_basic(Checker& ck, const std::vector<Event>& events,
                    const std::vector<Act>& acts) {
  std::mt19937_64 rng(ck.cfg.seed + 11);
  std::uniform_int_distribution<std::size_t> pick(0, acts.size() - 1);
  for (Event e : events) {
    for (const Act& f : acts) {
      const Act& h = acts[pick(rng)];
      // Solve U(x_E h) = U(f_E h) for x; the premise then holds by
      // construction and the conclusion f ~_E x is tested directly.
      const double target = meu_value(ck.c, splice(f, e, h));
      double lo = ck.cfg.box_lo - 1.0, hi_x = ck.cfg.box_hi + 1.0;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi_x);
        const double v = meu_value(ck.c, splice(Act::constant(ck.c.dim(), mid), e, h));
        (v < target ? lo : hi_x) = mid;
      }
      const double x = 0.5 * (lo + hi_x);
      const double ce_f = ck.ce(e, f);
      if (!ck.conclude_equal(ce_f, x, e, Event{}, f, h, x, 0.0,
                             "DC: premise solved for x, conclusion f ~_E x")) {
        return;
      }
    }
  }
}

void check_approx_cr_s(Checker& ck, const std::vector<Event>& events,
                       const std::vector<Act>& acts) {
  const std::vector<double> eps_grid = {1.0, 0.1, 0.01};
  for (Event e : events) {
    const double hi = event_prob_bounds(ck.c, e).second;
    for (const Act& f : acts) {
      const double x = ck.ce(e, f);
      const double threshold = sufficiently_good_threshold(ck.c, e, f).value;
      const double face_int = unnormalized_face_min(ck.c, e, f);
      // Beyond the threshold U(f_E x*) - U(x_E x*) is constant.
      const double limit_gap = face_int - x * hi;
      for (double eps : eps_grid) {
        ++ck.report.samples_tested;
        if (std::abs(limit_gap) >= eps) {
          ck.fail(AxiomWitness{f, Act{}, e, Event{}, x, threshold, limit_gap, eps,
                               std::abs(limit_gap) - eps,
                               "APPROX-CR-S: comparisons fail beyond every threshold"});
          return;
        }
        // The two strict mixture comparisons at u(z) - u(w) = eps, sampled
        // above the eps-threshold.
        for (double bump : {0.0, 1.0, 10.0}) {
          const double x_star = threshold + bump;
          const double d = splice_value(ck.c, e, f, x_star) -
                           meu_value(ck.c, splice(Act::constant(ck.c.dim(), x), e,
                                                  Act::constant(ck.c.dim(), x_star)));
          if (!(d < eps) || !(d > -eps)) {
            ck.fail(AxiomWitness{f, Act{}, e, Event{}, x, x_star, d, eps, std::abs(d) - eps,
                                 "APPROX-CR-S: strict mixture comparison fails"});
            return;
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<std::string> known_axioms() {
  return {"CR",   "DC",   "CR-C",  "CR-B", "CR-S", "CR-UO",
          "DC-C", "DC-S", "DC-CS", "EC",   "APPROX-CR-S"};
}

AxiomReport check_axiom(const std::string& axiom, const CredalSet& c, const UpdateRule& rule,
                        const std::vector<Event>& events, const ActSampler& sampler) {
  Checker ck{c, rule, sampler, AxiomReport{axiom, true, 0, std::nullopt}, {}};
  const std::vector<Event> strict = strict_events(c, events);
  const std::vector<Act> acts = make_acts(c, sampler);

  if (axiom == "CR-C") {
    check_cr_c(ck, strict, acts);
  } else if (axiom == "CR-B") {
    check_cr_b(ck, strict, acts);
  } else if (axiom == "CR-S") {
    check_cr_s(ck, strict, acts);
  } else if (axiom == "CR-UO") {
    check_cr_uo(ck, strict, acts);
  } else if (axiom == "DC-C") {
    check_dc(ck, strict, acts, DcFlavor::CeOnly, "DC-C");
  } else if (axiom == "DC-S") {
    check_dc(ck, strict, acts, DcFlavor::GoodOnly, "DC-S");
  } else if (axiom == "DC-CS") {
    check_dc(ck, strict, acts, DcFlavor::Both, "DC-CS");
  } else if (axiom == "EC") {
    check_ec(ck, strict, acts);
  } else if (axiom == "CR") {
    check_cr_basic(ck, strict, acts);
  } else if (axiom == "DC") {
    check_dc_basic(ck, strict, acts);
  } else if (axiom == "APPROX-CR-S" || axiom == "Approximate CR-S") {
    check_approx_cr_s(ck, strict, acts);
  } else {
    throw UnknownAxiom("unknown axiom: " + axiom);
  }
  return ck.report;
}

std::optional<DcCsPair> construct_dc_cs_pair(const CredalSet& c, Event e, const Act& f,
                                             const Act& g, double eps, const UpdateRule& rule) {
  if (!strict_nonnull(c, e)) {
    throw NotStrictNonnull("event must have positive probability under every prior");
  }
  if (!(eps > 0.0)) throw BadModel("eps must be positive");
  const std::size_t n = c.dim();
  const double hi = event_prob_bounds(c, e).second;

  // Degenerate when g's conditional value cannot distinguish full-Bayesian
  // from maximum-likelihood updating.
  const double fb_g = conditional_ce(c, e, FullBayes{}, g);
  const double ml_g = conditional_ce(c, e, MaxLikelihood{}, g);
  if (std::abs(ml_g - fb_g) <= 1e-9 * std::max(1.0, std::abs(ml_g))) return std::nullopt;

  // Shift g so its face value is negative; mixing with constants leaves the
  // calibrated weight unchanged.
  const Act g2 = shift(g, -(ml_g + 1.0));
  const double face_int_g = unnormalized_face_min(c, e, g2);

  double min_term = std::numeric_limits<double>::infinity();
  for (const auto& p : c.vertices) {
    min_term = std::min(min_term, event_dot(g2, p, e) - (face_int_g / hi) * p.mass(e));
  }
  if (min_term >= 0.0) return std::nullopt;
  const double eps_eff = std::min(eps, 0.45 * (-min_term));

  const Act f_eps = shrink_to(f, eps_eff);
  const double x = conditional_ce(c, e, rule, f_eps);
  const double face_int_f = unnormalized_face_min(c, e, f_eps);
  const double lhs = splice_value(c, e, f_eps, x);

  // R(lambda): value of (lambda g2 + (1-lambda) y)_E x with (1-lambda) u(y)
  // pinned so both sides share the same face integral.
  const auto r_of = [&](double lam) {
    const double w = (face_int_f - lam * face_int_g) / hi;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : c.vertices) {
      const double pe = p.mass(e);
      best = std::min(best, lam * event_dot(g2, p, e) + w * pe + x * (1.0 - pe));
    }
    return best;
  };

  const double scale = std::max({1.0, std::abs(lhs), std::abs(min_term)});
  double lam_lo = 0.0, lam_hi = 1.0 - 1e-12;
  if (!(r_of(lam_lo) >= lhs - 1e-12 * scale) || !(r_of(lam_hi) < lhs)) {
    throw RootBracketFailure("sign conditions for the mixing weight fail");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lam_lo + lam_hi);
    (r_of(mid) >= lhs ? lam_lo : lam_hi) = mid;
  }
  const double lam = 0.5 * (lam_lo + lam_hi);
  if (1.0 - lam < 1e-9) throw RootBracketFailure("mixing weight degenerated to one");

  const double u_y = (face_int_f - lam * face_int_g) / (hi * (1.0 - lam));
  Act g_mix;
  g_mix.utils.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g_mix.utils[i] = lam * g2.utils[i] + (1.0 - lam) * u_y;
  }

  DcCsPair out{f_eps, g_mix, 0.0, 0.0, 0.0, 0.0};
  out.residual_ce = std::abs(splice_value(c, e, f_eps, x) - splice_value(c, e, g_mix, x));
  const double t1 = sufficiently_good_threshold(c, e, f_eps).value;
  const double t2 = sufficiently_good_threshold(c, e, g_mix).value;
  const double x_star = std::max(t1, t2) + 1.0;
  out.residual_good =
      std::abs(splice_value(c, e, f_eps, x_star) - splice_value(c, e, g_mix, x_star));
  out.alpha_f = alpha_from_preference(c, e, f_eps, x).alpha;
  out.alpha_g = alpha_from_preference(c, e, g_mix, conditional_ce(c, e, rule, g_mix)).alpha;
  return out;
}

std::optional<EcPair> construct_ec_pair(const CredalSet& c, Event e1, Event e2, const Act& f,
                                        const Act& g, double eps, const UpdateRule& rule) {
  if (!strict_nonnull(c, e1) || !strict_nonnull(c, e2)) {
    throw NotStrictNonnull("both events must be strict-nonnull");
  }
  if (!(eps > 0.0)) throw BadModel("eps must be positive");
  const std::size_t n = c.dim();
  const double hi1 = event_prob_bounds(c, e1).second;
  const double hi2 = event_prob_bounds(c, e2).second;
  if (hi2 < hi1 - 1e-12) throw BadModel("construction needs max p(e2) >= max p(e1)");
  if (hi2 > 1.0 - 1e-9) throw BadModel("max p(e2) must stay below one for calibration");

  const double fb_g = conditional_ce(c, e2, FullBayes{}, g);
  const double ml_g = conditional_ce(c, e2, MaxLikelihood{}, g);
  if (std::abs(ml_g - fb_g) <= 1e-9 * std::max(1.0, std::abs(ml_g))) return std::nullopt;

  const Act g2 = shift(g, -(ml_g + 1.0));
  const double face_int_g = unnormalized_face_min(c, e2, g2);

  double min_term = std::numeric_limits<double>::infinity();
  for (const auto& p : c.vertices) {
    min_term = std::min(min_term, event_dot(g2, p, e2) - (face_int_g / hi2) * p.mass(e2));
  }
  if (min_term >= 0.0) return std::nullopt;
  const double eps_eff = std::min(eps, 0.3 * (-min_term));

  const Act f_eps = shrink_to(f, eps_eff);
  const double x = conditional_ce(c, e1, rule, f_eps);
  const double face_int_f = unnormalized_face_min(c, e1, f_eps);
  const double big_m = x * (hi2 - hi1);
  const double lhs = splice_value(c, e1, f_eps, x);

  const auto r_of = [&](double lam) {
    const double w = (face_int_f + big_m - lam * face_int_g) / hi2;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : c.vertices) {
      const double pe = p.mass(e2);
      best = std::min(best, lam * event_dot(g2, p, e2) + w * pe + x * (1.0 - pe));
    }
    return best;
  };

  const double scale = std::max({1.0, std::abs(lhs), std::abs(min_term)});
  double lam_lo = 0.0, lam_hi = 1.0 - 1e-12;
  if (!(r_of(lam_lo) >= lhs - 1e-12 * scale) || !(r_of(lam_hi) < lhs)) {
    throw RootBracketFailure("sign conditions for the mixing weight fail");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lam_lo + lam_hi);
    (r_of(mid) >= lhs ? lam_lo : lam_hi) = mid;
  }
  const double lam = 0.5 * (lam_lo + lam_hi);
  if (1.0 - lam < 1e-9) throw RootBracketFailure("mixing weight degenerated to one");

  const double u_y = (face_int_f + big_m - lam * face_int_g) / (hi2 * (1.0 - lam));
  Act g_mix;
  g_mix.utils.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g_mix.utils[i] = lam * g2.utils[i] + (1.0 - lam) * u_y;
  }

  EcPair out;
  out.f = f_eps;
  out.g = g_mix;
  out.x = x;

  // Joint threshold over both events and acts, then the second good payoff
  // from the calibration identity x_E1 x1* ~ x_E2 x2*.
  double joint = std::max(sufficiently_good_threshold(c, e1, f_eps).value,
                          sufficiently_good_threshold(c, e2, g_mix).value);
  joint = std::max(joint, sufficiently_good_threshold(c, e2, f_eps).value);
  joint = std::max(joint, sufficiently_good_threshold(c, e1, g_mix).value);
  double x1s = joint + 1.0;
  double x2s = (x * (hi1 - hi2) + x1s * (1.0 - hi1)) / (1.0 - hi2);
  for (int guard = 0; guard < 64 && x2s < joint; ++guard) {
    x1s = 2.0 * x1s + 1.0;
    x2s = (x * (hi1 - hi2) + x1s * (1.0 - hi1)) / (1.0 - hi2);
  }
  out.x1_star = x1s;
  out.x2_star = x2s;

  out.residual_ce = std::abs(splice_value(c, e1, f_eps, x) - splice_value(c, e2, g_mix, x));
  out.residual_good =
      std::abs(splice_value(c, e1, f_eps, x1s) - splice_value(c, e2, g_mix, x2s));
  const double cal1 = x * hi1 + x1s * (1.0 - hi1);
  const double cal2 = x * hi2 + x2s * (1.0 - hi2);
  out.residual_calibration = std::abs(cal1 - cal2);
  return out;
}

bool rml_vs_lr_divergence(const CredalSet& c, Event e, double alpha, std::size_t grid) {
  validate_alpha(alpha);
  if (grid < 2) throw BadModel("grid too small");
  if (!strict_nonnull(c, e)) {
    throw NotStrictNonnull("event must have positive probability under every prior");
  }

  const CredalSet rml_post = update(c, e, Rml{alpha});
  const auto same_polytope = [](const CredalSet& a, const CredalSet& b) {
    for (const auto& v : a.vertices) {
      if (!in_credal_hull(b, v)) return false;
    }
    for (const auto& v : b.vertices) {
      if (!in_credal_hull(a, v)) return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < grid; ++i) {
    const double lambda = static_cast<double>(i) / static_cast<double>(grid - 1);
    const CredalSet lr_post = update(c, e, LikelihoodRatioRule{lambda});
    if (same_polytope(rml_post, lr_post)) return false;
  }
  return true;
}

}  // namespace credal
