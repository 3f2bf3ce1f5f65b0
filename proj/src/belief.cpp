#include "credal/belief.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "credal/lp.hpp"

namespace credal {

namespace {

bool lex_less(const Prior& a, const Prior& b) {
  return std::lexicographical_compare(a.probs.begin(), a.probs.end(), b.probs.begin(),
                                      b.probs.end());
}

bool close(const Prior& a, const Prior& b, double tol) {
  for (std::size_t i = 0; i < a.probs.size(); ++i) {
    if (std::abs(a.probs[i] - b.probs[i]) > tol) return false;
  }
  return true;
}

// Phase-1 infeasibility of "x is a convex combination of pts".
double hull_infeasibility(const std::vector<Prior>& pts, const Prior& x) {
  const std::size_t n = x.probs.size();
  const std::size_t m = pts.size();
  std::vector<std::vector<double>> a(n + 1, std::vector<double>(m, 0.0));
  std::vector<double> b(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = pts[j].probs[i];
    b[i] = x.probs[i];
  }
  for (std::size_t j = 0; j < m; ++j) a[n][j] = 1.0;
  b[n] = 1.0;
  return lp::infeasibility_eq(a, b);
}

bool in_hull_of(const std::vector<Prior>& pts, const Prior& x, double tol) {
  if (pts.empty()) return false;
  return hull_infeasibility(pts, x) <= std::max(tol, 1e-12) * 10.0;
}

void check_event(const CredalSet& c, Event e) {
  if (e.empty()) throw EmptyInput("conditioning event is empty");
  if (c.dim() < 64 && (e.bits >> c.dim()) != 0) {
    throw DimensionMismatch("event refers to states outside the space");
  }
}

}  // namespace

CredalSet hull_reduce(std::vector<Prior> points, double tol) {
  if (points.empty()) throw EmptyInput("hull_reduce needs at least one point");
  const std::size_t n = points.front().probs.size();
  for (const auto& p : points) validate_prior(p, n);

  std::sort(points.begin(), points.end(), lex_less);
  std::vector<Prior> kept;
  for (auto& p : points) {
    if (kept.empty() || !close(kept.back(), p, tol)) kept.push_back(std::move(p));
  }

  // Drop any point lying in the hull of the rest. Extreme points survive
  // every such test, so the scan order does not matter.
  for (std::size_t i = 0; i < kept.size() && kept.size() > 1;) {
    std::vector<Prior> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    if (in_hull_of(others, kept[i], tol)) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  std::sort(kept.begin(), kept.end(), lex_less);
  return CredalSet{std::move(kept), tol};
}

bool in_credal_hull(const CredalSet& c, const Prior& p) {
  return in_hull_of(c.vertices, p, c.tolerance);
}

bool sets_equal(const CredalSet& a, const CredalSet& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) return false;
  const double tol = std::max(a.tolerance, b.tolerance) * 100.0 + 1e-12;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!close(a.vertices[i], b.vertices[i], tol)) return false;
  }
  return true;
}

std::pair<double, double> event_prob_bounds(const CredalSet& c, Event e) {
  check_event(c, e);
  double lo = 1.0, hi = 0.0;
  for (const auto& v : c.vertices) {
    const double m = v.mass(e);
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  return {lo, hi};
}

bool strict_nonnull(const CredalSet& c, Event e) {
  return event_prob_bounds(c, e).first > kNormTol;
}

CredalSet max_likelihood_face(const CredalSet& c, Event e) {
  const double hi = event_prob_bounds(c, e).second;
  std::vector<Prior> face;
  for (const auto& v : c.vertices) {
    if (v.mass(e) >= hi - c.tolerance) face.push_back(v);
  }
  return CredalSet{std::move(face), c.tolerance};
}

CredalSet contract(const CredalSet& c, Event e, double alpha) {
  validate_alpha(alpha);
  check_event(c, e);
  const CredalSet face = max_likelihood_face(c, e);
  std::vector<Prior> mixed;
  mixed.reserve(face.size() * c.size());
  for (const auto& p : face.vertices) {
    for (const auto& q : c.vertices) {
      Prior m;
      m.probs.resize(c.dim());
      for (std::size_t i = 0; i < c.dim(); ++i) {
        m.probs[i] = alpha * p.probs[i] + (1.0 - alpha) * q.probs[i];
      }
      mixed.push_back(std::move(m));
    }
  }
  return hull_reduce(std::move(mixed), c.tolerance);
}

Prior bayes_update(const Prior& p, Event e, double tol) {
  const double pe = p.mass(e);
  if (pe <= tol) throw ZeroLikelihood("conditioning event has zero probability");
  Prior post;
  post.probs.assign(p.probs.size(), 0.0);
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    if (e.contains(i)) post.probs[i] = p.probs[i] / pe;
  }
  return post;
}

namespace {

CredalSet bayes_all(const std::vector<Prior>& priors, Event e, double tol) {
  std::vector<Prior> posts;
  posts.reserve(priors.size());
  for (const auto& p : priors) posts.push_back(bayes_update(p, e));
  return hull_reduce(std::move(posts), tol);
}

// Retained priors under the likelihood-ratio rule: the hull cut by the
// half-space p(E) >= cut. Inside vertices plus every straddling segment's
// crossing point span the cut polytope; hull_reduce trims the rest.
std::vector<Prior> likelihood_ratio_retained(const CredalSet& c, Event e, double lambda) {
  const auto [lo, hi] = event_prob_bounds(c, e);
  (void)lo;
  const double cut = lambda * hi;
  const double tol = c.tolerance;

  std::vector<Prior> pts;
  for (const auto& v : c.vertices) {
    if (v.mass(e) >= cut - tol) pts.push_back(v);
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double mi = c.vertices[i].mass(e);
    if (mi <= cut + tol) continue;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const double mj = c.vertices[j].mass(e);
      if (mj >= cut - tol) continue;
      const double t = (cut - mj) / (mi - mj);
      Prior w;
      w.probs.resize(c.dim());
      for (std::size_t k = 0; k < c.dim(); ++k) {
        w.probs[k] = (1.0 - t) * c.vertices[j].probs[k] + t * c.vertices[i].probs[k];
      }
      pts.push_back(std::move(w));
    }
  }
  return pts;
}

}  // namespace

CredalSet update(const CredalSet& c, Event e, const UpdateRule& rule) {
  check_event(c, e);
  const auto [lo, hi] = event_prob_bounds(c, e);

  struct Visitor {
    const CredalSet& c;
    Event e;
    double lo, hi;

    void require_strict() const {
      if (lo <= kNormTol) {
        throw NotStrictNonnull("event must have positive probability under every prior");
      }
    }
    void require_some() const {
      if (hi <= kNormTol) {
        throw NotStrictNonnull("event has zero probability under every prior");
      }
    }

    CredalSet operator()(const FullBayes&) const {
      require_strict();
      return bayes_all(c.vertices, e, c.tolerance);
    }
    CredalSet operator()(const MaxLikelihood&) const {
      require_some();
      return bayes_all(max_likelihood_face(c, e).vertices, e, c.tolerance);
    }
    CredalSet operator()(const Rml& r) const {
      validate_alpha(r.alpha);
      require_strict();
      return bayes_all(contract(c, e, r.alpha).vertices, e, c.tolerance);
    }
    CredalSet operator()(const ContingentRml& r) const {
      require_strict();
      const auto it = r.alpha_by_event.find(e.bits);
      if (it == r.alpha_by_event.end()) {
        throw MissingAlpha("no alpha mapped for the conditioning event");
      }
      validate_alpha(it->second);
      return bayes_all(contract(c, e, it->second).vertices, e, c.tolerance);
    }
    CredalSet operator()(const LikelihoodRatioRule& r) const {
      validate_lambda(r.lambda);
      require_some();
      auto retained = likelihood_ratio_retained(c, e, r.lambda);
      std::vector<Prior> posts;
      posts.reserve(retained.size());
      for (const auto& p : retained) posts.push_back(bayes_update(p, e));
      return hull_reduce(std::move(posts), c.tolerance);
    }
  };

  return std::visit(Visitor{c, e, lo, hi}, rule);
}

double meu_value(const CredalSet& c, const Act& f) {
  if (f.utils.size() != c.dim()) throw DimensionMismatch("act has wrong dimension");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : c.vertices) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.utils.size(); ++i) s += f.utils[i] * v.probs[i];
    best = std::min(best, s);
  }
  return best;
}

double conditional_ce(const CredalSet& c, Event e, const UpdateRule& rule, const Act& f) {
  return meu_value(update(c, e, rule), f);
}

Act splice(const Act& f, Event e, const Act& h) {
  if (f.utils.size() != h.utils.size()) throw DimensionMismatch("acts differ in dimension");
  Act out;
  out.utils.resize(f.utils.size());
  for (std::size_t i = 0; i < f.utils.size(); ++i) {
    out.utils[i] = e.contains(i) ? f.utils[i] : h.utils[i];
  }
  return out;
}

double event_dot(const Act& f, const Prior& p, Event e) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.utils.size(); ++i) {
    if (e.contains(i)) s += f.utils[i] * p.probs[i];
  }
  return s;
}

}  // namespace credal
