#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "credal/belief.hpp"
#include "credal/refine.hpp"

namespace credal {

// Act generator used by the checkers: uniform utilities inside a box,
// deterministic for a fixed seed. Corner acts of the box are probed first.
struct ActSampler {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  double box_lo = 0.0;
  double box_hi = 10.0;
  std::size_t constructed_pairs = 10;
};

struct AxiomWitness {
  Act f;
  Act g;
  Event event{};
  Event event2{};
  double x = 0.0;
  double x_star = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::string note;
};

struct AxiomReport {
  std::string axiom;
  bool passed = true;
  std::size_t samples_tested = 0;
  std::optional<AxiomWitness> witness;  // present iff passed == false
};

// Names accepted by check_axiom: CR, DC, CR-C, CR-B, CR-S, CR-UO, DC-C,
// DC-S, DC-CS, EC, APPROX-CR-S.
std::vector<std::string> known_axioms();

AxiomReport check_axiom(const std::string& axiom, const CredalSet& c, const UpdateRule& rule,
                        const std::vector<Event>& events, const ActSampler& sampler);

// A pair of acts satisfying both premises of DC-CS under `rule`, built by
// shrinking f into [0, eps] and mixing g with a constant act pinned by a
// root-find. nullopt when g's full-Bayesian and maximum-likelihood
// conditional values coincide (no construction is needed there).
struct DcCsPair {
  Act f;
  Act g;
  double residual_ce = 0.0;    // premise (i) residual
  double residual_good = 0.0;  // premise (ii) residual
  double alpha_f = 0.0;
  double alpha_g = 0.0;
};

std::optional<DcCsPair> construct_dc_cs_pair(const CredalSet& c, Event e, const Act& f,
                                             const Act& g, double eps, const UpdateRule& rule);

// Cross-event analogue used by the EC checker: the premises tie event e1 for
// f to event e2 for g. Requires max p(e2) >= max p(e1).
struct EcPair {
  Act f;
  Act g;
  double x = 0.0;
  double x1_star = 0.0;
  double x2_star = 0.0;
  double residual_ce = 0.0;
  double residual_good = 0.0;
  double residual_calibration = 0.0;
};

std::optional<EcPair> construct_ec_pair(const CredalSet& c, Event e1, Event e2, const Act& f,
                                        const Act& g, double eps, const UpdateRule& rule);

// True iff no cut level on the lambda grid makes the likelihood-ratio
// posterior set coincide with the alpha-contraction posterior set.
bool rml_vs_lr_divergence(const CredalSet& c, Event e, double alpha, std::size_t grid);

}  // namespace credal
