#pragma once

#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fdepth/multivariate.hpp"
#include "fdepth/sample.hpp"
#include "fdepth/types.hpp"

namespace fdepth {

// One "aspect": a linear evaluation taking a discretized function to a point
// in R^d (a time-point evaluation, a direction projection, a PC-score
// projection). Weight is used by the weighted depth variant.
struct Aspect {
  std::function<std::vector<double>(const GridFunction&)> map;
  std::string label;
  double weight = 1.0;
};

// A non-empty finite family of aspects sharing a common output dimension.
struct AspectSet {
  std::vector<Aspect> aspects;
  std::size_t out_dim = 1;

  void validate() const {
    if (aspects.empty()) throw DepthError("empty aspect set");
    for (const Aspect& a : aspects)
      if (!(a.weight > 0.0)) throw DepthError("aspect weight must be > 0");
  }
};

// Label for a time-point aspect: "t=" plus the %g-formatted grid value.
inline std::string time_label(double t) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "t=%g", t);
  return buf;
}

// Evaluation-at-time-point aspects for the given grid indices (graph setting).
AspectSet time_point_aspects(const FunctionalSample& cloud,
                             const std::vector<std::size_t>& indices);

struct PhiDepthResult {
  double value = 0.0;
  std::string argmin_label;  // first attaining aspect, in aspect order
};

// The generic Phi-depth: minimum over the finite aspect list of the d-variate
// depth of phi(query) in phi(cloud). Returns the argmin aspect label with the
// value.
PhiDepthResult phi_depth(const GridFunction& query, const FunctionalSample& cloud,
                         const AspectSet& aspects, const MultivariateDepthKind& kind);

// Weighted variant: min over aspects of w_phi * D^d. Reduces to phi_depth when
// all weights are 1. Values are reported unclamped; weights > 1 may push the
// result above 1.
PhiDepthResult weighted_phi_depth(const GridFunction& query, const FunctionalSample& cloud,
                                  const AspectSet& aspects, const MultivariateDepthKind& kind);

// True iff D^d(phi(query)|phi(cloud)) >= alpha for every aspect; by the
// level-set intersection identity this equals phi_depth >= alpha.
bool is_in_central_region(const GridFunction& query, const FunctionalSample& cloud,
                          const AspectSet& aspects, const MultivariateDepthKind& kind,
                          const LevelSpec& level);

// True iff every aspect gives depth 1, i.e. phi_depth(query) = 1.
bool deepest_condition(const GridFunction& query, const FunctionalSample& cloud,
                       const AspectSet& aspects, const MultivariateDepthKind& kind);

struct SurjectionProbe {
  std::size_t time_index = 0;
  std::vector<double> y;
  double target = 0.0;    // D^d(y | phi(X))
  double achieved = 0.0;  // phi_depth of the constructed witness
  bool pass = false;
};

struct SurjectionReport {
  std::vector<SurjectionProbe> probes;
  std::size_t pass_count = 0;
  bool all_pass() const { return pass_count == probes.size(); }
};

// Probes the surjection property for time-point aspect families: samples
// points y of cross-sectional depth >= alpha and searches for a witness
// function z with phi(z) = y and phi_depth(z) matching, constructed by
// planting y at the aspect's time point and a deepest envelope elsewhere.
// A failed probe means "no witness found by the construction".
SurjectionReport surjection_check(const FunctionalSample& cloud,
                                  const std::vector<std::size_t>& time_indices,
                                  const MultivariateDepthKind& kind, const LevelSpec& level,
                                  int probe_count, std::uint64_t seed);

}  // namespace fdepth
