#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fdepth/sample.hpp"
#include "fdepth/types.hpp"

namespace fdepth {

struct Interval {
  double lo = 0.0, hi = 0.0;
  bool empty = true;
};

// Closed halfplane u . y <= offset.
struct Halfplane {
  double ux = 0.0, uy = 0.0, offset = 0.0;
};

struct ConvexPolygon {
  std::vector<std::array<double, 2>> vertices;  // counterclockwise
  std::vector<Halfplane> halfplanes;            // defining constraints
  bool empty = true;
};

// Per-time-point representation of the alpha central region of a graph depth
// via the level-set intersection identity: a grid function belongs to the
// region iff its value lies in the cross-sectional region at every selected
// time point.
struct CentralRegionEnvelope {
  double alpha = 0.0;
  std::vector<std::size_t> time_indices;
  std::vector<Interval> intervals;       // d = 1
  std::vector<ConvexPolygon> polygons;   // d = 2
  bool region_empty = false;
  std::optional<std::size_t> first_empty_index;  // offending grid index, if empty

  bool contains(const GridFunction& f, double tol = 1e-9) const;
};

// Cross-sectional alpha regions, exact per depth kind:
//  - halfspace d=1 from order statistics, d=2 from the critical-direction
//    halfplane arrangement,
//  - Mahalanobis d=1 analytically from the quadratic form,
//  - zonoid d=1 from the greedy support construction.
CentralRegionEnvelope region_envelope(const FunctionalSample& cloud,
                                      const std::vector<std::size_t>& subset,
                                      const MultivariateDepthKind& kind, double alpha);

// Depths of all sample functions (leave-in); returns the argmax set with ties.
struct DeepestEntry {
  std::string id;
  double depth;
};
std::vector<DeepestEntry> deepest_functions(const FunctionalSample& cloud,
                                            const std::vector<std::size_t>& subset,
                                            const MultivariateDepthKind& kind);

// Sample functions with depth < alpha, sorted ascending by depth (ties by id).
struct OutlierReport {
  double alpha = 0.0;
  std::vector<DeepestEntry> entries;
};
OutlierReport classify_outliers(const FunctionalSample& cloud,
                                const std::vector<std::size_t>& subset,
                                const MultivariateDepthKind& kind, double alpha,
                                bool leave_one_out = false);

// Exposed for tests: exact cross-sectional regions.
Interval halfspace_interval_1d(std::vector<double> column, double alpha);
Interval mahalanobis_interval_1d(const std::vector<double>& column, double alpha);
Interval zonoid_interval_1d(std::vector<double> column, double alpha);
ConvexPolygon halfspace_contour_2d(const PointCloud& points, double alpha);

}  // namespace fdepth
