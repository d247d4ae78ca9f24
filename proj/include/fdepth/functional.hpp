#pragma once

#include <cstdint>
#include <vector>

#include "fdepth/phi.hpp"
#include "fdepth/sample.hpp"
#include "fdepth/types.hpp"

namespace fdepth {

// All grid indices 0..k-1.
std::vector<std::size_t> full_subset(const FunctionalSample& cloud);

// Graph depth: minimum over t in the subset of the d-variate depth of
// query(t) in the pointwise cloud. Returns the value and the argmin time
// label.
PhiDepthResult graph_depth(const GridFunction& query, const FunctionalSample& cloud,
                           const std::vector<std::size_t>& subset,
                           const MultivariateDepthKind& kind);

// Halfgraph depth: graph depth with d = 1 and the univariate halfspace depth.
// The value is a multiple of 1/n.
PhiDepthResult halfgraph_depth(const GridFunction& query, const FunctionalSample& cloud,
                               const std::vector<std::size_t>& subset);

// Band depth: graph depth with the univariate simplicial depth underneath.
// Monotonicity on rays (FD4) is not guaranteed for this depth.
PhiDepthResult band_depth(const GridFunction& query, const FunctionalSample& cloud,
                          const std::vector<std::size_t>& subset);

// Central differences at interior points, first-order one-sided differences
// at the endpoints. Exact for affine functions; requires k >= 3 and d = 1.
std::vector<double> estimate_derivative(const std::vector<double>& grid,
                                        const std::vector<double>& values);
DerivativeSample estimate_derivative(const FunctionalSample& cloud);

// Location-slope depth: minimum over t of the bivariate depth of the
// (value, slope) pair, slopes estimated by the same difference scheme for
// query and cloud. Requires d = 1 and a bivariate-capable depth kind.
PhiDepthResult location_slope_depth(const GridFunction& query, const FunctionalSample& cloud,
                                    const std::vector<std::size_t>& subset,
                                    const MultivariateDepthKind& kind);

// Grid depth with an explicit list of unit directions in R^k' (k' = number of
// selected grid indices). Deterministic; used directly by tests that need
// mirrored direction sets.
PhiDepthResult grid_depth_with_directions(const GridFunction& query,
                                          const FunctionalSample& cloud,
                                          const std::vector<std::size_t>& grid_points,
                                          const std::vector<std::vector<double>>& directions,
                                          const MultivariateDepthKind& kind);

// Grid depth: minimum over sampled unit directions r of the d-variate depth
// of the projections <r, z(t)> against the projected data. Directions are
// sampled in antithetic pairs from the given seed. The sampled minimum is an
// upper bound of the infimum over the whole sphere.
PhiDepthResult grid_depth(const GridFunction& query, const FunctionalSample& cloud,
                          const std::vector<std::size_t>& grid_points, int direction_count,
                          std::uint64_t seed, const MultivariateDepthKind& kind);

}  // namespace fdepth
