#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fdepth/types.hpp"

namespace fdepth {

// Univariate halfspace (Tukey) depth by the counting formula
//   (1/n) * min{ #{i : x_i <= q}, #{i : x_i >= q} }.
// The result is a multiple of 1/n.
double halfspace_depth_1d(double query, std::span<const double> data);

// Exact bivariate halfspace depth: minimum fraction of data in any closed
// halfplane containing the query. Ties (points collinear with the query)
// are counted with closed halfplanes on both sides.
double halfspace_depth_2d(const double* query, const PointCloud& data);

// Random Tukey depth: minimum of univariate halfspace depths over
// direction_count random unit directions. Deterministic for a fixed seed,
// and always an upper bound of the exact halfspace depth.
double halfspace_depth_approx(std::span<const double> query, const PointCloud& data,
                              int direction_count, std::uint64_t seed);

// Mahalanobis depth 1/(1 + (q-mean)^T S^-1 (q-mean)) with moment estimates;
// the covariance divisor is n. A singular covariance is a hard error
// ("degenerate cloud"), never silently regularized.
double mahalanobis_depth(std::span<const double> query, const PointCloud& data);

// Zonoid depth: the largest alpha in (0,1] such that query is a convex
// combination of the data with all weights <= 1/(n*alpha); 0 outside the
// convex hull. Computed by linear programming (minimize the maximal weight).
double zonoid_depth(std::span<const double> query, const PointCloud& data);

// Univariate simplicial depth: fraction of the C(n,2) closed data intervals
// containing the query. Closed intervals; requires n >= 2.
double simplicial_depth_1d(double query, std::span<const double> data);

// Dispatch on MultivariateDepthKind. Halfspace uses the exact algorithms for
// d <= 2 and the random Tukey approximation otherwise. Simplicial supports
// d = 1 only.
double multivariate_depth(std::span<const double> query, const PointCloud& data,
                          const MultivariateDepthKind& kind);

}  // namespace fdepth
