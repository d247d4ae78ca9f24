#pragma once

#include <cstdint>
#include <vector>

#include "fdepth/phi.hpp"
#include "fdepth/sample.hpp"
#include "fdepth/types.hpp"

namespace fdepth {

// Functional PCA of a sample under trapezoidal grid weights. Components are
// orthonormal in the weighted discrete inner product; scores are taken about
// the mean curve (sample score columns have zero mean). Sign convention:
// each component's entry of largest absolute value is positive.
struct PcaModel {
  std::vector<double> mean;                     // k * d
  std::vector<std::vector<double>> components;  // m x (k * d)
  std::vector<double> eigenvalues;              // m, non-increasing
  std::vector<std::vector<double>> scores;      // n x m
  std::vector<double> weights;                  // k * d (trapezoid, replicated per coord)
  std::size_t dim = 1;
  std::size_t grid_size = 0;

  // Score vector gamma(f) of an arbitrary function on the model's grid.
  std::vector<double> score(const GridFunction& f) const;
};

// Eigendecomposition of the discrete covariance operator of the centered
// sample. Requires 1 <= m <= min(n-1, k*d) and n >= 2.
PcaModel fit_pca(const FunctionalSample& cloud, std::size_t m);

// Principal-component depth: minimum over sampled unit directions in R^m of
// the univariate depth of <r, gamma(query)> against the projected sample
// scores. The data-dependent aspect family is fitted on the cloud. The
// sampled minimum is refined by adaptive resampling around the best
// direction; it remains an upper bound of the infimum over the sphere and is
// deterministic for a fixed seed.
PhiDepthResult pc_depth(const GridFunction& query, const FunctionalSample& cloud,
                        std::size_t m, int direction_count, std::uint64_t seed,
                        const MultivariateDepthKind& kind_1d);

// Same, reusing an already fitted model (the model must come from the cloud).
PhiDepthResult pc_depth(const GridFunction& query, const PcaModel& model,
                        int direction_count, std::uint64_t seed,
                        const MultivariateDepthKind& kind_1d);

}  // namespace fdepth
