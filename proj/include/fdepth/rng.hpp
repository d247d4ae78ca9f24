#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fdepth {

// Seedable generator of uniform directions on the unit sphere in R^k
// (normalized standard Gaussian draws). All randomness in the library is
// derived from explicit seeds through this class.
class DirectionSampler {
 public:
  DirectionSampler(std::size_t dim, std::uint64_t seed) : dim_(dim), rng_(seed) {}

  std::vector<double> next() {
    std::vector<double> r(dim_);
    for (;;) {
      double norm2 = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) {
        r[i] = gauss_(rng_);
        norm2 += r[i] * r[i];
      }
      if (norm2 > 1e-24) {
        double inv = 1.0 / std::sqrt(norm2);
        for (double& v : r) v *= inv;
        return r;
      }
    }
  }

  // Gaussian perturbation of a base direction, renormalized. Used by the
  // adaptive direction-infimum refinement.
  std::vector<double> perturb(const std::vector<double>& base, double sigma) {
    std::vector<double> r(dim_);
    for (;;) {
      double norm2 = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) {
        r[i] = base[i] + sigma * gauss_(rng_);
        norm2 += r[i] * r[i];
      }
      if (norm2 > 1e-24) {
        double inv = 1.0 / std::sqrt(norm2);
        for (double& v : r) v *= inv;
        return r;
      }
    }
  }

 private:
  std::size_t dim_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

}  // namespace fdepth
