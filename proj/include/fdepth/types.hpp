#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdepth {

// Thrown when an input violates a documented precondition (bad dimensions,
// empty clouds, singular covariance, ...).
class DepthError : public std::runtime_error {
 public:
  explicit DepthError(const std::string& what) : std::runtime_error(what) {}
};

// A cloud of n points in R^d, stored row-major.
struct PointCloud {
  std::size_t dim = 0;
  std::vector<double> coords;  // n * dim

  PointCloud() = default;
  PointCloud(std::size_t d, std::vector<double> c) : dim(d), coords(std::move(c)) {}

  std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
  const double* point(std::size_t i) const { return coords.data() + i * dim; }
  double at(std::size_t i, std::size_t c) const { return coords[i * dim + c]; }

  void push_back(const std::vector<double>& p) {
    if (p.size() != dim) throw DepthError("point dimension mismatch");
    coords.insert(coords.end(), p.begin(), p.end());
  }

  // n >= 1, all coordinates finite.
  void validate() const {
    if (dim == 0 || coords.empty() || coords.size() % dim != 0)
      throw DepthError("empty cloud");
    for (double v : coords)
      if (!std::isfinite(v)) throw DepthError("non-finite coordinate in cloud");
  }
};

enum class DepthFamily { halfspace, mahalanobis, zonoid, simplicial };

// Selector for the underlying d-variate depth plus its parameters.
// direction_count and seed are used only by the approximate halfspace
// depth (d >= 3). The covariance divisor for Mahalanobis is fixed to n.
struct MultivariateDepthKind {
  DepthFamily family = DepthFamily::halfspace;
  int direction_count = 1000;
  std::uint64_t seed = 0;
};

inline const char* family_name(DepthFamily f) {
  switch (f) {
    case DepthFamily::halfspace: return "halfspace";
    case DepthFamily::mahalanobis: return "mahalanobis";
    case DepthFamily::zonoid: return "zonoid";
    case DepthFamily::simplicial: return "simplicial";
  }
  return "?";
}

}  // namespace fdepth
