#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fdepth/types.hpp"

namespace fdepth {

// A single function observed on a grid of k time points, d-variate values.
// Stored row-major by time: values[j*dim + c] = x_c(t_j).
struct GridFunction {
  std::size_t dim = 1;
  std::vector<double> values;  // k * dim

  std::size_t grid_size() const { return dim == 0 ? 0 : values.size() / dim; }
  double at(std::size_t j, std::size_t c = 0) const { return values[j * dim + c]; }
  double& at(std::size_t j, std::size_t c = 0) { return values[j * dim + c]; }
};

// n functions observed as d-variate values on a shared, strictly increasing
// grid of k time points.
struct FunctionalSample {
  std::vector<double> grid;        // k, strictly increasing
  std::size_t dim = 1;             // d
  std::vector<std::string> ids;    // n
  std::vector<double> values;      // n * k * dim

  std::size_t grid_size() const { return grid.size(); }
  std::size_t size() const { return ids.size(); }
  double at(std::size_t i, std::size_t j, std::size_t c = 0) const {
    return values[(i * grid.size() + j) * dim + c];
  }
  double& at(std::size_t i, std::size_t j, std::size_t c = 0) {
    return values[(i * grid.size() + j) * dim + c];
  }

  GridFunction function(std::size_t i) const {
    GridFunction f;
    f.dim = dim;
    f.values.assign(values.begin() + static_cast<std::ptrdiff_t>(i * grid.size() * dim),
                    values.begin() + static_cast<std::ptrdiff_t>((i + 1) * grid.size() * dim));
    return f;
  }

  // Cross-sectional point cloud at grid index j.
  PointCloud cross_section(std::size_t j) const {
    PointCloud pc;
    pc.dim = dim;
    pc.coords.reserve(size() * dim);
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t c = 0; c < dim; ++c) pc.coords.push_back(at(i, j, c));
    return pc;
  }

  // Sample with function i removed (leave-one-out reference cloud).
  FunctionalSample without(std::size_t i) const;

  void validate() const;
};

// First-derivative estimates, same shape contract as a d=1 sample.
struct DerivativeSample {
  std::vector<double> grid;
  std::vector<std::string> ids;
  std::vector<double> values;  // n * k
};

// A depth level alpha in (0, 1].
struct LevelSpec {
  double alpha;
  explicit LevelSpec(double a) : alpha(a) {
    if (!(a > 0.0) || a > 1.0) throw DepthError("alpha must be in (0, 1]");
  }
};

}  // namespace fdepth
