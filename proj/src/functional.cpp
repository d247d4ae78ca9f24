#include "fdepth/functional.hpp"

#include <algorithm>
#include <cmath>

#include "fdepth/multivariate.hpp"
#include "fdepth/rng.hpp"

namespace fdepth {

std::vector<std::size_t> full_subset(const FunctionalSample& cloud) {
  std::vector<std::size_t> idx(cloud.grid_size());
  for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
  return idx;
}

PhiDepthResult graph_depth(const GridFunction& query, const FunctionalSample& cloud,
                           const std::vector<std::size_t>& subset,
                           const MultivariateDepthKind& kind) {
  return phi_depth(query, cloud, time_point_aspects(cloud, subset), kind);
}

PhiDepthResult halfgraph_depth(const GridFunction& query, const FunctionalSample& cloud,
                               const std::vector<std::size_t>& subset) {
  if (cloud.dim != 1) throw DepthError("halfgraph depth requires d = 1");
  MultivariateDepthKind kind;
  kind.family = DepthFamily::halfspace;
  return graph_depth(query, cloud, subset, kind);
}

PhiDepthResult band_depth(const GridFunction& query, const FunctionalSample& cloud,
                          const std::vector<std::size_t>& subset) {
  if (cloud.dim != 1) throw DepthError("band depth requires d = 1");
  if (cloud.size() < 2) throw DepthError("band depth needs n >= 2");
  MultivariateDepthKind kind;
  kind.family = DepthFamily::simplicial;
  return graph_depth(query, cloud, subset, kind);
}

std::vector<double> estimate_derivative(const std::vector<double>& grid,
                                        const std::vector<double>& values) {
  const std::size_t k = grid.size();
  if (k < 3) throw DepthError("derivative estimation needs k >= 3");
  if (values.size() != k) throw DepthError("value/grid length mismatch");
  std::vector<double> out(k);
  out[0] = (values[1] - values[0]) / (grid[1] - grid[0]);
  for (std::size_t j = 1; j + 1 < k; ++j)
    out[j] = (values[j + 1] - values[j - 1]) / (grid[j + 1] - grid[j - 1]);
  out[k - 1] = (values[k - 1] - values[k - 2]) / (grid[k - 1] - grid[k - 2]);
  return out;
}

DerivativeSample estimate_derivative(const FunctionalSample& cloud) {
  cloud.validate();
  if (cloud.dim != 1) throw DepthError("derivative estimation requires d = 1");
  DerivativeSample out;
  out.grid = cloud.grid;
  out.ids = cloud.ids;
  out.values.reserve(cloud.size() * cloud.grid_size());
  std::vector<double> row(cloud.grid_size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t j = 0; j < cloud.grid_size(); ++j) row[j] = cloud.at(i, j);
    std::vector<double> d = estimate_derivative(cloud.grid, row);
    out.values.insert(out.values.end(), d.begin(), d.end());
  }
  return out;
}

PhiDepthResult location_slope_depth(const GridFunction& query, const FunctionalSample& cloud,
                                    const std::vector<std::size_t>& subset,
                                    const MultivariateDepthKind& kind) {
  cloud.validate();
  if (cloud.dim != 1 || query.dim != 1) throw DepthError("location-slope depth requires d = 1");
  if (query.grid_size() != cloud.grid_size())
    throw DepthError("grid mismatch between query and cloud");
  if (subset.empty()) throw DepthError("empty time-index subset");
  if (kind.family == DepthFamily::simplicial)
    throw DepthError("location-slope depth needs a bivariate-capable depth kind");

  const std::size_t n = cloud.size();
  const std::size_t k = cloud.grid_size();
  DerivativeSample slopes = estimate_derivative(cloud);
  std::vector<double> qslope = estimate_derivative(cloud.grid, query.values);

  PhiDepthResult res;
  bool first = true;
  for (std::size_t j : subset) {
    if (j >= k) throw DepthError("time index out of range");
    PointCloud pc;
    pc.dim = 2;
    pc.coords.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      pc.coords.push_back(cloud.at(i, j));
      pc.coords.push_back(slopes.values[i * k + j]);
    }
    std::vector<double> q{query.at(j), qslope[j]};
    double v = multivariate_depth(q, pc, kind);
    if (first || v < res.value) {
      res.value = v;
      res.argmin_label = time_label(cloud.grid[j]);
      first = false;
    }
  }
  return res;
}

namespace {

double projected_depth(const GridFunction& query, const FunctionalSample& cloud,
                       const std::vector<std::size_t>& grid_points,
                       const std::vector<double>& r, const MultivariateDepthKind& kind) {
  const std::size_t n = cloud.size();
  const std::size_t d = cloud.dim;
  std::vector<double> q(d, 0.0);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t a = 0; a < grid_points.size(); ++a)
      q[c] += r[a] * query.at(grid_points[a], c);
  PointCloud pc;
  pc.dim = d;
  pc.coords.assign(n * d, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c) {
      double s = 0.0;
      for (std::size_t a = 0; a < grid_points.size(); ++a)
        s += r[a] * cloud.at(i, grid_points[a], c);
      pc.coords[i * d + c] = s;
    }
  return multivariate_depth(q, pc, kind);
}

}  // namespace

PhiDepthResult grid_depth_with_directions(const GridFunction& query,
                                          const FunctionalSample& cloud,
                                          const std::vector<std::size_t>& grid_points,
                                          const std::vector<std::vector<double>>& directions,
                                          const MultivariateDepthKind& kind) {
  cloud.validate();
  if (query.dim != cloud.dim || query.grid_size() != cloud.grid_size())
    throw DepthError("grid mismatch between query and cloud");
  if (grid_points.empty()) throw DepthError("empty grid-point selection");
  for (std::size_t j : grid_points)
    if (j >= cloud.grid_size()) throw DepthError("time index out of range");
  if (directions.empty()) throw DepthError("no directions given");

  PhiDepthResult res;
  bool first = true;
  for (std::size_t idx = 0; idx < directions.size(); ++idx) {
    const std::vector<double>& r = directions[idx];
    if (r.size() != grid_points.size()) throw DepthError("direction dimension mismatch");
    double v = projected_depth(query, cloud, grid_points, r, kind);
    if (first || v < res.value) {
      res.value = v;
      res.argmin_label = "dir=" + std::to_string(idx);
      first = false;
    }
  }
  return res;
}

PhiDepthResult grid_depth(const GridFunction& query, const FunctionalSample& cloud,
                          const std::vector<std::size_t>& grid_points, int direction_count,
                          std::uint64_t seed, const MultivariateDepthKind& kind) {
  if (direction_count < 1) throw DepthError("direction_count must be >= 1");
  if (grid_points.empty()) throw DepthError("empty grid-point selection");

  // Antithetic pairs: r and -r are kept for generality even where the depth
  // is symmetric under sign flip.
  DirectionSampler sampler(grid_points.size(), seed);
  std::vector<std::vector<double>> dirs;
  dirs.reserve(static_cast<std::size_t>(direction_count));
  while (static_cast<int>(dirs.size()) < direction_count) {
    std::vector<double> r = sampler.next();
    dirs.push_back(r);
    if (static_cast<int>(dirs.size()) < direction_count) {
      std::vector<double> neg(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
      dirs.push_back(std::move(neg));
    }
  }
  return grid_depth_with_directions(query, cloud, grid_points, dirs, kind);
}

}  // namespace fdepth
