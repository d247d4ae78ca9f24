#include "fdepth/regions.hpp"

#include <algorithm>
#include <cmath>

#include "fdepth/functional.hpp"
#include "fdepth/multivariate.hpp"

namespace fdepth {
namespace {

// Smallest integer count m with m/n >= alpha.
std::size_t min_count(double alpha, std::size_t n) {
  double raw = alpha * static_cast<double>(n);
  auto m = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return std::max<std::size_t>(m, 1);
}

}  // namespace

Interval halfspace_interval_1d(std::vector<double> column, double alpha) {
  const std::size_t n = column.size();
  if (n == 0) throw DepthError("empty cloud");
  std::sort(column.begin(), column.end());
  std::size_t m = min_count(alpha, n);
  Interval out;
  if (m > n) return out;
  double lo = column[m - 1];
  double hi = column[n - m];
  if (lo <= hi) {
    out.lo = lo;
    out.hi = hi;
    out.empty = false;
  }
  return out;
}

Interval mahalanobis_interval_1d(const std::vector<double>& column, double alpha) {
  const std::size_t n = column.size();
  if (n == 0) throw DepthError("empty cloud");
  double mean = 0.0;
  for (double v : column) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : column) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n);
  if (var <= 0.0) throw DepthError("degenerate cloud");
  double r = std::sqrt(var * (1.0 / alpha - 1.0));
  return Interval{mean - r, mean + r, false};
}

Interval zonoid_interval_1d(std::vector<double> column, double alpha) {
  const std::size_t n = column.size();
  if (n == 0) throw DepthError("empty cloud");
  std::sort(column.begin(), column.end());
  // Feasible values are convex combinations with weights bounded by
  // c = 1/(n*alpha); the extremes put weight c on the outermost points.
  double c = 1.0 / (static_cast<double>(n) * alpha);
  auto q = static_cast<std::size_t>(std::floor(static_cast<double>(n) * alpha + 1e-12));
  q = std::min(q, n);
  double rem = 1.0 - static_cast<double>(q) * c;
  if (rem < 0.0) rem = 0.0;
  double hi = 0.0, lo = 0.0;
  for (std::size_t i = 0; i < q; ++i) {
    hi += c * column[n - 1 - i];
    lo += c * column[i];
  }
  if (q < n && rem > 0.0) {
    hi += rem * column[n - 1 - q];
    lo += rem * column[q];
  }
  return Interval{lo, hi, false};
}

ConvexPolygon halfspace_contour_2d(const PointCloud& points, double alpha) {
  if (points.dim != 2) throw DepthError("halfspace contour requires d = 2");
  points.validate();
  const std::size_t n = points.size();
  std::size_t m = min_count(alpha, n);

  ConvexPolygon out;
  if (m > n) return out;

  // Candidate edge normals: perpendiculars of all pairwise difference vectors
  // (exact for moderate n); sampled directions otherwise, with upper-bound
  // semantics.
  std::vector<std::array<double, 2>> normals;
  bool all_equal = true;
  for (std::size_t i = 1; i < n && all_equal; ++i)
    if (points.at(i, 0) != points.at(0, 0) || points.at(i, 1) != points.at(0, 1))
      all_equal = false;
  if (n == 1 || all_equal) {
    out.vertices.push_back({points.at(0, 0), points.at(0, 1)});
    out.empty = false;
    for (auto [ux, uy] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}})
      out.halfplanes.push_back({ux, uy, ux * points.at(0, 0) + uy * points.at(0, 1)});
    return out;
  }
  if (n <= 500) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double dx = points.at(j, 0) - points.at(i, 0);
        double dy = points.at(j, 1) - points.at(i, 1);
        double norm = std::hypot(dx, dy);
        if (norm == 0.0) continue;
        normals.push_back({-dy / norm, dx / norm});
        normals.push_back({dy / norm, -dx / norm});
      }
  } else {
    const double pi = std::acos(-1.0);
    const int count = 10000;
    for (int a = 0; a < count; ++a) {
      double theta = 2 * pi * a / count;
      normals.push_back({std::cos(theta), std::sin(theta)});
    }
  }

  // Halfplane per normal: <u, y> <= m-th largest projection.
  std::vector<double> proj(n);
  for (const auto& u : normals) {
    for (std::size_t i = 0; i < n; ++i) proj[i] = u[0] * points.at(i, 0) + u[1] * points.at(i, 1);
    std::nth_element(proj.begin(), proj.begin() + static_cast<std::ptrdiff_t>(m - 1),
                     proj.end(), std::greater<double>());
    out.halfplanes.push_back({u[0], u[1], proj[m - 1]});
  }

  // Clip a bounding box by all halfplanes (Sutherland-Hodgman).
  double xmin = points.at(0, 0), xmax = xmin, ymin = points.at(0, 1), ymax = ymin;
  for (std::size_t i = 1; i < n; ++i) {
    xmin = std::min(xmin, points.at(i, 0));
    xmax = std::max(xmax, points.at(i, 0));
    ymin = std::min(ymin, points.at(i, 1));
    ymax = std::max(ymax, points.at(i, 1));
  }
  double margin = std::max(1.0, std::max(xmax - xmin, ymax - ymin));
  std::vector<std::array<double, 2>> poly = {{xmin - margin, ymin - margin},
                                             {xmax + margin, ymin - margin},
                                             {xmax + margin, ymax + margin},
                                             {xmin - margin, ymax + margin}};
  for (const Halfplane& h : out.halfplanes) {
    if (poly.empty()) break;
    std::vector<std::array<double, 2>> next;
    const std::size_t v = poly.size();
    for (std::size_t i = 0; i < v; ++i) {
      const auto& a = poly[i];
      const auto& b = poly[(i + 1) % v];
      double da = h.ux * a[0] + h.uy * a[1] - h.offset;
      double db = h.ux * b[0] + h.uy * b[1] - h.offset;
      bool ina = da <= 1e-12, inb = db <= 1e-12;
      if (ina) next.push_back(a);
      if (ina != inb) {
        double t = da / (da - db);
        next.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
      }
    }
    poly = std::move(next);
  }

  // Drop near-duplicate vertices.
  std::vector<std::array<double, 2>> cleaned;
  for (const auto& v : poly) {
    bool dup = false;
    for (const auto& w : cleaned)
      if (std::fabs(v[0] - w[0]) < 1e-10 && std::fabs(v[1] - w[1]) < 1e-10) dup = true;
    if (!dup) cleaned.push_back(v);
  }
  out.vertices = std::move(cleaned);
  out.empty = out.vertices.empty();
  if (out.empty) out.halfplanes.clear();
  return out;
}

bool CentralRegionEnvelope::contains(const GridFunction& f, double tol) const {
  if (region_empty) return false;
  for (std::size_t a = 0; a < time_indices.size(); ++a) {
    std::size_t j = time_indices[a];
    if (!intervals.empty()) {
      const Interval& iv = intervals[a];
      if (iv.empty) return false;
      double v = f.at(j, 0);
      if (v < iv.lo - tol || v > iv.hi + tol) return false;
    } else {
      const ConvexPolygon& poly = polygons[a];
      if (poly.empty) return false;
      double x = f.at(j, 0), y = f.at(j, 1);
      for (const Halfplane& h : poly.halfplanes)
        if (h.ux * x + h.uy * y > h.offset + tol) return false;
    }
  }
  return true;
}

CentralRegionEnvelope region_envelope(const FunctionalSample& cloud,
                                      const std::vector<std::size_t>& subset,
                                      const MultivariateDepthKind& kind, double alpha) {
  cloud.validate();
  LevelSpec level(alpha);
  if (subset.empty()) throw DepthError("empty time-index subset");
  if (cloud.dim > 2) throw DepthError("region envelopes unsupported for d >= 3");
  if (cloud.dim == 2 && kind.family != DepthFamily::halfspace)
    throw DepthError("d = 2 region envelopes support the halfspace depth only");
  if (kind.family == DepthFamily::simplicial)
    throw DepthError("region envelopes unsupported for the simplicial depth");

  CentralRegionEnvelope env;
  env.alpha = alpha;
  env.time_indices = subset;
  const std::size_t n = cloud.size();

  for (std::size_t j : subset) {
    if (j >= cloud.grid_size()) throw DepthError("time index out of range");
    if (cloud.dim == 1) {
      std::vector<double> col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = cloud.at(i, j);
      Interval iv;
      switch (kind.family) {
        case DepthFamily::halfspace: iv = halfspace_interval_1d(col, alpha); break;
        case DepthFamily::mahalanobis: iv = mahalanobis_interval_1d(col, alpha); break;
        case DepthFamily::zonoid: iv = zonoid_interval_1d(col, alpha); break;
        default: throw DepthError("unsupported depth kind for envelopes");
      }
      if (iv.empty && !env.first_empty_index) {
        env.region_empty = true;
        env.first_empty_index = j;
      }
      env.intervals.push_back(iv);
    } else {
      ConvexPolygon poly = halfspace_contour_2d(cloud.cross_section(j), alpha);
      if (poly.empty && !env.first_empty_index) {
        env.region_empty = true;
        env.first_empty_index = j;
      }
      env.polygons.push_back(std::move(poly));
    }
  }
  return env;
}

std::vector<DeepestEntry> deepest_functions(const FunctionalSample& cloud,
                                            const std::vector<std::size_t>& subset,
                                            const MultivariateDepthKind& kind) {
  cloud.validate();
  std::vector<DeepestEntry> all;
  all.reserve(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    GridFunction f = cloud.function(i);
    all.push_back({cloud.ids[i], graph_depth(f, cloud, subset, kind).value});
  }
  double best = 0.0;
  for (const auto& e : all) best = std::max(best, e.depth);
  std::vector<DeepestEntry> out;
  for (const auto& e : all)
    if (e.depth >= best - 1e-12) out.push_back(e);
  return out;
}

OutlierReport classify_outliers(const FunctionalSample& cloud,
                                const std::vector<std::size_t>& subset,
                                const MultivariateDepthKind& kind, double alpha,
                                bool leave_one_out) {
  cloud.validate();
  LevelSpec level(alpha);
  OutlierReport report;
  report.alpha = alpha;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    GridFunction f = cloud.function(i);
    double depth = leave_one_out && cloud.size() > 1
                       ? graph_depth(f, cloud.without(i), subset, kind).value
                       : graph_depth(f, cloud, subset, kind).value;
    if (depth < alpha) report.entries.push_back({cloud.ids[i], depth});
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const DeepestEntry& a, const DeepestEntry& b) {
              if (a.depth != b.depth) return a.depth < b.depth;
              return a.id < b.id;
            });
  return report;
}

}  // namespace fdepth
