#include "fdepth/multivariate.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "fdepth/rng.hpp"
#include "fdepth/simplex.hpp"

namespace fdepth {

double halfspace_depth_1d(double query, std::span<const double> data) {
  if (data.empty()) throw DepthError("empty cloud");
  std::size_t le = 0, ge = 0;
  for (double v : data) {
    if (v <= query) ++le;
    if (v >= query) ++ge;
  }
  return static_cast<double>(std::min(le, ge)) / static_cast<double>(data.size());
}

double halfspace_depth_2d(const double* query, const PointCloud& data) {
  if (data.dim != 2) throw DepthError("halfspace_depth_2d requires d = 2");
  data.validate();
  const std::size_t n = data.size();

  std::size_t at_query = 0;
  std::vector<double> px, py;
  px.reserve(n);
  py.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double dx = data.at(i, 0) - query[0];
    double dy = data.at(i, 1) - query[1];
    if (dx == 0.0 && dy == 0.0) {
      ++at_query;  // inside every closed halfplane through the query
    } else {
      px.push_back(dx);
      py.push_back(dy);
    }
  }
  if (px.empty()) return 1.0;

  // The count of points in the closed halfplane with unit normal u is
  // piecewise constant in the angle of u, with jumps only where u is
  // perpendicular to some data direction. The minimum is attained on an
  // open arc, so evaluating at midpoints of consecutive critical angles
  // is exact.
  const double pi = std::acos(-1.0);
  std::vector<double> crit;
  crit.reserve(2 * px.size());
  for (std::size_t i = 0; i < px.size(); ++i) {
    double a = std::atan2(py[i], px[i]);
    for (double c : {a + pi / 2, a - pi / 2}) {
      double w = std::fmod(c, 2 * pi);
      if (w < 0) w += 2 * pi;
      crit.push_back(w);
    }
  }
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  std::size_t best = px.size();
  const std::size_t c = crit.size();
  for (std::size_t i = 0; i < c; ++i) {
    double lo = crit[i];
    double hi = i + 1 < c ? crit[i + 1] : crit[0] + 2 * pi;
    double theta = 0.5 * (lo + hi);
    double ux = std::cos(theta), uy = std::sin(theta);
    std::size_t cnt = 0;
    for (std::size_t j = 0; j < px.size(); ++j)
      if (ux * px[j] + uy * py[j] >= 0.0) ++cnt;
    best = std::min(best, cnt);
  }
  return static_cast<double>(at_query + best) / static_cast<double>(n);
}

double halfspace_depth_approx(std::span<const double> query, const PointCloud& data,
                              int direction_count, std::uint64_t seed) {
  data.validate();
  if (query.size() != data.dim) throw DepthError("query dimension mismatch");
  if (direction_count < 1) throw DepthError("direction_count must be >= 1");
  const std::size_t n = data.size();
  const std::size_t d = data.dim;

  DirectionSampler sampler(d, seed);
  std::vector<double> proj(n);
  double best = 1.0;
  for (int it = 0; it < direction_count; ++it) {
    std::vector<double> r = sampler.next();
    double q = 0.0;
    for (std::size_t c = 0; c < d; ++c) q += r[c] * query[c];
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t c = 0; c < d; ++c) s += r[c] * data.at(i, c);
      proj[i] = s;
    }
    best = std::min(best, halfspace_depth_1d(q, proj));
    if (best == 0.0) break;
  }
  return best;
}

double mahalanobis_depth(std::span<const double> query, const PointCloud& data) {
  data.validate();
  const std::size_t n = data.size();
  const std::size_t d = data.dim;
  if (query.size() != d) throw DepthError("query dimension mismatch");

  Eigen::VectorXd mean = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c) mean(static_cast<Eigen::Index>(c)) += data.at(i, c);
  mean /= static_cast<double>(n);

  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d),
                                              static_cast<Eigen::Index>(d));
  Eigen::VectorXd diff(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < d; ++c)
      diff(static_cast<Eigen::Index>(c)) = data.at(i, c) - mean(static_cast<Eigen::Index>(c));
    cov += diff * diff.transpose();
  }
  cov /= static_cast<double>(n);  // divisor n, by convention

  Eigen::FullPivLU<Eigen::MatrixXd> lu(cov);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw DepthError("degenerate cloud");

  for (std::size_t c = 0; c < d; ++c)
    diff(static_cast<Eigen::Index>(c)) = query[c] - mean(static_cast<Eigen::Index>(c));
  double q = diff.dot(lu.solve(diff));
  if (q < 0.0) q = 0.0;  // round-off guard
  return 1.0 / (1.0 + q);
}

double zonoid_depth(std::span<const double> query, const PointCloud& data) {
  data.validate();
  const std::size_t n = data.size();
  const std::size_t d = data.dim;
  if (query.size() != d) throw DepthError("query dimension mismatch");

  // Variables: lambda_1..lambda_n, t, s_1..s_n.
  // min t  s.t.  sum lambda = 1,  sum lambda_i x_i = query,
  //              lambda_i - t + s_i = 0,  all variables >= 0.
  const std::size_t nv = 2 * n + 1;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  a.reserve(1 + d + n);

  std::vector<double> row(nv, 0.0);
  for (std::size_t i = 0; i < n; ++i) row[i] = 1.0;
  a.push_back(row);
  b.push_back(1.0);

  for (std::size_t c = 0; c < d; ++c) {
    std::fill(row.begin(), row.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) row[i] = data.at(i, c);
    a.push_back(row);
    b.push_back(query[c]);
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::fill(row.begin(), row.end(), 0.0);
    row[i] = 1.0;
    row[n] = -1.0;
    row[n + 1 + i] = 1.0;
    a.push_back(row);
    b.push_back(0.0);
  }

  std::vector<double> cost(nv, 0.0);
  cost[n] = 1.0;

  LpResult lp = solve_lp_min(std::move(a), std::move(b), cost, 1e-9);
  if (!lp.feasible) return 0.0;  // outside the convex hull
  double t = lp.x[n];
  if (t <= 0.0) return 1.0;
  return std::min(1.0, 1.0 / (static_cast<double>(n) * t));
}

double simplicial_depth_1d(double query, std::span<const double> data) {
  const std::size_t n = data.size();
  if (n < 2) throw DepthError("simplicial depth needs n >= 2");
  std::size_t below = 0, above = 0;
  for (double v : data) {
    if (v < query) ++below;
    if (v > query) ++above;
  }
  auto c2 = [](std::size_t m) { return m * (m - 1) / 2; };
  std::size_t total = c2(n);
  std::size_t containing = total - c2(below) - c2(above);
  return static_cast<double>(containing) / static_cast<double>(total);
}

double multivariate_depth(std::span<const double> query, const PointCloud& data,
                          const MultivariateDepthKind& kind) {
  data.validate();
  if (query.size() != data.dim) throw DepthError("query dimension mismatch");
  const std::size_t d = data.dim;
  switch (kind.family) {
    case DepthFamily::halfspace:
      if (d == 1) return halfspace_depth_1d(query[0], {data.coords.data(), data.size()});
      if (d == 2) return halfspace_depth_2d(query.data(), data);
      return halfspace_depth_approx(query, data, kind.direction_count, kind.seed);
    case DepthFamily::mahalanobis:
      return mahalanobis_depth(query, data);
    case DepthFamily::zonoid:
      return zonoid_depth(query, data);
    case DepthFamily::simplicial:
      if (d != 1) throw DepthError("simplicial depth supports d = 1 only");
      return simplicial_depth_1d(query[0], {data.coords.data(), data.size()});
  }
  throw DepthError("unknown depth family");
}

}  // namespace fdepth
