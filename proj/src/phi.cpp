#include "fdepth/phi.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace fdepth {

AspectSet time_point_aspects(const FunctionalSample& cloud,
                             const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw DepthError("empty time-index subset");
  AspectSet set;
  set.out_dim = cloud.dim;
  const std::size_t d = cloud.dim;
  for (std::size_t j : indices) {
    if (j >= cloud.grid_size()) throw DepthError("time index out of range");
    Aspect a;
    a.label = time_label(cloud.grid[j]);
    a.map = [j, d](const GridFunction& f) {
      std::vector<double> out(d);
      for (std::size_t c = 0; c < d; ++c) out[c] = f.at(j, c);
      return out;
    };
    set.aspects.push_back(std::move(a));
  }
  return set;
}

namespace {

PhiDepthResult phi_depth_impl(const GridFunction& query, const FunctionalSample& cloud,
                              const AspectSet& aspects, const MultivariateDepthKind& kind,
                              bool weighted) {
  aspects.validate();
  cloud.validate();
  if (query.dim != cloud.dim || query.grid_size() != cloud.grid_size())
    throw DepthError("grid mismatch between query and cloud");

  const std::size_t n = cloud.size();
  std::vector<GridFunction> members;
  members.reserve(n);
  for (std::size_t i = 0; i < n; ++i) members.push_back(cloud.function(i));

  PhiDepthResult res;
  bool first = true;
  for (const Aspect& a : aspects.aspects) {
    std::vector<double> q = a.map(query);
    if (q.size() != aspects.out_dim) throw DepthError("aspect output dimension mismatch");
    PointCloud pc;
    pc.dim = aspects.out_dim;
    pc.coords.reserve(n * pc.dim);
    for (const GridFunction& f : members) {
      std::vector<double> p = a.map(f);
      pc.coords.insert(pc.coords.end(), p.begin(), p.end());
    }
    double v = multivariate_depth(q, pc, kind);
    if (weighted) v *= a.weight;
    if (first || v < res.value) {
      res.value = v;
      res.argmin_label = a.label;
      first = false;
    }
  }
  return res;
}

}  // namespace

PhiDepthResult phi_depth(const GridFunction& query, const FunctionalSample& cloud,
                         const AspectSet& aspects, const MultivariateDepthKind& kind) {
  return phi_depth_impl(query, cloud, aspects, kind, false);
}

PhiDepthResult weighted_phi_depth(const GridFunction& query, const FunctionalSample& cloud,
                                  const AspectSet& aspects, const MultivariateDepthKind& kind) {
  return phi_depth_impl(query, cloud, aspects, kind, true);
}

bool is_in_central_region(const GridFunction& query, const FunctionalSample& cloud,
                          const AspectSet& aspects, const MultivariateDepthKind& kind,
                          const LevelSpec& level) {
  aspects.validate();
  cloud.validate();
  if (query.dim != cloud.dim || query.grid_size() != cloud.grid_size())
    throw DepthError("grid mismatch between query and cloud");

  const std::size_t n = cloud.size();
  std::vector<GridFunction> members;
  members.reserve(n);
  for (std::size_t i = 0; i < n; ++i) members.push_back(cloud.function(i));

  for (const Aspect& a : aspects.aspects) {
    std::vector<double> q = a.map(query);
    PointCloud pc;
    pc.dim = aspects.out_dim;
    pc.coords.reserve(n * pc.dim);
    for (const GridFunction& f : members) {
      std::vector<double> p = a.map(f);
      pc.coords.insert(pc.coords.end(), p.begin(), p.end());
    }
    if (multivariate_depth(q, pc, kind) < level.alpha) return false;
  }
  return true;
}

bool deepest_condition(const GridFunction& query, const FunctionalSample& cloud,
                       const AspectSet& aspects, const MultivariateDepthKind& kind) {
  return phi_depth(query, cloud, aspects, kind).value >= 1.0;
}

namespace {

// Per-coordinate value of maximal cross-sectional depth: the mean for the
// continuous depths (zonoid, Mahalanobis), the lower median for the counting
// depths.
std::vector<double> deepest_envelope_value(const PointCloud& cross, DepthFamily family) {
  const std::size_t n = cross.size();
  const std::size_t d = cross.dim;
  std::vector<double> out(d, 0.0);
  if (family == DepthFamily::zonoid || family == DepthFamily::mahalanobis) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < d; ++c) out[c] += cross.at(i, c);
    for (double& v : out) v /= static_cast<double>(n);
  } else {
    std::vector<double> col(n);
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t i = 0; i < n; ++i) col[i] = cross.at(i, c);
      std::nth_element(col.begin(), col.begin() + static_cast<std::ptrdiff_t>((n - 1) / 2),
                       col.end());
      out[c] = col[(n - 1) / 2];
    }
  }
  return out;
}

}  // namespace

SurjectionReport surjection_check(const FunctionalSample& cloud,
                                  const std::vector<std::size_t>& time_indices,
                                  const MultivariateDepthKind& kind, const LevelSpec& level,
                                  int probe_count, std::uint64_t seed) {
  cloud.validate();
  if (time_indices.empty()) throw DepthError("empty time-index subset");
  AspectSet aspects = time_point_aspects(cloud, time_indices);

  const std::size_t n = cloud.size();
  const std::size_t d = cloud.dim;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_t(0, time_indices.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_i(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  SurjectionReport report;
  int attempts = 0;
  const int max_attempts = probe_count * 200;
  while (static_cast<int>(report.probes.size()) < probe_count && attempts < max_attempts) {
    ++attempts;
    std::size_t j = time_indices[pick_t(rng)];
    PointCloud cross = cloud.cross_section(j);
    std::vector<double> center = deepest_envelope_value(cross, kind.family);

    // Candidate y: a data value pulled toward the cross-sectional center.
    std::size_t i = pick_i(rng);
    double w = unit(rng);
    std::vector<double> y(d);
    for (std::size_t c = 0; c < d; ++c)
      y[c] = w * center[c] + (1.0 - w) * cross.at(i, c);

    double target = multivariate_depth(y, cross, kind);
    if (target < level.alpha) continue;

    // Witness: plant y at t_j, deepest envelope elsewhere.
    GridFunction z;
    z.dim = d;
    z.values.assign(cloud.grid_size() * d, 0.0);
    for (std::size_t jj = 0; jj < cloud.grid_size(); ++jj) {
      std::vector<double> v =
          jj == j ? y : deepest_envelope_value(cloud.cross_section(jj), kind.family);
      for (std::size_t c = 0; c < d; ++c) z.at(jj, c) = v[c];
    }

    SurjectionProbe probe;
    probe.time_index = j;
    probe.y = y;
    probe.target = target;
    probe.achieved = phi_depth(z, cloud, aspects, kind).value;
    probe.pass = probe.achieved >= target - 1e-9;
    if (probe.pass) ++report.pass_count;
    report.probes.push_back(std::move(probe));
  }
  return report;
}

}  // namespace fdepth
