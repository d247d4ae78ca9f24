#include "fdepth/sample.hpp"

#include <cmath>

namespace fdepth {

void FunctionalSample::validate() const {
  if (grid.size() < 2) throw DepthError("grid must have k >= 2 points");
  if (ids.empty()) throw DepthError("sample must contain n >= 1 functions");
  if (dim < 1) throw DepthError("dimension must be >= 1");
  if (values.size() != ids.size() * grid.size() * dim)
    throw DepthError("value array shape mismatch");
  for (std::size_t j = 0; j + 1 < grid.size(); ++j)
    if (!(grid[j] < grid[j + 1])) throw DepthError("grid must be strictly increasing");
  for (double t : grid)
    if (!std::isfinite(t)) throw DepthError("non-finite grid point");
  for (double v : values)
    if (!std::isfinite(v)) throw DepthError("non-finite sample value");
}

FunctionalSample FunctionalSample::without(std::size_t drop) const {
  FunctionalSample out;
  out.grid = grid;
  out.dim = dim;
  const std::size_t block = grid.size() * dim;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == drop) continue;
    out.ids.push_back(ids[i]);
    out.values.insert(out.values.end(),
                      values.begin() + static_cast<std::ptrdiff_t>(i * block),
                      values.begin() + static_cast<std::ptrdiff_t>((i + 1) * block));
  }
  return out;
}

}  // namespace fdepth
