#pragma once

#include <string>
#include <vector>

#include "fdepth/sample.hpp"

namespace fdepth {

// Thrown on malformed input files; the message names file, line and column.
class DataError : public DepthError {
 public:
  explicit DataError(const std::string& what) : DepthError(what) {}
};

// Loads one CSV file per coordinate (d files for d-variate functions).
// Header row: id,<t1>,...,<tk> with strictly increasing numeric grid points;
// one row per function: <id>,<v1>,...,<vk>. All coordinate files must share
// identical grids and id lists.
FunctionalSample load_dataset(const std::vector<std::string>& paths);

// Writes coordinate c of a sample in the same CSV layout, 17 significant
// digits.
void save_coordinate(const FunctionalSample& sample, std::size_t coordinate,
                     const std::string& path);

// 17-significant-digit decimal formatting used for all numeric output.
std::string format_value(double v);

}  // namespace fdepth
