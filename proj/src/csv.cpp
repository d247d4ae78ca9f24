#include "fdepth/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fdepth {
namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& field, const std::string& file, std::size_t line,
                    std::size_t column) {
  const char* begin = field.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v))
    throw DataError(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
                    ": non-numeric cell '" + field + "'");
  return v;
}

struct CoordinateFile {
  std::vector<double> grid;
  std::vector<std::string> ids;
  std::vector<std::vector<double>> rows;  // n x k
};

CoordinateFile load_coordinate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open file");
  CoordinateFile out;

  std::string line;
  if (!std::getline(in, line)) throw DataError(path + ":1: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> header = split_line(line);
  if (header.size() < 3 || header[0] != "id")
    throw DataError(path + ":1: header must be 'id,<t1>,...,<tk>' with k >= 2");
  for (std::size_t c = 1; c < header.size(); ++c)
    out.grid.push_back(parse_number(header[c], path, 1, c + 1));
  for (std::size_t j = 0; j + 1 < out.grid.size(); ++j)
    if (!(out.grid[j] < out.grid[j + 1]))
      throw DataError(path + ":1:" + std::to_string(j + 3) +
                      ": grid must be strictly increasing");

  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields = split_line(line);
    if (fields.size() != out.grid.size() + 1)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected " +
                      std::to_string(out.grid.size()) + " values, got " +
                      std::to_string(fields.size() - 1));
    out.ids.push_back(fields[0]);
    std::vector<double> row;
    row.reserve(out.grid.size());
    for (std::size_t c = 1; c < fields.size(); ++c)
      row.push_back(parse_number(fields[c], path, lineno, c + 1));
    out.rows.push_back(std::move(row));
  }
  if (out.ids.empty()) throw DataError(path + ": no data rows");
  return out;
}

}  // namespace

FunctionalSample load_dataset(const std::vector<std::string>& paths) {
  if (paths.empty()) throw DataError("no input files");
  std::vector<CoordinateFile> files;
  files.reserve(paths.size());
  for (const std::string& p : paths) files.push_back(load_coordinate(p));

  for (std::size_t f = 1; f < files.size(); ++f) {
    if (files[f].grid != files[0].grid)
      throw DataError(paths[f] + ": grid mismatch with " + paths[0]);
    if (files[f].ids != files[0].ids)
      throw DataError(paths[f] + ": id list mismatch with " + paths[0]);
  }

  FunctionalSample sample;
  sample.grid = files[0].grid;
  sample.ids = files[0].ids;
  sample.dim = files.size();
  const std::size_t n = sample.ids.size();
  const std::size_t k = sample.grid.size();
  sample.values.assign(n * k * sample.dim, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < sample.dim; ++c)
        sample.at(i, j, c) = files[c].rows[i][j];
  sample.validate();
  return sample;
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void save_coordinate(const FunctionalSample& sample, std::size_t coordinate,
                     const std::string& path) {
  if (coordinate >= sample.dim) throw DataError("coordinate index out of range");
  std::ofstream out(path);
  if (!out) throw DataError(path + ": cannot open file for writing");
  out << "id";
  for (double t : sample.grid) out << ',' << format_value(t);
  out << '\n';
  for (std::size_t i = 0; i < sample.size(); ++i) {
    out << sample.ids[i];
    for (std::size_t j = 0; j < sample.grid_size(); ++j)
      out << ',' << format_value(sample.at(i, j, coordinate));
    out << '\n';
  }
}

}  // namespace fdepth
