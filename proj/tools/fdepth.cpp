// fdepth: functional data depths, central regions, outlier reports and
// functional PCA over CSV-discretized samples.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fdepth/csv.hpp"
#include "fdepth/functional.hpp"
#include "fdepth/multivariate.hpp"
#include "fdepth/pca.hpp"
#include "fdepth/regions.hpp"
#include "fdepth/types.hpp"

namespace {

using json = nlohmann::json;
using namespace fdepth;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

enum class Method { graph, halfgraph, band, locslope, grid, pc };

struct Options {
  std::string method_name = "graph";
  std::string mvdepth_name;
  std::string data, data2, query_file, alpha_csv, subset_csv = "all";
  int directions = 1000;
  std::uint64_t seed = 0;
  int components = 2;
  bool loo = false;
  int threads = 0;
  std::string format = "csv";
  std::string out = "-";
};

Method parse_method(const std::string& name) {
  if (name == "graph") return Method::graph;
  if (name == "halfgraph") return Method::halfgraph;
  if (name == "band") return Method::band;
  if (name == "locslope") return Method::locslope;
  if (name == "grid") return Method::grid;
  if (name == "pc") return Method::pc;
  throw UsageError("unknown method '" + name + "'");
}

DepthFamily parse_family(const std::string& name) {
  if (name == "halfspace") return DepthFamily::halfspace;
  if (name == "mahalanobis") return DepthFamily::mahalanobis;
  if (name == "zonoid") return DepthFamily::zonoid;
  if (name == "simplicial") return DepthFamily::simplicial;
  throw UsageError("unknown mvdepth '" + name + "'");
}

// Resolves the method/mvdepth compatibility rules: band forces simplicial,
// halfgraph forces halfspace, locslope needs a bivariate-capable kind.
MultivariateDepthKind resolve_kind(Method method, const Options& opt) {
  MultivariateDepthKind kind;
  kind.direction_count = opt.directions;
  kind.seed = opt.seed;
  std::optional<DepthFamily> requested;
  if (!opt.mvdepth_name.empty()) requested = parse_family(opt.mvdepth_name);

  switch (method) {
    case Method::halfgraph:
      if (requested && *requested != DepthFamily::halfspace)
        throw UsageError("--method halfgraph forces --mvdepth halfspace");
      kind.family = DepthFamily::halfspace;
      break;
    case Method::band:
      if (requested && *requested != DepthFamily::simplicial)
        throw UsageError("--method band forces --mvdepth simplicial");
      kind.family = DepthFamily::simplicial;
      break;
    case Method::locslope:
      kind.family = requested.value_or(DepthFamily::halfspace);
      if (kind.family == DepthFamily::simplicial)
        throw UsageError("--method locslope requires a bivariate-capable mvdepth");
      break;
    default:
      kind.family = requested.value_or(DepthFamily::halfspace);
      break;
  }
  return kind;
}

std::vector<std::size_t> parse_subset(const std::string& csv, std::size_t k) {
  std::vector<std::size_t> out;
  if (csv == "all") {
    for (std::size_t j = 0; j < k; ++j) out.push_back(j);
    return out;
  }
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0' || v < 0 || static_cast<std::size_t>(v) >= k)
      throw UsageError("bad subset index '" + tok + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw UsageError("empty subset");
  return out;
}

std::vector<double> parse_alphas(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0' || !(v > 0.0) || v > 1.0)
      throw UsageError("bad alpha '" + tok + "' (need 0 < alpha <= 1)");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("no alpha given (use --alpha A[,A...])");
  return out;
}

int thread_count(const Options& opt) {
  if (opt.threads > 0) return opt.threads;
  if (const char* env = std::getenv("FDEPTH_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Deterministic parallel map: results land in a preallocated vector indexed
// by work item, independent of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t per = (count + static_cast<std::size_t>(threads) - 1) /
                    static_cast<std::size_t>(threads);
  for (int t = 0; t < threads; ++t) {
    std::size_t lo = static_cast<std::size_t>(t) * per;
    std::size_t hi = std::min(count, lo + per);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct Sink {
  std::ostream* os;
  std::ofstream file;
  explicit Sink(const std::string& out) {
    if (out == "-") {
      os = &std::cout;
    } else {
      file.open(out);
      if (!file) throw DataError(out + ": cannot open output file");
      os = &file;
    }
  }
};

FunctionalSample load_inputs(const Options& opt) {
  if (opt.data.empty()) throw UsageError("--data FILE is required");
  std::vector<std::string> paths{opt.data};
  if (!opt.data2.empty()) paths.push_back(opt.data2);
  return load_dataset(paths);
}

PhiDepthResult evaluate_depth(Method method, const MultivariateDepthKind& kind,
                              const Options& opt, const GridFunction& query,
                              const FunctionalSample& cloud,
                              const std::vector<std::size_t>& subset) {
  switch (method) {
    case Method::graph: return graph_depth(query, cloud, subset, kind);
    case Method::halfgraph: return halfgraph_depth(query, cloud, subset);
    case Method::band: return band_depth(query, cloud, subset);
    case Method::locslope: return location_slope_depth(query, cloud, subset, kind);
    case Method::grid:
      return grid_depth(query, cloud, subset, opt.directions, opt.seed, kind);
    case Method::pc:
      if (cloud.dim != 1) throw UsageError("--method pc requires d = 1 data");
      return pc_depth(query, cloud, static_cast<std::size_t>(opt.components),
                      opt.directions, opt.seed, kind);
  }
  throw UsageError("unknown method");
}

struct DepthRow {
  std::string id;
  double depth;
  std::string aspect;
};

std::vector<DepthRow> compute_depth_rows(Method method, const MultivariateDepthKind& kind,
                                         const Options& opt, const FunctionalSample& cloud,
                                         const std::vector<std::size_t>& subset) {
  std::vector<DepthRow> rows;
  if (!opt.query_file.empty()) {
    FunctionalSample queries = load_dataset(
        opt.data2.empty() ? std::vector<std::string>{opt.query_file}
                          : std::vector<std::string>{opt.query_file});
    if (queries.grid != cloud.grid) throw DataError(opt.query_file + ": grid mismatch");
    if (queries.dim != cloud.dim)
      throw DataError(opt.query_file + ": coordinate count mismatch");
    rows.resize(queries.size());
    parallel_for(queries.size(), thread_count(opt), [&](std::size_t i) {
      PhiDepthResult r = evaluate_depth(method, kind, opt, queries.function(i), cloud, subset);
      rows[i] = {queries.ids[i], r.value, r.argmin_label};
    });
  } else {
    // Leave-in semantics by default: a sample function counts itself.
    rows.resize(cloud.size());
    parallel_for(cloud.size(), thread_count(opt), [&](std::size_t i) {
      const FunctionalSample& ref = cloud;  // shared cloud
      PhiDepthResult r =
          opt.loo && cloud.size() > 1
              ? evaluate_depth(method, kind, opt, cloud.function(i), ref.without(i), subset)
              : evaluate_depth(method, kind, opt, cloud.function(i), ref, subset);
      rows[i] = {cloud.ids[i], r.value, r.argmin_label};
    });
  }
  std::sort(rows.begin(), rows.end(),
            [](const DepthRow& a, const DepthRow& b) { return a.id < b.id; });
  return rows;
}

int cmd_depth(const Options& opt) {
  Method method = parse_method(opt.method_name);
  MultivariateDepthKind kind = resolve_kind(method, opt);
  FunctionalSample cloud = load_inputs(opt);
  std::vector<std::size_t> subset = parse_subset(opt.subset_csv, cloud.grid_size());
  std::vector<DepthRow> rows = compute_depth_rows(method, kind, opt, cloud, subset);

  Sink sink(opt.out);
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"id", r.id}, {"depth", r.depth}, {"aspect", r.aspect}});
    *sink.os << json({{"command", "depth"},
                      {"method", opt.method_name},
                      {"mvdepth", family_name(kind.family)},
                      {"rows", arr}})
                    .dump(2)
             << '\n';
  } else {
    *sink.os << "id,depth,aspect\n";
    for (const auto& r : rows)
      *sink.os << r.id << ',' << format_value(r.depth) << ',' << r.aspect << '\n';
  }
  return 0;
}

int cmd_regions(const Options& opt) {
  Method method = parse_method(opt.method_name);
  if (method != Method::graph && method != Method::halfgraph)
    throw UsageError("regions supports --method graph|halfgraph");
  MultivariateDepthKind kind = resolve_kind(method, opt);
  FunctionalSample cloud = load_inputs(opt);
  std::vector<std::size_t> subset = parse_subset(opt.subset_csv, cloud.grid_size());
  std::vector<double> alphas = parse_alphas(opt.alpha_csv);

  Sink sink(opt.out);
  json jblocks = json::array();
  std::ostringstream csv;
  if (cloud.dim == 1)
    csv << "alpha,t,lo,hi\n";
  else
    csv << "alpha,t,vertex,x,y\n";

  for (double alpha : alphas) {
    CentralRegionEnvelope env = region_envelope(cloud, subset, kind, alpha);
    json block{{"alpha", alpha}, {"empty", env.region_empty}};
    if (env.first_empty_index)
      block["first_empty_t"] = cloud.grid[*env.first_empty_index];
    json rows = json::array();
    for (std::size_t a = 0; a < env.time_indices.size(); ++a) {
      double t = cloud.grid[env.time_indices[a]];
      if (cloud.dim == 1) {
        const Interval& iv = env.intervals[a];
        if (iv.empty) {
          csv << format_value(alpha) << ',' << format_value(t) << ",empty,empty\n";
          rows.push_back({{"t", t}, {"empty", true}});
        } else {
          csv << format_value(alpha) << ',' << format_value(t) << ','
              << format_value(iv.lo) << ',' << format_value(iv.hi) << '\n';
          rows.push_back({{"t", t}, {"lo", iv.lo}, {"hi", iv.hi}});
        }
      } else {
        const ConvexPolygon& poly = env.polygons[a];
        json verts = json::array();
        for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
          csv << format_value(alpha) << ',' << format_value(t) << ',' << v << ','
              << format_value(poly.vertices[v][0]) << ','
              << format_value(poly.vertices[v][1]) << '\n';
          verts.push_back({poly.vertices[v][0], poly.vertices[v][1]});
        }
        if (poly.empty) csv << format_value(alpha) << ',' << format_value(t) << ",empty,,\n";
        rows.push_back({{"t", t}, {"empty", poly.empty}, {"vertices", verts}});
      }
    }
    block["rows"] = rows;
    jblocks.push_back(block);
  }

  if (opt.format == "json")
    *sink.os << json({{"command", "regions"}, {"blocks", jblocks}}).dump(2) << '\n';
  else
    *sink.os << csv.str();
  return 0;
}

int cmd_outliers(const Options& opt) {
  Method method = parse_method(opt.method_name);
  MultivariateDepthKind kind = resolve_kind(method, opt);
  FunctionalSample cloud = load_inputs(opt);
  std::vector<std::size_t> subset = parse_subset(opt.subset_csv, cloud.grid_size());
  std::vector<double> alphas = parse_alphas(opt.alpha_csv);

  // Depths of the sample functions, computed once per function.
  std::vector<double> depths(cloud.size());
  parallel_for(cloud.size(), thread_count(opt), [&](std::size_t i) {
    depths[i] = (opt.loo && cloud.size() > 1)
                    ? evaluate_depth(method, kind, opt, cloud.function(i),
                                     cloud.without(i), subset)
                          .value
                    : evaluate_depth(method, kind, opt, cloud.function(i), cloud, subset)
                          .value;
  });

  Sink sink(opt.out);
  json jblocks = json::array();
  std::ostringstream csv;
  csv << "alpha,id,depth\n";
  for (double alpha : alphas) {
    LevelSpec level(alpha);
    std::vector<std::pair<std::string, double>> entries;
    for (std::size_t i = 0; i < cloud.size(); ++i)
      if (depths[i] < alpha) entries.emplace_back(cloud.ids[i], depths[i]);
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second < b.second;
      return a.first < b.first;
    });
    json rows = json::array();
    for (const auto& [id, depth] : entries) {
      csv << format_value(alpha) << ',' << id << ',' << format_value(depth) << '\n';
      rows.push_back({{"id", id}, {"depth", depth}});
    }
    jblocks.push_back({{"alpha", alpha}, {"outliers", rows}});
  }

  if (opt.format == "json")
    *sink.os << json({{"command", "outliers"}, {"blocks", jblocks}}).dump(2) << '\n';
  else
    *sink.os << csv.str();
  return 0;
}

int cmd_pca(const Options& opt) {
  FunctionalSample cloud = load_inputs(opt);
  if (opt.components < 1) throw UsageError("--components must be >= 1");
  PcaModel model = fit_pca(cloud, static_cast<std::size_t>(opt.components));

  // Explained-variance ratios are taken against the full spectrum.
  double total = 0.0;
  {
    PcaModel full = fit_pca(cloud, std::min(cloud.size() - 1,
                                            cloud.grid_size() * cloud.dim));
    for (double ev : full.eigenvalues) total += ev;
  }

  Sink sink(opt.out);
  if (opt.format == "json") {
    json j{{"command", "pca"}, {"components", opt.components}};
    j["eigenvalues"] = model.eigenvalues;
    json ratios = json::array();
    for (double ev : model.eigenvalues) ratios.push_back(total > 0 ? ev / total : 0.0);
    j["explained_variance_ratio"] = ratios;
    j["grid"] = cloud.grid;
    j["mean"] = model.mean;
    j["components_values"] = model.components;
    json scores = json::array();
    for (std::size_t i = 0; i < cloud.size(); ++i)
      scores.push_back({{"id", cloud.ids[i]}, {"scores", model.scores[i]}});
    j["scores"] = scores;
    *sink.os << j.dump(2) << '\n';
  } else {
    std::ostream& os = *sink.os;
    os << "section,index,values\n";
    for (std::size_t j = 0; j < model.eigenvalues.size(); ++j)
      os << "variance," << j + 1 << ',' << format_value(model.eigenvalues[j]) << ','
         << format_value(total > 0 ? model.eigenvalues[j] / total : 0.0) << '\n';
    os << "mean,0";
    for (double v : model.mean) os << ',' << format_value(v);
    os << '\n';
    for (std::size_t j = 0; j < model.components.size(); ++j) {
      os << "component," << j + 1;
      for (double v : model.components[j]) os << ',' << format_value(v);
      os << '\n';
    }
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      os << "score," << cloud.ids[i];
      for (double v : model.scores[i]) os << ',' << format_value(v);
      os << '\n';
    }
  }
  return 0;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--method", opt.method_name,
                  "graph|halfgraph|band|locslope|grid|pc");
  cmd->add_option("--mvdepth", opt.mvdepth_name,
                  "halfspace|mahalanobis|zonoid|simplicial");
  cmd->add_option("--data", opt.data, "input CSV (first coordinate)");
  cmd->add_option("--data2", opt.data2, "second-coordinate CSV (d = 2)");
  cmd->add_option("--query", opt.query_file, "query-function CSV");
  cmd->add_option("--alpha", opt.alpha_csv, "depth level(s) A[,A...]");
  cmd->add_option("--subset", opt.subset_csv, "grid indices i1,i2,... or 'all'");
  cmd->add_option("--directions", opt.directions, "random direction count");
  cmd->add_option("--seed", opt.seed, "PRNG seed");
  cmd->add_option("--components", opt.components, "PCA component count m");
  cmd->add_flag("--loo", opt.loo, "leave-one-out depths for sample functions");
  cmd->add_option("--threads", opt.threads, "worker threads (default: all cores)");
  cmd->add_option("--format", opt.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opt.out, "output file or '-'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functional data depths, central regions and outlier reports"};
  app.require_subcommand(1);
  Options opt;
  CLI::App* depth = app.add_subcommand("depth", "per-function depths");
  CLI::App* regions = app.add_subcommand("regions", "central-region envelopes");
  CLI::App* outliers = app.add_subcommand("outliers", "depth-threshold outliers");
  CLI::App* pca = app.add_subcommand("pca", "functional PCA summary");
  for (CLI::App* c : {depth, regions, outliers, pca}) add_common(c, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (depth->parsed()) return cmd_depth(opt);
    if (regions->parsed()) return cmd_regions(opt);
    if (outliers->parsed()) return cmd_outliers(opt);
    if (pca->parsed()) return cmd_pca(opt);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 1;
  } catch (const DepthError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
