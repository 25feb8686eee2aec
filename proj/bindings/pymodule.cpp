#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "art/mine.hpp"
#include "art/oracle.hpp"
#include "art/synth.hpp"

namespace py = pybind11;
using namespace art;

namespace {

AnalysisConfig make_config(int g, const std::string& mode, double epsilon, double q, int canonical_m) {
  AnalysisConfig cfg;
  cfg.g = g;
  if (mode == "equal-width") {
    cfg.mode = RasterMode::EqualWidth;
  } else if (mode == "equal-frequency") {
    cfg.mode = RasterMode::EqualFrequency;
  } else {
    throw ConfigError("mode must be equal-width or equal-frequency");
  }
  cfg.epsilon = epsilon;
  cfg.q = q;
  cfg.canonical_m = canonical_m;
  return cfg;
}

// Upper-limit tables are pure functions of their config; keep them for the
// lifetime of the process.
UpperLimitTable& limits_for(const AnalysisConfig& cfg, int depth) {
  static std::map<std::tuple<int, int, int>, UpperLimitTable> cache;
  const LimitConfig lc = cfg.limit_config();
  const std::tuple<int, int, int> key{lc.m, lc.g, lc.mode == RasterMode::EqualWidth ? 0 : 1};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, UpperLimitTable(lc)).first;
  it->second.ensure(depth);
  return it->second;
}

py::dict stats_dict(const ArtStatistics& s) {
  py::dict d;
  d["artmic"] = s.artmic;
  d["artmas"] = s.artmas;
  d["artmev"] = s.artmev;
  d["artmcn"] = s.artmcn;
  d["artlrd"] = s.artlrd;
  d["pearson"] = s.pearson ? py::object(py::float_(*s.pearson)) : py::object(py::none());
  d["n"] = s.n;
  d["grid"] = py::make_tuple(s.gx, s.gy);
  d["B"] = s.B;
  return d;
}

py::dict analyze(const std::vector<double>& x, const std::vector<double>& y, int g, const std::string& mode,
                 double epsilon, double q, int canonical_m) {
  if (x.size() != y.size()) throw DataError("x and y must have the same length");
  SamplePair sample;
  sample.x = x;
  sample.y = y;
  const AnalysisConfig cfg = make_config(g, mode, epsilon, q, canonical_m);
  const SamplePair clean = drop_nonfinite(sample);
  if (clean.size() < 2) throw DataError("need at least 2 finite sample points");
  auto& limits = limits_for(cfg, static_cast<int>(depth_budget(static_cast<std::int64_t>(clean.size()))));
  return stats_dict(analyze_pair(sample, cfg, limits));
}

py::list mine_csv(const std::string& path, int g, const std::string& mode, double epsilon, double q,
                  int canonical_m, std::int64_t min_rows) {
  const Table table = ingest_csv_file(path);
  const AnalysisConfig cfg = make_config(g, mode, epsilon, q, canonical_m);
  auto& limits = limits_for(cfg, static_cast<int>(depth_budget(static_cast<std::int64_t>(table.rows()))));
  py::list out;
  for (const auto& rec : analyze_all_pairs(table, cfg, limits, {}, min_rows)) {
    py::dict d;
    d["var_a"] = rec.var_a;
    d["var_b"] = rec.var_b;
    d["n_effective"] = rec.n_effective;
    d["stats"] = rec.stats ? py::object(stats_dict(*rec.stats)) : py::object(py::none());
    d["labels"] = rec.labels;
    out.append(d);
  }
  return out;
}

py::tuple gen(const std::string& kind, int n, double noise, std::uint64_t seed, int blocks) {
  const SamplePair s = generate({rel_kind_from_name(kind), n, noise, blocks, seed});
  return py::make_tuple(s.x, s.y);
}

}  // namespace

PYBIND11_MODULE(artstats, m) {
  m.doc() = "ART statistics: alternant recursive topology dependence measures";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

  m.def("analyze_pair", &analyze, py::arg("x"), py::arg("y"), py::arg("g") = 32,
        py::arg("mode") = "equal-width", py::arg("epsilon") = 0.1, py::arg("q") = 0.3,
        py::arg("canonical_m") = 4096,
        "ART statistics plus Pearson's r for one variable pair.");
  m.def("mine_csv", &mine_csv, py::arg("path"), py::arg("g") = 32, py::arg("mode") = "equal-width",
        py::arg("epsilon") = 0.1, py::arg("q") = 0.3, py::arg("canonical_m") = 4096,
        py::arg("min_rows") = 10, "ART statistics for every column pair of a CSV file.");
  m.def("generate", &gen, py::arg("kind"), py::arg("n") = 1080, py::arg("noise") = 0.0, py::arg("seed") = 0,
        py::arg("blocks") = 4, "Synthetic relationship sample as an (x, y) tuple of lists.");
  m.def("depth_budget", &depth_budget, py::arg("n"));
  m.def(
      "max_restricted_divergence",
      [](const std::vector<std::vector<std::int64_t>>& counts, bool row_first, int r, int c) {
        if (counts.empty() || counts[0].empty()) throw DataError("counts must be non-empty");
        const int gx = static_cast<int>(counts.size());
        const int gy = static_cast<int>(counts[0].size());
        std::vector<std::int64_t> flat;
        for (const auto& row : counts) {
          if (static_cast<int>(row.size()) != gy) throw DataError("counts must be rectangular");
          flat.insert(flat.end(), row.begin(), row.end());
        }
        const EmpiricalGrid grid = EmpiricalGrid::from_counts(flat, gx, gy);
        return PartitionSolver(grid).value(
            {row_first ? Orientation::RowFirst : Orientation::ColumnFirst, r, c});
      },
      py::arg("counts"), py::arg("row_first") = true, py::arg("r") = 1, py::arg("c") = 1,
      "DP value on an explicit counts matrix (natural-log units).");
  m.attr("__version__") = "0.1.0";
}
